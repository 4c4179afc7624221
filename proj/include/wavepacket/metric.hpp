// SPDX-License-Identifier: Apache-2.0
//
// Phase-space index distance rho and the numeric certificates behind it:
// metric axioms, separation of the index set and row-sum summability.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wavepacket/common.hpp"
#include "wavepacket/index.hpp"
#include "wavepacket/params.hpp"
#include "wavepacket/threads.hpp"

namespace wavepacket {

struct DistanceBreakdown {
    double r = 0.0;      // | r_i - r_{i'} |
    double theta = 0.0;  // wrapped angular difference, in [0, pi]
    double t1 = 0.0;     // | (t_i - t_{i'})_1 |
    double t2 = 0.0;     // | (t_i - t_{i'})_2 |
    double total = 0.0;  // r + theta + t1 + t2
};

// Cached phase-space coordinates; rho is evaluated many times per index.
struct PhasePoint {
    double r = 0.0;
    double theta = 0.0;
    Vec2 t;
};

inline PhasePoint phase_point(const PacketIndex& i, const SystemParams& pr) {
    return {freq_radius(i, pr), freq_angle(i, pr), time_center(i, pr)};
}

inline DistanceBreakdown rho(const PhasePoint& a, const PhasePoint& b) {
    DistanceBreakdown d;
    d.r = std::abs(a.r - b.r);
    d.theta = wrap_angle_dist(a.theta, b.theta);
    d.t1 = std::abs(a.t.x - b.t.x);
    d.t2 = std::abs(a.t.y - b.t.y);
    d.total = d.r + d.theta + d.t1 + d.t2;
    return d;
}

inline DistanceBreakdown rho(const PacketIndex& i, const PacketIndex& ip, const SystemParams& pr) {
    return rho(phase_point(i, pr), phase_point(ip, pr));
}

inline std::vector<PhasePoint> phase_points(const std::vector<PacketIndex>& idx,
                                            const SystemParams& pr) {
    std::vector<PhasePoint> pts;
    pts.reserve(idx.size());
    for (const auto& i : idx) pts.push_back(phase_point(i, pr));
    return pts;
}

struct AxiomReport {
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::size_t negativity_violations = 0;
    std::size_t symmetry_violations = 0;
    std::size_t indiscernibility_violations = 0;  // distinct pair with rho == 0, or diagonal != 0
    std::size_t triangle_violations = 0;

    bool pass() const {
        return negativity_violations == 0 && symmetry_violations == 0 &&
               indiscernibility_violations == 0 && triangle_violations == 0;
    }
};

inline constexpr double kMetricTol = 1e-12;

// Exhaustive pair scan for non-negativity / symmetry / indiscernibility,
// plus `trials` random triples for the triangle inequality.
inline AxiomReport check_metric_axioms(const std::vector<PacketIndex>& idx,
                                       const SystemParams& pr, std::size_t trials,
                                       std::uint64_t seed = 0x5eed01, int threads = 1) {
    const auto pts = phase_points(idx, pr);
    const std::size_t n = idx.size();
    AxiomReport rep;
    if (n == 0) return rep;

    struct Part {
        std::size_t neg = 0, sym = 0, ind = 0, cnt = 0;
    };
    const std::size_t chunk = 64;  // rows per chunk
    std::vector<Part> parts((n + chunk - 1) / chunk);
    parallel_chunks(n, threads, chunk, [&](std::size_t lo, std::size_t hi) {
        Part& part = parts[lo / chunk];
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t k = 0; k <= i; ++k) {
                const auto d = rho(pts[i], pts[k]);
                const auto ds = rho(pts[k], pts[i]);
                ++part.cnt;
                if (d.total < 0.0 || d.r < 0.0 || d.theta < 0.0 || d.t1 < 0.0 || d.t2 < 0.0)
                    ++part.neg;
                if (d.total != ds.total || d.r != ds.r || d.theta != ds.theta || d.t1 != ds.t1 ||
                    d.t2 != ds.t2)
                    ++part.sym;
                const bool same = idx[i] == idx[k];
                if (same && d.total != 0.0) ++part.ind;
                if (!same && d.total <= kMetricTol) ++part.ind;
            }
        }
    });
    for (const auto& p : parts) {
        rep.pairs_checked += p.cnt;
        rep.negativity_violations += p.neg;
        rep.symmetry_violations += p.sym;
        rep.indiscernibility_violations += p.ind;
    }

    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto& a = pts[rng.below(n)];
        const auto& b = pts[rng.below(n)];
        const auto& c = pts[rng.below(n)];
        if (rho(a, c).total > rho(a, b).total + rho(b, c).total + kMetricTol)
            ++rep.triangle_violations;
    }
    rep.triples_checked = trials;
    return rep;
}

struct SeparationReport {
    double infimum = 0.0;             // min rho over distinct pairs
    PacketIndex arg_a, arg_b;         // attaining pair
    double same_block_min = 0.0;      // restricted to equal (j, m, l)
    double cross_block_min = 0.0;     // restricted to differing (j, m, l): min of r + theta (C_1)
    double lattice_bound = 0.0;       // delta 2^{-(alpha j_max + 1)}
};

inline SeparationReport separation(const std::vector<PacketIndex>& idx, const SystemParams& pr,
                                   int threads = 1) {
    if (idx.size() < 2) throw std::domain_error("separation: need at least two indices");
    const auto pts = phase_points(idx, pr);
    const std::size_t n = idx.size();

    struct Part {
        double inf = std::numeric_limits<double>::infinity();
        double same = std::numeric_limits<double>::infinity();
        double cross_rt = std::numeric_limits<double>::infinity();
        std::size_t a = 0, b = 0;
    };
    const std::size_t chunk = 256;
    std::vector<Part> parts((n + chunk - 1) / chunk);
    parallel_chunks(n, threads, chunk, [&](std::size_t lo, std::size_t hi) {
        Part& part = parts[lo / chunk];
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t k = i + 1; k < n; ++k) {
                const auto d = rho(pts[i], pts[k]);
                if (d.total < part.inf) {
                    part.inf = d.total;
                    part.a = i;
                    part.b = k;
                }
                const bool same_block = idx[i].freq() == idx[k].freq();
                if (same_block) {
                    part.same = std::min(part.same, d.total);
                } else {
                    part.cross_rt = std::min(part.cross_rt, d.r + d.theta);
                }
            }
        }
    });
    SeparationReport rep;
    rep.infimum = std::numeric_limits<double>::infinity();
    rep.same_block_min = std::numeric_limits<double>::infinity();
    rep.cross_block_min = std::numeric_limits<double>::infinity();
    for (const auto& p : parts) {
        if (p.inf < rep.infimum) {
            rep.infimum = p.inf;
            rep.arg_a = idx[p.a];
            rep.arg_b = idx[p.b];
        }
        rep.same_block_min = std::min(rep.same_block_min, p.same);
        rep.cross_block_min = std::min(rep.cross_block_min, p.cross_rt);
    }
    rep.lattice_bound = pr.delta * std::exp2(-(pr.alpha * pr.j_max + 1.0));
    return rep;
}

struct SummabilityReport {
    double sup_row_sum = 0.0;
    PacketIndex arg;  // row attaining the supremum
};

// sup over i of sum_{i'} (1 + rho(i, i'))^{-n}; Lemma-level guarantee
// requires n > 5.
inline SummabilityReport summability(const std::vector<PacketIndex>& idx, const SystemParams& pr,
                                     double n_exponent, int threads = 1) {
    if (!(n_exponent > 5.0)) throw std::domain_error("summability: exponent must exceed 5");
    const auto pts = phase_points(idx, pr);
    const std::size_t n = idx.size();
    std::vector<double> row(n, 0.0);
    parallel_chunks(n, threads, 64, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                acc += std::pow(1.0 + rho(pts[i], pts[k]).total, -n_exponent);
            row[i] = acc;
        }
    });
    SummabilityReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        if (row[i] > rep.sup_row_sum) {
            rep.sup_row_sum = row[i];
            rep.arg = idx[i];
        }
    }
    return rep;
}

}  // namespace wavepacket
