// SPDX-License-Identifier: Apache-2.0
//
// Concrete frequency-plane tiles of the wave packet covering, geometric
// predicates on them, numeric covering verification and the moderate
// weight. Tiles are open sets; every comparison uses a small conservative
// slack so that boundary-touching pairs count as intersecting.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wavepacket/common.hpp"
#include "wavepacket/index.hpp"
#include "wavepacket/params.hpp"
#include "wavepacket/threads.hpp"

namespace wavepacket {

inline constexpr double kGeomSlack = 1e-12;
inline constexpr double kDiskRadius = 4.0;

// One covering element: the radius-4 disk for the zero block, otherwise
// the affine image T q + b of the base rectangle
// Q = (-eps, 1+eps) x (-1-eps, 1+eps).
struct Tile {
    enum class Kind { disk, mapped_rectangle };

    Kind kind = Kind::disk;
    double radius = kDiskRadius;  // disk only
    Mat2 linear;                  // T_i = R_jl A_j
    Vec2 offset;                  // b_i = R_jl B_jm
    Vec2 base_lo, base_hi;        // base rectangle bounds

    // Pull a point back through the affine map into base coordinates.
    Vec2 pullback(Vec2 xi) const {
        return linear.inverse() * (xi - offset);
    }

    bool contains(Vec2 xi, double tol = kGeomSlack) const {
        if (kind == Kind::disk) return norm2(xi) <= radius + tol;
        const Vec2 q = pullback(xi);
        return q.x >= base_lo.x - tol && q.x <= base_hi.x + tol &&
               q.y >= base_lo.y - tol && q.y <= base_hi.y + tol;
    }

    std::array<Vec2, 4> corners() const {
        return {linear * Vec2{base_lo.x, base_lo.y} + offset,
                linear * Vec2{base_hi.x, base_lo.y} + offset,
                linear * Vec2{base_hi.x, base_hi.y} + offset,
                linear * Vec2{base_lo.x, base_hi.y} + offset};
    }

    double area() const {
        if (kind == Kind::disk) return kPi * radius * radius;
        return std::abs(linear.det()) * (base_hi.x - base_lo.x) * (base_hi.y - base_lo.y);
    }

    // Interval of |xi| over the tile.
    std::pair<double, double> radial_interval() const {
        if (kind == Kind::disk) return {0.0, radius};
        double rmax = 0.0;
        for (const auto& c : corners()) rmax = std::max(rmax, norm2(c));
        return {distance_to_origin(), rmax};
    }

    double distance_to_origin() const {
        if (kind == Kind::disk) return 0.0;
        // Axis-aligned box in the unrotated frame: [A lo + B, A hi + B].
        const double ax = linear_unrot_.a, ay = linear_unrot_.d;
        const double lx = ax * base_lo.x + anchor_.x, hx = ax * base_hi.x + anchor_.x;
        const double ly = ay * base_lo.y + anchor_.y, hy = ay * base_hi.y + anchor_.y;
        const double cx = std::clamp(0.0, lx, hx), cy = std::clamp(0.0, ly, hy);
        return std::hypot(cx, cy);
    }

    Mat2 linear_unrot_;  // A_j
    Vec2 anchor_;        // B_jm
};

inline Tile tile(const FrequencyIndex& i, const SystemParams& pr) {
    Tile t;
    if (i.zero_block()) {
        t.kind = Tile::Kind::disk;
        t.radius = kDiskRadius;
        return t;
    }
    t.kind = Tile::Kind::mapped_rectangle;
    const Mat2 R = rotation_matrix(i.j, i.l, pr);
    const Mat2 A = scale_matrix(i.j, pr);
    t.linear = R * A;
    t.anchor_ = modulation_vector(i.j, i.m, pr);
    t.offset = R * t.anchor_;
    t.linear_unrot_ = A;
    t.base_lo = {-pr.epsilon, -1.0 - pr.epsilon};
    t.base_hi = {1.0 + pr.epsilon, 1.0 + pr.epsilon};
    return t;
}

namespace detail {

// Separating-axis test for two rotated rectangles; the four candidate
// normals are the edge directions of both.
inline bool rects_intersect(const Tile& a, const Tile& b) {
    const auto ca = a.corners();
    const auto cb = b.corners();
    const std::array<Vec2, 4> axes = {
        Vec2{a.linear.a, a.linear.c}, Vec2{a.linear.b, a.linear.d},
        Vec2{b.linear.a, b.linear.c}, Vec2{b.linear.b, b.linear.d}};
    for (const auto& ax : axes) {
        double alo = dot(ax, ca[0]), ahi = alo;
        for (int i = 1; i < 4; ++i) {
            const double v = dot(ax, ca[i]);
            alo = std::min(alo, v);
            ahi = std::max(ahi, v);
        }
        double blo = dot(ax, cb[0]), bhi = blo;
        for (int i = 1; i < 4; ++i) {
            const double v = dot(ax, cb[i]);
            blo = std::min(blo, v);
            bhi = std::max(bhi, v);
        }
        const double scale = std::max(1.0, std::max(std::abs(ahi - alo), std::abs(bhi - blo)));
        if (ahi < blo - kGeomSlack * scale || bhi < alo - kGeomSlack * scale) return false;
    }
    return true;
}

}  // namespace detail

inline bool tiles_intersect(const Tile& a, const Tile& b) {
    if (a.kind == Tile::Kind::disk && b.kind == Tile::Kind::disk)
        return true;  // both centred at the origin
    if (a.kind == Tile::Kind::disk) return b.distance_to_origin() <= a.radius + kGeomSlack;
    if (b.kind == Tile::Kind::disk) return a.distance_to_origin() <= b.radius + kGeomSlack;
    return detail::rects_intersect(a, b);
}

struct NeighborReport {
    int max_neighbors = 0;               // includes the tile itself
    std::map<int, int> histogram;        // neighbor count -> number of tiles
    std::vector<int> counts;             // per tile, in enumeration order
    std::vector<std::pair<int, int>> pairs;  // intersecting pairs a < b
};

// Bounded-overlap statistics. A conservative radial-interval prefilter
// (bucketing by |xi| range) cuts most candidate pairs before the exact
// separating-axis test; the result matches the brute-force scan exactly.
inline NeighborReport neighbor_stats(const SystemParams& pr) {
    const auto freq = enumerate_frequency_indices(pr);
    const std::size_t n = freq.size();
    std::vector<Tile> tiles(n);
    std::vector<std::pair<double, double>> radial(n);
    for (std::size_t i = 0; i < n; ++i) {
        tiles[i] = tile(freq[i], pr);
        radial[i] = tiles[i].radial_interval();
    }
    NeighborReport rep;
    rep.counts.assign(n, 1);  // every tile neighbors itself
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            if (radial[i].second < radial[k].first - kGeomSlack ||
                radial[k].second < radial[i].first - kGeomSlack)
                continue;
            if (tiles_intersect(tiles[i], tiles[k])) {
                ++rep.counts[i];
                ++rep.counts[k];
                rep.pairs.emplace_back(static_cast<int>(i), static_cast<int>(k));
            }
        }
    }
    for (int c : rep.counts) {
        rep.max_neighbors = std::max(rep.max_neighbors, c);
        ++rep.histogram[c];
    }
    return rep;
}

struct CoverageReport {
    std::vector<Vec2> uncovered;
    int min_multiplicity = 0;
    int max_multiplicity = 0;
    std::size_t points_tested = 0;
    double r1 = 0.0;
};

// Checks that every grid point of B_{R_1}(0), R_1 = 2^{j_max}, lies in at
// least one tile. Parallel over grid rows with an ordered merge.
inline CoverageReport verify_covering(const SystemParams& pr, int grid_resolution,
                                      int threads = 1) {
    if (grid_resolution < 64) throw std::domain_error("verify_covering: grid_resolution must be >= 64");
    validate(pr);
    const auto freq = enumerate_frequency_indices(pr);
    std::vector<Tile> tiles(freq.size());
    for (std::size_t i = 0; i < freq.size(); ++i) tiles[i] = tile(freq[i], pr);

    const double r1 = std::exp2(pr.j_max);
    const double step = 2.0 * r1 / grid_resolution;
    const int res = grid_resolution;

    struct Row {
        std::vector<Vec2> uncovered;
        int mn = std::numeric_limits<int>::max();
        int mx = 0;
        std::size_t tested = 0;
    };
    std::vector<Row> rows(res);
    parallel_chunks(static_cast<std::size_t>(res), threads, 1, [&](std::size_t b, std::size_t e) {
        for (std::size_t iy = b; iy < e; ++iy) {
            Row& row = rows[iy];
            const double y = -r1 + (static_cast<double>(iy) + 0.5) * step;
            for (int ix = 0; ix < res; ++ix) {
                const double x = -r1 + (ix + 0.5) * step;
                if (x * x + y * y > r1 * r1) continue;
                ++row.tested;
                int mult = 0;
                for (const auto& t : tiles)
                    if (t.contains({x, y})) ++mult;
                if (mult == 0) row.uncovered.push_back({x, y});
                row.mn = std::min(row.mn, mult);
                row.mx = std::max(row.mx, mult);
            }
        }
    });
    CoverageReport rep;
    rep.r1 = r1;
    int mn = std::numeric_limits<int>::max();
    for (const auto& row : rows) {
        rep.points_tested += row.tested;
        rep.uncovered.insert(rep.uncovered.end(), row.uncovered.begin(), row.uncovered.end());
        if (row.tested) {
            mn = std::min(mn, row.mn);
            rep.max_multiplicity = std::max(rep.max_multiplicity, row.mx);
        }
    }
    rep.min_multiplicity = (mn == std::numeric_limits<int>::max()) ? 0 : mn;
    return rep;
}

// Wave packet weight w_i^s.
inline double weight(const FrequencyIndex& i, double s) {
    return i.zero_block() ? 1.0 : std::exp2(i.j * s);
}
inline double weight(const PacketIndex& i, double s) { return weight(i.freq(), s); }

struct ModerateReport {
    double constant = 1.0;  // max of w_i / w_{i'} over intersecting pairs
    int max_scale_gap = 0;  // max |j - j'| over intersecting pairs
};

inline ModerateReport verify_moderate(const SystemParams& pr, double s) {
    const auto freq = enumerate_frequency_indices(pr);
    const auto rep = neighbor_stats(pr);
    ModerateReport out;
    for (const auto& [a, b] : rep.pairs) {
        const double wa = weight(freq[a], s), wb = weight(freq[b], s);
        out.constant = std::max({out.constant, wa / wb, wb / wa});
        out.max_scale_gap = std::max(out.max_scale_gap, std::abs(freq[a].j - freq[b].j));
    }
    return out;
}

}  // namespace wavepacket
