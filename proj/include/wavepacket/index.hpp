// SPDX-License-Identifier: Apache-2.0
//
// Index set of the wave packet system and per-index geometry: angular
// slots, slot counts, scale/rotation matrices and phase-space positions.

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "wavepacket/common.hpp"
#include "wavepacket/params.hpp"

namespace wavepacket {

// Frequency-plane index (j, m, l). (0,0,0) is the low-frequency disk block.
struct FrequencyIndex {
    int j = 0;  // scale
    int m = 0;  // radial slot
    int l = 0;  // angular slot

    bool zero_block() const { return j == 0 && m == 0 && l == 0; }
    friend bool operator==(const FrequencyIndex&, const FrequencyIndex&) = default;
    // Deterministic output order is lexicographic in (j, l, m).
    friend auto operator<=>(const FrequencyIndex& a, const FrequencyIndex& b) {
        return std::tie(a.j, a.l, a.m) <=> std::tie(b.j, b.l, b.m);
    }
};

// Full packet index i = (j, m, l, k1, k2).
struct PacketIndex {
    int j = 0;
    int m = 0;
    int l = 0;
    int k1 = 0;
    int k2 = 0;

    bool zero_block() const { return j == 0 && m == 0 && l == 0; }
    FrequencyIndex freq() const { return {j, m, l}; }
    friend bool operator==(const PacketIndex&, const PacketIndex&) = default;
    friend auto operator<=>(const PacketIndex& a, const PacketIndex& b) {
        return std::tie(a.j, a.l, a.m, a.k1, a.k2) <=> std::tie(b.j, b.l, b.m, b.k1, b.k2);
    }
};

// l_j^max = ceil(N * 2^{(1-beta) j}) - 1.
inline int l_max(int j, const SystemParams& pr) {
    if (j < 1 || j > pr.j_max) throw std::domain_error("l_max: scale j out of range");
    return static_cast<int>(std::ceil(pr.n_sectors * std::exp2((1.0 - pr.beta) * j))) - 1;
}

// theta_jl = 2 pi 2^{(beta-1) j} l / N.
inline double theta_jl(int j, int l, const SystemParams& pr) {
    if (j < 1 || j > pr.j_max) throw std::domain_error("theta_jl: scale j out of range");
    if (l < 0 || l > l_max(j, pr)) throw std::domain_error("theta_jl: angular slot l out of range");
    return kTwoPi * std::exp2((pr.beta - 1.0) * j) * l / pr.n_sectors;
}

// Number of radial slots at (j, l). The first case applies when the angle
// theta_jl survives to scale j+1 (decided by the integrality of
// l * 2^{1-beta}, tolerance 1e-9) or at the top scale.
inline int m_max(int j, int l, const SystemParams& pr) {
    if (j < 1 || j > pr.j_max) throw std::domain_error("m_max: scale j out of range");
    if (l < 0 || l > l_max(j, pr)) throw std::domain_error("m_max: angular slot l out of range");
    bool angle_persists = (j == pr.j_max);
    if (!angle_persists) {
        const double lp = l * std::exp2(1.0 - pr.beta);
        const double lr = std::round(lp);
        angle_persists = std::abs(lp - lr) < 1e-9 &&
                         static_cast<long long>(lr) <= l_max(j + 1, pr);
    }
    const int base = static_cast<int>(std::ceil(std::exp2((1.0 - pr.alpha) * j - 1.0)));
    return angle_persists ? base - 1 : base;
}

inline Mat2 scale_matrix(int j, const SystemParams& pr) {
    return Mat2::diag(std::exp2(pr.alpha * j), std::exp2(pr.beta * j));
}

inline Vec2 modulation_vector(int j, int m, const SystemParams& pr) {
    return {std::exp2(j - 1.0) + m * std::exp2(pr.alpha * j), 0.0};
}

inline Mat2 rotation_matrix(int j, int l, const SystemParams& pr) {
    return Mat2::rotation(theta_jl(j, l, pr));
}

// Distance of the tile's anchor from the origin: 2^{j-1} + m 2^{alpha j}.
inline double freq_radius(const FrequencyIndex& i, const SystemParams& pr) {
    if (i.zero_block()) return 0.0;
    return std::exp2(i.j - 1.0) + i.m * std::exp2(pr.alpha * i.j);
}
inline double freq_radius(const PacketIndex& i, const SystemParams& pr) { return freq_radius(i.freq(), pr); }

inline double freq_angle(const FrequencyIndex& i, const SystemParams& pr) {
    return i.zero_block() ? 0.0 : theta_jl(i.j, i.l, pr);
}
inline double freq_angle(const PacketIndex& i, const SystemParams& pr) { return freq_angle(i.freq(), pr); }

// xi_i = R_jl B_jm (0 for the zero block).
inline Vec2 freq_center(const FrequencyIndex& i, const SystemParams& pr) {
    if (i.zero_block()) return {0.0, 0.0};
    return rotation_matrix(i.j, i.l, pr) * modulation_vector(i.j, i.m, pr);
}
inline Vec2 freq_center(const PacketIndex& i, const SystemParams& pr) { return freq_center(i.freq(), pr); }

// t_i = delta k (zero block) or delta R_jl A_j^{-1} k.
inline Vec2 time_center(const PacketIndex& i, const SystemParams& pr) {
    const Vec2 k{static_cast<double>(i.k1), static_cast<double>(i.k2)};
    if (i.zero_block()) return pr.delta * k;
    return pr.delta * (rotation_matrix(i.j, i.l, pr) * (scale_matrix(i.j, pr).inverse() * k));
}

// I_0, in lexicographic (j, l, m) order with the zero block first.
inline std::vector<FrequencyIndex> enumerate_frequency_indices(const SystemParams& pr) {
    validate(pr);
    std::vector<FrequencyIndex> out;
    out.push_back({0, 0, 0});
    for (int j = 1; j <= pr.j_max; ++j)
        for (int l = 0; l <= l_max(j, pr); ++l)
            for (int m = 0; m <= m_max(j, l, pr); ++m) out.push_back({j, m, l});
    return out;
}

// I truncated to ||k||_inf <= k_radius; (j, l, m, k1, k2)-lexicographic.
inline std::vector<PacketIndex> enumerate_indices(const SystemParams& pr) {
    const auto freq = enumerate_frequency_indices(pr);
    const int K = pr.k_radius;
    std::vector<PacketIndex> out;
    out.reserve(freq.size() * static_cast<std::size_t>(2 * K + 1) * (2 * K + 1));
    for (const auto& f : freq)
        for (int k1 = -K; k1 <= K; ++k1)
            for (int k2 = -K; k2 <= K; ++k2) out.push_back({f.j, f.m, f.l, k1, k2});
    return out;
}

}  // namespace wavepacket
