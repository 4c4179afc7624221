// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wavepacket {

// All scalar parameters of a wave packet system. `p` and `q` may be
// infinite (sup-norm semantics); everything else is finite.
struct SystemParams {
    double alpha = 0.5;   // radial anisotropy, 0 <= beta <= alpha < 1
    double beta = 0.5;    // angular anisotropy
    double s = 0.0;       // weight exponent
    double p = 2.0;       // inner Lebesgue/sequence exponent, (0, inf]
    double q = 2.0;       // outer sequence exponent, (0, inf]
    double epsilon = 0.01;  // base-rectangle margin, (0, 1/32)
    int n_sectors = 10;   // angular sectors per octave; the construction fixes 10
    int j_max = 2;        // finite top scale, >= 1
    double delta = 0.25;  // time-lattice step, > 0
    int k_radius = 2;     // lattice truncation ||k||_inf <= k_radius, >= 0
};

inline void validate(const SystemParams& pr) {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("SystemParams: " + msg); };
    if (!(pr.alpha >= 0.0 && pr.alpha < 1.0)) fail("alpha must be in [0, 1)");
    if (!(pr.beta >= 0.0 && pr.beta <= pr.alpha)) fail("beta must satisfy 0 <= beta <= alpha");
    if (!std::isfinite(pr.s)) fail("s must be finite");
    if (!(pr.p > 0.0)) fail("p must be in (0, inf]");
    if (!(pr.q > 0.0)) fail("q must be in (0, inf]");
    if (!(pr.epsilon > 0.0 && pr.epsilon < 1.0 / 32.0)) fail("epsilon must be in (0, 1/32)");
    if (pr.n_sectors != 10) fail("n_sectors must equal 10");
    if (pr.j_max < 1) fail("j_max must be a positive integer");
    if (!(pr.delta > 0.0) || !std::isfinite(pr.delta)) fail("delta must be positive and finite");
    if (pr.k_radius < 0) fail("k_radius must be non-negative");
}

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace wavepacket
