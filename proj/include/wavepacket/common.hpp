// SPDX-License-Identifier: Apache-2.0
//
// Small 2-d linear algebra and shared numeric helpers.

#pragma once

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

namespace wavepacket {

using Cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm1(Vec2 a) { return std::abs(a.x) + std::abs(a.y); }

// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 diag(double s1, double s2) { return {s1, 0.0, 0.0, s2}; }
    static Mat2 rotation(double theta) {
        const double co = std::cos(theta), si = std::sin(theta);
        return {co, -si, si, co};
    }

    Mat2 transpose() const { return {a, c, b, d}; }
    double det() const { return a * d - b * c; }
    Mat2 inverse() const {
        const double dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    friend Vec2 operator*(const Mat2& m, Vec2 v) {
        return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
    }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
};

// Operator norm (largest singular value).
inline double op_norm(const Mat2& m) {
    const double g = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
    const double dt = m.det();
    const double disc = std::sqrt(std::max(0.0, g * g - 4.0 * dt * dt));
    return std::sqrt(0.5 * (g + disc));
}

// Angular difference wrapped into [0, pi].
inline double wrap_angle_dist(double t1, double t2) {
    double d = std::fmod(std::abs(t1 - t2), kTwoPi);
    return std::min(d, kTwoPi - d);
}

// Shortest round-trip decimal rendering; used everywhere a float is
// written to a report so that reruns are byte-identical.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// splitmix64: tiny deterministic generator for randomized checks.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

  private:
    std::uint64_t state_;
};

}  // namespace wavepacket
