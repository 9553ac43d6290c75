// grid.hpp — phase-space grid specification and frequency bookkeeping.
//
// The periodic torus [-L, L)^n stands in for the whole space; fields of
// interest must be supported well inside one period in v.  Frequencies are
// the integer lattice scaled by pi/L, stored in standard FFT order.  The
// Nyquist index (-N/2) is tracked so multipliers can exclude it.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "kinavg/common.hpp"
#include "kinavg/fft.hpp"

namespace kinavg {

struct GridSpec {
    int n_x = 1;        // spatial dimension, 1 or 2
    int n_v = 1;        // velocity dimension, 1 or 2
    int N_x = 32;       // points per x axis (power of two, >= 4)
    int N_v = 32;       // points per v axis
    double L_x = kPi;   // spatial half-width
    double L_v = 8.0;   // velocity half-width
    double dt = 0.0;    // time step hint for solvers (0 = pick automatically)
    double T = 1.0;     // final time

    void validate() const {
        if (n_x < 1 || n_x > 2 || n_v < 1 || n_v > 2)
            throw ConfigError("GridSpec: dimensions must be 1 or 2");
        if (N_x < 4 || !is_pow2(static_cast<std::size_t>(N_x)))
            throw ConfigError("GridSpec: N_x must be a power of two >= 4");
        if (N_v < 4 || !is_pow2(static_cast<std::size_t>(N_v)))
            throw ConfigError("GridSpec: N_v must be a power of two >= 4");
        if (L_x <= 0.0 || L_v <= 0.0) throw ConfigError("GridSpec: half-widths must be positive");
        if (T < 0.0) throw ConfigError("GridSpec: T must be nonnegative");
    }

    double dx() const { return 2.0 * L_x / N_x; }
    double dv() const { return 2.0 * L_v / N_v; }
    double dxi() const { return kPi / L_x; }     // frequency spacing in x
    double dzeta() const { return kPi / L_v; }   // frequency spacing in v

    double x_coord(int j) const { return -L_x + dx() * j; }
    double v_coord(int j) const { return -L_v + dv() * j; }

    // signed integer mode index for FFT storage position j (0..N-1)
    static int signed_index(int j, int N) { return j < N / 2 ? j : j - N; }

    double xi_value(int j) const { return signed_index(j, N_x) * dxi(); }
    double zeta_value(int j) const { return signed_index(j, N_v) * dzeta(); }

    static bool is_nyquist(int j, int N) { return j == N / 2; }

    double xi_max() const { return (N_x / 2 - 1) * dxi(); }     // largest non-Nyquist |xi|
    double zeta_max() const { return (N_v / 2 - 1) * dzeta(); }

    std::size_t x_size() const {
        std::size_t s = 1;
        for (int d = 0; d < n_x; ++d) s *= static_cast<std::size_t>(N_x);
        return s;
    }
    std::size_t v_size() const {
        std::size_t s = 1;
        for (int d = 0; d < n_v; ++d) s *= static_cast<std::size_t>(N_v);
        return s;
    }
    std::size_t total_size() const { return x_size() * v_size(); }

    int n_axes() const { return n_x + n_v; }

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (int a = 0; a < n_x; ++a) d.push_back(static_cast<std::size_t>(N_x));
        for (int a = 0; a < n_v; ++a) d.push_back(static_cast<std::size_t>(N_v));
        return d;
    }

    double x_cell() const { return std::pow(dx(), n_x); }
    double v_cell() const { return std::pow(dv(), n_v); }
    double xi_cell() const { return std::pow(dxi(), n_x); }
    double zeta_cell() const { return std::pow(dzeta(), n_v); }

    bool operator==(const GridSpec&) const = default;
};

// Decompose a flat x-grid index into per-axis indices (n_x <= 2).
inline std::array<int, 2> split_x_index(const GridSpec& g, std::size_t ix) {
    if (g.n_x == 1) return {static_cast<int>(ix), 0};
    return {static_cast<int>(ix / g.N_x), static_cast<int>(ix % g.N_x)};
}

inline std::array<int, 2> split_v_index(const GridSpec& g, std::size_t iv) {
    if (g.n_v == 1) return {static_cast<int>(iv), 0};
    return {static_cast<int>(iv / g.N_v), static_cast<int>(iv % g.N_v)};
}

// Frequency vector xi at flat x-index; unused components are zero.
inline std::array<double, 2> xi_vector(const GridSpec& g, std::size_t ix) {
    const auto id = split_x_index(g, ix);
    std::array<double, 2> out{0.0, 0.0};
    for (int d = 0; d < g.n_x; ++d) out[d] = g.xi_value(id[d]);
    return out;
}

inline std::array<double, 2> zeta_vector(const GridSpec& g, std::size_t iv) {
    const auto id = split_v_index(g, iv);
    std::array<double, 2> out{0.0, 0.0};
    for (int d = 0; d < g.n_v; ++d) out[d] = g.zeta_value(id[d]);
    return out;
}

inline std::array<double, 2> x_vector(const GridSpec& g, std::size_t ix) {
    const auto id = split_x_index(g, ix);
    std::array<double, 2> out{0.0, 0.0};
    for (int d = 0; d < g.n_x; ++d) out[d] = g.x_coord(id[d]);
    return out;
}

inline std::array<double, 2> v_vector(const GridSpec& g, std::size_t iv) {
    const auto id = split_v_index(g, iv);
    std::array<double, 2> out{0.0, 0.0};
    for (int d = 0; d < g.n_v; ++d) out[d] = g.v_coord(id[d]);
    return out;
}

inline bool x_index_has_nyquist(const GridSpec& g, std::size_t ix) {
    const auto id = split_x_index(g, ix);
    for (int d = 0; d < g.n_x; ++d)
        if (GridSpec::is_nyquist(id[d], g.N_x)) return true;
    return false;
}

inline bool v_index_has_nyquist(const GridSpec& g, std::size_t iv) {
    const auto id = split_v_index(g, iv);
    for (int d = 0; d < g.n_v; ++d)
        if (GridSpec::is_nyquist(id[d], g.N_v)) return true;
    return false;
}

inline double norm2(const std::array<double, 2>& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1]); }
inline double dot(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return a[0] * b[0] + a[1] * b[1];
}

}  // namespace kinavg
