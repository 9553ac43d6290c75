// dyadic.hpp — Littlewood-Paley dyadic partition of the x-frequency grid.
//
// Bump construction: with the C-infinity transition
//     h(t) = e(t) / (e(t) + e(1-t)),   e(t) = exp(-1/t) for t>0 else 0,
// let theta(r) = 1 - h(r-1)  (equal to 1 for r<=1, 0 for r>=2) and
//     chi(r) = theta(r) - theta(2r),   supp chi = (1/2, 2).
// Bands k = 0..K-1 use chi(2^{-k}|xi|); the top band K is the plateau
// 1 - theta(2^{-(K-1)}|xi|), so the sum telescopes to exactly 1 for every
// grid frequency with |xi| >= 1.  Weights at |xi| < 1 are zeroed: low modes
// are accounted separately and never enter dyadic sums.
#pragma once

#include <cmath>
#include <vector>

#include "kinavg/grid.hpp"

namespace kinavg {

namespace bump {

inline double ecap(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// smooth 0 -> 1 transition on [0,1]
inline double transition(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = ecap(t);
    const double b = ecap(1.0 - t);
    return a / (a + b);
}

// 1 for r <= 1, 0 for r >= 2
inline double theta(double r) { return 1.0 - transition(r - 1.0); }

// radial bump with support (1/2, 2)
inline double chi(double r) { return theta(r) - theta(2.0 * r); }

}  // namespace bump

struct DyadicBand {
    int k = 0;
    std::vector<double> weights;  // over the flat x-frequency grid
    double energy_weight_sum = 0.0;
};

struct DyadicPartition {
    GridSpec grid;
    int k_min = 0;
    int k_max = 0;
    std::vector<DyadicBand> bands;

    const DyadicBand& band(int k) const { return bands.at(static_cast<std::size_t>(k - k_min)); }
};

// Build the partition covering 1 <= |xi| <= xi_max (Nyquist excluded).
// Requires at least 3 octaves of usable frequency range.
inline DyadicPartition build_dyadic_partition(const GridSpec& g) {
    g.validate();
    const double ximax = g.xi_max();
    if (ximax < 8.0)
        throw ConfigError("build_dyadic_partition: frequency range must span at least 3 octaves");

    int K = 0;
    while (std::ldexp(1.0, K + 1) <= ximax) ++K;  // smallest K with 2^{K+1} > xi_max

    DyadicPartition part;
    part.grid = g;
    part.k_min = 0;
    part.k_max = K;
    part.bands.resize(static_cast<std::size_t>(K + 1));
    for (int k = 0; k <= K; ++k) {
        part.bands[k].k = k;
        part.bands[k].weights.assign(g.x_size(), 0.0);
    }

    for (std::size_t ix = 0; ix < g.x_size(); ++ix) {
        if (x_index_has_nyquist(g, ix)) continue;
        const double r = norm2(xi_vector(g, ix));
        if (r < 1.0) continue;
        // telescoping evaluation: each theta computed once, so the sum over
        // bands equals 1 - theta(2r) = 1 to the last bit
        double t_prev = bump::theta(2.0 * r);
        for (int k = 0; k < K; ++k) {
            const double t_k = bump::theta(std::ldexp(r, -k));
            part.bands[k].weights[ix] = t_k - t_prev;
            t_prev = t_k;
        }
        part.bands[K].weights[ix] = 1.0 - t_prev;
    }

    for (auto& b : part.bands)
        for (double w : b.weights) b.energy_weight_sum += w;
    return part;
}

}  // namespace kinavg
