// fft.hpp — iterative radix-2 complex FFT with strided multi-axis support.
//
// Grids in this project are always powers of two, so a dependency-free
// radix-2 kernel keeps the library header-only and bit-deterministic.
// Transforms are unnormalized here; the continuum-style scaling lives in
// field.hpp where the grid spacings are known.
#pragma once

#include <bit>
#include <span>
#include <vector>

#include "kinavg/common.hpp"

namespace kinavg {

inline bool is_pow2(std::size_t n) { return n >= 1 && std::has_single_bit(n); }

namespace detail {

// Twiddle table for size n (half table: e^{-2pi i j/n}, j=0..n/2-1).
inline const std::vector<cplx>& twiddles(std::size_t n) {
    thread_local std::vector<std::pair<std::size_t, std::vector<cplx>>> cache;
    for (auto& [sz, tw] : cache)
        if (sz == n) return tw;
    std::vector<cplx> tw(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        const double ang = -2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
        tw[j] = {std::cos(ang), std::sin(ang)};
    }
    cache.emplace_back(n, std::move(tw));
    return cache.back().second;
}

}  // namespace detail

// In-place unnormalized DFT of length a.size() (power of two).
// inverse=false: X_k = sum_j x_j e^{-2pi i jk/n};  inverse=true: conjugate kernel, no 1/n.
inline void fft_inplace(std::span<cplx> a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw ConfigError("fft: length must be a power of two");
    if (n == 1) return;

    // bit reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const auto& tw = detail::twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                cplx w = tw[j * step];
                if (inverse) w = std::conj(w);
                const cplx u = a[i + j];
                const cplx t = a[i + j + len / 2] * w;
                a[i + j] = u + t;
                a[i + j + len / 2] = u - t;
            }
        }
    }
}

// Apply fft_inplace along one axis of a flat row-major array.
// dims: extent per axis. The transform visits every 1-D line along `axis`.
inline void fft_axis(std::vector<cplx>& data, std::span<const std::size_t> dims,
                     std::size_t axis, bool inverse) {
    const std::size_t n = dims[axis];
    std::size_t stride = 1;
    for (std::size_t d = axis + 1; d < dims.size(); ++d) stride *= dims[d];
    std::size_t outer = 1;
    for (std::size_t d = 0; d < axis; ++d) outer *= dims[d];
    const std::size_t block = stride * n;

    std::vector<cplx> line(n);
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t s = 0; s < stride; ++s) {
            cplx* base = data.data() + o * block + s;
            for (std::size_t j = 0; j < n; ++j) line[j] = base[j * stride];
            fft_inplace(line, inverse);
            for (std::size_t j = 0; j < n; ++j) base[j * stride] = line[j];
        }
    }
}

}  // namespace kinavg
