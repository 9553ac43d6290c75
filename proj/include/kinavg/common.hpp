// common.hpp — shared error types, numeric constants, deterministic RNG.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kinavg {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;

inline constexpr const char* kArtifactVersion = "0.1.0";

// Bad grid / parameter combinations detected before any numerics run.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// NaN/Inf or other numeric breakdown, with the offending location in the message.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field or test-function mass outside the admissible velocity support.
struct SupportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// splitmix64: tiny deterministic generator, bit-stable across platforms.
// Used wherever frozen test values or reproducible manifests depend on the stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [a,b)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    cplx unit_complex() {
        const double re = 2.0 * uniform() - 1.0;
        const double im = 2.0 * uniform() - 1.0;
        return {re, im};
    }

private:
    std::uint64_t state_;
};

// FNV-1a 64-bit, used for config hashes and output checksums in manifests.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

}  // namespace kinavg
