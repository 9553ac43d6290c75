// symbols.hpp — the Fourier multiplier catalog and symbol application.
//
// Catalog:
//   m0(xi,zeta)          = (xi/|xi|) . zeta / (1+|zeta|^2)^{1/2}
//   commutator(xi,zeta)  = xi . grad_zeta m0
//                        = |xi| [ (1+|zeta|^2)^{-1/2} - |xihat.zeta|^2 (1+|zeta|^2)^{-3/2} ]
//   bessel(zeta; beta)   = (1+|zeta|^2)^{-beta/2}
//   riesz(xi)            = xi/|xi|            (vector; 0 at xi=0)
//   frac_laplacian(zeta; alpha) = |zeta|^alpha
//
// Convention: symbols involving xi/|xi| return 0 at xi = 0 (the analysis is
// restricted to |xi| >= 1; low modes are reported separately, never weighted).
// The Nyquist mode is zeroed whenever a symbol is applied.
#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "kinavg/field.hpp"

namespace kinavg {

inline double eval_m0(const std::array<double, 2>& xi, const std::array<double, 2>& zeta) {
    const double nxi = norm2(xi);
    if (nxi == 0.0) return 0.0;
    return dot(xi, zeta) / nxi / std::sqrt(1.0 + dot(zeta, zeta));
}

// (1+|zeta|^2)^{-3/2} evaluated as the cube of an inverse square root; the
// commutator symbol below reuses this form so its lower bound is exact in
// floating point, equality case (zeta parallel to xi) included.
inline double bessel3_weight(double zeta_sq) {
    const double b = 1.0 / std::sqrt(1.0 + zeta_sq);
    return b * b * b;
}

// xi . grad_zeta m0 = |xi| (1+|zeta|^2)^{-3/2} (1 + |zeta|^2 - |xihat.zeta|^2),
// bounded below by |xi| (1+|zeta|^2)^{-3/2} since |xihat.zeta| <= |zeta|.
inline double eval_commutator_symbol(const std::array<double, 2>& xi,
                                     const std::array<double, 2>& zeta) {
    const double nxi = norm2(xi);
    if (nxi == 0.0) return 0.0;
    const double z2 = dot(zeta, zeta);
    const double proj = dot(xi, zeta) / nxi;  // xihat . zeta
    const double gap = std::max(z2 - proj * proj, 0.0);  // >= 0 up to rounding
    return nxi * bessel3_weight(z2) * (1.0 + gap);
}

inline double bessel_symbol(const std::array<double, 2>& zeta, double beta) {
    if (beta < 0.0) throw ConfigError("bessel_symbol: beta must be positive");
    return std::pow(1.0 + dot(zeta, zeta), -beta / 2.0);
}

inline std::array<double, 2> riesz_symbol(const std::array<double, 2>& xi) {
    const double n = norm2(xi);
    if (n == 0.0) return {0.0, 0.0};
    return {xi[0] / n, xi[1] / n};
}

inline double frac_laplacian_symbol(const std::array<double, 2>& zeta, double alpha) {
    if (alpha < 0.0) throw ConfigError("frac_laplacian_symbol: alpha must be nonnegative");
    if (alpha == 0.0) return 1.0;  // identity operator, including zeta = 0
    return std::pow(dot(zeta, zeta), alpha / 2.0);
}

struct MultiplierSymbol {
    enum class Arity { Xi, Zeta, Both };

    std::string name;
    Arity arity = Arity::Both;
    // evaluator(xi, zeta, params) -> complex value
    std::function<cplx(const std::array<double, 2>&, const std::array<double, 2>&,
                       const std::vector<double>&)>
        eval;
};

namespace symbols {

inline MultiplierSymbol identity() {
    return {"identity", MultiplierSymbol::Arity::Both,
            [](const auto&, const auto&, const auto&) { return cplx{1.0, 0.0}; }};
}

inline MultiplierSymbol m0() {
    return {"m0", MultiplierSymbol::Arity::Both,
            [](const auto& xi, const auto& zeta, const auto&) { return cplx{eval_m0(xi, zeta), 0.0}; }};
}

inline MultiplierSymbol commutator() {
    return {"commutator", MultiplierSymbol::Arity::Both,
            [](const auto& xi, const auto& zeta, const auto&) {
                return cplx{eval_commutator_symbol(xi, zeta), 0.0};
            }};
}

// params: {beta}
inline MultiplierSymbol bessel() {
    return {"bessel", MultiplierSymbol::Arity::Zeta,
            [](const auto&, const auto& zeta, const std::vector<double>& p) {
                return cplx{bessel_symbol(zeta, p.at(0)), 0.0};
            }};
}

// params: {alpha}
inline MultiplierSymbol frac_laplacian() {
    return {"frac_laplacian", MultiplierSymbol::Arity::Zeta,
            [](const auto&, const auto& zeta, const std::vector<double>& p) {
                return cplx{frac_laplacian_symbol(zeta, p.at(0)), 0.0};
            }};
}

// params: {component d}; one component of xi/|xi|
inline MultiplierSymbol riesz_component() {
    return {"riesz", MultiplierSymbol::Arity::Xi,
            [](const auto& xi, const auto&, const std::vector<double>& p) {
                const auto r = riesz_symbol(xi);
                return cplx{r[static_cast<int>(p.at(0))], 0.0};
            }};
}

}  // namespace symbols

// Multiply the xv-spectrum pointwise by the symbol; Nyquist modes are zeroed.
// The output comes back in the input's representation.
inline SpectralField apply_symbol(const SpectralField& f, const MultiplierSymbol& sym,
                                  const std::vector<double>& params = {}) {
    const Rep original = f.rep();
    SpectralField hat = transform(f, Rep::XVFourier);
    const GridSpec& g = hat.grid();
    for (std::size_t ix = 0; ix < g.x_size(); ++ix) {
        const bool nyq_x = x_index_has_nyquist(g, ix);
        const auto xi = xi_vector(g, ix);
        for (std::size_t iv = 0; iv < g.v_size(); ++iv) {
            if (nyq_x || v_index_has_nyquist(g, iv)) {
                hat.at(ix, iv) = 0.0;
                continue;
            }
            const cplx m = sym.eval(xi, zeta_vector(g, iv), params);
            if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
                std::ostringstream os;
                os << "apply_symbol: symbol '" << sym.name << "' not finite at mode ix=" << ix
                   << " iv=" << iv;
                throw NumericError(os.str());
            }
            hat.at(ix, iv) *= m;
        }
    }
    return transform(hat, original);
}

}  // namespace kinavg
