// flux.hpp — velocity flux functions and non-degeneracy measurement.
//
// A FluxFunction bundles the evaluator a(v) with its Lipschitz constant and
// whatever closed forms exist (derivative, inverse, exact interval-preimage
// measure).  The non-degeneracy estimator fits the order nu in
//     |{v in D : |a(v) sigma - tau| <= alpha/2}| <= c0 alpha^nu
// from the upper envelope over (sigma, tau) at each band width alpha, using
// exact interval arithmetic when a closed-form preimage is available and a
// sorted-sample sliding window otherwise.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kinavg/appendix_flux.hpp"
#include "kinavg/common.hpp"

namespace kinavg {

struct FluxFunction {
    std::string name;
    std::function<double(double)> a;
    double lipschitz = 1.0;
    double dom_lo = 0.0, dom_hi = 1.0;
    bool monotone = false;
    std::function<double(double)> da;       // optional closed-form derivative
    std::function<double(double)> inverse;  // optional closed-form inverse on the range
    // optional exact |a^{-1}([lo,hi])| restricted to [dom_lo, dom_hi]
    std::function<double(double, double)> preimage_measure;

    double range_lo() const { return monotone ? a(dom_lo) : sampled_range().first; }
    double range_hi() const { return monotone ? a(dom_hi) : sampled_range().second; }

    std::pair<double, double> sampled_range(int n = 4096) const {
        double lo = a(dom_lo), hi = lo;
        for (int i = 1; i <= n; ++i) {
            const double y = a(dom_lo + (dom_hi - dom_lo) * i / n);
            lo = std::min(lo, y);
            hi = std::max(hi, y);
        }
        return {lo, hi};
    }
};

namespace flux_catalog {

inline FluxFunction identity(double lo = 0.0, double hi = 1.0) {
    FluxFunction f;
    f.name = "identity";
    f.a = [](double v) { return v; };
    f.lipschitz = 1.0;
    f.dom_lo = lo;
    f.dom_hi = hi;
    f.monotone = true;
    f.da = [](double) { return 1.0; };
    f.inverse = [](double y) { return y; };
    f.preimage_measure = [lo, hi](double c, double d) {
        return std::max(0.0, std::min(d, hi) - std::max(c, lo));
    };
    return f;
}

// a(v) = v^k on [0,1]
inline FluxFunction power(int k) {
    if (k < 1) throw ConfigError("power flux: k must be >= 1");
    FluxFunction f;
    f.name = "power" + std::to_string(k);
    f.a = [k](double v) { return std::pow(v, k); };
    f.lipschitz = static_cast<double>(k);
    f.dom_lo = 0.0;
    f.dom_hi = 1.0;
    f.monotone = true;
    f.da = [k](double v) { return k * std::pow(v, k - 1); };
    f.inverse = [k](double y) { return std::pow(y, 1.0 / k); };
    f.preimage_measure = [k](double c, double d) {
        const double lo = std::clamp(c, 0.0, 1.0);
        const double hi = std::clamp(d, 0.0, 1.0);
        if (lo >= hi) return 0.0;
        return std::pow(hi, 1.0 / k) - std::pow(lo, 1.0 / k);
    };
    return f;
}

inline FluxFunction constant(double c, double lo = 0.0, double hi = 1.0) {
    FluxFunction f;
    f.name = "constant";
    f.a = [c](double) { return c; };
    f.lipschitz = 0.0;
    f.dom_lo = lo;
    f.dom_hi = hi;
    f.monotone = false;
    f.da = [](double) { return 0.0; };
    f.preimage_measure = [c, lo, hi](double a_, double b_) {
        return (a_ <= c && c <= b_) ? hi - lo : 0.0;
    };
    return f;
}

// first appendix branch a1(v) = 1 - (1-v)^2 on [0,1]
inline FluxFunction parabolic_branch() {
    FluxFunction f;
    f.name = "parabolic_branch";
    f.a = [](double v) { return v * (2.0 - v); };
    f.lipschitz = 2.0;
    f.dom_lo = 0.0;
    f.dom_hi = 1.0;
    f.monotone = true;
    f.da = [](double v) { return 2.0 * (1.0 - v); };
    f.inverse = [](double y) { return 1.0 - std::sqrt(std::max(0.0, 1.0 - y)); };
    f.preimage_measure = [](double c, double d) {
        const double lo = std::clamp(c, 0.0, 1.0);
        const double hi = std::clamp(d, 0.0, 1.0);
        if (lo >= hi) return 0.0;
        return std::sqrt(1.0 - lo) - std::sqrt(1.0 - hi);
    };
    return f;
}

inline FluxFunction appendix() {
    auto shared = std::make_shared<AppendixFlux>();
    FluxFunction f;
    f.name = "appendix";
    f.a = [shared](double v) { return shared->eval(v); };
    f.lipschitz = 2.0;  // sup |a1'| = 2 carries through every rescaled branch
    f.dom_lo = 0.0;
    f.dom_hi = std::nextafter(1.5, 0.0);
    f.monotone = true;
    f.preimage_measure = [shared](double c, double d) {
        return shared->preimage_measure(std::max(c, 0.0), std::min(d, shared->range_hi()));
    };
    return f;
}

// piecewise linear through equally spaced nodes with the given slopes
inline FluxFunction piecewise_linear(std::vector<double> slopes, double lo = 0.0, double hi = 1.0) {
    if (slopes.empty()) throw ConfigError("piecewise_linear: need at least one slope");
    const double seg = (hi - lo) / slopes.size();
    double lip = 0.0;
    for (double s : slopes) lip = std::max(lip, std::abs(s));
    auto eval = [slopes, lo, seg](double v) {
        double acc = 0.0;
        double pos = lo;
        for (double s : slopes) {
            if (v <= pos + seg) return acc + s * (v - pos);
            acc += s * seg;
            pos += seg;
        }
        return acc;
    };
    FluxFunction f;
    f.name = "piecewise_linear";
    f.a = eval;
    f.lipschitz = lip;
    f.dom_lo = lo;
    f.dom_hi = hi;
    f.monotone = std::all_of(slopes.begin(), slopes.end(), [](double s) { return s > 0.0; });
    return f;
}

// lookup by id for config files
inline FluxFunction by_name(const std::string& id, const std::vector<double>& params = {}) {
    if (id == "identity") return identity();
    if (id == "power2") return power(2);
    if (id == "power3") return power(3);
    if (id == "power" && !params.empty()) return power(static_cast<int>(params[0]));
    if (id == "constant") return constant(params.empty() ? 0.5 : params[0]);
    if (id == "parabolic_branch") return parabolic_branch();
    if (id == "appendix") return appendix();
    throw ConfigError("unknown flux id: " + id);
}

}  // namespace flux_catalog

// Sampled Lipschitz sanity check: difference quotients against the declared constant.
inline bool check_lipschitz(const FluxFunction& f, int samples = 20000,
                            std::uint64_t seed = 1234) {
    SplitMix64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const double u = rng.uniform(f.dom_lo, f.dom_hi);
        const double w = rng.uniform(f.dom_lo, f.dom_hi);
        if (u == w) continue;
        const double q = std::abs(f.a(u) - f.a(w)) / std::abs(u - w);
        if (q > f.lipschitz * (1.0 + 1e-6)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Non-degeneracy estimation
// ---------------------------------------------------------------------------

struct BandMeasureSample {
    double sigma = 1.0;
    double tau = 0.0;
    double width = 0.0;
    double measure = 0.0;
};

struct NonDegReport {
    double nu = 0.0;
    double c0 = 0.0;
    double fit_residual = 0.0;  // RMS residual of the log-log fit
    bool degenerate = false;    // no nu > 0 fits (band measure flat in width)
    std::vector<BandMeasureSample> envelope;  // the per-width envelope points
    std::vector<BandMeasureSample> samples;
};

namespace detail {

// sup_tau |{v in D : |a(v) - tau| <= width/2}| for one width, exact path
inline BandMeasureSample band_envelope_exact(const FluxFunction& f, double width, int tau_grid) {
    const double rlo = f.range_lo(), rhi = f.range_hi();
    BandMeasureSample best{1.0, 0.0, width, -1.0};
    std::vector<double> taus;
    const double lo = rlo + width / 2.0, hi = rhi - width / 2.0;
    if (hi <= lo) {
        taus.push_back((rlo + rhi) / 2.0);
    } else {
        for (int i = 0; i <= tau_grid; ++i) taus.push_back(lo + (hi - lo) * i / tau_grid);
    }
    // windows flush against the range endpoints catch power-law worst cases
    taus.push_back(lo);
    taus.push_back(hi);
    for (double tau : taus) {
        const double m = f.preimage_measure(tau - width / 2.0, tau + width / 2.0);
        if (m > best.measure) best = {1.0, tau, width, m};
    }
    return best;
}

// Monte Carlo path: empirical measure through sorted samples + sliding window.
// The envelope over tau is the maximal sample count in any width-window.
inline BandMeasureSample band_envelope_sampled(const std::vector<double>& sorted_values,
                                               double domain_measure, double width) {
    BandMeasureSample best{1.0, 0.0, width, 0.0};
    const std::size_t n = sorted_values.size();
    std::size_t j = 0, best_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (j < n && sorted_values[j] <= sorted_values[i] + width) ++j;
        if (j - i > best_count) {
            best_count = j - i;
            best.tau = sorted_values[i] + width / 2.0;
        }
    }
    best.measure = domain_measure * static_cast<double>(best_count) / static_cast<double>(n);
    return best;
}

}  // namespace detail

// Fit (nu, c0) from the band-measure envelope over >= 4 widths.
inline NonDegReport nondeg_estimate(const FluxFunction& f, std::vector<double> widths,
                                    int tau_grid = 256, int mc_samples = 1000000,
                                    std::uint64_t seed = 77) {
    if (widths.size() < 4) throw ConfigError("nondeg_estimate: need at least 4 band widths");
    std::sort(widths.begin(), widths.end());
    if (widths.front() <= 0.0) throw ConfigError("nondeg_estimate: widths must be positive");
    if (widths.back() / widths.front() < 100.0)
        throw ConfigError("nondeg_estimate: widths must span at least 2 decades");
    if (f.dom_hi <= f.dom_lo) throw ConfigError("nondeg_estimate: empty domain");

    NonDegReport rep;
    std::vector<double> sorted;
    if (!f.preimage_measure) {
        SplitMix64 rng(seed);
        sorted.resize(static_cast<std::size_t>(mc_samples));
        for (auto& s : sorted) s = f.a(rng.uniform(f.dom_lo, f.dom_hi));
        std::sort(sorted.begin(), sorted.end());
    }

    for (double w : widths) {
        BandMeasureSample env =
            f.preimage_measure ? detail::band_envelope_exact(f, w, tau_grid)
                               : detail::band_envelope_sampled(sorted, f.dom_hi - f.dom_lo, w);
        env.width = w;
        rep.envelope.push_back(env);
        rep.samples.push_back(env);
    }

    // least squares on log(measure) = nu log(width) + log(c0)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const auto& e : rep.envelope) {
        if (e.measure <= 0.0) continue;
        const double x = std::log(e.width), y = std::log(e.measure);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) {
        rep.degenerate = true;
        return rep;
    }
    const double denom = m * sxx - sx * sx;
    rep.nu = (m * sxy - sx * sy) / denom;
    rep.c0 = std::exp((sy - rep.nu * sx) / m);
    double ss = 0.0;
    for (const auto& e : rep.envelope) {
        if (e.measure <= 0.0) continue;
        const double r = std::log(e.measure) - (rep.nu * std::log(e.width) + std::log(rep.c0));
        ss += r * r;
    }
    rep.fit_residual = std::sqrt(ss / m);

    // a constant flux gives band measures independent of the width
    if (rep.nu < 0.02) rep.degenerate = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Jacobian integrability |J_{a^{-1}}|_{L^gamma} = (int_D |a'|^{1-gamma} dv)^{1/gamma}
// ---------------------------------------------------------------------------

struct JacobianNorm {
    double value = 0.0;
    bool divergent = false;
    int refinements = 0;
};

inline JacobianNorm jacobian_integrability(const FluxFunction& f, double gamma) {
    if (!f.monotone) throw ConfigError("jacobian_integrability: flux not one-to-one");
    if (!f.da) throw ConfigError("jacobian_integrability: derivative unavailable");
    if (gamma < 1.0) throw ConfigError("jacobian_integrability: gamma must be >= 1");

    auto integral = [&](int n) {
        const double h = (f.dom_hi - f.dom_lo) / n;
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            const double v = f.dom_lo + (i + 0.5) * h;
            s += std::pow(std::abs(f.da(v)), 1.0 - gamma);
        }
        return s * h;
    };

    JacobianNorm out;
    double prev = integral(256);
    double prev_inc = 0.0;
    double ratio = 0.0;
    for (int k = 1; k <= 12; ++k) {
        const double cur = integral(256 << k);
        const double inc = cur - prev;
        out.refinements = k;
        if (std::abs(inc) <= 1e-9 * std::max(1.0, std::abs(cur))) {
            out.value = std::pow(cur, 1.0 / gamma);
            return out;
        }
        if (prev_inc != 0.0) ratio = inc / prev_inc;
        // divergent integrands keep producing non-shrinking increments
        if (k >= 3 && ratio > 0.95) {
            out.divergent = true;
            out.value = std::numeric_limits<double>::infinity();
            return out;
        }
        prev_inc = inc;
        prev = cur;
    }
    // increments still shrinking geometrically: extrapolate the tail
    const double rho = std::clamp(ratio, 0.0, 0.9);
    out.value = std::pow(prev + prev_inc * rho / (1.0 - rho), 1.0 / gamma);
    return out;
}

// ---------------------------------------------------------------------------
// Distribution-function inequality |psi(a(v) sigma)|_{L^p(D)} <= c0 |psi|_{L^p}
// ---------------------------------------------------------------------------

struct DistributionCheck {
    bool applicable = true;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    double fitted_nu = 1.0;
};

// psi is a grid function on [lambda_lo, lambda_hi], linearly interpolated, zero outside.
inline DistributionCheck distribution_inequality_check(const std::vector<double>& psi,
                                                       double lambda_lo, double lambda_hi,
                                                       const FluxFunction& f, double sigma,
                                                       double p, double c0,
                                                       int quad_nodes = 8192) {
    if (psi.size() < 2 || lambda_hi <= lambda_lo)
        throw ConfigError("distribution_inequality_check: bad psi grid");

    DistributionCheck out;
    {
        // requires a flux with fitted nu = 1 on D
        std::vector<double> widths;
        for (int k = 0; k < 6; ++k) widths.push_back(1e-4 * std::pow(10.0, 0.5 * k));
        const auto nd = nondeg_estimate(f, widths, 64, 200000);
        out.fitted_nu = nd.nu;
        if (nd.degenerate || nd.nu < 0.9) {
            out.applicable = false;
            return out;
        }
    }

    auto interp = [&](double lam) {
        if (lam < lambda_lo || lam > lambda_hi) return 0.0;
        const double t = (lam - lambda_lo) / (lambda_hi - lambda_lo) * (psi.size() - 1);
        const std::size_t i = std::min(static_cast<std::size_t>(t), psi.size() - 2);
        const double w = t - static_cast<double>(i);
        return (1.0 - w) * psi[i] + w * psi[i + 1];
    };

    const bool inf_p = std::isinf(p);
    double lhs = 0.0, rhs = 0.0;
    const double hv = (f.dom_hi - f.dom_lo) / quad_nodes;
    for (int i = 0; i < quad_nodes; ++i) {
        const double v = f.dom_lo + (i + 0.5) * hv;
        const double val = std::abs(interp(sigma * f.a(v)));
        lhs = inf_p ? std::max(lhs, val) : lhs + std::pow(val, p) * hv;
    }
    const double hl = (lambda_hi - lambda_lo) / quad_nodes;
    for (int i = 0; i < quad_nodes; ++i) {
        const double lam = lambda_lo + (i + 0.5) * hl;
        const double val = std::abs(interp(lam));
        rhs = inf_p ? std::max(rhs, val) : rhs + std::pow(val, p) * hl;
    }
    out.lhs = inf_p ? lhs : std::pow(lhs, 1.0 / p);
    out.rhs = c0 * (inf_p ? rhs : std::pow(rhs, 1.0 / p));
    out.pass = out.lhs <= out.rhs * (1.0 + 1e-6);
    return out;
}

}  // namespace kinavg
