// appendix_flux.hpp — the piecewise-parabolic flux whose interval
// non-degeneracy constant is sqrt(6) but whose open-set constant diverges.
//
// Branch n (1-based) lives on D_n = [S_{n-1}, S_n] with S_n = sum_{i<n} 3^{-i}
// and maps onto [R_{n-1}, R_n] with R_n = sum_{i<n} 9^{-i}:
//     a(v) = R_{n-1} + 9^{-(n-1)} a1((v - S_{n-1}) 3^{n-1}),  a1(u) = u(2-u).
// Within one branch the preimage of [R_n - p2, R_n - p1] has exact measure
// sqrt(p2) - sqrt(p1); intervals spanning branches decompose into three parts
// with the combined bound sqrt(6) |I|^{1/2}.  The family O^m of m top slices
// of width 9^{-(m-1)} realizes the ratio sqrt(m).
#pragma once

#include <cmath>
#include <vector>

#include "kinavg/common.hpp"

namespace kinavg {

class AppendixFlux {
public:
    // branches beyond this index are below double resolution (3^-80)
    static constexpr int kMaxBranch = 40;

    AppendixFlux() {
        S_.resize(kMaxBranch + 1, 0.0);
        R_.resize(kMaxBranch + 1, 0.0);
        double s = 0.0, r = 0.0, ps = 1.0, pr = 1.0;
        for (int n = 1; n <= kMaxBranch; ++n) {
            s += ps;
            r += pr;
            S_[n] = s;
            R_[n] = r;
            ps /= 3.0;
            pr /= 9.0;
        }
    }

    double domain_hi() const { return 1.5; }
    double range_hi() const { return 1.125; }

    // left endpoint of branch n, n = 1..kMaxBranch
    double branch_start(int n) const { return S_[n - 1]; }
    double branch_end(int n) const { return S_[n]; }
    double range_start(int n) const { return R_[n - 1]; }
    double range_end(int n) const { return R_[n]; }

    static double a1(double u) { return u * (2.0 - u); }  // 1 - (1-u)^2

    double eval(double v) const {
        if (v < 0.0 || v >= domain_hi())
            throw ConfigError("AppendixFlux: v outside [0, 3/2)");
        const int n = branch_of(v);
        const double u = (v - S_[n - 1]) * std::pow(3.0, n - 1);
        return R_[n - 1] + std::pow(9.0, -(n - 1)) * a1(std::min(u, 1.0));
    }

    // exact measure of a^{-1}([c,d])
    double preimage_measure(double c, double d) const {
        if (!(c <= d)) throw ConfigError("AppendixFlux: empty interval");
        if (c < 0.0 || d > range_hi())
            throw ConfigError("AppendixFlux: interval outside the range [0, 9/8)");
        double total = 0.0;
        for (int n = 1; n <= kMaxBranch; ++n) {
            const double lo = std::max(c, R_[n - 1]);
            const double hi = std::min(d, R_[n]);
            if (lo >= hi) {
                if (R_[n - 1] > d) break;
                continue;
            }
            // within branch n: values R_n - p, preimages S_n - sqrt(p) 3^{-(n-1)}... in
            // rescaled coordinates; the measure is sqrt(p2) - sqrt(p1) scaled by 3^{-(n-1)}
            const double scale_v = std::pow(3.0, -(n - 1));
            const double scale_y = std::pow(9.0, -(n - 1));
            const double p2 = (R_[n] - lo) / scale_y;  // in [0,1]
            const double p1 = (R_[n] - hi) / scale_y;
            total += scale_v * (std::sqrt(p2) - std::sqrt(p1));
        }
        // anything beyond the last tabulated branch is below double resolution
        if (d >= R_[kMaxBranch]) total += domain_hi() - S_[kMaxBranch];
        return total;
    }

    struct CounterexampleRow {
        int m = 0;
        double set_measure = 0.0;       // |O^m|
        double preimage_measure = 0.0;  // |a^{-1}(O^m)|
        double ratio = 0.0;             // preimage / sqrt(set)
        double ratio_closed_form = 0.0; // sqrt(m)
        double summed_preimage = 0.0;   // branch-wise closed form, cross-check
    };

    // O^m = union of the m top slices [R_n - 9^{-(m-1)}, R_n], n = 1..m.
    CounterexampleRow counterexample_family(int m) const {
        if (m < 1 || m > 30) throw ConfigError("counterexample_family: m must be in [1,30]");
        CounterexampleRow row;
        row.m = m;
        const double w = std::pow(9.0, -(m - 1));
        row.set_measure = m * w;
        row.preimage_measure = m * std::pow(3.0, -(m - 1));
        row.ratio = row.preimage_measure / std::sqrt(row.set_measure);
        row.ratio_closed_form = std::sqrt(static_cast<double>(m));
        for (int n = 1; n <= m; ++n)
            row.summed_preimage += preimage_measure(R_[n] - w, R_[n]);
        return row;
    }

private:
    int branch_of(double v) const {
        // branches shrink geometrically; a linear scan stays trivial
        for (int n = 1; n <= kMaxBranch; ++n)
            if (v <= S_[n]) return n;
        return kMaxBranch;
    }

    std::vector<double> S_;  // cumulative branch endpoints in v
    std::vector<double> R_;  // cumulative branch endpoints in y
};

}  // namespace kinavg
