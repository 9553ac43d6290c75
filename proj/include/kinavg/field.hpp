// field.hpp — phase-space fields with synchronized Fourier representations.
//
// A SpectralField carries complex data over (x-grid x v-grid) in one of three
// representations: physical, x-Fourier (xi, v), or xv-Fourier (xi, zeta).
// Transforms use the continuum-style unitary convention
//     ft(xi) = (dx/sqrt(2pi))^n sum_j f(x_j) e^{-i xi x_j},
// so Parseval reads  sum |f|^2 dx-cell = sum |ft|^2 dxi-cell  exactly.
// On the centered grid x_j = -L + j dx this is the plain DFT times (-1)^k.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "kinavg/grid.hpp"

namespace kinavg {

enum class Rep { Physical, XFourier, XVFourier };

inline const char* rep_name(Rep r) {
    switch (r) {
        case Rep::Physical: return "physical";
        case Rep::XFourier: return "x_fourier";
        case Rep::XVFourier: return "xv_fourier";
    }
    return "?";
}

class SpectralField {
public:
    SpectralField() = default;
    SpectralField(GridSpec grid, Rep rep = Rep::Physical, double time = 0.0)
        : grid_(grid), rep_(rep), time_(time), data_(grid.total_size(), cplx{0.0, 0.0}) {
        grid_.validate();
    }

    const GridSpec& grid() const { return grid_; }
    Rep rep() const { return rep_; }
    double time() const { return time_; }
    void set_time(double t) { time_ = t; }

    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }

    cplx& at(std::size_t ix, std::size_t iv) { return data_[ix * grid_.v_size() + iv]; }
    const cplx& at(std::size_t ix, std::size_t iv) const { return data_[ix * grid_.v_size() + iv]; }

    // Fill from a callable f(x-vector, v-vector) on the physical grid.
    template <class F>
    static SpectralField from_function(const GridSpec& g, F&& f, double time = 0.0) {
        SpectralField out(g, Rep::Physical, time);
        for (std::size_t ix = 0; ix < g.x_size(); ++ix) {
            const auto xv = x_vector(g, ix);
            for (std::size_t iv = 0; iv < g.v_size(); ++iv) {
                out.at(ix, iv) = f(xv, v_vector(g, iv));
            }
        }
        return out;
    }

    // volume of one data cell in the current representation
    double cell_volume() const {
        switch (rep_) {
            case Rep::Physical: return grid_.x_cell() * grid_.v_cell();
            case Rep::XFourier: return grid_.xi_cell() * grid_.v_cell();
            case Rep::XVFourier: return grid_.xi_cell() * grid_.zeta_cell();
        }
        return 0.0;
    }

    double l2_norm_sq() const {
        double s = 0.0;
        for (const cplx& z : data_) s += std::norm(z);
        return s * cell_volume();
    }
    double l2_norm() const { return std::sqrt(l2_norm_sq()); }

    cplx integral() const {
        cplx s{0.0, 0.0};
        for (const cplx& z : data_) s += z;
        return s * cell_volume();
    }

    // Fraction of L1 mass outside |v|_inf > L_v/2.  Fields fed to periodic
    // velocity operators must keep this below ~1e-10.
    double mass_fraction_outside_support() const {
        if (rep_ == Rep::XVFourier) throw ConfigError("support check needs physical v");
        double inside = 0.0, outside = 0.0;
        const double half = grid_.L_v / 2.0;
        for (std::size_t ix = 0; ix < grid_.x_size(); ++ix) {
            for (std::size_t iv = 0; iv < grid_.v_size(); ++iv) {
                const auto vv = v_vector(grid_, iv);
                const double m = std::abs(at(ix, iv));
                bool in = true;
                for (int d = 0; d < grid_.n_v; ++d)
                    if (std::abs(vv[d]) > half) in = false;
                (in ? inside : outside) += m;
            }
        }
        const double tot = inside + outside;
        return tot > 0.0 ? outside / tot : 0.0;
    }

    SpectralField& operator*=(cplx c) {
        for (cplx& z : data_) z *= c;
        return *this;
    }
    SpectralField& operator+=(const SpectralField& o) {
        if (o.grid_ != grid_ || o.rep_ != rep_) throw ConfigError("field +=: mismatched fields");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

private:
    friend SpectralField transform(const SpectralField&, Rep);

    GridSpec grid_;
    Rep rep_ = Rep::Physical;
    double time_ = 0.0;
    std::vector<cplx> data_;
};

namespace detail {

// (-1)^k sign for the centered-grid phase, in FFT storage order.
inline void apply_alternating_sign(std::vector<cplx>& data, std::span<const std::size_t> dims,
                                   std::size_t axis) {
    const std::size_t n = dims[axis];
    std::size_t stride = 1;
    for (std::size_t d = axis + 1; d < dims.size(); ++d) stride *= dims[d];
    std::size_t outer = 1;
    for (std::size_t d = 0; d < axis; ++d) outer *= dims[d];
    const std::size_t block = stride * n;
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t j = 1; j < n; j += 2) {
            cplx* base = data.data() + o * block + j * stride;
            for (std::size_t s = 0; s < stride; ++s) base[s] = -base[s];
        }
}

// forward semi-discrete FT along one axis: scale * (-1)^k * DFT
inline void forward_axis(std::vector<cplx>& data, std::span<const std::size_t> dims,
                         std::size_t axis, double delta) {
    fft_axis(data, dims, axis, /*inverse=*/false);
    apply_alternating_sign(data, dims, axis);
    const double scale = delta / kSqrt2Pi;
    for (cplx& z : data) z *= scale;
}

inline void inverse_axis(std::vector<cplx>& data, std::span<const std::size_t> dims,
                         std::size_t axis, double dfreq) {
    apply_alternating_sign(data, dims, axis);
    fft_axis(data, dims, axis, /*inverse=*/true);
    const double scale = dfreq / kSqrt2Pi;
    for (cplx& z : data) z *= scale;
}

}  // namespace detail

// Convert a field to another representation (x axes first, then v axes).
inline SpectralField transform(const SpectralField& f, Rep target) {
    SpectralField out = f;
    if (f.rep() == target) return out;
    const GridSpec& g = f.grid();
    const auto dims = g.dims();
    const std::span<const std::size_t> ds(dims);

    const bool have_x = f.rep() != Rep::Physical;    // x already in Fourier?
    const bool have_v = f.rep() == Rep::XVFourier;
    const bool want_x = target != Rep::Physical;
    const bool want_v = target == Rep::XVFourier;

    for (int a = 0; a < g.n_x; ++a) {
        if (want_x && !have_x) detail::forward_axis(out.data_, ds, a, g.dx());
        if (!want_x && have_x) detail::inverse_axis(out.data_, ds, a, g.dxi());
    }
    for (int a = 0; a < g.n_v; ++a) {
        const std::size_t axis = static_cast<std::size_t>(g.n_x + a);
        if (want_v && !have_v) detail::forward_axis(out.data_, ds, axis, g.dv());
        if (!want_v && have_v) detail::inverse_axis(out.data_, ds, axis, g.dzeta());
    }
    out.rep_ = target;
    return out;
}

// Pointwise L2 pairing <a,b> = sum a conj(b) * cell in a common representation.
inline cplx pairing(const SpectralField& a, const SpectralField& b) {
    if (a.grid() != b.grid() || a.rep() != b.rep()) throw ConfigError("pairing: mismatched fields");
    cplx s{0.0, 0.0};
    const auto& da = a.data();
    const auto& db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) s += da[i] * std::conj(db[i]);
    return s * a.cell_volume();
}

}  // namespace kinavg
