// signal.hpp - complex-valued functions on a finite abelian group and the
// elementary operators: shifts, reflections, convolution, Fourier transforms
// in all variants, tensor products and the asymmetric coordinate transform.
//
// All integrals are weighted sums: int_G f dx  =  sum_x f(x) * w_G.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "s0kit/group.hpp"

namespace s0kit {

struct Signal {
    GroupSpec group;
    std::vector<Complex> values;

    Signal() = default;
    Signal(GroupSpec g, std::vector<Complex> v) : group(std::move(g)), values(std::move(v)) {
        validate();
    }

    static Signal zero(const GroupSpec& g) { return Signal(g, std::vector<Complex>(g.order())); }

    // delta at the identity, value 1
    static Signal delta(const GroupSpec& g, std::size_t at = 0) {
        Signal s = zero(g);
        s.values.at(at) = 1.0;
        return s;
    }

    static Signal constant(const GroupSpec& g, Complex c = 1.0) {
        return Signal(g, std::vector<Complex>(g.order(), c));
    }

    std::size_t size() const { return values.size(); }
    Complex operator[](std::size_t i) const { return values[i]; }
    Complex& operator[](std::size_t i) { return values[i]; }

    void validate() const {
        group.validate();
        if (values.size() != group.order())
            throw std::invalid_argument("Signal: value count does not match group order");
        for (const Complex& v : values)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::invalid_argument("Signal: non-finite amplitude");
    }

    bool is_zero() const {
        for (const Complex& v : values)
            if (v != Complex(0.0)) return false;
        return true;
    }
};

inline void require_same_group(const Signal& f, const Signal& g, const char* what) {
    if (f.group != g.group) throw std::invalid_argument(std::string(what) + ": group mismatch");
}

inline Signal operator+(const Signal& f, const Signal& g) {
    require_same_group(f, g, "operator+");
    Signal r = f;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += g[i];
    return r;
}

inline Signal operator-(const Signal& f, const Signal& g) {
    require_same_group(f, g, "operator-");
    Signal r = f;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= g[i];
    return r;
}

inline Signal operator*(Complex c, const Signal& f) {
    Signal r = f;
    for (auto& v : r.values) v *= c;
    return r;
}

// T_x f(s) = f(s - x)
inline Signal translate(const Signal& f, std::size_t x) {
    Signal r = Signal::zero(f.group);
    for (std::size_t s = 0; s < f.size(); ++s) r[s] = f[f.group.sub(s, x)];
    return r;
}

inline Signal translate(const Signal& f, const GroupElement& x) {
    if (x.coords.size() != f.group.dim())
        throw std::invalid_argument("translate: group mismatch");
    return translate(f, f.group.index_of(x));
}

// E_omega f(s) = omega(s) f(s)
inline Signal modulate(const Signal& f, std::size_t omega) {
    Signal r = f;
    for (std::size_t s = 0; s < f.size(); ++s) r[s] *= character_value(f.group, omega, s);
    return r;
}

inline Signal modulate(const Signal& f, const GroupElement& omega) {
    if (omega.coords.size() != f.group.dim())
        throw std::invalid_argument("modulate: dual group mismatch");
    return modulate(f, f.group.index_of(omega));
}

// pi(x, omega) = E_omega T_x
inline Signal tf_shift(const Signal& f, std::size_t x, std::size_t omega) {
    return modulate(translate(f, x), omega);
}

inline Signal tf_shift(const Signal& f, const PhasePoint& chi) {
    return modulate(translate(f, chi.x), chi.omega);
}

// phase-point index in G x G^: chi = x * |G| + omega
inline Signal tf_shift_plane_index(const Signal& f, std::size_t chi) {
    const std::size_t n = f.group.order();
    return tf_shift(f, chi / n, chi % n);
}

inline Signal reflect(const Signal& f) {
    Signal r = Signal::zero(f.group);
    for (std::size_t s = 0; s < f.size(); ++s) r[s] = f[f.group.neg(s)];
    return r;
}

inline Signal conjugate(const Signal& f) {
    Signal r = f;
    for (auto& v : r.values) v = std::conj(v);
    return r;
}

// f-dagger(x) = conj(f(-x))
inline Signal involution(const Signal& f) { return conjugate(reflect(f)); }

// (f * g)(x) = sum_s f(s) g(x-s) w_G
inline Signal convolve(const Signal& f, const Signal& g) {
    require_same_group(f, g, "convolve");
    const double w = f.group.weight.to_double();
    Signal r = Signal::zero(f.group);
    for (std::size_t x = 0; x < f.size(); ++x) {
        Complex acc = 0.0;
        for (std::size_t s = 0; s < f.size(); ++s) acc += f[s] * g[f.group.sub(x, s)];
        r[x] = acc * w;
    }
    return r;
}

inline Signal multiply(const Signal& f, const Signal& g) {
    require_same_group(f, g, "multiply");
    Signal r = f;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= g[i];
    return r;
}

// <f, g> = sum_x f(x) conj(g(x)) w_G
inline Complex inner(const Signal& f, const Signal& g) {
    require_same_group(f, g, "inner");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]);
    return acc * f.group.weight.to_double();
}

// L^p exponent with a distinguished infinity value.
class Exponent {
public:
    static Exponent inf() { return Exponent(true, 0.0); }
    static Exponent p(double v) {
        if (!(v >= 1.0)) throw std::invalid_argument("Exponent: p must be >= 1");
        return Exponent(false, v);
    }
    bool infinite() const { return infinite_; }
    double value() const {
        if (infinite_) throw std::logic_error("Exponent: value() on infinity");
        return value_;
    }
    // 1/p, with 1/inf = 0
    double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }
    // Hoelder conjugate: 1/p + 1/q = 1
    Exponent conjugate() const {
        if (infinite_) return p(1.0);
        if (value_ == 1.0) return inf();
        return p(value_ / (value_ - 1.0));
    }

private:
    Exponent(bool inf_flag, double v) : infinite_(inf_flag), value_(v) {}
    bool infinite_;
    double value_;
};

inline double lp_norm(const Signal& f, const Exponent& p) {
    if (p.infinite()) {
        double m = 0.0;
        for (const auto& v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    const double w = f.group.weight.to_double();
    double acc = 0.0;
    for (const auto& v : f.values) acc += std::pow(std::abs(v), p.value()) * w;
    return std::pow(acc, 1.0 / p.value());
}

inline double l1_norm(const Signal& f) { return lp_norm(f, Exponent::p(1.0)); }
inline double l2_norm(const Signal& f) { return lp_norm(f, Exponent::p(2.0)); }
inline double linf_norm(const Signal& f) { return lp_norm(f, Exponent::inf()); }

// F f(omega) = sum_x f(x) conj(omega(x)) w_G, a signal on G^.
inline Signal fourier(const Signal& f) {
    const GroupSpec gd = dual_group(f.group);
    const std::size_t n = f.size();
    const double w = f.group.weight.to_double();
    const std::vector<Complex> chars = character_matrix(f.group);
    Signal r = Signal::zero(gd);
    for (std::size_t omega = 0; omega < n; ++omega) {
        Complex acc = 0.0;
        for (std::size_t x = 0; x < n; ++x) acc += f[x] * std::conj(chars[omega * n + x]);
        r[omega] = acc * w;
    }
    return r;
}

// F^{-1} F(x) = sum_omega F(omega) omega(x) w_{G^}; the caller states the
// time-side group explicitly so weights land where Fourier inversion needs them.
inline Signal inverse_fourier(const Signal& F, const GroupSpec& time_group) {
    if (!time_group.same_factors(F.group))
        throw std::invalid_argument("inverse_fourier: factor mismatch");
    if (dual_group(time_group) != F.group)
        throw std::invalid_argument("inverse_fourier: weight is not dual to the stated group");
    const std::size_t n = F.size();
    const double wd = F.group.weight.to_double();
    const std::vector<Complex> chars = character_matrix(time_group);
    Signal r = Signal::zero(time_group);
    for (std::size_t x = 0; x < n; ++x) {
        Complex acc = 0.0;
        for (std::size_t omega = 0; omega < n; ++omega) acc += F[omega] * chars[omega * n + x];
        r[x] = acc * wd;
    }
    return r;
}

// Fourier-algebra norm ||f||_A = l1(mu_{G^}) norm of F f.
inline double a_norm(const Signal& f) { return l1_norm(fourier(f)); }

// (f1 (x) f2)(x1, x2) = f1(x1) f2(x2) on the product group with weight w1*w2.
inline Signal tensor(const Signal& f1, const Signal& f2) {
    GroupSpec pg;
    pg.factors = f1.group.factors;
    pg.factors.insert(pg.factors.end(), f2.group.factors.begin(), f2.group.factors.end());
    pg.weight = f1.group.weight * f2.group.weight;
    Signal r = Signal::zero(pg);
    const std::size_t n2 = f2.size();
    for (std::size_t i = 0; i < f1.size(); ++i)
        for (std::size_t j = 0; j < n2; ++j) r[i * n2 + j] = f1[i] * f2[j];
    return r;
}

namespace detail {
inline void require_product(const Signal& F, const GroupSpec& g1, const GroupSpec& g2,
                            const char* what) {
    GroupSpec pg;
    pg.factors = g1.factors;
    pg.factors.insert(pg.factors.end(), g2.factors.begin(), g2.factors.end());
    pg.weight = g1.weight * g2.weight;
    if (F.group != pg)
        throw std::invalid_argument(std::string(what) + ": signal is not on the stated product group");
}
}  // namespace detail

// Partial Fourier transform in the first coordinate: G1 x G2 -> G1^ x G2.
inline Signal partial_fourier_1(const Signal& F, const GroupSpec& g1, const GroupSpec& g2) {
    detail::require_product(F, g1, g2, "partial_fourier_1");
    const std::size_t n1 = g1.order(), n2 = g2.order();
    const double w1 = g1.weight.to_double();
    const std::vector<Complex> chars = character_matrix(g1);
    const GroupSpec g1d = dual_group(g1);
    GroupSpec out;
    out.factors = g1d.factors;
    out.factors.insert(out.factors.end(), g2.factors.begin(), g2.factors.end());
    out.weight = g1d.weight * g2.weight;
    Signal r = Signal::zero(out);
    for (std::size_t omega = 0; omega < n1; ++omega)
        for (std::size_t t = 0; t < n2; ++t) {
            Complex acc = 0.0;
            for (std::size_t x = 0; x < n1; ++x)
                acc += F[x * n2 + t] * std::conj(chars[omega * n1 + x]);
            r[omega * n2 + t] = acc * w1;
        }
    return r;
}

// Partial Fourier transform in the second coordinate: G1 x G2 -> G1 x G2^.
inline Signal partial_fourier_2(const Signal& F, const GroupSpec& g1, const GroupSpec& g2) {
    detail::require_product(F, g1, g2, "partial_fourier_2");
    const std::size_t n1 = g1.order(), n2 = g2.order();
    const double w2 = g2.weight.to_double();
    const std::vector<Complex> chars = character_matrix(g2);
    const GroupSpec g2d = dual_group(g2);
    GroupSpec out;
    out.factors = g1.factors;
    out.factors.insert(out.factors.end(), g2d.factors.begin(), g2d.factors.end());
    out.weight = g1.weight * g2d.weight;
    Signal r = Signal::zero(out);
    for (std::size_t x = 0; x < n1; ++x)
        for (std::size_t omega = 0; omega < n2; ++omega) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < n2; ++t)
                acc += F[x * n2 + t] * std::conj(chars[omega * n2 + t]);
            r[x * n2 + omega] = acc * w2;
        }
    return r;
}

// Symplectic Fourier transform on G x G^:
//   F_s F(x, omega) = sum_{t, xi} F(t, xi) conj(omega(t)) xi(x) w_G w_{G^};
// self-inverse and unitary.
inline Signal symplectic_fourier(const Signal& F, const GroupSpec& g) {
    if (F.group != phase_plane(g))
        throw std::invalid_argument("symplectic_fourier: signal is not on G x G^");
    const std::size_t n = g.order();
    const double wp = phase_plane(g).weight.to_double();
    const std::vector<Complex> chars = character_matrix(g);
    Signal r = Signal::zero(F.group);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t omega = 0; omega < n; ++omega) {
            Complex acc = 0.0;
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t xi = 0; xi < n; ++xi)
                    acc += F[t * n + xi] * std::conj(chars[omega * n + t]) * chars[xi * n + x];
            r[x * n + omega] = acc * wp;
        }
    return r;
}

// tau_a F(x, t) = F(t, t - x) on G x G; inverse is F(x, t) -> F(x - t, x).
inline Signal asym_coord(const Signal& F, const GroupSpec& g) {
    detail::require_product(F, g, g, "asym_coord");
    const std::size_t n = g.order();
    Signal r = Signal::zero(F.group);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t t = 0; t < n; ++t) r[x * n + t] = F[t * n + g.sub(t, x)];
    return r;
}

inline Signal asym_coord_inverse(const Signal& F, const GroupSpec& g) {
    detail::require_product(F, g, g, "asym_coord_inverse");
    const std::size_t n = g.order();
    Signal r = Signal::zero(F.group);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t t = 0; t < n; ++t) r[x * n + t] = F[g.sub(x, t) * n + x];
    return r;
}

inline double max_abs_diff(const Signal& a, const Signal& b) {
    require_same_group(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double rel_error(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

}  // namespace s0kit
