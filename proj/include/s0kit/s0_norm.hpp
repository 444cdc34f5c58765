// s0_norm.hpp - the S0 norm ||f||_{S0,g} = ||V_g f||_1 and every equivalent
// formulation with its explicit constants: the convolution and
// Fourier-algebra routes, the norm symmetries, window-equivalence constants,
// the embedding inequalities, mixed modulation norms and the
// time-frequency uncertainty bound.

#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "s0kit/stft.hpp"

namespace s0kit {

enum class S0Method { stft, convolution, fourier_algebra };

inline const char* to_string(S0Method m) {
    switch (m) {
        case S0Method::stft: return "stft";
        case S0Method::convolution: return "convolution";
        case S0Method::fourier_algebra: return "fourier-algebra";
    }
    return "?";
}

struct NormReport {
    S0Method method;
    double value;
    std::string group;
    std::string window_id;
};

namespace detail {
inline void require_window(const Signal& g, const char* what) {
    if (g.is_zero()) throw std::invalid_argument(std::string(what) + ": zero window");
}
}  // namespace detail

// ||V_g f||_{L^1(G x G^)}
inline double s0_norm_stft(const Signal& f, const Signal& g) {
    detail::require_window(g, "s0_norm");
    Signal plane = stft(f, g);
    return l1_norm(plane);
}

// int_{G^} ||E_omega f * g-dagger||_1 domega
inline double s0_norm_convolution(const Signal& f, const Signal& g) {
    detail::require_window(g, "s0_norm");
    const GroupSpec gd = dual_group(f.group);
    const double wd = gd.weight.to_double();
    const Signal gdag = involution(g);
    double acc = 0.0;
    for (std::size_t omega = 0; omega < gd.order(); ++omega)
        acc += l1_norm(convolve(modulate(f, omega), gdag)) * wd;
    return acc;
}

// int_G ||f . T_x conj(g)||_{A(G)} dx
inline double s0_norm_fourier_algebra(const Signal& f, const Signal& g) {
    detail::require_window(g, "s0_norm");
    const double w = f.group.weight.to_double();
    const Signal gbar = conjugate(g);
    double acc = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x)
        acc += a_norm(multiply(f, translate(gbar, x))) * w;
    return acc;
}

inline double s0_norm(const Signal& f, const Signal& g, S0Method m = S0Method::stft) {
    switch (m) {
        case S0Method::stft: return s0_norm_stft(f, g);
        case S0Method::convolution: return s0_norm_convolution(f, g);
        case S0Method::fourier_algebra: return s0_norm_fourier_algebra(f, g);
    }
    throw std::logic_error("s0_norm: bad method");
}

inline NormReport s0_norm_report(const Signal& f, const Signal& g, S0Method m,
                                 const std::string& window_id = "") {
    return NormReport{m, s0_norm(f, g, m), f.group.str(), window_id};
}

// Largest pairwise relative discrepancy between the three routes.
inline double s0_norm_route_discrepancy(const Signal& f, const Signal& g) {
    const double a = s0_norm_stft(f, g);
    const double b = s0_norm_convolution(f, g);
    const double c = s0_norm_fourier_algebra(f, g);
    const double scale = std::max({a, b, c, 1e-300});
    return std::max({std::abs(a - b), std::abs(a - c), std::abs(b - c)}) / scale;
}

// The five-quantity symmetry chain
//   ||f||_{S0,g} = ||g||_{S0,f} = ||conj f||_{S0,conj g}
//                = ||f-dagger||_{S0,g-dagger} = ||f^||_{S0(G^),g^}
// plus the shift invariance ||pi(nu1) f||_{S0, pi(nu2) g} = ||f||_{S0,g}.
// Returns the largest relative deviation.
struct SymmetryReport {
    double base;
    double max_rel_dev;
};

inline SymmetryReport norm_symmetries_check(const Signal& f, const Signal& g, std::size_t nu1,
                                            std::size_t nu2) {
    const double base = s0_norm_stft(f, g);
    const double vals[] = {
        s0_norm_stft(g, f),
        s0_norm_stft(conjugate(f), conjugate(g)),
        s0_norm_stft(involution(f), involution(g)),
        s0_norm_stft(fourier(f), fourier(g)),
        s0_norm_stft(tf_shift_plane_index(f, nu1), tf_shift_plane_index(g, nu2)),
    };
    double dev = 0.0;
    for (double v : vals) dev = std::max(dev, rel_error(v, base));
    return SymmetryReport{base, dev};
}

// c ||f||_{S0,g2} <= ||f||_{S0,g1} <= C ||f||_{S0,g2} with
// c = ||g1||_2^2 / ||g2||_{S0,g1} and C = ||g1||_{S0,g2} / ||g2||_2^2.
inline std::pair<double, double> equivalence_constants(const Signal& g1, const Signal& g2) {
    detail::require_window(g1, "equivalence_constants");
    detail::require_window(g2, "equivalence_constants");
    const double c = l2_norm(g1) * l2_norm(g1) / s0_norm_stft(g2, g1);
    const double C = s0_norm_stft(g1, g2) / (l2_norm(g2) * l2_norm(g2));
    return {c, C};
}

struct InequalityCheck {
    std::string name;
    double lhs;     // must satisfy lhs <= rhs (+ slack)
    double rhs;
    bool holds(double slack = 1e-12) const { return lhs <= rhs + slack * std::max(1.0, rhs); }
};

// All of Cor (vi.a)-(x) for p in {1, 2, 4, inf} ((viii) only for p >= 2),
// plus the embedding ||f||_p <= c ||f||_{S0,g}.
inline std::vector<InequalityCheck> corollary_inequalities_check(const Signal& f, const Signal& g) {
    detail::require_window(g, "corollary_inequalities_check");
    std::vector<InequalityCheck> out;
    const double V1 = s0_norm_stft(f, g);
    const Signal fhat = fourier(f), ghat = fourier(g);
    const Signal plane = stft(f, g);
    const std::vector<Exponent> ps{Exponent::p(1), Exponent::p(2), Exponent::p(4), Exponent::inf()};
    const char* tags[] = {"p=1", "p=2", "p=4", "p=inf"};
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const Exponent& p = ps[i];
        const double rp = p.reciprocal();
        const double ca = std::pow(l1_norm(g), -1.0 + rp) * std::pow(linf_norm(g), -rp);
        out.push_back({std::string("vi.a ") + tags[i], lp_norm(f, p), ca * V1});
        const double cb = std::pow(l1_norm(ghat), -1.0 + rp) * std::pow(linf_norm(ghat), -rp);
        out.push_back({std::string("vi.b ") + tags[i], lp_norm(fhat, p), cb * V1});
        const Exponent q = p.conjugate();
        out.push_back({std::string("vii.a ") + tags[i], lp_norm(f, p) * lp_norm(g, q), V1});
        out.push_back({std::string("vii.b ") + tags[i], lp_norm(fhat, p) * lp_norm(ghat, q), V1});
        if (rp <= 0.5)
            out.push_back({std::string("viii ") + tags[i], lp_norm(f, p) * lp_norm(ghat, p), V1});
        out.push_back({std::string("x ") + tags[i], lp_norm(plane, p), V1});
        out.push_back({std::string("embedding ") + tags[i], lp_norm(f, p), ca * V1});
    }
    out.push_back({"ix", std::abs(inner(f, g)), V1});
    return out;
}

// Mixed modulation norm of Def def:mod-space with the bilinear pairing
// (E_omega T_x g, sigma); for sigma = iota(f) the pairing values are
// V_{conj g} f(x, -omega), so M^{1,1} equals ||f||_{S0, conj g} exactly.
inline double modulation_norm(const Signal& f, const Signal& g, const Exponent& p,
                              const Exponent& q) {
    detail::require_window(g, "modulation_norm");
    require_same_group(f, g, "modulation_norm");
    const GroupSpec& gr = f.group;
    const std::size_t n = gr.order();
    const double w = gr.weight.to_double();
    const double wd = dual_group(gr).weight.to_double();
    const std::vector<Complex> chars = character_matrix(gr);
    double outer = 0.0;
    for (std::size_t omega = 0; omega < n; ++omega) {
        double inner_acc = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            Complex pairing = 0.0;
            for (std::size_t s = 0; s < n; ++s)
                pairing += chars[omega * n + s] * g[gr.sub(s, x)] * f[s];
            pairing *= w;
            const double m = std::abs(pairing);
            if (p.infinite())
                inner_acc = std::max(inner_acc, m);
            else
                inner_acc += std::pow(m, p.value()) * w;
        }
        const double inner_norm = p.infinite() ? inner_acc : std::pow(inner_acc, 1.0 / p.value());
        if (q.infinite())
            outer = std::max(outer, inner_norm);
        else
            outer += std::pow(inner_norm, q.value()) * wd;
    }
    return q.infinite() ? outer : std::pow(outer, 1.0 / q.value());
}

// Greedy minimal-measure set capturing (1-eps) of ||V_g f||_1; ties broken
// by phase-point index.  Returns mu_{GxG^}(U); always >= 1 - eps.
inline double uncertainty_minimal_measure(const Signal& f, const Signal& g, double eps) {
    detail::require_window(g, "uncertainty_minimal_measure");
    if (f.is_zero()) throw std::invalid_argument("uncertainty_minimal_measure: zero signal");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("uncertainty_minimal_measure: eps outside (0,1)");
    Signal plane = stft(f, g);
    const double wp = plane.group.weight.to_double();
    std::vector<std::size_t> order(plane.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ma = std::abs(plane[a]), mb = std::abs(plane[b]);
        if (ma != mb) return ma > mb;
        return a < b;
    });
    const double total = l1_norm(plane);
    double mass = 0.0;
    std::size_t count = 0;
    for (std::size_t idx : order) {
        if (mass >= (1.0 - eps) * total) break;
        mass += std::abs(plane[idx]) * wp;
        ++count;
    }
    return static_cast<double>(count) * wp;
}

// ||f||_p <= ||g||_p ||g||_2^{-2} ||f||_{S0,g}  (minimality with B = L^p, c = 1)
inline InequalityCheck minimality_instance_check(const Signal& f, const Signal& g,
                                                 const Exponent& p) {
    detail::require_window(g, "minimality_instance_check");
    const double rhs = lp_norm(g, p) / (l2_norm(g) * l2_norm(g)) * s0_norm_stft(f, g);
    return {"minimality L^p", lp_norm(f, p), rhs};
}

// The convolution/multiplication algebra and module bounds:
//   ||f1 * f2||_{S0,g} <= ||g||_inf^{-1} ||f1||_{S0,g} ||f2||_{S0,g}
//   ||f1 . f2||_{S0,g} <= ||g^||_inf^{-1} ||f1||_{S0,g} ||f2||_{S0,g}
//   ||f1 * f2||_{S0,g} <= ||f1||_1     ||f2||_{S0,g}
//   ||f1 . f2||_{S0,g} <= ||f1||_A     ||f2||_{S0,g}
inline std::vector<InequalityCheck> banach_algebra_check(const Signal& f1, const Signal& f2,
                                                         const Signal& g) {
    detail::require_window(g, "banach_algebra_check");
    const double n1 = s0_norm_stft(f1, g), n2 = s0_norm_stft(f2, g);
    const double conv = s0_norm_stft(convolve(f1, f2), g);
    const double prod = s0_norm_stft(multiply(f1, f2), g);
    return {
        {"algebra convolution", conv, n1 * n2 / linf_norm(g)},
        {"algebra multiplication", prod, n1 * n2 / linf_norm(fourier(g))},
        {"ideal convolution", conv, l1_norm(f1) * n2},
        {"ideal multiplication", prod, a_norm(f1) * n2},
    };
}

// Thm th:stft-and-s0:
//   (i)  ||f1 (x) f2||_{S0(G1xG2), g1 (x) g2} = ||f1||_{S0,g1} ||f2||_{S0,g2}
//   (ii) ||V_h f||_{S0(GxG^), V_{g2} g1}      = ||f||_{S0,g1} ||h||_{S0,g2}
struct TensorNormIdentity {
    double lhs_i, rhs_i;
    double lhs_ii, rhs_ii;
};

inline TensorNormIdentity tensor_norm_identity(const Signal& f1, const Signal& f2,
                                               const Signal& g1, const Signal& g2) {
    detail::require_window(g1, "tensor_norm_identity");
    detail::require_window(g2, "tensor_norm_identity");
    TensorNormIdentity r{};
    r.lhs_i = s0_norm_stft(tensor(f1, f2), tensor(g1, g2));
    r.rhs_i = s0_norm_stft(f1, g1) * s0_norm_stft(f2, g2);
    // (ii) on the plane of the group of f1 (f2 plays the role of h)
    r.lhs_ii = s0_norm_stft(stft(f1, f2), stft(g1, g2));
    r.rhs_ii = s0_norm_stft(f1, g1) * s0_norm_stft(f2, g2);
    return r;
}

// |<f,g>| ||V_g f||_1 <= ||V_f f||_1 ||V_g g||_1  (pr:s0-Vgf-well-defined)
inline InequalityCheck stft_welldefined_bound(const Signal& f, const Signal& g) {
    return {"welldefined", std::abs(inner(f, g)) * s0_norm_stft(f, g),
            s0_norm_stft(f, f) * s0_norm_stft(g, g)};
}

}  // namespace s0kit
