// stft.hpp - the short-time Fourier transform on G, its adjoint, and the
// orthogonality relations.
//
// V_g f(x, omega) = <f, E_omega T_x g> = F_2 tau_a (f (x) conj(g)) (x, omega).
//
// Plane signals live on G x G^ (see phase_plane); the point (x, omega) sits
// at index x * |G| + omega.

#pragma once

#include "s0kit/signal.hpp"

namespace s0kit {

// Inner-product path: V_g f(x, omega) = sum_s f(s) conj(omega(s)) conj(g(s-x)) w_G.
inline Signal stft(const Signal& f, const Signal& g) {
    require_same_group(f, g, "stft");
    const GroupSpec& gr = f.group;
    const std::size_t n = gr.order();
    const double w = gr.weight.to_double();
    const std::vector<Complex> chars = character_matrix(gr);
    Signal plane = Signal::zero(phase_plane(gr));
    std::vector<Complex> windowed(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t s = 0; s < n; ++s) windowed[s] = f[s] * std::conj(g[gr.sub(s, x)]) * w;
        for (std::size_t omega = 0; omega < n; ++omega) {
            Complex acc = 0.0;
            for (std::size_t s = 0; s < n; ++s) acc += windowed[s] * std::conj(chars[omega * n + s]);
            plane[x * n + omega] = acc;
        }
    }
    return plane;
}

// Transform path: F_2 tau_a (f (x) conj(g)); agrees with stft() to roundoff
// and serves as its independent cross-check.
inline Signal stft_via_transform(const Signal& f, const Signal& g) {
    require_same_group(f, g, "stft_via_transform");
    Signal prod = tensor(f, conjugate(g));
    Signal twisted = asym_coord(prod, f.group);
    return partial_fourier_2(twisted, f.group, f.group);
}

// V_g* F = sum_chi F(chi) pi(chi) g  w_{GxG^}
inline Signal stft_adjoint(const Signal& F, const Signal& g) {
    const GroupSpec& gr = g.group;
    if (F.group != phase_plane(gr))
        throw std::invalid_argument("stft_adjoint: plane signal is not on G x G^");
    const std::size_t n = gr.order();
    const double wp = F.group.weight.to_double();
    const std::vector<Complex> chars = character_matrix(gr);
    Signal out = Signal::zero(gr);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t omega = 0; omega < n; ++omega) {
            const Complex c = F[x * n + omega] * wp;
            if (c == Complex(0.0)) continue;
            for (std::size_t s = 0; s < n; ++s)
                out[s] += c * chars[omega * n + s] * g[gr.sub(s, x)];
        }
    return out;
}

// phase-point difference on G x G^, componentwise
inline std::size_t plane_sub(const GroupSpec& g, std::size_t chi, std::size_t nu) {
    const std::size_t n = g.order();
    return g.sub(chi / n, nu / n) * n + g.sub(chi % n, nu % n);
}

// <V_{g1} f1, V_{g2} f2>_{L^2(G x G^)} = <g2, g1> <f1, f2>; returns both sides.
inline std::pair<Complex, Complex> moyal_orthogonality(const Signal& f1, const Signal& f2,
                                                       const Signal& g1, const Signal& g2) {
    Complex lhs = inner(stft(f1, g1), stft(f2, g2));
    Complex rhs = inner(g2, g1) * inner(f1, f2);
    return {lhs, rhs};
}

// |<g1,g2>| |V_{f2}f1(nu)|  <=  int |V_{g1}f1(chi) V_{g2}f2(chi - nu)| dchi;
// returns (lhs, rhs).
inline std::pair<double, double> stft_lemma_inequality(const Signal& f1, const Signal& f2,
                                                       const Signal& g1, const Signal& g2,
                                                       std::size_t nu) {
    const GroupSpec& gr = f1.group;
    Signal vf = stft(f1, f2);
    const double lhs = std::abs(inner(g1, g2)) * std::abs(vf[nu]);
    Signal a = stft(f1, g1), b = stft(f2, g2);
    const double wp = a.group.weight.to_double();
    double rhs = 0.0;
    for (std::size_t chi = 0; chi < a.size(); ++chi)
        rhs += std::abs(a[chi] * b[plane_sub(gr, chi, nu)]) * wp;
    return {lhs, rhs};
}

}  // namespace s0kit
