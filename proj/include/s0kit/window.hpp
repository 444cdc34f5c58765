// window.hpp - reference windows for the S0 norms
//
// Every norm in this library takes its window explicitly; these builders
// supply the standard choices.

#pragma once

#include <cmath>

#include "s0kit/group.hpp"
#include "s0kit/signal.hpp"

namespace s0kit {

// 1_H as a signal on the parent group.
inline Signal subgroup_indicator(const Subgroup& h) {
    Signal s = Signal::zero(h.parent);
    for (std::size_t e : h.elements) s[e] = 1.0;
    return s;
}

// 1_H * (1_H)-dagger, computed literally; on a finite group this equals
// mu(H) 1_H, so it realizes ||f||_1 = ||f||_inf = ||f^||_1 = ||f^||_inf = 1
// exactly when mu_G(H) = |H| w_G = 1.
struct AutocorrelationWindow {
    Signal signal;
    bool normalized_exactly;  // false when no subgroup with mu(H) = 1 was available
};

inline AutocorrelationWindow window_subgroup_autocorrelation(const Subgroup& h) {
    Signal ind = subgroup_indicator(h);
    Signal raw = convolve(ind, involution(ind));
    const Rational mass = Rational(static_cast<std::int64_t>(h.size())) * h.parent.weight;
    AutocorrelationWindow w;
    w.normalized_exactly = (mass == Rational(1, 1));
    if (w.normalized_exactly) {
        w.signal = raw;
    } else {
        // best effort: scale to ||.||_inf = 1
        w.signal = Complex(mass.inverse().to_double()) * raw;
    }
    return w;
}

// Periodization of the factor-wise Gaussian exp(-pi t^2 / n); close to its
// own Fourier transform, handy as a generic smooth window.
inline Signal window_periodized_gaussian(const GroupSpec& g) {
    Signal s = Signal::constant(g, 1.0);
    for (std::size_t idx = 0; idx < g.order(); ++idx) {
        auto coords = g.coords_of(idx);
        double v = 1.0;
        for (std::size_t j = 0; j < g.dim(); ++j) {
            const double n = g.factors[j];
            double acc = 0.0;
            for (int k = -4; k <= 4; ++k) {
                const double t = coords[j] + k * n;
                acc += std::exp(-kTwoPi / 2.0 * t * t / n);
            }
            v *= acc;
        }
        s[idx] = v;
    }
    return s;
}

inline Signal window_delta(const GroupSpec& g) { return Signal::delta(g); }
inline Signal window_constant(const GroupSpec& g) { return Signal::constant(g); }

}  // namespace s0kit
