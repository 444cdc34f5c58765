// group_view.hpp - a concrete finite abelian group presented by tables:
// element list, addition, and a dual element list with character values.
//
// Subgroups H and quotients G/H are groups in their own right but are not
// re-factored into cyclic form (no Smith normal form); instead they are
// viewed through the parent:
//   - H:    elements are H's sorted indices; the dual is G^/H-perp, a
//           character of H being the restriction of a G^-character with two
//           characters identified when they differ by an element of H-perp.
//   - G/H:  elements are the lex-minimal coset representatives; the dual is
//           H-perp evaluated at representatives.
// Weights come from derive_measures, so Fourier inversion on a view is exact.

#pragma once

#include "s0kit/group.hpp"
#include "s0kit/signal.hpp"

namespace s0kit {

struct GroupView {
    std::size_t n = 0;              // element count (= dual element count)
    Rational weight{1, 1};          // Haar weight per point
    Rational dual_weight{1, 1};     // weight of the dual view
    std::vector<std::size_t> add_table;   // n*n
    std::vector<std::size_t> neg_table;   // n
    std::vector<Complex> chars;           // chars[omega*n + x]
    std::string label;

    std::size_t add(std::size_t a, std::size_t b) const { return add_table[a * n + b]; }
    std::size_t sub(std::size_t a, std::size_t b) const { return add_table[a * n + neg_table[b]]; }
    std::size_t neg(std::size_t a) const { return neg_table[a]; }
    Complex chi(std::size_t omega, std::size_t x) const { return chars[omega * n + x]; }
};

inline GroupView view_of_group(const GroupSpec& g) {
    GroupView v;
    v.n = g.order();
    v.weight = g.weight;
    v.dual_weight = dual_group(g).weight;
    v.add_table.resize(v.n * v.n);
    v.neg_table.resize(v.n);
    for (std::size_t a = 0; a < v.n; ++a) {
        v.neg_table[a] = g.neg(a);
        for (std::size_t b = 0; b < v.n; ++b) v.add_table[a * v.n + b] = g.add(a, b);
    }
    v.chars = character_matrix(g);
    v.label = g.str();
    return v;
}

// H with its dual realized as G^/H-perp.
inline GroupView view_of_subgroup(const Subgroup& h) {
    const GroupSpec& g = h.parent;
    GroupView v;
    v.n = h.size();
    v.weight = h.weight;
    const MeasureSystem m = derive_measures(g, h);
    v.dual_weight = m.w_dual_quotient;
    v.add_table.resize(v.n * v.n);
    v.neg_table.resize(v.n);
    for (std::size_t i = 0; i < v.n; ++i) {
        v.neg_table[i] = h.position(g.neg(h.elements[i]));
        for (std::size_t j = 0; j < v.n; ++j)
            v.add_table[i * v.n + j] = h.position(g.add(h.elements[i], h.elements[j]));
    }
    const Subgroup perp = annihilator(h);
    const QuotientView dual_q = quotient(dual_group(g), perp);
    if (dual_q.size() != v.n) throw std::logic_error("view_of_subgroup: |G^/H-perp| != |H|");
    v.chars.resize(v.n * v.n);
    for (std::size_t w = 0; w < v.n; ++w) {
        const std::size_t omega = dual_q.coset_reps[w];
        for (std::size_t i = 0; i < v.n; ++i)
            v.chars[w * v.n + i] = character_value(g, omega, h.elements[i]);
    }
    v.label = "H<" + g.str() + ">";
    return v;
}

// G/H with its dual realized as H-perp.
inline GroupView view_of_quotient(const QuotientView& q) {
    const GroupSpec& g = q.parent;
    GroupView v;
    v.n = q.size();
    v.weight = q.weight;
    const MeasureSystem m = derive_measures(g, q.subgroup);
    v.dual_weight = m.w_annihilator;
    v.add_table.resize(v.n * v.n);
    v.neg_table.resize(v.n);
    for (std::size_t i = 0; i < v.n; ++i) {
        v.neg_table[i] = q.coset_of[g.neg(q.coset_reps[i])];
        for (std::size_t j = 0; j < v.n; ++j)
            v.add_table[i * v.n + j] = q.coset_of[g.add(q.coset_reps[i], q.coset_reps[j])];
    }
    const Subgroup perp = annihilator(q.subgroup);
    if (perp.size() != v.n) throw std::logic_error("view_of_quotient: |H-perp| != |G/H|");
    v.chars.resize(v.n * v.n);
    for (std::size_t w = 0; w < v.n; ++w)
        for (std::size_t i = 0; i < v.n; ++i)
            v.chars[w * v.n + i] = character_value(g, perp.elements[w], q.coset_reps[i]);
    v.label = g.str() + "/H";
    return v;
}

// A function on a view, values in the view's element order.
struct ViewSignal {
    GroupView view;
    std::vector<Complex> values;

    std::size_t size() const { return values.size(); }
    Complex operator[](std::size_t i) const { return values[i]; }
    Complex& operator[](std::size_t i) { return values[i]; }
};

inline ViewSignal view_zero(const GroupView& v) {
    return ViewSignal{v, std::vector<Complex>(v.n)};
}

inline double view_l1(const ViewSignal& f) {
    double acc = 0.0;
    const double w = f.view.weight.to_double();
    for (const auto& x : f.values) acc += std::abs(x) * w;
    return acc;
}

inline double view_linf(const ViewSignal& f) {
    double m = 0.0;
    for (const auto& x : f.values) m = std::max(m, std::abs(x));
    return m;
}

inline ViewSignal view_fourier(const ViewSignal& f) {
    const GroupView& v = f.view;
    GroupView dual = v;  // same tables; weights swap, characters conjugate-transpose
    std::swap(dual.weight, dual.dual_weight);
    ViewSignal out{dual, std::vector<Complex>(v.n)};
    const double w = v.weight.to_double();
    for (std::size_t omega = 0; omega < v.n; ++omega) {
        Complex acc = 0.0;
        for (std::size_t x = 0; x < v.n; ++x) acc += f[x] * std::conj(v.chi(omega, x));
        out[omega] = acc * w;
    }
    return out;
}

inline ViewSignal view_inverse_fourier(const ViewSignal& F, const GroupView& time_view) {
    ViewSignal out{time_view, std::vector<Complex>(time_view.n)};
    const double wd = time_view.dual_weight.to_double();
    for (std::size_t x = 0; x < time_view.n; ++x) {
        Complex acc = 0.0;
        for (std::size_t omega = 0; omega < time_view.n; ++omega)
            acc += F[omega] * time_view.chi(omega, x);
        out[x] = acc * wd;
    }
    return out;
}

// ||V_g f||_{l1} over the view's phase space, with weight w * w_dual per point.
inline double view_s0_norm(const ViewSignal& f, const ViewSignal& g) {
    const GroupView& v = f.view;
    if (g.view.n != v.n) throw std::invalid_argument("view_s0_norm: view mismatch");
    bool gz = true;
    for (const auto& x : g.values)
        if (x != Complex(0.0)) { gz = false; break; }
    if (gz) throw std::invalid_argument("view_s0_norm: zero window");
    const double w = v.weight.to_double();
    const double wp = (v.weight * v.dual_weight).to_double();
    double acc = 0.0;
    for (std::size_t x = 0; x < v.n; ++x)
        for (std::size_t omega = 0; omega < v.n; ++omega) {
            Complex ip = 0.0;
            for (std::size_t s = 0; s < v.n; ++s)
                ip += f[s] * std::conj(v.chi(omega, s) * g[v.sub(s, x)]);
            acc += std::abs(ip * w) * wp;
        }
    return acc;
}

}  // namespace s0kit
