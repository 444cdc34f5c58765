// group.hpp - finite abelian groups, duals, subgroups, quotients and the
// system of canonically related Haar measures.
//
// A group is an ordered list of cyclic orders n_1 x ... x n_k together with
// an exact rational weight w (Haar measure per point).  Elements are indexed
// lexicographically with the LAST factor varying fastest (row-major); every
// serialized ordering in this library follows that rule.
//
// The dual group is represented by the same factor list; the pairing is
//
//     omega(x) = exp(2 pi i sum_j x_j omega_j / n_j),
//
// and the dual weight is forced by Fourier inversion: w_dual = 1/(|G| w).

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "s0kit/rational.hpp"

namespace s0kit {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct GroupElement {
    std::vector<int> coords;
};

struct GroupSpec {
    std::vector<int> factors;
    Rational weight{1, 1};

    std::size_t order() const {
        std::size_t n = 1;
        for (int f : factors) n *= static_cast<std::size_t>(f);
        return n;
    }

    std::size_t dim() const { return factors.size(); }

    bool same_factors(const GroupSpec& other) const { return factors == other.factors; }

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.factors == b.factors && a.weight == b.weight;
    }
    friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }

    void validate() const {
        if (factors.empty()) throw std::invalid_argument("GroupSpec: empty factor list");
        for (int f : factors)
            if (f < 1) throw std::invalid_argument("GroupSpec: factor < 1");
        if (!weight.positive()) throw std::invalid_argument("GroupSpec: weight must be positive");
    }

    std::vector<int> coords_of(std::size_t index) const {
        std::vector<int> c(factors.size());
        for (std::size_t j = factors.size(); j-- > 0;) {
            c[j] = static_cast<int>(index % static_cast<std::size_t>(factors[j]));
            index /= static_cast<std::size_t>(factors[j]);
        }
        return c;
    }

    std::size_t index_of(const std::vector<int>& coords) const {
        if (coords.size() != factors.size())
            throw std::invalid_argument("GroupSpec: coordinate/factor length mismatch");
        std::size_t idx = 0;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            int c = coords[j] % factors[j];
            if (c < 0) c += factors[j];
            idx = idx * static_cast<std::size_t>(factors[j]) + static_cast<std::size_t>(c);
        }
        return idx;
    }

    std::size_t index_of(const GroupElement& e) const { return index_of(e.coords); }

    GroupElement element(std::size_t index) const { return GroupElement{coords_of(index)}; }

    std::size_t add(std::size_t a, std::size_t b) const {
        std::size_t idx = 0;
        // walk both indices factor by factor, most significant first
        std::size_t ra = a, rb = b;
        std::vector<int> ca(factors.size()), cb(factors.size());
        for (std::size_t j = factors.size(); j-- > 0;) {
            const auto f = static_cast<std::size_t>(factors[j]);
            ca[j] = static_cast<int>(ra % f); ra /= f;
            cb[j] = static_cast<int>(rb % f); rb /= f;
        }
        for (std::size_t j = 0; j < factors.size(); ++j)
            idx = idx * static_cast<std::size_t>(factors[j]) +
                  static_cast<std::size_t>((ca[j] + cb[j]) % factors[j]);
        return idx;
    }

    std::size_t neg(std::size_t a) const {
        std::size_t idx = 0;
        std::vector<int> c = coords_of(a);
        for (std::size_t j = 0; j < factors.size(); ++j)
            idx = idx * static_cast<std::size_t>(factors[j]) +
                  static_cast<std::size_t>((factors[j] - c[j]) % factors[j]);
        return idx;
    }

    std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }

    // lcm of the factor orders; character phases are exact multiples of 1/lcm.
    std::int64_t phase_lcm() const {
        std::int64_t l = 1;
        for (int f : factors) l = std::lcm(l, static_cast<std::int64_t>(f));
        return l;
    }

    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j) s += "x";
            s += std::to_string(factors[j]);
        }
        if (!(weight == Rational(1, 1))) s += "@" + weight.str();
        return s;
    }

    // Parses "n1xn2x...xnk" with optional "@p/q" weight suffix.
    static GroupSpec parse(const std::string& text) {
        GroupSpec g;
        std::string body = text;
        auto at = text.find('@');
        if (at != std::string::npos) {
            g.weight = Rational::parse(text.substr(at + 1));
            body = text.substr(0, at);
        }
        std::size_t pos = 0;
        while (pos <= body.size()) {
            auto x = body.find('x', pos);
            std::string tok = body.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
            try {
                g.factors.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("GroupSpec: cannot parse '" + text + "'");
            }
            if (x == std::string::npos) break;
            pos = x + 1;
        }
        g.validate();
        return g;
    }
};

// Dual measure forced by Fourier inversion: w_dual = 1/(|G| w).
inline GroupSpec dual_group(const GroupSpec& g) {
    return GroupSpec{g.factors, (Rational(static_cast<std::int64_t>(g.order())) * g.weight).inverse()};
}

// G x G^ with the product weight w * w_dual = 1/|G|.  Phase points (x, omega)
// are indexed as x * |G| + omega.
inline GroupSpec phase_plane(const GroupSpec& g) {
    GroupSpec p;
    p.factors = g.factors;
    p.factors.insert(p.factors.end(), g.factors.begin(), g.factors.end());
    p.weight = g.weight * dual_group(g).weight;
    return p;
}

struct PhasePoint {
    GroupElement x;
    GroupElement omega;
};

// omega(x) as a unit complex number.  The phase x_j omega_j / n_j is summed
// exactly over a common denominator before the single trig call.
inline Complex character_value(const GroupSpec& g, std::size_t omega, std::size_t x) {
    const std::int64_t L = g.phase_lcm();
    std::vector<int> cw = g.coords_of(omega), cx = g.coords_of(x);
    std::int64_t t = 0;
    for (std::size_t j = 0; j < g.factors.size(); ++j) {
        const std::int64_t n = g.factors[j];
        t += ((static_cast<std::int64_t>(cw[j]) * cx[j]) % n) * (L / n);
    }
    t %= L;
    return std::polar(1.0, kTwoPi * static_cast<double>(t) / static_cast<double>(L));
}

inline Complex character_value(const GroupElement& omega, const GroupElement& x,
                               const GroupSpec& g) {
    if (omega.coords.size() != x.coords.size() || omega.coords.size() != g.factors.size())
        throw std::invalid_argument("character_value: mismatched factor lists");
    return character_value(g, g.index_of(omega), g.index_of(x));
}

// Exact test omega(x) == 1 in integer arithmetic.
inline bool character_is_trivial(const GroupSpec& g, std::size_t omega, std::size_t x) {
    const std::int64_t L = g.phase_lcm();
    std::vector<int> cw = g.coords_of(omega), cx = g.coords_of(x);
    std::int64_t t = 0;
    for (std::size_t j = 0; j < g.factors.size(); ++j) {
        const std::int64_t n = g.factors[j];
        t += ((static_cast<std::int64_t>(cw[j]) * cx[j]) % n) * (L / n);
    }
    return t % L == 0;
}

// Dense character table C[omega * |G| + x] = omega(x); built once per hot loop.
inline std::vector<Complex> character_matrix(const GroupSpec& g) {
    const std::size_t n = g.order();
    const std::int64_t L = g.phase_lcm();
    std::vector<Complex> roots(static_cast<std::size_t>(L));
    for (std::int64_t k = 0; k < L; ++k)
        roots[static_cast<std::size_t>(k)] =
            std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(L));
    std::vector<Complex> table(n * n);
    std::vector<std::vector<int>> coords(n);
    for (std::size_t i = 0; i < n; ++i) coords[i] = g.coords_of(i);
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t x = 0; x < n; ++x) {
            std::int64_t t = 0;
            for (std::size_t j = 0; j < g.factors.size(); ++j) {
                const std::int64_t nj = g.factors[j];
                t += ((static_cast<std::int64_t>(coords[w][j]) * coords[x][j]) % nj) * (L / nj);
            }
            table[w * n + x] = roots[static_cast<std::size_t>(t % L)];
        }
    return table;
}

struct Subgroup {
    GroupSpec parent;
    std::vector<std::size_t> elements;  // sorted element indices, 0 included
    std::vector<GroupElement> generators;
    Rational weight{1, 1};

    std::size_t size() const { return elements.size(); }

    bool contains(std::size_t idx) const {
        return std::binary_search(elements.begin(), elements.end(), idx);
    }

    // position of idx in the sorted element list, or npos
    std::size_t position(std::size_t idx) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), idx);
        if (it == elements.end() || *it != idx) return static_cast<std::size_t>(-1);
        return static_cast<std::size_t>(it - elements.begin());
    }

    void verify() const {
        if (elements.empty() || elements.front() != 0)
            throw std::invalid_argument("Subgroup: identity missing");
        for (std::size_t a : elements) {
            if (!contains(parent.neg(a))) throw std::invalid_argument("Subgroup: not closed under negation");
            for (std::size_t b : elements)
                if (!contains(parent.add(a, b)))
                    throw std::invalid_argument("Subgroup: not closed under addition");
        }
        if (parent.order() % elements.size() != 0)
            throw std::invalid_argument("Subgroup: |H| does not divide |G|");
    }
};

// Breadth-first closure of the generating set; the minimal subgroup
// containing gens.  Weight defaults to counting measure.
inline Subgroup subgroup_from_generators(const GroupSpec& g, const std::vector<GroupElement>& gens,
                                         Rational weight = Rational(1, 1)) {
    std::set<std::size_t> closed{0};
    std::vector<std::size_t> frontier{0};
    std::vector<std::size_t> gen_idx;
    gen_idx.reserve(gens.size());
    for (const auto& e : gens) gen_idx.push_back(g.index_of(e));
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t a : frontier)
            for (std::size_t s : gen_idx) {
                std::size_t b = g.add(a, s);
                if (closed.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }
    Subgroup h;
    h.parent = g;
    h.elements.assign(closed.begin(), closed.end());
    h.generators = gens;
    h.weight = weight;
    h.verify();
    return h;
}

inline Subgroup trivial_subgroup(const GroupSpec& g) { return subgroup_from_generators(g, {}); }

inline Subgroup full_subgroup(const GroupSpec& g) {
    std::vector<GroupElement> gens;
    for (std::size_t j = 0; j < g.dim(); ++j) {
        std::vector<int> c(g.dim(), 0);
        c[j] = 1;
        gens.push_back(GroupElement{c});
    }
    return subgroup_from_generators(g, gens);
}

// Greedy small generating set for a given element set (for display only).
inline std::vector<GroupElement> greedy_generators(const GroupSpec& g,
                                                   const std::vector<std::size_t>& elements) {
    std::vector<GroupElement> gens;
    Subgroup cur = trivial_subgroup(g);
    for (std::size_t e : elements) {
        if (cur.contains(e)) continue;
        gens.push_back(g.element(e));
        cur = subgroup_from_generators(g, gens);
        if (cur.size() == elements.size()) break;
    }
    return gens;
}

// H-perp = { gamma in G^ : gamma(h) = 1 for all h in H }, weight
// 1/(|G/H| w_{G/H}) per the canonical measure relations.
inline Subgroup annihilator(const Subgroup& h) {
    const GroupSpec& g = h.parent;
    GroupSpec gd = dual_group(g);
    Subgroup ann;
    ann.parent = gd;
    for (std::size_t gamma = 0; gamma < gd.order(); ++gamma) {
        bool trivial = true;
        for (std::size_t e : h.elements)
            if (!character_is_trivial(g, gamma, e)) { trivial = false; break; }
        if (trivial) ann.elements.push_back(gamma);
    }
    const auto quot_count = static_cast<std::int64_t>(g.order() / h.size());
    const Rational w_quot = g.weight / h.weight;
    ann.weight = (Rational(quot_count) * w_quot).inverse();
    ann.generators = greedy_generators(gd, ann.elements);
    ann.verify();
    return ann;
}

struct QuotientView {
    GroupSpec parent;
    Subgroup subgroup;
    std::vector<std::size_t> coset_reps;  // lexicographically minimal representatives
    std::vector<std::size_t> coset_of;    // element index -> coset index
    Rational weight{1, 1};

    std::size_t size() const { return coset_reps.size(); }
};

inline QuotientView quotient(const GroupSpec& g, const Subgroup& h) {
    if (!(h.parent.factors == g.factors))
        throw std::invalid_argument("quotient: subgroup belongs to a different group");
    QuotientView q;
    q.parent = g;
    q.subgroup = h;
    q.coset_of.assign(g.order(), static_cast<std::size_t>(-1));
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (q.coset_of[x] != static_cast<std::size_t>(-1)) continue;
        // x is the smallest unassigned index, hence the lex-minimal representative
        const std::size_t c = q.coset_reps.size();
        q.coset_reps.push_back(x);
        for (std::size_t e : h.elements) q.coset_of[g.add(x, e)] = c;
    }
    q.weight = g.weight / h.weight;
    if (q.coset_reps.size() * h.size() != g.order())
        throw std::logic_error("quotient: cosets do not partition G");
    return q;
}

// All canonically related weights for the pair (G, H).
struct MeasureSystem {
    Rational w_group;          // w_G
    Rational w_subgroup;       // w_H
    Rational w_quotient;       // w_{G/H} = w_G / w_H
    Rational w_dual;           // w_{G^} = 1/(|G| w_G)
    Rational w_annihilator;    // w_{H-perp} = 1/(|G/H| w_{G/H})
    Rational w_dual_quotient;  // w_{G^/H-perp} = 1/(|H| w_H)
};

inline MeasureSystem derive_measures(const GroupSpec& g, const Subgroup& h) {
    MeasureSystem m;
    m.w_group = g.weight;
    m.w_subgroup = h.weight;
    m.w_quotient = g.weight / h.weight;
    m.w_dual = (Rational(static_cast<std::int64_t>(g.order())) * g.weight).inverse();
    const auto quot_count = static_cast<std::int64_t>(g.order() / h.size());
    m.w_annihilator = (Rational(quot_count) * m.w_quotient).inverse();
    m.w_dual_quotient = (Rational(static_cast<std::int64_t>(h.size())) * h.weight).inverse();
    // consistency: w_{G^} = w_{H-perp} * w_{G^/H-perp}, exact
    if (m.w_dual != m.w_annihilator * m.w_dual_quotient)
        throw std::logic_error("derive_measures: canonical relation violated");
    return m;
}

// All subgroups of G, enumerated by closing every subset of cyclic
// generators; intended for the small test groups only.
inline std::vector<Subgroup> all_subgroups(const GroupSpec& g) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<Subgroup> out;
    const std::size_t n = g.order();
    std::vector<std::vector<std::size_t>> element_sets{{0}};
    seen.insert({0});
    // grow by repeatedly adjoining single elements; fine for |G| <= a few hundred
    for (std::size_t grow = 0; grow < element_sets.size(); ++grow) {
        auto base = element_sets[grow];
        for (std::size_t e = 1; e < n; ++e) {
            std::set<std::size_t> cl(base.begin(), base.end());
            std::vector<std::size_t> frontier{e};
            cl.insert(e);
            while (!frontier.empty()) {
                std::vector<std::size_t> next;
                for (std::size_t a : frontier) {
                    for (std::size_t b : std::vector<std::size_t>(cl.begin(), cl.end())) {
                        std::size_t s = g.add(a, b);
                        if (cl.insert(s).second) next.push_back(s);
                    }
                    std::size_t ng = g.neg(a);
                    if (cl.insert(ng).second) next.push_back(ng);
                }
                frontier = std::move(next);
            }
            std::vector<std::size_t> key(cl.begin(), cl.end());
            if (seen.insert(key).second) element_sets.push_back(key);
        }
    }
    for (const auto& key : element_sets) {
        Subgroup h;
        h.parent = g;
        h.elements = key;
        h.weight = Rational(1, 1);
        h.generators = greedy_generators(g, key);
        h.verify();
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements < b.elements;
    });
    return out;
}

}  // namespace s0kit
