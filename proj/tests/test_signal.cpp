#include <catch2/catch_amalgamated.hpp>

#include "s0kit/rng.hpp"
#include "s0kit/signal.hpp"

using namespace s0kit;

namespace {
GroupSpec zn(int n, Rational w = Rational(1, 1)) { return GroupSpec{{n}, w}; }

Signal make(const GroupSpec& g, std::initializer_list<Complex> vals) {
    return Signal(g, std::vector<Complex>(vals));
}
}  // namespace

TEST_CASE("signal construction validates") {
    CHECK_THROWS_AS(Signal(zn(4), {1.0, 2.0}), std::invalid_argument);
    std::vector<Complex> bad{1.0, std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0};
    CHECK_THROWS_AS(Signal(zn(4), bad), std::invalid_argument);
}

TEST_CASE("translate") {
    Signal f = make(zn(4), {1.0, 2.0, 0.0, -1.0});
    CHECK(max_abs_diff(translate(f, std::size_t(0)), f) == 0.0);
    Signal t = translate(f, std::size_t(1));
    CHECK(t[0] == Complex(-1.0));
    CHECK(t[1] == Complex(1.0));
    CHECK(t[2] == Complex(2.0));
    CHECK(t[3] == Complex(0.0));
    SECTION("T_x T_y = T_{x+y} and norms preserved, random f on Z_6") {
        SignalRng rng(7);
        Signal r = rng.signal(zn(6));
        for (std::size_t x : {std::size_t(1), std::size_t(4)})
            for (std::size_t y : {std::size_t(2), std::size_t(5)}) {
                CHECK(max_abs_diff(translate(translate(r, y), x),
                                   translate(r, zn(6).add(x, y))) < 1e-15);
            }
        for (auto p : {Exponent::p(1), Exponent::p(2), Exponent::inf()})
            CHECK(rel_error(lp_norm(translate(r, std::size_t(3)), p), lp_norm(r, p)) < 1e-14);
    }
    SECTION("group mismatch rejected") {
        CHECK_THROWS_AS(translate(f, GroupElement{{1, 0}}), std::invalid_argument);
    }
}

TEST_CASE("modulate") {
    Signal ones = Signal::constant(zn(4));
    CHECK(max_abs_diff(modulate(ones, std::size_t(0)), ones) == 0.0);
    Signal m = modulate(ones, std::size_t(1));
    CHECK(std::abs(m[0] - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(m[1] - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(m[2] - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(m[3] - Complex(0, -1)) < 1e-15);
    SECTION("commutation E_omega T_x = omega(x) T_x E_omega") {
        SignalRng rng(11);
        GroupSpec g{{2, 3}, Rational(1, 1)};
        Signal f = rng.signal(g);
        for (std::size_t omega = 0; omega < 6; ++omega)
            for (std::size_t x = 0; x < 6; ++x) {
                Signal lhs = modulate(translate(f, x), omega);
                Signal rhs = character_value(g, omega, x) * translate(modulate(f, omega), x);
                CHECK(max_abs_diff(lhs, rhs) < 1e-14);
            }
    }
}

TEST_CASE("tf_shift") {
    GroupSpec g4 = zn(4);
    Signal d = Signal::delta(g4);
    SECTION("identity at chi = (0,0)") {
        CHECK(max_abs_diff(tf_shift(d, 0, 0), d) == 0.0);
    }
    SECTION("pi(1,1) delta_0 = (0, i, 0, 0)") {
        Signal s = tf_shift(d, 1, 1);
        CHECK(std::abs(s[1] - Complex(0, 1)) < 1e-15);
        CHECK(std::abs(s[0]) + std::abs(s[2]) + std::abs(s[3]) < 1e-15);
    }
    SECTION("unitarity over 50 random (f, chi)") {
        SignalRng rng(3);
        for (int k = 0; k < 50; ++k) {
            Signal f = rng.signal(g4);
            std::size_t x = rng.index(4), w = rng.index(4);
            CHECK(rel_error(l2_norm(tf_shift(f, x, w)), l2_norm(f)) < 1e-13);
        }
    }
}

TEST_CASE("reflect / involution / conjugate") {
    CHECK(max_abs_diff(reflect(Signal::delta(zn(5))), Signal::delta(zn(5))) == 0.0);
    Signal f = make(zn(3), {1.0, Complex(0, 2), 3.0});
    Signal r = reflect(f);
    CHECK(r[0] == Complex(1.0));
    CHECK(r[1] == Complex(3.0));
    CHECK(r[2] == Complex(0, 2));
    SECTION("composition laws") {
        SignalRng rng(5);
        Signal x = rng.signal(zn(6));
        CHECK(max_abs_diff(involution(x), conjugate(reflect(x))) == 0.0);
        CHECK(max_abs_diff(involution(involution(x)), x) == 0.0);
    }
}

TEST_CASE("convolution") {
    GroupSpec g2 = zn(2);
    Signal f = make(g2, {1.0, 1.0});
    Signal c = convolve(f, f);
    CHECK(std::abs(c[0] - Complex(2.0)) < 1e-15);
    CHECK(std::abs(c[1] - Complex(2.0)) < 1e-15);
    SECTION("delta is the unit under counting measure") {
        SignalRng rng(2);
        Signal x = rng.signal(zn(6));
        CHECK(max_abs_diff(convolve(Signal::delta(zn(6)), x), x) < 1e-15);
    }
    SECTION("convolution theorem, both directions") {
        SignalRng rng(9);
        GroupSpec g{{2, 4}, Rational(2, 3)};
        Signal a = rng.signal(g), b = rng.signal(g);
        CHECK(max_abs_diff(fourier(convolve(a, b)), multiply(fourier(a), fourier(b))) < 1e-12);
        CHECK(max_abs_diff(fourier(multiply(a, b)), convolve(fourier(a), fourier(b))) < 1e-12);
    }
    SECTION("Young's inequality for (1,1,1), (1,2,2), (2,2,inf)") {
        SignalRng rng(13);
        GroupSpec g = zn(8, Rational(1, 3));
        for (int k = 0; k < 20; ++k) {
            Signal a = rng.signal(g), b = rng.signal(g);
            Signal c2 = convolve(a, b);
            const double slack = 1e-12;
            CHECK(l1_norm(c2) <= l1_norm(a) * l1_norm(b) + slack);
            CHECK(l2_norm(c2) <= l1_norm(a) * l2_norm(b) + slack);
            CHECK(linf_norm(c2) <= l2_norm(a) * l2_norm(b) + slack);
        }
    }
}

TEST_CASE("inner products and norms") {
    GroupSpec g4 = zn(4);
    CHECK(std::abs(inner(Signal::delta(g4), Signal::delta(g4)) - Complex(1.0)) < 1e-15);
    GroupSpec gw = zn(4, Rational(2, 5));
    CHECK(std::abs(inner(Signal::delta(gw), Signal::delta(gw)) - Complex(0.4)) < 1e-15);
    Signal f = make(g4, {1.0, 2.0, 0.0, -1.0});
    CHECK(rel_error(l1_norm(f), 4.0) < 1e-15);
    CHECK(rel_error(linf_norm(f), 2.0) < 1e-15);
    SECTION("a-norm of delta is 1 on Z_N counting") {
        for (int n : {2, 5, 12}) CHECK(rel_error(a_norm(Signal::delta(zn(n))), 1.0) < 1e-13);
    }
    SECTION("Hoelder interpolation bound") {
        SignalRng rng(21);
        GroupSpec g{{3, 4}, Rational(1, 2)};
        for (int k = 0; k < 20; ++k) {
            Signal x = rng.signal(g);
            for (double p : {1.0, 1.5, 2.0, 4.0}) {
                double bound = std::pow(l1_norm(x), 1.0 / p) * std::pow(linf_norm(x), 1.0 - 1.0 / p);
                CHECK(lp_norm(x, Exponent::p(p)) <= bound * (1 + 1e-12));
            }
        }
    }
}

TEST_CASE("fourier transform") {
    SECTION("delta has flat spectrum") {
        Signal fhat = fourier(Signal::delta(zn(6)));
        for (std::size_t w = 0; w < 6; ++w) CHECK(std::abs(fhat[w] - Complex(1.0)) < 1e-14);
    }
    SECTION("two-point example") {
        Signal f = make(zn(2), {1.0, -1.0});
        Signal fhat = fourier(f);
        CHECK(std::abs(fhat[0]) < 1e-15);
        CHECK(std::abs(fhat[1] - Complex(2.0)) < 1e-15);
    }
    SECTION("round trip and Parseval on random signals, |G| <= 144") {
        SignalRng rng(42);
        std::vector<GroupSpec> groups{zn(4), zn(6, Rational(1, 6)), GroupSpec{{2, 3}, Rational(1, 1)},
                                      GroupSpec{{2, 4, 3}, Rational(5, 7)}, zn(144)};
        for (const auto& g : groups)
            for (int k = 0; k < 20; ++k) {
                Signal f = rng.signal(g);
                Signal back = inverse_fourier(fourier(f), g);
                CHECK(max_abs_diff(back, f) / std::max(1e-300, linf_norm(f)) < 1e-12);
                CHECK(rel_error(l2_norm(fourier(f)), l2_norm(f)) < 1e-12);
            }
    }
    SECTION("commutation with shifts: F T_x = E_{-x} F and F E_omega = T_omega F") {
        SignalRng rng(8);
        GroupSpec g{{2, 3}, Rational(1, 2)};
        Signal f = rng.signal(g);
        GroupSpec gd = dual_group(g);
        for (std::size_t x = 0; x < g.order(); ++x) {
            CHECK(max_abs_diff(fourier(translate(f, x)), modulate(fourier(f), gd.neg(x))) < 1e-13);
            CHECK(max_abs_diff(fourier(modulate(f, x)), translate(fourier(f), x)) < 1e-13);
        }
    }
    SECTION("F(f-dagger) = conj(F f) and F(f^r) = F^{-1} f") {
        SignalRng rng(14);
        GroupSpec g = zn(5, Rational(3, 2));
        Signal f = rng.signal(g);
        CHECK(max_abs_diff(fourier(involution(f)), conjugate(fourier(f))) < 1e-13);
        // F(f^r) = (F f)^r; with self-dual measures this is the F^{-1} f identity
        CHECK(max_abs_diff(fourier(reflect(f)), reflect(fourier(f))) < 1e-13);
        GroupSpec sd = zn(9, Rational(1, 3));  // w = 1/sqrt(|G|): self-dual
        REQUIRE(dual_group(sd) == sd);
        Signal u = rng.signal(sd);
        CHECK(max_abs_diff(fourier(reflect(u)), inverse_fourier(u, sd)) < 1e-13);
    }
}

TEST_CASE("partial fourier transforms") {
    GroupSpec g1 = zn(2), g2 = zn(3, Rational(1, 3));
    SignalRng rng(31);
    SECTION("separability: F2(f x g) = f x Fg") {
        Signal f = rng.signal(g1), g = rng.signal(g2);
        CHECK(max_abs_diff(partial_fourier_2(tensor(f, g), g1, g2), tensor(f, fourier(g))) < 1e-13);
        CHECK(max_abs_diff(partial_fourier_1(tensor(f, g), g1, g2), tensor(fourier(f), g)) < 1e-13);
    }
    SECTION("delta example on Z_2 x Z_2") {
        GroupSpec h = zn(2);
        Signal d = Signal::delta(tensor(Signal::delta(h), Signal::delta(h)).group);
        Signal out = partial_fourier_2(d, h, h);
        // delta_{(0,0)} -> delta_0(x) * 1(omega)
        CHECK(std::abs(out[0] - Complex(1.0)) < 1e-15);
        CHECK(std::abs(out[1] - Complex(1.0)) < 1e-15);
        CHECK(std::abs(out[2]) + std::abs(out[3]) < 1e-15);
    }
    SECTION("F1 after F2 equals the full transform") {
        Signal F = rng.signal(tensor(rng.signal(g1), rng.signal(g2)).group);
        Signal two_step = partial_fourier_1(partial_fourier_2(F, g1, g2), g1, dual_group(g2));
        Signal full = fourier(F);
        CHECK(max_abs_diff(two_step, full) < 1e-12);
    }
}

TEST_CASE("symplectic fourier transform") {
    GroupSpec g2 = zn(2);
    SECTION("constant output from delta") {
        Signal F = Signal::delta(phase_plane(g2));
        Signal out = symplectic_fourier(F, g2);
        for (std::size_t i = 0; i < out.size(); ++i) CHECK(std::abs(out[i] - Complex(0.5)) < 1e-14);
    }
    SECTION("self-inverse and unitary on random input") {
        SignalRng rng(17);
        for (const auto& g : {zn(3), zn(4, Rational(1, 4))}) {
            Signal F = rng.signal(phase_plane(g));
            CHECK(max_abs_diff(symplectic_fourier(symplectic_fourier(F, g), g), F) < 1e-12);
            CHECK(rel_error(l2_norm(symplectic_fourier(F, g)), l2_norm(F)) < 1e-12);
        }
    }
}

TEST_CASE("tensor products") {
    GroupSpec g2 = zn(2);
    SECTION("delta x delta") {
        Signal t = tensor(Signal::delta(g2), Signal::delta(g2));
        CHECK(t[0] == Complex(1.0));
        CHECK(std::abs(t[1]) + std::abs(t[2]) + std::abs(t[3]) == 0.0);
    }
    SECTION("(1,2) x (3,4) = (3,4,6,8)") {
        Signal t = tensor(make(g2, {1.0, 2.0}), make(g2, {3.0, 4.0}));
        CHECK(t[0] == Complex(3.0));
        CHECK(t[1] == Complex(4.0));
        CHECK(t[2] == Complex(6.0));
        CHECK(t[3] == Complex(8.0));
    }
    SECTION("norm multiplicativity") {
        SignalRng rng(23);
        Signal a = rng.signal(zn(3, Rational(1, 2))), b = rng.signal(zn(4, Rational(3, 1)));
        Signal t = tensor(a, b);
        for (auto p : {Exponent::p(1), Exponent::p(2), Exponent::inf()})
            CHECK(rel_error(lp_norm(t, p), lp_norm(a, p) * lp_norm(b, p)) < 1e-13);
    }
}

TEST_CASE("asymmetric coordinate transform") {
    GroupSpec g2 = zn(2);
    SECTION("index chase: delta_{(1,0)} -> delta_{(1,1)}") {
        Signal F = Signal::zero(tensor(Signal::zero(g2), Signal::zero(g2)).group);
        F[2] = 1.0;  // (1, 0)
        Signal t = asym_coord(F, g2);
        CHECK(t[3] == Complex(1.0));  // (1, 1)
        CHECK(std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]) == 0.0);
    }
    SECTION("inverse and isometry") {
        SignalRng rng(19);
        GroupSpec g{{2, 3}, Rational(1, 1)};
        Signal F = rng.signal(tensor(rng.signal(g), rng.signal(g)).group);
        CHECK(max_abs_diff(asym_coord_inverse(asym_coord(F, g), g), F) == 0.0);
        CHECK(max_abs_diff(asym_coord(asym_coord_inverse(F, g), g), F) == 0.0);
        CHECK(rel_error(l2_norm(asym_coord(F, g)), l2_norm(F)) < 1e-14);
    }
}
