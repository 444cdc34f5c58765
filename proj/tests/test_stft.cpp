#include <catch2/catch_amalgamated.hpp>

#include "s0kit/rng.hpp"
#include "s0kit/stft.hpp"

using namespace s0kit;

namespace {
GroupSpec zn(int n, Rational w = Rational(1, 1)) { return GroupSpec{{n}, w}; }
}  // namespace

TEST_CASE("stft basics") {
    GroupSpec g2 = zn(2);
    SECTION("zero window gives the zero plane") {
        SignalRng rng(1);
        Signal f = rng.signal(g2);
        CHECK(stft(f, Signal::zero(g2)).is_zero());
    }
    SECTION("Z_2 counting, f = g = delta_0: V(x, omega) = delta_0(x)") {
        Signal d = Signal::delta(g2);
        Signal plane = stft(d, d);
        // indices: (x, omega) at x*2 + omega
        CHECK(std::abs(plane[0] - Complex(1.0)) < 1e-15);
        CHECK(std::abs(plane[1] - Complex(1.0)) < 1e-15);
        CHECK(std::abs(plane[2]) + std::abs(plane[3]) < 1e-15);
    }
    SECTION("group mismatch rejected") {
        CHECK_THROWS_AS(stft(Signal::delta(g2), Signal::delta(zn(3))), std::invalid_argument);
    }
}

TEST_CASE("two-path stft equality") {
    SignalRng rng(10);
    for (const auto& g : {zn(4), zn(6, Rational(1, 6)), GroupSpec{{2, 3}, Rational(2, 5)}}) {
        for (int k = 0; k < 10; ++k) {
            Signal f = rng.signal(g), w = rng.signal(g);
            Signal a = stft(f, w), b = stft_via_transform(f, w);
            CHECK(max_abs_diff(a, b) / std::max(1e-300, linf_norm(a)) < 1e-10);
        }
    }
}

TEST_CASE("stft covariance |V_g(pi(nu) f)(chi)| = |V_g f(chi - nu)|") {
    SignalRng rng(12);
    GroupSpec g = zn(6);
    Signal f = rng.signal(g), w = rng.signal(g);
    Signal base = stft(f, w);
    for (std::size_t nu : {std::size_t(1), std::size_t(7), std::size_t(20)}) {
        Signal shifted = stft(tf_shift_plane_index(f, nu), w);
        for (std::size_t chi = 0; chi < shifted.size(); ++chi)
            CHECK(std::abs(std::abs(shifted[chi]) - std::abs(base[plane_sub(g, chi, nu)])) < 1e-12);
    }
}

TEST_CASE("stft adjoint") {
    SignalRng rng(22);
    GroupSpec g{{2, 3}, Rational(1, 1)};
    SECTION("zero in, zero out") {
        CHECK(stft_adjoint(Signal::zero(phase_plane(g)), Signal::delta(g)).is_zero());
    }
    SECTION("adjointness <V_g* F, h> = <F, V_g h>") {
        for (int k = 0; k < 10; ++k) {
            Signal F = rng.signal(phase_plane(g));
            Signal w = rng.signal(g), h = rng.signal(g);
            Complex lhs = inner(stft_adjoint(F, w), h);
            Complex rhs = inner(F, stft(h, w));
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
    SECTION("inversion V_h* V_g f = <h,g> f") {
        for (int k = 0; k < 10; ++k) {
            Signal f = rng.signal(g), w = rng.signal(g), h = rng.signal(g);
            Signal lhs = stft_adjoint(stft(f, w), h);
            Signal rhs = inner(h, w) * f;
            CHECK(max_abs_diff(lhs, rhs) < 1e-12);
        }
    }
}

TEST_CASE("moyal orthogonality") {
    GroupSpec g4 = zn(4);
    SECTION("all deltas: both sides w_G^2 = 1") {
        Signal d = Signal::delta(g4);
        auto [lhs, rhs] = moyal_orthogonality(d, d, d, d);
        CHECK(std::abs(lhs - Complex(1.0)) < 1e-13);
        CHECK(std::abs(rhs - Complex(1.0)) < 1e-13);
    }
    SECTION("orthogonal signals give zero") {
        Signal a = Signal::delta(g4, 0), b = Signal::delta(g4, 1);
        SignalRng rng(4);
        Signal w1 = rng.signal(g4), w2 = rng.signal(g4);
        auto [lhs, rhs] = moyal_orthogonality(a, b, w1, w2);
        CHECK(std::abs(rhs) < 1e-15);
        CHECK(std::abs(lhs) < 1e-12);
    }
    SECTION("50 random quadruples on Z_2 x Z_5") {
        GroupSpec g{{2, 5}, Rational(1, 2)};
        SignalRng rng(55);
        for (int k = 0; k < 50; ++k) {
            auto [lhs, rhs] = moyal_orthogonality(rng.signal(g), rng.signal(g), rng.signal(g),
                                                  rng.signal(g));
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("stft lemma inequality") {
    GroupSpec g4 = zn(4);
    SECTION("orthogonal windows: lhs = 0") {
        SignalRng rng(6);
        Signal g1 = Signal::delta(g4, 0), g2 = Signal::delta(g4, 2);
        auto [lhs, rhs] = stft_lemma_inequality(rng.signal(g4), rng.signal(g4), g1, g2, 3);
        CHECK(lhs == 0.0);
        CHECK(rhs >= 0.0);
    }
    SECTION("all deltas at nu = 0: 1 <= 1") {
        Signal d = Signal::delta(g4);
        auto [lhs, rhs] = stft_lemma_inequality(d, d, d, d, 0);
        CHECK(rel_error(lhs, 1.0) < 1e-13);
        CHECK(rel_error(rhs, 1.0) < 1e-13);
    }
    SECTION("50 random tuples on Z_8") {
        GroupSpec g8 = zn(8);
        SignalRng rng(88);
        for (int k = 0; k < 50; ++k) {
            auto [lhs, rhs] = stft_lemma_inequality(rng.signal(g8), rng.signal(g8), rng.signal(g8),
                                                    rng.signal(g8), rng.index(64));
            CHECK(lhs <= rhs + 1e-12 * std::max(1.0, rhs));
        }
    }
}
