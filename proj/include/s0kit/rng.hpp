// rng.hpp - seeded, reproducible random signals for verification suites
//
// mt19937_64 with an explicit (x >> 11) * 2^-53 mapping to [0,1); real and
// imaginary parts independent uniform on [-1,1).  The mapping is spelled out
// (instead of std::uniform_real_distribution) so identical seeds give
// byte-identical reports on every toolchain.

#pragma once

#include <random>

#include "s0kit/signal.hpp"

namespace s0kit {

class SignalRng {
public:
    explicit SignalRng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform on [-1, 1)
    double symmetric() { return 2.0 * uniform01() - 1.0; }

    Complex amplitude() {
        const double re = symmetric();
        const double im = symmetric();
        return Complex(re, im);
    }

    Signal signal(const GroupSpec& g) {
        Signal s = Signal::zero(g);
        for (auto& v : s.values) v = amplitude();
        return s;
    }

    // nonzero with probability 1; re-drawn in the measure-zero event
    Signal nonzero_signal(const GroupSpec& g) {
        Signal s = signal(g);
        while (s.is_zero()) s = signal(g);
        return s;
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

}  // namespace s0kit
