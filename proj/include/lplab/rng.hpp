#pragma once

// PCG64 (XSL-RR 128/64 variant). The randomized verification suites need a
// seedable generator whose algorithm can be named in reports so runs are
// reproducible across languages; the C++ standard library does not ship PCG,
// and <random> distributions are not bit-stable across implementations, so
// both the generator and the uniform mapping live here.

#include <cmath>
#include <cstdint>

namespace lplab {

inline constexpr const char* kRngName = "pcg64-xsl-rr-128/64";

class Pcg64 {
public:
    explicit Pcg64(std::uint64_t seed, std::uint64_t stream = 0xda3e39cb94b95bdbULL) {
        // Standard PCG seeding statement: advance once between mixing in the
        // stream selector and the seed value.
        inc_ = ((u128(stream) << 1) | 1u);
        state_ = 0;
        next();
        state_ += u128(seed);
        next();
    }

    std::uint64_t next() {
        state_ = state_ * kMultiplier + inc_;
        std::uint64_t xored = static_cast<std::uint64_t>(state_ >> 64) ^
                              static_cast<std::uint64_t>(state_);
        unsigned rot = static_cast<unsigned>(state_ >> 122);
        return (xored >> rot) | (xored << ((-rot) & 63));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Log-uniform over [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    std::uint64_t bounded(std::uint64_t n) { return next() % n; } // bias immaterial here

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }
    result_type operator()() { return next(); }

private:
    using u128 = unsigned __int128;
    static constexpr u128 kMultiplier =
        (u128(2549297995355413924ULL) << 64) | 4865540595714422341ULL;

    u128 state_ = 0;
    u128 inc_ = 0;
};

} // namespace lplab
