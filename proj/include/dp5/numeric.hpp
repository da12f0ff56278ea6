#pragma once

// Exact scalar types and the dense containers built on them. Everything in
// this project is integer or rational arithmetic; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cassert>
#include <cstdint>
#include <string>

#include "dp5/errors.hpp"

namespace dp5 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Int& v) { return v.str(); }
inline std::string to_string(const Rat& v) { return v.str(); }

inline long to_long(const Int& v) { return v.convert_to<long>(); }

// Deterministic pseudo-random source. std::mt19937_64 is fully specified by
// the standard, so seeded streams are reproducible across platforms; the
// distribution adaptors are not, hence the plain modulo draws here.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        // splitmix64 step
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0, n)
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        return next() % n;
    }

    // integer in [lo, hi]
    long range(long lo, long hi) {
        assert(lo <= hi);
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Int int_in(long lo, long hi) { return Int(range(lo, hi)); }

    Int nonzero_int(long bound) {
        for (;;) {
            Int v = int_in(-bound, bound);
            if (v != 0) return v;
        }
    }

    Rat rational(long bound) { return Rat(int_in(-bound, bound), int_in(1, bound)); }

    Rat nonzero_rational(long bound) { return Rat(nonzero_int(bound), int_in(1, bound)); }

private:
    std::uint64_t state_;
};

} // namespace dp5
