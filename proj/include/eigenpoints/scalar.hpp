#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eigenpoints {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using CD = std::complex<double>;

inline double toDouble(const Rat& q) { return q.template convert_to<double>(); }
inline CD toComplex(const Rat& q) { return CD(toDouble(q), 0.0); }

// Exact conversion: every finite double is a dyadic rational.
inline Rat ratFromDouble(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("ratFromDouble: non-finite value");
    if (v == 0.0) return Rat(0);
    int exp = 0;
    double m = std::frexp(v, &exp);  // v = m * 2^exp, 0.5 <= |m| < 1
    auto mantissa = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rat r(mantissa);
    if (exp >= 0)
        r *= Rat(BigInt(1) << exp);
    else
        r /= Rat(BigInt(1) << (-exp));
    return r;
}

// Scalar-mode glue so the polynomial layer can be written once.
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
    static bool isZero(const Rat& a) { return a.is_zero(); }
    static CD toCD(const Rat& a) { return toComplex(a); }
    static Rat fromInt(long long v) { return Rat(v); }
    static double absValue(const Rat& a) { return std::abs(toDouble(a)); }
    static std::string str(const Rat& a) { return a.str(); }
};

template <>
struct ScalarOps<CD> {
    static bool isZero(const CD& a) { return a == CD(0.0, 0.0); }
    static CD toCD(const CD& a) { return a; }
    static CD fromInt(long long v) { return CD(static_cast<double>(v), 0.0); }
    static double absValue(const CD& a) { return std::abs(a); }
    static std::string str(const CD& a) {
        return "(" + std::to_string(a.real()) + "," + std::to_string(a.imag()) + ")";
    }
};

// splitmix64, used to derive independent per-task RNG streams from one seed.
inline std::uint64_t splitMix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace eigenpoints
