#include "eigenpoints/counts.hpp"

#include <cassert>
#include <stdexcept>

#include "eigenpoints/scalar.hpp"

namespace eigenpoints::counts {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

BigInt binom(long long n, int k) {
    if (k < 0) return 0;
    BigInt num = 1;
    for (int i = 0; i < k; ++i) num *= BigInt(n - i);
    BigInt den = 1;
    for (int i = 2; i <= k; ++i) den *= i;
    assert(num % den == 0);
    return num / den;
}

long long toLL(const BigInt& v) { return v.convert_to<long long>(); }

}  // namespace

long long generalizedBinomial(long long m, int r) { return toLL(binom(m, r)); }

long long eigenCount(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("eigenCount: need n >= 1, d >= 2");
    if (d == 2) return n;  // sum form: the closed fraction is 0/0 here
    const long long num = ipow(d - 1, n) - 1;
    assert(num % (d - 2) == 0);
    return num / (d - 2);
}

long long eigenCountEll(int n, int d, int ell) {
    if (n < 1 || d < 2 || ell < 1) throw std::invalid_argument("eigenCountEll: bad parameters");
    if (ell == d - 1) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += ipow(d - 1, i) * ipow(ell, n - 1 - i);
        return s;
    }
    const long long num = ipow(d - 1, n) - ipow(ell, n);
    assert(num % (d - 1 - ell) == 0);
    return num / (d - 1 - ell);
}

long long genusGamma(int n, int d, int ell) {
    if (n < 2) throw std::invalid_argument("genusGamma: need n >= 2");
    BigInt total = 0;
    for (int j = 2; j <= n - 1; ++j) {
        BigInt inner = 0;
        for (int k = 0; k <= j; ++k) {
            const BigInt term = binom(n, j - k) * binom(static_cast<long long>(j) * (d - 1) - static_cast<long long>(k) * ell - 1, n - 1);
            inner += (k % 2 == 0) ? term : -term;
        }
        const int sign = ((n - 1 + j) % 2 == 0) ? 1 : -1;
        total += BigInt(sign * (j - 1)) * inner;
    }
    return toLL(total);
}

long long genusGammaEN(int n, int d, int ell) {
    if (n < 2) throw std::invalid_argument("genusGammaEN: need n >= 2");
    BigInt total = 0;
    for (int j = 3; j <= n; ++j) {
        BigInt inner = 0;
        for (int k = 0; k <= j - 3; ++k) {
            const long long top = (n - 1) + static_cast<long long>(j - k - 1) * (1 - d) -
                                  static_cast<long long>(k + 1) * ell;
            inner += BigInt(j - k - 2) * binom(n, j) * binom(top, n - 1);
        }
        total += (j % 2 == 1) ? inner : -inner;
    }
    return toLL(total);
}

long long hilbertPolynomialC(int n, int d, int ell, long long t) {
    if (n < 3) throw std::invalid_argument("hilbertPolynomialC: need n >= 3");
    BigInt total = binom(t + n - 1, n - 1);
    for (int j = 3; j <= n; ++j) {
        for (int k = 0; k <= j - 3; ++k) {
            const long long shift = (n - 1) + static_cast<long long>(j - k - 1) * (1 - d) -
                                    static_cast<long long>(k + 1) * ell;
            const BigInt term = BigInt(j - k - 2) * binom(n, j) * binom(t + shift, n - 1);
            total += (j % 2 == 0) ? term : -term;
        }
    }
    return toLL(total);
}

long long eigenDiscriminantDegree(int n, int d, int ell) {
    return 2 * genusGamma(n, d, ell) + 2 * eigenCountEll(n, d, ell) - 2;
}

long long regionCount(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("regionCount: bad parameters");
    BigInt s = 0;
    for (int i = 0; i <= n - 1; ++i) {
        if (i > d - 1) break;
        s += binom(d - 1, i);
    }
    return toLL(s);
}

}  // namespace eigenpoints::counts
