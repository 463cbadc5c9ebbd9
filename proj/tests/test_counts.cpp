#include <doctest.h>

#include "eigenpoints/counts.hpp"

using namespace eigenpoints::counts;

TEST_CASE("eigenpoint counts") {
    CHECK(eigenCount(3, 3) == 7);
    CHECK(eigenCount(4, 5) == 85);
    for (int n = 1; n <= 8; ++n) CHECK(eigenCount(n, 2) == n);
    for (int n = 2; n <= 6; ++n) {
        long long p3 = 1;
        for (int i = 0; i < n; ++i) p3 *= 3;
        CHECK(eigenCount(n, 4) == (p3 - 1) / 2);
    }
}

TEST_CASE("ell-th eigenpoint counts") {
    for (int n = 2; n <= 6; ++n)
        for (int d = 3; d <= 6; ++d) CHECK(eigenCountEll(n, d, 1) == eigenCount(n, d));
    CHECK(eigenCountEll(2, 3, 2) == 4);   // summation branch (ell = d-1)
    CHECK(eigenCountEll(3, 4, 2) == 19);  // (3^3 - 2^3)/(3 - 2)
}

TEST_CASE("genus formulas agree and vanish for n=2") {
    for (int d = 2; d <= 8; ++d)
        for (int ell = 1; ell <= d - 1; ++ell) {
            CHECK(genusGamma(2, d, ell) == 0);
            CHECK(genusGammaEN(2, d, ell) == 0);
        }
    for (int n = 3; n <= 6; ++n)
        for (int d = 2; d <= 6; ++d)
            for (int ell = 1; ell <= d - 1; ++ell)
                CHECK(genusGamma(n, d, ell) == genusGammaEN(n, d, ell));
}

TEST_CASE("genus for n=4 equals the explicit cubic polynomial") {
    for (int d = 3; d <= 7; ++d)
        for (int ell = 1; ell <= d - 1; ++ell) {
            const long long want = 5LL * d * d * d + 5LL * d * d * ell + 3LL * d * ell * ell +
                                   1LL * ell * ell * ell - 21LL * d * d - 14LL * d * ell -
                                   5LL * ell * ell + 27LL * d + 9LL * ell - 10;
            CHECK(genusGamma(4, d, ell) == want);
        }
}

TEST_CASE("genus at ell=1 equals the closed form from the discriminant degree") {
    for (int n = 2; n <= 6; ++n)
        for (int d = 3; d <= 6; ++d) {
            const long long bin = static_cast<long long>(n) * (n - 1) / 2;
            long long pw = 1;
            for (int i = 0; i < n - 1; ++i) pw *= (d - 1);
            CHECK(genusGamma(n, d, 1) == bin * pw - eigenCount(n, d) + 1);
        }
}

TEST_CASE("eigendiscriminant degrees") {
    CHECK(eigenDiscriminantDegree(3, 3, 1) == 24);
    for (int n = 2; n <= 6; ++n) CHECK(eigenDiscriminantDegree(n, 2, 1) == 1LL * n * (n - 1));
    for (int d = 3; d <= 8; ++d) CHECK(eigenDiscriminantDegree(2, d, 1) == 2 * d - 2);
    for (int d = 3; d <= 6; ++d)
        CHECK(eigenDiscriminantDegree(4, d, 1) == 12LL * (d - 1) * (d - 1) * (d - 1));
    // general l=1 closed form on the full grid
    for (int n = 2; n <= 6; ++n)
        for (int d = 3; d <= 6; ++d) {
            long long pw = 1;
            for (int i = 0; i < n - 1; ++i) pw *= (d - 1);
            CHECK(eigenDiscriminantDegree(n, d, 1) == 1LL * n * (n - 1) * pw);
        }
}

TEST_CASE("Hilbert polynomial of the pencil curve") {
    for (int n = 3; n <= 6; ++n)
        for (int d = 3; d <= 6; ++d)
            for (int ell = 1; ell <= d - 1; ++ell) {
                CHECK(hilbertPolynomialC(n, d, ell, 0) == 1 - genusGammaEN(n, d, ell));
                // linear in t: second finite difference vanishes
                const long long h0 = hilbertPolynomialC(n, d, ell, 10);
                const long long h1 = hilbertPolynomialC(n, d, ell, 11);
                const long long h2 = hilbertPolynomialC(n, d, ell, 12);
                CHECK(h2 - 2 * h1 + h0 == 0);
                // leading coefficient (the curve degree) is positive
                CHECK(h1 - h0 > 0);
            }
}

TEST_CASE("region counts") {
    CHECK(regionCount(4, 5) == 15);
    CHECK(regionCount(3, 3) == 4);
    for (int d = 2; d <= 9; ++d) {
        CHECK(regionCount(3, d) == 1LL * d * (d - 1) / 2 + 1);
        // vertices + regions = d^2 - d + 1 for n=3
        CHECK(1LL * d * (d - 1) / 2 + regionCount(3, d) == 1LL * d * d - d + 1);
    }
    for (int d = 3; d <= 6; ++d) CHECK(1LL * d * d - d + 1 == eigenCount(3, d));
}

TEST_CASE("generalized binomial with negative top argument") {
    CHECK(generalizedBinomial(-1, 3) == -1);
    CHECK(generalizedBinomial(-2, 2) == 3);
    CHECK(generalizedBinomial(5, 2) == 10);
    CHECK(generalizedBinomial(2, 4) == 0);
}
