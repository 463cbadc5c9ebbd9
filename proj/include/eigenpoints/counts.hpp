#pragma once

#include <cstdint>

namespace eigenpoints::counts {

/// Number of eigenpoints of a generic order-d tensor in n variables:
/// ((d-1)^n - 1)/(d-2) for d >= 3, the geometric-sum form (= n) for d = 2.
long long eigenCount(int n, int d);

/// Number of l-th eigenpoints: ((d-1)^n - l^n)/(d-1-l), with the summation
/// form sum_i (d-1)^i l^{n-1-i} when l = d-1.
long long eigenCountEll(int n, int d, int ell);

/// Genus of the pencil curve, alternating double-sum form. Zero for n = 2.
long long genusGamma(int n, int d, int ell);

/// Same genus from the Eagon-Northcott resolution of the pencil curve
/// (independent route; must agree with genusGamma).
long long genusGammaEN(int n, int d, int ell);

/// Hilbert polynomial of the pencil curve, evaluated at integer t.
long long hilbertPolynomialC(int n, int d, int ell, long long t);

/// Degree of the l-th eigendiscriminant: 2*genus + 2*count - 2.
long long eigenDiscriminantDegree(int n, int d, int ell);

/// Number of regions cut out of real projective (n-1)-space by d generic
/// hyperplanes: sum_{i<n} C(d-1, i).
long long regionCount(int n, int d);

/// Generalized binomial coefficient: falling factorial m(m-1)...(m-r+1)/r!,
/// valid for negative m.
long long generalizedBinomial(long long m, int r);

}  // namespace eigenpoints::counts
