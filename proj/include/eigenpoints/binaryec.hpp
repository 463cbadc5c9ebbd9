#pragma once

#include <optional>
#include <vector>

#include "eigenpoints/eigensys.hpp"
#include "eigenpoints/linalg.hpp"
#include "eigenpoints/polynomial.hpp"

namespace eigenpoints {

/// The linear map from tensor space to the coefficient vectors of the index-k
/// eigenconfiguration forms (the minors x_i psi^[k]_j - x_j psi^[k]_i).
/// Columns are tensor entries in row-major order; rows are indexed by the pair
/// (i<j) and then by the monomials of degree d in graded-lex order.
struct EllMapMatrix {
    int n = 0, d = 0, k = 1;  // k is 1-based
    int monomialCount = 0;    // rows per pair
    MatQ matrix;
};

EllMapMatrix buildEllMap(int n, int d, int k);

/// Apply the n=2 ell-map to a tensor: the coefficient vector (length d+1,
/// graded-lex s^d .. t^d) of the index-k eigenconfiguration binary form.
std::vector<Rat> ellMapApply(const EllMapMatrix& m, const TensorQ& a);

/// K_{n,d}: tensors whose index-k eigenconfiguration is all of projective
/// space for every k, i.e. the common kernel of the d ell-maps.
struct KndResult {
    int dimension = 0;
    std::vector<std::vector<Rat>> basis;  // flattened tensors
};
KndResult kernelKnd(int n, int d);

/// The d x e matrix E_d whose k-th row is Z-linear in the coordinates of
/// u^[k]: the eigencompatibility variety EC_{2,d} is a component of the locus
/// where some everywhere-nonzero row vector annihilates E_d.
struct EdMatrix {
    int d = 0, e = 0;
    // entry coefficient c[k][j][m]: row k, column j, coefficient of u^[k]_m
    std::vector<std::vector<std::vector<Rat>>> c;

    /// Substitute concrete forms (coefficient vectors, length d+1 each).
    MatQ evaluate(const std::vector<std::vector<Rat>>& forms) const;
};
EdMatrix buildEd(int d);

/// Membership in EC_{2,d}: do the d binary forms arise as the d index-k
/// eigenconfigurations of a single 2 x ... x 2 tensor? On acceptance the
/// witness tensor is recovered (its forms are proportional to the inputs).
struct MembershipResult {
    bool member = false;
    std::optional<TensorQ> tensor;
};
MembershipResult ecMembership(int d, const std::vector<std::vector<Rat>>& formCoeffs,
                              std::uint64_t seed = 0);

/// Convert a binary form to its graded-lex coefficient vector and back.
std::vector<Rat> binaryFormToCoeffs(const PolyQ& f, int d);
PolyQ coeffsToBinaryForm(const std::vector<Rat>& c);

/// Proposition: two spanning n-point configurations are the left/right
/// eigenconfigurations of one matrix iff, up to relabeling, all cross pairs
/// are orthogonal. Exact. Returns the matching when accepted.
struct CompatibilityResult {
    bool compatible = false;
    std::vector<int> matching;  // matching[i] = index in V paired with W row i
};
CompatibilityResult matrixCompatibility(const std::vector<std::vector<Rat>>& v,
                                        const std::vector<std::vector<Rat>>& w);

/// Is the given set of d points in P^1 the eigenconfiguration of a symmetric
/// tensor: always for odd d; for even d iff the d/2-th power of the Laplacian
/// annihilates prod (v_i x - u_i y). Exact.
bool symmetricRepresentable(const std::vector<std::pair<Rat, Rat>>& points);

/// The form-level test (the product of root factors is the configuration's
/// defining form up to scale).
bool laplacePowerAnnihilates(const PolyQ& binaryForm);

/// Float variant for solved (floating) configurations.
bool symmetricRepresentableFloat(const std::vector<std::pair<CD, CD>>& points, double tol = 1e-8);

/// Estimated dimension of EC_{2,d}: exact rank of the differential of
/// A -> (forms in their projective charts) at a random integer tensor.
int ecDimensionEstimate(int d, std::uint64_t seed);

}  // namespace eigenpoints
