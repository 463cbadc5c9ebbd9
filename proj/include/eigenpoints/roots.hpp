#pragma once

#include <vector>

#include "eigenpoints/polynomial.hpp"
#include "eigenpoints/projective.hpp"

namespace eigenpoints {

struct RootCluster {
    CD value;
    int multiplicity;
};

/// All complex roots of a nonzero univariate polynomial, with multiplicities
/// obtained by clustering. Companion-matrix eigenvalues, then Newton polishing.
/// The multiplicities sum to the degree. Throws on the zero polynomial.
std::vector<RootCluster> univariateRoots(const UniC& p);

inline std::vector<RootCluster> univariateRoots(const UniQ& p) {
    return univariateRoots(toComplexUni(p));
}

struct BinaryRoot {
    ProjectivePoint point;  // (x : y) in P^1
    int multiplicity;
};

/// The d zeros in P^1 of a nonzero binary form of degree d, counted with
/// multiplicity. A vanishing leading x-coefficient contributes the point (1:0).
template <class K>
std::vector<BinaryRoot> binaryFormRoots(const Poly<K>& f);

}  // namespace eigenpoints
