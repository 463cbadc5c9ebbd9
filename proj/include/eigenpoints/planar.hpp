#pragma once

#include <array>
#include <optional>
#include <vector>

#include "eigenpoints/eigensys.hpp"
#include "eigenpoints/polynomial.hpp"
#include "eigenpoints/projective.hpp"
#include "eigenpoints/solver.hpp"

namespace eigenpoints {

template <class K>
using PlanarPoint = std::array<K, 3>;

/// No six of the seven points lie on a conic: every 6-subset evaluation matrix
/// of the conic monomials has full rank. Exact over the rationals.
bool noSixOnConic(const std::vector<PlanarPoint<Rat>>& z);
bool noSixOnConic(const std::vector<PlanarPoint<CD>>& z, double tol = 1e-8);

/// Basis of the forms of the given degree vanishing on all points.
std::vector<PolyQ> vanishingForms(const std::vector<PlanarPoint<Rat>>& z, int degree);
std::vector<PolyC> vanishingForms(const std::vector<PlanarPoint<CD>>& z, int degree,
                                  double tol = 1e-8);

enum class HBVerdict {
    Eigenconfiguration,
    NotEnoughGenerators,    // the space of degree-d vanishing forms is not 3-dimensional
    DependentLinearColumn,  // no linear syzygy, or its linear forms are dependent
    VerificationFailed,     // algebra succeeded but re-solving did not reproduce Z
};

template <class K>
struct HilbertBurchResult {
    HBVerdict verdict = HBVerdict::NotEnoughGenerators;
    std::vector<Poly<K>> generators;      // basis of degree-d vanishing forms
    std::array<Poly<K>, 3> syzygyLinear;  // (L1, L2, L3)
    std::vector<Poly<K>> psi;             // degree d-1, minors of (x y z; psi) cut Z
    std::optional<Tensor<K>> tensor;      // psiMap(.,1) == psi, symmetric in last d-1 slots
};

/// Decide whether |Z| = d^2-d+1 points in P^2 form the eigenconfiguration of a
/// ternary tensor, and recover one if so. The verdict follows the syzygy shape
/// of the point ideal; on success the result is verified by re-solving.
HilbertBurchResult<Rat> isEigenconfiguration(const std::vector<PlanarPoint<Rat>>& z, int d,
                                             const SolveOptions& opts = {});
HilbertBurchResult<CD> isEigenconfiguration(const std::vector<PlanarPoint<CD>>& z, int d,
                                            const SolveOptions& opts = {});

/// d = 3 only: does Z come from a symmetric tensor (a cubic)? Checks the five
/// linear conditions on the recovered psi coefficients and solves for the
/// cubic when they hold.
struct SymmetricCheckResult {
    bool symmetric = false;
    std::optional<PolyQ> cubic;
    HBVerdict verdict = HBVerdict::NotEnoughGenerators;  // from the underlying recognition
};
SymmetricCheckResult isSymmetricEigenconfiguration(const std::vector<PlanarPoint<Rat>>& z,
                                                   const SolveOptions& opts = {});
struct SymmetricCheckResultC {
    bool symmetric = false;
    std::optional<PolyC> cubic;
    HBVerdict verdict = HBVerdict::NotEnoughGenerators;
};
SymmetricCheckResultC isSymmetricEigenconfiguration(const std::vector<PlanarPoint<CD>>& z,
                                                    const SolveOptions& opts = {});

/// The seven eigenpoints of the Hesse cubic a x^3 + b y^3 + c z^3 + 3h xyz:
/// the three coordinate points plus the four points
/// (h chi (chi^2-1) : chi (a chi - c) : h (chi^2-1)) over the roots chi of the
/// associated quartic. Degree drops append the chi = infinity limit point.
std::vector<ProjectivePoint> hesseEigenpoints(const Rat& a, const Rat& b, const Rat& c,
                                              const Rat& h);

/// Coefficients (chi^4 .. chi^0) of the Hesse root quartic.
std::array<Rat, 5> hesseQuartic(const Rat& a, const Rat& b, const Rat& c, const Rat& h);

/// Numeric rank of the differential of (tensor or cubic) -> eigenconfiguration
/// at a random integer instance: the dimension of the eigenconfiguration
/// variety for ternary tensors of order d.
int eigDimensionCheck(int d, bool symmetric, std::uint64_t seed);

}  // namespace eigenpoints
