#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenpoints/eigensys.hpp"
#include "eigenpoints/numeric_system.hpp"
#include "eigenpoints/projective.hpp"

namespace eigenpoints {

enum class SolveMethod { ExactUnivariate, Resultant, Homotopy };

struct EigenPointRecord {
    ProjectivePoint point;
    std::optional<CD> eigenvalue;
    int multiplicity = 1;
    bool isolated = true;
    double residual = 0.0;
    bool real = false;
};

struct EigenConfiguration {
    int n = 0, d = 0, ell = 1;
    std::vector<EigenPointRecord> points;
    bool positiveDimensional = false;
    SolveMethod method = SolveMethod::Resultant;
    int lostPaths = 0;

    int countDistinct() const { return static_cast<int>(points.size()); }
    std::vector<ProjectivePoint> pointList() const {
        std::vector<ProjectivePoint> v;
        v.reserve(points.size());
        for (const auto& r : points) v.push_back(r.point);
        return v;
    }
    int realCount() const {
        int c = 0;
        for (const auto& r : points) c += r.real ? 1 : 0;
        return c;
    }
    void sortDeterministic();
};

struct SolveOptions {
    std::uint64_t seed = 0;
    double residualTol = 1e-8;
    double dedupTol = kDedupTol;
    double isolationTol = 1e-6;
    int threads = 1;
    bool crossCheck = true;  // float-mode ternary: verify against the homotopy backend
};

/// n = 2: the single binary form x2^ell psi1 - x1^ell psi2 solved by radicals
/// of its companion matrix. positiveDimensional iff the form vanishes
/// identically.
EigenConfiguration solveBinary(const TensorQ& a, int ell = 1, int k = 1);
EigenConfiguration solveBinary(const TensorC& a, int ell = 1, int k = 1);

/// n = 3: Sylvester-resultant elimination of two minors with exact arithmetic,
/// Newton polishing, residual filtering against all three minors, and a
/// separate binary solve on the line z = 0. Falls back to the homotopy backend
/// if the elimination degenerates. Real input only (use solveGeneral for
/// complex tensors).
EigenConfiguration solveTernary(const TensorQ& a, int ell = 1, const SolveOptions& opts = {});
EigenConfiguration solveTernary(const TensorC& a, int ell = 1, const SolveOptions& opts = {});

/// n in {3,4}: total-degree homotopy continuation on a randomized square
/// subsystem of the minors, two independent random affine charts, residual
/// filtering, Jacobian-based isolation classification.
EigenConfiguration solveGeneral(const TensorC& a, int ell = 1, const SolveOptions& opts = {});

/// Dispatch on n and mode: exact-univariate for n=2, resultant for real n=3,
/// homotopy otherwise (n <= 4).
EigenConfiguration solveAuto(const TensorC& a, int ell = 1, const SolveOptions& opts = {});
EigenConfiguration solveAuto(const TensorQ& a, int ell = 1, const SolveOptions& opts = {});

/// Eigenvalue of a known eigenpoint: psi_i(p) / p_i^ell at the max-modulus
/// coordinate. Rejects points whose residual exceeds the tolerance.
CD eigenvalueOf(const TensorC& a, int ell, const ProjectivePoint& p, double residualTol = 1e-6);

/// Degree in (a,b) of the restriction of the eigendiscriminant to the pencil
/// aA + bB. Exact. Supported: n=2 (binary-form discriminant) and d=2 (matrix
/// pencil characteristic-polynomial discriminant).
struct PencilDegreeResult {
    long long degree = 0;
    bool degenerate = false;  // pencil collapses (content removed or disc identically zero)
};
PencilDegreeResult pencilDiscriminantDegree(const TensorQ& a, const TensorQ& b, int ell = 1);

}  // namespace eigenpoints
