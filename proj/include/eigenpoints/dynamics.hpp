#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "eigenpoints/eigensys.hpp"
#include "eigenpoints/projective.hpp"
#include "eigenpoints/solver.hpp"

namespace eigenpoints {

/// An arrangement of d distinct real lines in P^2, with an exact genericity
/// certificate (pairwise independent, no three concurrent).
struct LineArrangement {
    std::vector<std::array<Rat, 3>> lines;
    bool generic = false;
    std::optional<std::array<int, 3>> offendingTriple;  // witnesses non-genericity

    PolyQ productForm() const;  // phi = L_1 ... L_d
};

LineArrangement makeArrangement(std::vector<std::array<Rat, 3>> lines);

/// Pairwise intersection points, exact. Rejects non-generic arrangements and
/// names an offending triple.
std::vector<ProjectivePoint> arrangementVertices(const LineArrangement& arr);

struct Region {
    std::vector<int> signs;               // +1/-1 per line, first nonzero sign +1
    std::array<double, 3> representative;  // interior point on the unit sphere
    double margin = 0.0;                   // min_i s_i L_i(rep) over normalized lines
};

/// Realizable sign vectors up to global flip, each with a max-margin interior
/// representative. For generic arrangements the count is C(d,2)+1; pass
/// waiveGenericity to enumerate the regions of special arrangements anyway.
std::vector<Region> regionRepresentatives(const LineArrangement& arr, std::uint64_t seed,
                                          bool waiveGenericity = false);

/// The unique eigenpoint interior to the region: the maximizer of
/// sum_i log|L_i| on the unit sphere, by projected gradient ascent with
/// region clipping, then Newton refinement on the eigen system.
ProjectivePoint regionEigenpoint(const LineArrangement& arr, const Region& region);

/// Vertices (eigenvalue 0) plus one eigenpoint per region: all d^2-d+1
/// eigenpoints of the product of the line forms, all real.
EigenConfiguration arrangementEigenconfiguration(const LineArrangement& arr, std::uint64_t seed,
                                                 const SolveOptions& opts = {});

// ---------------------------------------------------------------------------

enum class DynKind { Converged, Cycle, BaseLocus, BudgetExceeded };

struct DynOutcome {
    DynKind kind = DynKind::BudgetExceeded;
    std::vector<std::vector<double>> points;  // limit point, or the cycle states
    int iterations = 0;
};

struct PowerMethodConfig {
    int ell = 1;
    bool ellRootScaling = false;  // apply coordinate-wise |.|^{1/ell} sign-preserving
    int maxIterations = 10000;
    double convergenceTol = 1e-12;
    double cycleTol = 1e-10;
    int cycleWindow = 8;
    double baseLocusTol = 1e-14;
};

/// Iterate v -> psi(v)/|psi(v)| with sign normalization (first significant
/// coordinate nonnegative). Real tensors only.
DynOutcome powerMethodRun(const TensorC& a, std::vector<double> v0,
                          const PowerMethodConfig& cfg = {});

struct RobustPoint {
    ProjectivePoint point;
    double basinFraction = 0.0;
    double spectralRadius = 0.0;
    double residual = 0.0;
};

/// Attracting fixed points of the normalized power map, found from random
/// sphere starts and certified by the spectral radius of the projectivized
/// differential (finite differences, tangent projection).
std::vector<RobustPoint> robustEigenpoints(const TensorC& a, int ell, int samples,
                                           std::uint64_t seed, int threads = 1);

struct SecondIterateResult {
    bool holds = false;
    Rat c;                      // (grad phi) o (grad phi) = c * phi * (x,y,z)^T
    double maxDeviation = 0.0;  // largest coefficient mismatch when it fails
};

/// Exact polynomial-identity check for ternary cubics.
SecondIterateResult secondIterateCheck(const PolyQ& phi);

struct PerturbationRow {
    double epsilon = 0.0;
    int total = 0;  // isolated points found
    int real = 0;
    bool positiveDimensional = false;
    bool ok = true;
    std::string error;
};

/// Solve the eigenconfiguration of phi0 + eps*phi1 for each eps and count real
/// points. Failures are recorded per row and the experiment continues.
std::vector<PerturbationRow> perturbationExperiment(const PolyQ& phi0, const PolyQ& phi1,
                                                    const std::vector<Rat>& epsilons,
                                                    std::uint64_t seed,
                                                    const SolveOptions& opts = {});

}  // namespace eigenpoints
