#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eigenpoints/eigensys.hpp"
#include "eigenpoints/linalg.hpp"
#include "eigenpoints/polynomial.hpp"
#include "eigenpoints/projective.hpp"

namespace eigenpoints {

/// Flat term representation for fast repeated evaluation (n <= 8 variables).
struct CompiledPoly {
    int nvars = 0;
    struct Term {
        std::array<std::uint8_t, 8> e{};
        CD c;
    };
    std::vector<Term> terms;
    double coeffScale = 1.0;  // max |coefficient|, for relative residuals

    static CompiledPoly compile(const PolyC& p);

    CD eval(const CD* x) const;
    CD eval(const std::vector<CD>& x) const { return eval(x.data()); }
    /// Gradient with respect to all variables.
    void grad(const CD* x, CD* out) const;
};

/// The numeric face of an eigenpoint system: compiled minors and psi, with the
/// evaluation, polishing and classification helpers shared by the solver
/// backends.
class NumericSystem {
public:
    explicit NumericSystem(const EigenSystem<CD>& sys);

    int n() const { return n_; }
    int ell() const { return ell_; }
    int minorCount() const { return static_cast<int>(minors_.size()); }
    const std::vector<CompiledPoly>& minors() const { return minors_; }
    const std::vector<CompiledPoly>& psi() const { return psi_; }

    /// Relative residual: max over minors of |m(x)| / (coeffScale * |x|_inf^deg),
    /// evaluated on the normalized representative of x.
    double residual(const std::vector<CD>& coords) const;

    /// Gauss-Newton refinement on all minors in the chart of the max-modulus
    /// coordinate. Returns the polished coordinates.
    std::vector<CD> polish(std::vector<CD> coords, int maxIter = 30) const;

    /// Smallest/largest singular value ratio of the minor Jacobian restricted
    /// to the chart of the max-modulus coordinate.
    double jacobianConditionRatio(const std::vector<CD>& coords) const;

    /// Eigenvalue lambda with psi_i(x) = lambda x_i^ell at the max-modulus
    /// coordinate; 0 when psi vanishes at the point (base locus).
    CD eigenvalue(const std::vector<CD>& coords) const;

    bool psiVanishes(const std::vector<CD>& coords, double tol = 1e-10) const;

private:
    int n_, ell_;
    int degree_;
    std::vector<CompiledPoly> minors_;
    std::vector<CompiledPoly> psi_;
};

}  // namespace eigenpoints
