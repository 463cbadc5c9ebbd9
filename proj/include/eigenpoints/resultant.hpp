#pragma once

#include <vector>

#include "eigenpoints/linalg.hpp"
#include "eigenpoints/polynomial.hpp"

namespace eigenpoints {

/// Bivariate polynomial over Q, stored as coefficients of powers of the second
/// variable ("y"), each a univariate polynomial in the first ("x").
struct BivQ {
    std::vector<UniQ> cy;  // cy[j] = coefficient of y^j

    bool isZero() const {
        for (const auto& u : cy)
            if (!u.isZero()) return false;
        return true;
    }
    int degY() const {
        for (int j = static_cast<int>(cy.size()) - 1; j >= 0; --j)
            if (!cy[j].isZero()) return j;
        return -1;
    }
    int degX() const {
        int d = -1;
        for (const auto& u : cy) d = std::max(d, u.degree());
        return d;
    }
    UniQ evalY(const Rat& x0) const {  // substitute x = x0, univariate in y
        std::vector<Rat> c(cy.size(), Rat(0));
        for (std::size_t j = 0; j < cy.size(); ++j) c[j] = cy[j].eval(x0);
        return UniQ(std::move(c));
    }
    void trim() {
        while (!cy.empty() && cy.back().isZero()) cy.pop_back();
    }
};

/// Extract a bivariate view in variables (xVar, yVar); all other variables must
/// have exponent zero.
BivQ toBivariate(const PolyQ& p, int xVar, int yVar);

/// Exact determinant of a rational matrix.
Rat determinantExact(const MatQ& m);

/// Resultant of two univariate rational polynomials (Sylvester determinant).
Rat resultantUni(const UniQ& f, const UniQ& g);

/// Discriminant of a univariate rational polynomial of degree >= 1:
/// (-1)^{d(d-1)/2} Res(f, f') / lc(f).
Rat discriminantUni(const UniQ& f);

/// Eliminate y: the resultant of f and g with respect to y, a univariate
/// polynomial in x. Computed as the determinant of the symbolic Sylvester
/// matrix by evaluation/interpolation, so vanishing leading coefficients at
/// sample points cannot corrupt the result. Identically zero output signals a
/// common factor. Throws if both inputs are constant in y.
UniQ resultantElimY(const BivQ& f, const BivQ& g);

/// Primitive gcd of bivariate rational polynomials (Euclid in Q[x][y] with
/// content removal).
BivQ gcdBivariate(const BivQ& f, const BivQ& g);

/// Content with respect to x: the monic gcd in Q[x] of the y-coefficients.
UniQ bivContentX(const BivQ& f);

/// Exact division; throws if not divisible.
BivQ divideExactBiv(const BivQ& num, const BivQ& den);

}  // namespace eigenpoints
