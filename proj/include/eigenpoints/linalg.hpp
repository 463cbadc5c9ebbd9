#pragma once

#include <vector>

#include "eigenpoints/scalar.hpp"

namespace eigenpoints {

/// Dense row-major matrix over K.
template <class K>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<K> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, K{}) {}

    K& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const K& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

using MatQ = Matrix<Rat>;
using MatC = Matrix<CD>;

/// Exact rank via fraction-free (Bareiss) elimination on the cleared-denominator
/// integer matrix.
int rankExact(const MatQ& m);

/// Exact kernel basis (right nullspace). Vectors are scaled to integer entries.
std::vector<std::vector<Rat>> nullspaceExact(const MatQ& m);

/// Solve M x = b exactly; returns empty optional-like flag via bool. On success x
/// is one solution (minimal in the pivot sense); the system may be under- or
/// over-determined, inconsistency returns false.
bool solveExact(const MatQ& m, const std::vector<Rat>& b, std::vector<Rat>& x);

/// Numeric rank: singular values below tol times the largest count as zero.
int rankFloat(const MatC& m, double tol = 1e-10);

/// Numeric kernel basis from the SVD, same tolerance convention.
std::vector<std::vector<CD>> nullspaceFloat(const MatC& m, double tol = 1e-10);

/// Singular values, descending.
std::vector<double> singularValues(const MatC& m);

/// Least-squares solve (SVD-based), for overdetermined float systems.
std::vector<CD> lstsqFloat(const MatC& m, const std::vector<CD>& b);

/// Eigenvalues of a square complex matrix.
std::vector<CD> eigenvaluesFloat(const MatC& m);

inline MatC toComplexMatrix(const MatQ& m) {
    MatC r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = toComplex(m.a[i]);
    return r;
}

}  // namespace eigenpoints
