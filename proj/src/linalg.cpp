#include "eigenpoints/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <stdexcept>

namespace eigenpoints {

namespace {

// Clear denominators row by row; rank and kernel are unchanged.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;
    BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

IntMatrix clearDenominators(const MatQ& m) {
    IntMatrix out;
    out.rows = m.rows;
    out.cols = m.cols;
    out.a.resize(m.a.size());
    for (int r = 0; r < m.rows; ++r) {
        BigInt l = 1;
        for (int c = 0; c < m.cols; ++c) {
            const BigInt den = boost::multiprecision::denominator(m.at(r, c));
            l = boost::multiprecision::lcm(l, den);
        }
        for (int c = 0; c < m.cols; ++c) {
            const Rat v = m.at(r, c) * Rat(l);
            out.at(r, c) = boost::multiprecision::numerator(v);
        }
    }
    return out;
}

struct Echelon {
    IntMatrix m;
    std::vector<int> pivotCols;  // pivot column of row i
};

// One-step Bareiss fraction-free elimination with partial (first nonzero)
// pivoting. Leaves the matrix in row echelon form with integer entries.
Echelon bareissEchelon(IntMatrix m) {
    Echelon e;
    BigInt prev = 1;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        for (int r = row + 1; r < m.rows; ++r) {
            for (int c = col + 1; c < m.cols; ++c) {
                BigInt v = m.at(row, col) * m.at(r, c) - m.at(r, col) * m.at(row, c);
                m.at(r, c) = v / prev;  // exact by Bareiss
            }
            m.at(r, col) = 0;
        }
        prev = m.at(row, col);
        e.pivotCols.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

int rankExact(const MatQ& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return static_cast<int>(bareissEchelon(clearDenominators(m)).pivotCols.size());
}

std::vector<std::vector<Rat>> nullspaceExact(const MatQ& m) {
    std::vector<std::vector<Rat>> basis;
    if (m.cols == 0) return basis;
    if (m.rows == 0) {
        for (int c = 0; c < m.cols; ++c) {
            std::vector<Rat> v(m.cols, Rat(0));
            v[c] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Echelon e = bareissEchelon(clearDenominators(m));
    const int rank = static_cast<int>(e.pivotCols.size());
    std::vector<bool> isPivot(m.cols, false);
    for (int c : e.pivotCols) isPivot[c] = true;

    for (int freeCol = 0; freeCol < m.cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[freeCol] = 1;
        // Back-substitute through the echelon rows.
        for (int r = rank - 1; r >= 0; --r) {
            const int pc = e.pivotCols[r];
            Rat s(0);
            for (int c = pc + 1; c < m.cols; ++c)
                if (!v[c].is_zero() && e.m.at(r, c) != 0) s += Rat(e.m.at(r, c)) * v[c];
            v[pc] = -s / Rat(e.m.at(r, pc));
        }
        // Scale to integer entries for tidy output.
        BigInt l = 1;
        for (const Rat& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
        for (Rat& x : v) x *= Rat(l);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solveExact(const MatQ& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
    // Gaussian elimination over Q on the augmented matrix.
    MatQ aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    std::vector<int> pivotCol;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (!aug.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c <= m.cols; ++c) std::swap(aug.at(piv, c), aug.at(row, c));
        const Rat inv = Rat(1) / aug.at(row, col);
        for (int c = col; c <= m.cols; ++c) aug.at(row, c) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || aug.at(r, col).is_zero()) continue;
            const Rat f = aug.at(r, col);
            for (int c = col; c <= m.cols; ++c) aug.at(r, c) -= f * aug.at(row, c);
        }
        pivotCol.push_back(col);
        ++row;
    }
    // Inconsistent if a zero row has nonzero rhs.
    for (int r = row; r < m.rows; ++r)
        if (!aug.at(r, m.cols).is_zero()) return false;
    x.assign(m.cols, Rat(0));
    for (std::size_t i = 0; i < pivotCol.size(); ++i) x[pivotCol[i]] = aug.at(static_cast<int>(i), m.cols);
    return true;
}

namespace {

Eigen::MatrixXcd toEigen(const MatC& m) {
    Eigen::MatrixXcd e(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) e(r, c) = m.at(r, c);
    return e;
}

}  // namespace

int rankFloat(const MatC& m, double tol) {
    if (m.rows == 0 || m.cols == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(toEigen(m));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cut = tol * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++rank;
    return rank;
}

std::vector<std::vector<CD>> nullspaceFloat(const MatC& m, double tol) {
    std::vector<std::vector<CD>> basis;
    if (m.cols == 0) return basis;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(toEigen(m), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = sv.size() ? tol * std::max(sv(0), 1e-300) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++rank;
    for (int c = rank; c < m.cols; ++c) {
        std::vector<CD> v(m.cols);
        for (int r = 0; r < m.cols; ++r) v[r] = svd.matrixV()(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<double> singularValues(const MatC& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(toEigen(m));
    std::vector<double> out(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
    return out;
}

std::vector<CD> lstsqFloat(const MatC& m, const std::vector<CD>& b) {
    Eigen::VectorXcd rhs(m.rows);
    for (int r = 0; r < m.rows; ++r) rhs(r) = b[r];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(toEigen(m), Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXcd x = svd.solve(rhs);
    return std::vector<CD>(x.data(), x.data() + x.size());
}

std::vector<CD> eigenvaluesFloat(const MatC& m) {
    if (m.rows != m.cols) throw std::invalid_argument("eigenvaluesFloat: square matrix required");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(toEigen(m), false);
    std::vector<CD> out(m.rows);
    for (int i = 0; i < m.rows; ++i) out[i] = es.eigenvalues()(i);
    return out;
}

}  // namespace eigenpoints
