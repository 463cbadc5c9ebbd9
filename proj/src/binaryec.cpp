#include "eigenpoints/binaryec.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace eigenpoints {

namespace {

std::map<std::vector<int>, int> monomialIndex(int n, int d) {
    std::map<std::vector<int>, int> idx;
    int i = 0;
    for (const auto& e : monomialsOfDegree(n, d)) idx[e] = i++;
    return idx;
}

}  // namespace

EllMapMatrix buildEllMap(int n, int d, int k) {
    if (k < 1 || k > d) throw std::invalid_argument("buildEllMap: slot out of range");
    EllMapMatrix out;
    out.n = n;
    out.d = d;
    out.k = k;
    const auto monIdx = monomialIndex(n, d);
    out.monomialCount = static_cast<int>(monIdx.size());  // map is ordered; we need list order
    // monomialIndex uses map ordering; rebuild with the graded-lex list order
    const auto mons = monomialsOfDegree(n, d);
    std::map<std::vector<int>, int> pos;
    for (std::size_t i = 0; i < mons.size(); ++i) pos[mons[i]] = static_cast<int>(i);
    out.monomialCount = static_cast<int>(mons.size());

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    const std::size_t cols = TensorQ::flatSize(n, d);
    out.matrix = MatQ(static_cast<int>(pairs.size()) * out.monomialCount, static_cast<int>(cols));

    std::vector<int> idx(d, 0);
    std::size_t flat = 0;
    while (true) {
        const int i = idx[k - 1];
        std::vector<int> e(n, 0);
        for (int m = 0; m < d; ++m)
            if (m != k - 1) e[idx[m]] += 1;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const auto [a, b] = pairs[p];
            // minor m_ab = x_a psi_b - x_b psi_a
            if (i == b) {
                std::vector<int> e2 = e;
                e2[a] += 1;
                out.matrix.at(static_cast<int>(p) * out.monomialCount + pos.at(e2),
                              static_cast<int>(flat)) += 1;
            }
            if (i == a) {
                std::vector<int> e2 = e;
                e2[b] += 1;
                out.matrix.at(static_cast<int>(p) * out.monomialCount + pos.at(e2),
                              static_cast<int>(flat)) -= 1;
            }
        }
        // advance row-major index
        int posI = d - 1;
        ++flat;
        while (posI >= 0) {
            if (++idx[posI] < n) break;
            idx[posI] = 0;
            --posI;
        }
        if (posI < 0) break;
    }
    return out;
}

std::vector<Rat> ellMapApply(const EllMapMatrix& m, const TensorQ& a) {
    std::vector<Rat> out(m.matrix.rows, Rat(0));
    for (int r = 0; r < m.matrix.rows; ++r)
        for (int c = 0; c < m.matrix.cols; ++c)
            if (!m.matrix.at(r, c).is_zero()) out[r] += m.matrix.at(r, c) * a.entries[c];
    return out;
}

KndResult kernelKnd(int n, int d) {
    const std::size_t cols = TensorQ::flatSize(n, d);
    if (cols > 10000) throw std::invalid_argument("kernelKnd: tensor space too large");
    std::vector<EllMapMatrix> maps;
    for (int k = 1; k <= d; ++k) maps.push_back(buildEllMap(n, d, k));
    const int rowsEach = maps[0].matrix.rows;
    MatQ stacked(rowsEach * d, static_cast<int>(cols));
    for (int k = 0; k < d; ++k)
        for (int r = 0; r < rowsEach; ++r)
            for (int c = 0; c < static_cast<int>(cols); ++c)
                stacked.at(k * rowsEach + r, c) = maps[k].matrix.at(r, c);
    KndResult out;
    out.basis = nullspaceExact(stacked);
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

EdMatrix buildEd(int d) {
    if (d < 2 || d > 6) throw std::invalid_argument("buildEd: 2 <= d <= 6");
    const int rows = d * (d + 1);
    const int colsL = 1 << d;
    // Stack the d ell-maps and row-reduce [L | I] over Q; the rows whose L part
    // vanishes give the symbolic bottom block C.
    MatQ aug(rows, colsL + rows);
    for (int k = 0; k < d; ++k) {
        EllMapMatrix m = buildEllMap(2, d, k + 1);
        for (int r = 0; r < d + 1; ++r)
            for (int c = 0; c < colsL; ++c) aug.at(k * (d + 1) + r, c) = m.matrix.at(r, c);
    }
    for (int r = 0; r < rows; ++r) aug.at(r, colsL + r) = 1;

    // Gauss-Jordan on the L block only.
    int row = 0;
    for (int col = 0; col < colsL && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!aug.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < aug.cols; ++c) std::swap(aug.at(piv, c), aug.at(row, c));
        const Rat inv = Rat(1) / aug.at(row, col);
        for (int c = 0; c < aug.cols; ++c) aug.at(row, c) *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || aug.at(r, col).is_zero()) continue;
            const Rat f = aug.at(r, col);
            for (int c = 0; c < aug.cols; ++c) aug.at(r, c) -= f * aug.at(row, c);
        }
        ++row;
    }
    const int rank = row;

    EdMatrix out;
    out.d = d;
    out.e = rows - rank;
    out.c.assign(d, {});
    for (int k = 0; k < d; ++k) out.c[k].assign(out.e, std::vector<Rat>(d + 1, Rat(0)));
    for (int j = 0; j < out.e; ++j) {
        const int r = rank + j;
        // clear denominators of the transformation row for integer output
        BigInt l = 1;
        for (int c = 0; c < rows; ++c)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(aug.at(r, colsL + c)));
        for (int k = 0; k < d; ++k)
            for (int m = 0; m <= d; ++m)
                out.c[k][j][m] = aug.at(r, colsL + k * (d + 1) + m) * Rat(l);
    }
    return out;
}

MatQ EdMatrix::evaluate(const std::vector<std::vector<Rat>>& forms) const {
    if (static_cast<int>(forms.size()) != d)
        throw std::invalid_argument("EdMatrix::evaluate: need d forms");
    MatQ m(d, e);
    for (int k = 0; k < d; ++k) {
        if (static_cast<int>(forms[k].size()) != d + 1)
            throw std::invalid_argument("EdMatrix::evaluate: form has wrong length");
        for (int j = 0; j < e; ++j) {
            Rat s(0);
            for (int mm = 0; mm <= d; ++mm) s += c[k][j][mm] * forms[k][mm];
            m.at(k, j) = s;
        }
    }
    return m;
}

std::vector<Rat> binaryFormToCoeffs(const PolyQ& f, int d) {
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
    for (const auto& [e, coef] : f.terms()) {
        if (e[0] + e[1] != d) throw std::invalid_argument("binaryFormToCoeffs: wrong degree");
        c[e[1]] += coef;  // graded-lex: index = power of the second variable
    }
    return c;
}

PolyQ coeffsToBinaryForm(const std::vector<Rat>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    PolyQ f(2);
    for (int k = 0; k <= d; ++k) f.addTerm({d - k, k}, c[k]);
    return f;
}

MembershipResult ecMembership(int d, const std::vector<std::vector<Rat>>& formCoeffs,
                              std::uint64_t seed) {
    MembershipResult out;
    if (static_cast<int>(formCoeffs.size()) != d)
        throw std::invalid_argument("ecMembership: need d forms");
    const int colsL = 1 << d;
    for (const auto& f : formCoeffs) {
        if (static_cast<int>(f.size()) != d + 1)
            throw std::invalid_argument("ecMembership: form has wrong length");
        bool nonzero = false;
        for (const Rat& x : f)
            if (!x.is_zero()) nonzero = true;
        if (!nonzero) throw std::invalid_argument("ecMembership: zero form");
    }

    MatQ big(d * (d + 1), colsL + d);
    for (int k = 0; k < d; ++k) {
        EllMapMatrix m = buildEllMap(2, d, k + 1);
        for (int r = 0; r < d + 1; ++r) {
            for (int c = 0; c < colsL; ++c) big.at(k * (d + 1) + r, c) = m.matrix.at(r, c);
            big.at(k * (d + 1) + r, colsL + k) = formCoeffs[k][r];
        }
    }
    const auto kernel = nullspaceExact(big);
    if (kernel.empty()) return out;

    auto tailNonzero = [&](const std::vector<Rat>& v) {
        for (int k = 0; k < d; ++k)
            if (v[colsL + k].is_zero()) return false;
        return true;
    };
    auto accept = [&](const std::vector<Rat>& v) {
        out.member = true;
        TensorQ t(2, d);
        for (int c = 0; c < colsL; ++c) t.entries[c] = v[c];
        out.tensor = std::move(t);
    };

    for (const auto& v : kernel)
        if (tailNonzero(v)) {
            accept(v);
            return out;
        }
    // Generic combinations of the kernel basis: a vector with all-nonzero tail
    // exists iff a random combination has one, up to measure zero. Five
    // deterministic draws keep the false-negative probability negligible.
    std::mt19937_64 rng(splitMix64(seed ^ 0x5bd1e995ULL));
    std::uniform_int_distribution<long long> pick(-99, 99);
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<Rat> v(colsL + d, Rat(0));
        for (const auto& b : kernel) {
            const Rat c(pick(rng));
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
        }
        if (tailNonzero(v)) {
            accept(v);
            return out;
        }
    }
    return out;
}

CompatibilityResult matrixCompatibility(const std::vector<std::vector<Rat>>& v,
                                        const std::vector<std::vector<Rat>>& w) {
    CompatibilityResult out;
    const int n = static_cast<int>(v.size());
    if (n == 0 || w.size() != v.size())
        throw std::invalid_argument("matrixCompatibility: need two sets of n points");
    const int dim = static_cast<int>(v[0].size());
    auto spanning = [&](const std::vector<std::vector<Rat>>& pts) {
        MatQ m(n, dim);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < dim; ++j) m.at(i, j) = pts[i][j];
        return rankExact(m) == dim;
    };
    if (!spanning(v) || !spanning(w))
        throw std::invalid_argument("matrixCompatibility: configurations must span");

    // Non-orthogonality graph; compatible iff it is exactly a permutation.
    std::vector<int> rowMatch(n, -1), colCount(n, 0);
    for (int i = 0; i < n; ++i) {
        int edges = 0;
        for (int j = 0; j < n; ++j) {
            Rat dot(0);
            for (int c = 0; c < dim; ++c) dot += w[i][c] * v[j][c];
            if (!dot.is_zero()) {
                ++edges;
                rowMatch[i] = j;
                ++colCount[j];
            }
        }
        if (edges != 1) return out;
    }
    for (int j = 0; j < n; ++j)
        if (colCount[j] != 1) return out;
    out.compatible = true;
    out.matching = rowMatch;
    return out;
}

bool laplacePowerAnnihilates(const PolyQ& f) {
    if (f.numVars() != 2) throw std::invalid_argument("laplacePowerAnnihilates: binary form required");
    const int d = f.degree();
    if (d % 2 != 0) throw std::invalid_argument("laplacePowerAnnihilates: even degree required");
    PolyQ cur = f;
    for (int it = 0; it < d / 2; ++it)
        cur = cur.partialDerivative(0).partialDerivative(0) +
              cur.partialDerivative(1).partialDerivative(1);
    return cur.isZero();
}

bool symmetricRepresentable(const std::vector<std::pair<Rat, Rat>>& points) {
    const int d = static_cast<int>(points.size());
    if (d % 2 == 1) return true;
    PolyQ prod = PolyQ::constant(2, Rat(1));
    for (const auto& [u, vv] : points) {
        PolyQ lin(2);
        lin.addTerm({1, 0}, vv);
        lin.addTerm({0, 1}, -u);
        prod = prod * lin;
    }
    return laplacePowerAnnihilates(prod);
}

bool symmetricRepresentableFloat(const std::vector<std::pair<CD, CD>>& points, double tol) {
    const int d = static_cast<int>(points.size());
    if (d % 2 == 1) return true;
    PolyC prod = PolyC::constant(2, CD(1, 0));
    for (const auto& [u, v] : points) {
        PolyC lin(2);
        lin.addTerm({1, 0}, v);
        lin.addTerm({0, 1}, -u);
        prod = prod * lin;
    }
    const double scale = std::max(1e-300, prod.maxAbsCoeff());
    PolyC cur = prod;
    for (int it = 0; it < d / 2; ++it)
        cur = cur.partialDerivative(0).partialDerivative(0) +
              cur.partialDerivative(1).partialDerivative(1);
    return cur.maxAbsCoeff() < tol * scale;
}

int ecDimensionEstimate(int d, std::uint64_t seed) {
    std::mt19937_64 rng(splitMix64(seed));
    std::uniform_int_distribution<long long> pick(-9, 9);
    const int colsL = 1 << d;
    TensorQ a(2, d);
    for (auto& e : a.entries) e = Rat(pick(rng));

    std::vector<EllMapMatrix> maps;
    std::vector<std::vector<Rat>> forms;
    for (int k = 1; k <= d; ++k) {
        maps.push_back(buildEllMap(2, d, k));
        forms.push_back(ellMapApply(maps.back(), a));
    }
    // Rank of the differential of A -> (f_1, ..., f_d) read in the projective
    // charts where the current form coefficient of largest magnitude is fixed:
    // rows (f_k[m]/f_k[mk])' = (L_k[m] f_k[mk] - f_k[m] L_k[mk]) / f_k[mk]^2.
    std::vector<std::vector<Rat>> rows;
    for (int k = 0; k < d; ++k) {
        int mk = 0;
        for (int m = 0; m <= d; ++m)
            if (ScalarOps<Rat>::absValue(forms[k][m]) > ScalarOps<Rat>::absValue(forms[k][mk]))
                mk = m;
        if (forms[k][mk].is_zero())
            throw std::runtime_error("ecDimensionEstimate: degenerate sample tensor");
        for (int m = 0; m <= d; ++m) {
            if (m == mk) continue;
            std::vector<Rat> row(colsL, Rat(0));
            for (int c = 0; c < colsL; ++c)
                row[c] = maps[k].matrix.at(m, c) * forms[k][mk] -
                         forms[k][m] * maps[k].matrix.at(mk, c);
            rows.push_back(std::move(row));
        }
    }
    MatQ jac(static_cast<int>(rows.size()), colsL);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < colsL; ++c) jac.at(static_cast<int>(r), c) = rows[r][c];
    return rankExact(jac);
}

}  // namespace eigenpoints
