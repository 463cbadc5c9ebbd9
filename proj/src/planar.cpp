#include "eigenpoints/planar.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "eigenpoints/linalg.hpp"
#include "eigenpoints/roots.hpp"

namespace eigenpoints {

namespace {

template <class K>
K powK(const K& base, int e) {
    K r = ScalarOps<K>::fromInt(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

template <class K>
Matrix<K> evaluationMatrix(const std::vector<PlanarPoint<K>>& z,
                           const std::vector<std::vector<int>>& mons) {
    Matrix<K> m(static_cast<int>(z.size()), static_cast<int>(mons.size()));
    for (std::size_t r = 0; r < z.size(); ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) {
            K v = ScalarOps<K>::fromInt(1);
            for (int i = 0; i < 3; ++i) v = v * powK(z[r][i], mons[c][i]);
            m.at(static_cast<int>(r), static_cast<int>(c)) = v;
        }
    return m;
}

// Scale each row of a float evaluation matrix to unit max-modulus so rank
// thresholds are meaningful for points in different charts.
void normalizeRows(MatC& m) {
    for (int r = 0; r < m.rows; ++r) {
        double mx = 0.0;
        for (int c = 0; c < m.cols; ++c) mx = std::max(mx, std::abs(m.at(r, c)));
        if (mx > 0)
            for (int c = 0; c < m.cols; ++c) m.at(r, c) /= mx;
    }
}

}  // namespace

bool noSixOnConic(const std::vector<PlanarPoint<Rat>>& z) {
    if (z.size() != 7) throw std::invalid_argument("noSixOnConic: exactly 7 points required");
    const auto mons = monomialsOfDegree(3, 2);
    for (int skip = 0; skip < 7; ++skip) {
        std::vector<PlanarPoint<Rat>> sub;
        for (int i = 0; i < 7; ++i)
            if (i != skip) sub.push_back(z[i]);
        if (rankExact(evaluationMatrix(sub, mons)) < 6) return false;
    }
    return true;
}

bool noSixOnConic(const std::vector<PlanarPoint<CD>>& z, double tol) {
    if (z.size() != 7) throw std::invalid_argument("noSixOnConic: exactly 7 points required");
    const auto mons = monomialsOfDegree(3, 2);
    for (int skip = 0; skip < 7; ++skip) {
        std::vector<PlanarPoint<CD>> sub;
        for (int i = 0; i < 7; ++i)
            if (i != skip) sub.push_back(z[i]);
        MatC m = evaluationMatrix(sub, mons);
        normalizeRows(m);
        if (rankFloat(m, tol) < 6) return false;
    }
    return true;
}

namespace {

template <class K>
std::vector<Poly<K>> formsFromKernel(const std::vector<std::vector<K>>& kernel,
                                     const std::vector<std::vector<int>>& mons) {
    std::vector<Poly<K>> out;
    for (const auto& v : kernel) {
        Poly<K> f(3);
        for (std::size_t c = 0; c < mons.size(); ++c) f.addTerm(mons[c], v[c]);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::vector<PolyQ> vanishingForms(const std::vector<PlanarPoint<Rat>>& z, int degree) {
    const auto mons = monomialsOfDegree(3, degree);
    return formsFromKernel(nullspaceExact(evaluationMatrix(z, mons)), mons);
}

std::vector<PolyC> vanishingForms(const std::vector<PlanarPoint<CD>>& z, int degree, double tol) {
    const auto mons = monomialsOfDegree(3, degree);
    MatC m = evaluationMatrix(z, mons);
    normalizeRows(m);
    return formsFromKernel(nullspaceFloat(m, tol), mons);
}

namespace {

// ---- scalar-kind glue -------------------------------------------------------

template <class K>
struct PlanarKit;

template <>
struct PlanarKit<Rat> {
    static constexpr bool exact = true;
    static std::vector<std::vector<Rat>> kernel(const MatQ& m, double) { return nullspaceExact(m); }
    static bool solve(const MatQ& m, const std::vector<Rat>& b, std::vector<Rat>& x) {
        return solveExact(m, b, x);
    }
    static bool isZero(const Rat& v, double) { return v.is_zero(); }
};

template <>
struct PlanarKit<CD> {
    static constexpr bool exact = false;
    static std::vector<std::vector<CD>> kernel(const MatC& m, double tol) {
        MatC c = m;
        normalizeRows(c);
        return nullspaceFloat(c, tol);
    }
    static bool solve(const MatC& m, const std::vector<CD>& b, std::vector<CD>& x) {
        x = lstsqFloat(m, b);
        // residual check
        double scale = 0.0, res = 0.0;
        for (int r = 0; r < m.rows; ++r) {
            CD s(0, 0);
            for (int c = 0; c < m.cols; ++c) s += m.at(r, c) * x[c];
            res = std::max(res, std::abs(s - b[r]));
            scale = std::max(scale, std::abs(b[r]));
        }
        return res < 1e-7 * std::max(1.0, scale);
    }
    static bool isZero(const CD& v, double scale) { return std::abs(v) < 1e-8 * scale; }
};

// Tensor with psiMap(.,1) == psi, symmetric in the last d-1 slots.
template <class K>
Tensor<K> tensorFromPsi(const std::vector<Poly<K>>& psi, int d) {
    Tensor<K> t(3, d);
    // multinomial (d-1)! / prod(e!)
    auto multinom = [&](const std::vector<int>& e) {
        long long num = 1;
        for (int i = 2; i <= d - 1; ++i) num *= i;
        long long den = 1;
        for (int x : e)
            for (int i = 2; i <= x; ++i) den *= i;
        return num / den;
    };
    std::vector<int> idx(d, 0);
    while (true) {
        std::vector<int> e(3, 0);
        for (int m = 1; m < d; ++m) e[idx[m]] += 1;
        const K c = psi[idx[0]].coeff(e);
        if (!ScalarOps<K>::isZero(c))
            t.at(idx) = c / ScalarOps<K>::fromInt(multinom(e));
        int pos = d - 1;
        while (pos >= 0) {
            if (++idx[pos] < 3) break;
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return t;
}

template <class K>
HilbertBurchResult<K> recognizeImpl(const std::vector<PlanarPoint<K>>& z, int d,
                                    const SolveOptions& opts) {
    using Kit = PlanarKit<K>;
    HilbertBurchResult<K> out;
    const std::size_t expected = static_cast<std::size_t>(d) * d - d + 1;
    if (z.size() != expected)
        throw std::invalid_argument("isEigenconfiguration: need d^2-d+1 points");

    // 1. degree-d vanishing forms; exactly 3 of them
    out.generators = vanishingForms(z, d);
    if (out.generators.size() != 3) {
        out.verdict = HBVerdict::NotEnoughGenerators;
        return out;
    }
    const auto& f = out.generators;

    // 2. linear syzygy L1 F1 + L2 F2 + L3 F3 = 0 over the 9 linear coefficients
    const auto monsHigh = monomialsOfDegree(3, d + 1);
    std::map<std::vector<int>, int> pos;
    for (std::size_t i = 0; i < monsHigh.size(); ++i) pos[monsHigh[i]] = static_cast<int>(i);
    Matrix<K> syz(static_cast<int>(monsHigh.size()), 9);
    for (int fi = 0; fi < 3; ++fi) {
        for (int v = 0; v < 3; ++v) {
            for (const auto& [e, c] : f[fi].terms()) {
                std::vector<int> e2 = e;
                e2[v] += 1;
                syz.at(pos.at(e2), fi * 3 + v) += c;
            }
        }
    }
    const auto syzKernel = Kit::kernel(syz, 1e-8);
    if (syzKernel.empty()) {
        out.verdict = HBVerdict::DependentLinearColumn;  // no linear column at all
        return out;
    }
    const auto& lcoef = syzKernel.front();

    // 3. the linear forms must be independent
    Matrix<K> lmat(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) lmat.at(i, j) = lcoef[i * 3 + j];
    int lrank;
    if constexpr (Kit::exact) {
        lrank = rankExact(lmat);
    } else {
        lrank = rankFloat(lmat, 1e-8);
    }
    if (lrank < 3) {
        out.verdict = HBVerdict::DependentLinearColumn;
        return out;
    }
    for (int i = 0; i < 3; ++i) {
        Poly<K> li(3);
        for (int j = 0; j < 3; ++j) {
            std::vector<int> e(3, 0);
            e[j] = 1;
            li.addTerm(e, lmat.at(i, j));
        }
        out.syzygyLinear[i] = li;
    }

    // 4. change generators so the syzygy becomes x G1 + y G2 + z G3 = 0
    std::vector<Poly<K>> g(3, Poly<K>(3));
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) g[j] = g[j] + f[i] * lmat.at(i, j);

    // 5. read off psi from the Koszul shape:
    //    G1 = y psi3 - z psi2, G2 = z psi1 - x psi3, G3 = x psi2 - y psi1
    const auto monsPsi = monomialsOfDegree(3, d - 1);
    const auto monsG = monomialsOfDegree(3, d);
    std::map<std::vector<int>, int> posG;
    for (std::size_t i = 0; i < monsG.size(); ++i) posG[monsG[i]] = static_cast<int>(i);
    const int M = static_cast<int>(monsPsi.size());
    Matrix<K> sys(3 * static_cast<int>(monsG.size()), 3 * M);
    std::vector<K> rhs(3 * monsG.size(), K{});
    struct KoszulTerm {
        int var, psi, sign;
    };
    const KoszulTerm shape[3][2] = {
        {{1, 2, +1}, {2, 1, -1}},
        {{2, 0, +1}, {0, 2, -1}},
        {{0, 1, +1}, {1, 0, -1}},
    };
    for (int b = 0; b < 3; ++b) {
        for (const auto& ts : shape[b]) {
            for (int mi = 0; mi < M; ++mi) {
                std::vector<int> e = monsPsi[mi];
                e[ts.var] += 1;
                sys.at(b * static_cast<int>(monsG.size()) + posG.at(e), ts.psi * M + mi) +=
                    ScalarOps<K>::fromInt(ts.sign);
            }
        }
        for (const auto& [e, c] : g[b].terms()) rhs[b * monsG.size() + posG.at(e)] += c;
    }
    std::vector<K> psiCoef;
    if (!Kit::solve(sys, rhs, psiCoef)) {
        out.verdict = HBVerdict::DependentLinearColumn;
        return out;
    }
    out.psi.assign(3, Poly<K>(3));
    for (int p = 0; p < 3; ++p)
        for (int mi = 0; mi < M; ++mi) out.psi[p].addTerm(monsPsi[mi], psiCoef[p * M + mi]);

    // 6. tensor symmetric in the last d-1 slots, then verify by re-solving
    out.tensor = tensorFromPsi(out.psi, d);
    EigenConfiguration solved;
    if constexpr (Kit::exact) {
        solved = solveTernary(*out.tensor, 1, opts);
    } else {
        // phase-normalize; use the exact backend when the tensor is (near) real
        Tensor<CD> t = *out.tensor;
        CD big(0, 0);
        for (const CD& e : t.entries)
            if (std::abs(e) > std::abs(big)) big = e;
        if (std::abs(big) > 0) {
            const CD phase = big / std::abs(big);
            for (CD& e : t.entries) e /= phase;
        }
        double imag = 0.0, scale = 0.0;
        for (const CD& e : t.entries) {
            imag = std::max(imag, std::abs(e.imag()));
            scale = std::max(scale, std::abs(e));
        }
        if (imag < 1e-9 * scale) {
            TensorC realT = t;
            for (CD& e : realT.entries) e = CD(e.real(), 0.0);
            solved = solveTernary(realT, 1, opts);
        } else {
            solved = solveGeneral(t, 1, opts);
        }
    }
    std::vector<ProjectivePoint> zPts;
    for (const auto& p : z) {
        std::vector<CD> c(3);
        for (int i = 0; i < 3; ++i) c[i] = ScalarOps<K>::toCD(p[i]);
        zPts.push_back(ProjectivePoint::fromCoords(std::move(c)));
    }
    if (solved.positiveDimensional ||
        solved.countDistinct() != static_cast<int>(expected) ||
        hausdorffDistance(solved.pointList(), zPts) > 1e-6) {
        out.verdict = HBVerdict::VerificationFailed;
        return out;
    }
    out.verdict = HBVerdict::Eigenconfiguration;
    return out;
}

}  // namespace

HilbertBurchResult<Rat> isEigenconfiguration(const std::vector<PlanarPoint<Rat>>& z, int d,
                                             const SolveOptions& opts) {
    return recognizeImpl<Rat>(z, d, opts);
}

HilbertBurchResult<CD> isEigenconfiguration(const std::vector<PlanarPoint<CD>>& z, int d,
                                            const SolveOptions& opts) {
    return recognizeImpl<CD>(z, d, opts);
}

namespace {

// psi coefficient indexed as in the five-equation criterion:
// a1 x^2 + a2 xy + a3 xz + a4 y^2 + a5 yz + a6 z^2 (1-based).
template <class K>
std::array<K, 7> quadCoeffs(const Poly<K>& p) {
    std::array<K, 7> a{};
    a[1] = p.coeff({2, 0, 0});
    a[2] = p.coeff({1, 1, 0});
    a[3] = p.coeff({1, 0, 1});
    a[4] = p.coeff({0, 2, 0});
    a[5] = p.coeff({0, 1, 1});
    a[6] = p.coeff({0, 0, 2});
    return a;
}

template <class K>
std::array<K, 5> fiveEquations(const std::vector<Poly<K>>& psi) {
    const auto a = quadCoeffs(psi[0]);
    const auto b = quadCoeffs(psi[1]);
    const auto c = quadCoeffs(psi[2]);
    const K two = ScalarOps<K>::fromInt(2);
    return {a[5] - b[3],
            b[3] - c[2],
            two * a[4] - two * a[6] - b[2] + c[3],
            two * b[6] - two * b[1] - c[5] + a[2],
            two * c[1] - two * c[4] - a[3] + b[5]};
}

// Solve psi_i + L x_i = d(phi)/dx_i for the cubic phi and linear form L.
template <class K>
bool solveForCubic(const std::vector<Poly<K>>& psi, Poly<K>& phiOut) {
    using Kit = PlanarKit<K>;
    const auto monsPhi = monomialsOfDegree(3, 3);  // 10
    const auto monsQ = monomialsOfDegree(3, 2);    // 6
    std::map<std::vector<int>, int> posQ;
    for (std::size_t i = 0; i < monsQ.size(); ++i) posQ[monsQ[i]] = static_cast<int>(i);
    Matrix<K> m(18, 13);
    std::vector<K> rhs(18, K{});
    for (int i = 0; i < 3; ++i) {
        // d(phi)/dx_i columns
        for (std::size_t p = 0; p < monsPhi.size(); ++p) {
            if (monsPhi[p][i] == 0) continue;
            std::vector<int> e = monsPhi[p];
            const int k = e[i];
            e[i] -= 1;
            m.at(i * 6 + posQ.at(e), static_cast<int>(p)) += ScalarOps<K>::fromInt(k);
        }
        // -(L x_i) columns, L = u0 x + u1 y + u2 z
        for (int u = 0; u < 3; ++u) {
            std::vector<int> e(3, 0);
            e[u] += 1;
            e[i] += 1;
            m.at(i * 6 + posQ.at(e), 10 + u) -= ScalarOps<K>::fromInt(1);
        }
        for (const auto& [e, c] : psi[i].terms()) rhs[i * 6 + posQ.at(e)] += c;
    }
    std::vector<K> sol;
    if (!Kit::solve(m, rhs, sol)) return false;
    Poly<K> phi(3);
    for (std::size_t p = 0; p < monsPhi.size(); ++p) phi.addTerm(monsPhi[p], sol[p]);
    phiOut = phi;
    return true;
}

}  // namespace

SymmetricCheckResult isSymmetricEigenconfiguration(const std::vector<PlanarPoint<Rat>>& z,
                                                   const SolveOptions& opts) {
    SymmetricCheckResult out;
    auto rec = isEigenconfiguration(z, 3, opts);
    out.verdict = rec.verdict;
    if (rec.verdict != HBVerdict::Eigenconfiguration) return out;
    for (const Rat& e : fiveEquations(rec.psi))
        if (!e.is_zero()) return out;
    PolyQ phi(3);
    if (!solveForCubic(rec.psi, phi)) return out;
    out.symmetric = true;
    out.cubic = phi;
    return out;
}

SymmetricCheckResultC isSymmetricEigenconfiguration(const std::vector<PlanarPoint<CD>>& z,
                                                    const SolveOptions& opts) {
    SymmetricCheckResultC out;
    auto rec = isEigenconfiguration(z, 3, opts);
    out.verdict = rec.verdict;
    if (rec.verdict != HBVerdict::Eigenconfiguration) return out;
    double scale = 0.0;
    for (const auto& p : rec.psi) scale = std::max(scale, p.maxAbsCoeff());
    for (const CD& e : fiveEquations(rec.psi))
        if (std::abs(e) > 1e-8 * std::max(1.0, scale)) return out;
    PolyC phi(3);
    if (!solveForCubic(rec.psi, phi)) return out;
    out.symmetric = true;
    out.cubic = phi;
    return out;
}

std::array<Rat, 5> hesseQuartic(const Rat& a, const Rat& b, const Rat& c, const Rat& h) {
    return {Rat(h * (a * a - h * h)), Rat(-a * (a * b + c * h)), Rat(2 * (a * b * c + h * h * h)),
            Rat(-c * (b * c + a * h)), Rat(h * (c * c - h * h))};
}

std::vector<ProjectivePoint> hesseEigenpoints(const Rat& a, const Rat& b, const Rat& c,
                                              const Rat& h) {
    std::vector<ProjectivePoint> out;
    auto coord = [](int i) {
        std::vector<CD> v(3, CD(0, 0));
        v[i] = CD(1, 0);
        return ProjectivePoint::fromCoords(std::move(v));
    };
    out.push_back(coord(0));
    out.push_back(coord(1));
    out.push_back(coord(2));

    if (h.is_zero()) {
        // a x^3 + b y^3 + c z^3: remaining points have support of size >= 2
        // with coordinates proportional to the reciprocals of the coefficients.
        if (a.is_zero() || b.is_zero() || c.is_zero())
            throw std::invalid_argument("hesseEigenpoints: degenerate parameters (h=0 with a zero coefficient)");
        const std::array<Rat, 3> coeff = {a, b, c};
        for (unsigned mask = 1; mask < 8; ++mask) {
            if (__builtin_popcount(mask) < 2) continue;
            std::vector<CD> v(3, CD(0, 0));
            for (int i = 0; i < 3; ++i)
                if (mask & (1u << i)) v[i] = CD(toDouble(Rat(1) / coeff[i]), 0.0);
            out.push_back(ProjectivePoint::fromCoords(std::move(v)));
        }
        return out;
    }

    const auto q = hesseQuartic(a, b, c, h);
    std::vector<Rat> asc(q.rbegin(), q.rend());  // ascending for UniPoly
    UniQ quartic{std::move(asc)};
    quartic.trim();
    const int drop = 4 - std::max(0, quartic.degree());
    const CD ha = toComplex(h), aa = toComplex(a), cc = toComplex(c);

    PolyQ phi(3);
    phi.addTerm({3, 0, 0}, a);
    phi.addTerm({0, 3, 0}, b);
    phi.addTerm({0, 0, 3}, c);
    phi.addTerm({1, 1, 1}, Rat(3) * h);
    NumericSystem nsys{eigenSystemFromForm(toComplexPoly(phi), 1)};
    auto solverFallback = [&] {
        // degenerate parameters (e.g. a = c makes chi = 1 a spurious double
        // root of the quartic where the point map is 0/0); solve directly and
        // expand multiplicities so the configuration keeps 7 entries
        SolveOptions opts;
        opts.crossCheck = false;
        const EigenConfiguration cfg = solveTernary(tensorFromForm(phi), 1, opts);
        std::vector<ProjectivePoint> pts;
        for (const auto& rec : cfg.points)
            for (int m = 0; m < rec.multiplicity; ++m) pts.push_back(rec.point);
        return pts;
    };
    if (quartic.degree() >= 1) {
        for (const RootCluster& rc : univariateRoots(quartic)) {
            const CD chi = rc.value;
            std::vector<CD> v = {ha * chi * (chi * chi - CD(1, 0)), chi * (aa * chi - cc),
                                 ha * (chi * chi - CD(1, 0))};
            double mx = 0.0;
            for (const CD& x : v) mx = std::max(mx, std::abs(x));
            if (mx < 1e-13) return solverFallback();
            if (nsys.residual(v) > 1e-8) return solverFallback();
            v = nsys.polish(v);
            for (int rep = 0; rep < rc.multiplicity; ++rep)
                out.push_back(ProjectivePoint::fromCoords(std::vector<CD>(v)));
        }
    }
    // degree drop: chi = infinity maps to the limit point (1:0:0)
    for (int rep = 0; rep < drop; ++rep) out.push_back(coord(0));
    return out;
}

int eigDimensionCheck(int d, bool symmetric, std::uint64_t seed) {
    if (d < 3 || d > 5) throw std::invalid_argument("eigDimensionCheck: d in {3,4,5}");
    std::mt19937_64 rng(splitMix64(seed));
    std::uniform_int_distribution<int> pick(-9, 9);

    // random instance and its eigenconfiguration
    TensorQ inst(3, d);
    PolyQ phi(3);
    if (symmetric) {
        for (const auto& e : monomialsOfDegree(3, d)) phi.addTerm(e, Rat(pick(rng)));
        inst = tensorFromForm(phi);
    } else {
        for (auto& e : inst.entries) e = Rat(pick(rng));
    }
    SolveOptions opts;
    opts.crossCheck = false;
    EigenConfiguration cfg = solveTernary(inst, 1, opts);
    const int expected = d * d - d + 1;
    if (cfg.positiveDimensional || cfg.countDistinct() != expected)
        throw std::runtime_error("eigDimensionCheck: sample instance was not generic");

    // parameter basis: tensor entries, or cubic coefficients in the symmetric case
    const EigenSystem<CD> sys = eigenSystem(toComplexTensor(inst), 1, 1);
    NumericSystem nsys(sys);
    std::vector<std::vector<PolyC>> psiDerivs;  // per parameter direction
    if (symmetric) {
        for (const auto& e : monomialsOfDegree(3, d)) {
            PolyC mono(3);
            mono.addTerm(e, CD(1, 0));
            std::vector<PolyC> grad;
            for (int i = 0; i < 3; ++i) grad.push_back(mono.partialDerivative(i));
            psiDerivs.push_back(std::move(grad));
        }
    } else {
        TensorC basis(3, d);
        for (std::size_t flat = 0; flat < basis.entries.size(); ++flat) {
            basis.entries.assign(basis.entries.size(), CD(0, 0));
            basis.entries[flat] = CD(1, 0);
            psiDerivs.push_back(psiMap(basis, 1));
        }
    }
    // Note: in the symmetric case the solved system used psi = grad(phi)/d; the
    // variety is the same and the implicit derivative uses the gradient minors,
    // so scale the base psi accordingly.
    std::vector<PolyC> basePsi;
    if (symmetric) {
        PolyC phiC = toComplexPoly(phi);
        for (int i = 0; i < 3; ++i) basePsi.push_back(phiC.partialDerivative(i));
    } else {
        basePsi = psiMap(toComplexTensor(inst), 1);
    }

    const int P = static_cast<int>(psiDerivs.size());
    MatC jac(2 * expected, P);
    int row = 0;
    for (const auto& rec : cfg.points) {
        const auto& x = rec.point.coords();
        const int chart = rec.point.chartIndex();
        std::vector<int> freeVars;
        for (int i = 0; i < 3; ++i)
            if (i != chart) freeVars.push_back(i);
        // minors of (x; psi): m_ab = x_a psi_b - x_b psi_a over pairs
        const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
        MatC J(3, 2);
        for (int mi = 0; mi < 3; ++mi) {
            const auto [pa, pb] = pairs[mi];
            for (int f = 0; f < 2; ++f) {
                const int v = freeVars[f];
                // d/dx_v [x_a psi_b - x_b psi_a]
                CD val = x[pa] * basePsi[pb].partialDerivative(v).evaluate(x) -
                         x[pb] * basePsi[pa].partialDerivative(v).evaluate(x);
                if (v == pa) val += basePsi[pb].evaluate(x);
                if (v == pb) val -= basePsi[pa].evaluate(x);
                J.at(mi, f) = val;
            }
        }
        for (int p = 0; p < P; ++p) {
            std::vector<CD> rhs(3);
            for (int mi = 0; mi < 3; ++mi) {
                const auto [pa, pb] = pairs[mi];
                rhs[mi] = -(x[pa] * psiDerivs[p][pb].evaluate(x) -
                            x[pb] * psiDerivs[p][pa].evaluate(x));
            }
            const std::vector<CD> dx = lstsqFloat(J, rhs);
            jac.at(row, p) = dx[0];
            jac.at(row + 1, p) = dx[1];
        }
        row += 2;
    }
    return rankFloat(jac, 1e-7);
}

}  // namespace eigenpoints
