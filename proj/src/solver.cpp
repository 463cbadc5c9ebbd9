#include "eigenpoints/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eigenpoints/resultant.hpp"
#include "eigenpoints/roots.hpp"

namespace eigenpoints {

void EigenConfiguration::sortDeterministic() {
    std::sort(points.begin(), points.end(), [](const EigenPointRecord& a, const EigenPointRecord& b) {
        return a.point.sortsBefore(b.point);
    });
}

namespace {

EigenPointRecord makeRecord(const NumericSystem& nsys, std::vector<CD> coords, int multiplicity,
                            const SolveOptions& opts) {
    EigenPointRecord rec;
    rec.point = ProjectivePoint::fromCoords(std::move(coords));
    rec.multiplicity = multiplicity;
    rec.residual = nsys.residual(rec.point.coords());
    rec.eigenvalue = nsys.eigenvalue(rec.point.coords());
    rec.isolated = nsys.jacobianConditionRatio(rec.point.coords()) > opts.isolationTol;
    rec.real = rec.point.isReal();
    return rec;
}

// Merge near-identical candidates, summing multiplicities.
void appendClustered(EigenConfiguration& cfg, const NumericSystem& nsys,
                     std::vector<std::pair<std::vector<CD>, int>> candidates,
                     const SolveOptions& opts) {
    for (auto& [coords, mult] : candidates) {
        ProjectivePoint p = ProjectivePoint::fromCoords(coords);
        bool merged = false;
        for (auto& rec : cfg.points) {
            if (rec.point.approxEqual(p, opts.dedupTol)) {
                rec.multiplicity += mult;
                merged = true;
                break;
            }
        }
        if (!merged) cfg.points.push_back(makeRecord(nsys, coords, mult, opts));
    }
}

}  // namespace

EigenConfiguration solveBinary(const TensorC& a, int ell, int k) {
    if (a.n != 2) throw std::invalid_argument("solveBinary: n = 2 required");
    EigenConfiguration cfg;
    cfg.n = 2;
    cfg.d = a.d;
    cfg.ell = ell;
    cfg.method = SolveMethod::ExactUnivariate;
    const EigenSystem<CD> sys = eigenSystem(a, ell, k);
    NumericSystem nsys(sys);
    const PolyC& minor = sys.minors[0];
    if (minor.isZero()) {
        cfg.positiveDimensional = true;
        return cfg;
    }
    SolveOptions opts;
    for (const BinaryRoot& r : binaryFormRoots(minor)) {
        EigenPointRecord rec = makeRecord(nsys, r.point.coords(), r.multiplicity, opts);
        rec.isolated = true;
        cfg.points.push_back(std::move(rec));
    }
    cfg.sortDeterministic();
    return cfg;
}

EigenConfiguration solveBinary(const TensorQ& a, int ell, int k) {
    return solveBinary(toComplexTensor(a), ell, k);
}

// ---------------------------------------------------------------------------
// n = 3 resultant backend
// ---------------------------------------------------------------------------

namespace {

// Divisibility test in Q[x,y].
bool dividesBiv(const BivQ& divisor, const BivQ& num) {
    try {
        divideExactBiv(num, divisor);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

UniC evalAtX(const BivQ& f, const CD& x0) {
    std::vector<CD> c(f.cy.size());
    for (std::size_t j = 0; j < f.cy.size(); ++j) c[j] = toComplexUni(f.cy[j]).eval(x0);
    UniC out(std::move(c));
    return out;
}

}  // namespace

EigenConfiguration solveTernary(const TensorQ& a, int ell, const SolveOptions& opts) {
    if (a.n != 3) throw std::invalid_argument("solveTernary: n = 3 required");
    EigenConfiguration cfg;
    cfg.n = 3;
    cfg.d = a.d;
    cfg.ell = ell;
    cfg.method = SolveMethod::Resultant;

    const EigenSystem<Rat> sysQ = eigenSystem(a, ell, 1);
    EigenSystem<CD> sysC;
    sysC.n = 3;
    sysC.ell = ell;
    sysC.k = 1;
    for (const auto& m : sysQ.minors) sysC.minors.push_back(toComplexPoly(m));
    for (const auto& p : sysQ.psi) sysC.psi.push_back(toComplexPoly(p));
    sysC.pairs = sysQ.pairs;
    NumericSystem nsys(sysC);

    const bool allZero = sysQ.minors[0].isZero() && sysQ.minors[1].isZero() && sysQ.minors[2].isZero();
    if (allZero) {
        cfg.positiveDimensional = true;  // every point of P^2 is an eigenpoint
        return cfg;
    }

    // Affine chart z = 1.
    std::vector<BivQ> dehom;
    for (const auto& m : sysQ.minors) dehom.push_back(toBivariate(m.setVarToOne(2), 0, 1));
    std::vector<int> nonzero;
    for (int i = 0; i < 3; ++i)
        if (!dehom[i].isZero()) nonzero.push_back(i);

    std::vector<std::pair<std::vector<CD>, int>> candidates;

    auto fallback = [&]() {
        SolveOptions o = opts;
        o.crossCheck = false;
        EigenConfiguration h = solveGeneral(toComplexTensor(a), ell, o);
        h.method = SolveMethod::Homotopy;
        return h;
    };

    if (nonzero.size() < 2) {
        if (nonzero.size() == 1) {
            // The affine variety is the curve cut out by the single surviving
            // minor; nothing is isolated there.
            cfg.positiveDimensional = true;
        }
        // nonzero.empty(): all minors divisible by z; the line z=0 lies in the
        // eigenconfiguration, handled below.
        if (nonzero.empty()) cfg.positiveDimensional = true;
    } else {
        // Choose a pair of minors and eliminate. Common factors of the pair
        // are either eigencomponents (they kill the remaining minors too:
        // positive-dimensional) or spurious curves of the pair, which can
        // still carry isolated eigenpoints and are re-solved against a
        // remaining minor. The residual filter discards everything spurious.
        bool solved = false;
        auto harvest = [&](const UniQ& res, const BivQ& f, const BivQ& g) {
            if (res.degree() <= 0) return;
            for (const RootCluster& rx : univariateRoots(res)) {
                // y-fiber over x0 from whichever polynomial survives
                UniC py = evalAtX(f, rx.value);
                double fscale = 0.0;
                for (const CD& c : py.c) fscale = std::max(fscale, std::abs(c));
                if (fscale < 1e-10 * std::max(1.0, std::abs(rx.value))) py = evalAtX(g, rx.value);
                py.trim();
                if (py.degree() <= 0) continue;  // no y-dependence left in the fiber
                for (const RootCluster& ry : univariateRoots(py)) {
                    std::vector<CD> cand = {rx.value, ry.value, CD(1.0, 0.0)};
                    candidates.emplace_back(nsys.polish(cand), std::max(1, ry.multiplicity));
                }
            }
        };

        // Common zeros of a reduced pair, recursing through removed factors.
        // `others` are the minors a removed factor must annihilate for the
        // factor to be a genuine positive-dimensional eigencomponent.
        auto solvePair = [&](auto&& self, BivQ f, BivQ g, std::vector<BivQ> others,
                             int depth) -> bool {
            f.trim();
            g.trim();
            if (depth > 4) return false;
            auto allOthersDivisible = [&](const BivQ& factor) {
                for (const auto& o : others)
                    if (!o.isZero() && !dividesBiv(factor, o)) return false;
                return true;
            };
            auto recurseOnFactor = [&](const BivQ& factor) {
                if (allOthersDivisible(factor)) {
                    cfg.positiveDimensional = true;
                    return;
                }
                for (const auto& o : others) {
                    if (o.isZero() || dividesBiv(factor, o)) continue;
                    // common zeros of (factor, o); any further shared factor
                    // kills all three minors, so others is empty below
                    self(self, factor, o, {}, depth + 1);
                    break;
                }
            };
            if (f.isZero() && g.isZero()) return false;
            if (f.isZero() || g.isZero()) {
                recurseOnFactor(f.isZero() ? g : f);
                return true;
            }
            // vertical-line content is invisible to the y-resultant
            const UniQ cx = gcdUni(bivContentX(f), bivContentX(g));
            if (cx.degree() > 0) {
                BivQ h;
                h.cy = {cx};
                f = divideExactBiv(f, h);
                g = divideExactBiv(g, h);
                recurseOnFactor(h);
            }
            if (f.degY() == 0 && g.degY() == 0) {
                // both now live in Q[x] with coprime contents: no common zeros
                return true;
            }
            UniQ res;
            try {
                res = resultantElimY(f, g);
            } catch (const std::exception&) {
                return false;
            }
            if (!res.isZero()) {
                harvest(res, f, g);
                return true;
            }
            // identically-zero resultant: strip the common curve and retry
            const BivQ h = gcdBivariate(f, g);
            if (h.degY() <= 0 && h.degX() <= 0) return false;
            f = divideExactBiv(f, h);
            g = divideExactBiv(g, h);
            recurseOnFactor(h);
            return self(self, f, g, others, depth + 1);
        };

        for (std::size_t pi = 0; pi < nonzero.size() && !solved; ++pi) {
            for (std::size_t pj = pi + 1; pj < nonzero.size() && !solved; ++pj) {
                const int other = 3 - nonzero[pi] - nonzero[pj];
                solved = solvePair(solvePair, dehom[nonzero[pi]], dehom[nonzero[pj]],
                                   {dehom[other]}, 0);
            }
        }
        if (!solved) return fallback();
    }

    // Line at infinity z = 0: a separate binary problem in (x, y).
    std::vector<PolyQ> atInf;
    for (const auto& m : sysQ.minors) atInf.push_back(m.setVarToZero(2));
    if (atInf[0].isZero() && atInf[1].isZero() && atInf[2].isZero()) {
        cfg.positiveDimensional = true;
    } else {
        const PolyQ* pick = nullptr;
        for (const auto& m : atInf)
            if (!m.isZero()) pick = &m;
        // restrict to two variables (x, y)
        PolyQ bin(2);
        for (const auto& [e, c] : pick->terms()) bin.addTerm({e[0], e[1]}, c);
        for (const BinaryRoot& r : binaryFormRoots(bin)) {
            std::vector<CD> cand = {r.point.coords()[0], r.point.coords()[1], CD(0.0, 0.0)};
            candidates.emplace_back(nsys.polish(cand), r.multiplicity);
        }
    }

    // Residual filter on all three minors, then cluster.
    std::vector<std::pair<std::vector<CD>, int>> accepted;
    for (auto& [coords, mult] : candidates)
        if (nsys.residual(coords) < opts.residualTol) accepted.emplace_back(coords, mult);
    appendClustered(cfg, nsys, std::move(accepted), opts);
    cfg.sortDeterministic();
    return cfg;
}

EigenConfiguration solveTernary(const TensorC& a, int ell, const SolveOptions& opts) {
    bool real = true;
    for (const CD& e : a.entries)
        if (e.imag() != 0.0) real = false;
    if (!real) {
        EigenConfiguration h = solveGeneral(a, ell, opts);
        return h;
    }
    EigenConfiguration cfg = solveTernary(rationalizeTensor(a), ell, opts);
    if (opts.crossCheck) {
        SolveOptions o = opts;
        o.crossCheck = false;
        EigenConfiguration h = solveGeneral(a, ell, o);
        if (!h.positiveDimensional && !cfg.positiveDimensional) {
            const double dist = hausdorffDistance(cfg.pointList(), h.pointList());
            if (dist > 1e-6) {
                // Keep the exact-elimination result but merge any extra
                // verified points the tracker found.
                NumericSystem nsys{[&] {
                    EigenSystem<CD> s = eigenSystem(a, ell, 1);
                    return s;
                }()};
                for (const auto& rec : h.points) {
                    bool known = false;
                    for (const auto& mine : cfg.points)
                        if (mine.point.approxEqual(rec.point, opts.dedupTol)) known = true;
                    if (!known && rec.residual < opts.residualTol) cfg.points.push_back(rec);
                }
                cfg.sortDeterministic();
            }
        }
    }
    return cfg;
}

EigenConfiguration solveAuto(const TensorC& a, int ell, const SolveOptions& opts) {
    if (a.n == 2) return solveBinary(a, ell, 1);
    if (a.n == 3) return solveTernary(a, ell, opts);
    if (a.n == 4) return solveGeneral(a, ell, opts);
    throw std::invalid_argument("solveAuto: n <= 4 supported");
}

EigenConfiguration solveAuto(const TensorQ& a, int ell, const SolveOptions& opts) {
    if (a.n == 2) return solveBinary(a, ell, 1);
    if (a.n == 3) return solveTernary(a, ell, opts);
    if (a.n == 4) return solveGeneral(toComplexTensor(a), ell, opts);
    throw std::invalid_argument("solveAuto: n <= 4 supported");
}

CD eigenvalueOf(const TensorC& a, int ell, const ProjectivePoint& p, double residualTol) {
    NumericSystem nsys{eigenSystem(a, ell, 1)};
    if (nsys.residual(p.coords()) > residualTol)
        throw std::invalid_argument("eigenvalueOf: point is not an eigenpoint at this tolerance");
    return nsys.eigenvalue(p.coords());
}

// ---------------------------------------------------------------------------
// Pencil discriminant degrees (exact)
// ---------------------------------------------------------------------------

namespace {

// Coefficient vectors of the binary eigenpoint form of tensor t (n=2, ell=1..):
// x2^ell psi1 - x1^ell psi2, as a vector over the monomial basis of degree
// ell + d - 1.
std::vector<Rat> binaryFormCoeffs(const TensorQ& t, int ell) {
    const EigenSystem<Rat> sys = eigenSystem(t, ell, 1);
    const PolyQ& m = sys.minors[0];
    const int deg = ell + t.d - 1;
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1, Rat(0));
    for (const auto& [e, coef] : m.terms()) c[e[0]] += coef;
    return c;
}

PencilDegreeResult pencilDegreeBinary(const TensorQ& a, const TensorQ& b, int ell) {
    // F(x, y; s, t) has coefficients  s*ca[k] + t*cb[k]; the map tensor -> form
    // is linear, so the pencil of tensors gives a pencil of forms.
    std::vector<Rat> ca = binaryFormCoeffs(a, ell);
    std::vector<Rat> cb = binaryFormCoeffs(b, ell);
    PencilDegreeResult out;

    // Effective degree of the family: top coefficients that vanish for the
    // whole pencil drop out (degree-drop case, observed degree reported).
    while (!ca.empty() && ca.back().is_zero() && cb.back().is_zero()) {
        ca.pop_back();
        cb.pop_back();
    }
    if (ca.size() <= 1) {
        out.degenerate = true;
        return out;
    }

    // Content removal: if all coefficient pairs (ca[k], cb[k]) are parallel as
    // linear forms in (s,t), the pencil of forms is a fixed form up to scale.
    bool parallel = true;
    std::size_t ref = 0;
    while (ref < ca.size() && ca[ref].is_zero() && cb[ref].is_zero()) ++ref;
    for (std::size_t k = 0; k < ca.size(); ++k)
        if (Rat(ca[k] * cb[ref] - cb[k] * ca[ref]) != 0) parallel = false;
    if (parallel) {
        out.degenerate = true;
        out.degree = 0;
        return out;
    }

    // The discriminant restricted to the pencil is a binary form in (s,t);
    // interpolate disc(s,1) and disc(1,t) and take the larger degree.
    auto sampleDegree = [&](bool sFirst) -> long long {
        const int dForm = static_cast<int>(ca.size()) - 1;
        const int degBound = 2 * dForm;  // loose bound for the nodes
        std::vector<Rat> nodes, values;
        long long tt = 0;
        int skipped = 0;
        while (static_cast<int>(nodes.size()) < degBound + 1 && skipped < degBound + 4) {
            const Rat t0(tt);
            tt = (tt > 0) ? -tt : -tt + 1;
            std::vector<Rat> coeffs(ca.size());
            for (std::size_t k = 0; k < ca.size(); ++k)
                coeffs[k] = sFirst ? (t0 * ca[k] + cb[k]) : (ca[k] + t0 * cb[k]);
            UniQ p{std::vector<Rat>(coeffs)};
            p.trim();
            if (p.degree() != dForm) {
                ++skipped;  // leading coefficient vanished at this node
                continue;
            }
            nodes.push_back(t0);
            values.push_back(discriminantUni(p));
        }
        // Newton interpolation through the collected nodes.
        const std::size_t n = nodes.size();
        std::vector<Rat> dd = values;
        for (std::size_t level = 1; level < n; ++level)
            for (std::size_t i = n - 1; i >= level; --i) {
                dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
                if (i == level) break;
            }
        UniQ acc(std::vector<Rat>{dd[n - 1]});
        for (std::size_t i = n - 1; i-- > 0;) {
            UniQ lin(std::vector<Rat>{-nodes[i], Rat(1)});
            acc = acc * lin + UniQ(std::vector<Rat>{dd[i]});
        }
        return acc.degree();
    };
    const long long d1 = sampleDegree(true);
    const long long d2 = sampleDegree(false);
    out.degree = std::max<long long>(std::max(d1, d2), 0);
    if (d1 < 0 && d2 < 0) {
        out.degenerate = true;  // discriminant vanishes identically on the pencil
        out.degree = 0;
    }
    return out;
}

// Characteristic polynomial of a rational matrix, exact, by interpolation of
// det(M - lambda I) at n+1 nodes.
UniQ charPoly(const MatQ& m) {
    const int n = m.rows;
    std::vector<Rat> nodes, values;
    for (int k = 0; k <= n; ++k) {
        const Rat l(k);
        MatQ s = m;
        for (int i = 0; i < n; ++i) s.at(i, i) -= l;
        nodes.push_back(l);
        values.push_back(determinantExact(s));
    }
    std::vector<Rat> dd = values;
    const std::size_t nn = nodes.size();
    for (std::size_t level = 1; level < nn; ++level)
        for (std::size_t i = nn - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    UniQ acc(std::vector<Rat>{dd[nn - 1]});
    for (std::size_t i = nn - 1; i-- > 0;) {
        UniQ lin(std::vector<Rat>{-nodes[i], Rat(1)});
        acc = acc * lin + UniQ(std::vector<Rat>{dd[i]});
    }
    return acc;
}

PencilDegreeResult pencilDegreeMatrix(const TensorQ& a, const TensorQ& b) {
    const int n = a.n;
    auto toMat = [&](const TensorQ& t) {
        MatQ m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = t.entries[static_cast<std::size_t>(i) * n + j];
        return m;
    };
    const MatQ ma = toMat(a), mb = toMat(b);
    PencilDegreeResult out;
    const int degBound = n * (n - 1);
    auto sampleDegree = [&](bool sFirst) -> long long {
        std::vector<Rat> nodes, values;
        long long tt = 0;
        while (static_cast<int>(nodes.size()) < degBound + 1) {
            const Rat t0(tt);
            tt = (tt > 0) ? -tt : -tt + 1;
            MatQ m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    m.at(i, j) = sFirst ? (t0 * ma.at(i, j) + mb.at(i, j))
                                        : (ma.at(i, j) + t0 * mb.at(i, j));
            const UniQ p = charPoly(m);
            nodes.push_back(t0);
            values.push_back(discriminantUni(p));
        }
        const std::size_t nn = nodes.size();
        std::vector<Rat> dd = values;
        for (std::size_t level = 1; level < nn; ++level)
            for (std::size_t i = nn - 1; i >= level; --i) {
                dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
                if (i == level) break;
            }
        UniQ acc(std::vector<Rat>{dd[nn - 1]});
        for (std::size_t i = nn - 1; i-- > 0;) {
            UniQ lin(std::vector<Rat>{-nodes[i], Rat(1)});
            acc = acc * lin + UniQ(std::vector<Rat>{dd[i]});
        }
        return acc.degree();
    };
    const long long d1 = sampleDegree(true);
    const long long d2 = sampleDegree(false);
    out.degree = std::max<long long>(std::max(d1, d2), 0);
    if (d1 < 0 && d2 < 0) {
        out.degenerate = true;
        out.degree = 0;
    }
    return out;
}

}  // namespace

PencilDegreeResult pencilDiscriminantDegree(const TensorQ& a, const TensorQ& b, int ell) {
    if (a.n != b.n || a.d != b.d)
        throw std::invalid_argument("pencilDiscriminantDegree: formats must match");
    if (a.n == 2) return pencilDegreeBinary(a, b, ell);
    if (a.d == 2) {
        if (ell != 1) throw std::invalid_argument("pencilDiscriminantDegree: matrix case needs ell=1");
        return pencilDegreeMatrix(a, b);
    }
    throw std::invalid_argument("pencilDiscriminantDegree: supported cases are n=2 or d=2");
}

}  // namespace eigenpoints
