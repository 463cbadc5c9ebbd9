#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <vector>

#include "eigenpoints/solver.hpp"

namespace eigenpoints {

namespace {

using EMat = Eigen::MatrixXcd;
using EVec = Eigen::VectorXcd;

struct ChartSystem {
    int n = 0;        // ambient variables
    int nv = 0;       // chart variables (n-1)
    int deg = 0;      // common total degree of the square system
    std::vector<CD> p0;             // base point of the chart, u . p0 = 1
    std::vector<std::vector<CD>> basis;  // nv vectors spanning u-perp
    std::vector<CompiledPoly> g;    // square system in chart coordinates

    std::vector<CD> toAmbient(const EVec& y) const {
        std::vector<CD> x = p0;
        for (int k = 0; k < nv; ++k)
            for (int i = 0; i < n; ++i) x[i] += basis[k][i] * y(k);
        return x;
    }

    void eval(const EVec& y, EVec& out) const {
        for (int i = 0; i < nv; ++i) out(i) = g[i].eval(y.data());
    }
    void jacobian(const EVec& y, EMat& out) const {
        std::vector<CD> grad(nv);
        for (int i = 0; i < nv; ++i) {
            g[i].grad(y.data(), grad.data());
            for (int j = 0; j < nv; ++j) out(i, j) = grad[j];
        }
    }
};

CD randomUnitComplex(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * 3.14159265358979323846);
    const double a = ang(rng);
    return CD(std::cos(a), std::sin(a));
}

CD randomGaussianComplex(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    return CD(g(rng), g(rng));
}

// Build the randomized square system on a random affine chart u.x = 1.
ChartSystem buildChart(const EigenSystem<CD>& sys, std::mt19937_64& rng) {
    ChartSystem cs;
    cs.n = sys.n;
    cs.nv = sys.n - 1;

    std::vector<CD> u(cs.n);
    for (CD& c : u) c = randomGaussianComplex(rng);

    // p0 = conj(u)/|u|^2 satisfies u.p0 = 1; chart basis from the kernel of u^T.
    double nrm = 0.0;
    for (const CD& c : u) nrm += std::norm(c);
    cs.p0.resize(cs.n);
    for (int i = 0; i < cs.n; ++i) cs.p0[i] = std::conj(u[i]) / nrm;
    MatC urow(1, cs.n);
    for (int i = 0; i < cs.n; ++i) urow.at(0, i) = u[i];
    cs.basis = nullspaceFloat(urow, 1e-14);
    if (static_cast<int>(cs.basis.size()) != cs.nv)
        throw std::runtime_error("buildChart: chart basis construction failed");

    // Linear substitution x_i = p0_i + sum_k basis_k[i] y_k.
    std::vector<PolyC> args;
    for (int i = 0; i < cs.n; ++i) {
        PolyC lin(cs.nv);
        lin.addTerm(std::vector<int>(cs.nv, 0), cs.p0[i]);
        for (int k = 0; k < cs.nv; ++k) {
            std::vector<int> e(cs.nv, 0);
            e[k] = 1;
            lin.addTerm(e, cs.basis[k][i]);
        }
        args.push_back(std::move(lin));
    }
    std::vector<PolyC> substituted;
    for (const auto& m : sys.minors) substituted.push_back(m.substitute(args));

    // n-1 random complex combinations of the minors.
    const int mcount = static_cast<int>(substituted.size());
    cs.deg = 0;
    for (int i = 0; i < cs.nv; ++i) {
        PolyC gi(cs.nv);
        for (int j = 0; j < mcount; ++j) gi = gi + substituted[j] * randomGaussianComplex(rng);
        cs.deg = std::max(cs.deg, gi.degree());
        cs.g.push_back(CompiledPoly::compile(gi));
    }
    return cs;
}

struct PathOutcome {
    enum class Kind { Finite, Infinity, Failed } kind = Kind::Failed;
    EVec y;
};

// Track one start point of the total-degree homotopy
//   H(y,t) = (1-t) gamma G0(y) + t G(y),  G0_k = y_k^deg - s_k.
PathOutcome trackPath(const ChartSystem& cs, const std::vector<CD>& s, const CD& gamma, EVec y) {
    const int nv = cs.nv;
    const int D = cs.deg;
    auto evalH = [&](const EVec& yy, double t, EVec& out) {
        cs.eval(yy, out);
        for (int k = 0; k < nv; ++k) {
            CD p(1.0, 0.0);
            for (int q = 0; q < D; ++q) p *= yy(k);
            out(k) = t * out(k) + (1.0 - t) * gamma * (p - s[k]);
        }
    };
    auto evalJ = [&](const EVec& yy, double t, EMat& out) {
        cs.jacobian(yy, out);
        out *= t;
        for (int k = 0; k < nv; ++k) {
            CD p(static_cast<double>(D), 0.0);
            for (int q = 0; q < D - 1; ++q) p *= yy(k);
            out(k, k) += (1.0 - t) * gamma * p;
        }
    };
    auto evalDt = [&](const EVec& yy, EVec& out) {
        cs.eval(yy, out);
        for (int k = 0; k < nv; ++k) {
            CD p(1.0, 0.0);
            for (int q = 0; q < D; ++q) p *= yy(k);
            out(k) -= gamma * (p - s[k]);
        }
    };

    double t = 0.0, dt = 0.02;
    EMat J(nv, nv);
    EVec h(nv), dy(nv), dtvec(nv);
    int steps = 0;
    bool stalled = false;
    while (t < 1.0 && steps < 20000) {
        ++steps;
        const double tNext = std::min(1.0, t + dt);
        // Euler predictor
        evalJ(y, t, J);
        evalDt(y, dtvec);
        Eigen::PartialPivLU<EMat> lu(J);
        EVec yPred = y - lu.solve(dtvec) * (tNext - t);
        // Newton corrector (up to 3 iterations)
        bool ok = false;
        const double corrTol = (tNext > 0.95) ? 1e-11 : 1e-9;
        EVec yc = yPred;
        for (int it = 0; it < 3; ++it) {
            evalH(yc, tNext, h);
            evalJ(yc, tNext, J);
            Eigen::PartialPivLU<EMat> lu2(J);
            EVec step = lu2.solve(h);
            yc -= step;
            if (step.norm() < corrTol * std::max(1.0, yc.norm())) {
                ok = true;
                break;
            }
        }
        if (ok && yc.norm() < 1e9) {
            y = yc;
            t = tNext;
            dt = std::min(0.1, dt * 1.5);
        } else {
            dt *= 0.5;
            if (dt < 1e-10) {
                if (y.norm() > 1e6) return {PathOutcome::Kind::Infinity, y};
                // A stall close to t=1 is typical for paths ending on a
                // singular (positive-dimensional) part of the target variety;
                // hand the iterate to the endgame instead of discarding it.
                if (t >= 0.95) {
                    stalled = true;
                    break;
                }
                return {PathOutcome::Kind::Failed, y};
            }
        }
        if (y.norm() > 1e8) return {PathOutcome::Kind::Infinity, y};
    }
    if (t < 1.0 && !stalled) return {PathOutcome::Kind::Failed, y};
    // Endgame: polish on the target system with capped Newton steps.
    EVec h2(nv);
    for (int it = 0; it < 60; ++it) {
        cs.eval(y, h2);
        cs.jacobian(y, J);
        EVec step = Eigen::CompleteOrthogonalDecomposition<EMat>(J).solve(h2);
        const double sn = step.norm();
        if (sn > 1.0) step *= 1.0 / sn;  // cap steps near singular endpoints
        y -= step;
        if (sn < 1e-13 * std::max(1.0, y.norm())) break;
    }
    if (y.norm() > 1e8) return {PathOutcome::Kind::Infinity, y};
    return {PathOutcome::Kind::Finite, y};
}

struct ChartRun {
    std::vector<std::vector<CD>> finiteAmbient;  // ambient coordinates of finite endpoints
    int failed = 0;
    int total = 0;
};

ChartRun runChart(const EigenSystem<CD>& sys, std::mt19937_64& rng, int threads) {
    ChartSystem cs = buildChart(sys, rng);
    const int nv = cs.nv, D = cs.deg;
    const CD gamma = randomUnitComplex(rng);
    std::vector<CD> s(nv);
    std::uniform_real_distribution<double> rad(0.7, 1.3);
    for (CD& c : s) c = randomUnitComplex(rng) * rad(rng);

    // Start points: all combinations of D-th roots of s_k.
    std::vector<std::vector<CD>> rootsOf(nv);
    for (int k = 0; k < nv; ++k) {
        const double r = std::pow(std::abs(s[k]), 1.0 / D);
        const double a = std::arg(s[k]) / D;
        for (int j = 0; j < D; ++j) {
            const double ang = a + 2.0 * 3.14159265358979323846 * j / D;
            rootsOf[k].push_back(CD(r * std::cos(ang), r * std::sin(ang)));
        }
    }
    int total = 1;
    for (int k = 0; k < nv; ++k) total *= D;

    ChartRun run;
    run.total = total;
    std::vector<PathOutcome> outcomes(total);
    auto worker = [&](int lo, int hi) {
        for (int idx = lo; idx < hi; ++idx) {
            EVec y0(nv);
            int rem = idx;
            for (int k = 0; k < nv; ++k) {
                y0(k) = rootsOf[k][rem % D];
                rem /= D;
            }
            outcomes[idx] = trackPath(cs, s, gamma, y0);
        }
    };
    if (threads <= 1) {
        worker(0, total);
    } else {
        std::vector<std::future<void>> futs;
        const int chunk = (total + threads - 1) / threads;
        for (int c = 0; c < threads; ++c) {
            const int lo = c * chunk, hi = std::min(total, lo + chunk);
            if (lo < hi) futs.push_back(std::async(std::launch::async, worker, lo, hi));
        }
        for (auto& f : futs) f.get();
    }
    for (const auto& o : outcomes) {
        if (o.kind == PathOutcome::Kind::Finite)
            run.finiteAmbient.push_back(cs.toAmbient(o.y));
        else if (o.kind == PathOutcome::Kind::Failed)
            ++run.failed;
    }
    return run;
}

}  // namespace

EigenConfiguration solveGeneral(const TensorC& a, int ell, const SolveOptions& opts) {
    if (a.n != 3 && a.n != 4) throw std::invalid_argument("solveGeneral: n in {3,4} required");
    EigenConfiguration cfg;
    cfg.n = a.n;
    cfg.d = a.d;
    cfg.ell = ell;
    cfg.method = SolveMethod::Homotopy;

    const EigenSystem<CD> sys = eigenSystem(a, ell, 1);
    NumericSystem nsys(sys);
    bool anyMinor = false;
    for (const auto& m : sys.minors)
        if (!m.isZero()) anyMinor = true;
    if (!anyMinor) {
        cfg.positiveDimensional = true;
        return cfg;
    }

    const int maxAttempts = 3;
    std::string lastError;
    for (int attempt = 0; attempt < maxAttempts; ++attempt) {
        std::mt19937_64 rng(splitMix64(opts.seed ^ (0x9e3779b9ULL * (attempt + 1))));
        cfg.points.clear();
        cfg.positiveDimensional = false;
        cfg.lostPaths = 0;

        int totalPaths = 0, failedPaths = 0;
        std::vector<std::vector<CD>> isolatedPts;
        std::vector<std::vector<CD>> singularPts;
        for (int chart = 0; chart < 2; ++chart) {
            ChartRun run = runChart(sys, rng, opts.threads);
            totalPaths += run.total;
            failedPaths += run.failed;
            for (auto& amb : run.finiteAmbient) {
                std::vector<CD> polished = nsys.polish(amb);
                if (nsys.residual(polished) > opts.residualTol) continue;  // spurious endpoint
                const double ratio = nsys.jacobianConditionRatio(polished);
                if (ratio > opts.isolationTol)
                    isolatedPts.push_back(std::move(polished));
                else
                    singularPts.push_back(std::move(polished));
            }
        }
        cfg.lostPaths = failedPaths;
        if (totalPaths > 0 && failedPaths > 0.05 * totalPaths) {
            lastError = "homotopy: more than 5% of paths failed";
            continue;
        }

        std::vector<std::pair<std::vector<CD>, int>> cands;
        for (auto& p : isolatedPts) cands.emplace_back(std::move(p), 1);
        // Isolated points are found once per chart; collapse duplicates to
        // multiplicity 1 (path multiplicity is not scheme multiplicity).
        EigenConfiguration merged;
        merged.n = cfg.n;
        merged.d = cfg.d;
        merged.ell = ell;
        for (auto& [coords, mult] : cands) {
            ProjectivePoint p = ProjectivePoint::fromCoords(coords);
            bool known = false;
            for (auto& rec : merged.points)
                if (rec.point.approxEqual(p, opts.dedupTol)) known = true;
            if (!known) {
                EigenPointRecord rec;
                rec.point = p;
                rec.multiplicity = 1;
                rec.residual = nsys.residual(p.coords());
                rec.eigenvalue = nsys.eigenvalue(p.coords());
                rec.isolated = true;
                rec.real = p.isReal();
                merged.points.push_back(std::move(rec));
            }
        }
        cfg.points = std::move(merged.points);
        cfg.positiveDimensional = !singularPts.empty();
        cfg.sortDeterministic();
        return cfg;
    }
    throw std::runtime_error(lastError.empty() ? "homotopy: failed" : lastError);
}

}  // namespace eigenpoints
