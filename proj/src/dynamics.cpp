#include "eigenpoints/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <map>
#include <random>
#include <stdexcept>

#include "eigenpoints/numeric_system.hpp"
#include "eigenpoints/resultant.hpp"

namespace eigenpoints {

PolyQ LineArrangement::productForm() const {
    PolyQ phi = PolyQ::constant(3, Rat(1));
    for (const auto& l : lines) {
        PolyQ lin(3);
        for (int i = 0; i < 3; ++i) {
            std::vector<int> e(3, 0);
            e[i] = 1;
            lin.addTerm(e, l[i]);
        }
        phi = phi * lin;
    }
    return phi;
}

LineArrangement makeArrangement(std::vector<std::array<Rat, 3>> lines) {
    LineArrangement arr;
    arr.lines = std::move(lines);
    const int d = static_cast<int>(arr.lines.size());
    arr.generic = true;
    // pairwise independent
    for (int i = 0; i < d && arr.generic; ++i)
        for (int j = i + 1; j < d && arr.generic; ++j) {
            bool dep = true;
            for (int a = 0; a < 3 && dep; ++a)
                for (int b = a + 1; b < 3 && dep; ++b)
                    if (Rat(arr.lines[i][a] * arr.lines[j][b] - arr.lines[i][b] * arr.lines[j][a]) != 0)
                        dep = false;
            if (dep) {
                arr.generic = false;
                arr.offendingTriple = {i, j, -1};
            }
        }
    // no three concurrent
    for (int i = 0; i < d && arr.generic; ++i)
        for (int j = i + 1; j < d && arr.generic; ++j)
            for (int k = j + 1; k < d && arr.generic; ++k) {
                MatQ m(3, 3);
                for (int c = 0; c < 3; ++c) {
                    m.at(0, c) = arr.lines[i][c];
                    m.at(1, c) = arr.lines[j][c];
                    m.at(2, c) = arr.lines[k][c];
                }
                if (determinantExact(m).is_zero()) {
                    arr.generic = false;
                    arr.offendingTriple = {i, j, k};
                }
            }
    return arr;
}

std::vector<ProjectivePoint> arrangementVertices(const LineArrangement& arr) {
    if (!arr.generic) {
        std::string msg = "arrangementVertices: arrangement is not generic";
        if (arr.offendingTriple) {
            const auto& t = *arr.offendingTriple;
            msg += " (lines " + std::to_string(t[0]) + "," + std::to_string(t[1]);
            if (t[2] >= 0) msg += "," + std::to_string(t[2]);
            msg += ")";
        }
        throw std::invalid_argument(msg);
    }
    std::vector<ProjectivePoint> out;
    const int d = static_cast<int>(arr.lines.size());
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const auto& a = arr.lines[i];
            const auto& b = arr.lines[j];
            const Rat cx = Rat(a[1] * b[2] - a[2] * b[1]);
            const Rat cy = Rat(a[2] * b[0] - a[0] * b[2]);
            const Rat cz = Rat(a[0] * b[1] - a[1] * b[0]);
            out.push_back(ProjectivePoint::fromCoords({toComplex(cx), toComplex(cy), toComplex(cz)}));
        }
    return out;
}

namespace {

struct RealLines {
    std::vector<std::array<double, 3>> l;  // unit-normalized coefficient vectors

    double eval(int i, const std::array<double, 3>& x) const {
        return l[i][0] * x[0] + l[i][1] * x[1] + l[i][2] * x[2];
    }
    double margin(const std::vector<int>& signs, const std::array<double, 3>& x) const {
        double m = 1e300;
        for (std::size_t i = 0; i < l.size(); ++i) m = std::min(m, signs[i] * eval(static_cast<int>(i), x));
        return m;
    }
};

RealLines realLines(const LineArrangement& arr) {
    RealLines out;
    for (const auto& line : arr.lines) {
        std::array<double, 3> v = {toDouble(line[0]), toDouble(line[1]), toDouble(line[2])};
        const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        for (double& c : v) c /= n;
        out.l.push_back(v);
    }
    return out;
}

std::array<double, 3> normalize3(std::array<double, 3> v) {
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    for (double& c : v) c /= n;
    return v;
}

std::vector<int> signVectorCanonical(const RealLines& rl, std::array<double, 3>& x) {
    std::vector<int> s(rl.l.size());
    for (std::size_t i = 0; i < rl.l.size(); ++i)
        s[i] = (rl.eval(static_cast<int>(i), x) > 0) ? 1 : -1;
    if (!s.empty() && s[0] < 0) {  // canonical up to global flip
        for (auto& v : s) v = -v;
        for (double& c : x) c = -c;
    }
    return s;
}

}  // namespace

std::vector<Region> regionRepresentatives(const LineArrangement& arr, std::uint64_t seed,
                                          bool waiveGenericity) {
    if (!arr.generic && !waiveGenericity)
        throw std::invalid_argument("regionRepresentatives: arrangement is not generic");
    const RealLines rl = realLines(arr);
    const int d = static_cast<int>(arr.lines.size());
    std::map<std::vector<int>, Region> regions;

    auto offer = [&](std::array<double, 3> x) {
        x = normalize3(x);
        std::vector<int> s = signVectorCanonical(rl, x);
        const double m = rl.margin(s, x);
        if (m <= 1e-12) return;  // on or too close to a line
        auto it = regions.find(s);
        if (it == regions.end() || it->second.margin < m) {
            Region r;
            r.signs = s;
            r.representative = x;
            r.margin = m;
            regions[s] = r;
        }
    };

    // Vertex-perturbation enumeration: every region of an arrangement with
    // d >= 3 lines touches a vertex; the four quadrants around each vertex
    // cover all adjacent regions.
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const auto &a = rl.l[i], &b = rl.l[j];
            std::array<double, 3> v = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                       a[0] * b[1] - a[1] * b[0]};
            const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            if (n < 1e-14) continue;  // parallel in the waived non-generic case
            for (double& c : v) c /= n;
            // distance to the nearest other line bounds the safe perturbation
            double room = 1.0;
            for (int k = 0; k < d; ++k)
                if (k != i && k != j) room = std::min(room, std::abs(rl.eval(k, v)));
            const double eps = std::max(1e-9, 0.25 * room);
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    std::array<double, 3> x;
                    for (int c = 0; c < 3; ++c)
                        x[c] = v[c] + si * eps * a[c] + sj * eps * b[c];
                    offer(x);
                }
        }
    }
    // Random sphere sampling tightens margins and covers d < 3 edge cases.
    std::mt19937_64 rng(splitMix64(seed ^ 0xa5a5a5a5ULL));
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int samples = 4000 + 2000 * d;
    for (int it = 0; it < samples; ++it) offer({gauss(rng), gauss(rng), gauss(rng)});

    // Local margin ascent on each representative.
    for (auto& [s, r] : regions) {
        double step = 0.1;
        while (step > 1e-6) {
            bool improved = false;
            for (int dir = 0; dir < 6; ++dir) {
                std::array<double, 3> x = r.representative;
                x[dir / 2] += (dir % 2 ? -step : step);
                x = normalize3(x);
                std::vector<int> s2 = signVectorCanonical(rl, x);
                if (s2 != r.signs) continue;
                const double m = rl.margin(r.signs, x);
                if (m > r.margin) {
                    r.representative = x;
                    r.margin = m;
                    improved = true;
                }
            }
            if (!improved) step *= 0.5;
        }
    }

    std::vector<Region> out;
    for (auto& [s, r] : regions) out.push_back(r);
    return out;
}

ProjectivePoint regionEigenpoint(const LineArrangement& arr, const Region& region) {
    const RealLines rl = realLines(arr);
    const int d = static_cast<int>(arr.lines.size());
    std::array<double, 3> x = normalize3(region.representative);
    if (rl.margin(region.signs, x) <= 0)
        throw std::invalid_argument("regionEigenpoint: representative not interior");

    auto value = [&](const std::array<double, 3>& p) {
        double f = 0.0;
        for (int i = 0; i < d; ++i) f += std::log(std::abs(rl.eval(i, p)));
        return f;
    };
    auto projGrad = [&](const std::array<double, 3>& p) {
        std::array<double, 3> g = {0, 0, 0};
        for (int i = 0; i < d; ++i) {
            const double v = rl.eval(i, p);
            for (int c = 0; c < 3; ++c) g[c] += rl.l[i][c] / v;
        }
        const double dot = g[0] * p[0] + g[1] * p[1] + g[2] * p[2];
        for (int c = 0; c < 3; ++c) g[c] -= dot * p[c];
        return g;
    };

    auto inRegion = [&](std::array<double, 3>& p) {
        std::array<double, 3> probe = p;
        const std::vector<int> s2 = signVectorCanonical(rl, probe);
        p = probe;
        return s2 == region.signs;
    };

    // Coarse projected-gradient ascent with backtracking and region clipping.
    double fx = value(x);
    for (int it = 0; it < 200; ++it) {
        std::array<double, 3> g = projGrad(x);
        const double gn = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
        if (gn < 1e-6) break;
        double t = std::min(0.5, 0.5 / gn);
        bool stepped = false;
        int clips = 0;
        while (t > 1e-14) {
            std::array<double, 3> xn = x;
            for (int c = 0; c < 3; ++c) xn[c] += t * g[c];
            xn = normalize3(xn);
            if (!inRegion(xn)) {
                t *= 0.5;  // step left the region; clip
                if (++clips > 10)
                    throw std::runtime_error("regionEigenpoint: ascent kept leaving the region");
                continue;
            }
            const double fn = value(xn);
            if (fn > fx) {
                x = xn;
                fx = fn;
                stepped = true;
                break;
            }
            t *= 0.5;
        }
        if (!stepped) break;
    }

    // The objective is strictly concave on the region, so Riemannian Newton
    // converges quadratically: Hess f = P (sum -l l^T / L^2) P - (x.grad f) P
    // on the tangent plane.
    for (int it = 0; it < 100; ++it) {
        std::array<double, 3> g = {0, 0, 0};
        double hess[3][3] = {};
        for (int i = 0; i < d; ++i) {
            const double v = rl.eval(i, x);
            for (int c = 0; c < 3; ++c) {
                g[c] += rl.l[i][c] / v;
                for (int cc = 0; cc < 3; ++cc) hess[c][cc] -= rl.l[i][c] * rl.l[i][cc] / (v * v);
            }
        }
        const double gdotx = g[0] * x[0] + g[1] * x[1] + g[2] * x[2];
        std::array<double, 3> pg;
        for (int c = 0; c < 3; ++c) pg[c] = g[c] - gdotx * x[c];
        const double pgNorm = std::sqrt(pg[0] * pg[0] + pg[1] * pg[1] + pg[2] * pg[2]);
        if (pgNorm < 1e-12) break;
        // tangent basis
        std::array<double, 3> t1 = {-x[1], x[0], 0.0};
        if (std::abs(x[0]) + std::abs(x[1]) < 0.1) t1 = {0.0, -x[2], x[1]};
        t1 = normalize3(t1);
        std::array<double, 3> t2 = {x[1] * t1[2] - x[2] * t1[1], x[2] * t1[0] - x[0] * t1[2],
                                    x[0] * t1[1] - x[1] * t1[0]};
        auto quad = [&](const std::array<double, 3>& a, const std::array<double, 3>& b) {
            double s = 0;
            for (int c = 0; c < 3; ++c)
                for (int cc = 0; cc < 3; ++cc) s += a[c] * hess[c][cc] * b[cc];
            return s;
        };
        const double h11 = quad(t1, t1) - gdotx, h12 = quad(t1, t2);
        const double h22 = quad(t2, t2) - gdotx;
        const double g1 = pg[0] * t1[0] + pg[1] * t1[1] + pg[2] * t1[2];
        const double g2 = pg[0] * t2[0] + pg[1] * t2[1] + pg[2] * t2[2];
        const double det = h11 * h22 - h12 * h12;
        double d1, d2;
        if (std::abs(det) > 1e-300) {
            d1 = -(h22 * g1 - h12 * g2) / det;
            d2 = -(-h12 * g1 + h11 * g2) / det;
        } else {
            d1 = g1;
            d2 = g2;
        }
        double t = 1.0;
        bool stepped = false;
        while (t > 1e-12) {
            std::array<double, 3> xn;
            for (int c = 0; c < 3; ++c) xn[c] = x[c] + t * (d1 * t1[c] + d2 * t2[c]);
            xn = normalize3(xn);
            if (inRegion(xn)) {
                const double fn = value(xn);
                if (fn >= fx - 1e-12 * std::abs(fx)) {  // tolerate roundoff at the optimum
                    x = xn;
                    fx = fn;
                    stepped = true;
                    break;
                }
            }
            t *= 0.5;
        }
        if (!stepped) break;
    }

    if (!inRegion(x)) throw std::runtime_error("regionEigenpoint: refinement left the region");
    const std::array<double, 3> g = projGrad(x);
    if (std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]) > 1e-9)
        throw std::runtime_error("regionEigenpoint: stationarity tolerance not reached");
    return ProjectivePoint::fromCoords({CD(x[0], 0), CD(x[1], 0), CD(x[2], 0)});
}

EigenConfiguration arrangementEigenconfiguration(const LineArrangement& arr, std::uint64_t seed,
                                                 const SolveOptions& opts) {
    if (!arr.generic)
        throw std::invalid_argument(
            "arrangementEigenconfiguration: non-generic arrangement (the one-eigenpoint-per-region "
            "statement assumes genericity)");
    const int d = static_cast<int>(arr.lines.size());
    EigenConfiguration cfg;
    cfg.n = 3;
    cfg.d = d;
    cfg.ell = 1;
    cfg.method = SolveMethod::Resultant;

    const PolyQ phi = arr.productForm();
    EigenSystem<CD> sys = eigenSystemFromForm(toComplexPoly(phi), 1);
    NumericSystem nsys(sys);
    auto addPoint = [&](ProjectivePoint p, bool vertex) {
        EigenPointRecord rec;
        rec.point = std::move(p);
        rec.residual = nsys.residual(rec.point.coords());
        rec.eigenvalue = vertex ? CD(0, 0) : nsys.eigenvalue(rec.point.coords());
        rec.isolated = true;
        rec.multiplicity = 1;
        rec.real = rec.point.isReal();
        cfg.points.push_back(std::move(rec));
    };
    for (auto& v : arrangementVertices(arr)) addPoint(v, true);
    for (const Region& r : regionRepresentatives(arr, seed)) addPoint(regionEigenpoint(arr, r), false);
    cfg.sortDeterministic();

    if (opts.crossCheck) {
        SolveOptions o = opts;
        o.crossCheck = false;
        EigenConfiguration viaSolver = solveTernary(tensorFromForm(phi), 1, o);
        if (viaSolver.countDistinct() != cfg.countDistinct() ||
            hausdorffDistance(viaSolver.pointList(), cfg.pointList()) > 1e-6)
            throw std::runtime_error(
                "arrangementEigenconfiguration: geometric and algebraic solutions disagree");
    }
    return cfg;
}

// ---------------------------------------------------------------------------

namespace {

struct RealPsi {
    std::vector<CompiledPoly> psi;
    int n = 0;
    double scale = 1.0;

    std::vector<double> apply(const std::vector<double>& v) const {
        std::vector<CD> x(n);
        for (int i = 0; i < n; ++i) x[i] = CD(v[i], 0);
        std::vector<double> w(n);
        for (int i = 0; i < n; ++i) w[i] = psi[i].eval(x.data()).real();
        return w;
    }
};

RealPsi realPsi(const TensorC& a) {
    for (const CD& e : a.entries)
        if (e.imag() != 0.0)
            throw std::invalid_argument("power method: real tensor required");
    RealPsi out;
    out.n = a.n;
    double s = 0.0;
    for (const auto& p : psiMap(a, 1)) {
        out.psi.push_back(CompiledPoly::compile(p));
        s = std::max(s, out.psi.back().coeffScale);
    }
    out.scale = std::max(1.0, s);
    return out;
}

void signNormalize(std::vector<double>& v) {
    double mx = 0.0;
    for (double c : v) mx = std::max(mx, std::abs(c));
    for (double c : v) {
        if (std::abs(c) > 0.1 * mx) {
            if (c < 0)
                for (double& x : v) x = -x;
            return;
        }
    }
}

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

DynOutcome powerMethodRun(const TensorC& a, std::vector<double> v0, const PowerMethodConfig& cfg) {
    const RealPsi rp = realPsi(a);
    const int n = rp.n;
    if (static_cast<int>(v0.size()) != n) throw std::invalid_argument("powerMethodRun: bad start");
    double nrm = 0.0;
    for (double c : v0) nrm += c * c;
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw std::invalid_argument("powerMethodRun: zero start");
    for (double& c : v0) c /= nrm;
    signNormalize(v0);

    DynOutcome out;
    std::deque<std::vector<double>> history;
    history.push_back(v0);
    std::vector<double> v = v0;
    for (int it = 1; it <= cfg.maxIterations; ++it) {
        std::vector<double> w = rp.apply(v);
        double wn = 0.0;
        for (double c : w) wn += c * c;
        wn = std::sqrt(wn);
        if (wn < cfg.baseLocusTol * rp.scale) {
            out.kind = DynKind::BaseLocus;
            out.points = {v};
            out.iterations = it;
            return out;
        }
        if (cfg.ellRootScaling && cfg.ell > 1) {
            for (double& c : w)
                c = std::copysign(std::pow(std::abs(c), 1.0 / cfg.ell), c);
            wn = 0.0;
            for (double c : w) wn += c * c;
            wn = std::sqrt(wn);
        }
        for (double& c : w) c /= wn;
        signNormalize(w);
        if (dist2(w, v) < cfg.convergenceTol) {
            out.kind = DynKind::Converged;
            out.points = {w};
            out.iterations = it;
            return out;
        }
        // cycle detection against the recent window (length >= 2); a slowly
        // converging trajectory is not a cycle, so require a genuine step
        const bool stepping = dist2(w, v) > 1000 * cfg.cycleTol;
        for (int k = 2; stepping && k <= cfg.cycleWindow && k <= static_cast<int>(history.size());
             ++k) {
            const auto& past = history[history.size() - k];
            if (dist2(w, past) < cfg.cycleTol) {
                out.kind = DynKind::Cycle;
                out.iterations = it;
                for (std::size_t m = history.size() - k; m < history.size(); ++m)
                    out.points.push_back(history[m]);
                return out;
            }
        }
        history.push_back(w);
        if (static_cast<int>(history.size()) > cfg.cycleWindow + 1) history.pop_front();
        v = std::move(w);
    }
    out.kind = DynKind::BudgetExceeded;
    out.points = {v};
    out.iterations = cfg.maxIterations;
    return out;
}

std::vector<RobustPoint> robustEigenpoints(const TensorC& a, int ell, int samples,
                                           std::uint64_t seed, int threads) {
    if (samples < 1) throw std::invalid_argument("robustEigenpoints: samples >= 1");
    const RealPsi rp = realPsi(a);
    const int n = rp.n;
    PowerMethodConfig cfg;
    cfg.ell = ell;
    cfg.ellRootScaling = ell > 1;

    std::vector<std::optional<std::vector<double>>> endpoints(samples);
    auto worker = [&](int lo, int hi) {
        for (int s = lo; s < hi; ++s) {
            std::mt19937_64 rng(splitMix64(seed ^ (0x1234567ULL + s)));
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::vector<double> v0(n);
            for (double& c : v0) c = gauss(rng);
            DynOutcome o = powerMethodRun(a, v0, cfg);
            if (o.kind == DynKind::Converged) endpoints[s] = o.points[0];
        }
    };
    if (threads <= 1) {
        worker(0, samples);
    } else {
        std::vector<std::future<void>> futs;
        const int chunk = (samples + threads - 1) / threads;
        for (int c = 0; c < threads; ++c) {
            const int lo = c * chunk, hi = std::min(samples, lo + chunk);
            if (lo < hi) futs.push_back(std::async(std::launch::async, worker, lo, hi));
        }
        for (auto& f : futs) f.get();
    }

    // cluster endpoints projectively
    std::vector<std::pair<std::vector<double>, int>> clusters;
    for (const auto& e : endpoints) {
        if (!e) continue;
        bool merged = false;
        for (auto& [rep, count] : clusters) {
            double dplus = 0, dminus = 0;
            for (int i = 0; i < n; ++i) {
                dplus += ((*e)[i] - rep[i]) * ((*e)[i] - rep[i]);
                dminus += ((*e)[i] + rep[i]) * ((*e)[i] + rep[i]);
            }
            if (std::min(std::sqrt(dplus), std::sqrt(dminus)) < 1e-6) {
                ++count;
                merged = true;
                break;
            }
        }
        if (!merged) clusters.emplace_back(*e, 1);
    }

    NumericSystem nsys{eigenSystem(a, ell, 1)};
    std::vector<RobustPoint> out;
    for (const auto& [u, count] : clusters) {
        // fixed-point residual
        std::vector<CD> coords(n);
        for (int i = 0; i < n; ++i) coords[i] = CD(u[i], 0);
        const double res = nsys.residual(coords);
        if (res > 1e-8) continue;

        // tangent basis at u
        std::vector<std::vector<double>> tangent;
        for (int i = 0; i < n && static_cast<int>(tangent.size()) < n - 1; ++i) {
            std::vector<double> t(n, 0.0);
            t[i] = 1.0;
            double dot = 0;
            for (int c = 0; c < n; ++c) dot += t[c] * u[c];
            for (int c = 0; c < n; ++c) t[c] -= dot * u[c];
            for (const auto& prev : tangent) {
                double d2 = 0;
                for (int c = 0; c < n; ++c) d2 += t[c] * prev[c];
                for (int c = 0; c < n; ++c) t[c] -= d2 * prev[c];
            }
            double tn = 0;
            for (double c : t) tn += c * c;
            tn = std::sqrt(tn);
            if (tn < 1e-6) continue;
            for (double& c : t) c /= tn;
            tangent.push_back(t);
        }
        const int tdim = static_cast<int>(tangent.size());

        // finite-difference differential of the normalized map, projected
        auto mapOnce = [&](std::vector<double> v) {
            double vn = 0;
            for (double c : v) vn += c * c;
            vn = std::sqrt(vn);
            for (double& c : v) c /= vn;
            std::vector<double> w = rp.apply(v);
            if (cfg.ellRootScaling && ell > 1)
                for (double& c : w) c = std::copysign(std::pow(std::abs(c), 1.0 / ell), c);
            double wn = 0;
            for (double c : w) wn += c * c;
            wn = std::sqrt(wn);
            for (double& c : w) c /= wn;
            // align projectively with u
            double dot = 0;
            for (int c = 0; c < n; ++c) dot += w[c] * u[c];
            if (dot < 0)
                for (double& c : w) c = -c;
            return w;
        };
        const double h = 1e-6;
        MatC jt(tdim, tdim);
        for (int j = 0; j < tdim; ++j) {
            std::vector<double> v = u;
            for (int c = 0; c < n; ++c) v[c] += h * tangent[j][c];
            const std::vector<double> w = mapOnce(v);
            for (int i = 0; i < tdim; ++i) {
                double comp = 0;
                for (int c = 0; c < n; ++c) comp += (w[c] - u[c]) * tangent[i][c];
                jt.at(i, j) = CD(comp / h, 0);
            }
        }
        double rho = 0.0;
        for (const CD& ev : eigenvaluesFloat(jt)) rho = std::max(rho, std::abs(ev));
        if (rho < 1.0 - 1e-6) {
            RobustPoint rpnt;
            rpnt.point = ProjectivePoint::fromCoords(coords);
            rpnt.basinFraction = static_cast<double>(count) / samples;
            rpnt.spectralRadius = rho;
            rpnt.residual = res;
            out.push_back(std::move(rpnt));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RobustPoint& a, const RobustPoint& b) { return a.point.sortsBefore(b.point); });
    return out;
}

SecondIterateResult secondIterateCheck(const PolyQ& phi) {
    SecondIterateResult out;
    if (phi.numVars() != 3 || phi.degree() != 3 || !phi.isHomogeneous())
        throw std::invalid_argument("secondIterateCheck: ternary cubic required");
    std::vector<PolyQ> g;
    for (int i = 0; i < 3; ++i) g.push_back(phi.partialDerivative(i));
    std::vector<PolyQ> comp;
    for (int i = 0; i < 3; ++i) comp.push_back(g[i].substitute(std::span<const PolyQ>(g)));

    // reference coefficient for c
    std::optional<Rat> c;
    for (int i = 0; i < 3 && !c; ++i) {
        const PolyQ target = phi * PolyQ::variable(i, 3);
        for (const auto& [e, coef] : target.terms()) {
            const Rat num = comp[i].coeff(e);
            if (!coef.is_zero()) {
                c = num / coef;
                break;
            }
        }
    }
    if (!c) return out;  // phi == 0 handled by the degree check above
    double dev = 0.0;
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
        const PolyQ diff = comp[i] - (phi * PolyQ::variable(i, 3)) * (*c);
        if (!diff.isZero()) {
            ok = false;
            dev = std::max(dev, diff.maxAbsCoeff());
        }
    }
    out.holds = ok;
    out.c = *c;
    out.maxDeviation = dev;
    return out;
}

std::vector<PerturbationRow> perturbationExperiment(const PolyQ& phi0, const PolyQ& phi1,
                                                    const std::vector<Rat>& epsilons,
                                                    std::uint64_t seed, const SolveOptions& opts) {
    if (phi0.numVars() != phi1.numVars())
        throw std::invalid_argument("perturbationExperiment: variable counts differ");
    const int n = phi0.numVars();
    if (n != 3 && n != 4)
        throw std::invalid_argument("perturbationExperiment: n in {3,4} supported");
    std::vector<PerturbationRow> rows;
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        PerturbationRow row;
        row.epsilon = toDouble(epsilons[i]);
        try {
            const PolyQ phi = phi0 + phi1 * epsilons[i];
            SolveOptions o = opts;
            o.seed = splitMix64(seed ^ (i + 1));
            o.crossCheck = false;
            EigenConfiguration cfg;
            if (n == 3)
                cfg = solveTernary(tensorFromForm(phi), 1, o);
            else
                cfg = solveGeneral(toComplexTensor(tensorFromForm(phi)), 1, o);
            row.total = cfg.countDistinct();
            row.real = cfg.realCount();
            row.positiveDimensional = cfg.positiveDimensional;
        } catch (const std::exception& ex) {
            row.ok = false;
            row.error = ex.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace eigenpoints
