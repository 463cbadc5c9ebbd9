#include "eigenpoints/numeric_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eigenpoints {

CompiledPoly CompiledPoly::compile(const PolyC& p) {
    if (p.numVars() > 8) throw std::invalid_argument("CompiledPoly: too many variables");
    CompiledPoly out;
    out.nvars = p.numVars();
    out.coeffScale = std::max(1e-300, p.maxAbsCoeff());
    for (const auto& [e, c] : p.terms()) {
        Term t;
        for (int i = 0; i < out.nvars; ++i) t.e[i] = static_cast<std::uint8_t>(e[i]);
        t.c = c;
        out.terms.push_back(t);
    }
    return out;
}

CD CompiledPoly::eval(const CD* x) const {
    CD acc(0.0, 0.0);
    for (const Term& t : terms) {
        CD v = t.c;
        for (int i = 0; i < nvars; ++i)
            for (int p = 0; p < t.e[i]; ++p) v *= x[i];
        acc += v;
    }
    return acc;
}

void CompiledPoly::grad(const CD* x, CD* out) const {
    for (int i = 0; i < nvars; ++i) out[i] = CD(0.0, 0.0);
    for (const Term& t : terms) {
        for (int i = 0; i < nvars; ++i) {
            if (t.e[i] == 0) continue;
            CD v = t.c * static_cast<double>(t.e[i]);
            for (int j = 0; j < nvars; ++j) {
                const int pw = (j == i) ? t.e[j] - 1 : t.e[j];
                for (int p = 0; p < pw; ++p) v *= x[j];
            }
            out[i] += v;
        }
    }
}

NumericSystem::NumericSystem(const EigenSystem<CD>& sys) : n_(sys.n), ell_(sys.ell) {
    degree_ = 0;
    for (const auto& m : sys.minors) {
        minors_.push_back(CompiledPoly::compile(m));
        degree_ = std::max(degree_, m.degree());
    }
    for (const auto& p : sys.psi) psi_.push_back(CompiledPoly::compile(p));
}

namespace {

std::vector<CD> normalizedCopy(const std::vector<CD>& coords) {
    double mx = 0.0;
    for (const CD& c : coords) mx = std::max(mx, std::abs(c));
    std::vector<CD> out = coords;
    if (mx > 0)
        for (CD& c : out) c /= mx;
    return out;
}

int maxModulusIndex(const std::vector<CD>& coords) {
    int best = 0;
    double bestAbs = -1.0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const double a = std::abs(coords[i]);
        if (a > bestAbs) {
            bestAbs = a;
            best = static_cast<int>(i);
        }
    }
    return best;
}

}  // namespace

double NumericSystem::residual(const std::vector<CD>& coords) const {
    const std::vector<CD> x = normalizedCopy(coords);
    double r = 0.0;
    for (const auto& m : minors_) r = std::max(r, std::abs(m.eval(x.data())) / m.coeffScale);
    return r;
}

std::vector<CD> NumericSystem::polish(std::vector<CD> coords, int maxIter) const {
    std::vector<CD> x = normalizedCopy(coords);
    const int chart = maxModulusIndex(x);
    // scale so the chart coordinate is exactly 1 and stays fixed
    const CD pivot = x[chart];
    for (CD& c : x) c /= pivot;

    std::vector<int> freeVars;
    for (int i = 0; i < n_; ++i)
        if (i != chart) freeVars.push_back(i);
    const int m = minorCount();
    const int nv = static_cast<int>(freeVars.size());

    double bestRes = residual(x);
    std::vector<CD> best = x;
    std::vector<CD> g(n_);
    for (int it = 0; it < maxIter; ++it) {
        MatC J(m, nv);
        std::vector<CD> rhs(m);
        for (int mi = 0; mi < m; ++mi) {
            rhs[mi] = -minors_[mi].eval(x.data());
            minors_[mi].grad(x.data(), g.data());
            for (int vi = 0; vi < nv; ++vi) J.at(mi, vi) = g[freeVars[vi]];
        }
        std::vector<CD> step = lstsqFloat(J, rhs);
        double stepNorm = 0.0;
        for (int vi = 0; vi < nv; ++vi) {
            x[freeVars[vi]] += step[vi];
            stepNorm = std::max(stepNorm, std::abs(step[vi]));
        }
        const double r = residual(x);
        if (r < bestRes) {
            bestRes = r;
            best = x;
        }
        if (stepNorm < 1e-15) break;
    }
    return best;
}

double NumericSystem::jacobianConditionRatio(const std::vector<CD>& coords) const {
    const std::vector<CD> x = normalizedCopy(coords);
    const int chart = maxModulusIndex(x);
    std::vector<int> freeVars;
    for (int i = 0; i < n_; ++i)
        if (i != chart) freeVars.push_back(i);
    MatC J(minorCount(), static_cast<int>(freeVars.size()));
    std::vector<CD> g(n_);
    for (int mi = 0; mi < minorCount(); ++mi) {
        minors_[mi].grad(x.data(), g.data());
        for (std::size_t vi = 0; vi < freeVars.size(); ++vi)
            J.at(mi, static_cast<int>(vi)) = g[freeVars[vi]] / minors_[mi].coeffScale;
    }
    const std::vector<double> sv = singularValues(J);
    if (sv.empty() || sv.front() <= 0.0) return 0.0;
    // Rows are scaled by the minor coefficient norms, so a generic point has
    // sigma_max of order one. Deeply singular points collapse the whole
    // Jacobian; dividing by sigma_max alone would then return noise, so the
    // denominator is floored at the generic scale.
    return sv.back() / std::max(sv.front(), 1.0);
}

CD NumericSystem::eigenvalue(const std::vector<CD>& coords) const {
    // Evaluate on the canonical representative (max-modulus coordinate == 1)
    // so the reported lambda does not depend on the caller's scaling.
    std::vector<CD> x = normalizedCopy(coords);
    const int i = maxModulusIndex(x);
    const CD pivot = x[i];
    for (CD& c : x) c /= pivot;
    if (psiVanishes(x)) return CD(0.0, 0.0);
    return psi_[i].eval(x.data());
}

bool NumericSystem::psiVanishes(const std::vector<CD>& coords, double tol) const {
    const std::vector<CD> x = normalizedCopy(coords);
    for (const auto& p : psi_)
        if (std::abs(p.eval(x.data())) > tol * p.coeffScale) return false;
    return true;
}

}  // namespace eigenpoints
