#include "eigenpoints/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "eigenpoints/linalg.hpp"

namespace eigenpoints {

namespace {

// Newton polishing against the full-precision polynomial. Keeps the better of
// the start and end iterate, so a bad step cannot make things worse.
CD polishRoot(const UniC& p, const UniC& dp, CD z) {
    CD best = z;
    double bestAbs = std::abs(p.eval(z));
    for (int it = 0; it < 20; ++it) {
        const CD d = dp.eval(z);
        if (std::abs(d) < 1e-300) break;
        const CD step = p.eval(z) / d;
        z -= step;
        const double a = std::abs(p.eval(z));
        if (a < bestAbs) {
            bestAbs = a;
            best = z;
        }
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    return best;
}

}  // namespace

std::vector<RootCluster> univariateRoots(const UniC& pIn) {
    UniC p = pIn;
    // Trim numerically-negligible leading coefficients relative to the largest.
    double mx = 0.0;
    for (const CD& c : p.c) mx = std::max(mx, std::abs(c));
    if (mx == 0.0 || p.c.empty()) throw std::invalid_argument("univariateRoots: zero polynomial");
    while (p.c.size() > 1 && std::abs(p.c.back()) < 1e-14 * mx) p.c.pop_back();

    const int deg = p.degree();
    std::vector<RootCluster> out;
    if (deg == 0) return out;

    // Deflate exact roots at the origin.
    int zeroRoots = 0;
    while (zeroRoots < deg && std::abs(p.c[zeroRoots]) == 0.0) ++zeroRoots;
    std::vector<CD> raw;
    if (zeroRoots > 0) raw.assign(zeroRoots, CD(0.0, 0.0));

    const int n = deg - zeroRoots;
    if (n > 0) {
        // Companion matrix of the deflated monic polynomial.
        std::vector<CD> c(p.c.begin() + zeroRoots, p.c.end());
        const CD lc = c.back();
        for (CD& x : c) x /= lc;
        MatC comp(n, n);
        for (int i = 1; i < n; ++i) comp.at(i, i - 1) = CD(1.0, 0.0);
        for (int i = 0; i < n; ++i) comp.at(i, n - 1) = -c[i];
        std::vector<CD> eig = eigenvaluesFloat(comp);
        const UniC dp = p.derivative();
        for (CD z : eig) raw.push_back(polishRoot(p, dp, z));
    }

    // Greedy clustering at radius 1e-6 scaled by root magnitude.
    std::vector<bool> used(raw.size(), false);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        CD sum = raw[i];
        int count = 1;
        used[i] = true;
        const double radius = 1e-6 * std::max(1.0, std::abs(raw[i]));
        for (std::size_t j = i + 1; j < raw.size(); ++j) {
            if (!used[j] && std::abs(raw[j] - raw[i]) < radius) {
                used[j] = true;
                sum += raw[j];
                ++count;
            }
        }
        out.push_back({sum / static_cast<double>(count), count});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

template <class K>
std::vector<BinaryRoot> binaryFormRoots(const Poly<K>& f) {
    if (f.numVars() != 2) throw std::invalid_argument("binaryFormRoots: two variables required");
    if (f.isZero()) throw std::invalid_argument("binaryFormRoots: zero form");
    if (!f.isHomogeneous()) throw std::invalid_argument("binaryFormRoots: form not homogeneous");
    const int d = f.degree();

    // Dehomogenize at y=1: roots t give (t:1); the degree deficiency is the
    // multiplicity of (1:0).
    std::vector<CD> c(static_cast<std::size_t>(d) + 1, CD(0.0, 0.0));
    for (const auto& [e, coef] : f.terms()) c[e[0]] += ScalarOps<K>::toCD(coef);
    UniC p{std::vector<CD>(c)};
    p.trim();

    std::vector<BinaryRoot> out;
    const int atInfinity = d - p.degree();
    if (atInfinity > 0)
        out.push_back({ProjectivePoint::fromCoords({CD(1, 0), CD(0, 0)}), atInfinity});
    if (p.degree() > 0) {
        for (const RootCluster& rc : univariateRoots(p))
            out.push_back({ProjectivePoint::fromCoords({rc.value, CD(1, 0)}), rc.multiplicity});
    }
    return out;
}

template std::vector<BinaryRoot> binaryFormRoots(const Poly<Rat>&);
template std::vector<BinaryRoot> binaryFormRoots(const Poly<CD>&);

}  // namespace eigenpoints
