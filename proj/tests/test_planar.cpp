#include <doctest.h>

#include <random>

#include "eigenpoints/planar.hpp"

using namespace eigenpoints;

namespace {

TensorQ randomTensorQ(std::mt19937_64& rng, int n, int d, int maxAbs = 9) {
    std::uniform_int_distribution<int> coeff(-maxAbs, maxAbs);
    TensorQ t(n, d);
    for (auto& e : t.entries) e = Rat(coeff(rng));
    return t;
}

PolyQ randomFormQ(std::mt19937_64& rng, int nvars, int deg, int maxAbs = 9) {
    std::uniform_int_distribution<int> coeff(-maxAbs, maxAbs);
    PolyQ p(nvars);
    for (const auto& e : monomialsOfDegree(nvars, deg)) p.addTerm(e, Rat(coeff(rng)));
    return p;
}

std::vector<PlanarPoint<Rat>> randomRationalPoints(std::mt19937_64& rng, int count) {
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::vector<PlanarPoint<Rat>> z;
    while (static_cast<int>(z.size()) < count) {
        PlanarPoint<Rat> p = {Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
        if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) continue;
        bool dup = false;
        for (const auto& q : z)
            if (Rat(p[0] * q[1] - p[1] * q[0]).is_zero() && Rat(p[0] * q[2] - p[2] * q[0]).is_zero() &&
                Rat(p[1] * q[2] - p[2] * q[1]).is_zero())
                dup = true;
        if (!dup) z.push_back(p);
    }
    return z;
}

std::vector<PlanarPoint<CD>> toFloatPoints(const std::vector<ProjectivePoint>& pts) {
    std::vector<PlanarPoint<CD>> z;
    for (const auto& p : pts) z.push_back({p.coords()[0], p.coords()[1], p.coords()[2]});
    return z;
}

}  // namespace

TEST_CASE("noSixOnConic") {
    std::mt19937_64 rng(3);
    // six points on the conic (t^2 : t : 1) plus one generic point
    std::vector<PlanarPoint<Rat>> onConic;
    for (int t = 1; t <= 6; ++t) onConic.push_back({Rat(t * t), Rat(t), Rat(1)});
    onConic.push_back({Rat(1), Rat(3), Rat(7)});
    CHECK(!noSixOnConic(onConic));

    // seven random rational points
    for (int trial = 0; trial < 5; ++trial) CHECK(noSixOnConic(randomRationalPoints(rng, 7)));

    // the cremona configuration
    std::vector<PlanarPoint<Rat>> cremona = {
        {1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(noSixOnConic(cremona));

    CHECK_THROWS(noSixOnConic(std::vector<PlanarPoint<Rat>>(6, {Rat(1), Rat(0), Rat(0)})));
}

TEST_CASE("vanishingForms dimensions") {
    std::mt19937_64 rng(5);
    // seven generic points: three independent cubics
    auto z = randomRationalPoints(rng, 7);
    CHECK(vanishingForms(z, 3).size() == 3);

    // three collinear points: one line
    std::vector<PlanarPoint<Rat>> collinear = {{1, 2, 0}, {2, 4, 1}, {3, 6, 2}};
    auto lines = vanishingForms(collinear, 1);
    REQUIRE(lines.size() == 1);
    // the line is 2x - y = 0
    CHECK(Rat(lines[0].coeff({1, 0, 0}) * Rat(-1)) == Rat(lines[0].coeff({0, 1, 0}) * Rat(2)));

    // six on a conic plus one: the cubics contain conic * line products
    std::vector<PlanarPoint<Rat>> special;
    for (int t = 1; t <= 6; ++t) special.push_back({Rat(t * t), Rat(t), Rat(1)});
    special.push_back({Rat(1), Rat(3), Rat(7)});
    auto cubics = vanishingForms(special, 3);
    REQUIRE(cubics.size() == 3);
    // conic through the six: y^2 - xz; lines through the seventh point
    PolyQ conic(3);
    conic.addTerm({0, 2, 0}, Rat(1));
    conic.addTerm({1, 0, 1}, Rat(-1));
    PolyQ line(3);  // 3x - y + 0z vanishes at (1,3,7)
    line.addTerm({1, 0, 0}, Rat(3));
    line.addTerm({0, 1, 0}, Rat(-1));
    PolyQ product = conic * line;
    // product must lie in the span of the basis: appending it cannot raise rank
    const auto mons = monomialsOfDegree(3, 3);
    MatQ m(4, static_cast<int>(mons.size()));
    for (int r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) m.at(r, static_cast<int>(c)) = cubics[r].coeff(mons[c]);
    for (std::size_t c = 0; c < mons.size(); ++c) m.at(3, static_cast<int>(c)) = product.coeff(mons[c]);
    CHECK(rankExact(m) == 3);
}

TEST_CASE("forward-generated eigenconfigurations are recognized with tensor recovery") {
    std::mt19937_64 rng(7);
    SolveOptions opts;
    opts.crossCheck = false;
    int done = 0;
    for (int trial = 0; trial < 12 && done < 8; ++trial) {
        TensorQ t = randomTensorQ(rng, 3, 3);
        auto cfg = solveTernary(t, 1, opts);
        if (cfg.positiveDimensional || cfg.countDistinct() != 7) continue;
        ++done;
        auto rec = isEigenconfiguration(toFloatPoints(cfg.pointList()), 3, opts);
        CHECK(rec.verdict == HBVerdict::Eigenconfiguration);
        REQUIRE(rec.tensor.has_value());
    }
    CHECK(done >= 8);
}

TEST_CASE("theorem equivalence: recognition matches the six-on-conic test") {
    std::mt19937_64 rng(11);
    SolveOptions opts;
    opts.crossCheck = false;
    // positive instances: random rational 7-point sets (generically no six on
    // a conic, and then always an eigenconfiguration for d=3)
    for (int trial = 0; trial < 6; ++trial) {
        auto z = randomRationalPoints(rng, 7);
        const bool conicFree = noSixOnConic(z);
        auto rec = isEigenconfiguration(z, 3, opts);
        CHECK(conicFree == (rec.verdict == HBVerdict::Eigenconfiguration));
    }
    // negative instances: force six points onto a conic
    std::uniform_int_distribution<int> coeff(1, 9);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<PlanarPoint<Rat>> z;
        std::set<long long> used;
        while (z.size() < 6) {
            const long long t = coeff(rng);
            if (!used.insert(t).second) continue;
            z.push_back({Rat(t * t), Rat(t), Rat(1)});
        }
        z.push_back({Rat(coeff(rng)), Rat(coeff(rng)), Rat(7 + coeff(rng))});
        CHECK(!noSixOnConic(z));
        auto rec = isEigenconfiguration(z, 3, opts);
        CHECK(rec.verdict != HBVerdict::Eigenconfiguration);
        CHECK((rec.verdict == HBVerdict::DependentLinearColumn ||
               rec.verdict == HBVerdict::NotEnoughGenerators));
    }
}

TEST_CASE("five symmetry equations vanish exactly on gradient psi triples") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        PolyQ phi = randomFormQ(rng, 3, 3);
        std::vector<PolyQ> psi;
        for (int i = 0; i < 3; ++i) psi.push_back(phi.partialDerivative(i));
        // shift by L*(x,y,z): the equations are invariant under the ambiguity
        PolyQ ell(3);
        std::uniform_int_distribution<int> c(-5, 5);
        ell.addTerm({1, 0, 0}, Rat(c(rng)));
        ell.addTerm({0, 1, 0}, Rat(c(rng)));
        ell.addTerm({0, 0, 1}, Rat(c(rng)));
        for (int i = 0; i < 3; ++i) psi[i] = psi[i] + ell * PolyQ::variable(i, 3);
        const auto q = [&](const PolyQ& p, std::vector<int> e) { return p.coeff(e); };
        CHECK(Rat(q(psi[0], {0, 1, 1}) - q(psi[1], {1, 0, 1})) == 0);
        CHECK(Rat(q(psi[1], {1, 0, 1}) - q(psi[2], {1, 1, 0})) == 0);
        CHECK(Rat(2 * q(psi[0], {0, 2, 0}) - 2 * q(psi[0], {0, 0, 2}) - q(psi[1], {1, 1, 0}) +
                  q(psi[2], {1, 0, 1})) == 0);
        CHECK(Rat(2 * q(psi[1], {0, 0, 2}) - 2 * q(psi[1], {2, 0, 0}) - q(psi[2], {0, 1, 1}) +
                  q(psi[0], {1, 1, 0})) == 0);
        CHECK(Rat(2 * q(psi[2], {2, 0, 0}) - 2 * q(psi[2], {0, 2, 0}) - q(psi[0], {1, 0, 1}) +
                  q(psi[1], {0, 1, 1})) == 0);
    }
}

TEST_CASE("symmetric recognition recovers the cubic up to scale") {
    std::mt19937_64 rng(17);
    SolveOptions opts;
    opts.crossCheck = false;
    int done = 0, nonsymRejected = 0, nonsymTotal = 0;
    for (int trial = 0; trial < 16 && done < 6; ++trial) {
        PolyQ phi = randomFormQ(rng, 3, 3);
        if (phi.isZero()) continue;
        auto cfg = solveTernary(tensorFromForm(phi), 1, opts);
        if (cfg.positiveDimensional || cfg.countDistinct() != 7) continue;
        ++done;
        auto res = isSymmetricEigenconfiguration(toFloatPoints(cfg.pointList()), opts);
        CHECK(res.symmetric);
        REQUIRE(res.cubic.has_value());
        // proportionality: phi_rec * phi[e0] == phi * phi_rec[e0] across terms
        PolyC rec = *res.cubic;
        PolyC phiC = toComplexPoly(phi);
        std::vector<int> ref;
        double best = 0;
        for (const auto& [e, c] : phiC.terms())
            if (std::abs(c) > best) {
                best = std::abs(c);
                ref = e;
            }
        const CD scale = rec.coeff(ref) / phiC.coeff(ref);
        REQUIRE(std::abs(scale) > 1e-12);
        double maxDev = 0;
        for (const auto& e : monomialsOfDegree(3, 3))
            maxDev = std::max(maxDev, std::abs(rec.coeff(e) - scale * phiC.coeff(e)));
        CHECK(maxDev < 1e-8 * std::abs(scale) * std::max(1.0, phiC.maxAbsCoeff()));
    }
    CHECK(done >= 6);
    // non-symmetric tensors are rejected generically
    for (int trial = 0; trial < 8; ++trial) {
        TensorQ t = randomTensorQ(rng, 3, 3);
        auto cfg = solveTernary(t, 1, opts);
        if (cfg.positiveDimensional || cfg.countDistinct() != 7) continue;
        ++nonsymTotal;
        auto res = isSymmetricEigenconfiguration(toFloatPoints(cfg.pointList()), opts);
        if (!res.symmetric) ++nonsymRejected;
    }
    CHECK(nonsymRejected == nonsymTotal);
}

TEST_CASE("hesse eigenpoints") {
    // h = 0, a = b = c = 1: the fermat cubic
    auto pts = hesseEigenpoints(Rat(1), Rat(1), Rat(1), Rat(0));
    CHECK(pts.size() == 7);
    CHECK(hausdorffDistance(pts, fermatEigenpoints(3, 3)) < 1e-12);

    // cross-check against the solver on random rational parameters
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> coeff(-9, 9);
    SolveOptions opts;
    opts.crossCheck = false;
    int done = 0;
    for (int trial = 0; trial < 12 && done < 8; ++trial) {
        const Rat a(coeff(rng)), b(coeff(rng)), c(coeff(rng)), h(coeff(rng));
        if (h.is_zero()) continue;
        PolyQ phi(3);
        phi.addTerm({3, 0, 0}, a);
        phi.addTerm({0, 3, 0}, b);
        phi.addTerm({0, 0, 3}, c);
        phi.addTerm({1, 1, 1}, Rat(3) * h);
        auto viaSolver = solveTernary(tensorFromForm(phi), 1, opts);
        if (viaSolver.positiveDimensional || viaSolver.countDistinct() != 7) continue;
        ++done;
        auto viaFormula = hesseEigenpoints(a, b, c, h);
        CHECK(viaFormula.size() == 7);
        CHECK(hausdorffDistance(viaFormula, viaSolver.pointList()) < 1e-6);
    }
    CHECK(done >= 8);

    // real parameters give at least five real points (the three coordinate
    // points plus at least two real quartic roots)
    for (int trial = 0; trial < 200; ++trial) {
        const Rat a(coeff(rng)), b(coeff(rng)), c(coeff(rng)), h(coeff(rng));
        if (h.is_zero() && (a.is_zero() || b.is_zero() || c.is_zero())) continue;
        auto p = hesseEigenpoints(a, b, c, h);
        int real = 0;
        for (const auto& q : p) real += q.isReal() ? 1 : 0;
        CHECK(real >= 5);
    }
}

TEST_CASE("eigenconfiguration dimension estimates") {
    CHECK(eigDimensionCheck(3, false, 1) == 14);
    CHECK(eigDimensionCheck(3, true, 1) == 9);
    CHECK(eigDimensionCheck(3, false, 2) == 14);
    CHECK(eigDimensionCheck(3, true, 2) == 9);
    CHECK(eigDimensionCheck(4, false, 1) == 23);
}
