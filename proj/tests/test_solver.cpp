#include <doctest.h>

#include <random>

#include "eigenpoints/counts.hpp"
#include "eigenpoints/solver.hpp"

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

ProjectivePoint pt3(double x, double y, double z) {
    return ProjectivePoint::fromCoords({CD(x, 0), CD(y, 0), CD(z, 0)});
}

bool containsPoint(const EigenConfiguration& cfg, const ProjectivePoint& p, double tol = 1e-8) {
    for (const auto& rec : cfg.points)
        if (rec.point.approxEqual(p, tol)) return true;
    return false;
}

}  // namespace

TEST_CASE("solveBinary: symmetric matrix and generic counts") {
    // phi = a x^2 + 2b xy + c y^2: eigenpoints are roots of -b x^2 + (a-c) xy + b y^2
    TensorQ m(2, 2);
    m.at({0, 0}) = 2;   // a
    m.at({0, 1}) = 1;   // b
    m.at({1, 0}) = 1;
    m.at({1, 1}) = -1;  // c
    auto cfg = solveBinary(m, 1, 1);
    REQUIRE(cfg.points.size() == 2);
    // orthogonality of the two eigenpoints of a symmetric matrix
    const auto& u = cfg.points[0].point.coords();
    const auto& v = cfg.points[1].point.coords();
    CHECK(std::abs(u[0] * v[0] + u[1] * v[1]) < 1e-10);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        TensorQ t = randomTensorQ(rng, 2, 5);
        auto c5 = solveBinary(t);
        CHECK(c5.countDistinct() == 5);
        for (const auto& rec : c5.points) CHECK(rec.residual < 1e-9);
    }
}

TEST_CASE("solveBinary matches fermat enumeration at d=4") {
    PolyQ phi(2);
    phi.addTerm({4, 0}, Rat(1));
    phi.addTerm({0, 4}, Rat(1));
    auto cfg = solveBinary(tensorFromForm(phi), 1, 1);
    auto expect = fermatEigenpoints(2, 4);
    CHECK(cfg.countDistinct() == 4);
    CHECK(hausdorffDistance(cfg.pointList(), expect) < 1e-10);
}

TEST_CASE("solveTernary reproduces the cremona example") {
    PolyQ xyz(3);
    xyz.addTerm({1, 1, 1}, Rat(1));
    SolveOptions opts;
    opts.crossCheck = false;
    auto cfg = solveTernary(tensorFromForm(xyz), 1, opts);
    REQUIRE(cfg.countDistinct() == 7);
    CHECK(!cfg.positiveDimensional);
    const std::vector<ProjectivePoint> expected = {
        pt3(1, 1, 1),  pt3(1, 1, -1), pt3(1, -1, 1), pt3(-1, 1, 1),
        pt3(1, 0, 0),  pt3(0, 1, 0),  pt3(0, 0, 1)};
    for (const auto& p : expected) CHECK(containsPoint(cfg, p, 1e-10));
    // eigenvalue 0 exactly at the three singular points
    for (const auto& rec : cfg.points) {
        const auto& c = rec.point.coords();
        int support = 0;
        for (const auto& z : c)
            if (std::abs(z) > 1e-12) ++support;
        if (support == 1) CHECK(std::abs(*rec.eigenvalue) < 1e-12);
        else CHECK(std::abs(*rec.eigenvalue) > 1e-6);
    }
}

TEST_CASE("solveTernary reproduces the frame cubic eigenpoints") {
    // (2x+2y-z)(2x-y+2z)(-x+2y+2z)
    PolyQ l1(3), l2(3), l3(3);
    l1.addTerm({1, 0, 0}, Rat(2));
    l1.addTerm({0, 1, 0}, Rat(2));
    l1.addTerm({0, 0, 1}, Rat(-1));
    l2.addTerm({1, 0, 0}, Rat(2));
    l2.addTerm({0, 1, 0}, Rat(-1));
    l2.addTerm({0, 0, 1}, Rat(2));
    l3.addTerm({1, 0, 0}, Rat(-1));
    l3.addTerm({0, 1, 0}, Rat(2));
    l3.addTerm({0, 0, 1}, Rat(2));
    PolyQ phi = l1 * l2 * l3;
    SolveOptions opts;
    opts.crossCheck = false;
    auto cfg = solveTernary(tensorFromForm(phi), 1, opts);
    REQUIRE(cfg.countDistinct() == 7);
    const std::vector<ProjectivePoint> expected = {
        pt3(1, 1, -5), pt3(1, -5, 1), pt3(-5, 1, 1), pt3(3, 3, 3),
        pt3(2, 2, -1), pt3(2, -1, 2), pt3(-1, 2, 2)};
    for (const auto& p : expected) CHECK(containsPoint(cfg, p, 1e-8));
}

TEST_CASE("solveTernary count law for random integer tensors") {
    std::mt19937_64 rng(23);
    SolveOptions opts;
    opts.crossCheck = false;
    for (int d : {3, 4}) {
        for (int trial = 0; trial < 5; ++trial) {
            TensorQ t = randomTensorQ(rng, 3, d);
            auto cfg = solveTernary(t, 1, opts);
            CHECK(cfg.countDistinct() == counts::eigenCount(3, d));
            CHECK(!cfg.positiveDimensional);
            for (const auto& rec : cfg.points) CHECK(rec.residual < 1e-8);
        }
    }
    // ell = 2, d = 4: 19 points
    for (int trial = 0; trial < 3; ++trial) {
        TensorQ t = randomTensorQ(rng, 3, 4);
        auto cfg = solveTernary(t, 2, opts);
        CHECK(cfg.countDistinct() == counts::eigenCountEll(3, 4, 2));
    }
}

TEST_CASE("positive dimensional detection: x^3 eigenconfiguration") {
    PolyQ x3(3);
    x3.addTerm({3, 0, 0}, Rat(1));
    SolveOptions opts;
    opts.crossCheck = false;
    auto cfg = solveTernary(tensorFromForm(x3), 1, opts);
    CHECK(cfg.positiveDimensional);
    // The point (1:0:0) is the isolated eigenpoint off the line {x=0}.
    CHECK(containsPoint(cfg, pt3(1, 0, 0), 1e-8));
}

TEST_CASE("homotopy backend agrees with the resultant backend on n=3") {
    std::mt19937_64 rng(31);
    SolveOptions opts;
    opts.crossCheck = false;
    for (int trial = 0; trial < 5; ++trial) {
        TensorQ t = randomTensorQ(rng, 3, 3);
        auto res = solveTernary(t, 1, opts);
        SolveOptions h = opts;
        h.seed = 1000 + trial;
        auto hom = solveGeneral(toComplexTensor(t), 1, h);
        CHECK(res.countDistinct() == hom.countDistinct());
        CHECK(hausdorffDistance(res.pointList(), hom.pointList()) < 1e-6);
    }
}

TEST_CASE("eigenvalue scaling law for eigenpairs") {
    // (x, lambda) -> (nu x, nu^{d-1-ell} lambda): check by evaluating psi at
    // two representatives of the same projective point.
    std::mt19937_64 rng(37);
    TensorQ t = randomTensorQ(rng, 3, 4);
    SolveOptions opts;
    opts.crossCheck = false;
    auto cfg = solveTernary(t, 1, opts);
    REQUIRE(cfg.countDistinct() > 0);
    auto sys = eigenSystem(toComplexTensor(t), 1, 1);
    NumericSystem nsys(sys);
    const auto& p = cfg.points[0].point.coords();
    const CD nu(1.7, -0.3);
    std::vector<CD> scaled(p);
    for (auto& c : scaled) c *= nu;
    // lambda is computed on normalized representatives, so both must agree
    CHECK(std::abs(nsys.eigenvalue(scaled) - nsys.eigenvalue(p)) < 1e-8 * std::abs(nsys.eigenvalue(p)) + 1e-12);
    // raw eigenpair scaling: psi_i(nu x) = nu^{d-1} psi_i(x)
    const CD lhs = sys.psi[0].evaluate(scaled);
    CD nuPow(1, 0);
    for (int i = 0; i < 3; ++i) nuPow *= nu;  // d-1 = 3
    const CD rhs = nuPow * sys.psi[0].evaluate(std::vector<CD>(p));
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("eigenvalueOf rejects non-eigenpoints") {
    PolyQ xyz(3);
    xyz.addTerm({1, 1, 1}, Rat(1));
    TensorC t = toComplexTensor(tensorFromForm(xyz));
    CHECK_THROWS(eigenvalueOf(t, 1, pt3(1, 2, 3)));
    CHECK(std::abs(eigenvalueOf(t, 1, pt3(1, 0, 0))) < 1e-12);
}

TEST_CASE("pencil discriminant degrees") {
    std::mt19937_64 rng(41);
    // n=2, d=4: degree 2d-2 = 6
    for (int trial = 0; trial < 3; ++trial) {
        TensorQ a = randomTensorQ(rng, 2, 4);
        TensorQ b = randomTensorQ(rng, 2, 4);
        auto r = pencilDiscriminantDegree(a, b);
        CHECK(!r.degenerate);
        CHECK(r.degree == 6);
    }
    // n=3, d=2 matrices: degree n(n-1) = 6
    for (int trial = 0; trial < 3; ++trial) {
        TensorQ a = randomTensorQ(rng, 3, 2);
        TensorQ b = randomTensorQ(rng, 3, 2);
        auto r = pencilDiscriminantDegree(a, b);
        CHECK(!r.degenerate);
        CHECK(r.degree == 6);
    }
    // A = B: degenerate pencil
    TensorQ a = randomTensorQ(rng, 2, 3);
    auto r = pencilDiscriminantDegree(a, a);
    CHECK(r.degenerate);
    CHECK(r.degree == 0);
}
