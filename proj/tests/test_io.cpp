#include <doctest.h>

#include <random>

#include "eigenpoints/io.hpp"

using namespace eigenpoints;
using eigenpoints::io::json;

TEST_CASE("rational scalars round-trip through JSON") {
    std::vector<Rat> samples = {Rat(0), Rat(7), Rat(-3) / 4, Rat(BigInt("123456789012345678901")) / 7};
    for (const Rat& r : samples) {
        CHECK(io::ratFromJson(io::ratToJson(r)) == r);
    }
    CHECK(io::ratFromJson(json::parse("\"3/4\"")) == Rat(3) / 4);
    CHECK(io::ratFromJson(json::parse("5")) == Rat(5));
    CHECK(io::ratFromJson(json::parse("0.5")) == Rat(1) / 2);  // exact dyadic
}

TEST_CASE("tensor and form JSON round-trips") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coeff(-9, 9);
    io::AnyTensor t;
    t.rational = true;
    t.q = TensorQ(3, 3);
    for (auto& e : t.q.entries) e = Rat(coeff(rng)) / (1 + std::abs(coeff(rng)));
    const auto t2 = io::tensorFromJson(io::tensorToJson(t));
    CHECK(t2.rational);
    CHECK(t2.q.entries == t.q.entries);

    io::AnyForm f;
    f.rational = true;
    f.q = PolyQ(3);
    for (const auto& e : monomialsOfDegree(3, 4)) f.q.addTerm(e, Rat(coeff(rng)));
    const auto f2 = io::formFromJson(io::formToJson(f));
    CHECK(f2.rational);
    CHECK(f2.q == f.q);

    io::AnyTensor tc;
    tc.rational = false;
    tc.c = TensorC(2, 3);
    for (auto& e : tc.c.entries) e = CD(coeff(rng) * 0.25, coeff(rng) * 0.5);
    const auto tc2 = io::tensorFromJson(io::tensorToJson(tc));
    CHECK(!tc2.rational);
    CHECK(tc2.c.entries == tc.c.entries);
}

TEST_CASE("points and configurations serialize deterministically") {
    const auto p = ProjectivePoint::fromCoords({CD(0.25, -0.5), CD(1, 0), CD(0, 0)});
    const auto p2 = io::pointFromJson(io::pointToJson(p));
    CHECK(p.approxEqual(p2, 1e-15));

    PolyQ xyz(3);
    xyz.addTerm({1, 1, 1}, Rat(1));
    SolveOptions opts;
    opts.crossCheck = false;
    const auto cfg = solveTernary(tensorFromForm(xyz), 1, opts);
    const std::string once = io::configurationToJson(cfg).dump(1);
    const auto cfgAgain = solveTernary(tensorFromForm(xyz), 1, opts);
    CHECK(once == io::configurationToJson(cfgAgain).dump(1));
}

TEST_CASE("arrangement JSON round-trip keeps the genericity certificate") {
    const json j = json::parse(R"({"lines": [[1,0,0],[0,1,0],[0,0,1],[1,1,1]]})");
    const LineArrangement arr = io::arrangementFromJson(j);
    CHECK(arr.lines.size() == 4);
    CHECK(arr.generic);
    const auto arr2 = io::arrangementFromJson(io::arrangementToJson(arr));
    CHECK(arr2.generic == arr.generic);
    CHECK(arr2.lines == arr.lines);

    const json bad = json::parse(R"({"lines": [[1,0,0],[0,1,0],[1,1,0]]})");
    CHECK(!io::arrangementFromJson(bad).generic);  // three concurrent lines
}

TEST_CASE("solver invariant: conjugation closure on real tensors") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coeff(-9, 9);
    SolveOptions opts;
    opts.crossCheck = false;
    for (int trial = 0; trial < 10; ++trial) {
        TensorQ t(3, 3);
        for (auto& e : t.entries) e = Rat(coeff(rng));
        const auto cfg = solveTernary(t, 1, opts);
        for (const auto& rec : cfg.points) {
            if (rec.real) continue;
            bool hasConj = false;
            const auto conj = rec.point.conjugate();
            for (const auto& other : cfg.points)
                if (other.point.approxEqual(conj, 1e-8)) hasConj = true;
            CHECK(hasConj);
        }
    }
}

TEST_CASE("backend agreement on twenty random ternary instances") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> coeff(-9, 9);
    SolveOptions opts;
    opts.crossCheck = false;
    for (int trial = 0; trial < 20; ++trial) {
        TensorQ t(3, 3);
        for (auto& e : t.entries) e = Rat(coeff(rng));
        const auto res = solveTernary(t, 1, opts);
        SolveOptions ho = opts;
        ho.seed = 40000 + trial;
        const auto hom = solveGeneral(toComplexTensor(t), 1, ho);
        CHECK(res.countDistinct() == hom.countDistinct());
        CHECK(hausdorffDistance(res.pointList(), hom.pointList()) < 1e-6);
    }
}

TEST_CASE("eigenvalue conventions: gradient system vs tensor system") {
    // fermat cubic: at e1 the gradient convention gives lambda = d, the tensor
    // convention lambda = 1 (psi of the symmetrized tensor is grad/d)
    PolyQ fermat(3);
    fermat.addTerm({3, 0, 0}, Rat(1));
    fermat.addTerm({0, 3, 0}, Rat(1));
    fermat.addTerm({0, 0, 3}, Rat(1));
    const auto e1 = ProjectivePoint::fromCoords({CD(1, 0), CD(0, 0), CD(0, 0)});
    NumericSystem gradSys{eigenSystemFromForm(toComplexPoly(fermat), 1)};
    CHECK(std::abs(gradSys.eigenvalue(e1.coords()) - CD(3, 0)) < 1e-12);
    CHECK(std::abs(eigenvalueOf(toComplexTensor(tensorFromForm(fermat)), 1, e1) - CD(1, 0)) < 1e-12);
}
