#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "eigenpoints/binaryec.hpp"
#include "eigenpoints/counts.hpp"
#include "eigenpoints/dynamics.hpp"
#include "eigenpoints/io.hpp"
#include "eigenpoints/planar.hpp"
#include "eigenpoints/solver.hpp"

namespace ep = eigenpoints;
using ep::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNumericalFailure = 3;
constexpr int kExitVerdictNegative = 4;

struct CommonOpts {
    std::uint64_t seed = 0;
    std::string mode = "rational";
    double tolResidual = 1e-8;
    double tolDedup = 1e-8;
    int threads = 1;
    std::string output;
};

void addCommon(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--seed", c.seed, "random seed (64-bit)");
    cmd->add_option("--mode", c.mode, "scalar mode: rational|float")
        ->check(CLI::IsMember({"rational", "float"}));
    cmd->add_option("--tol-residual", c.tolResidual, "residual acceptance tolerance");
    cmd->add_option("--tol-dedup", c.tolDedup, "point deduplication tolerance");
    cmd->add_option("--threads", c.threads, "worker threads for path tracking / sampling");
    cmd->add_option("--output,-o", c.output, "write result to this file instead of stdout");
}

ep::SolveOptions solveOpts(const CommonOpts& c) {
    ep::SolveOptions o;
    o.seed = c.seed;
    o.residualTol = c.tolResidual;
    o.dedupTol = c.tolDedup;
    o.threads = c.threads;
    return o;
}

void emit(const CommonOpts& c, const json& j) {
    const std::string text = j.dump(1) + "\n";
    if (c.output.empty())
        std::cout << text;
    else
        ep::io::writeFile(c.output, text);
}

void emitRaw(const CommonOpts& c, const std::string& text) {
    if (c.output.empty())
        std::cout << text;
    else
        ep::io::writeFile(c.output, text);
}

ep::Rat parseRat(const std::string& s) { return ep::io::ratFromJson(json::parse(s)); }

std::vector<double> parseDoubleList(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

json pointsToJson(const std::vector<ep::ProjectivePoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(ep::io::pointToJson(p));
    return json{{"points", std::move(arr)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenpoints: eigenconfigurations of tensors"};
    app.require_subcommand(1);
    int exitCode = kExitOk;
    std::function<void()> action;

    // counts
    auto* cCounts = app.add_subcommand("counts", "closed-form counts and degrees");
    static CommonOpts countsOpts;
    static int countsN = 3, countsD = 3, countsEll = 1;
    cCounts->add_option("--n", countsN, "ambient dimension")->required();
    cCounts->add_option("--d", countsD, "tensor order")->required();
    cCounts->add_option("--ell", countsEll, "eigenpoint exponent");
    addCommon(cCounts, countsOpts);
    cCounts->callback([&] {
        action = [&] {
            namespace ct = ep::counts;
            json out;
            out["n"] = countsN;
            out["d"] = countsD;
            out["ell"] = countsEll;
            out["eigenCount"] = ct::eigenCount(countsN, countsD);
            out["eigenCountEll"] = ct::eigenCountEll(countsN, countsD, countsEll);
            out["genusGamma"] = ct::genusGamma(countsN, countsD, countsEll);
            out["genusGammaEN"] = countsN >= 3 ? ct::genusGammaEN(countsN, countsD, countsEll)
                                               : ct::genusGamma(countsN, countsD, countsEll);
            out["discDegree"] = ct::eigenDiscriminantDegree(countsN, countsD, countsEll);
            out["regionCount"] = ct::regionCount(countsN, countsD);
            emit(countsOpts, out);
        };
    });

    // solve
    auto* cSolve = app.add_subcommand("solve", "compute an eigenconfiguration");
    static CommonOpts solveCommon;
    static std::string solveTensorPath, solveMethod = "auto";
    static int solveEll = 1;
    cSolve->add_option("--tensor", solveTensorPath, "tensor JSON file")->required();
    cSolve->add_option("--ell", solveEll, "eigenpoint exponent");
    cSolve->add_option("--method", solveMethod, "auto|resultant|homotopy")
        ->check(CLI::IsMember({"auto", "resultant", "homotopy"}));
    addCommon(cSolve, solveCommon);
    cSolve->callback([&] {
        action = [&] {
            const auto t = ep::io::tensorFromJson(json::parse(ep::io::readFile(solveTensorPath)));
            const ep::SolveOptions o = solveOpts(solveCommon);
            ep::EigenConfiguration cfg;
            if (solveMethod == "resultant") {
                if (t.rational)
                    cfg = ep::solveTernary(t.q, solveEll, o);
                else
                    cfg = ep::solveTernary(t.c, solveEll, o);
            } else if (solveMethod == "homotopy") {
                cfg = ep::solveGeneral(t.complexView(), solveEll, o);
            } else {
                if (t.rational)
                    cfg = ep::solveAuto(t.q, solveEll, o);
                else
                    cfg = ep::solveAuto(t.c, solveEll, o);
            }
            emit(solveCommon, ep::io::configurationToJson(cfg));
        };
    });

    // fermat
    auto* cFermat = app.add_subcommand("fermat", "eigenpoints of x1^d + ... + xn^d");
    static CommonOpts fermatOpts;
    static int fermatN = 3, fermatD = 3, fermatEll = 1;
    cFermat->add_option("--n", fermatN)->required();
    cFermat->add_option("--d", fermatD)->required();
    cFermat->add_option("--ell", fermatEll, "eigenpoint exponent (only 1 is supported)");
    addCommon(cFermat, fermatOpts);
    cFermat->callback([&] {
        action = [&] {
            if (fermatEll != 1)
                throw std::invalid_argument(
                    "fermat: no closed-form eigenpoint family is known for ell >= 2 (for "
                    "ell = d-1 every point of projective space is an eigenpoint of this form)");
            emit(fermatOpts, pointsToJson(ep::fermatEigenpoints(fermatN, fermatD)));
        };
    });

    // check-binary-sym
    auto* cBinSym = app.add_subcommand("check-binary-sym",
                                       "is a set of d points in P^1 a symmetric eigenconfiguration");
    static CommonOpts binSymOpts;
    static std::string binSymPath;
    cBinSym->add_option("--points", binSymPath, "JSON {\"points\": [[u,v], ...]}")->required();
    addCommon(cBinSym, binSymOpts);
    cBinSym->callback([&] {
        action = [&] {
            const json j = json::parse(ep::io::readFile(binSymPath));
            std::vector<std::pair<ep::Rat, ep::Rat>> pts;
            for (const auto& p : j.at("points"))
                pts.emplace_back(ep::io::ratFromJson(p.at(0)), ep::io::ratFromJson(p.at(1)));
            const bool rep = ep::symmetricRepresentable(pts);
            emit(binSymOpts, json{{"representable", rep}, {"d", pts.size()}});
            if (!rep) exitCode = kExitVerdictNegative;
        };
    });

    // ec-check
    auto* cEc = app.add_subcommand("ec-check", "membership in the eigencompatibility variety");
    static CommonOpts ecOpts;
    static std::string ecFormsPath;
    static int ecD = 3;
    cEc->add_option("--d", ecD, "tensor order")->required();
    cEc->add_option("--forms", ecFormsPath, "JSON {\"forms\": [[c0..cd], ...]}")->required();
    addCommon(cEc, ecOpts);
    cEc->callback([&] {
        action = [&] {
            const json j = json::parse(ep::io::readFile(ecFormsPath));
            std::vector<std::vector<ep::Rat>> forms;
            for (const auto& f : j.at("forms")) {
                std::vector<ep::Rat> c;
                for (const auto& x : f) c.push_back(ep::io::ratFromJson(x));
                forms.push_back(std::move(c));
            }
            const auto r = ep::ecMembership(ecD, forms, ecOpts.seed);
            json out{{"member", r.member}};
            if (r.tensor) {
                ep::io::AnyTensor t;
                t.rational = true;
                t.q = *r.tensor;
                out["tensor"] = ep::io::tensorToJson(t);
            }
            emit(ecOpts, out);
            if (!r.member) exitCode = kExitVerdictNegative;
        };
    });

    // ec-dim
    auto* cEcDim = app.add_subcommand("ec-dim", "estimated dimension of EC_{2,d}");
    static CommonOpts ecDimOpts;
    static int ecDimD = 3;
    cEcDim->add_option("--d", ecDimD)->required();
    addCommon(cEcDim, ecDimOpts);
    cEcDim->callback([&] {
        action = [&] {
            emit(ecDimOpts,
                 json{{"d", ecDimD}, {"dimension", ep::ecDimensionEstimate(ecDimD, ecDimOpts.seed)}});
        };
    });

    // check-7pts
    auto* c7 = app.add_subcommand("check-7pts", "recognize planar eigenconfigurations");
    static CommonOpts c7Opts;
    static std::string c7Path;
    static bool c7Symmetric = false;
    static int c7D = 3;
    c7->add_option("--points", c7Path, "JSON {\"points\": [[x,y,z], ...]}")->required();
    c7->add_option("--d", c7D, "tensor order (point count is d^2-d+1)");
    c7->add_flag("--symmetric", c7Symmetric, "also test for a symmetric tensor (d=3)");
    addCommon(c7, c7Opts);
    c7->callback([&] {
        action = [&] {
            const json j = json::parse(ep::io::readFile(c7Path));
            bool rational = c7Opts.mode == "rational";
            if (j.contains("mode")) rational = j.at("mode").get<std::string>() == "rational";
            const ep::SolveOptions o = solveOpts(c7Opts);
            json out;
            auto verdictName = [](ep::HBVerdict v) {
                switch (v) {
                    case ep::HBVerdict::Eigenconfiguration: return "eigenconfiguration";
                    case ep::HBVerdict::NotEnoughGenerators: return "notEnoughGenerators";
                    case ep::HBVerdict::DependentLinearColumn: return "dependentLinearColumn";
                    default: return "verificationFailed";
                }
            };
            bool negative = false;
            if (rational) {
                std::vector<ep::PlanarPoint<ep::Rat>> z;
                for (const auto& p : j.at("points"))
                    z.push_back({ep::io::ratFromJson(p.at(0)), ep::io::ratFromJson(p.at(1)),
                                 ep::io::ratFromJson(p.at(2))});
                if (c7Symmetric) {
                    auto r = ep::isSymmetricEigenconfiguration(z, o);
                    out["verdict"] = verdictName(r.verdict);
                    out["symmetric"] = r.symmetric;
                    if (r.cubic) {
                        ep::io::AnyForm f;
                        f.rational = true;
                        f.q = *r.cubic;
                        out["cubic"] = ep::io::formToJson(f);
                    }
                    negative = !r.symmetric;
                } else {
                    auto r = ep::isEigenconfiguration(z, c7D, o);
                    out["verdict"] = verdictName(r.verdict);
                    if (r.tensor && r.verdict == ep::HBVerdict::Eigenconfiguration) {
                        ep::io::AnyTensor t;
                        t.rational = true;
                        t.q = *r.tensor;
                        out["tensor"] = ep::io::tensorToJson(t);
                    }
                    negative = r.verdict != ep::HBVerdict::Eigenconfiguration;
                }
            } else {
                std::vector<ep::PlanarPoint<ep::CD>> z;
                for (const auto& p : j.at("points"))
                    z.push_back({ep::io::cdFromJson(p.at(0)), ep::io::cdFromJson(p.at(1)),
                                 ep::io::cdFromJson(p.at(2))});
                if (c7Symmetric) {
                    auto r = ep::isSymmetricEigenconfiguration(z, o);
                    out["verdict"] = verdictName(r.verdict);
                    out["symmetric"] = r.symmetric;
                    if (r.cubic) {
                        ep::io::AnyForm f;
                        f.rational = false;
                        f.c = *r.cubic;
                        out["cubic"] = ep::io::formToJson(f);
                    }
                    negative = !r.symmetric;
                } else {
                    auto r = ep::isEigenconfiguration(z, c7D, o);
                    out["verdict"] = verdictName(r.verdict);
                    if (r.tensor && r.verdict == ep::HBVerdict::Eigenconfiguration) {
                        ep::io::AnyTensor t;
                        t.rational = false;
                        t.c = *r.tensor;
                        out["tensor"] = ep::io::tensorToJson(t);
                    }
                    negative = r.verdict != ep::HBVerdict::Eigenconfiguration;
                }
            }
            emit(c7Opts, out);
            if (negative) exitCode = kExitVerdictNegative;
        };
    });

    // hesse
    auto* cHesse = app.add_subcommand("hesse", "eigenpoints of a x^3 + b y^3 + c z^3 + 3h xyz");
    cHesse->set_help_flag("--help", "print help");  // frees -h for the coefficient below
    static CommonOpts hesseOpts;
    static std::string hA = "1", hB = "1", hC = "1", hH = "0";
    cHesse->add_option("--a", hA)->required();
    cHesse->add_option("--b", hB)->required();
    cHesse->add_option("--c", hC)->required();
    cHesse->add_option("--h", hH)->required();
    addCommon(cHesse, hesseOpts);
    cHesse->callback([&] {
        action = [&] {
            auto pts = ep::hesseEigenpoints(parseRat(hA), parseRat(hB), parseRat(hC), parseRat(hH));
            emit(hesseOpts, pointsToJson(pts));
        };
    });

    // arrangement
    auto* cArr = app.add_subcommand("arrangement", "eigenconfiguration of a line arrangement");
    static CommonOpts arrOpts;
    static std::string arrPath;
    cArr->add_option("--lines", arrPath, "JSON {\"lines\": [[a,b,c], ...]}")->required();
    addCommon(cArr, arrOpts);
    cArr->callback([&] {
        action = [&] {
            const auto arr = ep::io::arrangementFromJson(json::parse(ep::io::readFile(arrPath)));
            auto cfg = ep::arrangementEigenconfiguration(arr, arrOpts.seed, solveOpts(arrOpts));
            json out = ep::io::configurationToJson(cfg);
            out["arrangement"] = ep::io::arrangementToJson(arr);
            emit(arrOpts, out);
        };
    });

    // power-method
    auto* cPower = app.add_subcommand("power-method", "iterate v -> psi(v)/|psi(v)|");
    static CommonOpts powerOpts;
    static std::string powerTensorPath, powerStart;
    static int powerIters = 10000, powerEll = 1;
    static bool powerEllRoot = false;
    cPower->add_option("--tensor", powerTensorPath)->required();
    cPower->add_option("--start", powerStart, "comma-separated start vector")->required();
    cPower->add_option("--iters", powerIters, "iteration budget");
    cPower->add_option("--ell", powerEll);
    cPower->add_flag("--ell-root", powerEllRoot, "apply the coordinate-wise ell-th root variant");
    addCommon(cPower, powerOpts);
    cPower->callback([&] {
        action = [&] {
            const auto t = ep::io::tensorFromJson(json::parse(ep::io::readFile(powerTensorPath)));
            ep::PowerMethodConfig cfg;
            cfg.maxIterations = powerIters;
            cfg.ell = powerEll;
            cfg.ellRootScaling = powerEllRoot;
            const auto out = ep::powerMethodRun(t.complexView(), parseDoubleList(powerStart), cfg);
            emit(powerOpts, ep::io::dynOutcomeToJson(out));
        };
    });

    // robust
    auto* cRobust = app.add_subcommand("robust", "attracting fixed points of the power map");
    static CommonOpts robustOpts;
    static std::string robustTensorPath;
    static int robustSamples = 1000, robustEll = 1;
    cRobust->add_option("--tensor", robustTensorPath)->required();
    cRobust->add_option("--samples", robustSamples);
    cRobust->add_option("--ell", robustEll);
    addCommon(cRobust, robustOpts);
    cRobust->callback([&] {
        action = [&] {
            const auto t = ep::io::tensorFromJson(json::parse(ep::io::readFile(robustTensorPath)));
            const auto pts = ep::robustEigenpoints(t.complexView(), robustEll, robustSamples,
                                                   robustOpts.seed, robustOpts.threads);
            emit(robustOpts, ep::io::robustPointsToJson(pts));
        };
    });

    // perturb
    auto* cPerturb = app.add_subcommand("perturb", "real-count table for phi0 + eps*phi1");
    static CommonOpts perturbOpts;
    static std::string phi0Path, phi1Path, epsList;
    cPerturb->add_option("--phi0", phi0Path)->required();
    cPerturb->add_option("--phi1", phi1Path)->required();
    cPerturb->add_option("--eps-list", epsList, "comma-separated epsilons")->required();
    addCommon(cPerturb, perturbOpts);
    cPerturb->callback([&] {
        action = [&] {
            const auto f0 = ep::io::formFromJson(json::parse(ep::io::readFile(phi0Path)));
            const auto f1 = ep::io::formFromJson(json::parse(ep::io::readFile(phi1Path)));
            if (!f0.rational || !f1.rational)
                throw std::invalid_argument("perturb: rational forms required");
            std::vector<ep::Rat> eps;
            {
                std::stringstream ss(epsList);
                std::string tok;
                while (std::getline(ss, tok, ',')) eps.push_back(parseRat(tok));
            }
            const auto rows =
                ep::perturbationExperiment(f0.q, f1.q, eps, perturbOpts.seed, solveOpts(perturbOpts));
            std::string csv = "epsilon,total,real\n";
            char buf[64];
            for (const auto& row : rows) {
                if (!row.ok) {
                    std::snprintf(buf, sizeof(buf), "%.17g", row.epsilon);
                    csv += std::string(buf) + ",error,error\n";
                    continue;
                }
                std::snprintf(buf, sizeof(buf), "%.17g", row.epsilon);
                csv += std::string(buf) + "," + std::to_string(row.total) + "," +
                       std::to_string(row.real) + "\n";
            }
            emitRaw(perturbOpts, csv);
        };
    });

    // pencil-degree
    auto* cPencil = app.add_subcommand("pencil-degree",
                                       "degree of the eigendiscriminant restricted to a pencil");
    static CommonOpts pencilOpts;
    static std::string pencilA, pencilB;
    static int pencilEll = 1;
    cPencil->add_option("--tensor-a", pencilA)->required();
    cPencil->add_option("--tensor-b", pencilB)->required();
    cPencil->add_option("--ell", pencilEll);
    addCommon(cPencil, pencilOpts);
    cPencil->callback([&] {
        action = [&] {
            const auto a = ep::io::tensorFromJson(json::parse(ep::io::readFile(pencilA)));
            const auto b = ep::io::tensorFromJson(json::parse(ep::io::readFile(pencilB)));
            if (!a.rational || !b.rational)
                throw std::invalid_argument("pencil-degree: rational tensors required");
            const auto r = ep::pencilDiscriminantDegree(a.q, b.q, pencilEll);
            emit(pencilOpts, json{{"degree", r.degree}, {"degenerate", r.degenerate}});
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalidInput;
    }
    try {
        action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalFailure;
    }
    return exitCode;
}
