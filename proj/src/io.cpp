#include "eigenpoints/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eigenpoints::io {

namespace {

json bigIntToJson(const BigInt& v) {
    static const BigInt lim = (BigInt(1) << 53);
    if (v < lim && v > -lim) return json(v.convert_to<long long>());
    return json(v.str());
}

BigInt bigIntFromJson(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected integer or integer string");
}

std::string exponentsKey(const std::vector<int>& e) {
    std::string k;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) k += ",";
        k += std::to_string(e[i]);
    }
    return k;
}

std::vector<int> exponentsFromKey(const std::string& key, int nvars) {
    std::vector<int> e;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) e.push_back(std::stoi(tok));
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent key has wrong arity: " + key);
    return e;
}

}  // namespace

json ratToJson(const Rat& r) {
    return json::array({bigIntToJson(boost::multiprecision::numerator(r)),
                        bigIntToJson(boost::multiprecision::denominator(r))});
}

Rat ratFromJson(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_number_float()) return ratFromDouble(j.get<double>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt(s));
        return Rat(BigInt(s.substr(0, slash))) / Rat(BigInt(s.substr(slash + 1)));
    }
    if (j.is_array() && j.size() == 2)
        return Rat(bigIntFromJson(j[0])) / Rat(bigIntFromJson(j[1]));
    throw std::invalid_argument("cannot parse rational: " + j.dump());
}

json cdToJson(const CD& c) { return json::array({c.real(), c.imag()}); }

CD cdFromJson(const json& j) {
    if (j.is_number()) return CD(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2) return CD(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument("cannot parse complex number: " + j.dump());
}

json tensorToJson(const AnyTensor& t) {
    json out;
    out["n"] = t.rational ? t.q.n : t.c.n;
    out["d"] = t.rational ? t.q.d : t.c.d;
    out["mode"] = t.rational ? "rational" : "float";
    json entries = json::array();
    if (t.rational)
        for (const auto& e : t.q.entries) entries.push_back(ratToJson(e));
    else
        for (const auto& e : t.c.entries) entries.push_back(cdToJson(e));
    out["entries"] = std::move(entries);
    return out;
}

AnyTensor tensorFromJson(const json& j) {
    AnyTensor t;
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    const auto& entries = j.at("entries");
    if (entries.size() != TensorQ::flatSize(n, d))
        throw std::invalid_argument("tensor entries length does not match n^d");
    std::string mode = j.value("mode", "rational");
    t.rational = (mode == "rational");
    if (t.rational) {
        t.q = TensorQ(n, d);
        for (std::size_t i = 0; i < entries.size(); ++i) t.q.entries[i] = ratFromJson(entries[i]);
    } else {
        t.c = TensorC(n, d);
        for (std::size_t i = 0; i < entries.size(); ++i) t.c.entries[i] = cdFromJson(entries[i]);
    }
    return t;
}

json formToJson(const AnyForm& f) {
    json out;
    out["vars"] = f.rational ? f.q.numVars() : f.c.numVars();
    out["deg"] = f.rational ? f.q.degree() : f.c.degree();
    out["mode"] = f.rational ? "rational" : "float";
    json terms = json::object();
    if (f.rational)
        for (const auto& [e, c] : f.q.terms()) terms[exponentsKey(e)] = ratToJson(c);
    else
        for (const auto& [e, c] : f.c.terms()) terms[exponentsKey(e)] = cdToJson(c);
    out["terms"] = std::move(terms);
    return out;
}

AnyForm formFromJson(const json& j) {
    AnyForm f;
    const int nvars = j.at("vars").get<int>();
    const std::string mode = j.value("mode", "rational");
    f.rational = (mode == "rational");
    if (f.rational) {
        f.q = PolyQ(nvars);
        for (const auto& [key, val] : j.at("terms").items())
            f.q.addTerm(exponentsFromKey(key, nvars), ratFromJson(val));
    } else {
        f.c = PolyC(nvars);
        for (const auto& [key, val] : j.at("terms").items())
            f.c.addTerm(exponentsFromKey(key, nvars), cdFromJson(val));
    }
    if (j.contains("deg")) {
        const int deg = j.at("deg").get<int>();
        const int actual = f.rational ? f.q.degree() : f.c.degree();
        if (actual >= 0 && actual != deg)
            throw std::invalid_argument("form degree does not match its terms");
    }
    return f;
}

json pointToJson(const ProjectivePoint& p) {
    json coords = json::array();
    for (const CD& c : p.coords()) coords.push_back(cdToJson(c));
    return json{{"coords", std::move(coords)}};
}

ProjectivePoint pointFromJson(const json& j) {
    std::vector<CD> coords;
    for (const auto& c : j.at("coords")) coords.push_back(cdFromJson(c));
    return ProjectivePoint::fromCoords(std::move(coords));
}

json configurationToJson(const EigenConfiguration& cfg) {
    json out;
    out["n"] = cfg.n;
    out["d"] = cfg.d;
    out["ell"] = cfg.ell;
    switch (cfg.method) {
        case SolveMethod::ExactUnivariate: out["method"] = "exact-univariate"; break;
        case SolveMethod::Resultant: out["method"] = "resultant"; break;
        case SolveMethod::Homotopy: out["method"] = "homotopy"; break;
    }
    out["positiveDimensional"] = cfg.positiveDimensional;
    out["lostPaths"] = cfg.lostPaths;
    out["count"] = cfg.countDistinct();
    json pts = json::array();
    for (const auto& rec : cfg.points) {
        json p = pointToJson(rec.point);
        p["eigenvalue"] = rec.eigenvalue ? cdToJson(*rec.eigenvalue) : json(nullptr);
        p["multiplicity"] = rec.multiplicity;
        p["isolated"] = rec.isolated;
        p["residual"] = rec.residual;
        p["real"] = rec.real;
        pts.push_back(std::move(p));
    }
    out["points"] = std::move(pts);
    return out;
}

json arrangementToJson(const LineArrangement& arr) {
    json lines = json::array();
    for (const auto& l : arr.lines)
        lines.push_back(json::array({ratToJson(l[0]), ratToJson(l[1]), ratToJson(l[2])}));
    json out;
    out["lines"] = std::move(lines);
    out["generic"] = arr.generic;
    if (arr.offendingTriple) {
        const auto& t = *arr.offendingTriple;
        out["offendingTriple"] = json::array({t[0], t[1], t[2]});
    }
    return out;
}

LineArrangement arrangementFromJson(const json& j) {
    std::vector<std::array<Rat, 3>> lines;
    for (const auto& l : j.at("lines")) {
        if (!l.is_array() || l.size() != 3)
            throw std::invalid_argument("line must have three coefficients");
        lines.push_back({ratFromJson(l[0]), ratFromJson(l[1]), ratFromJson(l[2])});
    }
    return makeArrangement(std::move(lines));
}

json robustPointsToJson(const std::vector<RobustPoint>& pts) {
    json arr = json::array();
    for (const auto& r : pts) {
        json p = pointToJson(r.point);
        p["basinFraction"] = r.basinFraction;
        p["spectralRadius"] = r.spectralRadius;
        p["residual"] = r.residual;
        arr.push_back(std::move(p));
    }
    return json{{"robustPoints", std::move(arr)}};
}

json dynOutcomeToJson(const DynOutcome& o) {
    json out;
    switch (o.kind) {
        case DynKind::Converged: out["kind"] = "converged"; break;
        case DynKind::Cycle: out["kind"] = "cycle"; break;
        case DynKind::BaseLocus: out["kind"] = "baseLocus"; break;
        case DynKind::BudgetExceeded: out["kind"] = "budgetExceeded"; break;
    }
    out["iterations"] = o.iterations;
    json pts = json::array();
    for (const auto& p : o.points) pts.push_back(p);
    out["points"] = std::move(pts);
    return out;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace eigenpoints::io
