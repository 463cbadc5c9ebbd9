#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "eigenpoints/dynamics.hpp"
#include "eigenpoints/eigensys.hpp"
#include "eigenpoints/polynomial.hpp"
#include "eigenpoints/solver.hpp"

namespace eigenpoints::io {

using nlohmann::json;

// Scalars: rationals serialize as [num, den] (numbers when they fit exactly,
// decimal strings otherwise); complex values as [re, im]. Parsing accepts
// numbers, [a, b] pairs, and "p/q" strings.
json ratToJson(const Rat& r);
Rat ratFromJson(const json& j);
json cdToJson(const CD& c);
CD cdFromJson(const json& j);

struct AnyTensor {
    bool rational = true;
    TensorQ q;
    TensorC c;

    TensorC complexView() const { return rational ? toComplexTensor(q) : c; }
};

json tensorToJson(const AnyTensor& t);
AnyTensor tensorFromJson(const json& j);

struct AnyForm {
    bool rational = true;
    PolyQ q;
    PolyC c;

    PolyC complexView() const { return rational ? toComplexPoly(q) : c; }
};

json formToJson(const AnyForm& f);
AnyForm formFromJson(const json& j);

json pointToJson(const ProjectivePoint& p);
ProjectivePoint pointFromJson(const json& j);

json configurationToJson(const EigenConfiguration& cfg);

json arrangementToJson(const LineArrangement& arr);
LineArrangement arrangementFromJson(const json& j);

json robustPointsToJson(const std::vector<RobustPoint>& pts);
json dynOutcomeToJson(const DynOutcome& o);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& content);

}  // namespace eigenpoints::io
