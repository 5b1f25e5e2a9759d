/*
 * Scenario files: named states and measurements plus a list of checks to
 * run, serialized as JSON (schema "entrobound-scenario/1"). Complex
 * entries are [re, im] pairs; matrices are row-major nested arrays;
 * entropy orders are numbers with "shannon" / "min" markers for the
 * limits. The builtin scenario is the two-state discrimination setup:
 * Helstrom PVM vs. the three-outcome unambiguous-discrimination POVM.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "entrobound/entropy.hpp"
#include "entrobound/measurement.hpp"

namespace entrobound {

using Json = nlohmann::ordered_json;

struct ScenarioState {
    std::string name;
    std::optional<PureState> pure;  // engaged for pure states
    DensityMatrix rho;
};

struct CheckSpec {
    std::string type;  // pair | single | free | compare | saturation | dilation
    std::string m1;
    std::string m2;                    // second measurement / dilation companion
    std::string state;                 // unused for dilation
    std::vector<std::string> states;   // dilation verification states
    std::optional<RenyiOrder> alpha;
    std::optional<RenyiOrder> beta;    // free-order checks only
};

struct Scenario {
    std::size_t dimension = 0;
    std::vector<ScenarioState> states;
    std::vector<std::pair<std::string, Measurement>> measurements;
    std::vector<CheckSpec> checks;
    std::optional<double> tolerance;   // overrides the default 1e-9 verdict tolerance

    const ScenarioState& state(const std::string& name) const;
    const Measurement& measurement(const std::string& name) const;
};

// JSON encoding helpers shared with reports.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where);
Json vector_to_json(const CVector& v);
CVector vector_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& where);
Json order_to_json(RenyiOrder order);
RenyiOrder order_from_json(const Json& j, const std::string& where);

Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& s, const std::string& path);

Scenario builtin_discrimination_scenario();

} // namespace entrobound
