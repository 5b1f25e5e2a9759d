#include "entrobound/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "entrobound/errors.hpp"

namespace entrobound {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("scenario: " + where + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.contains(name)) fail(where, std::string("missing field \"") + name + "\"");
    return j.at(name);
}

} // namespace

const ScenarioState& Scenario::state(const std::string& name) const {
    for (const auto& s : states)
        if (s.name == name) return s;
    throw ValidationError("scenario: unknown state \"" + name + "\"");
}

const Measurement& Scenario::measurement(const std::string& name) const {
    for (const auto& [n, m] : measurements)
        if (n == name) return m;
    throw ValidationError("scenario: unknown measurement \"" + name + "\"");
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(where, "complex entries must be [re, im] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json vector_to_json(const CVector& v) {
    Json out = Json::array();
    for (const Complex& z : v) out.push_back(complex_to_json(z));
    return out;
}

CVector vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of [re, im] pairs");
    CVector v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(complex_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "expected a non-empty nested array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) fail(where, "matrix rows must be non-empty arrays");
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) fail(where, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = complex_from_json(j[r][c], where + "[" + std::to_string(r) + "][" +
                                                     std::to_string(c) + "]");
    }
    return m;
}

Json order_to_json(RenyiOrder order) {
    if (order.is_infinite()) return Json("min");
    if (order.is_shannon()) return Json("shannon");
    return Json(order.value());
}

RenyiOrder order_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "min") return RenyiOrder::infinity();
        if (s == "shannon") return RenyiOrder::shannon();
        fail(where, "order marker must be \"shannon\" or \"min\", got \"" + s + "\"");
    }
    if (!j.is_number()) fail(where, "order must be a number or a marker string");
    return RenyiOrder::of(j.get<double>());
}

Json scenario_to_json(const Scenario& s) {
    Json out;
    out["schema"] = "entrobound-scenario/1";
    out["dimension"] = s.dimension;
    if (s.tolerance) out["tolerance"] = *s.tolerance;

    Json states = Json::object();
    for (const auto& st : s.states) {
        Json entry;
        if (st.pure) {
            entry["type"] = "pure";
            entry["amplitudes"] = vector_to_json(st.pure->amplitudes());
        } else {
            entry["type"] = "mixed";
            entry["matrix"] = matrix_to_json(st.rho.op().matrix());
        }
        states[st.name] = std::move(entry);
    }
    out["states"] = std::move(states);

    Json measurements = Json::object();
    for (const auto& [name, m] : s.measurements) {
        Json entry;
        entry["kind"] = m.kind() == MeasurementKind::PVM ? "pvm" : "povm";
        Json elements = Json::array();
        for (std::size_t i = 0; i < m.size(); ++i)
            elements.push_back(matrix_to_json(m.element(i).matrix()));
        entry["elements"] = std::move(elements);
        entry["labels"] = m.labels();
        measurements[name] = std::move(entry);
    }
    out["measurements"] = std::move(measurements);

    Json checks = Json::array();
    for (const auto& c : s.checks) {
        Json entry;
        entry["type"] = c.type;
        if (c.type == "dilation") {
            entry["m"] = c.m1;
            entry["companion"] = c.m2;
            entry["states"] = c.states;
        } else if (c.type == "single") {
            entry["m"] = c.m1;
            entry["state"] = c.state;
        } else {
            entry["m"] = c.m1;
            entry["n"] = c.m2;
            entry["state"] = c.state;
        }
        if (c.alpha) entry["alpha"] = order_to_json(*c.alpha);
        if (c.beta) entry["beta"] = order_to_json(*c.beta);
        checks.push_back(std::move(entry));
    }
    out["checks"] = std::move(checks);
    return out;
}

Scenario scenario_from_json(const Json& j) {
    if (!j.is_object()) fail("root", "document must be a JSON object");
    const Json& schema = field(j, "schema", "root");
    if (!schema.is_string() || schema.get<std::string>() != "entrobound-scenario/1")
        fail("schema", "expected \"entrobound-scenario/1\"");

    Scenario s;
    const Json& dim = field(j, "dimension", "root");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
        fail("dimension", "must be a positive integer");
    s.dimension = dim.get<std::size_t>();
    if (j.contains("tolerance")) {
        if (!j.at("tolerance").is_number() || j.at("tolerance").get<double>() <= 0.0)
            fail("tolerance", "must be a positive number");
        s.tolerance = j.at("tolerance").get<double>();
    }

    for (const auto& [name, entry] : field(j, "states", "root").items()) {
        const std::string where = "states." + name;
        const std::string type = field(entry, "type", where).get<std::string>();
        if (type == "pure") {
            CVector amp = vector_from_json(field(entry, "amplitudes", where), where + ".amplitudes");
            if (amp.size() != s.dimension) fail(where, "amplitude count differs from dimension");
            PureState psi{std::move(amp)};
            s.states.push_back(ScenarioState{name, psi, pure_to_density(psi)});
        } else if (type == "mixed") {
            ComplexMatrix m = matrix_from_json(field(entry, "matrix", where), where + ".matrix");
            if (m.rows() != s.dimension || m.cols() != s.dimension)
                fail(where, "matrix shape differs from dimension");
            try {
                s.states.push_back(
                    ScenarioState{name, std::nullopt, DensityMatrix(HermitianOperator(std::move(m)))});
            } catch (const ValidationError& e) {
                fail(where, e.what());
            }
        } else {
            fail(where, "state type must be \"pure\" or \"mixed\"");
        }
    }

    for (const auto& [name, entry] : field(j, "measurements", "root").items()) {
        const std::string where = "measurements." + name;
        const std::string kind_str = field(entry, "kind", where).get<std::string>();
        MeasurementKind kind;
        if (kind_str == "povm") kind = MeasurementKind::POVM;
        else if (kind_str == "pvm") kind = MeasurementKind::PVM;
        else fail(where, "kind must be \"povm\" or \"pvm\"");

        const Json& elements_json = field(entry, "elements", where);
        if (!elements_json.is_array() || elements_json.empty())
            fail(where, "elements must be a non-empty array");
        std::vector<HermitianOperator> elements;
        for (std::size_t i = 0; i < elements_json.size(); ++i) {
            const std::string ewhere = where + ".elements[" + std::to_string(i) + "]";
            ComplexMatrix m = matrix_from_json(elements_json[i], ewhere);
            if (m.rows() != s.dimension || m.cols() != s.dimension)
                fail(ewhere, "element shape differs from dimension");
            try {
                elements.emplace_back(std::move(m));
            } catch (const ValidationError& e) {
                fail(ewhere, e.what());
            }
        }
        std::vector<std::string> labels;
        if (entry.contains("labels")) labels = entry.at("labels").get<std::vector<std::string>>();
        try {
            s.measurements.emplace_back(name,
                                        validate_measurement(std::move(elements), kind, std::move(labels)));
        } catch (const ValidationError& e) {
            fail(where, e.what());
        }
    }

    if (j.contains("checks")) {
        const Json& checks = j.at("checks");
        if (!checks.is_array()) fail("checks", "must be an array");
        for (std::size_t i = 0; i < checks.size(); ++i) {
            const std::string where = "checks[" + std::to_string(i) + "]";
            const Json& entry = checks[i];
            CheckSpec spec;
            spec.type = field(entry, "type", where).get<std::string>();
            spec.m1 = field(entry, "m", where).get<std::string>();
            s.measurement(spec.m1);  // resolve early for a good error message
            if (spec.type == "pair" || spec.type == "free" || spec.type == "compare" ||
                spec.type == "saturation") {
                spec.m2 = field(entry, "n", where).get<std::string>();
                s.measurement(spec.m2);
                spec.state = field(entry, "state", where).get<std::string>();
                s.state(spec.state);
            } else if (spec.type == "single") {
                spec.state = field(entry, "state", where).get<std::string>();
                s.state(spec.state);
            } else if (spec.type == "dilation") {
                spec.m2 = field(entry, "companion", where).get<std::string>();
                s.measurement(spec.m2);
                spec.states = field(entry, "states", where).get<std::vector<std::string>>();
                for (const auto& name : spec.states)
                    if (!s.state(name).pure) fail(where, "dilation states must be pure");
            } else {
                fail(where, "unknown check type \"" + spec.type + "\"");
            }
            if (entry.contains("alpha")) spec.alpha = order_from_json(entry.at("alpha"), where + ".alpha");
            if (entry.contains("beta")) spec.beta = order_from_json(entry.at("beta"), where + ".beta");
            if ((spec.type == "pair" || spec.type == "single" || spec.type == "compare") && !spec.alpha)
                fail(where, "check requires an \"alpha\" order");
            if (spec.type == "free" && (!spec.alpha || !spec.beta))
                fail(where, "free-order check requires both \"alpha\" and \"beta\"");
            s.checks.push_back(std::move(spec));
        }
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("scenario: cannot open file \"" + path + "\"");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("scenario: JSON parse error: ") + e.what());
    }
    return scenario_from_json(j);
}

void save_scenario(const Scenario& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("scenario: cannot write file \"" + path + "\"");
    out << scenario_to_json(s).dump(2) << "\n";
}

Scenario builtin_discrimination_scenario() {
    const double rt2 = std::sqrt(2.0);
    const double c8 = std::cos(M_PI / 8.0);
    const double s8 = std::sin(M_PI / 8.0);

    Scenario s;
    s.dimension = 2;

    const PureState psi1(CVector{{1.0, 0.0}, {0.0, 0.0}});
    const PureState psi2(CVector{{1.0 / rt2, 0.0}, {1.0 / rt2, 0.0}});
    // Eigenstate of the inconclusive-outcome element M3.
    const double p34 = std::pow(2.0, -0.75);
    const PureState phi3(CVector{{p34 * std::sqrt(rt2 + 1.0), 0.0}, {p34 * std::sqrt(rt2 - 1.0), 0.0}});

    s.states.push_back({"psi1", psi1, pure_to_density(psi1)});
    s.states.push_back({"psi2", psi2, pure_to_density(psi2)});
    s.states.push_back({"phi3", phi3, pure_to_density(phi3)});
    {
        ComplexMatrix half = ComplexMatrix::identity(2) * 0.5;
        s.states.push_back(
            {"mixed", std::nullopt, DensityMatrix(HermitianOperator(std::move(half)))});
    }

    // Helstrom (minimum-error) PVM for psi1 vs psi2.
    const CVector u{{c8, 0.0}, {-s8, 0.0}};
    const CVector v{{s8, 0.0}, {c8, 0.0}};
    s.measurements.emplace_back(
        "N", validate_measurement({HermitianOperator(ComplexMatrix::outer(u, u)),
                                   HermitianOperator(ComplexMatrix::outer(v, v))},
                                  MeasurementKind::PVM, {"state-1", "state-2"}));

    // Unambiguous (error-free) discrimination POVM; outcome 3 is the
    // inconclusive one.
    const CVector diff{{1.0, 0.0}, {-1.0, 0.0}};
    ComplexMatrix m1 = ComplexMatrix::outer(diff, diff) * (1.0 / (rt2 * (rt2 + 1.0)));
    ComplexMatrix m2(2, 2);
    m2(1, 1) = Complex{rt2 / (rt2 + 1.0), 0.0};
    ComplexMatrix m3 = ComplexMatrix::identity(2) - m1 - m2;
    s.measurements.emplace_back(
        "M", validate_measurement({HermitianOperator(std::move(m1)), HermitianOperator(std::move(m2)),
                                   HermitianOperator(std::move(m3))},
                                  MeasurementKind::POVM, {"not-2", "not-1", "inconclusive"}));

    const std::vector<std::string> all_states{"psi1", "psi2", "phi3", "mixed"};
    for (const auto& st : all_states)
        for (double a : {0.6, 1.0, 2.0, 5.0})
            s.checks.push_back({"pair", "M", "N", st, {}, RenyiOrder::of(a), std::nullopt});

    for (const std::string& m : {std::string("M"), std::string("N")})
        for (const auto& st : {std::string("psi1"), std::string("phi3")}) {
            for (double a : {0.5, 1.0, 2.0, 64.0})
                s.checks.push_back({"single", m, "", st, {}, RenyiOrder::of(a), std::nullopt});
            s.checks.push_back({"single", m, "", st, {}, RenyiOrder::infinity(), std::nullopt});
        }

    for (const auto& st : {std::string("psi1"), std::string("phi3")}) {
        s.checks.push_back(
            {"free", "M", "N", st, {}, RenyiOrder::shannon(), RenyiOrder::shannon()});
        s.checks.push_back({"compare", "M", "N", st, {}, RenyiOrder::of(2.0), std::nullopt});
    }

    for (const auto& st : all_states)
        s.checks.push_back({"saturation", "M", "N", st, {}, std::nullopt, std::nullopt});

    s.checks.push_back(
        {"dilation", "M", "N", "", {"psi1", "psi2", "phi3"}, std::nullopt, std::nullopt});
    return s;
}

} // namespace entrobound
