#include "ksq/io.hpp"

#include <fstream>

namespace ksq {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string require_string(const json& j, const char* key) {
    const json& v = require_field(j, key);
    if (!v.is_string())
        throw ParseError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

json load_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw ParseError("invalid JSON in " + path.string());
    return j;
}

void store_document(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

ComplexVector vector_from_json(const json& entries) {
    if (!entries.is_array() || entries.empty())
        throw ParseError("vector must be a nonempty array of [re, im] pairs");
    ComplexVector v(entries.size());
    int i = 0;
    for (const json& pair : entries) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number())
            throw ParseError("vector entry must be a [re, im] number pair");
        v[i++] = std::complex<double>(pair[0].get<double>(),
                                      pair[1].get<double>());
    }
    return v;
}

json vector_to_json(const ComplexVector& v) {
    json entries = json::array();
    for (int i = 0; i < v.size(); ++i)
        entries.push_back(json::array({v[i].real(), v[i].imag()}));
    return entries;
}

}  // namespace

ScenarioFile scenario_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("scenario document must be an object");
    ScenarioFile out;
    std::string name = require_string(j, "name");

    const json& jevents = require_field(j, "events");
    if (!jevents.is_array())
        throw ParseError("field \"events\" must be an array of strings");
    std::vector<std::string> events;
    for (const json& e : jevents) {
        if (!e.is_string()) throw ParseError("event labels must be strings");
        events.push_back(e.get<std::string>());
    }

    const json& jcontexts = require_field(j, "contexts");
    if (!jcontexts.is_array())
        throw ParseError("field \"contexts\" must be an array");
    std::vector<Context> contexts;
    for (const json& jc : jcontexts) {
        if (!jc.is_object()) throw ParseError("context must be an object");
        Context c;
        const json& jm = require_field(jc, "members");
        if (!jm.is_array())
            throw ParseError("context \"members\" must be an array of ints");
        for (const json& m : jm) {
            if (!m.is_number_integer())
                throw ParseError("context members must be integers");
            c.members.push_back(m.get<int>());
        }
        const json& jcomplete = require_field(jc, "complete");
        if (!jcomplete.is_boolean())
            throw ParseError("context \"complete\" must be a boolean");
        c.complete = jcomplete.get<bool>();
        contexts.push_back(std::move(c));
    }
    out.scenario = Scenario(std::move(name), std::move(events),
                            std::move(contexts));

    if (auto it = j.find("vectors"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) throw ParseError("field \"vectors\" must be an array");
        for (const json& jv : *it) out.vectors.push_back(vector_from_json(jv));
        if (out.vectors.size() != out.scenario.events().size())
            throw ParseError("vectors count differs from event count");
        for (const auto& v : out.vectors)
            if (v.size() != out.vectors.front().size())
                throw ParseError("vectors must share one dimension");
    }
    return out;
}

json scenario_to_json(const Scenario& s,
                      const std::vector<ComplexVector>& vectors) {
    json j;
    j["name"] = s.name();
    j["events"] = s.events();
    json jcontexts = json::array();
    for (const Context& c : s.contexts())
        jcontexts.push_back({{"members", c.members}, {"complete", c.complete}});
    j["contexts"] = std::move(jcontexts);
    if (!vectors.empty()) {
        json jv = json::array();
        for (const auto& v : vectors) jv.push_back(vector_to_json(v));
        j["vectors"] = std::move(jv);
    }
    return j;
}

ScenarioFile read_scenario_file(const std::filesystem::path& path) {
    return scenario_from_json(load_document(path));
}

void write_scenario_file(const std::filesystem::path& path, const Scenario& s,
                         const std::vector<ComplexVector>& vectors) {
    store_document(path, scenario_to_json(s, vectors));
}

json distribution_to_json(const QuasiDistribution& q) {
    json j;
    j["scenario"] = q.scenario().name();
    j["mode"] = q.mode() == NumericMode::Rational ? "rational" : "float";
    json support = json::array();
    for (const auto& [a, w] : q.support()) {
        json item;
        item["bits"] = a.to_string();
        if (q.mode() == NumericMode::Rational)
            item["weight"] = rational_str(w.rational());
        else
            item["weight"] = w.to_double();
        support.push_back(std::move(item));
    }
    j["support"] = std::move(support);
    return j;
}

QuasiDistribution distribution_from_json(const json& j,
                                         const Scenario& scenario) {
    if (!j.is_object())
        throw ParseError("distribution document must be an object");
    std::string name = require_string(j, "scenario");
    if (name != scenario.name())
        throw ParseError("distribution refers to scenario \"" + name +
                         "\", not \"" + scenario.name() + "\"");
    std::string mode_name = require_string(j, "mode");
    NumericMode mode;
    if (mode_name == "rational")
        mode = NumericMode::Rational;
    else if (mode_name == "float")
        mode = NumericMode::Float;
    else
        throw ParseError("mode must be \"rational\" or \"float\"");

    const json& jsupport = require_field(j, "support");
    if (!jsupport.is_array())
        throw ParseError("field \"support\" must be an array");
    std::vector<std::pair<Assignment, Scalar>> support;
    for (const json& item : jsupport) {
        if (!item.is_object()) throw ParseError("support item must be an object");
        Assignment a;
        try {
            a = Assignment::from_string(require_string(item, "bits"));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        const json& jw = require_field(item, "weight");
        Scalar w;
        if (mode == NumericMode::Rational) {
            if (!jw.is_string())
                throw ParseError("rational weights must be \"num/den\" strings");
            auto r = parse_rational(jw.get<std::string>());
            if (!r)
                throw ParseError("cannot parse rational weight \"" +
                                 jw.get<std::string>() + "\"");
            w = Scalar(*r);
        } else {
            if (!jw.is_number())
                throw ParseError("float weights must be JSON numbers");
            w = Scalar(jw.get<double>());
        }
        support.emplace_back(std::move(a), std::move(w));
    }
    try {
        return QuasiDistribution(scenario, std::move(support), mode);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

QuasiDistribution read_distribution_file(const std::filesystem::path& path,
                                         const Scenario& scenario) {
    return distribution_from_json(load_document(path), scenario);
}

void write_distribution_file(const std::filesystem::path& path,
                             const QuasiDistribution& q) {
    store_document(path, distribution_to_json(q));
}

QuantumState state_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("state document must be an object");
    const json& jrho = require_field(j, "rho");
    if (!jrho.is_array() || jrho.empty())
        throw ParseError("field \"rho\" must be a nonempty array of rows");
    const int d = static_cast<int>(jrho.size());
    ComplexMatrix rho(d, d);
    int r = 0;
    for (const json& row : jrho) {
        ComplexVector v = vector_from_json(row);
        if (v.size() != d) throw ParseError("\"rho\" must be square");
        rho.row(r++) = v.transpose();
    }
    try {
        return QuantumState::density(std::move(rho));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

QuantumState read_state_file(const std::filesystem::path& path) {
    return state_from_json(load_document(path));
}

}  // namespace ksq
