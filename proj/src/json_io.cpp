#include "cake/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cake/errors.hpp"

namespace cake {

namespace {

const json& field(const json& node, const char* key) {
    if (!node.is_object() || !node.contains(key)) throw InvalidInstance(std::string("missing field '") + key + "'");
    return node.at(key);
}

const json& array_field(const json& node, const char* key) {
    const json& arr = field(node, key);
    if (!arr.is_array()) throw InvalidInstance(std::string("field '") + key + "' must be an array");
    return arr;
}

json rationals(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const Rational& q : values) arr.push_back(rational_to_json(q));
    return arr;
}

}  // namespace

Rational rational_from_json(const json& node) {
    if (node.is_number_integer()) return Rational(node.get<std::int64_t>());
    if (node.is_string()) {
        try {
            return Rational::parse(node.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw InvalidInstance(e.what());
        }
    }
    throw InvalidInstance("expected an integer or a \"p/q\" string, got " + node.dump());
}

json rational_to_json(const Rational& q) { return q.to_string(); }

Instance instance_from_json(const json& doc) {
    std::vector<Valuation> vals;
    std::vector<std::string> names;
    std::vector<Rational> scales;
    for (const json& agent : array_field(doc, "agents")) {
        names.push_back(agent.contains("name") ? agent.at("name").get<std::string>()
                                               : "agent" + std::to_string(names.size()));
        std::vector<Segment> segs;
        Rational total;
        for (const json& seg : array_field(agent, "segments")) {
            segs.push_back({rational_from_json(field(seg, "width")), rational_from_json(field(seg, "value"))});
            total += segs.back().value;
        }
        if (total <= Rational(0)) throw InvalidInstance("agent '" + names.back() + "' values the whole cake at 0");
        for (Segment& s : segs) s.value /= total;
        vals.emplace_back(std::move(segs));
        scales.push_back(total);
    }
    std::vector<Rational> w;
    for (const json& q : array_field(doc, "entitlements")) w.push_back(rational_from_json(q));
    return Instance(std::move(vals), std::move(w), std::move(names)).with_scales(std::move(scales));
}

json instance_to_json(const Instance& instance) {
    json agents = json::array();
    for (AgentId i = 0; i < instance.size(); ++i) {
        json segs = json::array();
        for (const Segment& s : instance.valuation(i).segments()) {
            segs.push_back({{"width", rational_to_json(s.width)}, {"value", rational_to_json(s.value * instance.scales()[i])}});
        }
        agents.push_back({{"name", instance.names()[i]}, {"segments", std::move(segs)}});
    }
    return {{"agents", std::move(agents)}, {"entitlements", rationals(instance.entitlements())}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInstance("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInstance("'" + path + "' is not valid JSON: " + e.what());
    }
}

Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

json ledger_to_json(const QueryLedger& ledger) {
    json rows = json::array();
    for (AgentId i = 0; i < ledger.agents(); ++i) {
        rows.push_back({{"agent", i}, {"eval", ledger.agent(i).eval}, {"mark", ledger.agent(i).mark}});
    }
    return {{"agents", std::move(rows)}, {"eval", ledger.evals()}, {"mark", ledger.marks()}, {"total", ledger.total()}};
}

json decision_to_json(const Decision& decision) {
    json out = {{"exists", decision.exists}, {"mode", to_string(decision.mode)}, {"algorithm", decision.algorithm}};
    if (decision.z) out["z"] = rational_to_json(*decision.z);
    if (!decision.permutation.empty()) out["permutation"] = decision.permutation;
    if (!decision.marks.empty()) out["marks"] = rationals(decision.marks);
    if (decision.threshold) out["threshold"] = rational_to_json(*decision.threshold);
    if (decision.disagreeing) out["disagreeing"] = json::array({0, *decision.disagreeing});
    out["queries"] = ledger_to_json(decision.queries);
    out["skipped_marks"] = decision.skipped_marks;
    return out;
}

json allocation_to_json(const Allocation& allocation, const Instance& instance) {
    std::vector<Rational> values;
    for (std::size_t k = 0; k < allocation.pieces(); ++k) {
        const AgentId agent = allocation.order[k];
        values.push_back(instance.valuation(agent).value_of(allocation.left(k), allocation.right(k)));
    }
    return {{"cuts", rationals(allocation.cuts)}, {"order", allocation.order}, {"values", rationals(values)}};
}

Allocation allocation_from_json(const json& doc) {
    Allocation a;
    for (const json& q : array_field(doc, "cuts")) a.cuts.push_back(rational_from_json(q));
    for (const json& i : array_field(doc, "order")) {
        if (!i.is_number_unsigned() && !(i.is_number_integer() && i.get<std::int64_t>() >= 0)) {
            throw InvalidInstance("allocation order must hold agent indices");
        }
        a.order.push_back(i.get<AgentId>());
    }
    return a;
}

json report_to_json(const VerifierReport& report, Mode mode) {
    json strict = json::array(), weak = json::array();
    for (bool s : report.strict) strict.push_back(s);
    for (bool w : report.weak) weak.push_back(w);
    return {{"mode", to_string(mode)},
            {"satisfied", report.satisfied(mode)},
            {"well_formed", report.well_formed},
            {"connected", report.connected},
            {"covers_cake", report.covers_cake},
            {"values", rationals(report.values)},
            {"strict", std::move(strict)},
            {"weak", std::move(weak)}};
}

json provenance_to_json(const FamilyParams& params) {
    json p = json::object();
    if (params.family == Family::example) {
        p["k"] = params.example;
    } else {
        p["n"] = params.n;
        p["variant"] = params.perturbed ? "perturbed" : "baseline";
    }
    if (params.scale) p["M"] = rational_to_json(*params.scale);
    if (params.z) p["z"] = rational_to_json(*params.z);
    if (params.target) {
        json t = {{"agent", params.target->agent}, {"subset_rank", params.target->subset_rank}};
        if (params.target->shift) t["shift"] = rational_to_json(*params.target->shift);
        p["perturb_target"] = std::move(t);
    }
    return {{"family", to_string(params.family)}, {"params", std::move(p)}};
}

}  // namespace cake
