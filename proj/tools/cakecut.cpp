// cakecut: decide, solve, verify, generate and count queries for connected
// cake division with entitlements. Exit 0 = yes, 3 = no, 1 = error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cake/brute_force.hpp"
#include "cake/construction.hpp"
#include "cake/decision.hpp"
#include "cake/errors.hpp"
#include "cake/fixtures.hpp"
#include "cake/json_io.hpp"
#include "cake/oracle.hpp"

namespace {

using namespace cake;

constexpr int kYes = 0;
constexpr int kError = 1;
constexpr int kNo = 3;

struct ModeFlags {
    bool hungry_equal = false;
    bool proportional = false;
    bool strong = false;
    std::string plus_z;

    Mode mode() const {
        if (proportional) return Mode::proportional;
        if (!plus_z.empty()) return Mode::plus_z;
        return Mode::strong;
    }
    Rational z() const { return plus_z.empty() ? Rational(0) : Rational::parse(plus_z); }
};

void emit(const json& doc, const std::string& out) {
    if (out.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream file(out);
    if (!file) throw InvalidInstance("cannot write '" + out + "'");
    file << doc.dump(2) << '\n';
}

Decision run_decision(Oracle& oracle, const ModeFlags& flags) {
    if (flags.hungry_equal) {
        if (!oracle.all_hungry()) throw PreconditionError("--hungry-equal needs every agent hungry");
        if (!oracle.equal_entitlements()) throw PreconditionError("--hungry-equal needs equal entitlements");
        return decide_hungry_equal(oracle);
    }
    switch (flags.mode()) {
        case Mode::proportional: return decide_proportional(oracle);
        case Mode::plus_z: return decide_plus_z(oracle, flags.z());
        case Mode::strong: break;
    }
    return decide_general(oracle);
}

int cmd_decide(const std::string& path, const ModeFlags& flags, const std::string& out) {
    Oracle oracle(load_instance(path));
    const Decision d = run_decision(oracle, flags);
    emit(decision_to_json(d), out);
    return d.exists ? kYes : kNo;
}

int cmd_solve(const std::string& path, const ModeFlags& flags, const std::string& out) {
    const Instance instance = load_instance(path);
    Oracle oracle(instance);
    json doc;
    std::optional<Allocation> alloc;
    if (flags.hungry_equal) {
        if (!oracle.all_hungry() || !oracle.equal_entitlements()) {
            throw PreconditionError("--hungry-equal needs hungry agents with equal entitlements");
        }
        alloc = construct_hungry_equal(oracle);
        doc["decision"] = {{"exists", alloc.has_value()}, {"mode", to_string(Mode::strong)}, {"algorithm", "hungry_equal"}};
    } else {
        const Decision d = run_decision(oracle, flags);
        doc["decision"] = decision_to_json(d);
        if (d.exists) {
            switch (flags.mode()) {
                case Mode::proportional: alloc = construct_proportional(oracle, d.permutation); break;
                case Mode::plus_z: alloc = construct_plus_z(oracle, d.permutation, flags.z()); break;
                case Mode::strong: alloc = construct_from_witness(oracle, d.permutation); break;
            }
        }
    }
    if (!alloc) {
        emit(doc, out);
        return kNo;
    }
    const Mode mode = flags.hungry_equal ? Mode::strong : flags.mode();
    const VerifierReport report = verify(instance, *alloc, mode, flags.z());
    doc["allocation"] = allocation_to_json(*alloc, instance);
    doc["report"] = report_to_json(report, mode);
    doc["queries"] = ledger_to_json(oracle.ledger());
    emit(doc, out);
    return report.satisfied(mode) ? kYes : kError;
}

int cmd_verify(const std::string& instance_path, const std::string& alloc_path, const ModeFlags& flags,
               const std::string& out) {
    const Instance instance = load_instance(instance_path);
    json doc = read_json_file(alloc_path);
    if (doc.contains("allocation")) doc = doc.at("allocation");
    const Allocation alloc = allocation_from_json(doc);
    const Mode mode = flags.mode();
    const VerifierReport report = verify(instance, alloc, mode, flags.z());
    emit(report_to_json(report, mode), out);
    if (!report.structurally_valid()) return kError;
    return report.satisfied(mode) ? kYes : kNo;
}

struct GenFlags {
    std::string family = "example";
    int k = 1;
    std::size_t n = 3;
    std::string z, scale, shift;
    bool perturbed = false;
    std::optional<AgentId> agent;
    std::optional<std::size_t> subset;
};

int cmd_gen(const GenFlags& flags, const std::string& out) {
    FamilyParams p;
    p.family = parse_family(flags.family);
    p.example = flags.k;
    p.n = flags.n;
    p.perturbed = flags.perturbed;
    if (!flags.scale.empty()) p.scale = Rational::parse(flags.scale);
    if (!flags.z.empty()) p.z = Rational::parse(flags.z);
    if (flags.agent || flags.subset || !flags.shift.empty()) {
        if (p.family != Family::thm3) throw PreconditionError("--agent/--subset/--shift apply to --family thm3 only");
        Thm3Perturbation t;
        t.agent = flags.agent.value_or(0);
        t.subset_rank = flags.subset.value_or(1);
        if (!flags.shift.empty()) t.shift = Rational::parse(flags.shift);
        p.target = t;
        p.perturbed = true;
    }
    const Generated g = generate(p);
    json doc = provenance_to_json(g.params);
    const json body = instance_to_json(g.instance);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    emit(doc, out);
    return kYes;
}

int cmd_bounds(const std::string& path, bool measure, bool csv, const std::string& out) {
    const Instance instance = load_instance(path);
    const std::size_t n = instance.size();
    const Rational lower = query_lower_bound(instance.entitlements());
    const std::uint64_t he_budget = n * (n - 1);
    const std::uint64_t dp_budget = static_cast<std::uint64_t>(n) << (n - 1);
    const bool he_applies = instance.all_hungry() && instance.equal_entitlements();

    std::optional<std::uint64_t> he_measured, dp_measured;
    if (measure) {
        Oracle dp(instance);
        dp_measured = decide_general(dp).queries.total();
        if (he_applies) {
            Oracle he(instance);
            he_measured = decide_hungry_equal(he).queries.total();
        }
    }

    if (csv) {
        std::ostringstream s;
        s << "algorithm,applicable,lower_bound,upper_bound,measured\n";
        s << "hungry_equal," << (he_applies ? "yes" : "no") << ',' << lower << ',' << he_budget << ','
          << (he_measured ? std::to_string(*he_measured) : "") << '\n';
        s << "subset_dp,yes," << lower << ',' << dp_budget << ','
          << (dp_measured ? std::to_string(*dp_measured) : "") << '\n';
        if (out.empty()) {
            std::cout << s.str();
        } else {
            std::ofstream file(out);
            if (!file) throw InvalidInstance("cannot write '" + out + "'");
            file << s.str();
        }
        return kYes;
    }

    json he = {{"applicable", he_applies}, {"upper_bound", he_budget}};
    json dp = {{"applicable", true}, {"upper_bound", dp_budget}};
    if (he_measured) he["measured"] = *he_measured;
    if (dp_measured) dp["measured"] = *dp_measured;
    emit({{"agents", n}, {"lower_bound", rational_to_json(lower)}, {"hungry_equal", he}, {"subset_dp", dp}}, out);
    return kYes;
}

void add_mode_flags(CLI::App* cmd, ModeFlags& flags, bool allow_hungry_equal, bool allow_strong) {
    auto* prop = cmd->add_flag("--proportional", flags.proportional, "Weak proportionality (value >= w_i)");
    auto* plus = cmd->add_option("--plus-z", flags.plus_z, "Every agent above w_i + Q (Q > 0, \"p/q\")");
    prop->excludes(plus);
    if (allow_hungry_equal) {
        cmd->add_flag("--hungry-equal", flags.hungry_equal, "Fast check for hungry agents with equal entitlements")
            ->excludes(prop)
            ->excludes(plus);
    }
    if (allow_strong) {
        cmd->add_flag("--strong", flags.strong, "Strong proportionality (default)")->excludes(prop)->excludes(plus);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Connected cake division with entitlements"};
    app.require_subcommand(1);
    std::string out;

    ModeFlags decide_flags, solve_flags, verify_flags;
    std::string path, alloc_path;

    auto* decide = app.add_subcommand("decide", "Decide whether a fair connected allocation exists");
    decide->add_option("instance", path, "Instance JSON")->required();
    decide->add_option("--out", out, "Write output to PATH");
    add_mode_flags(decide, decide_flags, true, false);

    auto* solve = app.add_subcommand("solve", "Decide, construct and verify an allocation");
    solve->add_option("instance", path, "Instance JSON")->required();
    solve->add_option("--out", out, "Write output to PATH");
    add_mode_flags(solve, solve_flags, true, false);

    auto* verify_cmd = app.add_subcommand("verify", "Check an allocation exactly");
    verify_cmd->add_option("instance", path, "Instance JSON")->required();
    verify_cmd->add_option("allocation", alloc_path, "Allocation JSON (or solve output)")->required();
    verify_cmd->add_option("--out", out, "Write output to PATH");
    add_mode_flags(verify_cmd, verify_flags, false, true);

    GenFlags gen_flags;
    auto* gen = app.add_subcommand("gen", "Generate a fixture instance");
    gen->add_option("--family", gen_flags.family, "example | thm3 | thm5 | thm11")->required();
    gen->add_option("--k", gen_flags.k, "Worked example number (1-3)");
    gen->add_option("--n", gen_flags.n, "Number of agents");
    gen->add_option("--z", gen_flags.z, "Margin z for thm11");
    gen->add_option("--M", gen_flags.scale, "Scale M of the reduced entitlements");
    gen->add_flag("--perturbed", gen_flags.perturbed, "Perturbed variant");
    gen->add_option("--agent", gen_flags.agent, "thm3: perturbed agent");
    gen->add_option("--subset", gen_flags.subset, "thm3: rank of the perturbed subset sum");
    gen->add_option("--shift", gen_flags.shift, "thm3: mark shift");
    gen->add_option("--out", out, "Write output to PATH");

    bool measure = false, csv = false;
    auto* bounds = app.add_subcommand("bounds", "Query lower bound and algorithm budgets");
    bounds->add_option("instance", path, "Instance JSON")->required();
    bounds->add_flag("--measure", measure, "Also run the algorithms and report their query counts");
    bounds->add_flag("--csv", csv, "CSV instead of JSON");
    bounds->add_option("--out", out, "Write output to PATH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kYes : kError;
    }

    try {
        if (*decide) return cmd_decide(path, decide_flags, out);
        if (*solve) return cmd_solve(path, solve_flags, out);
        if (*verify_cmd) return cmd_verify(path, alloc_path, verify_flags, out);
        if (*gen) return cmd_gen(gen_flags, out);
        if (*bounds) return cmd_bounds(path, measure, csv, out);
    } catch (const std::exception& e) {
        std::cerr << "cakecut: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
