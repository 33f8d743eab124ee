#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "invprob/formula.hpp"
#include "invprob/schema.hpp"
#include "invprob/schema_file.hpp"
#include "invprob/verify.hpp"

namespace {

using namespace invprob;

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write to '" + out_path + "'");
    out << content;
}

int cmd_table(const std::string& text, std::size_t atom_cap) {
    Formula f = parse(text);
    TruthTable t = truth_table(f, atom_cap);
    for (const auto& a : t.atoms) std::cout << a << " ";
    std::cout << "| " << format(f) << "\n";
    for (const auto& [v, value] : t.rows) {
        for (const auto& a : t.atoms) std::cout << (v.at(a) ? 1 : 0) << " ";
        std::cout << "| " << (value ? 1 : 0) << "\n";
    }
    std::cout << (t.all_true() ? "TAUTOLOGY" : "NOT A TAUTOLOGY") << "\n";
    return kExitPass;
}

int cmd_equiv(const std::string& lhs, const std::string& rhs, std::size_t atom_cap) {
    bool eq = are_equivalent(parse(lhs), parse(rhs), atom_cap);
    std::cout << (eq ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
    return eq ? kExitPass : kExitFalsified;
}

Interpretation merge_interpretations(const std::vector<SchemaFile>& files) {
    Interpretation merged;
    for (const auto& f : files) {
        for (const auto& [atom, id] : f.interpretation) {
            auto it = merged.find(atom);
            if (it != merged.end() && it->second != id)
                throw SchemaFileError("conflicting interpretation for atom '" + atom + "'");
            merged[atom] = id;
        }
    }
    return merged;
}

std::optional<Group> interpretation_group(const Interpretation& interp) {
    bool g1 = false, g2 = false;
    for (const auto& [atom, id] : interp) {
        if (is_group1_predicate(id)) g1 = true;
        if (is_group2_predicate(id)) g2 = true;
    }
    if (g1 == g2) return std::nullopt;
    return g1 ? Group::I : Group::II;
}

int cmd_compose(const std::vector<std::string>& paths, bool xor_refine,
                const std::string& out_path, std::uint64_t samples, std::uint64_t seed,
                std::size_t atom_cap) {
    std::vector<SchemaFile> files;
    for (const auto& p : paths) files.push_back(load_schema_file(p));
    std::vector<ProblemSchema> generating;
    for (const auto& f : files) generating.push_back(f.schema);
    Interpretation interp = merge_interpretations(files);

    GeneratingSet set = validate_generating_set(generating);
    TruthTable law = check_composition_law(set, atom_cap);
    std::cerr << "composition law: " << law.rows.size() << " rows, "
              << (law.all_true() ? "all true" : "FALSIFIED") << "\n";
    ProblemSchema composed = compose(set, atom_cap);

    if (xor_refine) {
        bool propositional = true;
        for (std::size_t i = 0; i < set.disjuncts.size() && propositional; ++i)
            for (std::size_t j = i + 1; j < set.disjuncts.size() && propositional; ++j)
                propositional = mutually_exclusive(set.context, set.disjuncts[i],
                                                   set.disjuncts[j], atom_cap);
        if (propositional) {
            composed = refine_to_xor(
                composed, {ExclusivityEvidence::Status::Propositional, 0, false,
                           "no valuation satisfies two disjuncts under the context"});
            std::cerr << "exclusivity: propositional\n";
        } else {
            // Fall back to an empirical search when every disjunct is a single
            // interpreted atom of one group.
            auto group = interpretation_group(interp);
            std::vector<std::string> ids;
            for (const auto& d : set.disjuncts) {
                if (d.op() == Connective::Atom && interp.count(d.atom_name()))
                    ids.push_back(interp.at(d.atom_name()));
            }
            if (!group || ids.size() != set.disjuncts.size()) {
                std::cerr << "error: exclusivity is not propositional and no empirical "
                             "search is available for these disjuncts\n";
                return kExitUsage;
            }
            for (std::size_t i = 0; i < ids.size(); ++i) {
                for (std::size_t j = i + 1; j < ids.size(); ++j) {
                    auto witness = search_joint_model(ids[i], ids[j], *group, samples, seed);
                    if (witness) {
                        std::cerr << "exclusivity contradicted: joint model of " << ids[i]
                                  << " and " << ids[j] << " found\n";
                        for (const auto& [key, value] : config_coordinates(*witness))
                            std::cerr << "  " << key << " = " << value << "\n";
                        return kExitFalsified;
                    }
                }
            }
            composed = refine_to_xor(
                composed, {ExclusivityEvidence::Status::Empirical, samples, false,
                           "no joint model in " + std::to_string(samples) + " samples"});
            std::cerr << "exclusivity: empirical (" << samples << " samples, no witness)\n";
        }
    }

    std::cerr << "structural formula: " << format(structural_formula(composed)) << "\n";
    write_output(write_schema_file(composed, interp), out_path);
    return kExitPass;
}

int cmd_invert(const std::string& path, const std::string& out_path) {
    SchemaFile f = load_schema_file(path);
    if (f.schema.kind != SchemaKind::Composed) {
        std::cerr << "error: '" << path << "' is not a composed schema (needs >= 2 disjuncts)\n";
        return kExitUsage;
    }
    ProblemSchema inverse = invert(f.schema);
    std::cerr << "structural formula: " << format(structural_formula(inverse)) << "\n";
    write_output(write_schema_file(inverse, f.interpretation), out_path);
    return kExitPass;
}

int cmd_verify(const std::string& path, const std::string& sampler, std::uint64_t samples,
               std::uint64_t seed, const std::string& fmt, const std::string& out_path,
               std::uint64_t max_counterexamples) {
    SchemaFile f = load_schema_file(path);
    ProblemSchema schema = f.schema;
    // The sampler fixes the direction: inverse samplers establish t and r and
    // the claim under test is that exactly one disjunct holds.
    if (sampler.find(".inverse") != std::string::npos && schema.disjuncts.size() >= 2)
        schema.kind = SchemaKind::Inverse;
    VerificationReport report =
        check_implication(schema, f.interpretation, sampler, samples, seed,
                          max_counterexamples);
    write_output(fmt == "json" ? emit_report_json(report) : emit_report_text(report),
                 out_path);
    return report.failures == 0 ? kExitPass : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Composition and inversion of problem schemas, with exact geometric "
                 "verification"};
    app.require_subcommand(1);

    std::size_t atom_cap = invprob::kDefaultAtomCap;
    std::uint64_t samples = 1000, seed = 0, max_ce = kDefaultCounterexampleCap;
    std::string out_path, fmt = "text";
    app.add_option("--atom-cap", atom_cap, "truth-table atom cap");

    std::string table_formula;
    auto* table = app.add_subcommand("table", "print the truth table of a formula");
    table->add_option("formula", table_formula)->required();

    std::string equiv_lhs, equiv_rhs;
    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two formulas");
    equiv->add_option("lhs", equiv_lhs)->required();
    equiv->add_option("rhs", equiv_rhs)->required();

    std::vector<std::string> compose_paths;
    bool xor_refine = false;
    auto* compose_cmd = app.add_subcommand(
        "compose", "compose a disjunctive schema from generating schema files");
    compose_cmd->add_option("files", compose_paths)->required()->expected(-2);
    compose_cmd->add_flag("--xor", xor_refine, "refine | to ^ under exclusivity evidence");
    compose_cmd->add_option("--samples", samples, "empirical exclusivity sample count");
    compose_cmd->add_option("--seed", seed, "rng seed");
    compose_cmd->add_option("--out", out_path, "write the schema here instead of stdout");

    std::string invert_path;
    auto* invert_cmd = app.add_subcommand("invert", "emit the inverse schema");
    invert_cmd->add_option("file", invert_path)->required();
    invert_cmd->add_option("--out", out_path, "write the schema here instead of stdout");

    std::string verify_path, sampler;
    auto* verify_cmd =
        app.add_subcommand("verify", "verify a schema against sampled configurations");
    verify_cmd->add_option("file", verify_path)->required();
    verify_cmd->add_option("--sampler", sampler, "sampler id")->required();
    verify_cmd->add_option("--samples", samples, "sample count");
    verify_cmd->add_option("--seed", seed, "rng seed");
    verify_cmd->add_option("--format", fmt, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--out", out_path, "write the report here instead of stdout");
    verify_cmd->add_option("--max-counterexamples", max_ce, "counterexample cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (*table) return cmd_table(table_formula, atom_cap);
        if (*equiv) return cmd_equiv(equiv_lhs, equiv_rhs, atom_cap);
        if (*compose_cmd)
            return cmd_compose(compose_paths, xor_refine, out_path, samples, seed, atom_cap);
        if (*invert_cmd) return cmd_invert(invert_path, out_path);
        if (*verify_cmd)
            return cmd_verify(verify_path, sampler, samples, seed, fmt, out_path, max_ce);
    } catch (const invprob::ParseError& e) {
        std::cerr << "error: " << e.what() << " at position " << e.position() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
