// rw: Ramsey witnesses, bound inference and table reproduction.
//
// Exit codes: 0 success / valid, 1 usage or parse error, 2 semantic failure
// (invalid witness, inconsistent facts, DC contradiction).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/capacity.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/formats.hpp"

using namespace ramsey;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_semantic = 2;

struct InferenceFlags {
    std::vector<std::string> facts;
    bool assume_dc = false;
    bool strict_dc = false;
    int max_r = Budget{}.max_r;
    int max_k = Budget{}.max_k;
    std::string rules;
    bool es_even = false;
    std::vector<std::string> targets;
};

void add_inference_flags(CLI::App* cmd, InferenceFlags& f, bool with_targets)
{
    cmd->add_option("--facts", f.facts, "Facts file(s)")->required()->expected(1, -1)->check(CLI::ExistingFile);
    cmd->add_flag("--assume-dc", f.assume_dc, "Assume the diagonal conjecture (enables R-dc)");
    cmd->add_flag("--strict-dc", f.strict_dc, "Assume the strict diagonal conjecture (implies --assume-dc)");
    cmd->add_option("--max-r", f.max_r, "Largest color count the closure may create")->check(CLI::PositiveNumber);
    cmd->add_option("--max-k", f.max_k, "Largest clique target the closure may create")->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--rules", f.rules, "Comma-separated rules, e.g. R-base,R-ES (default: all)");
    cmd->add_flag("--es-even", f.es_even, "Two-color R-ES: subtract one when both summands are even");
    if (with_targets)
        cmd->add_option("--target", f.targets, "Target params \"k1,k2,...\" (repeatable)");
}

RuleSet parse_rules(const std::string& list)
{
    if (list.empty())
        return RuleSet::all();
    RuleSet rs;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        auto comma = list.find(',', pos);
        if (comma == std::string::npos)
            comma = list.size();
        const auto name = list.substr(pos, comma - pos);
        const auto id = parse_rule_name(name);
        if (!id)
            throw Error("unknown rule '" + name + "'");
        rs.enabled.insert(*id);
        pos = comma + 1;
    }
    return rs;
}

struct Loaded {
    KnowledgeBase kb;
    std::vector<Params> targets;
    ClosureStats stats;
};

Loaded load_and_close(const InferenceFlags& f, bool derive)
{
    Loaded out;
    for (const auto& path : f.facts) {
        try {
            const auto text = read_file(path);
            ingest(out.kb, parse_facts(text));
            for (auto& note : parse_annotations(text))
                out.kb.annotations.push_back(std::move(note));
        } catch (const ParseError& e) {
            throw Error(path + ": " + e.what());
        }
    }
    if (f.assume_dc || f.strict_dc)
        out.kb.assume(Assumption::dc);
    if (f.strict_dc)
        out.kb.assume(Assumption::dc_strict);
    for (const auto& t : f.targets)
        out.targets.push_back(parse_params_list(t));
    if (derive) {
        auto rules = parse_rules(f.rules);
        rules.es_even = f.es_even;
        ClosureOptions options;
        options.targets = out.targets;
        out.stats = derive_closure(out.kb, rules, Budget{f.max_r, f.max_k}, options);
    }
    return out;
}

std::string bound_text(const std::optional<BigInt>& v)
{
    return v ? v->str() : "?";
}

void report_inconsistency(const KnowledgeBase& kb)
{
    if (const auto& bad = kb.inconsistency())
        std::cerr << "inconsistent: " << bad->params.to_string() << " has lower " << bad->lower
                  << " > upper " << bad->upper << "\n";
}

std::vector<int> parse_targets(const std::string& text)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        out.push_back(std::stoi(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

void emit(const std::string& path, const std::string& contents)
{
    if (path.empty() || path == "-")
        std::cout << contents;
    else
        write_file(path, contents);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rw: Ramsey witness verification, constructions and bound inference"};
    app.require_subcommand(1);

    // verify
    std::string verify_path;
    std::string verify_params;
    bool verify_canonical = false;
    auto* verify = app.add_subcommand("verify", "Verify that a witness coloring avoids the target cliques");
    verify->add_option("witness", verify_path, "Witness file")->required()->check(CLI::ExistingFile);
    verify->add_option("--params", verify_params, "Clique targets per color, k1,k2,...")->required();
    verify->add_flag("--canonical", verify_canonical, "Report the lexicographically least counterexample");

    // builtin
    std::string builtin_name;
    std::string builtin_out;
    std::string builtin_format = "witness";
    auto* builtin = app.add_subcommand("builtin", "Export a built-in witness");
    builtin->add_option("name", builtin_name, "c5, wagner8, cyc13, paley17 or gf16")->required();
    builtin->add_option("-o,--output", builtin_out, "Output file (default stdout)");
    builtin->add_option("--format", builtin_format, "witness or cyclic")
        ->check(CLI::IsMember({"witness", "cyclic"}));

    // construct
    std::string construct_kind;
    std::vector<std::string> construct_inputs;
    std::string construct_out;
    auto* construct = app.add_subcommand("construct", "Build a product or Schur coloring");
    construct->add_option("kind", construct_kind, "abbott, diag or schur")
        ->required()
        ->check(CLI::IsMember({"abbott", "diag", "schur"}));
    construct->add_option("inputs", construct_inputs, "Two witness files, or one partition file")
        ->required()
        ->expected(1, 2)
        ->check(CLI::ExistingFile);
    construct->add_option("-o,--output", construct_out, "Output file (default stdout)");

    // derive
    InferenceFlags derive_flags;
    auto* derive = app.add_subcommand("derive", "Close a facts database under the inference rules");
    add_inference_flags(derive, derive_flags, true);

    // explain
    InferenceFlags explain_flags;
    std::string explain_kind = "lower";
    auto* explain_cmd = app.add_subcommand("explain", "Print the derivation tree of one bound");
    add_inference_flags(explain_cmd, explain_flags, true);
    explain_cmd->get_option("--target")->required()->expected(1);
    explain_cmd->add_option("--kind", explain_kind, "lower or upper")
        ->check(CLI::IsMember({"lower", "upper"}));

    // table
    InferenceFlags table_flags;
    std::string table_name;
    bool table_raw = false;
    int table_max_r = 10;
    auto* table = app.add_subcommand("table", "Render a bounds table");
    table->add_option("name", table_name, "Table name (r3)")->required()->check(CLI::IsMember({"r3"}));
    add_inference_flags(table, table_flags, false);
    table->remove_option(table->get_option("--max-r"));
    table->add_option("--max-r", table_max_r, "Last row")->check(CLI::Range(2, 1000));
    table->add_flag("--no-derive", table_raw, "Render the facts as given, without closure");

    // check-dc
    InferenceFlags dc_flags;
    std::string dc_pairs;
    bool dc_raw = false;
    auto* check_dc_cmd = app.add_subcommand("check-dc", "Check DC-adjacent pairs for contradictions");
    add_inference_flags(check_dc_cmd, dc_flags, false);
    check_dc_cmd->add_option("--pairs", dc_pairs, "Pairs file (default: all adjacent pairs in the KB)")
        ->check(CLI::ExistingFile);
    check_dc_cmd->add_flag("--no-derive", dc_raw, "Check the facts as given, without closure");

    // ratios
    InferenceFlags ratio_flags;
    int ratio_k = 3;
    bool ratio_raw = false;
    auto* ratios = app.add_subcommand("ratios", "Finite-r roots (R_r(k)-1)^(1/r)");
    add_inference_flags(ratios, ratio_flags, false);
    ratios->add_option("--k", ratio_k, "Clique size")->required()->check(CLI::Range(2, 1 << 20));
    ratios->add_flag("--no-derive", ratio_raw, "Use the facts as given, without closure");

    // capacity
    std::string graph_literal;
    int power = 1;
    std::size_t vertex_budget = default_power_budget;
    auto* capacity = app.add_subcommand("capacity", "Independence numbers of strong powers");
    capacity->add_option("--graph", graph_literal, "cyclic:<m>:<d1,...> or complete:<n>")->required();
    capacity->add_option("--power", power, "Largest power")->required()->check(CLI::PositiveNumber);
    capacity->add_option("--budget", vertex_budget, "Vertex budget for the largest power");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*verify) {
            const auto coloring = parse_witness(read_file(verify_path));
            const auto targets = parse_targets(verify_params);
            const auto report = verify_witness(
                coloring, targets, verify_canonical ? CliqueSearch::canonical : CliqueSearch::fast);
            if (report.valid) {
                std::cout << "valid: " << *report.implied_fact << "\n";
                return exit_ok;
            }
            const auto& w = *report.counterexample;
            std::cout << "invalid: color " << w.color << " contains K_" << w.vertices.size() << " on";
            for (auto v : w.vertices)
                std::cout << ' ' << v;
            std::cout << "\n";
            return exit_semantic;
        }

        if (*builtin) {
            const auto& info = builtin_info(builtin_name);
            const auto coloring = builtin_witness(builtin_name);
            if (builtin_format == "cyclic") {
                if (!info.cyclic_classes)
                    throw Error("builtin '" + builtin_name + "' is not circulant");
                emit(builtin_out, export_cyclic(info.modulus, *info.cyclic_classes));
            } else {
                emit(builtin_out, export_witness(coloring));
            }
            return exit_ok;
        }

        if (*construct) {
            std::optional<EdgeColoring> result;
            if (construct_kind == "schur") {
                if (construct_inputs.size() != 1)
                    throw Error("construct schur takes one partition file");
                const auto partition = parse_partition(read_file(construct_inputs[0]));
                const auto report = validate_partition(partition);
                if (!report.valid) {
                    const auto& v = *report.violation;
                    std::cerr << "partition not sum-free: part " << v.part << " has " << v.x << "+"
                              << v.y << "=" << v.z << "\n";
                    return exit_semantic;
                }
                result = schur_coloring(partition);
            } else {
                if (construct_inputs.size() != 2)
                    throw Error("construct " + construct_kind + " takes two witness files");
                const auto a = parse_witness(read_file(construct_inputs[0]));
                const auto b = parse_witness(read_file(construct_inputs[1]));
                result = construct_kind == "abbott" ? abbott_product(a, b) : diagonal_product(a, b);
            }
            emit(construct_out, export_witness(*result));
            std::cerr << "constructed n=" << result->vertices() << " r=" << result->colors() << "\n";
            return exit_ok;
        }

        if (*derive) {
            auto loaded = load_and_close(derive_flags, true);
            if (loaded.targets.empty()) {
                std::cout << export_kb(loaded.kb);
            } else {
                for (const auto& t : loaded.targets) {
                    const auto b = loaded.kb.best_bounds(t);
                    std::cout << t.to_string() << ": lower " << bound_text(b.lower) << ", upper "
                              << bound_text(b.upper) << "\n";
                }
            }
            std::cerr << "universe=" << loaded.stats.universe << " instances=" << loaded.stats.instances
                      << " updates=" << loaded.stats.updates
                      << " budget_skipped=" << loaded.stats.budget_skipped << "\n";
            report_inconsistency(loaded.kb);
            return loaded.kb.inconsistent() ? exit_semantic : exit_ok;
        }

        if (*explain_cmd) {
            auto loaded = load_and_close(explain_flags, true);
            std::cout << explain(loaded.kb, loaded.targets.front(),
                                 explain_kind == "lower" ? BoundKind::lower : BoundKind::upper);
            return exit_ok;
        }

        if (*table) {
            table_flags.max_r = std::max(table_flags.max_r, table_max_r);
            auto loaded = load_and_close(table_flags, !table_raw);
            std::cout << render_table_r3(loaded.kb, table_max_r);
            report_inconsistency(loaded.kb);
            return loaded.kb.inconsistent() ? exit_semantic : exit_ok;
        }

        if (*check_dc_cmd) {
            auto loaded = load_and_close(dc_flags, !dc_raw);
            const Budget budget{dc_flags.max_r, dc_flags.max_k};
            const auto reports = dc_pairs.empty()
                                     ? check_dc(loaded.kb, budget)
                                     : check_dc(loaded.kb, parse_pairs(read_file(dc_pairs)));
            std::size_t contradictions = 0;
            for (const auto& rep : reports) {
                std::cout << rep.pair.moved.to_string() << " lower " << bound_text(rep.moved.lower)
                          << " vs " << rep.pair.original.to_string() << " lower "
                          << bound_text(rep.original.lower) << " upper "
                          << bound_text(rep.original.upper) << ": " << dc_status_name(rep.status) << "\n";
                if (rep.status == DcStatus::contradiction)
                    ++contradictions;
            }
            std::cout << reports.size() << " pairs, " << contradictions << " contradictions\n";
            report_inconsistency(loaded.kb);
            return contradictions > 0 || loaded.kb.inconsistent() ? exit_semantic : exit_ok;
        }

        if (*ratios) {
            auto loaded = load_and_close(ratio_flags, !ratio_raw);
            const auto report = ratio_report(loaded.kb, ratio_k, ratio_flags.max_r);
            std::cout << "r  lower_root  upper_root\n";
            for (const auto& row : report.rows)
                std::cout << row.r << "  " << (row.lower_root ? format_decimal(*row.lower_root) : "?")
                          << "  " << (row.upper_root ? format_decimal(*row.upper_root) : "?") << "\n";
            if (report.sup_lower)
                std::cout << "sup_lower " << format_decimal(*report.sup_lower) << " at r=" << *report.sup_r
                          << "\n";
            return exit_ok;
        }

        if (*capacity) {
            const auto g = parse_graph_literal(graph_literal);
            const auto probe = capacity_lower(g, power, vertex_budget);
            for (std::size_t i = 0; i < probe.alpha.size(); ++i)
                std::cout << "alpha(G^" << i + 1 << ") = " << probe.alpha[i] << "\n";
            std::cout << "capacity_lower " << format_decimal(probe.value) << " at r=" << probe.best_r << "\n";
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "rw: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
