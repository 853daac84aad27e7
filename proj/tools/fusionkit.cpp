#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusionkit/catalog.hpp"
#include "fusionkit/double_construction.hpp"
#include "fusionkit/errors.hpp"
#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/lr_graphs.hpp"
#include "fusionkit/lr_oracle.hpp"
#include "fusionkit/modular_data.hpp"
#include "fusionkit/multi_interval.hpp"
#include "fusionkit/ring_io.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

struct Options {
    double tolerance = 1e-9;
    std::uint64_t seed = 1;
    int n = 2;
    int samples = 100;
    std::string group;
    std::string json_path;
    std::string dot_path;
    std::string input;
};

json report_shell(const std::string& command, const Options& opt) {
    json j;
    j["tool"] = "fusionkit";
    j["command"] = command;
    j["input"] = opt.input.empty() ? (opt.group.empty() ? json() : json(opt.group))
                                   : json(opt.input);
    j["tolerance"] = opt.tolerance;
    j["seed"] = opt.seed;
    j["pass"] = true;
    j["checks"] = json::array();
    j["data"] = json::object();
    return j;
}

void merge_report(json& shell, const fusionkit::Report& rep) {
    json jr = rep.to_json();
    for (auto& c : jr["checks"]) shell["checks"].push_back(c);
    shell["pass"] = shell["pass"].get<bool>() && rep.pass();
}

int emit(json& shell, const Options& opt) {
    std::cout << shell.dump(2) << "\n";
    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path);
        if (!out) throw fusionkit::input_error("cannot write '" + opt.json_path + "'");
        out << shell.dump(2) << "\n";
    }
    return shell["pass"].get<bool>() ? exit_ok : exit_check_failed;
}

json graph_to_json(const fusionkit::BipartiteGraph& g) {
    json j;
    j["evens"] = json::array();
    for (const auto& [a, b] : g.evens) j["evens"].push_back({a, b});
    j["odds"] = g.odds;
    j["edges"] = json::array();
    for (const auto& [key, mult] : g.edges)
        j["edges"].push_back({key.first.first, key.first.second, key.second, mult});
    if (!g.note.empty()) j["note"] = g.note;
    return j;
}

fusionkit::RingFile load_input(const Options& opt) {
    if (opt.input.empty()) throw fusionkit::input_error("missing input ring file");
    return fusionkit::load_ring(opt.input);
}

// --group takes a built-in name or a path to a group table file
fusionkit::GroupTable resolve_group(const std::string& name_or_path) {
    if (std::filesystem::exists(name_or_path)) return fusionkit::load_group(name_or_path);
    return fusionkit::GroupTable::by_name(name_or_path);
}

// validate first; on failure emit that report and stop
std::optional<int> require_valid(const fusionkit::FusionRing& ring, json& shell,
                                 const Options& opt) {
    fusionkit::Report rep = ring.validate();
    if (rep.pass()) return std::nullopt;
    merge_report(shell, rep);
    return emit(shell, opt);
}

int cmd_validate(const Options& opt) {
    auto file = load_input(opt);
    json shell = report_shell("validate", opt);
    shell["data"]["labels"] = file.ring.labels();
    merge_report(shell, file.ring.validate());
    return emit(shell, opt);
}

int cmd_dims(const Options& opt) {
    auto file = load_input(opt);
    json shell = report_shell("dims", opt);
    if (auto rc = require_valid(file.ring, shell, opt)) return *rc;
    fusionkit::DimensionVector dv = file.ring.dims(opt.tolerance);
    const auto& ring = file.ring;
    double worst = 0.0;
    for (std::size_t i = 0; i < ring.rank(); ++i)
        for (std::size_t j = 0; j < ring.rank(); ++j) {
            double prod = 0.0;
            for (std::size_t k = 0; k < ring.rank(); ++k)
                prod += static_cast<double>(ring.N(i, j, k)) * dv.d[k];
            worst = std::max(worst, std::abs(prod - dv.d[i] * dv.d[j]));
        }
    fusionkit::Report rep("fusion_ring.dims");
    rep.add("d0_is_one", std::abs(dv.d[0] - 1.0) <= opt.tolerance, "identity has dimension 1",
            std::abs(dv.d[0] - 1.0));
    double dual_gap = 0.0;
    for (std::size_t i = 0; i < ring.rank(); ++i)
        dual_gap = std::max(dual_gap, std::abs(dv.d[i] - dv.d[ring.dual(i)]));
    rep.add("dual_symmetric", dual_gap <= opt.tolerance, "d_i = d_{dual(i)}", dual_gap);
    rep.add("product_identity", worst <= opt.tolerance,
            "d_i d_j = sum_k N_{ij}^k d_k within tolerance", worst);
    merge_report(shell, rep);
    shell["data"]["dims"] = dv.d;
    return emit(shell, opt);
}

int cmd_index(const Options& opt) {
    auto file = load_input(opt);
    json shell = report_shell("index", opt);
    if (auto rc = require_valid(file.ring, shell, opt)) return *rc;
    shell["data"]["global_index"] = file.ring.global_index();
    shell["data"]["lr_index"] = fusionkit::lr_index(file.ring);
    shell["data"]["depth_two"] = fusionkit::is_depth_two(file.ring, opt.tolerance);
    return emit(shell, opt);
}

int cmd_graph(const Options& opt) {
    auto file = load_input(opt);
    json shell = report_shell("graph", opt);
    if (auto rc = require_valid(file.ring, shell, opt)) return *rc;
    bool modular = file.modular.has_value() &&
                   fusionkit::check_modularity(file.ring, *file.modular, opt.tolerance).pass;
    fusionkit::BipartiteGraph principal = fusionkit::principal_graph(file.ring);
    fusionkit::BipartiteGraph dual = fusionkit::dual_principal_graph(file.ring, modular);
    shell["data"]["principal"] = graph_to_json(principal);
    shell["data"]["dual_principal"] = graph_to_json(dual);
    shell["data"]["principal_equals_dual"] = principal.same_vertices(dual);
    if (!opt.dot_path.empty()) {
        std::ofstream out(opt.dot_path, std::ios::binary);
        if (!out) throw fusionkit::input_error("cannot write '" + opt.dot_path + "'");
        out << principal.to_dot();
    }
    return emit(shell, opt);
}

int cmd_double(const Options& opt) {
    auto file = load_input(opt);
    json shell = report_shell("double", opt);
    if (auto rc = require_valid(file.ring, shell, opt)) return *rc;
    fusionkit::DoubledRing doubled = fusionkit::deligne_double(file.ring);
    merge_report(shell, doubled.ring.validate());
    merge_report(shell, fusionkit::compare_double(file.ring).to_report());
    fusionkit::DoubleComparison cmp = fusionkit::compare_double(file.ring);
    shell["data"]["compare"] = {{"total_pairs", cmp.total_pairs},
                                {"component_pairs", cmp.component_pairs},
                                {"full", cmp.full},
                                {"grading_order", cmp.grading_order},
                                {"deficiency", cmp.deficiency}};
    shell["data"]["ring"] = fusionkit::ring_to_json(doubled.ring);
    shell["data"]["global_index"] = doubled.ring.global_index();
    return emit(shell, opt);
}

int cmd_dg(const Options& opt) {
    if (opt.group.empty()) throw fusionkit::input_error("dg needs --group <name>");
    fusionkit::GroupTable G = resolve_group(opt.group);
    json shell = report_shell("dg", opt);
    fusionkit::DrinfeldData data = fusionkit::drinfeld_double_with_modular(G);
    merge_report(shell, data.doubled.ring.validate());
    long long dim_sq = 0;
    for (long long d : data.dims) dim_sq += d * d;
    fusionkit::Report rep("double_construction.drinfeld_double");
    rep.add("dimension_count",
            dim_sq == static_cast<long long>(G.order()) * static_cast<long long>(G.order()),
            "sum d^2 = |G|^2", static_cast<double>(dim_sq));
    merge_report(shell, rep);
    shell["data"]["ring"] = fusionkit::ring_to_json(data.doubled.ring, data.modular);
    shell["data"]["dims"] = data.dims;
    return emit(shell, opt);
}

int cmd_modular(const Options& opt) {
    auto file = load_input(opt);
    if (!file.modular)
        throw fusionkit::input_error("'" + opt.input + "' has no modular block");
    json shell = report_shell("modular", opt);
    if (auto rc = require_valid(file.ring, shell, opt)) return *rc;
    fusionkit::ModularityReport rep =
        fusionkit::check_modularity(file.ring, *file.modular, opt.tolerance);
    merge_report(shell, rep.to_report());
    shell["data"]["lambda"] = {rep.lambda.real(), rep.lambda.imag()};
    try {
        fusionkit::DimensionVector dv = fusionkit::dims_from_S(*file.modular, &file.ring);
        shell["data"]["dims_from_S"] = dv.d;
    } catch (const fusionkit::numeric_error& e) {
        fusionkit::Report extra("modular_data.dims_from_S");
        extra.add("dims_consistent", false, e.what(), 1.0);
        merge_report(shell, extra);
    }
    return emit(shell, opt);
}

int cmd_multi(const Options& opt) {
    auto file = load_input(opt);
    json shell = report_shell("multi", opt);
    if (auto rc = require_valid(file.ring, shell, opt)) return *rc;
    fusionkit::IndexLedger ledger = fusionkit::evaluate_ledger(file.ring, opt.n);
    shell["data"]["ledger"] = ledger.to_json();
    shell["pass"] = shell["pass"].get<bool>() && ledger.pass();
    for (const auto& e : ledger.entries)
        shell["checks"].push_back({{"name", e.name},
                                   {"pass", e.pass},
                                   {"detail", "lhs " + std::to_string(e.lhs) + " vs rhs " +
                                                  std::to_string(e.rhs)},
                                   {"residual", e.residual}});
    return emit(shell, opt);
}

int cmd_oracle(const Options& opt) {
    if (opt.group.empty()) throw fusionkit::input_error("oracle needs --group <name>");
    fusionkit::GroupTable G = resolve_group(opt.group);
    json shell = report_shell("oracle", opt);
    fusionkit::CrossedProductAlgebra A =
        fusionkit::CrossedProductAlgebra::build(G, static_cast<int>(G.order()), opt.seed);
    json oracle = A.report_json(opt.samples, opt.seed);
    shell["data"]["oracle"] = oracle;
    shell["pass"] = oracle["pass"].get<bool>();
    return emit(shell, opt);
}

int cmd_catalog_list(const Options& opt) {
    json shell = report_shell("catalog list", opt);
    shell["data"]["entries"] = fusionkit::catalog::names();
    return emit(shell, opt);
}

int cmd_catalog_export(const Options& opt, const std::string& name) {
    fusionkit::catalog::CatalogEntry entry = fusionkit::catalog::get(name);
    json out = fusionkit::ring_to_json(entry.ring, entry.modular);
    std::cout << out.dump(2) << "\n";
    if (!opt.json_path.empty()) {
        std::ofstream f(opt.json_path);
        if (!f) throw fusionkit::input_error("cannot write '" + opt.json_path + "'");
        f << out.dump(2) << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusion-ring toolkit: sector systems, Verlinde data, inclusion graphs"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--tolerance", opt.tolerance, "comparison tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--json", opt.json_path, "also write the report to this path");

    auto add_input = [&](CLI::App* cmd) {
        cmd->fallthrough(); // global flags may follow the subcommand
        cmd->add_option("input", opt.input, "ring file")->required();
    };

    auto* validate = app.add_subcommand("validate", "check the fusion-ring axioms");
    add_input(validate);
    auto* dims = app.add_subcommand("dims", "quantum dimensions");
    add_input(dims);
    auto* index = app.add_subcommand("index", "global index and depth-2 test");
    add_input(index);
    auto* graph = app.add_subcommand("graph", "principal and dual principal graphs");
    add_input(graph);
    graph->add_option("--dot", opt.dot_path, "write the principal graph as DOT");
    auto* dbl = app.add_subcommand("double", "product ring on pairs");
    add_input(dbl);
    auto* dg = app.add_subcommand("dg", "Drinfeld double of a built-in group");
    dg->fallthrough();
    dg->add_option("--group", opt.group, "group name or group table file")->required();
    auto* modular = app.add_subcommand("modular", "modularity suite on the file's S, T block");
    add_input(modular);
    auto* multi = app.add_subcommand("multi", "multi-interval index identities");
    add_input(multi);
    multi->add_option("--n", opt.n, "interval count")->check(CLI::PositiveNumber);
    auto* oracle = app.add_subcommand("oracle", "crossed-product relations on explicit matrices");
    oracle->fallthrough();
    oracle->add_option("--group", opt.group, "group name or group table file")->required();
    oracle->add_option("--samples", opt.samples, "sample count")->check(CLI::PositiveNumber);
    auto* cat = app.add_subcommand("catalog", "built-in model data");
    cat->require_subcommand(1);
    cat->fallthrough();
    auto* cat_list = cat->add_subcommand("list", "list entry names");
    cat_list->fallthrough();
    std::string export_name;
    auto* cat_export = cat->add_subcommand("export", "emit an entry in the ring file format");
    cat_export->fallthrough();
    cat_export->add_option("name", export_name, "entry name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return exit_ok;
        }
        std::cerr << e.what() << "\n" << app.help();
        return exit_input_error;
    }

    try {
        if (*validate) return cmd_validate(opt);
        if (*dims) return cmd_dims(opt);
        if (*index) return cmd_index(opt);
        if (*graph) return cmd_graph(opt);
        if (*dbl) return cmd_double(opt);
        if (*dg) return cmd_dg(opt);
        if (*modular) return cmd_modular(opt);
        if (*multi) return cmd_multi(opt);
        if (*oracle) return cmd_oracle(opt);
        if (*cat_list) return cmd_catalog_list(opt);
        if (*cat_export) return cmd_catalog_export(opt, export_name);
    } catch (const fusionkit::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const fusionkit::numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return exit_check_failed;
    }
    std::cerr << "no subcommand selected\n";
    return exit_input_error;
}
