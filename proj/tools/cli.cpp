// zkm: command-line front end for moment-angle complex computations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zkmorse/chain_complex.hpp"
#include "zkmorse/generators.hpp"
#include "zkmorse/json_io.hpp"
#include "zkmorse/morse.hpp"
#include "zkmorse/vertex_decomp.hpp"

using nlohmann::json;
using namespace zkmorse;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
    int n = 2;
    int p = 2;
    std::string method = "recursive";
    std::size_t budget_cells = kDefaultCellBudget;
    std::uint64_t budget_nodes = 0;
    std::string format = "json";
    std::uint64_t seed = 0;
    bool strict_shedding = true;
};

json map_to_json(const std::map<int, long>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

void emit(const json& report, const Options& opt) {
    if (opt.format == "table") {
        for (const auto& [key, value] : report.items())
            std::cout << key << ": " << value.dump() << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

json critical_report(const SimplicialComplex& k, const Options& opt) {
    json report;
    report["schema_version"] = kSchemaVersion;
    std::vector<std::string> names;
    std::map<int, long> dims;
    bool agree = true;

    std::set<SignVector> rec;
    if (opt.method == "recursive" || opt.method == "both") rec = critical_recursive(k);
    std::vector<SignVector> dir;
    if (opt.method == "direct" || opt.method == "both")
        dir = critical_direct(k, opt.n, opt.budget_cells);

    const std::vector<SignVector> cells =
        opt.method == "direct" ? dir : std::vector<SignVector>(rec.begin(), rec.end());
    if (opt.method == "both")
        agree = std::set<SignVector>(dir.begin(), dir.end()) == rec;

    for (const SignVector& c : cells) {
        names.push_back(c.str());
        ++dims[c.dim(opt.n)];
    }
    report["critical"] = names;
    report["dims"] = map_to_json(dims);
    if (opt.method == "both") report["agree"] = agree;
    return report;
}

int cmd_dual(const std::string& path, const Options& opt) {
    const SimplicialComplex k = load_complex_file(path);
    json report = complex_to_json(alexander_dual(k));
    report["schema_version"] = kSchemaVersion;
    emit(report, opt);
    return 0;
}

int cmd_vd(const std::string& path, const Options& opt, bool want_sequence,
           const std::vector<int>& verify_order) {
    const SimplicialComplex k = load_complex_file(path);
    VdOptions vopt;
    vopt.budget_nodes = opt.budget_nodes;
    json report;
    report["schema_version"] = kSchemaVersion;
    if (!verify_order.empty()) {
        report["order"] = verify_order;
        report["valid"] = verify_shedding_sequence(k, verify_order, opt.strict_shedding);
    } else if (want_sequence) {
        const auto cert = shedding_sequence(k, vopt);
        report["vertex_decomposable"] = cert.has_value();
        if (cert) report["sequence"] = cert->order;
    } else {
        report["vertex_decomposable"] = is_vertex_decomposable(k, vopt);
    }
    emit(report, opt);
    return 0;
}

int cmd_crit(const std::string& path, const Options& opt) {
    const SimplicialComplex k = load_complex_file(path);
    emit(critical_report(k, opt), opt);
    return 0;
}

int cmd_betti(const std::string& path, const Options& opt) {
    const SimplicialComplex k = load_complex_file(path);
    const CellModel model = enumerate_cells(k, opt.n, opt.budget_cells);
    const ChainComplex cc = cw_chain_complex(model, opt.p);
    json report;
    report["schema_version"] = kSchemaVersion;
    std::map<int, long> per_dim;
    for (std::size_t d = 0; d < cc.cells_per_dim.size(); ++d)
        if (cc.cells_per_dim[d] != 0) per_dim[static_cast<int>(d)] = cc.cells_per_dim[d];
    report["betti"] = map_to_json(cc.betti().ranks);
    report["cells_per_dim"] = map_to_json(per_dim);
    report["chi"] = cc.euler();
    emit(report, opt);
    return 0;
}

int cmd_wedge(const std::string& path, const Options& opt) {
    const SimplicialComplex k = load_complex_file(path);
    json report;
    report["schema_version"] = kSchemaVersion;
    report["wedge"] = map_to_json(wedge_formula(k, opt.n, opt.p));
    emit(report, opt);
    return 0;
}

int cmd_matching(const std::string& path, const Options& opt, const std::string& dump) {
    const SimplicialComplex k = load_complex_file(path);
    const CellModel model = enumerate_cells(k, opt.n, opt.budget_cells);
    const Matching mat = build_matching(model);
    json report;
    report["schema_version"] = kSchemaVersion;
    report["cells"] = model.cells.size();
    report["edges"] = mat.edges.size();
    report["critical"] = critical_cell_indices(model, mat).size();
    report["acyclic"] = verify_acyclic(model, mat);
    if (!dump.empty()) {
        json edges = json::array();
        for (const MatchEdge& e : mat.edges) {
            json entry;
            entry["source"] = model.cells[e.source].coords;
            entry["target"] = model.cells[e.target].coords;
            entry["coordinate"] = e.coordinate;
            edges.push_back(entry);
        }
        std::ofstream out(dump);
        if (!out) throw std::runtime_error("matching: cannot write " + dump);
        out << json{{"schema_version", kSchemaVersion}, {"edges", edges}}.dump(2) << "\n";
    }
    emit(report, opt);
    return 0;
}

// The triangle check: critical-cell counts vs cellular homology vs the
// wedge formula. Exit 2 when the wedge hypothesis fails (the dual must be
// decomposable with the top label shedding at every stage — plain vertex
// decomposability is not enough, since the matching consumes coordinates
// in label order), exit 3 when it holds but the counts disagree.
int cmd_verify(const std::string& path, const Options& opt) {
    const SimplicialComplex k = load_complex_file(path);
    const std::map<int, long> morse = morse_betti(k, opt.n);
    const BettiTable oracle = betti_moment_angle(k, opt.n, opt.p, opt.budget_cells);
    std::map<int, long> wedge = wedge_formula(k, opt.n, opt.p);
    wedge[0] += 1; // the wedge point

    const CellModel model = enumerate_cells(k, opt.n, opt.budget_cells);
    const Matching mat = build_matching(model);

    const bool hypothesis = is_ordered_decomposable(alexander_dual(k));
    const bool morse_oracle = morse == oracle.ranks;
    const bool morse_wedge = morse == wedge;

    json report;
    report["schema_version"] = kSchemaVersion;
    report["acyclic"] = verify_acyclic(model, mat);
    report["hypothesis_met"] = hypothesis;
    report["triangle"] = {{"morse", map_to_json(morse)},
                          {"oracle", map_to_json(oracle.ranks)},
                          {"wedge", map_to_json(wedge)},
                          {"equal", morse_oracle && morse_wedge}};
    emit(report, opt);
    if (!hypothesis) return 2;
    return (morse_oracle && morse_wedge) ? 0 : 3;
}

int cmd_gen(const Options& opt, const std::vector<int>& skeleton,
            std::optional<int> random_m, const std::string& out_path) {
    SimplicialComplex k = SimplicialComplex::irrelevant(1);
    if (!skeleton.empty()) {
        if (skeleton.size() != 2)
            throw std::invalid_argument("gen: --skeleton needs m and k");
        k = skeleton_complex(skeleton[0], skeleton[1]);
    } else if (random_m) {
        k = random_complex(*random_m, opt.seed);
    } else {
        throw std::invalid_argument("gen: choose --skeleton or --random");
    }
    if (out_path.empty()) {
        json j = complex_to_json(k);
        j["schema_version"] = kSchemaVersion;
        emit(j, opt);
    } else {
        save_complex_file(k, out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Morse matchings on n-sphere moment-angle complexes"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--n", opt.n, "Sphere parameter n >= 1")->check(CLI::PositiveNumber);
    app.add_option("--p", opt.p, "Field characteristic")->check(CLI::IsMember({2, 3, 5, 7}));
    app.add_option("--budget-cells", opt.budget_cells, "Cell enumeration budget");
    app.add_option("--budget-nodes", opt.budget_nodes, "Decomposability search budget");
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", opt.seed, "RNG seed for gen --random");
    app.add_flag("--strict-shedding,!--lax-shedding", opt.strict_shedding,
                 "Require the last sequence vertex to shed too");

    std::string path, dump_path, out_path;
    std::vector<int> verify_order, skeleton;
    std::optional<int> random_m;
    bool want_sequence = false;

    auto* dual = app.add_subcommand("dual", "Alexander dual of a complex");
    dual->add_option("file", path)->required();

    auto* vd = app.add_subcommand("vd", "Vertex decomposability");
    vd->add_option("file", path)->required();
    vd->add_flag("--sequence", want_sequence, "Output a shedding sequence");
    vd->add_option("--verify", verify_order, "Verify a shedding sequence");

    auto* crit = app.add_subcommand("crit", "Critical cells of the Morse matching");
    crit->add_option("file", path)->required();
    crit->add_option("--method", opt.method)
        ->check(CLI::IsMember({"direct", "recursive", "both"}));

    auto* betti = app.add_subcommand("betti", "Cellular homology of the model");
    betti->add_option("file", path)->required();

    auto* wedge = app.add_subcommand("wedge", "Sphere counts from restrictions");
    wedge->add_option("file", path)->required();

    auto* verify = app.add_subcommand("verify", "Morse/oracle/wedge triangle check");
    verify->add_option("file", path)->required();

    auto* matching = app.add_subcommand("matching", "Build and check the matching");
    matching->add_option("file", path)->required();
    matching->add_option("--dump", dump_path, "Write matched edges to a file");

    auto* gen = app.add_subcommand("gen", "Generate complex files");
    gen->add_option("--skeleton", skeleton, "Skeleton complex: m k")->expected(2);
    gen->add_option("--random", random_m, "Random complex on m vertices");
    gen->add_option("-o,--output", out_path, "Output file (default stdout)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (dual->parsed()) return cmd_dual(path, opt);
        if (vd->parsed()) return cmd_vd(path, opt, want_sequence, verify_order);
        if (crit->parsed()) return cmd_crit(path, opt);
        if (betti->parsed()) return cmd_betti(path, opt);
        if (wedge->parsed()) return cmd_wedge(path, opt);
        if (verify->parsed()) return cmd_verify(path, opt);
        if (matching->parsed()) return cmd_matching(path, opt, dump_path);
        if (gen->parsed()) return cmd_gen(opt, skeleton, random_m, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
