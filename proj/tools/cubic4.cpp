// Command-line front end: atlas export and verification, lattice queries,
// cusp checks, the topology table and the surgery computations.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "cubic4/atlas.hpp"
#include "cubic4/lattice.hpp"
#include "cubic4/propagate.hpp"
#include "cubic4/ramified_sum.hpp"
#include "cubic4/surgery.hpp"
#include "cubic4/verify.hpp"
#include "cubic4/wall_crossing.hpp"

using namespace cubic4;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kUnsupported = 3 };

struct UsageError : Error {
    using Error::Error;
};

struct Config {
    std::string format;  // empty: command default, then CUBIC4_FORMAT
    int height = kDefaultHeight;
    std::uint64_t seed = 0;
    bool verbose = false;
};

std::string pick_format(const Config& cfg, const std::vector<std::string>& allowed) {
    std::string f = cfg.format;
    if (f.empty()) {
        const char* env = std::getenv("CUBIC4_FORMAT");
        if (env && std::find(allowed.begin(), allowed.end(), env) != allowed.end()) f = env;
    }
    if (f.empty()) return allowed.front();
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
        throw UsageError("format '" + f + "' not supported here");
    return f;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

int cmd_atlas_build(const Config& cfg, const std::string& graph) {
    GraphKind kind;
    try {
        kind = parse_graph_kind(graph);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    const Atlas a = build_atlas(kind);
    const std::string f = pick_format(cfg, {"json", "dot"});
    std::cout << (f == "dot" ? to_dot(a) : to_json(a) + "\n");
    return kOk;
}

int cmd_atlas_verify(const Config& cfg) {
    const auto checks = verify_all(cfg.height);
    ordered_json j;
    j["checks"] = ordered_json::array();
    ordered_json failures = ordered_json::array();
    ordered_json warnings = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json o{{"name", c.name}, {"passed", c.passed}, {"warning", c.warning}, {"detail", c.detail}};
        j["checks"].push_back(o);
        if (!c.passed) failures.push_back(o);
        if (c.warning) warnings.push_back(o);
    }
    const bool ok = failures.empty();
    j["passed"] = ok;
    j["warnings"] = warnings;
    j["failures"] = failures;
    std::cout << j.dump(2) << "\n";
    return ok ? kOk : kFailure;
}

int cmd_lattice_info(const Config& cfg, const std::string& text) {
    const LatticeExpr e = parse_lattice_expr(text);
    const GramMatrix g = gram(e);
    const Signature s = signature(g);
    const DiscriminantForm f = discriminant_form(g);
    const std::string fmt = pick_format(cfg, {"text", "json"});
    if (fmt == "json") {
        ordered_json j;
        j["expression"] = to_string(e);
        j["rank"] = g.rank();
        j["signature"] = {s.pos, s.neg};
        j["determinant"] = determinant(g).str();
        j["discriminant_group"] = f.group.to_string();
        std::vector<std::string> factors;
        for (const auto& x : f.group.invariant_factors) factors.push_back(x.str());
        j["invariant_factors"] = factors;
        j["two_rank"] = f.group.two_rank;
        std::vector<std::string> q;
        for (const auto& x : f.q) q.push_back(rational_str(x));
        j["q_generators"] = q;
        j["two_part_integer"] = f.two_part_integer;
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << "expression: " << to_string(e) << "\n"
              << "rank: " << g.rank() << "\n"
              << "signature: (" << s.pos << "," << s.neg << ")\n"
              << "determinant: " << determinant(g) << "\n"
              << "discriminant group: " << f.group.to_string() << "\n"
              << "two-rank: " << f.group.two_rank << "\n";
    if (!f.q.empty()) {
        std::cout << "q on generators:";
        for (const auto& x : f.q) std::cout << " " << x;
        std::cout << " (mod 2)\n";
    }
    std::cout << "two-part integer: " << (f.two_part_integer ? "yes" : "no") << "\n";
    return kOk;
}

int cmd_lattice_roots(const Config& cfg, const std::string& text, std::int64_t norm) {
    const LatticeExpr e = parse_lattice_expr(text);
    const auto vs = enumerate_norm_vectors(gram(e), norm);
    const std::string fmt = pick_format(cfg, {"text", "json"});
    if (fmt == "json") {
        ordered_json j{{"expression", to_string(e)}, {"norm", norm}, {"count", vs.size()}, {"vectors", vs}};
        std::cout << j.dump() << "\n";
        return kOk;
    }
    std::cout << vs.size() << " vectors of norm " << norm << " in " << to_string(e) << "\n";
    if (cfg.verbose)
        for (const auto& v : vs) {
            std::cout << "(";
            for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? "," : "") << v[k];
            std::cout << ")\n";
        }
    return kOk;
}

int cmd_cusp_check(const Config& cfg, const std::string& edge) {
    const auto colon = edge.find(':');
    if (colon == std::string::npos) throw UsageError("edge must look like C0,0:C0,1");
    VertexId a, b;
    try {
        a = parse_vertex_id(edge.substr(0, colon));
        b = parse_vertex_id(edge.substr(colon + 1));
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    const Atlas atlas = build_atlas(GraphKind::K4);
    if (!atlas.find(a) || !atlas.find(b)) throw UsageError("unknown vertex in " + edge);
    if (!atlas.find_edge(a, b)) throw UsageError(to_string(a) + " and " + to_string(b) + " are not adjacent");
    const CuspVerdict v = cusp_stratum(atlas, a, b, cfg.height);
    std::cout << to_json(v) << "\n";
    return v.kind == CuspVerdict::Kind::Unknown ? kFailure : kOk;
}

std::string md_escape(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\";
        out += c;
    }
    return out;
}

int emit_table(const std::string& fmt, bool with_title) {
    const Atlas atlas = build_atlas(GraphKind::K4);
    const PropagationTable t = propagate(atlas, compute_cusp_results(atlas));
    if (fmt == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& v : atlas.vertices) {
            const Assignment& as = t.at(v.id);
            rows.push_back({{"vertex", to_string(v.id)},
                            {"r", v.r},
                            {"d", v.d},
                            {"type", v.type_one ? "I" : "II"},
                            {"descriptor", to_string(as.descriptor)},
                            {"b_star", as.descriptor.betti_total()},
                            {"chi", as.descriptor.euler()},
                            {"rule", to_string(as.rule)},
                            {"justification", as.chain}});
        }
        std::cout << rows.dump(2) << "\n";
        return kOk;
    }
    if (with_title) std::cout << "# Real loci of the 75 coarse classes\n\n";
    std::cout << "| vertex | (r,d) | type | real locus | b_* | chi | justification |\n"
              << "|---|---|---|---|---|---|---|\n";
    for (const auto& v : atlas.vertices) {
        const Assignment& as = t.at(v.id);
        std::string chain;
        for (std::size_t k = 0; k < as.chain.size(); ++k) chain += (k ? " ; " : "") + as.chain[k];
        std::cout << "| " << to_string(v.id) << " | (" << v.r << "," << v.d << ") | " << (v.type_one ? "I" : "II")
                  << " | " << to_string(as.descriptor) << " | " << as.descriptor.betti_total() << " | "
                  << as.descriptor.euler() << " | " << md_escape(chain) << " |\n";
    }
    return kOk;
}

int cmd_ramified_euler(std::int64_t p, std::int64_t pp, std::int64_t l) {
    const std::int64_t chi = euler_perturbation({p, pp, l});
    std::cout << "chi = " << chi << "\n";
    if ((1 - chi) % 2 == 0) std::cout << "r = " << 11 + (1 - chi) / 2 << "\n";
    return kOk;
}

int cmd_surgery_h1(const std::string& text) {
    IntMatrix m;
    try {
        m = parse_matrix(text);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
    const LinkingMatrix lm(m);
    std::cout << "H1 = " << h1_from_linking(lm).to_string() << "\n";
    return kOk;
}

int cmd_spiral() {
    const SpiralReport r = spiral_scenario();
    std::cout << r.to_text();
    return r.ok() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice, deformation-graph and surgery computations for real cubic fourfolds"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--height", cfg.height, "search height for A2 pairs")->default_val(kDefaultHeight);
    app.add_option("--seed", cfg.seed, "seed for randomized checks")->default_val(0);
    app.add_flag("-v,--verbose", cfg.verbose);

    std::string graph = "k4", expr, edge, matrix;
    std::int64_t norm = 2, chiP = 0, chiPplus = 0, chiL = 0;

    auto* atlas = app.add_subcommand("atlas", "build or verify the deformation graph");
    atlas->require_subcommand(1);
    auto* build = atlas->add_subcommand("build", "export the graph");
    build->add_option("--graph", graph, "k4 or k3")->default_val("k4");
    build->add_option("--format", cfg.format, "json or dot");
    auto* verify = atlas->add_subcommand("verify", "run all atlas, wall-crossing and topology checks");

    auto* lattice = app.add_subcommand("lattice", "lattice queries");
    lattice->require_subcommand(1);
    auto* info = lattice->add_subcommand("info", "rank, signature, discriminant form");
    info->add_option("expr", expr)->required();
    info->add_option("--format", cfg.format, "text or json");
    auto* roots = lattice->add_subcommand("roots", "enumerate vectors of a given norm");
    roots->add_option("expr", expr)->required();
    roots->add_option("--norm", norm)->default_val(2);
    roots->add_option("--format", cfg.format, "text or json");

    auto* cusp = app.add_subcommand("cusp", "cuspidal strata on walls");
    cusp->require_subcommand(1);
    auto* check = cusp->add_subcommand("check", "decide one wall");
    check->add_option("--edge", edge, "C{i},{j}[_I]:C{i'},{j'}[_I]")->required();

    auto* topology = app.add_subcommand("topology", "real-locus bookkeeping");
    topology->require_subcommand(1);
    auto* table = topology->add_subcommand("table", "descriptor of every vertex");
    table->add_option("--format", cfg.format, "md or json");

    auto* ramified = app.add_subcommand("ramified", "ramified-sum arithmetic");
    ramified->require_subcommand(1);
    auto* euler = ramified->add_subcommand("euler", "Euler characteristic after perturbation");
    euler->add_option("--chiP", chiP)->required();
    euler->add_option("--chiPplus", chiPplus)->required();
    euler->add_option("--chiL", chiL)->required();

    auto* surgery = app.add_subcommand("surgery", "framed-link homology");
    surgery->require_subcommand(1);
    auto* h1 = surgery->add_subcommand("h1", "first homology of a surgery presentation");
    h1->add_option("--matrix", matrix, "linking matrix, e.g. [[-4,2],[2,-2]]")->required();
    auto* spiral = surgery->add_subcommand("spiral", "the scripted Seifert computation");

    auto* report = app.add_subcommand("report", "full reports");
    report->require_subcommand(1);
    auto* main_thm = report->add_subcommand("main-theorem", "75-row table with justifications");
    auto* report_spiral = report->add_subcommand("spiral", "the Seifert derivation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (build->parsed()) return cmd_atlas_build(cfg, graph);
        if (verify->parsed()) return cmd_atlas_verify(cfg);
        if (info->parsed()) return cmd_lattice_info(cfg, expr);
        if (roots->parsed()) return cmd_lattice_roots(cfg, expr, norm);
        if (check->parsed()) return cmd_cusp_check(cfg, edge);
        if (table->parsed()) return emit_table(pick_format(cfg, {"md", "json"}), false);
        if (euler->parsed()) return cmd_ramified_euler(chiP, chiPplus, chiL);
        if (h1->parsed()) return cmd_surgery_h1(matrix);
        if (spiral->parsed() || report_spiral->parsed()) return cmd_spiral();
        if (main_thm->parsed()) return emit_table("md", true);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const IndefiniteLatticeError& e) {
        std::cerr << "unsupported: " << e.what() << "; indefinite lattices have no finite norm enumeration\n";
        return kUnsupported;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
