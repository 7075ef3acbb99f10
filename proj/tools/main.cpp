#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "planedeg/analysis.hpp"
#include "planedeg/reducer.hpp"
#include "planedeg/structure.hpp"
#include "planedeg/toolkit.hpp"

namespace {

using namespace planedeg;

struct LoadedGraph {
    bool has_embedding = false;
    PlaneGraph plane;
    Graph abstract;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        if (!data.empty() && data.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << data;
}

std::string detect_format(const std::string& path, const std::string& requested,
                          const std::string& content) {
    if (requested != "auto") return requested;
    if (!content.empty() && content[0] == '{') return "json";
    if (content.rfind(">>planar_code<<", 0) == 0) return "planar_code";
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") return "graph6";
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".pc") return "planar_code";
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return "json";
    return "graph6";
}

LoadedGraph load_graph(const std::string& path, const std::string& format) {
    std::string content = slurp(path);
    std::string fmt = detect_format(path, format, content);
    LoadedGraph lg;
    if (fmt == "json") {
        lg.plane = PlaneGraph::from_json(content);
        lg.has_embedding = true;
        lg.abstract = lg.plane.skeleton();
    } else if (fmt == "planar_code") {
        std::vector<std::uint8_t> bytes(content.begin(), content.end());
        auto graphs = parse_planar_code(bytes);
        if (graphs.empty()) throw Error("no graphs in " + path);
        if (graphs.size() > 1)
            std::cerr << "note: " << path << " holds " << graphs.size()
                      << " graphs; using the first (use `corpus` for sweeps)\n";
        lg.plane = std::move(graphs[0]);
        lg.has_embedding = true;
        lg.abstract = lg.plane.skeleton();
    } else if (fmt == "graph6") {
        auto graphs = parse_graph6(content);
        if (graphs.empty()) throw Error("no graphs in " + path);
        lg.abstract = std::move(graphs[0]);
        lg.has_embedding = false;
    } else {
        throw Error("unknown format " + fmt);
    }
    return lg;
}

const PlaneGraph& require_embedding(const LoadedGraph& lg, const char* op) {
    if (!lg.has_embedding)
        throw Error(std::string(op) +
                    " needs an embedding; graph6 input only feeds embedding-free "
                    "operations (use json or planar_code)");
    return lg.plane;
}

int run(int argc, char** argv) {
    CLI::App app{
        "planedeg: induced 2-degenerate subgraphs of triangle-free plane graphs\n"
        "exit codes: 0 = all checks pass, 1 = violation or hard error, 2 = usage/parse error"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a graph family member");
    std::string gen_family, gen_spec = "cube", gen_format = "json", gen_out = "-";
    int gen_c = 4, gen_k = 2, gen_n = 12;
    std::uint64_t gen_seed = 1;
    gen->add_option("--family", gen_family, "cube | grid | difficult | quad")->required();
    gen->add_option("--c", gen_c, "grid cycle length");
    gen->add_option("--k", gen_k, "grid path length");
    gen->add_option("--spec", gen_spec, "difficult block tree, e.g. cube(edge(cube))");
    gen->add_option("--n", gen_n, "quadrangulation size");
    gen->add_option("--seed", gen_seed, "quadrangulation seed");
    gen->add_option("--format", gen_format, "json | planar_code");
    gen->add_option("-o,--output", gen_out, "output path (default stdout)");

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "exact maximum induced k-degenerate subgraph");
    std::string solve_in, solve_format = "auto";
    int solve_k = 2;
    int solve_cap = 128;
    std::uint64_t solve_budget = kDefaultExactBudget;
    solve->add_option("--input", solve_in)->required();
    solve->add_option("--format", solve_format, "auto | json | planar_code | graph6");
    solve->add_option("--k", solve_k);
    solve->add_option("--cap", solve_cap, "reject graphs with n above this");
    solve->add_option("--budget", solve_budget, "search node limit");

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "constructive 2-degenerate subgraph");
    std::string cons_in, cons_format = "auto", cons_trace;
    construct->add_option("--input", cons_in)->required();
    construct->add_option("--format", cons_format);
    construct->add_option("--emit-trace", cons_trace, "write the reduction trace JSON here");

    // ---- layers ----
    auto* layers = app.add_subcommand("layers", "BFS layer profile from a face");
    std::string lay_in, lay_format = "auto";
    int lay_face = 0, lay_depth = 9;
    layers->add_option("--input", lay_in)->required();
    layers->add_option("--format", lay_format);
    layers->add_option("--face", lay_face);
    layers->add_option("--depth", lay_depth);

    // ---- discharge ----
    auto* discharge = app.add_subcommand("discharge", "charge ledger for a rule set");
    std::string dis_in, dis_format = "auto", dis_faces;
    int dis_ruleset = 2, dis_outer = 0;
    discharge->add_option("--input", dis_in)->required();
    discharge->add_option("--format", dis_format);
    discharge->add_option("--ruleset", dis_ruleset, "2 (outer cycle) or 3 (radius 9)")
        ->check(CLI::IsMember({2, 3}));
    discharge->add_option("--outer", dis_outer, "outer face id for rule set 2");
    discharge->add_option("--faces", dis_faces, "comma-separated face ids for rule set 3");

    // ---- threefaces ----
    auto* threefaces = app.add_subcommand("threefaces", "minimum face cover of degree-<=3 vertices");
    std::string tf_in, tf_format = "auto";
    std::uint64_t tf_cap = 10'000'000;
    threefaces->add_option("--input", tf_in)->required();
    threefaces->add_option("--format", tf_format);
    threefaces->add_option("--cap", tf_cap, "search node cap");

    // ---- census ----
    auto* census = app.add_subcommand("census", "count vertices of degree at most three");
    std::string cen_in, cen_format = "auto";
    census->add_option("--input", cen_in)->required();
    census->add_option("--format", cen_format);

    // ---- corpus ----
    auto* corpus = app.add_subcommand("corpus", "verification sweep over a graph corpus");
    std::string cor_config, cor_csv, cor_json;
    std::uint64_t cor_seed = 0;
    corpus->add_option("--config", cor_config, "corpus config JSON")->required();
    corpus->add_option("--csv", cor_csv, "write the CSV report here");
    corpus->add_option("--json", cor_json, "write the JSON report here");
    corpus->add_option("--seed", cor_seed, "offset added to every generator seed");

    // ---- convert ----
    auto* convert = app.add_subcommand("convert", "translate between graph formats");
    std::string cv_in, cv_from = "auto", cv_to, cv_out = "-";
    convert->add_option("--input", cv_in)->required();
    convert->add_option("--from", cv_from);
    convert->add_option("--to", cv_to, "json | planar_code | graph6")->required();
    convert->add_option("-o,--output", cv_out);

    app.parse(argc, argv);

    if (gen->parsed()) {
        PlaneGraph g;
        if (gen_family == "cube")
            g = gen_cube();
        else if (gen_family == "grid")
            g = gen_cylindrical_grid(gen_c, gen_k);
        else if (gen_family == "difficult")
            g = gen_difficult(DifficultSpec::parse(gen_spec));
        else if (gen_family == "quad")
            g = gen_quadrangulation(gen_seed, gen_n);
        else
            throw CLI::ValidationError("--family", "unknown family " + gen_family);
        if (gen_format == "json") {
            emit(gen_out, g.to_json());
        } else if (gen_format == "planar_code") {
            auto bytes = write_planar_code({g});
            emit(gen_out, std::string(bytes.begin(), bytes.end()));
        } else {
            throw CLI::ValidationError("--format", "unknown format " + gen_format);
        }
        return 0;
    }

    if (solve->parsed()) {
        LoadedGraph lg = load_graph(solve_in, solve_format);
        if (lg.abstract.n > solve_cap)
            throw Error("graph exceeds --cap " + std::to_string(solve_cap));
        auto r = max_induced_kdeg_exact(lg.abstract, solve_k, solve_budget);
        nlohmann::json j;
        j["n"] = lg.abstract.n;
        j["k"] = solve_k;
        j["size"] = r.best.size();
        j["optimal"] = r.optimal;
        j["nodes"] = r.nodes;
        j["solution"] = nlohmann::json::parse(r.best.to_json());
        std::cout << j.dump() << "\n";
        return r.optimal ? 0 : 1;
    }

    if (construct->parsed()) {
        LoadedGraph lg = load_graph(cons_in, cons_format);
        const PlaneGraph& g = require_embedding(lg, "construct");
        auto res = construct_2degenerate(g);
        auto dc = count_difficult(g.skeleton());
        nlohmann::json j;
        j["n"] = g.n();
        j["m"] = g.m();
        j["lambda"] = dc.lambda;
        j["size"] = res.solution.size();
        j["bound_ceil"] = bound_value(g.n(), g.m(), dc.lambda).ceil();
        j["steps"] = res.trace.ledger.size();
        j["fallback_lifts"] = res.trace.fallback_lifts;
        j["solution"] = nlohmann::json::parse(res.solution.to_json());
        std::cout << j.dump() << "\n";
        if (!cons_trace.empty()) emit(cons_trace, res.trace.to_json());
        return 0;
    }

    if (layers->parsed()) {
        LoadedGraph lg = load_graph(lay_in, lay_format);
        const PlaneGraph& g = require_embedding(lg, "layers");
        std::cout << layer_profile(g, lay_face, lay_depth).to_json() << "\n";
        return 0;
    }

    if (discharge->parsed()) {
        LoadedGraph lg = load_graph(dis_in, dis_format);
        const PlaneGraph& g = require_embedding(lg, "discharge");
        ChargeLedger led;
        if (dis_ruleset == 2) {
            led = discharge_section2(g, dis_outer);
        } else {
            std::vector<int> faces;
            std::stringstream ss(dis_faces);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) faces.push_back(std::stoi(tok));
            led = discharge_section3(g, faces);
        }
        std::cout << led.to_json() << "\n";
        return 0;
    }

    if (threefaces->parsed()) {
        LoadedGraph lg = load_graph(tf_in, tf_format);
        const PlaneGraph& g = require_embedding(lg, "threefaces");
        auto r = threefaces_exact(g, tf_cap);
        nlohmann::json j;
        j["rho3"] = r.rho3;
        j["witness"] = r.witness;
        j["optimal"] = r.optimal;
        j["report"] = nlohmann::json::parse(bigO_bound_report(g).to_json());
        std::cout << j.dump() << "\n";
        return r.optimal ? 0 : 1;
    }

    if (census->parsed()) {
        LoadedGraph lg = load_graph(cen_in, cen_format);
        std::cout << degree3_census(lg.abstract) << "\n";
        return 0;
    }

    if (corpus->parsed()) {
        CorpusConfig cfg = CorpusConfig::from_json(slurp(cor_config));
        if (cor_seed != 0)
            for (auto& s : cfg.sources) {
                s.seed += cor_seed;
                if (s.seed_range.size() == 2) {
                    s.seed_range[0] += cor_seed;
                    s.seed_range[1] += cor_seed;
                }
            }
        CorpusReport rep = run_corpus(cfg);
        if (!cor_csv.empty()) emit(cor_csv, rep.to_csv());
        if (!cor_json.empty()) emit(cor_json, rep.to_json());
        int fails = 0;
        for (const auto& r : rep.rows)
            if (!r.pass) ++fails;
        std::cout << "corpus: " << rep.rows.size() << " graphs, " << fails << " failures\n";
        if (cor_csv.empty() && cor_json.empty()) std::cout << rep.to_csv();
        return rep.all_pass ? 0 : 1;
    }

    if (convert->parsed()) {
        std::string content = slurp(cv_in);
        std::string from = detect_format(cv_in, cv_from, content);
        if (from == cv_to) {
            emit(cv_out, content);
            return 0;
        }
        if (from == "graph6" && cv_to != "graph6")
            throw Error("graph6 carries no embedding; cannot convert to " + cv_to);
        PlaneGraph g;
        if (from == "json")
            g = PlaneGraph::from_json(content);
        else if (from == "planar_code") {
            auto graphs = parse_planar_code({content.begin(), content.end()});
            if (graphs.empty()) throw Error("no graphs in " + cv_in);
            g = std::move(graphs[0]);
        } else
            throw Error("unknown source format " + from);
        if (cv_to == "json")
            emit(cv_out, g.to_json());
        else if (cv_to == "planar_code") {
            auto bytes = write_planar_code({g});
            emit(cv_out, std::string(bytes.begin(), bytes.end()));
        } else if (cv_to == "graph6")
            emit(cv_out, write_graph6({g.skeleton()}));
        else
            throw Error("unknown target format " + cv_to);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = dummy.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const planedeg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const planedeg::GuaranteeError& e) {
        std::cerr << "hard error: " << e.what() << "\n";
        std::cerr << "diagnostic graph: " << e.diagnostic << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
