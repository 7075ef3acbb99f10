#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "planedeg/analysis.hpp"
#include "planedeg/reducer.hpp"
#include "planedeg/structure.hpp"
#include "planedeg/toolkit.hpp"

namespace planedeg {

CorpusConfig CorpusConfig::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("corpus config: ") + e.what(), e.byte);
    }
    CorpusConfig cfg;
    for (const auto& s : j.value("sources", nlohmann::json::array())) {
        CorpusSource src;
        src.kind = s.at("kind").get<std::string>();
        src.c = s.value("c", 0);
        src.k = s.value("k", 0);
        if (s.contains("c_range")) src.c_range = s["c_range"].get<std::vector<int>>();
        if (s.contains("k_range")) src.k_range = s["k_range"].get<std::vector<int>>();
        src.seed = s.value("seed", 1ULL);
        src.n = s.value("n", 0);
        if (s.contains("seed_range"))
            src.seed_range = s["seed_range"].get<std::vector<std::uint64_t>>();
        if (s.contains("n_range")) src.n_range = s["n_range"].get<std::vector<int>>();
        src.spec = s.value("spec", std::string());
        src.path = s.value("path", std::string());
        cfg.sources.push_back(std::move(src));
    }
    cfg.exact_cap = j.value("exact_cap", 12);
    cfg.exact_budget = j.value("exact_budget", 50'000'000ULL);
    cfg.k = j.value("k", 2);
    cfg.run_threefaces = j.value("run_threefaces", true);
    cfg.run_layers = j.value("run_layers", true);
    cfg.run_discharge = j.value("run_discharge", true);
    cfg.layer_depth = j.value("layer_depth", 9);
    return cfg;
}

std::string CorpusConfig::to_json() const {
    nlohmann::json j;
    nlohmann::json srcs = nlohmann::json::array();
    for (const auto& s : sources) {
        nlohmann::json e;
        e["kind"] = s.kind;
        if (s.c) e["c"] = s.c;
        if (s.k) e["k"] = s.k;
        if (!s.c_range.empty()) e["c_range"] = s.c_range;
        if (!s.k_range.empty()) e["k_range"] = s.k_range;
        if (s.n) e["n"] = s.n;
        e["seed"] = s.seed;
        if (!s.seed_range.empty()) e["seed_range"] = s.seed_range;
        if (!s.n_range.empty()) e["n_range"] = s.n_range;
        if (!s.spec.empty()) e["spec"] = s.spec;
        if (!s.path.empty()) e["path"] = s.path;
        srcs.push_back(e);
    }
    j["sources"] = srcs;
    j["exact_cap"] = exact_cap;
    j["exact_budget"] = exact_budget;
    j["k"] = k;
    j["run_threefaces"] = run_threefaces;
    j["run_layers"] = run_layers;
    j["run_discharge"] = run_discharge;
    j["layer_depth"] = layer_depth;
    return j.dump();
}

namespace {

struct CorpusItem {
    std::string id;
    bool has_embedding = false;
    PlaneGraph plane;
    Graph abstract;
};

std::vector<CorpusItem> expand_sources(const CorpusConfig& cfg) {
    std::vector<CorpusItem> items;
    auto add_plane = [&](std::string id, PlaneGraph g) {
        CorpusItem it;
        it.id = std::move(id);
        it.has_embedding = true;
        it.abstract = g.skeleton();
        it.plane = std::move(g);
        items.push_back(std::move(it));
    };
    for (const auto& s : cfg.sources) {
        if (s.kind == "cube") {
            add_plane("cube", gen_cube());
        } else if (s.kind == "grid") {
            add_plane("grid-" + std::to_string(s.c) + "x" + std::to_string(s.k),
                      gen_cylindrical_grid(s.c, s.k));
        } else if (s.kind == "grid_range") {
            if (s.c_range.size() != 2 || s.k_range.size() != 2)
                throw Error("corpus: grid_range needs c_range and k_range");
            for (int c = s.c_range[0]; c <= s.c_range[1]; ++c)
                for (int k = s.k_range[0]; k <= s.k_range[1]; ++k)
                    add_plane("grid-" + std::to_string(c) + "x" + std::to_string(k),
                              gen_cylindrical_grid(c, k));
        } else if (s.kind == "quad") {
            add_plane("quad-s" + std::to_string(s.seed) + "-n" + std::to_string(s.n),
                      gen_quadrangulation(s.seed, s.n));
        } else if (s.kind == "quad_range") {
            if (s.seed_range.size() != 2 || s.n_range.size() != 2)
                throw Error("corpus: quad_range needs seed_range and n_range");
            for (int n = s.n_range[0]; n <= s.n_range[1]; ++n)
                for (std::uint64_t sd = s.seed_range[0]; sd <= s.seed_range[1]; ++sd)
                    add_plane("quad-s" + std::to_string(sd) + "-n" + std::to_string(n),
                              gen_quadrangulation(sd, n));
        } else if (s.kind == "difficult") {
            add_plane("difficult-" + s.spec, gen_difficult(DifficultSpec::parse(s.spec)));
        } else if (s.kind == "planar_code_file") {
            std::ifstream in(s.path, std::ios::binary);
            if (!in) throw Error("corpus: cannot open " + s.path);
            std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                            std::istreambuf_iterator<char>());
            auto graphs = parse_planar_code(bytes);
            for (std::size_t i = 0; i < graphs.size(); ++i)
                add_plane(s.path + "#" + std::to_string(i), std::move(graphs[i]));
        } else if (s.kind == "graph6_file") {
            std::ifstream in(s.path, std::ios::binary);
            if (!in) throw Error("corpus: cannot open " + s.path);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            auto graphs = parse_graph6(text);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                CorpusItem it;
                it.id = s.path + "#" + std::to_string(i);
                it.has_embedding = false;
                it.abstract = std::move(graphs[i]);
                items.push_back(std::move(it));
            }
        } else {
            throw Error("corpus: unknown source kind " + s.kind);
        }
    }
    return items;
}

CorpusRow run_one(const CorpusItem& item, const CorpusConfig& cfg) {
    CorpusRow row;
    row.id = item.id;
    auto t0 = std::chrono::steady_clock::now();
    try {
        const Graph& sk = item.abstract;
        row.n = sk.n;
        row.m = sk.m();
        row.n3 = degree3_census(sk);
        row.lambda = count_difficult(sk).lambda;
        row.bound_ceil = bound_value(row.n, row.m, row.lambda).ceil();
        row.four_fifths_ceil = Rational(4LL * row.n, 5).ceil();

        bool connected = sk.component_count() <= 1;
        bool triangle_free = !sk.has_triangle();
        bool pass = true;

        if (row.n <= cfg.exact_cap && sk.n <= 128) {
            auto ex = max_induced_kdeg_exact(sk, cfg.k, cfg.exact_budget);
            row.alpha2_exact = ex.best.size();
            row.exact_optimal = ex.optimal;
            if (item.has_embedding && triangle_free && ex.optimal && cfg.k == 2 &&
                row.alpha2_exact < row.bound_ceil)
                pass = false;
        }

        if (item.has_embedding && triangle_free) {
            if (cfg.run_threefaces && item.plane.m() > 0) {
                auto tf = threefaces_exact(item.plane);
                row.rho3 = tf.rho3;
                auto rep = bigO_bound_report(item.plane);
                row.bigO_bound = rep.bound.str();
            }
            auto cons = construct_2degenerate(item.plane);
            row.constructive = cons.solution.size();
            row.steps = static_cast<int>(cons.trace.ledger.size());
            row.fallback_lifts = cons.trace.fallback_lifts;
            if (row.constructive < row.bound_ceil) pass = false;
            if (connected && row.n >= 3 && row.constructive < row.four_fifths_ceil)
                pass = false;
            if (row.alpha2_exact >= 0 && row.exact_optimal &&
                row.constructive > row.alpha2_exact)
                pass = false;
            if (cfg.run_layers && item.plane.face_count() > 0)
                layer_profile(item.plane, 0, cfg.layer_depth);
            if (cfg.run_discharge && connected && item.plane.m() > 0)
                discharge_section3(item.plane, {});
        } else if (item.has_embedding && !triangle_free) {
            row.error = "not triangle-free: constructive analyses skipped";
        }
        row.pass = pass;
    } catch (const std::exception& e) {
        row.error = e.what();
        row.pass = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return row;
}

}  // namespace

const char* CorpusReport::csv_header() {
    return "id,n,m,lambda,rho3,n3,alpha2_exact,exact_optimal,constructive,bound_ceil,"
           "four_fifths_ceil,bigO_bound,steps,fallback_lifts,pass,runtime_ms,error";
}

std::string CorpusReport::to_csv() const {
    std::ostringstream out;
    out << csv_header() << "\n";
    for (const auto& r : rows) {
        out << r.id << "," << r.n << "," << r.m << "," << r.lambda << ","
            << (r.rho3 < 0 ? "" : std::to_string(r.rho3)) << "," << r.n3 << ","
            << (r.alpha2_exact < 0 ? "" : std::to_string(r.alpha2_exact)) << ","
            << (r.exact_optimal ? "1" : "0") << ","
            << (r.constructive < 0 ? "" : std::to_string(r.constructive)) << ","
            << r.bound_ceil << "," << r.four_fifths_ceil << "," << r.bigO_bound << ","
            << r.steps << "," << r.fallback_lifts << "," << (r.pass ? "1" : "0") << ","
            << r.runtime_ms << "," << r.error << "\n";
    }
    return out.str();
}

std::string CorpusReport::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json e;
        e["id"] = r.id;
        e["n"] = r.n;
        e["m"] = r.m;
        e["lambda"] = r.lambda;
        if (r.rho3 >= 0) e["rho3"] = r.rho3;
        e["n3"] = r.n3;
        if (r.alpha2_exact >= 0) e["alpha2_exact"] = r.alpha2_exact;
        e["exact_optimal"] = r.exact_optimal;
        if (r.constructive >= 0) e["constructive"] = r.constructive;
        e["bound_ceil"] = r.bound_ceil;
        e["four_fifths_ceil"] = r.four_fifths_ceil;
        if (!r.bigO_bound.empty()) e["bigO_bound"] = r.bigO_bound;
        e["steps"] = r.steps;
        e["fallback_lifts"] = r.fallback_lifts;
        e["pass"] = r.pass;
        e["runtime_ms"] = r.runtime_ms;
        if (!r.error.empty()) e["error"] = r.error;
        rows_json.push_back(e);
    }
    nlohmann::json j;
    j["rows"] = rows_json;
    j["all_pass"] = all_pass;
    return j.dump();
}

CorpusReport run_corpus(const CorpusConfig& config) {
    auto items = expand_sources(config);
    CorpusReport report;
    report.rows.resize(items.size());

    unsigned workers = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("PLANEDEG_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) workers = static_cast<unsigned>(w);
    }
    workers = std::max(1u, std::min<unsigned>(workers, items.size() ? items.size() : 1));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            report.rows[i] = run_one(items[i], config);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& r : report.rows)
        if (!r.pass) report.all_pass = false;
    return report;
}

}  // namespace planedeg
