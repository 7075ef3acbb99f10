#include "planedeg/reducer.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "planedeg/structure.hpp"

namespace planedeg {

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Empty: return "Empty";
        case StepKind::SplitComponents: return "SplitComponents";
        case StepKind::DifficultDirect: return "DifficultDirect";
        case StepKind::LowDegreeVertex: return "LowDegreeVertex";
        case StepKind::CubeExtension: return "CubeExtension";
        case StepKind::Degree3Claim1: return "Degree3Claim1";
        case StepKind::Degree3Claim2: return "Degree3Claim2";
        case StepKind::FourCycleClaim: return "FourCycleClaim";
        case StepKind::ContractEdge: return "ContractEdge";
        case StepKind::SpecialVertexFinal: return "SpecialVertexFinal";
    }
    return "?";
}

Rational bound_value(long long n, long long m, long long lambda) {
    if (n < 0) throw Error("bound_value: negative n");
    return Rational(6 * n - m - lambda, 5);
}

Solution difficult_direct(const PlaneGraph& g) {
    const Graph& sk = g.skeleton();
    auto dc = count_difficult(sk);
    if (dc.components != 1 || !dc.component_difficult[0])
        throw Error("difficult_direct: graph is not a difficult component");
    BlockDecomposition bd = blocks(sk);
    std::vector<char> drop(g.n(), 0);
    long long cubes = 0;
    for (const auto& blk : bd.blocks) {
        if (blk.size() != 8) continue;
        if (!is_cube(sk.induced(blk))) continue;
        drop[blk[0]] = 1;  // lowest id in the block
        ++cubes;
    }
    std::vector<int> kept;
    for (int v = 0; v < g.n(); ++v)
        if (!drop[v]) kept.push_back(v);
    auto cert = certify_k_degenerate(sk, kept, 2);
    if (!cert.ok)
        throw GuaranteeError("difficult_direct: certification failed", g.to_json());
    long long need = bound_value(g.n(), g.m(), 1).ceil();
    if (static_cast<long long>(kept.size()) < need)
        throw GuaranteeError("difficult_direct: size below the bound", g.to_json());
    return cert.solution;
}

namespace {

// Common neighbors of a and b, ascending, excluding `except`.
std::vector<int> common_neighbors(const Graph& g, int a, int b, int except) {
    std::vector<int> out;
    for (int x : g.adj[a]) {
        if (x == except) continue;
        if (g.adjacent(b, x)) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool edge_in_4cycle(const Graph& g, int u, int v) {
    for (int x : g.adj[u]) {
        if (x == v) continue;
        for (int y : g.adj[v]) {
            if (y == u || y == x) continue;
            if (g.adjacent(x, y)) return true;
        }
    }
    return false;
}

}  // namespace

ReductionStep reduce_once(const PlaneGraph& g) {
    const Graph& sk = g.skeleton();
    if (g.n() == 0) throw Error("reduce_once: empty graph");
    if (g.component_count() != 1) throw Error("reduce_once: graph must be connected");
    if (!g.is_triangle_free()) throw Error("reduce_once: graph must be triangle-free");

    ReductionStep step;

    // Rule 1: a vertex of degree at most two.
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) <= 2) {
            step.kind = StepKind::LowDegreeVertex;
            step.removed = {v};
            step.designated_add = {v};
            step.add_count = 1;
            return step;
        }
    }

    // Rule 2: a cube subgraph with at most five edges leaving.
    auto occs = cubes_with_few_leaving_edges(sk, 5);
    if (!occs.empty()) {
        step.kind = StepKind::CubeExtension;
        step.removed = occs[0].vertices;
        step.add_count = 7;
        return step;
    }

    // Rule 3: work at a special vertex.
    auto sv = find_special_vertex(g);
    if (!sv)
        throw GuaranteeError("reduce_once: no rule applies (no special vertex)", g.to_json());
    int v = *sv;
    std::vector<int> nbrs = sk.adj[v];
    std::sort(nbrs.begin(), nbrs.end());

    // 3a: a neighbor of degree at least five.
    for (int u : nbrs)
        if (g.degree(u) >= 5) {
            step.kind = StepKind::Degree3Claim1;
            step.removed = {std::min(u, v), std::max(u, v)};
            step.designated_add = {v};
            step.add_count = 1;
            return step;
        }

    // 3b: a neighbor of degree three.
    for (int u1 : nbrs) {
        if (g.degree(u1) != 3) continue;
        int u_high = -1;
        for (int u : nbrs)
            if (u != u1 && g.degree(u) >= 4) {
                u_high = u;
                break;
            }
        step.kind = StepKind::Degree3Claim2;
        if (u_high != -1) {
            step.removed = {u1, u_high, v};
            step.designated_add = {v, u1};
            step.add_count = 2;
        } else {
            step.removed = nbrs;
            step.removed.push_back(v);
            step.designated_add = nbrs;
            step.add_count = 3;
        }
        std::sort(step.removed.begin(), step.removed.end());
        return step;
    }

    // 3c: a 4-cycle through v with another degree-3 vertex.
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            for (int w : common_neighbors(sk, nbrs[i], nbrs[j], v)) {
                if (g.degree(w) != 3) continue;
                step.kind = StepKind::FourCycleClaim;
                step.removed = {nbrs[i], nbrs[j], v, w};
                // keep all but the lower of the two degree-4 cycle neighbors
                step.designated_add = {nbrs[j], v, w};
                step.add_count = 3;
                std::sort(step.removed.begin(), step.removed.end());
                std::sort(step.designated_add.begin(), step.designated_add.end());
                return step;
            }
        }

    // 3d: an edge at v in no 4-cycle is contracted.
    for (int u : nbrs)
        if (!edge_in_4cycle(sk, u, v)) {
            step.kind = StepKind::ContractEdge;
            step.contracted_edge = {u, v};
            step.removed = {std::min(u, v), std::max(u, v)};
            step.add_count = 1;
            return step;
        }

    // 3e: every edge at v lies in a 4-cycle; pick the neighbor u whose edge
    // uv lies in 4-cycles through both other neighbors.
    for (int u : nbrs) {
        std::vector<int> others;
        for (int x : nbrs)
            if (x != u) others.push_back(x);
        int x1 = others[0], x2 = others[1];
        auto y1s = common_neighbors(sk, u, x1, v);
        auto y2s = common_neighbors(sk, u, x2, v);
        if (y1s.empty() || y2s.empty()) continue;
        int y1 = -1, y2 = -1;
        for (int a : y1s) {
            for (int b : y2s)
                if (b != a) {
                    y1 = a;
                    y2 = b;
                    break;
                }
            if (y1 != -1) break;
        }
        if (y1 == -1) {
            y1 = y1s[0];  // y1 == y2; the subset fallback covers the lift
            y2 = y2s[0];
        }
        step.kind = StepKind::SpecialVertexFinal;
        step.removed = {v, u, x1, x2, y1, y2};
        std::sort(step.removed.begin(), step.removed.end());
        step.removed.erase(std::unique(step.removed.begin(), step.removed.end()),
                           step.removed.end());
        step.designated_add = {v, u, x1, x2};
        std::sort(step.designated_add.begin(), step.designated_add.end());
        step.add_count = 4;
        return step;
    }
    throw GuaranteeError("reduce_once: no rule applies at the special vertex", g.to_json());
}

namespace {

Solution certify_or_fail(const Graph& sk, std::vector<int> kept, int k) {
    auto cert = certify_k_degenerate(sk, kept, k);
    if (!cert.ok) return Solution{};
    return cert.solution;
}

}  // namespace

Solution lift(const PlaneGraph& g, const ReductionStep& step, const Solution& sub,
              bool* used_fallback) {
    const Graph& sk = g.skeleton();
    if (used_fallback) *used_fallback = false;

    auto try_set = [&](const std::vector<int>& add) -> Solution {
        std::vector<int> kept = sub.kept;
        kept.insert(kept.end(), add.begin(), add.end());
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        return certify_or_fail(sk, kept, 2);
    };

    if (step.kind == StepKind::CubeExtension) {
        // All eight omission choices; the first certified one wins.
        for (int omit : step.removed) {
            std::vector<int> add;
            for (int x : step.removed)
                if (x != omit) add.push_back(x);
            Solution s = try_set(add);
            if (!s.kept.empty()) return s;
        }
        throw GuaranteeError("lift: no cube omission certifies", g.to_json());
    }

    if (step.kind == StepKind::ContractEdge) {
        int u = step.contracted_edge[0], v = step.contracted_edge[1];
        Solution s = try_set({v});
        if (!s.kept.empty()) {
            if (used_fallback) *used_fallback = false;
            return s;
        }
        // swap the roles of u and v
        std::vector<int> kept;
        for (int x : sub.kept) kept.push_back(x == u ? v : x);
        kept.push_back(u);
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        Solution s2 = certify_or_fail(sk, kept, 2);
        if (!s2.kept.empty()) {
            if (used_fallback) *used_fallback = true;
            return s2;
        }
        throw GuaranteeError("lift: contraction lift failed both cases", g.to_json());
    }

    // Deletion steps: the designated extension, then every subset of X of
    // the promised size.
    if (!step.designated_add.empty()) {
        Solution s = try_set(step.designated_add);
        if (!s.kept.empty()) return s;
    }
    const std::vector<int>& X = step.removed;
    int A = step.add_count;
    std::vector<int> idx(X.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<char> select(X.size(), 0);
    std::fill(select.begin(), select.begin() + A, 1);
    // subsets in a deterministic order via prev_permutation on the mask
    std::vector<std::vector<int>> candidates;
    do {
        std::vector<int> add;
        for (std::size_t i = 0; i < X.size(); ++i)
            if (select[i]) add.push_back(X[i]);
        candidates.push_back(add);
    } while (std::prev_permutation(select.begin(), select.end()));
    for (const auto& add : candidates) {
        if (add == step.designated_add) continue;
        Solution s = try_set(add);
        if (!s.kept.empty()) {
            if (used_fallback) *used_fallback = true;
            return s;
        }
    }
    throw GuaranteeError("lift: no extension of the promised size certifies", g.to_json());
}

namespace {

struct Node {
    PlaneGraph graph;
    std::vector<int> input_ids;  // local id -> id in the input graph
    int parent = -1;
    int child_slot = -1;
    StepKind kind = StepKind::Empty;
    ReductionStep step;            // local ids
    std::vector<int> child_map;    // child local id -> this node's local id (single-child kinds)
    std::vector<std::vector<int>> comp_maps;  // SplitComponents
    int children_remaining = 0;
    std::vector<Solution> child_results;  // in this node's local ids
    int ledger_index = -1;
    long long lambda = 0;
};

}  // namespace

ConstructResult construct_2degenerate(const PlaneGraph& g) {
    if (!g.is_triangle_free())
        throw Error("construct_2degenerate: input must be triangle-free");

    ConstructResult out;
    std::vector<Node> nodes;
    std::vector<int> expand_stack;

    {
        Node root;
        root.graph = g;
        root.input_ids.resize(g.n());
        std::iota(root.input_ids.begin(), root.input_ids.end(), 0);
        nodes.push_back(std::move(root));
        expand_stack.push_back(0);
    }

    auto make_ledger_row = [&](Node& nd, StepKind kind) {
        LedgerRow row;
        row.kind = kind;
        row.n = nd.graph.n();
        row.m = nd.graph.m();
        row.lambda = nd.lambda;
        row.bound = bound_value(row.n, row.m, row.lambda);
        row.bound_ceil = row.bound.ceil();
        nd.ledger_index = static_cast<int>(out.trace.ledger.size());
        out.trace.ledger.push_back(row);
    };

    // Finalize a node whose children are all done, then walk up the chain.
    auto finalize_chain = [&](int start, Solution result) {
        int i = start;
        Solution res = std::move(result);
        while (true) {
            Node& nd = nodes[i];
            LedgerRow& row = out.trace.ledger[nd.ledger_index];
            row.achieved = res.size();
            row.ok = res.size() >= row.bound_ceil;
            if (!row.ok)
                throw GuaranteeError("construct_2degenerate: ledger inequality failed at level " +
                                         std::to_string(nd.ledger_index) + " (" +
                                         step_kind_name(row.kind) + ")",
                                     nd.graph.to_json());
            if (nd.graph.component_count() == 1 && nd.graph.n() >= 3) {
                long long four_fifths = Rational(4LL * nd.graph.n(), 5).ceil();
                if (res.size() < four_fifths)
                    throw GuaranteeError("construct_2degenerate: solution below 4n/5",
                                         nd.graph.to_json());
            }
            if (nd.parent == -1) {
                out.trace.final = res;
                out.solution = res;
                return;
            }
            Node& par = nodes[nd.parent];
            // translate into the parent's local ids
            const std::vector<int>& map =
                par.kind == StepKind::SplitComponents ? par.comp_maps[nd.child_slot]
                                                      : par.child_map;
            Solution translated;
            translated.k = 2;
            for (int v : res.kept) translated.kept.push_back(map[v]);
            std::sort(translated.kept.begin(), translated.kept.end());
            translated.kept.erase(
                std::unique(translated.kept.begin(), translated.kept.end()),
                translated.kept.end());
            par.child_results[nd.child_slot] = translated;
            if (--par.children_remaining > 0) return;

            // combine at the parent
            if (par.kind == StepKind::SplitComponents) {
                std::vector<int> kept;
                for (const auto& cr : par.child_results)
                    kept.insert(kept.end(), cr.kept.begin(), cr.kept.end());
                auto cert = certify_k_degenerate(par.graph.skeleton(), kept, 2);
                if (!cert.ok)
                    throw GuaranteeError("construct_2degenerate: component union not certified",
                                         par.graph.to_json());
                res = cert.solution;
            } else {
                bool fb = false;
                res = lift(par.graph, par.step, par.child_results[0], &fb);
                LedgerRow& prow = out.trace.ledger[par.ledger_index];
                prow.used_fallback = fb;
                if (fb)
                    ++out.trace.fallback_lifts;
                else
                    ++out.trace.designated_lifts;
            }
            i = nd.parent;
        }
    };

    while (!expand_stack.empty()) {
        int i = expand_stack.back();
        expand_stack.pop_back();
        // Copy out what expansion needs; nodes may reallocate while pushing
        // children.
        {
            Node& nd = nodes[i];
            nd.lambda = count_difficult(nd.graph.skeleton()).lambda;
        }

        if (nodes[i].graph.n() == 0) {
            nodes[i].kind = StepKind::Empty;
            make_ledger_row(nodes[i], StepKind::Empty);
            finalize_chain(i, Solution{{}, {}, 2});
            continue;
        }

        if (nodes[i].graph.component_count() > 1) {
            nodes[i].kind = StepKind::SplitComponents;
            make_ledger_row(nodes[i], StepKind::SplitComponents);
            int nc = nodes[i].graph.component_count();
            nodes[i].children_remaining = nc;
            nodes[i].child_results.resize(nc);
            nodes[i].comp_maps.resize(nc);
            std::vector<std::vector<int>> comp_vertices(nc);
            for (int v = 0; v < nodes[i].graph.n(); ++v)
                comp_vertices[nodes[i].graph.component_of(v)].push_back(v);
            for (int c = 0; c < nc; ++c) {
                std::vector<int> remove;
                for (int v = 0; v < nodes[i].graph.n(); ++v)
                    if (nodes[i].graph.component_of(v) != c) remove.push_back(v);
                auto del = delete_vertices(nodes[i].graph, remove);
                Node child;
                child.graph = std::move(del.graph);
                child.parent = i;
                child.child_slot = c;
                child.input_ids.resize(del.kept_ids.size());
                for (std::size_t t = 0; t < del.kept_ids.size(); ++t)
                    child.input_ids[t] = nodes[i].input_ids[del.kept_ids[t]];
                nodes[i].comp_maps[c] = del.kept_ids;
                nodes.push_back(std::move(child));
                expand_stack.push_back(static_cast<int>(nodes.size()) - 1);
            }
            continue;
        }

        if (nodes[i].lambda == 1) {
            nodes[i].kind = StepKind::DifficultDirect;
            make_ledger_row(nodes[i], StepKind::DifficultDirect);
            Solution s = difficult_direct(nodes[i].graph);
            finalize_chain(i, std::move(s));
            continue;
        }

        ReductionStep step = reduce_once(nodes[i].graph);
        nodes[i].kind = step.kind;
        nodes[i].step = step;
        make_ledger_row(nodes[i], step.kind);
        LedgerRow& row = out.trace.ledger[nodes[i].ledger_index];
        for (int v : step.removed) row.removed.push_back(nodes[i].input_ids[v]);

        Node child;
        child.parent = i;
        child.child_slot = 0;
        if (step.kind == StepKind::ContractEdge) {
            auto cr = contract_edge(nodes[i].graph, step.contracted_edge[0],
                                    step.contracted_edge[1]);
            if (!cr.result_triangle_free)
                throw GuaranteeError("construct_2degenerate: contraction produced a triangle",
                                     nodes[i].graph.to_json());
            child.graph = std::move(cr.graph);
            nodes[i].child_map = cr.orig_of;  // merged -> u already by convention
        } else {
            auto del = delete_vertices(nodes[i].graph, step.removed);
            child.graph = std::move(del.graph);
            nodes[i].child_map = del.kept_ids;
        }
        row.delta_n = nodes[i].graph.n() - child.graph.n();
        row.delta_m = nodes[i].graph.m() - child.graph.m();
        row.lambda_prime = count_difficult(child.graph.skeleton()).lambda;
        child.input_ids.resize(child.graph.n());
        for (int t = 0; t < child.graph.n(); ++t)
            child.input_ids[t] = nodes[i].input_ids[nodes[i].child_map[t]];
        nodes[i].children_remaining = 1;
        nodes[i].child_results.resize(1);
        nodes.push_back(std::move(child));
        expand_stack.push_back(static_cast<int>(nodes.size()) - 1);
    }

    // Final certificate in input ids.
    auto cert = certify_k_degenerate(g.skeleton(), out.solution.kept, 2);
    if (!cert.ok)
        throw GuaranteeError("construct_2degenerate: final certificate failed", g.to_json());
    out.solution = cert.solution;
    out.trace.final = out.solution;
    return out;
}

std::string ReductionTrace::to_json() const {
    nlohmann::json j;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : ledger) {
        nlohmann::json e;
        e["kind"] = step_kind_name(r.kind);
        e["n"] = r.n;
        e["m"] = r.m;
        e["lambda"] = r.lambda;
        e["bound"] = r.bound.str();
        e["bound_ceil"] = r.bound_ceil;
        e["achieved"] = r.achieved;
        e["ok"] = r.ok;
        e["removed"] = r.removed;
        e["delta_n"] = r.delta_n;
        e["delta_m"] = r.delta_m;
        e["lambda_prime"] = r.lambda_prime;
        e["used_fallback"] = r.used_fallback;
        rows.push_back(e);
    }
    j["ledger"] = rows;
    j["final"] = nlohmann::json::parse(final.to_json());
    j["designated_lifts"] = designated_lifts;
    j["fallback_lifts"] = fallback_lifts;
    return j.dump();
}

}  // namespace planedeg
