#include "planedeg/structure.hpp"

#include <algorithm>
#include <set>

namespace planedeg {

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<char> is_cut;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit BlockFinder(const Graph& g)
        : g(g), disc(g.n, -1), low(g.n, 0), is_cut(g.n, 0) {}

    void pop_block(int u, int v) {
        std::set<int> verts;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(a);
            verts.insert(b);
            if (a == u && b == v) break;
        }
        blocks.emplace_back(verts.begin(), verts.end());
    }

    void run(int root) {
        // Iterative DFS; frame = (vertex, parent, next neighbor index).
        struct Frame {
            int v, parent;
            std::size_t i;
        };
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.i < g.adj[f.v].size()) {
                int w = g.adj[f.v][f.i++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back({f.v, w});
                    disc[w] = low[w] = timer++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent != -1) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        if (parent != root) is_cut[parent] = 1;
                        pop_block(parent, v);
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    BlockFinder bf(g);
    for (int v = 0; v < g.n; ++v)
        if (bf.disc[v] == -1) {
            bf.run(v);
            if (g.adj[v].empty()) bf.blocks.push_back({v});
        }
    BlockDecomposition res;
    res.blocks = std::move(bf.blocks);
    for (int v = 0; v < g.n; ++v)
        if (bf.is_cut[v]) res.cut_vertices.push_back(v);
    res.block_tree.resize(res.blocks.size());
    for (std::size_t b = 0; b < res.blocks.size(); ++b)
        for (int v : res.blocks[b])
            if (bf.is_cut[v]) res.block_tree[b].push_back(v);
    return res;
}

std::optional<std::array<int, 8>> is_cube(const Graph& g) {
    if (g.n != 8 || g.m() != 12) return std::nullopt;
    for (int v = 0; v < 8; ++v)
        if (g.degree(v) != 3) return std::nullopt;
    if (g.component_count() != 1) return std::nullopt;
    if (g.bipartition().empty()) return std::nullopt;
    // A connected 3-regular bipartite graph on 8 vertices is the cube; it
    // remains to produce a labeling. Anchor u1 = 0 and try the three ways
    // of picking u2, u4 among its neighbors.
    int u1 = 0;
    const auto& nb = g.adj[0];
    int pairs[3][2] = {{nb[0], nb[1]}, {nb[0], nb[2]}, {nb[1], nb[2]}};
    for (auto& pr : pairs) {
        int u2 = std::min(pr[0], pr[1]), u4 = std::max(pr[0], pr[1]);
        for (int u3 : g.adj[u2]) {
            if (u3 == u1 || !g.adjacent(u3, u4)) continue;
            std::array<int, 8> map{u1, u2, u3, u4, -1, -1, -1, -1};
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) {
                int ui = map[i];
                int vi = -1;
                for (int w : g.adj[ui])
                    if (w != map[0] && w != map[1] && w != map[2] && w != map[3]) vi = w;
                if (vi == -1)
                    ok = false;
                else
                    map[4 + i] = vi;
            }
            if (!ok) continue;
            for (int i = 0; i < 4 && ok; ++i) {
                if (!g.adjacent(map[4 + i], map[4 + (i + 1) % 4])) ok = false;
                for (int j = i + 1; j < 4; ++j)
                    if (map[4 + i] == map[4 + j]) ok = false;
            }
            if (ok) return map;
        }
    }
    return std::nullopt;
}

DifficultCount count_difficult(const Graph& g) {
    DifficultCount res;
    res.component_of = g.component_ids();
    res.components =
        res.component_of.empty()
            ? 0
            : 1 + *std::max_element(res.component_of.begin(), res.component_of.end());
    res.component_difficult.assign(res.components, 1);
    if (res.components == 0) return res;

    BlockDecomposition bd = blocks(g);
    std::vector<std::vector<int>> comp_cube_vertices(res.components);
    for (const auto& blk : bd.blocks) {
        int c = res.component_of[blk[0]];
        if (!res.component_difficult[c]) continue;
        if (blk.size() == 1) continue;  // isolated vertex component
        if (blk.size() == 2) continue;  // edge block
        auto sub = g.induced(blk);
        if (blk.size() == 8 && is_cube(sub)) {
            for (int v : blk) comp_cube_vertices[c].push_back(v);
            continue;
        }
        res.component_difficult[c] = 0;
    }
    // Cube blocks must be pairwise vertex-disjoint.
    for (int c = 0; c < res.components; ++c) {
        if (!res.component_difficult[c]) continue;
        auto& verts = comp_cube_vertices[c];
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
            res.component_difficult[c] = 0;
    }
    for (char d : res.component_difficult) res.lambda += d;
    return res;
}

std::vector<CubeOccurrence> cubes_with_few_leaving_edges(const Graph& g, int threshold) {
    std::vector<CubeOccurrence> out;
    if (g.n < 8) return out;

    // A cube subgraph is 2-connected, so it lives inside one block with at
    // least 8 vertices. big_block[v] = id of such a block, else -1.
    BlockDecomposition bd = blocks(g);
    std::vector<std::vector<char>> block_mask;
    std::vector<int> big_blocks;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        if (bd.blocks[b].size() < 8) continue;
        std::vector<char> mask(g.n, 0);
        for (int v : bd.blocks[b]) mask[v] = 1;
        block_mask.push_back(std::move(mask));
    }
    if (block_mask.empty()) return out;

    std::set<std::vector<int>> seen;
    auto consider = [&](const std::array<int, 8>& map) {
        std::vector<int> verts(map.begin(), map.end());
        std::sort(verts.begin(), verts.end());
        if (seen.count(verts)) return;
        seen.insert(verts);
        std::vector<char> in(g.n, 0);
        for (int v : verts) in[v] = 1;
        int leaving = 0;
        for (int v : verts)
            for (int w : g.adj[v])
                if (!in[w]) ++leaving;
        if (leaving <= threshold) {
            CubeOccurrence occ;
            occ.vertex_map = map;
            occ.vertices = verts;
            occ.leaving_edges = leaving;
            out.push_back(std::move(occ));
        }
    };

    auto same_big_block = [&](int a, int b, int c, int d) {
        for (const auto& mask : block_mask)
            if (mask[a] && mask[b] && mask[c] && mask[d]) return true;
        return false;
    };

    // Anchor on 4-cycles (p,q,r,s), p minimal, then extend each cycle vertex
    // by a private neighbor closing the opposite 4-cycle.
    for (int p = 0; p < g.n; ++p) {
        for (int q : g.adj[p]) {
            if (q <= p) continue;
            for (int s : g.adj[p]) {
                if (s <= q) continue;
                for (int r : g.adj[q]) {
                    if (r <= p || r == s || !g.adjacent(r, s)) continue;
                    if (!same_big_block(p, q, r, s)) continue;
                    std::array<int, 4> cyc{p, q, r, s};
                    std::array<std::vector<int>, 4> cand;
                    for (int i = 0; i < 4; ++i)
                        for (int w : g.adj[cyc[i]])
                            if (w != cyc[0] && w != cyc[1] && w != cyc[2] && w != cyc[3])
                                cand[i].push_back(w);
                    for (int a : cand[0])
                        for (int b : cand[1]) {
                            if (b == a || !g.adjacent(a, b)) continue;
                            for (int c : cand[2]) {
                                if (c == a || c == b || !g.adjacent(b, c)) continue;
                                for (int d : cand[3]) {
                                    if (d == a || d == b || d == c) continue;
                                    if (!g.adjacent(c, d) || !g.adjacent(d, a)) continue;
                                    consider({p, q, r, s, a, b, c, d});
                                }
                            }
                        }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CubeOccurrence& a, const CubeOccurrence& b) {
                  return a.vertices < b.vertices;
              });
    return out;
}

namespace {

// All simple cycles of length <= max_len, each reported once: minimal
// vertex first, second vertex smaller than the last.
std::vector<std::vector<int>> short_cycles(const Graph& g, int max_len) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);
    auto dfs = [&](auto&& self, int v) -> void {
        for (int w : g.adj[v]) {
            if (w == path[0]) {
                if (path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
                continue;
            }
            if (w < path[0] || on_path[w]) continue;
            if (static_cast<int>(path.size()) == max_len) continue;
            path.push_back(w);
            on_path[w] = 1;
            self(self, w);
            on_path[w] = 0;
            path.pop_back();
        }
    };
    for (int s = 0; s < g.n; ++s) {
        path = {s};
        on_path[s] = 1;
        dfs(dfs, s);
        on_path[s] = 0;
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return cycles;
}

}  // namespace

std::vector<CycleClassification> separating_cycles(const PlaneGraph& g, int max_len) {
    if (g.component_count() > 1)
        throw Error("separating_cycles: graph must be connected");
    std::vector<CycleClassification> out;
    int outer = g.outer_face().value_or(0);

    auto cycles = short_cycles(g.skeleton(), max_len);
    std::vector<int> side(g.face_count());
    std::vector<char> visited(g.face_count());
    std::vector<char> on_cycle(g.n(), 0);

    for (const auto& cyc : cycles) {
        CycleClassification cc;
        cc.cycle = cyc;
        int len = static_cast<int>(cyc.size());
        for (int v : cyc) on_cycle[v] = 1;

        // Two-color the faces: crossing a cycle edge flips the side, any
        // other edge keeps it. The cycle is a closed curve, so this is
        // globally consistent; start from the outer face so side 0 is the
        // exterior.
        auto edge_on_cycle = [&](int a, int b) {
            for (int i = 0; i < len; ++i) {
                int u = cyc[i], v = cyc[(i + 1) % len];
                if ((a == u && b == v) || (a == v && b == u)) return true;
            }
            return false;
        };
        std::fill(visited.begin(), visited.end(), 0);
        std::vector<int> queue{outer};
        side[outer] = 0;
        visited[outer] = 1;
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            const Face& face = g.faces()[f];
            for (int i = 0; i < face.length(); ++i) {
                int a = face.walk[i], b = face.walk[(i + 1) % face.length()];
                int h = g.face_at(b, a);  // face across edge ab
                int s = side[f] ^ (edge_on_cycle(a, b) ? 1 : 0);
                if (!visited[h]) {
                    visited[h] = 1;
                    side[h] = s;
                    queue.push_back(h);
                } else if (side[h] != s) {
                    throw Error("separating_cycles: face parity inconsistent");
                }
            }
        }
        for (int v = 0; v < g.n(); ++v) {
            if (on_cycle[v]) continue;
            // All faces at an off-cycle vertex share a side.
            int s = side[g.faces_at_vertex(v)[0]];
            if (s == 0)
                ++cc.exterior_count;
            else
                ++cc.interior_count;
        }
        cc.separating = cc.interior_count > 0 && cc.exterior_count > 0;
        for (int v : cyc) on_cycle[v] = 0;
        out.push_back(std::move(cc));
    }
    return out;
}

std::optional<int> find_special_vertex(const PlaneGraph& g) {
    if (g.n() == 0) return std::nullopt;
    std::vector<char> blocked(g.n(), 0);
    for (const auto& cc : separating_cycles(g, 5)) {
        if (!cc.separating) continue;
        if (cc.cycle.size() < 4) continue;
        for (int v : cc.cycle) blocked[v] = 1;
    }
    bool saw_degree3 = false;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) != 3) continue;
        saw_degree3 = true;
        if (!blocked[v]) return v;
    }
    if (saw_degree3 && g.min_degree() == 3 && g.is_triangle_free())
        throw GuaranteeError(
            "find_special_vertex: a triangle-free plane graph of minimum degree three "
            "must contain a degree-3 vertex avoiding separating 4/5-cycles",
            g.to_json());
    return std::nullopt;
}

}  // namespace planedeg
