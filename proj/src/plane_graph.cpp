#include "planedeg/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "json.hpp"

namespace planedeg {

PlaneGraph PlaneGraph::from_rotation(std::vector<std::vector<int>> rotation) {
    PlaneGraph g;
    g.n_ = static_cast<int>(rotation.size());
    g.rot_ = std::move(rotation);

    long long half = 0;
    for (int v = 0; v < g.n_; ++v) {
        std::vector<int> seen;
        for (int w : g.rot_[v]) {
            if (w < 0 || w >= g.n_)
                throw EmbeddingError("rotation: neighbor id out of range at vertex " +
                                     std::to_string(v));
            if (w == v) throw EmbeddingError("rotation: loop at vertex " + std::to_string(v));
            seen.push_back(w);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw EmbeddingError("rotation: repeated neighbor at vertex " + std::to_string(v));
        half += static_cast<long long>(g.rot_[v].size());
    }
    // Symmetry: v lists u exactly when u lists v.
    for (int v = 0; v < g.n_; ++v)
        for (int w : g.rot_[v]) {
            bool back = false;
            for (int x : g.rot_[w])
                if (x == v) back = true;
            if (!back)
                throw EmbeddingError("rotation: edge " + std::to_string(v) + "-" +
                                     std::to_string(w) + " is not symmetric");
        }
    g.m_ = static_cast<int>(half / 2);
    g.build();
    return g;
}

void PlaneGraph::build() {
    skeleton_.n = n_;
    skeleton_.adj = rot_;

    rpos_.assign(n_, {});
    he_offset_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) {
        he_offset_[v + 1] = he_offset_[v] + degree(v);
        rpos_[v].resize(degree(v));
        for (int i = 0; i < degree(v); ++i) {
            int w = rot_[v][i];
            int p = -1;
            for (int j = 0; j < degree(w); ++j)
                if (rot_[w][j] == v) p = j;
            rpos_[v][i] = p;
        }
    }

    // Face tracing: successor of half-edge (u -> v) is the half-edge leaving v
    // one past the reversal in v's rotation.
    int total_he = he_offset_[n_];
    he_face_.assign(total_he, -1);
    faces_.clear();
    for (int u = 0; u < n_; ++u) {
        for (int i = 0; i < degree(u); ++i) {
            int start = he_offset_[u] + i;
            if (he_face_[start] != -1) continue;
            Face f;
            f.id = static_cast<int>(faces_.size());
            int cu = u, ci = i;
            do {
                he_face_[he_offset_[cu] + ci] = f.id;
                f.walk.push_back(cu);
                int cv = rot_[cu][ci];
                int j = rpos_[cu][ci];  // position of cu in rot_[cv]
                ci = (j + 1) % degree(cv);
                cu = cv;
            } while (he_offset_[cu] + ci != start);
            f.vertex_set = f.walk;
            std::sort(f.vertex_set.begin(), f.vertex_set.end());
            f.vertex_set.erase(std::unique(f.vertex_set.begin(), f.vertex_set.end()),
                               f.vertex_set.end());
            faces_.push_back(std::move(f));
        }
    }

    vfaces_.assign(n_, {});
    for (const Face& f : faces_)
        for (int v : f.vertex_set) vfaces_[v].push_back(f.id);

    comp_ = skeleton_.component_ids();
    components_ = comp_.empty() ? 0 : 1 + *std::max_element(comp_.begin(), comp_.end());

    // Euler identity per connected component: n - m + f = 2, except for
    // isolated vertices which trace no walk at all.
    std::vector<long long> cn(components_, 0), cm(components_, 0), cf(components_, 0);
    for (int v = 0; v < n_; ++v) {
        cn[comp_[v]] += 1;
        cm[comp_[v]] += degree(v);
    }
    for (const Face& f : faces_) cf[comp_[f.walk[0]]] += 1;
    for (int c = 0; c < components_; ++c) {
        cm[c] /= 2;
        if (cm[c] == 0) {
            if (cn[c] == 1) continue;
            throw EmbeddingError("component " + std::to_string(c) + " inconsistent");
        }
        if (cn[c] - cm[c] + cf[c] != 2)
            throw EmbeddingError(
                "rotation system is not a planar embedding: component " + std::to_string(c) +
                " has n=" + std::to_string(cn[c]) + " m=" + std::to_string(cm[c]) +
                " f=" + std::to_string(cf[c]));
    }
}

bool PlaneGraph::adjacent(int u, int v) const {
    for (int w : rot_[u])
        if (w == v) return true;
    return false;
}

int PlaneGraph::face_at(int u, int v) const {
    for (int i = 0; i < degree(u); ++i)
        if (rot_[u][i] == v) return he_face_[he_offset_[u] + i];
    throw Error("face_at: no edge " + std::to_string(u) + "-" + std::to_string(v));
}

void PlaneGraph::set_outer_face(int f) {
    if (f < 0 || f >= face_count()) throw Error("set_outer_face: no such face");
    outer_ = f;
}

void PlaneGraph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_) throw Error("labels: wrong length");
    labels_ = std::move(labels);
}

std::string PlaneGraph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["rotation"] = rot_;
    if (labels_) j["labels"] = *labels_;
    return j.dump();
}

PlaneGraph PlaneGraph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("rotation"))
        throw ParseError("json: expected object with \"n\" and \"rotation\"", 0);
    auto rot = j["rotation"].get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rot.size()) != j["n"].get<int>())
        throw ParseError("json: rotation length does not match n", 0);
    PlaneGraph g = from_rotation(std::move(rot));
    if (j.contains("labels")) g.set_labels(j["labels"].get<std::vector<std::string>>());
    return g;
}

DeleteResult delete_vertices(const PlaneGraph& g, const std::vector<int>& to_remove) {
    std::vector<char> removed(g.n(), 0);
    for (int v : to_remove) {
        if (v < 0 || v >= g.n()) throw Error("delete_vertices: vertex out of range");
        removed[v] = 1;
    }
    DeleteResult res;
    std::vector<int> newid(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) {
            newid[v] = static_cast<int>(res.kept_ids.size());
            res.kept_ids.push_back(v);
        }
    std::vector<std::vector<int>> rot(res.kept_ids.size());
    for (std::size_t i = 0; i < res.kept_ids.size(); ++i)
        for (int w : g.neighbors(res.kept_ids[i]))
            if (newid[w] != -1) rot[i].push_back(newid[w]);
    res.graph = PlaneGraph::from_rotation(std::move(rot));
    if (g.labels()) {
        std::vector<std::string> lab;
        for (int v : res.kept_ids) lab.push_back((*g.labels())[v]);
        res.graph.set_labels(std::move(lab));
    }
    res.removed_edges = g.m() - res.graph.m();
    res.components = res.graph.component_count();
    return res;
}

ContractResult contract_edge(const PlaneGraph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw Error("contract_edge: uv is not an edge");
    const auto& ru = g.neighbors(u);
    const auto& rv = g.neighbors(v);
    int pu = -1, pv = -1;
    for (int i = 0; i < g.degree(u); ++i)
        if (ru[i] == v) pu = i;
    for (int i = 0; i < g.degree(v); ++i)
        if (rv[i] == u) pv = i;

    // Merged rotation: around u starting after v, then around v starting
    // after u. This is the plane contraction splice.
    std::vector<int> merged_nb;
    for (int s = 1; s < g.degree(u); ++s) merged_nb.push_back(ru[(pu + s) % g.degree(u)]);
    for (int s = 1; s < g.degree(v); ++s) merged_nb.push_back(rv[(pv + s) % g.degree(v)]);

    ContractResult res;
    // Common neighbors (triangles through uv) would create parallel edges;
    // keep the u-side occurrence.
    std::vector<char> dup(g.n(), 0);
    std::vector<int> dedup;
    for (int w : merged_nb) {
        if (dup[w]) {
            res.simplified = true;
            continue;
        }
        dup[w] = 1;
        dedup.push_back(w);
    }
    merged_nb = std::move(dedup);

    std::vector<int> newid(g.n(), -1);
    res.orig_of.clear();
    for (int x = 0; x < g.n(); ++x) {
        if (x == v) continue;
        newid[x] = static_cast<int>(res.orig_of.size());
        res.orig_of.push_back(x);
    }
    res.merged = newid[u];

    std::vector<std::vector<int>> rot(res.orig_of.size());
    for (std::size_t i = 0; i < res.orig_of.size(); ++i) {
        int x = res.orig_of[i];
        if (x == u) {
            for (int w : merged_nb) rot[i].push_back(newid[w]);
            continue;
        }
        bool emitted_merge = false;
        for (int w : g.neighbors(x)) {
            if (w == u || w == v) {
                if (!emitted_merge) {
                    rot[i].push_back(res.merged);
                    emitted_merge = true;
                }
                continue;
            }
            rot[i].push_back(newid[w]);
        }
    }
    res.graph = PlaneGraph::from_rotation(std::move(rot));
    if (g.labels()) {
        std::vector<std::string> lab;
        for (int x : res.orig_of) lab.push_back((*g.labels())[x]);
        res.graph.set_labels(std::move(lab));
    }
    res.result_triangle_free = res.graph.is_triangle_free();
    return res;
}

std::vector<int> face_distances_from(const PlaneGraph& g, int f) {
    if (f < 0 || f >= g.face_count()) throw Error("face_distances_from: no such face");
    std::vector<int> dist(g.face_count(), -1);
    std::vector<char> vertex_done(g.n(), 0);
    std::deque<int> queue;
    dist[f] = 0;
    queue.push_back(f);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int v : g.faces()[cur].vertex_set) {
            if (vertex_done[v]) continue;
            vertex_done[v] = 1;
            for (int h : g.faces_at_vertex(v)) {
                if (dist[h] == -1) {
                    dist[h] = dist[cur] + 1;
                    queue.push_back(h);
                }
            }
        }
    }
    return dist;
}

int face_distance(const PlaneGraph& g, int f1, int f2) {
    auto d = face_distances_from(g, f1);
    return d[f2];
}

std::vector<int> vertex_distances_from_face(const PlaneGraph& g, int f) {
    auto fd = face_distances_from(g, f);
    std::vector<int> dist(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        for (int h : g.faces_at_vertex(v))
            if (fd[h] != -1 && (dist[v] == -1 || fd[h] < dist[v])) dist[v] = fd[h];
    return dist;
}

int face_vertex_distance(const PlaneGraph& g, int f, int v) {
    if (v < 0 || v >= g.n()) throw Error("face_vertex_distance: no such vertex");
    auto fd = face_distances_from(g, f);
    int best = -1;
    for (int h : g.faces_at_vertex(v))
        if (fd[h] != -1 && (best == -1 || fd[h] < best)) best = fd[h];
    return best;
}

}  // namespace planedeg
