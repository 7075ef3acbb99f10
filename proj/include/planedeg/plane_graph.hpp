#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planedeg/errors.hpp"
#include "planedeg/graph.hpp"

namespace planedeg {

// A face boundary walk. walk[i] -> walk[(i+1) % length] are the half-edges
// of the walk; a bridge appears twice (once per direction), so length()
// counts bridge edges twice.
struct Face {
    int id = -1;
    std::vector<int> walk;
    std::vector<int> vertex_set;  // distinct boundary vertices, ascending

    int length() const { return static_cast<int>(walk.size()); }
};

// Plane graph given by a rotation system: for every vertex, its neighbors
// in clockwise order. Faces are derived by walk tracing and the embedding
// is validated with the per-component Euler identity. Immutable after
// construction; mutating operations return new values.
class PlaneGraph {
  public:
    PlaneGraph() = default;

    // Validates symmetry, simplicity and planarity of the rotation system.
    static PlaneGraph from_rotation(std::vector<std::vector<int>> rotation);

    static PlaneGraph from_json(const std::string& text);
    std::string to_json() const;

    int n() const { return n_; }
    int m() const { return m_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    const std::vector<int>& neighbors(int v) const { return rot_[v]; }
    bool adjacent(int u, int v) const;

    const std::vector<Face>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    // Face whose boundary walk contains the half-edge u->v.
    int face_at(int u, int v) const;
    const std::vector<int>& faces_at_vertex(int v) const { return vfaces_[v]; }

    int component_count() const { return components_; }
    int component_of(int v) const { return comp_[v]; }

    bool is_triangle_free() const { return !skeleton_.has_triangle(); }
    int min_degree() const { return skeleton_.min_degree(); }

    std::optional<int> outer_face() const { return outer_; }
    void set_outer_face(int f);

    const std::optional<std::vector<std::string>>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    const Graph& skeleton() const { return skeleton_; }

  private:
    int n_ = 0;
    int m_ = 0;
    int components_ = 0;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<int>> rpos_;  // rpos_[v][i] = index of v within rot_[rot_[v][i]]
    std::vector<Face> faces_;
    std::vector<int> he_face_;    // half-edge id -> face id
    std::vector<int> he_offset_;  // vertex -> first half-edge id
    std::vector<std::vector<int>> vfaces_;
    std::vector<int> comp_;
    std::optional<int> outer_;
    std::optional<std::vector<std::string>> labels_;
    Graph skeleton_;

    void build();
};

struct DeleteResult {
    PlaneGraph graph;
    std::vector<int> kept_ids;  // new id -> old id
    int removed_edges = 0;
    int components = 0;
};

// Induced embedding on V(G) \ X (rotations restricted, faces retraced).
DeleteResult delete_vertices(const PlaneGraph& g, const std::vector<int>& to_remove);

struct ContractResult {
    PlaneGraph graph;
    int merged = -1;           // new id of the contracted vertex
    std::vector<int> orig_of;  // new id -> old id; orig_of[merged] == u by convention
    bool simplified = false;   // a parallel edge was removed (input had a triangle on uv)
    bool result_triangle_free = false;
};

// Contract edge uv by splicing the two rotations at the edge. If G is
// triangle-free and uv lies in no 4-cycle the result is triangle-free;
// result_triangle_free reports the verified status either way.
ContractResult contract_edge(const PlaneGraph& g, int u, int v);

// Face-to-face distance: the least number of vertices a curve meeting the
// graph only at vertices must pass through to get from f1 to f2.
// -1 means unreachable (different components).
int face_distance(const PlaneGraph& g, int f1, int f2);
// d(f, v): minimum of face_distance(f, f') over the faces f' incident with v.
int face_vertex_distance(const PlaneGraph& g, int f, int v);
// Distances from f to every face / every vertex (-1 = unreachable).
std::vector<int> face_distances_from(const PlaneGraph& g, int f);
std::vector<int> vertex_distances_from_face(const PlaneGraph& g, int f);

}  // namespace planedeg
