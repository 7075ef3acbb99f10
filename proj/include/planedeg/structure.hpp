#pragma once

#include <array>
#include <optional>
#include <vector>

#include "planedeg/graph.hpp"
#include "planedeg/plane_graph.hpp"

namespace planedeg {

// Blocks are 2-connected components, cut edges, and isolated vertices;
// every edge lies in exactly one block.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // vertex sets, ascending
    std::vector<int> cut_vertices;         // ascending
    // block_tree[b] = cut vertices contained in block b (the bipartite
    // block-cut adjacency).
    std::vector<std::vector<int>> block_tree;
};

BlockDecomposition blocks(const Graph& g);

// Isomorphism test against the 3-cube. On success returns a labeling
// [u1,u2,u3,u4,v1,v2,v3,v4] where u1u2u3u4 and v1v2v3v4 are 4-cycles and
// ui ~ vi.
std::optional<std::array<int, 8>> is_cube(const Graph& g);

struct DifficultCount {
    int lambda = 0;  // number of difficult components
    int components = 0;
    std::vector<char> component_difficult;
    std::vector<int> component_of;  // per vertex
};

// A component is difficult when every block is a vertex, an edge, or a
// cube, and cube blocks are pairwise vertex-disjoint.
DifficultCount count_difficult(const Graph& g);

struct CubeOccurrence {
    std::array<int, 8> vertex_map{};  // [u1..u4, v1..v4] labeling
    std::vector<int> vertices;        // the 8 vertices, ascending
    int leaving_edges = 0;            // |E(X, V(G) - X)|
};

// All cube subgraphs with at most `threshold` edges leaving, in
// lexicographic order of their vertex sets. The search anchors on 4-cycles
// inside blocks with at least 8 vertices.
std::vector<CubeOccurrence> cubes_with_few_leaving_edges(const Graph& g, int threshold = 5);

struct CycleClassification {
    std::vector<int> cycle;  // vertex sequence
    int interior_count = 0;  // vertices strictly inside
    int exterior_count = 0;  // vertices strictly outside
    bool separating = false;
};

// Classifies every cycle of length <= max_len of a connected plane graph.
// Interior/exterior follow the designated outer face (face 0 by default);
// swapping the outer face complements the two counts.
std::vector<CycleClassification> separating_cycles(const PlaneGraph& g, int max_len = 5);

// A degree-3 vertex on no separating cycle of length 4 or 5 (lowest id).
// For a connected triangle-free plane graph of minimum degree exactly 3
// such a vertex must exist; if the search comes up empty in that case a
// GuaranteeError carrying the graph dump is thrown.
std::optional<int> find_special_vertex(const PlaneGraph& g);

}  // namespace planedeg
