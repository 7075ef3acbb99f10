#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planedeg/graph.hpp"
#include "planedeg/plane_graph.hpp"
#include "planedeg/rational.hpp"

namespace planedeg {

// The 8-vertex 3-regular quadrangular prism: vertices 0..3 form the inner
// 4-cycle, 4..7 the outer one, i ~ i+4.
PlaneGraph gen_cube();

// Cartesian product of a cycle of length c and a path on k vertices, drawn
// as nested circles. Vertex (i, j) has id j*c + i. Triangle-free for c >= 4.
PlaneGraph gen_cylindrical_grid(int c, int k);

// Block tree for difficult-graph generation. Children of a cube attach at
// its vertices round-robin; children of an edge attach at its far endpoint.
// A cube directly under a cube would share the attachment vertex and is
// rejected.
struct DifficultSpec {
    enum Kind { Vertex, Edge, Cube } kind = Vertex;
    std::vector<DifficultSpec> children;

    // Grammar: node := ("vertex"|"edge"|"cube") [ "(" node ("," node)* ")" ]
    static DifficultSpec parse(const std::string& text);
};

PlaneGraph gen_difficult(const DifficultSpec& spec);

// Random simple plane quadrangulation grown from a 4-cycle by repeatedly
// splitting a face across a diagonal with a new degree-2 vertex.
// Deterministic for a fixed seed.
PlaneGraph gen_quadrangulation(std::uint64_t seed, int target_n);

// planar_code: optional ">>planar_code<<" header, then per graph one byte n
// followed by, for every vertex, its neighbors in embedding order as
// 1-based bytes terminated by 0. Only n < 256 is supported.
std::vector<PlaneGraph> parse_planar_code(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> write_planar_code(const std::vector<PlaneGraph>& graphs);

// graph6 (adjacency only, no embedding): one graph per line, optional
// ">>graph6<<" header.
std::vector<Graph> parse_graph6(const std::string& text);
std::string write_graph6(const std::vector<Graph>& graphs);

struct CorpusSource {
    std::string kind;  // cube | grid | grid_range | quad | quad_range | difficult |
                       // planar_code_file | graph6_file
    int c = 0, k = 0;
    std::vector<int> c_range, k_range;  // inclusive [lo, hi]
    std::uint64_t seed = 1;
    int n = 0;
    std::vector<std::uint64_t> seed_range;  // inclusive [lo, hi]
    std::vector<int> n_range;               // inclusive [lo, hi]
    std::string spec;
    std::string path;
};

struct CorpusConfig {
    std::vector<CorpusSource> sources;
    int exact_cap = 12;          // skip the exact solver above this n
    std::uint64_t exact_budget = 50'000'000;
    int k = 2;
    bool run_threefaces = true;
    bool run_layers = true;
    bool run_discharge = true;
    int layer_depth = 9;

    static CorpusConfig from_json(const std::string& text);
    std::string to_json() const;
};

struct CorpusRow {
    std::string id;
    int n = 0, m = 0;
    int lambda = 0;
    int rho3 = -1;  // -1 = not computed (abstract input)
    int n3 = 0;
    int alpha2_exact = -1;  // -1 = skipped
    bool exact_optimal = true;
    int constructive = -1;  // -1 = skipped (abstract input)
    long long bound_ceil = 0;
    long long four_fifths_ceil = 0;
    std::string bigO_bound;  // rational string, empty when not computed
    int steps = 0;
    int fallback_lifts = 0;
    bool pass = false;
    double runtime_ms = 0.0;
    std::string error;
};

struct CorpusReport {
    std::vector<CorpusRow> rows;
    bool all_pass = true;

    std::string to_csv() const;
    std::string to_json() const;
    static const char* csv_header();
};

// Runs every analysis on every source graph, in input order, using a
// worker pool sized by the PLANEDEG_WORKERS environment variable.
CorpusReport run_corpus(const CorpusConfig& config);

}  // namespace planedeg
