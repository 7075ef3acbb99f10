#pragma once

#include <array>
#include <string>
#include <vector>

#include "planedeg/degeneracy.hpp"
#include "planedeg/plane_graph.hpp"
#include "planedeg/rational.hpp"

namespace planedeg {

enum class StepKind {
    Empty,
    SplitComponents,
    DifficultDirect,
    LowDegreeVertex,
    CubeExtension,
    Degree3Claim1,
    Degree3Claim2,
    FourCycleClaim,
    ContractEdge,
    SpecialVertexFinal,
};

const char* step_kind_name(StepKind k);

// One reduction at one recursion level. Vertex ids are local to the graph
// the step was produced for; construct_2degenerate additionally records
// them in the ids of the input graph.
struct ReductionStep {
    StepKind kind = StepKind::Empty;
    std::vector<int> removed;                 // X
    std::array<int, 2> contracted_edge{-1, -1};
    std::vector<int> designated_add;          // the A vertices the proof promises
    int add_count = 0;                        // A
};

struct LedgerRow {
    StepKind kind = StepKind::Empty;
    long long n = 0, m = 0, lambda = 0;
    Rational bound;       // (6n - m - lambda)/5
    long long bound_ceil = 0;
    long long achieved = 0;
    bool used_fallback = false;
    bool ok = false;
    std::vector<int> removed;  // in input-graph ids
    int delta_n = 0, delta_m = 0;
    long long lambda_prime = 0;  // difficult components after the step
};

struct ReductionTrace {
    std::vector<LedgerRow> ledger;  // one row per recursion level, expansion order
    Solution final;
    int designated_lifts = 0;
    int fallback_lifts = 0;
    std::string to_json() const;
};

// (6n - m - lambda) / 5 as an exact rational.
Rational bound_value(long long n, long long m, long long lambda);

// Keep everything except the lowest-id vertex of each cube block. For a
// difficult graph this meets the bound with lambda = 1 exactly.
Solution difficult_direct(const PlaneGraph& g);

// First applicable rule on a connected, non-difficult, nonempty,
// triangle-free plane graph.
ReductionStep reduce_once(const PlaneGraph& g);

// Extend a certified solution of the reduced graph back to g per the step
// kind. `sub` must already be expressed in g's vertex ids (the contracted
// vertex mapped to u). Tries the designated extension first, then every
// same-size subset of X. `used_fallback` reports which case applied.
Solution lift(const PlaneGraph& g, const ReductionStep& step, const Solution& sub,
              bool* used_fallback = nullptr);

struct ConstructResult {
    Solution solution;
    ReductionTrace trace;
};

// The full recursion: split components, difficult components directly,
// otherwise reduce, recurse, lift, and verify the bound ledger
// (6n - m - lambda)/5 at every level plus 4n/5 for connected n >= 3.
ConstructResult construct_2degenerate(const PlaneGraph& g);

}  // namespace planedeg
