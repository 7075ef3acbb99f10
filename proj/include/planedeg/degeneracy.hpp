#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planedeg/graph.hpp"

namespace planedeg {

// A kept vertex set together with an elimination order certifying that the
// induced subgraph is k-degenerate: replaying `order`, each vertex has at
// most k neighbors among the not-yet-removed kept vertices.
struct Solution {
    std::vector<int> kept;
    std::vector<int> order;
    int k = 0;

    int size() const { return static_cast<int>(kept.size()); }
    std::string to_json() const;
    static Solution from_json(const std::string& text);
};

struct CertifyResult {
    bool ok = false;
    Solution solution;              // valid when ok
    std::vector<int> core_witness;  // nonempty subgraph of min degree > k when !ok
};

// Greedy elimination over the induced subgraph; succeeds exactly when the
// subgraph is k-degenerate, otherwise returns the stuck core as witness.
// Lowest eligible vertex id first, so certificates are deterministic.
CertifyResult certify_k_degenerate(const Graph& g, const std::vector<int>& subset, int k);
CertifyResult certify_k_degenerate(const Graph& g, int k);

// Replays an existing certificate.
bool verify_solution(const Graph& g, const Solution& s);

// Smallest k for which g is k-degenerate (0 for edgeless graphs).
int degeneracy(const Graph& g);

struct ExactResult {
    Solution best;
    bool optimal = true;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultExactBudget = 50'000'000;

// Exact maximum induced k-degenerate subgraph by branch and bound over
// include/exclude decisions on bit-indexed subgraphs (n <= 128). The
// "exclude" branch of the current max-degree candidate is explored first.
// On budget exhaustion the best found solution is returned non-optimal.
ExactResult max_induced_kdeg_exact(const Graph& g, int k,
                                   std::uint64_t budget = kDefaultExactBudget);

// Independent oracle: descends subset sizes, checking each subset with its
// own peeling loop. n <= 20.
int brute_force_oracle(const Graph& g, int k);

}  // namespace planedeg
