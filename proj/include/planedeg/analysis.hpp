#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planedeg/degeneracy.hpp"
#include "planedeg/plane_graph.hpp"
#include "planedeg/rational.hpp"

namespace planedeg {

// Coefficient of the (rho3 - 2) penalty in the reported lower bound
// 7n/8 - 18*(rho3 - 2).
inline constexpr int kBigOCoefficient = 18;
// Separator size threshold quoted in reports.
inline constexpr int kSeparatorThreshold = 21;
// Face-distance radius of the second discharging phase.
inline constexpr int kDischargeRadius = 9;
// Required pairwise face distance between the faces fed to it.
inline constexpr int kFarApartDistance = 21;

struct ThreeFacesResult {
    int rho3 = 0;
    std::vector<int> witness;  // face ids
    bool optimal = true;
};

// Minimum number of faces covering every vertex of degree at most three,
// by branch and bound over the uncovered vertex with fewest candidate
// faces. `node_cap` bounds the search; exceeding it returns the best known
// cover flagged non-optimal.
ThreeFacesResult threefaces_exact(const PlaneGraph& g, std::uint64_t node_cap = 10'000'000);

// Number of vertices of degree at most three.
int degree3_census(const Graph& g);

// BFS layers from a face with the per-layer quantities and identity checks.
struct LayerProfile {
    int base_face = -1;
    int depth = 0;                        // requested K
    std::vector<std::vector<int>> layers; // C_0..C_K (present layers only)
    std::vector<char> is_cycle;
    std::vector<char> one_below_ok;       // <= 1 neighbor in lower layers
    std::vector<long long> n_fk;          // sum over C_k of (n(v) - 1)
    std::vector<long long> g_fk;          // sum of |f'| - 4 over faces at distance k+1
    std::vector<long long> c_fk;          // sum over C_k of (deg(v) - b_k), b_0 = 3 else 4
    std::vector<char> size_identity_applicable, size_identity_holds;
    std::vector<char> cumulative_identity_applicable, cumulative_identity_holds;

    // Diagnostics evaluated when 10 layers exist. Real graphs may and
    // should violate them.
    bool diagnostics_available = false;
    long long eight_sum_n = 0;            // 8 * sum_{k<=9} n(f,k)
    bool eight_sum_threshold = false;     // >= 249
    long long union_size_c0_c9 = 0;
    bool union_size_threshold = false;    // >= 184
    bool nf1_threshold = false;           // n(f,1) >= 2

    std::string to_json() const;
};

LayerProfile layer_profile(const PlaneGraph& g, int face, int depth);

// Certified 2-degenerate set on the c x k cylindrical grid: one vertex
// removed from every even-indexed cycle layer; size ck - floor(k/2).
Solution cylgrid_solution(int c, int k);

struct ChargeLedger {
    struct Transfer {
        bool from_face = false;
        int from = -1;
        bool to_face = false;
        int to = -1;
        Rational amount;
        std::string rule;
    };
    std::vector<Rational> vertex_initial, vertex_final;
    std::vector<Rational> face_initial, face_final;
    std::vector<Transfer> transfers;
    Rational total_initial, total_final;
    // discharge rule set 3: charge received by each selected face in phase 2
    std::vector<std::pair<int, Rational>> received;
    std::vector<std::string> warnings;

    std::string to_json() const;
};

// Outer-cycle discharging: vertices on the outer cycle C start at deg - 2,
// interior vertices at deg - 4, faces at |f| - 4; every C-vertex sends one
// unit to each adjacent interior degree-3 vertex. Total must equal
// -8 + 2|V(C)|.
ChargeLedger discharge_section2(const PlaneGraph& h, int outer_face);

// Radius-9 discharging toward a set of faces F: each f in F sends 1 to
// every incident vertex, then every other face and vertex within face
// distance 9 of some f in F forwards its entire charge to that f. Total
// must equal -8 (connected graph). Faces of F closer than 21 apart are
// reported as warnings and ties resolved toward the lowest face id.
ChargeLedger discharge_section3(const PlaneGraph& g, const std::vector<int>& faces);

struct BigOReport {
    int n = 0;
    int n3 = 0;
    int rho3 = 0;
    bool rho3_optimal = true;
    Rational bound;  // max(0, 7n/8 - 18*(rho3 - 2))
    int coefficient = kBigOCoefficient;
    int separator_threshold = kSeparatorThreshold;

    std::string to_json() const;
};

BigOReport bigO_bound_report(const PlaneGraph& g);

}  // namespace planedeg
