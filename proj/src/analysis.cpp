#include "planedeg/analysis.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "planedeg/toolkit.hpp"

namespace planedeg {

int degree3_census(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 3) ++c;
    return c;
}

namespace {

struct CoverSearch {
    const std::vector<std::vector<int>>& covers;  // demand index -> candidate faces
    const std::vector<std::vector<int>>& face_demand;  // face -> demand indices
    int n_demand;
    std::uint64_t cap, nodes = 0;
    bool exhausted = false;
    std::vector<int> best;
    std::vector<int> chosen;
    std::vector<int> covered;  // cover multiplicity per demand vertex

    void rec() {
        if (nodes >= cap) {
            exhausted = true;
            return;
        }
        ++nodes;
        if (!best.empty() && chosen.size() + 1 > best.size()) return;
        int pick = -1;
        for (int i = 0; i < n_demand; ++i)
            if (covered[i] == 0 && (pick == -1 || covers[i].size() < covers[pick].size()))
                pick = i;
        if (pick == -1) {
            if (best.empty() || chosen.size() < best.size()) best = chosen;
            return;
        }
        if (!best.empty() && chosen.size() + 1 >= best.size()) return;
        for (int f : covers[pick]) {
            chosen.push_back(f);
            for (int d : face_demand[f]) ++covered[d];
            rec();
            for (int d : face_demand[f]) --covered[d];
            chosen.pop_back();
            if (exhausted) return;
        }
    }
};

}  // namespace

ThreeFacesResult threefaces_exact(const PlaneGraph& g, std::uint64_t node_cap) {
    ThreeFacesResult res;
    std::vector<int> demand;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 3) demand.push_back(v);
    if (demand.empty()) return res;

    std::vector<int> demand_index(g.n(), -1);
    for (std::size_t i = 0; i < demand.size(); ++i) demand_index[demand[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> covers(demand.size());
    std::vector<std::vector<int>> face_demand(g.face_count());
    for (int f = 0; f < g.face_count(); ++f)
        for (int v : g.faces()[f].vertex_set)
            if (demand_index[v] != -1) {
                covers[demand_index[v]].push_back(f);
                face_demand[f].push_back(demand_index[v]);
            }
    for (const auto& c : covers)
        if (c.empty()) throw Error("threefaces_exact: vertex incident to no face");

    // Greedy upper bound seeds the branch and bound.
    std::vector<int> greedy;
    {
        std::vector<char> done(demand.size(), 0);
        std::size_t left = demand.size();
        while (left > 0) {
            int bestf = -1, gain = -1;
            for (int f = 0; f < g.face_count(); ++f) {
                int s = 0;
                for (int d : face_demand[f])
                    if (!done[d]) ++s;
                if (s > gain) {
                    gain = s;
                    bestf = f;
                }
            }
            greedy.push_back(bestf);
            for (int d : face_demand[bestf])
                if (!done[d]) {
                    done[d] = 1;
                    --left;
                }
        }
    }

    CoverSearch cs{covers, face_demand, static_cast<int>(demand.size()), node_cap};
    cs.best = greedy;
    cs.covered.assign(demand.size(), 0);
    cs.rec();
    res.witness = cs.best;
    std::sort(res.witness.begin(), res.witness.end());
    res.rho3 = static_cast<int>(res.witness.size());
    res.optimal = !cs.exhausted;
    return res;
}

LayerProfile layer_profile(const PlaneGraph& g, int face, int depth) {
    if (face < 0 || face >= g.face_count()) throw Error("layer_profile: no such face");
    if (depth < 0) throw Error("layer_profile: negative depth");
    LayerProfile p;
    p.base_face = face;
    p.depth = depth;

    auto fdist = face_distances_from(g, face);
    std::vector<int> vdist(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        for (int h : g.faces_at_vertex(v))
            if (fdist[h] != -1 && (vdist[v] == -1 || fdist[h] < vdist[v])) vdist[v] = fdist[h];

    int maxd = 0;
    for (int v = 0; v < g.n(); ++v) maxd = std::max(maxd, vdist[v]);
    int levels = std::min(depth, maxd);
    p.layers.assign(levels + 1, {});
    for (int v = 0; v < g.n(); ++v)
        if (vdist[v] != -1 && vdist[v] <= levels) p.layers[vdist[v]].push_back(v);

    int K = levels;
    p.is_cycle.assign(K + 1, 0);
    p.one_below_ok.assign(K + 1, 1);
    p.n_fk.assign(K + 1, 0);
    p.g_fk.assign(K + 1, 0);
    p.c_fk.assign(K + 1, 0);

    std::vector<int> layer_of(g.n(), -1);
    for (int k = 0; k <= K; ++k)
        for (int v : p.layers[k]) layer_of[v] = k;

    for (int k = 0; k <= K; ++k) {
        const auto& layer = p.layers[k];
        // induced cycle: connected and 2-regular within the layer
        bool cyc = layer.size() >= 3;
        for (int v : layer) {
            int din = 0;
            for (int w : g.neighbors(v))
                if (vdist[w] == k) ++din;
            if (din != 2) cyc = false;
        }
        if (cyc) {
            std::vector<int> sub = layer;
            Graph s = g.skeleton().induced(sub);
            if (s.component_count() != 1) cyc = false;
        }
        p.is_cycle[k] = cyc;

        long long c_sum = 0;
        int b_k = k == 0 ? 3 : 4;
        for (int v : layer) {
            int below = 0, above = 0;
            for (int w : g.neighbors(v)) {
                if (vdist[w] != -1 && vdist[w] < k) ++below;
                if (vdist[w] == k + 1) ++above;
            }
            if (below > 1) p.one_below_ok[k] = 0;
            c_sum += g.degree(v) - b_k;
            if (k < K) p.n_fk[k] += above - 1;
        }
        p.c_fk[k] = c_sum;
    }
    for (int f = 0; f < g.face_count(); ++f) {
        int d = fdist[f];
        if (d >= 1 && d <= K) p.g_fk[d - 1] += g.faces()[f].length() - 4;
    }

    p.size_identity_applicable.assign(K + 1, 0);
    p.size_identity_holds.assign(K + 1, 0);
    p.cumulative_identity_applicable.assign(K + 1, 0);
    p.cumulative_identity_holds.assign(K + 1, 0);

    for (int k = 0; k < K; ++k) {
        if (!p.is_cycle[k] || !p.is_cycle[k + 1]) continue;
        // The annulus between consecutive cycle layers must contain no other
        // vertices: every face at distance k+1 keeps its boundary inside
        // C_k u C_{k+1}, and at least one edge joins the two layers.
        bool clean = true;
        for (int f = 0; f < g.face_count(); ++f) {
            if (fdist[f] != k + 1) continue;
            for (int v : g.faces()[f].vertex_set)
                if (layer_of[v] != k && layer_of[v] != k + 1) clean = false;
        }
        long long between = 0;
        for (int v : p.layers[k])
            for (int w : g.neighbors(v))
                if (vdist[w] == k + 1) ++between;
        if (!clean || between == 0) continue;
        p.size_identity_applicable[k] = 1;
        long long lhs = static_cast<long long>(p.layers[k + 1].size());
        long long rhs = static_cast<long long>(p.layers[k].size()) + 2 * p.n_fk[k] + p.g_fk[k];
        p.size_identity_holds[k] = lhs == rhs;
    }
    for (int k = 0; k < K; ++k) {
        bool app = p.is_cycle[k];
        for (int k2 = 0; k2 < k; ++k2)
            if (!p.is_cycle[k2] || !p.size_identity_applicable[k2] || !p.size_identity_holds[k2])
                app = false;
        if (!app) continue;
        p.cumulative_identity_applicable[k] = 1;
        long long rhs = 0;
        for (int k2 = 0; k2 <= k; ++k2) rhs += p.c_fk[k2];
        for (int k2 = 0; k2 < k; ++k2) rhs += p.g_fk[k2];
        p.cumulative_identity_holds[k] = p.n_fk[k] == rhs;
    }

    if (K >= 9 && depth >= 9) {
        // n(f,9) needs layer 10; recompute from distances directly.
        bool full = true;
        for (int k = 0; k <= 9; ++k)
            if (p.layers[k].empty()) full = false;
        if (full) {
            p.diagnostics_available = true;
            long long sum = 0;
            for (int k = 0; k <= 8; ++k) sum += p.n_fk[k];
            long long n9 = 0;
            for (int v : p.layers[9]) {
                int above = 0;
                for (int w : g.neighbors(v))
                    if (vdist[w] == 10) ++above;
                n9 += above - 1;
            }
            if (K >= 9) sum += (9 < K) ? p.n_fk[9] : n9;
            p.eight_sum_n = 8 * sum;
            p.eight_sum_threshold = p.eight_sum_n >= 249;
            long long u = 0;
            for (int k = 0; k <= 9; ++k) u += static_cast<long long>(p.layers[k].size());
            p.union_size_c0_c9 = u;
            p.union_size_threshold = u >= 184;
            p.nf1_threshold = K >= 1 && p.n_fk[1] >= 2;
        }
    }
    return p;
}

std::string LayerProfile::to_json() const {
    nlohmann::json j;
    j["base_face"] = base_face;
    j["depth"] = depth;
    j["layers"] = layers;
    auto flags = [](const std::vector<char>& v) {
        std::vector<bool> b(v.begin(), v.end());
        return b;
    };
    j["is_cycle"] = flags(is_cycle);
    j["one_below_ok"] = flags(one_below_ok);
    j["n_fk"] = n_fk;
    j["g_fk"] = g_fk;
    j["c_fk"] = c_fk;
    j["size_identity_applicable"] = flags(size_identity_applicable);
    j["size_identity_holds"] = flags(size_identity_holds);
    j["cumulative_identity_applicable"] = flags(cumulative_identity_applicable);
    j["cumulative_identity_holds"] = flags(cumulative_identity_holds);
    j["diagnostics_available"] = diagnostics_available;
    if (diagnostics_available) {
        j["eight_sum_n"] = eight_sum_n;
        j["eight_sum_threshold_249"] = eight_sum_threshold;
        j["union_size_c0_c9"] = union_size_c0_c9;
        j["union_size_threshold_184"] = union_size_threshold;
        j["nf1_threshold_2"] = nf1_threshold;
    }
    return j.dump();
}

Solution cylgrid_solution(int c, int k) {
    if (c < 4) throw Error("cylgrid_solution: cycle length must be at least 4");
    if (k < 1) throw Error("cylgrid_solution: path length must be at least 1");
    PlaneGraph g = gen_cylindrical_grid(c, k);
    std::vector<char> drop(g.n(), 0);
    // Layers are 1-based here; every even layer loses its first vertex.
    for (int layer = 2; layer <= k; layer += 2) drop[(layer - 1) * c] = 1;
    std::vector<int> kept;
    for (int v = 0; v < g.n(); ++v)
        if (!drop[v]) kept.push_back(v);
    auto cert = certify_k_degenerate(g.skeleton(), kept, 2);
    if (!cert.ok)
        throw GuaranteeError("cylgrid_solution: construction failed certification", g.to_json());
    return cert.solution;
}

std::string ChargeLedger::to_json() const {
    nlohmann::json j;
    auto rats = [](const std::vector<Rational>& v) {
        std::vector<std::string> s;
        s.reserve(v.size());
        for (const auto& r : v) s.push_back(r.str());
        return s;
    };
    j["vertex_initial"] = rats(vertex_initial);
    j["vertex_final"] = rats(vertex_final);
    j["face_initial"] = rats(face_initial);
    j["face_final"] = rats(face_final);
    j["total_initial"] = total_initial.str();
    j["total_final"] = total_final.str();
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : transfers) {
        nlohmann::json e;
        e["from"] = (t.from_face ? "f" : "v") + std::to_string(t.from);
        e["to"] = (t.to_face ? "f" : "v") + std::to_string(t.to);
        e["amount"] = t.amount.str();
        e["rule"] = t.rule;
        ts.push_back(e);
    }
    j["transfers"] = ts;
    if (!received.empty()) {
        nlohmann::json r;
        for (const auto& [f, amt] : received) r["f" + std::to_string(f)] = amt.str();
        j["received"] = r;
    }
    j["warnings"] = warnings;
    return j.dump();
}

ChargeLedger discharge_section2(const PlaneGraph& h, int outer_face) {
    if (h.component_count() != 1) throw Error("discharge_section2: graph must be connected");
    if (h.m() == 0)
        throw Error("discharge_section2: edgeless graphs trace no faces");
    if (outer_face < 0 || outer_face >= h.face_count())
        throw Error("discharge_section2: no such face");
    const Face& of = h.faces()[outer_face];
    if (static_cast<int>(of.vertex_set.size()) != of.length())
        throw Error("discharge_section2: outer face is not a simple cycle");
    std::vector<char> on_c(h.n(), 0);
    for (int v : of.vertex_set) on_c[v] = 1;

    ChargeLedger led;
    led.vertex_initial.resize(h.n());
    led.face_initial.resize(h.face_count());
    for (int v = 0; v < h.n(); ++v)
        led.vertex_initial[v] = Rational(h.degree(v) - (on_c[v] ? 2 : 4));
    for (int f = 0; f < h.face_count(); ++f)
        led.face_initial[f] = Rational(h.faces()[f].length() - 4);
    led.vertex_final = led.vertex_initial;
    led.face_final = led.face_initial;

    for (int v : of.vertex_set)
        for (int u : h.neighbors(v))
            if (!on_c[u] && h.degree(u) == 3) {
                led.vertex_final[v] -= 1;
                led.vertex_final[u] += 1;
                led.transfers.push_back({false, v, false, u, Rational(1), "cycle-to-interior-3"});
            }

    for (const auto& r : led.vertex_initial) led.total_initial += r;
    for (const auto& r : led.face_initial) led.total_initial += r;
    for (const auto& r : led.vertex_final) led.total_final += r;
    for (const auto& r : led.face_final) led.total_final += r;

    Rational expected(-8 + 2 * static_cast<long long>(of.vertex_set.size()));
    if (led.total_initial != expected || led.total_final != expected)
        throw GuaranteeError("discharge_section2: total charge is not -8 + 2|V(C)|",
                             h.to_json());
    return led;
}

ChargeLedger discharge_section3(const PlaneGraph& g, const std::vector<int>& faces) {
    if (g.component_count() != 1) throw Error("discharge_section3: graph must be connected");
    if (g.m() == 0)
        throw Error("discharge_section3: edgeless graphs trace no faces");
    for (int f : faces)
        if (f < 0 || f >= g.face_count()) throw Error("discharge_section3: no such face");

    ChargeLedger led;
    led.vertex_initial.resize(g.n());
    led.face_initial.resize(g.face_count());
    for (int v = 0; v < g.n(); ++v) led.vertex_initial[v] = Rational(g.degree(v) - 4);
    for (int f = 0; f < g.face_count(); ++f)
        led.face_initial[f] = Rational(g.faces()[f].length() - 4);
    led.vertex_final = led.vertex_initial;
    led.face_final = led.face_initial;

    std::vector<char> in_f(g.face_count(), 0);
    for (int f : faces) in_f[f] = 1;

    // Pairwise distance precondition; tie resolution stays deterministic
    // even when violated.
    std::vector<std::vector<int>> fdist;
    for (int f : faces) fdist.push_back(face_distances_from(g, f));
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            int d = fdist[i][faces[j]];
            if (d != -1 && d < kFarApartDistance)
                led.warnings.push_back("faces " + std::to_string(faces[i]) + " and " +
                                       std::to_string(faces[j]) + " are at distance " +
                                       std::to_string(d) + " < " +
                                       std::to_string(kFarApartDistance));
        }

    // Phase 1: each selected face pays 1 to each incident vertex.
    for (std::size_t i = 0; i < faces.size(); ++i) {
        int f = faces[i];
        for (int v : g.faces()[f].vertex_set) {
            led.face_final[f] -= 1;
            led.vertex_final[v] += 1;
            led.transfers.push_back({true, f, false, v, Rational(1), "face-pays-incident"});
        }
    }

    // Phase 2: everything within face distance 9 of a selected face sends
    // its entire charge there (lowest face id on ties).
    std::vector<Rational> recv(faces.size());
    for (int v = 0; v < g.n(); ++v) {
        int target = -1, bestd = -1;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            int d = -1;
            for (int h : g.faces_at_vertex(v)) {
                int dh = fdist[i][h];
                if (dh != -1 && (d == -1 || dh < d)) d = dh;
            }
            if (d != -1 && d <= kDischargeRadius &&
                (target == -1 || d < bestd || (d == bestd && faces[i] < faces[target]))) {
                // nearest selected face; face id breaks ties
                target = static_cast<int>(i);
                bestd = d;
            }
        }
        if (target == -1) continue;
        Rational amt = led.vertex_final[v];
        if (amt.num == 0) continue;
        led.vertex_final[v] = Rational(0);
        led.face_final[faces[target]] += amt;
        recv[target] += amt;
        led.transfers.push_back({false, v, true, faces[target], amt, "forward-to-face"});
    }
    for (int f2 = 0; f2 < g.face_count(); ++f2) {
        if (in_f[f2]) continue;
        int target = -1, bestd = -1;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            int d = fdist[i][f2];
            if (d != -1 && d <= kDischargeRadius &&
                (target == -1 || d < bestd || (d == bestd && faces[i] < faces[target]))) {
                target = static_cast<int>(i);
                bestd = d;
            }
        }
        if (target == -1) continue;
        Rational amt = led.face_final[f2];
        if (amt.num == 0) continue;
        led.face_final[f2] = Rational(0);
        led.face_final[faces[target]] += amt;
        recv[target] += amt;
        led.transfers.push_back({true, f2, true, faces[target], amt, "forward-to-face"});
    }
    for (std::size_t i = 0; i < faces.size(); ++i) led.received.push_back({faces[i], recv[i]});

    for (const auto& r : led.vertex_initial) led.total_initial += r;
    for (const auto& r : led.face_initial) led.total_initial += r;
    for (const auto& r : led.vertex_final) led.total_final += r;
    for (const auto& r : led.face_final) led.total_final += r;
    if (led.total_initial != Rational(-8) || led.total_final != Rational(-8))
        throw GuaranteeError("discharge_section3: total charge is not -8", g.to_json());
    return led;
}

BigOReport bigO_bound_report(const PlaneGraph& g) {
    BigOReport rep;
    rep.n = g.n();
    rep.n3 = degree3_census(g.skeleton());
    auto tf = threefaces_exact(g);
    rep.rho3 = tf.rho3;
    rep.rho3_optimal = tf.optimal;
    Rational raw = Rational(7LL * rep.n, 8) -
                   Rational(static_cast<long long>(kBigOCoefficient) * (rep.rho3 - 2));
    rep.bound = raw < Rational(0) ? Rational(0) : raw;
    return rep;
}

std::string BigOReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["n3"] = n3;
    j["rho3"] = rho3;
    j["rho3_optimal"] = rho3_optimal;
    j["bound"] = bound.str();
    j["coefficient"] = coefficient;
    j["separator_threshold"] = separator_threshold;
    return j.dump();
}

}  // namespace planedeg
