#include "planedeg/degeneracy.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "json.hpp"

namespace planedeg {

std::string Solution::to_json() const {
    nlohmann::json j;
    j["kept"] = kept;
    j["order"] = order;
    j["k"] = k;
    return j.dump();
}

Solution Solution::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Solution s;
    s.kept = j.at("kept").get<std::vector<int>>();
    s.order = j.at("order").get<std::vector<int>>();
    s.k = j.at("k").get<int>();
    return s;
}

CertifyResult certify_k_degenerate(const Graph& g, const std::vector<int>& subset, int k) {
    if (k < 0) throw Error("certify_k_degenerate: k must be nonnegative");
    std::vector<char> in(g.n, 0);
    for (int v : subset) {
        if (v < 0 || v >= g.n) throw Error("certify_k_degenerate: vertex out of range");
        in[v] = 1;
    }
    std::vector<int> deg(g.n, 0);
    std::vector<int> alive;
    for (int v = 0; v < g.n; ++v)
        if (in[v]) {
            alive.push_back(v);
            for (int w : g.adj[v])
                if (in[w]) ++deg[v];
        }

    CertifyResult res;
    res.solution.k = k;
    res.solution.kept = alive;

    std::vector<char> removed(g.n, 0);
    std::size_t remaining = alive.size();
    while (remaining > 0) {
        int pick = -1;
        for (int v : alive) {
            if (!removed[v] && deg[v] <= k) {
                pick = v;
                break;
            }
        }
        if (pick == -1) {
            for (int v : alive)
                if (!removed[v]) res.core_witness.push_back(v);
            res.ok = false;
            return res;
        }
        removed[pick] = 1;
        --remaining;
        res.solution.order.push_back(pick);
        for (int w : g.adj[pick])
            if (in[w] && !removed[w]) --deg[w];
    }
    res.ok = true;
    return res;
}

CertifyResult certify_k_degenerate(const Graph& g, int k) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    return certify_k_degenerate(g, all, k);
}

bool verify_solution(const Graph& g, const Solution& s) {
    std::vector<char> kept(g.n, 0), removed(g.n, 0);
    for (int v : s.kept) {
        if (v < 0 || v >= g.n) return false;
        kept[v] = 1;
    }
    if (s.order.size() != s.kept.size()) return false;
    for (int v : s.order) {
        if (v < 0 || v >= g.n || !kept[v] || removed[v]) return false;
        int d = 0;
        for (int w : g.adj[v])
            if (kept[w] && !removed[w]) ++d;
        if (d > s.k) return false;
        removed[v] = 1;
    }
    return true;
}

int degeneracy(const Graph& g) {
    std::vector<int> deg(g.n);
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    int best = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
        best = std::max(best, deg[pick]);
        removed[pick] = 1;
        for (int w : g.adj[pick])
            if (!removed[w]) --deg[w];
    }
    return best;
}

namespace {

// 128-bit vertex set for the exact solver.
struct Bits {
    std::uint64_t w0 = 0, w1 = 0;

    static Bits full(int n) {
        Bits b;
        if (n >= 64) {
            b.w0 = ~0ULL;
            b.w1 = n == 128 ? ~0ULL : (1ULL << (n - 64)) - 1;
        } else {
            b.w0 = n == 64 ? ~0ULL : (1ULL << n) - 1;
        }
        return b;
    }
    bool test(int i) const { return i < 64 ? (w0 >> i) & 1 : (w1 >> (i - 64)) & 1; }
    void set(int i) { i < 64 ? w0 |= 1ULL << i : w1 |= 1ULL << (i - 64); }
    void reset(int i) { i < 64 ? w0 &= ~(1ULL << i) : w1 &= ~(1ULL << (i - 64)); }
    int count() const { return std::popcount(w0) + std::popcount(w1); }
    bool any() const { return w0 || w1; }
    friend Bits operator&(Bits a, Bits b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
    friend Bits operator|(Bits a, Bits b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
    friend bool operator==(Bits a, Bits b) { return a.w0 == b.w0 && a.w1 == b.w1; }
};

struct ExactSolver {
    int n, k;
    std::vector<Bits> adj;
    std::uint64_t budget, nodes = 0;
    bool exhausted = false;
    Bits best;
    int best_size = -1;

    bool k_degenerate(Bits mask) const {
        bool progress = true;
        while (mask.any() && progress) {
            progress = false;
            for (int v = 0; v < n; ++v) {
                if (!mask.test(v)) continue;
                if ((adj[v] & mask).count() <= k) {
                    mask.reset(v);
                    progress = true;
                }
            }
        }
        return !mask.any();
    }

    // Lexicographic tiebreak keeps the reported certificate independent of
    // exploration details.
    void offer(Bits cand, int size) {
        if (size > best_size) {
            best = cand;
            best_size = size;
            return;
        }
        if (size == best_size) {
            if (cand.w0 < best.w0 || (cand.w0 == best.w0 && cand.w1 < best.w1)) best = cand;
        }
    }

    void rec(Bits in, Bits und) {
        if (nodes >= budget) {
            exhausted = true;
            return;
        }
        ++nodes;
        Bits cand = in | und;
        int avail = cand.count();
        if (avail <= best_size) return;
        if (k_degenerate(cand)) {
            offer(cand, avail);
            return;
        }
        // Branch vertex: maximum degree in the candidate subgraph, lowest id.
        int v = -1, vd = -1;
        for (int u = 0; u < n; ++u) {
            if (!und.test(u)) continue;
            int d = (adj[u] & cand).count();
            if (d > vd) {
                vd = d;
                v = u;
            }
        }
        if (v == -1) return;  // und empty but in not degenerate: dead branch
        Bits und2 = und;
        und2.reset(v);
        rec(in, und2);
        Bits in2 = in;
        in2.set(v);
        if (k_degenerate(in2)) rec(in2, und2);
    }
};

}  // namespace

ExactResult max_induced_kdeg_exact(const Graph& g, int k, std::uint64_t budget) {
    if (g.n > 128) throw Error("max_induced_kdeg_exact: graphs above 128 vertices are rejected");
    if (k < 0) throw Error("max_induced_kdeg_exact: k must be nonnegative");
    ExactSolver s;
    s.n = g.n;
    s.k = k;
    s.budget = budget;
    s.adj.assign(g.n, {});
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) s.adj[v].set(w);

    // Greedy initial solution: peel the stuck core by its max-degree vertex.
    Bits mask = Bits::full(g.n);
    while (true) {
        Bits core = mask;
        bool progress = true;
        while (core.any() && progress) {
            progress = false;
            for (int v = 0; v < g.n; ++v)
                if (core.test(v) && (s.adj[v] & core).count() <= k) {
                    core.reset(v);
                    progress = true;
                }
        }
        if (!core.any()) break;
        int pick = -1, pd = -1;
        for (int v = 0; v < g.n; ++v)
            if (core.test(v)) {
                int d = (s.adj[v] & core).count();
                if (d > pd) {
                    pd = d;
                    pick = v;
                }
            }
        mask.reset(pick);
    }
    s.offer(mask, mask.count());

    s.rec(Bits{}, Bits::full(g.n));

    ExactResult res;
    res.nodes = s.nodes;
    res.optimal = !s.exhausted;
    std::vector<int> kept;
    for (int v = 0; v < g.n; ++v)
        if (s.best.test(v)) kept.push_back(v);
    auto cert = certify_k_degenerate(g, kept, k);
    if (!cert.ok) throw Error("max_induced_kdeg_exact: internal certificate failure");
    res.best = cert.solution;
    return res;
}

int brute_force_oracle(const Graph& g, int k) {
    if (g.n > 20) throw Error("brute_force_oracle: n too large");
    if (g.n == 0) return 0;
    std::vector<std::uint32_t> adj(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) adj[v] |= 1u << w;

    auto subset_ok = [&](std::uint32_t mask) {
        bool progress = true;
        while (mask && progress) {
            progress = false;
            for (int v = 0; v < g.n; ++v) {
                if (!(mask >> v & 1)) continue;
                if (std::popcount(adj[v] & mask) <= k) {
                    mask &= ~(1u << v);
                    progress = true;
                }
            }
        }
        return mask == 0;
    };

    for (int size = g.n; size >= 1; --size) {
        // Gosper's hack over all masks with `size` bits.
        std::uint32_t mask = (size == 32) ? ~0u : (1u << size) - 1;
        std::uint32_t limit = 1u << g.n;
        while (mask < limit) {
            if (subset_ok(mask)) return size;
            std::uint32_t c = mask & -mask;
            std::uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return 0;
}

}  // namespace planedeg
