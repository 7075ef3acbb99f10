#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "planedeg/errors.hpp"

namespace planedeg {

// Plain adjacency-list graph, no embedding. Used by everything that only
// needs the abstract structure (degeneracy, blocks, cube recognition) and
// as the landing type for graph6 input.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n) : n(n), adj(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n || u == v)
                throw Error("from_edges: bad edge endpoint");
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        return g;
    }

    int m() const {
        std::size_t s = 0;
        for (const auto& a : adj) s += a.size();
        return static_cast<int>(s / 2);
    }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool adjacent(int u, int v) const {
        for (int w : adj[u])
            if (w == v) return true;
        return false;
    }

    int min_degree() const {
        int d = n == 0 ? 0 : degree(0);
        for (int v = 1; v < n; ++v) d = std::min(d, degree(v));
        return d;
    }

    std::vector<int> component_ids() const {
        std::vector<int> comp(n, -1);
        int c = 0;
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1) continue;
            stack.push_back(s);
            comp[s] = c;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u])
                    if (comp[w] == -1) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
            }
            ++c;
        }
        return comp;
    }
    int component_count() const {
        auto c = component_ids();
        return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
    }

    // Induced subgraph; vertices renumbered in ascending order of `keep`.
    Graph induced(std::vector<int> keep) const {
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        std::vector<int> newid(n, -1);
        for (std::size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i);
        Graph g(static_cast<int>(keep.size()));
        for (int v : keep)
            for (int w : adj[v])
                if (newid[w] != -1) g.adj[newid[v]].push_back(newid[w]);
        return g;
    }

    bool has_triangle() const {
        std::vector<std::vector<int>> sorted = adj;
        for (auto& a : sorted) std::sort(a.begin(), a.end());
        for (int u = 0; u < n; ++u)
            for (int v : adj[u]) {
                if (v <= u) continue;
                const auto& a = sorted[u];
                const auto& b = sorted[v];
                std::size_t i = 0, j = 0;
                while (i < a.size() && j < b.size()) {
                    if (a[i] == b[j]) return true;
                    if (a[i] < b[j])
                        ++i;
                    else
                        ++j;
                }
            }
        return false;
    }

    // Two-coloring; empty result when an odd cycle exists.
    std::vector<int> bipartition() const {
        std::vector<int> side(n, -1);
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
            if (side[s] != -1) continue;
            side[s] = 0;
            stack.push_back(s);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u]) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[u];
                        stack.push_back(w);
                    } else if (side[w] == side[u]) {
                        return {};
                    }
                }
            }
        }
        return side;
    }
};

}  // namespace planedeg
