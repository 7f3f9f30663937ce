#include "sgm/stats.hpp"

#include <queue>
#include <vector>

namespace sgm {

namespace {

bool two_colorable(const Graph& g) {
    const long long n = g.vertex_count();
    std::vector<signed char> color(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = static_cast<signed char>(1 - color[u]);
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Any independent set uses at most one endpoint per matching edge, so
// n minus a maximal matching size bounds the independence number.
long long greedy_maximal_matching_size(const Graph& g) {
    const long long n = g.vertex_count();
    std::vector<char> matched(static_cast<std::size_t>(n), 0);
    long long size = 0;
    for (int u = 0; u < n; ++u) {
        if (matched[u]) continue;
        for (int v : g.neighbors(u)) {
            if (v > u && !matched[v]) {
                matched[u] = matched[v] = 1;
                ++size;
                break;
            }
        }
    }
    return size;
}

} // namespace

long long degeneracy(const Graph& g) {
    const long long n = g.vertex_count();
    if (n == 0) return 0;
    // Matula-Beck bucket peeling in O(n + m).
    std::vector<int> deg(static_cast<std::size_t>(n));
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(max_deg) + 1);
    for (int v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    long long degen = 0;
    int cursor = 0;
    for (long long processed = 0; processed < n;) {
        while (cursor <= max_deg && buckets[cursor].empty()) ++cursor;
        int v = buckets[cursor].back();
        buckets[cursor].pop_back();
        if (removed[v] || deg[v] != cursor) continue; // stale bucket entry
        removed[v] = 1;
        ++processed;
        degen = std::max<long long>(degen, cursor);
        for (int w : g.neighbors(v)) {
            if (!removed[w]) {
                --deg[w];
                buckets[deg[w]].push_back(w);
                if (deg[w] < cursor) cursor = deg[w];
            }
        }
    }
    return degen;
}

GraphStats compute_stats(const Graph& g) {
    GraphStats s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    for (int v = 0; v < s.n; ++v) {
        long long d = g.degree(v);
        s.d2 += d * (d - 1);
        s.comp_d2 += (s.n - 1 - d) * (s.n - 2 - d);
    }
    s.comp_m = s.n * (s.n - 1) / 2 - s.m;
    s.is_bipartite = two_colorable(g);
    s.alpha_upper = s.n - greedy_maximal_matching_size(g);
    // Every clique survives in the degeneracy core.
    s.omega_upper = s.n == 0 ? 0 : degeneracy(g) + 1;
    return s;
}

} // namespace sgm
