#include "sgm/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace sgm {

Graph::Graph(long long n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) {
        throw ValidationError("vertex count must be non-negative");
    }
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ValidationError("edge endpoint out of range 0.." + std::to_string(n - 1));
        }
        if (u == v) {
            throw ValidationError("self-loop at vertex " + std::to_string(u));
        }
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += static_cast<long long>(nbrs.size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    const long long n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    long long reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n;
}

bool Graph::is_tree() const {
    return vertex_count() >= 1 && m_ == vertex_count() - 1 && is_connected();
}

namespace {

struct Token {
    std::string_view text;
    bool numeric;
    long long value; // valid when numeric
};

bool parse_numeric(std::string_view s, long long& out) {
    if (s.empty() || s.size() > 18) return false;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) return false;
    out = v;
    return true;
}

} // namespace

ParsedGraph parse_edge_list(std::string_view text) {
    struct RawEdge {
        std::string_view a, b;
        long long line;
    };
    std::vector<RawEdge> raw;
    bool all_numeric = true;
    long long max_index = -1;
    long long forced_n = -1;

    std::size_t pos = 0;
    long long line_no = 0;
    bool saw_content = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t i = line.find_first_not_of(" \t");
        if (i == std::string_view::npos) continue;
        if (line[i] == '#' || line[i] == '%') continue;

        std::vector<std::string_view> tokens;
        while (i != std::string_view::npos && i < line.size()) {
            std::size_t j = line.find_first_of(" \t", i);
            if (j == std::string_view::npos) j = line.size();
            tokens.push_back(line.substr(i, j - i));
            i = line.find_first_not_of(" \t", j);
        }
        if (tokens.size() != 2) {
            throw ParseError("expected two whitespace-separated labels, got " +
                                 std::to_string(tokens.size()),
                             line_no);
        }

        // Header "n <N>" is honored only as the first content line.
        if (!saw_content && tokens[0] == "n") {
            long long n_val = 0;
            if (!parse_numeric(tokens[1], n_val)) {
                throw ParseError("malformed vertex-count header", line_no);
            }
            forced_n = n_val;
            saw_content = true;
            continue;
        }
        saw_content = true;

        raw.push_back({tokens[0], tokens[1], line_no});
        for (auto t : {tokens[0], tokens[1]}) {
            long long v = 0;
            if (all_numeric && parse_numeric(t, v)) {
                max_index = std::max(max_index, v);
            } else {
                all_numeric = false;
            }
        }
    }

    ParsedGraph out;
    std::vector<std::pair<int, int>> edge_list;
    edge_list.reserve(raw.size());

    if (all_numeric) {
        long long n = std::max(forced_n, max_index + 1);
        if (forced_n >= 0 && max_index >= forced_n) {
            throw ValidationError("vertex index " + std::to_string(max_index) +
                                  " exceeds header vertex count " + std::to_string(forced_n));
        }
        for (const auto& e : raw) {
            long long a = 0, b = 0;
            parse_numeric(e.a, a);
            parse_numeric(e.b, b);
            if (a == b) {
                throw ParseError("self-loop on vertex " + std::string(e.a), e.line);
            }
            edge_list.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
        out.graph = Graph(n, std::move(edge_list));
        out.labels.reserve(static_cast<std::size_t>(n));
        for (long long v = 0; v < n; ++v) out.labels.push_back(std::to_string(v));
        return out;
    }

    // Token mode: dense indices in first-seen order.
    std::unordered_map<std::string_view, int> index_of;
    auto intern = [&](std::string_view t, long long line) {
        auto it = index_of.find(t);
        if (it != index_of.end()) return it->second;
        int idx = static_cast<int>(out.labels.size());
        if (forced_n >= 0 && idx >= forced_n) {
            throw ParseError("more distinct labels than the header vertex count", line);
        }
        index_of.emplace(t, idx);
        out.labels.emplace_back(t);
        return idx;
    };
    for (const auto& e : raw) {
        if (e.a == e.b) {
            throw ParseError("self-loop on vertex '" + std::string(e.a) + "'", e.line);
        }
        int a = intern(e.a, e.line);
        int b = intern(e.b, e.line);
        edge_list.emplace_back(a, b);
    }
    long long n = forced_n >= 0 ? forced_n : static_cast<long long>(out.labels.size());
    for (long long v = static_cast<long long>(out.labels.size()); v < n; ++v) {
        out.labels.push_back(std::to_string(v));
    }
    out.graph = Graph(n, std::move(edge_list));
    return out;
}

std::string serialize(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph complete(long long n) {
    if (n < 0) throw ValidationError("complete(n) requires n >= 0");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph star(long long n) {
    if (n < 1) throw ValidationError("star(n) requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(long long a, long long b) {
    if (a < 0 || b < 0) throw ValidationError("complete_bipartite requires a, b >= 0");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(a * b));
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, static_cast<int>(a) + v);
    return Graph(a + b, std::move(edges));
}

Graph matching(long long d) {
    if (d < 0) throw ValidationError("matching(d) requires d >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < d; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return Graph(2 * d, std::move(edges));
}

Graph path(long long n) {
    if (n < 0) throw ValidationError("path(n) requires n >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph empty_graph(long long n) {
    if (n < 0) throw ValidationError("empty(n) requires n >= 0");
    return Graph(n, {});
}

namespace {

// Unbiased bounded sampling on top of mt19937_64; std::uniform_int_distribution
// is implementation-defined, this keeps seeded outputs portable.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    unsigned __int128 full = static_cast<unsigned __int128>(1) << 64;
    std::uint64_t usable_end = static_cast<std::uint64_t>(full - full % bound);
    for (;;) {
        std::uint64_t x = rng();
        if (usable_end == 0 || x < usable_end) return x % bound;
    }
}

} // namespace

Graph random_gnm(long long n, long long m, std::uint64_t seed) {
    if (n < 0 || m < 0) throw ValidationError("gnm requires n, m >= 0");
    long long max_m = n * (n - 1) / 2;
    if (m > max_m) {
        throw ValidationError("gnm: m = " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                              std::to_string(max_m));
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    if (n <= 1500) {
        // Partial Fisher-Yates over all pairs: uniform even when m is dense.
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<std::size_t>(max_m));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (long long i = 0; i < m; ++i) {
            std::uint64_t j = i + uniform_below(rng, static_cast<std::uint64_t>(max_m - i));
            std::swap(pairs[static_cast<std::size_t>(i)], pairs[static_cast<std::size_t>(j)]);
            edges.push_back(pairs[static_cast<std::size_t>(i)]);
        }
    } else {
        std::unordered_set<std::uint64_t> chosen;
        chosen.reserve(static_cast<std::size_t>(m) * 2);
        while (static_cast<long long>(chosen.size()) < m) {
            std::uint64_t u = uniform_below(rng, static_cast<std::uint64_t>(n));
            std::uint64_t v = uniform_below(rng, static_cast<std::uint64_t>(n));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            std::uint64_t key = u * static_cast<std::uint64_t>(n) + v;
            if (chosen.insert(key).second) {
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph random_tree(long long n, std::uint64_t seed) {
    if (n < 0) throw ValidationError("tree(n) requires n >= 0");
    if (n <= 1) return empty_graph(n);
    if (n == 2) return path(2);
    // Uniform labeled tree via a random Pruefer sequence.
    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (auto& x : pruefer) x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));

    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : pruefer) ++deg[x];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int x : pruefer) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

} // namespace sgm
