#include "bcp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

#include "bcp/rng.hpp"

namespace bcp {

namespace {

std::string strip_bom(const std::string& text) {
    if (text.size() >= 3 && text[0] == '\xEF' && text[1] == '\xBB' && text[2] == '\xBF')
        return text.substr(3);
    return text;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
    return lines;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

bool is_comment_or_blank(const std::vector<std::string>& toks) {
    return toks.empty() || toks[0][0] == '#';
}

}  // namespace

int Graph::vertex_by_token(const std::string& token) const {
    if (!labels.empty()) {
        for (int v = 0; v < n; ++v)
            if (labels[v] == token) return v;
        return -1;
    }
    int value = -1;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || p != token.data() + token.size()) return -1;
    return (value >= 0 && value < n) ? value : -1;
}

std::string Graph::to_edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = adj[u].next(u + 1); v >= 0; v = adj[u].next(v + 1))
            edges.emplace_back(u, v);

    for (int v = 0; v < n; ++v)
        if (degree(v) == 0)
            throw std::invalid_argument("isolated vertex " + label_of(v) +
                                        " cannot be written as an edge list");

    // Emit introduction edges first so that token first appearances happen in
    // id order; reparsing then reproduces the exact same ids.
    std::set<std::pair<int, int>> emitted;
    std::ostringstream out;
    std::vector<bool> seen(n, false);
    auto emit = [&](int u, int v) {
        out << label_of(u) << ' ' << label_of(v) << '\n';
        emitted.insert({u, v});
        seen[u] = seen[v] = true;
    };
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        int w = adj[v].first();
        if (w < v) {
            emit(w, v);
        } else {
            emit(v, w);
        }
    }
    for (auto& [u, v] : edges)
        if (!emitted.count({u, v})) out << label_of(u) << ' ' << label_of(v) << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    const auto lines = split_lines(strip_bom(text));

    std::unordered_map<std::string, int> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&](const std::string& tok) {
        auto it = ids.find(tok);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(labels.size());
        ids.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };

    for (size_t i = 0; i < lines.size(); ++i) {
        const auto toks = tokenize(lines[i]);
        if (is_comment_or_blank(toks)) continue;
        const int lineno = static_cast<int>(i) + 1;
        if (toks.size() != 2)
            throw parse_error(lineno, "expected two vertex tokens, got " +
                                          std::to_string(toks.size()));
        if (toks[0] == toks[1])
            throw parse_error(lineno, "self-loop '" + toks[0] + " " + toks[1] + "'");
        edges.emplace_back(intern(toks[0]), intern(toks[1]));
    }

    Graph g(static_cast<int>(labels.size()));
    g.labels = std::move(labels);
    for (auto& [u, v] : edges) g.adj[u].set(v), g.adj[v].set(u);
    return g;
}

VertexSet parse_vertex_set(const std::string& text, const Graph& g) {
    const auto lines = split_lines(strip_bom(text));
    VertexSet s(g.n);
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto toks = tokenize(lines[i]);
        if (is_comment_or_blank(toks)) continue;
        for (const auto& tok : toks) {
            int v = g.vertex_by_token(tok);
            if (v < 0)
                throw parse_error(static_cast<int>(i) + 1, "unknown vertex token '" + tok + "'");
            s.bits.set(v);
        }
    }
    return s;
}

WeightMap parse_weight_map(const std::string& text, const Graph& g) {
    const auto lines = split_lines(strip_bom(text));
    WeightMap w;
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto toks = tokenize(lines[i]);
        if (is_comment_or_blank(toks)) continue;
        const int lineno = static_cast<int>(i) + 1;
        if (toks.size() != 2)
            throw parse_error(lineno, "expected 'vertex weight', got " +
                                          std::to_string(toks.size()) + " tokens");
        int v = g.vertex_by_token(toks[0]);
        if (v < 0) throw parse_error(lineno, "unknown vertex token '" + toks[0] + "'");
        std::int64_t value = 0;
        auto [p, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), value);
        if (ec != std::errc{} || p != toks[1].data() + toks[1].size() || value < 1)
            throw parse_error(lineno, "weight must be a positive integer, got '" + toks[1] + "'");
        if (w.weights.count(v))
            throw parse_error(lineno, "duplicate weight for vertex '" + toks[0] + "'");
        w.weights[v] = value;
    }
    return w;
}

void WeightMap::check_exactly_on(const VertexSet& b) const {
    for (int v : b.members()) {
        auto it = weights.find(v);
        if (it == weights.end())
            throw std::invalid_argument("weight missing for vertex " + std::to_string(v));
        if (it->second < 1)
            throw std::invalid_argument("weight for vertex " + std::to_string(v) +
                                        " must be >= 1");
    }
    for (auto& [v, _] : weights)
        if (!b.contains(v))
            throw std::invalid_argument("weight given for vertex " + std::to_string(v) +
                                        " outside B");
}

namespace {

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_star(int n) {
    if (n < 1) throw std::invalid_argument("star requires n >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph make_gnp(int n, double p, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gnp requires n >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp requires p in [0,1]");
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

Graph make_random_regular(int n, int d, uint64_t seed, int attempt_cap) {
    if (n < 0 || d < 0 || d >= std::max(n, 1))
        throw std::invalid_argument("random_regular requires 0 <= d < n");
    if ((static_cast<long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular requires n*d even");
    if (d == 0) return Graph(n);

    Rng rng(seed);
    std::vector<int> points(static_cast<size_t>(n) * d);
    for (size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;

    for (int attempt = 0; attempt < attempt_cap; ++attempt) {
        rng.shuffle(points);
        Graph g(n);
        bool ok = true;
        for (size_t i = 0; i + 1 < points.size() && ok; i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v || g.has_edge(u, v))
                ok = false;  // reject the whole pairing, no repair
            else
                g.add_edge(u, v);
        }
        if (ok) return g;
    }
    throw limit_error("random_regular: no simple pairing found within " +
                      std::to_string(attempt_cap) + " attempts");
}

}  // namespace

Graph generate(Family family, const GenParams& params) {
    switch (family) {
        case Family::complete: return make_complete(params.n);
        case Family::cycle: return make_cycle(params.n);
        case Family::path: return make_path(params.n);
        case Family::star: return make_star(params.n);
        case Family::petersen: return make_petersen();
        case Family::gnp: return make_gnp(params.n, params.p, params.seed);
        case Family::random_regular:
            return make_random_regular(params.n, params.d, params.seed, params.attempt_cap);
    }
    throw std::invalid_argument("unknown graph family");
}

VertexDeletion delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("delete_vertex: vertex out of range");
    VertexDeletion out;
    out.remap.assign(g.n, -1);
    for (int u = 0, next = 0; u < g.n; ++u)
        if (u != v) out.remap[u] = next++;

    out.graph = Graph(g.n - 1);
    if (!g.labels.empty()) {
        out.graph.labels.reserve(g.n - 1);
        for (int u = 0; u < g.n; ++u)
            if (u != v) out.graph.labels.push_back(g.labels[u]);
    }
    for (int u = 0; u < g.n; ++u) {
        if (u == v) continue;
        for (int w = g.adj[u].next(u + 1); w >= 0; w = g.adj[u].next(w + 1))
            if (w != v) out.graph.add_edge(out.remap[u], out.remap[w]);
    }
    return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || !g.has_edge(u, v))
        throw std::invalid_argument("delete_edge: edge absent");
    Graph out = g;
    out.adj[u].reset(v);
    out.adj[v].reset(u);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.remap.assign(g.n, -1);
    const auto members = s.members();
    for (size_t i = 0; i < members.size(); ++i) out.remap[members[i]] = static_cast<int>(i);

    out.graph = Graph(static_cast<int>(members.size()));
    if (!g.labels.empty()) {
        for (int v : members) out.graph.labels.push_back(g.labels[v]);
    }
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (g.has_edge(members[i], members[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

VertexSet remap_set(const VertexSet& s, const std::vector<int>& remap, int new_n) {
    VertexSet out(new_n);
    for (int v : s.members())
        if (remap[v] >= 0) out.bits.set(remap[v]);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.n + h.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = g.adj[u].next(u + 1); v >= 0; v = g.adj[u].next(v + 1)) out.add_edge(u, v);
    for (int u = 0; u < h.n; ++u)
        for (int v = h.adj[u].next(u + 1); v >= 0; v = h.adj[u].next(v + 1))
            out.add_edge(g.n + u, g.n + v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) out.add_edge(u, g.n + v);
    return out;
}

BlowUp blow_up(const Graph& g, const VertexSet& b, const WeightMap& w) {
    w.check_exactly_on(b);

    BlowUp out;
    out.clusters.assign(g.n, {});
    int next_id = 0;
    for (int v = 0; v < g.n; ++v) {
        const std::int64_t copies = b.contains(v) ? w.at(v) : 1;
        for (std::int64_t c = 0; c < copies; ++c) out.clusters[v].push_back(next_id++);
    }

    out.graph = Graph(next_id);
    out.b_image = VertexSet(next_id);
    for (int v : b.members())
        for (int id : out.clusters[v]) out.b_image.bits.set(id);

    for (int u = 0; u < g.n; ++u)
        for (int v = g.adj[u].next(u + 1); v >= 0; v = g.adj[u].next(v + 1))
            for (int cu : out.clusters[u])
                for (int cv : out.clusters[v]) out.graph.add_edge(cu, cv);
    return out;
}

bool is_clique(const Graph& g, const VertexSet& k) {
    const auto members = k.members();
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!g.has_edge(members[i], members[j])) return false;
    return true;
}

VertexSet n_b_of_vertex(const Graph& g, const VertexSet& b, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("n_b_of_vertex: vertex out of range");
    return VertexSet(g.adj[v] & b.bits);
}

VertexSet n_b_of_clique(const Graph& g, const VertexSet& b, const VertexSet& k) {
    if (!is_clique(g, k)) throw std::invalid_argument("n_b_of_clique: k is not a clique");
    Bitset acc = b.bits;
    for (int v : k.members()) acc &= g.adj[v];
    return VertexSet(acc);
}

Graph complement(const Graph& g) {
    Graph out(g.n);
    if (!g.labels.empty()) out.labels = g.labels;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

}  // namespace bcp
