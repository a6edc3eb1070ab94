#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcp/bitset.hpp"

namespace bcp {

// Input files that cannot be understood. `line` is 1-based, 0 when the
// error is not tied to a specific line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// A configured resource cap was hit (enumeration caps, search node/time caps,
// random-regular retry caps).
class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on dense ids 0..n-1. Adjacency is kept as one
// bitset row per vertex; rows stay symmetric with an empty diagonal. Values
// are treated as immutable once built.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;
    std::vector<std::string> labels;  // original tokens for parsed graphs; empty otherwise

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, Bitset(n_)) {}

    bool has_edge(int u, int v) const { return u != v && adj[u].test(v); }
    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj[u].set(v);
        adj[v].set(u);
    }
    int degree(int v) const { return adj[v].count(); }
    long edge_count() const {
        long twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }
    // Common degree if the graph is regular.
    std::optional<int> regular_degree() const {
        if (n == 0) return std::nullopt;
        int d = degree(0);
        for (int v = 1; v < n; ++v)
            if (degree(v) != d) return std::nullopt;
        return d;
    }
    std::string label_of(int v) const {
        return labels.empty() ? std::to_string(v) : labels[v];
    }
    // Id for a token: label lookup for parsed graphs, decimal id otherwise.
    // Returns -1 when unknown.
    int vertex_by_token(const std::string& token) const;

    // Edge-list text that reparses to this exact graph (same ids, same
    // labels). Throws for isolated vertices, which the format cannot express.
    std::string to_edge_list() const;

    bool operator==(const Graph&) const = default;
};

// A subset of the host graph's vertices.
struct VertexSet {
    Bitset bits;

    VertexSet() = default;
    explicit VertexSet(int host_n) : bits(host_n) {}
    explicit VertexSet(Bitset b) : bits(std::move(b)) {}

    static VertexSet all(const Graph& g) {
        VertexSet s(g.n);
        for (int v = 0; v < g.n; ++v) s.bits.set(v);
        return s;
    }
    static VertexSet of(const std::vector<int>& vs, int host_n) {
        VertexSet s(host_n);
        for (int v : vs) s.bits.set(v);
        return s;
    }

    int host_n() const { return bits.universe(); }
    int size() const { return bits.count(); }
    bool empty() const { return bits.empty(); }
    bool contains(int v) const { return bits.test(v); }
    std::vector<int> members() const { return bits.to_vector(); }

    bool operator==(const VertexSet&) const = default;
};

// Positive integer weights on the members of a designated B.
struct WeightMap {
    std::map<int, std::int64_t> weights;

    static WeightMap uniform(const VertexSet& b, std::int64_t w) {
        WeightMap m;
        for (int v : b.members()) m.weights[v] = w;
        return m;
    }
    // Throws unless the domain is exactly b's members with all weights >= 1.
    void check_exactly_on(const VertexSet& b) const;
    std::int64_t at(int v) const { return weights.at(v); }
};

Graph parse_edge_list(const std::string& text);
VertexSet parse_vertex_set(const std::string& text, const Graph& g);
WeightMap parse_weight_map(const std::string& text, const Graph& g);

enum class Family { complete, cycle, path, star, petersen, gnp, random_regular };

struct GenParams {
    int n = 0;
    int d = 0;          // random_regular only
    double p = 0.0;     // gnp only
    uint64_t seed = 0;
    int attempt_cap = 1000;  // random_regular rejection cap
};

Graph generate(Family family, const GenParams& params);

// remap[old_id] = new id, or -1 for removed vertices.
struct VertexDeletion {
    Graph graph;
    std::vector<int> remap;
};
VertexDeletion delete_vertex(const Graph& g, int v);

Graph delete_edge(const Graph& g, int u, int v);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> remap;  // remap[old_id] = new id or -1
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Push a vertex set through a deletion/induced-subgraph remap.
VertexSet remap_set(const VertexSet& s, const std::vector<int>& remap, int new_n);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Each v in b becomes an independent cluster of w(v) copies; edges inside b
// become complete bipartite between clusters; copies keep their original's
// edges to V \ b. clusters[v] lists the new ids for every original vertex
// (a singleton for v outside b).
struct BlowUp {
    Graph graph;
    VertexSet b_image;
    std::vector<std::vector<int>> clusters;
};
BlowUp blow_up(const Graph& g, const VertexSet& b, const WeightMap& w);

// N_B(v) and N_B(K): the members of b adjacent to v, resp. to every vertex
// of the clique k (all of b for k empty).
VertexSet n_b_of_vertex(const Graph& g, const VertexSet& b, int v);
VertexSet n_b_of_clique(const Graph& g, const VertexSet& b, const VertexSet& k);

bool is_clique(const Graph& g, const VertexSet& k);
Graph complement(const Graph& g);

}  // namespace bcp
