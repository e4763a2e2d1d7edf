#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mycimm/errors.hpp"

namespace mycimm {

// Emitted JSON keeps insertion order so documents read in schema order.
using Json = nlohmann::ordered_json;

using Edge = std::pair<int, int>; // normalized u < v

// Simple undirected graph over dense vertex ids 0..n-1. Immutable after
// construction; all operations on it are pure, so values can be shared
// freely across threads.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    const std::vector<std::string>& labels() const { return labels_; }
    // "(v3,2)"-style label when present, otherwise the numeric id.
    std::string vertex_name(int v) const;

    // Equality is structural (n + edge set); labels are display metadata.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;             // sorted, unique, u < v
    std::vector<std::vector<int>> adj_;   // sorted neighbor lists
    std::vector<std::string> labels_;     // empty or size n
};

// Undirected multigraph; only the split-off executor produces multiplicities.
class Multigraph {
public:
    explicit Multigraph(int n) : n_(n) {
        if (n < 0) throw InputError("multigraph: negative vertex count");
    }
    explicit Multigraph(const Graph& g);

    int n() const { return n_; }
    int multiplicity(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v); // InputError if multiplicity is 0
    std::int64_t total_multiplicity() const;
    int degree(int v) const; // counts multiplicities
    const std::map<Edge, int>& edge_multiplicities() const { return mult_; }

private:
    Edge key(int u, int v) const;

    int n_ = 0;
    std::map<Edge, int> mult_;
};

struct FamilySpec {
    enum class Kind { path, cycle, complete, complete_bipartite, circulant };

    Kind kind = Kind::path;
    int n = 0;               // path/cycle/complete order, circulant order
    int a = 0, b = 0;        // complete_bipartite sides
    std::vector<int> jumps;  // circulant jumps, each in [1, n/2]

    static FamilySpec path(int n) { return {Kind::path, n, 0, 0, {}}; }
    static FamilySpec cycle(int n) { return {Kind::cycle, n, 0, 0, {}}; }
    static FamilySpec complete(int t) { return {Kind::complete, t, 0, 0, {}}; }
    static FamilySpec complete_bipartite(int a, int b) {
        return {Kind::complete_bipartite, 0, a, b, {}};
    }
    static FamilySpec circulant(int n, std::vector<int> jumps) {
        return {Kind::circulant, n, 0, 0, std::move(jumps)};
    }
};

// Canonical vertex order: path/cycle vertices consecutive, bipartite sides
// contiguous (side a first), circulant jumps applied mod n.
Graph generate_family(const FamilySpec& spec);

// graph6 short form, n <= 62. Longer inputs are rejected.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

std::map<int, int> degree_histogram(const Graph& g);

// JSON graph form {"n": int, "edges": [[u,v],...], "labels": [...]}.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

} // namespace mycimm
