#include "mycimm/graph.hpp"

#include <algorithm>
#include <numeric>

namespace mycimm {

namespace {

constexpr int kG6Lo = 63;  // '?'
constexpr int kG6Hi = 126; // '~'

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw InputError(std::string(what) + ": vertex " + std::to_string(v) +
                         " out of range [0," + std::to_string(n) + ")");
}

} // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 0) throw InputError("graph: negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw InputError("graph: labels must be empty or one per vertex");
    for (auto& [u, v] : edges_) {
        check_vertex(u, n_, "graph edge");
        check_vertex(v, n_, "graph edge");
        if (u == v) throw InputError("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("graph: parallel edge");
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v, n_, "neighbors");
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v, n_, "degree");
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, n_, "has_edge");
    check_vertex(v, n_, "has_edge");
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string Graph::vertex_name(int v) const {
    check_vertex(v, n_, "vertex_name");
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

Multigraph::Multigraph(const Graph& g) : n_(g.n()) {
    for (const auto& e : g.edges()) mult_[e] = 1;
}

Edge Multigraph::key(int u, int v) const {
    check_vertex(u, n_, "multigraph edge");
    check_vertex(v, n_, "multigraph edge");
    if (u == v) throw InputError("multigraph: self-loop at vertex " + std::to_string(u));
    return {std::min(u, v), std::max(u, v)};
}

int Multigraph::multiplicity(int u, int v) const {
    auto it = mult_.find(key(u, v));
    return it == mult_.end() ? 0 : it->second;
}

void Multigraph::add_edge(int u, int v) { ++mult_[key(u, v)]; }

void Multigraph::remove_edge(int u, int v) {
    auto it = mult_.find(key(u, v));
    if (it == mult_.end())
        throw InputError("multigraph: removing absent edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "}");
    if (--it->second == 0) mult_.erase(it);
}

std::int64_t Multigraph::total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto& [e, k] : mult_) total += k;
    return total;
}

int Multigraph::degree(int v) const {
    check_vertex(v, n_, "multigraph degree");
    int d = 0;
    for (const auto& [e, k] : mult_)
        if (e.first == v || e.second == v) d += k;
    return d;
}

Graph generate_family(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    std::vector<Edge> edges;
    switch (spec.kind) {
    case Kind::path: {
        if (spec.n < 1) throw InputError("path: need n >= 1");
        for (int i = 0; i + 1 < spec.n; ++i) edges.push_back({i, i + 1});
        return Graph(spec.n, std::move(edges));
    }
    case Kind::cycle: {
        if (spec.n < 3) throw InputError("cycle: need n >= 3");
        for (int i = 0; i + 1 < spec.n; ++i) edges.push_back({i, i + 1});
        edges.push_back({0, spec.n - 1});
        return Graph(spec.n, std::move(edges));
    }
    case Kind::complete: {
        if (spec.n < 1) throw InputError("complete: need n >= 1");
        for (int i = 0; i < spec.n; ++i)
            for (int j = i + 1; j < spec.n; ++j) edges.push_back({i, j});
        return Graph(spec.n, std::move(edges));
    }
    case Kind::complete_bipartite: {
        if (spec.a < 1 || spec.b < 1) throw InputError("complete_bipartite: need sides >= 1");
        for (int i = 0; i < spec.a; ++i)
            for (int j = 0; j < spec.b; ++j) edges.push_back({i, spec.a + j});
        return Graph(spec.a + spec.b, std::move(edges));
    }
    case Kind::circulant: {
        if (spec.n < 1) throw InputError("circulant: need n >= 1");
        for (int j : spec.jumps)
            if (j < 1 || 2 * j > spec.n)
                throw InputError("circulant: jump " + std::to_string(j) +
                                 " outside [1, n/2]");
        std::vector<int> jumps = spec.jumps;
        std::sort(jumps.begin(), jumps.end());
        if (std::adjacent_find(jumps.begin(), jumps.end()) != jumps.end())
            throw InputError("circulant: repeated jump");
        for (int i = 0; i < spec.n; ++i)
            for (int j : jumps) {
                int k = (i + j) % spec.n;
                edges.push_back({std::min(i, k), std::max(i, k)});
            }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end()); // j == n/2 doubles up
        return Graph(spec.n, std::move(edges));
    }
    }
    throw InputError("generate_family: unknown kind");
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError("graph6: empty input", 0);
    std::size_t pos = 0;
    if (text[0] == '~')
        throw Graph6ParseError("graph6: long form (n > 62) not supported", 0);
    int c = static_cast<unsigned char>(text[0]);
    if (c < kG6Lo || c > kG6Hi) throw Graph6ParseError("graph6: byte out of range", 0);
    int n = c - kG6Lo;
    ++pos;

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos < body)
        throw Graph6ParseError("graph6: truncated input", text.size());
    if (text.size() - pos > body)
        throw Graph6ParseError("graph6: trailing bytes", pos + body);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = static_cast<unsigned char>(text[pos + bit / 6]);
            if (byte < kG6Lo || byte > kG6Hi)
                throw Graph6ParseError("graph6: byte out of range", pos + bit / 6);
            if ((byte - kG6Lo) & (1 << (5 - bit % 6))) edges.push_back({u, v});
        }
    // padding bits must be zero
    for (; bit < body * 6; ++bit) {
        int byte = static_cast<unsigned char>(text[pos + bit / 6]);
        if (byte < kG6Lo || byte > kG6Hi)
            throw Graph6ParseError("graph6: byte out of range", pos + bit / 6);
        if ((byte - kG6Lo) & (1 << (5 - bit % 6)))
            throw Graph6ParseError("graph6: nonzero padding", pos + bit / 6);
    }
    return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
    if (g.n() > 62) throw InputError("graph6: only n <= 62 (short form) supported");
    std::string out;
    out.push_back(static_cast<char>(g.n() + kG6Lo));
    const std::size_t bits = static_cast<std::size_t>(g.n()) * (g.n() - 1) / 2;
    std::vector<int> group((bits + 5) / 6, 0);
    std::size_t bit = 0;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) group[bit / 6] |= 1 << (5 - bit % 6);
    for (int b : group) out.push_back(static_cast<char>(b + kG6Lo));
    return out;
}

std::map<int, int> degree_histogram(const Graph& g) {
    std::map<int, int> hist;
    for (int v = 0; v < g.n(); ++v) ++hist[g.degree(v)];
    return hist;
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n();
    j["edges"] = Json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("graph json: need object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw InputError("graph json: \"n\" must be an integer");
    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InputError("graph json: each edge must be [u,v]");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j["labels"].is_null())
        labels = j["labels"].get<std::vector<std::string>>();
    return Graph(n, std::move(edges), std::move(labels));
}

} // namespace mycimm
