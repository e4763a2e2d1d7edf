#include "mycimm/mycielski.hpp"

#include <algorithm>
#include <set>

namespace mycimm {

std::string myc_vertex_name(const MycVertex& v) {
    if (v.apex) return "w";
    return "(v" + std::to_string(v.base + 1) + "," + std::to_string(v.level) + ")";
}

int MycGraph::index_of(const MycVertex& v) const {
    if (v.apex) return apex_index();
    if (v.base < 0 || v.base >= base.n() || v.level < 0 || v.level >= m)
        throw InputError("myc vertex out of range: " + myc_vertex_name(v));
    return v.level * base.n() + v.base;
}

MycVertex MycGraph::vertex_of(int index) const {
    if (index == apex_index()) return MycVertex::w();
    if (index < 0 || index > apex_index())
        throw InputError("myc index out of range: " + std::to_string(index));
    return MycVertex::at(index % base.n(), index / base.n());
}

MycGraph mycielskian(const Graph& g, int m) {
    if (m < 1) throw InputError("mycielskian: need m >= 1");
    const int n = g.n();
    const int apex = m * n;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, v}); // level-0 copy
        for (int i = 0; i + 1 < m; ++i) {
            edges.push_back({i * n + u, (i + 1) * n + v});
            edges.push_back({i * n + v, (i + 1) * n + u});
        }
    }
    for (int u = 0; u < n; ++u) edges.push_back({(m - 1) * n + u, apex});

    std::vector<std::string> labels(apex + 1);
    for (int i = 0; i < m; ++i)
        for (int v = 0; v < n; ++v) labels[i * n + v] = myc_vertex_name(MycVertex::at(v, i));
    labels[apex] = "w";

    return MycGraph{g, m, Graph(apex + 1, std::move(edges), std::move(labels))};
}

Graph cone_crosscheck(const Graph& g, int m) {
    if (m < 1) throw InputError("cone_crosscheck: need m >= 1");
    const int n = g.n();
    const int apex = m * n;
    // product vertex (v, j), 0 <= j <= m; j == m collapses onto the apex
    auto id = [&](int v, int j) { return j == m ? apex : j * n + v; };
    std::set<Edge> edges;
    auto add = [&](int x, int y) {
        if (x != y) edges.insert({std::min(x, y), std::max(x, y)});
    };
    for (const auto& [u, v] : g.edges()) {
        add(id(u, 0), id(v, 0)); // loop at path coordinate 0
        for (int j = 0; j < m; ++j) {
            add(id(u, j), id(v, j + 1));
            add(id(v, j), id(u, j + 1));
        }
    }
    return Graph(apex + 1, std::vector<Edge>(edges.begin(), edges.end()));
}

Json myc_graph_to_json(const MycGraph& mg) {
    Json j = graph_to_json(mg.graph);
    j["m"] = mg.m;
    j["base_n"] = mg.base_n();
    return j;
}

} // namespace mycimm
