#include "mycimm/dnp.hpp"

#include <algorithm>
#include <set>

namespace mycimm {

namespace {

bool try_augment(const DnpBipartite& bip, int left, std::vector<char>& visited,
                 std::vector<int>& match_right) {
    for (int r : bip.adj[left]) {
        if (visited[r]) continue;
        visited[r] = 1;
        if (match_right[r] < 0 || try_augment(bip, match_right[r], visited, match_right)) {
            match_right[r] = left;
            return true;
        }
    }
    return false;
}

void require_valid(const Graph& g, const ImmersionCertificate& cert, const char* who) {
    auto report = verify_certificate(g, cert);
    if (!report.valid)
        throw InputError(std::string(who) + ": certificate invalid (" +
                         std::to_string(report.violations.size()) + " violations)");
}

} // namespace

DnpBipartite build_dnp_bipartite(const Graph& g, const ImmersionCertificate& cert) {
    DnpBipartite bip;
    bip.left = cert.terminals;
    std::set<int> candidates;
    for (int a : cert.terminals)
        for (int nb : g.neighbors(a)) candidates.insert(nb);
    bip.right.assign(candidates.begin(), candidates.end());
    bip.adj.resize(bip.left.size());
    for (std::size_t i = 0; i < bip.left.size(); ++i)
        for (std::size_t r = 0; r < bip.right.size(); ++r)
            if (g.has_edge(bip.left[i], bip.right[r]))
                bip.adj[i].push_back(static_cast<int>(r));
    return bip;
}

std::vector<std::pair<int, int>> max_matching(const DnpBipartite& bip) {
    std::vector<int> match_right(bip.right.size(), -1);
    for (std::size_t l = 0; l < bip.left.size(); ++l) {
        std::vector<char> visited(bip.right.size(), 0);
        try_augment(bip, static_cast<int>(l), visited, match_right);
    }
    std::vector<std::pair<int, int>> matching;
    for (std::size_t r = 0; r < match_right.size(); ++r)
        if (match_right[r] >= 0) matching.push_back({match_right[r], static_cast<int>(r)});
    std::sort(matching.begin(), matching.end());
    return matching;
}

std::optional<NeighborAssignment> check_dnp(const Graph& g, const ImmersionCertificate& cert) {
    require_valid(g, cert, "check_dnp");
    auto bip = build_dnp_bipartite(g, cert);
    auto matching = max_matching(bip);
    if (matching.size() != bip.left.size()) return std::nullopt;
    NeighborAssignment assign;
    assign.neighbor_of.assign(bip.left.size(), -1);
    for (auto [l, r] : matching) assign.neighbor_of[l] = bip.right[r];
    return assign;
}

EdgeColoring proper_edge_coloring_complete(int n) {
    if (n < 1) throw InputError("edge coloring: need n >= 1");
    EdgeColoring col;
    col.order = n;
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) col.color[{i, j}] = (i + j) % n;
        return col;
    }
    // circle method: hub n-1, rim 0..n-2; round r pairs the hub with r and
    // rim vertices (r+k, r-k) mod (n-1) with each other
    const int rim = n - 1;
    for (int r = 0; r < rim; ++r) {
        col.color[{std::min(r, n - 1), std::max(r, n - 1)}] = r;
        for (int k = 1; k <= (n - 2) / 2; ++k) {
            int a = (r + k) % rim, b = ((r - k) % rim + rim) % rim;
            col.color[{std::min(a, b), std::max(a, b)}] = r;
        }
    }
    return col;
}

std::pair<ImmersionCertificate, NeighborAssignment>
ensure_dnp(const Graph& g, const ImmersionCertificate& cert) {
    require_valid(g, cert, "ensure_dnp");
    if (cert.t < 2) throw InputError("ensure_dnp: needs t >= 2");

    if (auto assign = check_dnp(g, cert)) return {cert, *assign};

    // Hall failure: every terminal must see the same t-1 neighbors.
    const int t = cert.t;
    std::set<int> neighborhood;
    for (int nb : g.neighbors(cert.terminals[0])) neighborhood.insert(nb);
    if (static_cast<int>(neighborhood.size()) != t - 1)
        throw InternalError("ensure_dnp: matching failed but |B| != t-1");
    for (int i = 1; i < t; ++i) {
        const auto& nbs = g.neighbors(cert.terminals[i]);
        if (static_cast<int>(nbs.size()) != t - 1 ||
            !std::equal(nbs.begin(), nbs.end(), neighborhood.begin()))
            throw InternalError("ensure_dnp: matching failed but terminal neighborhoods differ");
    }

    std::vector<int> b(neighborhood.begin(), neighborhood.end()); // b_1..b_{t-1}
    const int a_t = cert.terminals[t - 1];

    ImmersionCertificate rebuilt;
    rebuilt.t = t;
    rebuilt.terminals = b;
    rebuilt.terminals.push_back(a_t);
    auto coloring = proper_edge_coloring_complete(t - 1);
    for (int i = 0; i < t - 1; ++i) {
        rebuilt.paths[{i, t - 1}] = {b[i], a_t};
        for (int j = i + 1; j < t - 1; ++j) {
            int k = coloring.color.at({i, j});
            rebuilt.paths[{i, j}] = {b[i], cert.terminals[k], b[j]};
        }
    }

    if (!verify_certificate(g, rebuilt).valid)
        throw InternalError("ensure_dnp: rebuilt certificate failed verification");
    auto assign = check_dnp(g, rebuilt);
    if (!assign)
        throw InternalError("ensure_dnp: rebuilt certificate still lacks distinct neighbors");
    return {rebuilt, *assign};
}

Json assignment_to_json(const NeighborAssignment& assign) {
    Json inner = Json::object();
    for (std::size_t i = 0; i < assign.neighbor_of.size(); ++i)
        inner[std::to_string(i)] = assign.neighbor_of[i];
    return Json{{"assignment", inner}};
}

} // namespace mycimm
