#include "mycimm/lift.hpp"

#include <set>

namespace mycimm {

ImmersionCertificate lift_certificate(const Graph& g, const ImmersionCertificate& cert,
                                      const NeighborAssignment& assign, int m) {
    if (m < 1) throw InputError("lift: need m >= 1");
    if (cert.t < 2)
        throw InputError("lift: t = 1 is unsupported; use apex_edge_certificate");
    auto report = verify_certificate(g, cert);
    if (!report.valid)
        throw InputError("lift: certificate invalid (" +
                         std::to_string(report.violations.size()) + " violations)");
    if (static_cast<int>(assign.neighbor_of.size()) != cert.t)
        throw InputError("lift: assignment size != t");
    std::set<int> distinct;
    for (int i = 0; i < cert.t; ++i) {
        if (!g.has_edge(cert.terminals[i], assign.neighbor_of[i]))
            throw InputError("lift: assigned vertex " + std::to_string(assign.neighbor_of[i]) +
                             " is not a neighbor of terminal " +
                             std::to_string(cert.terminals[i]));
        if (!distinct.insert(assign.neighbor_of[i]).second)
            throw InputError("lift: assigned neighbors are not pairwise distinct");
    }

    const int n = g.n();
    const int apex = m * n;
    auto at = [&](int v, int level) { return level * n + v; };

    ImmersionCertificate lifted;
    lifted.t = cert.t + 1;
    lifted.terminals = cert.terminals; // (v_i, 0) keeps the id of v_i
    lifted.terminals.push_back(apex);

    // level-0 copies of the original paths
    for (const auto& [key, path] : cert.paths) lifted.paths[key] = path;

    // apex paths, one per original terminal
    for (int i = 0; i < cert.t; ++i) {
        std::vector<int> path;
        for (int level = 0; level < m; ++level)
            path.push_back(level % 2 == 0 ? at(cert.terminals[i], level)
                                          : at(assign.neighbor_of[i], level));
        path.push_back(apex);
        lifted.paths[{i, cert.t}] = std::move(path);
    }
    return lifted;
}

ImmersionCertificate apex_edge_certificate(const Graph& g, int v, int m) {
    if (m < 1) throw InputError("apex_edge_certificate: need m >= 1");
    if (v < 0 || v >= g.n())
        throw InputError("apex_edge_certificate: vertex " + std::to_string(v) + " out of range");
    const int top = (m - 1) * g.n() + v;
    const int apex = m * g.n();
    ImmersionCertificate cert;
    cert.t = 2;
    cert.terminals = {top, apex};
    cert.paths[{0, 1}] = {top, apex};
    return cert;
}

} // namespace mycimm
