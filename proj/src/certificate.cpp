#include "mycimm/certificate.hpp"

#include <algorithm>
#include <set>

namespace mycimm {

namespace {

std::string pair_key(TerminalPair p) {
    return std::to_string(p.first) + "-" + std::to_string(p.second);
}

std::string path_str(const std::vector<int>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += "-";
        s += std::to_string(p[i]);
    }
    return s;
}

// Range checks only; anything beyond this is a verification verdict, not an
// input error.
void check_shape(const Graph& g, const ImmersionCertificate& cert) {
    if (cert.t < 1) throw InputError("certificate: need t >= 1");
    if (static_cast<int>(cert.terminals.size()) != cert.t)
        throw InputError("certificate: terminal count " +
                         std::to_string(cert.terminals.size()) + " != t = " +
                         std::to_string(cert.t));
    for (int v : cert.terminals)
        if (v < 0 || v >= g.n())
            throw InputError("certificate: terminal " + std::to_string(v) +
                             " outside host [0," + std::to_string(g.n()) + ")");
    for (const auto& [key, path] : cert.paths) {
        auto [a, b] = key;
        if (a < 0 || b <= a || b >= cert.t)
            throw InputError("certificate: bad path key " + pair_key(key));
        for (int v : path)
            if (v < 0 || v >= g.n())
                throw InputError("certificate: path " + pair_key(key) + " vertex " +
                                 std::to_string(v) + " outside host");
    }
}

} // namespace

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::duplicate_terminal: return "duplicate_terminal";
    case ViolationKind::missing_path: return "missing_path";
    case ViolationKind::malformed_path: return "malformed_path";
    case ViolationKind::endpoint_mismatch: return "endpoint_mismatch";
    case ViolationKind::non_edge_step: return "non_edge_step";
    case ViolationKind::repeated_vertex: return "repeated_vertex";
    case ViolationKind::edge_reuse: return "edge_reuse";
    }
    return "?";
}

VerificationReport verify_certificate(const Graph& g, const ImmersionCertificate& cert) {
    check_shape(g, cert);
    VerificationReport report;
    auto flag = [&](Violation v) { report.violations.push_back(std::move(v)); };

    for (int i = 0; i < cert.t; ++i)
        for (int j = i + 1; j < cert.t; ++j)
            if (cert.terminals[i] == cert.terminals[j])
                flag({ViolationKind::duplicate_terminal, {i, j}, {-1, -1},
                      {cert.terminals[i], -1},
                      "terminals " + std::to_string(i) + " and " + std::to_string(j) +
                          " both map to vertex " + std::to_string(cert.terminals[i])});

    std::map<Edge, TerminalPair> edge_owner;
    for (int a = 0; a < cert.t; ++a)
        for (int b = a + 1; b < cert.t; ++b) {
            TerminalPair key{a, b};
            auto it = cert.paths.find(key);
            if (it == cert.paths.end()) {
                flag({ViolationKind::missing_path, key, {-1, -1}, {-1, -1},
                      "no path for clique edge " + pair_key(key)});
                continue;
            }
            const auto& path = it->second;
            if (path.size() < 2) {
                flag({ViolationKind::malformed_path, key, {-1, -1}, {-1, -1},
                      "path " + pair_key(key) + " has fewer than two vertices"});
                continue;
            }
            if (path.front() != cert.terminals[a] || path.back() != cert.terminals[b])
                flag({ViolationKind::endpoint_mismatch, key, {-1, -1},
                      {path.front(), path.back()},
                      "path " + pair_key(key) + " = " + path_str(path) +
                          " must join vertices " + std::to_string(cert.terminals[a]) +
                          " and " + std::to_string(cert.terminals[b])});

            std::set<int> seen;
            for (int v : path)
                if (!seen.insert(v).second)
                    flag({ViolationKind::repeated_vertex, key, {-1, -1}, {v, -1},
                          "path " + pair_key(key) + " revisits vertex " + std::to_string(v)});

            for (std::size_t s = 0; s + 1 < path.size(); ++s) {
                int u = path[s], v = path[s + 1];
                if (u == v || !g.has_edge(u, v)) {
                    flag({ViolationKind::non_edge_step, key, {-1, -1}, {u, v},
                          "path " + pair_key(key) + " step " + std::to_string(u) + "-" +
                              std::to_string(v) + " is not a host edge"});
                    continue;
                }
                Edge e{std::min(u, v), std::max(u, v)};
                auto [owner, fresh] = edge_owner.insert({e, key});
                if (!fresh)
                    flag({ViolationKind::edge_reuse, key, owner->second, {e.first, e.second},
                          "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                              "} used by paths " + pair_key(owner->second) + " and " +
                              pair_key(key)});
            }
        }

    report.valid = report.violations.empty();
    return report;
}

ImmersionCertificate trivial_clique_certificate(const Graph& g,
                                                const std::vector<int>& terminals) {
    ImmersionCertificate cert;
    cert.t = static_cast<int>(terminals.size());
    cert.terminals = terminals;
    check_shape(g, cert);
    for (int a = 0; a < cert.t; ++a)
        for (int b = a + 1; b < cert.t; ++b) {
            if (!g.has_edge(terminals[a], terminals[b]))
                throw InputError("trivial certificate: terminals " + std::to_string(terminals[a]) +
                                 " and " + std::to_string(terminals[b]) + " are not adjacent");
            cert.paths[{a, b}] = {terminals[a], terminals[b]};
        }
    return cert;
}

void split_off(Multigraph& mg, int u, int via, int w) {
    if (u == w) throw InputError("split_off: endpoints coincide at " + std::to_string(u));
    mg.remove_edge(u, via);
    mg.remove_edge(via, w);
    mg.add_edge(u, w);
}

Multigraph realize_by_splitting(const Graph& g, const ImmersionCertificate& cert) {
    auto report = verify_certificate(g, cert);
    if (!report.valid)
        throw InputError("realize_by_splitting: certificate invalid (" +
                         std::to_string(report.violations.size()) + " violations)");
    Multigraph mg(g);
    for (const auto& [key, original] : cert.paths) {
        std::vector<int> path = original;
        while (path.size() > 2) {
            split_off(mg, path[0], path[1], path[2]);
            path.erase(path.begin() + 1);
        }
    }
    return mg;
}

Json certificate_to_json(const ImmersionCertificate& cert) {
    Json j;
    j["t"] = cert.t;
    j["terminals"] = cert.terminals;
    j["paths"] = Json::object();
    for (const auto& [key, path] : cert.paths) j["paths"][pair_key(key)] = path;
    return j;
}

ImmersionCertificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("t") || !j.contains("terminals") || !j.contains("paths"))
        throw InputError("certificate json: need \"t\", \"terminals\", \"paths\"");
    ImmersionCertificate cert;
    if (!j["t"].is_number_integer()) throw InputError("certificate json: \"t\" must be an integer");
    cert.t = j["t"].get<int>();
    cert.terminals = j["terminals"].get<std::vector<int>>();
    if (!j["paths"].is_object()) throw InputError("certificate json: \"paths\" must be an object");
    for (const auto& [key, path] : j["paths"].items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos)
            throw InputError("certificate json: path key \"" + key + "\" is not \"a-b\"");
        int a, b;
        try {
            a = std::stoi(key.substr(0, dash));
            b = std::stoi(key.substr(dash + 1));
        } catch (const std::exception&) {
            throw InputError("certificate json: path key \"" + key + "\" is not \"a-b\"");
        }
        if (a >= b) throw InputError("certificate json: path key \"" + key + "\" needs a < b");
        cert.paths[{a, b}] = path.get<std::vector<int>>();
    }
    return cert;
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["valid"] = report.valid;
    j["violations"] = Json::array();
    for (const auto& v : report.violations) {
        Json jv;
        jv["kind"] = to_string(v.kind);
        if (v.pair.first >= 0) jv["path"] = pair_key(v.pair);
        if (v.other.first >= 0) jv["other_path"] = pair_key(v.other);
        jv["detail"] = v.detail;
        j["violations"].push_back(std::move(jv));
    }
    return j;
}

} // namespace mycimm
