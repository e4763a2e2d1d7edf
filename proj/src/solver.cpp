#include "mycimm/solver.hpp"

#include <algorithm>
#include <fstream>
#include <thread>

#include "mycimm/dnp.hpp"
#include "mycimm/lift.hpp"
#include "mycimm/mycielski.hpp"

namespace mycimm {

namespace {

// Adjacency with stable edge ids, neighbors ascending.
struct EdgeIndexed {
    int n = 0;
    std::vector<Edge> edge_list;
    std::vector<std::vector<std::pair<int, int>>> adj; // (neighbor, edge id)

    explicit EdgeIndexed(const Graph& g) : n(g.n()), edge_list(g.edges()), adj(g.n()) {
        for (std::size_t e = 0; e < edge_list.size(); ++e) {
            auto [u, v] = edge_list[e];
            adj[u].push_back({v, static_cast<int>(e)});
            adj[v].push_back({u, static_cast<int>(e)});
        }
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    }
};

// Depth-first packing of the C(t,2) clique paths for one terminal set.
// Complete: every simple path is enumerated for every pair before a state is
// refuted, so a "none" outcome is a proof. The only pruning is the sound
// residual-degree condition: a terminal with k unrouted pairs needs at least
// k unused incident edges.
class PathPacker {
public:
    enum class Outcome { found, none, capped };

    PathPacker(const EdgeIndexed& g, std::vector<int> terminals, std::int64_t node_cap)
        : g_(g), terminals_(std::move(terminals)), cap_(node_cap) {
        const int t = static_cast<int>(terminals_.size());
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b) pairs_.push_back({a, b});
        routed_.assign(pairs_.size(), 0);
        pending_.assign(g_.n, 0);
        free_deg_.assign(g_.n, 0);
        for (int v = 0; v < g_.n; ++v) free_deg_[v] = static_cast<int>(g_.adj[v].size());
        for (int v : terminals_) pending_[v] = t - 1;
        used_.assign(g_.edge_list.size(), 0);
        on_path_.assign(g_.n, 0);
        is_terminal_.assign(g_.n, 0);
        for (int v : terminals_) is_terminal_[v] = 1;
        bfs_seen_.assign(g_.n, 0);
    }

    Outcome run() {
        nodes_ = 1; // the candidate itself
        if (nodes_ > cap_) {
            capped_ = true;
            return Outcome::capped;
        }
        if (dfs()) return Outcome::found;
        return capped_ ? Outcome::capped : Outcome::none;
    }

    std::int64_t nodes() const { return std::min(nodes_, cap_); }
    const std::map<TerminalPair, std::vector<int>>& solution() const { return best_; }

private:
    int slack(int v) const { return free_deg_[v] - pending_[v]; }

    bool tick() {
        if (capped_) return false;
        if (++nodes_ > cap_) {
            capped_ = true;
            return false;
        }
        return true;
    }

    // Scarcest unrouted pair: smallest minimum endpoint slack, then smallest
    // slack sum, then lowest index.
    int select_pair() const {
        int best = -1;
        long best_key1 = 0, best_key2 = 0;
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            if (routed_[p]) continue;
            int sa = slack(terminals_[pairs_[p].first]);
            int sb = slack(terminals_[pairs_[p].second]);
            long key1 = std::min(sa, sb), key2 = sa + sb;
            if (best < 0 || key1 < best_key1 || (key1 == best_key1 && key2 < best_key2)) {
                best = static_cast<int>(p);
                best_key1 = key1;
                best_key2 = key2;
            }
        }
        return best;
    }

    bool reachable(int from, int to) {
        ++bfs_generation_;
        bfs_queue_.clear();
        bfs_queue_.push_back(from);
        bfs_seen_[from] = bfs_generation_;
        for (std::size_t head = 0; head < bfs_queue_.size(); ++head) {
            int v = bfs_queue_[head];
            if (v == to) return true;
            for (auto [nb, eid] : g_.adj[v]) {
                if (used_[eid] || bfs_seen_[nb] == bfs_generation_) continue;
                bfs_seen_[nb] = bfs_generation_;
                bfs_queue_.push_back(nb);
            }
        }
        return false;
    }

    bool place(int eid, bool completes) {
        auto [x, y] = g_.edge_list[eid];
        used_[eid] = 1;
        --free_deg_[x];
        --free_deg_[y];
        for (int z : {x, y}) {
            if (!is_terminal_[z]) continue;
            int exempt = (z == start_ || (completes && z == target_)) ? 1 : 0;
            if (free_deg_[z] < pending_[z] - exempt) {
                unplace(eid);
                return false;
            }
        }
        return true;
    }

    void unplace(int eid) {
        auto [x, y] = g_.edge_list[eid];
        used_[eid] = 0;
        ++free_deg_[x];
        ++free_deg_[y];
    }

    bool dfs() {
        if (!tick()) return false;
        int p = select_pair();
        if (p < 0) { // everything routed
            best_ = partial_;
            return true;
        }
        auto [a, b] = pairs_[p];
        start_ = terminals_[a];
        target_ = terminals_[b];
        if (!reachable(start_, target_)) return false;
        path_.assign(1, start_);
        on_path_[start_] = 1;
        bool ok = extend(p);
        on_path_[start_] = 0;
        return ok;
    }

    bool extend(int p) {
        if (!tick()) return false;
        const int v = path_.back();
        for (auto [nb, eid] : g_.adj[v]) {
            if (capped_) return false;
            if (used_[eid] || on_path_[nb]) continue;
            if (nb == target_) {
                if (!place(eid, true)) continue;
                routed_[p] = 1;
                --pending_[start_];
                --pending_[target_];
                {
                    auto full = path_;
                    full.push_back(target_);
                    partial_[pairs_[p]] = std::move(full);
                }
                // Recursion routes the next pair, which may legitimately run
                // through this path's vertices: only edges are disjoint.
                const int saved_start = start_, saved_target = target_;
                std::vector<int> saved_path = std::move(path_);
                for (int pv : saved_path) on_path_[pv] = 0;
                bool ok = dfs();
                for (int pv : saved_path) on_path_[pv] = 1;
                path_ = std::move(saved_path);
                start_ = saved_start;
                target_ = saved_target;
                if (ok) return true;
                partial_.erase(pairs_[p]);
                ++pending_[start_];
                ++pending_[target_];
                routed_[p] = 0;
                unplace(eid);
            } else {
                if (!place(eid, false)) continue;
                on_path_[nb] = 1;
                path_.push_back(nb);
                if (extend(p)) return true;
                path_.pop_back();
                on_path_[nb] = 0;
                unplace(eid);
            }
        }
        return false;
    }

    const EdgeIndexed& g_;
    std::vector<int> terminals_;
    std::vector<TerminalPair> pairs_;
    std::vector<char> routed_;
    std::vector<int> pending_;  // unrouted pairs incident to each terminal
    std::vector<int> free_deg_; // unused incident edges
    std::vector<char> used_;
    std::vector<char> on_path_;
    std::vector<char> is_terminal_;
    std::vector<int> path_;
    int start_ = -1, target_ = -1;
    std::map<TerminalPair, std::vector<int>> partial_;
    std::map<TerminalPair, std::vector<int>> best_;
    std::int64_t nodes_ = 0, cap_ = 0;
    bool capped_ = false;

    std::vector<int> bfs_queue_;
    std::vector<int> bfs_seen_;
    int bfs_generation_ = 0;
};

// Ascending combinations of pool elements, t at a time.
class CombinationGen {
public:
    CombinationGen(std::vector<int> pool, int t) : pool_(std::move(pool)), t_(t) {
        if (t_ >= 0 && t_ <= static_cast<int>(pool_.size())) {
            idx_.resize(t_);
            for (int i = 0; i < t_; ++i) idx_[i] = i;
            live_ = true;
        }
    }

    bool next(std::vector<int>& out) {
        if (!live_) return false;
        out.resize(t_);
        for (int i = 0; i < t_; ++i) out[i] = pool_[idx_[i]];
        // advance
        int i = t_ - 1;
        while (i >= 0 && idx_[i] == static_cast<int>(pool_.size()) - t_ + i) --i;
        if (i < 0) {
            live_ = false;
        } else {
            ++idx_[i];
            for (int j = i + 1; j < t_; ++j) idx_[j] = idx_[j - 1] + 1;
        }
        return true;
    }

private:
    std::vector<int> pool_;
    int t_;
    std::vector<int> idx_;
    bool live_ = false;
};

// Candidates are evaluated in rounds of this size; every candidate in a
// round gets the same node cap, so results do not depend on the worker count.
constexpr int kRoundSize = 32;

struct CandidateResult {
    PathPacker::Outcome outcome = PathPacker::Outcome::none;
    std::map<TerminalPair, std::vector<int>> paths;
    std::int64_t nodes = 0;
};

} // namespace

int degree_upper_bound(const Graph& g) {
    if (g.n() < 1) throw InputError("degree_upper_bound: need n >= 1");
    std::vector<int> deg(g.n());
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    std::sort(deg.rbegin(), deg.rend());
    int best = 1;
    for (int t = 1; t <= g.n(); ++t)
        if (deg[t - 1] >= t - 1) best = t;
    return best;
}

KtSearch has_kt_immersion(const Graph& g, int t, SearchBudget budget, int jobs) {
    if (t < 1) throw InputError("has_kt_immersion: need t >= 1");
    if (jobs < 1) jobs = 1;
    KtSearch out;
    if (t > g.n()) return out; // none

    std::vector<int> pool; // only vertices of degree >= t-1 can be terminals
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= t - 1) pool.push_back(v);
    if (static_cast<int>(pool.size()) < t) return out; // none

    const EdgeIndexed indexed(g);
    CombinationGen gen(std::move(pool), t);
    std::int64_t remaining = budget.max_nodes;
    bool saw_capped = false;

    std::vector<std::vector<int>> round;
    std::vector<int> candidate;
    while (true) {
        // Rounds never outnumber the remaining node pool, so splitting the
        // pool over the round keeps the total spend within the budget no
        // matter how many workers run.
        const int limit = static_cast<int>(
            std::min<std::int64_t>(kRoundSize, std::max<std::int64_t>(remaining, 1)));
        round.clear();
        while (static_cast<int>(round.size()) < limit && gen.next(candidate))
            round.push_back(candidate);
        if (round.empty()) {
            out.kind = saw_capped ? KtSearch::Kind::exhausted : KtSearch::Kind::none;
            return out;
        }
        if (remaining <= 0) {
            out.kind = KtSearch::Kind::exhausted;
            return out;
        }
        const std::int64_t cap = remaining / static_cast<std::int64_t>(round.size());

        std::vector<CandidateResult> results(round.size());
        auto evaluate = [&](std::size_t i) {
            PathPacker packer(indexed, round[i], cap);
            results[i].outcome = packer.run();
            results[i].nodes = packer.nodes();
            if (results[i].outcome == PathPacker::Outcome::found)
                results[i].paths = packer.solution();
        };
        if (jobs == 1 || round.size() == 1) {
            for (std::size_t i = 0; i < round.size(); ++i) evaluate(i);
        } else {
            int workers = std::min<int>(jobs, static_cast<int>(round.size()));
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w)
                threads.emplace_back([&, w] {
                    for (std::size_t i = w; i < round.size(); i += workers) evaluate(i);
                });
            for (auto& th : threads) th.join();
        }

        for (const auto& r : results) {
            out.nodes_used += r.nodes;
            remaining -= r.nodes;
            if (r.outcome == PathPacker::Outcome::capped) saw_capped = true;
        }
        for (std::size_t i = 0; i < round.size(); ++i) {
            if (results[i].outcome != PathPacker::Outcome::found) continue;
            ImmersionCertificate cert;
            cert.t = t;
            cert.terminals = round[i];
            cert.paths = std::move(results[i].paths);
            out.kind = KtSearch::Kind::found;
            out.certificate = std::move(cert);
            return out;
        }
    }
}

SolveResult immersion_number(const Graph& g, SearchBudget budget,
                             std::span<const ImmersionCertificate> hints, int jobs) {
    if (g.n() < 1) throw InputError("immersion_number: need n >= 1");

    ImmersionCertificate best; // a single terminal always immerses
    best.t = 1;
    best.terminals = {0};
    for (const auto& hint : hints) {
        auto report = verify_certificate(g, hint);
        if (!report.valid)
            throw InputError("immersion_number: hint certificate is invalid in this host");
        if (hint.t > best.t) best = hint;
    }

    SolveResult res;
    res.lower = best.t;
    res.upper = degree_upper_bound(g);
    if (res.lower > res.upper)
        throw InternalError("immersion_number: verified witness above the degree bound");
    res.certificate = std::move(best);

    std::int64_t remaining = budget.max_nodes;
    for (int t = res.upper; t > res.lower; --t) {
        auto kt = has_kt_immersion(g, t, SearchBudget{remaining}, jobs);
        res.nodes_used += kt.nodes_used;
        remaining -= kt.nodes_used;
        switch (kt.kind) {
        case KtSearch::Kind::found:
            res.lower = res.upper = t;
            res.certificate = std::move(kt.certificate);
            res.status = SolveStatus::exact;
            return res;
        case KtSearch::Kind::none:
            res.upper = t - 1;
            break;
        case KtSearch::Kind::exhausted:
            res.upper = t;
            res.status = SolveStatus::budget_exhausted;
            return res;
        }
    }
    res.upper = res.lower;
    res.status = SolveStatus::exact;
    return res;
}

ConjectureReport explore_conjecture(int m, SearchBudget budget,
                                    std::span<const ImmersionCertificate> known_certificates,
                                    int jobs) {
    if (m < 3) throw InputError("explore_conjecture: need m >= 3");
    const int t = m + 1;
    Graph complete = generate_family(FamilySpec::complete(t));
    MycGraph myc = mycielskian(complete, m);

    ConjectureReport rep;
    rep.m = m;
    rep.t = t;
    rep.vertices = myc.graph.n();
    rep.edge_count = myc.graph.edge_count();
    rep.degree_hist = degree_histogram(myc.graph);
    rep.interval_lower = t + 1;
    rep.interval_upper = 2 * t - 1;
    rep.degree_bound = degree_upper_bound(myc.graph);
    rep.conjectured = 2 * m + 1;

    // Theorem lower bound t+1: lift the trivial K_t certificate.
    std::vector<int> all(t);
    for (int v = 0; v < t; ++v) all[v] = v;
    auto [cert, assign] = ensure_dnp(complete, trivial_clique_certificate(complete, all));
    std::vector<ImmersionCertificate> hints(known_certificates.begin(), known_certificates.end());
    hints.push_back(lift_certificate(complete, cert, assign, m));

    rep.solve = immersion_number(myc.graph, budget, hints, jobs);
    if (rep.solve.status == SolveStatus::exact)
        rep.verdict = rep.solve.lower == rep.conjectured ? "holds" : "fails";
    else
        rep.verdict = "open";
    return rep;
}

std::string to_string(SolveStatus status) {
    return status == SolveStatus::exact ? "exact" : "budget_exhausted";
}

Json solve_result_to_json(const SolveResult& result) {
    Json j;
    j["lower"] = result.lower;
    j["upper"] = result.upper;
    j["status"] = to_string(result.status);
    j["certificate"] =
        result.certificate ? certificate_to_json(*result.certificate) : Json(nullptr);
    j["nodes_used"] = result.nodes_used;
    return j;
}

Json conjecture_report_to_json(const ConjectureReport& report) {
    Json j;
    j["m"] = report.m;
    j["t"] = report.t;
    j["vertices"] = report.vertices;
    j["edges"] = report.edge_count;
    Json hist = Json::object();
    for (auto [deg, count] : report.degree_hist) hist[std::to_string(deg)] = count;
    j["degree_histogram"] = std::move(hist);
    j["interval"] = {report.interval_lower, report.interval_upper};
    j["degree_bound"] = report.degree_bound;
    j["conjectured"] = report.conjectured;
    j["solve"] = solve_result_to_json(report.solve);
    j["verdict"] = report.verdict;
    return j;
}

ImmersionCertificate load_certificate_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open certificate file " + file.string());
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad JSON in " + file.string() + ": " + e.what());
    }
    return certificate_from_json(j);
}

std::vector<ImmersionCertificate> load_fixture_certificates(const std::filesystem::path& dir,
                                                            std::string_view prefix) {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_directory(dir))
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
            if (entry.path().filename().string().starts_with(prefix))
                files.push_back(entry.path());
        }
    std::sort(files.begin(), files.end());
    std::vector<ImmersionCertificate> certs;
    certs.reserve(files.size());
    for (const auto& f : files) certs.push_back(load_certificate_file(f));
    return certs;
}

} // namespace mycimm
