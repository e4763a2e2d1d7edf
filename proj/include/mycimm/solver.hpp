#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mycimm/certificate.hpp"
#include "mycimm/graph.hpp"

namespace mycimm {

// Budget in search-tree nodes, a deterministic machine-independent unit:
// one node per candidate terminal set, per pair-selection step, and per
// path-extension step.
struct SearchBudget {
    std::int64_t max_nodes = 10'000'000;
};

enum class SolveStatus { exact, budget_exhausted };

std::string to_string(SolveStatus status);

struct SolveResult {
    int lower = 0;
    int upper = 0;
    SolveStatus status = SolveStatus::budget_exhausted;
    std::optional<ImmersionCertificate> certificate; // witness for lower
    std::int64_t nodes_used = 0;
};

struct KtSearch {
    enum class Kind { found, none, exhausted };
    Kind kind = Kind::none;
    std::optional<ImmersionCertificate> certificate;
    std::int64_t nodes_used = 0;
};

// Largest t with at least t vertices of degree >= t-1; never exceeds the
// maximum degree plus one.
int degree_upper_bound(const Graph& g);

// Complete decision search: terminal sets are enumerated over vertices of
// degree >= t-1 in ascending combination order and evaluated in fixed-size
// rounds (each candidate capped at the budget remaining when its round
// started); within a candidate the clique paths are packed depth-first,
// scarcest pair first, neighbors in ascending order. "none" is reported only
// when every candidate was fully refuted. Results, including nodes_used, do
// not depend on the worker count.
KtSearch has_kt_immersion(const Graph& g, int t, SearchBudget budget, int jobs = 1);

// Exact immersion number where the budget allows: starts from the degree
// upper bound and decides t downward, spending one shared node pool. Hints
// are candidate witnesses (e.g. shipped fixture certificates); each is
// verified before use and the best one seeds the lower bound.
SolveResult immersion_number(const Graph& g, SearchBudget budget,
                             std::span<const ImmersionCertificate> hints = {}, int jobs = 1);

struct ConjectureReport {
    int m = 0;
    int t = 0;        // m + 1
    int vertices = 0;
    int edge_count = 0;
    std::map<int, int> degree_hist;
    int interval_lower = 0; // t + 1
    int interval_upper = 0; // 2t - 1
    int degree_bound = 0;
    int conjectured = 0;    // 2m + 1
    SolveResult solve;
    std::string verdict;    // "holds" | "fails" | "open"
};

// Builds the m-Mycielskian of K_{m+1} and reports how far the solver gets
// against the conjectured value 2m+1. known_certificates (fixtures) and the
// lifted trivial K_{m+1} certificate seed the lower bound before any search.
ConjectureReport explore_conjecture(int m, SearchBudget budget,
                                    std::span<const ImmersionCertificate> known_certificates = {},
                                    int jobs = 1);

Json solve_result_to_json(const SolveResult& result);
Json conjecture_report_to_json(const ConjectureReport& report);

ImmersionCertificate load_certificate_file(const std::filesystem::path& file);

// All certificate fixtures in dir whose file name starts with prefix,
// in file-name order (e.g. prefix "myc3_k4" for the 3-Mycielskian of K_4).
std::vector<ImmersionCertificate> load_fixture_certificates(const std::filesystem::path& dir,
                                                            std::string_view prefix);

} // namespace mycimm
