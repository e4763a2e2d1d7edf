#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mycimm/lift.hpp"
#include "mycimm/solver.hpp"
#include "test_util.hpp"

using namespace mycimm;

namespace {

struct Lifted {
    Graph host;
    ImmersionCertificate cert;
};

Lifted lift_for(const Graph& g, const ImmersionCertificate& cert, int m) {
    auto [dnp_cert, assign] = ensure_dnp(g, cert);
    return {mycielskian(g, m).graph, lift_certificate(g, dnp_cert, assign, m)};
}

} // namespace

TEST_CASE("m = 1 reuses the host immersion and joins the apex directly") {
    Graph k4 = generate_family(FamilySpec::complete(4));
    auto [host, lifted] = lift_for(k4, trivial_clique_certificate(k4, {0, 1, 2, 3}), 1);
    CHECK(lifted.t == 5);
    CHECK(lifted.terminals == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(verify_certificate(host, lifted).valid);
    for (int i = 0; i < 4; ++i) CHECK(lifted.paths.at({i, 4}).size() == 2);
}

TEST_CASE("m = 2 routes apex paths through the distinct neighbors") {
    Graph k4 = generate_family(FamilySpec::complete(4));
    auto [host, lifted] = lift_for(k4, trivial_clique_certificate(k4, {0, 1, 2, 3}), 2);
    CHECK(lifted.t == 5);
    CHECK(verify_certificate(host, lifted).valid);
    const int apex = 2 * 4;
    for (int i = 0; i < 4; ++i) {
        const auto& p = lifted.paths.at({i, 4});
        REQUIRE(p.size() == 3);
        CHECK(p[0] == lifted.terminals[i]);
        CHECK(p[1] >= 4); // level-1 vertex
        CHECK(p[1] < 8);
        CHECK(p[2] == apex);
    }
}

TEST_CASE("a single edge lifts to a K_3 with hand-checkable zigzags") {
    Graph p2 = generate_family(FamilySpec::path(2));
    auto cert = trivial_clique_certificate(p2, {0, 1});
    auto assign = check_dnp(p2, cert);
    REQUIRE(assign.has_value());
    CHECK(assign->neighbor_of == std::vector<int>{1, 0});

    auto lifted = lift_certificate(p2, cert, *assign, 3);
    Graph host = mycielskian(p2, 3).graph;
    CHECK(lifted.t == 3);
    CHECK(verify_certificate(host, lifted).valid);
    // ids in myc3(P_2): (v,i) -> 2i+v, w -> 6
    CHECK(lifted.paths.at({0, 2}) == std::vector<int>{0, 3, 4, 6});
    CHECK(lifted.paths.at({1, 2}) == std::vector<int>{1, 2, 5, 6});
}

TEST_CASE("lifted paths live in disjoint edge strata") {
    Graph circ = generate_family(FamilySpec::circulant(7, {1, 2}));
    auto found = has_kt_immersion(circ, 4, SearchBudget{1000000});
    REQUIRE(found.kind == KtSearch::Kind::found);
    for (int m = 1; m <= 4; ++m) {
        CAPTURE(m);
        auto [host, lifted] = lift_for(circ, *found.certificate, m);
        CHECK(verify_certificate(host, lifted).valid);
        const int n = circ.n();
        const int apex = m * n;
        for (const auto& [key, path] : lifted.paths) {
            bool apex_path = key.second == lifted.t - 1;
            for (std::size_t s = 0; s + 1 < path.size(); ++s) {
                int u = path[s], v = path[s + 1];
                if (!apex_path) {
                    CHECK(u < n);
                    CHECK(v < n); // level-0 copy only
                } else {
                    bool crosses_levels = u / n != v / n || v == apex || u == apex;
                    CHECK(crosses_levels);
                }
            }
        }
    }
}

TEST_CASE("apex path endpoints land on distinct top-level vertices") {
    Graph k5 = generate_family(FamilySpec::complete(5));
    auto cert = trivial_clique_certificate(k5, {0, 1, 2, 3, 4});
    for (int m = 2; m <= 5; ++m) {
        CAPTURE(m);
        auto [dnp_cert, assign] = ensure_dnp(k5, cert);
        auto lifted = lift_certificate(k5, dnp_cert, assign, m);
        std::set<int> penultimate;
        for (int i = 0; i < cert.t; ++i) {
            const auto& p = lifted.paths.at({i, cert.t});
            REQUIRE(p.size() == static_cast<std::size_t>(m) + 1);
            int before_apex = p[p.size() - 2];
            CHECK(before_apex / k5.n() == m - 1);
            int expected = (m - 1) % 2 == 0 ? dnp_cert.terminals[i] : assign.neighbor_of[i];
            CHECK(before_apex % k5.n() == expected);
            CHECK(penultimate.insert(before_apex).second);
        }
    }
}

TEST_CASE("solver certificates lift across the corpus") {
    for (const auto& [name, g] : testutil::corpus()) {
        auto solved = immersion_number(g, SearchBudget{2000000});
        REQUIRE(solved.status == SolveStatus::exact);
        if (solved.lower < 2) continue;
        for (int m = 1; m <= 5; ++m) {
            CAPTURE(name);
            CAPTURE(m);
            auto [host, lifted] = lift_for(g, *solved.certificate, m);
            CHECK(lifted.t == solved.lower + 1);
            CHECK(verify_certificate(host, lifted).valid);
        }
    }
}

TEST_CASE("degenerate hosts fall back to the apex edge") {
    std::vector<Edge> none;
    Graph edgeless(3, none);
    for (int m = 1; m <= 3; ++m) {
        auto cert = apex_edge_certificate(edgeless, 1, m);
        CHECK(cert.t == 2);
        CHECK(verify_certificate(mycielskian(edgeless, m).graph, cert).valid);
        CHECK(cert.terminals[0] == (m - 1) * 3 + 1);
    }
    CHECK_THROWS_AS(apex_edge_certificate(edgeless, 3, 1), InputError);
}

TEST_CASE("lift validates its inputs") {
    Graph k3 = generate_family(FamilySpec::complete(3));
    auto cert = trivial_clique_certificate(k3, {0, 1, 2});
    auto assign = *check_dnp(k3, cert);

    CHECK_THROWS_AS(lift_certificate(k3, cert, assign, 0), InputError);

    ImmersionCertificate k1;
    k1.t = 1;
    k1.terminals = {0};
    NeighborAssignment one;
    one.neighbor_of = {1};
    CHECK_THROWS_AS(lift_certificate(k3, k1, one, 2), InputError);

    NeighborAssignment clashing;
    clashing.neighbor_of = {1, 0, 0};
    CHECK_THROWS_AS(lift_certificate(k3, cert, clashing, 2), InputError);

    NeighborAssignment non_adjacent;
    non_adjacent.neighbor_of = {0, 2, 1}; // 0 is not its own neighbor
    CHECK_THROWS_AS(lift_certificate(k3, cert, non_adjacent, 2), InputError);
}
