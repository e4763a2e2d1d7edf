#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mycimm/certificate.hpp"
#include "mycimm/graph.hpp"
#include "mycimm/solver.hpp"
#include "test_util.hpp"

// End-to-end runs of the installed binary through a shell, checking output
// bytes and exit codes.

namespace {

const std::string kCli = MYCIMM_CLI_PATH;
const std::string kOut = std::string(MYCIMM_TMP_DIR) + "/cli_out.txt";

int run_with_env(const std::string& env, const std::string& args) {
    std::string command = env + (env.empty() ? "" : " ") + kCli + " " + args + " > " + kOut +
                          " 2>/dev/null";
    int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run(const std::string& args) { return run_with_env("", args); }

std::string output() {
    std::ifstream in(kOut);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json output_json() { return nlohmann::json::parse(output()); }

std::string fixture(const std::string& name) {
    return (testutil::fixture_dir() / name).string();
}

} // namespace

TEST_CASE("gen emits graph6 or json") {
    CHECK(run("gen --family path --n 5") == 0);
    CHECK(output() == "DhC\n");
    CHECK(run("gen --family complete --t 3") == 0);
    CHECK(output() == "Bw\n");
    CHECK(run("gen --family circulant --n 7 --jumps 1,2 --json") == 0);
    auto j = output_json();
    CHECK(j["n"] == 7);
    CHECK(j["edges"].size() == 14);
}

TEST_CASE("myc pipes into bounds") {
    CHECK(run("myc --m 2 --family cycle --n 5 | " + kCli + " bounds") == 0);
    CHECK(output() == "5\n");
}

TEST_CASE("solve reports the exact immersion number") {
    CHECK(run("solve --family path --n 5") == 0);
    auto j = output_json();
    CHECK(j["lower"] == 2);
    CHECK(j["upper"] == 2);
    CHECK(j["status"] == "exact");
}

TEST_CASE("solve accepts hints and graph files") {
    CHECK(run("solve --input " + fixture("myc3_k4.g6") + " --hint " +
              fixture("myc3_k4_k7.json")) == 0);
    auto j = output_json();
    CHECK(j["lower"] == 7);
    CHECK(j["upper"] == 7);
    CHECK(j["nodes_used"] == 0);
}

TEST_CASE("verify distinguishes valid, invalid, and usage errors") {
    CHECK(run("verify --graph " + fixture("myc3_k4.g6") + " --cert " +
              fixture("myc3_k4_k7.json")) == 0);
    CHECK(output_json()["valid"] == true);

    // corrupt one path: reuse an edge
    auto cert = mycimm::load_certificate_file(testutil::fixture_dir() / "myc3_k4_k7.json");
    cert.paths[{0, 4}] = cert.paths[{4, 5}];
    std::string bad = std::string(MYCIMM_TMP_DIR) + "/bad_cert.json";
    std::ofstream(bad) << mycimm::certificate_to_json(cert);
    CHECK(run("verify --graph " + fixture("myc3_k4.g6") + " --cert " + bad) == 1);
    CHECK(output_json()["valid"] == false);

    CHECK(run("verify --graph " + fixture("myc3_k4.g6")) == 2); // missing --cert
    CHECK(run("frobnicate") == 2);
    CHECK(run("verify --graph no_such_file.g6 --cert " + fixture("myc3_k4_k7.json")) == 1);
}

TEST_CASE("dnp check and ensure") {
    auto [k34, cert] = testutil::k34_no_dnp_instance();
    std::string graph_file = std::string(MYCIMM_TMP_DIR) + "/k34.json";
    std::string cert_file = std::string(MYCIMM_TMP_DIR) + "/k34_cert.json";
    std::ofstream(graph_file) << mycimm::graph_to_json(k34);
    std::ofstream(cert_file) << mycimm::certificate_to_json(cert);

    CHECK(run("dnp --input " + graph_file + " --cert " + cert_file) == 0);
    CHECK(output_json()["assignment"].is_null());

    CHECK(run("dnp --input " + graph_file + " --cert " + cert_file + " --ensure") == 0);
    auto j = output_json();
    CHECK(j["certificate"]["terminals"] == nlohmann::json({0, 1, 2, 6}));
    CHECK(j["assignment"].is_object());
}

TEST_CASE("lift prints ids and labels") {
    mycimm::Graph k4 = mycimm::generate_family(mycimm::FamilySpec::complete(4));
    auto cert = mycimm::trivial_clique_certificate(k4, {0, 1, 2, 3});
    std::string cert_file = std::string(MYCIMM_TMP_DIR) + "/k4_cert.json";
    std::ofstream(cert_file) << mycimm::certificate_to_json(cert);

    CHECK(run("lift --family complete --t 4 --cert " + cert_file + " --m 2") == 0);
    auto j = output_json();
    CHECK(j["certificate"]["t"] == 5);
    CHECK(j["terminals_labeled"].back() == "w");
    CHECK(j["paths_labeled"]["0-1"][0] == "(v1,0)");
}

TEST_CASE("conjecture explorer over the fixture directory") {
    CHECK(run("conjecture --m 3 --fixtures " + testutil::fixture_dir().string()) == 0);
    auto j = output_json();
    CHECK(j["solve"]["lower"] == 7);
    CHECK(j["verdict"] == "holds");
}

TEST_CASE("environment supplies the default budget, flags take precedence") {
    CHECK(run_with_env("MYCIMM_BUDGET=banana", "solve --family path --n 5") == 1);
    CHECK(run_with_env("MYCIMM_BUDGET=7", "solve --family path --n 5 --budget 100000") == 0);
    CHECK(output_json()["status"] == "exact");
    CHECK(run_with_env("MYCIMM_BUDGET=0", "solve --family cycle --n 5") == 0);
    CHECK(output_json()["status"] == "budget_exhausted");
}

TEST_CASE("json graph input is sniffed") {
    std::string graph_file = std::string(MYCIMM_TMP_DIR) + "/p5.json";
    std::ofstream(graph_file)
        << mycimm::graph_to_json(mycimm::generate_family(mycimm::FamilySpec::path(5)));
    CHECK(run("bounds --input " + graph_file) == 0);
    CHECK(output() == "3\n");
}
