// mycimm: clique immersions in generalized Mycielski graphs.
//
// Subcommands: gen, myc, bounds, solve, verify, dnp, lift, conjecture.
// Output is line-oriented JSON or graph6 on stdout; diagnostics go to stderr.
// Exit codes: 0 success/valid, 1 data error or invalid certificate, 2 usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mycimm/certificate.hpp"
#include "mycimm/dnp.hpp"
#include "mycimm/graph.hpp"
#include "mycimm/lift.hpp"
#include "mycimm/mycielski.hpp"
#include "mycimm/solver.hpp"

namespace {

using namespace mycimm;

struct GraphInput {
    std::string input = "-"; // file path or "-" for stdin
    std::string family;
    int n = 0, t = 0, a = 0, b = 0;
    std::vector<int> jumps;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input,--graph", input,
                        "graph file (graph6 or JSON), or - for stdin");
        cmd->add_option("--family", family,
                        "generate instead of reading: path|cycle|complete|complete_bipartite|circulant");
        cmd->add_option("--n", n, "order for path/cycle/circulant");
        cmd->add_option("--t", t, "order for complete");
        cmd->add_option("--a", a, "first side of complete_bipartite");
        cmd->add_option("--b", b, "second side of complete_bipartite");
        cmd->add_option("--jumps", jumps, "circulant jumps, e.g. --jumps 1,2")->delimiter(',');
    }

    FamilySpec family_spec() const {
        if (family == "path") return FamilySpec::path(n);
        if (family == "cycle") return FamilySpec::cycle(n);
        if (family == "complete") return FamilySpec::complete(t > 0 ? t : n);
        if (family == "complete_bipartite") return FamilySpec::complete_bipartite(a, b);
        if (family == "circulant") return FamilySpec::circulant(n, jumps);
        throw InputError("unknown family \"" + family + "\"");
    }

    Graph load() const {
        if (!family.empty()) return generate_family(family_spec());
        std::string text;
        if (input == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream in(input);
            if (!in) throw InputError("cannot open graph file " + input);
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) throw InputError("empty graph input");
        auto last = text.find_last_not_of(" \t\r\n");
        text = text.substr(first, last - first + 1);
        // JSON if it parses as a JSON object, otherwise one graph6 line
        if (text.front() == '{') {
            auto j = mycimm::Json::parse(text, nullptr, /*allow_exceptions=*/false);
            if (!j.is_discarded()) return graph_from_json(j);
        }
        return parse_graph6(text.substr(0, text.find_first_of("\r\n")));
    }
};

ImmersionCertificate load_cert(const std::string& path) {
    return load_certificate_file(std::filesystem::path(path));
}

std::int64_t default_budget() {
    if (const char* env = std::getenv("MYCIMM_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw InputError("MYCIMM_BUDGET is not an integer");
        }
    }
    return SearchBudget{}.max_nodes;
}

void emit_line(const mycimm::Json& j) { std::cout << j.dump() << "\n"; }

} // namespace

namespace {

int run_app(int argc, char** argv) {
    CLI::App app{"clique immersions in generalized Mycielski graphs"};
    app.require_subcommand(1);
    int exit_code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family graph");
    auto gen_in = std::make_shared<GraphInput>();
    gen_in->attach(gen);
    auto gen_json = std::make_shared<bool>(false);
    gen->add_flag("--json", *gen_json, "emit JSON instead of graph6");
    gen->callback([gen_in, gen_json] {
        Graph g = generate_family(gen_in->family_spec());
        if (*gen_json)
            emit_line(graph_to_json(g));
        else
            std::cout << emit_graph6(g) << "\n";
    });

    // myc
    auto* myc = app.add_subcommand("myc", "build the m-Mycielskian of a graph");
    auto myc_in = std::make_shared<GraphInput>();
    myc_in->attach(myc);
    auto myc_m = std::make_shared<int>(0);
    myc->add_option("--m", *myc_m, "number of levels (>= 1)")->required();
    auto myc_json = std::make_shared<bool>(false);
    myc->add_flag("--json", *myc_json, "emit JSON (with labels) instead of graph6");
    myc->callback([myc_in, myc_m, myc_json] {
        MycGraph mg = mycielskian(myc_in->load(), *myc_m);
        if (*myc_json)
            emit_line(myc_graph_to_json(mg));
        else
            std::cout << emit_graph6(mg.graph) << "\n";
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "degree-based upper bound for im(G)");
    auto bounds_in = std::make_shared<GraphInput>();
    bounds_in->attach(bounds);
    auto bounds_json = std::make_shared<bool>(false);
    bounds->add_flag("--json", *bounds_json, "emit bound plus degree histogram as JSON");
    bounds->callback([bounds_in, bounds_json] {
        Graph g = bounds_in->load();
        int bound = degree_upper_bound(g);
        if (*bounds_json) {
            mycimm::Json hist = mycimm::Json::object();
            for (auto [deg, count] : degree_histogram(g)) hist[std::to_string(deg)] = count;
            emit_line({{"degree_upper_bound", bound}, {"degree_histogram", hist}});
        } else {
            std::cout << bound << "\n";
        }
    });

    // solve
    auto* solve = app.add_subcommand("solve", "exact immersion number under a node budget");
    auto solve_in = std::make_shared<GraphInput>();
    solve_in->attach(solve);
    auto solve_budget = std::make_shared<std::int64_t>(default_budget());
    solve->add_option("--budget", *solve_budget, "search budget in nodes");
    auto solve_jobs = std::make_shared<int>(1);
    solve->add_option("--jobs", *solve_jobs, "worker threads (results are identical)");
    auto solve_hints = std::make_shared<std::vector<std::string>>();
    solve->add_option("--hint", *solve_hints, "certificate file seeding the lower bound")
        ->take_all();
    solve->callback([solve_in, solve_budget, solve_jobs, solve_hints] {
        Graph g = solve_in->load();
        std::vector<ImmersionCertificate> hints;
        for (const auto& h : *solve_hints) hints.push_back(load_cert(h));
        auto result = immersion_number(g, SearchBudget{*solve_budget}, hints, *solve_jobs);
        emit_line(solve_result_to_json(result));
    });

    // verify
    auto* verify = app.add_subcommand("verify", "check an immersion certificate");
    auto verify_in = std::make_shared<GraphInput>();
    verify_in->attach(verify);
    auto verify_cert = std::make_shared<std::string>();
    verify->add_option("--cert", *verify_cert, "certificate JSON file")->required();
    verify->callback([verify_in, verify_cert, &exit_code] {
        Graph g = verify_in->load();
        auto cert = load_cert(*verify_cert);
        auto report = verify_certificate(g, cert);
        mycimm::Json j = report_to_json(report);
        if (!g.labels().empty()) { // e.g. a Mycielskian given in JSON form
            mycimm::Json labeled = mycimm::Json::array();
            for (int v : cert.terminals) labeled.push_back(g.vertex_name(v));
            j["terminals_labeled"] = std::move(labeled);
        }
        emit_line(j);
        if (!report.valid) exit_code = 1;
    });

    // dnp
    auto* dnp = app.add_subcommand("dnp", "check or establish the distinct neighbor property");
    auto dnp_in = std::make_shared<GraphInput>();
    dnp_in->attach(dnp);
    auto dnp_cert = std::make_shared<std::string>();
    dnp->add_option("--cert", *dnp_cert, "certificate JSON file")->required();
    auto dnp_ensure = std::make_shared<bool>(false);
    dnp->add_flag("--ensure", *dnp_ensure, "rebuild the certificate when the property is absent");
    dnp->callback([dnp_in, dnp_cert, dnp_ensure] {
        Graph g = dnp_in->load();
        auto cert = load_cert(*dnp_cert);
        if (*dnp_ensure) {
            auto [fixed, assign] = ensure_dnp(g, cert);
            emit_line({{"certificate", certificate_to_json(fixed)},
                       {"assignment", assignment_to_json(assign)["assignment"]}});
        } else if (auto assign = check_dnp(g, cert)) {
            emit_line(assignment_to_json(*assign));
        } else {
            emit_line({{"assignment", nullptr}});
        }
    });

    // lift
    auto* lift = app.add_subcommand("lift", "lift a K_t certificate into the m-Mycielskian");
    auto lift_in = std::make_shared<GraphInput>();
    lift_in->attach(lift);
    auto lift_cert = std::make_shared<std::string>();
    lift->add_option("--cert", *lift_cert, "certificate JSON file")->required();
    auto lift_m = std::make_shared<int>(0);
    lift->add_option("--m", *lift_m, "number of levels (>= 1)")->required();
    lift->callback([lift_in, lift_cert, lift_m] {
        Graph g = lift_in->load();
        auto [cert, assign] = ensure_dnp(g, load_cert(*lift_cert));
        auto lifted = lift_certificate(g, cert, assign, *lift_m);
        MycGraph mg = mycielskian(g, *lift_m);
        mycimm::Json labeled_terminals = mycimm::Json::array();
        for (int v : lifted.terminals) labeled_terminals.push_back(mg.graph.vertex_name(v));
        mycimm::Json labeled_paths = mycimm::Json::object();
        for (const auto& [key, path] : lifted.paths) {
            mycimm::Json lp = mycimm::Json::array();
            for (int v : path) lp.push_back(mg.graph.vertex_name(v));
            labeled_paths[std::to_string(key.first) + "-" + std::to_string(key.second)] =
                std::move(lp);
        }
        emit_line({{"m", *lift_m},
                   {"certificate", certificate_to_json(lifted)},
                   {"terminals_labeled", std::move(labeled_terminals)},
                   {"paths_labeled", std::move(labeled_paths)}});
    });

    // conjecture
    auto* conj = app.add_subcommand("conjecture", "probe im of the m-Mycielskian of K_{m+1}");
    auto conj_m = std::make_shared<int>(0);
    conj->add_option("--m", *conj_m, "levels (>= 3)")->required();
    auto conj_budget = std::make_shared<std::int64_t>(default_budget());
    conj->add_option("--budget", *conj_budget, "search budget in nodes");
    auto conj_jobs = std::make_shared<int>(1);
    conj->add_option("--jobs", *conj_jobs, "worker threads (results are identical)");
    auto conj_fixtures = std::make_shared<std::string>("fixtures");
    conj->add_option("--fixtures", *conj_fixtures, "directory of known certificates");
    conj->callback([conj_m, conj_budget, conj_jobs, conj_fixtures] {
        std::string prefix = "myc" + std::to_string(*conj_m) + "_k" + std::to_string(*conj_m + 1);
        auto known = load_fixture_certificates(*conj_fixtures, prefix);
        auto report = explore_conjecture(*conj_m, SearchBudget{*conj_budget}, known, *conj_jobs);
        emit_line(conjecture_report_to_json(report));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
