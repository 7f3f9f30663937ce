#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sgm/cli.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& stdin_data = "") {
    std::istringstream in(stdin_data);
    std::ostringstream out, err;
    int code = sgm::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    fs::path p = temp_file(name);
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p.string();
}

} // namespace

TEST_CASE("gen writes canonical edge lists") {
    auto r = run_cli({"gen", "complete", "5", "--out", "-"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 4) == "n 5\n");
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 11);

    auto m = run_cli({"gen", "matching", "3", "--out", "-"});
    CHECK(m.out.substr(0, 4) == "n 6\n");
    CHECK(std::count(m.out.begin(), m.out.end(), '\n') == 4);

    auto g1 = run_cli({"gen", "gnm", "50", "100", "--seed", "42", "--out", "-"});
    auto g2 = run_cli({"gen", "gnm", "50", "100", "--seed", "42", "--out", "-"});
    CHECK(g1.out == g2.out);

    CHECK(run_cli({"gen", "gnm", "4", "7", "--out", "-"}).code == 2);
    CHECK(run_cli({"gen", "nosuch", "4", "--out", "-"}).code == 2);
}

TEST_CASE("moments command emits exact rationals") {
    auto star5 = run_cli({"gen", "star", "5", "--out", "-"});
    auto r = run_cli({"moments", "--input", "-", "--c", "3"}, star5.out);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "moments");
    CHECK(doc["results"]["moments"][0]["s1"]["exact"] == "6/5");
    CHECK(doc["results"]["stats"]["d2"] == 12);
    CHECK(doc["warnings"].empty());

    auto range = run_cli({"moments", "--input", "-", "--c", "2..3"},
                         run_cli({"gen", "complete", "5", "--out", "-"}).out);
    json rdoc = json::parse(range.out);
    REQUIRE(rdoc["results"]["moments"].size() == 2);
    CHECK(rdoc["results"]["moments"][0]["sigma2"]["exact"] == "0");
    CHECK(rdoc["results"]["moments"][1]["sigma2"]["exact"] == "0");
}

TEST_CASE("deterministic JSON output") {
    std::string graph = run_cli({"gen", "gnm", "12", "20", "--seed", "9", "--out", "-"}).out;
    auto a = run_cli({"tails", "--input", "-", "--c", "4", "--t", "3"}, graph);
    auto b = run_cli({"tails", "--input", "-", "--c", "4", "--t", "3"}, graph);
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}

TEST_CASE("bounds command") {
    std::string star8 = run_cli({"gen", "star", "8", "--out", "-"}).out;
    auto r = run_cli({"bounds", "--input", "-", "--c", "4"}, star8);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["density"]["bd_densest_lower"] == "3");
    CHECK(doc["results"]["density"]["bd_sparsest_upper"] == "0");
    CHECK(doc["results"]["dominance"]["dominant"] == "equal");

    std::string k6 = run_cli({"gen", "complete", "6", "--out", "-"}).out;
    json kdoc = json::parse(run_cli({"bounds", "--input", "-", "--c", "4"}, k6).out);
    CHECK(kdoc["results"]["density"]["bd_densest_lower"] == "6");

    std::string e5 = run_cli({"gen", "empty", "5", "--out", "-"}).out;
    auto edoc = run_cli({"bounds", "--input", "-", "--c", "3"}, e5);
    CHECK(edoc.code == 0);
    json ej = json::parse(edoc.out);
    CHECK_FALSE(ej["warnings"].empty());

    // Inconsistent override: exit 2.
    CHECK(run_cli({"bounds", "--input", "-", "--c", "4", "--u", "1"}, star8).code == 2);
}

TEST_CASE("tails command with diagnostics") {
    std::string star9 = run_cli({"gen", "star", "9", "--out", "-"}).out;
    auto r = run_cli({"tails", "--input", "-", "--c", "3", "--t", "2"}, star9);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["combined_ub"]["exact"] == "1/3");
    CHECK(doc["results"]["petrov_lb"].is_null()); // t exceeds s1
    CHECK_FALSE(doc["results"].contains("printed_variants"));

    auto d = run_cli({"tails", "--input", "-", "--c", "3", "--t", "2", "--diagnostics"}, star9);
    json ddoc = json::parse(d.out);
    CHECK(ddoc["results"].contains("printed_variants"));
    CHECK_FALSE(ddoc["warnings"].empty());

    auto zero = run_cli({"tails", "--input", "-", "--c", "3", "--t", "0"}, star9);
    CHECK(json::parse(zero.out)["results"]["combined_ub"]["exact"] == "1");
}

TEST_CASE("count command with tree aggregates") {
    std::string star6 = run_cli({"gen", "star", "6", "--out", "-"}).out;
    auto r = run_cli({"count", "--input", "-", "--kind", "independent_sets"}, star6);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["aggregates"]["independent_sets_total"]["exact"] == "33");

    std::string star5 = run_cli({"gen", "star", "5", "--out", "-"}).out;
    json sdoc = json::parse(
        run_cli({"count", "--input", "-", "--kind", "subtrees"}, star5).out);
    CHECK(sdoc["results"]["aggregates"]["subtrees_total"]["exact"] == "16");

    // Subtrees of a non-tree: validation error.
    std::string k4 = run_cli({"gen", "complete", "4", "--out", "-"}).out;
    CHECK(run_cli({"count", "--input", "-", "--kind", "subtrees"}, k4).code == 2);
}

TEST_CASE("significance command with labels") {
    std::string text = "a b\nb c\nc a\nd e\n";
    std::string path = write_temp("sgm_cli_labels.txt", text);
    auto r = run_cli({"significance", "--input", path, "--community", "a,b,c", "--alpha", "0.9"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["hyper_dense"]["m_community"] == 3);
    CHECK(doc["results"]["hyper_dense"]["c"] == 3);

    std::string community_path = write_temp("sgm_cli_comm.txt", "a\nb\nc\n");
    auto f = run_cli({"significance", "--input", path, "--community-file", community_path,
                      "--alpha", "0.9"});
    CHECK(json::parse(f.out)["results"]["hyper_dense"]["m_community"] == 3);

    CHECK(run_cli({"significance", "--input", path, "--community", "a,z", "--alpha", "0.5"}).code ==
          2);
    CHECK(run_cli({"significance", "--input", path, "--community", "a,b", "--alpha", "1.5"}).code ==
          2);
}

TEST_CASE("oracle command is the self-test") {
    std::string star5 = run_cli({"gen", "star", "5", "--out", "-"}).out;
    auto r = run_cli({"oracle", "--input", "-", "--c", "3"}, star5);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["results"]["match"] == true);
    CHECK(doc["results"]["distribution"]["counts"]["0"] == "4");
    CHECK(doc["results"]["distribution"]["counts"]["2"] == "6");

    std::string m3 = run_cli({"gen", "matching", "3", "--out", "-"}).out;
    json mdoc = json::parse(run_cli({"oracle", "--input", "-", "--c", "2"}, m3).out);
    CHECK(mdoc["results"]["distribution"]["counts"]["0"] == "12");
    CHECK(mdoc["results"]["distribution"]["counts"]["1"] == "3");
    CHECK(mdoc["results"]["match"] == true);

    // Budget refusal: exit 3.
    std::string k30 = run_cli({"gen", "complete", "30", "--out", "-"}).out;
    auto refused = run_cli({"oracle", "--input", "-", "--c", "15"}, k30);
    CHECK(refused.code == 3);
    CHECK(refused.err.find("155117520") != std::string::npos);
}

TEST_CASE("parse errors exit 2") {
    CHECK(run_cli({"moments", "--input", "-", "--c", "3"}, "0 1 2\n").code == 2);
    CHECK(run_cli({"moments", "--input", "-", "--c", "0"}, "0 1\n1 2\n2 3\n").code == 2);
    CHECK(run_cli({"moments", "--input", "/nonexistent/file", "--c", "2"}).code == 2);
    CHECK(run_cli({"nosuchcommand"}).code == 2);
}

TEST_CASE("pretty output stays human readable") {
    std::string star5 = run_cli({"gen", "star", "5", "--out", "-"}).out;
    auto r = run_cli({"moments", "--input", "-", "--c", "3", "--pretty"}, star5);
    CHECK(r.code == 0);
    CHECK(r.out.find("s1=1.2 (6/5)") != std::string::npos);
}

TEST_CASE("input digest depends on the graph, not the file bytes") {
    auto a = run_cli({"moments", "--input", "-", "--c", "2"}, "0 1\n1 0\n0 1\n");
    auto b = run_cli({"moments", "--input", "-", "--c", "2"}, "n 2\n0 1\n");
    json da = json::parse(a.out), db = json::parse(b.out);
    CHECK(da["input_digest"] == db["input_digest"]);
    auto c = run_cli({"moments", "--input", "-", "--c", "2"}, "0 1\n0 2\n");
    CHECK(json::parse(c.out)["input_digest"] != da["input_digest"]);
}

TEST_CASE("help and malformed invocations") {
    auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("moments") != std::string::npos);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"moments", "--c", "3", "--nosuchflag"}).code == 2);
}
