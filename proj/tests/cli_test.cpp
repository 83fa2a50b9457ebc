#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "sigmacol/families.hpp"
#include "sigmacol/io.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SIGMACOL_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

fs::path workdir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / "sigmacol_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    auto p = workdir() / name;
    std::ofstream out(p);
    out << text;
    return p.string();
}

} // namespace

TEST_CASE("gen writes parseable files and stats") {
    auto prefix = (workdir() / "k4").string();
    auto r = run("gen --family kstar -n 4 --out " + prefix);
    REQUIRE(r.exit_code == 0);
    json stats = json::parse(r.out);
    CHECK(stats["vertices"] == 10);
    CHECK(stats["edges"] == 12);
    CHECK(stats["rho"] == 2);
    CHECK(stats["chi_sigma_lower"] == 4);

    std::ifstream gf(prefix + ".graph");
    auto g = sigmacol::parse_graph(gf);
    CHECK(g.vertex_count() == 10);
    std::ifstream sf(prefix + ".sigma");
    auto sets = sigmacol::parse_sigma(sf, 10);
    CHECK(sets.depth == 1);
}

TEST_CASE("build-sigma-graph on the K_4* fixture") {
    auto prefix = (workdir() / "b4").string();
    REQUIRE(run("gen --family kstar -n 4 --out " + prefix).exit_code == 0);
    auto out = (workdir() / "b4_sigma.graph").string();
    auto r = run("build-sigma-graph " + prefix + ".graph " + prefix + ".sigma --out " + out);
    REQUIRE(r.exit_code == 0);
    json stats = json::parse(r.out);
    CHECK(stats["sigma_graph_edges"] == 6);
    CHECK(stats["rho"] == 2);
    std::ifstream gf(out);
    CHECK(sigmacol::parse_graph(gf).edge_count() == 6);
}

TEST_CASE("build-sigma-graph with an empty sigma file") {
    auto gpath = write_file("c4.graph.txt", "4 4\n0 1\n0 3\n1 2\n2 3\n");
    auto spath = write_file("empty.sigma", "# nothing constrained\n");
    auto r = run("build-sigma-graph " + gpath + " " + spath);
    REQUIRE(r.exit_code == 0);
    json stats = json::parse(r.out);
    CHECK(stats["sigma_graph_edges"] == 0);
    CHECK(stats["rho"] == 0);
}

TEST_CASE("build-sigma-graph reports validation errors") {
    auto gpath = write_file("bad.graph", "3 2\n0 1\n1 2\n");
    auto spath = write_file("bad.sigma", "0: 2\n"); // vertex 2 not a depth-1 neighbor of 0
    auto r = run("build-sigma-graph " + gpath + " " + spath);
    CHECK(r.exit_code == 2);
}

TEST_CASE("color strategies") {
    auto prefix = (workdir() / "c4").string();
    REQUIRE(run("gen --family kstar -n 4 --out " + prefix).exit_code == 0);
    std::string files = prefix + ".graph " + prefix + ".sigma";

    SECTION("exact finds 4 colors") {
        auto r = run("color " + files + " --strategy exact");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(j["palette_size"] == 4);
        CHECK(j["valid"] == true);
    }
    SECTION("greedy is valid") {
        auto r = run("color " + files + " --strategy greedy");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(j["valid"] == true);
    }
    SECTION("star pipeline is valid") {
        auto r = run("color " + files + " --strategy star-pipeline");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out)["valid"] == true);
    }
    SECTION("also-proper keeps validity") {
        auto r = run("color " + files + " --strategy greedy --also-proper");
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out)["valid"] == true);
    }
}

TEST_CASE("star pipeline rejects depth-2 systems with exit 2") {
    auto prefix = (workdir() / "s4").string();
    REQUIRE(run("gen --family star -n 4 --out " + prefix).exit_code == 0);
    auto r = run("color " + prefix + ".graph " + prefix + ".sigma --strategy star-pipeline");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cap exceeded maps to exit 3") {
    auto prefix = (workdir() / "k9").string();
    REQUIRE(run("gen --family kstar -n 9 --out " + prefix).exit_code == 0); // 45 vertices
    auto r = run("color " + prefix + ".graph " + prefix + ".sigma --strategy exact");
    CHECK(r.exit_code == 3);
    auto ok = run("color " + prefix + ".graph " + prefix + ".sigma --strategy exact --cap 64");
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out)["palette_size"] == 9);
}

TEST_CASE("parse errors map to exit 2") {
    auto bad = write_file("broken.graph", "2 1\n1 1\n");
    CHECK(run("mad " + bad).exit_code == 2);
    CHECK(run("clique does_not_exist.graph").exit_code == 2);
}

TEST_CASE("mad and clique commands") {
    auto prefix = (workdir() / "m4").string();
    REQUIRE(run("gen --family kstar -n 4 --out " + prefix).exit_code == 0);
    auto r = run("mad " + prefix + ".graph " + prefix + ".sigma");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["mad"] == "3");
    CHECK(j["floor_plus_one"] == 4);

    auto g_only = run("mad " + prefix + ".graph");
    CHECK(json::parse(g_only.out)["of"] == "graph");

    auto c = run("clique " + prefix + ".graph " + prefix + ".sigma");
    REQUIRE(c.exit_code == 0);
    CHECK(json::parse(c.out)["omega"] == 4);
}

TEST_CASE("arrangeability and star-color commands") {
    auto gpath = write_file("p4.graph", "4 3\n0 1\n1 2\n2 3\n");
    auto r = run("arrangeability " + gpath + " --exact");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["k"] == 0);

    auto sc = run("star-color " + gpath);
    REQUIRE(sc.exit_code == 0);
    CHECK(json::parse(sc.out)["valid"] == true);

    auto lists = write_file("p4.lists", "0: 0 1 2\n1: 0 1 2\n2: 0 1 2\n3: 0 1 2\n");
    auto lc = run("star-color " + gpath + " --lists " + lists);
    REQUIRE(lc.exit_code == 0);
    CHECK(json::parse(lc.out)["valid"] == true);
}

TEST_CASE("extraction commands") {
    SECTION("extract-subdivision on K_6*") {
        auto prefix = (workdir() / "k6").string();
        REQUIRE(run("gen --family kstar -n 6 --out " + prefix).exit_code == 0);
        auto r = run("extract-subdivision " + prefix + ".graph " + prefix + ".sigma 2");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(j["verified"] == true);
        CHECK(j["branch"].size() == 2);
    }
    SECTION("extract-rank2 on an all-pairs hypergraph") {
        std::string text = "74 2701\n";
        for (int u = 0; u < 74; ++u)
            for (int v = u + 1; v < 74; ++v)
                text += std::to_string(u) + " " + std::to_string(v) + "\n";
        auto hpath = write_file("pairs.hg", text);
        auto r = run("extract-rank2 " + hpath + " 3 --seed 5");
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        CHECK(j["verified"] == true);
        CHECK(j["size"].get<int>() >= 3);
    }
}

TEST_CASE("verify command is deterministic and exits by outcome") {
    auto a = run("verify --suite chain --seed 11 --count 12");
    auto b = run("verify --suite chain --seed 11 --count 12");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out); // byte-for-byte
    json j = json::parse(a.out);
    CHECK(j["pass"] == true);
    CHECK(j["failures"] == 0);
    CHECK(j["checks"].size() > 0);

    for (std::string suite : {"lemma1", "arrangeability", "turan", "families"}) {
        auto r = run("verify --suite " + suite + " --seed 11 --count 6");
        INFO(suite);
        CHECK(r.exit_code == 0);
    }
    CHECK(run("verify --suite nonsense").exit_code == 2);
}

TEST_CASE("star pipeline falls back to greedy star colorings above the cap") {
    auto prefix = (workdir() / "big").string();
    REQUIRE(run("gen --family random -n 20 --edge-prob 0.3 --rho-cap 3 --seed 4 --out " + prefix)
                .exit_code == 0);
    auto r = run("color " + prefix + ".graph " + prefix + ".sigma --strategy star-pipeline");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["bound_used"].get<std::string>().find("greedy star") != std::string::npos);
}

TEST_CASE("star-color with a too-small palette exits 2") {
    auto gpath = write_file("k4c.graph", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(run("star-color " + gpath + " --palette 3").exit_code == 2);
    CHECK(run("star-color " + gpath + " --palette 4").exit_code == 0);
}

TEST_CASE("gen random determinism through the CLI") {
    auto p1 = (workdir() / "r1").string();
    auto p2 = (workdir() / "r2").string();
    REQUIRE(run("gen --family random -n 12 --edge-prob 0.4 --rho-cap 3 --seed 9 --out " + p1)
                .exit_code == 0);
    REQUIRE(run("gen --family random -n 12 --edge-prob 0.4 --rho-cap 3 --seed 9 --out " + p2)
                .exit_code == 0);
    std::ifstream f1(p1 + ".graph"), f2(p2 + ".graph");
    std::string s1((std::istreambuf_iterator<char>(f1)), {});
    std::string s2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(s1 == s2);
}

TEST_CASE("gen subdivision family") {
    auto pat = write_file("c5.graph", "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    auto prefix = (workdir() / "sub5").string();
    auto r = run("gen --family subdivision --pattern " + pat +
                 " --subdivisions 3 --depth 1 --out " + prefix);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["depth"] == 3);
    CHECK(j["rho"] == 2);
    CHECK(j["vertices"] == 20);
}
