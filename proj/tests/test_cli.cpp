#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "arcgraph/errors.hpp"
#include "arcgraph/io.hpp"
#include "cli.hpp"

using namespace arcgraph;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("arcgraph_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    Outcome run(std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = cli::dispatch(args, out, err);
        return {code, out.str(), err.str()};
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    static std::string slurp(const std::string& p) {
        std::ifstream in(p);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    fs::path dir_;
};

std::string golden(const std::string& name) {
    std::ifstream in(fs::path(ARCGRAPH_GOLDEN_DIR) / name);
    std::string s{std::istreambuf_iterator<char>(in), {}};
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

TEST_F(Cli, GenThenDelta) {
    ASSERT_EQ(run({"gen", "--kind", "tt", "--n", "3", "--out", path("g.json")}).code, 0);
    const auto r = run({"delta", "--k", "1", path("g.json")});
    ASSERT_EQ(r.code, 0);
    const Digraph d = io::digraph_from_json(io::json::parse(r.out));
    EXPECT_EQ(d.vertex_count(), 3u);
    EXPECT_EQ(d.arc_count(), 1u);
    EXPECT_EQ(trim(r.out), golden("tt3_delta.json"));
}

TEST_F(Cli, Golden) {
    EXPECT_EQ(trim(run({"gen", "--kind", "cyclic_triangle", "--n", "3"}).out), golden("c3.json"));
    ASSERT_EQ(run({"gen", "--kind", "k", "--n", "1", "--out", path("k1.json")}).code, 0);
    EXPECT_EQ(trim(run({"deltar", path("k1.json")}).out), golden("k1_deltar.json"));
    ASSERT_EQ(run({"gen", "--kind", "k", "--n", "3", "--out", path("k3.json")}).code, 0);
    EXPECT_EQ(trim(run({"chi", path("k3.json")}).out), golden("k3_chi.json"));
}

TEST_F(Cli, Numbers) {
    EXPECT_EQ(run({"bnk", "--n", "3", "--k", "2", "--table", path("t.json")}).out, "4\n");
    EXPECT_TRUE(fs::exists(path("t.json")));
    EXPECT_EQ(run({"bnk", "--n", "3", "--k", "2", "--table", path("t.json"), "--no-cache"}).out, "4\n");
    EXPECT_EQ(run({"dedekind", "--n", "3"}).out, "20\n");
    EXPECT_EQ(run({"max-tt", "--n", "2", "--k", "1"}).out, "4\n");
    const auto w = io::json::parse(run({"width", "--n", "4", "--k", "1"}).out);
    EXPECT_EQ(w.at("width"), 6);
    const auto ideals = io::json::parse(run({"ideals", "--n", "3", "--k", "1"}).out);
    EXPECT_EQ(ideals.at("m"), 8);
    EXPECT_EQ(ideals.at("levels"), io::json({1, 3, 3, 1}));
}

TEST_F(Cli, RoundTripIsByteIdentical) {
    for (std::string kind : {"complete", "tt", "cycle", "path", "dcycle", "loops", "empty"}) {
        const auto first = run({"gen", "--kind", kind, "--n", "4", "--out", path("a.json")});
        ASSERT_EQ(first.code, 0) << kind << first.err;
        const Digraph g = io::read_digraph(path("a.json"));
        EXPECT_EQ(trim(slurp(path("a.json"))), io::canonical(io::to_json(g)));
        // through the edge-list format as well
        {
            std::ofstream el(path("a.txt"));
            io::write_edge_list(el, g);
        }
        EXPECT_EQ(io::read_digraph(path("a.txt")), g);
    }
    ASSERT_EQ(run({"gen", "--kind", "k", "--n", "2", "--out", path("k2.json")}).code, 0);
    ASSERT_EQ(run({"deltar", path("k2.json"), "--out", path("dr.json")}).code, 0);
    const Digraph dr = io::read_digraph(path("dr.json"));
    EXPECT_EQ(io::canonical(io::to_json(dr)), trim(slurp(path("dr.json"))));
    ASSERT_EQ(run({"delta", "--k", "2", path("k2.json"), "--out", path("d2.json")}).code, 0);
    EXPECT_EQ(io::canonical(io::to_json(io::read_digraph(path("d2.json")))), trim(slurp(path("d2.json"))));
}

TEST_F(Cli, HasseDiagramOfFreeLatticeOnThree) {
    const auto r = run({"export-dot", "--n", "3", "--k", "2"});
    ASSERT_EQ(r.code, 0);
    const std::regex node(R"(^  \d+ \[)"), edge(R"(^  \d+ -> \d+)");
    std::size_t nodes = 0, edges = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) {
        nodes += std::regex_search(line, node);
        edges += std::regex_search(line, edge);
    }
    EXPECT_EQ(nodes, 20u);
    EXPECT_EQ(edges, iterated_ideal_lattice(3, 2).covers().size());
}

TEST_F(Cli, DotForDigraph) {
    ASSERT_EQ(run({"gen", "--kind", "cycle", "--n", "4", "--out", path("c4.json")}).code, 0);
    const auto merged = run({"export-dot", "--symmetric", path("c4.json")}).out;
    const auto plain = run({"export-dot", path("c4.json")}).out;
    EXPECT_NE(merged.find("dir=none"), std::string::npos);
    EXPECT_EQ(std::count(plain.begin(), plain.end(), '>'), 8);
}

TEST_F(Cli, HomAndCore) {
    ASSERT_EQ(run({"gen", "--kind", "cycle", "--n", "6", "--out", path("c6.json")}).code, 0);
    ASSERT_EQ(run({"gen", "--kind", "k", "--n", "2", "--out", path("k2.json")}).code, 0);
    auto hom = io::json::parse(run({"hom", path("c6.json"), path("k2.json")}).out);
    EXPECT_TRUE(hom.at("exists"));
    EXPECT_EQ(hom.at("assignment").size(), 6u);
    hom = io::json::parse(run({"hom", path("k2.json"), path("c6.json")}).out);
    EXPECT_TRUE(hom.at("exists"));
    const auto core = io::json::parse(run({"core", path("k2.json")}).out);
    EXPECT_EQ(core.at("core").at("n"), 4);
    io::write_text(path("p.json"), R"({"m":3,"less":[[0,1]]})");
    const auto check = run({"core", "--poset", path("p.json")});
    EXPECT_EQ(check.code, 0);
    EXPECT_EQ(check.out, "true\n");
}

TEST_F(Cli, Verify) {
    const auto r = run({"verify", "--corpus", "small", "--k", "1,2", "--table", path("t.json"), "--out",
                        path("r.jsonl")});
    EXPECT_EQ(r.code, 0) << r.err;
    std::ifstream in(path("r.jsonl"));
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line); ++lines) EXPECT_TRUE(io::json::parse(line).at("agreement"));
    EXPECT_EQ(lines, 9u);
    EXPECT_NE(r.out.find("chromatic_formula"), std::string::npos);

    io::write_text(path("corpus.json"),
                   R"({"graphs":[{"name":"P3","graph":{"n":3,"arcs":[[0,1],[1,0],[1,2],[2,1]]}}]})");
    const auto custom = run({"verify", "--corpus", path("corpus.json"), "--table", path("t.json")});
    EXPECT_EQ(custom.code, 0);
    EXPECT_NE(custom.out.find("\"instance\":\"P3\""), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"gen", "--kind", "nonsense", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"chi", path("missing.json")}).code, 2);
    io::write_text(path("bad.txt"), "n 2\n0 5\n");
    const auto bad = run({"chi", path("bad.txt")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_FALSE(bad.err.empty());
    io::write_text(path("loop.txt"), "n 1\n0 0\n");
    EXPECT_EQ(run({"chi", path("loop.txt")}).code, 2);
    EXPECT_EQ(run({"dedekind", "--n", "6", "--budget", "1000"}).code, 3);
    EXPECT_EQ(run({"bnk", "--n", "5", "--k", "2", "--budget", "100", "--table", path("t.json")}).code, 3);
    io::write_text(path("t.json"), R"({"entries":[{"n":3,"k":2,"b":5}]})");
    EXPECT_EQ(run({"bnk", "--n", "3", "--k", "2", "--no-cache", "--table", path("t.json")}).code, 1);
    io::write_text(path("cyc.json"), R"({"m":2,"less":[[0,1],[1,0]]})");
    EXPECT_EQ(run({"width", "--poset", path("cyc.json")}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Io, EdgeListParsing) {
    std::istringstream in("# comment\nn 3\n0 1 # trailing\n\n1 2\n");
    const Digraph g = io::read_edge_list(in);
    EXPECT_EQ(g.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}}));
    std::istringstream no_header("0 1\n");
    EXPECT_THROW(io::read_edge_list(no_header), InvalidInput);
    std::istringstream junk("n 2\n0 1 2\n");
    EXPECT_THROW(io::read_edge_list(junk), InvalidInput);
}

TEST(Io, PosetJson) {
    const Poset p = io::poset_from_json(io::json::parse(R"({"m":3,"less":[[0,1],[1,2]]})"));
    EXPECT_TRUE(p.less(0, 2));
    EXPECT_EQ(io::to_json(p).at("less").size(), 3u);
    const Poset l = iterated_ideal_lattice(2, 1);
    EXPECT_EQ(io::to_json(l).at("labels"), io::json::parse("[[],[0],[1],[0,1]]"));
    EXPECT_THROW(io::poset_from_json(io::json::parse(R"({"m":2})")), InvalidInput);
}
