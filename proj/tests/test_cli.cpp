#include <gtest/gtest.h>
#include <wzw/cli.hpp>

#include <cstdlib>

using namespace wzw;
using wzw::cli::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "wzwanom");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParseSubalgebra) {
    AlgebraId a4{'A', 4}, d4{'D', 4}, e6{'E', 6}, e8{'E', 8};
    auto h = cli::parse_subalgebra("A2+A1", a4);
    EXPECT_EQ(h.provenance, "regular");
    EXPECT_EQ(h.label, "A2+A1");
    EXPECT_EQ(h.cartan_basis.size(), 3u);
    EXPECT_EQ(cli::parse_subalgebra("A1+A2", a4).label, "A2+A1");
    EXPECT_EQ(cli::parse_subalgebra("2A1@2", d4).label, "2A1@2");
    EXPECT_EQ(cli::parse_subalgebra("2A1@1", d4).label, "2A1@1");
    EXPECT_NE(cli::parse_subalgebra("2A1@1", d4).cartan_basis, cli::parse_subalgebra("2A1@2", d4).cartan_basis);
    EXPECT_EQ(cli::parse_subalgebra("g", e8).cartan_basis.size(), 8u);
    EXPECT_EQ(cli::parse_subalgebra("D4", d4).label, "g");
    EXPECT_EQ(cli::parse_subalgebra("2A2@i2", e6).row_id, "e6:table4:row2");
    EXPECT_EQ(cli::parse_subalgebra("e6:table2:row3", e6).provenance, "curated");
    // D2 is 2A1 outside the D series
    EXPECT_EQ(cli::parse_subalgebra("D2", e6).label, "2A1");
    EXPECT_EQ(cli::parse_subalgebra("D3", e6).label, "A3");

    EXPECT_THROW(cli::parse_subalgebra("3A2", a4), std::invalid_argument);     // rank overflow
    EXPECT_THROW(cli::parse_subalgebra("A2+2A1", a4), std::invalid_argument);  // sum of r_i + 1 too big
    EXPECT_THROW(cli::parse_subalgebra("Q3", a4), std::invalid_argument);
    EXPECT_THROW(cli::parse_subalgebra("A2@3", a4), std::invalid_argument);
    EXPECT_THROW(cli::parse_subalgebra("A2@i3", e6), std::invalid_argument);
    EXPECT_THROW(cli::parse_subalgebra("B2", a4), std::invalid_argument);      // not a regular subalgebra
    EXPECT_THROW(cli::parse_subalgebra("e6:table4:row2", a4), std::invalid_argument);
    EXPECT_THROW(cli::parse_subalgebra("e6:nope", e6), std::invalid_argument);
}

TEST(Cli, JsonRoundTrip) {
    const AlgebraData& d4 = algebra("D4");
    for (auto& w : d4.diagram_automorphisms)
        for (auto& z : d4.subgroups)
            for (int v : {1, -1}) {
                ModelConfig cfg = cli::make_config(d4, z, cli::parse_subalgebra("A3@2", d4.id), w, v);
                cli::Report r = cli::classify_report(cfg);
                json j = r;
                cli::Report back = json::parse(j.dump()).get<cli::Report>();
                EXPECT_EQ(back, r);
                cli::Report c = cli::check_report(cfg, 2);
                EXPECT_EQ(json(c).get<cli::Report>(), c);
                EXPECT_TRUE(c.level && c.anomalous);
            }
    for (auto key : {"algebra", "Z", "subalgebra", "twist", "variant", "admissible_modulus", "anomaly_free",
                     "witnesses", "extrapolated"}) {
        ModelConfig cfg = cli::make_config(d4, d4.subgroup("Z1"), full_embedding(d4), d4.outer("w1"), -1);
        json j = cli::classify_report(cfg);
        EXPECT_TRUE(j.contains(key)) << key;
        EXPECT_TRUE(j["extrapolated"].get<bool>());
    }
}

TEST(Cli, DocumentedExamples) {
    auto a4 = run({"check", "--g", "A4", "--Z", "Z5", "--h", "g", "--k", "1", "--json"});
    ASSERT_EQ(a4.code, 0) << a4.err;
    EXPECT_TRUE(json::parse(a4.out)["anomalous"].get<bool>());

    auto a5 = run({"classify", "--g", "A5", "--Z", "Z3", "--h", "2A2", "--json"});
    ASSERT_EQ(a5.code, 0) << a5.err;
    auto set = json::parse(a5.out)["anomaly_free"];
    EXPECT_EQ(set["modulus"], 3);
    EXPECT_EQ(set["residues"], json::array({0}));

    auto e7 = run({"check", "--g", "e7", "--Z", "Z2", "--h", "g", "--k", "2", "--json"});
    ASSERT_EQ(e7.code, 0) << e7.err;
    EXPECT_FALSE(json::parse(e7.out)["anomalous"].get<bool>());

    auto e6 = run({"classify", "--g", "e6", "--Z", "Z3", "--h", "2A2"});
    EXPECT_EQ(e6.code, 0);
    EXPECT_NE(e6.out.find("3Z"), std::string::npos);

    auto w4 = run({"check", "--g", "D4", "--Z", "full", "--h", "g", "--twist", "w4", "--variant", "-", "--k", "1"});
    EXPECT_EQ(w4.code, 0);
    EXPECT_NE(w4.out.find("anomalous    true"), std::string::npos);

    auto info = run({"info", "A5"});
    EXPECT_EQ(info.code, 0);
    for (auto s : {"Z2", "Z3", "Z6", "order 6"}) EXPECT_NE(info.out.find(s), std::string::npos) << s;

    auto subs = run({"subalgebras", "D5", "--regular", "--json"});
    EXPECT_EQ(subs.code, 0);
    EXPECT_EQ(json::parse(subs.out).size(), 15u);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nope"}).code, 2);
    EXPECT_EQ(run({"check", "--g", "A4"}).code, 2);
    EXPECT_EQ(run({"check", "--g", "A4", "--k", "x"}).code, 2);
    EXPECT_EQ(run({"classify", "--g", "Q9"}).code, 2);
    EXPECT_EQ(run({"classify", "--g", "A4", "--Z", "Z3"}).code, 2);
    EXPECT_EQ(run({"classify", "--g", "A4", "--twist", "w4"}).code, 2);
    EXPECT_EQ(run({"classify", "--g", "A4", "--variant", "-"}).code, 2);
    EXPECT_EQ(run({"classify", "--g", "A4", "--h", "A4+A1"}).code, 2);
    EXPECT_EQ(run({"check", "--g", "C3", "--Z", "Z2", "--k", "3"}).code, 3);
    EXPECT_EQ(run({"check", "--g", "D6", "--Z", "full", "--k", "1"}).code, 3);
    EXPECT_EQ(run({"reproduce"}).code, 2);
    EXPECT_EQ(run({"reproduce", "--target", "zzz"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ReproduceTargetsPass) {
    for (auto& t : cli::reproduce_targets()) {
        auto rows = cli::reproduce(t);
        EXPECT_FALSE(rows.empty()) << t;
        for (auto& r : rows) {
            EXPECT_TRUE(r.ok()) << t << " " << r.id << " " << r.quantity << ": " << r.expected << " vs " << r.got;
            EXPECT_FALSE(r.cite.empty());
        }
    }
    EXPECT_EQ(run({"reproduce", "--target", "e6-rank1"}).code, 0);
}

TEST(Cli, ReproduceDetectsMismatch) {
    // a copy of the data with one expectation flipped
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "wzwanom-mismatch";
    fs::create_directories(dir);
    std::ifstream in(data_dir() + "/e6.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto at = text.find("compat = Q\n");
    ASSERT_NE(at, std::string::npos);
    text.replace(at, 11, "compat = notP\n");
    std::ofstream(dir / "e6.txt") << text;
    setenv("WZWANOM_DATA_DIR", dir.c_str(), 1);
    EXPECT_EQ(run({"reproduce", "--target", "e6-rank1"}).code, 1);
    unsetenv("WZWANOM_DATA_DIR");
    EXPECT_EQ(run({"reproduce", "--target", "e6-rank1"}).code, 0);
    fs::remove_all(dir);
}
