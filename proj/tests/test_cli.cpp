#include "cli.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

using namespace univadj;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "univadj");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const std::string kTwoK2 = "4\n0 1\n2 3\n";

}  // namespace

TEST(Cli, CharpolyFormulaPath) {
    const auto r = run({"charpoly", "--coeffs", "preset:seidel"}, kTwoK2);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(first_line(r.out), to_human_string(univadj::testing::roots_poly({-3, 1, 1, 1})));
    EXPECT_NE(r.out.find("path=formula"), std::string::npos);
}

TEST(Cli, CharpolyGraph6) {
    const auto r = run({"charpoly", "--coeffs", "1,0,0,0"}, "A_\n");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(first_line(r.out), "x^2 - 1");
}

TEST(Cli, FormulaOnIrregularIsRefused) {
    const auto r = run({"charpoly", "--method", "formula"}, "3\n0 1\n1 2\n");
    EXPECT_EQ(r.code, cli::kInapplicable);
    EXPECT_NE(r.err.find("component 0 is irregular"), std::string::npos);

    const auto autod = run({"charpoly", "--method", "auto"}, "3\n0 1\n1 2\n");
    EXPECT_EQ(autod.code, 0);
    EXPECT_NE(autod.out.find("path=oracle"), std::string::npos);
}

TEST(Cli, Spectrum) {
    EXPECT_EQ(first_line(run({"spectrum", "--coeffs", "preset:seidel"}, kTwoK2).out), "-3 (x1), 1 (x3)");
    EXPECT_EQ(first_line(run({"spectrum", "--coeffs", "preset:laplacian", "--catalog", "C4"}).out),
              "0 (x1), 2 (x2), 4 (x1)");
    EXPECT_EQ(first_line(run({"spectrum", "--coeffs", "2,3/4,-5,7"}, "@").out), "-17/4 (x1)");
}

TEST(Cli, SpectrumIrrationalRendering) {
    const auto r = run({"spectrum", "--catalog", "C5", "--tol", "1/1000"});
    ASSERT_EQ(r.code, 0) << r.err;
    // C5: 2 once, and the two roots of x^2 + x - 1 twice each
    const std::string line = first_line(r.out);
    EXPECT_NE(line.find("2 (x1)"), std::string::npos);
    const Polynomial golden({-1, 1, 1});
    std::size_t pos = 0;
    int intervals = 0;
    while ((pos = line.find('[', pos)) != std::string::npos) {
        const auto comma = line.find(',', pos);
        const auto close = line.find(']', comma);
        auto decimal = [](std::string s) {
            while (!s.empty() && s.front() == ' ') {
                s.erase(0, 1);
            }
            const bool neg = s[0] == '-';
            if (neg) {
                s.erase(0, 1);
            }
            const auto dot = s.find('.');
            const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            Integer scale = 1;
            for (std::size_t k = dot + 1; k < s.size(); ++k) {
                scale *= 10;
            }
            const Rational v = make_rational(Integer(digits, 10), scale);
            return neg ? Rational(-v) : v;
        };
        const Rational lo = decimal(line.substr(pos + 1, comma - pos - 1));
        const Rational hi = decimal(line.substr(comma + 1, close - comma - 1));
        EXPECT_LT(golden.sign_at(lo) * golden.sign_at(hi), 0) << line;
        EXPECT_LE(hi - lo, make_rational(12, 10000)) << line;
        EXPECT_EQ(line.substr(close + 1, 5), " (x2)");
        ++intervals;
        pos = close;
    }
    EXPECT_EQ(intervals, 2);
}

TEST(Cli, SpectrumRecord) {
    const auto r = run({"spectrum", "--catalog", "C5", "--output", "record", "--tol", "1/100"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["roots"].size(), 3u);
    unsigned total = 0;
    for (const auto& root : j["roots"]) {
        total += root["multiplicity"].get<unsigned>();
        const auto lo = parse_rational(root["lower"].get<std::string>());
        const auto hi = parse_rational(root["upper"].get<std::string>());
        EXPECT_LE(hi - lo, make_rational(1, 100));
    }
    EXPECT_EQ(total, 5u);
}

TEST(Cli, Verify) {
    EXPECT_EQ(run({"verify", "--coeffs", "preset:seidel"}, kTwoK2).code, 0);

    const std::string k3_c4_k1 = "8\n0 1\n1 2\n0 2\n3 4\n4 5\n5 6\n6 3\n";
    const auto r = run({"verify", "--coeffs", "3/2,-1,2,5", "--output", "record"}, k3_c4_k1);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["status"], "equal");
    EXPECT_EQ(j["degree"], 8);
    EXPECT_EQ(j["formula_poly"], j["oracle_poly"]);
    EXPECT_FALSE(j.contains("first_mismatch_index"));

    const auto p3 = run({"verify"}, "3\n0 1\n1 2\n");
    EXPECT_EQ(p3.code, cli::kInapplicable);
    EXPECT_NE(p3.out.find("closed form inapplicable"), std::string::npos);
    const auto p3r = run({"verify", "--output", "record"}, "3\n0 1\n1 2\n");
    const auto jr = nlohmann::json::parse(p3r.out);
    EXPECT_EQ(jr["status"], "inapplicable");
    EXPECT_TRUE(jr["formula_poly"].is_null());
    EXPECT_EQ(jr["oracle_poly"].size(), 4u);
}

TEST(Cli, Matrix) {
    EXPECT_EQ(first_line(run({"matrix", "--coeffs", "preset:seidel"}, "A_").out), "[[0,-1],[-1,0]]");
    EXPECT_EQ(first_line(run({"matrix"}, "A_").out), "[[0,1],[1,0]]");
    EXPECT_EQ(first_line(run({"matrix", "--of-complement"}, "A_").out), "[[0,0],[0,0]]");
    const auto j = nlohmann::json::parse(run({"matrix", "--output", "record", "--coeffs", "1/2,0,0,0"}, "A_").out);
    EXPECT_EQ(j["entries"][0][1], "1/2");
}

TEST(Cli, OfComplementMatchesComplementGraph) {
    // Q(complement of 2K2) = Q(C4)
    const auto a = run({"charpoly", "--coeffs", "preset:signless_laplacian", "--of-complement"}, kTwoK2);
    const auto b = run({"charpoly", "--coeffs", "preset:signless_laplacian", "--catalog", "C4", "--method", "oracle"});
    EXPECT_EQ(first_line(a.out), first_line(b.out));
    EXPECT_NE(a.out.find("path=formula"), std::string::npos);
}

TEST(Cli, UsageAndParseErrors) {
    EXPECT_EQ(run({}).code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly", "--method", "magic"}, kTwoK2).code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly", "--coeffs", "0,1,1,1"}, kTwoK2).code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly", "--coeffs", "preset:normalized"}, kTwoK2).code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly"}, "A_?").code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly", "--format", "graph6"}, "2\n0 1").code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly"}, "3\n0 5").code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly"}, "0").code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly", "--tol", "0"}, kTwoK2).code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly", "/nonexistent/file"}).code, cli::kUsageError);
    EXPECT_EQ(run({"charpoly", "--catalog", "X9"}).code, cli::kUsageError);
    const auto bad = run({"charpoly"}, "A_?");
    EXPECT_NE(bad.err.find("byte offset 2"), std::string::npos);
}

TEST(Cli, FormulaAndOracleAgreeOnRandomRegularUnions) {
    std::mt19937_64 rng(107);
    const auto cat = univadj::testing::regular_catalog(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Graph> parts;
        std::size_t total = 0;
        while (total < 6) {
            const auto& e = cat[rng() % cat.size()];
            if (total + e.graph.order() > 12) {
                break;
            }
            parts.push_back(e.graph);
            total += e.graph.order();
        }
        const std::string g6 = to_graph6(disjoint_union(parts));
        const std::string coeffs = to_string(univadj::testing::random_coeffs(rng));
        const auto f = run({"charpoly", "--method", "formula", "--coeffs", coeffs}, g6);
        const auto o = run({"charpoly", "--method", "oracle", "--coeffs", coeffs}, g6);
        ASSERT_EQ(f.code, 0) << f.err;
        EXPECT_EQ(first_line(f.out), first_line(o.out));
    }
}

#ifdef UNIVADJ_CLI_PATH
TEST(CliBinary, ExitCodesFromRealProcess) {
    auto exit_of = [](const std::string& cmd) {
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };
    const std::string bin = UNIVADJ_CLI_PATH;
    EXPECT_EQ(exit_of("printf 'A_' | " + bin + " charpoly > /dev/null"), 0);
    EXPECT_EQ(exit_of("printf 'A_?' | " + bin + " charpoly 2> /dev/null"), 1);
    EXPECT_EQ(exit_of("printf '3\\n0 1\\n1 2\\n' | " + bin + " verify > /dev/null"), 2);
    EXPECT_EQ(exit_of(bin + " verify --catalog K3,3 --coeffs preset:seidel > /dev/null"), 0);
}
#endif
