#include "cli.hpp"
#include "expected.hpp"

#include "lfc/errors.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using lfc::cli::run;

namespace {

const fs::path kData = LFC_TEST_DATA_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    REQUIRE_MESSAGE(in.good(), "missing " << p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name, const std::string& content)
{
    const fs::path p = fs::temp_directory_path() / ("lfc_test_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("golden: table")
{
    const auto closed = invoke({"table"});
    CHECK(closed.code == 0);
    CHECK(closed.out == slurp(kData / "golden/table_examples.txt"));
    const auto oracle = invoke({"table", "--mode", "oracle"});
    CHECK(oracle.code == 0);
    CHECK(oracle.out == slurp(kData / "golden/table_oracle.txt"));
}

TEST_CASE("golden: nu")
{
    const auto q2 = invoke({"nu", "--p", "2", "--group", "S3", "--group", "A4", "--group", "S4", "--group", "D8"});
    CHECK(q2.code == 0);
    CHECK(q2.out == slurp(kData / "golden/nu_q2.txt"));

    const auto mm = invoke({"nu", "--p", "3", "--e", "2", "--mu-p", "--group", "S3", "--group", "C3"});
    CHECK(mm.code == lfc::cli::kMismatch);
    CHECK(mm.out == slurp(kData / "golden/nu_q3_mu3.txt"));
}

TEST_CASE("golden: census")
{
    const auto q2 = invoke({"census", "--p", "2", "--degree", "4"});
    CHECK(q2.code == 0);
    CHECK(q2.out == slurp(kData / "golden/census_q2_deg4.txt"));
    const auto q3 = invoke({"census", "--p", "3", "--degree", "3"});
    CHECK(q3.code == 0);
    CHECK(q3.out == slurp(kData / "golden/census_q3_deg3.txt"));
}

TEST_CASE("single-mode nu output")
{
    CHECK(invoke({"nu", "--p", "3", "--group", "S3", "--mode", "paper"}).out == "3,1,1,-,-\tS3\tpaper\t6\n");
    CHECK(invoke({"nu", "--p", "3", "--group", "S3", "--mode", "oracle"}).out == "3,1,1,-,-\tS3\toracle\t6\n");
    // a documented mismatch does not fail a single-mode query
    CHECK(invoke({"nu", "--p", "3", "--e", "2", "--mu-p", "--group", "S3", "--mode", "paper"}).code == 0);
    const auto big = invoke({"nu", "--p", "3", "--e", "60", "--group", "S3", "--mode", "paper"});
    CHECK(big.code == 0);
    CHECK(big.out == "3,60,1,-,-\tS3\tpaper\t105977895688040508785736083001\n");
}

TEST_CASE("usage errors exit 2")
{
    CHECK(invoke({"nu", "--p", "4", "--group", "S3"}).code == lfc::cli::kUsage);
    CHECK(invoke({"nu", "--p", "3", "--e", "1", "--mu-p", "--group", "S3"}).code == lfc::cli::kUsage);
    CHECK(invoke({"nu", "--p", "3", "--group", "Q8"}).code == lfc::cli::kUsage);
    CHECK(invoke({"nu", "--p", "3", "--group", "S3", "--mode", "fast"}).code == lfc::cli::kUsage);
    CHECK(invoke({"census", "--p", "3", "--degree", "5"}).code == lfc::cli::kUsage);
    CHECK(invoke({"frobnicate"}).code == lfc::cli::kUsage);
    CHECK(invoke({}).code == lfc::cli::kUsage);
    const auto e = invoke({"nu", "--p", "4", "--group", "S3"});
    CHECK_FALSE(e.err.empty());
}

TEST_CASE("diff on the fixture names the planted row")
{
    const auto r = invoke({"diff", (kData / "fixtures/expected.csv").string()});
    CHECK(r.code == lfc::cli::kCheckFailed);
    CHECK(r.out == slurp(kData / "golden/diff_expected.txt"));
    CHECK(r.out.find("line 4\tq2_s4_typo") != std::string::npos);
    CHECK(r.out.find("summary\t9/10 match") != std::string::npos);
}

TEST_CASE("diff with all rows matching exits 0")
{
    const auto p = scratch("ok.csv", std::string(lfc::io::kExpectedHeader) + "\n3,1,1,-,-,S3,6,a\n\n2,1,1,-,-,S4,3,b\n");
    const auto r = invoke({"diff", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("summary\t2/2 match") != std::string::npos);
}

TEST_CASE("diff parse errors exit 2 with the line number")
{
    const auto bad = scratch("bad.csv", std::string(lfc::io::kExpectedHeader) + "\n3,1,1,-,-,S3,6,a\n3,1,x,-,-,S3,6,b\n");
    const auto r = invoke({"diff", bad.string()});
    CHECK(r.code == lfc::cli::kUsage);
    CHECK(r.err.find("line 3") != std::string::npos);

    const auto nohdr = scratch("nohdr.csv", "3,1,1,-,-,S3,6,a\n");
    CHECK(invoke({"diff", nohdr.string()}).code == lfc::cli::kUsage);
    CHECK(invoke({"diff", "/nonexistent/expected.csv"}).code == lfc::cli::kUsage);
}

TEST_CASE("CSV parser")
{
    std::istringstream in(std::string(lfc::io::kExpectedHeader) + "\n2,2,1,+,+,iso:4,17,x-1\n");
    const auto rows = lfc::io::parse_expected_csv(in);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].line == 2);
    CHECK(rows[0].field.descriptor() == "2,2,1,-,+");
    CHECK(rows[0].target == "iso:4");
    CHECK(rows[0].expected_count == 17);
    CHECK(rows[0].source_label == "x-1");
    // mu_p is implied for p = 2 and written as '-', like the descriptor
    const std::string line = lfc::io::format_expected_row(rows[0]);
    CHECK(line == "2,2,1,-,+,iso:4,17,x-1");
    std::istringstream again(std::string(lfc::io::kExpectedHeader) + "\n" + line + "\n");
    CHECK(lfc::io::parse_expected_csv(again).at(0).field == rows[0].field);

    for (const char* row : {"2,1,1,-,-,S4,3", "2,1,1,-,-,S4,three,a", "2,1,1,?,-,S4,3,a", "2,1,1,-,-,S4,3,a b",
                            "4,1,1,-,-,S4,3,a", "3,1,1,-,+,S3,1,a"}) {
        CAPTURE(row);
        std::istringstream bad(std::string(lfc::io::kExpectedHeader) + "\n" + row + "\n");
        CHECK_THROWS_AS(lfc::io::parse_expected_csv(bad), lfc::io::ParseError);
    }
}

TEST_CASE("target evaluation")
{
    const auto Q2 = lfc::make_field(2, 1, 1);
    CHECK(lfc::io::evaluate_target(Q2, "deg:4") == 107);
    CHECK(lfc::io::evaluate_target(Q2, "ab:4") == 19);
    CHECK(lfc::io::evaluate_target(Q2, "iso:4") == 59);
    CHECK(lfc::io::evaluate_target(Q2, "paper:S4") == 3);
    CHECK(lfc::io::evaluate_target(Q2, "S4") == 3);
    CHECK_THROWS_AS(lfc::io::evaluate_target(Q2, "deg:x"), lfc::InvalidArgument);
    CHECK_THROWS_AS(lfc::io::evaluate_target(Q2, "Z9"), lfc::InvalidArgument);
}

TEST_CASE("check subcommand")
{
    const auto ok = invoke({"check", "--max-e", "2", "--max-f", "2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("failures\t0") != std::string::npos);

    const auto bad = invoke({"check", "--max-e", "2", "--max-f", "1", "--corrupt-fiber"});
    CHECK(bad.code == lfc::cli::kCheckFailed);
    CHECK(bad.out.find("FAIL\t") != std::string::npos);
    CHECK(bad.err.find("fiber") != std::string::npos);
}
