#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "orcd/errors.hpp"
#include "orcd/info.hpp"

using namespace orcd;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ORCD_TEST_DATA_DIR) + "/" + name; }

std::vector<std::vector<double>> parse_csv(const std::string& text, std::vector<std::string>* header) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool first = true;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(cells, cell, ',')) {
      if (first) {
        header->push_back(cell);
      } else {
        row.push_back(std::stod(cell));
      }
    }
    if (!first) rows.push_back(row);
    first = false;
  }
  return rows;
}

fs::path scratch(const char* name) { return fs::temp_directory_path() / (std::string("orcd_cli_") + name); }

}  // namespace

TEST(Grid, Parse) {
  const cli::GridSpec g = cli::parse_grid("0:0.5:11");
  EXPECT_EQ(g.start, 0.0);
  EXPECT_EQ(g.stop, 0.5);
  EXPECT_EQ(g.steps, 11u);
  EXPECT_THROW(cli::parse_grid("0:0.5:1"), UsageError);
  EXPECT_THROW(cli::parse_grid("0;0.5;11"), UsageError);
  EXPECT_THROW(cli::parse_grid("1:0:5"), UsageError);
  EXPECT_THROW(cli::parse_grid("0:1:5x"), UsageError);
}

TEST(Fig4, DefaultCurve) {
  const Result r = run({"fig4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> header;
  const auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header, (std::vector<std::string>{"delta", "cutset", "df", "cf", "pdcf"}));
  ASSERT_EQ(rows.size(), 201u);
  EXPECT_EQ(rows[0][1], 1.2);
  for (std::size_t c = 2; c < 5; ++c) EXPECT_LE(rows[0][c], 1.2);

  // pdcf reaches the cut-set bound from h2^-1(0.8) on, and falls short of it
  // in between.
  const double threshold = inv_binary_entropy(0.8);
  for (const auto& row : rows) {
    EXPECT_LE(row[4], row[1] + 1e-12);
    if (row[0] >= threshold) {
      EXPECT_NEAR(row[4], row[1], 1e-9) << row[0];
    }
    if (row[0] > 0.05 && row[0] < threshold - 0.01) {
      EXPECT_LT(row[4], row[1]) << row[0];
    }
  }
}

TEST(Fig6, PdcfIsMaxAndEndpointsMeetCutset) {
  const Result r = run({"fig6", "--grid", "0:1:101"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_EQ(rows.size(), 101u);
  for (const auto& row : rows) EXPECT_DOUBLE_EQ(row[4], std::max(row[2], row[3]));
  EXPECT_DOUBLE_EQ(rows.front()[2], rows.front()[1]);
  EXPECT_DOUBLE_EQ(rows.back()[3], 1.0);
  EXPECT_DOUBLE_EQ(rows.back()[1], 1.0);

  const Result j = run({"fig6", "--format", "json", "--grid", "0:1:101"});
  ASSERT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  const auto& pdcf = doc["points"]["pdcf"];
  double switch_at = -1;
  for (std::size_t i = 1; i < pdcf.size(); ++i)
    if (pdcf[i]["branch"] != pdcf[i - 1]["branch"]) switch_at = doc["param_values"][i];
  EXPECT_NEAR(switch_at, std::sqrt(0.325), 0.01);
}

TEST(Fig7, CapacityColumn) {
  const Result r = run({"fig7"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_EQ(header.back(), "capacity");
  ASSERT_EQ(rows.size(), 201u);
  for (const auto& row : rows) {
    EXPECT_EQ(row[5], row[3]);
    EXPECT_NEAR(row[2], 0.0, 1e-12);
    if (row[0] > 0 && row[0] < 0.5) {
      EXPECT_LT(row[5], row[1]);
    }
  }
  EXPECT_NEAR(rows[0][5], 0.25, 1e-9);
}

TEST(Output, RerunsAreByteIdentical) {
  const fs::path a = scratch("a.csv"), b = scratch("b.csv");
  ASSERT_EQ(run({"fig4", "--out", a.string()}).code, 0);
  ASSERT_EQ(run({"fig4", "--out", b.string()}).code, 0);
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  const std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
  EXPECT_EQ(sa, run({"fig4"}).out);

  const std::vector<std::string> solve = {"solve", "--model", data("binary_half.json"), "--restarts", "2", "--seed", "5"};
  EXPECT_EQ(run(solve).out, run(solve).out);
  fs::remove(a);
  fs::remove(b);
}

TEST(Sweep, FromModelFile) {
  const Result r = run({"sweep", "--model", data("gaussian.json"), "--param", "power", "--grid", "0.1:1:4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "power,cutset,df,cf,pdcf");
  EXPECT_EQ(run({"sweep", "--model", data("gaussian.json"), "--param", "delta", "--grid", "0:1:4"}).code, 2);
  EXPECT_EQ(run({"sweep", "--model", data("zero_link.json"), "--param", "r1", "--grid", "0:1:4"}).code, 2);
}

TEST(Solve, BinaryModelReport) {
  const Result r = run({"solve", "--model", data("binary_half.json"), "--restarts", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_GE(doc["best_rate"].get<double>(), 0.136);
  EXPECT_LE(doc["best_rate"].get<double>(), 0.157);
  EXPECT_TRUE(doc["feasible"].get<bool>());
  EXPECT_EQ(doc["best_scheme"]["joint_ux1"].size(), doc["best_scheme"]["card_u"].get<std::size_t>());
}

TEST(Solve, ZeroRelayRate) {
  const Result r = run({"solve", "--model", data("zero_link.json"), "--restarts", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["best_rate"].get<double>(), 0.0, 1e-9);
}

TEST(Classify, StateFreeModel) {
  const Result r = run({"classify", "--model", data("binary_no_state.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NE(std::find(doc["cases"].begin(), doc["cases"].end(), "Case1"), doc["cases"].end());
  EXPECT_NEAR(doc["cutset"].get<double>(), 0.25, 1e-9);
}

TEST(ExitCodes, ValidationUsageAndIo) {
  const Result bad = run({"solve", "--model", data("bad_row.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("/chan_sr/1/0"), std::string::npos) << bad.err;

  EXPECT_EQ(run({"solve", "--model", data("gaussian.json")}).code, 2);
  EXPECT_EQ(run({"solve", "--model", data("binary_half.json"), "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"fig4", "--grid", "0:1:1"}).code, 2);
  EXPECT_EQ(run({"fig4", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);

  EXPECT_EQ(run({"solve", "--model", data("missing.json")}).code, 4);
  EXPECT_EQ(run({"fig7", "--out", "/nonexistent-dir/out.csv"}).code, 4);
}

TEST(ExitCodes, SolverErrorMapsToThree) {
  std::ostringstream err;
  const int code = cli::report_failure(std::make_exception_ptr(SolverError("did not converge", 1e-3)), err);
  EXPECT_EQ(code, 3);
  EXPECT_NE(err.str().find("did not converge"), std::string::npos);
  EXPECT_EQ(cli::report_failure(std::make_exception_ptr(DomainError("x")), err), 2);
  EXPECT_EQ(cli::report_failure(std::make_exception_ptr(IoError("x")), err), 4);
}
