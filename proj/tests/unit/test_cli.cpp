#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#ifndef LIFSH_CLI_PATH
#error "LIFSH_CLI_PATH must name the CLI binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(LIFSH_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

const double kI14At1 = (std::atan(0.5) + std::log(1.6)) / (32.0 * M_PI * M_PI);

}  // namespace

TEST(CliEval, MarginalValues) {
  auto r = run("eval --fn i1m_hat --m 6 --p 1 --q 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["schema"], "1");
  EXPECT_NEAR(parse(r)["value"].get<double>(), 1.0, 1e-13);
  r = run("eval --fn i1m_hat --m 2 --p 1 --q 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(parse(r)["value"].get<double>(), 0.125, 1e-14);
}

TEST(CliEval, GeometricSeries) {
  const auto r = run("eval --fn eval_2f1 --a 1 --b 1 --c 1 --zre 0.3 --zim 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(parse(r)["value"].get<double>(), 1.0 / 0.7, 1e-15);
  EXPECT_EQ(parse(r)["value_im"].get<double>(), 0.0);
}

TEST(CliEval, Deterministic) {
  const std::string args = "eval --fn i1m --m 3.3 --p 0.7 --q 1.2";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliEval, CsvUsesFullPrecision) {
  const auto r = run("eval --fn c1_constant --m 4 --format csv");
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  const double v = std::stod(ls[1].substr(ls[1].find(',') + 1));
  EXPECT_EQ(v, 1.0 / (16.0 * M_PI * M_PI));
}

TEST(CliTable, PrintedI14) {
  const auto r = run("table --fn i14_closed --q 0.1:3:0.1");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  ASSERT_EQ(j["rows"].size(), 30u);
  const auto& row = j["rows"][9];
  EXPECT_NEAR(row[0].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(row[1].get<double>(), kI14At1, 1e-15);
}

TEST(CliTable, ConstantM6) {
  const auto r = run("table --fn special_m6 --q 0.5:1.5:0.5 --p 1 --format csv");
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "q,value,abs_err");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto a = ls[i].find(','), b = ls[i].find(',', a + 1);
    EXPECT_NEAR(std::stod(ls[i].substr(a + 1, b - a - 1)), 1.0, 1e-14);
  }
}

TEST(CliTable, EmptyRangeIsHeaderOnly) {
  const auto r = run("table --fn i14_closed --q 2:1:0.1 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q,value,abs_err\n");
}

TEST(CliTable, NeedsExactlyOneGridAxis) {
  EXPECT_EQ(run("table --fn i1m --m 3 --p 1 --q 1").code, 1);
  EXPECT_EQ(run("table --fn i1m --m 3 --p 0.5:1:0.5 --q 0.5:1:0.5").code, 1);
  EXPECT_EQ(run("table --fn i1m --m 3 --p 1 --q 0:1:0").code, 1);
}

TEST(CliErrors, ExitCodes) {
  EXPECT_EQ(run("eval --fn no_such_function --m 3").code, 1);
  EXPECT_EQ(run("eval --fn i1m --m 3 --p 1").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("eval --fn i1m --m 3 --p 1 --q 1 --format xml").code, 1);
  EXPECT_EQ(run("eval --fn i1m --m 6.5 --p 1 --q 1").code, 3);
  EXPECT_EQ(run("eval --fn eval_2f1 --a 1 --b 1 --c=-2 --zre 0.3").code, 3);
  EXPECT_EQ(run("eval --fn eval_f2 --a 0.5 --b 0.5 --bp 0.5 --c 1.5 --cp 1.5 --xre 0.45 --yre 0.45", "LIFSH_MAX_TERMS=4")
                .code,
            2);
}

TEST(CliErrors, NothingPrintedOnFailure) {
  const auto r = run("table --fn i1m --m 3 --p 1 --q -1:1:0.5");
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliVerify, SuitesPass) {
  for (const char* args : {"verify --suite special-cases --tol 1e-8", "verify --suite oracle --tol 1e-6",
                           "verify --suite horn-bridges --tol 1e-9"}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << args;
    const auto j = parse(r);
    EXPECT_EQ(j["failed"].get<int>(), 0) << args;
    EXPECT_GT(j["total"].get<int>(), 0) << args;
  }
}

TEST(CliVerify, FailureExitCode) {
  EXPECT_EQ(run("verify --suite f1-transform --tol 1e-30").code, 4);
  EXPECT_EQ(run("verify --suite no-such-suite").code, 1);
}

TEST(CliOracle, MasslessGrid) {
  const auto r = run("oracle-compare --fn i1m --m 4 --p 0.5:1.5:0.5 --q 0.5:1.5:0.5");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  ASSERT_EQ(j["rows"].size(), 9u);
  for (const auto& row : j["rows"]) EXPECT_LT(row["rel_dev"].get<double>(), 1e-6);
}

TEST(CliOracle, RandomMassPairs) {
  const auto r = run("oracle-compare --fn inner_jd_f1 --d 2 --p 1 --samples 5 --tol 1e-8");
  ASSERT_EQ(r.code, 0);
  const auto j = parse(r);
  ASSERT_EQ(j["rows"].size(), 5u);
  for (const auto& row : j["rows"]) EXPECT_LT(row["rel_dev"].get<double>(), 1e-8);
}

TEST(CliOracle, MassiveOneDimensional) {
  const auto r = run("oracle-compare --fn i3m --m 1 --p 0.5 --q 0.5:1.5:0.5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["rows"].size(), 3u);
  EXPECT_EQ(run("oracle-compare --fn i3m --m 0.5 --p 0.5 --q 1").code, 3);
  EXPECT_EQ(run("oracle-compare --fn special_m3 --p 0.5 --q 1").code, 1);
}

TEST(CliOutput, AtomicFileWrite) {
  const auto dir = std::filesystem::temp_directory_path() / ("lifsh_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = dir / "table.csv";
  const auto r = run("table --fn i14_closed --q 0.5:1:0.5 --format csv --out " + path.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(lines(ss.str()).size(), 3u);
  std::size_t entries = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) entries += e.is_regular_file();
  EXPECT_EQ(entries, 1u);
  std::filesystem::remove_all(dir);
}
