#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "su2k/io/report.hpp"

using namespace su2k;
using nlohmann::json;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(SU2K_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / ("su2k_test_" + name); }

}  // namespace

TEST(Serialize, ModelJsonShape) {
  const ModelData model{Level(3)};
  const json j = io::model_json(model, true);
  EXPECT_EQ(j.at("schema"), io::kModelSchema);
  EXPECT_EQ(j.at("labels").size(), 4U);
  EXPECT_EQ(j.at("labels")[1], "1/2");
  EXPECT_TRUE(j.contains("F"));
  EXPECT_FALSE(io::model_json(model, false).contains("F"));
  EXPECT_NE(io::model_csv(model).find("label,twice_j,dim"), std::string::npos);
}

TEST(Serialize, CertificateCsv) {
  const auto cert = kitaev_certificate(Level(4));
  const std::string row = io::certificate_csv_row(cert);
  EXPECT_EQ(row.substr(0, 2), "4,");
  EXPECT_NE(row.find(",2,3,"), std::string::npos);
  EXPECT_NE(row.find("not-certified"), std::string::npos);
  const json j = io::certificate_json(cert);
  EXPECT_EQ(j.at("k"), 4);
  EXPECT_EQ(j.at("verdict"), "not-certified");
  EXPECT_EQ(j.at("reason"), cert.reason);
}

TEST(Serialize, MatrixRoundTrip) {
  CMatrixD m(2);
  m(0, 0) = ComplexD(0.6, 0);
  m(0, 1) = ComplexD(0, 0.8);
  m(1, 0) = ComplexD(0, 0.8);
  m(1, 1) = ComplexD(0.6, 0);
  const CMatrixD back = io::matrix_from_json(io::matrix_json(m));
  EXPECT_EQ(max_abs_diff<double>(m, back), 0.0);
  const json flat = {{"dim", 2}, {"entries", {{0.6, 0}, {0, 0.8}, {0, 0.8}, {0.6, 0}}}};
  EXPECT_EQ(max_abs_diff<double>(m, io::matrix_from_json(flat)), 0.0);
  EXPECT_THROW(io::matrix_from_json(json{{"entries", {{1, 2, 3}}}}), DomainError);
  EXPECT_THROW(io::matrix_from_json(json{{"rows", 1}}), DomainError);
  EXPECT_THROW(io::read_matrix_file("/nonexistent/target.json"), DomainError);
  const auto path = temp_file("bad.json");
  std::ofstream(path) << "{not json";
  EXPECT_THROW(io::read_matrix_file(path.string()), DomainError);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("--help").status, 0);
  EXPECT_EQ(run_cli("").status, 2);
  EXPECT_EQ(run_cli("model --k -1").status, 2);
  EXPECT_EQ(run_cli("model --k 31").status, 2);
  EXPECT_EQ(run_cli("model --k 3 --format yaml").status, 2);
  EXPECT_EQ(run_cli("synth --k 3").status, 2);
  EXPECT_EQ(run_cli("synth --k 3 --target /nonexistent.json").status, 2);
  EXPECT_EQ(run_cli("statements --k 2").status, 2);
}

TEST(Cli, VerifyReportsJson) {
  const CliRun r = run_cli("--format json verify --k 2..3");
  ASSERT_EQ(r.status, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("schema"), io::kVerifySchema);
}

TEST(Cli, UniversalityCsv) {
  const CliRun r = run_cli("universality --k 3..8 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, io::certificate_csv_header().size()), io::certificate_csv_header());
  EXPECT_NE(r.out.find("\n4,"), std::string::npos);
  std::size_t dense = 0, pos = 0;
  while ((pos = r.out.find(",dense", pos)) != std::string::npos) ++dense, ++pos;
  EXPECT_EQ(dense, 4U);
}

TEST(Cli, SynthFromFileAndOutput) {
  const auto target = temp_file("x.json");
  std::ofstream(target) << R"({"entries": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]})";
  const auto out = temp_file("synth.json");
  const CliRun r = run_cli("synth --k 3 --max-depth 4 --target " + target.string() + " --format json -o " + out.string());
  ASSERT_EQ(r.status, 0);
  std::ifstream in(out);
  const json j = json::parse(in);
  EXPECT_EQ(j.at("schema"), io::kSynthSchema);
  EXPECT_EQ(j.at("rows").size(), 5U);
  std::filesystem::remove(target);
  std::filesystem::remove(out);
}

TEST(Cli, ReproducibleOutput) {
  const CliRun a = run_cli("profile --k 3 --samples 4 --max-depth 5 --format csv");
  const CliRun b = run_cli("profile --k 3 --samples 4 --max-depth 5 --format csv");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, 6), "depth,");
}

TEST(Cli, RegressionFlag) {
  const CliRun r = run_cli("--paper-regression");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}
