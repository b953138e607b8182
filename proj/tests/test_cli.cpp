#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " STRIKEBACK_CLI " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("strikeback_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, SolveExamples) {
  auto r = cli("solve --family cycle --n 7 --variant attacking");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 7), "cc = 3\n");
  r = cli("solve --family petersen --variant classic");
  EXPECT_EQ(r.out.substr(0, 6), "c = 3\n");
  r = cli("solve --graph6 'D?{' --variant attacking --k 1 --json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["winner"], "cops");
  EXPECT_EQ(j["metrics"]["states"], 60);
  EXPECT_FALSE(j["metrics"].contains("elapsed_ms"));
  r = cli("solve --graph6 'D?{' --k 1");
  EXPECT_EQ(r.out.substr(0, 8), "cops win");
}

TEST(Cli, StrategyExport) {
  const auto path = temp_file("strategy.json", "");
  EXPECT_EQ(cli("solve --family cycle --n 5 --k 2 --strategy " + path).code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["cops"], 2);
  EXPECT_FALSE(j["moves"].empty());
}

TEST(Cli, InputsAndErrors) {
  const auto edges = temp_file("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(cli("solve --file " + edges).out.substr(0, 7), "cc = 2\n");
  const auto hyper = temp_file("h.txt", "4 3\n0 1\n1 2\n2 3\n");
  const auto r = cli("invariants --hypergraph " + hyper + " --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["order"], 3);  // line graph of a 3-edge path
  EXPECT_EQ(cli("solve --graph6 '~'").code, 2);
  EXPECT_EQ(cli("solve --graph6 'D?{' --family petersen").code, 2);
  EXPECT_EQ(cli("solve").code, 2);
  EXPECT_EQ(cli("solve --file /nonexistent/file").code, 2);
  EXPECT_EQ(cli("solve --family cycle --n 2").code, 2);
  EXPECT_EQ(cli("bogus").code, 2);
  EXPECT_EQ(cli("solve --family petersen", "STRIKEBACK_BUDGET=100").code, 3);
}

TEST(Cli, GenerateAndInvariants) {
  EXPECT_EQ(cli("generate --family maximal-outerplanar --n 8 --seed 1").out, "Gh{GK[\n");
  const auto many = cli("generate --family connected-gnp --n 6 --count 3 --seed 2");
  EXPECT_EQ(std::count(many.out.begin(), many.out.end(), '\n'), 3);
  const auto r = cli("invariants --family petersen");
  EXPECT_NE(r.out.find("girth: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("min_degree: 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("diameter: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("domination_number: 3\n"), std::string::npos);
  EXPECT_EQ(cli("invariants --graph6 'D?{'").code, 0);
}

TEST(Cli, Verify) {
  const auto r = cli("verify --suite cycles");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("VIOLATION"), std::string::npos);
  EXPECT_NE(r.out.find("10 pass"), std::string::npos);
  // Girth discrepancies do not affect the exit status.
  EXPECT_EQ(cli("verify --suite girth").code, 0);
  // The cc = 4 claim for the line graph of Petersen is contradicted.
  EXPECT_EQ(cli("verify --suite petersen-line").code, 1);
}

TEST(Cli, VerifyJsonIsByteDeterministic) {
  const auto a = cli("verify --suite all --seed 42 --json");
  const auto b = cli("verify --suite all --seed 42 --json --jobs 2");
  EXPECT_EQ(a.out, b.out);
  EXPECT_GT(a.out.size(), 1000u);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["suites"].size(), 12u);
}

TEST(Cli, PlayScripts) {
  const auto bad = temp_file("bad.txt", "3\n9\n");
  EXPECT_EQ(cli("play --family cycle --n 7 --k 2 --script " + bad).code, 4);
  const auto stay = temp_file("stay.txt", "3\npass\npass\npass\npass\npass\npass\npass\npass\npass\npass\n");
  const auto r = cli("play --family cycle --n 7 --k 3 --script " + stay);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("captured\n"), std::string::npos);
  EXPECT_EQ(r.out, cli("play --family cycle --n 7 --k 3 --script " + stay).out);
}

TEST(Cli, Corpus) {
  const auto r = cli("corpus --family connected-gnp --n 6 --p 0.5 --count 5 --seed 1 --check sandwich --json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pass"], 5);
  EXPECT_EQ(cli("corpus --family cycle --n 5 --check nope").code, 2);
}
