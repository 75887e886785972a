#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "distcrypt/cli.hpp"

using namespace distcrypt;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "distcrypt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

void spit(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("distcrypt_cli_" + std::string(::testing::UnitTest::GetInstance()
                                              ->current_test_info()
                                              ->name()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const char* name) const { return (dir / name).string(); }
  fs::path dir;
};

}  // namespace

TEST_F(Cli, RoundTripBothModes) {
  ASSERT_EQ(run({"keygen", "--seed", "42", "--out", path("k")}).code, 0);
  for (const char* mode : {"matrix", "word"}) {
    ASSERT_EQ(run({"encrypt", "--key", path("k"), "--message", "123456789",
                   "--seed", "5", "--mode", mode, "--out", path("p")})
                  .code,
              0);
    const CliRun d = run({"decrypt", "--key", path("k"), "--payload", path("p")});
    EXPECT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(d.out, "123456789\n");
  }
}

TEST_F(Cli, ByteDeterministic) {
  run({"keygen", "--seed", "7", "--out", path("k1")});
  run({"keygen", "--seed", "7", "--out", path("k2")});
  EXPECT_EQ(slurp(path("k1")), slurp(path("k2")));
  run({"encrypt", "--key", path("k1"), "--message", "99", "--seed", "3", "--out", path("p1")});
  run({"encrypt", "--key", path("k1"), "--message", "99", "--seed", "3", "--out", path("p2")});
  EXPECT_EQ(slurp(path("p1")), slurp(path("p2")));
  EXPECT_EQ(run({"bench-distortion", "--k-max", "12"}).out,
            run({"bench-distortion", "--k-max", "12"}).out);
}

TEST_F(Cli, TamperedPayload) {
  run({"keygen", "--seed", "1", "--out", path("k")});
  run({"encrypt", "--key", path("k"), "--message", "5", "--seed", "2", "--decoys", "0",
       "--out", path("p")});
  std::string p = slurp(path("p"));
  // Bump the last matrix entry.
  const auto pos = p.find_last_of("0123456789");
  p[pos] = p[pos] == '9' ? '8' : static_cast<char>(p[pos] + 1);
  spit(path("p"), p);
  const CliRun d = run({"decrypt", "--key", path("k"), "--payload", path("p")});
  EXPECT_EQ(d.code, kExitProtocol);
  EXPECT_NE(d.err.find("malformed-payload"), std::string::npos);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run({"keygen", "--seed", "1", "--n", "2"}).code, kExitInputInvalid);
  EXPECT_EQ(run({"keygen"}).code, kExitInputInvalid);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputInvalid);
  EXPECT_EQ(run({"decrypt", "--key", path("missing"), "--payload", path("missing")}).code,
            kExitInputInvalid);
  EXPECT_EQ(run({"compress", "--vector", "1,x"}).code, kExitInputInvalid);
  EXPECT_EQ(run({"encrypt", "--key", path("missing"), "--message", "0", "--seed", "1"}).code,
            kExitInputInvalid);
}

TEST_F(Cli, Compress) {
  const CliRun r = run({"compress", "--vector", "1000000,-3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("length"), std::string::npos);
  EXPECT_FALSE(r.out.empty());
}

TEST_F(Cli, BenchRowCount) {
  const CliRun r = run({"bench-distortion", "--k-min", "4", "--k-max", "40"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 38);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "n_value,vector_norm,word_length,log2_norm,ratio,bound");
}

TEST_F(Cli, KpaUnsatisfiableConstraint) {
  spit(path("c"), "1\n3\n1 0 2\n0 1 0\n0 0 1\n");
  EXPECT_EQ(run({"kpa", "--constraints", path("c")}).code, kExitInputInvalid);
}

TEST_F(Cli, KpaTrivialConstraint) {
  spit(path("c"), "1\n3\n1 1 0\n0 1 0\n0 0 1\n");
  const CliRun r = run({"kpa", "--constraints", path("c"), "--count", "3", "--pool-radius", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("extensions 3 complete"), std::string::npos);
}

TEST_F(Cli, KpaPartialExit) {
  spit(path("c"), "1\n3\n1 1 0\n0 1 0\n0 0 1\n");
  const CliRun r = run({"kpa", "--constraints", path("c"), "--count", "1000", "--pool-radius", "2"});
  EXPECT_EQ(r.code, kExitPartial);
}

TEST_F(Cli, Eve) {
  const CliRun r = run({"eve", "--seed", "1", "--csv", path("e.csv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1/1 trials recovered the full lattice"), std::string::npos);
  EXPECT_EQ(slurp(path("e.csv")).substr(0, 5), "trial");
  EXPECT_EQ(run({"eve", "--seed", "1", "--secure", "--messages", "3"}).code, 0);
}

TEST_F(Cli, UelemCheck) {
  spit(path("u"), "3\n0 1 1 0 1 0 0\n0 0 0 1 0 0\n0 0 0 0 0 1\n");
  const CliRun r = run({"uelem-check", "--input", path("u"), "--power", "-7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("unipotent yes"), std::string::npos);
  EXPECT_NE(r.out.find("binomial_matches_iterated yes"), std::string::npos);
}

TEST_F(Cli, ConfigFile) {
  spit(path("cfg.toml"), "[keygen]\nseed = 42\nn = 4\n");
  const CliRun a = run({"--config", path("cfg.toml"), "keygen"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "4 16 42");
  const CliRun b = run({"--config", path("cfg.toml"), "keygen", "--n", "3"});
  EXPECT_EQ(b.out.substr(0, b.out.find('\n')), "3 16 42");
}
