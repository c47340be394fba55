#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "massey/cohomology.hpp"
#include "massey/modelfile.hpp"
#include "massey/models.hpp"

namespace fs = std::filesystem;
using namespace massey;

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(MASSEY_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("massey_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write_model_file(*nonformal_witness(3), path("witness.dga"));
    write_model_file(*connected_sum_s2_s6(3), path("sum.dga"));
    std::ofstream(path("broken.dga")) << "gen x 2\ngen y 3\ndiff y = x*x*x\n";
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  static fs::path dir_;
};

fs::path Cli::dir_;

}  // namespace

TEST_F(Cli, P3ExportAndPentagonal) {
  ASSERT_EQ(run("p3 --rank 3 --out " + path("p3.dga")).code, 0);
  const auto a = read_model_file(path("p3.dga"));
  EXPECT_TRUE(same_model(*a, *p3_model(3)));
  const Outcome p = run("pentagonal " + path("p3.dga"));
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("rank 6"), std::string::npos) << p.out;
}

TEST_F(Cli, ExitCodes) {
  run("p3 --rank 3 --out " + path("p3.dga"));
  EXPECT_EQ(run("formality " + path("p3.dga") + " --conn 2").code, 1);
  EXPECT_EQ(run("massey4 " + path("p3.dga") + " --classes h2_0,h2_1,h2_2,h2_0").code, 1);
  EXPECT_EQ(run("cohomology " + path("missing.dga")).code, 2);
  EXPECT_EQ(run("cohomology " + path("broken.dga")).code, 2);
  EXPECT_EQ(run("repdim").code, 2);
  EXPECT_EQ(run("massey4 " + path("witness.dga") + " --classes h2_0,h2_1,h2_9,h2_0").code, 2);
  const Outcome m = run("massey4 " + path("witness.dga") + " --classes h2_0,h2_1,h2_2,h2_0 --times h2_1");
  EXPECT_EQ(m.code, 0) << m.out;
}

TEST_F(Cli, Repdim) {
  const Outcome r = run("repdim --rank 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim R = 36"), std::string::npos);
  EXPECT_NE(r.out.find("6*C(6,5) = 36"), std::string::npos);
}

TEST_F(Cli, Formality) {
  const Outcome w = run("--machine formality " + path("witness.dga") + " --conn 2");
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find("\"verdict\": \"not formal\""), std::string::npos) << w.out;
  EXPECT_NE(w.out.find("\"tensor\": \"P\""), std::string::npos);
  const Outcome s = run("formality " + path("sum.dga") + " --conn 2");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("verdict: formal"), std::string::npos) << s.out;
}

TEST_F(Cli, MachineOutputIsStable) {
  for (const std::string args : {"pentagonal " + path("witness.dga"), "cohomology " + path("sum.dga"),
                                 "bianchi " + path("witness.dga"), "triple --vanish " + path("witness.dga")}) {
    const Outcome a = run("--machine " + args), b = run(args + " --machine");
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_EQ(a.out.front(), '{');
  }
}

TEST_F(Cli, IdentityDiscrepancy) {
  run("p3 --rank 3 --out " + path("p3.dga"));
  const auto a = read_model_file(path("p3.dga"));
  const Cohomology h(*a);
  {
    std::ofstream map(path("id.map"));
    for (const auto& l : h.basis().labels) map << l << " -> " << l << "\n";
  }
  const Outcome d = run("discrepancy " + path("p3.dga") + " " + path("p3.dga") + " --iso " + path("id.map"));
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("vanishes"), std::string::npos) << d.out;
}
