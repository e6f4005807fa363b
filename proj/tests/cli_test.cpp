#include <gtest/gtest.h>

#include <unistd.h>

#include "cli_runner.hpp"
#include "hklat/io.hpp"

namespace hklat {
namespace {

using io::json;
using testing::run_cli;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { k3 = dir.write("k3.json", io::to_json(diagonal_lattice({2, -2}, "k3"))); }

  json run_json(const std::string& args, int expected_exit = 0) {
    const auto r = run_cli(args);
    EXPECT_EQ(r.exit_code, expected_exit) << args;
    return r.out.empty() ? json() : json::parse(r.out);
  }

  testing::TempDir dir;
  std::string k3;
};

TEST_F(Cli, LatticeCommands) {
  const json b = run_json("lattice builtin K3_hilb --n 2");
  EXPECT_EQ(b.at("rank"), 23);
  const json info = run_json("lattice info " + k3);
  EXPECT_EQ(info.at("signature"), json({1, 1, 0}));
  EXPECT_EQ(info.at("determinant"), "-4");
  EXPECT_EQ(run_cli("lattice builtin K3_hilb --n 1").exit_code, 2);
}

TEST_F(Cli, IsotropicFind) {
  const json r = run_json("isotropic find " + k3);
  EXPECT_TRUE(r.at("isotropic"));
  EXPECT_EQ(r.at("witness"), json({"1", "1"}));
  EXPECT_TRUE(r.at("bound_used").is_string());
  const std::string aniso = dir.write("aniso.json", io::to_json(diagonal_lattice({1, -2})));
  const json n = run_json("isotropic find " + aniso);
  EXPECT_FALSE(n.at("isotropic"));
  EXPECT_TRUE(n.at("witness").is_null());
}

TEST_F(Cli, ConeCommands) {
  EXPECT_EQ(run_json("cone classify " + k3 + " --h '[2,1]' --v '[1,1]'").at("classification"), "boundary");
  const json s = run_json("cone sample " + k3 + " --alpha '[1,1]' --h '[2,1]' --count 3 --seed 4");
  EXPECT_EQ(s.at("samples").size(), 3u);
  const json ray = run_json("cone ray " + k3 + " --H '[2,1]' --L '[0,1]'");
  EXPECT_EQ(ray.at("roots")[0].at("root"), json({{"a", "1/2"}, {"b", "0"}, {"d", 1}}));
  EXPECT_EQ(ray.at("roots")[0].at("class")[0], ray.at("roots")[0].at("class")[1]);
  EXPECT_EQ(run_cli("cone classify " + k3 + " --h '[0,1]' --v '[1,1]'").exit_code, 2);
}

TEST_F(Cli, ReflectWalk) {
  const std::string walls = dir.write("walls.json", json::array({json::array({0, -1})}));
  const json w = run_json("reflect walk " + k3 + " --walls " + walls + " --h '[2,1]' --alpha '[1,-1]'");
  EXPECT_EQ(w.at("beta"), json({"1", "1"}));
  EXPECT_EQ(w.at("word"), json({0}));
  EXPECT_EQ(w.at("trace"), json({"6", "2"}));
}

TEST_F(Cli, IdealCommands) {
  const json b = run_json("ideal basis " + k3 + " --n 1 --degree 2");
  EXPECT_EQ(b.at("dimension"), 2);
  PolynomialQ p(2);
  p.add_term({2, 0}, 1);
  p.add_term({0, 2}, 1);
  const std::string poly = dir.write("p.json", io::to_json(p));
  EXPECT_TRUE(run_json("ideal member " + k3 + " --n 1 --poly " + poly).at("member"));
  EXPECT_EQ(run_cli("ideal basis " + k3 + " --n 2 --degree 2").exit_code, 2);
}

TEST_F(Cli, WspExitCodesAndVerify) {
  json desc = io::to_json(diagonal_lattice({2, -2}));
  desc["deformation_type"] = "K3_hilb_type";
  desc["n"] = 2;
  desc["ample"] = json::array({"2", "1"});
  const std::string d = dir.write("d.json", desc);
  const std::string cert = dir.file("cert.json");
  EXPECT_EQ(run_json("wsp check " + d + " --out " + cert).at("verdict"), "wsp_holds");
  EXPECT_TRUE(run_json("wsp verify " + d + " " + cert).at("verified"));

  desc["deformation_type"] = "other";
  const std::string d_other = dir.write("d_other.json", desc);
  EXPECT_EQ(run_cli("wsp check " + d_other).exit_code, 10);
  EXPECT_EQ(run_cli("wsp verify " + d_other + " " + cert).exit_code, 1);

  json fails = io::to_json(diagonal_lattice({4}));
  fails["deformation_type"] = "kummer_type";
  fails["n"] = 3;
  fails["ample"] = json::array({"1"});
  EXPECT_EQ(run_cli("wsp check " + dir.write("fails.json", fails)).exit_code, 20);

  desc["ample"] = json::array({"1", "1"});
  EXPECT_EQ(run_cli("wsp check " + dir.write("bad.json", desc)).exit_code, 2);
  EXPECT_EQ(run_cli("wsp check " + dir.file("missing.json")).exit_code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_NE(run_cli("").exit_code, 0);
  EXPECT_NE(run_cli("cone classify " + k3).exit_code, 0);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

}  // namespace
}  // namespace hklat
