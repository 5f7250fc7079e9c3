#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "kschmidt/io.hpp"
#include "kschmidt/named.hpp"
#include "kschmidt/verify/sweeps.hpp"

namespace kschmidt {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const Json& doc) {
  const auto path = std::filesystem::temp_directory_path() / ("kschmidt_cli_test_" + name);
  std::ofstream(path) << doc.dump();
  return path.string();
}

TEST(Cli, DecomposeJson) {
  const auto r = run({"decompose", "--named", "cyclic:6", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("command"), "decompose");
  std::vector<std::size_t> orders;
  for (const auto& f : j.at("result").at("factors")) orders.push_back(f.at("order"));
  EXPECT_EQ(orders, (std::vector<std::size_t>{2, 3}));
  EXPECT_FALSE(j.at("result").at("indecomposable").get<bool>());
}

TEST(Cli, DecomposeFile) {
  const auto file = write_temp("s3.json", to_json(named_group("symmetric:3")));
  const auto r = run({"decompose", file, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out).at("result").at("indecomposable").get<bool>());
}

TEST(Cli, Iso) {
  const auto r = run({"iso", "--named", "cyclic:4", "--named", "elementary_abelian:2:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("not isomorphic"), std::string::npos);
  const auto s = run({"iso", "--named", "cyclic:6", "--named", "direct_product(cyclic:2,cyclic:3)", "--json"});
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(Json::parse(s.out).at("result").at("isomorphic").get<bool>());
}

TEST(Cli, FittingAndNormalEndos) {
  const auto r = run({"fitting", "--named", "cyclic:6", "--endo", "0,4,2,0,4,2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out).at("result");
  EXPECT_EQ(j.at("exponent"), 1);
  EXPECT_EQ(j.at("kernel_part").at("order"), 2);
  EXPECT_EQ(j.at("image_part").at("order"), 3);
  EXPECT_EQ(j.at("classification").at("kind"), "Neither");

  const auto bad = run({"fitting", "--named", "cyclic:4", "--endo", "0,1,1,1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("NotAHomomorphism"), std::string::npos);
  EXPECT_EQ(run({"fitting", "--named", "cyclic:4", "--endo", "0,x"}).code, 2);

  const auto e = run({"normal-endos", "--named", "cyclic:4", "--json"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(Json::parse(e.out).at("result").at("count"), 4);
  EXPECT_EQ(run({"normal-endos", "--named", "symmetric:4"}).code, 1);
  EXPECT_EQ(run({"normal-endos", "--named", "symmetric:4", "--max-order", "24"}).code, 0);
}

TEST(Cli, Cancel) {
  const auto r = run({"cancel", "--x", "direct_product(symmetric:3,cyclic:4)", "--y",
                      "direct_product(cyclic:4,symmetric:3)", "--g-order", "6", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out).at("result");
  EXPECT_EQ(j.at("complement_x").at("order"), 4);
  EXPECT_EQ(j.at("complement_y").at("order"), 4);

  const auto n = run({"cancel", "--x", "direct_product(cyclic:2,cyclic:4)", "--y", "elementary_abelian:2:3",
                      "--g-order", "2", "--json"});
  EXPECT_EQ(n.code, 1);
  EXPECT_EQ(Json::parse(n.out).at("error").at("kind"), "NotIsomorphicAmbient");
  EXPECT_EQ(run({"cancel", "--x", "quaternion", "--y", "quaternion", "--g-order", "2"}).code, 1);
  EXPECT_EQ(run({"cancel", "--x", "cyclic:6"}).code, 2);
}

TEST(Cli, Towers) {
  const auto v = run({"tower", "validate", "--verbal", "cyclic:8", "--exponents", "2,4,8", "--json"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_TRUE(Json::parse(v.out).at("result").at("valid").get<bool>());

  const std::uint64_t m[] = {6, 36};
  const auto file = write_temp("c6c36.json", to_json(verify::cyclic_tower(m)));
  const auto d = run({"tower", "decompose", file, "--json"});
  ASSERT_EQ(d.code, 0) << d.err;
  const auto dj = Json::parse(d.out).at("result");
  EXPECT_EQ(dj.at("levels").size(), 2u);
  EXPECT_EQ(dj.at("correspondence").at(0), Json::parse("[0,1]"));

  const auto f = run({"tower", "fin", "--verbal", "cyclic:8", "--exponents", "2,4,8", "--max-order", "8", "--json"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(Json::parse(f.out).at("result").at("classes").size(), 4u);

  const auto ea = write_temp("ea3.json", to_json(verify::elementary_abelian_tower(2, 3)));
  const auto s = run({"tower", "same-fin", "--verbal", "cyclic:8", "--exponents", "2,4,8", ea, "--max-order", "4",
                      "--json"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto sj = Json::parse(s.out).at("result");
  EXPECT_FALSE(sj.at("equal").get<bool>());
  EXPECT_EQ(sj.at("witness").at("order"), 4);

  const auto broken = write_temp("broken.json", Json::parse(
      R"({"format":"tower-v1","levels":["cyclic:2","cyclic:2"],"maps":[[0,0]]})"));
  const auto b = run({"tower", "validate", broken, "--json"});
  EXPECT_EQ(b.code, 0);
  EXPECT_FALSE(Json::parse(b.out).at("result").at("valid").get<bool>());
  EXPECT_EQ(run({"tower", "decompose", broken}).code, 1);
  EXPECT_EQ(run({"tower", "validate", "--verbal", "cyclic:6", "--exponents", "2,3"}).code, 1);
  EXPECT_EQ(run({"tower"}).code, 2);
}

TEST(Cli, FiberPower) {
  const auto spec = write_temp("fiber.json", Json::parse(
      R"({"format":"fiber-power-v1","group":"elementary_abelian:2:2","g0":[0,1],"copies":1})"));
  const auto tower = write_temp("ea4.json", to_json(verify::elementary_abelian_tower(2, 4)));
  for (const std::vector<std::string> prefix : {std::vector<std::string>{"fiber-power"},
                                                 std::vector<std::string>{"tower", "fiber-power"}}) {
    auto args = prefix;
    args.insert(args.end(), {spec, "--tower", tower, "--json"});
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out).at("result");
    EXPECT_EQ(j.at("order"), 8);
    EXPECT_EQ(j.at("image").at("level"), 2);
  }
  const auto bad = write_temp("fiber_bad.json", Json::parse(
      R"({"format":"fiber-power-v1","group":"cyclic:4","g0":[0,2],"m0":[0,1,2,3],"copies":1})"));
  const auto b = run({"fiber-power", bad});
  EXPECT_EQ(b.code, 1);
  EXPECT_NE(b.err.find("ContainmentViolated"), std::string::npos);
}

TEST(Cli, CorpusAndSelftest) {
  const auto c = run({"corpus", "--max-order", "8", "--json"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(Json::parse(c.out).at("result").at("groups").size(), corpus(8).size());
  const auto s = run({"selftest", "--max-order", "8", "--sweep", "oracle", "--sweep", "fitting", "--json"});
  ASSERT_EQ(s.code, 0) << s.out;
  const auto j = Json::parse(s.out).at("result");
  EXPECT_GT(j.at("checks").get<std::size_t>(), 0u);
  EXPECT_EQ(j.at("failures"), 0);
  EXPECT_EQ(run({"selftest", "--sweep", "nope"}).code, 2);
  EXPECT_EQ(run({"selftest", "--list"}).code, 0);
}

TEST(Cli, UsageAndDomainErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"decompose", "--bogus"}).code, 2);
  EXPECT_EQ(run({"decompose"}).code, 2);
  EXPECT_EQ(run({"iso", "--named", "cyclic:2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const auto u = run({"decompose", "--named", "cyclc:4", "--json"});
  EXPECT_EQ(u.code, 1);
  EXPECT_EQ(Json::parse(u.out).at("error").at("kind"), "UnknownName");
  EXPECT_EQ(run({"decompose", "/nonexistent.json"}).code, 1);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"decompose", "--named", "direct_product(cyclic:2,cyclic:2,symmetric:3)",
                                         "--json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
}  // namespace kschmidt
