#include "toricideal/commands.hpp"

#include "support/random_instances.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace toricideal;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(TORICIDEAL_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

nlohmann::ordered_json without_timing(nlohmann::ordered_json doc) {
  doc.erase("timing_ms");
  return doc;
}

}  // namespace

TEST(ParseProblem, WorkedExampleFile) {
  ProblemFile p = parse_problem(read_data("worked_example.json"));
  EXPECT_EQ(p.rank, 2u);
  EXPECT_EQ(p.cone_rays, (std::vector<LatticeVector>{lattice({1, -1}), lattice({0, 1})}));
  ASSERT_TRUE(p.ideal && p.t);
  EXPECT_EQ(*p.t, Rat(1));
  EXPECT_FALSE(p.delta);
  EXPECT_TRUE(p.warnings.empty());
}

TEST(ParseProblem, Diagnostics) {
  std::string e = error_of(R"({"rank": 2, "cone_rays": [[1, 0], [0, 1, 0]]})");
  EXPECT_NE(e.find("[0,1,0]"), std::string::npos) << e;
  EXPECT_NE(e.find("cone_rays'[1]"), std::string::npos) << e;

  e = error_of("{\n  \"rank\": 2,\n  \"cone_rays\": [[1, 0] [0, 1]]\n}");
  EXPECT_NE(e.find("line 3"), std::string::npos) << e;
  EXPECT_NE(e.find("column"), std::string::npos) << e;

  e = error_of(R"({"rank": 2, "cone_rays": [[1, -1], [0, 1]], "ideal": [[1, -2]]})");
  EXPECT_NE(e.find("ideal"), std::string::npos) << e;
  EXPECT_NE(e.find("(0,1)"), std::string::npos) << "should name the violated halfspace: " << e;

  EXPECT_NE(error_of(R"({"rank": 2, "cone_rays": [[1, 0]], "colour": 1})").find("colour"), std::string::npos);
  EXPECT_NE(error_of(R"({"rank": 2, "cone_rays": [[1, 0], [0, 1]], "delta": ["1"]})").find("delta"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"rank": 2, "cone_rays": [[1, 0], [0, 1]], "t": "1/0"})").find("'t'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"rank": 2, "cone_rays": [[1, 0], [1, 1], [0, 1]]})").find("extremal"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"rank": 2, "cone_rays": [[1, 0], [2, 0]]})").find("duplicate"), std::string::npos);
  EXPECT_NE(error_of(R"({"rank": 0, "cone_rays": [[1]]})").find("rank"), std::string::npos);
  EXPECT_NE(error_of("[1, 2]").find("object"), std::string::npos);
}

TEST(ParseProblem, NonPrimitiveRayIsDividedWithWarning) {
  ProblemFile p = parse_problem(R"({"rank": 2, "cone_rays": [[2, -2], [0, 1]]})");
  EXPECT_EQ(p.cone_rays[0], lattice({1, -1}));
  ASSERT_EQ(p.warnings.size(), 1u);
  EXPECT_NE(p.warnings[0].find("(1,-1)"), std::string::npos);
}

TEST(ParseProblem, DeltaFollowsFileOrder) {
  ProblemFile p = parse_problem(R"({"rank": 2, "cone_rays": [[1, 2], [1, 0]], "delta": ["1/2", 0]})");
  QDivisor d = p.divisor();
  // lexicographic ray order is (1,0), (1,2)
  EXPECT_EQ(d.coeffs(), (std::vector<Rat>{Rat(0), Rat(Integer(1), Integer(2))}));
}

TEST(ParseProblem, RoundTripsRandomProblems) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    RationalCone sigma = instances::random_cone(rng, 2 + trial % 2);
    ProblemFile p;
    p.rank = sigma.rank();
    p.cone_rays = sigma.rays();
    std::shuffle(p.cone_rays.begin(), p.cone_rays.end(), rng);
    if (trial % 3 != 0) {
      std::vector<Rat> c;
      for (std::size_t i = 0; i < p.cone_rays.size(); ++i)
        c.push_back(Rat(Integer(instances::uniform(rng, -5, 5)), Integer(instances::uniform(rng, 1, 4))));
      p.delta = c;
    }
    if (trial % 2 == 0) p.ideal = instances::random_ideal(rng, sigma).exponents();
    if (trial % 4 != 1) p.t = instances::random_t(rng);
    std::string text = render_problem(p);
    ProblemFile q = parse_problem(text);
    EXPECT_EQ(q, p) << text;
    EXPECT_EQ(render_problem(q), text);
  }
}

TEST(RunCommand, WorkedExample) {
  ProblemFile p = parse_problem(read_data("worked_example.json"));
  CommandResult r = run_command("triple", p);
  EXPECT_EQ(r.doc["generators"], nlohmann::json::parse("[[3,1],[3,2]]"));
  EXPECT_EQ(r.doc["monomials"], nlohmann::json::parse(R"(["x1^3*x2^1", "x1^3*x2^2"])"));
  EXPECT_EQ(r.doc["w"], nlohmann::json::parse(R"(["-2/1", "-1/1"])"));
  EXPECT_EQ(r.status, 0);

  CommandResult v = run_command("verify", p);
  EXPECT_EQ(v.doc["summary"], "routes agree: howald=resolution=bcm; oracle: pair-level agreement on inner box");
  EXPECT_EQ(v.doc["agree"], true);
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(v.doc["routes"]["charp"], nlohmann::json::parse("[[3,1],[3,2]]"));

  for (const std::string cmd : {"multiplier", "multiplier-res", "charp"})
    EXPECT_EQ(run_command(cmd, p).doc["generators"], r.doc["generators"]) << cmd;

  CommandOptions opt;
  opt.t = Rat(Integer(1), Integer(2));
  EXPECT_EQ(run_command("triple", p, opt).doc["t"], "1/2");
}

TEST(RunCommand, PairAndDual) {
  ProblemFile orth = parse_problem(read_data("orthant.json"));
  EXPECT_EQ(run_command("pair", orth).doc["generators"], nlohmann::json::parse("[[0,0]]"));
  auto dual = run_command("dual", orth).doc;
  EXPECT_EQ(dual["dual_rays"], nlohmann::json::parse("[[0,1],[1,0]]"));
  EXPECT_EQ(dual["multiplicity"], "1");

  ProblemFile a1 = parse_problem(read_data("a1_pair.json"));
  auto pair = run_command("pair", a1).doc;
  EXPECT_EQ(pair["generators"], nlohmann::json::parse("[[0,0]]"));
  EXPECT_EQ(pair["r"], "4");
  EXPECT_THROW(run_command("triple", a1), InputError);
}

TEST(RunCommand, ResolveAndPlot) {
  ProblemFile p = parse_problem(R"({"rank": 2, "cone_rays": [[0, 1], [3, -1]]})");
  auto res = run_command("resolve", p).doc;
  EXPECT_EQ(res["steps"].size(), 1u);
  EXPECT_EQ(res["refined_cones"].size(), 2u);

  ProblemFile worked = parse_problem(read_data("worked_example.json"));
  CommandResult plot = run_command("plot", worked);
  ASSERT_TRUE(plot.svg);
  EXPECT_EQ(plot.svg->rfind("<svg", 0), 0u);
  EXPECT_NE(plot.svg->find("(3,1)"), std::string::npos);
  EXPECT_NE(plot.svg->find("</svg>"), std::string::npos);

  ProblemFile r3 = parse_problem(read_data("rank3_square.json"));
  EXPECT_THROW(run_command("plot", r3), InputError);
  EXPECT_THROW(run_command("frobnicate", worked), InputError);
}

TEST(RunCommand, PreconditionsSurface) {
  ProblemFile p = parse_problem(read_data("not_q_cartier.json"));
  EXPECT_THROW(run_command("pair", p), NotQCartier);
  EXPECT_NO_THROW(run_command("dual", p));
}

TEST(RunCommand, DeterministicModuloTiming) {
  for (const char* file : {"worked_example.json", "rank3_square.json", "a1_pair.json"}) {
    ProblemFile p = parse_problem(read_data(file));
    for (const std::string cmd : {"dual", "pair", "verify", "resolve"}) {
      std::string a = without_timing(run_command(cmd, p).doc).dump(2);
      std::string b = without_timing(run_command(cmd, parse_problem(read_data(file))).doc).dump(2);
      EXPECT_EQ(a, b) << file << " " << cmd;
    }
  }
}

TEST(RenderMonomial, Forms) {
  EXPECT_EQ(render_monomial(lattice({3, 1})), "x1^3*x2^1");
  EXPECT_EQ(render_monomial(lattice({0, 0})), "1");
  EXPECT_EQ(render_monomial(lattice({0, -2, 5})), "x2^-2*x3^5");
}
