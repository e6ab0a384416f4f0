#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "lieperiod/cli/cli.hpp"
#include "lieperiod/cli/commands.hpp"
#include "lieperiod/cli/report.hpp"
#include "lieperiod/freelie/freelie.hpp"
#include "lieperiod/ihara/identities.hpp"
#include "lieperiod/io/json.hpp"
#include "lieperiod/period/period.hpp"

using namespace lieperiod;
using namespace lieperiod::cli;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lieperiod");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  return Json::parse(invoke(args).out);
}

}  // namespace

TEST_CASE("json round trips") {
  const NCPoly f = freelie::phi(4);
  CHECK(io::ncpoly_from_json(io::to_json(f)) == f);
  const PairRelation rel = ihara::relation_cor1(5);
  CHECK(io::pair_relation_from_json(io::to_json(rel)) == rel);
  const PairRelation der = ihara::relation_dpcroch1(4);
  CHECK(io::pair_relation_from_json(io::to_json(der)) == der);
  const period::WeightedPoly p(PolyQ{0, 0, -1, 0, 3, 0, -3, 0, 1}, 10);
  CHECK(io::weighted_poly_from_json(io::to_json(p)) == p);
  CHECK(io::to_json(p)["coeffs"].size() == 11);
  CHECK_THROWS(io::pair_relation_from_json(Json::parse(R"({"weight":12,"kind":"bogus","terms":[]})")));
}

TEST_CASE("verify") {
  VerifyOptions opts;
  opts.max_weight = 12;
  opts.which = {verify_formulas().begin(), verify_formulas().end()};
  CHECK(cmd_verify(opts).passed());

  opts.max_weight = 4;
  opts.which = {"ptof"};
  CHECK(cmd_verify(opts).passed());

  opts.max_weight = 8;
  opts.which = {verify_formulas().begin(), verify_formulas().end()};
  opts.sign = ihara::DerivationSign::a_then_f;
  const RunReport bad = cmd_verify(opts);
  CHECK_FALSE(bad.passed());
  const Json& ff = bad.payload["first_failure"];
  CHECK(ff["formula"] == "dptop2");
  CHECK(ff["n"] == 1);
  CHECK(ff["p"] == 2);
}

TEST_CASE("relations") {
  const RunReport r12 = cmd_relations(12, "cor1");
  CHECK(r12.passed());
  const Json& rels = r12.payload["relations"];
  REQUIRE(rels.size() == 1);
  CHECK(io::pair_relation_from_json(rels[0]) == ihara::relation_cor1(3));

  const RunReport r16 = cmd_relations(16, "cor1");
  REQUIRE(r16.payload["relations"].size() == 1);
  PairRelation expect(16, PairKind::ihara);
  expect.add(7, 9, 11);
  expect.add(5, 11, -21);
  expect.add(3, 13, 66);
  CHECK(io::pair_relation_from_json(r16.payload["relations"][0]) == expect);

  const RunReport r14 = cmd_relations(14, "all");
  CHECK(r14.passed());
  CHECK(r14.payload["relations"].empty());

  const RunReport d14 = cmd_relations(14, "dpcroch");
  CHECK(d14.passed());
  CHECK_FALSE(d14.payload["relations"].empty());

  for (int w = 8; w <= 24; w += 2)
    for (const char* family : {"cor1", "cor2", "dpcroch", "all"}) {
      const RunReport r = cmd_relations(w, family);
      CHECK(r.passed());
      for (const auto& j : r.payload["relations"]) CHECK(ihara::annihilates(io::pair_relation_from_json(j)));
    }
}

TEST_CASE("period and kernel") {
  const RunReport p12 = cmd_period(12);
  CHECK(p12.passed());
  const Json& polys = p12.payload["polynomials"];
  REQUIRE(polys.size() == 1);
  const period::WeightedPoly wp = io::weighted_poly_from_json(polys[0]["poly"]);
  CHECK(wp.weight() == 10);
  const PolyQ target{0, 0, -1, 0, 3, 0, -3, 0, 1};
  CHECK(wp.poly() == (wp.poly().coeff(8)) * target);
  CHECK(polys[0]["period"] == true);
  for (const auto& block : p12.payload["kz_blocks"]) CHECK(block["period"] == true);

  const RunReport k24 = cmd_kernel(24);
  CHECK(k24.passed());
  CHECK(k24.payload["dim"] == 2);
  CHECK(k24.payload["cusp_dim"] == 2);
  const RunReport k14 = cmd_kernel(14);
  CHECK(k14.passed());
  CHECK(k14.payload["dim"] == 0);
  CHECK(k14.payload["cusp_dim"] == 0);
}

TEST_CASE("command line surface and exit codes") {
  CHECK(invoke({"verify", "--max-weight", "6"}).code == exit_pass);
  CHECK(invoke({"verify", "--max-weight", "6", "--which", "ptof,ltop"}).code == exit_pass);
  CHECK(invoke({"verify", "--max-weight", "6", "--flip-derivation-sign"}).code == exit_check_failure);
  CHECK(invoke({"verify", "--max-weight", "3"}).code == exit_usage);
  CHECK(invoke({"verify", "--which", "nonsense"}).code == exit_usage);
  CHECK(invoke({"relations", "--weight", "7"}).code == exit_usage);
  CHECK(invoke({"relations", "--weight", "12", "--family", "cor9"}).code == exit_usage);
  CHECK(invoke({"kernel"}).code == exit_usage);
  CHECK(invoke({"frobnicate"}).code == exit_usage);
  CHECK(invoke({}).code == exit_usage);
  CHECK(invoke({"--help"}).code == exit_pass);
  CHECK(invoke({"kernel", "--weight", "14"}).code == exit_pass);
  CHECK(invoke({"period", "--weight", "16"}).code == exit_pass);

  const Run text = invoke({"relations", "--weight", "12", "--family", "cor1"});
  CHECK(text.out.find("-14*{3,9} + 9*{5,7}") != std::string::npos);
  CHECK(invoke({"--help"}).out.find("flip") == std::string::npos);
  CHECK(invoke({"verify", "--help"}).out.find("flip") == std::string::npos);
}

TEST_CASE("exit code follows report status") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--max-weight", "8"},
           {"verify", "--max-weight", "8", "--flip-derivation-sign"},
           {"relations", "--weight", "18", "--family", "all"},
           {"kernel", "--weight", "20"},
           {"period", "--weight", "22"}}) {
    std::vector<std::string> full{"--format", "json"};
    full.insert(full.end(), args.begin(), args.end());
    const Run r = invoke(full);
    const Json j = Json::parse(r.out);
    CHECK((r.code == exit_pass) == (j["status"] == "pass"));
  }
}

TEST_CASE("json output is deterministic and round-trips") {
  const std::vector<std::vector<std::string>> cases{{"relations", "--weight", "24", "--family", "all"},
                                                    {"kernel", "--weight", "24"},
                                                    {"period", "--weight", "20"},
                                                    {"verify", "--max-weight", "8"}};
  for (const auto& args : cases) {
    std::vector<std::string> full{"--format", "json"};
    full.insert(full.end(), args.begin(), args.end());
    const Run first = invoke(full), second = invoke(full);
    CHECK(first.out == second.out);
    CHECK(first.out.find("elapsed_ms") == std::string::npos);
  }
  const Json rels = invoke_json({"relations", "--weight", "24", "--family", "all"});
  for (const auto& j : rels["payload"]["relations"]) {
    const PairRelation rel = io::pair_relation_from_json(j);
    CHECK(ihara::annihilates(rel));
    CHECK(ihara::is_canonical(rel));
  }
  const Json kernel = invoke_json({"kernel", "--weight", "24"});
  CHECK(kernel["payload"]["kernel"].size() == 2);
  const Json timed = invoke_json({"--timing", "kernel", "--weight", "12"});
  CHECK(timed.contains("elapsed_ms"));
}
