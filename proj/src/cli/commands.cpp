#include "lieperiod/cli/commands.hpp"

#include "lieperiod/freelie/freelie.hpp"
#include "lieperiod/ihara/identities.hpp"
#include "lieperiod/ihara/series.hpp"
#include "lieperiod/period/period.hpp"
#include "lieperiod/relkernel/relkernel.hpp"

#include <functional>
#include <optional>

namespace lieperiod::cli {

namespace {

using io::Json;

struct Failure {
  std::string formula;
  int n = 0;
  int p = 0;
};

// Runs check(n, p) over the cases in weight-ascending, then n-ascending order
// and stops at the first failure.
struct CaseRunner {
  std::string formula;
  int cases = 0;
  std::optional<Failure> failure;

  void run(int n, int p, const std::function<bool()>& check) {
    if (failure) return;
    ++cases;
    if (!check()) failure = Failure{formula, n, p};
  }
};

Json failure_json(const Failure& f) { return {{"formula", f.formula}, {"n", f.n}, {"p", f.p}}; }

}  // namespace

RunReport cmd_verify(const VerifyOptions& opts) {
  using namespace ihara;
  RunReport report;
  report.command = "verify";
  Json which = Json::array();
  for (const auto& name : verify_formulas())
    if (opts.which.count(name)) which.push_back(name);
  report.parameters = {{"max_weight", opts.max_weight}, {"which", which}};

  const int W = opts.max_weight;
  const auto sign = opts.sign;
  std::vector<CaseRunner> runners;

  auto selected = [&](const char* name) { return opts.which.count(name) > 0; };

  if (selected("dptop2")) {
    CaseRunner r{"dptop2"};
    for (int w = 2; w <= W; ++w)
      for (int n = 1; n < w; ++n) {
        const int p = w - n;
        r.run(n, p, [&] { return d_phi_closed(n, p) == special_derivation(freelie::phi(n), freelie::phi(p), sign); });
      }
    runners.push_back(r);
  }
  if (selected("ptof")) {
    CaseRunner r{"ptof"};
    for (int w = 2; w <= W; ++w)
      for (int n = 1; n < w; ++n) {
        const int p = w - n;
        r.run(n, p, [&] { return ihara_bracket_closed(n, p) == ihara_bracket(freelie::phi(n), freelie::phi(p), sign); });
      }
    runners.push_back(r);
  }
  if (selected("dpcroch")) {
    CaseRunner prop{"dpcroch"};
    CaseRunner first{"dpcroch01"};
    CaseRunner second{"dpcroch02"};
    for (int w = 3; w <= W; ++w)
      for (int n = 2; n < w; ++n) {
        const int p = w - n;
        prop.run(n, p, [&] {
          return bracket_from_derivations(n, p, sign) == freelie::lie_bracket(freelie::phi(n), freelie::phi(p));
        });
      }
    for (int n = 2; 2 * n <= W; ++n) first.run(n, n, [&] { return annihilates(relation_dpcroch1(n), sign); });
    for (int w = 4; w <= W; ++w)
      for (int n = 2; n <= w - 2; ++n) second.run(n, w - n, [&] { return annihilates(relation_dpcroch2(n, w - n), sign); });
    runners.push_back(prop);
    runners.push_back(first);
    runners.push_back(second);
  }
  if (selected("ltop")) {
    CaseRunner r{"ltop"};
    for (int w = 4; w <= W; ++w)
      for (int m = 2; m <= w - 2; m += 2) {
        const int k = w - m;
        r.run(m, k, [&] {
          return bracket_from_ihara(m, k, sign) == freelie::lie_bracket(freelie::phi(m), freelie::phi(k));
        });
      }
    runners.push_back(r);
  }
  if (selected("series")) {
    const int order = std::max(2, W - 2);
    for (auto id : {SeriesIdentity::sdphi, SeriesIdentity::ihlie, SeriesIdentity::f2g}) {
      CaseRunner r{"series:" + std::string(to_string(id))};
      ++r.cases;
      if (auto bad = series_mismatch(id, order, sign)) r.failure = Failure{r.formula, bad->first + 1, bad->second + 1};
      runners.push_back(r);
    }
  }

  Json checks = Json::array();
  std::optional<Failure> first_failure;
  for (const auto& r : runners) {
    checks.push_back({{"formula", r.formula}, {"cases", r.cases}, {"status", r.failure ? "fail" : "pass"}});
    std::string line = r.formula + ": " + std::to_string(r.cases) + " case(s) " + (r.failure ? "FAIL" : "ok");
    if (r.failure) line += " at (" + std::to_string(r.failure->n) + ", " + std::to_string(r.failure->p) + ")";
    report.lines.push_back(line);
    if (r.failure && !first_failure) first_failure = r.failure;
  }
  report.payload["checks"] = checks;
  if (first_failure) {
    report.status = Status::fail;
    report.payload["first_failure"] = failure_json(*first_failure);
  }
  return report;
}

RunReport cmd_relations(int weight, const std::string& family) {
  using namespace ihara;
  RunReport report;
  report.command = "relations";
  report.parameters = {{"weight", weight}, {"family", family}};

  // Canonical relation -> the generator calls producing it, in generation order.
  std::vector<std::pair<PairRelation, std::vector<std::string>>> found;
  auto record = [&](const PairRelation& rel, std::string source) {
    if (rel.empty()) return;
    for (auto& [r, sources] : found)
      if (r == rel) {
        sources.push_back(std::move(source));
        return;
      }
    found.push_back({rel, {std::move(source)}});
  };
  auto tag = [](const char* name, int a) { return std::string(name) + "(" + std::to_string(a) + ")"; };
  auto tag2 = [](const char* name, int a, int b) {
    return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  const bool all = family == "all";
  if ((family == "cor1" || all) && weight % 4 == 0) record(relation_cor1(weight / 4), tag("cor1", weight / 4));
  if (family == "cor2" || all)
    for (int n = 1; 2 * n < weight; ++n) {
      const int p = weight / 2 - n;
      if (p >= 1) record(relation_cor2(n, p), tag2("cor2", n, p));
    }
  if (family == "dpcroch") {
    record(relation_dpcroch1(weight / 2), tag("dpcroch1", weight / 2));
    for (int n = 2; 2 * n <= weight; ++n) record(relation_dpcroch2(n, weight - n), tag2("dpcroch2", n, weight - n));
  }

  Json rels = Json::array();
  for (const auto& [rel, sources] : found) {
    const bool ok = annihilates(rel);
    Json j = io::to_json(rel);
    j["sources"] = sources;
    j["annihilates"] = ok;
    rels.push_back(j);
    std::string line;
    for (const auto& s : sources) line += (line.empty() ? "" : " ") + s;
    report.lines.push_back(line + ": " + to_string(rel) + " = 0" + (ok ? "" : "  [FAILS]"));
    if (!ok && report.passed()) {
      report.status = Status::fail;
      report.payload["first_failure"] = {{"formula", sources.front()}, {"relation", io::to_json(rel)}};
    }
  }
  if (found.empty()) report.lines.push_back("no relations");
  report.payload["weight"] = weight;
  report.payload["family"] = family;
  report.payload["relations"] = rels;
  return report;
}

RunReport cmd_period(int weight) {
  RunReport report;
  report.command = "period";
  report.parameters = {{"weight", weight}};

  const auto m = relkernel::bracket_matrix(weight);
  const auto basis = relkernel::kernel_basis(m);

  auto fail = [&](Json what) {
    if (!report.passed()) return;
    report.status = Status::fail;
    report.payload["first_failure"] = std::move(what);
  };

  Json polys = Json::array();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto rel = relkernel::kernel_relation(weight, m.col_labels, basis[k]);
    const auto poly = period::substitute_relation(rel);
    const bool ok = period::is_period_polynomial(poly);
    Json entry = {{"relation", io::to_json(rel)}, {"poly", io::to_json(poly)}, {"period", ok}};
    polys.push_back(entry);
    report.lines.push_back("kernel[" + std::to_string(k) + "] " + ihara::to_string(rel) + " -> " +
                           period::to_string(poly) + (ok ? "  [period]" : "  [NOT period]"));
    if (!ok) fail({{"formula", "substitute_relation"}, {"kernel_index", k}});
  }

  Json blocks = Json::array();
  const int w = weight - 2;
  for (int n = 1; n <= w - 1; ++n) {
    // Period polynomials arise for n odd with the plus sign, n even with minus.
    const auto sign = n % 2 == 1 ? period::Sign::plus : period::Sign::minus;
    const period::WeightedPoly block(period::kz_building_block(n, weight, sign), w);
    const bool ok = period::is_period_polynomial(block);
    const char* s = sign == period::Sign::plus ? "+" : "-";
    blocks.push_back({{"n", n}, {"sign", s}, {"poly", io::to_json(block)}, {"period", ok}});
    report.lines.push_back(std::string("P") + s + "_{" + std::to_string(n) + ";" + std::to_string(weight) +
                           "} = " + period::to_string(block) + (ok ? "  [period]" : "  [NOT period]"));
    if (!ok) fail({{"formula", "kz_building_block"}, {"n", n}, {"sign", s}});
  }

  report.payload["weight"] = weight;
  report.payload["polynomials"] = polys;
  report.payload["kz_blocks"] = blocks;
  return report;
}

RunReport cmd_kernel(int weight) {
  RunReport report;
  report.command = "kernel";
  report.parameters = {{"weight", weight}};

  const auto m = relkernel::bracket_matrix(weight);
  const auto basis = relkernel::kernel_basis(m);
  const int cusp = relkernel::cusp_form_dimension(weight);
  report.payload = io::kernel_report(weight, m.col_labels, basis, cusp);

  bool all_annihilate = true;
  for (const auto& v : basis) {
    const auto rel = relkernel::kernel_relation(weight, m.col_labels, v);
    const bool ok = ihara::annihilates(rel);
    all_annihilate = all_annihilate && ok;
    report.lines.push_back(ihara::to_string(rel) + " = 0" + (ok ? "" : "  [FAILS]"));
  }
  const int dim = static_cast<int>(basis.size());
  report.lines.push_back("weight " + std::to_string(weight) + ": " + std::to_string(m.cols) + " pair(s), " +
                         std::to_string(m.rows) + " word(s), dim " + std::to_string(dim) + ", cusp_dim " +
                         std::to_string(cusp));
  if (!all_annihilate) {
    report.status = Status::fail;
    report.payload["first_failure"] = {{"formula", "kernel_annihilation"}, {"weight", weight}};
  } else if (dim != cusp) {
    report.status = Status::fail;
    report.payload["first_failure"] = {{"formula", "dimension"}, {"dim", dim}, {"cusp_dim", cusp}};
  }
  return report;
}

}  // namespace lieperiod::cli
