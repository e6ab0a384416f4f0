// The four CLI commands as library calls. Arguments are assumed validated
// by the caller (see cli.hpp); domain errors still throw.
#pragma once

#include "lieperiod/cli/report.hpp"
#include "lieperiod/ihara/derivation.hpp"

#include <set>
#include <string>

namespace lieperiod::cli {

/// Formula families checked by `verify`, in reporting order.
inline const std::vector<std::string>& verify_formulas() {
  static const std::vector<std::string> names = {"dptop2", "ptof", "dpcroch", "ltop", "series"};
  return names;
}

struct VerifyOptions {
  int max_weight = 12;
  std::set<std::string> which;  // subset of verify_formulas()
  ihara::DerivationSign sign = ihara::DerivationSign::f_then_a;
};

/// Closed forms against brute force for every case of total degree <=
/// max_weight; series identities through x,y-degree max_weight - 2.
RunReport cmd_verify(const VerifyOptions& opts);

/// Canonical relations of one family ("cor1", "cor2", "dpcroch", or "all" =
/// cor1 and cor2) at the given weight, each re-checked before emission.
RunReport cmd_relations(int weight, const std::string& family);

/// Substitution polynomials of the kernel basis plus the weight-k
/// Kohnen-Zagier blocks, each with its period-relation verdict.
RunReport cmd_period(int weight);

/// Kernel report and the cusp-form dimension comparison.
RunReport cmd_kernel(int weight);

}  // namespace lieperiod::cli
