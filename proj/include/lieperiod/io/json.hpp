// JSON forms of the exact objects. Rationals are always strings "p/q" or
// "p", never JSON numbers.
#pragma once

#include "lieperiod/arith/polyq.hpp"
#include "lieperiod/freelie/ncpoly.hpp"
#include "lieperiod/ihara/pair_relation.hpp"
#include "lieperiod/period/period.hpp"
#include "lieperiod/relkernel/relkernel.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

namespace lieperiod::io {

using Json = nlohmann::ordered_json;

/// [{"word": "ab", "coef": "1"}, ...] in word order.
Json to_json(const NCPoly& f);
NCPoly ncpoly_from_json(const Json& j);

/// {"weight": w, "kind": "ihara", "terms": [{"i": 3, "j": 9, "coef": "-14"}, ...]}
Json to_json(const PairRelation& rel);
/// Throws std::invalid_argument on schema violations.
PairRelation pair_relation_from_json(const Json& j);

/// {"w": w, "coeffs": ["c0", "c1", ..., "cw"]}, index = degree.
Json to_json(const period::WeightedPoly& p);
period::WeightedPoly weighted_poly_from_json(const Json& j);

/// {"weight", "pairs", "kernel" (integer strings), "dim", "cusp_dim"}
Json kernel_report(int weight, const std::vector<std::pair<int, int>>& pairs,
                   const std::vector<relkernel::IntVector>& kernel, int cusp_dim);

}  // namespace lieperiod::io
