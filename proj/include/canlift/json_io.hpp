#ifndef CANLIFT_JSON_IO_HPP
#define CANLIFT_JSON_IO_HPP

#include "json.hpp"

#include "canlift/cartan.hpp"
#include "canlift/lifting.hpp"
#include "canlift/parametrize.hpp"
#include "canlift/tropical.hpp"
#include "canlift/verify.hpp"

namespace canlift {

using Json = nlohmann::json;

Json cartan_to_json(const CartanDatum& c);
CartanDatum cartan_from_json(const Json& j);

// Exact rationals travel as strings ("2/9"); matrices as row-major arrays.
Json matrix_to_json(const GroupMatrix& m);
GroupMatrix matrix_from_json(const Json& j);

Json pl_component_to_json(const PLComponent& comp);
Json pl_map_to_json(const PLMap& map);

Json zeta_report_to_json(const ZetaReport& rep);
Json affine_map_to_json(const AffineMap& m);
Json corollary_report_to_json(const CorollaryReport& rep);
Json condition_report_to_json(const ConditionReport& rep);
Json criteria_to_json(const std::vector<CriterionResult>& results);

}  // namespace canlift

#endif
