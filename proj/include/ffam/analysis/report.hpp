#pragma once

#include "ffam/analysis/dimension.hpp"
#include "ffam/analysis/verify.hpp"

#include <json.hpp>

namespace ffam {

nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const DimensionReport& d);
nlohmann::json to_json(const ComplexityProfile& c);
nlohmann::json to_json(const TemporalEstimate& t);

}  // namespace ffam
