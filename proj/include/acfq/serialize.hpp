#pragma once

#include <json.hpp>

#include "acfq/geometric.hpp"

namespace acfq {

nlohmann::json to_json(const DichotomyReport& r);
nlohmann::json to_json(const DimResult& r);
nlohmann::json to_json(const BoundingSet& b);
nlohmann::json to_json(const FrobeniusReport& r);
nlohmann::json to_json(const InfiniteResult& r);

std::string render_text(const DichotomyReport& r, const FqField& field);
std::string render_text(const DimResult& r);
std::string render_text(const BoundingSet& b);
std::string render_text(const FrobeniusReport& r);

}  // namespace acfq
