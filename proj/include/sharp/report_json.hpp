#pragma once

#include "sharp/certificates.hpp"
#include "sharp/designs.hpp"
#include "sharp/polarization.hpp"

#include <json.hpp>

namespace sharp {

nlohmann::json to_json(const DotProductSet& s);
nlohmann::json to_json(const SharpnessReport& r);
nlohmann::json to_json(const DominanceCertificate& c);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const EnergyReport& r);
nlohmann::json to_json(const ComparisonReport& r);
nlohmann::json to_json(const MonotonicityScan& s);

/// trial_id,seed,competitor_Q,gap
std::string trial_log_csv(const ComparisonReport& r);

} // namespace sharp
