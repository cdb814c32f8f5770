#pragma once

#include <string>

#include "descent3/descent.hpp"

namespace descent3 {

// JSON payloads with stable field order (insertion-ordered objects, all
// collections deterministically sorted upstream). Each returns one object.
std::string to_json(const GrtReport& rep);
std::string to_json(const MainTheoremReport& rep);
std::string to_json(const CentralSeries& s);
std::string to_json(const WGroupReport& rep);
std::string to_json(const LiftReport& rep);
std::string to_json(const EmbeddingReport& rep);

std::string subgroup_json(const Subgroup& s);

}  // namespace descent3
