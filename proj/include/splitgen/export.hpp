#pragma once

#include "splitgen/system.hpp"

#include <json.hpp>

namespace splitgen {

/// Lossless JSON image of a determining system: variable names p1..pr,
/// labeled equations, monomials with exact "num/den" coefficient strings.
nlohmann::json system_to_json(const DeterminingSystem& sys);
DeterminingSystem system_from_json(const nlohmann::json& j);

}  // namespace splitgen
