#pragma once

#include "tqft/blocks.hpp"

#include <json.hpp>

#include <string>

namespace tqft {

inline constexpr const char* kSpecVersion = "1.0";

/// {"r": 5, "coeffs": ["1/2", "0", "-3", "0"]} — exact rationals, power basis.
nlohmann::json cyc_to_json(const CycNum& x);
CycNum cyc_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const MatX<CycNum>& m);

/// {"r", "outer", "colors", "dim", "image_basis"} with cyclotomic entries.
nlohmann::json block_to_json(const QuantumBlock& b);

std::string canonical_dump(const nlohmann::json& j);

}  // namespace tqft
