#pragma once

// Custom-order files: a JSON array of [value, color] pairs listed in
// ascending order, covering every entry of C(r,n) exactly once.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "wreath/core.hpp"

namespace wreath {

/// Infers (r, n) from the list: n is the largest value, r = (size - 1) / n.
OrderSpec order_from_json(const nlohmann::json& doc);
nlohmann::json order_to_json(const OrderSpec& order);

OrderSpec load_order(const std::filesystem::path& path);
void save_order(const OrderSpec& order, const std::filesystem::path& path);

}  // namespace wreath
