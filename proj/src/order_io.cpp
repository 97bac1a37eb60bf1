#include "wreath/order_io.hpp"

#include <fstream>
#include <sstream>

namespace wreath {

OrderSpec order_from_json(const nlohmann::json& doc) {
  if (!doc.is_array() || doc.empty()) throw DomainError("custom order must be a non-empty JSON array");
  std::vector<ColoredEntry> entries;
  std::uint32_t n = 0;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned())
      throw DomainError("custom order items must be [value, color] pairs of nonnegative integers");
    entries.emplace_back(item[0].get<std::uint32_t>(), item[1].get<std::uint32_t>());
    n = std::max(n, entries.back().value);
  }
  std::uint32_t r = 1;
  if (n > 0) {
    if ((entries.size() - 1) % n != 0) throw DomainError("custom order size is not n*r + 1");
    r = static_cast<std::uint32_t>((entries.size() - 1) / n);
  }
  return OrderSpec::custom(Ambient{r, n}, std::move(entries));
}

nlohmann::json order_to_json(const OrderSpec& order) {
  auto doc = nlohmann::json::array();
  for (const auto& e : order.ascending()) doc.push_back({e.value, e.color});
  return doc;
}

OrderSpec load_order(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open order file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("order file " + path.string() + ": " + e.what());
  }
  return order_from_json(doc);
}

void save_order(const OrderSpec& order, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write order file " + path.string());
  out << order_to_json(order).dump() << '\n';
}

}  // namespace wreath
