#include "gscope/caps.hpp"

#include <charconv>
#include <string>

#include "gscope/errors.hpp"

namespace gscope {

Caps apply_caps_overrides(Caps caps, std::string_view spec) {
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("cap override '" + std::string(item) + "' is not key=value");
    const std::string_view key = item.substr(0, eq);
    const std::string_view text = item.substr(eq + 1);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value == 0) {
      throw UsageError("cap '" + std::string(key) + "' needs a positive integer, got '" + std::string(text) + "'");
    }
    if (key == "closure") caps.closure = value;
    else if (key == "lattice") caps.lattice = value;
    else if (key == "oracle") caps.oracle = value;
    else if (key == "double_coset") caps.double_coset = value;
    else if (key == "table_order") caps.table_order = value;
    else if (key == "table_classes") caps.table_classes = value;
    else throw UsageError("unknown cap '" + std::string(key) + "'");
  }
  return caps;
}

}  // namespace gscope
