#pragma once

#include <cstddef>
#include <string_view>

namespace gscope {

struct Caps {
  std::size_t closure = 2'000'000;   // max elements produced by a closure
  std::size_t lattice = 500;         // max |G| for full subgroup enumeration
  std::size_t oracle = 5000;         // max |G| for the Schur-ring oracle
  std::size_t double_coset = 100'000;
  std::size_t table_order = 100'000;  // max |G| for character tables
  std::size_t table_classes = 60;
};

/// Applies "key=value,key=value" overrides (keys: closure, lattice, oracle,
/// double_coset, table_order, table_classes). Throws UsageError on bad input.
Caps apply_caps_overrides(Caps caps, std::string_view spec);

}  // namespace gscope
