#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimlab/group.hpp"

namespace dimlab {

struct CatalogEntry {
  std::string name;
  std::size_t expected_order = 0;
  std::string construction;  // generators, in the order used for indexing
  bool abelian = false;
  bool nilpotent = false;
  std::optional<std::uint64_t> p;  // set for nontrivial p-groups

  // e.g. "abelian p-group(2) nilpotent"
  std::string tags() const;
};

const std::vector<CatalogEntry>& catalog_entries();

// Built once and shared; order and tags are checked on first use. Throws
// UnknownName listing close matches.
FiniteGroup get_group(std::string_view name);

std::vector<std::string> suggest_names(std::string_view name);

}  // namespace dimlab
