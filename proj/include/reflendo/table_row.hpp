#pragma once

#include "reflendo/bigint.hpp"

#include <optional>
#include <string>

namespace reflendo {

/// One normal subgroup K of the source: |G:K|, the quotient type, Z = number of target
/// subgroups isomorphic to G/K, |Aut(G/K)| (absent when irrelevant), and E = Z * |Aut|.
struct EndoTableRow {
  std::string kernel_label;
  CountInt kernel_index;
  std::string quotient_label;
  CountInt z;
  std::optional<CountInt> aut;
  CountInt e;

  bool operator==(const EndoTableRow&) const = default;
};

}  // namespace reflendo
