#pragma once

// Symbolic names for the irreducible spherical reflection groups.
//
// Grammar accepted by parse_group_spec:  FAMILY[:param]
//   A:n (n >= 1), C:n (n >= 2), D:n (n >= 4), I2:m (m >= 2),
//   H3, H4, F4, E6, E7, E8.
// Isomorphic names (A:2 vs I2:3, C:2 vs I2:4) are kept distinct.

#include "reflendo/bigint.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reflendo {

enum class Family : std::uint8_t { A, C, D, I2, H3, H4, F4, E6, E7, E8 };

class GroupSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::string_view kGroupSpecGrammar =
    "FAMILY[:param] with FAMILY:param one of A:n (n>=1), C:n (n>=2), D:n (n>=4), I2:m (m>=2), "
    "or one of H3, H4, F4, E6, E7, E8";

constexpr bool is_exceptional_family(Family f) {
  return f == Family::H3 || f == Family::H4 || f == Family::F4 || f == Family::E6 ||
         f == Family::E7 || f == Family::E8;
}

class GroupId {
 public:
  static GroupId A(unsigned n) { return GroupId(Family::A, n); }
  static GroupId C(unsigned n) { return GroupId(Family::C, n); }
  static GroupId D(unsigned n) { return GroupId(Family::D, n); }
  static GroupId I2(unsigned m) { return GroupId(Family::I2, m); }
  static GroupId H3() { return GroupId(Family::H3, 0); }
  static GroupId H4() { return GroupId(Family::H4, 0); }
  static GroupId F4() { return GroupId(Family::F4, 0); }
  static GroupId E6() { return GroupId(Family::E6, 0); }
  static GroupId E7() { return GroupId(Family::E7, 0); }
  static GroupId E8() { return GroupId(Family::E8, 0); }

  GroupId(Family family, unsigned param) : family_(family), param_(param) {
    switch (family) {
      case Family::A:
        if (param < 1) throw GroupSpecError("A_n requires n >= 1");
        break;
      case Family::C:
        if (param < 2) throw GroupSpecError("C_n requires n >= 2");
        break;
      case Family::D:
        if (param < 4) throw GroupSpecError("D_n requires n >= 4");
        break;
      case Family::I2:
        if (param < 2) throw GroupSpecError("I_2(m) requires m >= 2");
        break;
      default:
        param_ = 0;
        break;
    }
  }

  Family family() const { return family_; }
  /// Rank for A/C/D, edge label m for I2, zero for exceptional groups.
  unsigned param() const { return param_; }
  bool is_exceptional() const { return is_exceptional_family(family_); }

  auto operator<=>(const GroupId&) const = default;

 private:
  Family family_;
  unsigned param_;
};

/// Spec form, e.g. "C:4", "I2:6", "H3".
inline std::string to_spec(const GroupId& id) {
  switch (id.family()) {
    case Family::A: return "A:" + std::to_string(id.param());
    case Family::C: return "C:" + std::to_string(id.param());
    case Family::D: return "D:" + std::to_string(id.param());
    case Family::I2: return "I2:" + std::to_string(id.param());
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

/// Display form, e.g. "C_4", "I_2(6)", "H_3".
inline std::string display_name(const GroupId& id) {
  switch (id.family()) {
    case Family::A: return "A_" + std::to_string(id.param());
    case Family::C: return "C_" + std::to_string(id.param());
    case Family::D: return "D_" + std::to_string(id.param());
    case Family::I2: return "I_2(" + std::to_string(id.param()) + ")";
    case Family::H3: return "H_3";
    case Family::H4: return "H_4";
    case Family::F4: return "F_4";
    case Family::E6: return "E_6";
    case Family::E7: return "E_7";
    case Family::E8: return "E_8";
  }
  return "?";
}

inline GroupId parse_group_spec(std::string_view spec) {
  auto fail = [&](const std::string& why) -> GroupSpecError {
    return GroupSpecError("bad group spec '" + std::string(spec) + "': " + why +
                          "; expected " + std::string(kGroupSpecGrammar));
  };
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  if (colon == std::string_view::npos) {
    if (head == "H3") return GroupId::H3();
    if (head == "H4") return GroupId::H4();
    if (head == "F4") return GroupId::F4();
    if (head == "E6") return GroupId::E6();
    if (head == "E7") return GroupId::E7();
    if (head == "E8") return GroupId::E8();
    throw fail("unknown family or missing parameter");
  }
  const std::string_view tail = spec.substr(colon + 1);
  if (tail.empty() || tail.size() > 6) throw fail("parameter must be a small positive integer");
  unsigned value = 0;
  for (char ch : tail) {
    if (ch < '0' || ch > '9') throw fail("parameter must be a positive integer");
    value = value * 10 + static_cast<unsigned>(ch - '0');
  }
  try {
    if (head == "A") return GroupId::A(value);
    if (head == "C") return GroupId::C(value);
    if (head == "D") return GroupId::D(value);
    if (head == "I2") return GroupId::I2(value);
  } catch (const GroupSpecError& e) {
    throw fail(e.what());
  }
  throw fail("unknown family");
}

inline CountInt order(const GroupId& id) {
  const unsigned n = id.param();
  switch (id.family()) {
    case Family::A: return factorial(n + 1);
    case Family::C: return pow2(n) * factorial(n);
    case Family::D: return pow2(n - 1) * factorial(n);
    case Family::I2: return CountInt(2 * n);
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::F4: return 1152;
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
  }
  return 0;
}

}  // namespace reflendo
