#pragma once

// Signed cycle-types, involution-types, signs and conjugacy for signed permutations.

#include "reflendo/signed_perm.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflendo {

struct SignedCycle {
  unsigned length = 0;
  int sign = 1;  // +1 or -1

  auto operator<=>(const SignedCycle&) const = default;
};

/// Multiset of signed cycles, kept sorted.
struct SignedCycleType {
  std::vector<SignedCycle> cycles;

  std::size_t rank() const {
    return std::accumulate(cycles.begin(), cycles.end(), std::size_t{0},
                           [](std::size_t acc, const SignedCycle& c) { return acc + c.length; });
  }
  std::size_t multiplicity(unsigned length, int sign) const {
    return static_cast<std::size_t>(std::count(cycles.begin(), cycles.end(), SignedCycle{length, sign}));
  }

  bool operator==(const SignedCycleType&) const = default;
};

inline std::string to_string(const SignedCycleType& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.cycles.size(); ++i) {
    if (i) s += ",";
    s += (t.cycles[i].sign > 0 ? "+" : "-") + std::to_string(t.cycles[i].length);
  }
  return s + "}";
}

/// (t, u): t = number of -1 cycles, u = number of +2 cycles; 2t + u <= n.
struct InvolutionType {
  unsigned t = 0;
  unsigned u = 0;
  unsigned n = 0;

  bool operator==(const InvolutionType&) const = default;
};

struct SignPair {
  int det_flips = 1;
  int det_perm = 1;

  bool operator==(const SignPair&) const = default;
};

inline SignedCycleType signed_cycle_type(const SignedPerm& w) {
  SignedCycleType type;
  const std::size_t n = w.rank();
  std::vector<bool> visited(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    unsigned length = 0;
    unsigned flips = 0;
    for (std::size_t i = start; !visited[i]; i = w.images()[i]) {
      visited[i] = true;
      ++length;
      flips += w.flips()[i];
    }
    type.cycles.push_back({length, flips % 2 == 0 ? 1 : -1});
  }
  std::sort(type.cycles.begin(), type.cycles.end());
  return type;
}

/// Present iff w^2 = identity, i.e. every cycle is +1, -1 or +2.
inline std::optional<InvolutionType> involution_type(const SignedPerm& w) {
  InvolutionType it{0, 0, static_cast<unsigned>(w.rank())};
  for (const auto& c : signed_cycle_type(w).cycles) {
    if (c.length == 1) {
      if (c.sign < 0) ++it.t;
    } else if (c.length == 2 && c.sign > 0) {
      ++it.u;
    } else {
      return std::nullopt;
    }
  }
  return it;
}

inline SignPair sign_pair(const SignedPerm& w) {
  const auto type = signed_cycle_type(w);
  unsigned even_cycles = 0;
  for (const auto& c : type.cycles) even_cycles += (c.length % 2 == 0);
  return {w.flip_count() % 2 == 0 ? 1 : -1, even_cycles % 2 == 0 ? 1 : -1};
}

/// (C_n)_1: even number of coordinate inversions. Isomorphic to D_n for n >= 4.
inline bool in_even_flip_subgroup(const SignedPerm& w) { return sign_pair(w).det_flips == 1; }
/// {}_+C_n: even underlying permutation.
inline bool in_even_perm_subgroup(const SignedPerm& w) { return sign_pair(w).det_perm == 1; }
/// C_n^+: rotation subgroup, signs +-(+1,+1).
inline bool in_rotation_subgroup(const SignedPerm& w) {
  const auto s = sign_pair(w);
  return s.det_flips * s.det_perm == 1;
}

/// z_0 = r_1 ... r_n, generator of the centre of C_n.
inline SignedPerm central_generator(std::size_t n) {
  if (n < 2) throw std::invalid_argument("central_generator needs n >= 2");
  return SignedPerm::negation(n);
}

enum class Ambient { Cn, Dn };
enum class Conjugacy { conjugate, not_conjugate, undecided };

namespace detail {

// Visits every element of C_n (or D_n) as (permutation, flip mask).
template <class F>
bool for_each_hyperoctahedral(std::size_t n, Ambient ambient, F&& f) {
  std::vector<std::uint16_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::uint16_t{0});
  do {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (ambient == Ambient::Dn && std::popcount(mask) % 2 != 0) continue;
      std::vector<std::uint8_t> flips(n);
      for (std::size_t i = 0; i < n; ++i) flips[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
      if (f(SignedPerm(perm, std::move(flips)))) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::uint64_t hyperoctahedral_order(std::size_t n, Ambient ambient) {
  std::uint64_t order = std::uint64_t{1} << n;
  for (std::size_t k = 2; k <= n; ++k) order *= k;
  return ambient == Ambient::Dn ? order / 2 : order;
}

}  // namespace detail

/// Brute-force conjugacy search over the whole ambient group.
inline bool conjugate_by_search(const SignedPerm& w1, const SignedPerm& w2, Ambient ambient) {
  return detail::for_each_hyperoctahedral(w1.rank(), ambient, [&](const SignedPerm& g) {
    return compose(compose(g.inverse(), w1), g) == w2;
  });
}

/// Signed cycle-types decide conjugacy in C_n, and in D_n unless every cycle is positive
/// of even length; such split classes fall back to a search bounded by `search_budget`.
inline Conjugacy is_conjugate(const SignedPerm& w1, const SignedPerm& w2, Ambient ambient,
                              std::uint64_t search_budget = 1000000) {
  if (w1.rank() != w2.rank()) throw std::invalid_argument("is_conjugate: rank mismatch");
  if (ambient == Ambient::Dn && (!in_even_flip_subgroup(w1) || !in_even_flip_subgroup(w2)))
    throw std::invalid_argument("is_conjugate: element has an odd number of flips, not in D_n");
  const auto t1 = signed_cycle_type(w1);
  if (!(t1 == signed_cycle_type(w2))) return Conjugacy::not_conjugate;
  if (ambient == Ambient::Cn) return Conjugacy::conjugate;
  const bool split = std::all_of(t1.cycles.begin(), t1.cycles.end(),
                                 [](const SignedCycle& c) { return c.sign > 0 && c.length % 2 == 0; });
  if (!split) return Conjugacy::conjugate;
  if (detail::hyperoctahedral_order(w1.rank(), ambient) > search_budget) return Conjugacy::undecided;
  return conjugate_by_search(w1, w2, ambient) ? Conjugacy::conjugate : Conjugacy::not_conjugate;
}

}  // namespace reflendo
