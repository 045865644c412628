#pragma once

// Concrete generators, element closure, and Cayley tables.
//
// A FiniteGroup is a representation-free view of a concrete group: elements are
// indices 0..order-1 in canonical order (the element type's operator<), with a full
// multiplication table and a BFS word tree over the Coxeter generators. The oracle
// only ever works with FiniteGroup.

#include "reflendo/coxeter.hpp"
#include "reflendo/dihedral.hpp"
#include "reflendo/golden.hpp"
#include "reflendo/group_id.hpp"
#include "reflendo/signed_perm.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace reflendo {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConcreteRepresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Budget {
  /// Closure refuses to grow past this many elements.
  std::uint64_t max_elements = 100000;
  /// Cayley tables (order^2 entries) larger than this are refused; the default admits order <= 2000.
  std::uint64_t max_table_entries = 4000000;

  /// Defaults, with max_table_entries overridden by REFLECT_ENDO_BUDGET when set.
  static Budget from_environment() {
    Budget b;
    if (const char* env = std::getenv("REFLECT_ENDO_BUDGET"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const auto v = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0) b.max_table_entries = v;
    }
    return b;
  }
};

using GeneratorSet =
    std::variant<std::vector<SignedPerm>, std::vector<DihedralElt>, std::vector<GoldenMatrix>>;

inline std::vector<SignedPerm> symmetric_generators(std::size_t letters) {
  std::vector<SignedPerm> gens;
  for (std::size_t i = 0; i + 1 < letters; ++i) gens.push_back(SignedPerm::pair_reflection(letters, +1, i, i + 1));
  return gens;
}

/// Generators in the order documented on presentation().
inline GeneratorSet coxeter_generators(const GroupId& id) {
  const std::size_t n = id.param();
  switch (id.family()) {
    case Family::A: return symmetric_generators(n + 1);
    case Family::C: {
      std::vector<SignedPerm> gens{SignedPerm::coordinate_flip(n, 0)};
      for (auto& t : symmetric_generators(n)) gens.push_back(std::move(t));
      return gens;
    }
    case Family::D: {
      std::vector<SignedPerm> gens{SignedPerm::pair_reflection(n, -1, 0, 1)};
      for (auto& t : symmetric_generators(n)) gens.push_back(std::move(t));
      return gens;
    }
    case Family::I2: {
      const unsigned m = id.param();
      return std::vector<DihedralElt>{DihedralElt(m, 0, true), DihedralElt(m, 1, true)};
    }
    case Family::H3: {
      const auto refl = h3_simple_reflections();
      return std::vector<GoldenMatrix>(refl.begin(), refl.end());
    }
    default:
      throw NoConcreteRepresentation("no concrete representation for " + display_name(id));
  }
}

inline bool has_concrete_representation(const GroupId& id) {
  switch (id.family()) {
    case Family::A:
    case Family::C:
    case Family::D:
    case Family::I2:
    case Family::H3: return true;
    default: return false;
  }
}

struct FiniteGroup {
  std::string name;
  std::uint32_t size = 0;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> table;  // table[a * size + b] = a then b
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint32_t> element_order;
  std::vector<std::uint32_t> generators;
  // Word tree: element e (not the identity) equals parent[e] * generators[parent_gen[e]].
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> parent_gen;
  std::vector<std::uint32_t> eval_order;  // parents precede children; starts at identity

  std::uint32_t order() const { return size; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[std::size_t{a} * size + b]; }

  /// Identity followed by every element of order exactly 2, ascending.
  std::vector<std::uint32_t> order_leq2() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; e < size; ++e)
      if (element_order[e] <= 2) out.push_back(e);
    std::stable_partition(out.begin(), out.end(), [&](std::uint32_t e) { return e == identity; });
    return out;
  }

  std::uint32_t involution_count() const {
    return static_cast<std::uint32_t>(
        std::count(element_order.begin(), element_order.end(), std::uint32_t{2}));
  }
};

/// A FiniteGroup together with the concrete elements behind its indices.
template <class Elt>
struct Realization {
  std::vector<Elt> elements;  // sorted canonically; index i <-> elements[i]
  FiniteGroup group;

  std::optional<std::uint32_t> index_of(const Elt& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || !(*it == e)) return std::nullopt;
    return static_cast<std::uint32_t>(it - elements.begin());
  }
};

/// Closure of `gens` under composition, in canonical order.
template <class Elt>
std::vector<Elt> enumerate_elements(const std::vector<Elt>& gens, std::uint64_t max_elements = 100000) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  std::vector<Elt> found{identity_like(gens.front())};
  std::unordered_map<Elt, std::uint32_t> seen{{found.front(), 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& g : gens) {
      Elt next = compose(found[head], g);
      if (seen.contains(next)) continue;
      if (found.size() >= max_elements) throw BudgetExceeded("closure exceeded element budget");
      seen.emplace(next, static_cast<std::uint32_t>(found.size()));
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

/// Elements of a concrete group by closure from its Coxeter generators.
inline GeneratorSet enumerate_elements(const GroupId& id, const Budget& budget = {}) {
  return std::visit(
      [&](const auto& gens) -> GeneratorSet { return enumerate_elements(gens, budget.max_elements); },
      coxeter_generators(id));
}

template <class Elt>
Realization<Elt> realize(std::string name, const std::vector<Elt>& gens, const Budget& budget = {}) {
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  // BFS closure recording the word tree in discovery order.
  std::vector<Elt> found{identity_like(gens.front())};
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint32_t> parent_gen{0};
  std::unordered_map<Elt, std::uint32_t> seen{{found.front(), 0}};
  std::vector<std::uint32_t> right;  // right[i * g + k] = discovery index of found[i] * gens[k]
  const std::size_t g = gens.size();
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t k = 0; k < g; ++k) {
      Elt next = compose(found[head], gens[k]);
      auto it = seen.find(next);
      std::uint32_t idx = 0;
      if (it == seen.end()) {
        if (found.size() >= budget.max_elements) throw BudgetExceeded("closure exceeded element budget");
        idx = static_cast<std::uint32_t>(found.size());
        seen.emplace(next, idx);
        found.push_back(std::move(next));
        parent.push_back(static_cast<std::uint32_t>(head));
        parent_gen.push_back(static_cast<std::uint32_t>(k));
      } else {
        idx = it->second;
      }
      right.push_back(idx);
    }
  }
  const std::size_t n = found.size();
  if (static_cast<std::uint64_t>(n) * n > budget.max_table_entries)
    throw BudgetExceeded("Cayley table of " + name + " (order " + std::to_string(n) + ") exceeds budget of " +
                         std::to_string(budget.max_table_entries) + " entries");

  // Canonical relabelling: canon[discovery index] = position in sorted order.
  std::vector<std::uint32_t> by_value(n);
  std::iota(by_value.begin(), by_value.end(), 0U);
  std::sort(by_value.begin(), by_value.end(), [&](auto x, auto y) { return found[x] < found[y]; });
  std::vector<std::uint32_t> canon(n);
  for (std::uint32_t pos = 0; pos < n; ++pos) canon[by_value[pos]] = pos;

  Realization<Elt> out;
  out.elements.reserve(n);
  for (auto idx : by_value) out.elements.push_back(found[idx]);

  FiniteGroup& G = out.group;
  G.name = std::move(name);
  G.size = static_cast<std::uint32_t>(n);
  G.identity = canon[0];
  G.parent.assign(n, 0);
  G.parent_gen.assign(n, 0);
  G.eval_order.resize(n);
  for (std::uint32_t d = 0; d < n; ++d) {
    G.eval_order[d] = canon[d];
    G.parent[canon[d]] = canon[parent[d]];
    G.parent_gen[canon[d]] = parent_gen[d];
  }
  G.parent[G.identity] = G.identity;
  for (std::size_t k = 0; k < g; ++k) G.generators.push_back(canon[right[k]]);  // identity * gens[k]

  std::vector<std::uint32_t> right_canon(n * g);
  for (std::uint32_t d = 0; d < n; ++d)
    for (std::size_t k = 0; k < g; ++k) right_canon[std::size_t{canon[d]} * g + k] = canon[right[d * g + k]];

  // Row a: a * e = (a * parent(e)) * gen(e), filled in word-tree order.
  G.table.assign(n * n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t* row = &G.table[std::size_t{a} * n];
    row[G.identity] = a;
    for (std::size_t t = 1; t < n; ++t) {
      const auto e = G.eval_order[t];
      row[e] = right_canon[std::size_t{row[G.parent[e]]} * g + G.parent_gen[e]];
    }
  }

  G.inverse.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::uint32_t* row = &G.table[std::size_t{a} * n];
    for (std::uint32_t b = 0; b < n; ++b) {
      if (row[b] == G.identity) {
        G.inverse[a] = b;
        break;
      }
    }
  }
  G.element_order.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    for (std::uint32_t x = a; x != G.identity; x = G.mul(x, a)) ++k;
    G.element_order[a] = k;
  }
  G.element_order[G.identity] = 1;
  return out;
}

/// The concrete group behind `id` as a FiniteGroup.
inline FiniteGroup build_group(const GroupId& id, const Budget& budget = {}) {
  return std::visit([&](const auto& gens) { return realize(to_spec(id), gens, budget).group; },
                    coxeter_generators(id));
}

/// A/C/D only: keeps the signed permutations so callers can locate specific elements.
inline Realization<SignedPerm> build_signed_group(const GroupId& id, const Budget& budget = {}) {
  if (id.family() != Family::A && id.family() != Family::C && id.family() != Family::D)
    throw std::invalid_argument(display_name(id) + " is not a signed-permutation group");
  return realize(to_spec(id), std::get<std::vector<SignedPerm>>(coxeter_generators(id)), budget);
}

}  // namespace reflendo
