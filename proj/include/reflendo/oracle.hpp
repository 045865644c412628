#pragma once

// Brute-force ground truth. Homomorphisms out of a Coxeter group are tuples of
// target elements of order <= 2 satisfying every braid relation; we find all of
// them by depth-first search and compare with the closed forms.

#include "reflendo/classify.hpp"
#include "reflendo/coxeter.hpp"
#include "reflendo/counting.hpp"
#include "reflendo/groups.hpp"
#include "reflendo/stats.hpp"
#include "reflendo/tables.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace reflendo {

/// Images of the source's Coxeter generators, as target element indices.
struct GenImages {
  std::vector<std::uint32_t> images;

  auto operator<=>(const GenImages&) const = default;
};

struct EnumerateOptions {
  unsigned threads = 1;
  /// Order in which generators are assigned; empty means 0, 1, ..., g-1.
  std::vector<std::size_t> generator_order;
};

namespace detail {

struct SearchPlan {
  const CoxeterPresentation* source;
  const FiniteGroup* target;
  std::vector<std::uint32_t> candidates;
  std::vector<std::size_t> order;
};

// Relations between the generator placed at `depth` and every earlier one.
inline bool consistent(const SearchPlan& plan, const std::vector<std::uint32_t>& img, std::size_t depth) {
  const std::size_t gi = plan.order[depth];
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t gj = plan.order[d];
    const unsigned m = plan.source->order(gi, gj);
    if (m % plan.target->element_order[plan.target->mul(img[gi], img[gj])] != 0) return false;
  }
  return true;
}

inline void search(const SearchPlan& plan, std::vector<std::uint32_t>& img, std::size_t depth,
                   std::vector<GenImages>& out) {
  if (depth == plan.order.size()) {
    out.push_back({img});
    return;
  }
  const std::size_t gi = plan.order[depth];
  for (auto c : plan.candidates) {
    img[gi] = c;
    if (consistent(plan, img, depth)) search(plan, img, depth + 1, out);
  }
}

}  // namespace detail

/// Every homomorphism from the Coxeter group `source` to `target`, sorted lexicographically.
inline std::vector<GenImages> enumerate_homs(const CoxeterPresentation& source, const FiniteGroup& target,
                                             const EnumerateOptions& options = {}) {
  const std::size_t g = source.generator_count();
  if (g == 0) return {GenImages{}};
  detail::SearchPlan plan{&source, &target, target.order_leq2(), options.generator_order};
  if (plan.order.empty()) {
    plan.order.resize(g);
    std::iota(plan.order.begin(), plan.order.end(), std::size_t{0});
  }
  {
    auto sorted = plan.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < g; ++i)
      if (sorted.size() != g || sorted[i] != i) throw std::invalid_argument("generator_order is not a permutation");
  }

  // One slot per candidate image of the first generator; workers pull slots.
  const std::size_t slots = plan.candidates.size();
  std::vector<std::vector<GenImages>> found(slots);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<std::uint32_t> img(g, target.identity);
    for (std::size_t s = next++; s < slots; s = next++) {
      img[plan.order[0]] = plan.candidates[s];
      detail::search(plan, img, 1, found[s]);
    }
  };
  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<GenImages> all;
  for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  return all;
}

/// phi(e) for every source element e, following the source's word tree.
inline std::vector<std::uint32_t> evaluate_hom(const FiniteGroup& source, const FiniteGroup& target,
                                               const GenImages& hom) {
  std::vector<std::uint32_t> value(source.size);
  value[source.identity] = target.identity;
  for (std::size_t t = 1; t < source.size; ++t) {
    const auto e = source.eval_order[t];
    value[e] = target.mul(value[source.parent[e]], hom.images.at(source.parent_gen[e]));
  }
  return value;
}

struct KernelClass {
  CountInt kernel_order;
  CountInt kernel_index;
  CountInt image_order;
  CountInt count;

  bool operator==(const KernelClass&) const = default;
};

/// Groups homomorphisms by exact kernel, ordered by (index, kernel element set).
inline std::vector<KernelClass> kernel_classify(const std::vector<GenImages>& homs, const FiniteGroup& source,
                                                const FiniteGroup& target) {
  struct Tally {
    std::uint32_t kernel_order = 0;
    std::uint32_t image_order = 0;
    std::uint64_t count = 0;
  };
  std::map<std::pair<std::uint32_t, std::vector<std::uint64_t>>, Tally> classes;
  std::vector<std::uint8_t> hit(target.size);
  for (const auto& h : homs) {
    const auto value = evaluate_hom(source, target, h);
    std::vector<std::uint64_t> kernel((source.size + 63) / 64, 0);
    std::uint32_t kernel_order = 0;
    std::uint32_t image_order = 0;
    std::fill(hit.begin(), hit.end(), std::uint8_t{0});
    for (std::uint32_t e = 0; e < source.size; ++e) {
      if (value[e] == target.identity) {
        kernel[e / 64] |= std::uint64_t{1} << (e % 64);
        ++kernel_order;
      }
      if (!hit[value[e]]) {
        hit[value[e]] = 1;
        ++image_order;
      }
    }
    if (std::uint64_t{kernel_order} * image_order != source.size)
      throw std::logic_error("first isomorphism theorem violated: evaluation bug");
    auto& t = classes[{source.size / kernel_order, std::move(kernel)}];
    t.kernel_order = kernel_order;
    t.image_order = image_order;
    ++t.count;
  }
  std::vector<KernelClass> out;
  for (const auto& [key, t] : classes)
    out.push_back({CountInt(t.kernel_order), CountInt(key.first), CountInt(t.image_order), CountInt(t.count)});
  return out;
}

inline ImageOrderDistribution oracle_distribution(const std::vector<KernelClass>& classes) {
  std::map<CountInt, CountInt> by_order;
  for (const auto& c : classes) by_order[c.image_order] += c.count;
  ImageOrderDistribution d{{by_order.begin(), by_order.end()}, 0};
  for (const auto& [k, c] : d.support) d.total += c;
  return d;
}

// ---------------------------------------------------------------------------
// Subgroup census

struct CensusPattern {
  enum class Kind { C2, Klein4, Sym, C2xSym, Dihedral };
  Kind kind;
  unsigned k = 0;  // letters for Sym / C2xSym, p for Dihedral

  static CensusPattern c2() { return {Kind::C2, 0}; }
  static CensusPattern klein4() { return {Kind::Klein4, 0}; }
  static CensusPattern sym(unsigned k) { return {Kind::Sym, k}; }
  static CensusPattern c2_x_sym(unsigned k) { return {Kind::C2xSym, k}; }
  static CensusPattern dihedral(unsigned p) { return {Kind::Dihedral, p}; }
};

/// Ordered pairs (x, y) of commuting elements with x^2 = y^2 = 1.
inline std::uint64_t commuting_pairs_census(const FiniteGroup& target) {
  const auto inv = target.order_leq2();
  std::uint64_t pairs = 0;
  for (auto x : inv)
    for (auto y : inv) pairs += target.mul(x, y) == target.mul(y, x);
  return pairs;
}

namespace detail {

// Distinct image sets of injective homomorphisms source -> target.
inline std::uint64_t injective_image_sets(const CoxeterPresentation& pres, const FiniteGroup& source,
                                          const FiniteGroup& target, const EnumerateOptions& options) {
  std::set<std::vector<std::uint32_t>> images;
  for (const auto& h : enumerate_homs(pres, target, options)) {
    auto value = evaluate_hom(source, target, h);
    std::sort(value.begin(), value.end());
    if (std::adjacent_find(value.begin(), value.end()) != value.end()) continue;  // not injective
    images.insert(std::move(value));
  }
  return images.size();
}

}  // namespace detail

/// Number of subgroups of `target` matching `pattern`, counted as distinct element sets.
inline std::uint64_t subgroup_census(const FiniteGroup& target, const CensusPattern& pattern,
                                     const EnumerateOptions& options = {}) {
  using Kind = CensusPattern::Kind;
  switch (pattern.kind) {
    case Kind::C2: return target.involution_count();
    case Kind::Klein4: {
      // Ordered pairs of distinct commuting involutions; each Klein group yields 6.
      const auto inv = target.order_leq2();
      std::uint64_t pairs = 0;
      for (auto x : inv)
        for (auto y : inv)
          pairs += x != target.identity && y != target.identity && x != y && target.mul(x, y) == target.mul(y, x);
      return pairs / 6;
    }
    case Kind::Sym: {
      if (pattern.k < 2) throw std::invalid_argument("Sym(k) census needs k >= 2");
      const auto src = realize("Sym", symmetric_generators(pattern.k));
      return detail::injective_image_sets(presentation(GroupId::A(pattern.k - 1)), src.group, target, options);
    }
    case Kind::C2xSym: {
      if (pattern.k < 2) throw std::invalid_argument("C2xSym(k) census needs k >= 2");
      const std::size_t rank = pattern.k + 1;
      std::vector<SignedPerm> gens;
      for (std::size_t i = 0; i + 1 < pattern.k; ++i) gens.push_back(SignedPerm::pair_reflection(rank, +1, i, i + 1));
      gens.push_back(SignedPerm::coordinate_flip(rank, pattern.k));
      const auto src = realize("C2xSym", gens);
      const auto pres = direct_sum(presentation(GroupId::A(pattern.k - 1)), CoxeterPresentation::commuting("A1", 1));
      return detail::injective_image_sets(pres, src.group, target, options);
    }
    case Kind::Dihedral: {
      const GroupId id = GroupId::I2(pattern.k);
      const auto src = build_group(id);
      return detail::injective_image_sets(presentation(id), src, target, options);
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Verification

struct Check {
  std::string name;
  std::string formula;
  std::string oracle;
  bool pass = false;
};

struct VerifyReport {
  std::string group;
  std::string provenance;
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

struct VerifyOptions {
  Budget budget;
  unsigned threads = 1;
  bool timestamp = true;
};

namespace detail {

inline std::string to_string_any(const CountInt& v) { return v.str(); }
inline std::string to_string_any(const Ratio& v) { return reflendo::to_string(v); }
inline std::string to_string_any(std::uint64_t v) { return std::to_string(v); }
inline std::string to_string_any(std::uint32_t v) { return std::to_string(v); }
inline std::string to_string_any(const std::string& v) { return v; }

template <class A, class B>
void add_check(VerifyReport& r, std::string name, const A& formula, const B& oracle) {
  std::string f = to_string_any(formula);
  std::string o = to_string_any(oracle);
  const bool pass = f == o;
  r.checks.push_back({std::move(name), std::move(f), std::move(o), pass});
}

// "index:e" for every populated kernel, sorted.
inline std::string kernel_multiset(const HomTable& t) {
  std::vector<std::pair<CountInt, CountInt>> items;
  for (const auto& r : t.rows)
    if (r.e > 0) items.emplace_back(r.kernel_index, r.e);
  std::sort(items.begin(), items.end());
  std::string s;
  for (const auto& [i, e] : items) s += (s.empty() ? "" : ",") + i.str() + ":" + e.str();
  return s;
}

inline std::string kernel_multiset(const std::vector<KernelClass>& classes) {
  std::vector<std::pair<CountInt, CountInt>> items;
  for (const auto& c : classes) items.emplace_back(c.kernel_index, c.count);
  std::sort(items.begin(), items.end());
  std::string s;
  for (const auto& [i, e] : items) s += (s.empty() ? "" : ",") + i.str() + ":" + e.str();
  return s;
}

inline std::string render(const ImageOrderDistribution& d) {
  std::string s;
  for (const auto& [k, c] : d.support) s += (s.empty() ? "" : ",") + k.str() + ":" + c.str();
  return s;
}

inline std::vector<unsigned> odd_primes_upto(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned p = 3; p <= n; p += 2)
    if (is_odd_prime(p)) ps.push_back(p);
  return ps;
}

// Homomorphisms with every element of `elements` in the kernel.
inline std::uint64_t count_killing(const std::vector<GenImages>& homs, const FiniteGroup& source,
                                   const FiniteGroup& target, const std::vector<std::uint32_t>& elements) {
  std::uint64_t n = 0;
  for (const auto& h : homs) {
    const auto value = evaluate_hom(source, target, h);
    n += std::all_of(elements.begin(), elements.end(), [&](auto e) { return value[e] == target.identity; });
  }
  return n;
}

inline bool image_is_normal(const FiniteGroup& g, const std::vector<std::uint32_t>& value) {
  std::vector<std::uint8_t> in(g.size, 0);
  for (auto v : value) in[v] = 1;
  for (std::uint32_t x = 0; x < g.size; ++x) {
    if (!in[x]) continue;
    for (auto s : g.generators)
      if (!in[g.mul(g.mul(s, x), s)]) return false;  // generators are involutions
  }
  return true;
}

inline void hom_I2p_checks(VerifyReport& r, const FiniteGroup& g, const GroupId& as_target, unsigned letters,
                           const EnumerateOptions& eo) {
  for (unsigned p : odd_primes_upto(std::max(letters, 5U))) {
    const auto homs = enumerate_homs(presentation(GroupId::I2(p)), g, eo);
    add_check(r, "hom_I2p[" + std::to_string(p) + "]", hom_count_I2p(p, as_target),
              static_cast<std::uint64_t>(homs.size()));
    if (p <= letters)
      add_check(r, "dihedral_subgroups[" + std::to_string(p) + "]", dihedral_subgroup_count(p, as_target),
                subgroup_census(g, CensusPattern::dihedral(p), eo));
  }
}

}  // namespace detail

/// Endomorphisms whose image is a normal subgroup.
inline std::uint64_t normal_image_count(const std::vector<GenImages>& homs, const FiniteGroup& g) {
  std::uint64_t normal = 0;
  for (const auto& h : homs) normal += detail::image_is_normal(g, evaluate_hom(g, g, h));
  return normal;
}

/// Every applicable closed form compared with brute force. Throws BudgetExceeded
/// or NoConcreteRepresentation before any check runs.
inline VerifyReport verify(const GroupId& id, const VerifyOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  r.group = to_spec(id);
  r.provenance = table_provenance(id);
  if (!has_concrete_representation(id)) throw NoConcreteRepresentation("no concrete representation for " + display_name(id));
  const EnumerateOptions eo{options.threads, {}};
  const unsigned n = id.param();

  std::optional<Realization<SignedPerm>> signed_group;
  FiniteGroup g;
  if (id.family() == Family::A || id.family() == Family::C || id.family() == Family::D) {
    signed_group = build_signed_group(id, options.budget);
    g = signed_group->group;
  } else {
    g = build_group(id, options.budget);
  }

  const auto pres = presentation(id);
  const auto homs = enumerate_homs(pres, g, eo);
  const auto classes = kernel_classify(homs, g, g);
  const auto table = endomorphism_table(id);

  detail::add_check(r, "endo_count", endo_count(id), static_cast<std::uint64_t>(homs.size()));
  detail::add_check(r, "table_total", table.total, static_cast<std::uint64_t>(homs.size()));
  detail::add_check(r, "involution_count", involution_count(id), g.involution_count());
  detail::add_check(r, "kernel_table", detail::kernel_multiset(table), detail::kernel_multiset(classes));
  detail::add_check(r, "image_order_distribution", detail::render(image_order_distribution(table)),
                    detail::render(oracle_distribution(classes)));

  const auto locate = [&](const SignedPerm& w) { return *signed_group->index_of(w); };

  switch (id.family()) {
    case Family::C: {
      detail::add_check(r, "commuting_pairs_leq2", commuting_pairs_leq2(n), commuting_pairs_census(g));
      detail::add_check(r, "klein_subgroups", klein_subgroup_count(n), subgroup_census(g, CensusPattern::klein4(), eo));
      if (n >= 3) {
        detail::add_check(r, "sym_subgroups", symmetric_subgroup_count(id),
                          subgroup_census(g, CensusPattern::sym(n), eo));
        detail::add_check(r, "c2_x_sym_subgroups", c2_x_symmetric_subgroup_count(n),
                          subgroup_census(g, CensusPattern::c2_x_sym(n), eo));
      }
      const auto z0 = locate(central_generator(n));
      detail::add_check(r, "centre_in_kernel", prob_centre_in_kernel(id),
                        make_ratio(detail::count_killing(homs, g, g, {z0}), homs.size()));
      if (n >= 3 && n != 4 && n != 6) {
        const auto r1 = locate(SignedPerm::coordinate_flip(n, 0));
        const auto r12 = locate(SignedPerm::pair_reflection(n, +1, 0, 1));
        detail::add_check(r, "flip_in_kernel", prob_reflection_in_kernel(n, ReflectionClass::coordinate_flip),
                          make_ratio(detail::count_killing(homs, g, g, {r1}), homs.size()));
        detail::add_check(r, "transposition_in_kernel", prob_reflection_in_kernel(n, ReflectionClass::transposition),
                          make_ratio(detail::count_killing(homs, g, g, {r12}), homs.size()));
        if (n >= 5)
          detail::add_check(r, "normal_image", prob_normal_image(n),
                            make_ratio(normal_image_count(homs, g), homs.size()));
      }
      detail::hom_I2p_checks(r, g, id, n, eo);
      break;
    }
    case Family::D: {
      detail::add_check(r, "sym_subgroups", symmetric_subgroup_count(id), subgroup_census(g, CensusPattern::sym(n), eo));
      if (n % 2 == 0) {
        const auto z0 = locate(central_generator(n));
        detail::add_check(r, "centre_in_kernel", prob_centre_in_kernel(id),
                          make_ratio(detail::count_killing(homs, g, g, {z0}), homs.size()));
      }
      break;
    }
    case Family::A: detail::hom_I2p_checks(r, g, id, n + 1, eo); break;
    case Family::I2:
      for (unsigned l = 2; l <= 12; ++l) {
        const auto h = enumerate_homs(presentation(GroupId::I2(l)), g, eo);
        detail::add_check(r, "hom_dihedral[" + std::to_string(l) + "]", hom_count_dihedral(l, n),
                          static_cast<std::uint64_t>(h.size()));
      }
      break;
    default: break;
  }

  if (options.timestamp)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// I_2(2..12), A_1..A_4, C_2..C_4, D_4, D_5.
inline std::vector<GroupId> small_suite() {
  std::vector<GroupId> ids;
  for (unsigned m = 2; m <= 12; ++m) ids.push_back(GroupId::I2(m));
  for (unsigned n = 1; n <= 4; ++n) ids.push_back(GroupId::A(n));
  for (unsigned n = 2; n <= 4; ++n) ids.push_back(GroupId::C(n));
  ids.push_back(GroupId::D(4));
  ids.push_back(GroupId::D(5));
  return ids;
}

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["formula"] = c.formula;
    j["oracle"] = c.oracle;
    j["pass"] = c.pass;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["group"] = r.group;
  out["provenance"] = r.provenance;
  out["checks"] = std::move(checks);
  out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace reflendo
