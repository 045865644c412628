#pragma once

// Exact distribution of |phi(W)| for phi uniform in End(W), and the
// probabilities derived from it.

#include "reflendo/counting.hpp"
#include "reflendo/tables.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reflendo {

struct ImageOrderDistribution {
  std::vector<std::pair<CountInt, CountInt>> support;  // (image order, hom count), increasing
  CountInt total;

  Ratio mass(std::size_t i) const { return make_ratio(support.at(i).second, total); }
  bool operator==(const ImageOrderDistribution&) const = default;
};

/// |phi(W)| = |W:ker phi|, so rows are grouped on kernel index; empty rows are dropped.
inline ImageOrderDistribution image_order_distribution(const HomTable& table) {
  std::map<CountInt, CountInt> by_order;
  for (const auto& r : table.rows)
    if (r.e > 0) by_order[r.kernel_index] += r.e;
  ImageOrderDistribution d{{by_order.begin(), by_order.end()}, 0};
  for (const auto& [k, c] : d.support) d.total += c;
  return d;
}

inline ImageOrderDistribution image_order_distribution(const GroupId& id) {
  return image_order_distribution(endomorphism_table(id));
}

inline Ratio expected_image_order(const ImageOrderDistribution& d) {
  CountInt num = 0;
  for (const auto& [k, c] : d.support) num += k * c;
  return make_ratio(num, d.total);
}

inline Ratio variance_image_order(const ImageOrderDistribution& d) {
  CountInt second = 0;
  for (const auto& [k, c] : d.support) second += k * k * c;
  const Ratio mean = expected_image_order(d);
  return make_ratio(second, d.total) - mean * mean;
}

inline Ratio expected_image_order(const GroupId& id) { return expected_image_order(image_order_distribution(id)); }
inline Ratio variance_image_order(const GroupId& id) { return variance_image_order(image_order_distribution(id)); }

/// Standard deviation as a decimal string with `digits` places (exact square root, round-half-even).
inline std::string std_image_order(const GroupId& id, unsigned digits = 12) {
  return sqrt_fixed(variance_image_order(id), digits);
}

inline Ratio prob_automorphism(const GroupId& id) { return make_ratio(aut_order(id), endo_count(id)); }

/// Probability that Z(W) lies in the kernel; 1 for groups with trivial centre.
inline Ratio prob_centre_in_kernel(const GroupId& id) {
  const unsigned n = id.param();
  switch (id.family()) {
    case Family::A: return 1;
    case Family::D:
      if (n % 2 == 1) return 1;
      return 1 - prob_automorphism(id);
    case Family::C:
      // Even n: only injective maps miss the centre.
      if (n % 2 == 0) return 1 - prob_automorphism(id);
      // Odd n: kernels C_n, +C_n, N and {±1} contain z_0.
      return make_ratio(1 + involution_count(id) + 2 * pow2(n) * factorial(n), endo_count(id));
    default:
      throw std::domain_error("prob_centre_in_kernel is defined for A_n, C_n and D_n");
  }
}

enum class ReflectionClass { coordinate_flip, transposition };

/// True when n lies in the range n >= 7 where the reflection and normality results are stated.
inline bool in_stated_range(unsigned n) { return n >= 7; }

namespace detail {

inline void require_generic_C(unsigned n, const char* what) {
  if (n < 3 || n == 4 || n == 6)
    throw std::domain_error(std::string(what) + ": C_" + std::to_string(n) +
                            " has extra normal subgroups; needs n >= 3, n != 4, 6");
}

}  // namespace detail

/// P[r in ker phi] for a reflection r of C_n. r_1 lies in C_n, +C_n and N; r_{+1,1,2} in C_n and (C_n)_1.
inline Ratio prob_reflection_in_kernel(unsigned n, ReflectionClass cls) {
  detail::require_generic_C(n, "prob_reflection_in_kernel");
  const GroupId id = GroupId::C(n);
  CountInt num = 1 + involution_count(id);
  if (cls == ReflectionClass::coordinate_flip) num += pow2(n) * factorial(n);
  return make_ratio(num, endo_count(id));
}

/// P[phi(C_n) is normal in C_n]. At n = 3 the even sign changes form a normal
/// Klein subgroup, which adds 6 maps, so n >= 5 is required.
inline Ratio prob_normal_image(unsigned n) {
  detail::require_generic_C(n, "prob_normal_image");
  if (n < 5) throw std::domain_error("prob_normal_image: needs n >= 5");
  return make_ratio(pow2(n + 1) * factorial(n) + 4, endo_count(GroupId::C(n)));
}

/// P[|phi(C_n)| < n!] = 2^n n! b_n / H(C_n).
inline Ratio prob_small_image(unsigned n) {
  detail::require_generic_C(n, "prob_small_image");
  return Ratio(pow2(n) * factorial(n)) * seq_b(n) / Ratio(endo_count(GroupId::C(n)));
}

// ---------------------------------------------------------------------------
// Convergence tables.

enum class Sequence {
  endo_ratio_C,       // H(C_n) / (2^{n+2} n!) -> 1
  small_image_C,      // P[X_n < n!] -> 0
  seq_a,              // a_n -> 0
  seq_b,              // b_n -> 0
  prob_aut_C,         // -> 1/2 (n even), 1/4 (n odd)
  prob_centre_C,      // -> 1/2
  prob_flip_kernel,   // -> 1/4
  prob_transposition_kernel,  // -> 0
  prob_normal_image,  // -> 1/2
  expected_ratio_C,   // E[X] / (2^{n-1} n!) (n even), / (3 2^{n-3} n!) (n odd) -> 1
  expected_ratio_D,   // E[X] / (2^{n-2} n!) -> 1
  expected_ratio_A,   // E[X] / (n+1)! -> 1
};

struct AsymptoticRow {
  unsigned n = 0;
  Ratio exact;
  double value = 0;
  double limit = 0;
};

inline std::string sequence_name(Sequence s) {
  switch (s) {
    case Sequence::endo_ratio_C: return "endo_ratio_C";
    case Sequence::small_image_C: return "small_image_C";
    case Sequence::seq_a: return "a_n";
    case Sequence::seq_b: return "b_n";
    case Sequence::prob_aut_C: return "prob_aut_C";
    case Sequence::prob_centre_C: return "prob_centre_C";
    case Sequence::prob_flip_kernel: return "prob_flip_kernel";
    case Sequence::prob_transposition_kernel: return "prob_transposition_kernel";
    case Sequence::prob_normal_image: return "prob_normal_image";
    case Sequence::expected_ratio_C: return "expected_ratio_C";
    case Sequence::expected_ratio_D: return "expected_ratio_D";
    case Sequence::expected_ratio_A: return "expected_ratio_A";
  }
  return "?";
}

/// Reference value the sequence tends to at this n (parity-dependent where applicable).
inline double sequence_limit(Sequence s, unsigned n) {
  switch (s) {
    case Sequence::small_image_C:
    case Sequence::seq_a:
    case Sequence::seq_b:
    case Sequence::prob_transposition_kernel: return 0.0;
    case Sequence::prob_aut_C: return n % 2 == 0 ? 0.5 : 0.25;
    case Sequence::prob_centre_C:
    case Sequence::prob_normal_image: return 0.5;
    case Sequence::prob_flip_kernel: return 0.25;
    default: return 1.0;
  }
}

/// Theorem asymptote for E[X]: 2^{n-1} n! (C, n even), 3 2^{n-3} n! (C, n odd), 2^{n-2} n! (D), (n+1)! (A).
inline Ratio expected_asymptote(const GroupId& id) {
  const unsigned n = id.param();
  switch (id.family()) {
    case Family::C:
      return n % 2 == 0 ? Ratio(pow2(n - 1) * factorial(n)) : Ratio(3 * pow2(n) * factorial(n)) / 8;
    case Family::D: return Ratio(pow2(n - 2) * factorial(n));
    case Family::A: return Ratio(factorial(n + 1));
    default: throw std::domain_error("expected_asymptote is defined for A_n, C_n and D_n");
  }
}

/// sigma asymptote squared: (2^{n-1} n!)^2 (C even), 11 (2^{n-3} n!)^2 (C odd), (2^{n-2} n!)^2 (D).
inline Ratio variance_asymptote(const GroupId& id) {
  const unsigned n = id.param();
  switch (id.family()) {
    case Family::C:
      if (n % 2 == 0) {
        const CountInt s = pow2(n - 1) * factorial(n);
        return Ratio(s * s);
      } else {
        const CountInt s = pow2(n) * factorial(n);
        return Ratio(11 * s * s) / 64;
      }
    case Family::D: {
      const CountInt s = pow2(n - 2) * factorial(n);
      return Ratio(s * s);
    }
    default: throw std::domain_error("variance_asymptote is defined for C_n and D_n");
  }
}

inline Ratio sequence_value(Sequence s, unsigned n) {
  switch (s) {
    case Sequence::endo_ratio_C:
      return make_ratio(endo_count(GroupId::C(n)), pow2(n + 2) * factorial(n));
    case Sequence::small_image_C: return prob_small_image(n);
    case Sequence::seq_a: return seq_a(n);
    case Sequence::seq_b: return seq_b(n);
    case Sequence::prob_aut_C: return prob_automorphism(GroupId::C(n));
    case Sequence::prob_centre_C: return prob_centre_in_kernel(GroupId::C(n));
    case Sequence::prob_flip_kernel: return prob_reflection_in_kernel(n, ReflectionClass::coordinate_flip);
    case Sequence::prob_transposition_kernel: return prob_reflection_in_kernel(n, ReflectionClass::transposition);
    case Sequence::prob_normal_image: return prob_normal_image(n);
    case Sequence::expected_ratio_C:
      return expected_image_order(GroupId::C(n)) / expected_asymptote(GroupId::C(n));
    case Sequence::expected_ratio_D:
      return expected_image_order(GroupId::D(n)) / expected_asymptote(GroupId::D(n));
    case Sequence::expected_ratio_A:
      return expected_image_order(GroupId::A(n)) / expected_asymptote(GroupId::A(n));
  }
  throw std::logic_error("unreachable");
}

inline std::vector<AsymptoticRow> asymptotic_report(Sequence s, unsigned n_lo, unsigned n_hi) {
  if (n_lo > n_hi) throw std::invalid_argument("asymptotic_report: empty range");
  std::vector<AsymptoticRow> rows;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    Ratio v = sequence_value(s, n);
    const double f = to_double(v);
    rows.push_back({n, std::move(v), f, sequence_limit(s, n)});
  }
  return rows;
}

}  // namespace reflendo
