#pragma once

// Closed-form endomorphism and homomorphism counts for irreducible spherical
// reflection groups, in exact arithmetic.
//
// Generic formulas hold for A_n (n != 3, 5), C_n and D_n (n != 4, 6) and all I_2(m).
// The remaining groups are served from the published constant tables below.

#include "reflendo/bigint.hpp"
#include "reflendo/group_id.hpp"
#include "reflendo/table_row.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflendo {

inline bool is_odd_prime(unsigned p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

inline unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned x = m;
  for (unsigned p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

// ---------------------------------------------------------------------------
// Exceptional endomorphism tables (computer-algebra constants).

/// True for the exceptional families and for A_3, A_5, C_4, C_6, D_4, D_6.
inline bool uses_constant_table(const GroupId& id) {
  const unsigned n = id.param();
  switch (id.family()) {
    case Family::A: return n == 3 || n == 5;
    case Family::C: return n == 4 || n == 6;
    case Family::D: return n == 4 || n == 6;
    case Family::I2: return false;
    default: return true;
  }
}

namespace detail {

inline EndoTableRow row(const char* kernel, unsigned long long index, const char* quotient, unsigned long long z,
                        std::optional<unsigned long long> aut, unsigned long long e) {
  return {kernel, CountInt(index), quotient, CountInt(z),
          aut ? std::optional<CountInt>(CountInt(*aut)) : std::nullopt, CountInt(e)};
}

}  // namespace detail

/// Rows sorted by kernel index. The C_6 kernel indices of {±1} and {1} are the
/// group-theoretic values 23040 and 46080.
inline std::vector<EndoTableRow> exceptional_constants(const GroupId& id) {
  using detail::row;
  if (!uses_constant_table(id)) throw std::invalid_argument(display_name(id) + " has no constant table");
  switch (id.family()) {
    case Family::H3:
      return {row("H_3", 1, "{1}", 1, 1, 1), row("H_3^+", 2, "Cyc(2)", 31, 1, 31),
              row("Z(H_3)", 60, "Alt(5)", 1, 120, 120), row("{1}", 120, "H_3", 1, 120, 120)};
    case Family::H4:
      return {row("H_4", 1, "{1}", 1, 1, 1), row("H_4^+", 2, "Cyc(2)", 571, 1, 571),
              row("Z(H_4)", 7200, "Inn(H_4)", 0, 14400, 0), row("{1}", 14400, "H_4", 1, 28800, 28800)};
    case Family::F4:
      return {row("F_4", 1, "{1}", 1, 1, 1),
              row("F_4^+", 2, "Cyc(2)", 139, 1, 139),
              row("+F_4", 2, "Cyc(2)", 139, 1, 139),
              row("(F_4)_+", 2, "Cyc(2)", 139, 1, 139),
              row("+(F_4)_+", 4, "Cyc(2)^2", 597, 6, 3582),
              row("(F_4)_1", 6, "Sym(3)", 352, 6, 2112),
              row("(F_4)_2", 6, "Sym(3)", 352, 6, 2112),
              row("(F_4)_1^+", 12, "Cyc(2)×Sym(3)", 560, 12, 6720),
              row("(F_4)_2^+", 12, "Cyc(2)×Sym(3)", 560, 12, 6720),
              row("N", 36, "Sym(3)^2", 64, 72, 4608),
              row("{±1}", 576, "Inn(F_4)", 0, 1152, 0),
              row("{1}", 1152, "F_4", 1, 4608, 4608)};
    case Family::E6:
      return {row("E_6", 1, "{1}", 1, 1, 1), row("E_6^+", 2, "Cyc(2)", 891, 1, 891),
              row("{1}", 51840, "E_6", 1, 51840, 51840)};
    case Family::E7:
      return {row("E_7", 1, "{1}", 1, 1, 1), row("E_7^+", 2, "Cyc(2)", 10207, 1, 10207),
              row("Z(E_7)", 1451520, "Inn(E_7)", 1, 1451520, 1451520),
              row("{1}", 2903040, "E_7", 1, 1451520, 1451520)};
    case Family::E8:
      return {row("E_8", 1, "{1}", 1, 1, 1), row("E_8^+", 2, "Cyc(2)", 199951, 1, 199951),
              row("{±1}", 348364800, "Inn(E_8)", 0, std::nullopt, 0),
              row("{1}", 696729600, "E_8", 1, 696729600, 696729600)};
    case Family::A:
      if (id.param() == 3)
        return {row("A_3", 1, "{1}", 1, 1, 1), row("A_3^+", 2, "Cyc(2)", 9, 1, 9),
                row("V_4", 6, "Sym(3)", 4, 6, 24), row("{1}", 24, "A_3", 1, 24, 24)};
      return {row("A_5", 1, "{1}", 1, 1, 1), row("A_5^+", 2, "Cyc(2)", 75, 1, 75),
              row("{1}", 720, "A_5", 1, 1440, 1440)};
    case Family::C:
      if (id.param() == 4)
        return {row("C_4", 1, "{1}", 1, 1, 1),
                row("C_4^+", 2, "Cyc(2)", 75, 1, 75),
                row("(C_4)_1", 2, "Cyc(2)", 75, 1, 75),
                row("+C_4", 2, "Cyc(2)", 75, 1, 75),
                row("(C_4)_1^+", 4, "Cyc(2)^2", 277, 6, 1662),
                row("N⋊V_4", 6, "Sym(3)", 64, 6, 384),
                row("N^+⋊V_4", 12, "Cyc(2)×Sym(3)", 96, 12, 1152),
                row("N", 24, "Sym(4)", 32, 24, 768),
                row("N^+", 48, "Cyc(2)×Sym(4)", 32, 48, 1536),
                row("{±1}", 192, "C_4/{±1}", 0, 384, 0),
                row("{1}", 384, "C_4", 1, 768, 768)};
      return {row("C_6", 1, "{1}", 1, 1, 1),
              row("C_6^+", 2, "Cyc(2)", 1383, 1, 1383),
              row("(C_6)_1", 2, "Cyc(2)", 1383, 1, 1383),
              row("+C_6", 2, "Cyc(2)", 1383, 1, 1383),
              row("(C_6)_1^+", 4, "Cyc(2)^2", 32631, 6, 195786),
              row("N", 720, "Sym(6)", 64, 1440, 92160),
              row("N^+", 1440, "Cyc(2)×Sym(6)", 32, 2880, 92160),
              row("{±1}", 23040, "C_6/{±1}", 0, 23040, 0),
              row("{1}", 46080, "C_6", 1, 92160, 92160)};
    case Family::D:
      if (id.param() == 4)
        return {row("D_4", 1, "{1}", 1, 1, 1),
                row("D_4^+", 2, "Cyc(2)", 43, 1, 43),
                row("N⋊V_4", 6, "Sym(3)", 32, 6, 192),
                row("N", 24, "Sym(4)", 24, 24, 576),
                row("(D_4)_13", 24, "Sym(4)", 24, 24, 576),
                row("(D_4)_14", 24, "Sym(4)", 24, 24, 576),
                row("{±1}", 96, "D_4/{±1}", 0, 576, 0),
                row("{1}", 192, "D_4", 1, 1152, 1152)};
      return {row("D_6", 1, "{1}", 1, 1, 1), row("D_6^+", 2, "Cyc(2)", 751, 1, 751),
              row("N", 720, "Sym(6)", 64, 1440, 92160), row("{±1}", 11520, "D_6/{±1}", 0, 23040, 0),
              row("{1}", 23040, "D_6", 1, 46080, 46080)};
    case Family::I2: break;
  }
  throw std::logic_error("unreachable");
}

inline CountInt constant_total(const GroupId& id) {
  CountInt total = 0;
  for (const auto& r : exceptional_constants(id)) total += r.e;
  return total;
}

namespace detail {

inline std::optional<CountInt> constant_row_z(const GroupId& id, std::string_view kernel_label) {
  for (const auto& r : exceptional_constants(id))
    if (r.kernel_label == kernel_label) return r.z;
  return std::nullopt;
}

inline CountInt constant_aut(const GroupId& id) {
  const auto rows = exceptional_constants(id);
  return *rows.back().aut;  // the {1} row is last
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Involutions and commuting pairs.

namespace detail {

// Involutions in C_n (tau = 2, alpha = n mod 2), D_n (tau = 2, alpha = 0) or
// S_n = A_{n-1} (tau = 1, alpha = -floor(n/2)), with the k = floor(n/2) term split out.
inline CountInt involution_lemma(unsigned n, const CountInt& group_order, unsigned tau, int alpha) {
  const unsigned half = n / 2;
  Ratio total = -1;
  Ratio top = Ratio(factorial(n), factorial(half));
  if (alpha >= 0)
    top *= pow2(static_cast<unsigned>(alpha));
  else
    top /= pow2(static_cast<unsigned>(-alpha));
  total += top;
  for (unsigned k = 0; k + 1 <= half; ++k)
    total += Ratio(group_order, pow2(tau * k) * factorial(k) * factorial(n - 2 * k));
  return to_integer(total, "involution count");
}

}  // namespace detail

/// Number of elements of order exactly 2.
inline CountInt involution_count(const GroupId& id) {
  const unsigned n = id.param();
  switch (id.family()) {
    case Family::C: return detail::involution_lemma(n, order(id), 2, static_cast<int>(n % 2));
    case Family::D: return detail::involution_lemma(n, order(id), 2, 0);
    case Family::A: {
      const unsigned letters = n + 1;
      return detail::involution_lemma(letters, order(id), 1, -static_cast<int>(letters / 2));
    }
    case Family::I2: return CountInt(n % 2 == 0 ? n + 1 : n);
    default: {
      const auto rows = exceptional_constants(id);
      return rows.at(1).z;  // the first index-2 row
    }
  }
}

/// Ordered pairs (x, y) of commuting elements of C_n with x^2 = y^2 = 1.
inline CountInt commuting_pairs_leq2(unsigned n) {
  if (n < 1) throw std::invalid_argument("commuting_pairs_leq2 needs n >= 1");
  Ratio total = 0;
  const CountInt head = pow2(2 * n) * factorial(n);
  for (unsigned k = 0; 4 * k <= n; ++k) {
    for (unsigned l = 0; l + 2 * k <= n / 2; ++l) {
      total += Ratio(ipow(3, l) * head,
                     pow2(7 * k) * ipow(8, l) * factorial(k) * factorial(l) * factorial(n - 4 * k - 2 * l));
    }
  }
  return to_integer(total, "commuting pair count");
}

/// 2 + commuting_pairs_leq2(n) - 3 (V(C_n) + 1): six times the Klein subgroup count.
inline CountInt klein_numerator(unsigned n) {
  return 2 + commuting_pairs_leq2(n) - 3 * (involution_count(GroupId::C(n)) + 1);
}

/// Subgroups of C_n isomorphic to Cyc(2)^2.
inline CountInt klein_subgroup_count(unsigned n) {
  if (n < 2) throw std::invalid_argument("klein_subgroup_count needs n >= 2");
  const CountInt num = klein_numerator(n);
  if (num % 6 != 0) throw std::logic_error("Klein numerator not divisible by 6 at n = " + std::to_string(n));
  return num / 6;
}

// ---------------------------------------------------------------------------
// Subgroup counts.

/// Subgroups isomorphic to Sym(n) in C_n (n >= 3) or D_n (n >= 4).
inline CountInt symmetric_subgroup_count(const GroupId& id) {
  const unsigned n = id.param();
  if (id.family() == Family::C && n >= 3) {
    if (n == 4) return *detail::constant_row_z(id, "N");
    return pow2(n);
  }
  if (id.family() == Family::D) {
    if (n == 4) return *detail::constant_row_z(id, "N");
    return n % 2 == 1 ? pow2(n - 1) : pow2(n);
  }
  throw std::domain_error("symmetric_subgroup_count: needs C_n (n >= 3) or D_n");
}

/// Subgroups of C_n isomorphic to Cyc(2) x Sym(n).
inline CountInt c2_x_symmetric_subgroup_count(unsigned n) {
  if (n < 2) throw std::domain_error("c2_x_symmetric_subgroup_count needs n >= 2");
  if (n == 4) return *detail::constant_row_z(GroupId::C(4), "N^+");
  return pow2(n - 1);
}

/// Index-2 subgroups isomorphic to W/{±1}: C_n -> 2 (n odd) or 0 (n even); D_n (n even) -> 0.
inline CountInt index2_mod_centre_count(const GroupId& id) {
  const unsigned n = id.param();
  if (id.family() == Family::C && n >= 3) return n % 2 == 1 ? 2 : 0;
  if (id.family() == Family::D && n % 2 == 0) return 0;
  throw std::domain_error("index2_mod_centre_count: needs C_n (n >= 3) or D_n with n even");
}

inline CountInt aut_order(const GroupId& id) {
  const unsigned n = id.param();
  if (uses_constant_table(id)) return detail::constant_aut(id);
  switch (id.family()) {
    case Family::I2: return n == 2 ? CountInt(6) : CountInt(n) * euler_phi(n);
    case Family::A: return n == 1 ? CountInt(1) : factorial(n + 1);
    case Family::C:
      if (n == 2) return aut_order(GroupId::I2(4));
      return n % 2 == 0 ? pow2(n + 1) * factorial(n) : pow2(n) * factorial(n);
    case Family::D: return n % 2 == 0 ? pow2(n) * factorial(n) : pow2(n - 1) * factorial(n);
    default: break;
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Homomorphisms between groups.

/// |Hom(I_2(l), I_2(m))|.
inline CountInt hom_count_dihedral(unsigned l, unsigned m) {
  if (l < 2 || m < 2) throw std::domain_error("hom_count_dihedral needs l, m >= 2");
  const CountInt g = std::gcd(l, m);
  const CountInt mm = m;
  const bool le = l % 2 == 0;
  const bool me = m % 2 == 0;
  if (le && me) return 4 + 4 * mm + mm * g;
  if (le) return 1 + 2 * mm + mm * g;
  if (me) return 2 + mm * g;
  return 1 + mm * g;
}

namespace detail {

struct SymmetricLike {
  unsigned letters;    // n: C_n or S_n = A_{n-1}
  unsigned tau;        // 2 for C_n, 1 for S_n
  CountInt order;
};

inline SymmetricLike symmetric_like(const GroupId& target) {
  if (target.family() == Family::C) return {target.param(), 2, order(target)};
  if (target.family() == Family::A) return {target.param() + 1, 1, order(target)};
  throw std::domain_error("target must be C_n or A_{n-1}");
}

inline void require_odd_prime(unsigned p) {
  if (!is_odd_prime(p)) throw std::domain_error("p = " + std::to_string(p) + " is not an odd prime");
}

// Sum over k in [k_min, n/p] of the triple sum without the |W| prefactor.
inline Ratio dihedral_triple_sum(unsigned p, const SymmetricLike& w, unsigned k_min) {
  Ratio total = 0;
  const unsigned n = w.letters;
  for (unsigned k = k_min; k * p <= n; ++k) {
    for (unsigned l = 0; 2 * l <= k; ++l) {
      for (unsigned m = 0; 2 * m <= n - k * p; ++m) {
        total += Ratio(1, factorial(k - 2 * l) * factorial(l) * ipow(p, l) * pow2(w.tau * (l + m)) *
                              factorial(n - k * p - 2 * m) * factorial(m));
      }
    }
  }
  return total;
}

}  // namespace detail

/// |Hom(I_2(p), W)| for an odd prime p and W = C_n or A_{n-1} (= Sym(n)).
inline CountInt hom_count_I2p(unsigned p, const GroupId& target) {
  detail::require_odd_prime(p);
  const auto w = detail::symmetric_like(target);
  return to_integer(w.order * detail::dihedral_triple_sum(p, w, 0), "hom count");
}

/// Subgroups of `target` isomorphic to I_2(p) (dihedral of order 2p), p an odd prime.
/// Targets: C_n, A_{n-1}, or I_2(m).
inline CountInt dihedral_subgroup_count(unsigned p, const GroupId& target) {
  detail::require_odd_prime(p);
  if (target.family() == Family::I2) {
    const unsigned m = target.param();
    return m % p == 0 ? CountInt(m / p) : CountInt(0);
  }
  const auto w = detail::symmetric_like(target);
  if (p > w.letters) return 0;
  const Ratio z = Ratio(w.order, CountInt(p) * (p - 1)) * detail::dihedral_triple_sum(p, w, 1);
  return to_integer(z, "dihedral subgroup count");
}

// ---------------------------------------------------------------------------
// Auxiliary sequences: V(C_n) = -1 + 2^n n! a_n and H(C_n) = 2^n n! (4 + b_n).

inline Ratio seq_a(unsigned n) {
  Ratio total = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) total += Ratio(1, pow2(2 * k) * factorial(k) * factorial(n - 2 * k));
  return total;
}

inline Ratio seq_b(unsigned n) {
  Ratio total = 0;
  for (unsigned k = 0; 4 * k <= n; ++k) {
    for (unsigned l = 0; l + 2 * k <= n / 2; ++l) {
      total += Ratio(ipow(3, l) * pow2(n),
                     ipow(8, l) * pow2(7 * k) * factorial(k) * factorial(l) * factorial(n - 4 * k - 2 * l));
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// |End(W)|.

namespace detail {

inline CountInt endo_formula_C(unsigned n) {
  return to_integer(Ratio(pow2(n) * factorial(n)) * (4 + seq_b(n)), "H(C_n)");
}

// Exponent (1 + (-1)^n)/2 and n!/floor(n/2)! in the middle term.
inline CountInt endo_formula_D(unsigned n) {
  Ratio total = Ratio(pow2(n + (n % 2 == 0 ? 1 : 0)) * factorial(n));
  total += Ratio(factorial(n), factorial(n / 2));
  for (unsigned k = 0; k + 1 <= n / 2; ++k)
    total += Ratio(pow2(n - 1) * factorial(n), pow2(2 * k) * factorial(k) * factorial(n - 2 * k));
  return to_integer(total, "H(D_n)");
}

inline CountInt endo_formula_A(unsigned n) {
  const unsigned letters = n + 1;
  Ratio total = Ratio(factorial(letters));
  for (unsigned k = 0; 2 * k <= letters; ++k)
    total += Ratio(factorial(letters), pow2(k) * factorial(k) * factorial(letters - 2 * k));
  return to_integer(total, "H(A_n)");
}

}  // namespace detail

inline CountInt endo_count(const GroupId& id) {
  const unsigned n = id.param();
  if (uses_constant_table(id)) return constant_total(id);
  switch (id.family()) {
    case Family::I2: {
      const CountInt m = n;
      return n % 2 == 1 ? CountInt(m * m + 1) : CountInt((m + 2) * (m + 2));
    }
    case Family::A: return n == 1 ? CountInt(2) : detail::endo_formula_A(n);
    case Family::C: return n == 2 ? endo_count(GroupId::I2(4)) : detail::endo_formula_C(n);
    case Family::D: return detail::endo_formula_D(n);
    default: break;
  }
  throw std::logic_error("unreachable");
}

}  // namespace reflendo
