#pragma once

// Coxeter matrices for every irreducible spherical type, plus direct sums for
// the reducible sources (Cyc(2) x Sym(k)) used by the subgroup census.

#include "reflendo/group_id.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflendo {

class CoxeterPresentation {
 public:
  CoxeterPresentation() = default;

  /// `orders` is a row-major g x g symmetric matrix with ones on the diagonal.
  CoxeterPresentation(std::string name, std::size_t generators, std::vector<unsigned> orders)
      : name_(std::move(name)), g_(generators), m_(std::move(orders)) {
    if (m_.size() != g_ * g_) throw std::invalid_argument("Coxeter matrix has wrong size");
    for (std::size_t i = 0; i < g_; ++i) {
      if (m_[i * g_ + i] != 1) throw std::invalid_argument("Coxeter matrix needs m_ii = 1");
      for (std::size_t j = 0; j < g_; ++j) {
        if (i == j) continue;
        if (m_[i * g_ + j] != m_[j * g_ + i]) throw std::invalid_argument("Coxeter matrix not symmetric");
        if (m_[i * g_ + j] < 2) throw std::invalid_argument("Coxeter matrix needs m_ij >= 2");
      }
    }
  }

  /// All off-diagonal orders default to 2 (commuting generators).
  static CoxeterPresentation commuting(std::string name, std::size_t generators) {
    std::vector<unsigned> m(generators * generators, 2);
    for (std::size_t i = 0; i < generators; ++i) m[i * generators + i] = 1;
    return {std::move(name), generators, std::move(m)};
  }

  const std::string& name() const { return name_; }
  std::size_t generator_count() const { return g_; }
  unsigned order(std::size_t i, std::size_t j) const { return m_.at(i * g_ + j); }

  CoxeterPresentation with_edge(std::size_t i, std::size_t j, unsigned m) const {
    auto copy = m_;
    copy.at(i * g_ + j) = m;
    copy.at(j * g_ + i) = m;
    return {name_, g_, std::move(copy)};
  }

 private:
  std::string name_;
  std::size_t g_ = 0;
  std::vector<unsigned> m_;
};

inline CoxeterPresentation direct_sum(const CoxeterPresentation& p, const CoxeterPresentation& q) {
  const std::size_t g = p.generator_count() + q.generator_count();
  auto sum = CoxeterPresentation::commuting(p.name() + "x" + q.name(), g);
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    for (std::size_t j = i + 1; j < p.generator_count(); ++j) sum = sum.with_edge(i, j, p.order(i, j));
  const std::size_t off = p.generator_count();
  for (std::size_t i = 0; i < q.generator_count(); ++i)
    for (std::size_t j = i + 1; j < q.generator_count(); ++j)
      sum = sum.with_edge(off + i, off + j, q.order(i, j));
  return sum;
}

namespace detail {

inline CoxeterPresentation path(std::string name, std::size_t g) {
  auto p = CoxeterPresentation::commuting(std::move(name), g);
  for (std::size_t i = 0; i + 1 < g; ++i) p = p.with_edge(i, i + 1, 3);
  return p;
}

// E_n in Bourbaki numbering (0-based): 0-2-3-4-...-(n-1) with 1 attached to 3.
inline CoxeterPresentation e_series(std::string name, std::size_t n) {
  auto p = CoxeterPresentation::commuting(std::move(name), n);
  p = p.with_edge(0, 2, 3).with_edge(1, 3, 3);
  for (std::size_t i = 2; i + 1 < n; ++i) p = p.with_edge(i, i + 1, 3);
  return p;
}

}  // namespace detail

/// Generator order matches coxeter_generators():
///   C_n: r_1, r_{+1,1,2}, ..., r_{+1,n-1,n}
///   D_n: r_{-1,1,2}, r_{+1,1,2}, ..., r_{+1,n-1,n}
///   A_n: adjacent transpositions (1 2), ..., (n n+1)
///   I_2(m): s, rs
inline CoxeterPresentation presentation(const GroupId& id) {
  const std::string name = to_spec(id);
  const std::size_t n = id.param();
  switch (id.family()) {
    case Family::A: return detail::path(name, n);
    case Family::C: return detail::path(name, n).with_edge(0, 1, 4);
    case Family::D: {
      auto p = detail::path(name, n).with_edge(0, 1, 2);
      return p.with_edge(0, 2, 3);
    }
    case Family::I2: return CoxeterPresentation::commuting(name, 2).with_edge(0, 1, id.param());
    case Family::H3: return detail::path(name, 3).with_edge(0, 1, 5);
    case Family::H4: return detail::path(name, 4).with_edge(0, 1, 5);
    case Family::F4: return detail::path(name, 4).with_edge(1, 2, 4);
    case Family::E6: return detail::e_series(name, 6);
    case Family::E7: return detail::e_series(name, 7);
    case Family::E8: return detail::e_series(name, 8);
  }
  throw std::logic_error("unhandled family");
}

}  // namespace reflendo
