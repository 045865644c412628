#pragma once

// Exact 3x3 orthogonal matrices over Z[phi]/2, phi = (1 + sqrt 5)/2, used as the
// concrete representation of the icosahedral reflection group H_3.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>

namespace reflendo {

/// The number (a + b*phi) / 2.
struct GoldenHalf {
  long a = 0;
  long b = 0;

  auto operator<=>(const GoldenHalf&) const = default;
  bool operator==(const GoldenHalf&) const = default;

  GoldenHalf operator+(const GoldenHalf& o) const { return {a + o.a, b + o.b}; }
  GoldenHalf operator-(const GoldenHalf& o) const { return {a - o.a, b - o.b}; }
  GoldenHalf operator-() const { return {-a, -b}; }
};

namespace detail {

// (a + b phi)(c + d phi) with phi^2 = phi + 1; result carries denominator 4.
struct GoldenQuarter {
  long a = 0;
  long b = 0;
};

inline GoldenQuarter mul_quarter(const GoldenHalf& x, const GoldenHalf& y) {
  return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}

inline GoldenHalf halve(const GoldenQuarter& q) {
  if (q.a % 2 != 0 || q.b % 2 != 0) throw std::logic_error("value left Z[phi]/2");
  return {q.a / 2, q.b / 2};
}

}  // namespace detail

class GoldenMatrix {
 public:
  using Storage = std::array<GoldenHalf, 9>;

  GoldenMatrix() = default;
  explicit GoldenMatrix(const Storage& entries) : m_(entries) {}

  static GoldenMatrix identity() {
    GoldenMatrix g;
    for (std::size_t i = 0; i < 3; ++i) g.m_[i * 3 + i] = {2, 0};
    return g;
  }

  /// Reflection I - 2 v v^T in a unit root v with coordinates in Z[phi]/2.
  static GoldenMatrix reflection(const std::array<GoldenHalf, 3>& root) {
    GoldenMatrix g = identity();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const auto q = detail::mul_quarter(root[i], root[j]);
        // 2 v_i v_j = (q.a + q.b phi) / 2
        g.m_[i * 3 + j] = g.m_[i * 3 + j] - GoldenHalf{q.a, q.b};
      }
    }
    return g;
  }

  const GoldenHalf& at(std::size_t row, std::size_t col) const { return m_.at(row * 3 + col); }
  const Storage& entries() const { return m_; }

  bool is_identity() const { return *this == identity(); }

  // Orthogonal, so the inverse is the transpose.
  GoldenMatrix inverse() const {
    GoldenMatrix t;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) t.m_[i * 3 + j] = m_[j * 3 + i];
    return t;
  }

  auto operator<=>(const GoldenMatrix&) const = default;
  bool operator==(const GoldenMatrix&) const = default;

  friend GoldenMatrix multiply(const GoldenMatrix& x, const GoldenMatrix& y) {
    GoldenMatrix r;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        detail::GoldenQuarter acc;
        for (std::size_t k = 0; k < 3; ++k) {
          const auto q = detail::mul_quarter(x.m_[i * 3 + k], y.m_[k * 3 + j]);
          acc.a += q.a;
          acc.b += q.b;
        }
        r.m_[i * 3 + j] = detail::halve(acc);
      }
    }
    return r;
  }

 private:
  Storage m_{};
};

/// a then b, acting on column vectors: x -> B (A x).
inline GoldenMatrix compose(const GoldenMatrix& a, const GoldenMatrix& b) { return multiply(b, a); }

inline GoldenMatrix identity_like(const GoldenMatrix&) { return GoldenMatrix::identity(); }

/// Simple reflections of H_3 with Coxeter matrix [[1,5,2],[5,1,3],[2,3,1]].
inline std::array<GoldenMatrix, 3> h3_simple_reflections() {
  // Roots (1,0,0), (-phi/2, (1-phi)/2, 1/2), (0,0,-1).
  return {GoldenMatrix::reflection({GoldenHalf{2, 0}, GoldenHalf{0, 0}, GoldenHalf{0, 0}}),
          GoldenMatrix::reflection({GoldenHalf{0, -1}, GoldenHalf{1, -1}, GoldenHalf{1, 0}}),
          GoldenMatrix::reflection({GoldenHalf{0, 0}, GoldenHalf{0, 0}, GoldenHalf{-2, 0}})};
}

}  // namespace reflendo

template <>
struct std::hash<reflendo::GoldenMatrix> {
  std::size_t operator()(const reflendo::GoldenMatrix& g) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& e : g.entries()) {
      h ^= static_cast<std::size_t>(e.a * 31 + e.b);
      h *= 1099511628211ULL;
    }
    return h;
  }
};
