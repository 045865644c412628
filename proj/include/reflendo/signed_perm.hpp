#pragma once

// Elements of the hyperoctahedral group C_n (and its subgroups D_n, S_n).
//
// A SignedPerm sends the basis vector e_i to (-1)^flips[i] * e_{images[i]}.
// Coordinates are 0-based throughout.
//
// Composition convention, used by every module in this library:
//   compose(a, b) acts as "apply a first, then b".
// Words in generators are read the same way: g1 g2 ... gk applies g1 first.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace reflendo {

class SignedPerm {
 public:
  SignedPerm() = default;

  SignedPerm(std::vector<std::uint16_t> images, std::vector<std::uint8_t> flips)
      : images_(std::move(images)), flips_(std::move(flips)) {
    if (images_.size() != flips_.size()) throw std::invalid_argument("images/flips size mismatch");
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || seen[v]) throw std::invalid_argument("images is not a bijection");
      seen[v] = true;
    }
    for (auto& f : flips_) {
      if (f > 1) throw std::invalid_argument("flip bits must be 0 or 1");
    }
  }

  /// Like the constructor, but also enforces membership in D_n (even number of flips).
  static SignedPerm make_even(std::vector<std::uint16_t> images, std::vector<std::uint8_t> flips) {
    SignedPerm w(std::move(images), std::move(flips));
    if (w.flip_count() % 2 != 0) throw std::invalid_argument("odd number of sign flips: not in D_n");
    return w;
  }

  static SignedPerm identity(std::size_t n) {
    SignedPerm w;
    w.images_.resize(n);
    w.flips_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) w.images_[i] = static_cast<std::uint16_t>(i);
    return w;
  }

  /// r_i: negates coordinate i.
  static SignedPerm coordinate_flip(std::size_t n, std::size_t i) {
    SignedPerm w = identity(n);
    w.flips_.at(i) = 1;
    return w;
  }

  /// r_{+1,i,j} (root e_i - e_j) for sign = +1; r_{-1,i,j} (root e_i + e_j) for sign = -1.
  static SignedPerm pair_reflection(std::size_t n, int sign, std::size_t i, std::size_t j) {
    if (i == j || i >= n || j >= n) throw std::invalid_argument("pair_reflection needs distinct coordinates");
    SignedPerm w = identity(n);
    w.images_[i] = static_cast<std::uint16_t>(j);
    w.images_[j] = static_cast<std::uint16_t>(i);
    if (sign < 0) w.flips_[i] = w.flips_[j] = 1;
    return w;
  }

  /// z_0 = r_1 ... r_n, acting as -identity.
  static SignedPerm negation(std::size_t n) {
    SignedPerm w = identity(n);
    std::fill(w.flips_.begin(), w.flips_.end(), std::uint8_t{1});
    return w;
  }

  std::size_t rank() const { return images_.size(); }
  const std::vector<std::uint16_t>& images() const { return images_; }
  const std::vector<std::uint8_t>& flips() const { return flips_; }

  std::size_t flip_count() const {
    return static_cast<std::size_t>(std::count(flips_.begin(), flips_.end(), std::uint8_t{1}));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i || flips_[i] != 0) return false;
    }
    return true;
  }

  SignedPerm inverse() const {
    SignedPerm w;
    w.images_.resize(rank());
    w.flips_.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      w.images_[images_[i]] = static_cast<std::uint16_t>(i);
      w.flips_[images_[i]] = flips_[i];
    }
    return w;
  }

  // Lexicographic on (images, flips): the canonical element order.
  auto operator<=>(const SignedPerm&) const = default;
  bool operator==(const SignedPerm&) const = default;

  friend SignedPerm compose(const SignedPerm& a, const SignedPerm& b);

 private:
  std::vector<std::uint16_t> images_;
  std::vector<std::uint8_t> flips_;
};

/// a then b: e_i -> s_a(i) e_{a(i)} -> s_a(i) s_b(a(i)) e_{b(a(i))}.
inline SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("compose: rank mismatch");
  SignedPerm w;
  const std::size_t n = a.rank();
  w.images_.resize(n);
  w.flips_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto mid = a.images_[i];
    w.images_[i] = b.images_[mid];
    w.flips_[i] = static_cast<std::uint8_t>(a.flips_[i] ^ b.flips_[mid]);
  }
  return w;
}

inline SignedPerm identity_like(const SignedPerm& w) { return SignedPerm::identity(w.rank()); }

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < w.rank(); ++i) {
      h ^= static_cast<std::size_t>(w.images()[i]) * 2U + w.flips()[i];
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace reflendo

template <>
struct std::hash<reflendo::SignedPerm> : reflendo::SignedPermHash {};
