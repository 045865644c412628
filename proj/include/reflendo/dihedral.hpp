#pragma once

// Elements of I_2(m) = <r, s | r^m = s^2 = (rs)^2 = 1>, written r^rot s^refl.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace reflendo {

class DihedralElt {
 public:
  DihedralElt(unsigned m, long rot, bool refl) : m_(m), refl_(refl) {
    if (m == 0) throw std::invalid_argument("dihedral modulus must be positive");
    const long mm = static_cast<long>(m);
    rot_ = static_cast<unsigned>(((rot % mm) + mm) % mm);
  }

  static DihedralElt identity(unsigned m) { return {m, 0, false}; }
  static DihedralElt rotation(unsigned m) { return {m, 1, false}; }
  static DihedralElt reflection(unsigned m) { return {m, 0, true}; }

  unsigned modulus() const { return m_; }
  unsigned rot() const { return rot_; }
  bool refl() const { return refl_; }
  bool is_identity() const { return rot_ == 0 && !refl_; }

  DihedralElt inverse() const {
    if (refl_) return *this;
    return {m_, -static_cast<long>(rot_), false};
  }

  auto operator<=>(const DihedralElt&) const = default;
  bool operator==(const DihedralElt&) const = default;

 private:
  unsigned m_;
  unsigned rot_ = 0;
  bool refl_ = false;
};

/// Group product in the abstract sense: (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f).
/// Read as "a then b" in the same word convention as SignedPerm.
inline DihedralElt compose(const DihedralElt& a, const DihedralElt& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("compose: modulus mismatch");
  const long rb = a.refl() ? -static_cast<long>(b.rot()) : static_cast<long>(b.rot());
  return {a.modulus(), static_cast<long>(a.rot()) + rb, a.refl() != b.refl()};
}

inline DihedralElt identity_like(const DihedralElt& w) { return DihedralElt::identity(w.modulus()); }

}  // namespace reflendo

template <>
struct std::hash<reflendo::DihedralElt> {
  std::size_t operator()(const reflendo::DihedralElt& w) const noexcept {
    return (static_cast<std::size_t>(w.modulus()) << 32) ^ (static_cast<std::size_t>(w.rot()) << 1) ^
           static_cast<std::size_t>(w.refl());
  }
};
