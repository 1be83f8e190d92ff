#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qtop {

/// Integer lattice vector. For tori the coordinates are in the standard
/// lattice basis, for type A in the fundamental-weight basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, 0) {}
  Weight(std::initializer_list<std::int64_t> coords) : c_(coords) {}
  explicit Weight(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}

  std::size_t rank() const noexcept { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return c_; }

  bool is_zero() const noexcept {
    for (auto v : c_)
      if (v != 0) return false;
    return true;
  }

  /// Largest absolute coordinate.
  std::int64_t sup_norm() const noexcept {
    std::int64_t m = 0;
    for (auto v : c_) m = std::max(m, v < 0 ? -v : v);
    return m;
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(std::int64_t k) {
    for (auto& v : c_) v *= k;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> c_;
};

/// Coordinate pairing of a weight with a cocharacter-direction vector.
inline std::int64_t pair(const Weight& w, const Weight& xi) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.rank(); ++i) s += w[i] * xi[i];
  return s;
}

/// True iff the first nonzero coordinate is positive.
inline bool lex_positive(const Weight& w) {
  for (auto v : w.coords())
    if (v != 0) return v > 0;
  return false;
}

}  // namespace qtop
