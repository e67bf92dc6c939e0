#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace permchain {

using Point = std::uint32_t;

// A permutation of {0, ..., degree-1} stored in image form.
// Cycle-notation I/O is 1-based; products apply left to right, so
// (a * b)(x) == b(a(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(Point degree);  // identity
  explicit Perm(std::vector<Point> images);

  // Parses "(1 2 3)(4 5)" style text. Points are 1-based, separated by
  // whitespace or commas; "()" is the identity. Cycles must be pairwise
  // disjoint; points must lie in 1..degree.
  static Perm parse_cycles(std::string_view text, Point degree);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  // Degree if the permutation is the identity.
  Point smallest_moved_point() const;

  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;  // g^-1 * (*this) * g
  std::uint64_t order() const;

  std::string cycle_string() const;  // canonical disjoint-cycle form

  friend Perm operator*(const Perm& a, const Perm& b);
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<Point> images_;
};

Perm commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace permchain
