#include "permchain/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "permchain/errors.hpp"

namespace permchain {

Perm::Perm(Point degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point img : images_) {
    if (img >= images_.size() || seen[img])
      throw invalid_input("image list is not a bijection");
    seen[img] = true;
  }
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Point Perm::smallest_moved_point() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return degree();
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw domain_violation("degree mismatch in permutation product");
  std::vector<Point> img(a.degree());
  for (Point i = 0; i < a.degree(); ++i) img[i] = b.images_[a.images_[i]];
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this) * g; }

Perm commutator(const Perm& a, const Perm& b) { return a.inverse() * b.inverse() * a * b; }

std::uint64_t Perm::order() const {
  // lcm of cycle lengths
  std::uint64_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    Point p = start;
    do {
      seen[p] = true;
      p = images_[p];
      ++len;
    } while (p != start);
    result = std::lcm(result, len);
  }
  return result;
}

Perm Perm::parse_cycles(std::string_view text, Point degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw invalid_input("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw invalid_input("expected point or ')' in cycle");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree) throw invalid_input("point out of range in cycle");
        ++i;
      }
      if (value == 0 || value > degree) throw invalid_input("point out of range in cycle");
      Point p = static_cast<Point>(value - 1);
      if (used[p]) throw invalid_input("repeated point in cycle notation");
      used[p] = true;
      cycle.push_back(p);
      skip_ws();
    }
    if (i >= text.size()) throw invalid_input("unterminated cycle");
    ++i;  // ')'
    any_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  if (!any_cycle) throw invalid_input("empty cycle notation (use \"()\" for the identity)");
  return Perm(std::move(img));
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) {
      seen[start] = true;
      continue;
    }
    any = true;
    out << '(';
    Point p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (p + 1);
      first = false;
      seen[p] = true;
      p = images_[p];
    } while (p != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ull;
  for (Point img : p.images()) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace permchain
