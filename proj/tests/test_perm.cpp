#include <doctest.h>

#include <random>

#include "permchain/errors.hpp"
#include "permchain/perm.hpp"

using namespace permchain;

namespace {

Perm random_perm(Point degree, std::mt19937& rng) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("cycle parsing matches direct readings") {
  CHECK(Perm::parse_cycles("(1 2 3)", 4).images() == std::vector<Point>{1, 2, 0, 3});
  CHECK(Perm::parse_cycles("()", 5) == Perm(5));
  CHECK(Perm::parse_cycles("(1 2)(3 4)", 4).images() == std::vector<Point>{1, 0, 3, 2});
  CHECK(Perm::parse_cycles("(1,2,3)", 3) == Perm::parse_cycles("(1 2 3)", 3));
}

TEST_CASE("cycle parsing rejects malformed input") {
  CHECK_THROWS_AS(Perm::parse_cycles("(1 2", 4), invalid_input);
  CHECK_THROWS_AS(Perm::parse_cycles("(0 1)", 4), invalid_input);
  CHECK_THROWS_AS(Perm::parse_cycles("(1 5)", 4), invalid_input);
  CHECK_THROWS_AS(Perm::parse_cycles("(1 2 1)", 4), invalid_input);
  CHECK_THROWS_AS(Perm::parse_cycles("(1 2)(2 3)", 4), invalid_input);
  CHECK_THROWS_AS(Perm::parse_cycles("", 4), invalid_input);
  CHECK_THROWS_AS(Perm::parse_cycles("1 2 3", 4), invalid_input);
}

TEST_CASE("products apply left to right") {
  Perm a = Perm::parse_cycles("(1 2 3)", 5);
  Perm b = Perm::parse_cycles("(1 2)(4 5)", 5);
  Perm ab = a * b;
  // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2
  CHECK(ab == Perm::parse_cycles("(2 3)(4 5)", 5));
}

TEST_CASE("group axioms hold on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Perm a = random_perm(8, rng), b = random_perm(8, rng), c = random_perm(8, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == Perm(8));
    CHECK(a.inverse() * a == Perm(8));
    CHECK(a * Perm(8) == a);
  }
}

TEST_CASE("cycle round trip and order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Perm p = random_perm(9, rng);
    CHECK(Perm::parse_cycles(p.cycle_string(), 9) == p);
  }
  CHECK(Perm::parse_cycles("(1 2 3)(4 5)", 6).order() == 6);
  CHECK(Perm(4).order() == 1);
  CHECK(Perm(0).is_identity());
}
