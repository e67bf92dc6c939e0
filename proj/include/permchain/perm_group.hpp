#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "permchain/errors.hpp"
#include "permchain/perm.hpp"

namespace permchain {

// Deterministic Schreier-Sims stabilizer chain. Supports incremental
// generator insertion; order and membership are exact.
class StabChain {
public:
  explicit StabChain(Point degree) : degree_(degree) {}

  void extend(const Perm& g);
  bool contains(const Perm& g) const;
  std::uint64_t order() const;  // throws cap_exceeded past 2^63
  Point degree() const { return degree_; }
  std::size_t base_length() const { return levels_.size(); }

  // All elements in image-lex order; throws cap_exceeded when order > cap.
  std::vector<Perm> elements(std::uint64_t cap) const;

private:
  struct Level {
    Point base;
    // Strong generators whose first moved base point is this level's base;
    // the generating set of the stabilizer at level i is the union of the
    // gens of levels i and deeper.
    std::vector<Perm> gens;
    std::unordered_map<Point, Perm> transversal;  // point -> u with base^u = point
  };

  std::vector<const Perm*> gens_at(std::size_t lev) const;
  void rebuild_orbit(std::size_t lev);
  void place(Perm h, std::size_t lev);  // record a sifted residue
  // Re-establishes the chain condition at `lev`, assuming deeper levels hold.
  void verify_level(std::size_t lev);
  // Strips g through levels starting at `from`; returns residue and the level
  // at which sifting stopped.
  std::pair<Perm, std::size_t> sift(const Perm& g, std::size_t from) const;

  Point degree_;
  std::vector<Level> levels_;
};

// A finite permutation group given by generators, with a stabilizer chain
// built on construction. Immutable afterwards; all queries are const and
// safe for concurrent use.
class PermGroup {
public:
  explicit PermGroup(Point degree);  // trivial group
  PermGroup(Point degree, std::vector<Perm> generators);

  Point degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  bool trivial() const { return order_ == 1; }
  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& g) const;

  std::vector<Perm> elements(std::uint64_t cap = Caps{}.element_cap) const;

private:
  Point degree_;
  std::vector<Perm> gens_;
  StabChain chain_;
  std::uint64_t order_;
};

bool same_group(const PermGroup& a, const PermGroup& b);
bool is_normal_in(const PermGroup& n, const PermGroup& g);
std::uint64_t index(const PermGroup& g, const PermGroup& h);  // requires h <= g

PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       std::uint64_t element_cap = Caps{}.element_cap);
PermGroup join(const PermGroup& a, const PermGroup& b);
PermGroup derived_subgroup(const PermGroup& g);
// Smallest normal subgroup of g containing s; requires s within g.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& s);
PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     std::uint64_t element_cap = Caps{}.element_cap);
PermGroup centralizer(const PermGroup& g, const PermGroup& h,
                      std::uint64_t element_cap = Caps{}.element_cap);
// Intersection of all l-conjugates of k; requires k <= l.
PermGroup core(const PermGroup& l, const PermGroup& k,
               std::uint64_t element_cap = Caps{}.element_cap);

// Action of g on the right cosets of u <= g. The image is a permutation
// group on index(g, u) points; its kernel is the core of u in g.
struct CosetAction {
  PermGroup image;
  std::uint64_t kernel_order;
};
CosetAction coset_action(const PermGroup& g, const PermGroup& u, const Caps& caps = {});

// Coset image of g mod a normal subgroup n (isomorphic to g/n). Returns g
// itself when n is trivial.
PermGroup quotient(const PermGroup& g, const PermGroup& n, const Caps& caps = {});
// Image of l acting on cosets of k <= l; isomorphic to l / core_l(k).
PermGroup coset_quotient_by_core(const PermGroup& l, const PermGroup& k, const Caps& caps = {});

}  // namespace permchain
