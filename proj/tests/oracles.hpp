#pragma once

// Independent brute-force oracles used to freeze expected values. These take
// the slow definitional route on purpose and must stay decoupled from the
// production algorithms they check.

#include <functional>
#include <set>
#include <vector>

#include "permchain/lattice.hpp"
#include "permchain/perm_group.hpp"

namespace permchain::oracles {

// Breadth-first closure of a generating set under composition.
std::set<Perm> bfs_closure(Point degree, const std::vector<Perm>& gens);

// Every subgroup as a sorted element set: closures of all subsets of at most
// two elements, then pairwise joins to a fixpoint.
std::set<std::vector<Perm>> all_subgroups(const PermGroup& g);

// Conjugacy classes of the subgroup sets above.
std::size_t count_conjugacy_classes(const PermGroup& g,
                                    const std::set<std::vector<Perm>>& subgroups);

// Exhaustive depth-first chain search from h up to the ambient group over
// edges accepted by `admissible` (no memoization).
bool chain_exists(const SubgroupLattice& lat, NodeId h,
                  const std::function<bool(const LatticeEdge&)>& admissible);

// Abnormality by scanning every pair h <= k < l with k maximal in l.
bool no_admissible_pair_above(const SubgroupLattice& lat, NodeId h,
                              const std::function<bool(const LatticeEdge&)>& admissible);

// The definitional route for the F-step criterion: build the coset image of
// l mod the core of k and test the formation on the image's own lattice.
bool edge_in_formation_via_coset_action(const SubgroupLattice& lat, const LatticeEdge& edge,
                                        bool supersoluble);

// G/n in U (or N) via an actual coset action and the image's lattice.
bool quotient_supersoluble_via_coset_action(const SubgroupLattice& lat, NodeId n);
bool quotient_nilpotent_via_coset_action(const SubgroupLattice& lat, NodeId n);

}  // namespace permchain::oracles
