#pragma once

#include "permchain/lattice.hpp"

namespace permchain {

enum class FormationTag { nilpotent, supersoluble };

// Predicates on standalone permutation groups.
bool is_abelian(const PermGroup& g);
bool is_p_group(const PermGroup& g, std::uint64_t p);
bool is_soluble(const PermGroup& g);

// Predicates on the ambient group of a lattice.
bool is_nilpotent(const SubgroupLattice& lat);               // every Sylow normal
bool is_nilpotent_via_maximals(const SubgroupLattice& lat);  // cross-check route
bool is_supersoluble(const SubgroupLattice& lat);            // chief factors + Huppert check
bool is_supersoluble_via_chief(const SubgroupLattice& lat);
bool is_supersoluble_via_huppert(const SubgroupLattice& lat);

// Predicates on lattice nodes (subgroups of the ambient group).
bool node_abelian(const SubgroupLattice& lat, NodeId h);
bool node_nilpotent(const SubgroupLattice& lat, NodeId h);
bool node_supersoluble(const SubgroupLattice& lat, NodeId h);  // Huppert on the node
bool node_in_formation(const SubgroupLattice& lat, NodeId h, FormationTag f);

// Formation tests on quotients without constructing coset actions:
// chief factors of the ambient group above n decide G/n, and the interval
// [n, e] decides e/n for n normal in e.
bool quotient_in_formation(const SubgroupLattice& lat, NodeId n, FormationTag f);
bool interval_quotient_supersoluble(const SubgroupLattice& lat, NodeId e, NodeId n);
bool interval_quotient_nilpotent(const SubgroupLattice& lat, NodeId e, NodeId n);
bool interval_quotient_abelian(const SubgroupLattice& lat, NodeId e, NodeId n);

// The formation residual G^F: intersection of all normal subgroups with
// quotient in F. Postconditions (quotient of the result lies in F, result
// below every qualifying normal subgroup) are asserted.
NodeId residual(const SubgroupLattice& lat, FormationTag f);
// Smallest normal subgroup containing `above` whose quotient lies in F;
// computes the residual of G/above through the lattice correspondence.
NodeId residual_over(const SubgroupLattice& lat, FormationTag f, NodeId above);

bool is_miller_moreno(const SubgroupLattice& lat, NodeId h);
bool is_critical(const SubgroupLattice& lat, FormationTag f);  // on the ambient group
bool is_schmidt(const SubgroupLattice& lat);

// A minimal normal subgroup R is U-central (R x| G/C_G(R) supersoluble)
// exactly when |R| is prime: for prime order the automizer embeds in a
// cyclic group of order p-1, and for composite order R itself is a
// non-prime chief factor of the semidirect product.
bool is_U_central(const SubgroupLattice& lat, NodeId minimal_normal);

}  // namespace permchain
