#pragma once

#include <cstdint>
#include <optional>

#include "permchain/formations.hpp"
#include "permchain/lattice.hpp"

namespace permchain {

// Admissibility criterion for one maximal-inclusion step K < L of a chain:
// prime index, or quotient by the core of K in L lying in the formation.
enum class ChainCriterion { prime_index, core_quotient_supersoluble, core_quotient_nilpotent };

struct ChainEdgeSet {
  const SubgroupLattice* lat = nullptr;
  ChainCriterion criterion{};
  std::vector<char> admissible;   // per lattice edge
  std::vector<char> reachable;    // per node: admissible path up to the ambient group
  Bitset sources;                 // nodes K with at least one admissible edge (K, L)
};

ChainEdgeSet make_edge_set(const SubgroupLattice& lat, ChainCriterion crit);

// True iff a chain of admissible maximal steps joins h to the ambient group.
// h equal to the ambient group counts as subnormal (length-0 chain); statuses
// flag that case separately.
bool is_chain_subnormal(const ChainEdgeSet& edges, NodeId h);
// True iff no admissible step (K, L) exists with h <= K. Rejects the ambient
// group itself.
bool is_chain_abnormal(const ChainEdgeSet& edges, NodeId h);
// First admissible edge (K, L) with h <= K, if any: the witness refuting
// abnormality.
std::optional<std::uint32_t> admissible_edge_above(const ChainEdgeSet& edges, NodeId h);

// Relative forms used by the lemma suite. The step criterion is intrinsic to
// the pair (K, L), so chains inside a subgroup or through an interval reuse
// the same admissible edge set.
bool subnormal_below(const ChainEdgeSet& edges, NodeId h, NodeId top);      // chain h -> top inside top
bool subnormal_above(const ChainEdgeSet& edges, NodeId h, NodeId bottom);   // chain through nodes >= bottom

enum class ChainStatus { subnormal, abnormal, neither, whole_group };

struct SubgroupStatus {
  ChainStatus p = ChainStatus::neither;
  ChainStatus u = ChainStatus::neither;
  ChainStatus n = ChainStatus::neither;
  // For a NEITHER verdict: the admissible edge above h that kills
  // abnormality (chain exhaustion is certified by the reachability pass).
  std::int64_t p_witness_edge = -1, u_witness_edge = -1, n_witness_edge = -1;
};

struct StatusTable {
  ChainEdgeSet prime, super, nilp;
  std::vector<SubgroupStatus> status;
};

// Classifies every node under all three criteria. Statuses are constant on
// conjugacy classes; that invariant is verified here.
StatusTable status_all(const SubgroupLattice& lat);

// Supersoluble subgroup with no prime-index pair above it.
bool is_gaschutz(const SubgroupLattice& lat, const ChainEdgeSet& prime_edges, NodeId h);
// Nilpotent and self-normalizing.
bool is_carter(const SubgroupLattice& lat, NodeId h);

}  // namespace permchain
