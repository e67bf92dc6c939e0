#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "permchain/bitset.hpp"
#include "permchain/group_table.hpp"

namespace permchain {

using NodeId = std::uint32_t;

struct LatticeEdge {
  NodeId sub;            // maximal in super
  NodeId super;
  std::uint64_t index;   // |super : sub|
};

struct ChiefSeries {
  std::vector<NodeId> terms;  // ascending, trivial first, ambient last
  std::vector<std::uint64_t> factor_orders;
  std::vector<bool> factor_cyclic;
};

// Every subgroup of a small group, grouped into conjugacy classes, with the
// Hasse diagram of maximal inclusions. Node ids are assigned by sorting all
// subgroups by (order, member list), so they are stable across runs.
class SubgroupLattice {
public:
  static SubgroupLattice build(const PermGroup& g, const Caps& caps = {});

  const GroupTable& table() const { return *table_; }
  std::uint32_t node_count() const { return static_cast<std::uint32_t>(nodes_.size()); }
  NodeId trivial_node() const { return 0; }
  NodeId full_node() const { return full_; }

  const std::vector<ElemId>& members(NodeId n) const { return nodes_[n].members; }
  std::span<const ElemId> gens(NodeId n) const { return nodes_[n].gens; }
  std::uint64_t node_order(NodeId n) const { return nodes_[n].members.size(); }
  bool node_has_element(NodeId n, ElemId x) const { return nodes_[n].mask.test(x); }
  // a <= b as subgroups
  bool node_subset(NodeId a, NodeId b) const { return a == b || up_[a].test(b); }
  NodeId node_of_members(const std::vector<ElemId>& members) const;

  std::uint32_t class_of(NodeId n) const { return nodes_[n].cls; }
  const std::vector<std::vector<NodeId>>& classes() const { return classes_; }

  const std::vector<LatticeEdge>& edges() const { return edges_; }
  std::span<const std::uint32_t> edges_into(NodeId super) const { return edges_into_[super]; }
  std::span<const std::uint32_t> edges_from(NodeId sub) const { return edges_from_[sub]; }
  const Bitset& up_set(NodeId n) const { return up_[n]; }      // nodes strictly above
  const Bitset& down_set(NodeId n) const { return down_[n]; }  // nodes strictly below

  // Structural subgroups of the ambient group.
  std::vector<NodeId> maximal_subgroups() const;
  const std::vector<NodeId>& normal_nodes() const { return normal_nodes_; }
  bool is_normal_node(NodeId n) const { return classes_[nodes_[n].cls].size() == 1; }
  std::vector<NodeId> minimal_normal_nodes() const;
  NodeId frattini() const;
  NodeId fitting() const;
  NodeId sylow(std::uint64_t p) const;
  std::optional<NodeId> hall(const std::vector<std::uint64_t>& primes) const;
  ChiefSeries chief_series(std::optional<NodeId> through = {}) const;
  std::vector<NodeId> complements(NodeId normal) const;

  // Node-level operations.
  NodeId join_nodes(NodeId a, NodeId b) const;
  NodeId meet_nodes(NodeId a, NodeId b) const;
  NodeId conjugate_node(NodeId n, ElemId g) const;
  NodeId core_in(NodeId k, NodeId l) const;  // largest normal subgroup of l inside k
  bool normal_in(NodeId x, NodeId l) const;  // requires x <= l
  NodeId normalizer_node(NodeId h) const;    // normalizer in the ambient group
  NodeId centralizer_node(NodeId h) const;
  NodeId derived_node(NodeId h) const;
  // [top, bottom] -> is the factor group top/bottom generated by one coset?
  bool interval_cyclic(NodeId bottom, NodeId top) const;
  std::vector<NodeId> nodes_of_order(std::uint64_t order) const;
  PermGroup node_group(NodeId n) const;
  std::string node_desc(NodeId n) const;  // short deterministic description

  // Minimal nodes normal in the ambient group among those strictly above
  // `above` and contained in `within` (when given).
  std::vector<NodeId> minimal_normal_over(NodeId above, std::optional<NodeId> within = {}) const;

private:
  struct Node {
    std::vector<ElemId> members;
    std::vector<ElemId> gens;
    Bitset mask;           // over elements
    std::uint32_t cls = 0;
  };

  SubgroupLattice() = default;
  std::vector<ElemId> reduce_gens(const std::vector<ElemId>& members) const;

  std::shared_ptr<const GroupTable> table_;
  std::vector<Node> nodes_;
  NodeId full_ = 0;
  std::vector<std::vector<NodeId>> classes_;
  std::vector<LatticeEdge> edges_;
  std::vector<std::vector<std::uint32_t>> edges_into_, edges_from_;
  std::vector<Bitset> up_, down_;  // strict order relations over nodes
  std::unordered_multimap<std::uint64_t, NodeId> fingerprint_;
  std::vector<NodeId> normal_nodes_;
  std::vector<std::pair<std::uint64_t, NodeId>> by_order_;  // sorted (order, id)
};

std::uint64_t fingerprint_members(const std::vector<ElemId>& members);

}  // namespace permchain
