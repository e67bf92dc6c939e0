#include "permchain/subnorm.hpp"

#include <algorithm>
#include <deque>

#include "permchain/numutil.hpp"

namespace permchain {

namespace {

bool edge_admissible(const SubgroupLattice& lat, const LatticeEdge& edge, ChainCriterion crit) {
  if (crit == ChainCriterion::prime_index) return is_prime(edge.index);
  NodeId core = lat.core_in(edge.sub, edge.super);
  if (crit == ChainCriterion::core_quotient_supersoluble)
    return interval_quotient_supersoluble(lat, edge.super, core);
  return interval_quotient_nilpotent(lat, edge.super, core);
}

}  // namespace

ChainEdgeSet make_edge_set(const SubgroupLattice& lat, ChainCriterion crit) {
  ChainEdgeSet set;
  set.lat = &lat;
  set.criterion = crit;
  set.admissible.resize(lat.edges().size());
  set.sources = Bitset(lat.node_count());
  for (std::size_t e = 0; e < lat.edges().size(); ++e) {
    set.admissible[e] = edge_admissible(lat, lat.edges()[e], crit) ? 1 : 0;
    if (set.admissible[e]) set.sources.set(lat.edges()[e].sub);
  }
  // Reverse reachability from the ambient group. Edges go up in order, so a
  // single pass over nodes in decreasing id works: super-nodes always carry
  // larger ids than their subs (ids are sorted by order).
  set.reachable.assign(lat.node_count(), 0);
  set.reachable[lat.full_node()] = 1;
  for (NodeId h = lat.node_count(); h-- > 0;) {
    if (set.reachable[h]) continue;
    for (std::uint32_t e : lat.edges_from(h)) {
      if (set.admissible[e] && set.reachable[lat.edges()[e].super]) {
        set.reachable[h] = 1;
        break;
      }
    }
  }
  return set;
}

bool is_chain_subnormal(const ChainEdgeSet& edges, NodeId h) { return edges.reachable[h]; }

std::optional<std::uint32_t> admissible_edge_above(const ChainEdgeSet& edges, NodeId h) {
  const SubgroupLattice& lat = *edges.lat;
  for (std::size_t e = 0; e < lat.edges().size(); ++e)
    if (edges.admissible[e] && lat.node_subset(h, lat.edges()[e].sub))
      return static_cast<std::uint32_t>(e);
  return std::nullopt;
}

bool is_chain_abnormal(const ChainEdgeSet& edges, NodeId h) {
  const SubgroupLattice& lat = *edges.lat;
  if (h == lat.full_node()) throw domain_violation("abnormality undefined for the whole group");
  if (edges.sources.test(h)) return false;
  return !lat.up_set(h).intersects(edges.sources);
}

bool subnormal_below(const ChainEdgeSet& edges, NodeId h, NodeId top) {
  const SubgroupLattice& lat = *edges.lat;
  if (!lat.node_subset(h, top)) throw domain_violation("subnormal_below: not a subgroup of top");
  if (h == top) return true;
  std::vector<char> seen(lat.node_count(), 0);
  std::deque<NodeId> queue{h};
  seen[h] = 1;
  while (!queue.empty()) {
    NodeId cur = queue.front();
    queue.pop_front();
    for (std::uint32_t e : lat.edges_from(cur)) {
      if (!edges.admissible[e]) continue;
      NodeId next = lat.edges()[e].super;
      if (!lat.node_subset(next, top) || seen[next]) continue;
      if (next == top) return true;
      seen[next] = 1;
      queue.push_back(next);
    }
  }
  return false;
}

bool subnormal_above(const ChainEdgeSet& edges, NodeId h, NodeId bottom) {
  const SubgroupLattice& lat = *edges.lat;
  if (!lat.node_subset(bottom, h))
    throw domain_violation("subnormal_above: node does not contain the interval base");
  if (h == lat.full_node()) return true;
  std::vector<char> seen(lat.node_count(), 0);
  std::deque<NodeId> queue{h};
  seen[h] = 1;
  while (!queue.empty()) {
    NodeId cur = queue.front();
    queue.pop_front();
    for (std::uint32_t e : lat.edges_from(cur)) {
      if (!edges.admissible[e]) continue;
      NodeId next = lat.edges()[e].super;
      if (seen[next]) continue;
      // Interval chains only pass through nodes containing `bottom`; that is
      // automatic here since cur >= bottom and next >= cur.
      if (next == lat.full_node()) return true;
      seen[next] = 1;
      queue.push_back(next);
    }
  }
  return false;
}

namespace {

ChainStatus classify(const ChainEdgeSet& edges, NodeId h, std::int64_t& witness_edge) {
  const SubgroupLattice& lat = *edges.lat;
  if (h == lat.full_node()) return ChainStatus::whole_group;
  if (is_chain_subnormal(edges, h)) return ChainStatus::subnormal;
  auto above = admissible_edge_above(edges, h);
  if (!above) return ChainStatus::abnormal;
  witness_edge = *above;
  return ChainStatus::neither;
}

}  // namespace

StatusTable status_all(const SubgroupLattice& lat) {
  StatusTable table{make_edge_set(lat, ChainCriterion::prime_index),
                    make_edge_set(lat, ChainCriterion::core_quotient_supersoluble),
                    make_edge_set(lat, ChainCriterion::core_quotient_nilpotent),
                    {}};
  table.status.resize(lat.node_count());
  for (NodeId h = 0; h < lat.node_count(); ++h) {
    SubgroupStatus& s = table.status[h];
    s.p = classify(table.prime, h, s.p_witness_edge);
    s.u = classify(table.super, h, s.u_witness_edge);
    s.n = classify(table.nilp, h, s.n_witness_edge);
  }
  // Conjugation invariance: the lattice is conjugation-stable and all three
  // criteria are conjugation-invariant, so statuses must be constant on
  // classes.
  for (const auto& cls : lat.classes()) {
    for (NodeId h : cls) {
      if (table.status[h].p != table.status[cls.front()].p ||
          table.status[h].u != table.status[cls.front()].u ||
          table.status[h].n != table.status[cls.front()].n)
        throw domain_violation("chain status differs within a conjugacy class");
    }
  }
  return table;
}

bool is_gaschutz(const SubgroupLattice& lat, const ChainEdgeSet& prime_edges, NodeId h) {
  if (prime_edges.criterion != ChainCriterion::prime_index)
    throw domain_violation("is_gaschutz needs the prime-index edge set");
  if (!node_supersoluble(lat, h)) return false;
  if (h == lat.full_node()) return true;
  return !admissible_edge_above(prime_edges, h).has_value();
}

bool is_carter(const SubgroupLattice& lat, NodeId h) {
  return node_nilpotent(lat, h) && lat.normalizer_node(h) == h;
}

}  // namespace permchain
