#include "permchain/formations.hpp"

#include <algorithm>

#include "permchain/numutil.hpp"

namespace permchain {

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

bool is_p_group(const PermGroup& g, std::uint64_t p) {
  std::uint64_t n = g.order();
  if (!is_prime(p)) throw domain_violation("is_p_group: p is not prime");
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_soluble(const PermGroup& g) {
  PermGroup cur = g;
  while (cur.order() > 1) {
    PermGroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

bool node_abelian(const SubgroupLattice& lat, NodeId h) {
  auto gens = lat.gens(h);
  const GroupTable& tab = lat.table();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (tab.mul(gens[i], gens[j]) != tab.mul(gens[j], gens[i])) return false;
  return true;
}

bool node_nilpotent(const SubgroupLattice& lat, NodeId h) {
  std::uint64_t n = lat.node_order(h);
  for (std::uint64_t p : prime_divisors(n)) {
    std::uint64_t part = p_part(n, p);
    // Any Sylow p-subgroup of the node; they are conjugate within the node,
    // so one being normal means all are.
    NodeId syl = UINT32_MAX;
    for (NodeId cand : lat.nodes_of_order(part))
      if (lat.node_subset(cand, h)) {
        syl = cand;
        break;
      }
    if (syl == UINT32_MAX) throw domain_violation("missing Sylow node");
    if (!lat.normal_in(syl, h)) return false;
  }
  return true;
}

bool node_supersoluble(const SubgroupLattice& lat, NodeId h) {
  // Huppert: supersoluble iff every maximal subgroup has prime index.
  for (std::uint32_t e : lat.edges_into(h))
    if (!is_prime(lat.edges()[e].index)) return false;
  return true;
}

bool node_in_formation(const SubgroupLattice& lat, NodeId h, FormationTag f) {
  return f == FormationTag::nilpotent ? node_nilpotent(lat, h) : node_supersoluble(lat, h);
}

bool is_nilpotent(const SubgroupLattice& lat) { return node_nilpotent(lat, lat.full_node()); }

bool is_nilpotent_via_maximals(const SubgroupLattice& lat) {
  for (NodeId m : lat.maximal_subgroups())
    if (!lat.is_normal_node(m)) return false;
  return true;
}

bool is_supersoluble_via_chief(const SubgroupLattice& lat) {
  ChiefSeries series = lat.chief_series();
  return std::all_of(series.factor_orders.begin(), series.factor_orders.end(),
                     [](std::uint64_t f) { return is_prime(f); });
}

bool is_supersoluble_via_huppert(const SubgroupLattice& lat) {
  return node_supersoluble(lat, lat.full_node());
}

bool is_supersoluble(const SubgroupLattice& lat) {
  bool chief = is_supersoluble_via_chief(lat);
  if (chief != is_supersoluble_via_huppert(lat))
    throw domain_violation("supersolubility tests disagree");
  return chief;
}

namespace {

// Chief factors of the ambient group above `n`, one series, built from the
// normal-subgroup poset.
struct FactorWalk {
  const SubgroupLattice& lat;
  NodeId cur;
  bool next(NodeId& bottom, NodeId& top) {
    if (cur == lat.full_node()) return false;
    auto cands = lat.minimal_normal_over(cur);
    bottom = cur;
    top = cands.front();
    cur = top;
    return true;
  }
};

bool factor_central(const SubgroupLattice& lat, NodeId bottom, NodeId top) {
  // [G, top] <= bottom, tested on generators.
  const GroupTable& tab = lat.table();
  for (ElemId g : lat.gens(lat.full_node()))
    for (ElemId m : lat.gens(top))
      if (!lat.node_has_element(bottom, tab.comm(g, m))) return false;
  return true;
}

}  // namespace

bool quotient_in_formation(const SubgroupLattice& lat, NodeId n, FormationTag f) {
  if (!lat.is_normal_node(n)) throw domain_violation("quotient test: node not normal");
  FactorWalk walk{lat, n};
  NodeId bottom, top;
  while (walk.next(bottom, top)) {
    std::uint64_t order = lat.node_order(top) / lat.node_order(bottom);
    if (f == FormationTag::supersoluble) {
      if (!is_prime(order)) return false;
    } else {
      if (!factor_central(lat, bottom, top)) return false;
    }
  }
  return true;
}

bool interval_quotient_supersoluble(const SubgroupLattice& lat, NodeId e, NodeId n) {
  // Huppert in the interval [n, e]: maximal subgroups of e/n are exactly the
  // maximal subgroups of e containing n.
  for (std::uint32_t ei : lat.edges_into(e)) {
    const LatticeEdge& edge = lat.edges()[ei];
    if (!lat.node_subset(n, edge.sub)) continue;
    if (!is_prime(edge.index)) return false;
  }
  return true;
}

bool interval_quotient_nilpotent(const SubgroupLattice& lat, NodeId e, NodeId n) {
  // e/n is nilpotent iff each Sylow of e joined with n is normal in e.
  std::uint64_t quotient_order = lat.node_order(e) / lat.node_order(n);
  for (std::uint64_t p : prime_divisors(quotient_order)) {
    std::uint64_t part = p_part(lat.node_order(e), p);
    NodeId syl = UINT32_MAX;
    for (NodeId cand : lat.nodes_of_order(part))
      if (lat.node_subset(cand, e)) {
        syl = cand;
        break;
      }
    if (syl == UINT32_MAX) throw domain_violation("missing Sylow node");
    if (!lat.normal_in(lat.join_nodes(syl, n), e)) return false;
  }
  return true;
}

bool interval_quotient_abelian(const SubgroupLattice& lat, NodeId e, NodeId n) {
  return lat.node_subset(lat.derived_node(e), n);
}

namespace {

NodeId residual_impl(const SubgroupLattice& lat, FormationTag f, NodeId above) {
  Bitset mask(lat.table().size());
  for (ElemId m : lat.members(lat.full_node())) mask.set(m);
  bool found = false;
  std::vector<NodeId> qualifying;
  for (NodeId n : lat.normal_nodes()) {
    if (!lat.node_subset(above, n)) continue;
    if (!quotient_in_formation(lat, n, f)) continue;
    qualifying.push_back(n);
    Bitset nm(lat.table().size());
    for (ElemId m : lat.members(n)) nm.set(m);
    mask &= nm;
    found = true;
  }
  if (!found) throw domain_violation("residual: no qualifying normal subgroup");
  std::vector<ElemId> members;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask.test(i)) members.push_back(static_cast<ElemId>(i));
  NodeId result = lat.node_of_members(members);
  // Formation postconditions: the intersection itself qualifies and is the
  // least qualifying normal subgroup.
  if (!quotient_in_formation(lat, result, f))
    throw domain_violation("residual: quotient by the intersection not in the formation");
  for (NodeId n : qualifying)
    if (!lat.node_subset(result, n)) throw domain_violation("residual: not below a qualifier");
  return result;
}

}  // namespace

NodeId residual(const SubgroupLattice& lat, FormationTag f) {
  return residual_impl(lat, f, lat.trivial_node());
}

NodeId residual_over(const SubgroupLattice& lat, FormationTag f, NodeId above) {
  if (!lat.is_normal_node(above)) throw domain_violation("residual_over: node not normal");
  return residual_impl(lat, f, above);
}

bool is_miller_moreno(const SubgroupLattice& lat, NodeId h) {
  if (node_abelian(lat, h)) return false;
  for (std::uint32_t e : lat.edges_into(h))
    if (!node_abelian(lat, lat.edges()[e].sub)) return false;
  return true;
}

bool is_critical(const SubgroupLattice& lat, FormationTag f) {
  bool in_f = f == FormationTag::nilpotent ? is_nilpotent(lat) : is_supersoluble(lat);
  if (in_f) return false;
  for (NodeId m : lat.maximal_subgroups())
    if (!node_in_formation(lat, m, f)) return false;
  return true;
}

bool is_schmidt(const SubgroupLattice& lat) { return is_critical(lat, FormationTag::nilpotent); }

bool is_U_central(const SubgroupLattice& lat, NodeId r) {
  auto minimals = lat.minimal_normal_nodes();
  if (std::find(minimals.begin(), minimals.end(), r) == minimals.end())
    throw domain_violation("is_U_central: node is not minimal normal");
  return is_prime(lat.node_order(r));
}

}  // namespace permchain
