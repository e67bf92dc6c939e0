#include "permchain/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "permchain/numutil.hpp"

namespace permchain {

std::uint64_t fingerprint_members(const std::vector<ElemId>& members) {
  std::uint64_t h = 1469598103934665603ull;
  for (ElemId m : members) {
    h ^= m;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

Bitset mask_of(const std::vector<ElemId>& members, std::uint32_t n) {
  Bitset mask(n);
  for (ElemId m : members) mask.set(m);
  return mask;
}

std::vector<ElemId> members_of_mask(const Bitset& mask) {
  std::vector<ElemId> members;
  members.reserve(mask.count());
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask.test(i)) members.push_back(static_cast<ElemId>(i));
  return members;
}

}  // namespace

std::vector<ElemId> SubgroupLattice::reduce_gens(const std::vector<ElemId>& members) const {
  std::vector<ElemId> gens;
  std::vector<ElemId> closed{0};
  for (ElemId m : members) {
    if (m == 0) continue;
    if (std::binary_search(closed.begin(), closed.end(), m)) continue;
    gens.push_back(m);
    closed = table_->closure(gens);
    if (closed.size() == members.size()) break;
  }
  return gens;
}

SubgroupLattice SubgroupLattice::build(const PermGroup& g, const Caps& caps) {
  SubgroupLattice lat;
  lat.table_ = std::make_shared<GroupTable>(g, caps.lattice_cap);
  const GroupTable& tab = *lat.table_;
  const std::uint32_t n = tab.size();

  // Cyclic subgroups of prime-power order are the extension atoms: every
  // subgroup is a join of them, so iterating joins to a fixpoint is
  // exhaustive.
  struct Atom {
    std::vector<ElemId> members;
    ElemId gen;
  };
  std::vector<Atom> atoms;
  {
    std::unordered_multimap<std::uint64_t, std::size_t> seen;
    for (std::uint32_t x = 1; x < n; ++x) {
      if (!is_prime_power(tab.element_order(static_cast<ElemId>(x)))) continue;
      std::vector<ElemId> members;
      ElemId cur = static_cast<ElemId>(x);
      members.push_back(0);
      while (cur != 0) {
        members.push_back(cur);
        cur = tab.mul(cur, static_cast<ElemId>(x));
      }
      std::sort(members.begin(), members.end());
      std::uint64_t fp = fingerprint_members(members);
      bool dup = false;
      auto [lo, hi] = seen.equal_range(fp);
      for (auto it = lo; it != hi; ++it)
        if (atoms[it->second].members == members) {
          dup = true;
          break;
        }
      if (!dup) {
        seen.emplace(fp, atoms.size());
        atoms.push_back(Atom{std::move(members), static_cast<ElemId>(x)});
      }
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
      if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
      return a.members < b.members;
    });
  }

  // Join-closure worklist from the trivial subgroup.
  struct RawNode {
    std::vector<ElemId> members;
    std::vector<ElemId> gens;
    Bitset mask;
  };
  std::vector<RawNode> raw;
  std::unordered_multimap<std::uint64_t, NodeId> raw_index;
  auto register_node = [&](std::vector<ElemId> members, std::vector<ElemId> gens) -> std::optional<NodeId> {
    std::uint64_t fp = fingerprint_members(members);
    auto [lo, hi] = raw_index.equal_range(fp);
    for (auto it = lo; it != hi; ++it)
      if (raw[it->second].members == members) return std::nullopt;
    NodeId id = static_cast<NodeId>(raw.size());
    Bitset mask = mask_of(members, n);
    raw.push_back(RawNode{std::move(members), std::move(gens), std::move(mask)});
    raw_index.emplace(fp, id);
    return id;
  };
  register_node({0}, {});
  for (std::size_t head = 0; head < raw.size(); ++head) {
    if (raw[head].members.size() == n) continue;  // nothing extends the whole group
    for (const Atom& atom : atoms) {
      if (raw[head].mask.test(atom.gen)) continue;
      std::vector<ElemId> join_gens = raw[head].gens;
      join_gens.push_back(atom.gen);
      std::vector<ElemId> members = tab.closure(join_gens);
      if (auto id = register_node(std::move(members), {})) {
        raw[*id].gens = lat.reduce_gens(raw[*id].members);
      }
    }
  }

  // Canonical ids: sort by (order, member list).
  std::vector<NodeId> perm_order(raw.size());
  for (NodeId i = 0; i < raw.size(); ++i) perm_order[i] = i;
  std::sort(perm_order.begin(), perm_order.end(), [&](NodeId a, NodeId b) {
    if (raw[a].members.size() != raw[b].members.size())
      return raw[a].members.size() < raw[b].members.size();
    return raw[a].members < raw[b].members;
  });
  lat.nodes_.resize(raw.size());
  for (NodeId new_id = 0; new_id < perm_order.size(); ++new_id) {
    RawNode& src = raw[perm_order[new_id]];
    lat.nodes_[new_id] =
        Node{std::move(src.members), std::move(src.gens), std::move(src.mask), 0};
    lat.fingerprint_.emplace(fingerprint_members(lat.nodes_[new_id].members), new_id);
  }
  lat.full_ = static_cast<NodeId>(lat.nodes_.size() - 1);

  lat.by_order_.reserve(lat.nodes_.size());
  for (NodeId i = 0; i < lat.nodes_.size(); ++i)
    lat.by_order_.emplace_back(lat.nodes_[i].members.size(), i);
  // already sorted by construction

  // Conjugacy classes: orbits under conjugation by the ambient generators.
  {
    std::vector<std::uint32_t> cls(lat.nodes_.size(), UINT32_MAX);
    for (NodeId start = 0; start < lat.nodes_.size(); ++start) {
      if (cls[start] != UINT32_MAX) continue;
      std::uint32_t c = static_cast<std::uint32_t>(lat.classes_.size());
      lat.classes_.push_back({});
      std::deque<NodeId> queue{start};
      cls[start] = c;
      while (!queue.empty()) {
        NodeId cur = queue.front();
        queue.pop_front();
        lat.classes_.back().push_back(cur);
        for (ElemId g : tab.generator_ids()) {
          NodeId img = lat.conjugate_node(cur, g);
          if (cls[img] == UINT32_MAX) {
            cls[img] = c;
            queue.push_back(img);
          }
        }
      }
      std::sort(lat.classes_.back().begin(), lat.classes_.back().end());
    }
    for (NodeId i = 0; i < lat.nodes_.size(); ++i) lat.nodes_[i].cls = cls[i];
  }

  // Strict order relations and the Hasse diagram.
  const std::uint32_t count = lat.node_count();
  lat.up_.assign(count, Bitset(count));
  lat.down_.assign(count, Bitset(count));
  for (NodeId b = 0; b < count; ++b) {
    std::uint64_t ob = lat.node_order(b);
    for (NodeId a = 0; a < b; ++a) {
      std::uint64_t oa = lat.node_order(a);
      if (oa == ob || ob % oa != 0) continue;
      bool subset = true;
      for (ElemId m : lat.nodes_[a].members)
        if (!lat.nodes_[b].mask.test(m)) {
          subset = false;
          break;
        }
      if (subset) {
        lat.up_[a].set(b);
        lat.down_[b].set(a);
      }
    }
  }
  lat.edges_into_.resize(count);
  lat.edges_from_.resize(count);
  for (NodeId a = 0; a < count; ++a) {
    for (NodeId b = a + 1; b < count; ++b) {
      if (!lat.up_[a].test(b)) continue;
      if (lat.up_[a].intersects(lat.down_[b])) continue;  // something strictly between
      std::uint32_t e = static_cast<std::uint32_t>(lat.edges_.size());
      lat.edges_.push_back(LatticeEdge{a, b, lat.node_order(b) / lat.node_order(a)});
      lat.edges_from_[a].push_back(e);
      lat.edges_into_[b].push_back(e);
    }
  }

  for (NodeId i = 0; i < count; ++i)
    if (lat.is_normal_node(i)) lat.normal_nodes_.push_back(i);

  return lat;
}

NodeId SubgroupLattice::node_of_members(const std::vector<ElemId>& members) const {
  auto [lo, hi] = fingerprint_.equal_range(fingerprint_members(members));
  for (auto it = lo; it != hi; ++it)
    if (nodes_[it->second].members == members) return it->second;
  throw domain_violation("element set is not a lattice node");
}

std::vector<NodeId> SubgroupLattice::maximal_subgroups() const {
  std::vector<NodeId> result;
  for (std::uint32_t e : edges_into_[full_]) result.push_back(edges_[e].sub);
  return result;
}

std::vector<NodeId> SubgroupLattice::minimal_normal_nodes() const {
  return minimal_normal_over(trivial_node());
}

std::vector<NodeId> SubgroupLattice::minimal_normal_over(NodeId above,
                                                         std::optional<NodeId> within) const {
  std::vector<NodeId> candidates;
  for (NodeId m : normal_nodes_) {
    if (!(above != m && up_[above].test(m))) continue;
    if (within && !node_subset(m, *within)) continue;
    candidates.push_back(m);
  }
  std::vector<NodeId> result;
  for (NodeId m : candidates) {
    bool minimal = true;
    for (NodeId k : candidates)
      if (k != m && up_[k].test(m)) {
        minimal = false;
        break;
      }
    if (minimal) result.push_back(m);
  }
  return result;
}

NodeId SubgroupLattice::frattini() const {
  auto maximals = maximal_subgroups();
  if (maximals.empty()) return full_;  // trivial ambient group
  Bitset mask = nodes_[maximals.front()].mask;
  for (std::size_t i = 1; i < maximals.size(); ++i) mask &= nodes_[maximals[i]].mask;
  return node_of_members(members_of_mask(mask));
}

NodeId SubgroupLattice::sylow(std::uint64_t p) const {
  std::uint64_t part = p_part(node_order(full_), p);
  auto cand = nodes_of_order(part);
  if (cand.empty()) throw domain_violation("no subgroup of Sylow order");  // cannot happen
  return cand.front();
}

NodeId SubgroupLattice::fitting() const {
  std::uint64_t n = node_order(full_);
  std::vector<ElemId> gens;
  for (std::uint64_t p : prime_divisors(n)) {
    NodeId syl = sylow(p);
    const auto& cls = classes_[nodes_[syl].cls];
    Bitset mask = nodes_[cls.front()].mask;
    for (std::size_t i = 1; i < cls.size(); ++i) mask &= nodes_[cls[i]].mask;
    NodeId op = node_of_members(members_of_mask(mask));  // O_p(G)
    for (ElemId x : nodes_[op].gens) gens.push_back(x);
  }
  return node_of_members(table_->closure(gens));
}

std::optional<NodeId> SubgroupLattice::hall(const std::vector<std::uint64_t>& primes) const {
  std::uint64_t target = 1;
  for (std::uint64_t p : prime_divisors(node_order(full_)))
    if (std::find(primes.begin(), primes.end(), p) != primes.end())
      target *= p_part(node_order(full_), p);
  auto cand = nodes_of_order(target);
  if (cand.empty()) return std::nullopt;
  return cand.front();
}

ChiefSeries SubgroupLattice::chief_series(std::optional<NodeId> through) const {
  if (through && !is_normal_node(*through))
    throw domain_violation("chief series pivot is not normal");
  ChiefSeries series;
  series.terms.push_back(trivial_node());
  NodeId cur = trivial_node();
  auto climb = [&](std::optional<NodeId> within) {
    NodeId top = within.value_or(full_);
    while (cur != top) {
      auto cands = minimal_normal_over(cur, within);
      if (cands.empty()) throw domain_violation("chief series stalled");
      NodeId next = cands.front();
      series.factor_orders.push_back(node_order(next) / node_order(cur));
      series.factor_cyclic.push_back(interval_cyclic(cur, next));
      series.terms.push_back(next);
      cur = next;
    }
  };
  if (through && *through != trivial_node()) climb(*through);
  climb(std::nullopt);
  return series;
}

std::vector<NodeId> SubgroupLattice::complements(NodeId normal) const {
  if (!is_normal_node(normal)) throw domain_violation("complements: subgroup is not normal");
  std::uint64_t target = node_order(full_) / node_order(normal);
  std::vector<NodeId> result;
  for (NodeId h : nodes_of_order(target))
    if (nodes_[h].mask.intersection_count(nodes_[normal].mask) == 1) result.push_back(h);
  return result;
}

NodeId SubgroupLattice::join_nodes(NodeId a, NodeId b) const {
  if (node_subset(a, b)) return b;
  if (node_subset(b, a)) return a;
  std::vector<ElemId> gens(nodes_[a].gens);
  gens.insert(gens.end(), nodes_[b].gens.begin(), nodes_[b].gens.end());
  return node_of_members(table_->closure(gens));
}

NodeId SubgroupLattice::meet_nodes(NodeId a, NodeId b) const {
  if (node_subset(a, b)) return a;
  if (node_subset(b, a)) return b;
  Bitset mask = nodes_[a].mask;
  mask &= nodes_[b].mask;
  return node_of_members(members_of_mask(mask));
}

NodeId SubgroupLattice::conjugate_node(NodeId n, ElemId g) const {
  std::vector<ElemId> members;
  members.reserve(nodes_[n].members.size());
  for (ElemId m : nodes_[n].members) members.push_back(table_->conj(m, g));
  std::sort(members.begin(), members.end());
  return node_of_members(members);
}

NodeId SubgroupLattice::core_in(NodeId k, NodeId l) const {
  if (!node_subset(k, l)) throw domain_violation("core_in: subgroup relation does not hold");
  std::vector<NodeId> orbit{k};
  Bitset mask = nodes_[k].mask;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (ElemId g : nodes_[l].gens) {
      NodeId img = conjugate_node(orbit[head], g);
      if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) {
        orbit.push_back(img);
        mask &= nodes_[img].mask;
      }
    }
  }
  return node_of_members(members_of_mask(mask));
}

bool SubgroupLattice::normal_in(NodeId x, NodeId l) const {
  for (ElemId g : nodes_[l].gens)
    for (ElemId m : nodes_[x].members)
      if (!nodes_[x].mask.test(table_->conj(m, g))) return false;
  return true;
}

NodeId SubgroupLattice::normalizer_node(NodeId h) const {
  std::vector<ElemId> members;
  for (std::uint32_t g = 0; g < table_->size(); ++g) {
    bool ok = true;
    for (ElemId x : nodes_[h].gens)
      if (!nodes_[h].mask.test(table_->conj(x, static_cast<ElemId>(g)))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(static_cast<ElemId>(g));
  }
  return node_of_members(members);
}

NodeId SubgroupLattice::centralizer_node(NodeId h) const {
  std::vector<ElemId> members;
  for (std::uint32_t g = 0; g < table_->size(); ++g) {
    bool ok = true;
    for (ElemId x : nodes_[h].gens)
      if (table_->mul(static_cast<ElemId>(g), x) != table_->mul(x, static_cast<ElemId>(g))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(static_cast<ElemId>(g));
  }
  return node_of_members(members);
}

NodeId SubgroupLattice::derived_node(NodeId h) const {
  std::vector<ElemId> seeds;
  for (ElemId a : nodes_[h].gens)
    for (ElemId b : nodes_[h].gens) {
      ElemId c = table_->comm(a, b);
      if (c != 0 && std::find(seeds.begin(), seeds.end(), c) == seeds.end()) seeds.push_back(c);
    }
  std::vector<ElemId> closed = table_->closure(seeds);
  for (std::size_t head = 0; head < seeds.size(); ++head) {
    for (ElemId g : nodes_[h].gens) {
      ElemId c = table_->conj(seeds[head], g);
      if (!std::binary_search(closed.begin(), closed.end(), c)) {
        seeds.push_back(c);
        closed = table_->closure(seeds);
      }
    }
  }
  return node_of_members(closed);
}

bool SubgroupLattice::interval_cyclic(NodeId bottom, NodeId top) const {
  std::uint64_t target = node_order(top);
  for (ElemId x : nodes_[top].members) {
    if (nodes_[bottom].mask.test(x)) continue;
    std::vector<ElemId> gens(nodes_[bottom].gens);
    gens.push_back(x);
    if (table_->closure(gens).size() == target) return true;
  }
  return false;
}

std::vector<NodeId> SubgroupLattice::nodes_of_order(std::uint64_t order) const {
  std::vector<NodeId> result;
  auto lo = std::lower_bound(by_order_.begin(), by_order_.end(),
                             std::make_pair(order, NodeId{0}));
  for (auto it = lo; it != by_order_.end() && it->first == order; ++it)
    result.push_back(it->second);
  return result;
}

PermGroup SubgroupLattice::node_group(NodeId n) const {
  std::vector<Perm> gens;
  for (ElemId x : nodes_[n].gens) gens.push_back(table_->perm(x));
  return PermGroup(table_->group().degree(), std::move(gens));
}

std::string SubgroupLattice::node_desc(NodeId n) const {
  std::ostringstream out;
  out << "order " << node_order(n);
  if (!nodes_[n].gens.empty()) {
    out << " = <";
    bool first = true;
    for (ElemId x : nodes_[n].gens) {
      if (!first) out << ", ";
      out << table_->perm(x).cycle_string();
      first = false;
    }
    out << ">";
  }
  return out.str();
}

}  // namespace permchain
