#include "permchain/group_table.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace permchain {

GroupTable::GroupTable(const PermGroup& g, std::uint64_t cap) : group_(g) {
  if (g.order() > cap) throw cap_exceeded("group order over lattice cap");
  if (g.order() > std::numeric_limits<ElemId>::max())
    throw cap_exceeded("group order over element-id range");
  n_ = static_cast<std::uint32_t>(g.order());

  // BFS from the identity; remember how each element was first reached so the
  // bulk of the table can be filled by association instead of composition.
  elems_.reserve(n_);
  elems_.push_back(Perm(g.degree()));
  index_.emplace(elems_[0], ElemId{0});
  struct Provenance {
    ElemId parent;
    std::uint32_t gen;
  };
  std::vector<Provenance> from{{0, 0}};
  for (std::uint32_t head = 0; head < elems_.size(); ++head) {
    for (std::uint32_t gi = 0; gi < g.generators().size(); ++gi) {
      Perm next = elems_[head] * g.generators()[gi];
      if (!index_.count(next)) {
        index_.emplace(next, static_cast<ElemId>(elems_.size()));
        elems_.push_back(std::move(next));
        from.push_back({static_cast<ElemId>(head), gi});
      }
    }
  }
  if (elems_.size() != n_) throw domain_violation("table enumeration mismatch");

  gen_ids_.reserve(g.generators().size());
  for (const Perm& x : g.generators()) gen_ids_.push_back(index_.at(x));

  mul_.assign(static_cast<std::size_t>(n_) * n_, 0);
  // Generator columns by direct composition, the rest by mul(a, c*g) = mul(mul(a, c), g).
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (ElemId gid : gen_ids_)
      mul_[static_cast<std::size_t>(a) * n_ + gid] = index_.at(elems_[a] * elems_[gid]);
  }
  for (std::uint32_t b = 0; b < n_; ++b) {
    if (b == 0) {
      for (std::uint32_t a = 0; a < n_; ++a) mul_[static_cast<std::size_t>(a) * n_] = static_cast<ElemId>(a);
      continue;
    }
    ElemId parent = from[b].parent;
    ElemId gcol = gen_ids_[from[b].gen];
    if (b == gcol && parent == 0) continue;  // already a generator column
    for (std::uint32_t a = 0; a < n_; ++a) {
      ElemId ac = mul_[static_cast<std::size_t>(a) * n_ + parent];
      mul_[static_cast<std::size_t>(a) * n_ + b] = mul_[static_cast<std::size_t>(ac) * n_ + gcol];
    }
  }

  inv_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a) inv_[a] = index_.at(elems_[a].inverse());

  order_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    std::uint32_t k = 1;
    ElemId x = static_cast<ElemId>(a);
    while (x != 0) {
      x = mul(x, static_cast<ElemId>(a));
      ++k;
    }
    order_[a] = a == 0 ? 1 : k;
  }
}

ElemId GroupTable::id_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw domain_violation("element not in table");
  return it->second;
}

std::vector<ElemId> GroupTable::closure(std::span<const ElemId> gens) const {
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  std::vector<ElemId> members{0};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (ElemId g : gens) {
      ElemId next = mul(members[head], g);
      if (!seen[next]) {
        seen[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace permchain
