#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "permchain/errors.hpp"
#include "permchain/perm.hpp"
#include "permchain/perm_group.hpp"

namespace permchain {

using ElemId = std::uint16_t;

// Full multiplication table of a small group. Element 0 is the identity;
// mul(a, b) composes left to right like Perm products. Everything downstream
// of lattice enumeration works on element ids instead of permutations.
class GroupTable {
public:
  GroupTable(const PermGroup& g, std::uint64_t cap);

  std::uint32_t size() const { return n_; }
  const PermGroup& group() const { return group_; }

  ElemId mul(ElemId a, ElemId b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  ElemId inv(ElemId a) const { return inv_[a]; }
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(inv(g), x), g); }
  ElemId comm(ElemId a, ElemId b) const { return mul(mul(mul(inv(a), inv(b)), a), b); }

  std::uint32_t element_order(ElemId a) const { return order_[a]; }
  const Perm& perm(ElemId a) const { return elems_[a]; }
  ElemId id_of(const Perm& p) const;
  std::span<const ElemId> generator_ids() const { return gen_ids_; }

  // Subgroup generated by the given elements, as a sorted member list.
  std::vector<ElemId> closure(std::span<const ElemId> gens) const;

private:
  std::uint32_t n_ = 0;
  PermGroup group_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, ElemId, PermHash> index_;
  std::vector<ElemId> mul_;
  std::vector<ElemId> inv_;
  std::vector<std::uint32_t> order_;
  std::vector<ElemId> gen_ids_;
};

}  // namespace permchain
