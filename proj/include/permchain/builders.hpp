#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "permchain/errors.hpp"
#include "permchain/perm_group.hpp"

namespace permchain {

// Row-major square matrix over F_p.
using FpMatrix = std::vector<std::vector<std::uint64_t>>;

struct CyclicSpec {
  unsigned n;
};
struct DihedralSpec {
  unsigned points;  // order 2 * points, points >= 3
};
struct SymmetricSpec {
  unsigned n;
};
struct AlternatingSpec {
  unsigned n;
};
struct AffineSpec {
  std::uint64_t p;
  unsigned k;
  std::vector<FpMatrix> matrices;  // invertible mod p
};
struct ExplicitSpec {
  Point degree;
  std::vector<std::string> cycles;
};
struct GroupSpec;
struct ProductSpec {
  std::vector<GroupSpec> factors;
};

struct GroupSpec {
  std::string name;
  std::variant<CyclicSpec, DihedralSpec, SymmetricSpec, AlternatingSpec, AffineSpec,
               ExplicitSpec, ProductSpec>
      construction;
};

PermGroup build(const GroupSpec& spec, const Caps& caps = {});

// Named corpus constructions: classical families, the affine instances used
// by the verification suites, and the direct products shipped in the default
// corpus. Keys are stable.
const std::map<std::string, GroupSpec>& builtin_catalog();

// Permutations of the nonzero vectors of F_p^k induced by invertible
// matrices (degree p^k - 1). Used for matrix groups without translations.
std::vector<Perm> linear_perms(std::uint64_t p, unsigned k, const std::vector<FpMatrix>& mats);

}  // namespace permchain
