#include "permchain/builders.hpp"

#include <algorithm>
#include <numeric>

#include "permchain/numutil.hpp"

namespace permchain {

namespace {

std::uint64_t det_mod_p(FpMatrix m, std::uint64_t p) {
  const std::size_t k = m.size();
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] % p == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = (p - det % p) % p;
    }
    std::uint64_t lead = m[col][col] % p;
    det = det * lead % p;
    // modular inverse by Fermat
    std::uint64_t inv = 1, base = lead % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t row = col + 1; row < k; ++row) {
      std::uint64_t f = m[row][col] % p * inv % p;
      if (f == 0) continue;
      for (std::size_t c2 = col; c2 < k; ++c2)
        m[row][c2] = (m[row][c2] + (p - f) * m[col][c2]) % p;
    }
  }
  return det;
}

void validate_matrices(std::uint64_t p, unsigned k, const std::vector<FpMatrix>& mats) {
  if (!is_prime(p)) throw invalid_input("affine construction: p must be prime");
  for (const FpMatrix& m : mats) {
    if (m.size() != k) throw invalid_input("affine construction: matrix dimension mismatch");
    for (const auto& row : m)
      if (row.size() != k) throw invalid_input("affine construction: matrix not square");
    if (det_mod_p(m, p) == 0) throw invalid_input("affine construction: singular matrix");
  }
}

std::uint64_t pow_u64_checked(std::uint64_t base, unsigned e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > limit / base) throw cap_exceeded("affine point count over degree cap");
    r *= base;
  }
  return r;
}

// vector index <-> coordinates, least-significant coordinate first
std::vector<std::uint64_t> coords_of(std::uint64_t idx, std::uint64_t p, unsigned k) {
  std::vector<std::uint64_t> v(k);
  for (unsigned i = 0; i < k; ++i) {
    v[i] = idx % p;
    idx /= p;
  }
  return v;
}

std::uint64_t index_of(const std::vector<std::uint64_t>& v, std::uint64_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * p + v[i] % p;
  return idx;
}

Perm matrix_perm_on_vectors(const FpMatrix& m, std::uint64_t p, unsigned k,
                            std::uint64_t points) {
  std::vector<Point> img(points);
  for (std::uint64_t idx = 0; idx < points; ++idx) {
    auto v = coords_of(idx, p, k);
    std::vector<std::uint64_t> w(k, 0);
    for (unsigned r = 0; r < k; ++r) {
      std::uint64_t acc = 0;
      for (unsigned c = 0; c < k; ++c) acc = (acc + m[r][c] % p * v[c]) % p;
      w[r] = acc;
    }
    img[idx] = static_cast<Point>(index_of(w, p));
  }
  return Perm(std::move(img));
}

PermGroup build_affine(const AffineSpec& spec, const Caps& caps) {
  validate_matrices(spec.p, spec.k, spec.matrices);
  std::uint64_t points = pow_u64_checked(spec.p, spec.k, caps.coset_degree_cap);
  if (points > caps.coset_degree_cap) throw cap_exceeded("affine point count over degree cap");

  std::vector<Perm> gens;
  for (unsigned i = 0; i < spec.k; ++i) {  // translation by e_i
    std::vector<Point> img(points);
    for (std::uint64_t idx = 0; idx < points; ++idx) {
      auto v = coords_of(idx, spec.p, spec.k);
      v[i] = (v[i] + 1) % spec.p;
      img[idx] = static_cast<Point>(index_of(v, spec.p));
    }
    gens.emplace_back(std::move(img));
  }
  std::vector<Perm> linear;
  for (const FpMatrix& m : spec.matrices)
    linear.push_back(matrix_perm_on_vectors(m, spec.p, spec.k, points));
  gens.insert(gens.end(), linear.begin(), linear.end());

  PermGroup g(static_cast<Point>(points), gens);
  PermGroup linear_part(static_cast<Point>(points), linear);
  if (g.order() != points * linear_part.order())
    throw domain_violation("affine build: order differs from p^k * |<M>|");
  return g;
}

PermGroup build_product(const ProductSpec& spec, const Caps& caps) {
  std::vector<PermGroup> factors;
  Point degree = 0;
  for (const GroupSpec& f : spec.factors) {
    factors.push_back(build(f, caps));
    degree += factors.back().degree();
  }
  std::vector<Perm> gens;
  Point offset = 0;
  std::uint64_t expected = 1;
  for (const PermGroup& f : factors) {
    for (const Perm& x : f.generators()) {
      std::vector<Point> img(degree);
      std::iota(img.begin(), img.end(), Point{0});
      for (Point p = 0; p < f.degree(); ++p) img[offset + p] = offset + x[p];
      gens.emplace_back(std::move(img));
    }
    offset += f.degree();
    expected *= f.order();
  }
  PermGroup g(degree, std::move(gens));
  if (g.order() != expected) throw domain_violation("direct product: order mismatch");
  return g;
}

}  // namespace

std::vector<Perm> linear_perms(std::uint64_t p, unsigned k, const std::vector<FpMatrix>& mats) {
  validate_matrices(p, k, mats);
  std::uint64_t points = 1;
  for (unsigned i = 0; i < k; ++i) points *= p;
  // Act on nonzero vectors only; index idx in 1..p^k-1 maps to point idx-1.
  std::vector<Perm> result;
  for (const FpMatrix& m : mats) {
    Perm full = matrix_perm_on_vectors(m, p, k, points);
    std::vector<Point> img(points - 1);
    for (std::uint64_t idx = 1; idx < points; ++idx) img[idx - 1] = full[static_cast<Point>(idx)] - 1;
    result.emplace_back(std::move(img));
  }
  return result;
}

PermGroup build(const GroupSpec& spec, const Caps& caps) {
  return std::visit(
      [&](const auto& c) -> PermGroup {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          if (c.n == 0) throw invalid_input("cyclic: n must be positive");
          if (c.n == 1) return PermGroup(1);
          std::vector<Point> img(c.n);
          for (unsigned i = 0; i < c.n; ++i) img[i] = (i + 1) % c.n;
          PermGroup g(c.n, {Perm(std::move(img))});
          if (g.order() != c.n) throw domain_violation("cyclic: order mismatch");
          return g;
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          if (c.points < 3) throw invalid_input("dihedral: need at least 3 points");
          unsigned n = c.points;
          std::vector<Point> rot(n), refl(n);
          for (unsigned i = 0; i < n; ++i) {
            rot[i] = (i + 1) % n;
            refl[i] = (n - i) % n;
          }
          PermGroup g(n, {Perm(std::move(rot)), Perm(std::move(refl))});
          if (g.order() != 2ull * n) throw domain_violation("dihedral: order mismatch");
          return g;
        } else if constexpr (std::is_same_v<T, SymmetricSpec>) {
          if (c.n == 0) throw invalid_input("symmetric: n must be positive");
          if (c.n == 1) return PermGroup(1);
          std::vector<Perm> gens{Perm::parse_cycles("(1 2)", c.n)};
          if (c.n > 2) {
            std::vector<Point> cyc(c.n);
            for (unsigned i = 0; i < c.n; ++i) cyc[i] = (i + 1) % c.n;
            gens.emplace_back(std::move(cyc));
          }
          return PermGroup(c.n, std::move(gens));
        } else if constexpr (std::is_same_v<T, AlternatingSpec>) {
          if (c.n < 3) return PermGroup(c.n == 0 ? 1 : c.n);
          std::vector<Perm> gens{Perm::parse_cycles("(1 2 3)", c.n)};
          if (c.n > 3) {
            std::vector<Point> img(c.n);
            std::iota(img.begin(), img.end(), Point{0});
            if (c.n % 2 == 1) {
              for (unsigned i = 0; i < c.n; ++i) img[i] = (i + 1) % c.n;  // n-cycle
            } else {
              for (unsigned i = 1; i < c.n; ++i) img[i] = 1 + (i % (c.n - 1));  // (2..n)
            }
            gens.emplace_back(std::move(img));
          }
          return PermGroup(c.n, std::move(gens));
        } else if constexpr (std::is_same_v<T, AffineSpec>) {
          return build_affine(c, caps);
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          std::vector<Perm> gens;
          for (const std::string& s : c.cycles) gens.push_back(Perm::parse_cycles(s, c.degree));
          return PermGroup(c.degree, std::move(gens));
        } else {
          return build_product(c, caps);
        }
      },
      spec.construction);
}

namespace {

GroupSpec spec_of(std::string name,
                  std::variant<CyclicSpec, DihedralSpec, SymmetricSpec, AlternatingSpec,
                               AffineSpec, ExplicitSpec, ProductSpec>
                      c) {
  return GroupSpec{std::move(name), std::move(c)};
}

std::map<std::string, GroupSpec> make_catalog() {
  std::map<std::string, GroupSpec> cat;
  auto add = [&](GroupSpec spec) { cat.emplace(spec.name, spec); };

  for (unsigned n = 1; n <= 32; ++n) add(spec_of("C" + std::to_string(n), CyclicSpec{n}));
  // Dn = dihedral group of order n on n/2 points; D8 acts on {1..4}.
  for (unsigned n = 6; n <= 64; n += 2)
    add(spec_of("D" + std::to_string(n), DihedralSpec{n / 2}));
  add(spec_of("S3", SymmetricSpec{3}));
  add(spec_of("S4", SymmetricSpec{4}));
  add(spec_of("S5", SymmetricSpec{5}));
  add(spec_of("A4", AlternatingSpec{4}));
  add(spec_of("A5", AlternatingSpec{5}));

  // Quaternion group in its regular representation; points numbered
  // 1,-1,i,-i,j,-j,k,-k.
  add(spec_of("Q8", ExplicitSpec{8, {"(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"}}));

  // SL(2,3) acting on the eight nonzero vectors of F_3^2.
  {
    std::vector<FpMatrix> mats{{{1, 1}, {0, 1}}, {{0, 2}, {1, 0}}};
    std::vector<Perm> gens = linear_perms(3, 2, mats);
    std::vector<std::string> cycles;
    for (const Perm& g : gens) cycles.push_back(g.cycle_string());
    add(spec_of("SL23", ExplicitSpec{8, std::move(cycles)}));
  }

  // Frobenius groups AGL(1,5) and AGL(1,7)-subgroup of order 21.
  add(spec_of("F20", AffineSpec{5, 1, {{{2}}}}));
  add(spec_of("F21", AffineSpec{7, 1, {{{2}}}}));

  // Affine instances. Names follow F<p^k>_<point group>.
  add(spec_of("A4_as_example41", AffineSpec{2, 2, {{{0, 1}, {1, 1}}}}));
  add(spec_of("F8_C7", AffineSpec{2, 3, {{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}}}));
  add(spec_of("F16_C5",
              AffineSpec{2, 4,
                         {{{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}}}));
  add(spec_of("F9_C4", AffineSpec{3, 2, {{{0, 2}, {1, 0}}}}));
  add(spec_of("F9_C8", AffineSpec{3, 2, {{{1, 2}, {1, 1}}}}));
  add(spec_of("F9_Q8", AffineSpec{3, 2, {{{0, 2}, {1, 0}}, {{1, 1}, {1, 2}}}}));
  add(spec_of("F9_SL23", AffineSpec{3, 2, {{{1, 1}, {0, 1}}, {{0, 2}, {1, 0}}}}));
  add(spec_of("F25_C3", AffineSpec{5, 2, {{{0, 4}, {1, 4}}}}));
  add(spec_of("F25_C8", AffineSpec{5, 2, {{{0, 2}, {1, 0}}}}));
  add(spec_of("F25_Q8", AffineSpec{5, 2, {{{2, 0}, {0, 3}}, {{0, 4}, {1, 0}}}}));
  add(spec_of("F27_C13",
              AffineSpec{3, 3, {{{0, 2, 0}, {0, 1, 2}, {1, 0, 1}}}}));
  add(spec_of("F49_C4", AffineSpec{7, 2, {{{0, 6}, {1, 0}}}}));
  add(spec_of("F49_C12", AffineSpec{7, 2, {{{0, 3}, {1, 0}}}}));
  add(spec_of("F81_C5",
              AffineSpec{3, 4,
                         {{{0, 0, 0, 2}, {1, 0, 0, 2}, {0, 1, 0, 2}, {0, 0, 1, 2}}}}));
  add(spec_of("F121_C3", AffineSpec{11, 2, {{{0, 10}, {1, 10}}}}));
  add(spec_of("F121_C4", AffineSpec{11, 2, {{{0, 10}, {1, 0}}}}));
  add(spec_of("F169_C8", AffineSpec{13, 2, {{{0, 5}, {1, 0}}}}));
  add(spec_of("F289_C3", AffineSpec{17, 2, {{{0, 16}, {1, 16}}}}));
  add(spec_of("F361_C4", AffineSpec{19, 2, {{{0, 18}, {1, 0}}}}));
  add(spec_of("F529_C4", AffineSpec{23, 2, {{{0, 22}, {1, 0}}}}));

  // SL(2,3) embedded irreducibly in GL(2,7) (quaternions i, j and the
  // order-3 rotation (-1+i+j+k)/2), acting on F_7^2 together with its
  // translations. Order 49 * 24 = 1176.
  add(spec_of("SL23_affine7",
              AffineSpec{7, 2, {{{0, 6}, {1, 0}}, {{2, 3}, {3, 5}}, {{6, 2}, {3, 0}}}}));

  // Direct products shipped in the default corpus.
  auto product = [&](const std::string& name, std::initializer_list<const char*> parts) {
    ProductSpec prod;
    for (const char* part : parts) prod.factors.push_back(cat.at(part));
    add(spec_of(name, std::move(prod)));
  };
  product("A4xC2", {"A4", "C2"});
  product("A4xC3", {"A4", "C3"});
  product("A4xC5", {"A4", "C5"});
  product("A4xA4", {"A4", "A4"});
  product("S4xC2", {"S4", "C2"});
  product("S4xC3", {"S4", "C3"});
  product("S4xS3", {"S4", "S3"});
  product("S3xC5", {"S3", "C5"});
  product("S3xS3", {"S3", "S3"});
  product("Q8xC3", {"Q8", "C3"});
  product("F21xC2", {"F21", "C2"});
  product("C2xC2", {"C2", "C2"});
  product("C2xC2xC2", {"C2", "C2", "C2"});
  product("C2xC2xC2xC2", {"C2", "C2", "C2", "C2"});

  return cat;
}

}  // namespace

const std::map<std::string, GroupSpec>& builtin_catalog() {
  static const std::map<std::string, GroupSpec> catalog = make_catalog();
  return catalog;
}

}  // namespace permchain
