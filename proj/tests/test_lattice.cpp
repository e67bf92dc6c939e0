#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "permchain/builders.hpp"
#include "permchain/formations.hpp"
#include "permchain/lattice.hpp"
#include "permchain/numutil.hpp"

using namespace permchain;

namespace {

SubgroupLattice catalog_lattice(const std::string& name) {
  return SubgroupLattice::build(build(builtin_catalog().at(name)));
}

std::map<std::uint64_t, std::size_t> order_histogram(const SubgroupLattice& lat) {
  std::map<std::uint64_t, std::size_t> hist;
  for (NodeId n = 0; n < lat.node_count(); ++n) ++hist[lat.node_order(n)];
  return hist;
}

}  // namespace

TEST_CASE("lattice of C_p") {
  SubgroupLattice lat = catalog_lattice("C5");
  CHECK(lat.node_count() == 2);
  REQUIRE(lat.edges().size() == 1);
  CHECK(lat.edges()[0].index == 5);
}

TEST_CASE("lattice of S4 matches the exhaustive oracle") {
  PermGroup s4 = build(builtin_catalog().at("S4"));
  SubgroupLattice lat = SubgroupLattice::build(s4);
  CHECK(lat.node_count() == 30);
  CHECK(lat.classes().size() == 11);
  auto oracle = oracles::all_subgroups(s4);
  CHECK(oracle.size() == 30);
  CHECK(oracles::count_conjugacy_classes(s4, oracle) == 11);
}

TEST_CASE("lattice of A4") {
  SubgroupLattice lat = catalog_lattice("A4");
  CHECK(lat.node_count() == 10);
  auto hist = order_histogram(lat);
  CHECK(hist[1] == 1);
  CHECK(hist[2] == 3);
  CHECK(hist[3] == 4);
  CHECK(hist[4] == 1);
  CHECK(hist[12] == 1);
}

TEST_CASE("every subgroup generated from sampled elements is a node") {
  PermGroup g = build(builtin_catalog().at("S4xC3"));
  SubgroupLattice lat = SubgroupLattice::build(g);
  const GroupTable& tab = lat.table();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<ElemId> gens;
    for (int k = 0; k < 1 + trial % 3; ++k)
      gens.push_back(static_cast<ElemId>(rng() % tab.size()));
    CHECK_NOTHROW(lat.node_of_members(tab.closure(gens)));
  }
}

TEST_CASE("edges are exactly the maximal inclusions") {
  SubgroupLattice lat = catalog_lattice("S4");
  for (const LatticeEdge& e : lat.edges()) {
    CHECK(lat.node_subset(e.sub, e.super));
    CHECK(e.index == lat.node_order(e.super) / lat.node_order(e.sub));
    CHECK(e.index > 1);
    for (NodeId between = 0; between < lat.node_count(); ++between) {
      if (between == e.sub || between == e.super) continue;
      bool strictly_between =
          lat.node_subset(e.sub, between) && lat.node_subset(between, e.super);
      CHECK_FALSE(strictly_between);
    }
  }
}

TEST_CASE("conjugacy classes partition the lattice and sizes divide the order") {
  SubgroupLattice lat = catalog_lattice("S4");
  std::size_t total = 0;
  for (const auto& cls : lat.classes()) {
    total += cls.size();
    CHECK(24 % cls.size() == 0);
    for (NodeId n : cls) CHECK(lat.class_of(n) == lat.class_of(cls.front()));
  }
  CHECK(total == lat.node_count());
}

TEST_CASE("maximal subgroups") {
  SubgroupLattice c5 = catalog_lattice("C5");
  CHECK(c5.maximal_subgroups() == std::vector<NodeId>{c5.trivial_node()});

  SubgroupLattice a4 = catalog_lattice("A4");
  auto maxima = a4.maximal_subgroups();
  CHECK(maxima.size() == 5);  // V4 and four C3
  std::map<std::uint64_t, int> orders;
  for (NodeId m : maxima) ++orders[a4.node_order(m)];
  CHECK(orders[4] == 1);
  CHECK(orders[3] == 4);

  SubgroupLattice s4 = catalog_lattice("S4");
  std::map<std::uint64_t, int> s4_orders;
  for (NodeId m : s4.maximal_subgroups()) ++s4_orders[s4.node_order(m)];
  CHECK(s4_orders[12] == 1);
  CHECK(s4_orders[8] == 3);
  CHECK(s4_orders[6] == 4);
}

TEST_CASE("normal and minimal normal subgroups") {
  SubgroupLattice s4 = catalog_lattice("S4");
  std::vector<std::uint64_t> normal_orders;
  for (NodeId n : s4.normal_nodes()) normal_orders.push_back(s4.node_order(n));
  CHECK(normal_orders == std::vector<std::uint64_t>{1, 4, 12, 24});
  auto minimal = s4.minimal_normal_nodes();
  REQUIRE(minimal.size() == 1);
  CHECK(s4.node_order(minimal[0]) == 4);

  SubgroupLattice a5 = catalog_lattice("A5");
  auto a5_min = a5.minimal_normal_nodes();
  REQUIRE(a5_min.size() == 1);
  CHECK(a5_min[0] == a5.full_node());

  SubgroupLattice c6 = catalog_lattice("C6");
  std::vector<std::uint64_t> min_orders;
  for (NodeId n : c6.minimal_normal_nodes()) min_orders.push_back(c6.node_order(n));
  CHECK(min_orders == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("frattini subgroups") {
  CHECK(catalog_lattice("S4").node_order(catalog_lattice("S4").frattini()) == 1);
  SubgroupLattice q8 = catalog_lattice("Q8");
  CHECK(q8.node_order(q8.frattini()) == 2);
  SubgroupLattice c4 = catalog_lattice("C4");
  CHECK(c4.node_order(c4.frattini()) == 2);
  // every maximal subgroup contains the Frattini subgroup, which is normal
  SubgroupLattice s4 = catalog_lattice("S4");
  NodeId phi = s4.frattini();
  CHECK(s4.is_normal_node(phi));
  for (NodeId m : s4.maximal_subgroups()) CHECK(s4.node_subset(phi, m));
}

TEST_CASE("fitting subgroups") {
  SubgroupLattice q8 = catalog_lattice("Q8");
  CHECK(q8.fitting() == q8.full_node());  // nilpotent group
  SubgroupLattice s4 = catalog_lattice("S4");
  CHECK(s4.node_order(s4.fitting()) == 4);
  SubgroupLattice s3 = catalog_lattice("S3");
  CHECK(s3.node_order(s3.fitting()) == 3);
  // contains every normal nilpotent node
  NodeId f = s4.fitting();
  for (NodeId n : s4.normal_nodes())
    if (node_nilpotent(s4, n)) CHECK(s4.node_subset(n, f));
}

TEST_CASE("sylow and hall subgroups") {
  SubgroupLattice s4 = catalog_lattice("S4");
  CHECK(s4.node_order(s4.sylow(3)) == 3);
  CHECK(s4.node_order(s4.sylow(2)) == 8);
  CHECK(s4.node_order(s4.sylow(5)) == 1);
  CHECK(s4.node_order(*s4.hall({2})) == 8);

  SubgroupLattice s3 = catalog_lattice("S3");
  CHECK(s3.node_order(*s3.hall({3})) == 3);

  SubgroupLattice a5 = catalog_lattice("A5");
  auto h23 = a5.hall({2, 3});
  REQUIRE(h23.has_value());
  CHECK(a5.node_order(*h23) == 12);

  // Absence is a value, not an error: A5 has no Hall {2,5} subgroup (an
  // order-20 subgroup would have index 3 in a simple group of order 60).
  CHECK_FALSE(a5.hall({2, 5}).has_value());

  // Hall's theorem direction: soluble groups have Hall subgroups for every
  // prime subset.
  for (const char* name : {"S4", "A4", "F20", "SL23", "F9_C8"}) {
    SubgroupLattice lat = catalog_lattice(name);
    auto primes = prime_divisors(lat.node_order(lat.full_node()));
    for (std::size_t mask = 0; mask < (1u << primes.size()); ++mask) {
      std::vector<std::uint64_t> subset;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask & (1u << i)) subset.push_back(primes[i]);
      CAPTURE(name);
      CHECK(lat.hall(subset).has_value());
    }
  }
}

TEST_CASE("chief series") {
  SubgroupLattice c6 = catalog_lattice("C6");
  ChiefSeries s = c6.chief_series();
  std::multiset<std::uint64_t> factors(s.factor_orders.begin(), s.factor_orders.end());
  CHECK(factors == std::multiset<std::uint64_t>{2, 3});
  CHECK(s.factor_cyclic == std::vector<bool>(s.factor_cyclic.size(), true));

  SubgroupLattice a4 = catalog_lattice("A4");
  ChiefSeries sa = a4.chief_series();
  CHECK(sa.factor_orders == std::vector<std::uint64_t>{4, 3});
  CHECK(sa.factor_cyclic == std::vector<bool>{false, true});

  SubgroupLattice s4 = catalog_lattice("S4");
  ChiefSeries ss = s4.chief_series();
  CHECK(ss.factor_orders == std::vector<std::uint64_t>{4, 3, 2});

  // factor orders multiply to |G|; prime powers for soluble groups
  for (const char* name : {"S4", "SL23", "F20", "F9_Q8"}) {
    SubgroupLattice lat = catalog_lattice(name);
    ChiefSeries series = lat.chief_series();
    std::uint64_t product = 1;
    for (std::uint64_t f : series.factor_orders) {
      product *= f;
      CAPTURE(name);
      CHECK(is_prime_power(f));
    }
    CHECK(product == lat.node_order(lat.full_node()));
  }

  // through a chosen normal subgroup
  SubgroupLattice s4b = catalog_lattice("S4");
  NodeId v4 = s4b.minimal_normal_nodes()[0];
  ChiefSeries through = s4b.chief_series(v4);
  CHECK(std::find(through.terms.begin(), through.terms.end(), v4) != through.terms.end());
}

TEST_CASE("complements") {
  SubgroupLattice s4 = catalog_lattice("S4");
  NodeId a4 = UINT32_MAX;
  for (NodeId n : s4.normal_nodes())
    if (s4.node_order(n) == 12) a4 = n;
  REQUIRE(a4 != UINT32_MAX);
  CHECK(s4.complements(a4).size() == 6);  // the six transposition subgroups

  SubgroupLattice a4lat = catalog_lattice("A4");
  NodeId v4 = a4lat.minimal_normal_nodes()[0];
  CHECK(a4lat.complements(v4).size() == 4);  // the four C3

  SubgroupLattice c4 = catalog_lattice("C4");
  NodeId c2 = c4.nodes_of_order(2).front();
  CHECK(c4.complements(c2).empty());
}

TEST_CASE("node level operations") {
  SubgroupLattice s4 = catalog_lattice("S4");
  NodeId full = s4.full_node();
  CHECK(s4.node_order(s4.derived_node(full)) == 12);
  NodeId c3 = s4.nodes_of_order(3).front();
  CHECK(s4.node_order(s4.normalizer_node(c3)) == 6);
  NodeId s3 = UINT32_MAX;
  for (NodeId n : s4.nodes_of_order(6))
    if (s4.node_subset(c3, n)) s3 = n;
  REQUIRE(s3 != UINT32_MAX);
  CHECK(s4.core_in(s3, full) == s4.trivial_node());
  NodeId a4 = s4.nodes_of_order(12).front();
  CHECK(s4.core_in(a4, full) == a4);
  CHECK(s4.meet_nodes(a4, s3) == c3);
  CHECK(s4.join_nodes(c3, s4.nodes_of_order(2).front()) != s4.trivial_node());
}

TEST_CASE("lattice cap") {
  Caps caps;
  caps.lattice_cap = 20;
  CHECK_THROWS_AS(SubgroupLattice::build(build(builtin_catalog().at("S4")), caps), cap_exceeded);
}

TEST_CASE("enumeration matches the oracle on small catalog groups") {
  for (const char* name : {"A4", "SL23", "D12", "Q8", "F20", "S3xS3", "C2xC2xC2"}) {
    PermGroup g = build(builtin_catalog().at(name));
    SubgroupLattice lat = SubgroupLattice::build(g);
    auto oracle = oracles::all_subgroups(g);
    CAPTURE(name);
    CHECK(lat.node_count() == oracle.size());
    CHECK(lat.classes().size() == oracles::count_conjugacy_classes(g, oracle));
  }
}
