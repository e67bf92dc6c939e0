#pragma once

#include <array>
#include <optional>
#include <string>

#include "permchain/builders.hpp"
#include "permchain/subnorm.hpp"

namespace permchain {

// E_U status of the ambient group: not applicable when supersoluble (the
// definition requires G outside the formation), otherwise true unless some
// non-identity proper subgroup is neither U-subnormal nor U-abnormal.
struct BruteEU {
  enum class Status { holds, fails, not_applicable };
  Status status = Status::not_applicable;
  std::optional<NodeId> witness;  // a NEITHER node when status == fails
};

BruteEU brute_EU(const SubgroupLattice& lat, const StatusTable& statuses);

struct ConditionOutcome {
  bool pass = false;
  std::string note;
};

struct TheoremAReport {
  bool applicable = false;
  BruteEU brute;
  std::uint64_t D_order = 0;
  std::size_t complements_tested = 0;
  bool decomposition_found = false;  // some complement passes (i), (iv), (v)
  std::uint64_t H_order = 0;         // certifying complement when found
  std::array<ConditionOutcome, 6> conditions;  // (i)..(vi)
  bool structural = false;
  std::string verdict;  // CONFIRMS_A | VIOLATION: ... | NOT_APPLICABLE
};

TheoremAReport check_theorem_A(const SubgroupLattice& lat, const StatusTable& statuses);

struct TheoremBReport {
  bool applicable = false;
  std::uint64_t phi_order = 0;  // |Phi(G) n D|
  bool brute_side = false;
  std::optional<NodeId> brute_witness;
  bool soluble = false;
  std::size_t complements_tested = 0;
  bool decomposition_found = false;
  std::uint64_t H_order = 0;
  bool gaschutz_quotient = false;  // H Phi/Phi Gaschutz in G/Phi (the checked reading)
  bool gaschutz_literal = false;   // join(H, Phi) Gaschutz in G (recorded only)
  std::array<ConditionOutcome, 4> conditions;  // (iii)..(vi)
  bool structural = false;
  std::string verdict;  // CONFIRMS_B | VIOLATION: ... | NOT_APPLICABLE
};

TheoremBReport check_theorem_B(const SubgroupLattice& lat, const StatusTable& statuses);

// Everything the report and the lemma suite need about one group.
struct GroupAnalysis {
  std::string name;
  std::uint64_t order = 0;
  Point degree = 0;
  std::size_t subgroup_count = 0, class_count = 0, edge_count = 0;
  bool soluble = false, supersoluble = false, nilpotent = false;
  std::uint64_t D_order = 0;          // supersoluble residual
  std::uint64_t N_residual_order = 0;  // nilpotent residual
  std::uint64_t frattini_order = 0, fitting_order = 0;
  TheoremAReport theorem_A;
  TheoremBReport theorem_B;
  std::array<std::size_t, 3> p_counts{};  // subnormal/abnormal/neither, proper nodes
  std::array<std::size_t, 3> u_counts{};
  bool pu_statuses_equal = false;       // meaningful for soluble groups
  bool huppert_agrees_chief = false;    // the two supersolubility routes
};

struct AnalysisContext {
  SubgroupLattice lattice;
  StatusTable statuses;
  GroupAnalysis summary;
};

AnalysisContext analyze_group(const std::string& name, const PermGroup& g, const Caps& caps = {});

struct LemmaOutcome {
  std::string lemma;   // e.g. "2.1.3"
  std::string group;
  std::size_t instances = 0;
  bool pass = true;
  std::string witness;  // failure detail or notable positive witness
};

// Executable instances of the supporting lemma suite (ids 2.1.1 through
// 2.9.ii) on one analyzed group, at the formations U and N.
std::vector<LemmaOutcome> run_lemma_suite_on(const AnalysisContext& ctx);

}  // namespace permchain
