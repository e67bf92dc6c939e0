#include "permchain/report_io.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace permchain {

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

GroupSpec spec_from_json(const std::string& name, const ordered_json& e) {
  if (e.contains("builtin")) {
    const auto& cat = builtin_catalog();
    auto it = cat.find(e.at("builtin").get<std::string>());
    if (it == cat.end())
      throw invalid_input("entry '" + name + "': unknown builtin '" +
                          e.at("builtin").get<std::string>() + "'");
    GroupSpec spec = it->second;
    spec.name = name;
    return spec;
  }
  if (e.contains("affine")) {
    const auto& a = e.at("affine");
    AffineSpec spec;
    spec.p = a.at("p").get<std::uint64_t>();
    spec.k = a.at("k").get<unsigned>();
    for (const auto& m : a.at("matrices")) {
      FpMatrix mat;
      for (const auto& row : m) mat.push_back(row.get<std::vector<std::uint64_t>>());
      spec.matrices.push_back(std::move(mat));
    }
    return GroupSpec{name, std::move(spec)};
  }
  if (e.contains("generators")) {
    ExplicitSpec spec;
    spec.degree = e.at("degree").get<Point>();
    spec.cycles = e.at("generators").get<std::vector<std::string>>();
    return GroupSpec{name, std::move(spec)};
  }
  throw invalid_input("entry '" + name + "': needs one of builtin/affine/generators");
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(const std::string& text, const std::string& origin) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw invalid_input(origin + ":" + std::to_string(line_of_offset(text, err.byte)) + ": " +
                        err.what());
  }
  if (!doc.is_array()) throw invalid_input(origin + ": corpus must be a JSON array");

  std::vector<CorpusEntry> entries;
  std::set<std::string> names;
  for (const auto& e : doc) {
    CorpusEntry entry;
    if (!e.contains("name")) throw invalid_input(origin + ": entry without a name");
    entry.name = e.at("name").get<std::string>();
    if (!names.insert(entry.name).second)
      throw invalid_input(origin + ": duplicate entry name '" + entry.name + "'");
    entry.spec = spec_from_json(entry.name, e);
    if (e.contains("expect")) {
      const auto& x = e.at("expect");
      if (x.contains("order")) entry.expect.order = x.at("order").get<std::uint64_t>();
      if (x.contains("is_EU")) entry.expect.is_EU = x.at("is_EU").get<bool>();
      if (x.contains("D_order")) entry.expect.D_order = x.at("D_order").get<std::uint64_t>();
    }
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open corpus file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), path.filename().string());
}

namespace {

ordered_json brute_json(const SubgroupLattice& lat, const BruteEU& b) {
  ordered_json j;
  switch (b.status) {
    case BruteEU::Status::holds: j["status"] = "true"; break;
    case BruteEU::Status::fails: j["status"] = "false"; break;
    case BruteEU::Status::not_applicable: j["status"] = "not_applicable"; break;
  }
  if (b.witness)
    j["witness"] = lat.node_desc(*b.witness);
  else
    j["witness"] = nullptr;
  return j;
}

ordered_json condition_json(const ConditionOutcome& c) {
  return ordered_json{{"pass", c.pass}, {"note", c.note}};
}

}  // namespace

ordered_json analysis_json(const GroupAnalysis& a, const SubgroupLattice& lat,
                           const StatusTable& statuses) {
  ordered_json j;
  j["name"] = a.name;
  j["order"] = a.order;
  j["degree"] = a.degree;
  j["soluble"] = a.soluble;
  j["supersoluble"] = a.supersoluble;
  j["nilpotent"] = a.nilpotent;
  j["lattice"] = ordered_json{{"subgroups", a.subgroup_count},
                              {"classes", a.class_count},
                              {"edges", a.edge_count}};
  j["D_order"] = a.D_order;
  j["N_residual_order"] = a.N_residual_order;
  j["frattini_order"] = a.frattini_order;
  j["fitting_order"] = a.fitting_order;
  j["brute_EU"] = brute_json(lat, a.theorem_A.brute);

  {
    ordered_json ta;
    ta["applicable"] = a.theorem_A.applicable;
    if (a.theorem_A.applicable) {
      ta["complements_tested"] = a.theorem_A.complements_tested;
      ta["decomposition_found"] = a.theorem_A.decomposition_found;
      ta["H_order"] = a.theorem_A.H_order;
      ordered_json conds;
      static const char* kRoman[6] = {"i", "ii", "iii", "iv", "v", "vi"};
      for (int c = 0; c < 6; ++c) conds[kRoman[c]] = condition_json(a.theorem_A.conditions[c]);
      ta["conditions"] = conds;
      ta["structural"] = a.theorem_A.structural;
    }
    ta["verdict"] = a.theorem_A.verdict;
    j["theorem_A"] = ta;
  }
  {
    ordered_json tb;
    tb["applicable"] = a.theorem_B.applicable;
    if (a.theorem_B.applicable) {
      tb["phi_order"] = a.theorem_B.phi_order;
      tb["brute"] = a.theorem_B.brute_side;
      tb["brute_witness"] = a.theorem_B.brute_witness
                                ? ordered_json(lat.node_desc(*a.theorem_B.brute_witness))
                                : ordered_json(nullptr);
      tb["soluble"] = a.theorem_B.soluble;
      tb["decomposition_found"] = a.theorem_B.decomposition_found;
      tb["H_order"] = a.theorem_B.H_order;
      tb["gaschutz_quotient_reading"] = a.theorem_B.gaschutz_quotient;
      tb["gaschutz_literal_reading"] = a.theorem_B.gaschutz_literal;
      ordered_json conds;
      static const char* kRoman[4] = {"iii", "iv", "v", "vi"};
      for (int c = 0; c < 4; ++c) conds[kRoman[c]] = condition_json(a.theorem_B.conditions[c]);
      tb["conditions"] = conds;
      tb["structural"] = a.theorem_B.structural;
    }
    tb["verdict"] = a.theorem_B.verdict;
    j["theorem_B"] = tb;
  }

  auto counts_json = [](const std::array<std::size_t, 3>& c) {
    return ordered_json{{"subnormal", c[0]}, {"abnormal", c[1]}, {"neither", c[2]}};
  };
  j["status_counts"] =
      ordered_json{{"P", counts_json(a.p_counts)}, {"U", counts_json(a.u_counts)}};
  j["PU_statuses_equal"] = a.pu_statuses_equal;
  j["huppert_agrees_chief"] = a.huppert_agrees_chief;
  (void)statuses;
  return j;
}

std::string analysis_text(const GroupAnalysis& a, const SubgroupLattice& lat) {
  std::ostringstream out;
  out << a.name << ": order " << a.order << ", degree " << a.degree << "\n";
  out << "  soluble " << (a.soluble ? "yes" : "no") << ", supersoluble "
      << (a.supersoluble ? "yes" : "no") << ", nilpotent " << (a.nilpotent ? "yes" : "no")
      << "\n";
  out << "  subgroups " << a.subgroup_count << " in " << a.class_count << " classes, "
      << a.edge_count << " maximal inclusions\n";
  out << "  G^U order " << a.D_order << ", G^N order " << a.N_residual_order << ", Phi order "
      << a.frattini_order << ", F order " << a.fitting_order << "\n";
  const auto& brute = a.theorem_A.brute;
  out << "  E_U: "
      << (brute.status == BruteEU::Status::holds
              ? "yes"
              : brute.status == BruteEU::Status::fails ? "no" : "not applicable (supersoluble)");
  if (brute.witness) out << ", witness " << lat.node_desc(*brute.witness);
  out << "\n";
  out << "  theorem A: " << a.theorem_A.verdict << "\n";
  if (a.theorem_A.applicable) {
    static const char* kRoman[6] = {"i", "ii", "iii", "iv", "v", "vi"};
    for (int c = 0; c < 6; ++c)
      out << "    (" << kRoman[c] << ") " << (a.theorem_A.conditions[c].pass ? "pass" : "FAIL")
          << ": " << a.theorem_A.conditions[c].note << "\n";
  }
  out << "  theorem B: " << a.theorem_B.verdict << "\n";
  out << "  statuses (P): " << a.p_counts[0] << " subnormal, " << a.p_counts[1] << " abnormal, "
      << a.p_counts[2] << " neither\n";
  out << "  statuses (U): " << a.u_counts[0] << " subnormal, " << a.u_counts[1] << " abnormal, "
      << a.u_counts[2] << " neither\n";
  return out.str();
}

std::string emit_dot(const SubgroupLattice& lat, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  const auto& classes = lat.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "  c" << c << " [label=\"order " << lat.node_order(classes[c].front()) << " x"
        << classes[c].size() << "\"];\n";
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> class_edges;
  for (const LatticeEdge& e : lat.edges())
    class_edges.emplace(std::make_pair(lat.class_of(e.sub), lat.class_of(e.super)), e.index);
  for (const auto& [pair, idx] : class_edges)
    out << "  c" << pair.first << " -> c" << pair.second << " [label=\"" << idx << "\"];\n";
  out << "}\n";
  return out.str();
}

ordered_json lattice_json(const SubgroupLattice& lat, const std::string& name) {
  ordered_json j;
  j["group"] = name;
  j["order"] = lat.node_order(lat.full_node());
  j["subgroups"] = lat.node_count();
  ordered_json nodes = ordered_json::array();
  for (NodeId n = 0; n < lat.node_count(); ++n) {
    ordered_json node;
    node["id"] = n;
    node["order"] = lat.node_order(n);
    node["class"] = lat.class_of(n);
    ordered_json gens = ordered_json::array();
    for (ElemId g : lat.gens(n)) gens.push_back(lat.table().perm(g).cycle_string());
    node["gens"] = gens;
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  ordered_json edges = ordered_json::array();
  for (const LatticeEdge& e : lat.edges())
    edges.push_back(ordered_json{{"sub", e.sub}, {"super", e.super}, {"index", e.index}});
  j["edges"] = edges;
  return j;
}

namespace {

struct EntryResult {
  std::string name;
  ordered_json json;
  bool violation = false;
  bool mismatch = false;
  bool cap_skipped = false;
  bool had_expect = false;
  std::vector<LemmaOutcome> lemmas;
};

EntryResult process_entry(const CorpusEntry& entry, const RunOptions& options) {
  EntryResult result;
  result.name = entry.name;
  result.had_expect =
      entry.expect.order || entry.expect.is_EU || entry.expect.D_order;
  try {
    PermGroup g = build(entry.spec, options.caps);
    AnalysisContext ctx = analyze_group(entry.name, g, options.caps);
    result.json = analysis_json(ctx.summary, ctx.lattice, ctx.statuses);
    result.json["status"] = "ok";

    if (options.mode == RunMode::all || options.mode == RunMode::lemmas)
      result.lemmas = run_lemma_suite_on(ctx);

    const auto& A = ctx.summary.theorem_A;
    const auto& B = ctx.summary.theorem_B;
    if (A.verdict.rfind("VIOLATION", 0) == 0 &&
        (options.mode == RunMode::all || options.mode == RunMode::theorem_A))
      result.violation = true;
    if (B.verdict.rfind("VIOLATION", 0) == 0 &&
        (options.mode == RunMode::all || options.mode == RunMode::theorem_B))
      result.violation = true;

    ordered_json expectations;
    if (entry.expect.order) {
      bool ok = *entry.expect.order == ctx.summary.order;
      expectations["order"] = ok ? "ok" : "mismatch";
      if (!ok) result.mismatch = true;
    }
    if (entry.expect.is_EU) {
      bool actual = A.brute.status == BruteEU::Status::holds;
      bool ok = *entry.expect.is_EU == actual;
      expectations["is_EU"] = ok ? "ok" : "mismatch";
      if (!ok) result.mismatch = true;
    }
    if (entry.expect.D_order) {
      bool ok = *entry.expect.D_order == ctx.summary.D_order;
      expectations["D_order"] = ok ? "ok" : "mismatch";
      if (!ok) result.mismatch = true;
    }
    if (!expectations.empty()) result.json["expect"] = expectations;
  } catch (const cap_exceeded& err) {
    result.cap_skipped = true;
    result.json = ordered_json{{"name", entry.name}, {"status", "cap_exceeded"},
                               {"detail", err.what()}};
  } catch (const std::exception& err) {
    result.mismatch = true;
    result.json =
        ordered_json{{"name", entry.name}, {"status", "error"}, {"detail", err.what()}};
  }
  return result;
}

}  // namespace

RunResult run_verify(const std::vector<CorpusEntry>& corpus, const RunOptions& options) {
  std::vector<EntryResult> results(corpus.size());
  unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) results[i] = process_entry(corpus[i], options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1))
          results[i] = process_entry(corpus[i], options);
      });
    }
    for (std::thread& t : workers) t.join();
  }

  ordered_json report;
  report["entries"] = ordered_json::array();
  bool any_violation = false, any_mismatch = false, cap_on_expected = false;
  std::size_t confirms_A = 0, confirms_B = 0;
  for (const EntryResult& r : results) {
    report["entries"].push_back(r.json);
    any_violation |= r.violation;
    any_mismatch |= r.mismatch;
    cap_on_expected |= r.cap_skipped && r.had_expect;
    if (r.json.contains("theorem_A") && r.json["theorem_A"]["verdict"] == "CONFIRMS_A")
      ++confirms_A;
    if (r.json.contains("theorem_B") && r.json["theorem_B"]["verdict"] == "CONFIRMS_B")
      ++confirms_B;
  }

  if (options.mode == RunMode::all || options.mode == RunMode::lemmas) {
    ordered_json lemmas = ordered_json::array();
    std::map<std::string, std::pair<std::size_t, bool>> totals;  // lemma -> (instances, pass)
    for (const EntryResult& r : results) {
      for (const LemmaOutcome& o : r.lemmas) {
        lemmas.push_back(ordered_json{{"lemma", o.lemma},
                                      {"group", o.group},
                                      {"instances", o.instances},
                                      {"pass", o.pass},
                                      {"witness", o.witness}});
        auto& tot = totals.try_emplace(o.lemma, std::make_pair(std::size_t{0}, true)).first->second;
        tot.first += o.instances;
        tot.second = tot.second && o.pass;
        if (!o.pass) any_violation = true;
      }
    }
    report["lemmas"] = lemmas;
    ordered_json lemma_summary;
    for (const auto& [lemma, tot] : totals)
      lemma_summary[lemma] = ordered_json{{"instances", tot.first}, {"pass", tot.second}};
    report["lemma_summary"] = lemma_summary;
  }

  report["summary"] = ordered_json{{"entries", corpus.size()},
                                   {"confirms_A", confirms_A},
                                   {"confirms_B", confirms_B},
                                   {"violations", any_violation},
                                   {"expectation_mismatches", any_mismatch}};

  int exit_code = 0;
  if (any_violation || any_mismatch) exit_code = 1;
  if (cap_on_expected) exit_code = 3;
  return RunResult{std::move(report), exit_code};
}

}  // namespace permchain
