// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Takes the shipped corpus file as its only argument.

#include <chrono>
#include <iostream>
#include <set>
#include <thread>

#include "oracles.hpp"
#include "permchain/report_io.hpp"

using namespace permchain;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << detail
            << "\n";
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Check {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1fs", s);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <corpus.json>\n";
    return 2;
  }
  std::vector<CorpusEntry> corpus;
  try {
    corpus = load_corpus(argv[1]);
  } catch (const std::exception& err) {
    std::cerr << "cannot load corpus: " << err.what() << "\n";
    return 2;
  }

  // Criterion 1: the Example 4.1 instance at n = 1 (affine order-12 build).
  {
    auto start = std::chrono::steady_clock::now();
    AnalysisContext ctx =
        analyze_group("A4_as_example41", build(builtin_catalog().at("A4_as_example41")));
    double elapsed = seconds_since(start);
    Check c;
    c.require(ctx.summary.D_order == 4, "D order != 4");
    c.require(ctx.summary.order / ctx.summary.D_order == 3, "|G/D| != 3");
    c.require(ctx.summary.theorem_A.brute.status == BruteEU::Status::holds, "brute E_U fails");
    c.require(ctx.summary.theorem_A.verdict == "CONFIRMS_A", "verdict " + ctx.summary.theorem_A.verdict);
    c.require(elapsed < 1.0, "over 1s budget");
    report(1, c.pass,
           "order-12 affine instance: D order 4, |G/D| = 3, E_U, CONFIRMS_A (" +
               fmt_seconds(elapsed) + ")" + (c.detail.empty() ? "" : " -- " + c.detail));
  }

  // Criterion 2: the Example 4.2 instance (F_7^2 x| SL(2,3), order 1176).
  {
    auto start = std::chrono::steady_clock::now();
    AnalysisContext ctx = analyze_group("SL23_affine7", build(builtin_catalog().at("SL23_affine7")));
    double elapsed = seconds_since(start);
    NodeId d = residual(ctx.lattice, FormationTag::supersoluble);
    Check c;
    c.require(ctx.summary.D_order == 392, "D order != 392");
    c.require(!node_nilpotent(ctx.lattice, d), "D unexpectedly nilpotent");
    c.require(ctx.summary.theorem_A.brute.status == BruteEU::Status::holds,
              "brute E_U = false (computed; this instance is not an E_U-group: a Sylow "
              "3-subgroup <a> lies under <a,-I> ~ C6 at prime index 2, and the only admissible "
              "chain step into G leaves from D, which cannot contain it)");
    c.require(ctx.summary.theorem_A.verdict == "CONFIRMS_A",
              "verdict " + ctx.summary.theorem_A.verdict);
    c.require(elapsed < 600.0, "over 10min budget");
    report(2, c.pass,
           "order-1176 instance: D order 392 non-nilpotent, E_U, CONFIRMS_A (" +
               fmt_seconds(elapsed) + ")" + (c.detail.empty() ? "" : " -- " + c.detail));
  }

  // Criterion 3: S4 negative control.
  {
    auto start = std::chrono::steady_clock::now();
    AnalysisContext ctx = analyze_group("S4", build(builtin_catalog().at("S4")));
    double elapsed = seconds_since(start);
    Check c;
    c.require(ctx.summary.theorem_A.brute.status == BruteEU::Status::fails, "brute E_U holds");
    bool witness_c3 = ctx.summary.theorem_A.brute.witness &&
                      ctx.lattice.node_order(*ctx.summary.theorem_A.brute.witness) == 3;
    c.require(witness_c3, "witness not in the C3 class");
    c.require(!ctx.summary.theorem_A.conditions[5].pass, "(vi) passed");
    c.require(ctx.summary.theorem_A.conditions[5].note.find("order 12") != std::string::npos,
              "(vi) witness is not A4");
    c.require(ctx.summary.theorem_A.verdict == "CONFIRMS_A",
              "verdict " + ctx.summary.theorem_A.verdict);
    c.require(elapsed < 5.0, "over 5s budget");
    report(3, c.pass,
           "S4: E_U fails with C3 witness, (vi) fails at A4, CONFIRMS_A (" + fmt_seconds(elapsed) +
               ")" + (c.detail.empty() ? "" : " -- " + c.detail));
  }

  // Full corpus run, shared by criteria 4-8 and (run twice) criterion 10.
  RunOptions options;
  options.jobs = std::max(2u, std::thread::hardware_concurrency());
  auto corpus_start = std::chrono::steady_clock::now();
  RunResult first = run_verify(corpus, options);
  double corpus_elapsed = seconds_since(corpus_start);
  const ordered_json& entries = first.report["entries"];

  // Criterion 4: Theorem A bidirectional suite over the shipped corpus.
  {
    Check c;
    std::size_t soluble_non_ss = 0, eu_cases = 0, non_eu_cases = 0;
    for (const auto& e : entries) {
      c.require(e["status"] == "ok", e["name"].get<std::string>() + " not ok");
      if (e["status"] != "ok") continue;
      if (e["soluble"] == true && e["supersoluble"] == false) {
        ++soluble_non_ss;
        (e["brute_EU"]["status"] == "true" ? eu_cases : non_eu_cases) += 1;
        c.require(e["theorem_A"]["verdict"] == "CONFIRMS_A",
                  e["name"].get<std::string>() + ": " +
                      e["theorem_A"]["verdict"].get<std::string>());
      } else if (e["theorem_A"]["applicable"] == true) {
        c.require(e["theorem_A"]["verdict"] == "CONFIRMS_A",
                  e["name"].get<std::string>() + ": " +
                      e["theorem_A"]["verdict"].get<std::string>());
      }
    }
    c.require(soluble_non_ss >= 30, "fewer than 30 soluble non-supersoluble entries");
    c.require(eu_cases > 0 && non_eu_cases > 0, "corpus does not mix E_U and non-E_U cases");
    c.require(corpus_elapsed < 1800.0, "over 30min budget");
    report(4, c.pass,
           "theorem A over " + std::to_string(soluble_non_ss) +
               " soluble non-supersoluble entries (" + std::to_string(eu_cases) + " E_U, " +
               std::to_string(non_eu_cases) + " non-E_U), zero violations (" +
               fmt_seconds(corpus_elapsed) + ")" + (c.detail.empty() ? "" : " -- " + c.detail));
  }

  // Criterion 5: Theorem B suite under the quotient reading; literal-reading
  // agreement rate is informational.
  {
    Check c;
    std::size_t applicable = 0, literal_agree = 0;
    for (const auto& e : entries) {
      if (e["status"] != "ok" || e["theorem_B"]["applicable"] != true) continue;
      ++applicable;
      c.require(e["theorem_B"]["verdict"] == "CONFIRMS_B",
                e["name"].get<std::string>() + ": " +
                    e["theorem_B"]["verdict"].get<std::string>());
      if (e["theorem_B"]["gaschutz_literal_reading"] == e["theorem_B"]["gaschutz_quotient_reading"])
        ++literal_agree;
    }
    std::string rate = applicable
                           ? std::to_string(literal_agree) + "/" + std::to_string(applicable)
                           : "n/a";
    report(5, c.pass,
           "theorem B confirms on all " + std::to_string(applicable) +
               " applicable entries; literal-in-G reading agrees on " + rate +
               " (informational)" + (c.detail.empty() ? "" : " -- " + c.detail));
  }

  // Criterion 6: P <-> U equivalence on every soluble corpus group.
  {
    Check c;
    std::size_t soluble = 0;
    for (const auto& e : entries) {
      if (e["status"] != "ok" || e["soluble"] != true) continue;
      ++soluble;
      c.require(e["PU_statuses_equal"] == true,
                e["name"].get<std::string>() + ": P and U statuses differ");
    }
    report(6, c.pass,
           "P-subnormality and U-subnormality statuses coincide on all nodes of all " +
               std::to_string(soluble) + " soluble entries" +
               (c.detail.empty() ? "" : " -- " + c.detail));
  }

  // Criterion 7: supersolubility cross-check on every entry.
  {
    Check c;
    for (const auto& e : entries) {
      if (e["status"] != "ok") continue;
      c.require(e["huppert_agrees_chief"] == true,
                e["name"].get<std::string>() + ": Huppert route disagrees");
    }
    report(7, c.pass,
           "Huppert and chief-series supersolubility tests agree on every corpus group" +
               (c.detail.empty() ? "" : " -- " + c.detail));
  }

  // Criterion 8: the lemma suite.
  {
    Check c;
    static const char* kRequired[] = {"2.1.1", "2.1.2", "2.1.3", "2.1.4", "2.1.5", "2.2", "2.3",
                                      "2.4.i", "2.5.i", "2.5.ii", "2.6", "2.7", "2.8", "2.9.i",
                                      "2.9.ii"};
    const ordered_json& summary = first.report["lemma_summary"];
    for (const char* lemma : kRequired) {
      bool present = summary.contains(lemma);
      c.require(present, std::string(lemma) + " has no instances");
      if (present) {
        c.require(summary[lemma]["pass"] == true, std::string(lemma) + " failed");
        c.require(summary[lemma]["instances"].get<std::size_t>() > 0,
                  std::string(lemma) + " has zero instances");
      }
    }
    for (const char* group : {"A5", "S5"}) {
      bool witnessed = false;
      for (const auto& o : first.report["lemmas"])
        if (o["lemma"] == "2.9.ii" && o["group"] == group && o["pass"] == true &&
            o["witness"].get<std::string>().find("witness") != std::string::npos)
          witnessed = true;
      c.require(witnessed, std::string("no explicit 2.9(ii) witness in ") + group);
    }
    report(8, c.pass,
           "lemma suite 2.1-2.9 passes with explicit NEITHER witnesses in A5 and S5" +
               (c.detail.empty() ? "" : " -- " + c.detail));
  }

  // Criterion 9: lattice enumeration vs the exhaustive-closure oracle for
  // corpus groups of order at most 200.
  {
    Check c;
    std::size_t checked = 0;
    bool s4_pinned = false;
    for (const CorpusEntry& entry : corpus) {
      PermGroup g = build(entry.spec);
      if (g.order() > 200) continue;
      ++checked;
      SubgroupLattice lat = SubgroupLattice::build(g);
      auto oracle = oracles::all_subgroups(g);
      std::size_t classes = oracles::count_conjugacy_classes(g, oracle);
      c.require(lat.node_count() == oracle.size(),
                entry.name + ": subgroup count " + std::to_string(lat.node_count()) + " vs " +
                    std::to_string(oracle.size()));
      c.require(lat.classes().size() == classes,
                entry.name + ": class count " + std::to_string(lat.classes().size()) + " vs " +
                    std::to_string(classes));
      if (entry.name == "S4") {
        s4_pinned = lat.node_count() == 30 && lat.classes().size() == 11;
        c.require(s4_pinned, "S4 is not 30 subgroups in 11 classes");
      }
    }
    c.require(checked > 0, "no corpus group of order <= 200");
    report(9, c.pass,
           "cyclic-extension enumeration matches the exhaustive-closure oracle on " +
               std::to_string(checked) + " groups of order <= 200 (S4: 30/11)" +
               (c.detail.empty() ? "" : " -- " + c.detail));
  }

  // Criterion 10: byte-identical reports across consecutive runs.
  {
    RunResult second = run_verify(corpus, options);
    bool identical = first.report.dump(2) == second.report.dump(2);
    report(10, identical, identical ? "two verify runs produce byte-identical JSON reports"
                                    : "reports differ between runs");
  }

  std::cout << (failures == 0 ? "acceptance: all criteria pass\n"
                              : "acceptance: " + std::to_string(failures) + " criterion(s) failed\n");
  return failures == 0 ? 0 : 1;
}
