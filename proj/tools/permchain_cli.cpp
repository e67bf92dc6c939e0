#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "permchain/report_io.hpp"

namespace {

using namespace permchain;

int write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

Caps caps_with_order(std::uint64_t cap_order) {
  Caps caps;
  if (cap_order != 0) {
    caps.lattice_cap = cap_order;
    caps.element_cap = std::max(caps.element_cap, cap_order);
  }
  return caps;
}

int cmd_analyze(const std::string& target, std::uint64_t cap_order) {
  Caps caps = caps_with_order(cap_order);
  std::vector<CorpusEntry> entries;
  const auto& cat = builtin_catalog();
  if (auto it = cat.find(target); it != cat.end()) {
    entries.push_back(CorpusEntry{target, it->second, {}});
  } else if (std::filesystem::exists(target)) {
    entries = load_corpus(target);
  } else {
    std::cerr << "unknown group or file: " << target << "\n";
    return 2;
  }
  for (const CorpusEntry& entry : entries) {
    try {
      PermGroup g = build(entry.spec, caps);
      AnalysisContext ctx = analyze_group(entry.name, g, caps);
      std::cout << analysis_text(ctx.summary, ctx.lattice);
    } catch (const cap_exceeded& err) {
      std::cout << entry.name << ": lattice too large (" << err.what() << ")\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& corpus_path, const std::string& theorem,
               const std::string& report_path, unsigned jobs, std::uint64_t cap_order) {
  RunOptions options;
  options.caps = caps_with_order(cap_order);
  options.jobs = jobs;
  if (theorem == "A") options.mode = RunMode::theorem_A;
  else if (theorem == "B") options.mode = RunMode::theorem_B;
  else if (theorem == "lemmas") options.mode = RunMode::lemmas;
  else options.mode = RunMode::all;

  std::vector<CorpusEntry> corpus;
  try {
    corpus = load_corpus(corpus_path);
  } catch (const invalid_input& err) {
    std::cerr << err.what() << "\n";
    return 2;
  }
  RunResult result = run_verify(corpus, options);
  int io = write_or_print(result.report.dump(2) + "\n", report_path);
  return io != 0 ? io : result.exit_code;
}

int cmd_lattice(const std::string& name, const std::string& format, const std::string& out_path,
                std::uint64_t cap_order) {
  Caps caps = caps_with_order(cap_order);
  const auto& cat = builtin_catalog();
  auto it = cat.find(name);
  if (it == cat.end()) {
    std::cerr << "unknown group: " << name << "\n";
    return 2;
  }
  try {
    PermGroup g = build(it->second, caps);
    SubgroupLattice lat = SubgroupLattice::build(g, caps);
    if (format == "dot") return write_or_print(emit_dot(lat, name), out_path);
    return write_or_print(lattice_json(lat, name).dump(2) + "\n", out_path);
  } catch (const cap_exceeded& err) {
    std::cerr << name << ": lattice too large (" << err.what() << ")\n";
    return 3;
  }
}

int cmd_catalog() {
  for (const auto& [name, spec] : builtin_catalog()) std::cout << name << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite permutation-group engine and subnormality verification harness"};
  app.require_subcommand(1);

  std::uint64_t cap_order = 0;
  app.add_option("--cap-order", cap_order, "override the lattice order cap");

  std::string analyze_target;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze a catalog group or corpus file");
  analyze->add_option("target", analyze_target, "catalog name or corpus file")->required();

  std::string corpus_path, theorem, report_path;
  unsigned jobs = 1;
  CLI::App* verify = app.add_subcommand("verify", "run the theorem harness over a corpus");
  verify->add_option("--corpus", corpus_path, "corpus JSON file")->required();
  verify->add_option("--theorem", theorem, "restrict to A, B, or lemmas");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_option("--jobs", jobs, "worker threads, one corpus entry each");

  std::string lattice_name, lattice_format = "dot", lattice_out;
  CLI::App* lattice = app.add_subcommand("lattice", "emit the subgroup lattice");
  lattice->add_option("name", lattice_name, "catalog name")->required();
  lattice->add_option("--format", lattice_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  lattice->add_option("--out", lattice_out, "output file");

  CLI::App* catalog = app.add_subcommand("catalog", "list built-in groups");
  bool list_flag = false;
  catalog->add_flag("--list", list_flag, "list catalog names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(analyze_target, cap_order);
    if (app.got_subcommand(verify))
      return cmd_verify(corpus_path, theorem, report_path, jobs, cap_order);
    if (app.got_subcommand(lattice))
      return cmd_lattice(lattice_name, lattice_format, lattice_out, cap_order);
    if (app.got_subcommand(catalog)) return cmd_catalog();
  } catch (const invalid_input& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
