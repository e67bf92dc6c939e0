#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "permchain/verify.hpp"

namespace permchain {

using ordered_json = nlohmann::ordered_json;

struct Expectations {
  std::optional<std::uint64_t> order;
  std::optional<bool> is_EU;
  std::optional<std::uint64_t> D_order;
};

struct CorpusEntry {
  std::string name;
  GroupSpec spec;
  Expectations expect;
};

// Parses a corpus file: a JSON array of entries referencing builtins,
// explicit generators, or affine data. Throws invalid_input with a line
// number on malformed input. Entries come back sorted by name.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);
std::vector<CorpusEntry> parse_corpus(const std::string& text, const std::string& origin);

enum class RunMode { all, theorem_A, theorem_B, lemmas };

struct RunOptions {
  Caps caps;
  unsigned jobs = 1;
  RunMode mode = RunMode::all;
};

struct RunResult {
  ordered_json report;
  int exit_code;  // 0 all confirm, 1 violation/mismatch, 3 cap on an expected entry
};

RunResult run_verify(const std::vector<CorpusEntry>& corpus, const RunOptions& options);

ordered_json analysis_json(const GroupAnalysis& a, const SubgroupLattice& lat,
                           const StatusTable& statuses);
std::string emit_dot(const SubgroupLattice& lat, const std::string& name);
ordered_json lattice_json(const SubgroupLattice& lat, const std::string& name);
std::string analysis_text(const GroupAnalysis& a, const SubgroupLattice& lat);

}  // namespace permchain
