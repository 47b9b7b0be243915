#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "equisep/tree.hpp"

namespace equisep {

/// Reads and parses a tree file. IO failures and format errors both raise
/// ParseError with the path in the message.
Tree load_tree_file(const std::filesystem::path& path);

/// What a construction run produced and what was measured on the outputs.
/// Verification is always re-run on the constructed trees; the closed forms
/// are never trusted alone.
struct ConstructionOutcome {
  std::string theorem;
  bool hypotheses_ok = true;
  std::string hypothesis_diagnostic;  // set when hypotheses_ok is false
  std::vector<Tree> outputs;
  std::vector<std::int64_t> tw;        // one per output
  bool tw_all_equal = true;
  bool equiseparable = true;           // pairwise are_equiseparable
  std::vector<std::string> codes;      // canonical codes, one per output
  int isomorphism_classes = 1;
  /// The theorem's own claim, measured: profile equality and equal TW for
  /// thm1/partition/stw, equal TW for the rest. Meaningful only when the
  /// hypotheses held.
  bool guarantee_ok = true;
};

/// Parses a JSON construction spec and runs the named theorem. Tree files
/// referenced by the spec are resolved relative to base_dir. With
/// force = false, hypothesis violations raise PreconditionError; with
/// force = true the trees are built anyway and the outcome records the
/// violated hypothesis.
ConstructionOutcome run_construction_spec(const std::string& theorem,
                                          const std::string& spec_json,
                                          const std::filesystem::path& base_dir,
                                          bool force);

/// Same, reading the spec from a file.
ConstructionOutcome run_construction_file(const std::string& theorem,
                                          const std::filesystem::path& spec_path,
                                          bool force);

}  // namespace equisep
