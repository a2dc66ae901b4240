#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "frontmesh/pipeline.hpp"

namespace frontmesh::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNonTermination = 2, kVerificationFailed = 3 };

struct RunManifest {
  std::string input;
  std::string output_prefix;  // defaults to input without its extension
  PipelineOptions options;
  std::optional<std::string> svg;
  std::optional<std::string> report;
  bool dump_lfs = false;
  bool dump_split = false;
  bool dump_events = false;
};

// Parses argv into a manifest. Returns an exit code when the program should stop early.
std::optional<int> parse_args(int argc, char** argv, RunManifest& manifest);

int run(const RunManifest& manifest);

}  // namespace frontmesh::cli
