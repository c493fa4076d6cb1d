#ifndef SEMIQ_PIPELINE_HPP
#define SEMIQ_PIPELINE_HPP

#include <optional>
#include <string>

#include "semiq/io.hpp"

namespace semiq {

// One batch request, mirroring the CLI surface. `input` is a path unless it
// starts with '{', which is taken as inline JSON.
struct AnalysisRequest {
  std::string subcommand;  // closure | analyze | psi | mortality | construct |
                           // check-bounds | rees
  std::string input;
  std::optional<std::string> output_path;
  std::optional<std::uint64_t> max_elements;
  std::optional<std::uint32_t> max_entry_bits;
  std::string family;  // construct: example1 | lower | sm | signed-perm
  std::optional<std::size_t> n;
  bool signed_entries = true;
  Verbosity verbosity = Verbosity::summary;
};

struct RunResult {
  Json report;
  int exit_code = 0;
};

// Dispatches a request; errors come back as {"error": ...} reports with the
// matching exit code (2 limits, 3 input, 4 internal invariant violations).
RunResult run_request(const AnalysisRequest& request);

// closure -> structure -> psi -> bounds in one report; reducible inputs stop
// after the structure stage with the witness subspace.
Json full_pipeline(const GeneratorSet& gens, const ClosureLimits& limits,
                   Verbosity verbosity);

}  // namespace semiq

#endif  // SEMIQ_PIPELINE_HPP
