#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "semiq/pipeline.hpp"

namespace {

int emit(const semiq::RunResult& result, const std::optional<std::string>& output_path) {
  std::string text = result.report.dump(2);
  text.push_back('\n');
  if (output_path) {
    std::ofstream out(*output_path);
    if (!out) {
      std::cerr << "cannot open output file: " << *output_path << "\n";
      return 3;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure analysis of finite rational matrix semigroups"};
  app.require_subcommand(1);

  semiq::AnalysisRequest request;
  std::string verbosity = "summary";
  bool nonnegative = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) {
      cmd->add_option("--input,-i,input", request.input,
                      "generator file, or inline JSON starting with '{'")
          ->required();
      cmd->add_option("--max-elements", request.max_elements,
                      "closure cap before giving up (default 10^6)");
      cmd->add_option("--max-entry-bits", request.max_entry_bits,
                      "entry bit-size cap before giving up (default 4096)");
    }
    cmd->add_option("--output,-o", request.output_path, "write the JSON report here");
    cmd->add_option("--verbosity", verbosity, "summary | certificates | full")
        ->check(CLI::IsMember({"summary", "certificates", "full"}));
  };

  add_common(app.add_subcommand("closure", "enumerate the semigroup"), true);
  add_common(app.add_subcommand("analyze", "closure plus ideal/group structure"), true);
  add_common(app.add_subcommand("psi", "grid frame, injectivity and theta certificates"), true);
  add_common(app.add_subcommand("check-bounds", "full pipeline with every bound certificate"),
             true);
  add_common(app.add_subcommand("mortality", "mortality threshold and decomposition"), true);

  CLI::App* construct = app.add_subcommand("construct", "emit a built-in generator family");
  construct->add_option("--family", request.family, "example1 | lower | sm | signed-perm")
      ->required();
  construct->add_option("--n", request.n, "dimension (or m for the sm family)");
  construct->add_flag("--signed", "use entries in {-1,0,1} (default)");
  construct->add_flag("--nonnegative", nonnegative, "use entries in {0,1}");
  add_common(construct, false);

  CLI::App* rees = app.add_subcommand("rees", "build and check a Rees 0-matrix semigroup");
  rees->add_option("--input,-i,input", request.input,
                   "semigroup file, or inline JSON starting with '{'")
      ->required();
  add_common(rees, false);

  CLI11_PARSE(app, argc, argv);

  request.subcommand = app.get_subcommands().front()->get_name();
  request.signed_entries = !nonnegative;
  request.verbosity = semiq::parse_verbosity(verbosity);

  return emit(semiq::run_request(request), request.output_path);
}
