#include "semiq/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "semiq/constructions.hpp"
#include "semiq/errors.hpp"

namespace semiq {

namespace {

Json load_input_json(const std::string& input) {
  if (input.empty()) throw input_error("no_input", "an input file or inline JSON is required");
  std::string text;
  if (input.front() == '{') {
    text = input;
  } else {
    std::ifstream in(input);
    if (!in) throw input_error("no_input", "cannot open input file: " + input);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw input_error("bad_json", "input is not valid JSON");
  return parsed;
}

ClosureLimits limits_from(const AnalysisRequest& request, std::size_t dim,
                          bool irreducible_hint) {
  ClosureLimits limits = ClosureLimits::defaults_for(dim, irreducible_hint);
  if (request.max_elements) limits.max_elements = *request.max_elements;
  if (request.max_entry_bits) limits.max_entry_bits = *request.max_entry_bits;
  return limits;
}

Json run_construct(const AnalysisRequest& request) {
  if (request.family == "example1") {
    return generators_to_json(example1_semigroup());
  }
  if (request.family == "lower") {
    if (!request.n) throw input_error("bad_request", "--family lower needs --n");
    LowerBoundFamily family = lower_bound_family(*request.n, request.signed_entries);
    Json out = generators_to_json(family.generators());
    out["family"] = Json{{"name", "lower"},
                         {"n", family.n()},
                         {"signed", family.is_signed()},
                         {"ne_count", family.ne_count()},
                         {"size", family.elements().size()}};
    return out;
  }
  if (request.family == "sm") {
    if (!request.n) throw input_error("bad_request", "--family sm needs --n (the size m)");
    return generators_to_json(s_m_family(*request.n));
  }
  if (request.family == "signed-perm") {
    if (!request.n) throw input_error("bad_request", "--family signed-perm needs --n");
    GroupReport report = signed_permutation_group(*request.n);
    GeneratorSet gens{*request.n, report.elements};
    Json out = generators_to_json(gens);
    out["family"] = Json{{"name", "signed-perm"},
                         {"n", *request.n},
                         {"order", report.order.str()},
                         {"folklore_order", report.folklore_order.str()}};
    return out;
  }
  throw input_error("bad_request",
                    "unknown family; expected example1, lower, sm or signed-perm");
}

}  // namespace

Json full_pipeline(const GeneratorSet& gens, const ClosureLimits& limits,
                   Verbosity verbosity) {
  Json out;
  Closure c = close(gens, limits);
  out["closure"] = closure_report(c, verbosity);

  StructureReport structure = analyze_structure(c);
  out["structure"] = structure_report(c, structure, verbosity);
  if (!structure.irreducibility.irreducible || !structure.group_available) {
    out["stopped_after"] = "structure";
    return out;
  }

  psi::Frame frame = psi::select_sequences(c, structure.ideal);
  out["frame"] = psi_frame_report(frame, verbosity);

  psi::GroupIndex gi = psi::GroupIndex::build(frame.group);
  psi::GridSet grids = psi::all_grids(frame, c, gi);
  psi::Injectivity inj = psi::verify_injectivity(frame, c, gi, grids);
  out["injectivity"] = Json{{"ok", inj.ok}, {"distinct_grids", c.size()}};
  if (verbosity != Verbosity::summary) {
    out["injectivity"]["left_reconstruction"] = matrix_to_json(inj.left_reconstruction);
    out["injectivity"]["right_reconstruction"] = matrix_to_json(inj.right_reconstruction);
  }

  psi::BoundCertificate coupling = psi::verify_coupling(frame, c, gi, grids);
  out["coupling"] = bound_certificate_report(coupling, verbosity);

  psi::BoundCertificate cardinality =
      psi::check_cardinality_bounds(c, frame, grids, structure.aperiodicity.aperiodic);
  out["cardinality"] = bound_certificate_report(cardinality, Verbosity::certificates);
  return out;
}

RunResult run_request(const AnalysisRequest& request) {
  RunResult result;
  try {
    if (request.subcommand == "construct") {
      result.report = run_construct(request);
      return result;
    }
    if (request.subcommand == "rees") {
      ReesSemigroup s = rees_from_json(load_input_json(request.input));
      result.report = rees_report(s);
      return result;
    }

    GeneratorSet gens = generators_from_json(load_input_json(request.input));
    if (request.subcommand == "closure") {
      Closure c = close(gens, limits_from(request, gens.dim, false));
      result.report = closure_report(c, request.verbosity);
      return result;
    }
    if (request.subcommand == "analyze") {
      Closure c = close(gens, limits_from(request, gens.dim, false));
      Json out;
      out["closure"] = closure_report(c, request.verbosity);
      out["structure"] = structure_report(c, analyze_structure(c), request.verbosity);
      result.report = std::move(out);
      return result;
    }
    if (request.subcommand == "psi") {
      Closure c = close(gens, limits_from(request, gens.dim, false));
      StructureReport structure = analyze_structure(c);
      Json out;
      out["closure"] = closure_report(c, request.verbosity);
      out["structure"] = structure_report(c, structure, request.verbosity);
      if (!structure.irreducibility.irreducible || !structure.group_available) {
        out["stopped_after"] = "structure";
        result.report = std::move(out);
        return result;
      }
      psi::Frame frame = psi::select_sequences(c, structure.ideal);
      out["frame"] = psi_frame_report(frame, request.verbosity);
      psi::GroupIndex gi = psi::GroupIndex::build(frame.group);
      psi::GridSet grids = psi::all_grids(frame, c, gi);
      psi::Injectivity inj = psi::verify_injectivity(frame, c, gi, grids);
      out["injectivity"] = Json{{"ok", inj.ok}, {"distinct_grids", c.size()}};
      Json thetas = Json::array();
      for (std::size_t b = 2; b <= frame.v; ++b) {
        thetas.push_back(theta_to_json(psi::theta_certificate(frame, b)));
      }
      out["theta_certificates"] = std::move(thetas);
      psi::BoundCertificate coupling = psi::verify_coupling(frame, c, gi, grids);
      out["coupling"] = bound_certificate_report(coupling, request.verbosity);
      psi::BoundCertificate cardinality = psi::check_cardinality_bounds(
          c, frame, grids, structure.aperiodicity.aperiodic);
      out["cardinality"] = bound_certificate_report(cardinality, Verbosity::certificates);
      result.report = std::move(out);
      return result;
    }
    if (request.subcommand == "check-bounds") {
      result.report =
          full_pipeline(gens, limits_from(request, gens.dim, false), request.verbosity);
      return result;
    }
    if (request.subcommand == "mortality") {
      MortalityReport report =
          decomposition_certificate(gens, limits_from(request, gens.dim, false));
      result.report = mortality_report_json(report);
      return result;
    }
    throw input_error("bad_request", "unknown subcommand: " + request.subcommand);
  } catch (const Error& err) {
    result.report = error_report(err);
    result.exit_code = err.exit_code();
    return result;
  } catch (const std::exception& err) {
    result.report = Json{{"error", Json{{"code", "unexpected"},
                                        {"kind", "internal"},
                                        {"message", err.what()}}}};
    result.exit_code = 4;
    return result;
  }
}

}  // namespace semiq
