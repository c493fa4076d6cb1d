#include "semiq/io.hpp"

#include <algorithm>

#include "semiq/errors.hpp"

namespace semiq {

Verbosity parse_verbosity(const std::string& name) {
  if (name == "summary") return Verbosity::summary;
  if (name == "certificates") return Verbosity::certificates;
  if (name == "full") return Verbosity::full;
  throw input_error("bad_verbosity", "verbosity must be summary, certificates or full");
}

Json matrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw input_error("bad_matrix", "matrix must be a nonempty array of rows");
  }
  std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.empty()) {
      throw input_error("bad_matrix", "matrix row must be a nonempty array");
    }
    if (i == 0) {
      cols = row.size();
      entries.reserve(rows * cols);
    } else if (row.size() != cols) {
      throw input_error("bad_matrix", "matrix rows have unequal lengths");
    }
    for (const Json& cell : row) {
      if (cell.is_string()) {
        entries.push_back(parse_rational(cell.get<std::string>()));
      } else if (cell.is_number_integer()) {
        entries.push_back(Rational(Integer(cell.get<long long>())));
      } else {
        throw input_error("bad_matrix", "matrix entries must be strings like \"p/q\"");
      }
    }
  }
  return QMatrix(rows, cols, std::move(entries));
}

Json generators_to_json(const GeneratorSet& gens) {
  Json out;
  out["dim"] = gens.dim;
  Json list = Json::array();
  for (const QMatrix& g : gens.generators) list.push_back(matrix_to_json(g));
  out["generators"] = std::move(list);
  return out;
}

GeneratorSet generators_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators")) {
    throw input_error("bad_generators", "expected {\"dim\": n, \"generators\": [...]}");
  }
  GeneratorSet gens;
  if (!j["dim"].is_number_unsigned() && !j["dim"].is_number_integer()) {
    throw input_error("bad_generators", "dim must be a positive integer");
  }
  long long dim = j["dim"].get<long long>();
  if (dim <= 0) throw input_error("bad_generators", "dim must be a positive integer");
  gens.dim = static_cast<std::size_t>(dim);
  if (!j["generators"].is_array()) {
    throw input_error("bad_generators", "generators must be an array of matrices");
  }
  for (const Json& m : j["generators"]) gens.generators.push_back(matrix_from_json(m));
  gens.validate();
  return gens;
}

Json subspace_to_json(const Subspace& s) {
  Json out;
  out["ambient_dim"] = s.ambient_dim();
  out["dim"] = s.dim();
  out["orientation"] = s.orientation() == Orientation::column ? "column" : "row";
  out["basis"] = matrix_to_json(s.basis_rows());
  return out;
}

Json closure_report(const Closure& c, Verbosity verbosity) {
  Json out;
  out["dim"] = c.dim();
  out["num_generators"] = c.generators().generators.size();
  out["size"] = c.size();
  out["diameter"] = c.diameter();
  out["contains_zero"] = c.contains_zero();
  out["contains_identity"] = c.contains_identity();
  out["depth_histogram"] = c.depth_histogram();
  if (verbosity == Verbosity::full) {
    Json elements = Json::array();
    for (std::uint32_t i = 0; i < c.size(); ++i) {
      Json e;
      e["index"] = i;
      e["depth"] = c.depth(i);
      e["word"] = c.witness_word(i);
      e["matrix"] = matrix_to_json(c.element(i));
      elements.push_back(std::move(e));
    }
    out["elements"] = std::move(elements);
  }
  return out;
}

Json structure_report(const Closure& c, const StructureReport& s, Verbosity verbosity) {
  Json out;
  out["irreducible"] = s.irreducibility.irreducible;
  if (s.irreducibility.witness) {
    out["witness"] = subspace_to_json(*s.irreducibility.witness);
  }
  out["r"] = s.ideal.rank;
  out["ideal_size"] = s.ideal.ideal.size();
  out["ideal_is_whole_semigroup"] = s.ideal.ideal.size() == c.size();
  out["t2_nonzero"] = s.ideal.t2_nonzero;
  if (s.group_available) {
    out["group_order"] = s.ideal.group.size();
    out["E"] = matrix_to_json(s.ideal.idempotent);
    out["C"] = matrix_to_json(s.ideal.compress);
    out["D"] = matrix_to_json(s.ideal.embed);
    if (verbosity == Verbosity::full) {
      Json group = Json::array();
      for (const QMatrix& g : s.ideal.group) group.push_back(matrix_to_json(g));
      out["group"] = std::move(group);
    }
  } else {
    out["group_unavailable"] = s.group_failure;
  }
  out["aperiodic"] = s.aperiodicity.aperiodic;
  if (s.aperiodicity.witness) {
    out["aperiodicity_witness"] = *s.aperiodicity.witness;
  }
  if (verbosity == Verbosity::full) {
    Json profiles = Json::array();
    for (const PowerProfile& p : s.aperiodicity.profiles) {
      profiles.push_back(Json{{"index", p.index}, {"period", p.period}});
    }
    out["power_profiles"] = std::move(profiles);
  }
  return out;
}

Json psi_frame_report(const psi::Frame& frame, Verbosity verbosity) {
  Json out;
  out["n"] = frame.n;
  out["r"] = frame.r;
  out["u"] = frame.u;
  out["v"] = frame.v;
  out["heights"] = frame.heights;
  out["widths"] = frame.widths;
  out["overlap_dims"] = frame.overlap_dims;
  Json coupling = Json::array();
  for (const auto& h : frame.coupling_groups) coupling.push_back(h.size());
  out["coupling_group_orders"] = std::move(coupling);
  Json rows = Json::array(), cols = Json::array();
  for (std::size_t i = 0; i < frame.u; ++i) {
    rows.push_back(frame.row_factor_elements[i] ? Json(*frame.row_factor_elements[i])
                                                : Json("identity"));
  }
  for (std::size_t j = 0; j < frame.v; ++j) {
    cols.push_back(frame.col_factor_elements[j] ? Json(*frame.col_factor_elements[j])
                                                : Json("identity"));
  }
  out["row_factor_origin"] = std::move(rows);
  out["col_factor_origin"] = std::move(cols);
  if (verbosity != Verbosity::summary) {
    Json rf = Json::array(), cf = Json::array();
    for (const QMatrix& m : frame.row_maps) rf.push_back(matrix_to_json(m));
    for (const QMatrix& m : frame.col_maps) cf.push_back(matrix_to_json(m));
    out["row_maps"] = std::move(rf);
    out["col_maps"] = std::move(cf);
  }
  return out;
}

Json bound_certificate_report(const psi::BoundCertificate& cert, Verbosity verbosity) {
  Json out;
  out["all_ok"] = cert.all_ok();
  out["num_checks"] = cert.checks.size();
  if (verbosity != Verbosity::summary) {
    Json checks = Json::array();
    for (const psi::CheckedBound& c : cert.checks) {
      Json row;
      row["lemma"] = c.lemma;
      row["context"] = c.context;
      row["observed"] = c.observed.str();
      row["bound"] = c.bound.str();
      row["ok"] = c.ok;
      checks.push_back(std::move(row));
    }
    out["checks"] = std::move(checks);
  }
  return out;
}

namespace {

Json decomposition_node_json(const DecompositionNode& node) {
  Json out;
  out["dim"] = node.dim;
  out["leaf"] = node.leaf;
  if (node.leaf) {
    out["closure_size"] = node.closure_size;
    out["min_rank"] = node.min_rank;
  } else {
    out["invariant_subspace_dim"] = node.subspace_dim;
  }
  out["word"] = node.word;
  out["word_rank"] = node.word_rank;
  if (!node.leaf) {
    Json children = Json::array();
    for (const DecompositionNode& child : node.children) {
      children.push_back(decomposition_node_json(child));
    }
    out["children"] = std::move(children);
  }
  return out;
}

}  // namespace

Json mortality_report_json(const MortalityReport& report) {
  Json out;
  out["dim"] = report.dim;
  if (report.threshold) {
    out["threshold"] = *report.threshold;
    out["threshold_word"] = report.threshold_word;
  } else {
    out["threshold"] = nullptr;
  }
  if (report.min_rank_diameter) {
    out["min_rank"] = report.min_rank;
    out["min_rank_diameter"] = *report.min_rank_diameter;
    out["min_rank_word"] = report.min_rank_word;
  }
  if (report.closure_size) out["closure_size"] = *report.closure_size;
  out["bound"] = report.bound.str();
  if (report.trace) out["trace"] = decomposition_node_json(*report.trace);
  return out;
}

Json theta_to_json(const psi::ThetaCertificate& cert) {
  Json out;
  out["b"] = cert.b;
  out["span_basis"] = matrix_to_json(cert.span_basis);
  Json thetas = Json::array();
  for (const QMatrix& t : cert.theta) thetas.push_back(matrix_to_json(t));
  out["theta"] = std::move(thetas);
  return out;
}

psi::ThetaCertificate theta_from_json(const Json& j) {
  psi::ThetaCertificate cert;
  cert.b = j.at("b").get<std::size_t>();
  cert.span_basis = matrix_from_json(j.at("span_basis"));
  for (const Json& t : j.at("theta")) cert.theta.push_back(matrix_from_json(t));
  return cert;
}

ReesSemigroup rees_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("sandwich")) {
    throw input_error("bad_rees", "expected {\"group\": table, \"sandwich\": rows}");
  }
  const Json& gt = j["group"];
  if (!gt.is_array() || gt.empty()) {
    throw input_error("bad_rees", "group must be a square multiplication table");
  }
  GroupTable group;
  group.order = gt.size();
  for (const Json& row : gt) {
    if (!row.is_array() || row.size() != group.order) {
      throw input_error("bad_rees", "group table rows must all have the group order");
    }
    for (const Json& cell : row) {
      if (!cell.is_number_integer()) {
        throw input_error("bad_rees", "group table entries are element indices");
      }
      group.table.push_back(cell.get<std::uint32_t>());
    }
  }
  // Identity: the unique e with e*x = x for all x (validate() rechecks).
  bool found = false;
  for (std::uint32_t e = 0; e < group.order && !found; ++e) {
    bool neutral = true;
    for (std::uint32_t x = 0; x < group.order; ++x) {
      if (group.table[e * group.order + x] != x || group.table[x * group.order + e] != x) {
        neutral = false;
        break;
      }
    }
    if (neutral) {
      group.identity = e;
      found = true;
    }
  }
  if (!found) throw input_error("bad_rees", "group table has no identity");

  const Json& sw = j["sandwich"];
  if (!sw.is_array() || sw.empty()) {
    throw input_error("bad_rees", "sandwich must be a Lambda x I array");
  }
  std::size_t lambda_size = sw.size();
  std::size_t i_size = 0;
  std::vector<std::int32_t> sandwich;
  for (std::size_t l = 0; l < lambda_size; ++l) {
    const Json& row = sw[l];
    if (!row.is_array() || row.empty()) {
      throw input_error("bad_rees", "sandwich rows must be nonempty arrays");
    }
    if (l == 0) {
      i_size = row.size();
    } else if (row.size() != i_size) {
      throw input_error("bad_rees", "sandwich rows have unequal lengths");
    }
    for (const Json& cell : row) {
      if (cell.is_null()) {
        sandwich.push_back(-1);
      } else if (cell.is_number_integer()) {
        sandwich.push_back(cell.get<std::int32_t>());
      } else {
        throw input_error("bad_rees", "sandwich entries are group indices or null");
      }
    }
  }
  return rees_semigroup(std::move(group), i_size, lambda_size, std::move(sandwich));
}

Json rees_report(const ReesSemigroup& s) {
  Json out;
  out["group_order"] = s.group().order;
  out["i_size"] = s.i_size();
  out["lambda_size"] = s.lambda_size();
  out["size"] = s.size();
  out["associative"] = true;  // construction verifies it exhaustively
  MulTable t = s.table();
  Json idems = Json::array();
  for (std::uint32_t e : t.idempotents()) {
    if (e == 0) continue;
    MulTable::LocalGroup local = t.local_group(e);
    Json row;
    auto triple = s.decode(e);
    row["element"] = Json{{"i", triple->i}, {"g", triple->g}, {"lambda", triple->lambda}};
    row["local_group_order"] = local.elements.size();
    row["local_group_ok"] = local.group_ok;
    idems.push_back(std::move(row));
  }
  out["nonzero_idempotents"] = std::move(idems);
  return out;
}

Json error_report(const Error& err) {
  Json out;
  out["error"] = Json{{"code", err.code()},
                      {"kind", err.kind() == ErrorKind::limit
                                   ? "limit"
                                   : err.kind() == ErrorKind::input ? "input" : "internal"},
                      {"message", err.what()}};
  return out;
}

}  // namespace semiq
