#include "semiq/psi.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <unordered_set>

#include "semiq/errors.hpp"
#include "semiq/util.hpp"

namespace semiq::psi {

namespace {

constexpr std::size_t kThetaElementCap = 500;

Integer pow3(std::size_t e) { return integer_pow(3, static_cast<unsigned long>(e)); }

void push_check(BoundCertificate& cert, std::string lemma, std::string context,
                Integer observed, Integer bound) {
  bool ok = observed <= bound;
  cert.checks.push_back(
      {std::move(lemma), std::move(context), std::move(observed), std::move(bound), ok});
  if (!cert.checks.back().ok) {
    const CheckedBound& c = cert.checks.back();
    throw internal_error("coupling_violation", "checked inequality failed: " + c.lemma + " [" +
                                                   c.context + "] observed " +
                                                   c.observed.str() + " > " + c.bound.str());
  }
}

}  // namespace

bool BoundCertificate::all_ok() const {
  for (const CheckedBound& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

Frame select_sequences(const Closure& c, const IdealStructure& ideal) {
  Frame frame;
  frame.n = c.dim();
  frame.r = ideal.rank;
  frame.compress = ideal.compress;
  frame.embed = ideal.embed;
  frame.group = ideal.group;
  const std::size_t n = frame.n;

  // S^1 scan order: the formal identity first, then closure discovery order.
  auto scan = [&](auto&& keep) {
    keep(QMatrix::identity(n), std::optional<std::uint32_t>());
    for (std::uint32_t i = 0; i < c.size(); ++i) {
      keep(c.element(i), std::optional<std::uint32_t>(i));
    }
  };

  frame.col_chain.push_back(Subspace::zero(n, Orientation::column));
  scan([&](const QMatrix& x, std::optional<std::uint32_t> origin) {
    if (frame.col_chain.back().is_full()) return;
    QMatrix xd = x * frame.embed;
    Subspace im = image(xd);
    if (frame.col_chain.back().contains(im)) return;
    frame.col_factors.push_back(x);
    frame.col_factor_elements.push_back(origin);
    frame.col_maps.push_back(std::move(xd));
    frame.col_chain.push_back(subspace_sum(frame.col_chain.back(), im));
  });
  if (!frame.col_chain.back().is_full()) {
    throw input_error("span_incomplete",
                      "column spans stall below full dimension (input not irreducible)");
  }

  frame.row_chain.push_back(Subspace::zero(n, Orientation::row));
  scan([&](const QMatrix& x, std::optional<std::uint32_t> origin) {
    if (frame.row_chain.back().is_full()) return;
    QMatrix cu = frame.compress * x;
    Subspace rs = row_space(cu);
    if (frame.row_chain.back().contains(rs)) return;
    frame.row_factors.push_back(x);
    frame.row_factor_elements.push_back(origin);
    frame.row_maps.push_back(std::move(cu));
    frame.row_chain.push_back(subspace_sum(frame.row_chain.back(), rs));
  });
  if (!frame.row_chain.back().is_full()) {
    throw input_error("span_incomplete",
                      "row spans stall below full dimension (input not irreducible)");
  }

  frame.u = frame.row_factors.size();
  frame.v = frame.col_factors.size();
  for (std::size_t a = 1; a <= frame.u; ++a) {
    frame.heights.push_back(frame.row_chain[a].dim() - frame.row_chain[a - 1].dim());
  }
  for (std::size_t b = 1; b <= frame.v; ++b) {
    frame.widths.push_back(frame.col_chain[b].dim() - frame.col_chain[b - 1].dim());
  }

  // Frame arithmetic; failures here are implementation bugs.
  std::size_t hsum = 0, wsum = 0;
  for (std::size_t h : frame.heights) hsum += h;
  for (std::size_t w : frame.widths) wsum += w;
  if (hsum != n || wsum != n || frame.heights.front() != frame.r ||
      frame.widths.front() != frame.r) {
    throw internal_error("frame_arithmetic", "height/width chain arithmetic failed");
  }
  for (const QMatrix& vd : frame.col_maps) {
    if (rank(vd) != frame.r) {
      throw internal_error("frame_arithmetic", "selected column factor has wrong rank");
    }
  }
  for (const QMatrix& cu : frame.row_maps) {
    if (rank(cu) != frame.r) {
      throw internal_error("frame_arithmetic", "selected row factor has wrong rank");
    }
  }

  // Overlap spaces and coupling groups per block column.
  for (std::size_t b = 1; b <= frame.v; ++b) {
    QMatrix ann = annihilator(frame.col_chain[b - 1]);
    Subspace overlap = kernel(ann * frame.col_maps[b - 1]);
    std::size_t l = overlap.dim();
    if (frame.widths[b - 1] != frame.r - l) {
      throw internal_error("frame_arithmetic", "width does not equal r minus overlap dim");
    }
    QMatrix basis = overlap.basis_matrix();  // r x l
    std::vector<QMatrix> fixing;
    for (const QMatrix& g : frame.group) {
      if (g * basis == basis) fixing.push_back(g);
    }
    frame.overlaps.push_back(std::move(overlap));
    frame.overlap_dims.push_back(l);
    frame.coupling_groups.push_back(std::move(fixing));
  }
  return frame;
}

GroupIndex GroupIndex::build(const std::vector<QMatrix>& group) {
  GroupIndex gi;
  gi.elements = group;
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(group.size()); ++i) {
    gi.code_of.emplace(group[i], i);
    if (group[i].is_identity()) gi.identity_code = i;
  }
  if (gi.identity_code < 0) {
    throw internal_error("group_axiom_failure", "group has no identity element");
  }
  gi.inverse_code.resize(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    auto it = gi.code_of.find(inverse(group[i]));
    if (it == gi.code_of.end()) {
      throw internal_error("group_axiom_failure", "group inverse missing");
    }
    gi.inverse_code[i] = it->second;
  }
  return gi;
}

std::optional<std::int32_t> GroupIndex::code(const QMatrix& m) const {
  auto it = code_of.find(m);
  if (it == code_of.end()) return std::nullopt;
  return it->second;
}

std::vector<QMatrix> element_grid(const Frame& frame, const QMatrix& x) {
  std::vector<QMatrix> blocks;
  blocks.reserve(frame.cells());
  std::vector<QMatrix> xv;
  xv.reserve(frame.v);
  for (std::size_t j = 0; j < frame.v; ++j) xv.push_back(x * frame.col_maps[j]);
  for (std::size_t i = 0; i < frame.u; ++i) {
    for (std::size_t j = 0; j < frame.v; ++j) blocks.push_back(frame.row_maps[i] * xv[j]);
  }
  return blocks;
}

GridSet all_grids(const Frame& frame, const Closure& c, const GroupIndex& gi) {
  GridSet out;
  out.u = frame.u;
  out.v = frame.v;
  out.codes.assign(c.size(), {});
  std::atomic<bool> bad{false};
  parallel_for(c.size(), [&](std::size_t e) {
    std::vector<QMatrix> blocks = element_grid(frame, c.element(e));
    std::vector<std::int32_t> codes(blocks.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (blocks[k].is_zero()) {
        codes[k] = -1;
      } else if (auto code = gi.code(blocks[k])) {
        codes[k] = *code;
      } else {
        bad.store(true);
        return;
      }
    }
    out.codes[e] = std::move(codes);
  });
  if (bad.load()) {
    throw internal_error("block_not_in_group",
                         "a grid block is neither zero nor a group element");
  }
  return out;
}

Injectivity verify_injectivity(const Frame& frame, const Closure& c, const GroupIndex& gi,
                               const GridSet& grids) {
  QMatrix stacked = frame.row_maps[0];
  for (std::size_t i = 1; i < frame.u; ++i) stacked = vcat(stacked, frame.row_maps[i]);
  QMatrix concat = frame.col_maps[0];
  for (std::size_t j = 1; j < frame.v; ++j) concat = hcat(concat, frame.col_maps[j]);

  Injectivity out;
  out.left_reconstruction = one_sided_inverse(stacked, Side::left);
  out.right_reconstruction = one_sided_inverse(concat, Side::right);

  const std::size_t r = frame.r;
  std::vector<char> seen_ok(c.size(), 0);
  parallel_for(c.size(), [&](std::size_t e) {
    // Assemble the ur x vr matrix from the coded blocks.
    std::vector<Rational> big(frame.u * r * frame.v * r, Rational(0));
    const std::size_t big_cols = frame.v * r;
    for (std::size_t i = 0; i < frame.u; ++i) {
      for (std::size_t j = 0; j < frame.v; ++j) {
        std::int32_t code = grids.codes[e][i * frame.v + j];
        if (code < 0) continue;
        const QMatrix& blk = gi.elements[code];
        for (std::size_t a = 0; a < r; ++a) {
          for (std::size_t b = 0; b < r; ++b) {
            big[(i * r + a) * big_cols + (j * r + b)] = blk(a, b);
          }
        }
      }
    }
    QMatrix grid_matrix(frame.u * r, big_cols, std::move(big));
    QMatrix rebuilt = out.left_reconstruction * grid_matrix * out.right_reconstruction;
    seen_ok[e] = rebuilt == c.element(e) ? 1 : 0;
  });
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (!seen_ok[e]) {
      throw internal_error("injectivity_failure",
                           "reconstruction failed for element " + std::to_string(e));
    }
  }

  std::set<std::vector<std::int32_t>> distinct(grids.codes.begin(), grids.codes.end());
  if (distinct.size() != c.size()) {
    throw internal_error("injectivity_failure", "two elements share one grid");
  }
  out.ok = true;
  return out;
}

ThetaCertificate theta_certificate(const Frame& frame, std::size_t b) {
  if (b < 2 || b > frame.v) {
    throw input_error("bad_column", "theta certificate needs 2 <= b <= v");
  }
  ThetaCertificate cert;
  cert.b = b;
  cert.span_basis = frame.col_chain[b - 1].basis_matrix();  // n x dim
  const std::size_t dim = cert.span_basis.cols();
  const std::size_t r = frame.r;

  // Omega: (Q^r)^{b-1} -> V_{b-1}, (y_1..y_{b-1}) -> sum V_j D y_j. A right
  // inverse on the span basis gives the Theta blocks; free variables zero.
  QMatrix omega = frame.col_maps[0];
  for (std::size_t j = 1; j + 1 <= b - 1; ++j) omega = hcat(omega, frame.col_maps[j]);
  auto sigma = solve(omega, cert.span_basis);
  if (!sigma) {
    throw internal_error("theta", "Omega is not surjective onto the span");
  }
  for (std::size_t j = 0; j + 1 <= b - 1; ++j) {
    std::vector<Rational> rows;
    rows.reserve(r * dim);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < dim; ++k) rows.push_back((*sigma)(j * r + i, k));
    }
    cert.theta.emplace_back(r, dim, std::move(rows));
  }

  // Displayed identity on a basis of the overlap space.
  const Subspace& overlap = frame.overlaps[b - 1];
  QMatrix ybasis = overlap.basis_matrix();  // r x l
  for (std::size_t k = 0; k < ybasis.cols(); ++k) {
    QMatrix y = ybasis.column(k);
    QMatrix lhs = frame.col_maps[b - 1] * y;  // in V_{b-1}
    auto coords = solve(cert.span_basis, lhs);
    if (!coords) throw internal_error("theta", "overlap image escapes the span");
    QMatrix rhs(frame.n, 1);
    for (std::size_t j = 0; j + 1 <= b - 1; ++j) {
      rhs = rhs + frame.col_maps[j] * (cert.theta[j] * *coords);
    }
    if (rhs != lhs) throw internal_error("theta", "theta identity failed on overlap basis");
  }
  return cert;
}

CouplingData coupling_data(const Frame& frame, std::size_t b) {
  if (b < 1 || b > frame.v) throw input_error("bad_column", "coupling data needs 1 <= b <= v");
  QMatrix ann = annihilator(frame.col_chain[b - 1]);
  CouplingData out;
  out.overlap = kernel(ann * frame.col_maps[b - 1]);
  out.overlap_dim = out.overlap.dim();
  QMatrix basis = out.overlap.basis_matrix();
  for (const QMatrix& g : frame.group) {
    if (g * basis == basis) out.coupling_group.push_back(g);
  }
  if (out.overlap != frame.overlaps[b - 1] ||
      out.coupling_group.size() != frame.coupling_groups[b - 1].size()) {
    throw internal_error("frame_arithmetic", "coupling data mismatch with the frame");
  }
  // Group axioms of H_b.
  std::unordered_set<QMatrix, QMatrixHash> members(out.coupling_group.begin(),
                                                   out.coupling_group.end());
  for (const QMatrix& g : out.coupling_group) {
    if (!members.count(inverse(g))) {
      throw internal_error("group_axiom_failure", "coupling group misses an inverse");
    }
    for (const QMatrix& h : out.coupling_group) {
      if (!members.count(g * h)) {
        throw internal_error("group_axiom_failure", "coupling group is not closed");
      }
    }
  }
  return out;
}

BoundCertificate verify_coupling(const Frame& frame, const Closure& c, const GroupIndex& gi,
                                 const GridSet& grids) {
  BoundCertificate cert;
  const std::size_t u = frame.u, v = frame.v;

  // Coupling-group sizes.
  for (std::size_t b = 1; b <= v; ++b) {
    push_check(cert, "coupling_group_size", "b=" + std::to_string(b),
               Integer(frame.coupling_groups[b - 1].size()) + 1,
               pow3(frame.widths[b - 1] * frame.widths[b - 1]));
  }

  // Coupling-group membership codes per column.
  std::vector<std::set<std::int32_t>> h_codes(v);
  for (std::size_t b = 0; b < v; ++b) {
    for (const QMatrix& h : frame.coupling_groups[b]) {
      auto code = gi.code(h);
      if (!code) throw internal_error("group_axiom_failure", "coupling group escapes G");
      h_codes[b].insert(*code);
    }
  }

  // Row-step classes and the coset law: within one fixed row prefix the
  // nonzero values of column b lie in a single left H_b-coset.
  std::int64_t coset_violations = 0;
  for (std::size_t a = 0; a < u; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      std::map<std::vector<std::int32_t>, std::set<std::int32_t>> classes;
      for (const auto& g : grids.codes) {
        std::vector<std::int32_t> prefix(g.begin() + a * v, g.begin() + a * v + b);
        classes[prefix].insert(g[a * v + b]);
      }
      std::size_t worst = 0;
      for (const auto& [prefix, values] : classes) {
        worst = std::max(worst, values.size());
        std::int32_t first = -1;
        for (std::int32_t code : values) {
          if (code < 0) continue;
          if (first < 0) {
            first = code;
            continue;
          }
          QMatrix ratio = gi.elements[gi.inverse_code[first]] * gi.elements[code];
          auto rc = gi.code(ratio);
          if (!rc || !h_codes[b].count(*rc)) ++coset_violations;
        }
      }
      push_check(cert, "row_step", "a=" + std::to_string(a + 1) + " b=" + std::to_string(b + 1),
                 Integer(worst), pow3(frame.widths[b] * frame.widths[b]));
    }
  }
  push_check(cert, "ratio_coset", "all fixed-prefix classes", Integer(coset_violations),
             Integer(0));

  // Column-step classes.
  for (std::size_t b = 0; b < v; ++b) {
    for (std::size_t a = 0; a < u; ++a) {
      std::map<std::vector<std::int32_t>, std::set<std::int32_t>> classes;
      for (const auto& g : grids.codes) {
        std::vector<std::int32_t> prefix;
        prefix.reserve(a);
        for (std::size_t i = 0; i < a; ++i) prefix.push_back(g[i * v + b]);
        classes[prefix].insert(g[a * v + b]);
      }
      std::size_t worst = 0;
      for (const auto& [prefix, values] : classes) worst = std::max(worst, values.size());
      push_check(cert, "column_step",
                 "a=" + std::to_string(a + 1) + " b=" + std::to_string(b + 1), Integer(worst),
                 pow3(frame.heights[a] * frame.heights[a]));
    }
  }

  // Grid-step classes over the full row-major prefix.
  for (std::size_t cell = 0; cell < u * v; ++cell) {
    std::map<std::vector<std::int32_t>, std::set<std::int32_t>> classes;
    for (const auto& g : grids.codes) {
      std::vector<std::int32_t> prefix(g.begin(), g.begin() + cell);
      classes[prefix].insert(g[cell]);
    }
    std::size_t worst = 0;
    for (const auto& [prefix, values] : classes) worst = std::max(worst, values.size());
    const std::size_t a = cell / v, b = cell % v;
    push_check(cert, "grid_step", "a=" + std::to_string(a + 1) + " b=" + std::to_string(b + 1),
               Integer(worst), pow3(frame.heights[a] * frame.widths[b]));
  }

  // Row prefix-set sizes |Y_b| per block row.
  for (std::size_t a = 0; a < u; ++a) {
    std::size_t exponent = 0;
    for (std::size_t b = 0; b < v; ++b) {
      exponent += frame.widths[b] * frame.widths[b];
      std::set<std::vector<std::int32_t>> prefixes;
      for (const auto& g : grids.codes) {
        prefixes.insert(std::vector<std::int32_t>(g.begin() + a * v, g.begin() + a * v + b + 1));
      }
      push_check(cert, "row_bound", "a=" + std::to_string(a + 1) + " b=" + std::to_string(b + 1),
                 Integer(prefixes.size()), pow3(exponent));
    }
  }

  // Grid prefix-set sizes |Z_k|.
  std::size_t s = 0;
  for (std::size_t cell = 0; cell < u * v; ++cell) {
    const std::size_t a = cell / v, b = cell % v;
    s += frame.heights[a] * frame.widths[b];
    std::set<std::vector<std::int32_t>> prefixes;
    for (const auto& g : grids.codes) {
      prefixes.insert(std::vector<std::int32_t>(g.begin(), g.begin() + cell + 1));
    }
    push_check(cert, "grid_bound", "k=" + std::to_string(cell + 1), Integer(prefixes.size()),
               pow3(s));
  }

  // Theta identity across elements (capped) for every column with a nonzero
  // overlap space.
  std::int64_t theta_violations = 0;
  const std::size_t element_cap = std::min<std::size_t>(c.size(), kThetaElementCap);
  for (std::size_t b = 2; b <= v; ++b) {
    if (frame.overlap_dims[b - 1] == 0) continue;
    ThetaCertificate theta = theta_certificate(frame, b);
    QMatrix ybasis = frame.overlaps[b - 1].basis_matrix();
    for (std::size_t e = 0; e < element_cap; ++e) {
      for (std::size_t a = 0; a < u; ++a) {
        for (std::size_t k = 0; k < ybasis.cols(); ++k) {
          QMatrix y = ybasis.column(k);
          QMatrix vdy = frame.col_maps[b - 1] * y;
          auto coords = solve(theta.span_basis, vdy);
          if (!coords) {
            ++theta_violations;
            continue;
          }
          auto block = [&](std::size_t j) -> QMatrix {
            std::int32_t code = grids.codes[e][a * v + j];
            return code < 0 ? QMatrix::zero(frame.r, frame.r) : gi.elements[code];
          };
          QMatrix lhs = block(b - 1) * y;
          QMatrix rhs(frame.r, 1);
          for (std::size_t j = 0; j + 1 <= b - 1; ++j) {
            rhs = rhs + block(j) * (theta.theta[j] * *coords);
          }
          if (lhs != rhs) ++theta_violations;
        }
      }
    }
  }
  push_check(cert, "theta_identity", "elements checked: " + std::to_string(element_cap),
             Integer(theta_violations), Integer(0));

  return cert;
}

BoundCertificate check_cardinality_bounds(const Closure& c, const Frame& frame,
                                          const GridSet& grids, bool aperiodic) {
  BoundCertificate cert;
  const std::size_t n = frame.n;
  std::size_t s = 0;
  for (std::size_t h : frame.heights) {
    for (std::size_t w : frame.widths) s += h * w;
  }
  if (s != n * n) {
    throw internal_error("frame_arithmetic", "sum of h_i * w_j does not equal n^2");
  }
  {
    Integer observed(c.size());
    Integer bound = pow3(n * n);
    bool ok = observed <= bound;
    cert.checks.push_back({"cardinality", "|S| vs 3^(n^2)", observed, bound, ok});
    if (!ok) {
      throw internal_error("bound_violation", "|S| = " + observed.str() +
                                                  " exceeds 3^(n^2) = " + bound.str());
    }
  }
  if (aperiodic) {
    Integer observed(c.size());
    Integer bound = integer_pow(2, static_cast<unsigned long>(n * n));
    bool ok = observed <= bound;
    cert.checks.push_back({"cardinality_aperiodic", "|S| vs 2^(n^2)", observed, bound, ok});
    if (!ok) {
      throw internal_error("bound_violation", "aperiodic |S| = " + observed.str() +
                                                  " exceeds 2^(n^2) = " + bound.str());
    }
    std::int64_t stray = 0;
    for (const auto& g : grids.codes) {
      for (std::int32_t code : g) {
        if (code >= 0 && !frame.group[code].is_identity()) ++stray;
      }
    }
    bool blocks_ok = stray == 0 && frame.r == 1;
    cert.checks.push_back(
        {"aperiodic_blocks", "blocks outside {O_1, I_1}", Integer(stray), Integer(0), blocks_ok});
    if (!blocks_ok) {
      throw internal_error("bound_violation", "aperiodic grid has non-trivial blocks");
    }
  }
  return cert;
}

}  // namespace semiq::psi
