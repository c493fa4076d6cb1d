#include "semiq/structure.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "semiq/errors.hpp"

namespace semiq {

namespace {

// Exhaustive pairwise verification caps; structures past these sizes rely on
// the rank-constancy check alone.
constexpr std::size_t kIdealVerifyCap = 1024;
constexpr std::size_t kGroupVerifyCap = 512;

bool all_zero(const Closure& c) {
  for (const QMatrix& m : c.elements()) {
    if (!m.is_zero()) return false;
  }
  return true;
}

}  // namespace

bool IdealStructure::contains(std::uint32_t index) const {
  return std::binary_search(ideal.begin(), ideal.end(), index);
}

Subspace orbit_span(const GeneratorSet& gens, const QMatrix& v) {
  if (v.cols() != 1 || v.rows() != gens.dim) {
    throw input_error("shape", "orbit_span expects a dim x 1 column vector");
  }
  Subspace span = Subspace::column_span(v);
  if (span.is_zero()) return span;
  std::vector<QMatrix> worklist = {v};
  while (!worklist.empty() && !span.is_full()) {
    QMatrix w = std::move(worklist.back());
    worklist.pop_back();
    for (const QMatrix& g : gens.generators) {
      QMatrix u = g * w;
      if (!span.contains(u)) {
        span = subspace_sum(span, Subspace::column_span(u));
        worklist.push_back(std::move(u));
        if (span.is_full()) break;
      }
    }
  }
  return span;
}

Subspace orbit_span(const Closure& c, const QMatrix& v) {
  return orbit_span(c.generators(), v);
}

std::optional<Subspace> invariant_subspace_scan(const GeneratorSet& gens, ScanMode mode) {
  const std::size_t n = gens.dim;
  std::vector<QMatrix> candidates;
  std::unordered_set<QMatrix, QMatrixHash> seen;
  auto push = [&](QMatrix v) {
    if (!v.is_zero() && seen.insert(v).second) candidates.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < n; ++i) push(unit_vector(n, i));
  for (const QMatrix& g : gens.generators) {
    for (std::size_t j = 0; j < n; ++j) push(g.column(j));
  }
  std::optional<Subspace> best;
  for (const QMatrix& v : candidates) {
    Subspace s = orbit_span(gens, v);
    if (!s.is_proper_nonzero()) continue;
    if (!best || s.dim() < best->dim()) best = s;
    if (mode == ScanMode::first || best->dim() == 1) break;
  }
  if (best) {
    // Invariance is structural (orbit spans are invariant by construction);
    // re-check to catch implementation faults.
    for (const QMatrix& g : gens.generators) {
      for (std::size_t i = 0; i < best->dim(); ++i) {
        QMatrix b = best->basis_rows().row(i).transpose();
        if (!best->contains(g * b)) {
          throw internal_error("not_invariant", "orbit span is not invariant");
        }
      }
    }
  }
  return best;
}

IrreducibilityReport is_irreducible(const Closure& c) {
  if (c.size() == 0 || all_zero(c)) {
    throw input_error("empty_closure", "irreducibility needs a nonzero closure");
  }
  IrreducibilityReport report;
  report.side = Orientation::column;
  auto witness = invariant_subspace_scan(c.generators());
  if (witness) {
    report.irreducible = false;
    report.witness = std::move(witness);
  } else {
    report.irreducible = true;
  }
  return report;
}

namespace {

// Saturates {start} under left and right multiplication by the generators;
// the result is S^1 start S^1 as element indices.
std::vector<std::uint32_t> two_sided_ideal(const Closure& c, std::uint32_t start) {
  std::vector<bool> seen(c.size(), false);
  std::vector<std::uint32_t> queue = {start};
  seen[start] = true;
  const auto& gens = c.generators().generators;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::uint32_t e = queue[q];
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
      std::uint32_t right = c.successor(e, g);
      if (!seen[right]) {
        seen[right] = true;
        queue.push_back(right);
      }
      auto left = c.find(gens[g] * c.element(e));
      if (!left) throw internal_error("not_closed", "closure is not product-closed");
      if (!seen[*left]) {
        seen[*left] = true;
        queue.push_back(*left);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// S^1 start S^1 with the zero element adjoined whenever S contains it; every
// ideal of a semigroup with zero contains zero.
std::vector<std::uint32_t> ideal_with_zero(const Closure& c, std::uint32_t start) {
  std::vector<std::uint32_t> t = two_sided_ideal(c, start);
  if (c.zero_index() && !std::binary_search(t.begin(), t.end(), *c.zero_index())) {
    t.insert(std::lower_bound(t.begin(), t.end(), *c.zero_index()), *c.zero_index());
  }
  return t;
}

}  // namespace

IdealStructure minimal_ideal(const Closure& c) {
  if (c.size() == 0 || all_zero(c)) {
    throw input_error("empty_closure", "minimal ideal needs a nonzero closure");
  }
  MinRankElements ranks = min_rank_elements(c);
  std::uint32_t pick = ranks.indices.front();
  if (ranks.min_rank == 0) {
    // Zero is the unique rank-0 matrix; the 0-minimal ideal goes through the
    // smallest-index element of minimal nonzero rank.
    std::size_t best = c.dim() + 1;
    pick = 0;
    bool found = false;
    for (std::uint32_t i = 0; i < c.size(); ++i) {
      std::size_t r = rank(c.element(i));
      if (r > 0 && r < best) {
        best = r;
        pick = i;
        found = true;
      }
    }
    if (!found) throw input_error("empty_closure", "no nonzero element");
  }

  IdealStructure out;
  for (;;) {
    std::vector<std::uint32_t> t = ideal_with_zero(c, pick);
    // (0-)minimality: every nonzero element of T must generate T back.
    std::optional<std::uint32_t> smaller;
    if (t.size() <= kIdealVerifyCap) {
      for (std::uint32_t y : t) {
        if (c.element(y).is_zero() || y == pick) continue;
        std::vector<std::uint32_t> ty = ideal_with_zero(c, y);
        if (ty.size() < t.size()) {
          smaller = y;
          break;
        }
      }
    }
    if (!smaller) {
      out.ideal = std::move(t);
      break;
    }
    pick = *smaller;
  }

  // Common nonzero rank (Lemma same-rank holds for irreducible S; reducible
  // inputs may genuinely violate it, which minimal-rank selection reports).
  out.rank = 0;
  for (std::uint32_t i : out.ideal) {
    if (c.element(i).is_zero()) continue;
    std::size_t r = rank(c.element(i));
    if (out.rank == 0) out.rank = r;
  }

  // T^2 != {O_n} check (fails only for reducible inputs, e.g. nilpotents).
  out.t2_nonzero = false;
  for (std::uint32_t a : out.ideal) {
    if (c.element(a).is_zero()) continue;
    for (std::uint32_t b : out.ideal) {
      if (c.element(b).is_zero()) continue;
      if (!(c.element(a) * c.element(b)).is_zero()) {
        out.t2_nonzero = true;
        break;
      }
    }
    if (out.t2_nonzero) break;
  }
  return out;
}

PowerProfile power_profile(const QMatrix& x) {
  std::unordered_map<QMatrix, std::uint32_t, QMatrixHash> seen;
  QMatrix cur = x;
  std::uint32_t k = 1;
  for (;;) {
    auto it = seen.find(cur);
    if (it != seen.end()) {
      return PowerProfile{it->second, k - it->second};
    }
    seen.emplace(cur, k);
    cur = cur * x;
    ++k;
  }
}

QMatrix find_idempotent(const Closure& c, const IdealStructure& t) {
  for (std::uint32_t i : t.ideal) {
    const QMatrix& z = c.element(i);
    if (z.is_zero()) continue;
    PowerProfile p = power_profile(z);
    // The unique idempotent power: exponent m >= index with m = 0 mod period.
    std::uint32_t m = ((p.index + p.period - 1) / p.period) * p.period;
    QMatrix e = z;
    for (std::uint32_t k = 1; k < m; ++k) e = e * z;
    if (e.is_zero()) continue;
    if (e * e != e) throw internal_error("not_idempotent", "power search failed");
    return e;
  }
  throw input_error("no_nonzero_idempotent",
                    "every ideal element powers to zero (reducible input)");
}

std::pair<QMatrix, QMatrix> factor_idempotent(const QMatrix& e) {
  if (!e.is_square() || e.is_zero() || e * e != e) {
    throw input_error("not_idempotent", "factor_idempotent expects a nonzero idempotent");
  }
  const std::size_t n = e.rows();
  const std::size_t r = rank(e);

  // Leftmost independent columns of E form a basis of im E.
  Subspace span = Subspace::zero(n, Orientation::column);
  QMatrix embed(n, 0);
  for (std::size_t j = 0; j < n && span.dim() < r; ++j) {
    QMatrix col = e.column(j);
    if (span.contains(col)) continue;
    span = subspace_sum(span, Subspace::column_span(col));
    embed = embed.cols() == 0 ? col : hcat(embed, col);
  }

  QMatrix w = kernel(e).basis_matrix();  // n x (n-r)
  QMatrix q = w.cols() == 0 ? embed : hcat(embed, w);
  QMatrix q_inv = inverse(q);
  std::vector<Rational> top;
  top.reserve(r * n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) top.push_back(q_inv(i, j));
  }
  QMatrix compress(r, n, std::move(top));

  if (embed * compress != e || compress * embed != QMatrix::identity(r)) {
    throw internal_error("factorization", "idempotent factorization failed its contract");
  }
  return {compress, embed};
}

std::vector<QMatrix> maximal_group(const Closure& c, const QMatrix& compress,
                                   const QMatrix& embed) {
  const std::size_t r = compress.rows();
  if (compress * embed != QMatrix::identity(r)) {
    throw input_error("bad_factorization", "maximal_group expects compress * embed = I_r");
  }
  std::vector<QMatrix> group;
  std::unordered_set<QMatrix, QMatrixHash> seen;
  for (const QMatrix& x : c.elements()) {
    QMatrix g = compress * x * embed;
    if (g.is_zero()) continue;
    if (seen.insert(g).second) group.push_back(std::move(g));
  }

  std::unordered_set<QMatrix, QMatrixHash> members(group.begin(), group.end());
  if (!members.count(QMatrix::identity(r))) {
    throw internal_error("group_axiom_failure", "identity missing from the group");
  }
  const bool full_check = group.size() <= kGroupVerifyCap;
  for (const QMatrix& g : group) {
    if (rank(g) != r) {
      throw internal_error("group_axiom_failure", "singular matrix in the group");
    }
    if (!members.count(inverse(g))) {
      throw internal_error("group_axiom_failure", "inverse missing from the group");
    }
    if (full_check) {
      for (const QMatrix& h : group) {
        if (!members.count(g * h)) {
          throw internal_error("group_axiom_failure", "group is not product-closed");
        }
      }
    }
  }

  // phi(X) = compress*X*embed must be a bijection from E S E \ {0} onto G.
  const QMatrix e = embed * compress;
  std::unordered_set<QMatrix, QMatrixHash> ese;
  for (const QMatrix& x : c.elements()) {
    QMatrix y = e * x * e;
    if (!y.is_zero()) ese.insert(std::move(y));
  }
  if (ese.size() != group.size()) {
    throw internal_error("group_axiom_failure",
                         "E S E \\ {0} and the group have different sizes");
  }
  std::unordered_set<QMatrix, QMatrixHash> image;
  for (const QMatrix& y : ese) {
    QMatrix g = compress * y * embed;
    if (!members.count(g)) {
      throw internal_error("group_axiom_failure", "phi image leaves the group");
    }
    image.insert(std::move(g));
  }
  if (image.size() != ese.size()) {
    throw internal_error("group_axiom_failure", "phi is not injective on E S E \\ {0}");
  }
  return group;
}

AperiodicityReport is_aperiodic(const Closure& c) {
  AperiodicityReport report;
  report.profiles.reserve(c.size());
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    PowerProfile p = power_profile(c.element(i));
    if (p.period != 1 && report.aperiodic) {
      report.aperiodic = false;
      report.witness = i;
    }
    report.profiles.push_back(p);
  }
  return report;
}

BlockTriangularization block_triangularize(const GeneratorSet& gens,
                                           const Subspace& invariant) {
  if (invariant.orientation() != Orientation::column || !invariant.is_proper_nonzero() ||
      invariant.ambient_dim() != gens.dim) {
    throw input_error("bad_subspace",
                      "block triangularization needs a proper nonzero column subspace");
  }
  const std::size_t n = gens.dim;
  const std::size_t d = invariant.dim();
  QMatrix basis = hcat(invariant.basis_matrix(), complement(invariant).basis_matrix());
  QMatrix basis_inv = inverse(basis);

  BlockTriangularization out;
  out.basis = basis;
  for (const QMatrix& x : gens.generators) {
    QMatrix y = basis_inv * x * basis;
    std::vector<Rational> m1, m2, nd;
    for (std::size_t i = d; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (y(i, j) != 0) {
          throw input_error("not_invariant",
                            "subspace is not invariant under every generator");
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m1.push_back(y(i, j));
      for (std::size_t j = d; j < n; ++j) nd.push_back(y(i, j));
    }
    for (std::size_t i = d; i < n; ++i) {
      for (std::size_t j = d; j < n; ++j) m2.push_back(y(i, j));
    }
    out.block1.emplace_back(d, d, std::move(m1));
    out.block2.emplace_back(n - d, n - d, std::move(m2));
    out.offdiag.emplace_back(d, n - d, std::move(nd));
  }
  return out;
}

BlockTriangularization block_triangularize(const Closure& c, const Subspace& invariant) {
  return block_triangularize(c.generators(), invariant);
}

StructureReport analyze_structure(const Closure& c) {
  StructureReport report;
  report.irreducibility = is_irreducible(c);
  report.aperiodicity = is_aperiodic(c);
  report.ideal = minimal_ideal(c);
  try {
    report.ideal.idempotent = find_idempotent(c, report.ideal);
    auto [compress, embed] = factor_idempotent(report.ideal.idempotent);
    report.ideal.compress = compress;
    report.ideal.embed = embed;
    report.ideal.group = maximal_group(c, compress, embed);
    report.group_available = true;
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::internal) throw;
    report.group_available = false;
    report.group_failure = err.code();
  }
  return report;
}

}  // namespace semiq
