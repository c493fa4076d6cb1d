#include "semiq/constructions.hpp"

#include <algorithm>
#include <unordered_set>

#include "semiq/errors.hpp"
#include "semiq/structure.hpp"

namespace semiq {

namespace {

std::vector<QMatrix> enumerate_signed_perms(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<QMatrix> out;
  do {
    for (std::size_t bits = 0; bits < (static_cast<std::size_t>(1) << n); ++bits) {
      std::vector<Rational> e(n * n, Rational(0));
      for (std::size_t i = 0; i < n; ++i) {
        e[i * n + perm[i]] = (bits >> i) & 1 ? -1 : 1;
      }
      out.emplace_back(n, n, std::move(e));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

GeneratorSet example1_semigroup() {
  const QMatrix c1 = qmat({{1, 0, 0}, {0, 1, 0}});
  const QMatrix c2 = qmat({{0, 1, 0}, {0, 0, 1}});
  const QMatrix d1 = qmat({{1, 0}, {0, 1}, {1, 0}});
  const QMatrix d2 = qmat({{0, 1}, {1, 0}, {0, -1}});
  std::vector<QMatrix> group = enumerate_signed_perms(2);

  GeneratorSet gens;
  gens.dim = 3;
  std::unordered_set<QMatrix, QMatrixHash> seen;
  for (const QMatrix& d : {d1, d2}) {
    for (const QMatrix& c : {c1, c2}) {
      for (const QMatrix& g : group) {
        QMatrix x = d * g * c;
        if (seen.insert(x).second) gens.generators.push_back(std::move(x));
      }
    }
  }
  if (gens.generators.size() != 32) {
    throw internal_error("construction", "the D_i g C_j family must have 32 elements");
  }
  return gens;
}

LowerBoundFamily::LowerBoundFamily(std::size_t n, bool signed_entries)
    : n_(n), p_(n / 2), q_(n - n / 2), signed_(signed_entries) {
  if (n < 2) throw input_error("bad_n", "the support families need n >= 2");

  std::vector<Rational> values = {Rational(0), Rational(1)};
  if (signed_) values.push_back(Rational(-1));

  std::unordered_set<QMatrix, QMatrixHash> seen;
  auto add = [&](QMatrix m) {
    if (seen.insert(m).second) elements_.push_back(std::move(m));
  };

  // NE: every assignment over the p x q north-east block.
  {
    const std::size_t cells = p_ * q_;
    std::vector<std::size_t> digit(cells, 0);
    for (;;) {
      std::vector<Rational> e(n * n, Rational(0));
      for (std::size_t k = 0; k < cells; ++k) {
        std::size_t i = k / q_;
        std::size_t j = p_ + (k % q_);
        e[i * n + j] = values[digit[k]];
      }
      add(QMatrix(n, n, std::move(e)));
      ++ne_count_;
      std::size_t pos = 0;
      while (pos < cells && ++digit[pos] == values.size()) digit[pos++] = 0;
      if (pos == cells) break;
    }
  }
  // COL: one north-west column b, all assignments over rows P.
  for (std::size_t b = 0; b < p_; ++b) {
    std::vector<std::size_t> digit(p_, 0);
    for (;;) {
      std::vector<Rational> e(n * n, Rational(0));
      for (std::size_t i = 0; i < p_; ++i) e[i * n + b] = values[digit[i]];
      add(QMatrix(n, n, std::move(e)));
      std::size_t pos = 0;
      while (pos < p_ && ++digit[pos] == values.size()) digit[pos++] = 0;
      if (pos == p_) break;
    }
  }
  // ROW: one south-east row a, all assignments over columns Q.
  for (std::size_t a = p_; a < n_; ++a) {
    std::vector<std::size_t> digit(q_, 0);
    for (;;) {
      std::vector<Rational> e(n * n, Rational(0));
      for (std::size_t j = 0; j < q_; ++j) e[a * n + p_ + j] = values[digit[j]];
      add(QMatrix(n, n, std::move(e)));
      std::size_t pos = 0;
      while (pos < q_ && ++digit[pos] == values.size()) digit[pos++] = 0;
      if (pos == q_) break;
    }
  }
  // UNIT: signed matrix units and zero.
  add(QMatrix::zero(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> e(n * n, Rational(0));
      e[i * n + j] = 1;
      add(QMatrix(n, n, e));
      if (signed_) {
        e[i * n + j] = -1;
        add(QMatrix(n, n, std::move(e)));
      }
    }
  }
}

GeneratorSet LowerBoundFamily::generators() const {
  GeneratorSet gens;
  gens.dim = n_;
  gens.generators = elements_;
  return gens;
}

namespace {

bool entries_in_range(const QMatrix& m, bool signed_entries) {
  for (const Rational& x : m.entries()) {
    if (x == 0 || x == 1) continue;
    if (signed_entries && x == -1) continue;
    return false;
  }
  return true;
}

}  // namespace

bool LowerBoundFamily::in_ne(const QMatrix& m) const {
  if (!entries_in_range(m, signed_)) return false;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (m(i, j) != 0 && !(i < p_ && j >= p_)) return false;
    }
  }
  return true;
}

bool LowerBoundFamily::in_col(const QMatrix& m) const {
  if (!entries_in_range(m, signed_)) return false;
  std::optional<std::size_t> col;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (m(i, j) == 0) continue;
      if (i >= p_ || j >= p_) return false;
      if (col && *col != j) return false;
      col = j;
    }
  }
  return true;
}

bool LowerBoundFamily::in_row(const QMatrix& m) const {
  if (!entries_in_range(m, signed_)) return false;
  std::optional<std::size_t> row;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (m(i, j) == 0) continue;
      if (i < p_ || j < p_) return false;
      if (row && *row != i) return false;
      row = i;
    }
  }
  return true;
}

bool LowerBoundFamily::in_unit(const QMatrix& m) const {
  if (!entries_in_range(m, signed_)) return false;
  std::size_t support = 0;
  for (const Rational& x : m.entries()) {
    if (x != 0) ++support;
  }
  return support <= 1;
}

void LowerBoundFamily::verify_multiplication_table() const {
  enum Family { NE = 0, COL = 1, ROW = 2, UNIT = 3 };
  auto families_of = [&](const QMatrix& m) {
    std::vector<Family> fams;
    if (in_ne(m)) fams.push_back(NE);
    if (in_col(m)) fams.push_back(COL);
    if (in_row(m)) fams.push_back(ROW);
    if (in_unit(m)) fams.push_back(UNIT);
    return fams;
  };
  // Table cell (f1, f2) -> admissible result families; empty means {O_n}.
  const std::vector<std::vector<std::vector<Family>>> table = {
      /* NE   */ {{}, {}, {NE}, {NE, COL}},
      /* COL  */ {{NE}, {COL}, {}, {COL, NE}},
      /* ROW  */ {{}, {}, {ROW}, {UNIT}},
      /* UNIT */ {{NE, ROW}, {UNIT}, {NE, ROW}, {UNIT}},
  };
  for (const QMatrix& x : elements_) {
    auto fx = families_of(x);
    if (fx.empty()) throw internal_error("family_table", "element outside every family");
    for (const QMatrix& y : elements_) {
      auto fy = families_of(y);
      QMatrix prod = x * y;
      if (!entries_in_range(prod, signed_)) {
        throw internal_error("family_table", "product entries leave {-1,0,1}");
      }
      auto in_family = [&](Family f) {
        switch (f) {
          case NE: return in_ne(prod);
          case COL: return in_col(prod);
          case ROW: return in_row(prod);
          case UNIT: return in_unit(prod);
        }
        return false;
      };
      bool ok = false;
      for (Family f1 : fx) {
        for (Family f2 : fy) {
          const auto& allowed = table[f1][f2];
          if (allowed.empty()) {
            if (prod.is_zero()) ok = true;
          } else {
            for (Family f : allowed) {
              if (in_family(f)) ok = true;
            }
          }
        }
      }
      if (!ok) {
        throw internal_error("family_table", "product violates the multiplication table");
      }
    }
  }
}

LowerBoundFamily lower_bound_family(std::size_t n, bool signed_entries) {
  if (signed_entries && n >= 6) {
    throw input_error("size_cap", "signed support families are capped at n <= 5");
  }
  if (!signed_entries && n >= 8) {
    throw input_error("size_cap", "nonnegative support families are capped at n <= 7");
  }
  LowerBoundFamily family(n, signed_entries);
  // The table check confirms every pairwise product lands back in a family,
  // so the element set is product-closed.
  family.verify_multiplication_table();
  if (invariant_subspace_scan(family.generators())) {
    throw internal_error("family_table", "support family must be irreducible");
  }
  if (!signed_entries) {
    for (const QMatrix& x : family.elements()) {
      if (power_profile(x).period != 1) {
        throw internal_error("family_table", "nonnegative support family must be aperiodic");
      }
    }
  }
  return family;
}

GroupReport signed_permutation_group(std::size_t n) {
  if (n < 1) throw input_error("bad_n", "signed permutation group needs n >= 1");
  if (n > 6) throw input_error("size_cap", "signed permutation enumeration is capped at n <= 6");
  GroupReport report;
  report.elements = enumerate_signed_perms(n);
  report.order = Integer(report.elements.size());
  Integer factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) factorial *= k;
  report.folklore_order = integer_pow(2, static_cast<unsigned long>(n)) * factorial;
  report.bound = integer_pow(3, static_cast<unsigned long>(n * n)) - 1;
  if (report.order != report.folklore_order) {
    throw internal_error("construction", "signed permutation enumeration has wrong order");
  }
  return report;
}

GeneratorSet s_m_family(std::size_t m) {
  if (m < 1) throw input_error("bad_m", "the S_m family needs m >= 1");
  GeneratorSet gens;
  gens.dim = 2;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> e = {Rational(0), Rational(i), Rational(0), Rational(0)};
    gens.generators.emplace_back(2, 2, std::move(e));
  }
  return gens;
}

GroupReport mod3_reduction_check(const std::vector<QMatrix>& group) {
  if (group.empty()) throw input_error("empty_group", "mod-3 check needs elements");
  const std::size_t n = group.front().rows();
  GroupReport report;
  report.elements = group;
  report.order = Integer(group.size());
  Integer factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) factorial *= k;
  report.folklore_order = integer_pow(2, static_cast<unsigned long>(n)) * factorial;
  report.bound = integer_pow(3, static_cast<unsigned long>(n * n)) - 1;

  std::unordered_set<QMatrix, QMatrixHash> residues;
  for (const QMatrix& g : group) {
    if (g.rows() != n || g.cols() != n) {
      throw input_error("shape", "group elements must share one square shape");
    }
    std::vector<Rational> res(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
      const Rational& x = g.entries()[k];
      if (denominator(x) != 1) {
        throw input_error("non_integer_entries", "mod-3 reduction needs integer entries");
      }
      Integer value = numerator(x) % 3;
      if (value < 0) value += 3;
      res[k] = Rational(value);
    }
    residues.insert(QMatrix(n, n, std::move(res)));
  }
  report.mod3_injective = residues.size() == group.size();
  if (report.order > report.bound) {
    throw internal_error("bound_violation",
                         "finite rational matrix group larger than 3^(n^2)-1");
  }
  return report;
}

}  // namespace semiq
