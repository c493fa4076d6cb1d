#include "semiq/linalg.hpp"

#include <utility>

#include "semiq/errors.hpp"

namespace semiq {

namespace {

// Workspace elimination over a raw entry grid; QMatrix values are built only
// for final results so intermediates are not hashed.
struct Work {
  std::size_t rows, cols;
  std::vector<Rational> e;

  explicit Work(const QMatrix& m) : rows(m.rows()), cols(m.cols()), e(m.entries()) {}
  Work(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, Rational(0)) {}

  Rational& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

  std::vector<std::size_t> reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && at(p, c) == 0) ++p;
      if (p == rows) continue;
      if (p != r) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
      }
      const Rational inv = Rational(1) / at(r, c);
      for (std::size_t j = c; j < cols; ++j) at(r, j) *= inv;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || at(i, c) == 0) continue;
        const Rational f = at(i, c);
        for (std::size_t j = c; j < cols; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  QMatrix top_rows(std::size_t k) const {
    std::vector<Rational> out(e.begin(), e.begin() + k * cols);
    return QMatrix(k, cols, std::move(out));
  }
};

}  // namespace

RrefResult reduced_row_echelon(const QMatrix& m) {
  Work w(m);
  auto pivots = w.reduce();
  RrefResult out;
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  out.matrix = QMatrix(w.rows, w.cols, std::move(w.e));
  return out;
}

std::size_t rank(const QMatrix& m) {
  Work w(m);
  return w.reduce().size();
}

Subspace Subspace::from_spanning_rows(const QMatrix& rows, std::size_t ambient,
                                      Orientation orientation) {
  Work w(rows);
  std::size_t r = w.reduce().size();
  Subspace s;
  s.ambient_ = ambient;
  s.orientation_ = orientation;
  s.basis_ = w.top_rows(r);
  return s;
}

Subspace Subspace::zero(std::size_t ambient, Orientation orientation) {
  Subspace s;
  s.ambient_ = ambient;
  s.orientation_ = orientation;
  s.basis_ = QMatrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient, Orientation orientation) {
  Subspace s;
  s.ambient_ = ambient;
  s.orientation_ = orientation;
  s.basis_ = QMatrix::identity(ambient);
  return s;
}

Subspace Subspace::column_span(const QMatrix& m) {
  return from_spanning_rows(m.transpose(), m.rows(), Orientation::column);
}

Subspace Subspace::row_span(const QMatrix& m) {
  return from_spanning_rows(m, m.cols(), Orientation::row);
}

QMatrix Subspace::basis_matrix() const {
  return orientation_ == Orientation::column ? basis_.transpose() : basis_;
}

bool Subspace::contains(const QMatrix& vector) const {
  std::vector<Rational> v;
  if (orientation_ == Orientation::column) {
    if (vector.cols() != 1 || vector.rows() != ambient_) {
      throw input_error("shape", "membership test expects an ambient-dim column vector");
    }
    v = vector.entries();
  } else {
    if (vector.rows() != 1 || vector.cols() != ambient_) {
      throw input_error("shape", "membership test expects an ambient-dim row vector");
    }
    v = vector.entries();
  }
  // Reduce against the RREF basis rows.
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t lead = 0;
    while (lead < ambient_ && basis_(i, lead) == 0) ++lead;
    if (lead == ambient_) continue;
    if (v[lead] != 0) {
      const Rational f = v[lead];
      for (std::size_t j = lead; j < ambient_; ++j) v[j] -= f * basis_(i, j);
    }
  }
  for (const Rational& x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_ || other.orientation_ != orientation_) {
    throw input_error("shape", "subspace comparison in different ambient spaces");
  }
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) {
    QMatrix v = other.basis_.row(i);
    if (orientation_ == Orientation::column) v = v.transpose();
    if (!contains(v)) return false;
  }
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.orientation_ != b.orientation_) {
    throw input_error("shape", "subspace sum in different ambient spaces");
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Subspace::from_spanning_rows(vcat(a.basis_, b.basis_), a.ambient_, a.orientation_);
}

QMatrix annihilator(const Subspace& u) {
  // Functionals vanishing on u = kernel vectors of basis_rows (as rows).
  Work w(u.basis_rows());
  auto pivots = w.reduce();
  std::size_t n = u.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Rational> rows;
  std::size_t count = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -w.at(i, f);
    rows.insert(rows.end(), v.begin(), v.end());
    ++count;
  }
  return QMatrix(count, n, std::move(rows));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.orientation_ != b.orientation_) {
    throw input_error("shape", "subspace intersection in different ambient spaces");
  }
  // v in a ∩ b iff both annihilators vanish on v.
  QMatrix stacked = vcat(annihilator(a), annihilator(b));
  Subspace k = kernel(stacked);  // column space of the right dimension
  Subspace out = Subspace::from_spanning_rows(k.basis_rows(), a.ambient_, a.orientation_);
  return out;
}

Subspace complement(const Subspace& u) {
  std::size_t n = u.ambient_dim();
  Subspace cur = u;
  std::vector<Rational> chosen;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n && cur.dim() < n; ++i) {
    QMatrix e = u.orientation() == Orientation::column ? unit_vector(n, i)
                                                       : unit_vector(n, i).transpose();
    if (cur.contains(e)) continue;
    Subspace line = u.orientation() == Orientation::column ? Subspace::column_span(e)
                                                           : Subspace::row_span(e);
    cur = subspace_sum(cur, line);
    std::vector<Rational> row(n, Rational(0));
    row[i] = 1;
    chosen.insert(chosen.end(), row.begin(), row.end());
    ++count;
  }
  return Subspace::from_spanning_rows(QMatrix(count, n, std::move(chosen)), n, u.orientation());
}

Subspace kernel(const QMatrix& m) {
  Work w(m);
  auto pivots = w.reduce();
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Rational> rows;
  std::size_t count = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -w.at(i, f);
    rows.insert(rows.end(), v.begin(), v.end());
    ++count;
  }
  return Subspace::from_spanning_rows(QMatrix(count, n, std::move(rows)), n,
                                      Orientation::column);
}

Subspace image(const QMatrix& m) { return Subspace::column_span(m); }

Subspace row_space(const QMatrix& m) { return Subspace::row_span(m); }

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw input_error("shape", "solve: row mismatch");
  Work w(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) w.at(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) w.at(i, a.cols() + j) = b(i, j);
  }
  auto pivots = w.reduce();
  for (std::size_t c : pivots) {
    if (c >= a.cols()) return std::nullopt;  // inconsistent system
  }
  std::vector<Rational> x(a.cols() * b.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x[pivots[i] * b.cols() + j] = w.at(i, a.cols() + j);
    }
  }
  return QMatrix(a.cols(), b.cols(), std::move(x));
}

QMatrix one_sided_inverse(const QMatrix& a, Side side) {
  if (side == Side::right) {
    if (rank(a) != a.rows()) {
      throw input_error("no_inverse", "matrix does not have full row rank");
    }
    auto x = solve(a, QMatrix::identity(a.rows()));
    if (!x) throw internal_error("no_inverse", "right inverse solve failed unexpectedly");
#ifndef NDEBUG
    if (a * *x != QMatrix::identity(a.rows())) {
      throw internal_error("no_inverse", "right inverse postcondition failed");
    }
#endif
    return *x;
  }
  QMatrix t = a.transpose();
  if (rank(t) != t.rows()) {
    throw input_error("no_inverse", "matrix does not have full column rank");
  }
  auto x = solve(t, QMatrix::identity(t.rows()));
  if (!x) throw internal_error("no_inverse", "left inverse solve failed unexpectedly");
#ifndef NDEBUG
  if (x->transpose() * a != QMatrix::identity(a.cols())) {
    throw internal_error("no_inverse", "left inverse postcondition failed");
  }
#endif
  return x->transpose();
}

QMatrix inverse(const QMatrix& a) {
  if (!a.is_square()) throw input_error("shape", "inverse of a non-square matrix");
  return one_sided_inverse(a, Side::right);
}

}  // namespace semiq
