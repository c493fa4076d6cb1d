#include "semiq/matrix.hpp"

#include <sstream>

#include "semiq/errors.hpp"

namespace semiq {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
  compute_hash();
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw input_error("shape", "entry count does not match matrix shape");
  }
  compute_hash();
}

void QMatrix::compute_hash() {
  std::size_t h = 0xcbf29ce484222325ULL ^ (rows_ * 1000003 + cols_);
  for (const Rational& x : entries_) {
    h ^= rational_hash(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  hash_ = h;
}

QMatrix QMatrix::identity(std::size_t n) {
  std::vector<Rational> e(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return QMatrix(n, n, std::move(e));
}

bool QMatrix::is_zero() const {
  for (const Rational& x : entries_) {
    if (x != 0) return false;
  }
  return true;
}

bool QMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

QMatrix QMatrix::transpose() const {
  std::vector<Rational> e(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = (*this)(i, j);
  }
  return QMatrix(cols_, rows_, std::move(e));
}

QMatrix QMatrix::column(std::size_t j) const {
  std::vector<Rational> e(rows_);
  for (std::size_t i = 0; i < rows_; ++i) e[i] = (*this)(i, j);
  return QMatrix(rows_, 1, std::move(e));
}

QMatrix QMatrix::row(std::size_t i) const {
  std::vector<Rational> e(cols_);
  for (std::size_t j = 0; j < cols_; ++j) e[j] = (*this)(i, j);
  return QMatrix(1, cols_, std::move(e));
}

std::size_t QMatrix::max_entry_bits() const {
  std::size_t out = 1;
  for (const Rational& x : entries_) {
    std::size_t b = rational_bits(x);
    if (b > out) out = b;
  }
  return out;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) {
      os << (j ? " " : "") << rational_to_string((*this)(i, j));
    }
  }
  os << "]";
  return os.str();
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw input_error("shape", "cannot multiply " + std::to_string(a.rows()) + "x" +
                                   std::to_string(a.cols()) + " by " +
                                   std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  std::vector<Rational> e(a.rows() * b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (bkj != 0) e[i * b.cols() + j] += aik * bkj;
      }
    }
  }
  return QMatrix(a.rows(), b.cols(), std::move(e));
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw input_error("shape", "mismatched shapes in matrix addition");
  }
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return QMatrix(a.rows(), a.cols(), std::move(e));
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw input_error("shape", "mismatched shapes in matrix subtraction");
  }
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries()[i];
  return QMatrix(a.rows(), a.cols(), std::move(e));
}

QMatrix operator*(const Rational& s, const QMatrix& m) {
  std::vector<Rational> e(m.entries());
  for (Rational& x : e) x *= s;
  return QMatrix(m.rows(), m.cols(), std::move(e));
}

QMatrix hcat(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw input_error("shape", "hcat row mismatch");
  std::vector<Rational> e;
  e.reserve(a.rows() * (a.cols() + b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) e.push_back(a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) e.push_back(b(i, j));
  }
  return QMatrix(a.rows(), a.cols() + b.cols(), std::move(e));
}

QMatrix vcat(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.cols()) throw input_error("shape", "vcat column mismatch");
  std::vector<Rational> e(a.entries());
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return QMatrix(a.rows() + b.rows(), a.cols(), std::move(e));
}

QMatrix qmat(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Rational> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw input_error("shape", "ragged rows in matrix literal");
    for (long long v : row) e.emplace_back(v);
  }
  return QMatrix(r, c, std::move(e));
}

QMatrix qmat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Rational> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw input_error("shape", "ragged rows in matrix literal");
    for (const char* v : row) e.push_back(parse_rational(v));
  }
  return QMatrix(r, c, std::move(e));
}

QMatrix column_vector(std::initializer_list<long long> values) {
  std::vector<Rational> e;
  e.reserve(values.size());
  for (long long v : values) e.emplace_back(v);
  return QMatrix(values.size(), 1, std::move(e));
}

QMatrix unit_vector(std::size_t n, std::size_t index) {
  std::vector<Rational> e(n, Rational(0));
  e[index] = 1;
  return QMatrix(n, 1, std::move(e));
}

}  // namespace semiq
