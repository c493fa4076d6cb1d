#ifndef SEMIQ_MATRIX_HPP
#define SEMIQ_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "semiq/rational.hpp"

namespace semiq {

// Dense matrix of rationals, immutable after construction, row-major.
// The entry-level canonical form makes operator== mathematical equality, so
// matrices serve directly as hash keys during closure enumeration.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0), hash_(0) {}
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  bool is_identity() const;

  QMatrix transpose() const;
  QMatrix column(std::size_t j) const;  // as rows x 1
  QMatrix row(std::size_t i) const;     // as 1 x cols

  // Largest bit length over all entries (see rational_bits).
  std::size_t max_entry_bits() const;

  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.hash_ == b.hash_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
  std::size_t hash_;

  void compute_hash();
};

struct QMatrixHash {
  std::size_t operator()(const QMatrix& m) const noexcept { return m.hash(); }
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, const QMatrix& m);

// Stack side by side / on top of each other.
QMatrix hcat(const QMatrix& a, const QMatrix& b);
QMatrix vcat(const QMatrix& a, const QMatrix& b);

// Test and construction conveniences.
QMatrix qmat(std::initializer_list<std::initializer_list<long long>> rows);
QMatrix qmat(std::initializer_list<std::initializer_list<const char*>> rows);
QMatrix column_vector(std::initializer_list<long long> values);
QMatrix unit_vector(std::size_t n, std::size_t index);

}  // namespace semiq

#endif  // SEMIQ_MATRIX_HPP
