#ifndef SEMIQ_LINALG_HPP
#define SEMIQ_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "semiq/matrix.hpp"

namespace semiq {

enum class Orientation { column, row };
enum class Side { left, right };

struct RrefResult {
  QMatrix matrix;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank = 0;
};

// Gauss-Jordan with first-nonzero pivoting (no magnitude pivoting; exact
// arithmetic needs none). Deterministic for canonical forms.
RrefResult reduced_row_echelon(const QMatrix& m);

std::size_t rank(const QMatrix& m);

// Subspace of Q^n in a canonical form: the basis is stored as the RREF of the
// spanning vectors written as rows, so two Subspace values compare equal
// exactly when they describe the same space. Column-oriented spaces store the
// RREF of the transposed spanning columns.
class Subspace {
 public:
  Subspace() : ambient_(0), orientation_(Orientation::column) {}

  static Subspace zero(std::size_t ambient, Orientation orientation);
  static Subspace full(std::size_t ambient, Orientation orientation);
  // Span of the columns (resp. rows) of m.
  static Subspace column_span(const QMatrix& m);
  static Subspace row_span(const QMatrix& m);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  Orientation orientation() const noexcept { return orientation_; }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }
  bool is_proper_nonzero() const noexcept { return dim() > 0 && dim() < ambient_; }

  // RREF basis, one basis vector per row (independent of orientation).
  const QMatrix& basis_rows() const noexcept { return basis_; }
  // Basis in natural shape: ambient x dim for column spaces (basis vectors as
  // columns), dim x ambient for row spaces.
  QMatrix basis_matrix() const;

  // Membership of a single vector: n x 1 for column spaces, 1 x n for row.
  bool contains(const QMatrix& vector) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.orientation_ == b.orientation_ &&
           a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  static Subspace from_spanning_rows(const QMatrix& rows, std::size_t ambient,
                                     Orientation orientation);

 private:
  std::size_t ambient_;
  Orientation orientation_;
  QMatrix basis_;  // RREF, full row rank

  friend Subspace subspace_sum(const Subspace&, const Subspace&);
  friend Subspace subspace_intersection(const Subspace&, const Subspace&);
  friend Subspace complement(const Subspace&);
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

// Complement obtained by greedily extending the RREF basis with standard unit
// vectors in index order; satisfies u (+) complement(u) = ambient space.
Subspace complement(const Subspace& u);

// Rows spanning { a : a v = 0 for every v in u } for a column space u
// (columns of the analogous functionals for a row space).
QMatrix annihilator(const Subspace& u);

Subspace kernel(const QMatrix& m);     // column space inside Q^{cols}
Subspace image(const QMatrix& m);      // column span
Subspace row_space(const QMatrix& m);  // row span

// Particular solution of A x = b with free variables set to zero, or nullopt
// when inconsistent. b may have several columns.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

// a * result = I (right) or result * a = I (left); requires full row rank
// (resp. column rank). RREF solve with free variables zero, deterministic.
QMatrix one_sided_inverse(const QMatrix& a, Side side);
QMatrix inverse(const QMatrix& a);

}  // namespace semiq

#endif  // SEMIQ_LINALG_HPP
