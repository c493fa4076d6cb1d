#ifndef SEMIQ_CONSTRUCTIONS_HPP
#define SEMIQ_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "semiq/closure.hpp"
#include "semiq/matrix.hpp"

namespace semiq {

// The 32-element simple semigroup {D_i g C_j} over the signed 2x2 permutation
// group; its closure equals itself. Generator order: i, then j, then the
// group in enumeration order (identity first), so the very first generator is
// the idempotent D_1 C_1.
GeneratorSet example1_semigroup();

// Support families of the extremal construction: matrices over {-1,0,1}
// supported on the north-east block, on one north-west column, on one
// south-east row, or on at most one cell.
class LowerBoundFamily {
 public:
  LowerBoundFamily(std::size_t n, bool signed_entries);

  std::size_t n() const noexcept { return n_; }
  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  bool is_signed() const noexcept { return signed_; }

  const std::vector<QMatrix>& elements() const noexcept { return elements_; }
  GeneratorSet generators() const;

  bool in_ne(const QMatrix& m) const;
  bool in_col(const QMatrix& m) const;
  bool in_row(const QMatrix& m) const;
  bool in_unit(const QMatrix& m) const;

  std::size_t ne_count() const noexcept { return ne_count_; }

  // Checks every pairwise product against the family multiplication table and
  // that product entries never leave {-1,0,1}; throws on violation.
  void verify_multiplication_table() const;

 private:
  std::size_t n_, p_, q_;
  bool signed_;
  std::vector<QMatrix> elements_;
  std::size_t ne_count_ = 0;
};

// Enumerates the family, verifies the multiplication table, and (via the
// structure module) irreducibility, plus aperiodicity for the nonnegative
// variant. Rejects signed inputs with n >= 6 (size cap).
LowerBoundFamily lower_bound_family(std::size_t n, bool signed_entries);

struct GroupReport {
  std::vector<QMatrix> elements;
  Integer order;
  std::optional<bool> mod3_injective;
  Integer bound;           // 3^{n^2} - 1
  Integer folklore_order;  // 2^n n!, reference value only
};

// All matrices with one entry from {-1,1} per row and column; enumeration
// order: permutations lexicographically, sign patterns in binary order, so
// the identity comes first.
GroupReport signed_permutation_group(std::size_t n);

// The m matrices [[0,i],[0,0]], 0 <= i < m; all pairwise products are zero.
GeneratorSet s_m_family(std::size_t m);

// Reduces an integer matrix group mod 3 and reports injectivity of the
// reduction together with the 3^{n^2}-1 order bound. non_integer_entries when
// some entry is not an integer.
GroupReport mod3_reduction_check(const std::vector<QMatrix>& group);

}  // namespace semiq

#endif  // SEMIQ_CONSTRUCTIONS_HPP
