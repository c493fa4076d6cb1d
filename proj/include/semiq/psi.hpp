#ifndef SEMIQ_PSI_HPP
#define SEMIQ_PSI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "semiq/closure.hpp"
#include "semiq/linalg.hpp"
#include "semiq/structure.hpp"

namespace semiq::psi {

// The data behind the injective grid map: factors U_i, V_j from S^1 whose
// compressed row spaces / embedded column images exhaust Q^n, the strictly
// increasing span chains with their heights/widths, and per block column the
// overlap space L_b with its coupling group H_b <= G.
struct Frame {
  std::size_t n = 0, r = 0, u = 0, v = 0;

  std::vector<QMatrix> row_factors;  // U_1..U_u
  std::vector<QMatrix> col_factors;  // V_1..V_v
  // Provenance: closure element index, or nullopt for the formal identity.
  std::vector<std::optional<std::uint32_t>> row_factor_elements;
  std::vector<std::optional<std::uint32_t>> col_factor_elements;

  std::vector<Subspace> row_chain;  // U_0 .. U_u (row spaces)
  std::vector<Subspace> col_chain;  // V_0 .. V_v (column spaces)
  std::vector<std::size_t> heights;  // h_1..h_u
  std::vector<std::size_t> widths;   // w_1..w_v

  std::vector<Subspace> overlaps;        // L_1..L_v, column subspaces of Q^r
  std::vector<std::size_t> overlap_dims; // l_1..l_v
  std::vector<std::vector<QMatrix>> coupling_groups;  // H_1..H_v

  QMatrix compress;  // C
  QMatrix embed;     // D
  std::vector<QMatrix> group;  // G, shared with the ideal structure

  std::vector<QMatrix> row_maps;  // C * U_i, r x n
  std::vector<QMatrix> col_maps;  // V_j * D, n x r

  std::size_t cells() const noexcept { return u * v; }
};

// Scans S^1 (identity first, then discovery order), keeping factors whose
// contribution strictly enlarges the span chain; span_incomplete when a chain
// stalls below full dimension (reducible input). Verifies the frame
// arithmetic: h_1 = w_1 = r, sums equal n, rk(V_j D) = r, w_b = r - l_b.
Frame select_sequences(const Closure& c, const IdealStructure& ideal);

// Group elements of G addressed by dense codes; code -1 encodes the zero
// block in grids.
struct GroupIndex {
  std::vector<QMatrix> elements;
  std::unordered_map<QMatrix, std::int32_t, QMatrixHash> code_of;
  std::vector<std::int32_t> inverse_code;
  std::int32_t identity_code = -1;

  static GroupIndex build(const std::vector<QMatrix>& group);
  std::optional<std::int32_t> code(const QMatrix& m) const;
};

// Blocks compress*U_i*X*V_j*embed of one element, row-major.
std::vector<QMatrix> element_grid(const Frame& frame, const QMatrix& x);

// Coded grids of every element (parallel over elements, deterministic
// layout); block_not_in_group if some block is neither zero nor in G.
struct GridSet {
  std::size_t u = 0, v = 0;
  std::vector<std::vector<std::int32_t>> codes;  // [element][cell]
};
GridSet all_grids(const Frame& frame, const Closure& c, const GroupIndex& gi);

struct Injectivity {
  bool ok = false;
  QMatrix left_reconstruction;   // U' with U' * stacked = I_n
  QMatrix right_reconstruction;  // V' with concat * V' = I_n
};

// Reconstructs every element from its grid via the one-sided inverses and
// checks the grids are pairwise distinct; injectivity_failure on a collision.
Injectivity verify_injectivity(const Frame& frame, const Closure& c, const GroupIndex& gi,
                               const GridSet& grids);

// Theta maps expressing V_b D on the overlap space through earlier columns:
// V_b D y = sum_j V_j D Theta_j(V_b D y) for y in L_b. Matrices act on
// coordinates against the stored basis of the (b-1)-st column span.
struct ThetaCertificate {
  std::size_t b = 0;                // 1-based block column, b >= 2
  std::vector<QMatrix> theta;       // Theta_1..Theta_{b-1}, each r x dim
  QMatrix span_basis;               // n x dim basis the coordinates refer to
};
ThetaCertificate theta_certificate(const Frame& frame, std::size_t b);

// L_b, l_b and H_b for one block column, re-derived from scratch and checked
// against the frame (including the H_b group axioms).
struct CouplingData {
  Subspace overlap;
  std::size_t overlap_dim = 0;
  std::vector<QMatrix> coupling_group;
};
CouplingData coupling_data(const Frame& frame, std::size_t b);

struct CheckedBound {
  std::string lemma;    // which counting statement this instantiates
  std::string context;  // e.g. "a=1 b=2"
  Integer observed;
  Integer bound;
  bool ok = true;
};

struct BoundCertificate {
  std::vector<CheckedBound> checks;
  bool all_ok() const;
};

// Machine-checks the counting lemmas on the actual grids: coupling-group
// sizes, row-step / column-step / grid-step class sizes, coset containment of
// nonzero values within fixed-prefix classes, the theta identity, and the
// prefix-set sizes |Y_b|, |Z_k|. coupling_violation (internal) on any failure.
BoundCertificate verify_coupling(const Frame& frame, const Closure& c, const GroupIndex& gi,
                                 const GridSet& grids);

// Final cardinality comparisons: |S| <= 3^{n^2}; for aperiodic inputs also
// |S| <= 2^{n^2} with every block in {O_1, I_1}. bound_violation (internal)
// when a comparison fails.
BoundCertificate check_cardinality_bounds(const Closure& c, const Frame& frame,
                                          const GridSet& grids, bool aperiodic);

}  // namespace semiq::psi

#endif  // SEMIQ_PSI_HPP
