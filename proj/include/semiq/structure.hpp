#ifndef SEMIQ_STRUCTURE_HPP
#define SEMIQ_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiq/closure.hpp"
#include "semiq/linalg.hpp"

namespace semiq {

struct IrreducibilityReport {
  bool irreducible = false;
  // Proper nonzero invariant column subspace when reducible.
  std::optional<Subspace> witness;
  Orientation side = Orientation::column;
};

// The (0-)minimal ideal T, the common nonzero rank r of its nonzero elements,
// the idempotent E with its factorization E = embed * compress (compress *
// embed = I_r), and the group G = compress * S * embed minus zero.
struct IdealStructure {
  std::vector<std::uint32_t> ideal;  // element indices of T, ascending
  std::size_t rank = 0;              // r
  bool t2_nonzero = true;            // T^2 != {O_n}; fails only for reducible S
  QMatrix idempotent;                // E
  QMatrix compress;                  // C, r x n
  QMatrix embed;                     // D, n x r
  std::vector<QMatrix> group;        // G, discovery order

  bool contains(std::uint32_t index) const;
};

struct PowerProfile {
  std::uint32_t index = 1;   // least k with x^{k+p} = x^k
  std::uint32_t period = 1;  // least such p
};

struct AperiodicityReport {
  bool aperiodic = true;
  std::optional<std::uint32_t> witness;  // element with period > 1
  std::vector<PowerProfile> profiles;    // per element
};

// Smallest S^1-invariant subspace containing v: saturate span{v} under the
// generator action until the dimension stabilizes.
Subspace orbit_span(const GeneratorSet& gens, const QMatrix& v);
Subspace orbit_span(const Closure& c, const QMatrix& v);

// Which proper nonzero orbit span the scan returns: the first one found in
// candidate order, or the one of smallest dimension (ties by candidate
// order), which the decomposition recursion wants.
enum class ScanMode { first, smallest };

// Scans the candidate vectors (standard basis, then generator columns,
// deduplicated) for proper nonzero orbit spans. Any reported subspace is
// genuinely invariant (checked); finding one is guaranteed whenever some
// candidate vector lies in a proper invariant subspace, since orbit_span(v)
// is the smallest invariant subspace through v. A reducible semigroup whose
// proper invariant subspaces all avoid the candidate set is not detected;
// deciding irreducibility in general is out of scope here.
std::optional<Subspace> invariant_subspace_scan(const GeneratorSet& gens,
                                                ScanMode mode = ScanMode::first);

IrreducibilityReport is_irreducible(const Closure& c);

// Picks the lowest-index element of minimal nonzero rank, forms T = S^1 X S^1
// (plus O_n when present) and verifies (0-)minimality exhaustively, restarting
// from any element generating a strictly smaller ideal. Fills ideal indices,
// rank and the T^2 flag only.
IdealStructure minimal_ideal(const Closure& c);

// First element of T \ {0} in index order whose power cycle contains a nonzero
// idempotent; throws no_nonzero_idempotent otherwise (reducible inputs only).
QMatrix find_idempotent(const Closure& c, const IdealStructure& t);

// (compress, embed): embed = leftmost independent columns of E, compress =
// first r rows of [embed | kernel-basis]^{-1}; embed*compress = E and
// compress*embed = I_r.
std::pair<QMatrix, QMatrix> factor_idempotent(const QMatrix& e);

// G = {compress * X * embed : X in S} \ {O_r}. Verifies the group axioms and
// that phi(X) = compress*X*embed restricted to E S E \ {0} is a bijection
// onto G; group_axiom_failure signals compress/embed inconsistent with a true
// (0-)minimal ideal.
std::vector<QMatrix> maximal_group(const Closure& c, const QMatrix& compress,
                                   const QMatrix& embed);

PowerProfile power_profile(const QMatrix& x);
AperiodicityReport is_aperiodic(const Closure& c);

struct BlockTriangularization {
  QMatrix basis;                // columns: basis of the subspace, then complement
  std::vector<QMatrix> block1;  // restriction to the subspace, per generator
  std::vector<QMatrix> block2;  // induced action on the quotient, per generator
  std::vector<QMatrix> offdiag;
};

// Conjugates the generators into block upper-triangular form over a proper
// nonzero invariant column subspace; not_invariant if some conjugated
// generator has a nonzero lower-left block.
BlockTriangularization block_triangularize(const GeneratorSet& gens, const Subspace& invariant);
BlockTriangularization block_triangularize(const Closure& c, const Subspace& invariant);

// Convenience pipeline stage: irreducibility, ideal, idempotent, group,
// aperiodicity in one pass. Group data may be unavailable on reducible inputs
// whose ideal has no nonzero idempotent.
struct StructureReport {
  IrreducibilityReport irreducibility;
  AperiodicityReport aperiodicity;
  IdealStructure ideal;
  bool group_available = false;
  std::string group_failure;  // error code when not available
};
StructureReport analyze_structure(const Closure& c);

}  // namespace semiq

#endif  // SEMIQ_STRUCTURE_HPP
