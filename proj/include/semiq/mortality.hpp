#ifndef SEMIQ_MORTALITY_HPP
#define SEMIQ_MORTALITY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "semiq/closure.hpp"
#include "semiq/rational.hpp"

namespace semiq {

// One node of the recursive decomposition: either a leaf (no proper nonzero
// invariant subspace found; the word is a shortest minimum-rank BFS witness)
// or an internal node splitting over an invariant subspace, whose word is the
// concatenation w_1 w_2 of the children's words.
struct DecompositionNode {
  std::size_t dim = 0;
  bool leaf = true;
  std::size_t subspace_dim = 0;  // dim of the invariant subspace when internal
  std::uint64_t closure_size = 0;
  std::size_t min_rank = 0;
  std::vector<std::uint32_t> word;  // generator indices, length >= 1
  std::size_t word_rank = 0;        // rank of the word's product in this node
  std::vector<DecompositionNode> children;
};

struct MortalityReport {
  std::size_t dim = 0;
  // Depth of the zero matrix; absent when zero is not in the semigroup.
  std::optional<std::uint32_t> threshold;
  std::vector<std::uint32_t> threshold_word;
  // Minimum depth among minimum-rank elements, with a shortest witness.
  std::optional<std::uint32_t> min_rank_diameter;
  std::size_t min_rank = 0;
  std::vector<std::uint32_t> min_rank_word;
  std::optional<std::uint64_t> closure_size;
  Integer bound;  // 3^{n^2}
  std::optional<DecompositionNode> trace;
};

// BFS until the zero matrix appears or the closure completes; exact shortest
// word. Limit errors propagate.
MortalityReport mortality_threshold(const GeneratorSet& gens, const ClosureLimits& limits = {});

// Full closure; the minimum depth among minimum-rank elements (equals the
// threshold when zero is present).
MortalityReport min_rank_diameter(const GeneratorSet& gens, const ClosureLimits& limits = {});

// Recursive certificate: leaves take shortest minimum-rank BFS words; internal
// nodes split over an invariant subspace, re-verify the rank split
// rk M(w_1 w_2) <= r_1 + r_2 on the original matrices, and certify the length
// against 3^{n_1^2} + 3^{n_2^2} <= 3^{n^2}.
MortalityReport decomposition_certificate(const GeneratorSet& gens,
                                          const ClosureLimits& limits = {});

}  // namespace semiq

#endif  // SEMIQ_MORTALITY_HPP
