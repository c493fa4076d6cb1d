#ifndef SEMIQ_CLOSURE_HPP
#define SEMIQ_CLOSURE_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "semiq/matrix.hpp"

namespace semiq {

// Ordered list of square generators; the list order seeds every deterministic
// choice downstream (element indexing, idempotent search, frame selection).
struct GeneratorSet {
  std::size_t dim = 0;
  std::vector<QMatrix> generators;

  void validate() const;
};

struct ClosureLimits {
  std::uint64_t max_elements = 1000000;
  std::uint32_t max_entry_bits = 4096;

  // An irreducible semigroup has at most 3^(n^2) elements, so with an
  // irreducibility hint a cap of 3^(n^2)+1 makes overflow a disproof
  // (clamped to the default above).
  static ClosureLimits defaults_for(std::size_t dim, bool irreducible_hint);
};

// The enumerated semigroup: elements indexed in BFS discovery order, each with
// its exact depth (shortest generator word length) and right-Cayley successors.
class Closure {
 public:
  const GeneratorSet& generators() const noexcept { return gens_; }
  std::size_t dim() const noexcept { return gens_.dim; }
  std::size_t size() const noexcept { return elements_.size(); }

  const QMatrix& element(std::uint32_t index) const { return elements_[index]; }
  const std::vector<QMatrix>& elements() const noexcept { return elements_; }

  std::uint32_t depth(std::uint32_t index) const { return depth_[index]; }
  std::uint32_t diameter() const noexcept { return diameter_; }

  // Right-action edge: index of element(index) * generator(g).
  std::uint32_t successor(std::uint32_t index, std::uint32_t g) const {
    return cayley_[index][g];
  }

  // Shortest generator word (left-to-right product) evaluating to the element.
  std::vector<std::uint32_t> witness_word(std::uint32_t index) const;

  std::optional<std::uint32_t> find(const QMatrix& m) const;

  bool contains_zero() const noexcept { return zero_index_.has_value(); }
  std::optional<std::uint32_t> zero_index() const noexcept { return zero_index_; }
  // True when I_n arose as a product; the formal identity of S^1 is otherwise
  // adjoined only where an operation needs it, and never counted in size().
  bool contains_identity() const noexcept { return identity_index_.has_value(); }
  std::optional<std::uint32_t> identity_index() const noexcept { return identity_index_; }

  std::vector<std::uint32_t> depth_histogram() const;  // [depth-1] -> count

 private:
  friend struct ClosureBuilder;
  GeneratorSet gens_;
  std::vector<QMatrix> elements_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::int64_t> parent_;  // -1 for depth-1 elements
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::vector<std::uint32_t>> cayley_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> buckets_;
  std::uint32_t diameter_ = 0;
  std::optional<std::uint32_t> zero_index_;
  std::optional<std::uint32_t> identity_index_;
};

// BFS closure; throws closure_exceeded / entry_blowup when a limit is hit.
Closure close(const GeneratorSet& gens, const ClosureLimits& limits = {});

// BFS run that stops as soon as the zero matrix is discovered. `complete` is
// true when the whole semigroup was enumerated without meeting zero.
struct ZeroSearch {
  bool found = false;
  std::uint32_t depth = 0;
  std::vector<std::uint32_t> word;
  std::uint64_t explored = 0;
  bool complete = false;
};
ZeroSearch search_zero(const GeneratorSet& gens, const ClosureLimits& limits = {});

// Throws not_an_element for matrices outside the closure.
std::uint32_t depth_of(const Closure& c, const QMatrix& m);

struct MinRankElements {
  std::size_t min_rank = 0;
  std::vector<std::uint32_t> indices;  // ascending; ranks computed exactly
};
MinRankElements min_rank_elements(const Closure& c);

}  // namespace semiq

#endif  // SEMIQ_CLOSURE_HPP
