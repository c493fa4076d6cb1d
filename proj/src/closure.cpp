#include "semiq/closure.hpp"

#include <string>

#include "semiq/errors.hpp"
#include "semiq/linalg.hpp"

namespace semiq {

void GeneratorSet::validate() const {
  if (dim == 0) throw input_error("empty_generators", "generator dimension must be positive");
  if (generators.empty()) {
    throw input_error("empty_generators", "generator list must be nonempty");
  }
  for (const QMatrix& g : generators) {
    if (g.rows() != dim || g.cols() != dim) {
      throw input_error("shape", "generator is not " + std::to_string(dim) + "x" +
                                     std::to_string(dim));
    }
  }
}

ClosureLimits ClosureLimits::defaults_for(std::size_t dim, bool irreducible_hint) {
  ClosureLimits limits;
  if (irreducible_hint) {
    Integer cap = integer_pow(3, static_cast<unsigned long>(dim * dim)) + 1;
    if (cap < Integer(limits.max_elements)) {
      limits.max_elements = static_cast<std::uint64_t>(cap);
    }
  }
  return limits;
}

struct ClosureBuilder {
  Closure c;
  const ClosureLimits& limits;

  ClosureBuilder(const GeneratorSet& gens, const ClosureLimits& lim) : limits(lim) {
    gens.validate();
    if (limits.max_elements == 0 || limits.max_entry_bits == 0) {
      throw input_error("bad_limits", "closure limits must be positive");
    }
    c.gens_ = gens;
  }

  std::optional<std::uint32_t> lookup(const QMatrix& m) const {
    auto it = c.buckets_.find(m.hash());
    if (it == c.buckets_.end()) return std::nullopt;
    for (std::uint32_t idx : it->second) {
      if (c.elements_[idx] == m) return idx;
    }
    return std::nullopt;
  }

  // Returns the index; fresh elements get depth d.
  std::uint32_t insert(QMatrix m, std::uint32_t d, std::int64_t parent, std::uint32_t gen) {
    if (auto idx = lookup(m)) return *idx;
    if (c.elements_.size() + 1 > limits.max_elements) {
      throw limit_error("closure_exceeded",
                        "closure exceeded max_elements = " + std::to_string(limits.max_elements) +
                            "; semigroup may be infinite or the cap too small");
    }
    if (m.max_entry_bits() > limits.max_entry_bits) {
      throw limit_error("entry_blowup",
                        "entry size exceeded max_entry_bits = " +
                            std::to_string(limits.max_entry_bits) +
                            "; semigroup may be infinite or the cap too small");
    }
    std::uint32_t idx = static_cast<std::uint32_t>(c.elements_.size());
    if (m.is_zero()) c.zero_index_ = idx;
    if (m.is_identity()) c.identity_index_ = idx;
    c.buckets_[m.hash()].push_back(idx);
    c.elements_.push_back(std::move(m));
    c.depth_.push_back(d);
    c.parent_.push_back(parent);
    c.parent_gen_.push_back(gen);
    if (d > c.diameter_) c.diameter_ = d;
    return idx;
  }

  // Full BFS; when stop_at_zero is set, expansion halts right after the zero
  // matrix is first discovered (its depth is then exact, the closure is not).
  bool run(bool stop_at_zero) {
    for (std::uint32_t g = 0; g < c.gens_.generators.size(); ++g) {
      insert(c.gens_.generators[g], 1, -1, g);
      if (stop_at_zero && c.zero_index_) return false;
    }
    const std::size_t num_gens = c.gens_.generators.size();
    for (std::uint32_t e = 0; e < c.elements_.size(); ++e) {
      c.cayley_.emplace_back(num_gens, 0);
      for (std::uint32_t g = 0; g < num_gens; ++g) {
        QMatrix prod = c.elements_[e] * c.gens_.generators[g];
        std::uint32_t idx = insert(std::move(prod), c.depth_[e] + 1, e, g);
        c.cayley_[e][g] = idx;
        if (stop_at_zero && c.zero_index_) return false;
      }
    }
    return true;
  }
};

Closure close(const GeneratorSet& gens, const ClosureLimits& limits) {
  ClosureBuilder b(gens, limits);
  b.run(false);
  return std::move(b.c);
}

ZeroSearch search_zero(const GeneratorSet& gens, const ClosureLimits& limits) {
  ClosureBuilder b(gens, limits);
  ZeroSearch out;
  out.complete = b.run(true);
  out.explored = b.c.size();
  if (b.c.zero_index()) {
    std::uint32_t z = *b.c.zero_index();
    out.found = true;
    out.depth = b.c.depth(z);
    out.word = b.c.witness_word(z);
  }
  return out;
}

std::vector<std::uint32_t> Closure::witness_word(std::uint32_t index) const {
  std::vector<std::uint32_t> word;
  std::int64_t cur = index;
  while (cur >= 0) {
    word.push_back(parent_gen_[cur]);
    cur = parent_[cur];
  }
  return {word.rbegin(), word.rend()};
}

std::optional<std::uint32_t> Closure::find(const QMatrix& m) const {
  auto it = buckets_.find(m.hash());
  if (it == buckets_.end()) return std::nullopt;
  for (std::uint32_t idx : it->second) {
    if (elements_[idx] == m) return idx;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> Closure::depth_histogram() const {
  std::vector<std::uint32_t> hist(diameter_, 0);
  for (std::uint32_t d : depth_) ++hist[d - 1];
  return hist;
}

std::uint32_t depth_of(const Closure& c, const QMatrix& m) {
  auto idx = c.find(m);
  if (!idx) throw input_error("not_an_element", "matrix is not an element of the closure");
  return c.depth(*idx);
}

MinRankElements min_rank_elements(const Closure& c) {
  if (c.size() == 0) throw input_error("empty_closure", "closure has no elements");
  MinRankElements out;
  std::vector<std::size_t> ranks(c.size());
  out.min_rank = c.dim() + 1;
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    ranks[i] = rank(c.element(i));
    if (ranks[i] < out.min_rank) out.min_rank = ranks[i];
  }
  for (std::uint32_t i = 0; i < c.size(); ++i) {
    if (ranks[i] == out.min_rank) out.indices.push_back(i);
  }
  return out;
}

}  // namespace semiq
