#include "semiq/mortality.hpp"

#include <string>

#include "semiq/errors.hpp"
#include "semiq/linalg.hpp"
#include "semiq/structure.hpp"

namespace semiq {

namespace {

QMatrix evaluate_word(const GeneratorSet& gens, const std::vector<std::uint32_t>& word) {
  QMatrix out = gens.generators.at(word.at(0));
  for (std::size_t k = 1; k < word.size(); ++k) out = out * gens.generators.at(word[k]);
  return out;
}

// First index attaining the minimum rank; BFS order makes its depth minimal
// among all attaining elements.
std::uint32_t first_min_rank_index(const Closure& c, std::size_t& min_rank_out) {
  MinRankElements mr = min_rank_elements(c);
  min_rank_out = mr.min_rank;
  return mr.indices.front();
}

DecompositionNode decompose(const GeneratorSet& gens, const ClosureLimits& limits) {
  DecompositionNode node;
  node.dim = gens.dim;

  auto invariant = invariant_subspace_scan(gens, ScanMode::smallest);
  if (!invariant) {
    Closure c = close(gens, limits);
    node.leaf = true;
    node.closure_size = c.size();
    std::uint32_t idx = first_min_rank_index(c, node.min_rank);
    node.word = c.witness_word(idx);
    node.word_rank = node.min_rank;
    Integer cap = integer_pow(3, static_cast<unsigned long>(node.dim * node.dim));
    if (Integer(node.closure_size) > cap) {
      throw internal_error("bound_violation",
                           "leaf closure exceeds 3^(n^2); the invariant-subspace scan "
                           "missed a reduction at dim " +
                               std::to_string(node.dim));
    }
    return node;
  }

  node.leaf = false;
  node.subspace_dim = invariant->dim();
  BlockTriangularization blocks = block_triangularize(gens, *invariant);

  GeneratorSet gens1{node.subspace_dim, blocks.block1};
  GeneratorSet gens2{gens.dim - node.subspace_dim, blocks.block2};
  node.children.push_back(decompose(gens1, limits));
  node.children.push_back(decompose(gens2, limits));

  node.word = node.children[0].word;
  node.word.insert(node.word.end(), node.children[1].word.begin(),
                   node.children[1].word.end());

  // Rank split check on the original matrices.
  QMatrix product = evaluate_word(gens, node.word);
  node.word_rank = rank(product);
  const std::size_t r1 = node.children[0].word_rank;
  const std::size_t r2 = node.children[1].word_rank;
  if (node.word_rank > r1 + r2) {
    throw internal_error("bound_violation",
                         "rank split failed: rk M(w1 w2) = " + std::to_string(node.word_rank) +
                             " > " + std::to_string(r1 + r2));
  }
  Integer length_bound = integer_pow(3, static_cast<unsigned long>(node.dim * node.dim));
  if (Integer(node.word.size()) > length_bound) {
    throw internal_error("bound_violation", "certificate word longer than 3^(n^2)");
  }
  return node;
}

}  // namespace

MortalityReport mortality_threshold(const GeneratorSet& gens, const ClosureLimits& limits) {
  gens.validate();
  MortalityReport report;
  report.dim = gens.dim;
  report.bound = integer_pow(3, static_cast<unsigned long>(gens.dim * gens.dim));
  ZeroSearch search = search_zero(gens, limits);
  if (search.found) {
    report.threshold = search.depth;
    report.threshold_word = search.word;
  }
  if (search.complete) report.closure_size = search.explored;
  return report;
}

MortalityReport min_rank_diameter(const GeneratorSet& gens, const ClosureLimits& limits) {
  gens.validate();
  MortalityReport report;
  report.dim = gens.dim;
  report.bound = integer_pow(3, static_cast<unsigned long>(gens.dim * gens.dim));
  Closure c = close(gens, limits);
  report.closure_size = c.size();
  if (c.zero_index()) {
    report.threshold = c.depth(*c.zero_index());
    report.threshold_word = c.witness_word(*c.zero_index());
  }
  std::uint32_t idx = first_min_rank_index(c, report.min_rank);
  report.min_rank_diameter = c.depth(idx);
  report.min_rank_word = c.witness_word(idx);
  return report;
}

MortalityReport decomposition_certificate(const GeneratorSet& gens,
                                          const ClosureLimits& limits) {
  MortalityReport report = min_rank_diameter(gens, limits);
  report.trace = decompose(gens, limits);
  // The trace word is a bound witness: it must reach the minimum rank, within
  // the certified length; the exact diameter always comes from BFS.
  if (report.trace->word_rank != report.min_rank) {
    throw internal_error("bound_violation",
                         "decomposition word does not reach the minimum rank");
  }
  return report;
}

}  // namespace semiq
