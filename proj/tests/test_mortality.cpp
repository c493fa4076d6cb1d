#include <doctest.h>

#include "oracle.hpp"
#include "semiq/constructions.hpp"
#include "semiq/errors.hpp"
#include "semiq/mortality.hpp"

using namespace semiq;

namespace {

const QMatrix kNil = qmat({{0, 1}, {0, 0}});

}  // namespace

TEST_CASE("threshold of a single nilpotent") {
  MortalityReport r = mortality_threshold(GeneratorSet{2, {kNil}});
  REQUIRE(r.threshold.has_value());
  CHECK(*r.threshold == 2);
  CHECK(r.threshold_word == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("threshold of the rank-one pair with its five-element closure") {
  GeneratorSet pair{2, {kNil, qmat({{0, 0}, {1, 0}})}};
  MortalityReport r = min_rank_diameter(pair);
  REQUIRE(r.threshold.has_value());
  CHECK(*r.threshold == 2);
  CHECK(r.closure_size == 5);  // {a, b, ab, ba, 0}
  CHECK(*r.threshold == *oracle::zero_depth(pair.generators));
  CHECK(oracle::naive_closure(pair.generators).size() == 5);
  // Zero is the unique minimum-rank element, so the diameters agree.
  CHECK(*r.min_rank_diameter == *r.threshold);
}

TEST_CASE("zero-free semigroups have no threshold") {
  MortalityReport r = mortality_threshold(example1_semigroup());
  CHECK_FALSE(r.threshold.has_value());
  CHECK(r.closure_size == 32);  // search completed the closure
}

TEST_CASE("minimum-rank diameter") {
  MortalityReport nil = min_rank_diameter(GeneratorSet{2, {kNil}});
  CHECK(nil.min_rank == 0);
  CHECK(*nil.min_rank_diameter == 2);

  MortalityReport ex1 = min_rank_diameter(example1_semigroup());
  CHECK(ex1.min_rank == 2);
  CHECK(*ex1.min_rank_diameter == 1);  // every generator attains the rank

  MortalityReport sm = min_rank_diameter(s_m_family(3));
  CHECK(sm.min_rank == 0);
  CHECK(*sm.min_rank_diameter == 1);  // the zero matrix is a generator
}

TEST_CASE("early stop leaves the closure incomplete but the depth exact") {
  GeneratorSet pair{2, {kNil, qmat({{0, 0}, {1, 0}})}};
  MortalityReport r = mortality_threshold(pair);
  REQUIRE(r.threshold.has_value());
  CHECK(*r.threshold == 2);
  CHECK_FALSE(r.closure_size.has_value());  // stopped at the zero matrix
}

TEST_CASE("decomposition certificate for the S_m family") {
  MortalityReport r = decomposition_certificate(s_m_family(3));
  REQUIRE(r.trace.has_value());
  const DecompositionNode& root = *r.trace;
  CHECK_FALSE(root.leaf);
  CHECK(root.subspace_dim == 1);
  REQUIRE(root.children.size() == 2);
  CHECK(root.children[0].dim == 1);
  CHECK(root.children[1].dim == 1);
  CHECK(root.word.size() == 2);
  CHECK(root.word.size() <= 81);  // 3^{n^2}
  CHECK(root.word_rank == 0);
  CHECK(root.word_rank <= root.children[0].word_rank + root.children[1].word_rank);
}

TEST_CASE("decomposition certificate for the projection generator") {
  GeneratorSet proj{2, {qmat({{1, 1}, {0, 0}})}};
  MortalityReport r = decomposition_certificate(proj);
  REQUIRE(r.trace.has_value());
  const DecompositionNode& root = *r.trace;
  CHECK_FALSE(root.leaf);
  CHECK(root.subspace_dim == 1);
  CHECK(root.children[0].word_rank == 1);  // restriction acts as [1]
  CHECK(root.children[1].word_rank == 0);  // quotient acts as [0]
  CHECK(root.word.size() == 2);
  CHECK(root.word_rank <= 1);
  CHECK(r.min_rank == 1);
  CHECK(root.word_rank == r.min_rank);
}

TEST_CASE("decomposition recurses through nested invariant subspaces") {
  // Two strictly upper-triangular nilpotents: the quotient block is itself
  // reducible, so the trace splits twice.
  GeneratorSet gens{3,
                    {qmat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}),
                     qmat({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}})}};
  MortalityReport r = decomposition_certificate(gens);
  CHECK(r.closure_size == 4);  // {E_12, E_23, E_12 E_23, 0}
  REQUIRE(r.threshold.has_value());
  CHECK(*r.threshold == 2);
  CHECK(r.min_rank == 0);
  REQUIRE(r.trace.has_value());
  const DecompositionNode& root = *r.trace;
  CHECK_FALSE(root.leaf);
  CHECK(root.subspace_dim == 1);
  REQUIRE(root.children.size() == 2);
  CHECK(root.children[0].leaf);
  CHECK_FALSE(root.children[1].leaf);  // the 2x2 quotient splits again
  CHECK(root.children[1].children.size() == 2);
  CHECK(root.word.size() == 3);
  CHECK(root.word_rank == 0);
}

TEST_CASE("irreducible inputs certify with a single leaf") {
  MortalityReport r = decomposition_certificate(example1_semigroup());
  REQUIRE(r.trace.has_value());
  CHECK(r.trace->leaf);
  CHECK(r.trace->closure_size == 32);
  CHECK(r.trace->word.size() == 1);
  CHECK(r.trace->word_rank == 2);
}

TEST_CASE("thresholds never exceed size or the cube bound") {
  for (const GeneratorSet& gens :
       {GeneratorSet{2, {kNil}}, GeneratorSet{2, {kNil, qmat({{0, 0}, {1, 0}})}},
        s_m_family(5)}) {
    MortalityReport r = min_rank_diameter(gens);
    REQUIRE(r.threshold.has_value());
    CHECK(Integer(*r.threshold) <= Integer(*r.closure_size));
    CHECK(Integer(*r.threshold) <= r.bound);
  }
}

TEST_CASE("limit errors propagate") {
  ClosureLimits tiny;
  tiny.max_elements = 2;
  GeneratorSet figure{3,
                      {qmat({{0, 1, 0}, {0, 1, 1}, {0, 0, 0}}),
                       qmat({{0, 0, 0}, {0, 0, 0}, {1, 0, 1}})}};
  CHECK_THROWS_WITH_AS(min_rank_diameter(figure, tiny), doctest::Contains("max_elements"),
                       Error);
}
