#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "semiq/closure.hpp"
#include "semiq/constructions.hpp"
#include "semiq/errors.hpp"

using namespace semiq;

namespace {

const QMatrix kNil = qmat({{0, 1}, {0, 0}});

GeneratorSet figure_right() {
  return GeneratorSet{3,
                      {qmat({{0, 1, 0}, {0, 1, 1}, {0, 0, 0}}),
                       qmat({{0, 0, 0}, {0, 0, 0}, {1, 0, 1}})}};
}

GeneratorSet figure_left() {
  return GeneratorSet{2, {qmat({{0, -1}, {1, -1}}), qmat({{1, -1}, {0, -1}})}};
}

void check_against_oracle(const GeneratorSet& gens) {
  Closure c = close(gens);
  auto expected = oracle::naive_closure(gens.generators);
  REQUIRE(c.size() == expected.size());
  for (const QMatrix& m : expected) CHECK(c.find(m).has_value());
  auto depths = oracle::word_depths(gens.generators);
  std::uint32_t oracle_diameter = 0;
  for (const auto& [m, d] : depths) {
    auto idx = c.find(m);
    REQUIRE(idx.has_value());
    CHECK(c.depth(*idx) == d);
    oracle_diameter = std::max(oracle_diameter, d);
  }
  CHECK(c.diameter() == oracle_diameter);
}

}  // namespace

TEST_CASE("nilpotent generator closes to {N, 0} with diameter 2") {
  Closure c = close(GeneratorSet{2, {kNil}});
  CHECK(c.size() == 2);
  CHECK(c.diameter() == 2);
  CHECK(c.contains_zero());
  CHECK(depth_of(c, QMatrix::zero(2, 2)) == 2);
  CHECK(c.witness_word(*c.zero_index()) == std::vector<std::uint32_t>{0, 0});
  CHECK_THROWS_AS(depth_of(c, QMatrix::identity(2)), Error);
}

TEST_CASE("the 32-element family is closed with diameter 1") {
  Closure c = close(example1_semigroup());
  CHECK(c.size() == 32);
  CHECK(c.diameter() == 1);
  CHECK_FALSE(c.contains_zero());
  CHECK_FALSE(c.contains_identity());
}

TEST_CASE("figure generator sets close to their oracle sizes") {
  Closure right = close(figure_right());
  CHECK(right.size() == 11);
  CHECK(right.diameter() == 4);
  CHECK(right.contains_zero());
  CHECK(depth_of(right, QMatrix::zero(3, 3)) == 3);

  Closure left = close(figure_left());
  CHECK(left.size() == 6);
  CHECK(left.diameter() == 2);
  CHECK_FALSE(left.contains_zero());
  CHECK(left.contains_identity());  // a product reaches I_2
}

TEST_CASE("closure elements are product-closed and witness words evaluate back") {
  for (const GeneratorSet& gens :
       {figure_right(), figure_left(), GeneratorSet{2, {kNil}}, s_m_family(3)}) {
    Closure c = close(gens);
    for (std::uint32_t a = 0; a < c.size(); ++a) {
      for (std::uint32_t g = 0; g < gens.generators.size(); ++g) {
        std::uint32_t s = c.successor(a, g);
        CHECK(c.element(s) == c.element(a) * gens.generators[g]);
        CHECK(c.depth(s) <= c.depth(a) + 1);
      }
      std::vector<std::uint32_t> word = c.witness_word(a);
      CHECK(word.size() == c.depth(a));
      QMatrix prod = gens.generators[word.at(0)];
      for (std::size_t k = 1; k < word.size(); ++k) prod = prod * gens.generators[word[k]];
      CHECK(prod == c.element(a));
    }
  }
}

TEST_CASE("BFS depths and diameter match the word-enumeration oracle") {
  check_against_oracle(figure_right());
  check_against_oracle(figure_left());
  check_against_oracle(GeneratorSet{2, {kNil, qmat({{0, 0}, {1, 0}})}});
  check_against_oracle(s_m_family(4));
}

TEST_CASE("depth never exceeds the semigroup size") {
  for (const GeneratorSet& gens : {figure_right(), figure_left()}) {
    Closure c = close(gens);
    for (std::uint32_t i = 0; i < c.size(); ++i) CHECK(c.depth(i) <= c.size());
  }
}

TEST_CASE("two runs produce identical indexing") {
  Closure a = close(figure_right());
  Closure b = close(figure_right());
  REQUIRE(a.size() == b.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    CHECK(a.element(i) == b.element(i));
    CHECK(a.depth(i) == b.depth(i));
  }
}

TEST_CASE("limits trip as closure_exceeded or entry_blowup") {
  ClosureLimits tiny;
  tiny.max_elements = 4;
  CHECK_THROWS_WITH_AS(close(figure_right(), tiny), doctest::Contains("max_elements"), Error);

  GeneratorSet doubling{1, {qmat({{2}})}};
  ClosureLimits bits;
  bits.max_entry_bits = 16;
  CHECK_THROWS_WITH_AS(close(doubling, bits), doctest::Contains("max_entry_bits"), Error);
}

TEST_CASE("irreducibility hint lowers the default element cap") {
  ClosureLimits hinted = ClosureLimits::defaults_for(2, true);
  CHECK(hinted.max_elements == 82);  // 3^4 + 1
  ClosureLimits plain = ClosureLimits::defaults_for(2, false);
  CHECK(plain.max_elements == 1000000);
}

TEST_CASE("limits must be positive") {
  ClosureLimits zero;
  zero.max_elements = 0;
  CHECK_THROWS_AS(close(GeneratorSet{2, {kNil}}, zero), Error);
  zero.max_elements = 10;
  zero.max_entry_bits = 0;
  CHECK_THROWS_AS(close(GeneratorSet{2, {kNil}}, zero), Error);
}

TEST_CASE("minimum-rank elements") {
  Closure ex1 = close(example1_semigroup());
  MinRankElements mr = min_rank_elements(ex1);
  CHECK(mr.min_rank == 2);
  CHECK(mr.indices.size() == 32);  // every element attains it

  Closure nil = close(GeneratorSet{2, {kNil}});
  MinRankElements nil_mr = min_rank_elements(nil);
  CHECK(nil_mr.min_rank == 0);
  REQUIRE(nil_mr.indices.size() == 1);
  CHECK(nil.element(nil_mr.indices.front()).is_zero());

  Closure lower = close(lower_bound_family(2, true).generators());
  CHECK(min_rank_elements(lower).min_rank == 0);  // the family contains zero
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(close(GeneratorSet{2, {}}), Error);
  CHECK_THROWS_AS(close(GeneratorSet{2, {qmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}}), Error);
  GeneratorSet dup{2, {kNil, kNil}};  // duplicates collapse to one element
  CHECK(close(dup).size() == 2);
}
