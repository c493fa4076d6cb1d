#ifndef SEMIQ_REES_HPP
#define SEMIQ_REES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "semiq/closure.hpp"

namespace semiq {

// Finite semigroup given by an explicit multiplication table; the shared
// interface between matrix closures and abstract Rees semigroups, so the same
// local-group checks run on both.
struct MulTable {
  std::size_t size = 0;
  std::vector<std::uint32_t> table;  // row-major: table[a * size + b] = a.b
  std::optional<std::uint32_t> zero;

  std::uint32_t product(std::uint32_t a, std::uint32_t b) const {
    return table[a * size + b];
  }

  void verify_associativity() const;  // exhaustive; throws on failure
  std::vector<std::uint32_t> idempotents() const;
  // e S e (without zero); group_ok reports closure, identity e and inverses.
  struct LocalGroup {
    std::uint32_t idempotent = 0;
    std::vector<std::uint32_t> elements;
    bool group_ok = false;
  };
  LocalGroup local_group(std::uint32_t idempotent) const;
};

// Exhaustive table of a matrix closure; desk scale only (size capped).
MulTable multiplication_table(const Closure& c, std::size_t size_cap = 4096);

// Finite group as an abstract multiplication table over indices 0..order-1.
struct GroupTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> table;
  std::uint32_t identity = 0;

  static GroupTable cyclic(std::size_t m);

  std::uint32_t product(std::uint32_t a, std::uint32_t b) const {
    return table[a * order + b];
  }
  std::uint32_t inverse(std::uint32_t a) const;
  void validate() const;  // group axioms, exhaustive
};

// M0[G; I, Lambda; P]: elements (i, g, lambda) plus zero, multiplied through
// the sandwich matrix. Entries of the sandwich are group indices or -1 for
// zero; invalid_sandwich when a row or column is entirely zero.
class ReesSemigroup {
 public:
  ReesSemigroup(GroupTable group, std::size_t i_size, std::size_t lambda_size,
                std::vector<std::int32_t> sandwich);

  std::size_t size() const noexcept { return i_size_ * group_.order * lambda_size_ + 1; }
  const GroupTable& group() const noexcept { return group_; }
  std::size_t i_size() const noexcept { return i_size_; }
  std::size_t lambda_size() const noexcept { return lambda_size_; }

  // Element 0 is the zero; others encode (i, g, lambda).
  std::size_t encode(std::size_t i, std::size_t g, std::size_t lambda) const;
  struct Triple {
    std::size_t i, g, lambda;
  };
  std::optional<Triple> decode(std::size_t element) const;  // nullopt for zero

  std::size_t product(std::size_t x, std::size_t y) const;
  std::int32_t sandwich(std::size_t lambda, std::size_t i) const {
    return sandwich_[lambda * i_size_ + i];
  }

  MulTable table() const;

 private:
  GroupTable group_;
  std::size_t i_size_, lambda_size_;
  std::vector<std::int32_t> sandwich_;
};

// Builds the semigroup, verifies associativity exhaustively, and checks that
// e S e \ {0} is a group with identity e for every nonzero idempotent e.
ReesSemigroup rees_semigroup(GroupTable group, std::size_t i_size, std::size_t lambda_size,
                             std::vector<std::int32_t> sandwich);

}  // namespace semiq

#endif  // SEMIQ_REES_HPP
