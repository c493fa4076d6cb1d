#include "semiq/rees.hpp"

#include <algorithm>
#include <set>

#include "semiq/errors.hpp"

namespace semiq {

void MulTable::verify_associativity() const {
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t b = 0; b < size; ++b) {
      const std::uint32_t ab = product(a, b);
      for (std::uint32_t c = 0; c < size; ++c) {
        if (product(ab, c) != product(a, product(b, c))) {
          throw internal_error("not_associative", "multiplication table is not associative");
        }
      }
    }
  }
}

std::vector<std::uint32_t> MulTable::idempotents() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < size; ++a) {
    if (product(a, a) == a) out.push_back(a);
  }
  return out;
}

MulTable::LocalGroup MulTable::local_group(std::uint32_t e) const {
  if (product(e, e) != e) {
    throw input_error("not_idempotent", "local group needs an idempotent");
  }
  LocalGroup out;
  out.idempotent = e;
  std::set<std::uint32_t> members;
  for (std::uint32_t x = 0; x < size; ++x) {
    std::uint32_t y = product(product(e, x), e);
    if (zero && y == *zero) continue;
    members.insert(y);
  }
  out.elements.assign(members.begin(), members.end());
  out.group_ok = true;
  for (std::uint32_t x : out.elements) {
    if (product(e, x) != x || product(x, e) != x) out.group_ok = false;
    bool has_inverse = false;
    for (std::uint32_t y : out.elements) {
      if (!members.count(product(x, y))) out.group_ok = false;
      if (product(x, y) == e && product(y, x) == e) has_inverse = true;
    }
    if (!has_inverse) out.group_ok = false;
  }
  return out;
}

MulTable multiplication_table(const Closure& c, std::size_t size_cap) {
  if (c.size() > size_cap) {
    throw limit_error("table_cap", "closure too large for an explicit table");
  }
  MulTable t;
  t.size = c.size();
  t.table.resize(t.size * t.size);
  t.zero = c.zero_index();
  for (std::uint32_t a = 0; a < t.size; ++a) {
    for (std::uint32_t b = 0; b < t.size; ++b) {
      auto idx = c.find(c.element(a) * c.element(b));
      if (!idx) throw internal_error("not_closed", "closure is not product-closed");
      t.table[a * t.size + b] = *idx;
    }
  }
  return t;
}

GroupTable GroupTable::cyclic(std::size_t m) {
  GroupTable g;
  g.order = m;
  g.identity = 0;
  g.table.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      g.table[a * m + b] = static_cast<std::uint32_t>((a + b) % m);
    }
  }
  return g;
}

std::uint32_t GroupTable::inverse(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order; ++b) {
    if (product(a, b) == identity && product(b, a) == identity) return b;
  }
  throw input_error("not_a_group", "element has no inverse in the table");
}

void GroupTable::validate() const {
  if (order == 0 || table.size() != order * order) {
    throw input_error("not_a_group", "group table has the wrong size");
  }
  for (std::uint32_t x : table) {
    if (x >= order) throw input_error("not_a_group", "table entry out of range");
  }
  for (std::uint32_t a = 0; a < order; ++a) {
    if (product(identity, a) != a || product(a, identity) != a) {
      throw input_error("not_a_group", "identity is not neutral");
    }
    inverse(a);
    for (std::uint32_t b = 0; b < order; ++b) {
      for (std::uint32_t c = 0; c < order; ++c) {
        if (product(product(a, b), c) != product(a, product(b, c))) {
          throw input_error("not_a_group", "group table is not associative");
        }
      }
    }
  }
}

ReesSemigroup::ReesSemigroup(GroupTable group, std::size_t i_size, std::size_t lambda_size,
                             std::vector<std::int32_t> sandwich)
    : group_(std::move(group)), i_size_(i_size), lambda_size_(lambda_size),
      sandwich_(std::move(sandwich)) {
  group_.validate();
  if (i_size_ == 0 || lambda_size_ == 0 || sandwich_.size() != i_size_ * lambda_size_) {
    throw input_error("invalid_sandwich", "sandwich must be a Lambda x I array");
  }
  for (std::int32_t entry : sandwich_) {
    if (entry < -1 || entry >= static_cast<std::int32_t>(group_.order)) {
      throw input_error("invalid_sandwich", "sandwich entry out of range");
    }
  }
  for (std::size_t lambda = 0; lambda < lambda_size_; ++lambda) {
    bool nonzero = false;
    for (std::size_t i = 0; i < i_size_; ++i) nonzero |= this->sandwich(lambda, i) >= 0;
    if (!nonzero) throw input_error("invalid_sandwich", "sandwich has an all-zero row");
  }
  for (std::size_t i = 0; i < i_size_; ++i) {
    bool nonzero = false;
    for (std::size_t lambda = 0; lambda < lambda_size_; ++lambda) {
      nonzero |= this->sandwich(lambda, i) >= 0;
    }
    if (!nonzero) throw input_error("invalid_sandwich", "sandwich has an all-zero column");
  }
}

std::size_t ReesSemigroup::encode(std::size_t i, std::size_t g, std::size_t lambda) const {
  return 1 + (i * group_.order + g) * lambda_size_ + lambda;
}

std::optional<ReesSemigroup::Triple> ReesSemigroup::decode(std::size_t element) const {
  if (element == 0) return std::nullopt;
  std::size_t x = element - 1;
  Triple t{};
  t.lambda = x % lambda_size_;
  x /= lambda_size_;
  t.g = x % group_.order;
  t.i = x / group_.order;
  return t;
}

std::size_t ReesSemigroup::product(std::size_t x, std::size_t y) const {
  auto a = decode(x);
  auto b = decode(y);
  if (!a || !b) return 0;
  std::int32_t p = sandwich(a->lambda, b->i);
  if (p < 0) return 0;
  std::size_t g = group_.product(group_.product(a->g, static_cast<std::uint32_t>(p)), b->g);
  return encode(a->i, g, b->lambda);
}

MulTable ReesSemigroup::table() const {
  MulTable t;
  t.size = size();
  t.zero = 0;
  t.table.resize(t.size * t.size);
  for (std::size_t a = 0; a < t.size; ++a) {
    for (std::size_t b = 0; b < t.size; ++b) {
      t.table[a * t.size + b] = static_cast<std::uint32_t>(product(a, b));
    }
  }
  return t;
}

ReesSemigroup rees_semigroup(GroupTable group, std::size_t i_size, std::size_t lambda_size,
                             std::vector<std::int32_t> sandwich) {
  ReesSemigroup s(std::move(group), i_size, lambda_size, std::move(sandwich));
  MulTable t = s.table();
  t.verify_associativity();
  for (std::uint32_t e : t.idempotents()) {
    if (e == 0) continue;
    MulTable::LocalGroup local = t.local_group(e);
    if (!local.group_ok) {
      throw internal_error("local_group", "e S e \\ {0} is not a group at an idempotent");
    }
  }
  return s;
}

}  // namespace semiq
