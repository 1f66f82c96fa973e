#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbtg/bitset.hpp"
#include "sbtg/carrier_map.hpp"
#include "sbtg/errors.hpp"

namespace sbtg {

// Outcome of validating a multiplication table. On failure, `witness`
// holds the offending elements: a row/column index for closure or identity,
// a triple for associativity, a single element for missing inverse.
struct GroupTableCheck {
  enum class Kind {
    ok,
    bad_shape,
    not_closed,
    no_identity,
    not_associative,
    no_inverse,
  };
  Kind kind = Kind::ok;
  std::vector<std::size_t> witness;
  std::size_t identity = 0;

  bool holds() const { return kind == Kind::ok; }

  std::string describe() const {
    switch (kind) {
      case Kind::ok:
        return "group axioms hold";
      case Kind::bad_shape:
        return "multiplication table is not square over the carrier";
      case Kind::not_closed:
        return "entry at (" + std::to_string(witness[0]) + ", " + std::to_string(witness[1]) +
               ") is outside the carrier";
      case Kind::no_identity:
        return "no two-sided identity element";
      case Kind::not_associative:
        return "associativity fails at (" + std::to_string(witness[0]) + ", " +
               std::to_string(witness[1]) + ", " + std::to_string(witness[2]) + ")";
      case Kind::no_inverse:
        return "element " + std::to_string(witness[0]) + " has no inverse";
    }
    return "";
  }
};

inline GroupTableCheck check_group_table(std::size_t order,
                                         const std::vector<std::uint32_t>& table) {
  GroupTableCheck r;
  if (order == 0 || table.size() != order * order) {
    r.kind = GroupTableCheck::Kind::bad_shape;
    return r;
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (at(a, b) >= order) {
        r.kind = GroupTableCheck::Kind::not_closed;
        r.witness = {a, b};
        return r;
      }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a)
      ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) {
    r.kind = GroupTableCheck::Kind::no_identity;
    return r;
  }
  r.identity = *identity;
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          r.kind = GroupTableCheck::Kind::not_associative;
          r.witness = {a, b, c};
          return r;
        }
  for (std::size_t a = 0; a < order; ++a) {
    bool has = false;
    for (std::size_t b = 0; b < order && !has; ++b)
      has = at(a, b) == *identity && at(b, a) == *identity;
    if (!has) {
      r.kind = GroupTableCheck::Kind::no_inverse;
      r.witness = {a};
      return r;
    }
  }
  return r;
}

// Finite group given by its multiplication table. Construction validates all
// axioms; the error message names the violated axiom and a witness.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<std::uint32_t> table)
      : order_(order), table_(std::move(table)) {
    auto check = check_group_table(order_, table_);
    if (!check.holds()) throw shape_error("not a group: " + check.describe());
    identity_ = static_cast<std::uint32_t>(check.identity);
    inverse_.resize(order_);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        if (mul(a, b) == identity_) inverse_[a] = static_cast<std::uint32_t>(b);
  }

  static FiniteGroup trivial() { return cyclic(1); }

  static FiniteGroup cyclic(std::size_t n) {
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
    return FiniteGroup(n, std::move(t));
  }

  // Dihedral group of order 2n: indices 0..n-1 are rotations r^k, indices
  // n..2n-1 are reflections s*r^k.
  static FiniteGroup dihedral(std::size_t n) {
    const std::size_t order = 2 * n;
    auto enc = [&](bool flip, std::size_t k) { return (flip ? n : 0) + k; };
    std::vector<std::uint32_t> t(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        bool fa = a >= n, fb = b >= n;
        std::size_t ka = a % n, kb = b % n;
        // (s^fa r^ka)(s^fb r^kb) = s^(fa+fb) r^(kb +/- ka): r^k s = s r^(-k).
        std::size_t k = fb ? (kb + n - ka % n) % n : (ka + kb) % n;
        t[a * order + b] = static_cast<std::uint32_t>(enc(fa != fb, k));
      }
    return FiniteGroup(order, std::move(t));
  }

  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t n = g.order() * h.order();
    auto enc = [&](std::size_t a, std::size_t b) { return a * h.order() + b; };
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t a1 = 0; a1 < g.order(); ++a1)
      for (std::size_t a2 = 0; a2 < h.order(); ++a2)
        for (std::size_t b1 = 0; b1 < g.order(); ++b1)
          for (std::size_t b2 = 0; b2 < h.order(); ++b2)
            t[enc(a1, a2) * n + enc(b1, b2)] =
                static_cast<std::uint32_t>(enc(g.mul(a1, b1), h.mul(a2, b2)));
    return FiniteGroup(n, std::move(t));
  }

  std::size_t order() const { return order_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inv(std::size_t a) const { return inverse_[a]; }
  std::uint32_t div(std::size_t a, std::size_t b) const { return mul(a, inv(b)); }
  const std::vector<std::uint32_t>& table() const { return table_; }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  std::size_t order_;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_;
  std::vector<std::uint32_t> inverse_;
};

// Subgroup test with a witness: either the missing identity, an element
// whose inverse escapes, or a product that escapes.
struct SubgroupCheck {
  enum class Kind { ok, empty_set, no_identity, inverse_escapes, product_escapes };
  Kind kind = Kind::ok;
  std::vector<std::size_t> witness;

  bool holds() const { return kind == Kind::ok; }

  std::string describe() const {
    switch (kind) {
      case Kind::ok:
        return "subgroup";
      case Kind::empty_set:
        return "empty subset";
      case Kind::no_identity:
        return "does not contain the identity";
      case Kind::inverse_escapes:
        return "inverse of element " + std::to_string(witness[0]) + " escapes";
      case Kind::product_escapes:
        return "product of (" + std::to_string(witness[0]) + ", " + std::to_string(witness[1]) +
               ") escapes";
    }
    return "";
  }
};

inline SubgroupCheck check_subgroup(const FiniteGroup& g, const Bitset& subset) {
  SubgroupCheck r;
  if (subset.size() != g.order()) throw shape_error("subset is over the wrong carrier");
  if (subset.none()) {
    r.kind = SubgroupCheck::Kind::empty_set;
    return r;
  }
  if (!subset.test(g.identity())) {
    r.kind = SubgroupCheck::Kind::no_identity;
    return r;
  }
  std::vector<std::size_t> elems = subset.bits();
  for (std::size_t a : elems)
    if (!subset.test(g.inv(a))) {
      r.kind = SubgroupCheck::Kind::inverse_escapes;
      r.witness = {a};
      return r;
    }
  for (std::size_t a : elems)
    for (std::size_t b : elems)
      if (!subset.test(g.mul(a, b))) {
        r.kind = SubgroupCheck::Kind::product_escapes;
        r.witness = {a, b};
        return r;
      }
  return r;
}

inline bool is_subgroup(const FiniteGroup& g, const Bitset& subset) {
  return check_subgroup(g, subset).holds();
}

inline bool is_normal_subgroup(const FiniteGroup& g, const Bitset& subgroup) {
  if (!is_subgroup(g, subgroup)) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    Bitset conj(g.order());
    subgroup.for_each_bit([&](std::size_t h) { conj.set(g.mul(g.mul(x, h), g.inv(x))); });
    if (conj != subgroup) return false;
  }
  return true;
}

// Subgroup generated by a subset.
inline Bitset generated_subgroup(const FiniteGroup& g, const Bitset& seed) {
  if (seed.size() != g.order()) throw shape_error("subset is over the wrong carrier");
  Bitset cur(g.order());
  cur.set(g.identity());
  cur |= seed;
  seed.for_each_bit([&](std::size_t a) { cur.set(g.inv(a)); });
  for (;;) {
    Bitset next = cur;
    cur.for_each_bit([&](std::size_t a) {
      cur.for_each_bit([&](std::size_t b) { next.set(g.mul(a, b)); });
    });
    if (next == cur) return cur;
    cur = next;
  }
}

// All subgroups, in canonical (mask value) order. Grows closures one
// generator at a time until no new subgroup appears; meant for small groups.
inline std::vector<Bitset> all_subgroups(const FiniteGroup& g, std::size_t order_cap = 16) {
  if (g.order() > order_cap) throw cap_error("subgroup enumeration capped at order " +
                                             std::to_string(order_cap));
  std::vector<Bitset> found;
  auto add = [&](const Bitset& s) {
    for (const auto& f : found)
      if (f == s) return;
    found.push_back(s);
  };
  Bitset none(g.order());
  add(generated_subgroup(g, none));
  for (;;) {
    std::size_t before = found.size();
    std::vector<Bitset> snapshot = found;
    for (const auto& s : snapshot)
      for (std::size_t x = 0; x < g.order(); ++x) {
        Bitset seed = s;
        seed.set(x);
        add(generated_subgroup(g, seed));
      }
    if (found.size() == before) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Re-index a subgroup as a standalone group. to_parent maps the new dense
// indices back to parent elements.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const Bitset& subgroup,
                                     std::vector<std::uint32_t>* to_parent = nullptr) {
  auto check = check_subgroup(g, subgroup);
  if (!check.holds()) throw shape_error("not a subgroup: " + check.describe());
  std::vector<std::size_t> elems = subgroup.bits();
  std::vector<std::int32_t> rank(g.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) rank[elems[i]] = static_cast<std::int32_t>(i);
  const std::size_t n = elems.size();
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = static_cast<std::uint32_t>(rank[g.mul(elems[i], elems[j])]);
  if (to_parent) {
    to_parent->clear();
    for (auto e : elems) to_parent->push_back(static_cast<std::uint32_t>(e));
  }
  return FiniteGroup(n, std::move(t));
}

// Cosets of a subgroup as a partition of the carrier, canonical order.
inline std::vector<Bitset> left_cosets(const FiniteGroup& g, const Bitset& subgroup) {
  auto check = check_subgroup(g, subgroup);
  if (!check.holds()) throw shape_error("not a subgroup: " + check.describe());
  std::vector<Bitset> out;
  Bitset seen(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen.test(x)) continue;
    Bitset coset(g.order());
    subgroup.for_each_bit([&](std::size_t h) { coset.set(g.mul(x, h)); });
    seen |= coset;
    out.push_back(coset);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sbtg
