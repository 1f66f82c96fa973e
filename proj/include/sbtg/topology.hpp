#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sbtg/bitset.hpp"
#include "sbtg/carrier_map.hpp"
#include "sbtg/errors.hpp"
#include "sbtg/group.hpp"

namespace sbtg {

enum class SeparationLevel { none = -1, t0 = 0, t1 = 1, t2 = 2 };

inline const char* to_string(SeparationLevel l) {
  switch (l) {
    case SeparationLevel::none: return "none";
    case SeparationLevel::t0: return "T0";
    case SeparationLevel::t1: return "T1";
    case SeparationLevel::t2: return "T2";
  }
  return "";
}

// Result of checking the topology axioms on a finite family. Witness indices
// refer to the deduplicated, canonically sorted family returned alongside.
struct TopologyCheck {
  enum class Kind { ok, missing_empty, missing_full, union_escapes, intersection_escapes };
  Kind kind = Kind::ok;
  std::size_t a = 0, b = 0;
  Bitset computed;
  std::vector<Bitset> family;

  bool holds() const { return kind == Kind::ok; }

  std::string describe() const {
    switch (kind) {
      case Kind::ok:
        return "topology axioms hold";
      case Kind::missing_empty:
        return "the empty set is missing";
      case Kind::missing_full:
        return "the full carrier is missing";
      case Kind::union_escapes:
        return "union of members " + std::to_string(a) + " and " + std::to_string(b) +
               " is not a member";
      case Kind::intersection_escapes:
        return "intersection of members " + std::to_string(a) + " and " + std::to_string(b) +
               " is not a member";
    }
    return "";
  }
};

namespace detail {

inline std::vector<Bitset> canonical_family(std::vector<Bitset> family, std::size_t carrier) {
  for (const auto& s : family)
    if (s.size() != carrier) throw shape_error("family member is over the wrong carrier");
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

// Membership oracle over a canonical (sorted) family.
struct FamilyIndex {
  const std::vector<Bitset>* family;
  std::unordered_set<std::uint64_t> packed;  // used when masks fit one word
  bool use_packed;

  explicit FamilyIndex(const std::vector<Bitset>& f, std::size_t carrier) : family(&f) {
    use_packed = carrier <= 64;
    if (use_packed)
      for (const auto& s : f) packed.insert(s.to_u64());
  }

  bool contains(const Bitset& s) const {
    if (use_packed) return packed.count(s.to_u64()) != 0;
    return std::binary_search(family->begin(), family->end(), s);
  }
};

}  // namespace detail

// Checks closure under pairwise unions and intersections plus the presence of
// the empty set and the whole carrier. Pairwise closure suffices: finite
// unions and intersections reduce to pairwise ones.
inline TopologyCheck check_topology_axioms(std::vector<Bitset> family, std::size_t carrier,
                                           std::size_t member_cap = 4096) {
  TopologyCheck r;
  r.family = detail::canonical_family(std::move(family), carrier);
  if (r.family.size() > member_cap)
    throw cap_error("axiom check capped at " + std::to_string(member_cap) + " members");
  detail::FamilyIndex index(r.family, carrier);
  if (!index.contains(Bitset(carrier))) {
    r.kind = TopologyCheck::Kind::missing_empty;
    return r;
  }
  if (!index.contains(Bitset::full(carrier))) {
    r.kind = TopologyCheck::Kind::missing_full;
    return r;
  }
  const auto& fam = r.family;
  if (carrier <= 64) {
    // Packed fast path: the pair loop is quadratic in the family size.
    std::vector<std::uint64_t> masks(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) masks[i] = fam[i].to_u64();
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        if (!index.packed.count(masks[i] | masks[j])) {
          r.kind = TopologyCheck::Kind::union_escapes;
          r.a = i;
          r.b = j;
          r.computed = Bitset::from_u64(carrier, masks[i] | masks[j]);
          return r;
        }
        if (!index.packed.count(masks[i] & masks[j])) {
          r.kind = TopologyCheck::Kind::intersection_escapes;
          r.a = i;
          r.b = j;
          r.computed = Bitset::from_u64(carrier, masks[i] & masks[j]);
          return r;
        }
      }
    return r;
  }
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      Bitset u = fam[i] | fam[j];
      if (!index.contains(u)) {
        r.kind = TopologyCheck::Kind::union_escapes;
        r.a = i;
        r.b = j;
        r.computed = std::move(u);
        return r;
      }
      Bitset w = fam[i] & fam[j];
      if (!index.contains(w)) {
        r.kind = TopologyCheck::Kind::intersection_escapes;
        r.a = i;
        r.b = j;
        r.computed = std::move(w);
        return r;
      }
    }
  return r;
}

// Topology on a finite carrier, stored as the canonically sorted family of
// open sets with precomputed minimal open neighborhoods
//   N(x) = intersection of all opens containing x.
// A set is open iff it contains N(x) for each of its points.
class FiniteTopology {
 public:
  // Validates the axioms; use the named constructors for families that are
  // valid by construction.
  static FiniteTopology from_opens(std::size_t carrier, std::vector<Bitset> opens,
                                   std::size_t member_cap = 4096) {
    auto check = check_topology_axioms(std::move(opens), carrier, member_cap);
    if (!check.holds()) throw shape_error("not a topology: " + check.describe());
    return FiniteTopology(carrier, std::move(check.family), trusted_tag{});
  }

  // Caller guarantees the family is a topology (canonicalization still runs).
  static FiniteTopology from_valid_opens(std::size_t carrier, std::vector<Bitset> opens) {
    return FiniteTopology(carrier, detail::canonical_family(std::move(opens), carrier),
                          trusted_tag{});
  }

  static FiniteTopology discrete(std::size_t carrier) {
    if (carrier > 16) throw cap_error("explicit discrete topology capped at 16 points");
    std::vector<Bitset> opens;
    opens.reserve(std::size_t{1} << carrier);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << carrier); ++m)
      opens.push_back(Bitset::from_u64(carrier, m));
    return FiniteTopology(carrier, std::move(opens), trusted_tag{});
  }

  static FiniteTopology indiscrete(std::size_t carrier) {
    std::vector<Bitset> opens{Bitset(carrier)};
    if (carrier > 0) opens.push_back(Bitset::full(carrier));
    return FiniteTopology(carrier, detail::canonical_family(std::move(opens), carrier),
                          trusted_tag{});
  }

  // All unions of partition blocks. Valid by construction; blocks must
  // partition the carrier.
  static FiniteTopology from_partition(std::size_t carrier, const std::vector<Bitset>& blocks) {
    if (blocks.size() > 20) throw cap_error("partition topology capped at 20 blocks");
    Bitset seen(carrier);
    for (const auto& b : blocks) {
      if (b.size() != carrier) throw shape_error("partition block over the wrong carrier");
      if (b.none() || b.intersects(seen)) throw shape_error("blocks do not partition the carrier");
      seen |= b;
    }
    if (seen != Bitset::full(carrier)) throw shape_error("blocks do not cover the carrier");
    std::vector<Bitset> opens;
    opens.reserve(std::size_t{1} << blocks.size());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << blocks.size()); ++m) {
      Bitset u(carrier);
      for (std::size_t k = 0; k < blocks.size(); ++k)
        if ((m >> k) & 1) u |= blocks[k];
      opens.push_back(std::move(u));
    }
    return FiniteTopology(carrier, detail::canonical_family(std::move(opens), carrier),
                          trusted_tag{});
  }

  std::size_t carrier() const { return carrier_; }
  const std::vector<Bitset>& opens() const { return opens_; }
  std::size_t open_count() const { return opens_.size(); }

  const Bitset& minimal_neighborhood(std::size_t x) const { return min_nbhd_.at(x); }
  const std::vector<Bitset>& minimal_neighborhoods() const { return min_nbhd_; }

  // Openness via minimal neighborhoods; agrees with literal membership.
  bool is_open(const Bitset& w) const {
    if (w.size() != carrier_) throw shape_error("set is over the wrong carrier");
    bool open = true;
    w.for_each_bit([&](std::size_t x) {
      if (open && !min_nbhd_[x].is_subset_of(w)) open = false;
    });
    return open;
  }

  bool contains(const Bitset& w) const {
    return std::binary_search(opens_.begin(), opens_.end(), w);
  }

  bool is_closed(const Bitset& w) const { return is_open(w.complemented()); }

  bool is_discrete() const {
    for (std::size_t x = 0; x < carrier_; ++x)
      if (min_nbhd_[x].count() != 1) return false;
    return true;
  }

  bool operator==(const FiniteTopology& o) const {
    return carrier_ == o.carrier_ && opens_ == o.opens_;
  }
  bool operator!=(const FiniteTopology& o) const { return !(*this == o); }

 private:
  struct trusted_tag {};

  FiniteTopology(std::size_t carrier, std::vector<Bitset> opens, trusted_tag)
      : carrier_(carrier), opens_(std::move(opens)) {
    min_nbhd_.assign(carrier_, Bitset::full(carrier_));
    for (const auto& u : opens_)
      u.for_each_bit([&](std::size_t x) { min_nbhd_[x] &= u; });
  }

  std::size_t carrier_;
  std::vector<Bitset> opens_;
  std::vector<Bitset> min_nbhd_;
};

// Smallest topology containing the subbasis: close under pairwise
// intersections, then pairwise unions. Distributivity keeps the result
// intersection-closed, so one pass of each suffices.
inline FiniteTopology generate_topology(std::vector<Bitset> subbasis, std::size_t carrier,
                                        std::size_t open_cap = 65536) {
  std::vector<Bitset> family = detail::canonical_family(std::move(subbasis), carrier);
  family.push_back(Bitset(carrier));
  if (carrier > 0) family.push_back(Bitset::full(carrier));
  family = detail::canonical_family(std::move(family), carrier);

  auto close_under = [&](bool unions) {
    std::unordered_set<std::uint64_t> packed;
    const bool use_packed = carrier <= 64;
    std::vector<Bitset> big;  // sorted mirror for wide carriers
    auto known = [&](const Bitset& s) {
      if (use_packed) return packed.count(s.to_u64()) != 0;
      return std::binary_search(big.begin(), big.end(), s);
    };
    auto note = [&](const Bitset& s) {
      if (use_packed)
        packed.insert(s.to_u64());
      else
        big.insert(std::lower_bound(big.begin(), big.end(), s), s);
    };
    for (const auto& s : family) note(s);
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Bitset c = unions ? (family[i] | family[j]) : (family[i] & family[j]);
        if (!known(c)) {
          note(c);
          family.push_back(std::move(c));
          if (family.size() > open_cap)
            throw cap_error("generated topology exceeds cap " + std::to_string(open_cap));
        }
      }
    }
  };
  close_under(false);
  close_under(true);
  return FiniteTopology::from_valid_opens(carrier, std::move(family));
}

// ---- products ----------------------------------------------------------

// Points of a product carrier are packed row-major: (x, y) -> x * n2 + y.
inline std::size_t product_point(std::size_t x, std::size_t y, std::size_t n2) {
  return x * n2 + y;
}

// Minimal neighborhoods of the product topology: N((x,y)) = N(x) x N(y).
inline std::vector<Bitset> product_minimal_neighborhoods(const FiniteTopology& t1,
                                                         const FiniteTopology& t2) {
  const std::size_t n1 = t1.carrier(), n2 = t2.carrier();
  std::vector<Bitset> out(n1 * n2, Bitset(n1 * n2));
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y) {
      Bitset& n = out[product_point(x, y, n2)];
      t1.minimal_neighborhood(x).for_each_bit([&](std::size_t u) {
        t2.minimal_neighborhood(y).for_each_bit(
            [&](std::size_t v) { n.set(product_point(u, v, n2)); });
      });
    }
  return out;
}

inline bool is_open_in_product(const FiniteTopology& t1, const FiniteTopology& t2,
                               const Bitset& w) {
  const std::size_t n2 = t2.carrier();
  if (w.size() != t1.carrier() * n2) throw shape_error("set is over the wrong product carrier");
  bool open = true;
  w.for_each_bit([&](std::size_t p) {
    if (!open) return;
    const std::size_t x = p / n2, y = p % n2;
    t1.minimal_neighborhood(x).for_each_bit([&](std::size_t u) {
      if (!open) return;
      t2.minimal_neighborhood(y).for_each_bit([&](std::size_t v) {
        if (open && !w.test(product_point(u, v, n2))) open = false;
      });
    });
  });
  return open;
}

// Explicit product topology; enumerates all subsets of the product carrier,
// so both caps are tight by necessity.
inline FiniteTopology product_topology(const FiniteTopology& t1, const FiniteTopology& t2,
                                       std::size_t carrier_cap = 20,
                                       std::size_t open_cap = 65536) {
  const std::size_t n = t1.carrier() * t2.carrier();
  if (n > carrier_cap)
    throw cap_error("explicit product topology capped at carrier " + std::to_string(carrier_cap));
  std::vector<Bitset> opens;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Bitset w = Bitset::from_u64(n, m);
    if (is_open_in_product(t1, t2, w)) {
      opens.push_back(std::move(w));
      if (opens.size() > open_cap)
        throw cap_error("product topology exceeds cap " + std::to_string(open_cap));
    }
  }
  return FiniteTopology::from_valid_opens(n, std::move(opens));
}

// ---- continuity ---------------------------------------------------------

struct ContinuityCheck {
  bool holds = true;
  // Earliest failing point in scan order, with the target open whose
  // preimage fails to be open (the image's minimal neighborhood).
  std::optional<std::size_t> point;
  std::optional<Bitset> target_open;
};

// f is continuous iff f(N(x)) is contained in N(f(x)) for every x; on finite
// spaces this is equivalent to open preimages.
inline ContinuityCheck is_continuous(const CarrierMap& f, const FiniteTopology& src,
                                     const FiniteTopology& dst) {
  if (f.source_size != src.carrier() || f.target_size != dst.carrier())
    throw shape_error("map endpoints do not match the topologies");
  ContinuityCheck r;
  for (std::size_t x = 0; x < f.source_size; ++x) {
    const Bitset& target = dst.minimal_neighborhood(f(x));
    bool ok = true;
    src.minimal_neighborhood(x).for_each_bit([&](std::size_t u) {
      if (ok && !target.test(f(u))) ok = false;
    });
    if (!ok) {
      r.holds = false;
      r.point = x;
      r.target_open = target;
      return r;
    }
  }
  return r;
}

// Literal definition, kept as an oracle: every target open must pull back to
// an open set. Witness is the earliest offending open in canonical order.
inline ContinuityCheck is_continuous_preimage_form(const CarrierMap& f, const FiniteTopology& src,
                                                   const FiniteTopology& dst) {
  if (f.source_size != src.carrier() || f.target_size != dst.carrier())
    throw shape_error("map endpoints do not match the topologies");
  ContinuityCheck r;
  for (const auto& u : dst.opens()) {
    if (!src.is_open(f.preimage_of(u))) {
      r.holds = false;
      r.target_open = u;
      return r;
    }
  }
  return r;
}

// Continuity of f out of a product space (row-major packing) without
// materializing product opens: f(N(x) x N(y)) inside N(f(x,y)).
inline ContinuityCheck is_continuous_from_product(const CarrierMap& f, const FiniteTopology& src1,
                                                  const FiniteTopology& src2,
                                                  const FiniteTopology& dst) {
  const std::size_t n1 = src1.carrier(), n2 = src2.carrier();
  if (f.source_size != n1 * n2 || f.target_size != dst.carrier())
    throw shape_error("map endpoints do not match the topologies");
  ContinuityCheck r;
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y) {
      const Bitset& target = dst.minimal_neighborhood(f(product_point(x, y, n2)));
      bool ok = true;
      src1.minimal_neighborhood(x).for_each_bit([&](std::size_t u) {
        if (!ok) return;
        src2.minimal_neighborhood(y).for_each_bit([&](std::size_t v) {
          if (ok && !target.test(f(product_point(u, v, n2)))) ok = false;
        });
      });
      if (!ok) {
        r.holds = false;
        r.point = product_point(x, y, n2);
        r.target_open = target;
        return r;
      }
    }
  return r;
}

inline bool is_homeomorphism(const CarrierMap& f, const FiniteTopology& src,
                             const FiniteTopology& dst) {
  if (f.source_size != src.carrier() || f.target_size != dst.carrier())
    throw shape_error("map endpoints do not match the topologies");
  if (!f.is_bijection()) return false;
  return is_continuous(f, src, dst).holds && is_continuous(f.inverse(), dst, src).holds;
}

// ---- separation ---------------------------------------------------------

struct PairWitness {
  std::size_t x = 0, y = 0;
};

// Distinguishability and separation in terms of minimal neighborhoods:
//   some open holds x but not y      iff  y is outside N(x);
//   disjoint opens around x and y    iff  N(x) and N(y) are disjoint.
inline bool separation_holds(const FiniteTopology& t, SeparationLevel level,
                             PairWitness* witness = nullptr) {
  const std::size_t n = t.carrier();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool ok = true;
      switch (level) {
        case SeparationLevel::none:
          ok = true;
          break;
        case SeparationLevel::t0:
          ok = !t.minimal_neighborhood(x).test(y) || !t.minimal_neighborhood(y).test(x);
          break;
        case SeparationLevel::t1:
          ok = !t.minimal_neighborhood(x).test(y);
          break;
        case SeparationLevel::t2:
          ok = !t.minimal_neighborhood(x).intersects(t.minimal_neighborhood(y));
          break;
      }
      if (!ok) {
        if (witness) *witness = {x, y};
        return false;
      }
    }
  return true;
}

inline SeparationLevel separation_classify(const FiniteTopology& t) {
  if (separation_holds(t, SeparationLevel::t2)) return SeparationLevel::t2;
  if (separation_holds(t, SeparationLevel::t1)) return SeparationLevel::t1;
  if (separation_holds(t, SeparationLevel::t0)) return SeparationLevel::t0;
  return SeparationLevel::none;
}

// Pairwise separation over ordered pairs of distinct points: the first
// topology separates on the left, the second on the right.
inline bool pairwise_separation_holds(const FiniteTopology& t1, const FiniteTopology& t2,
                                      SeparationLevel level, PairWitness* witness = nullptr) {
  if (t1.carrier() != t2.carrier()) throw shape_error("pairwise separation needs one carrier");
  const std::size_t n = t1.carrier();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool ok = true;
      switch (level) {
        case SeparationLevel::none:
          ok = true;
          break;
        case SeparationLevel::t0:
          ok = !t1.minimal_neighborhood(x).test(y) || !t1.minimal_neighborhood(y).test(x) ||
               !t2.minimal_neighborhood(x).test(y) || !t2.minimal_neighborhood(y).test(x);
          break;
        case SeparationLevel::t1:
          ok = !t1.minimal_neighborhood(x).test(y) && !t2.minimal_neighborhood(y).test(x);
          break;
        case SeparationLevel::t2:
          ok = !t1.minimal_neighborhood(x).intersects(t2.minimal_neighborhood(y));
          break;
      }
      if (!ok) {
        if (witness) *witness = {x, y};
        return false;
      }
    }
  return true;
}

inline SeparationLevel pairwise_separation_classify(const FiniteTopology& t1,
                                                    const FiniteTopology& t2) {
  if (pairwise_separation_holds(t1, t2, SeparationLevel::t2)) return SeparationLevel::t2;
  if (pairwise_separation_holds(t1, t2, SeparationLevel::t1)) return SeparationLevel::t1;
  if (pairwise_separation_holds(t1, t2, SeparationLevel::t0)) return SeparationLevel::t0;
  return SeparationLevel::none;
}

// ---- connectedness ------------------------------------------------------

struct ConnectednessCheck {
  bool connected = true;
  Bitset component;  // when disconnected: a proper clopen set (a component)
};

// A finite space is connected iff the graph relating x and y whenever one
// lies in the other's minimal neighborhood has a single component. Components
// are clopen, so the component of point 0 witnesses disconnection.
inline ConnectednessCheck is_connected(const FiniteTopology& t) {
  ConnectednessCheck r;
  const std::size_t n = t.carrier();
  if (n == 0) return r;
  Bitset reached = Bitset::singleton(n, 0);
  std::vector<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t x = queue.back();
    queue.pop_back();
    auto visit = [&](std::size_t y) {
      if (!reached.test(y)) {
        reached.set(y);
        queue.push_back(y);
      }
    };
    t.minimal_neighborhood(x).for_each_bit(visit);
    for (std::size_t y = 0; y < n; ++y)
      if (t.minimal_neighborhood(y).test(x)) visit(y);
  }
  if (reached.count() != n) {
    r.connected = false;
    r.component = std::move(reached);
  }
  return r;
}

// ---- group topologies ---------------------------------------------------

struct GroupTopologyCheck {
  bool division_continuous = true;
  bool multiplication_continuous = true;
  bool inversion_continuous = true;
  // x, y, u, v with u in N(x), v in N(y), u * inv(v) outside N(x * inv(y)).
  std::optional<std::array<std::size_t, 4>> division_witness;

  bool holds() const { return division_continuous; }
  bool consistent() const {
    return division_continuous == (multiplication_continuous && inversion_continuous);
  }
};

// Group topology test through the two-sided division map (x, y) -> x * inv(y)
// on the product space; the separate multiplication/inversion verdicts are
// derived the same way and must agree.
inline GroupTopologyCheck is_topological_group(const FiniteGroup& g, const FiniteTopology& t) {
  if (g.order() != t.carrier()) throw shape_error("group and topology carriers differ");
  GroupTopologyCheck r;
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n && r.division_continuous; ++x)
    for (std::size_t y = 0; y < n && r.division_continuous; ++y) {
      const Bitset& target = t.minimal_neighborhood(g.div(x, y));
      t.minimal_neighborhood(x).for_each_bit([&](std::size_t u) {
        if (!r.division_continuous) return;
        t.minimal_neighborhood(y).for_each_bit([&](std::size_t v) {
          if (r.division_continuous && !target.test(g.div(u, v))) {
            r.division_continuous = false;
            r.division_witness = {x, y, u, v};
          }
        });
      });
    }
  for (std::size_t x = 0; x < n && r.multiplication_continuous; ++x)
    for (std::size_t y = 0; y < n && r.multiplication_continuous; ++y) {
      const Bitset& target = t.minimal_neighborhood(g.mul(x, y));
      t.minimal_neighborhood(x).for_each_bit([&](std::size_t u) {
        if (!r.multiplication_continuous) return;
        t.minimal_neighborhood(y).for_each_bit([&](std::size_t v) {
          if (r.multiplication_continuous && !target.test(g.mul(u, v)))
            r.multiplication_continuous = false;
        });
      });
    }
  for (std::size_t x = 0; x < n && r.inversion_continuous; ++x) {
    const Bitset& target = t.minimal_neighborhood(g.inv(x));
    t.minimal_neighborhood(x).for_each_bit([&](std::size_t u) {
      if (r.inversion_continuous && !target.test(g.inv(u))) r.inversion_continuous = false;
    });
  }
  return r;
}

struct BiGroupTopologyCheck {
  GroupTopologyCheck first, second;
  bool holds() const { return first.holds() && second.holds(); }
};

inline BiGroupTopologyCheck is_bitopological_group(const FiniteGroup& g, const FiniteTopology& t1,
                                                   const FiniteTopology& t2) {
  return {is_topological_group(g, t1), is_topological_group(g, t2)};
}

}  // namespace sbtg
