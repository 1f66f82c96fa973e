#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbtg/errors.hpp"
#include "sbtg/soft_set.hpp"
#include "sbtg/topology.hpp"

namespace sbtg {

// Result of checking the soft-topology axioms (null and whole members present,
// closure under sectionwise pairwise unions and intersections). Witness
// indices refer to the canonicalized family.
struct SoftTopologyCheck {
  enum class Kind {
    ok,
    member_not_subset,
    missing_null,
    missing_whole,
    union_escapes,
    intersection_escapes,
  };
  Kind kind = Kind::ok;
  std::size_t a = 0, b = 0;
  std::optional<SoftSet> computed;
  std::vector<SoftSet> family;

  bool holds() const { return kind == Kind::ok; }

  std::string describe() const {
    switch (kind) {
      case Kind::ok:
        return "soft topology axioms hold";
      case Kind::member_not_subset:
        return "member " + std::to_string(a) + " is not a soft subset of the ambient soft set";
      case Kind::missing_null:
        return "the null soft set is missing";
      case Kind::missing_whole:
        return "the ambient soft set is missing";
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

inline std::vector<SoftSet> canonical_soft_family(std::vector<SoftSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

}  // namespace detail

inline SoftTopologyCheck check_soft_topology(std::vector<SoftSet> members, const SoftSet& ambient,
                                             std::size_t member_cap = 4096) {
  for (const auto& m : members) ambient.check_shape(m);
  SoftTopologyCheck r;
  r.family = detail::canonical_soft_family(std::move(members));
  if (r.family.size() > member_cap)
    throw cap_error("soft axiom check capped at " + std::to_string(member_cap) + " members");
  for (std::size_t i = 0; i < r.family.size(); ++i)
    if (!r.family[i].is_subset_of(ambient)) {
      r.kind = SoftTopologyCheck::Kind::member_not_subset;
      r.a = i;
      return r;
    }
  auto contains = [&](const SoftSet& s) {
    return std::binary_search(r.family.begin(), r.family.end(), s);
  };
  if (!contains(SoftSet::empty(ambient.universe_size(), ambient.param_count()))) {
    r.kind = SoftTopologyCheck::Kind::missing_null;
    return r;
  }
  if (!contains(ambient)) {
    r.kind = SoftTopologyCheck::Kind::missing_whole;
    return r;
  }
  for (std::size_t i = 0; i < r.family.size(); ++i)
    for (std::size_t j = i + 1; j < r.family.size(); ++j) {
      SoftSet u = r.family[i].union_with(r.family[j]);
      if (!contains(u)) {
        r.kind = SoftTopologyCheck::Kind::union_escapes;
        r.a = i;
        r.b = j;
        r.computed = std::move(u);
        return r;
      }
      SoftSet w = r.family[i].intersect(r.family[j]);
      if (!contains(w)) {
        r.kind = SoftTopologyCheck::Kind::intersection_escapes;
        r.a = i;
        r.b = j;
        r.computed = std::move(w);
        return r;
      }
    }
  return r;
}

// Soft topology over an ambient soft set. Members are kept in canonical
// order. The soft-discrete topology above the member cap is kept symbolic:
// membership is the subset test and no member list is stored.
class SoftTopology {
 public:
  static SoftTopology from_members(SoftSet ambient, std::vector<SoftSet> members) {
    return SoftTopology(std::move(ambient), detail::canonical_soft_family(std::move(members)),
                        false);
  }

  // Validating variant.
  static SoftTopology checked(SoftSet ambient, std::vector<SoftSet> members,
                              std::size_t member_cap = 4096) {
    auto check = check_soft_topology(std::move(members), ambient, member_cap);
    if (!check.holds()) throw shape_error("not a soft topology: " + check.describe());
    return SoftTopology(std::move(ambient), std::move(check.family), false);
  }

  static SoftTopology indiscrete(const SoftSet& ambient) {
    std::vector<SoftSet> m{SoftSet::empty(ambient.universe_size(), ambient.param_count()),
                           ambient};
    return SoftTopology(ambient, detail::canonical_soft_family(std::move(m)), false);
  }

  static SoftTopology discrete(const SoftSet& ambient, std::size_t member_cap = 1024) {
    // Member count is prod_t 2^|F(t)|; enumerate when it fits the cap.
    std::size_t total_bits = 0;
    for (std::size_t t = 0; t < ambient.param_count(); ++t)
      total_bits += ambient.section(t).count();
    if (total_bits > 20 || (std::uint64_t{1} << total_bits) > member_cap)
      return SoftTopology(ambient, {}, true);
    std::vector<std::vector<std::size_t>> elems(ambient.param_count());
    for (std::size_t t = 0; t < ambient.param_count(); ++t) elems[t] = ambient.section(t).bits();
    std::vector<SoftSet> members;
    members.reserve(std::size_t{1} << total_bits);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << total_bits); ++m) {
      SoftSet h(ambient.universe_size(), ambient.param_count());
      std::size_t bit = 0;
      for (std::size_t t = 0; t < ambient.param_count(); ++t)
        for (std::size_t k = 0; k < elems[t].size(); ++k, ++bit)
          if ((m >> bit) & 1) h.section(t).set(elems[t][k]);
      members.push_back(std::move(h));
    }
    return SoftTopology(ambient, detail::canonical_soft_family(std::move(members)), false);
  }

  const SoftSet& ambient() const { return ambient_; }
  bool is_symbolic_discrete() const { return symbolic_discrete_; }

  const std::vector<SoftSet>& members() const {
    if (symbolic_discrete_)
      throw cap_error("soft-discrete topology above the member cap has no explicit member list");
    return members_;
  }

  std::size_t member_count() const { return members().size(); }

  bool contains(const SoftSet& h) const {
    ambient_.check_shape(h);
    if (symbolic_discrete_) return h.is_subset_of(ambient_);
    return std::binary_search(members_.begin(), members_.end(), h);
  }

  bool operator==(const SoftTopology& o) const {
    return ambient_ == o.ambient_ && symbolic_discrete_ == o.symbolic_discrete_ &&
           members_ == o.members_;
  }

 private:
  SoftTopology(SoftSet ambient, std::vector<SoftSet> members, bool symbolic)
      : ambient_(std::move(ambient)), members_(std::move(members)), symbolic_discrete_(symbolic) {}

  SoftSet ambient_;
  std::vector<SoftSet> members_;
  bool symbolic_discrete_;
};

// Smallest soft topology containing the seeds: sectionwise pairwise
// intersections to a fixpoint, then pairwise unions.
inline SoftTopology generate_soft_topology(const SoftSet& ambient, std::vector<SoftSet> seeds,
                                           std::size_t member_cap = 4096) {
  for (const auto& s : seeds)
    if (!s.is_subset_of(ambient)) throw shape_error("seed is not a soft subset of the ambient");
  seeds.push_back(SoftSet::empty(ambient.universe_size(), ambient.param_count()));
  seeds.push_back(ambient);
  std::vector<SoftSet> family = detail::canonical_soft_family(std::move(seeds));
  auto close_under = [&](bool unions) {
    std::vector<SoftSet> sorted = family;
    std::sort(sorted.begin(), sorted.end());
    auto known = [&](const SoftSet& s) {
      return std::binary_search(sorted.begin(), sorted.end(), s);
    };
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        SoftSet c =
            unions ? family[i].union_with(family[j]) : family[i].intersect(family[j]);
        if (!known(c)) {
          sorted.insert(std::lower_bound(sorted.begin(), sorted.end(), c), c);
          family.push_back(std::move(c));
          if (family.size() > member_cap)
            throw cap_error("generated soft topology exceeds cap " + std::to_string(member_cap));
        }
      }
  };
  close_under(false);
  close_under(true);
  return SoftTopology::from_members(ambient, std::move(family));
}

// Component topology at parameter t, on the dense carrier listing F(t) by
// ascending universe index (the same ranks the soft-element space uses).
inline FiniteTopology component_topology(const SoftTopology& tau, std::size_t t,
                                         std::size_t discrete_cap = 16) {
  const SoftSet& f = tau.ambient();
  if (t >= f.param_count()) throw shape_error("parameter index out of range");
  if (!tau.is_symbolic_discrete() && tau.members().empty())
    throw shape_error("soft topology has no members");
  std::vector<std::size_t> elems = f.section(t).bits();
  const std::size_t n = elems.size();
  if (tau.is_symbolic_discrete()) {
    if (n > discrete_cap)
      throw cap_error("component of the symbolic soft-discrete topology exceeds the " +
                      std::to_string(discrete_cap) + "-point discrete cap");
    return FiniteTopology::discrete(n);
  }
  std::vector<std::int32_t> rank(f.universe_size(), -1);
  for (std::size_t k = 0; k < n; ++k) rank[elems[k]] = static_cast<std::int32_t>(k);
  std::vector<Bitset> opens;
  opens.reserve(tau.members().size());
  for (const auto& h : tau.members()) {
    Bitset o(n);
    h.section(t).for_each_bit([&](std::size_t x) { o.set(static_cast<std::size_t>(rank[x])); });
    opens.push_back(std::move(o));
  }
  // Sections of a valid soft topology form a topology: sectionwise union and
  // intersection act componentwise and the null/whole members give the ends.
  return FiniteTopology::from_valid_opens(n, std::move(opens));
}

inline std::vector<FiniteTopology> component_family(const SoftTopology& tau,
                                                    std::size_t discrete_cap = 16) {
  std::vector<FiniteTopology> out;
  out.reserve(tau.ambient().param_count());
  for (std::size_t t = 0; t < tau.ambient().param_count(); ++t)
    out.push_back(component_topology(tau, t, discrete_cap));
  return out;
}

// All soft subsets whose every section is component-open. The result contains
// the original members and is the largest soft topology with the same
// component topologies.
inline SoftTopology canonical_enlargement(const SoftTopology& tau, std::size_t cap = 100000) {
  const SoftSet& f = tau.ambient();
  if (tau.is_symbolic_discrete()) return tau;
  std::vector<FiniteTopology> comps = component_family(tau);
  std::vector<std::vector<std::size_t>> elems(f.param_count());
  for (std::size_t t = 0; t < f.param_count(); ++t) elems[t] = f.section(t).bits();
  std::uint64_t count = 1;
  for (const auto& c : comps) {
    if (count > cap / c.open_count())
      throw cap_error("canonical enlargement exceeds cap " + std::to_string(cap));
    count *= c.open_count();
  }
  std::vector<SoftSet> members;
  members.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> digit(f.param_count(), 0);
  for (std::uint64_t m = 0; m < count; ++m) {
    SoftSet h(f.universe_size(), f.param_count());
    for (std::size_t t = 0; t < f.param_count(); ++t) {
      const Bitset& open_dense = comps[t].opens()[digit[t]];
      open_dense.for_each_bit([&](std::size_t k) { h.section(t).set(elems[t][k]); });
    }
    members.push_back(std::move(h));
    for (std::size_t t = f.param_count(); t-- > 0;) {
      if (++digit[t] < comps[t].open_count()) break;
      digit[t] = 0;
    }
  }
  return SoftTopology::from_members(f, std::move(members));
}

// A soft topology is canonical when it already contains every soft subset
// with all sections component-open; equivalently, when its member count
// equals the product of its component open counts.
inline bool is_canonical(const SoftTopology& tau, std::size_t cap = 100000) {
  if (tau.is_symbolic_discrete()) return true;
  std::vector<FiniteTopology> comps = component_family(tau);
  std::uint64_t count = 1;
  for (const auto& c : comps) {
    if (count > cap / c.open_count())
      throw cap_error("canonical enlargement exceeds cap " + std::to_string(cap));
    count *= c.open_count();
  }
  return tau.member_count() == count;
}

// First member of the canonical enlargement, in canonical order, missing from
// the topology itself; empty when the topology is canonical. Gaps whose
// sections are all nonempty are preferred: a gap with an empty section has no
// soft elements and says nothing about the induced topology.
inline std::optional<SoftSet> noncanonical_gap_witness(const SoftTopology& tau,
                                                       std::size_t cap = 100000) {
  if (tau.is_symbolic_discrete()) return std::nullopt;
  SoftTopology enlarged = canonical_enlargement(tau, cap);
  std::optional<SoftSet> degenerate;
  for (const auto& h : enlarged.members()) {
    if (tau.contains(h)) continue;
    if (h.all_sections_nonempty()) return h;
    if (!degenerate) degenerate = h;
  }
  return degenerate;
}

// The topology induced on the soft elements: the product topology of the
// component spaces. A set of soft elements is open iff around each member it
// contains the full box of componentwise minimal neighborhoods.
class InducedSpace {
 public:
  InducedSpace(const SoftTopology& tau, std::uint64_t se_cap = SoftElementSpace::default_cap,
               std::size_t discrete_cap = 16)
      : space_(tau.ambient(), se_cap), components_(component_family(tau, discrete_cap)) {}

  const SoftElementSpace& space() const { return space_; }
  const std::vector<FiniteTopology>& components() const { return components_; }

  // Tightest induced-open set around the element at SE index i.
  Bitset minimal_box(std::uint64_t i) const {
    Bitset out(static_cast<std::size_t>(space_.size()));
    for_each_box_index(i, [&](std::uint64_t j) { out.set(static_cast<std::size_t>(j)); });
    return out;
  }

  bool is_open(const Bitset& w) const {
    if (w.size() != space_.size()) throw shape_error("SE subset mask has wrong length");
    bool open = true;
    w.for_each_bit([&](std::size_t i) {
      if (!open) return;
      for_each_box_index_until(i, [&](std::uint64_t j) {
        if (!w.test(static_cast<std::size_t>(j))) open = false;
        return open;
      });
    });
    return open;
  }

  // Explicit induced topology by subset enumeration. The result is a
  // topology by construction; the axiom re-check is the paranoid cross-check
  // and runs when the open count stays within validate_cap.
  FiniteTopology materialize(std::size_t carrier_cap = 16, std::size_t validate_cap = 4096,
                             bool* axioms_checked = nullptr) const {
    const std::uint64_t n = space_.size();
    if (n > carrier_cap)
      throw cap_error("induced topology materialization capped at " +
                      std::to_string(carrier_cap) + " soft elements");
    std::vector<Bitset> opens;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Bitset w = Bitset::from_u64(static_cast<std::size_t>(n), m);
      if (is_open(w)) opens.push_back(std::move(w));
    }
    bool checked = false;
    if (opens.size() <= validate_cap) {
      auto check = check_topology_axioms(opens, static_cast<std::size_t>(n), validate_cap);
      if (!check.holds())
        throw theorem_violation("materialized induced topology fails the axioms: " +
                                check.describe());
      checked = true;
    }
    if (axioms_checked) *axioms_checked = checked;
    return FiniteTopology::from_valid_opens(static_cast<std::size_t>(n), std::move(opens));
  }

  // SE-index mask of the members lying inside a soft member of the topology.
  Bitset member_mask(const SoftSet& h) const { return space_.member_mask(h); }

 private:
  template <typename Fn>
  void for_each_box_index(std::uint64_t i, Fn&& fn) const {
    for_each_box_index_until(i, [&](std::uint64_t j) {
      fn(j);
      return true;
    });
  }

  // Walks the box of i: all SE indices whose rank at each t lies in the
  // component minimal neighborhood of i's rank. Fn returns false to stop.
  template <typename Fn>
  bool for_each_box_index_until(std::uint64_t i, Fn&& fn) const {
    const std::size_t p = space_.param_count();
    std::vector<std::vector<std::size_t>> choices(p);
    for (std::size_t t = 0; t < p; ++t) {
      choices[t] = components_[t].minimal_neighborhood(space_.rank_at(i, t)).bits();
    }
    std::vector<std::size_t> digit(p, 0);
    for (;;) {
      std::uint64_t j = 0;
      for (std::size_t t = 0; t < p; ++t) j += choices[t][digit[t]] * space_.weight(t);
      if (!fn(j)) return false;
      bool rolled_over = true;
      for (std::size_t t = p; t-- > 0;) {
        if (++digit[t] < choices[t].size()) {
          rolled_over = false;
          break;
        }
        digit[t] = 0;
      }
      if (rolled_over) return true;
    }
  }

  SoftElementSpace space_;
  std::vector<FiniteTopology> components_;
};

inline bool is_induced_open(const SoftTopology& tau, const Bitset& se_mask,
                            std::uint64_t se_cap = SoftElementSpace::default_cap) {
  return InducedSpace(tau, se_cap).is_open(se_mask);
}

// An induced-open set of soft elements that is not a sectionwise product,
// found among pairwise unions of member masks; nullopt when none exists
// within the search (exhaustive over materialized opens for small spaces).
inline std::optional<Bitset> non_product_open_witness(const SoftTopology& tau,
                                                      std::uint64_t se_cap = 4096,
                                                      std::size_t carrier_cap = 16) {
  InducedSpace ind(tau, se_cap);
  if (!tau.is_symbolic_discrete()) {
    std::vector<Bitset> masks;
    masks.reserve(tau.members().size());
    for (const auto& h : tau.members()) masks.push_back(ind.member_mask(h));
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = i + 1; j < masks.size(); ++j) {
        Bitset w = masks[i] | masks[j];
        if (ind.is_open(w) && !is_section_product_closed(ind.space(), w)) return w;
      }
  }
  if (ind.space().size() <= carrier_cap) {
    const std::uint64_t n = ind.space().size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Bitset w = Bitset::from_u64(static_cast<std::size_t>(n), m);
      if (ind.is_open(w) && !is_section_product_closed(ind.space(), w)) return w;
    }
  }
  return std::nullopt;
}

struct SoftContinuityCheck {
  // Preimages of the target's declared members are open (the definitional
  // test) vs continuity into the full induced topology; the full verdict is
  // the definitive one and can be strictly stronger.
  bool members_verdict = true;
  std::optional<std::size_t> failing_member;  // index into target members
  bool full_verdict = true;
  std::optional<std::uint64_t> failing_point;  // SE index in the source
  bool verdicts_agree() const { return members_verdict == full_verdict; }
  bool holds() const { return full_verdict; }
};

// f maps source soft elements to target soft elements by SE index.
inline SoftContinuityCheck soft_continuous(const CarrierMap& f, const SoftTopology& src,
                                           const SoftTopology& dst,
                                           std::uint64_t se_cap = SoftElementSpace::default_cap) {
  InducedSpace si(src, se_cap);
  InducedSpace di(dst, se_cap);
  if (f.source_size != si.space().size() || f.target_size != di.space().size())
    throw shape_error("map endpoints do not match the soft-element spaces");
  SoftContinuityCheck r;
  if (!dst.is_symbolic_discrete()) {
    for (std::size_t k = 0; k < dst.members().size(); ++k) {
      if (!si.is_open(f.preimage_of(di.member_mask(dst.members()[k])))) {
        r.members_verdict = false;
        r.failing_member = k;
        break;
      }
    }
  } else {
    // Every singleton is a member of the discrete target, so the member test
    // coincides with the full test.
    r.members_verdict = true;
  }
  for (std::uint64_t x = 0; x < f.source_size && r.full_verdict; ++x) {
    const Bitset target_box = di.minimal_box(f(static_cast<std::size_t>(x)));
    Bitset source_box = si.minimal_box(x);
    source_box.for_each_bit([&](std::size_t u) {
      if (r.full_verdict && !target_box.test(f(u))) {
        r.full_verdict = false;
        r.failing_point = x;
      }
    });
  }
  if (dst.is_symbolic_discrete()) r.members_verdict = r.full_verdict;
  return r;
}

}  // namespace sbtg
