#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbtg/carrier_map.hpp"
#include "sbtg/errors.hpp"
#include "sbtg/group.hpp"
#include "sbtg/soft_set.hpp"

namespace sbtg {

// A soft set over a group carrier is a soft group when every section is a
// subgroup.
struct SoftGroupCheck {
  bool holds = true;
  std::size_t param = 0;
  SubgroupCheck section_check;

  std::string describe() const {
    if (holds) return "every section is a subgroup";
    return "section at parameter index " + std::to_string(param) +
           " is not a subgroup: " + section_check.describe();
  }
};

inline SoftGroupCheck check_soft_group(const SoftSet& f, const FiniteGroup& g) {
  if (f.universe_size() != g.order())
    throw shape_error("soft set universe does not match the group carrier");
  SoftGroupCheck r;
  for (std::size_t t = 0; t < f.param_count(); ++t) {
    auto c = check_subgroup(g, f.section(t));
    if (!c.holds()) {
      r.holds = false;
      r.param = t;
      r.section_check = c;
      return r;
    }
  }
  return r;
}

inline bool is_soft_group(const SoftSet& f, const FiniteGroup& g) {
  return check_soft_group(f, g).holds;
}

class SoftGroup {
 public:
  SoftGroup(FiniteGroup group, SoftSet carrier)
      : group_(std::move(group)), carrier_(std::move(carrier)) {
    auto c = check_soft_group(carrier_, group_);
    if (!c.holds) throw shape_error("not a soft group: " + c.describe());
  }

  const FiniteGroup& group() const { return group_; }
  const SoftSet& carrier() const { return carrier_; }

 private:
  FiniteGroup group_;
  SoftSet carrier_;
};

enum class Side { left, right };

// Soft elements of a soft group under choicewise multiplication. Sections are
// subgroups, so products and inverses of choices stay inside their sections.
class SEGroup {
 public:
  explicit SEGroup(const SoftGroup& sg, std::uint64_t cap = SoftElementSpace::default_cap)
      : group_(sg.group()), space_(sg.carrier(), cap) {
    SoftElement e;
    e.choices.assign(space_.param_count(), group_.identity());
    identity_ = space_.index(e);
  }

  const SoftElementSpace& space() const { return space_; }
  const FiniteGroup& group() const { return group_; }
  std::uint64_t size() const { return space_.size(); }
  std::uint64_t identity() const { return identity_; }

  std::uint64_t mul(std::uint64_t i, std::uint64_t j) const {
    SoftElement c;
    c.choices.resize(space_.param_count());
    for (std::size_t t = 0; t < space_.param_count(); ++t)
      c.choices[t] = group_.mul(space_.choice_at(i, t), space_.choice_at(j, t));
    return space_.index(c);
  }

  std::uint64_t inv(std::uint64_t i) const {
    SoftElement c;
    c.choices.resize(space_.param_count());
    for (std::size_t t = 0; t < space_.param_count(); ++t)
      c.choices[t] = group_.inv(space_.choice_at(i, t));
    return space_.index(c);
  }

  std::uint64_t div(std::uint64_t i, std::uint64_t j) const { return mul(i, inv(j)); }

  CarrierMap translation_map(std::uint64_t a, Side side) const {
    const std::size_t n = static_cast<std::size_t>(size());
    std::vector<std::uint32_t> table(n);
    for (std::size_t x = 0; x < n; ++x)
      table[x] = static_cast<std::uint32_t>(side == Side::left ? mul(a, x) : mul(x, a));
    return CarrierMap(n, n, std::move(table));
  }

  CarrierMap inversion_map() const {
    const std::size_t n = static_cast<std::size_t>(size());
    std::vector<std::uint32_t> table(n);
    for (std::size_t x = 0; x < n; ++x) table[x] = static_cast<std::uint32_t>(inv(x));
    return CarrierMap(n, n, std::move(table));
  }

 private:
  FiniteGroup group_;
  SoftElementSpace space_;
  std::uint64_t identity_;
};

// Per-parameter maps between soft-group carriers: tables[t][x] is the image
// of universe element x at parameter t, or -1 where undefined. Must be total
// on the source section and land in the target section.
struct ParamMaps {
  std::vector<std::vector<std::int32_t>> tables;
};

struct ParamHomCheck {
  bool shapes_ok = true;
  std::string shape_problem;

  bool is_hom = true;
  std::size_t hom_param = 0;  // witness: phi_t(x*y) != phi_t(x)*phi_t(y)
  std::size_t hom_x = 0, hom_y = 0;

  CarrierMap se_map;   // SE(source) -> SE(target), filled when shapes_ok
  Bitset kernel;       // SE indices mapping to the target identity element
  Bitset image;        // SE indices of the target hit by the map
  bool kernel_is_normal_subgroup = false;
  bool image_is_subgroup = false;

  bool holds() const { return shapes_ok && is_hom; }
};

// Assembles the soft-element-level map phi(a)(t) = phi_t(a(t)) and checks it
// is a homomorphism parameterwise, with kernel/image structure.
inline ParamHomCheck parameterwise_hom(const ParamMaps& maps, const SoftGroup& src,
                                       const SoftGroup& dst,
                                       std::uint64_t cap = SoftElementSpace::default_cap) {
  ParamHomCheck r;
  const SoftSet& f = src.carrier();
  const SoftSet& h = dst.carrier();
  if (f.param_count() != h.param_count()) {
    r.shapes_ok = false;
    r.shape_problem = "source and target have different parameter counts";
    return r;
  }
  if (maps.tables.size() != f.param_count()) {
    r.shapes_ok = false;
    r.shape_problem = "expected one component map per parameter";
    return r;
  }
  for (std::size_t t = 0; t < f.param_count(); ++t) {
    if (maps.tables[t].size() != f.universe_size()) {
      r.shapes_ok = false;
      r.shape_problem = "component map at parameter index " + std::to_string(t) +
                        " is not tabulated over the source universe";
      return r;
    }
    bool ok = true;
    f.section(t).for_each_bit([&](std::size_t x) {
      std::int32_t y = maps.tables[t][x];
      if (y < 0 || static_cast<std::size_t>(y) >= h.universe_size() ||
          !h.section(t).test(static_cast<std::size_t>(y)))
        ok = false;
    });
    if (!ok) {
      r.shapes_ok = false;
      r.shape_problem = "component map at parameter index " + std::to_string(t) +
                        " does not send the source section into the target section";
      return r;
    }
  }

  const FiniteGroup& gs = src.group();
  const FiniteGroup& gd = dst.group();
  for (std::size_t t = 0; t < f.param_count() && r.is_hom; ++t) {
    auto elems = f.section(t).bits();
    for (std::size_t x : elems) {
      for (std::size_t y : elems) {
        auto phi = [&](std::size_t z) {
          return static_cast<std::size_t>(maps.tables[t][z]);
        };
        if (phi(gs.mul(x, y)) != gd.mul(phi(x), phi(y))) {
          r.is_hom = false;
          r.hom_param = t;
          r.hom_x = x;
          r.hom_y = y;
          break;
        }
      }
      if (!r.is_hom) break;
    }
  }

  SEGroup seg_src(src, cap);
  SEGroup seg_dst(dst, cap);
  const auto& sp = seg_src.space();
  const auto& dp = seg_dst.space();
  std::vector<std::uint32_t> table(static_cast<std::size_t>(sp.size()));
  for (std::uint64_t i = 0; i < sp.size(); ++i) {
    SoftElement b;
    b.choices.resize(sp.param_count());
    for (std::size_t t = 0; t < sp.param_count(); ++t)
      b.choices[t] = static_cast<std::uint32_t>(maps.tables[t][sp.choice_at(i, t)]);
    table[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(dp.index(b));
  }
  r.se_map = CarrierMap(static_cast<std::size_t>(sp.size()), static_cast<std::size_t>(dp.size()),
                        std::move(table));

  r.kernel = Bitset(static_cast<std::size_t>(sp.size()));
  r.image = Bitset(static_cast<std::size_t>(dp.size()));
  for (std::uint64_t i = 0; i < sp.size(); ++i) {
    std::uint32_t img = r.se_map(static_cast<std::size_t>(i));
    r.image.set(img);
    if (img == seg_dst.identity()) r.kernel.set(static_cast<std::size_t>(i));
  }

  if (r.is_hom) {
    bool normal = true;
    for (std::uint64_t x = 0; x < sp.size() && normal; ++x)
      r.kernel.for_each_bit([&](std::size_t k) {
        if (normal && !r.kernel.test(static_cast<std::size_t>(
                          seg_src.mul(seg_src.mul(x, k), seg_src.inv(x)))))
          normal = false;
      });
    r.kernel_is_normal_subgroup = normal;

    bool subgroup = r.image.test(static_cast<std::size_t>(seg_dst.identity()));
    r.image.for_each_bit([&](std::size_t a) {
      if (!subgroup) return;
      r.image.for_each_bit([&](std::size_t b) {
        if (subgroup && !r.image.test(static_cast<std::size_t>(seg_dst.div(a, b))))
          subgroup = false;
      });
    });
    r.image_is_subgroup = subgroup;
  }
  return r;
}

}  // namespace sbtg
