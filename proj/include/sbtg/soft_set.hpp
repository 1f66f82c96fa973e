#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbtg/bitset.hpp"
#include "sbtg/errors.hpp"

namespace sbtg {

namespace detail {

inline void check_labels(const std::vector<std::string>& labels, const char* what) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw label_error(std::string(what) + ": empty label");
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw label_error(std::string(what) + ": duplicate label '" + labels[i] + "'");
  }
}

}  // namespace detail

// Finite universe of alternatives, identified by distinct labels.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    detail::check_labels(labels_, "universe");
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  std::size_t require(std::string_view label) const {
    auto i = index_of(label);
    if (!i) throw label_error("unknown universe label '" + std::string(label) + "'");
    return *i;
  }

 private:
  std::vector<std::string> labels_;
};

// Nonempty, ordered list of parameters.
class ParameterSet {
 public:
  explicit ParameterSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw label_error("parameter set must be nonempty");
    detail::check_labels(labels_, "parameters");
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t t) const { return labels_.at(t); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t require(std::string_view label) const {
    for (std::size_t t = 0; t < labels_.size(); ++t)
      if (labels_[t] == label) return t;
    throw label_error("unknown parameter label '" + std::string(label) + "'");
  }

 private:
  std::vector<std::string> labels_;
};

// Soft set over a fixed universe and parameter list: one universe subset
// (section) per parameter. Shapes must match across binary operations.
// Ordering is parameter-major by section mask value; it is the canonical
// order for soft families.
class SoftSet {
 public:
  SoftSet(std::size_t universe_size, std::size_t param_count)
      : universe_size_(universe_size),
        sections_(param_count, Bitset(universe_size)) {
    if (param_count == 0) throw shape_error("soft set needs at least one parameter");
  }

  explicit SoftSet(std::vector<Bitset> sections) : sections_(std::move(sections)) {
    if (sections_.empty()) throw shape_error("soft set needs at least one parameter");
    universe_size_ = sections_[0].size();
    for (const auto& s : sections_)
      if (s.size() != universe_size_)
        throw shape_error("soft set sections live over different universes");
  }

  static SoftSet empty(std::size_t universe_size, std::size_t param_count) {
    return SoftSet(universe_size, param_count);
  }

  static SoftSet whole(std::size_t universe_size, std::size_t param_count) {
    SoftSet f(universe_size, param_count);
    for (auto& s : f.sections_) s = Bitset::full(universe_size);
    return f;
  }

  std::size_t universe_size() const { return universe_size_; }
  std::size_t param_count() const { return sections_.size(); }

  const Bitset& section(std::size_t t) const {
    if (t >= sections_.size()) throw shape_error("parameter index out of range");
    return sections_[t];
  }

  Bitset& section(std::size_t t) {
    if (t >= sections_.size()) throw shape_error("parameter index out of range");
    return sections_[t];
  }

  const std::vector<Bitset>& sections() const { return sections_; }

  bool is_null() const {
    for (const auto& s : sections_)
      if (s.any()) return false;
    return true;
  }

  bool all_sections_nonempty() const {
    for (const auto& s : sections_)
      if (s.none()) return false;
    return true;
  }

  bool same_shape_as(const SoftSet& o) const {
    return universe_size_ == o.universe_size_ && sections_.size() == o.sections_.size();
  }

  bool is_subset_of(const SoftSet& o) const {
    check_shape(o);
    for (std::size_t t = 0; t < sections_.size(); ++t)
      if (!sections_[t].is_subset_of(o.sections_[t])) return false;
    return true;
  }

  SoftSet union_with(const SoftSet& o) const {
    check_shape(o);
    SoftSet r(*this);
    for (std::size_t t = 0; t < sections_.size(); ++t) r.sections_[t] |= o.sections_[t];
    return r;
  }

  SoftSet intersect(const SoftSet& o) const {
    check_shape(o);
    SoftSet r(*this);
    for (std::size_t t = 0; t < sections_.size(); ++t) r.sections_[t] &= o.sections_[t];
    return r;
  }

  // Sectionwise complement relative to an ambient soft set.
  SoftSet complement_in(const SoftSet& ambient) const {
    check_shape(ambient);
    SoftSet r(ambient);
    for (std::size_t t = 0; t < sections_.size(); ++t)
      r.sections_[t] = ambient.sections_[t].minus(sections_[t]);
    return r;
  }

  bool operator==(const SoftSet& o) const {
    return universe_size_ == o.universe_size_ && sections_ == o.sections_;
  }
  bool operator!=(const SoftSet& o) const { return !(*this == o); }

  bool operator<(const SoftSet& o) const {
    check_shape(o);
    for (std::size_t t = 0; t < sections_.size(); ++t) {
      if (sections_[t] != o.sections_[t]) return sections_[t] < o.sections_[t];
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0x517cc1b727220a95ull;
    for (const auto& s : sections_) h = h * 0x100000001b3ull ^ s.hash();
    return h;
  }

  void check_shape(const SoftSet& o) const {
    if (!same_shape_as(o))
      throw shape_error("soft sets have different shapes (universe " +
                        std::to_string(universe_size_) + "x" + std::to_string(sections_.size()) +
                        " vs " + std::to_string(o.universe_size_) + "x" +
                        std::to_string(o.sections_.size()) + ")");
  }

 private:
  std::size_t universe_size_;
  std::vector<Bitset> sections_;
};

struct SoftSetHash {
  std::size_t operator()(const SoftSet& f) const { return f.hash(); }
};

enum class SetOp { union_op, intersection_op };

inline SoftSet soft_combine(SetOp op, const SoftSet& f, const SoftSet& h) {
  return op == SetOp::union_op ? f.union_with(h) : f.intersect(h);
}

inline bool soft_subset(const SoftSet& h, const SoftSet& f) { return h.is_subset_of(f); }

// Build a soft set from per-parameter lists of universe labels.
inline SoftSet make_soft_set(const Universe& u, const ParameterSet& params,
                             const std::vector<std::vector<std::string>>& section_labels) {
  if (section_labels.size() != params.size())
    throw shape_error("expected " + std::to_string(params.size()) + " sections, got " +
                      std::to_string(section_labels.size()));
  SoftSet f(u.size(), params.size());
  for (std::size_t t = 0; t < params.size(); ++t)
    for (const auto& label : section_labels[t]) f.section(t).set(u.require(label));
  return f;
}

// Soft element: one choice from F(t) for each parameter t, stored as
// universe indices in parameter order.
struct SoftElement {
  std::vector<std::uint32_t> choices;

  bool operator==(const SoftElement& o) const { return choices == o.choices; }
  bool operator<(const SoftElement& o) const { return choices < o.choices; }
};

// a belongs to H iff its choice lies in H's section at every parameter.
inline bool element_in(const SoftElement& a, const SoftSet& h) {
  if (a.choices.size() != h.param_count())
    throw shape_error("soft element arity does not match soft set");
  for (std::size_t t = 0; t < a.choices.size(); ++t)
    if (!h.section(t).test(a.choices[t])) return false;
  return true;
}

// Enumerated soft-element space of a soft set with all-nonempty sections.
// Order is mixed-radix with the last parameter varying fastest:
//   index(a) = sum_t rank_t(a(t)) * prod_{s>t} |F(s)|,
// where rank_t is the position of a(t) in F(t) listed by ascending universe
// index. index/element are exact inverses.
class SoftElementSpace {
 public:
  static constexpr std::uint64_t default_cap = 4096;

  explicit SoftElementSpace(SoftSet shape, std::uint64_t cap = default_cap)
      : shape_(std::move(shape)) {
    const std::size_t ucount = shape_.universe_size();
    const std::size_t pcount = shape_.param_count();
    elems_.resize(pcount);
    rank_.assign(pcount, std::vector<std::int32_t>(ucount, -1));
    for (std::size_t t = 0; t < pcount; ++t) {
      shape_.section(t).for_each_bit([&](std::size_t x) {
        rank_[t][x] = static_cast<std::int32_t>(elems_[t].size());
        elems_[t].push_back(static_cast<std::uint32_t>(x));
      });
      if (elems_[t].empty())
        throw shape_error("soft set has an empty section at parameter index " + std::to_string(t) +
                          "; its soft-element space is empty");
    }
    weight_.assign(pcount, 1);
    size_ = 1;
    for (std::size_t t = pcount; t-- > 0;) {
      weight_[t] = size_;
      const std::uint64_t n = elems_[t].size();
      if (size_ > cap / n)
        throw cap_error("soft-element space exceeds cap " + std::to_string(cap));
      size_ *= n;
    }
  }

  const SoftSet& shape() const { return shape_; }
  std::uint64_t size() const { return size_; }
  std::size_t param_count() const { return shape_.param_count(); }

  // Elements of F(t) by ascending universe index; rank r maps to
  // section_elements(t)[r].
  const std::vector<std::uint32_t>& section_elements(std::size_t t) const { return elems_.at(t); }

  std::size_t section_size(std::size_t t) const { return elems_.at(t).size(); }

  // Rank of universe element x inside section t, or -1 when absent.
  std::int32_t rank_in_section(std::size_t t, std::size_t x) const { return rank_.at(t).at(x); }

  SoftElement element(std::uint64_t index) const {
    if (index >= size_) throw shape_error("soft-element index out of range");
    SoftElement a;
    a.choices.resize(param_count());
    for (std::size_t t = 0; t < param_count(); ++t) {
      std::uint64_t r = index / weight_[t];
      index %= weight_[t];
      a.choices[t] = elems_[t][static_cast<std::size_t>(r)];
    }
    return a;
  }

  bool contains(const SoftElement& a) const {
    if (a.choices.size() != param_count()) return false;
    for (std::size_t t = 0; t < param_count(); ++t) {
      if (a.choices[t] >= shape_.universe_size()) return false;
      if (rank_[t][a.choices[t]] < 0) return false;
    }
    return true;
  }

  std::uint64_t index(const SoftElement& a) const {
    if (!contains(a)) throw shape_error("soft element is not a choice from this soft set");
    std::uint64_t idx = 0;
    for (std::size_t t = 0; t < param_count(); ++t)
      idx += static_cast<std::uint64_t>(rank_[t][a.choices[t]]) * weight_[t];
    return idx;
  }

  // Mask over SE indices of the elements lying in h (h must share the shape's
  // universe and parameter count).
  Bitset member_mask(const SoftSet& h) const {
    shape_.check_shape(h);
    Bitset mask(static_cast<std::size_t>(size_));
    for (std::uint64_t i = 0; i < size_; ++i)
      if (index_in(i, h)) mask.set(static_cast<std::size_t>(i));
    return mask;
  }

  // Membership of the element at SE index i in h, without materializing it.
  bool index_in(std::uint64_t i, const SoftSet& h) const {
    for (std::size_t t = 0; t < param_count(); ++t) {
      std::uint64_t r = i / weight_[t];
      i %= weight_[t];
      if (!h.section(t).test(elems_[t][static_cast<std::size_t>(r)])) return false;
    }
    return true;
  }

  // Universe index chosen at parameter t by the element at SE index i.
  std::uint32_t choice_at(std::uint64_t i, std::size_t t) const {
    return elems_[t][static_cast<std::size_t>((i / weight_[t]) % elems_[t].size())];
  }

  // Rank (position inside section t) chosen at parameter t by SE index i.
  std::size_t rank_at(std::uint64_t i, std::size_t t) const {
    return static_cast<std::size_t>((i / weight_[t]) % elems_[t].size());
  }

  std::uint64_t weight(std::size_t t) const { return weight_.at(t); }

 private:
  SoftSet shape_;
  std::vector<std::vector<std::uint32_t>> elems_;
  std::vector<std::vector<std::int32_t>> rank_;
  std::vector<std::uint64_t> weight_;
  std::uint64_t size_ = 0;
};

inline std::vector<SoftElement> enumerate_soft_elements(
    const SoftSet& f, std::uint64_t cap = SoftElementSpace::default_cap) {
  SoftElementSpace space(f, cap);
  std::vector<SoftElement> out;
  out.reserve(static_cast<std::size_t>(space.size()));
  for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.element(i));
  return out;
}

// Subset of a soft-element space, as a mask over SE indices.
struct SESubset {
  const SoftElementSpace* space = nullptr;
  Bitset members;

  SESubset() = default;
  SESubset(const SoftElementSpace& s, Bitset m) : space(&s), members(std::move(m)) {
    if (members.size() != s.size()) throw shape_error("SE subset mask has wrong length");
  }
};

// Sectionwise trace of an SE subset: section t collects the t-th choices of
// the members.
inline SoftSet sections_of(const SoftElementSpace& space, const Bitset& members) {
  if (members.size() != space.size()) throw shape_error("SE subset mask has wrong length");
  SoftSet out(space.shape().universe_size(), space.param_count());
  members.for_each_bit([&](std::size_t i) {
    for (std::size_t t = 0; t < space.param_count(); ++t)
      out.section(t).set(space.choice_at(i, t));
  });
  return out;
}

// True when the SE subset equals the full choice product of its sections,
// i.e. membership is decided coordinatewise.
inline bool is_section_product_closed(const SoftElementSpace& space, const Bitset& members) {
  SoftSet trace = sections_of(space, members);
  if (members.none()) return true;
  return members == space.member_mask(trace);
}

inline SoftSet sections_of(const SESubset& s) { return sections_of(*s.space, s.members); }
inline bool is_section_product_closed(const SESubset& s) {
  return is_section_product_closed(*s.space, s.members);
}

}  // namespace sbtg
