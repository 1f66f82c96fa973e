#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sbtg/bitset.hpp"
#include "sbtg/errors.hpp"

namespace sbtg {

// Total map between finite carriers, tabulated. table[x] is the image of x.
struct CarrierMap {
  std::size_t source_size = 0;
  std::size_t target_size = 0;
  std::vector<std::uint32_t> table;

  CarrierMap() = default;
  CarrierMap(std::size_t src, std::size_t tgt, std::vector<std::uint32_t> tab)
      : source_size(src), target_size(tgt), table(std::move(tab)) {
    if (table.size() != source_size) throw shape_error("carrier map table has wrong length");
    for (auto y : table)
      if (y >= target_size) throw shape_error("carrier map image out of range");
  }

  static CarrierMap identity(std::size_t n) {
    std::vector<std::uint32_t> t(n);
    std::iota(t.begin(), t.end(), 0u);
    return CarrierMap(n, n, std::move(t));
  }

  std::uint32_t operator()(std::size_t x) const { return table.at(x); }

  bool is_bijection() const {
    if (source_size != target_size) return false;
    std::vector<bool> hit(target_size, false);
    for (auto y : table) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    return true;
  }

  CarrierMap inverse() const {
    if (!is_bijection()) throw shape_error("carrier map is not a bijection");
    std::vector<std::uint32_t> inv(source_size);
    for (std::size_t x = 0; x < source_size; ++x) inv[table[x]] = static_cast<std::uint32_t>(x);
    return CarrierMap(target_size, source_size, std::move(inv));
  }

  // this after g: x -> this(g(x)).
  CarrierMap compose_after(const CarrierMap& g) const {
    if (g.target_size != source_size) throw shape_error("carrier maps do not compose");
    std::vector<std::uint32_t> t(g.source_size);
    for (std::size_t x = 0; x < g.source_size; ++x) t[x] = table[g.table[x]];
    return CarrierMap(g.source_size, target_size, std::move(t));
  }

  Bitset image_of(const Bitset& s) const {
    if (s.size() != source_size) throw shape_error("carrier map applied to wrong carrier");
    Bitset out(target_size);
    s.for_each_bit([&](std::size_t x) { out.set(table[x]); });
    return out;
  }

  Bitset preimage_of(const Bitset& s) const {
    if (s.size() != target_size) throw shape_error("carrier map preimage over wrong carrier");
    Bitset out(source_size);
    for (std::size_t x = 0; x < source_size; ++x)
      if (s.test(table[x])) out.set(x);
    return out;
  }

  bool operator==(const CarrierMap& o) const {
    return source_size == o.source_size && target_size == o.target_size && table == o.table;
  }
};

}  // namespace sbtg
