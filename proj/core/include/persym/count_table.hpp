#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "persym/bigint.hpp"
#include "persym/hankel.hpp"

namespace persym {

// Exact tally keyed by a rank index or a rank profile. Zero counts are never
// stored, so two tables are equal iff they agree on every key.
template <class Key>
class CountTable {
 public:
  using key_type = Key;
  using map_type = std::map<Key, BigInt>;
  using const_iterator = typename map_type::const_iterator;

  void add(const Key& key, const BigInt& n) {
    if (n == 0) return;
    auto& slot = counts_[key];
    slot += n;
    if (slot == 0) counts_.erase(key);
  }

  BigInt at(const Key& key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? BigInt{0} : it->second;
  }

  BigInt total() const {
    BigInt t = 0;
    for (const auto& [k, v] : counts_) t += v;
    return t;
  }

  CountTable& merge(const CountTable& other) {
    for (const auto& [k, v] : other.counts_) add(k, v);
    return *this;
  }

  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  const_iterator begin() const noexcept { return counts_.begin(); }
  const_iterator end() const noexcept { return counts_.end(); }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  map_type counts_;
};

using RankTable = CountTable<std::size_t>;
using ProfileTable = CountTable<RankProfile>;

inline std::string key_string(std::size_t rank) { return std::to_string(rank); }
inline std::string key_string(const RankProfile& p) { return p.to_key(); }

}  // namespace persym
