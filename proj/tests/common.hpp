#pragma once

#include <map>

#include "skewnet/correspondence.hpp"

namespace skewnet::testing {

// Smooth (5, 6) fixtures by seed, generated once per process.
inline const ANet& smooth_net(std::uint64_t seed = 1) {
  static std::map<std::uint64_t, ANet> cache;
  auto it = cache.find(seed);
  if (it == cache.end()) it = cache.emplace(seed, random_regular_net(seed, 3, 5, 6).net).first;
  return it->second;
}

inline const ANet& degenerate() {
  static const ANet net = degenerate_net(1).net;
  return net;
}

inline Vector ints(const Field& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace skewnet::testing
