#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace skewnet {

/// Tunables shared by the library and the CLI.
struct Options {
  std::uint32_t prime = 32003;         // working prime for Macaulay ranks
  std::uint32_t second_prime = 32009;  // second prime of the QQ rank policy
  int degree_cap = 16;
  std::vector<std::uint64_t> fields{2, 3, 7};  // small fields for enumerations
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::uint64_t enumeration_limit = 10'000'000;
};

}  // namespace skewnet
