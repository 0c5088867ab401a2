#pragma once

#include <cstdint>

namespace nwt {

// Exact solution count split by the weight multiset of the triple: all three
// distinct (type 1), exactly two equal (type 2), all equal (type 3). The raw
// fields hold the pre-division assigned counts; raw_type1 is always divisible
// by 3 and raw_type2 by 2.
struct CountBreakdown {
  std::uint64_t type1 = 0;
  std::uint64_t type2 = 0;
  std::uint64_t type3 = 0;
  std::uint64_t total = 0;
  std::uint64_t raw_type1 = 0;
  std::uint64_t raw_type2 = 0;
};

}  // namespace nwt
