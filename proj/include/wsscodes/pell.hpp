#pragma once

#include "wsscodes/modnum.hpp"
#include "wsscodes/recurrence.hpp"

namespace wss {

inline constexpr u64 kDefaultPellBound = 10'000'000;

/// (a + b*sqrt(d)) / 2 with (a, b) the least positive solution of
/// a^2 - d b^2 = +-4.
struct FundamentalUnit {
  u64 d;
  u64 a;
  u64 b;
  int unit_norm;  // (a^2 - d b^2) / 4
};

/// Ascending scan over b; for each b the norm -1 solution is preferred.
/// Non-fundamental d is accepted and solved literally.
FundamentalUnit fundamental_unit(u64 d, u64 b_bound = kDefaultPellBound);

/// F_{n+2} = a F_{n+1} - norm F_n, i.e. characteristic polynomial
/// X^2 - a X + norm.
RecurrenceSpec recurrence_from_unit(const FundamentalUnit& u);

}  // namespace wss
