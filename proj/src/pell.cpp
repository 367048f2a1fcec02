#include "wsscodes/pell.hpp"

#include <cmath>

namespace wss {

namespace {

// floor(sqrt(x)) for x < 2^126
u128 isqrt(u128 x) {
  if (x == 0) return 0;
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool is_square(u128 x, u128& root) {
  root = isqrt(x);
  return root * root == x;
}

}  // namespace

FundamentalUnit fundamental_unit(u64 d, u64 b_bound) {
  require(d > 1, "Pell equation needs d > 1");
  u128 root = 0;
  if (is_square(d, root)) fail(Errc::invalid_argument, std::to_string(d) + " is a perfect square");
  for (u64 b = 1; b <= b_bound; ++b) {
    const u128 db2 = static_cast<u128>(d) * b * b;
    if (db2 >= 4 && is_square(db2 - 4, root)) return {d, static_cast<u64>(root), b, -1};
    if (is_square(db2 + 4, root)) return {d, static_cast<u64>(root), b, +1};
  }
  fail(Errc::bound_exceeded, "Pell bound exceeded: no solution of x^2 - " + std::to_string(d) +
                                 " y^2 = +-4 with y <= " + std::to_string(b_bound));
}

RecurrenceSpec recurrence_from_unit(const FundamentalUnit& u) {
  return {-static_cast<i64>(u.a), u.unit_norm};
}

}  // namespace wss
