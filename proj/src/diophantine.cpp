#include "cckit/diophantine.hpp"

#include <limits>

#include "cckit/multigraph.hpp"

namespace cckit {

long long extended_gcd(long long a, long long b, long long& x, long long& y) {
  // Iterative, signs handled at the end so g >= 0.
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

}  // namespace

std::optional<DiophantineSolution> diophantine_positive(long long A, long long B, long long C) {
  if (A == 0 && B == 0) throw InvalidInput("degenerate Diophantine equation: A = B = 0");
  long long x = 0, y = 0;
  long long g = extended_gcd(A, B, x, y);
  if (C % g != 0) return std::nullopt;

  // Particular solution and direction: (x0 + db*t, y0 - da*t).
  i128 k = C / g;
  i128 x0 = static_cast<i128>(x) * k;
  i128 y0 = static_cast<i128>(y) * k;
  i128 db = B / g;
  i128 da = A / g;

  const i128 inf = std::numeric_limits<long long>::max();
  i128 lo = -inf, hi = inf;
  auto constrain = [&](i128 base, i128 coef) {  // base + coef*t >= 1
    if (coef == 0) {
      if (base < 1) lo = inf;  // empty
      return;
    }
    if (coef > 0) {
      i128 v = ceil_div(1 - base, coef);
      if (v > lo) lo = v;
    } else {
      i128 v = floor_div(1 - base, coef);
      if (v < hi) hi = v;
    }
  };
  constrain(x0, db);
  constrain(y0, -da);
  if (lo > hi) return std::nullopt;

  DiophantineSolution s;
  // Pick the end of the range giving the smallest a.
  i128 t;
  if (db > 0) {
    t = lo;
  } else if (db < 0) {
    t = hi;
  } else {
    t = lo != -inf ? lo : (hi != inf ? hi : 0);
  }
  if (t == inf || t == -inf) return std::nullopt;
  i128 a = x0 + db * t;
  i128 b = y0 - da * t;
  i128 step_a = db > 0 ? db : -db;
  i128 step_b = db > 0 ? -da : da;
  if (db == 0) {
    step_a = 0;
    step_b = da > 0 ? da : -da;
  }
  s.a = checked_narrow(a);
  s.b = checked_narrow(b);
  s.step_a = checked_narrow(step_a);
  s.step_b = checked_narrow(step_b);
  s.bounded = lo != -inf && hi != inf;
  if (s.bounded) s.count = checked_narrow(hi - lo + 1);
  return s;
}

}  // namespace cckit
