#pragma once

#include <optional>

namespace cckit {

/// Positive solutions of A*a + B*b = C: (a, b) + t*(step_a, step_b).
/// `bounded` means only finitely many positive solutions exist; then
/// `count` of them, starting at the base and going along the step.
struct DiophantineSolution {
  long long a = 0;
  long long b = 0;
  long long step_a = 0;
  long long step_b = 0;
  bool bounded = false;
  long long count = 0;  // meaningful when bounded
};

/// Minimal positive solution (smallest a) or nullopt when gcd(A,B) does not
/// divide C or no positive lattice point exists. Throws InvalidInput for A = B = 0.
std::optional<DiophantineSolution> diophantine_positive(long long A, long long B, long long C);

/// g = gcd(a, b) = a*x + b*y.
long long extended_gcd(long long a, long long b, long long& x, long long& y);

}  // namespace cckit
