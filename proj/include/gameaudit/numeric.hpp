// Copyright 2026 The gameaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMEAUDIT_NUMERIC_HPP
#define GAMEAUDIT_NUMERIC_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gameaudit {

// Comparison tolerances, by role. Quantities compared directly from input
// data use a tighter scale than quantities that went through linear algebra.
namespace tol {
inline constexpr double tie = 1e-12;          // pure-payoff tie detection
inline constexpr double probability = 1e-9;   // probability-vector checks
inline constexpr double equilibrium = 1e-7;   // mixed-equilibrium verification
inline constexpr double pivot = 1e-10;        // rank-deficiency threshold
inline constexpr double constant_sum = 1e-12; // constant-sum cell check
}  // namespace tol

// Solves the dense system a * x = b by Gaussian elimination with partial
// pivoting. `a` is n x n in row-major order, n = b.size(). Returns nullopt
// when some pivot falls below `min_pivot` (rank-deficient system).
inline std::optional<std::vector<double>> solve_linear(std::vector<double> a,
                                                       std::vector<double> b,
                                                       double min_pivot = tol::pivot) {
  const std::size_t n = b.size();
  if (a.size() != n * n) throw std::invalid_argument("solve_linear: matrix/rhs size mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double pivot_mag = std::fabs(a[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::fabs(a[r * n + col]);
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    if (pivot_mag < min_pivot) return std::nullopt;
    if (pivot_row != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a[col * n + c], a[pivot_row * n + c]);
      std::swap(b[col], b[pivot_row]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] / a[col * n + col];
      if (factor == 0.0) continue;
      a[r * n + col] = 0.0;
      for (std::size_t c = col + 1; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t ri = n; ri-- > 0;) {
    double acc = b[ri];
    for (std::size_t c = ri + 1; c < n; ++c) acc -= a[ri * n + c] * x[c];
    x[ri] = acc / a[ri * n + ri];
  }
  return x;
}

// Formats with `digits` significant digits ("%.*g"). All human-readable
// numeric output in the toolkit goes through this, which keeps output
// byte-stable for identical inputs.
inline std::string format_significant(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

// Shortest representation that round-trips a double exactly; used when
// serializing games so a parse/serialize cycle preserves every cell.
inline std::string format_exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == v) {
    // Try shorter forms; pick the first that still round-trips.
    for (int digits = 1; digits <= 16; ++digits) {
      char probe[64];
      std::snprintf(probe, sizeof(probe), "%.*g", digits, v);
      std::sscanf(probe, "%lf", &back);
      if (back == v) return probe;
    }
  }
  return buf;
}

}  // namespace gameaudit

#endif  // GAMEAUDIT_NUMERIC_HPP
