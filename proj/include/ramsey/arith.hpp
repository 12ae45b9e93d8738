#pragma once
#include <cstdint>

namespace ramsey {

using int64 = long long;

// C++ '/' truncates toward zero, which is wrong for the negative numerators
// that show up in the residue case splits. All floors/residues go through
// these two helpers so no formula ever touches floating point.
constexpr int64 floor_div(int64 a, int64 b) {
  int64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

constexpr int64 mod_euclid(int64 a, int64 b) { return a - floor_div(a, b) * b; }

constexpr int64 binom2(int64 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace ramsey
