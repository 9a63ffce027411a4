#pragma once

namespace topolab {

// Antisymmetric symbols, 0-based indices. Conventions:
//   rank 3: epsilon3(0,1,2) = +1, i.e. eps_{123} = +1
//   rank 4: epsilon4(0,1,2,3) = +1, i.e. eps^{0123} = +1
constexpr int epsilon3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // parity of the permutation (i j k) of (0 1 2)
  int sign = 1;
  if (i > j) sign = -sign;
  if (j > k) sign = -sign;
  if (i > k) sign = -sign;
  return sign;
}

constexpr int epsilon4(int a, int b, int c, int d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) return 0;
  int sign = 1;
  if (a > b) sign = -sign;
  if (a > c) sign = -sign;
  if (a > d) sign = -sign;
  if (b > c) sign = -sign;
  if (b > d) sign = -sign;
  if (c > d) sign = -sign;
  return sign;
}

}  // namespace topolab
