#pragma once

#include <string>
#include <vector>

#include "lattice_loom/errors.hpp"

namespace loom {

inline bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

namespace detail {

// All projective representatives in F_q^n: nonzero vectors whose first
// nonzero coordinate is 1. Count (q^n - 1) / (q - 1). Lexicographic order.
inline std::vector<std::vector<int>> projective_points(int n, int q) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 0);
  while (true) {
    int lead = -1;
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) {
        lead = i;
        break;
      }
    if (lead >= 0 && v[lead] == 1) out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

inline int dot_mod(const std::vector<int>& a, const std::vector<int>& b, int q) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += 1LL * a[i] * b[i];
  return int(s % q);
}

inline std::string coord_label(const char* prefix, const std::vector<int>& v) {
  std::string s(prefix);
  for (int c : v) s += std::to_string(c);
  return s;
}

}  // namespace detail

}  // namespace loom
