#include "semirings/divisibility.hpp"

#include <map>

namespace semirings {

std::vector<PowerProfile> power_profiles(const FiniteSemiring& s) {
  const int n = s.order;
  std::vector<PowerProfile> profiles(n);
  for (int a = 0; a < n; ++a) {
    PowerProfile& p = profiles[a];
    p.element = a;
    std::vector<int> seen_at(n, -1);
    ElementId v = a;
    int step = 0;
    while (seen_at[v] < 0) {
      seen_at[v] = step++;
      p.powers.push_back(v);
      v = s.mul.at(v, a);
    }
    p.pre_period = seen_at[v];
    p.period = step - seen_at[v];
  }
  return profiles;
}

DivisibilityResult is_mult_divisible(const FiniteSemiring& s) {
  const int n = s.order;
  // p_k[b] = b^k; the sequence p_1, p_2, ... is eventually periodic, and a
  // repeat of the whole map closes the cycle over every later exponent.
  std::vector<ElementId> power(n);
  for (int b = 0; b < n; ++b) power[b] = b;
  std::map<std::vector<ElementId>, int> seen;
  int k = 1;
  while (seen.try_emplace(power, k).second) {
    std::vector<bool> image(n, false);
    for (int b = 0; b < n; ++b) image[power[b]] = true;
    for (int a = 0; a < n; ++a)
      if (!image[a]) return DivisibilityResult{false, {{k, a}}};
    for (int b = 0; b < n; ++b) power[b] = s.mul.at(power[b], b);
    ++k;
  }
  return DivisibilityResult{true, std::nullopt};
}

DivisibilityResult is_mult_divisible_upto(const FiniteSemiring& s, int limit) {
  const int n = s.order;
  std::vector<ElementId> power(n);
  for (int b = 0; b < n; ++b) power[b] = b;
  for (int k = 1; k <= limit; ++k) {
    std::vector<bool> image(n, false);
    for (int b = 0; b < n; ++b) image[power[b]] = true;
    for (int a = 0; a < n; ++a)
      if (!image[a]) return DivisibilityResult{false, {{k, a}}};
    for (int b = 0; b < n; ++b) power[b] = s.mul.at(power[b], b);
  }
  return DivisibilityResult{true, std::nullopt};
}

bool finite_band_check(const FiniteSemiring& s) {
  if (!is_mult_divisible(s).divisible) return true;
  for (int x = 0; x < s.order; ++x)
    if (s.mul.at(x, x) != x) return false;
  return true;
}

}  // namespace semirings
