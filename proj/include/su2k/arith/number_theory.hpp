#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "su2k/errors.hpp"

namespace su2k::nt {

inline long long mod_floor(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

inline int totient(int n) {
  if (n < 1) throw DomainError("totient: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

/// phi(m) for all m <= limit.
inline std::vector<int> totient_table(int limit) {
  std::vector<int> phi(static_cast<std::size_t>(limit) + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (int p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (int m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace detail {

// Exact division of integer polynomials (low degree first) by a monic divisor.
inline std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {mpz_class(0)};
  std::vector<mpz_class> quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    const mpz_class c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

}  // namespace detail

/// Coefficients (low degree first) of the n-th cyclotomic polynomial. Memoized, thread-safe.
inline std::shared_ptr<const std::vector<mpz_class>> cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const std::vector<mpz_class>>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  for (int d : divisors(n)) {
    if (cache.count(d)) continue;
    std::vector<mpz_class> poly(static_cast<std::size_t>(d) + 1);
    poly[0] = -1;
    poly[d] = 1;
    for (int e : divisors(d)) {
      if (e == d) continue;
      poly = detail::divide_monic(std::move(poly), *cache.at(e));
    }
    cache.emplace(d, std::make_shared<const std::vector<mpz_class>>(std::move(poly)));
  }
  return cache.at(n);
}

}  // namespace su2k::nt
