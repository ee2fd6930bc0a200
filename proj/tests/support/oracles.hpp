#pragma once

// Reference computations for the tests. Each one is written directly against
// GMP and deliberately shares no code with the library under test.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

/// a_n for n = 0..count-1 by the plain forward recurrence.
inline std::vector<mpq_class> forward_terms(const std::vector<mpq_class>& p, const std::vector<mpq_class>& init,
                                            std::size_t count) {
  std::vector<mpq_class> a(init.begin(), init.end());
  while (a.size() < count) {
    mpq_class next = 0;
    for (std::size_t j = 1; j <= p.size(); ++j) next += p[j - 1] * a[a.size() - j];
    a.push_back(next);
  }
  a.resize(count);
  return a;
}

/// a_{-1}, a_{-2}, ..., a_{-count} by solving the recurrence for a_{n-r}.
inline std::vector<mpq_class> backward_terms(const std::vector<mpq_class>& p, const std::vector<mpq_class>& init,
                                             std::size_t count) {
  const std::size_t r = p.size();
  // window[i] = a_{lowest + i}
  std::vector<mpq_class> window(init.begin(), init.end());
  std::vector<mpq_class> out;
  while (out.size() < count) {
    // a_{top} = sum p_j a_{top-j}, top = lowest + r - 1
    mpq_class rest = window[r - 1];
    for (std::size_t j = 1; j < r; ++j) rest -= p[j - 1] * window[r - 1 - j];
    const mpq_class below = rest / p[r - 1];
    out.push_back(below);
    window.insert(window.begin(), below);
    window.pop_back();
  }
  return out;
}

inline mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

inline mpz_class choose(long n, long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

/// S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n.
inline mpz_class stirling2(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class sum = 0;
  for (long j = 0; j <= k; ++j) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(k - j), static_cast<unsigned long>(n));
    t *= choose(k, j);
    if (j % 2) sum -= t;
    else sum += t;
  }
  return sum / factorial(k);
}

/// n! [t^n] (sec t + tan t) from the power series (1 + sin t) / cos t.
inline std::vector<mpq_class> sec_plus_tan(std::size_t count) {
  std::vector<mpq_class> s(count, 0);
  std::vector<mpq_class> c(count, 0);
  for (std::size_t n = 0; n < count; ++n) {
    const mpq_class inv = mpq_class(1, 1) / mpq_class(factorial(static_cast<long>(n)));
    const int sign = (n / 2) % 2 == 0 ? 1 : -1;
    if (n % 2 == 0) c[n] = sign * inv;
    else s[n] = sign * inv;
  }
  std::vector<mpq_class> num = s;
  num[0] += 1;
  std::vector<mpq_class> q(count, 0);
  for (std::size_t n = 0; n < count; ++n) {
    mpq_class v = num[n];
    for (std::size_t k = 1; k <= n; ++k) v -= c[k] * q[n - k];
    q[n] = v / c[0];
  }
  for (std::size_t n = 0; n < count; ++n) q[n] *= factorial(static_cast<long>(n));
  return q;
}

/// Largest k with k <= m * phi, by scanning; m * phi is irrational for m > 0.
inline long floor_m_phi(long m) {
  long k = 0;
  // k <= m phi  <=>  2k - m <= m sqrt 5
  auto ok = [&](long kk) { return 2 * kk - m <= 0 || (2 * kk - m) * (2 * kk - m) <= 5 * m * m; };
  while (ok(k + 1)) ++k;
  return k;
}

/// Largest k with k <= m (1 + sqrt 2).
inline long floor_m_silver(long m) {
  long k = 0;
  auto ok = [&](long kk) { return kk - m <= 0 || (kk - m) * (kk - m) <= 2 * m * m; };
  while (ok(k + 1)) ++k;
  return k;
}

/// Boustrophedon b_n by the alternating sweep described for the transform.
inline std::vector<mpq_class> boustrophedon(const std::vector<mpq_class>& a) {
  std::vector<mpq_class> b;
  std::vector<mpq_class> prev;
  for (std::size_t n = 0; n < a.size(); ++n) {
    std::vector<mpq_class> row{a[n]};
    for (std::size_t k = 0; k < n; ++k) row.push_back(row.back() + prev[n - 1 - k]);
    b.push_back(row.back());
    prev = row;
  }
  return b;
}

/// Integers in [-bound, bound], with a nonzero draw when `nonzero`.
inline long draw(std::mt19937_64& rng, long bound, bool nonzero = false) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    const long v = d(rng);
    if (!nonzero || v != 0) return v;
  }
}

inline mpq_class draw_rational(std::mt19937_64& rng, long bound, bool nonzero = false) {
  std::uniform_int_distribution<long> den(1, bound);
  mpq_class q(draw(rng, bound, nonzero), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace oracle
