#pragma once

#include <gmpxx.h>

#include <vector>

#include "lrs/error.hpp"
#include "lrs/rational.hpp"

namespace testing {

inline lrs::Rational R(const mpq_class& q) { return lrs::Rational(q.get_num(), q.get_den()); }
inline mpq_class Q(const lrs::Rational& r) { return r.raw(); }

inline std::vector<lrs::Rational> Rs(const std::vector<mpq_class>& v) {
  std::vector<lrs::Rational> out;
  for (const auto& q : v) out.push_back(R(q));
  return out;
}

inline std::vector<mpq_class> Qs(std::initializer_list<long> v) {
  std::vector<mpq_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline std::vector<lrs::Rational> ints(std::initializer_list<long> v) {
  std::vector<lrs::Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

template <class F>
lrs::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const lrs::Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected lrs::Error");
}

}  // namespace testing
