#include "lrs/closed_form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numeric>
#include <numbers>
#include <string>

#include "lrs/error.hpp"
#include "lrs/irs_algebra.hpp"

namespace lrs {
namespace {

// Guard bits on top of twice the requested precision. A root of multiplicity
// m is only resolved to about working/m bits, so the working precision must
// stay well above the clustering radius for every multiplicity we expect.
constexpr long kGuardBits = 64;

long working_precision(long bits) { return 2 * bits + kGuardBits; }

ComplexHP real_complex(const BigFloat& x) { return {x, BigFloat(x.precision())}; }

ComplexHP from_rational(const Rational& q, long bits) { return real_complex(BigFloat(q, bits)); }

struct HornerResult {
  ComplexHP value;
  ComplexHP derivative;
  BigFloat magnitude_bound;  // sum |c_i| |z|^i, scales the rounding noise
};

// Descending real coefficients, leading first.
HornerResult horner(const std::vector<BigFloat>& desc, const ComplexHP& z) {
  const long bits = z.precision();
  ComplexHP value(bits);
  ComplexHP deriv(bits);
  BigFloat bound(bits);
  const BigFloat az = abs(z);
  for (const auto& c : desc) {
    deriv = deriv * z + value;
    value = value * z + real_complex(c);
    bound = bound * az + abs(c);
  }
  return {std::move(value), std::move(deriv), std::move(bound)};
}

ComplexHP evaluate(const std::vector<BigFloat>& desc, const ComplexHP& z) {
  ComplexHP value(z.precision());
  for (const auto& c : desc) value = value * z + real_complex(c);
  return value;
}

std::vector<BigFloat> differentiate(const std::vector<BigFloat>& desc) {
  std::vector<BigFloat> out;
  const std::size_t deg = desc.size() - 1;
  for (std::size_t i = 0; i < deg; ++i) {
    out.push_back(desc[i] * BigFloat(static_cast<double>(deg - i), desc[i].precision()));
  }
  return out;
}

std::vector<ComplexHP> initial_guesses(const CoefficientSet& coefficients, long bits) {
  // Fujiwara-style radius from double approximations of the coefficients.
  const std::size_t r = coefficients.order();
  double radius = 0.0;
  for (std::size_t j = 1; j <= r; ++j) {
    const double c = std::fabs(coefficients.p(j).to_double());
    if (c > 0) radius = std::max(radius, std::pow(c, 1.0 / static_cast<double>(j)));
  }
  radius = std::max(2.0 * radius, 1e-3);
  std::vector<ComplexHP> z;
  for (std::size_t k = 0; k < r; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(r) + 0.7;
    z.emplace_back(BigFloat(radius * std::cos(theta), bits), BigFloat(radius * std::sin(theta), bits));
  }
  return z;
}

std::vector<ComplexHP> aberth(const CoefficientSet& coefficients, const std::vector<BigFloat>& desc,
                              long bits) {
  const std::size_t r = coefficients.order();
  std::vector<ComplexHP> z = initial_guesses(coefficients, bits);
  if (r == 1) {
    z[0] = real_complex(-desc[1]);
    return z;
  }
  const BigFloat noise = ldexp2(-(bits - 8 - 2 * static_cast<long>(std::bit_width(r))), bits);
  const ComplexHP one = real_complex(BigFloat(1.0, bits));
  std::vector<bool> done(r, false);
  const long max_iterations = 64 + 4 * bits;
  for (long it = 0; it < max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < r; ++k) {
      if (done[k]) continue;
      HornerResult h = horner(desc, z[k]);
      if (abs(h.value) <= noise * h.magnitude_bound) {
        done[k] = true;
        continue;
      }
      all_done = false;
      const ComplexHP w = h.value / h.derivative;
      ComplexHP s(bits);
      for (std::size_t j = 0; j < r; ++j) {
        if (j != k) s += one / (z[k] - z[j]);
      }
      z[k] -= w / (one - w * s);
    }
    if (all_done) return z;
  }
  throw Error(ErrorCode::non_convergence,
              "root iteration did not converge after " + std::to_string(max_iterations) +
                  " sweeps; raise the precision");
}

// Union-find over approximations closer than `radius` (relative to magnitude).
std::vector<std::vector<std::size_t>> cluster(const std::vector<ComplexHP>& z, const BigFloat& radius) {
  const std::size_t r = z.size();
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  const BigFloat one(1.0, radius.precision());
  auto scale = [&](std::size_t i, std::size_t j) {
    return std::max(one, std::max(abs(z[i]), abs(z[j])));
  };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (abs(z[i] - z[j]) < radius * scale(i, j)) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(r, -1);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  // A chain of close pairs whose ends are far apart, or two clusters only a
  // few radii apart, has no clear-cut multiplicity.
  const BigFloat margin = radius * BigFloat(4.0, radius.precision());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t a : groups[g]) {
      for (std::size_t b : groups[g]) {
        if (a < b && abs(z[a] - z[b]) >= radius * scale(a, b)) {
          throw Error(ErrorCode::ambiguous_clustering,
                      "root cluster wider than the clustering radius; multiplicity is ambiguous");
        }
      }
      for (std::size_t h = g + 1; h < groups.size(); ++h) {
        for (std::size_t b : groups[h]) {
          if (abs(z[a] - z[b]) < margin * scale(a, b)) {
            throw Error(ErrorCode::ambiguous_clustering,
                        "distinct roots within a few clustering radii; multiplicity is ambiguous");
          }
        }
      }
    }
  }
  return groups;
}

ComplexHP refine(const std::vector<BigFloat>& desc, ComplexHP z, int multiplicity) {
  // The (m-1)-th derivative has a simple root at an m-fold root of p.
  std::vector<BigFloat> target = desc;
  for (int i = 1; i < multiplicity; ++i) target = differentiate(target);
  const long bits = z.precision();
  const BigFloat tiny = ldexp2(-(bits - 4), bits);
  for (int step = 0; step < 16; ++step) {
    HornerResult h = horner(target, z);
    if (h.derivative.re.is_zero() && h.derivative.im.is_zero()) break;
    const ComplexHP delta = h.value / h.derivative;
    z -= delta;
    const BigFloat one(1.0, bits);
    if (abs(delta) <= tiny * std::max(one, abs(z))) break;
  }
  return z;
}

bool root_order(const CharacteristicRoot& a, const CharacteristicRoot& b) {
  // Descending real part, then descending imaginary part, compared coarsely
  // so conjugate pairs and equal real parts sort stably.
  const double ar = a.alpha.re.to_double();
  const double br = b.alpha.re.to_double();
  if (std::fabs(ar - br) > 1e-30 * std::max(1.0, std::fabs(ar))) return ar > br;
  return a.alpha.im.to_double() > b.alpha.im.to_double();
}

}  // namespace

RootDecomposition::RootDecomposition(std::vector<CharacteristicRoot> roots, Polynomial characteristic,
                                     std::vector<BigFloat> residuals, long precision_bits)
    : roots_(std::move(roots)),
      characteristic_(std::move(characteristic)),
      residuals_(std::move(residuals)),
      precision_bits_(precision_bits) {
  int total = 0;
  for (const auto& root : roots_) total += root.multiplicity;
  if (total != characteristic_.degree()) {
    throw Error(ErrorCode::invalid_argument, "root multiplicities do not add up to the polynomial degree");
  }
}

Polynomial characteristic_polynomial(const CoefficientSet& coefficients) {
  const std::size_t r = coefficients.order();
  std::vector<Rational> asc(r + 1, Rational(0));
  asc[r] = Rational(1);
  for (std::size_t j = 1; j <= r; ++j) asc[r - j] = -coefficients.p(j);
  return Polynomial(std::move(asc));
}

RootDecomposition characteristic_roots(const CoefficientSet& coefficients, long precision_bits) {
  if (precision_bits < 32) {
    throw Error(ErrorCode::invalid_argument, "precision must be at least 32 bits");
  }
  const long bits = working_precision(precision_bits);
  Polynomial characteristic = characteristic_polynomial(coefficients);
  std::vector<BigFloat> desc;
  for (auto it = characteristic.coeffs().rbegin(); it != characteristic.coeffs().rend(); ++it) {
    desc.emplace_back(*it, bits);
  }

  const std::vector<ComplexHP> approx = aberth(coefficients, desc, bits);
  const BigFloat radius = ldexp2(-(precision_bits / 3), bits);
  const auto groups = cluster(approx, radius);

  std::vector<CharacteristicRoot> roots;
  for (const auto& group : groups) {
    ComplexHP center(bits);
    for (std::size_t i : group) center += approx[i];
    center *= BigFloat(1.0, bits) / BigFloat(static_cast<double>(group.size()), bits);
    const int m = static_cast<int>(group.size());
    ComplexHP alpha = refine(desc, std::move(center), m);
    // The coefficients are real, so a root closer to the axis than the
    // clustering radius is its own conjugate.
    const BigFloat one(1.0, bits);
    const BigFloat mag = abs(alpha);
    if (abs(alpha.im) < radius * (mag > one ? mag : one)) alpha.im = BigFloat(bits);
    roots.push_back({std::move(alpha), m});
  }
  std::sort(roots.begin(), roots.end(), root_order);

  const BigFloat limit = ldexp2(-(precision_bits / 2), bits);
  std::vector<BigFloat> residuals;
  for (const auto& root : roots) {
    BigFloat residual = abs(evaluate(desc, root.alpha));
    if (residual > limit) {
      throw Error(ErrorCode::non_convergence,
                  "root residual above 2^-" + std::to_string(precision_bits / 2) + "; raise the precision");
    }
    residuals.push_back(std::move(residual));
  }
  return RootDecomposition(std::move(roots), std::move(characteristic), std::move(residuals), precision_bits);
}

ComplexHP irs_closed_form(const RootDecomposition& decomposition, long n) {
  const auto& roots = decomposition.roots();
  const long r = static_cast<long>(decomposition.order());
  if (n < 1 - r) {
    throw Error(ErrorCode::index_out_of_range, "closed form is defined for n >= -r+1");
  }
  const long bits = roots.front().alpha.precision();
  const ComplexHP one = real_complex(BigFloat(1.0, bits));
  ComplexHP total(bits);
  for (std::size_t j = 0; j < roots.size(); ++j) {
    const ComplexHP& alpha = roots[j].alpha;
    const auto m = static_cast<std::size_t>(roots[j].multiplicity);
    // Taylor coefficients at alpha of prod_{k != j} (z - alpha_k)^{-m_k}, up to
    // order m-1.
    std::vector<ComplexHP> g(m, ComplexHP(bits));
    g[0] = one;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (k == j) continue;
      const long mk = roots[k].multiplicity;
      const ComplexHP inv = one / (alpha - roots[k].alpha);
      std::vector<ComplexHP> factor;
      ComplexHP power = pow(inv, mk);
      for (std::size_t s = 0; s < m; ++s) {
        // (-1)^s C(mk+s-1, s) d^{-mk-s}
        BigFloat c(Rational(binomial(mk + static_cast<long>(s) - 1, static_cast<long>(s))), bits);
        if (s % 2 == 1) c = -c;
        factor.push_back(power * c);
        power *= inv;
      }
      std::vector<ComplexHP> next(m, ComplexHP(bits));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; a + b < m; ++b) next[a + b] += g[a] * factor[b];
      }
      g = std::move(next);
    }
    // Residue of z^n g(z) / (z - alpha)^m: sum_i C(n,i) alpha^{n-i} g_{m-1-i}.
    for (std::size_t i = 0; i < m; ++i) {
      const BigInt c = binomial(n, static_cast<long>(i));
      if (c == 0) continue;
      const ComplexHP term = pow(alpha, n - static_cast<long>(i)) * BigFloat(Rational(c), bits);
      total += term * g[m - 1 - i];
    }
  }
  return with_precision(total, decomposition.precision_bits());
}

ComplexHP general_closed_form(const SequenceSpec& spec, const RootDecomposition& roots, long n) {
  if (spec.order() != roots.order()) {
    throw Error(ErrorCode::invalid_argument, "root decomposition order does not match the sequence");
  }
  const long bits = roots.roots().front().alpha.precision();
  ComplexHP total(bits);
  for (const ShiftTerm& term : representation_weights(spec)) {
    total += irs_closed_form(roots, n + term.shift) * BigFloat(term.weight, bits);
  }
  return with_precision(total, roots.precision_bits());
}

ComplexHP order2_closed_form(const SequenceSpec& spec, long n, long precision_bits) {
  if (spec.order() != 2) {
    throw Error(ErrorCode::precondition_failed, "order2_closed_form requires an order-2 sequence");
  }
  const RootDecomposition decomposition = characteristic_roots(spec.coefficients(), precision_bits);
  const auto& roots = decomposition.roots();
  const long bits = roots.front().alpha.precision();
  const ComplexHP a0 = from_rational(spec.a(0), bits);
  const ComplexHP a1 = from_rational(spec.a(1), bits);
  ComplexHP value(bits);
  if (roots.size() == 1) {
    const ComplexHP& alpha = roots[0].alpha;
    value = a1 * pow(alpha, n - 1) * BigFloat(static_cast<double>(n), bits) -
            a0 * pow(alpha, n) * BigFloat(static_cast<double>(n - 1), bits);
  } else {
    const ComplexHP& alpha = roots[0].alpha;
    const ComplexHP& beta = roots[1].alpha;
    const ComplexHP diff = alpha - beta;
    value = ((a1 - beta * a0) / diff) * pow(alpha, n) - ((a1 - alpha * a0) / diff) * pow(beta, n);
  }
  return with_precision(value, precision_bits);
}

BigFloat relative_error(const ComplexHP& approx, const Rational& exact) {
  const long bits = approx.precision();
  const ComplexHP e = from_rational(exact, bits);
  const BigFloat one(1.0, bits);
  return abs(approx - e) / std::max(one, abs(e.re));
}

BigFloat closed_form_tolerance(long precision_bits) { return ldexp2(-(precision_bits / 4 + 3), precision_bits); }

}  // namespace lrs
