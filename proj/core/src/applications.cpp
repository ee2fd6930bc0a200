#include "lrs/applications.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lrs/bigfloat.hpp"
#include "lrs/closed_form.hpp"
#include "lrs/error.hpp"
#include "lrs/json_io.hpp"
#include "lrs/polynomial.hpp"

namespace lrs {

CoefficientSet stirling_coefficients(long k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "Stirling column needs k >= 1");
  Polynomial prod({Rational(1)});
  for (long j = 1; j <= k; ++j) prod = prod * Polynomial({Rational(1), Rational(-j)});
  std::vector<Rational> p;
  for (long j = 1; j <= k; ++j) p.push_back(-prod.coeff(static_cast<std::size_t>(j)));
  return CoefficientSet(std::move(p));
}

std::vector<std::vector<BigInt>> stirling_triangle(long n_max) {
  if (n_max < 0) throw Error(ErrorCode::invalid_argument, "Stirling triangle needs n_max >= 0");
  std::vector<std::vector<BigInt>> s;
  s.push_back({BigInt(1)});
  for (long n = 0; n < n_max; ++n) {
    const auto& prev = s.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n + 2), 0);
    for (long k = 1; k <= n + 1; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      const BigInt left = ku <= static_cast<std::size_t>(n) ? BigInt(k * prev[ku]) : BigInt(0);
      row[ku] = left + prev[ku - 1];
    }
    s.push_back(std::move(row));
  }
  return s;
}

std::vector<Rational> stirling_column(long k, std::size_t count) {
  const BilateralSequence seq(make_irs(stirling_coefficients(k)));
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(seq.term(static_cast<long>(n)));
  if (count > 0) {
    const auto tri = stirling_triangle(static_cast<long>(count));
    for (std::size_t n = 0; n < count; ++n) {
      const auto& row = tri[n + 1];
      const BigInt expected = static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : BigInt(0);
      if (out[n] != Rational(expected)) throw std::logic_error("Stirling column disagrees with the triangle");
    }
  }
  return out;
}

WythoffVariant parse_variant(std::string_view name) {
  if (name == "fibonacci") return WythoffVariant::fibonacci;
  if (name == "pell") return WythoffVariant::pell;
  throw Error(ErrorCode::invalid_argument, "unknown variant '" + std::string(name) + "' (fibonacci|pell)");
}

std::string_view to_string(WythoffVariant variant) {
  return variant == WythoffVariant::fibonacci ? "fibonacci" : "pell";
}

BigInt wythoff_second_initial(WythoffVariant variant, long j) {
  if (j < 0) throw Error(ErrorCode::invalid_argument, "row index must be >= 0");
  const BigInt m = j + 1;
  BigInt root;
  if (variant == WythoffVariant::fibonacci) {
    // floor((m + sqrt(5 m^2)) / 2); sqrt(5 m^2) is irrational, so the floor of
    // the sum equals m + isqrt(5 m^2) halved.
    const BigInt sq = 5 * m * m;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    return BigInt((m + root) / 2);
  }
  const BigInt sq = 2 * m * m;
  mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
  return BigInt(m + root - 1);
}

SequenceSpec wythoff_row_spec(WythoffVariant variant, long j) {
  const CoefficientSet cs = variant == WythoffVariant::fibonacci ? CoefficientSet({1, 1}) : CoefficientSet({2, 1});
  return SequenceSpec(cs, {Rational(j), Rational(wythoff_second_initial(variant, j))});
}

std::vector<std::vector<BigInt>> wythoff_array(WythoffVariant variant, long rows, long cols) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::invalid_argument, "rows and cols must be >= 1");
  const BigInt p1 = variant == WythoffVariant::fibonacci ? 1 : 2;
  std::vector<std::vector<BigInt>> out;
  for (long j = 0; j < rows; ++j) {
    std::vector<BigInt> row{BigInt(j), wythoff_second_initial(variant, j)};
    while (row.size() < static_cast<std::size_t>(cols)) row.push_back(p1 * row[row.size() - 1] + row[row.size() - 2]);
    row.resize(static_cast<std::size_t>(cols));
    out.push_back(std::move(row));
  }
  return out;
}

bool wythoff_closed_form_check(WythoffVariant variant, long j, long n, long precision_bits) {
  if (j < 0 || n < 0) throw Error(ErrorCode::invalid_argument, "j and n must be >= 0");
  const long bits = precision_bits + 64;
  const BigFloat one(Rational(1), bits);
  const BigFloat f(Rational(wythoff_second_initial(variant, j)), bits);
  const BigFloat jj(Rational(j), bits);
  BigFloat s(bits);
  BigFloat alpha(bits);
  BigFloat beta(bits);
  BigFloat scale(bits);
  if (variant == WythoffVariant::fibonacci) {
    s = sqrt(BigFloat(Rational(5), bits));
    const BigFloat two(Rational(2), bits);
    alpha = (one + s) / two;
    beta = (one - s) / two;
    scale = s;
  } else {
    s = sqrt(BigFloat(Rational(2), bits));
    alpha = one + s;
    beta = one - s;
    scale = BigFloat(Rational(2), bits) * s;
  }
  // Pell rows carry the "-1" of their second initial inside the coefficients;
  // f already has it subtracted, so both variants share one formula.
  const BigFloat ca = (f - jj * beta) / scale;
  const BigFloat cb = (f - jj * alpha) / scale;
  const ComplexHP za(alpha, BigFloat(bits));
  const ComplexHP zb(beta, BigFloat(bits));
  const ComplexHP value = pow(za, n) * ca - pow(zb, n) * cb;

  const BilateralSequence row(wythoff_row_spec(variant, j));
  return relative_error(value, row.term(n)) <= closed_form_tolerance(precision_bits);
}

PartitionReport wythoff_partition_check(long rows, long bound) {
  if (rows < 1) throw Error(ErrorCode::invalid_argument, "rows must be >= 1");
  if (bound < 0) throw Error(ErrorCode::invalid_argument, "bound must be >= 0");
  PartitionReport report;
  if (bound == 0) return report;
  const BigInt next_row_start = BigInt(rows) + wythoff_second_initial(WythoffVariant::fibonacci, rows);
  if (next_row_start <= bound)
    throw Error(ErrorCode::insufficient_rows, std::to_string(rows) + " rows do not cover [1, " + std::to_string(bound) +
                                                  "]: row " + std::to_string(rows) + " starts at " +
                                                  next_row_start.get_str());
  std::map<long, int> seen;
  for (long j = 0; j < rows; ++j) {
    BigInt x = j;
    BigInt y = wythoff_second_initial(WythoffVariant::fibonacci, j);
    for (;;) {
      BigInt z = x + y;
      if (z > bound) break;
      ++seen[z.get_si()];
      x = y;
      y = z;
    }
  }
  for (long v = 1; v <= bound; ++v) {
    const auto it = seen.find(v);
    if (it == seen.end()) report.gaps.emplace_back(v);
    else if (it->second > 1) report.duplicates.emplace_back(v);
  }
  report.passed = report.gaps.empty() && report.duplicates.empty();
  return report;
}

Boustrophedon boustrophedon(std::span<const Rational> a) {
  if (a.empty()) throw Error(ErrorCode::invalid_argument, "boustrophedon needs a nonempty sequence");
  Boustrophedon out;
  auto& t = out.triangle;
  t.push_back({a[0]});
  for (std::size_t n = 0; n + 1 < a.size(); ++n) {
    std::vector<Rational> row{a[n + 1]};
    for (std::size_t k = 0; k <= n; ++k) row.push_back(row[k] + t[n][n - k]);
    t.push_back(std::move(row));
  }
  for (const auto& row : t) out.b.push_back(row.back());
  return out;
}

std::vector<Rational> zigzag_numbers(std::size_t count) {
  if (count == 0) return {};
  std::vector<Rational> delta(count, Rational(0));
  delta[0] = 1;
  return boustrophedon(delta).b;
}

bool boustrophedon_egf_check(std::span<const Rational> a) {
  const auto b = boustrophedon(a).b;
  const auto z = zigzag_numbers(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational sum(0);
    for (std::size_t k = 0; k <= n; ++k)
      sum += Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * z[n - k] * a[k];
    if (sum != b[n]) return false;
  }
  return true;
}

TableFormat parse_format(std::string_view name) {
  if (name == "table") return TableFormat::table;
  if (name == "json") return TableFormat::json;
  if (name == "csv") return TableFormat::csv;
  throw Error(ErrorCode::invalid_argument, "unknown format '" + std::string(name) + "' (table|json|csv)");
}

std::string render_table(const std::vector<std::vector<std::string>>& cells, TableFormat format,
                         std::size_t bar_after) {
  if (format == TableFormat::json) return cells_to_json(cells) + "\n";
  std::ostringstream os;
  if (format == TableFormat::csv) {
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << '\n';
    }
    return os.str();
  }
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ' ';
      if (bar_after != 0 && i == bar_after) line += "| ";
      line += std::string(width[i] - row[i].size(), ' ') + row[i];
    }
    os << line << '\n';
  }
  return os.str();
}

std::vector<std::vector<std::string>> to_cells(const std::vector<std::vector<BigInt>>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (const auto& x : row) r.push_back(x.get_str());
  }
  return out;
}

std::vector<std::vector<std::string>> to_cells(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (const auto& x : row) r.push_back(x.to_string());
  }
  return out;
}

}  // namespace lrs
