#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrs/rational.hpp"
#include "lrs/sequence.hpp"

namespace lrs {

// Stirling numbers of the second kind

/// (p_1, ..., p_k) with prod_{j=1}^k (1 - j t) = 1 - sum p_j t^j.
CoefficientSet stirling_coefficients(long k);
/// S(n+1, k) for n = 0..count-1, as the impulse response of
/// stirling_coefficients(k).
std::vector<Rational> stirling_column(long k, std::size_t count);
/// S(n, k) for 0 <= k <= n <= n_max from S(n+1,k) = k S(n,k) + S(n,k-1).
std::vector<std::vector<BigInt>> stirling_triangle(long n_max);

// Wythoff arrays

enum class WythoffVariant { fibonacci, pell };
/// Throws Error(invalid_argument) for anything but "fibonacci" or "pell".
WythoffVariant parse_variant(std::string_view name);
std::string_view to_string(WythoffVariant variant);

/// floor((j+1) phi) for fibonacci, floor((j+1)(1+sqrt 2)) - 1 for pell, by
/// integer square roots.
BigInt wythoff_second_initial(WythoffVariant variant, long j);
/// Row j: initials (j, wythoff_second_initial), recurrence (1,1) or (2,1).
SequenceSpec wythoff_row_spec(WythoffVariant variant, long j);
/// rows x cols block a_n^{(j)}, 0 <= j < rows, 0 <= n < cols. The first two
/// columns are the initials.
std::vector<std::vector<BigInt>> wythoff_array(WythoffVariant variant, long rows, long cols);
/// The Binet-type closed form of entry (j, n) evaluated with MPFR agrees with
/// the exact entry within closed_form_tolerance(precision_bits).
bool wythoff_closed_form_check(WythoffVariant variant, long j, long n, long precision_bits = 256);

struct PartitionReport {
  bool passed = true;
  std::vector<BigInt> duplicates;
  std::vector<BigInt> gaps;
};
/// Every integer in [1, bound] occurs exactly once among the entries n >= 2
/// of fibonacci rows 0..rows-1. bound = 0 passes vacuously.
/// Throws Error(insufficient_rows) when row `rows` would still contribute a
/// value <= bound.
PartitionReport wythoff_partition_check(long rows, long bound);

// Boustrophedon transform

struct Boustrophedon {
  std::vector<Rational> b;
  /// triangle[n][k], 0 <= k <= n.
  std::vector<std::vector<Rational>> triangle;
};
/// T[n][0] = a_n, T[n+1][k+1] = T[n+1][k] + T[n][n-k], b_n = T[n][n].
/// Throws Error(invalid_argument) for empty input.
Boustrophedon boustrophedon(std::span<const Rational> a);
/// Zigzag numbers 1, 1, 1, 2, 5, 16, 61, ...: the transform of (1, 0, 0, ...).
std::vector<Rational> zigzag_numbers(std::size_t count);
/// b_n == sum_k C(n,k) Z_{n-k} a_k for every n.
bool boustrophedon_egf_check(std::span<const Rational> a);

// Rendering

enum class TableFormat { table, json, csv };
/// Throws Error(invalid_argument) for unknown names.
TableFormat parse_format(std::string_view name);

/// Right-aligned columns separated by one space; a "|" column is inserted
/// after `bar_after` columns when nonzero. Rows may be ragged. Ends with '\n'.
std::string render_table(const std::vector<std::vector<std::string>>& cells, TableFormat format,
                         std::size_t bar_after = 0);

std::vector<std::vector<std::string>> to_cells(const std::vector<std::vector<BigInt>>& rows);
std::vector<std::vector<std::string>> to_cells(const std::vector<std::vector<Rational>>& rows);

}  // namespace lrs
