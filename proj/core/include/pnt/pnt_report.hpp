#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnt/exactnum.hpp"
#include "pnt/log_family.hpp"
#include "pnt/prime_engine.hpp"

namespace pnt {

/// Ratio columns of the convergence tables; each is π(x) divided by an approximation of π(x).
enum class ColumnId {
  x_over_ln,            // π(x) / (x / ln x)
  x_over_log_star,      // π(x) / (x / log_*(x))
  x_over_log_diamond,   // π(x) / (x / log_⋄(x))
  hcirc_over_ln_hcirc,  // π(x) / (h°(x) / ln h°(x))
  x_over_ln_hcirc,      // π(x) / (x / ln h°(x))
};

inline constexpr std::array<ColumnId, 5> kAllColumns{ColumnId::x_over_ln, ColumnId::x_over_log_star,
                                                     ColumnId::x_over_log_diamond, ColumnId::hcirc_over_ln_hcirc,
                                                     ColumnId::x_over_ln_hcirc};

std::string_view to_string(ColumnId c) noexcept;
ColumnId parse_column(std::string_view text);  // throws DomainError
/// `all` or a comma-separated list of column ids.
std::vector<ColumnId> parse_columns(std::string_view text);

struct TableRow {
  unsigned exponent = 0;
  Natural x;
  Natural pi_x;
  std::map<ColumnId, double> ratios;  // unrounded
};

/// One row per exponent k in [first, last], x = 10^k, π(x) from the engine's
/// automatic method. `family` selects where log_* comes from; log_⋄ exists
/// only in the primorial family and is always taken from there.
/// Throws RangeError unless 1 ≤ first ≤ last ≤ 25.
std::vector<TableRow> build_table(PrimeEngine& engine, unsigned first, unsigned last,
                                  const std::vector<ColumnId>& columns, LogFamily family = LogFamily::primorial);

TableRow build_row(PrimeEngine& engine, unsigned exponent, const std::vector<ColumnId>& columns,
                   LogFamily family = LogFamily::primorial);

enum class TableFormat { csv, markdown };
TableFormat parse_table_format(std::string_view text);  // csv | md | markdown

/// Rounds half away from zero to three decimals, e.g. 0.92049 → "0.920", 1.0185 → "1.019".
std::string format_ratio(double value);

/// CSV: header `x,pi,<column ids>` then `1e<k>,<π exact>,<ratios>`. With no
/// ratio columns only the header is emitted. Markdown mirrors the published layout.
std::string render(const std::vector<TableRow>& rows, TableFormat format);

/// Published three-decimal ratio for 10^exponent, when the tables carry one.
std::optional<double> published_ratio(unsigned exponent, ColumnId column);

struct Deviation {
  unsigned exponent = 0;
  ColumnId column{};
  double computed = 0;
  double published = 0;
  double delta = 0;  // computed − published
};

inline constexpr double kDeviationTolerance = 0.001;

std::vector<Deviation> compute_deviations(PrimeEngine& engine, const std::vector<ColumnId>& columns,
                                          LogFamily family = LogFamily::primorial);

/// Per row and column: computed ratio, published value, difference, and a flag
/// `offset` when |delta| > kDeviationTolerance; closes with a per-column summary.
std::string deviation_report(PrimeEngine& engine, const std::vector<ColumnId>& columns,
                             LogFamily family = LogFamily::primorial);

}  // namespace pnt
