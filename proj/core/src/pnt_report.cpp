#include "pnt/pnt_report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pnt/errors.hpp"
#include "pnt/prime_count.hpp"
#include "pnt/totative_estimator.hpp"

namespace pnt {

namespace {

constexpr unsigned kRows = 25;

// Published ratios per exponent k = 1..25, columns in kAllColumns order.
constexpr std::array<std::array<double, 5>, kRows> kPublished{{
    {0.921, 0.392, 0.702, 1.101, 0.787},
    {1.151, 0.683, 0.988, 1.327, 1.106},
    {1.161, 0.770, 1.018, 1.305, 1.137},
    {1.132, 0.820, 1.025, 1.236, 1.119},
    {1.104, 0.840, 1.014, 1.227, 1.093},
    {1.084, 0.858, 1.011, 1.180, 1.077},
    {1.071, 0.875, 1.013, 1.186, 1.064},
    {1.061, 0.881, 1.004, 1.145, 1.057},
    {1.054, 0.885, 0.997, 1.137, 1.050},
    {1.048, 0.893, 0.998, 1.103, 1.045},
    {1.043, 0.902, 0.998, 1.089, 1.041},
    {1.039, 0.905, 0.995, 1.102, 1.037},
    {1.036, 0.910, 0.996, 1.081, 1.034},
    {1.033, 0.914, 0.995, 1.069, 1.032},
    {1.031, 0.919, 0.996, 1.072, 1.030},
    {1.029, 0.924, 0.997, 1.061, 1.028},
    {1.027, 0.926, 0.996, 1.077, 1.026},
    {1.025, 0.929, 0.996, 1.076, 1.024},
    {1.024, 0.931, 0.995, 1.065, 1.023},
    {1.023, 0.933, 0.995, 1.061, 1.022},
    {1.022, 0.935, 0.995, 1.046, 1.021},
    {1.021, 0.938, 0.995, 1.049, 1.020},
    {1.020, 0.940, 0.996, 1.042, 1.019},
    {1.019, 0.941, 0.995, 1.054, 1.018},
    {1.018, 0.943, 0.996, 1.048, 1.017},
}};

std::string_view markdown_label(ColumnId c) {
  switch (c) {
    case ColumnId::x_over_ln: return "x/ln(x)";
    case ColumnId::x_over_log_star: return "x/log_*(x)";
    case ColumnId::x_over_log_diamond: return "x/log_diamond(x)";
    case ColumnId::hcirc_over_ln_hcirc: return "h°(x)/ln(h°(x))";
    case ColumnId::x_over_ln_hcirc: return "x/ln(h°(x))";
  }
  return "?";
}

bool needs_h(const std::vector<ColumnId>& columns) {
  for (ColumnId c : columns)
    if (c == ColumnId::hcirc_over_ln_hcirc || c == ColumnId::x_over_ln_hcirc) return true;
  return false;
}

}  // namespace

std::string_view to_string(ColumnId c) noexcept {
  switch (c) {
    case ColumnId::x_over_ln: return "x_over_ln";
    case ColumnId::x_over_log_star: return "x_over_log_star";
    case ColumnId::x_over_log_diamond: return "x_over_log_diamond";
    case ColumnId::hcirc_over_ln_hcirc: return "hcirc_over_ln_hcirc";
    case ColumnId::x_over_ln_hcirc: return "x_over_ln_hcirc";
  }
  return "?";
}

ColumnId parse_column(std::string_view text) {
  for (ColumnId c : kAllColumns)
    if (to_string(c) == text) return c;
  throw DomainError("unknown column '" + std::string(text) + "'");
}

std::vector<ColumnId> parse_columns(std::string_view text) {
  if (text == "all") return {kAllColumns.begin(), kAllColumns.end()};
  std::vector<ColumnId> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (!item.empty()) out.push_back(parse_column(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

TableRow build_row(PrimeEngine& engine, unsigned exponent, const std::vector<ColumnId>& columns, LogFamily family) {
  if (exponent < 1 || exponent > kRows)
    throw RangeError("table exponent " + std::to_string(exponent) + " outside 1..25");
  TableRow row;
  row.exponent = exponent;
  row.x = Natural::pow10(exponent);
  row.pi_x = engine.count_primes(row.x, CountMethod::automatic);

  const double pi = row.pi_x.to_double();
  const double x = row.x.to_double();
  const double ln_x = ln_natural(row.x);
  const double h = needs_h(columns) ? estimator_bundle(engine, row.x).h_circ : 0.0;

  for (ColumnId c : columns) {
    double value = 0;
    switch (c) {
      case ColumnId::x_over_ln: value = pi * ln_x / x; break;
      case ColumnId::x_over_log_star:
        value = pi * eval_log(engine, row.x, {family, LogName::star_blend}) / x;
        break;
      case ColumnId::x_over_log_diamond:
        value = pi * eval_log(engine, row.x, {LogFamily::primorial, LogName::diamond}) / x;
        break;
      case ColumnId::hcirc_over_ln_hcirc: value = pi * std::log(h) / h; break;
      case ColumnId::x_over_ln_hcirc: value = pi * std::log(h) / x; break;
    }
    row.ratios.emplace(c, value);
  }
  return row;
}

std::vector<TableRow> build_table(PrimeEngine& engine, unsigned first, unsigned last,
                                  const std::vector<ColumnId>& columns, LogFamily family) {
  if (first < 1 || last > kRows || first > last)
    throw RangeError("table rows " + std::to_string(first) + ".." + std::to_string(last) + " outside 1..25");
  std::vector<TableRow> rows;
  for (unsigned k = first; k <= last; ++k) rows.push_back(build_row(engine, k, columns, family));
  return rows;
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::csv;
  if (text == "md" || text == "markdown") return TableFormat::markdown;
  throw DomainError("unknown table format '" + std::string(text) + "' (expected csv|md)");
}

std::string format_ratio(double value) {
  const long long thousandths = std::llround(value * 1000.0);
  const long long magnitude = thousandths < 0 ? -thousandths : thousandths;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%lld.%03lld", thousandths < 0 ? "-" : "", magnitude / 1000, magnitude % 1000);
  return buf;
}

std::string render(const std::vector<TableRow>& rows, TableFormat format) {
  std::vector<ColumnId> columns;
  if (!rows.empty())
    for (const auto& [c, v] : rows.front().ratios) columns.push_back(c);

  std::ostringstream os;
  if (format == TableFormat::csv) {
    os << "x,pi";
    for (ColumnId c : columns) os << ',' << to_string(c);
    os << '\n';
    if (columns.empty()) return os.str();
    for (const auto& row : rows) {
      os << "1e" << row.exponent << ',' << row.pi_x;
      for (ColumnId c : columns) os << ',' << format_ratio(row.ratios.at(c));
      os << '\n';
    }
    return os.str();
  }

  os << "| x | pi(x) |";
  for (ColumnId c : columns) os << " pi(x)/(" << markdown_label(c) << ") |";
  os << "\n|--:|--:|";
  for (std::size_t i = 0; i < columns.size(); ++i) os << "--:|";
  os << '\n';
  for (const auto& row : rows) {
    os << "| 10^" << row.exponent << " | " << row.pi_x << " |";
    for (ColumnId c : columns) os << ' ' << format_ratio(row.ratios.at(c)) << " |";
    os << '\n';
  }
  return os.str();
}

std::optional<double> published_ratio(unsigned exponent, ColumnId column) {
  if (exponent < 1 || exponent > kRows) return std::nullopt;
  return kPublished[exponent - 1][static_cast<std::size_t>(column)];
}

std::vector<Deviation> compute_deviations(PrimeEngine& engine, const std::vector<ColumnId>& columns,
                                          LogFamily family) {
  std::vector<Deviation> out;
  for (const auto& row : build_table(engine, 1, kRows, columns, family)) {
    for (const auto& [c, value] : row.ratios) {
      const double published = *published_ratio(row.exponent, c);
      out.push_back({row.exponent, c, value, published, value - published});
    }
  }
  return out;
}

std::string deviation_report(PrimeEngine& engine, const std::vector<ColumnId>& columns, LogFamily family) {
  const auto deviations = compute_deviations(engine, columns, family);
  std::ostringstream os;
  os << "k,column,computed,published,delta,flag\n";
  char buf[160];
  for (const auto& d : deviations) {
    std::snprintf(buf, sizeof buf, "%u,%s,%.6f,%.3f,%+.6f,%s\n", d.exponent, std::string(to_string(d.column)).c_str(),
                  d.computed, d.published, d.delta,
                  std::abs(d.delta) > kDeviationTolerance ? "offset" : "ok");
    os << buf;
  }
  for (ColumnId c : columns) {
    double max_abs = 0;
    unsigned offsets = 0;
    for (const auto& d : deviations) {
      if (d.column != c) continue;
      max_abs = std::max(max_abs, std::abs(d.delta));
      if (std::abs(d.delta) > kDeviationTolerance) ++offsets;
    }
    std::snprintf(buf, sizeof buf, "# %s max_abs_delta=%.6f offset_rows=%u/%u\n",
                  std::string(to_string(c)).c_str(), max_abs, offsets, kRows);
    os << buf;
  }
  return os.str();
}

}  // namespace pnt
