#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pnt/pnt.hpp"

namespace pnt::cli {

namespace {

std::uint64_t parse_u64(const std::string& text, const char* what) {
  const Natural v = Natural::parse(text);
  if (!v.fits_u64()) throw RangeError(std::string(what) + " does not fit in 64 bits: " + text);
  return v.to_u64();
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::pair<unsigned, unsigned> parse_rows(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto k = static_cast<unsigned>(parse_u64(text, "row"));
    return {k, k};
  }
  return {static_cast<unsigned>(parse_u64(text.substr(0, dots), "row")),
          static_cast<unsigned>(parse_u64(text.substr(dots + 2), "row"))};
}

struct Options {
  std::string sieve_threshold = "1000000000";
  std::string combinatorial_threshold = "1000000000000";
  std::string segment_size = std::to_string(kDefaultSegmentSize);
  std::string totative_bound = "100000000";

  EngineConfig config() const {
    EngineConfig c;
    c.sieve_threshold = parse_u64(sieve_threshold, "sieve threshold");
    c.combinatorial_threshold = parse_u64(combinatorial_threshold, "combinatorial threshold");
    c.segment_size = parse_u64(segment_size, "segment size");
    c.totative_enumeration_bound = parse_u64(totative_bound, "totative bound");
    c.validate();
    return c;
  }
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primorial reformulation of the prime number theorem: counts, representations, "
               "log approximations, totative estimates and convergence tables.",
               "pnt"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--sieve-threshold", opts.sieve_threshold, "Largest x counted by sieve")
      ->envname("PNT_SIEVE_THRESHOLD");
  app.add_option("--combinatorial-threshold", opts.combinatorial_threshold, "Largest x counted combinatorially")
      ->envname("PNT_COMBINATORIAL_THRESHOLD");
  app.add_option("--segment-size", opts.segment_size, "Odd numbers per sieve segment")->envname("PNT_SEGMENT_SIZE");
  app.add_option("--totative-bound", opts.totative_bound, "Largest primorial that may be enumerated")
      ->envname("PNT_TOTATIVE_BOUND");

  int status = kOk;
  std::function<void()> action;

  // pi
  std::string pi_x;
  std::string pi_method = "auto";
  auto* pi = app.add_subcommand("pi", "Exact prime count pi(x)");
  pi->add_option("x", pi_x, "Upper limit (decimal or 1e<k>)")->required();
  pi->add_option("--method", pi_method, "sieve|combinatorial|checkpoint|auto")->capture_default_str();
  pi->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      out << engine.count_primes(Natural::parse(pi_x), parse_count_method(pi_method)) << '\n';
    };
  });

  // primorial
  std::string primorial_n;
  auto* prim = app.add_subcommand("primorial", "Primorial #(n)");
  prim->add_option("n", primorial_n, "Index n >= 0")->required();
  prim->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      out << primorial(engine, parse_u64(primorial_n, "n")) << '\n';
    };
  });

  // totatives
  std::string tot_n;
  bool tot_list = false;
  auto* tot = app.add_subcommand("totatives", "Number of n-totatives, optionally listed");
  tot->add_option("n", tot_n, "Index n >= 1")->required();
  tot->add_flag("--list", tot_list, "Print the members (bounded by --totative-bound)");
  tot->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      const auto n = parse_u64(tot_n, "n");
      out << totative_count(engine, n) << '\n';
      if (tot_list) {
        const auto set = enumerate_totatives(engine, n);
        for (std::size_t i = 0; i < set.members.size(); ++i) out << (i ? " " : "") << set.members[i];
        out << '\n';
      }
    };
  });

  // represent
  std::string rep_x;
  std::string rep_succ = "primorial";
  auto* rep = app.add_subcommand("represent", "Decompose x over the prime or primorial succession");
  rep->add_option("x", rep_x, "Value x >= 2")->required();
  rep->add_option("--succession", rep_succ, "prime|primorial")->capture_default_str();
  rep->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      const Succession succ(engine, parse_succession(rep_succ));
      out << format_representation(decompose(succ, Natural::parse(rep_x))) << '\n';
    };
  });

  // logs
  std::string logs_x;
  std::string logs_a_prime = "1";
  std::string logs_a_primorial = "1";
  auto* logs = app.add_subcommand("logs", "All eleven log approximations at x");
  logs->add_option("x", logs_x, "Value x >= 2")->required();
  logs->add_option("--a-prime", logs_a_prime, "a(x) for the prime parametric variant (p/q)")->capture_default_str();
  logs->add_option("--a-primorial", logs_a_primorial, "a(x) for the primorial parametric variant (p/q)")
      ->capture_default_str();
  logs->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      const Natural x = Natural::parse(logs_x);
      const Ratio a_prime = Ratio::parse(logs_a_prime);
      const Ratio a_primorial = Ratio::parse(logs_a_primorial);
      std::ostringstream lines;
      for (const LogVariant& v : kAllLogVariants) {
        lines << to_string(v.family) << '.' << to_string(v.name) << ' ';
        if (v.family == LogFamily::prime && x < Natural(3)) {
          lines << "undefined\n";
          continue;
        }
        const Ratio& a = v.family == LogFamily::prime ? a_prime : a_primorial;
        lines << fmt12(eval_log(engine, x, v, a)) << '\n';
      }
      out << lines.str();
    };
  });

  // totstar
  std::string ts_x;
  auto* ts = app.add_subcommand("totstar", "Totative estimator bundle at x");
  ts->add_option("x", ts_x, "Value x >= 2")->required();
  ts->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      const auto b = estimator_bundle(engine, Natural::parse(ts_x));
      out << "x=" << b.x << '\n'
          << "t_star=" << b.t_star << '\n'
          << "tot_star=" << b.tot_star << '\n'
          << "y=" << b.y_val << '\n'
          << "f=" << fmt12(b.f_val) << '\n'
          << "g=" << fmt12(b.g_val) << '\n'
          << "f_circ=" << fmt12(b.f_circ) << '\n'
          << "g_circ=" << fmt12(b.g_circ) << '\n'
          << "h_circ=" << fmt12(b.h_circ) << '\n';
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Finite-range instance checks of the cited theorems");
  check->require_subcommand(1);

  std::string bertrand_max_n;
  auto* bertrand = check->add_subcommand("bertrand", "p_{n+1} <= 2p_n - 1 and ln(p_{n+2}/p_n) < 2");
  bertrand->add_option("--max-n", bertrand_max_n, "Largest n")->required();
  bertrand->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      const auto report = check_bertrand(engine, parse_u64(bertrand_max_n, "max-n"));
      out << format_report(report) << '\n';
      if (report.violations != 0) status = kViolation;
    };
  });

  std::string suzuki_m;
  std::string suzuki_limit = "100";
  auto* suzuki = check->add_subcommand("suzuki", "Empirical N with p_{n+1}^m < #(n) for n in [N, limit]");
  suzuki->add_option("--m", suzuki_m, "Power m >= 1")->required();
  suzuki->add_option("--limit", suzuki_limit, "Scan limit")->capture_default_str();
  suzuki->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      const auto result = suzuki_threshold(engine, parse_u64(suzuki_m, "m"), parse_u64(suzuki_limit, "limit"));
      out << "empirical_threshold=" << result.threshold << '\n' << format_report(result.log_form) << '\n';
      if (result.log_form.violations != 0) status = kViolation;
    };
  });

  std::string mertens_x;
  std::optional<double> mertens_tol;
  auto* mertens = check->add_subcommand("mertens", "prod_{p<=x} p/(p-1) / (e^gamma ln x)");
  mertens->add_option("--x", mertens_x, "Upper limit x >= 2")->required();
  mertens->add_option("--tolerance", mertens_tol, "Fail when |ratio - 1| exceeds this");
  mertens->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      const double ratio = mertens_ratio(engine, parse_u64(mertens_x, "x"));
      out << "mertens_ratio=" << fmt12(ratio) << '\n';
      if (mertens_tol && std::abs(ratio - 1.0) > *mertens_tol) status = kViolation;
    };
  });

  std::string squeeze_samples;
  std::string squeeze_x_max;
  std::string squeeze_seed = std::to_string(kDefaultSqueezeSeed);
  auto* squeeze = check->add_subcommand("squeeze", "Bracket checks for both log families and f <= x/tot* < g");
  squeeze->add_option("--samples", squeeze_samples, "Number of random x")->required();
  squeeze->add_option("--x-max", squeeze_x_max, "Largest x")->required();
  squeeze->add_option("--seed", squeeze_seed, "Random seed")->capture_default_str();
  squeeze->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      const auto report = check_squeeze_brackets(engine, parse_u64(squeeze_samples, "samples"),
                                                 Natural::parse(squeeze_x_max), parse_u64(squeeze_seed, "seed"));
      out << format_report(report) << '\n';
      if (report.violations != 0) status = kViolation;
    };
  });

  // table
  std::string table_rows = "1..25";
  std::string table_columns = "all";
  std::string table_family = "primorial";
  std::string table_format = "csv";
  bool table_deviations = false;
  auto* table = app.add_subcommand("table", "Convergence table of pi(x) against its approximations");
  table->add_option("--rows", table_rows, "Exponent range a..b within 1..25")->capture_default_str();
  table->add_option("--columns", table_columns, "all or comma-separated column ids")->capture_default_str();
  table->add_option("--family", table_family, "primorial|prime (source of log_*)")->capture_default_str();
  table->add_option("--format", table_format, "csv|md")->capture_default_str();
  table->add_flag("--deviations", table_deviations, "Compare every row with the published values");
  table->callback([&] {
    action = [&] {
      PrimeEngine engine(opts.config());
      const auto columns = parse_columns(table_columns);
      const auto family = parse_log_family(table_family);
      if (table_deviations) {
        out << deviation_report(engine, columns, family);
        return;
      }
      const auto [first, last] = parse_rows(table_rows);
      out << render(build_table(engine, first, last, columns, family), parse_table_format(table_format));
    };
  });

  std::vector<const char*> argv;
  argv.push_back("pnt");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}

}  // namespace pnt::cli
