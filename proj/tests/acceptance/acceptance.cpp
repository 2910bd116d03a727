#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sys/wait.h>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pnt/pnt.hpp"

using pnt::Natural;
using pnt::PrimeEngine;
using pnt::Ratio;

namespace {

const std::array<const char*, 25> kTablePi{
    "4", "25", "168", "1229", "9592", "78498", "664579", "5761455", "50847534", "455052511",
    "4118054813", "37607912018", "346065536839", "3204941750802", "29844570422669", "279238341033925",
    "2623557157654233", "24739954287740860", "234047667276344607", "2220819602560918840",
    "21127269486018731928", "201467286689315906290", "1925320391606803968923", "18435599767349200867866",
    "176846309399143769411680"};

const std::array<double, 25> kTableRatio{0.921, 1.151, 1.161, 1.132, 1.104, 1.084, 1.071, 1.061, 1.054,
                                         1.048, 1.043, 1.039, 1.036, 1.033, 1.031, 1.029, 1.027, 1.025,
                                         1.024, 1.023, 1.022, 1.021, 1.020, 1.019, 1.018};

std::string g_cli;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string command = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome exact_counts() {
  Outcome o;
  PrimeEngine engine;
  for (unsigned k = 1; k <= 9; ++k) {
    const Natural x = Natural::pow10(k);
    if (engine.resolve_method(x) == pnt::CountMethod::checkpoint) o.fail("checkpoint used at k=" + std::to_string(k));
    const auto start = std::chrono::steady_clock::now();
    const auto [code, out] = run_cli("pi 1e" + std::to_string(k));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (code != 0 || out != std::string(kTablePi[k - 1]) + "\n") o.fail("pi 1e" + std::to_string(k) + " -> " + out);
    if (secs > 300) o.fail("k=" + std::to_string(k) + " took " + std::to_string(secs) + "s");
  }
  // Both exact methods independently at 10^9.
  if (engine.count_primes(Natural::pow10(9), pnt::CountMethod::sieve) != Natural::parse(kTablePi[8]))
    o.fail("sieve count at 1e9");
  if (engine.count_primes(Natural::pow10(9), pnt::CountMethod::combinatorial) != Natural::parse(kTablePi[8]))
    o.fail("combinatorial count at 1e9");
  for (unsigned k = 10; k <= 12; ++k)
    if (engine.count_primes(Natural::pow10(k), pnt::CountMethod::combinatorial) != Natural::parse(kTablePi[k - 1]))
      o.fail("combinatorial count at 1e" + std::to_string(k));
  return o;
}

Outcome first_column() {
  Outcome o;
  PrimeEngine engine;
  const auto rows = pnt::build_table(engine, 1, 25, {pnt::ColumnId::x_over_ln});
  for (const auto& row : rows) {
    const double got = row.ratios.at(pnt::ColumnId::x_over_ln);
    if (row.pi_x != Natural::parse(kTablePi[row.exponent - 1])) o.fail("pi mismatch at k=" + std::to_string(row.exponent));
    if (std::abs(got - kTableRatio[row.exponent - 1]) > 0.001)
      o.fail("k=" + std::to_string(row.exponent) + " ratio " + std::to_string(got));
  }
  return o;
}

Outcome round_trips() {
  Outcome o;
  PrimeEngine engine;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(31337);
  const mpz_class span("999999999999999999");
  for (auto kind : {pnt::SuccessionKind::prime, pnt::SuccessionKind::primorial}) {
    const pnt::Succession succ(engine, kind);
    for (int i = 0; i < 10'000 && o.ok; ++i) {
      const Natural x(mpz_class(rng.get_z_range(span) + 2));
      const auto rep = pnt::decompose(succ, x);
      if (Ratio(rep.a_n) * rep.s != Ratio(x)) o.fail("x != a_n*s at " + x.to_string());
      if (!rep.n) {
        // No index past the prime table: round trip on (a_n, r) through the neighbours.
        const Ratio back = Ratio(rep.a_next) * rep.r + Ratio(rep.a_n) * (Ratio(1) - rep.r);
        const auto again = pnt::decompose(succ, Natural(back.numerator()));
        if (back != Ratio(x) || again.a_n != rep.a_n || again.r != rep.r) o.fail("neighbour round trip at " + x.to_string());
        continue;
      }
      const Ratio back = pnt::compose(succ, *rep.n, rep.r);
      if (back != Ratio(x)) o.fail("compose(decompose(x)) != x at " + x.to_string());
      const auto again = pnt::decompose(succ, Natural(back.numerator()));
      if (again.n != rep.n || again.r != rep.r) o.fail("(n, r) not recovered at " + x.to_string());
    }
  }
  // Indexed round trips for the prime succession.
  const pnt::Succession primes(engine, pnt::SuccessionKind::prime);
  for (int i = 0; i < 10'000 && o.ok; ++i) {
    const auto n = static_cast<std::uint64_t>(mpz_class(rng.get_z_range(1'000'000) + 1).get_ui());
    const Natural gap = primes.element(n + 1) - primes.element(n);
    const Ratio r(Natural(mpz_class(rng.get_z_range(gap.mpz()))), gap);
    const Ratio x = pnt::compose(primes, n, r);
    if (!x.is_integer()) o.fail("compose not integral at n=" + std::to_string(n));
    const auto rep = pnt::decompose(primes, Natural(x.numerator()));
    if (rep.n != n || rep.r != r) o.fail("prime (n, r) not recovered at n=" + std::to_string(n));
  }
  return o;
}

Outcome squeeze() {
  Outcome o;
  PrimeEngine engine;
  const auto report = pnt::check_squeeze_brackets(engine, 10'000, Natural::pow10(18));
  if (report.cases != 10'000) o.fail("cases=" + std::to_string(report.cases));
  if (report.violations != 0) o.fail(pnt::format_report(report));
  return o;
}

Outcome theorems() {
  Outcome o;
  PrimeEngine engine;
  const auto bertrand = pnt::check_bertrand(engine, 1'000'000);
  if (bertrand.violations != 0 || bertrand.cases != 1'000'000) o.fail(pnt::format_report(bertrand));
  const auto s1 = pnt::suzuki_threshold(engine, 1, 100);
  const auto s2 = pnt::suzuki_threshold(engine, 2, 100);
  if (s1.threshold != 2) o.fail("suzuki m=1 -> " + std::to_string(s1.threshold));
  if (s2.threshold != 4) o.fail("suzuki m=2 -> " + std::to_string(s2.threshold));
  if (s1.log_form.violations || s2.log_form.violations) o.fail("suzuki log form");
  const double mr = pnt::mertens_ratio(engine, 1'000'000);
  if (std::abs(mr - 1) >= 0.01) o.fail("mertens ratio " + std::to_string(mr));
  return o;
}

Outcome totatives() {
  Outcome o;
  PrimeEngine engine;
  for (std::uint64_t n = 1; n <= 6; ++n) {
    Natural product(1);
    for (std::uint64_t i = 1; i <= n; ++i) product = product * Natural(engine.nth_prime(i) - 1);
    if (pnt::tot_star(engine, pnt::primorial(engine, n)) != Ratio(pnt::totative_count(engine, n)))
      o.fail("tot* identity at n=" + std::to_string(n));
    const auto set = pnt::enumerate_totatives(engine, n);
    if (Natural(set.members.size()) != product) o.fail("enumeration size at n=" + std::to_string(n));
  }
  const auto three = pnt::enumerate_totatives(engine, 3).members;
  if (three != std::vector<std::uint64_t>{7, 11, 13, 17, 19, 23, 29, 31}) o.fail("totatives of 3");
  return o;
}

Outcome trends() {
  Outcome o;
  PrimeEngine engine;
  const std::vector<pnt::ColumnId> all(pnt::kAllColumns.begin(), pnt::kAllColumns.end());
  const auto r3 = pnt::build_row(engine, 3, all);
  const auto r12 = pnt::build_row(engine, 12, all);
  for (auto c : all)
    if (!(std::abs(r12.ratios.at(c) - 1) < std::abs(r3.ratios.at(c) - 1)))
      o.fail(std::string(pnt::to_string(c)) + " does not move toward 1");
  const auto report = pnt::deviation_report(engine, all);
  if (report.find("1,hcirc_over_ln_hcirc,") == std::string::npos ||
      report.find("1,hcirc_over_ln_hcirc,") > report.find("offset", report.find("1,hcirc_over_ln_hcirc,")))
    o.fail("h° offset not flagged");
  const auto [code, out] = run_cli("table --deviations");
  if (code != 0 || out.empty()) o.fail("table --deviations exit " + std::to_string(code));
  return o;
}

Outcome golden_csv() {
  Outcome o;
  const auto first = run_cli("table --rows 1..25 --columns all --format csv");
  const auto second = run_cli("table --rows 1..25 --columns all --format csv");
  if (first.first != 0) o.fail("exit " + std::to_string(first.first));
  if (first.second != second.second) o.fail("runs differ");
  std::istringstream lines(first.second);
  std::string line;
  std::getline(lines, line);
  if (line.rfind("x,pi,x_over_ln,", 0) != 0) o.fail("header " + line);
  int rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string x, pi, ratio;
    std::getline(fields, x, ',');
    std::getline(fields, pi, ',');
    std::getline(fields, ratio, ',');
    if (x != "1e" + std::to_string(rows + 1) || pi != kTablePi[rows] || std::abs(std::stod(ratio) - kTableRatio[rows]) > 0.001)
      o.fail("row " + line);
    ++rows;
  }
  if (rows != 25) o.fail("rows=" + std::to_string(rows));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: pnt_acceptance <path to pnt>\n";
    return 2;
  }
  g_cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact prime counts for 10^1..10^9", exact_counts},
      {"x/ln x ratio column for 10^1..10^25", first_column},
      {"representation round trips", round_trips},
      {"squeeze suites", squeeze},
      {"theorem instances", theorems},
      {"totative identities", totatives},
      {"convergence trends and deviation report", trends},
      {"golden csv", golden_csv},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.ok ? "" : " - ", o.detail.c_str());
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
