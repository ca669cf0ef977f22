// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <hexcount/formulas.hpp>
#include <hexcount/geometry.hpp>
#include <hexcount/hyperid.hpp>
#include <hexcount/matchcount.hpp>
#include <hexcount/pathdet.hpp>
#include <hexcount/polyfactor.hpp>
#include <hexcount/special.hpp>

#include "oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace hexcount;

namespace {

int failed = 0;

void report(int k, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", k, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

Rat pow2(int e) {
  Int p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return Rat(p);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string tuple(int n, int N, int s) {
  return "(n=" + std::to_string(n) + ", N=" + std::to_string(N) + ", s=" + std::to_string(s) + ")";
}

void even_routes() {
  const auto t0 = std::chrono::steady_clock::now();
  int cases = 0;
  std::string bad;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int s = 0; s <= n; ++s) {
        ++cases;
        const Rat tiles = matchcount::count_tilings(geometry::remove_axis_defect({n, 2 * m, s}));
        const Rat th = Rat(formulas::theorem1_count(n, m, s));
        const Rat ex = Rat(formulas::step6_expression(n, m, s));
        const Rat fac = pow2(n - 1) * Rat(formulas::gplus_closed(n, m)) * formulas::gminus_closed(n, m, s);
        if (!(tiles == th && th == ex && ex == fac) && bad.empty()) bad = tuple(n, 2 * m, s);
      }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "even three-route agreement on " << cases << " cases in " << secs << " s";
  if (!bad.empty()) d << ", first disagreement at " << bad;
  report(1, bad.empty() && secs < 120, d.str());
}

void odd_routes() {
  int cases = 0;
  std::string bad;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int s = 1; s <= n; ++s) {
        ++cases;
        const Rat tiles = matchcount::count_tilings(geometry::remove_axis_defect({n, 2 * m + 1, s}));
        const Rat th = Rat(formulas::theorem2_count(n, m, s));
        const Rat ex = Rat(formulas::oddcase_expression(n, m, s));
        if (!(tiles == th && th == ex) && bad.empty()) bad = tuple(n, 2 * m + 1, s);
      }
  report(2, bad.empty(),
         "odd three-route agreement on " + std::to_string(cases) + " cases" +
             (bad.empty() ? "" : ", first disagreement at " + bad));
}

void factorization() {
  // each factor counted twice: library sweep and the standalone oracle
  int cases = 0;
  std::string bad;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int N : {2 * m, 2 * m + 1})
        for (int s = N % 2 ? 1 : 0; s <= n; ++s) {
          ++cases;
          const geometry::HexSpec spec{n, N, s};
          const auto h = geometry::split_halves(spec);
          const Rat whole = matchcount::count_tilings(geometry::remove_axis_defect(spec));
          const Rat lib = pow2(n - 1) * matchcount::count_tilings(h.upper) * matchcount::count_tilings(h.lower);
          const auto region = oracle::defect_hexagon(n, N, s);
          const auto [up, lo] = oracle::halves(region, N);
          const mpq_class o_whole = oracle::count(region);
          const mpq_class o_split = pow2(n - 1) * oracle::count(up) * oracle::count(lo);
          if (!(whole == lib && whole == o_whole && o_whole == o_split) && bad.empty()) bad = tuple(n, N, s);
        }
  report(3, bad.empty(),
         "M(G) = 2^(n-1) M(G+) M(G-) on " + std::to_string(cases) + " regions, library and oracle" +
             (bad.empty() ? "" : ", first failure at " + bad));
}

void determinants() {
  int cases = 0;
  std::string bad;
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) {
      ++cases;
      const int N = 2 * m;
      const auto [up, lo] = oracle::halves(oracle::defect_hexagon(n, N, n > 1 ? 1 : 0), N);
      if (pathdet::det_exact(pathdet::matrix_gplus(n, m)) != oracle::count(up) && bad.empty())
        bad = "upper " + tuple(n, N, 1);
    }
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for (int s = 0; s < n; ++s) {
        ++cases;
        const int N = 2 * m;
        const auto [up, lo] = oracle::halves(oracle::defect_hexagon(n, N, s), N);
        if (pathdet::det_exact(pathdet::matrix_A(n, m, s)) != oracle::count(lo) && bad.empty())
          bad = "lower " + tuple(n, N, s);
      }
  report(4, bad.empty(),
         "LGV determinants equal half counts on " + std::to_string(cases) + " cases" +
             (bad.empty() ? "" : ", first failure at " + bad));
}

void polynomial() {
  int cases = 0;
  std::string bad;
  for (int n = 1; n <= 5; ++n)
    for (int s = 0; s < n; ++s) {
      ++cases;
      const auto p = polyfactor::poly_det_B(n, s);
      const bool ok = p.degree() == static_cast<int>(formulas::binomial(n + 1, 2).get_si()) - 1 &&
                      polyfactor::check_half_factors(p, n, s).ok() && polyfactor::check_int_factors(p, n, s).ok() &&
                      polyfactor::leading_coefficient_check(p, n, s) && p == polyfactor::gminus_poly(n, s);
      if (!ok && bad.empty()) bad = "(n=" + std::to_string(n) + ", s=" + std::to_string(s) + ")";
    }
  report(5, bad.empty(),
         "det B degree, factor multiplicities, leading term, product form for " + std::to_string(cases) +
             " (n, s) pairs" + (bad.empty() ? "" : ", first failure at " + bad));
}

void identities() {
  const std::vector<hyperid::SuiteReport> reps = {hyperid::vandermonde_suite(1, 200), hyperid::pfaff_suite(1, 200),
                                                  hyperid::halb_suite(6), hyperid::ganz_suite(6)};
  bool ok = true;
  std::string d;
  for (const auto& r : reps) {
    ok = ok && r.ok() && r.tuples_checked > 0;
    if (!d.empty()) d += ", ";
    d += r.suite + " " + std::to_string(r.tuples_checked) + "/" + std::to_string(r.failures.size()) + " failed";
  }
  ok = ok && reps[0].tuples_checked == 200 && reps[1].tuples_checked == 200;
  report(6, ok, d);
}

void constants() {
  const mpq_class box = oracle::count(oracle::hexagon(2, 2, 2));
  const double p = formulas::asymptotic_proportion(2, 2, 1);
  const double want = std::sqrt(3.0) / (2 * std::numbers::pi);
  const bool ok = box == 20 && formulas::box_count(2, 2, 2) == 20 && std::fabs(p - want) < 1e-12 &&
                  std::fabs(p - 0.28) < 0.005;
  char buf[160];
  std::snprintf(buf, sizeof buf, "box(2,2,2) = %s by oracle, proportion(2,2,1) = %.12f (about 0.28)",
                box.get_str().c_str(), p);
  report(7, ok, buf);
}

void convergence() {
  const double limit = formulas::asymptotic_proportion(2, 2, 1);
  double prev = INFINITY;
  bool decreasing = true;
  std::string d = "relative errors";
  for (int t : {4, 8, 16, 32, 64}) {
    const double e = std::fabs(formulas::asymptotic_ratio(2, 2, 1, t).get_d() / limit - 1);
    decreasing = decreasing && e < prev;
    prev = e;
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3e", e);
    d += buf;
  }
  d += decreasing ? ", strictly decreasing" : ", NOT decreasing";
  d += prev < 0.05 ? ", below 5% at t=64" : ", above 5% at t=64 (flagged, not enforced)";
  report(8, decreasing, d);
}

}  // namespace

int main() {
  even_routes();
  odd_routes();
  factorization();
  determinants();
  polynomial();
  identities();
  constants();
  convergence();
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
