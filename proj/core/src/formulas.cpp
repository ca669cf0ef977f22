#include "hexcount/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hexcount::formulas {
namespace {

Rat power_of_two(long e) {
  Int p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
  return e >= 0 ? Rat(p) : Rat(1) / Rat(p);
}

Rat rpow(const Rat& base, long e) {
  Rat r = 1;
  for (long k = 0; k < e; ++k) r *= base;
  return r;
}

Int gplus_numerator_product(int n, int m) {
  Int p = 1;
  for (int i = 2; i <= n; ++i)
    for (int j = i; j <= n; ++j) p *= 2 * m + 2 * j - i;
  return p;
}

// prod (m+k+1/2)^min(k,n-1-k) * prod (m+k)^min(k+1,n-k+1)
Rat linear_factors(int n, const Rat& m) {
  Rat p = 1;
  for (int k = 1; k <= n - 2; ++k) p *= rpow(m + k + Rat(1, 2), std::min(k, n - 1 - k));
  for (int k = 0; k <= n; ++k) p *= rpow(m + k, std::min(k + 1, n - k + 1));
  return p;
}

void check_range(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Int box_count(int a, int b, int c) {
  check_range(a >= 0 && b >= 0 && c >= 0, "box sides must be nonnegative");
  // the k-product telescopes to (i+j+c-1)/(i+j-1)
  Int num = 1, den = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      num *= i + j + c - 1;
      den *= i + j - 1;
    }
  Rat r(num, den);
  r.canonicalize();
  return as_integer(r);
}

Int theorem1_count(int n, int m, int s) {
  check_range(n >= 1 && m >= 1, "theorem 1 needs n >= 1, m >= 1");
  check_range(s >= 0 && s <= n, "theorem 1 needs 0 <= s <= n");
  Rat pre((2 * m - 1) * binomial(2 * m - 2, m - 1) * binomial(2 * n - 2 * s, n - s) * binomial(2 * s, s),
          binomial(2 * m + 2 * n, m + n));
  pre.canonicalize();
  return as_integer(pre * Rat(box_count(n, n, 2 * m)));
}

Int theorem2_count(int n, int m, int s) {
  check_range(n >= 1 && m >= 0, "theorem 2 needs n >= 1, m >= 0");
  check_range(s >= 1 && s <= n, "theorem 2 needs 1 <= s <= n");
  Rat pre((2 * m + 1) * binomial(2 * m, m) * binomial(2 * n - 2 * s, n - s) * binomial(2 * s - 2, s - 1),
          binomial(2 * m + 2 * n, m + n));
  pre.canonicalize();
  return as_integer(pre * Rat(box_count(n, n, 2 * m + 1)));
}

Int gplus_closed(int n, int m) {
  check_range(n >= 1 && m >= 0, "gplus needs n >= 1, m >= 0");
  Int den = 1;
  for (int j = 1; j <= n; ++j) den *= factorial(2 * j - 2);
  Rat r(superfactorial(n) * gplus_numerator_product(n, m), den);
  r.canonicalize();
  return as_integer(r);
}

Rat gminus_closed(int n, int m, int s) {
  check_range(n >= 1 && m >= 1, "gminus needs n >= 1, m >= 1");
  check_range(s >= 0 && s <= n, "gminus needs 0 <= s <= n");
  if (s == n) s = 0;
  Int lead = superfactorial(n) * double_factorial(2 * n - 2 * s - 1) * double_factorial(2 * s - 1);
  Int den = factorial(n - s - 1) * factorial(s) * (2 * n - 2 * s);
  for (int i = 1; i <= n; ++i) den *= factorial(2 * n + 1 - 2 * i);
  Rat r(lead, den);
  r.canonicalize();
  return r * power_of_two(binomial(n - 1, 2).get_si()) * linear_factors(n, m);
}

Int step6_expression(int n, int m, int s) {
  check_range(n >= 1 && m >= 1, "step 6 needs n >= 1, m >= 1");
  check_range(s >= 0 && s <= n, "step 6 needs 0 <= s <= n");
  const Int h = superfactorial(n);
  Rat r(h * h * double_factorial(2 * n - 2 * s - 1) * double_factorial(2 * s - 1),
        superfactorial(2 * n) * factorial(n - s) * factorial(s));
  r.canonicalize();
  r *= power_of_two(binomial(n, 2).get_si() - 1);
  r *= Rat(gplus_numerator_product(n, m));
  r *= linear_factors(n, m);
  return as_integer(r);
}

Int odd_upper_closed(int n, int m) { return gplus_closed(n + 1, m); }

Rat odd_lower_closed(int n, int m, int s) {
  check_range(n >= 2 && m >= 0, "odd lower half needs n >= 2, m >= 0");
  check_range(s >= 1 && s <= n - 1, "odd lower half needs 1 <= s <= n-1");
  return gminus_closed(n - 1, m + 1, s - 1);
}

Int oddcase_expression(int n, int m, int s) {
  check_range(n >= 1 && m >= 0, "odd case needs n >= 1, m >= 0");
  check_range(s >= 1 && s <= n, "odd case needs 1 <= s <= n");
  Rat lower;
  if (n == 1) {
    lower = m + 1;  // the 1x1 lower matrix: C(m+1, m)
  } else {
    if (s == n) s = 1;
    lower = odd_lower_closed(n, m, s);
  }
  return as_integer(power_of_two(n - 1) * Rat(odd_upper_closed(n, m)) * lower);
}

double asymptotic_proportion(double alpha, double beta, double gamma) {
  if (!(alpha > 0 && beta > 0 && gamma > 0)) throw std::invalid_argument("alpha, beta, gamma must be positive");
  if (!(gamma < alpha)) throw std::invalid_argument("gamma must be smaller than alpha");
  return std::sqrt(beta * (2 * alpha + beta) / (gamma * (alpha - gamma))) / (4 * std::numbers::pi);
}

Rat asymptotic_ratio(int alpha, int beta, int gamma, int t) {
  check_range(alpha > gamma && gamma > 0 && beta > 0 && t > 0, "need alpha > gamma > 0, beta > 0, t > 0");
  const int n = alpha * t, N = beta * t, s = gamma * t;
  Rat r = N % 2 == 0 ? Rat(theorem1_count(n, N / 2, s)) : Rat(theorem2_count(n, N / 2, s));
  r /= Rat(box_count(n, n, N));
  return r;
}

}  // namespace hexcount::formulas
