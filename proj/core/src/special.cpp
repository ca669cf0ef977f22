#include "hexcount/special.hpp"

#include <stdexcept>

namespace hexcount {

std::string to_fraction(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Int& z) { return z.get_str(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int as_integer(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("expected an integer, got " + r.get_str());
  return r.get_num();
}

namespace formulas {

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial below -1");
  if (n <= 0) return 1;
  Int r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int superfactorial(long n) {
  if (n < 0) throw std::domain_error("superfactorial of a negative number");
  Int r = 1, f = 1;
  for (long i = 1; i < n; ++i) {
    f *= i;
    r *= f;
  }
  return r;
}

Int binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Rat pochhammer(const Rat& a, long k) {
  Rat r = 1;
  if (k >= 0) {
    for (long t = 0; t < k; ++t) r *= a + t;
    return r;
  }
  for (long t = 1; t <= -k; ++t) {
    Rat f = a - t;
    if (f == 0) throw std::domain_error("pochhammer with negative length hits a pole");
    r /= f;
  }
  return r;
}

}  // namespace formulas
}  // namespace hexcount
