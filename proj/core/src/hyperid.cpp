#include "hexcount/hyperid.hpp"

#include "hexcount/pathdet.hpp"
#include "hexcount/special.hpp"

#include <random>
#include <stdexcept>

namespace hexcount::hyperid {

using formulas::binomial;
using formulas::factorial;
using formulas::pochhammer;

namespace {

bool nonpositive_integer(const Rat& r) { return r.get_den() == 1 && r <= 0; }

Rat sign(long e) { return e % 2 == 0 ? Rat(1) : Rat(-1); }

Rat rpow(const Rat& b, int e) {
  Rat r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

HypergeomSpec terminating(std::vector<Rat> upper, std::vector<Rat> lower) {
  long terms = -1;
  for (const auto& u : upper)
    if (nonpositive_integer(u)) {
      const long t = -u.get_num().get_si();
      if (terms < 0 || t < terms) terms = t;
    }
  if (terms < 0) throw std::invalid_argument("no upper parameter is a nonpositive integer");
  return {std::move(upper), std::move(lower), terms};
}

Rat terminating_sum(const HypergeomSpec& spec) {
  if (spec.terms < 0) throw std::invalid_argument("negative termination index");
  bool ends = false;
  for (const auto& u : spec.upper)
    if (nonpositive_integer(u) && -u <= spec.terms) ends = true;
  if (!ends) throw std::invalid_argument("series does not terminate within the given index");
  Rat term = 1, sum = 1;
  for (long k = 0; k < spec.terms; ++k) {
    for (const auto& u : spec.upper) term *= u + k;
    for (const auto& l : spec.lower) {
      if (l + k == 0) throw std::invalid_argument("lower parameter hits a pole");
      term /= l + k;
    }
    term /= k + 1;
    sum += term;
  }
  return sum;
}

bool vandermonde_check(const Rat& a, long n, const Rat& c) {
  const Rat den = pochhammer(c, n);
  if (den == 0) throw std::invalid_argument("(c)_n vanishes");
  HypergeomSpec spec{{a, Rat(-n)}, {c}, n};
  return terminating_sum(spec) == pochhammer(c - a, n) / den;
}

bool pfaff_saalschuetz_check(const Rat& a, const Rat& b, long n, const Rat& c) {
  const Rat den = pochhammer(c, n) * pochhammer(c - a - b, n);
  if (den == 0) throw std::invalid_argument("right-hand denominator vanishes");
  HypergeomSpec spec{{a, b, Rat(-n)}, {c, 1 + a + b - c - n}, n};
  return terminating_sum(spec) == pochhammer(c - a, n) * pochhammer(c - b, n) / den;
}

bool halb_tuple_valid(int n, int k, int l, int i, int s) {
  if (n < 1 || s < 0 || s > n - 1 || i < 1 || i > n || i == s + 1) return false;
  if (k < 1 || k > n - 2 || l < 0 || l > k || l < 2 * k - n + 1) return false;
  return true;
}

Rat halb_combination(int n, int k, int l, int i, int s) {
  if (!halb_tuple_valid(n, k, l, i, s)) throw std::invalid_argument("halb tuple out of range");
  const Rat m = -(Rat(k) + Rat(1, 2));
  Rat sum = 0;
  for (int j = 0; j <= l; ++j)
    sum += Rat(binomial(l, j)) * pathdet::b_entry(n, m, s, i, n + 2 * l - 2 * k - j);
  return sum;
}

bool halb_vanishing_check(int n, int k, int l, int i, int s) { return halb_combination(n, k, l, i, s) == 0; }

int halb_null_dimension(int n, int k, int s) {
  const auto b = pathdet::matrix_B(n, -(Rat(k) + Rat(1, 2)), s);
  return n - static_cast<int>(pathdet::rank_exact(b));
}

int ganz_variant(int n, int k, int s) {
  if (k < s) return 1;
  if (k > n - s) return 2;
  if (s < k && 2 * k <= n) return 3;
  if (2 * k > n && k < n - s) return 4;
  return 0;
}

static void check_ganz(int n, int k, int s, int variant, int j) {
  if (n < 1 || s < 0 || s > n - 1 || 2 * s > n) throw std::invalid_argument("ganz needs 0 <= s <= n/2, s < n");
  if (k < 0 || k > n || j < 1 || j > n) throw std::invalid_argument("ganz index out of range");
  if (variant < 1 || variant > 4 || ganz_variant(n, k, s) != variant)
    throw std::invalid_argument("ganz variant does not apply to this k");
}

Rat ganz_combination(int n, int k, int s, int variant, int j) {
  check_ganz(n, k, s, variant, j);
  const Rat m = -k;
  auto C = [&](int i) { return pathdet::c_entry(n, m, s, i, j); };
  const Rat h32 = Rat(3, 2), h12 = Rat(1, 2);
  Rat total = 0;
  if (variant == 1) {
    for (int i = k + 1; i <= s; ++i) {
      const int e = i - k - 1;
      total += sign(i - k + 1) * Rat(binomial(s - k - 1, e)) * pochhammer(n + h32 - i, e) *
               pochhammer(n - i + 1, e) / (pochhammer(s + h12 - i, e) * pochhammer(n - k - i + 1, e)) * C(i);
    }
    total += sign(s - k + 2) * 2 * pochhammer(n + h32 - s - 1, s - k) * pochhammer(n - s + 1, s - k - 1) /
             (pochhammer(h12, s - k - 1) * pochhammer(n - k - s + 1, s - k - 1)) * C(s + 1);
    return total;
  }
  if (variant == 2) {
    for (int i = n - k + 1; i <= s; ++i) {
      const int e = i - n + k - 1;
      total += sign(i - n + k + 1) * Rat(binomial(s - n + k - 1, e)) * pochhammer(n + h32 - i, e) *
               pochhammer(n - i + 1, e) / (pochhammer(s + h12 - i, e) * pochhammer(k - i + 1, e)) * C(i);
    }
    total -= sign(s - n + k + 2) * 2 * pochhammer(n + h32 - s - 1, s - n + k) *
             pochhammer(n - s + 1, s - n + k - 1) /
             (pochhammer(h12, s - n + k - 1) * pochhammer(k - s + 1, s - n + k - 1)) * C(s + 1);
    return total;
  }
  // variants 3 and 4 share their shape
  const bool v3 = variant == 3;
  const int lo = v3 ? k + 1 : n - k + 1;
  const Rat outer = v3 ? pochhammer(s - n + h12, n - k - 1) / pochhammer(n + 1 - s, -k)
                       : pochhammer(s - n + h12, k - 1) / pochhammer(n + 1 - s, -n + k);
  auto coeff = [&](int i) -> Rat {
    const int e = v3 ? i - k - 1 : i - n + k - 1;
    Rat f = rpow(Rat(-4), n - i) * pochhammer(s - i + 1, e) * outer;
    return f / (Rat(factorial(2 * n - 2 * i + 1)) * pochhammer(s + h12 - i, e));
  };
  for (int i = lo; i <= (n + 1) / 2; ++i) total += coeff(i) * pochhammer(i - k, n + 1 - 2 * i) * C(i);
  for (int i = (n + 3) / 2; i <= (n + 1 + j) / 2; ++i) total += coeff(i) * C(i);
  total -= (v3 ? Rat(1) : sign(n)) * C(s + 1);
  return total;
}

bool ganz_vanishing_check(int n, int k, int s, int variant, int j) {
  return ganz_combination(n, k, s, variant, j) == 0;
}

Rat ganz_common_term(int n, int k, int i, int j) {
  const Rat c = pochhammer(n + 2 + j - 2 * i, n - j);
  if (c == 0) return 0;
  const int len = j - 2 * i + n;
  // len = -1 pairs 1/(n+1-i-k) with (n+1-2k-j) = 2(n+1-i-k)
  if (len < 0) return c * 2;
  return c * pochhammer(i - k + 1 - j, len) * (n + 1 - 2 * k - j);
}

bool ganz_merge_check(int n, int k, int s, int variant, int j) {
  check_ganz(n, k, s, variant, j);
  if (variant != 3 && variant != 4) throw std::invalid_argument("merge applies to variants 3 and 4");
  const Rat m = -k;
  const int lo = variant == 3 ? k + 1 : n - k + 1;
  for (int i = lo; i <= (n + 1) / 2; ++i)
    if (pochhammer(i - k, n + 1 - 2 * i) * pathdet::c_entry(n, m, s, i, j) != ganz_common_term(n, k, i, j))
      return false;
  for (int i = (n + 3) / 2; i <= (n + 1 + j) / 2; ++i)
    if (pathdet::c_entry(n, m, s, i, j) != ganz_common_term(n, k, i, j)) return false;
  return true;
}

nlohmann::json SuiteReport::to_json() const {
  return {{"suite", suite}, {"tuples_checked", tuples_checked}, {"failures", failures}};
}

namespace {

Rat draw_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 12);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

SuiteReport vandermonde_suite(std::uint64_t seed, std::size_t tuples) {
  SuiteReport rep{"vandermonde", 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> nd(0, 8);
  while (rep.tuples_checked < tuples) {
    const Rat a = draw_rational(rng), c = draw_rational(rng);
    const long n = nd(rng);
    if (pochhammer(c, n) == 0) continue;
    ++rep.tuples_checked;
    if (!vandermonde_check(a, n, c))
      rep.failures.push_back({{"a", to_fraction(a)}, {"n", n}, {"c", to_fraction(c)}});
  }
  return rep;
}

SuiteReport pfaff_suite(std::uint64_t seed, std::size_t tuples) {
  SuiteReport rep{"pfaff", 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> nd(0, 8);
  while (rep.tuples_checked < tuples) {
    const Rat a = draw_rational(rng), b = draw_rational(rng), c = draw_rational(rng);
    const long n = nd(rng);
    if (pochhammer(c, n) == 0 || pochhammer(c - a - b, n) == 0 || pochhammer(1 + a + b - c - n, n) == 0)
      continue;
    ++rep.tuples_checked;
    if (!pfaff_saalschuetz_check(a, b, n, c))
      rep.failures.push_back({{"a", to_fraction(a)}, {"b", to_fraction(b)}, {"n", n}, {"c", to_fraction(c)}});
  }
  return rep;
}

SuiteReport halb_suite(int max_n) {
  SuiteReport rep{"halb", 0, {}};
  for (int n = 1; n <= max_n; ++n)
    for (int s = 0; s < n; ++s)
      for (int k = 1; k <= n - 2; ++k)
        for (int l = 0; l <= k; ++l)
          for (int i = 1; i <= n; ++i) {
            if (!halb_tuple_valid(n, k, l, i, s)) continue;
            ++rep.tuples_checked;
            const Rat v = halb_combination(n, k, l, i, s);
            if (v != 0)
              rep.failures.push_back({{"n", n}, {"k", k}, {"l", l}, {"i", i}, {"s", s}, {"value", to_fraction(v)}});
          }
  return rep;
}

SuiteReport ganz_suite(int max_n) {
  SuiteReport rep{"ganz", 0, {}};
  for (int n = 1; n <= max_n; ++n)
    for (int s = 0; 2 * s <= n && s < n; ++s)
      for (int k = 0; k <= n; ++k) {
        const int v = ganz_variant(n, k, s);
        if (v == 0) continue;
        for (int j = 1; j <= n; ++j) {
          ++rep.tuples_checked;
          const Rat val = ganz_combination(n, k, s, v, j);
          const bool merged = (v != 3 && v != 4) || ganz_merge_check(n, k, s, v, j);
          if (val != 0 || !merged)
            rep.failures.push_back({{"n", n}, {"k", k}, {"s", s}, {"variant", v}, {"j", j},
                                    {"value", to_fraction(val)}, {"merge_ok", merged}});
        }
      }
  return rep;
}

}  // namespace hexcount::hyperid
