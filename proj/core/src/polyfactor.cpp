#include "hexcount/polyfactor.hpp"

#include "hexcount/special.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hexcount::polyfactor {

using formulas::binomial;
using formulas::double_factorial;
using formulas::factorial;
using formulas::pochhammer;
using formulas::superfactorial;

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial_root(const Rat& r) { return UniPoly({-r, Rat(1)}); }

Rat UniPoly::operator()(const Rat& m) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * m + *it;
  return v;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly pow(const UniPoly& p, int e) {
  UniPoly r = UniPoly::constant(1);
  for (int k = 0; k < e; ++k) r = r * p;
  return r;
}

std::pair<UniPoly, Rat> UniPoly::divide_linear(const Rat& r) const {
  if (c_.empty()) return {UniPoly{}, Rat(0)};
  std::vector<Rat> q(c_.size() - 1);
  Rat carry = 0;
  for (std::size_t k = c_.size(); k-- > 0;) {
    carry = carry * r + c_[k];
    if (k > 0) q[k - 1] = carry;
  }
  return {UniPoly(std::move(q)), carry};
}

int UniPoly::multiplicity(const Rat& r) const {
  if (is_zero()) return -1;
  int k = 0;
  UniPoly p = *this;
  for (;;) {
    auto [q, rem] = p.divide_linear(r);
    if (rem != 0) return k;
    p = std::move(q);
    ++k;
  }
}

nlohmann::json UniPoly::to_json() const {
  auto a = nlohmann::json::array();
  for (const auto& c : c_) a.push_back(to_fraction(c));
  return a;
}

std::string UniPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Rat c = c_[k];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    if (k == 0 || c != 1) os << c.get_str();
    if (k > 0) os << (c != 1 ? "*m" : "m");
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UniPoly interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
  const std::size_t n = nodes.size();
  if (values.size() != n) throw std::invalid_argument("node and value counts differ");
  std::vector<Rat> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rat gap = nodes[i] - nodes[i - level];
      if (gap == 0) throw std::invalid_argument("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  UniPoly p;
  for (std::size_t k = n; k-- > 0;) p = p * UniPoly::monomial_root(nodes[k]) + UniPoly::constant(dd[k]);
  return p;
}

int degree_bound(int n) { return static_cast<int>(binomial(n + 1, 2).get_si()) - 1; }

UniPoly poly_det_B(int n, int s, const std::vector<Rat>& nodes) {
  std::vector<Rat> values;
  values.reserve(nodes.size());
  for (const auto& t : nodes) values.push_back(pathdet::det_exact(pathdet::matrix_B(n, t, s)));
  return interpolate(nodes, values);
}

UniPoly poly_det_B(int n, int s) {
  std::vector<Rat> nodes;
  for (int t = 1; t <= degree_bound(n) + 1; ++t) nodes.emplace_back(t);
  return poly_det_B(n, s, nodes);
}

bool MultiplicityReport::ok() const {
  return std::all_of(factors.begin(), factors.end(), [](const FactorCheck& f) { return f.ok(); });
}

int MultiplicityReport::required_total() const {
  int t = 0;
  for (const auto& f : factors) t += f.required;
  return t;
}

int MultiplicityReport::actual_total() const {
  int t = 0;
  for (const auto& f : factors) t += f.actual;
  return t;
}

nlohmann::json MultiplicityReport::to_json() const {
  auto a = nlohmann::json::array();
  for (const auto& f : factors)
    a.push_back({{"root", to_fraction(f.root)}, {"required", f.required}, {"actual", f.actual}});
  return a;
}

MultiplicityReport check_half_factors(const UniPoly& p, int n, int s) {
  if (s < 0 || s > n - 1) throw std::invalid_argument("need 0 <= s <= n-1");
  MultiplicityReport r;
  for (int k = 1; k <= n - 2; ++k) {
    const Rat root = -(Rat(k) + Rat(1, 2));
    r.factors.push_back({root, std::min(k, n - 1 - k), p.multiplicity(root)});
  }
  return r;
}

MultiplicityReport check_int_factors(const UniPoly& p, int n, int s) {
  if (s < 0 || s > n - 1) throw std::invalid_argument("need 0 <= s <= n-1");
  MultiplicityReport r;
  for (int k = 0; k <= n; ++k) {
    const int req = std::min(k + 1, n - k + 1) - (k == s ? 1 : 0) - (k == n - s ? 1 : 0);
    r.factors.push_back({Rat(-k), req, p.multiplicity(Rat(-k))});
  }
  return r;
}

Rat lead_formula(int n, int s) {
  if (s < 0 || s > n - 1) throw std::invalid_argument("need 0 <= s <= n-1");
  Int num = superfactorial(n) * double_factorial(2 * n - 2 * s - 1) * double_factorial(2 * s - 1);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), binomial(n - 1, 2).get_ui());
  Rat r(num, factorial(n - s - 1) * factorial(s));
  r.canonicalize();
  return r;
}

bool leading_coefficient_check(const UniPoly& p, int n, int s) { return p.leading() == lead_formula(n, s); }

std::vector<Rat> leading_nodes(int n, int s) {
  std::vector<Rat> x;
  for (int i = 1; i <= n; ++i) x.emplace_back(i == s + 1 ? 1 - 2 * s : 2 - 2 * i);
  return x;
}

pathdet::ExactMatrix leading_matrix_D(int n, int s) {
  const auto x = leading_nodes(n, s);
  pathdet::ExactMatrix d(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) d.at(i, j) = pochhammer(x[i - 1] + n + j, n - j);
  return d;
}

Rat vandermonde_product(const std::vector<Rat>& x) {
  Rat p = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) p *= x[i] - x[j];
  return p;
}

UniPoly gminus_poly(int n, int s) {
  UniPoly p = UniPoly::constant(lead_formula(n, s));
  for (int k = 1; k <= n - 2; ++k) p = p * pow(UniPoly::monomial_root(-(Rat(k) + Rat(1, 2))), std::min(k, n - 1 - k));
  std::vector<int> e(n + 1);
  for (int k = 0; k <= n; ++k) e[k] = std::min(k + 1, n - k + 1);
  --e[s];
  --e[n - s];
  for (int k = 0; k <= n; ++k) p = p * pow(UniPoly::monomial_root(Rat(-k)), e[k]);
  return p;
}

bool gminus_closed_vs_poly(int n, int s) { return poly_det_B(n, s) == gminus_poly(n, s); }

}  // namespace hexcount::polyfactor
