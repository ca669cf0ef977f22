#pragma once

#include "hexcount/pathdet.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hexcount::polyfactor {

// Dense polynomial in m, coefficients ascending. The zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial_root(const Rat& r);  // m - r

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& m) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  // Quotient and remainder of division by (m - r).
  std::pair<UniPoly, Rat> divide_linear(const Rat& r) const;
  // How many times (m - r) divides; the zero polynomial reports -1.
  int multiplicity(const Rat& r) const;

  nlohmann::json to_json() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

UniPoly pow(const UniPoly& p, int e);

// Newton divided differences, expanded to the monomial basis. Nodes must be distinct.
UniPoly interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values);

int degree_bound(int n);  // C(n+1,2) - 1

// det B(n, m, s) as a polynomial in m; default nodes m = 1, 2, ..., C(n+1,2).
UniPoly poly_det_B(int n, int s);
UniPoly poly_det_B(int n, int s, const std::vector<Rat>& nodes);

struct FactorCheck {
  Rat root;
  int required = 0;
  int actual = 0;
  bool ok() const { return actual >= required; }
};

struct MultiplicityReport {
  std::vector<FactorCheck> factors;
  bool ok() const;
  int required_total() const;
  int actual_total() const;
  nlohmann::json to_json() const;
};

// Roots -(k+1/2), k = 1..n-2, required multiplicity min(k, n-1-k).
MultiplicityReport check_half_factors(const UniPoly& p, int n, int s);
// Roots -k, k = 0..n, required min(k+1, n-k+1) less one for each of k = s and k = n-s.
MultiplicityReport check_int_factors(const UniPoly& p, int n, int s);

// 2^C(n-1,2) h(n) (2n-2s-1)!! (2s-1)!! / ((n-s-1)! s!)
Rat lead_formula(int n, int s);
bool leading_coefficient_check(const UniPoly& p, int n, int s);

// x_i = 2-2i off row s+1, 1-2s on it; D_ij = (x_i+n+j)_{n-j}
std::vector<Rat> leading_nodes(int n, int s);
pathdet::ExactMatrix leading_matrix_D(int n, int s);
Rat vandermonde_product(const std::vector<Rat>& x);  // prod_{i<j} (x_i - x_j)

// lead_formula / ((m+s)(m+n-s)) * prod (m+k+1/2)^min(k,n-1-k) * prod (m+k)^min(k+1,n-k+1)
UniPoly gminus_poly(int n, int s);
bool gminus_closed_vs_poly(int n, int s);

}  // namespace hexcount::polyfactor
