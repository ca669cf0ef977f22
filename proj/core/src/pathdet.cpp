#include "hexcount/pathdet.hpp"

#include "hexcount/special.hpp"

#include <stdexcept>
#include <utility>

namespace hexcount::pathdet {

using formulas::binomial;
using formulas::factorial;
using formulas::pochhammer;

ExactMatrix ExactMatrix::block(std::size_t order) const {
  if (order > n_) throw std::out_of_range("block larger than matrix");
  ExactMatrix b(order);
  for (std::size_t i = 1; i <= order; ++i)
    for (std::size_t j = 1; j <= order; ++j) b.at(i, j) = at(i, j);
  return b;
}

nlohmann::json ExactMatrix::to_json() const {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 1; i <= n_; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 1; j <= n_; ++j) row.push_back(to_fraction(at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rat det_exact(const ExactMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Int scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i + 1, j + 1).get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& e = m.at(i + 1, j + 1);
      a[i][j] = e.get_num() * (l / e.get_den());
    }
  }
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rat d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

std::size_t rank_exact(const ExactMatrix& m) {
  const std::size_t n = m.order();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i + 1, j + 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

Int path_count(Point p, Point q) {
  const long dx = q.x - p.x, dy = p.y - q.y;
  if (dx < 0 || dy < 0) return 0;
  return binomial(dx + dy, dy);
}

Rat weighted_path_count(Point p, Point q, bool first_step_half) {
  if (!first_step_half || (p.x == q.x && p.y == q.y)) return Rat(path_count(p, q));
  return Rat(1, 2) * Rat(path_count({p.x + 1, p.y}, q)) + Rat(path_count({p.x, p.y - 1}, q));
}

ExactMatrix lgv_matrix(const PathSystem& ps) {
  const std::size_t n = ps.starts.size();
  if (ps.ends.size() != n) throw std::invalid_argument("start and end counts differ");
  ExactMatrix a(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const bool half = i - 1 < ps.first_step_half.size() && ps.first_step_half[i - 1];
    for (std::size_t j = 1; j <= n; ++j) a.at(i, j) = weighted_path_count(ps.starts[i - 1], ps.ends[j - 1], half);
  }
  return a;
}

PathSystem upper_paths(int n, int m) {
  PathSystem ps;
  for (long i = 1; i <= n; ++i) ps.starts.push_back({i - 1, i + m - 1});
  for (long j = 1; j <= n; ++j) ps.ends.push_back({2 * j - 2, j - 1});
  ps.first_step_half.assign(n, false);
  return ps;
}

PathSystem lower_paths(int n, int m, int s) {
  PathSystem ps;
  for (long i = 1; i <= n; ++i) {
    if (i == s + 1)
      ps.starts.push_back({2L * s - 1, m + s - 1L});
    else
      ps.starts.push_back({2 * i - 2, m + i - 1});
    ps.first_step_half.push_back(i != s + 1);
  }
  for (long j = 1; j <= n; ++j) ps.ends.push_back({n + j - 1, j - 1});
  return ps;
}

PathSystem lower_paths_odd(int n, int m, int s) {
  PathSystem ps;
  for (long i = 1; i <= n; ++i) {
    if (i == s)
      ps.starts.push_back({2L * s - 2, s + m - 1L});
    else
      ps.starts.push_back({2 * i - 1, i + m});
    ps.first_step_half.push_back(i != s);
  }
  for (long j = 1; j <= n; ++j) ps.ends.push_back({n + j - 1, j - 1});
  return ps;
}

ExactMatrix matrix_box(int a, int b, int c) {
  if (a < 1 || b < 0 || c < 0) throw std::invalid_argument("box needs a >= 1, b, c >= 0");
  ExactMatrix d(a);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= a; ++j) d.at(i, j) = Rat(binomial(b + c, b - i + j));
  return d;
}

ExactMatrix matrix_gplus(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("gplus needs n >= 1, m >= 0");
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.at(i, j) = Rat(binomial(m + j - 1, m - j + i));
  return a;
}

ExactMatrix matrix_A(int n, int m, int s) {
  if (n < 1 || m < 1) throw std::invalid_argument("A needs n >= 1, m >= 1");
  if (s < 0 || s > n - 1) throw std::invalid_argument("A needs 0 <= s <= n-1");
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == s + 1)
        a.at(i, j) = Rat(binomial(n + m - s, m + s - j));
      else
        a.at(i, j) = Rat(1, 2) * Rat(binomial(n + m - i, m + i - j)) + Rat(binomial(n + m - i, m + i - 1 - j));
    }
  return a;
}

ExactMatrix matrix_A_tilde(int n, int m, int s) {
  if (n < 1 || m < 0) throw std::invalid_argument("Atilde needs n >= 1, m >= 0");
  if (s < 1 || s > n) throw std::invalid_argument("Atilde needs 1 <= s <= n");
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == s)
        a.at(i, j) = Rat(binomial(n + m - s + 1, m + s - j));
      else
        a.at(i, j) = Rat(1, 2) * Rat(binomial(n + m - i, m + i - j + 1)) + Rat(binomial(n + m - i, m + i - j));
    }
  return a;
}

Rat b_entry(int n, const Rat& m, int s, int i, int j) {
  if (i == s + 1) return pochhammer(n + 1 + j - 2 * s, n - j) * pochhammer(s + m + 1 - j, j - 1);
  return pochhammer(n + 2 + j - 2 * i, n - j) * pochhammer(i + m + 1 - j, j - 1) *
         (m + Rat(n + 1 - j) / 2);
}

Rat b_entry_alt(int n, const Rat& m, int i, int j) {
  return Rat(1, 2) * pochhammer(n + 1 + j - 2 * i, n - j + 1) * pochhammer(i + m + 1 - j, j - 1) +
         pochhammer(n + 2 + j - 2 * i, n - j) * pochhammer(i + m - j, j);
}

Rat c_entry(int n, const Rat& m, int s, int i, int j) {
  if (i == s + 1) return b_entry(n, m, s, i, j);
  const Rat c = pochhammer(n + 2 + j - 2 * i, n - j);
  if (c == 0) return 0;
  if (2 * i >= n + 2) {
    const int len = j - 2 * i + n;
    // c != 0 forces len >= -1; at len = -1 the factor 1/(m+n+1-i) cancels (2m+n+1-j) = 2(m+n+1-i)
    if (len < 0) return c * 2;
    return c * pochhammer(i + m + 1 - j, len) * (2 * m + n + 1 - j);
  }
  return c * pochhammer(i + m + 1 - j, j - 1) * (2 * m + n + 1 - j);
}

Rat c_row_factor(int n, const Rat& m, int i) {
  if (2 * i < n + 2) return 1;
  return pochhammer(m + 1 - i + n, 2 * i - n - 1);
}

static void check_s(int n, int s) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (s < 0 || s > n - 1) throw std::invalid_argument("need 0 <= s <= n-1");
}

ExactMatrix matrix_B(int n, const Rat& m, int s) {
  check_s(n, s);
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.at(i, j) = b_entry(n, m, s, i, j);
  return a;
}

ExactMatrix matrix_C(int n, const Rat& m, int s) {
  check_s(n, s);
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.at(i, j) = c_entry(n, m, s, i, j);
  return a;
}

Rat minusdet_prefactor(int n, const Rat& m, int s) {
  check_s(n, s);
  Int den = 2 * n - 2 * s;
  for (int i = 1; i <= n; ++i) den *= factorial(2 * n + 1 - 2 * i);
  return (n + m - s) * (s + m) / Rat(den);
}

Rat m_gminus(int n, int m, int s) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  return minusdet_prefactor(n, m, s) * det_exact(matrix_B(n, m, s));
}

ExactMatrix krattenthaler_matrix(const std::vector<Rat>& x, const std::vector<Rat>& a,
                                 const std::vector<Rat>& b) {
  const std::size_t n = x.size();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("vectors of unequal length");
  ExactMatrix d(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      Rat e = 1;
      for (std::size_t k = i + 1; k <= n; ++k) e *= x[j - 1] + a[k - 1];
      for (std::size_t k = 2; k <= i; ++k) e *= x[j - 1] + b[k - 1];
      d.at(i, j) = e;
    }
  return d;
}

Rat krattenthaler_product(const std::vector<Rat>& x, const std::vector<Rat>& a,
                          const std::vector<Rat>& b) {
  const std::size_t n = x.size();
  Rat p = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) p *= x[i - 1] - x[j - 1];
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) p *= b[i - 1] - a[j - 1];
  return p;
}

}  // namespace hexcount::pathdet
