#pragma once

#include "hexcount/exact.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <vector>

namespace hexcount::pathdet {

// Square matrix of rationals. at() is 1-based; storage is row-major 0-based.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t order) : n_(order), a_(order * order, Rat(0)) {}

  std::size_t order() const { return n_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[(i - 1) * n_ + (j - 1)]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[(i - 1) * n_ + (j - 1)]; }

  // Leading principal block of the given order.
  ExactMatrix block(std::size_t order) const;

  nlohmann::json to_json() const;  // rows of "p/q" strings

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rat> a_;
};

// Fraction-free elimination after scaling every row to integers.
Rat det_exact(const ExactMatrix& m);
std::size_t rank_exact(const ExactMatrix& m);

struct Point {
  long x = 0;
  long y = 0;
};

// Lattice paths with unit steps right (+x) and down (-y).
Int path_count(Point p, Point q);

// Paths from starts[i] to ends[j]; when first_step_half[i] is set a path whose first
// step is horizontal counts 1/2.
struct PathSystem {
  std::vector<Point> starts;
  std::vector<Point> ends;
  std::vector<bool> first_step_half;
};

Rat weighted_path_count(Point p, Point q, bool first_step_half);
ExactMatrix lgv_matrix(const PathSystem& ps);

PathSystem upper_paths(int n, int m);
PathSystem lower_paths(int n, int m, int s);
PathSystem lower_paths_odd(int n, int m, int s);

// Plane partitions in an a x b x c box: (C(b+c, b-i+j)), order a.
ExactMatrix matrix_box(int a, int b, int c);

ExactMatrix matrix_gplus(int n, int m);
ExactMatrix matrix_A(int n, int m, int s);
ExactMatrix matrix_A_tilde(int n, int m, int s);
ExactMatrix matrix_B(int n, const Rat& m, int s);
ExactMatrix matrix_C(int n, const Rat& m, int s);

Rat b_entry(int n, const Rat& m, int s, int i, int j);
// Second form of an off-row entry, valid for i != s+1.
Rat b_entry_alt(int n, const Rat& m, int i, int j);
Rat c_entry(int n, const Rat& m, int s, int i, int j);

// Row factor taken out of B to reach C, for rows with 2i >= n+2 (1 otherwise).
Rat c_row_factor(int n, const Rat& m, int i);

// (n+m-s)(s+m) / ((2n-2s) prod_{i=1..n} (2n+1-2i)!)
Rat minusdet_prefactor(int n, const Rat& m, int s);

// minusdet_prefactor * det B
Rat m_gminus(int n, int m, int s);

// Entry (i,j) = prod_{k=i+1..n}(x_j + a_k) * prod_{k=2..i}(x_j + b_k); element k-1 of each
// vector holds the k-th value, b_1 is ignored.
ExactMatrix krattenthaler_matrix(const std::vector<Rat>& x, const std::vector<Rat>& a,
                                 const std::vector<Rat>& b);
Rat krattenthaler_product(const std::vector<Rat>& x, const std::vector<Rat>& a,
                          const std::vector<Rat>& b);

}  // namespace hexcount::pathdet
