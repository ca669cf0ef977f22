#pragma once

#include "hexcount/special.hpp"

namespace hexcount::formulas {

// prod_{i<=a, j<=b, k<=c} (i+j+k-1)/(i+j+k-2)
Int box_count(int a, int b, int c);

// hexagon n, n, 2m; axis vertex s+1
Int theorem1_count(int n, int m, int s);
// hexagon n, n, 2m+1; axis vertex s
Int theorem2_count(int n, int m, int s);

// h(n) prod_{2<=i<=j<=n} (2m+2j-i) / prod_{j=1..n} (2j-2)!
Int gplus_closed(int n, int m);

// Weighted lower-half count from the factor product; s = n is mapped to s = 0.
Rat gminus_closed(int n, int m, int s);

// 2^(C(n,2)-1) h(n)^2 (2n-2s-1)!! (2s-1)!! / (h(2n) (n-s)! s!) times the linear factors
Int step6_expression(int n, int m, int s);

// Upper half of the odd case: gplus_closed(n+1, m).
Int odd_upper_closed(int n, int m);
// Lower half of the odd case: gminus_closed(n-1, m+1, s-1); needs s < n.
Rat odd_lower_closed(int n, int m, int s);
// 2^(n-1) * upper * lower, with s = n mapped to s = 1 and (n,s) = (1,1) giving (m+1)^2.
Int oddcase_expression(int n, int m, int s);

// 1/(4 pi) sqrt(beta (2 alpha + beta) / (gamma (alpha - gamma)))
double asymptotic_proportion(double alpha, double beta, double gamma);

// Tiling proportion for sides alpha t, alpha t, beta t with the defect at vertex gamma t.
// Even beta t goes through theorem1_count(alpha t, beta t / 2, gamma t), odd through
// theorem2_count(alpha t, (beta t - 1) / 2, gamma t); the box count cancels exactly.
Rat asymptotic_ratio(int alpha, int beta, int gamma, int t);

}  // namespace hexcount::formulas
