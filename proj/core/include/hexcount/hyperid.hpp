#pragma once

#include "hexcount/exact.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hexcount::hyperid {

// pFq[upper; lower; 1] summed for k = 0..terms.
struct HypergeomSpec {
  std::vector<Rat> upper;
  std::vector<Rat> lower;
  long terms = 0;
};

// Sets terms to the first vanishing point of an upper parameter; throws
// std::invalid_argument if no upper parameter is a nonpositive integer.
HypergeomSpec terminating(std::vector<Rat> upper, std::vector<Rat> lower);

// Throws std::invalid_argument when no upper parameter is a nonpositive integer >= -terms
// or when a lower Pochhammer vanishes within the summation range.
Rat terminating_sum(const HypergeomSpec& spec);

// 2F1[a, -n; c; 1] = (c-a)_n / (c)_n
bool vandermonde_check(const Rat& a, long n, const Rat& c);
// 3F2[a, b, -n; c, 1+a+b-c-n; 1] = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
bool pfaff_saalschuetz_check(const Rat& a, const Rat& b, long n, const Rat& c);

// sum_{j=0..l} C(l,j) B_{i, n+2l-2k-j} at m = -k-1/2
Rat halb_combination(int n, int k, int l, int i, int s);
bool halb_vanishing_check(int n, int k, int l, int i, int s);
bool halb_tuple_valid(int n, int k, int l, int i, int s);
// n - rank B(n, -k-1/2, s)
int halb_null_dimension(int n, int k, int s);

// Row combinations of C at m = -k, column j; variant 1: k < s, 2: k > n-s,
// 3: s < k <= n/2, 4: n/2 < k < n-s. All need 2s <= n.
Rat ganz_combination(int n, int k, int s, int variant, int j);
bool ganz_vanishing_check(int n, int k, int s, int variant, int j);
// 0 when no variant applies (k = s or k = n-s).
int ganz_variant(int n, int k, int s);

// (n+2+j-2i)_{n-j} (i-k+1-j)_{j-2i+n} (n+1-2k-j), the summand shared by both sums of
// variants 3 and 4 once the first sum carries its (i-k)_{n+1-2i} factor.
Rat ganz_common_term(int n, int k, int i, int j);
// Checks that shared summand against both sums' terms for every i they cover.
bool ganz_merge_check(int n, int k, int s, int variant, int j);

struct SuiteReport {
  std::string suite;
  std::size_t tuples_checked = 0;
  std::vector<nlohmann::json> failures;

  bool ok() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// Parameters p/q with |p| <= 12, 1 <= q <= 12 and n in 0..8, poles redrawn.
SuiteReport vandermonde_suite(std::uint64_t seed, std::size_t tuples = 200);
SuiteReport pfaff_suite(std::uint64_t seed, std::size_t tuples = 200);
SuiteReport halb_suite(int max_n);
SuiteReport ganz_suite(int max_n);

}  // namespace hexcount::hyperid
