#pragma once

#include "hexcount/exact.hpp"

namespace hexcount::formulas {

Int factorial(long n);
// (-1)!! = 0!! = 1
Int double_factorial(long n);
// h(n) = 0! 1! ... (n-1)!
Int superfactorial(long n);
// Zero unless 0 <= b <= a.
Int binomial(long a, long b);

// (a)_k = a(a+1)...(a+k-1); for k < 0, (a)_k = 1 / ((a-1)(a-2)...(a+k)).
// A vanishing denominator throws std::domain_error.
Rat pochhammer(const Rat& a, long k);

}  // namespace hexcount::formulas
