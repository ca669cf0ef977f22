#pragma once

#include <gmpxx.h>

#include <string>

namespace hexcount {

using Int = mpz_class;
using Rat = mpq_class;

// Always "p/q", q > 0, even for integers ("3/1").
std::string to_fraction(const Rat& r);
std::string to_decimal(const Int& z);

bool is_integer(const Rat& r);
// Throws std::domain_error when r has a denominator other than 1.
Int as_integer(const Rat& r);

}  // namespace hexcount
