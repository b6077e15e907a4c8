#pragma once

#include <cstdint>
#include <vector>

#include "partcat/intpoly.hpp"
#include "partcat/scalar.hpp"

namespace partcat {

enum class Exec { Serial, Parallel };

// Square matrix whose (i,j) entry is t^E[i][j] with E[i][j] >= 0.
using ExponentMatrix = std::vector<std::vector<int>>;

// det via evaluation at D+1 points modulo word-size primes, Newton
// interpolation per prime and CRT; D = sum of row maxima.  Exact because
// every coefficient is bounded by n! in absolute value.
IntPoly det_monomial(const ExponentMatrix& e, Exec exec = Exec::Parallel);

// det via exact rational elimination at D+1 integer points and rational
// Newton interpolation.  General Laurent entries.
LaurentPoly det_interpolate(const std::vector<std::vector<LaurentPoly>>& m);

// Fraction-free (Bareiss) elimination over Q[t]; oracle for small sizes.
LaurentPoly det_bareiss(const std::vector<std::vector<LaurentPoly>>& m);

std::vector<std::vector<LaurentPoly>> to_laurent_matrix(const ExponentMatrix& e);

namespace modp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
// Largest `count` primes below 2^62.
const std::vector<std::uint64_t>& primes(std::size_t count);
// det of (x^E[i][j]) modulo p.
std::uint64_t det_at(const ExponentMatrix& e, std::uint64_t x, std::uint64_t p);
}  // namespace modp

}  // namespace partcat
