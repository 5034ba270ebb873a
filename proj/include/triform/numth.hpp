// Elementary number-theoretic helpers shared by every module: exact
// (overflow-checked) 64-bit arithmetic, p-adic valuations, Legendre symbols
// and factorization by trial division.  All primes handled here are odd.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace triform {

using Int = long long;

// Coefficient vector of a diagonal form, always with positive entries.
using Form = std::vector<Int>;

// Valuation reported for zero.
inline constexpr int kInfiniteValuation = 1 << 30;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a * b with overflow detection (throws ArithmeticError).
Int checked_mul(Int a, Int b);

// base^exp with overflow detection; exp >= 0.
Int checked_pow(Int base, int exp);

// Largest e with p^e | n; kInfiniteValuation for n == 0.  p >= 2.
int ord_p(Int n, Int p);

// n / p^ord_p(n), for n != 0.
Int unit_part(Int n, Int p);

// Legendre symbol (a/p) in {-1, 0, 1}; p an odd prime.
int legendre(Int a, Int p);

// Smallest positive quadratic nonresidue modulo the odd prime p.
Int min_nonresidue(Int p);

bool is_prime(Int n);

// Distinct prime divisors of |n| in ascending order; n != 0.
std::vector<Int> prime_divisors(Int n);

// Distinct odd primes dividing at least one coefficient, ascending.
std::vector<Int> odd_prime_divisors(const Form& a);

// gcd of all coefficients; form must be nonempty with positive entries.
Int content(const Form& a);

Form sorted(Form a);

std::string to_string(const Form& a);

}  // namespace triform
