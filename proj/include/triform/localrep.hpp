// Local representation theory of diagonal quadratic lattices over Z_p for
// odd primes p: a fast recursive representability test, an independent
// exhaustive oracle based on lifting, square-class coverage queries, and the
// shifted-witness construction used to certify non-coverage.
#pragma once

#include <optional>
#include <vector>

#include "triform/numth.hpp"

namespace triform {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JordanLayer {
  int valuation;            // common p-valuation of the coefficients below
  std::vector<Int> units;   // unit parts of the coefficients in this layer
};

// Jordan decomposition of <a_1,...,a_k> over Z_p (p odd), layers by
// ascending valuation.
std::vector<JordanLayer> jordan_split(const Form& a, Int p);

// Whether m >= 0 is represented by the diagonal lattice <a> over Z_p,
// p an odd prime.  Decided by unimodular-layer reduction.
bool represents_locally(const Form& a, Int m, Int p);

// Independent oracle for represents_locally: searches for an approximate
// solution x mod p^(2s+1) whose minimal coordinate valuation s certifies a
// lift.  Throws BudgetExceeded when the search space exceeds the budget
// (measured in 64-bit word operations of the internal sweep).
bool hensel_oracle(const Form& a, Int m, Int p, double budget = 2e8);

// Whether p^e * Z_p is contained in the closure of the represented set,
// i.e. whether all square classes of valuation >= e are represented.
bool covers_from(const Form& a, Int p, int e);

// covers_from(a, p, 0).
bool is_zp_universal(const Form& a, Int p);

// Whether the quadratic space Q_p <a> represents every class of Q_p^*.
bool is_qp_space_universal(const Form& a, Int p);

// Smallest e with covers_from(a, p, e); requires the Q_p-space to be
// universal (PreconditionError otherwise).
int local_square_exponent(const Form& a, Int p);

// Product over odd primes p of p^local_square_exponent(a, p); nullopt when
// some Q_p-space fails to be universal.  Requires rank >= 3.
std::optional<Int> square_class_divisor(const Form& a);

// For gamma > 0 whose trailing square class tail gamma * Z_p is *not*
// covered by <k>, returns eta > 0 such that eta is not represented by <k>
// over Z_p while eta + gamma lies in gamma * (Z_p^*)^2.  PreconditionError
// when gamma * Z_p is covered.
Int witness_shift(const Form& k, Int gamma, Int p);

}  // namespace triform
