// Triangular forms sum a_i * x_i(x_i+1)/2: exact represented-set bitmaps via
// the odd-square substitution, global and local representability, and the
// first-counterexample functionals used throughout the classification.
#pragma once

#include <vector>

#include "triform/localrep.hpp"
#include "triform/numth.hpp"

namespace triform {

// k-th triangular number.
Int triangular(Int k);

// t(n, a) = 8n + sum(a); n is represented by the triangular form iff
// t(n, a) is a sum a_i * (odd)^2.
Int triangular_shift(const Form& a, Int n);

// Exact represented set of a triangular form for all n in [0, bound],
// computed by dynamic programming over shifted odd squares.
class RepresentedSet {
 public:
  RepresentedSet(Form a, Int bound);

  bool represents(Int n) const;
  Int bound() const { return bound_; }
  const Form& form() const { return a_; }

 private:
  Form a_;
  Int bound_;
  Int target_limit_;
  std::vector<std::uint64_t> bits_;
};

// Whether n is represented by the triangular form with coefficients a.
bool represents(const Form& a, Int n);

// Whether t(n, a) is represented by <a> over Z_p for every odd prime p
// (the local condition at 2 is vacuous for primitive forms after content
// normalization).  For rank <= 2 the odd primes dividing t(n, a) are also
// consulted; obstructions living only at p = 2 beyond content are outside
// the scope of this predicate (no caller uses it below rank 3).
bool locally_represents(const Form& a, Int n);

struct ScanResult {
  bool found = false;  // a counterexample / miss exists below the bound
  Int value = 0;       // the counterexample when found, else the bound used
};

// First n in [1, bound] locally represented but not represented ("psi").
ScanResult psi(const Form& a, Int bound);

// First element of the ascending list s not represented.
ScanResult psi_over(const Form& a, const std::vector<Int>& s);

// found == false means: no counterexample to regularity below the bound.
ScanResult regular_up_to(const Form& a, Int bound);

// found == true reports the first positive integer missed.
ScanResult universal_up_to(const Form& a, Int bound);

// Process-wide memoized psi (used by the enumeration pipelines).
ScanResult psi_cached(const Form& a, Int bound);

}  // namespace triform
