// Local transformations at an odd prime p: the coefficient-level maps that
// scale unit coefficients by p^2 and normalize the content p-power, their
// full preimage enumeration, and the stability notion that makes the maps
// terminate on sorted primitive forms.
#pragma once

#include <set>
#include <vector>

#include "triform/numth.hpp"

namespace triform {

// Coefficients coprime to p are multiplied by p^2; result sorted.
Form transform_at(const Form& a, Int p);

// transform_at followed by division by the full power of p common to all
// coefficients (which is p or p^2); result sorted.
Form reduce_at(const Form& a, Int p);

// All primitive sorted b with reduce_at(b, p) == sorted(a).  The input must
// be primitive.  coeff_cap < 0 disables the cap on coefficients; when
// exclude_fixed_point is set, b == sorted(a) is omitted.
std::set<Form> reduce_preimage(const Form& a, Int p, Int coeff_cap = -1,
                               bool exclude_fixed_point = true);

// Stability at p.  Rank 3: the unimodular Jordan part either has rank 3, or
// rank 2 and is isotropic, or rank 2 anisotropic with the remaining
// coefficient of valuation exactly 1.  Rank >= 4: every square class of Z_p
// is represented.  Requires rank >= 3.
bool is_p_stable(const Form& a, Int p);

// Stable at every odd prime.
bool is_stable(const Form& a);

struct ReductionStep {
  Int p;
  Form from;
  Form to;
};

struct ReductionChain {
  Form stable;                        // final everywhere-stable form
  std::vector<ReductionStep> steps;   // applied reductions in order
  std::vector<Int> anomalous_primes;  // instability observed at primes > 7
};

// Repeatedly applies reduce_at at the smallest unstable odd prime until the
// form is stable everywhere.
ReductionChain stabilize(const Form& a);

}  // namespace triform
