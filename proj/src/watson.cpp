#include "triform/watson.hpp"

#include <algorithm>

#include "triform/localrep.hpp"

namespace triform {

namespace {

void validate_odd_prime(Int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw ArithmeticError("expected an odd prime, got " + std::to_string(p));
  }
}

}  // namespace

Form transform_at(const Form& a, Int p) {
  validate_odd_prime(p);
  Form b;
  b.reserve(a.size());
  for (Int c : a) {
    if (c <= 0) throw ArithmeticError("form coefficients must be positive");
    b.push_back(c % p == 0 ? c : checked_mul(c, p * p));
  }
  return sorted(std::move(b));
}

Form reduce_at(const Form& a, Int p) {
  Form b = transform_at(a, p);
  int s = kInfiniteValuation;
  for (Int c : b) s = std::min(s, ord_p(c, p));
  // For positive input s is 1 or 2.
  const Int d = checked_pow(p, s);
  for (Int& c : b) c /= d;
  return sorted(std::move(b));
}

std::set<Form> reduce_preimage(const Form& a, Int p, Int coeff_cap,
                               bool exclude_fixed_point) {
  validate_odd_prime(p);
  const Form target = sorted(a);
  if (content(target) != 1) {
    throw PreconditionError("reduce_preimage requires a primitive form");
  }
  const std::size_t k = target.size();
  std::set<Form> out;

  // A preimage coordinate is either a unit (then a_j carries the p^(2-delta)
  // factor) or divisible by p (then b_j = p^delta * a_j).  The normalizing
  // exponent equals delta automatically for primitive targets.
  for (int delta = 1; delta <= 2; ++delta) {
    std::vector<std::size_t> unit_candidates;
    for (std::size_t j = 0; j < k; ++j) {
      if (ord_p(target[j], p) == 2 - delta) unit_candidates.push_back(j);
    }
    const std::size_t u = unit_candidates.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << u); ++mask) {
      Form b = target;
      bool ok = true;
      for (Int& c : b) {
        c = checked_mul(c, checked_pow(p, delta));
      }
      for (std::size_t t = 0; t < u; ++t) {
        if (mask & (std::size_t{1} << t)) {
          const std::size_t j = unit_candidates[t];
          b[j] = target[j] / checked_pow(p, 2 - delta);
        }
      }
      if (coeff_cap >= 0) {
        for (Int c : b) {
          if (c > coeff_cap) ok = false;
        }
      }
      if (!ok) continue;
      Form bs = sorted(std::move(b));
      if (exclude_fixed_point && bs == target) continue;
      out.insert(std::move(bs));
    }
  }
  return out;
}

bool is_p_stable(const Form& a, Int p) {
  validate_odd_prime(p);
  if (a.size() < 3) throw PreconditionError("is_p_stable requires rank >= 3");
  if (a.size() >= 4) return is_zp_universal(a, p);

  std::vector<Int> units;
  std::vector<Int> rest;
  for (Int c : a) {
    if (c <= 0) throw ArithmeticError("form coefficients must be positive");
    if (c % p != 0) {
      units.push_back(unit_part(c, p) % p);
    } else {
      rest.push_back(c);
    }
  }
  if (units.size() == 3) return true;
  if (units.size() == 2) {
    if (legendre(p - units[0] * units[1] % p, p) == 1) return true;
    return ord_p(rest[0], p) == 1;
  }
  return false;
}

bool is_stable(const Form& a) {
  for (Int p : odd_prime_divisors(a)) {
    if (!is_p_stable(a, p)) return false;
  }
  return true;
}

ReductionChain stabilize(const Form& a) {
  ReductionChain chain;
  Form cur = sorted(a);
  for (int iter = 0; iter < 256; ++iter) {
    Int unstable = 0;
    for (Int p : odd_prime_divisors(cur)) {
      if (!is_p_stable(cur, p)) {
        unstable = p;
        break;
      }
    }
    if (unstable == 0) {
      chain.stable = cur;
      return chain;
    }
    if (unstable > 7 &&
        std::find(chain.anomalous_primes.begin(), chain.anomalous_primes.end(),
                  unstable) == chain.anomalous_primes.end()) {
      chain.anomalous_primes.push_back(unstable);
    }
    Form next = reduce_at(cur, unstable);
    chain.steps.push_back({unstable, cur, next});
    cur = std::move(next);
  }
  throw std::logic_error("stabilize: no fixed point reached within 256 steps");
}

}  // namespace triform
