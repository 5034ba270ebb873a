#include "triform/triforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace triform {

Int triangular(Int k) {
  if (k < 0) throw ArithmeticError("triangular index must be nonnegative");
  return checked_mul(k, k + 1) / 2;
}

Int triangular_shift(const Form& a, Int n) {
  Int s = 0;
  for (Int c : a) s += c;
  return checked_mul(8, n) + s;
}

RepresentedSet::RepresentedSet(Form a, Int bound) : a_(std::move(a)), bound_(bound) {
  if (a_.empty()) throw ArithmeticError("empty form");
  for (Int c : a_) {
    if (c <= 0) throw ArithmeticError("form coefficients must be positive");
  }
  if (bound_ < 0) throw ArithmeticError("negative bound");
  target_limit_ = triangular_shift(a_, bound_);
  const std::size_t words = static_cast<std::size_t>(target_limit_ / 64) + 2;

  // Each variable contributes exactly one value a_i * y^2 with y odd.
  std::vector<std::uint64_t> cur(words, 0), next(words, 0);
  cur[0] = 1;
  for (Int c : a_) {
    std::fill(next.begin(), next.end(), 0);
    for (Int y = 1; checked_mul(c, y * y) <= target_limit_; y += 2) {
      const Int shift = c * y * y;
      const std::size_t sw = static_cast<std::size_t>(shift >> 6);
      const int sb = static_cast<int>(shift & 63);
      for (std::size_t w = 0; w + sw < words; ++w) {
        const std::uint64_t bits = cur[w];
        if (!bits) continue;
        next[w + sw] |= bits << sb;
        if (sb != 0 && w + sw + 1 < words) next[w + sw + 1] |= bits >> (64 - sb);
      }
    }
    cur.swap(next);
  }
  bits_ = std::move(cur);
}

bool RepresentedSet::represents(Int n) const {
  if (n < 0 || n > bound_) throw ArithmeticError("n outside represented-set bound");
  const Int t = triangular_shift(a_, n);
  return (bits_[static_cast<std::size_t>(t >> 6)] >> (t & 63)) & 1;
}

bool represents(const Form& a, Int n) {
  if (n < 0) return false;
  return RepresentedSet(a, n).represents(n);
}

bool locally_represents(const Form& a, Int n) {
  if (n < 0) throw ArithmeticError("n must be nonnegative");
  const Int c = content(a);
  if (c > 1) {
    // A form with content c represents n iff the primitive quotient
    // represents n / c; this also absorbs the obstruction at p = 2 coming
    // from even content.
    if (n % c != 0) return false;
    Form b = a;
    for (Int& x : b) x /= c;
    return locally_represents(b, n / c);
  }
  const Int t = triangular_shift(a, n);
  std::vector<Int> primes = odd_prime_divisors(a);
  if (a.size() <= 2) {
    for (Int q : prime_divisors(t)) {
      if (q != 2 && std::find(primes.begin(), primes.end(), q) == primes.end()) {
        primes.push_back(q);
      }
    }
  }
  for (Int p : primes) {
    if (!represents_locally(a, t, p)) return false;
  }
  return true;
}

namespace {

// Scans n = 1..bound in geometric stages so that small counterexamples stay
// cheap; pred(n, rep) decides whether n is a hit.
template <typename Pred>
ScanResult staged_scan(const Form& a, Int bound, Pred pred) {
  Int stage = std::min<Int>(bound, 128);
  Int next_n = 1;
  for (;;) {
    RepresentedSet rep(a, stage);
    for (Int n = next_n; n <= stage; ++n) {
      if (pred(n, rep)) return {true, n};
    }
    if (stage == bound) return {false, bound};
    next_n = stage + 1;
    stage = std::min(bound, stage * 4);
  }
}

}  // namespace

ScanResult psi(const Form& a, Int bound) {
  return staged_scan(a, bound, [&](Int n, const RepresentedSet& rep) {
    return !rep.represents(n) && locally_represents(a, n);
  });
}

ScanResult psi_over(const Form& a, const std::vector<Int>& s) {
  if (s.empty()) return {false, 0};
  RepresentedSet rep(a, s.back());
  for (Int n : s) {
    if (n <= 0) throw ArithmeticError("psi_over expects positive entries");
    if (!rep.represents(n)) return {true, n};
  }
  return {false, s.back()};
}

ScanResult regular_up_to(const Form& a, Int bound) { return psi(a, bound); }

ScanResult universal_up_to(const Form& a, Int bound) {
  return staged_scan(a, bound,
                     [&](Int n, const RepresentedSet& rep) { return !rep.represents(n); });
}

ScanResult psi_cached(const Form& a, Int bound) {
  static std::map<std::pair<Form, Int>, ScanResult> cache;
  const auto key = std::make_pair(a, bound);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const ScanResult r = psi(a, bound);
  cache.emplace(key, r);
  return r;
}

}  // namespace triform
