#include "triform/classify.hpp"

#include <algorithm>
#include <set>

#include "triform/localrep.hpp"
#include "triform/triforms.hpp"

namespace triform {

bool in_ternary_table(const Form& a) {
  for (const auto& e : ternary_regular_table()) {
    if (e.a == a) return true;
  }
  return false;
}

namespace {

// Fourth coefficients of a family that do not exceed cap.
std::vector<Int> family_values_up_to(const QuaternaryFamily& f, Int cap) {
  std::set<Int> vals(f.finite.begin(), f.finite.end());
  for (const auto& t : f.terms) {
    for (int r = 1;; ++r) {
      const int e = t.mul * r + t.off;
      if (e < 0) continue;
      Int v;
      try {
        v = checked_mul(t.c, checked_pow(t.p, e));
      } catch (const ArithmeticError&) {
        break;
      }
      if (v > cap) break;
      vals.insert(v);
    }
  }
  std::vector<Int> out(vals.begin(), vals.end());
  std::erase_if(out, [&](Int v) { return v > cap; });
  return out;
}

}  // namespace

bool in_quaternary_table(const Form& a) {
  if (a.size() != 4) return false;
  const Form s = sorted(a);
  for (const auto& f : quaternary_family_table()) {
    // Table instances are sorted with the family base as prefix.
    if (!(f.base[0] == s[0] && f.base[1] == s[1] && f.base[2] == s[2])) continue;
    for (Int v : family_values_up_to(f, s[3])) {
      if (v == s[3]) return true;
    }
  }
  return false;
}

std::vector<Form> instantiate_families(int rmax) {
  std::set<Form> out;
  for (const auto& f : quaternary_family_table()) {
    for (Int v : f.finite) {
      Form a = f.base;
      a.push_back(v);
      out.insert(sorted(a));
    }
    for (const auto& t : f.terms) {
      for (int r = 1; r <= rmax; ++r) {
        const int e = t.mul * r + t.off;
        if (e < 0) continue;
        Form a = f.base;
        a.push_back(checked_mul(t.c, checked_pow(t.p, e)));
        out.insert(sorted(a));
      }
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// Whether deleting a[i] leaves a primitive classified-regular core that
// absorbs a[i] in its square-class closure at every odd prime.
bool deletion_redundant(const Form& a, std::size_t i, Int bound, Form* core_out) {
  Form core;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j != i) core.push_back(a[j]);
  }
  if (content(core) != 1) return false;

  if (core.size() == 3) {
    if (!in_ternary_table(core)) return false;
  } else if (core.size() == 4) {
    if (!in_quaternary_table(core)) return false;
  } else {
    // No complete table at this rank: use the structure test, corroborated
    // by a counterexample scan.
    if (!structure_regular(core).regular) return false;
    if (regular_up_to(core, bound).found) return false;
  }

  // Divisor primes of the core and of a[i]; at every other odd prime the
  // core is unimodular of rank >= 3, hence universal.
  std::vector<Int> primes = odd_prime_divisors(core);
  for (Int q : prime_divisors(a[i])) {
    if (q != 2 && std::find(primes.begin(), primes.end(), q) == primes.end()) {
      primes.push_back(q);
    }
  }
  for (Int p : primes) {
    if (!covers_from(core, p, ord_p(a[i], p))) return false;
  }
  if (core_out) *core_out = core;
  return true;
}

}  // namespace

OldnessResult is_old(const Form& a, Int bound) {
  const Form s = sorted(a);
  if (s.size() < 3) throw PreconditionError("is_old requires rank >= 3");
  if (s.size() == 3) return {Oldness::New, -1, {}};
  if (content(s) != 1) throw PreconditionError("is_old requires a primitive form");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && s[i] == s[i - 1]) continue;
    Form core;
    if (deletion_redundant(s, i, bound, &core)) {
      return {Oldness::Old, static_cast<int>(i), core};
    }
  }
  return {Oldness::New, -1, {}};
}

StructureResult structure_regular(const Form& a) {
  const Form s = sorted(a);
  if (s.size() < 3) throw PreconditionError("structure_regular requires rank >= 3");
  if (content(s) != 1) return {};

  const std::size_t k = s.size();
  for (std::size_t core_size : {std::size_t{3}, std::size_t{4}}) {
    if (core_size > k) break;
    // Enumerate index subsets of the given size.
    std::vector<int> idx(core_size);
    for (std::size_t i = 0; i < core_size; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
      Form core;
      for (int j : idx) core.push_back(s[j]);
      const bool listed = core_size == 3 ? in_ternary_table(sorted(core))
                                         : in_quaternary_table(sorted(core));
      if (listed) {
        if (core_size == k) {
          // The whole form is table-listed; nothing remains to absorb.
          StructureResult r;
          r.regular = true;
          r.core_indices = idx;
          r.core = s;
          return r;
        }
        bool ok = true;
        // Exact absorption criterion: every remaining coefficient's square
        // class tail must be covered by the core at every odd prime.  The
        // square-class divisor must exist (it encodes the same condition as
        // a single modulus).
        if (!square_class_divisor(core)) ok = false;
        std::vector<Int> primes = odd_prime_divisors(core);
        for (std::size_t j = 0; j < k && ok; ++j) {
          if (std::find(idx.begin(), idx.end(), static_cast<int>(j)) != idx.end()) continue;
          for (Int p : prime_divisors(s[j])) {
            if (p != 2 && std::find(primes.begin(), primes.end(), p) == primes.end()) {
              primes.push_back(p);
            }
          }
        }
        for (std::size_t j = 0; j < k && ok; ++j) {
          if (std::find(idx.begin(), idx.end(), static_cast<int>(j)) != idx.end()) continue;
          for (Int p : primes) {
            if (!covers_from(core, p, ord_p(s[j], p))) {
              ok = false;
              break;
            }
          }
        }
        if (ok) {
          StructureResult r;
          r.regular = true;
          r.core_indices = idx;
          r.core = sorted(core);
          return r;
        }
      }
      // Next subset.
      int pos = static_cast<int>(core_size) - 1;
      while (pos >= 0 && idx[pos] == static_cast<int>(k - core_size + pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::size_t j = pos + 1; j < core_size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {};
}

}  // namespace triform
