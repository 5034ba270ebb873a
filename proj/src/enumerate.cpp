#include "triform/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "triform/localrep.hpp"
#include "triform/triforms.hpp"
#include "triform/watson.hpp"

namespace triform {

namespace {

constexpr Int kSmallPrimes[] = {3, 5, 7};

bool is_triangular_number(Int m) {
  // m = k(k+1)/2 iff 8m+1 is an odd square.
  const Int t = 8 * m + 1;
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(t)));
  while (r * r > t) --r;
  while ((r + 1) * (r + 1) <= t) ++r;
  return r * r == t;
}

bool signature_member(const SignatureKey& key, Int n) {
  const Int v = 8 * n + key.alpha;
  return legendre(v, 3) == key.eta3 && legendre(v, 5) == key.eta5 &&
         legendre(v, 7) == key.eta7;
}

}  // namespace

std::vector<Int> build_signature_set(const SignatureKey& key, int count) {
  std::vector<Int> out;
  for (Int n = 1; static_cast<int>(out.size()) < count; ++n) {
    if (n > 100'000'000) {
      throw std::logic_error("signature set appears to be empty");
    }
    if (signature_member(key, n)) out.push_back(n);
  }
  return out;
}

namespace {

// First signature element not of the form b1 * triangular.
Int first_unary_miss(const SignatureKey& key, Int b1) {
  int produced = 0;
  for (Int n = 1;; ++n) {
    if (!signature_member(key, n)) continue;
    if (++produced > 100'000) {
      throw std::logic_error("no unary miss found in signature set");
    }
    if (n % b1 != 0 || !is_triangular_number(n / b1)) return n;
  }
}

struct PairContext {
  Form pair;
  // Per prime q in {3,5,7}: the target shift, plus the auxiliary slot
  // coefficient used when neither pair entry can supply the required
  // square class on its own (0 when no slot is needed).
  Int shift[3];
  Int slot[3];
};

PairContext make_pair_context(const SignatureKey& key, Int b1, Int b2) {
  PairContext ctx;
  ctx.pair = {b1, b2};
  const int etas[3] = {key.eta3, key.eta5, key.eta7};
  for (int qi = 0; qi < 3; ++qi) {
    const Int q = kSmallPrimes[qi];
    const int eta = etas[qi];
    const Int delta = eta == 1 ? 1 : min_nonresidue(q);
    const bool b1_off = legendre(b1, q) != eta;
    const bool b2_off = legendre(b2, q) != eta;
    ctx.slot[qi] = b1_off && b2_off ? delta : 0;
    ctx.shift[qi] = b1 + b2 + ctx.slot[qi];
  }
  return ctx;
}

// m -> <b1,b2> + delta z^2 over Z_q with z a q-adic unit.  If m/delta is a
// unit square the slot absorbs m on its own.  Otherwise m - delta z^2 is a
// unit (its residue ranges over m - delta*QR(q) mod q), so the test reduces
// to binary representation of a unit class.
bool represents_with_unit_slot(const Form& pair, Int delta, Int m, Int q) {
  if (m % q != 0 && legendre(m % q * delta, q) == 1) return true;
  for (Int z = 1; z <= (q - 1) / 2; ++z) {
    const Int u = ((m - delta * z * z) % q + q) % q;
    if (u != 0 && represents_locally(pair, u, q)) return true;
  }
  return false;
}

bool pair_admissible(const PairContext& ctx, Int n) {
  for (int qi = 0; qi < 3; ++qi) {
    const Int q = kSmallPrimes[qi];
    const Int m = 8 * n + ctx.shift[qi];
    if (ctx.slot[qi] != 0) {
      if (!represents_with_unit_slot(ctx.pair, ctx.slot[qi], m, q)) return false;
    } else if (!represents_locally(ctx.pair, m, q)) {
      return false;
    }
  }
  return true;
}

// First admissible n (w.r.t. the pair's local conditions) missed by the
// binary triangular form; 0 when none below bound.
Int first_pair_miss(const PairContext& ctx, Int bound) {
  Int stage = std::min<Int>(bound, 256);
  Int next_n = 1;
  for (;;) {
    RepresentedSet rep(ctx.pair, stage);
    for (Int n = next_n; n <= stage; ++n) {
      if (!rep.represents(n) && pair_admissible(ctx, n)) return n;
    }
    if (stage == bound) return 0;
    next_n = stage + 1;
    stage = std::min(bound, stage * 4);
  }
}

}  // namespace

std::set<Form> build_prefix_set(Int psi_bound, PrefixReport* report) {
  std::set<Form> out;
  PrefixReport local;
  for (int e3 : {1, -1}) {
    for (int e5 : {1, -1}) {
      for (int e7 : {1, -1}) {
        for (Int alpha = 0; alpha <= 104; ++alpha) {
          const SignatureKey key{e3, e5, e7, alpha};
          ++local.signatures;
          const Int s1 = build_signature_set(key, 1)[0];
          for (Int b1 = 1; b1 <= s1; ++b1) {
            const Int m1 = first_unary_miss(key, b1);
            for (Int b2 = b1; b2 <= m1; ++b2) {
              ++local.pairs;
              const PairContext ctx = make_pair_context(key, b1, b2);
              const Int m2 = first_pair_miss(ctx, psi_bound);
              const Int b3_cap = m2 == 0 ? psi_bound : m2;
              if (m2 == 0) local.unresolved.push_back({b1, b2});
              for (Int b3 = b2; b3 <= b3_cap; ++b3) {
                ++local.triples;
                const Form triple{b1, b2, b3};
                if (out.count(triple)) continue;
                const ScanResult r = psi_cached(triple, psi_bound);
                if (!r.found || b3 <= r.value) out.insert(triple);
              }
            }
          }
        }
      }
    }
  }
  if (report) *report = local;
  return out;
}

namespace {

std::optional<Int> xi_cached(const Form& a) {
  static std::map<Form, std::optional<Int>> cache;
  auto it = cache.find(a);
  if (it != cache.end()) return it->second;
  const auto v = square_class_divisor(a);
  cache.emplace(a, v);
  return v;
}

}  // namespace

CandidateSet build_candidates(Int psi_bound, CandidateReport* report) {
  CandidateReport local;

  // Scalars that can prefix a candidate quadruple.
  std::set<Int> x_set;
  for (Int n : {1, 3, 5, 9, 25, 27}) {
    for (Int x = 1; x <= 8; ++x) x_set.insert(n * x);
  }

  // Distinguished ternary cores: primitive regular with universal
  // Q_p-spaces at every odd prime.
  std::vector<Form> y0;
  for (const auto& e : ternary_regular_table()) {
    bool universal = true;
    for (Int p : odd_prime_divisors(e.a)) {
      if (!is_qp_space_universal(e.a, p)) universal = false;
    }
    if (universal) y0.push_back(e.a);
  }

  std::set<Form> y1;
  for (Int p : kSmallPrimes) {
    for (int delta = 1; delta <= 2; ++delta) {
      for (const Form& a : y0) {
        Form b = a;
        for (Int& c : b) c = checked_mul(c, checked_pow(p, delta));
        y1.insert(sorted(b));
      }
    }
  }

  std::set<Form> y2;
  for (Int p : kSmallPrimes) {
    for (const Form& a : y0) {
      for (const Form& b : reduce_preimage(a, p)) y2.insert(b);
    }
  }
  local.y2 = y2.size();

  std::vector<std::pair<Form, Int>> y3;  // form with its counterexample
  for (const Form& a : y2) {
    const ScanResult r = psi_cached(a, psi_bound);
    if (r.found) y3.emplace_back(a, r.value);
  }
  local.y3 = y3.size();

  std::set<Form> z4;
  for (Int a1 : x_set) {
    for (const Form& b : y1) {
      Form q = b;
      q.push_back(a1);
      if (content(q) == 1) z4.insert(sorted(q));
    }
    for (const Form& b : y2) {
      Form q = b;
      q.push_back(a1);
      z4.insert(sorted(q));
    }
  }
  for (const auto& [b, cex] : y3) {
    const auto xi = xi_cached(b);
    if (!xi) {
      local.xi_skipped.push_back(b);
      continue;
    }
    for (Int a1 = *xi; a1 <= cex; a1 += *xi) {
      Form q = b;
      q.push_back(a1);
      z4.insert(sorted(q));
    }
  }
  local.z4 = z4.size();

  const std::set<Form> y0_set(y0.begin(), y0.end());
  auto recognizably_old = [&](const Form& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0 && a[i] == a[i - 1]) continue;
      Form core;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (j != i) core.push_back(a[j]);
      }
      if (!y0_set.count(core)) continue;
      const auto xi = xi_cached(core);
      if (xi && a[i] % *xi == 0) return true;
    }
    return false;
  };

  CandidateSet result;
  for (const Form& a : z4) {
    if (psi_cached(a, 124).found) continue;
    if (!universal_up_to(a, psi_bound).found) continue;  // universal: drop
    if (recognizably_old(a)) {
      result.w.insert(a);
      ++local.w_removed;
      continue;
    }
    result.z.insert(a);
  }
  if (report) *report = local;
  return result;
}

std::vector<DropRecord> discover_drops(const std::set<Form>& candidates, Int bound) {
  std::vector<DropRecord> out;
  int index = 5;
  for (const Form& a : candidates) {
    if (a.size() != 4) {
      throw PreconditionError("discover_drops expects rank-4 candidates");
    }
    if (regular_up_to(a, bound).found) continue;
    if (is_old(a, bound).verdict == Oldness::Old) continue;
    std::vector<Int> unstable;
    for (Int p : odd_prime_divisors(a)) {
      if (!is_p_stable(a, p)) unstable.push_back(p);
    }
    for (Int p : unstable) {
      const Form image = reduce_at(a, p);
      Form cur = image;
      int height = 0;
      while (cur.size() > 3) {
        const OldnessResult o = is_old(cur, bound);
        if (o.verdict == Oldness::New) break;
        cur = o.core;
        ++height;
      }
      if (height == 0) continue;  // reduction is new: no collapse here
      out.push_back({index, a, p, image, cur, height, unstable.size() > 1});
      ++index;
    }
  }
  return out;
}

std::vector<Form> check_prefix_closure(int rmax) {
  std::set<Form> prefixes;
  for (const auto& [a, type] : ternary_prefix_table()) prefixes.insert(a);
  std::vector<Form> violations;
  for (const Form& inst : instantiate_families(rmax)) {
    const Form s = sorted(inst);
    const Form prefix{s[0], s[1], s[2]};
    if (!prefixes.count(prefix)) violations.push_back(s);
  }
  return violations;
}

}  // namespace triform
