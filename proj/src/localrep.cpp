#include "triform/localrep.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace triform {

namespace {

void validate_odd_prime(Int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw ArithmeticError("expected an odd prime, got " + std::to_string(p));
  }
}

void validate_form(const Form& a) {
  if (a.empty()) throw ArithmeticError("empty form");
  for (Int c : a) {
    if (c <= 0) throw ArithmeticError("form coefficients must be positive");
  }
}

}  // namespace

std::vector<JordanLayer> jordan_split(const Form& a, Int p) {
  validate_odd_prime(p);
  validate_form(a);
  std::map<int, std::vector<Int>> by_val;
  for (Int c : a) by_val[ord_p(c, p)].push_back(unit_part(c, p));
  std::vector<JordanLayer> layers;
  for (auto& [v, units] : by_val) {
    std::sort(units.begin(), units.end());
    layers.push_back({v, std::move(units)});
  }
  return layers;
}

bool represents_locally(const Form& a, Int m, Int p) {
  validate_odd_prime(p);
  validate_form(a);
  if (m < 0) throw ArithmeticError("target must be nonnegative");
  if (m == 0) return true;

  const int om = ord_p(m, p);
  const Int mu = unit_part(m, p) % p;

  // Only the valuation (clamped just above ord_p(m)) and the unit residue of
  // each coefficient matter for the reduction below.
  std::vector<std::pair<int, Int>> coeff;
  coeff.reserve(a.size());
  for (Int c : a) {
    coeff.emplace_back(std::min(ord_p(c, p), om + 1), unit_part(c, p) % p);
  }

  for (int step = 0;; ++step) {
    std::vector<Int> units;
    for (auto& [v, u] : coeff) {
      if (v == 0) units.push_back(u);
    }
    if (units.size() >= 3) return true;
    if (step == om) {
      // The reduced target is now a unit.
      if (units.size() >= 2) return true;
      if (units.size() == 1) return legendre(mu * units[0], p) == 1;
      return false;
    }
    // Target still divisible by p: a unimodular binary layer absorbs it
    // exactly when it is isotropic.
    if (units.size() == 2 && legendre(p - units[0] * units[1] % p, p) == 1) {
      return true;
    }
    // Split off the unimodular part (scaled by p) and divide the rest by p.
    for (auto& [v, u] : coeff) {
      if (v == 0) {
        v = 1;
      } else {
        --v;
      }
    }
  }
}

namespace {

// dst[dst_start .. dst_start+len) |= src[src_start .. src_start+len),
// bit-addressed.  Vectors must have one spare word of padding.
void or_bit_range(std::vector<std::uint64_t>& dst,
                  const std::vector<std::uint64_t>& src, Int dst_start,
                  Int src_start, Int len) {
  for (Int off = 0; off < len; off += 64) {
    const int chunk = static_cast<int>(std::min<Int>(64, len - off));
    const Int sp = src_start + off;
    const std::size_t sw = static_cast<std::size_t>(sp >> 6);
    const int sb = static_cast<int>(sp & 63);
    std::uint64_t bits = src[sw] >> sb;
    if (sb != 0) bits |= src[sw + 1] << (64 - sb);
    if (chunk < 64) bits &= (std::uint64_t{1} << chunk) - 1;
    const Int dp = dst_start + off;
    const std::size_t dw = static_cast<std::size_t>(dp >> 6);
    const int db = static_cast<int>(dp & 63);
    dst[dw] |= bits << db;
    if (db != 0) dst[dw + 1] |= bits >> (64 - db);
  }
}

// dst |= src rotated left by v within an M-bit cyclic window.
void or_rotated(std::vector<std::uint64_t>& dst,
                const std::vector<std::uint64_t>& src, Int v, Int M) {
  v %= M;
  if (v == 0) {
    or_bit_range(dst, src, 0, 0, M);
    return;
  }
  or_bit_range(dst, src, v, 0, M - v);
  or_bit_range(dst, src, 0, M - v, v);
}

bool test_bit(const std::vector<std::uint64_t>& bits, Int pos) {
  return (bits[static_cast<std::size_t>(pos >> 6)] >> (pos & 63)) & 1;
}

bool any_bit(const std::vector<std::uint64_t>& bits) {
  for (std::uint64_t w : bits) {
    if (w) return true;
  }
  return false;
}

// One exhaustive pass: is there x mod M = p^(2s+1) with sum a_i x_i^2 = m
// (mod M) and min_i ord_p(a_i x_i) exactly s?
bool oracle_pass(const Form& a, Int m, Int p, int s, Int M) {
  const int top = s + 1;  // valuations are clamped to s+1
  const std::size_t words = static_cast<std::size_t>((M + 63) / 64) + 1;

  // dp[l] holds the sums achievable so far whose minimal coordinate
  // valuation equals l (l == top meaning "at least s+1", including the
  // empty sum).
  std::vector<std::vector<std::uint64_t>> dp(top + 1),
      ndp(top + 1);
  for (auto& v : dp) v.assign(words, 0);
  for (auto& v : ndp) v.assign(words, 0);
  dp[top][0] = 1;

  std::vector<std::uint8_t> seen;
  for (Int ai : a) {
    const Int amod = ai % M;
    const int oa = std::min(ord_p(ai, p), top);
    // Distinct (value mod M, clamped valuation of a_i * x) contributions.
    seen.assign(static_cast<std::size_t>(M) * (top + 1), 0);
    std::vector<std::pair<Int, int>> contribs;
    for (Int x = 0; x < M; ++x) {
      const Int v = amod * (x * x % M) % M;
      const int o = x == 0 ? top : std::min(top, oa + ord_p(x, p));
      std::uint8_t& flag = seen[static_cast<std::size_t>(v) * (top + 1) + o];
      if (!flag) {
        flag = 1;
        contribs.emplace_back(v, o);
      }
    }
    for (auto& v : ndp) std::fill(v.begin(), v.end(), 0);
    for (int l = 0; l <= top; ++l) {
      if (!any_bit(dp[l])) continue;
      for (auto& [v, o] : contribs) {
        or_rotated(ndp[std::min(l, o)], dp[l], v, M);
      }
    }
    dp.swap(ndp);
  }
  return test_bit(dp[s], m % M);
}

}  // namespace

bool hensel_oracle(const Form& a, Int m, Int p, double budget) {
  validate_odd_prime(p);
  validate_form(a);
  if (m < 0) throw ArithmeticError("target must be nonnegative");
  if (m == 0) return true;

  const int om = ord_p(m, p);
  int oa = 0;
  for (Int c : a) oa = std::max(oa, ord_p(c, p));
  const int smax = (om + oa) / 2;

  for (int s = 0; s <= smax; ++s) {
    const Int M = checked_pow(p, 2 * s + 1);
    const double words = static_cast<double>(M) / 64.0 + 2.0;
    const double est =
        (s + 2.0) * static_cast<double>(a.size()) * 0.6 * words * static_cast<double>(M);
    if (est > budget) {
      throw BudgetExceeded("hensel_oracle budget exceeded at modulus " +
                           std::to_string(p) + "^" + std::to_string(2 * s + 1));
    }
    if (oracle_pass(a, m, p, s, M)) return true;
  }
  return false;
}

bool covers_from(const Form& a, Int p, int e) {
  validate_odd_prime(p);
  const Int delta = min_nonresidue(p);
  const Int pe = checked_pow(p, e);
  for (Int cls : {pe, checked_mul(pe, delta), checked_mul(pe, p),
                  checked_mul(checked_mul(pe, p), delta)}) {
    if (!represents_locally(a, cls, p)) return false;
  }
  return true;
}

bool is_zp_universal(const Form& a, Int p) { return covers_from(a, p, 0); }

bool is_qp_space_universal(const Form& a, Int p) {
  validate_odd_prime(p);
  validate_form(a);
  int oa = 0;
  for (Int c : a) oa = std::max(oa, ord_p(c, p));
  const int jcap = oa / 2 + 2;
  const Int delta = min_nonresidue(p);
  for (Int cls : {Int{1}, delta, p, checked_mul(p, delta)}) {
    bool hit = false;
    for (int j = 0; j <= jcap && !hit; ++j) {
      hit = represents_locally(a, checked_mul(cls, checked_pow(p, 2 * j)), p);
    }
    if (!hit) return false;
  }
  return true;
}

int local_square_exponent(const Form& a, Int p) {
  if (!is_qp_space_universal(a, p)) {
    throw PreconditionError("local_square_exponent: Q_p-space of " +
                            to_string(a) + " is not universal at p=" +
                            std::to_string(p));
  }
  int oa = 0;
  for (Int c : a) oa = std::max(oa, ord_p(c, p));
  for (int e = 0; e <= oa + 2; ++e) {
    if (covers_from(a, p, e)) return e;
  }
  throw std::logic_error("local_square_exponent: no exponent within cap");
}

std::optional<Int> square_class_divisor(const Form& a) {
  validate_form(a);
  if (a.size() < 3) {
    throw PreconditionError("square_class_divisor requires rank >= 3");
  }
  Int xi = 1;
  for (Int p : odd_prime_divisors(a)) {
    if (!is_qp_space_universal(a, p)) return std::nullopt;
    xi = checked_mul(xi, checked_pow(p, local_square_exponent(a, p)));
  }
  return xi;
}

Int witness_shift(const Form& k, Int gamma, Int p) {
  validate_odd_prime(p);
  validate_form(k);
  if (gamma <= 0) throw ArithmeticError("witness_shift requires gamma > 0");

  const int og = ord_p(gamma, p);
  if (covers_from(k, p, og)) {
    throw PreconditionError("witness_shift: gamma*Z_p is already covered");
  }
  const Int delta = min_nonresidue(p);

  if (!covers_from(k, p, og + 1)) {
    // Some class of strictly higher valuation is missed; the smallest missed
    // representative eta satisfies eta + gamma = gamma * unit^2.
    for (int v = og + 1; v <= og + 2; ++v) {
      for (Int u : {Int{1}, delta}) {
        const Int eta = checked_mul(checked_pow(p, v), u);
        if (!represents_locally(k, eta, p)) return eta;
      }
    }
    throw std::logic_error("witness_shift: no missed class despite failed coverage");
  }

  const bool g_in = represents_locally(k, gamma, p);
  const bool gd_in = represents_locally(k, checked_mul(gamma, delta), p);
  if (!g_in && !gd_in) {
    // Both classes at this valuation are missed: 9*gamma differs from gamma
    // by a square unit, and 8*gamma = 9*gamma - gamma works as the shift.
    return checked_mul(gamma, 8);
  }
  if (g_in && !gd_in) return checked_mul(gamma, delta);
  if (gd_in && !g_in) return checked_mul(gamma, checked_mul(delta, delta));
  throw std::logic_error("witness_shift: both unit classes covered");
}

}  // namespace triform
