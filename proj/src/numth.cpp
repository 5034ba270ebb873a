#include "triform/numth.hpp"

#include <algorithm>
#include <numeric>

namespace triform {

Int checked_mul(Int a, Int b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > static_cast<__int128>(9'000'000'000'000'000'000LL) ||
      r < -static_cast<__int128>(9'000'000'000'000'000'000LL)) {
    throw ArithmeticError("integer overflow in multiplication");
  }
  return static_cast<Int>(r);
}

Int checked_pow(Int base, int exp) {
  if (exp < 0) throw ArithmeticError("negative exponent");
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

int ord_p(Int n, Int p) {
  if (p < 2) throw ArithmeticError("ord_p requires p >= 2");
  if (n == 0) return kInfiniteValuation;
  if (n < 0) n = -n;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

Int unit_part(Int n, Int p) {
  if (n == 0) throw ArithmeticError("unit_part of zero");
  bool neg = n < 0;
  if (neg) n = -n;
  while (n % p == 0) n /= p;
  return neg ? -n : n;
}

namespace {

Int mod_pow(Int base, Int exp, Int mod) {
  __int128 r = 1;
  __int128 b = base % mod;
  if (b < 0) b += mod;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<Int>(r);
}

}  // namespace

int legendre(Int a, Int p) {
  if (p < 3 || p % 2 == 0) throw ArithmeticError("legendre requires an odd prime");
  Int r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  Int s = mod_pow(r, (p - 1) / 2, p);
  return s == 1 ? 1 : -1;
}

Int min_nonresidue(Int p) {
  for (Int u = 2; u < p; ++u) {
    if (legendre(u, p) == -1) return u;
  }
  throw ArithmeticError("no nonresidue found; p is not an odd prime");
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Int> prime_divisors(Int n) {
  if (n == 0) throw ArithmeticError("prime_divisors of zero");
  if (n < 0) n = -n;
  std::vector<Int> out;
  for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<Int> odd_prime_divisors(const Form& a) {
  std::vector<Int> out;
  for (Int c : a) {
    for (Int q : prime_divisors(c)) {
      if (q != 2 && std::find(out.begin(), out.end(), q) == out.end()) {
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int content(const Form& a) {
  if (a.empty()) throw ArithmeticError("content of empty form");
  Int g = 0;
  for (Int c : a) {
    if (c <= 0) throw ArithmeticError("form coefficients must be positive");
    g = std::gcd(g, c);
  }
  return g;
}

Form sorted(Form a) {
  std::sort(a.begin(), a.end());
  return a;
}

std::string to_string(const Form& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  s += ")";
  return s;
}

}  // namespace triform
