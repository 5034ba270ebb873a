#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triform/triforms.hpp"

using namespace triform;

TEST_CASE("triangular numbers and shifts") {
  CHECK(triangular(0) == 0);
  CHECK(triangular(1) == 1);
  CHECK(triangular(7) == 28);
  CHECK(triangular_shift({1, 1, 2}, 5) == 44);
}

TEST_CASE("represented sets match direct enumeration") {
  // T(1): exactly the triangular numbers.
  RepresentedSet r({1}, 100);
  std::vector<bool> tri(101, false);
  for (Int k = 0; triangular(k) <= 100; ++k) tri[triangular(k)] = true;
  for (Int n = 0; n <= 100; ++n) CHECK(r.represents(n) == tri[n]);
}

TEST_CASE("represented sets, two variables") {
  // T(1,3): n = i(i+1)/2 + 3 j(j+1)/2.
  RepresentedSet r({1, 3}, 200);
  for (Int n = 0; n <= 200; ++n) {
    bool direct = false;
    for (Int i = 0; triangular(i) <= n && !direct; ++i) {
      const Int rest = n - triangular(i);
      for (Int j = 0; 3 * triangular(j) <= rest; ++j) {
        if (3 * triangular(j) == rest) direct = true;
      }
    }
    CAPTURE(n);
    CHECK(r.represents(n) == direct);
  }
}

TEST_CASE("classical universal ternaries") {
  for (const Form& a : {Form{1, 1, 1}, Form{1, 1, 2}, Form{1, 2, 3}}) {
    RepresentedSet r(a, 500);
    for (Int n = 0; n <= 500; ++n) CHECK(r.represents(n));
  }
}

TEST_CASE("first miss of a non-universal regular form") {
  CHECK(universal_up_to({1, 1, 9}, 10000).found);
  CHECK(universal_up_to({1, 1, 9}, 10000).value == 5);
  CHECK(!universal_up_to({1, 1, 1}, 10000).found);
}

TEST_CASE("psi values") {
  const ScanResult a = psi({1, 6, 18}, 2000);
  CHECK(a.found);
  CHECK(a.value == 43);
  const ScanResult b = psi({1, 2, 7}, 2000);
  CHECK(b.found);
  CHECK(b.value == 11);
  const ScanResult c = psi({2, 3, 27}, 2000);
  CHECK(c.found);
  CHECK(c.value == 54);
  const ScanResult d = psi({1, 7, 7}, 2000);
  CHECK(d.found);
  CHECK(d.value == 41);
  // Regular forms have no counterexample.
  CHECK(!psi({1, 1, 2}, 2000).found);
  CHECK(!psi({1, 1, 9}, 2000).found);
}

TEST_CASE("psi_cached agrees with psi") {
  for (const Form& a : {Form{1, 6, 18}, Form{1, 2, 7}, Form{1, 1, 9}}) {
    const ScanResult x = psi(a, 500);
    const ScanResult y = psi_cached(a, 500);
    CHECK(x.found == y.found);
    if (x.found) CHECK(x.value == y.value);
  }
}

TEST_CASE("regular_up_to on known regular and irregular forms") {
  CHECK(!regular_up_to({1, 1, 2}, 3000).found);
  CHECK(!regular_up_to({1, 1, 9}, 3000).found);
  CHECK(!regular_up_to({1, 3, 18}, 3000).found);
  const ScanResult bad = regular_up_to({1, 6, 18}, 3000);
  CHECK(bad.found);
  CHECK(bad.value == 43);
}

TEST_CASE("local representability handles imprimitive forms") {
  // Content 3: n is representable only when t(n, a)/3 works for <1,1,2>.
  CHECK(locally_represents({3, 3, 6}, 3));
  CHECK(represents({3, 3, 6}, 3));
  CHECK(!locally_represents({3, 3, 6}, 1));
}
