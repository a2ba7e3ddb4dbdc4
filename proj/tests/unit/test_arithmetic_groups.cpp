#include <doctest.h>

#include <random>
#include <set>

#include "k3twist/arithmetic_groups.hpp"
#include "k3twist/errors.hpp"
#include "oracles.hpp"

using namespace k3twist;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Searches all exact divisors e and all scalings of the matrix for the
// defining shape (a e, b; c n, d e) with determinant e.
std::optional<long> brute_atkin_lehner(long n, const MoebiusMap& f) {
  const long a = f.a().get_si(), b = f.b().get_si(), c = f.c().get_si(), d = f.d().get_si();
  const long det = a * d - b * c;
  for (long e = 1; e <= n; ++e) {
    if (n % e != 0 || std::gcd(e, n / e) != 1) continue;
    if (det == e && a % e == 0 && c % n == 0 && d % e == 0) return e;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("exact divisors") {
  CHECK(exact_divisors(6) == ints({1, 2, 3, 6}));
  CHECK(exact_divisors(4) == ints({1, 4}));
  CHECK(exact_divisors(1) == ints({1}));
  CHECK(exact_divisors(360).size() == 8);
}

TEST_CASE("Atkin-Lehner divisor") {
  CHECK(atkin_lehner_divisor(2, MoebiusMap(0, -1, 2, 0)) == Integer(2));
  CHECK(atkin_lehner_divisor(6, MoebiusMap(2, -1, 6, -2)) == Integer(2));
  CHECK_FALSE(atkin_lehner_divisor(2, MoebiusMap(1, 1, 1, 2)).has_value());
  CHECK(atkin_lehner_divisor(6, MoebiusMap(3, -1, 12, -3)) == Integer(3));
  CHECK(atkin_lehner_divisor(5, MoebiusMap(1, 3, 5, 16)) == Integer(1));
}

TEST_CASE("Fricke group") {
  CHECK_FALSE(in_fricke(6, MoebiusMap(3, -1, 12, -3)));
  CHECK_FALSE(in_fricke(6, MoebiusMap(2, -1, 6, -2)));
  CHECK(in_gamma0_plus(6, MoebiusMap(3, -1, 12, -3)));
  CHECK(in_fricke(2, MoebiusMap(0, -1, 2, 0)));
  for (long n : {1L, 4L, 6L, 30L}) CHECK(in_fricke(n, MoebiusMap::identity()));
  CHECK(fricke_involution(6) == MoebiusMap(0, -1, 6, 0));
}

TEST_CASE("local test examples") {
  CHECK(atkin_lehner_local_test(6, MoebiusMap(2, -1, 6, -2)) == Integer(2));
  CHECK(atkin_lehner_local_test(4, MoebiusMap(0, -1, 4, 0)) == Integer(4));
  CHECK_FALSE(atkin_lehner_local_test(2, MoebiusMap(1, 0, 1, 1)).has_value());
}

TEST_CASE("integrality") {
  CHECK(integrality_test(MukaiForm(2L), MoebiusMap(0, -1, 2, 0)));
  CHECK_FALSE(integrality_test(MukaiForm(2L), MoebiusMap(1, 0, 1, 1)));
  CHECK(integrality_test(MukaiForm(6L), MoebiusMap(2, -1, 6, -2)));
}

TEST_CASE("Hodge lifting") {
  CHECK_FALSE(hodge_lift_exists(MukaiForm(6L), MoebiusMap(2, -1, 6, -2)));
  CHECK(hodge_lift_exists(MukaiForm(2L), MoebiusMap(0, -1, 2, 0)));
  CHECK(hodge_lift_exists(MukaiForm(6L), MoebiusMap(1, 1, 6, 7)));
  CHECK_THROWS_AS(hodge_lift_exists(MukaiForm(2L), MoebiusMap(1, 1, 1, 2)), NotAtkinLehner);
}

TEST_CASE("Atkin-Lehner classes") {
  const MoebiusMap w2(2, -1, 6, -2);
  const MoebiusMap s6 = fricke_involution(6);
  CHECK(al_class(6, w2).bits == ints({2}));
  CHECK(al_class(6, s6).bits == ints({2, 3}));
  CHECK(al_class(6, w2 * s6).bits == ints({3}));
  CHECK_THROWS_AS(al_class(6, MoebiusMap(1, 1, 1, 2)), NotAtkinLehner);
}

TEST_CASE("membership agrees with a brute-force search on random samples") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> x(-15, 15);
  for (long n : {2L, 3L, 4L, 5L, 6L, 11L, 12L}) {
    const MukaiForm form(n);
    int members = 0;
    for (int i = 0; i < 3000; ++i) {
      std::optional<MoebiusMap> f;
      if (i % 2 == 0) {
        const auto divisors = exact_divisors(n);
        const long e = divisors[rng() % divisors.size()].get_si();
        f = oracle::random_atkin_lehner(rng, n, e);
      } else {
        const long a = x(rng), b = x(rng), c = x(rng), d = x(rng);
        if (a * d - b * c > 0) f = MoebiusMap(a, b, c, d);
      }
      if (!f) continue;
      const auto direct = atkin_lehner_divisor(n, *f);
      const auto brute = brute_atkin_lehner(n, *f);
      CHECK(direct.has_value() == brute.has_value());
      if (direct && brute) CHECK(*direct == *brute);
      CHECK(atkin_lehner_local_test(n, *f) == direct);
      CHECK(integrality_test(form, *f) == direct.has_value());
      if (direct) {
        ++members;
        CHECK(hodge_lift_exists(form, *f) == in_fricke(n, *f));
        CHECK(hodge_lift_exists(form, *f) == (*direct == 1 || *direct == n));
      }
    }
    CHECK(members > 300);
  }
}

TEST_CASE("al_class is a homomorphism at level 6") {
  std::mt19937_64 rng(23);
  std::vector<MoebiusMap> samples;
  for (long e : {1L, 2L, 3L, 6L}) {
    for (int found = 0; found < 10;) {
      if (auto f = oracle::random_atkin_lehner(rng, 6, e)) {
        samples.push_back(*f);
        ++found;
      }
    }
  }
  std::set<std::vector<Integer>> classes;
  for (const auto& f : samples) {
    classes.insert(al_class(6, f).bits);
    for (const auto& g : samples) {
      const auto fb = al_class(6, f).bits;
      std::set<Integer> x(fb.begin(), fb.end());
      for (const auto& p : al_class(6, g).bits) {
        if (!x.erase(p)) x.insert(p);
      }
      const auto fg = al_class(6, f * g).bits;
      CHECK(std::vector<Integer>(x.begin(), x.end()) == fg);
    }
  }
  CHECK(classes.size() == 4);
}
