#include <doctest.h>

#include <random>

#include "k3twist/errors.hpp"
#include "k3twist/free_products.hpp"
#include "oracles.hpp"

using namespace k3twist;

namespace {

Word random_word(const FreeProduct& fp, std::mt19937_64& rng, int syllables) {
  Word w;
  for (int i = 0; i < syllables; ++i) {
    const int f = static_cast<int>(rng() % fp.size());
    const long k = fp.order(f);
    const long e = static_cast<long>(rng() % 7) - 3;
    w = fp.multiply(w, fp.letter(f, k == 0 ? e : e));
  }
  return w;
}

const MoebiusMap s0{0, -1, 2, 0};
const MoebiusMap t1{1, 1, 0, 1};

}  // namespace

TEST_CASE("orders are validated") {
  CHECK_THROWS(FreeProduct({1}));
  CHECK_NOTHROW(FreeProduct({0, 2, 5}));
}

TEST_CASE("multiply examples") {
  const FreeProduct z2z4({2, 4});
  const Word s = z2z4.letter(0);
  CHECK(z2z4.multiply(s, s).empty());
  const FreeProduct z2z({2, 0});
  const Word a = z2z.letter(0), b = z2z.letter(1);
  const Word u = z2z.multiply(a, b);
  const Word v = z2z.multiply(z2z.letter(1, -1), a);
  CHECK(z2z.multiply(u, v).empty());
  CHECK(z2z.letter(1, 3).letters.size() == 1);
  CHECK(z2z4.letter(1, 5) == z2z4.letter(1, 1));
  CHECK(z2z4.letter(1, -1) == z2z4.letter(1, 3));
}

TEST_CASE("normal forms agree with naive reduction") {
  std::mt19937_64 rng(29);
  for (const std::vector<long>& orders : {std::vector<long>{2, 4}, {2, 0}, {3, 3, 0}, {2, 2, 2}, {0, 0}, {6, 2}}) {
    const FreeProduct fp(orders);
    for (int i = 0; i < 1000 / 6 + 1; ++i) {
      const Word u = random_word(fp, rng, 6), v = random_word(fp, rng, 6);
      auto joined = oracle::pairs(u);
      for (const auto& p : oracle::pairs(v)) joined.push_back(p);
      const Word uv = fp.multiply(u, v);
      CHECK(oracle::pairs(uv) == oracle::naive_reduce(orders, joined));
      CHECK(fp.multiply(u, fp.inverse(u)).empty());
      CHECK_NOTHROW(fp.check(uv));
      CHECK(fp.multiply(fp.multiply(u, v), u) == fp.multiply(u, fp.multiply(v, u)));
    }
  }
}

TEST_CASE("format and parse") {
  const FreeProduct fp({2, 0});
  const std::vector<std::string> names{"s", "t"};
  const Word w = fp.parse("t^2 s t^-2", names);
  CHECK(fp.format(w, names) == "t^2 s t^-2");
  CHECK(fp.parse("1", names).empty());
  CHECK_THROWS(fp.parse("x", names));
}

TEST_CASE("hom image") {
  const FreeProduct fp({2, 4});
  const CyclicHom hom{4, {0, 1}};
  CHECK_NOTHROW(hom.check(fp));
  const std::vector<std::string> names{"s", "w"};
  CHECK(hom_image(fp, hom, fp.parse("w^4", names)) == 0);
  CHECK(hom_image(fp, hom, Word{}) == 0);
  CHECK(hom_image(fp, hom, fp.parse("s w s w", names)) == 2);
  CHECK_THROWS(CyclicHom({4, {1, 1}}).check(fp));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word(fp, rng, 5), v = random_word(fp, rng, 5);
    CHECK(hom_image(fp, hom, fp.multiply(u, v)) == hom.reduce(hom_image(fp, hom, u) + hom_image(fp, hom, v)));
  }
}

TEST_CASE("kernel generators") {
  SUBCASE("Z/2 * Z/4 onto Z/4") {
    const FreeProduct fp({2, 4});
    const std::vector<std::string> names{"s", "w"};
    const CyclicHom hom{4, {0, 1}};
    std::vector<Word> section;
    for (const char* t : {"1", "w", "w^2", "w^3"}) section.push_back(fp.parse(t, names));
    const auto gens = kernel_generators(fp, hom, section);
    std::vector<Word> want;
    for (const char* t : {"s", "w s w^3", "w^2 s w^2", "w^3 s w"}) want.push_back(fp.parse(t, names));
    std::sort(want.begin(), want.end());
    CHECK(gens == want);
    for (const auto& g : gens) CHECK(hom_image(fp, hom, g) == 0);
  }
  SUBCASE("Z/2 * Z/6 onto Z/3") {
    const FreeProduct fp({2, 6});
    const std::vector<std::string> names{"s", "u"};
    const CyclicHom hom{3, {0, 1}};
    std::vector<Word> section;
    for (const char* t : {"1", "u", "u^2"}) section.push_back(fp.parse(t, names));
    const auto gens = kernel_generators(fp, hom, section);
    std::vector<Word> want;
    for (const char* t : {"s", "u s u^5", "u^2 s u^4", "u^3"}) want.push_back(fp.parse(t, names));
    std::sort(want.begin(), want.end());
    CHECK(gens == want);
  }
  SUBCASE("Z/2 * Z onto Z, truncated") {
    const FreeProduct fp({2, 0});
    const std::vector<std::string> names{"s", "t"};
    const CyclicHom hom{0, {0, 1}};
    for (int K = 0; K <= 4; ++K) {
      std::vector<Word> section;
      for (int k = -K; k <= K; ++k) section.push_back(fp.letter(1, k));
      const auto gens = kernel_generators(fp, hom, section);
      CHECK(gens.size() == static_cast<std::size_t>(2 * K + 1));
      for (const auto& g : gens) CHECK(hom_image(fp, hom, g) == 0);
    }
  }
  SUBCASE("bad sections") {
    const FreeProduct fp({2, 4});
    const std::vector<std::string> names{"s", "w"};
    const CyclicHom hom{4, {0, 1}};
    std::vector<Word> section;
    for (const char* t : {"1", "w", "w^2", "s"}) section.push_back(fp.parse(t, names));
    CHECK_THROWS_AS(kernel_generators(fp, hom, section), BadSection);
    section.pop_back();
    CHECK_THROWS_AS(kernel_generators(fp, hom, section), BadSection);
  }
}

TEST_CASE("evaluate") {
  const FreeProduct fp({2, 4});
  const std::vector<std::string> names{"s", "w"};
  const std::vector<MoebiusMap> assignment{s0, s0 * t1};
  CHECK(evaluate(fp, Word{}, assignment).is_identity());
  const auto g = evaluate(fp, fp.parse("w s w^-1", names), assignment);
  CHECK(g == MoebiusMap(2, 1, -6, -2));
  CHECK(g == reflection_moebius(MukaiForm(2L), {3, -1, 1}));
  const FreeProduct fq({2, 6});
  const MoebiusMap s3{0, -1, 3, 0};
  CHECK(evaluate(fq, fq.parse("u^3", {"s", "u"}), {s3, t1 * s3}) == reflection_moebius(MukaiForm(3L), {2, 1, 2}));
}

TEST_CASE("bounded free certification") {
  const MukaiForm f2(2L);
  std::vector<MoebiusMap> gens;
  for (const MukaiVector& v : {MukaiVector{1, 0, 1}, {1, 1, 3}, {1, 2, 9}, {1, 3, 19}}) gens.push_back(reflection_moebius(f2, v));
  CHECK(no_relation_up_to_length(gens, {2, 2, 2, 2}, 7));
  CHECK_FALSE(no_relation_up_to_length({s0, s0}, {2, 2}, 2));
  CHECK(no_relation_up_to_length({s0}, {2}, 12));
  CHECK_THROWS_AS(no_relation_up_to_length({t1}, {2}, 3), OrderMismatch);
  // Z/2 * Z/4 realized in Gamma_0^+(2): no relation, but adding t^4-type words gives one.
  CHECK(no_relation_up_to_length({s0, s0 * t1}, {2, 4}, 8));
  CHECK_FALSE(no_relation_up_to_length({s0, s0 * t1, t1}, {2, 4, 0}, 6));

  // word count: k (k-1)^(L-1) words of exact length L for k involutions
  long count = 0;
  enumerate_reduced_products(gens, {2, 2, 2, 2}, 5, [&](const std::vector<Letter>&, const MoebiusMap&) {
    ++count;
    return true;
  });
  CHECK(count == 4 + 12 + 36 + 108 + 324);
}
