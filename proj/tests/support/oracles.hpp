// Independent reference computations used by the tests.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "k3twist/free_products.hpp"
#include "k3twist/moebius.hpp"
#include "k3twist/mukai_lattice.hpp"

namespace oracle {

using k3twist::Integer;
using k3twist::MoebiusMap;
using k3twist::MukaiVector;

using Vec = std::array<long, 3>;

// Gram matrix times vectors, written out entry by entry.
inline long pairing(long delta, const Vec& u, const Vec& v) {
  const long q[3][3] = {{0, 0, -1}, {0, 2 * delta, 0}, {-1, 0, 0}};
  long sum = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sum += u[i] * q[i][j] * v[j];
  return sum;
}

inline Vec reflect(long delta, const Vec& rho, const Vec& a) {
  const long k = pairing(delta, a, rho);
  return {a[0] + k * rho[0], a[1] + k * rho[1], a[2] + k * rho[2]};
}

inline Vec vec(const MukaiVector& v) { return {v.r.get_si(), v.l.get_si(), v.s.get_si()}; }

// Integer 2x2 matrices with plain longs, compared projectively.
struct M2 {
  long a, b, c, d;
  M2 operator*(const M2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

inline bool projectively_equal(const M2& x, const M2& y) {
  // x = lambda y for some lambda != 0: all 2x2 minors of the pair vanish.
  const long xs[4] = {x.a, x.b, x.c, x.d};
  const long ys[4] = {y.a, y.b, y.c, y.d};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (xs[i] * ys[j] != xs[j] * ys[i]) return false;
  return true;
}

inline bool is_identity(const M2& x) { return x.b == 0 && x.c == 0 && x.a == x.d && x.a != 0; }

inline M2 pow(M2 x, int k) {
  M2 out{1, 0, 0, 1};
  while (k-- > 0) out = out * x;
  return out;
}

// Laurent polynomials in t with integer coefficients.
using Laurent = std::map<int, long>;

inline Laurent add(const Laurent& x, const Laurent& y) {
  Laurent out = x;
  for (auto [k, v] : y) {
    out[k] += v;
    if (out[k] == 0) out.erase(k);
  }
  return out;
}

inline Laurent mul(const Laurent& x, const Laurent& y) {
  Laurent out;
  for (auto [i, a] : x)
    for (auto [j, b] : y) {
      out[i + j] += a * b;
      if (out[i + j] == 0) out.erase(i + j);
    }
  return out;
}

using Burau = std::array<std::array<Laurent, 2>, 2>;

inline Burau burau_mul(const Burau& x, const Burau& y) {
  Burau out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[i][j] = add(mul(x[i][0], y[0][j]), mul(x[i][1], y[1][j]));
  return out;
}

// Reduced Burau representation of B_3, faithful on three strands.
inline Burau burau_letter(int letter) {
  const Laurent one{{0, 1}}, zero{};
  switch (letter) {
    case 1: return {{{Laurent{{1, -1}}, one}, {zero, one}}};
    case -1: return {{{Laurent{{-1, -1}}, Laurent{{-1, 1}}}, {zero, one}}};
    case 2: return {{{one, zero}, {Laurent{{1, 1}}, Laurent{{1, -1}}}}};
    case -2: return {{{one, zero}, {one, Laurent{{-1, -1}}}}};
  }
  return {};
}

inline bool burau_trivial(const std::vector<int>& letters) {
  const Laurent one{{0, 1}}, zero{};
  Burau m{{{one, zero}, {zero, one}}};
  for (int x : letters) m = burau_mul(m, burau_letter(x));
  return m[0][0] == one && m[1][1] == one && m[0][1].empty() && m[1][0].empty();
}

// Letter-by-letter reduction in a free product of cyclic groups.
inline std::vector<std::pair<int, long>> naive_reduce(const std::vector<long>& orders,
                                                      const std::vector<std::pair<int, long>>& input) {
  std::vector<std::pair<int, long>> stack;
  for (auto [f, e] : input) {
    const long k = orders[static_cast<std::size_t>(f)];
    const int step = e > 0 ? 1 : -1;
    for (long i = 0; i < (e > 0 ? e : -e); ++i) {
      if (!stack.empty() && stack.back().first == f) {
        long x = stack.back().second + step;
        if (k != 0) x = ((x % k) + k) % k;
        if (x == 0) {
          stack.pop_back();
        } else {
          stack.back().second = x;
        }
      } else {
        long x = step;
        if (k != 0) x = ((x % k) + k) % k;
        stack.emplace_back(f, x);
      }
    }
  }
  return stack;
}

inline std::vector<std::pair<int, long>> pairs(const k3twist::Word& w) {
  std::vector<std::pair<int, long>> out;
  for (const auto& l : w.letters) out.emplace_back(l.factor, l.exponent);
  return out;
}

// Exact-divisor Atkin-Lehner matrices (a e, b; c n, d e) with det e, built by
// solving a d e - b c (n / e) = 1.
inline std::optional<MoebiusMap> random_atkin_lehner(std::mt19937_64& rng, long n, long e) {
  std::uniform_int_distribution<long> small(-12, 12);
  const long m = n / e;
  const long a = small(rng), c = small(rng);
  const long p = a * e, q = c * m;  // want d p - b q = 1
  if (std::gcd(p, q) != 1) return std::nullopt;
  // extended Euclid on (p, q)
  long old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long quo = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quo * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quo * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - quo * t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  // old_s p + old_t q = 1, so d = old_s, b = -old_t, shifted along the kernel.
  const long shift = small(rng) / 3;
  const long d = old_s + shift * q;
  const long b = -(old_t - shift * p);
  return MoebiusMap(a * e, b, c * n, d * e);
}

}  // namespace oracle
