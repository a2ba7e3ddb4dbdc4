#include "k3twist/arithmetic_groups.hpp"

#include <algorithm>

#include "k3twist/errors.hpp"

namespace k3twist {

std::string ALClass::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < bits.size(); ++i) out += (i ? "," : "") + bits[i].get_str();
  return out + "}";
}

bool is_exact_divisor(const Integer& e, const Integer& n) {
  return e > 0 && divides(e, n) && gcd(e, Integer(n / e)) == 1;
}

std::vector<Integer> exact_divisors(const Integer& n) {
  if (n < 1) throw std::invalid_argument("level must be positive");
  std::vector<Integer> divisors{1};
  for (const Integer& p : prime_factors(n)) {
    Integer pk = 1;
    for (unsigned long k = valuation(n, p); k > 0; --k) pk *= p;
    std::size_t count = divisors.size();
    for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

std::optional<Integer> atkin_lehner_divisor(const Integer& n, const MoebiusMap& f) {
  Integer e = f.det();
  if (!is_exact_divisor(e, n)) return std::nullopt;
  if (!divides(e, f.a()) || !divides(n, f.c()) || !divides(e, f.d())) return std::nullopt;
  return e;
}

bool in_fricke(const Integer& n, const MoebiusMap& f) {
  auto e = atkin_lehner_divisor(n, f);
  return e && (*e == 1 || *e == n);
}

std::optional<Integer> atkin_lehner_local_test(const Integer& n, const MoebiusMap& f) {
  const Integer det = f.det();
  const std::vector<Integer> level_primes = prime_factors(n);
  // Away from n the matrix must be a p-adic unit: no other prime may divide det.
  Integer rest = det;
  for (const Integer& p : level_primes) {
    while (divides(p, rest)) rest /= p;
  }
  if (rest != 1) return std::nullopt;

  auto at_least = [](const Integer& x, const Integer& p, unsigned long k) {
    return x == 0 || valuation(x, p) >= k;
  };

  Integer e = 1;
  for (const Integer& p : level_primes) {
    const unsigned long k = valuation(n, p);
    const unsigned long det_val = valuation(det, p);
    // Lambda_p^*: lower-left in p^k Z_p and a unit determinant.
    const bool in_order = det_val == 0 && at_least(f.c(), p, k);
    // [[0,-1],[n,0]] Lambda_p^* = [[n Z_p, Z_p], [n Z_p, n Z_p]] with det of valuation k.
    const bool in_fricke_coset = det_val == k && at_least(f.a(), p, k) &&
                                 at_least(f.c(), p, k) && at_least(f.d(), p, k);
    if (in_order) continue;
    if (!in_fricke_coset) return std::nullopt;
    for (unsigned long i = 0; i < k; ++i) e *= p;
  }
  return e;
}

bool integrality_test(const MukaiForm& form, const MoebiusMap& f) {
  return to_isometry3(form, f).is_integral();
}

bool hodge_lift_exists(const MukaiForm& form, const MoebiusMap& f) {
  const Integer& delta = form.delta();
  auto e_opt = atkin_lehner_divisor(delta, f);
  if (!e_opt) throw NotAtkinLehner(f.to_string() + " is not in Gamma0+(" + delta.get_str() + ")");
  const Integer& e = *e_opt;
  const Integer a = f.a() / e;
  const Integer& b = f.b();
  const Integer c = f.c() / delta;
  const Integer d = f.d() / e;
  const Integer beta = (delta / e) * b * c + e * a * d;
  const Integer two_delta = 2 * delta;
  return divides(two_delta, Integer(beta - 1)) || divides(two_delta, Integer(beta + 1));
}

ALClass al_class(const Integer& n, const MoebiusMap& f) {
  auto e = atkin_lehner_divisor(n, f);
  if (!e) throw NotAtkinLehner(f.to_string() + " is not in Gamma0+(" + n.get_str() + ")");
  return {n, *e, prime_factors(*e)};
}

MoebiusMap fricke_involution(const Integer& n) { return {Integer(0), Integer(-1), n, Integer(0)}; }

}  // namespace k3twist
