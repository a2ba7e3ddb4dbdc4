#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3twist/moebius.hpp"
#include "k3twist/mukai_lattice.hpp"
#include "k3twist/numeric.hpp"

namespace k3twist {

/// The image of an Atkin-Lehner element in Gamma0+(n)/Gamma0(n) ~ (Z/2)^c,
/// recorded as the exact divisor e and the primes dividing it.
struct ALClass {
  Integer n;
  Integer e;
  std::vector<Integer> bits;  // primes dividing e, ascending

  bool operator==(const ALClass& o) const { return n == o.n && e == o.e; }
  std::string to_string() const;
};

/// Exact divisors e | n with gcd(e, n/e) = 1, ascending. There are 2^c of them.
std::vector<Integer> exact_divisors(const Integer& n);
bool is_exact_divisor(const Integer& e, const Integer& n);

/// e if f is represented by [[a e, b], [c n, d e]] with determinant e, e an
/// exact divisor of n; nullopt otherwise. e = 1 is Gamma0(n).
std::optional<Integer> atkin_lehner_divisor(const Integer& n, const MoebiusMap& f);

inline bool in_gamma0_plus(const Integer& n, const MoebiusMap& f) {
  return atkin_lehner_divisor(n, f).has_value();
}

/// Membership in the Fricke group <Gamma0(n), s_n>: e in {1, n}.
bool in_fricke(const Integer& n, const MoebiusMap& f);

/// Prime-by-prime decision between f in Lambda_p^* and f in [[0,-1],[n,0]] Lambda_p^*
/// using p-adic valuations. Returns the assembled e, or nullopt.
std::optional<Integer> atkin_lehner_local_test(const Integer& n, const MoebiusMap& f);

/// True iff Phi/det(f) has integer entries (f in SO+(q, Z) after transfer).
bool integrality_test(const MukaiForm& form, const MoebiusMap& f);

/// Whether the Atkin-Lehner element f lifts to a Hodge isometry of the full
/// cohomology: (2 delta) | (beta - 1) or (2 delta) | (beta + 1) with
/// beta = (delta/e) b c + e a d in the normalized form [[e a, b], [delta c, e d]].
/// Throws NotAtkinLehner when f is not in Gamma0+(delta).
bool hodge_lift_exists(const MukaiForm& form, const MoebiusMap& f);

/// Throws NotAtkinLehner when f is not in Gamma0+(n).
ALClass al_class(const Integer& n, const MoebiusMap& f);

/// The Fricke involution s_n = [[0, -1], [n, 0]].
MoebiusMap fricke_involution(const Integer& n);

}  // namespace k3twist
