#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3twist/moebius.hpp"
#include "k3twist/mukai_lattice.hpp"

namespace k3twist {

struct EllipticPoint {
  long order = 2;
  bool root_point = false;

  bool operator==(const EllipticPoint&) const = default;
};

/// Orbifold data of X_0^+(delta): genus, cusps, elliptic points.
struct SignatureData {
  long level = 1;
  long genus = 0;
  long num_cusps = 1;
  std::vector<EllipticPoint> elliptic;

  /// Throws std::invalid_argument on negative genus/cusps or orders < 2.
  void check() const;
};

/// Vertical strip left <= x <= left + width.
struct Strip {
  Rational left;
  Rational width;

  Rational right() const { return left + width; }
};

struct FordDomain {
  std::vector<IsometricCircle> circles;  // sorted, none inside another
  int word_length = 1;
  std::optional<Strip> strip;
};

enum class Membership { Interior, Boundary, Exterior };

std::string to_string(Membership m);

/// BFS over the lattice: can a product of at most depth generators (or their
/// inverses) send rho1 to +-rho2? Throws NotARoot.
bool root_orbit_connected(const MukaiForm& form, const MukaiVector& rho1, const MukaiVector& rho2,
                          const std::vector<Isometry3>& generators, int depth);

/// Circles of all nonidentity reduced words of length <= L, with circles
/// contained in a single other closed disk removed.
FordDomain ford_domain(const std::vector<MoebiusMap>& generators, const std::vector<long>& orders, int L,
                       std::optional<Strip> strip = std::nullopt);

/// True if the closed disk of a lies inside the closed disk of b.
bool disk_contained(const IsometricCircle& a, const IsometricCircle& b);

Membership domain_membership(const FordDomain& dom, const HPoint& p);

/// Roots whose points are not exterior to dom, sorted by x then r.
std::vector<MukaiVector> extract_generator_roots(const MukaiForm& form, const FordDomain& dom,
                                                 const std::vector<MukaiVector>& roots);

bool finitely_generated(const SignatureData& sig);

/// Index of the reflection group in Gamma_0^+(delta) when it is finitely
/// generated: the product of e over non-root elliptic points and e/2 over root
/// points of order > 2. Empty when not finitely generated.
std::optional<long> signature_index(const SignatureData& sig);

/// Every element of a is a product of <= L elements of b and their inverses,
/// and conversely.
bool same_group_within_bound(const std::vector<MoebiusMap>& gens_a, const std::vector<MoebiusMap>& gens_b,
                             int L);

/// One direction of same_group_within_bound.
bool generated_within_bound(const std::vector<MoebiusMap>& targets, const std::vector<MoebiusMap>& gens,
                            int L);

}  // namespace k3twist
