#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "k3twist/mukai_lattice.hpp"
#include "k3twist/numeric.hpp"

namespace k3twist {

/// An element of PGL2+(Q), stored as its canonical integer matrix:
/// primitive entries, positive determinant, and the first nonzero entry of
/// (a, b, c, d) positive. Equality in PGL2+(Q) is therefore entrywise.
class MoebiusMap {
 public:
  /// Throws std::invalid_argument if ad - bc <= 0.
  MoebiusMap(Integer a, Integer b, Integer c, Integer d);
  MoebiusMap(long a, long b, long c, long d)
      : MoebiusMap(Integer(a), Integer(b), Integer(c), Integer(d)) {}
  static MoebiusMap from_rational(const Rational& a, const Rational& b, const Rational& c,
                                  const Rational& d);
  static MoebiusMap identity() { return {1, 0, 0, 1}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer det() const { return a_ * d_ - b_ * c_; }
  Integer trace() const { return a_ + d_; }
  bool is_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

  MoebiusMap operator*(const MoebiusMap& g) const;
  MoebiusMap inverse() const;
  MoebiusMap pow(long k) const;

  bool operator==(const MoebiusMap& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  std::strong_ordering operator<=>(const MoebiusMap& o) const;

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  Integer a_, b_, c_, d_;
};

/// Parses "a,b,c,d" (row-major).
MoebiusMap parse_moebius(std::string_view text);

inline MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) { return f * g; }

/// z = x + i y stored as (x, y^2) so that everything stays rational.
struct HPoint {
  Rational x;
  Rational y_sq;

  /// Throws std::invalid_argument unless y_sq > 0.
  HPoint(Rational x_, Rational y_sq_);

  bool operator==(const HPoint& o) const { return x == o.x && y_sq == o.y_sq; }
  std::strong_ordering operator<=>(const HPoint& o) const;
  std::string to_string() const;
};

/// Isometric circle of a determinant-e matrix: |cz + d|^2 = e.
struct IsometricCircle {
  Rational center;
  Rational radius_sq;

  IsometricCircle(Rational center_, Rational radius_sq_);

  bool operator==(const IsometricCircle& o) const {
    return center == o.center && radius_sq == o.radius_sq;
  }
  std::strong_ordering operator<=>(const IsometricCircle& o) const;
  std::string to_string() const;
};

enum class CircleSide { Inside, On, Outside };

/// Exact position of p relative to the circle (compares |z - center|^2 with radius_sq).
CircleSide locate(const IsometricCircle& circle, const HPoint& p);

HPoint apply(const MoebiusMap& f, const HPoint& p);

bool is_elliptic(const MoebiusMap& f);
/// Throws NotElliptic unless tr^2 < 4 det.
HPoint fixed_point(const MoebiusMap& f);
/// Smallest k in [1, max_order] with f^k = 1.
std::optional<long> finite_order(const MoebiusMap& f, long max_order = 12);

/// p([r:l:s]) = (l + i sqrt(rs/delta - l^2)) / r. Throws NotNegative if q(v) >= 0.
HPoint h_point_of_vector(const MukaiForm& form, const MukaiVector& v);
/// [1 : x : delta (x^2 + y^2)]
RationalTriple vector_of_h_point(const MukaiForm& form, const HPoint& p);
/// Clears denominators of a projective triple and normalizes the sign.
MukaiVector primitive_vector(const RationalTriple& v);

/// phi -> Phi / det(phi).
Isometry3 to_isometry3(const MukaiForm& form, const MoebiusMap& f);
/// Inverse of to_isometry3. Throws NotInImage.
MoebiusMap from_isometry3(const Isometry3& m);

/// Point reflection at p(rho): [[delta l, -s], [delta r, -delta l]]. Throws NotARoot.
MoebiusMap reflection_moebius(const MukaiForm& form, const MukaiVector& rho);
/// z -> z + alpha
MoebiusMap translation_moebius(const Integer& alpha);

/// Throws NoCircle when c = 0.
IsometricCircle isometric_circle(const MoebiusMap& f);

}  // namespace k3twist
