#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "k3twist/numeric.hpp"

namespace k3twist {

/// The Mukai pairing on N(Y) = Z^3 for a Picard-rank-one K3 surface of
/// degree d = 2*delta.
class MukaiForm {
 public:
  explicit MukaiForm(Integer delta);
  explicit MukaiForm(long delta) : MukaiForm(Integer(delta)) {}

  const Integer& delta() const { return delta_; }
  Integer degree() const { return 2 * delta_; }

  bool operator==(const MukaiForm& other) const { return delta_ == other.delta_; }

 private:
  Integer delta_;
};

/// (rank, multiple of H, H^4 component) of a class in N(Y).
struct MukaiVector {
  Integer r;
  Integer l;
  Integer s;

  MukaiVector() = default;
  MukaiVector(Integer r_, Integer l_, Integer s_)
      : r(std::move(r_)), l(std::move(l_)), s(std::move(s_)) {}
  MukaiVector(long r_, long l_, long s_) : r(r_), l(l_), s(s_) {}

  MukaiVector operator-() const { return {-r, -l, -s}; }
  MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, l + o.l, s + o.s}; }
  MukaiVector operator*(const Integer& k) const { return {k * r, k * l, k * s}; }

  bool operator==(const MukaiVector& o) const { return r == o.r && l == o.l && s == o.s; }
  std::strong_ordering operator<=>(const MukaiVector& o) const;

  /// "(r,l,s)"
  std::string to_string() const;
};

/// Parses "r,l,s" with optional surrounding parentheses.
MukaiVector parse_vector(std::string_view text);

using Matrix3 = std::array<std::array<Rational, 3>, 3>;
using RationalTriple = std::array<Rational, 3>;

Matrix3 identity3();
Matrix3 multiply(const Matrix3& a, const Matrix3& b);
Matrix3 transpose(const Matrix3& a);
Rational determinant(const Matrix3& a);

/// Gram matrix of the pairing in the basis (r, l, s).
Matrix3 gram_matrix(const MukaiForm& form);
bool preserves_form(const MukaiForm& form, const Matrix3& m);

/// A rational 3x3 matrix preserving the Mukai pairing. Integral ones are
/// elements of Aut N(Y); -identity is the action of the shift [1].
class Isometry3 {
 public:
  /// Throws InvariantViolation unless m^T Q m = Q and det m = +-1.
  Isometry3(MukaiForm form, Matrix3 m);

  static Isometry3 identity(const MukaiForm& form);

  const MukaiForm& form() const { return form_; }
  const Matrix3& matrix() const { return m_; }
  const Rational& operator()(int i, int j) const { return m_[i][j]; }

  Rational determinant() const { return k3twist::determinant(m_); }
  bool is_integral() const;

  Isometry3 operator*(const Isometry3& other) const;
  Isometry3 operator-() const;
  Isometry3 inverse() const;

  /// Throws std::domain_error when the image is not integral.
  MukaiVector apply(const MukaiVector& v) const;
  RationalTriple apply(const RationalTriple& v) const;

  bool operator==(const Isometry3& other) const {
    return form_ == other.form_ && m_ == other.m_;
  }

  std::string to_string() const;

 private:
  struct Unchecked {};
  Isometry3(MukaiForm form, Matrix3 m, Unchecked) : form_(std::move(form)), m_(std::move(m)) {}
  friend Isometry3 make_isometry_unchecked(MukaiForm form, Matrix3 m);

  MukaiForm form_;
  Matrix3 m_;
};

/// For callers that construct a matrix known to be an isometry (products,
/// closed-form reflections); no check is made.
Isometry3 make_isometry_unchecked(MukaiForm form, Matrix3 m);

/// <u, v> = 2 delta l1 l2 - r1 s2 - r2 s1.
Integer pairing(const MukaiForm& form, const MukaiVector& u, const MukaiVector& v);
/// q(v) = delta l^2 - r s, so that 2 q(v) = <v, v>.
Integer q_value(const MukaiForm& form, const MukaiVector& v);

bool is_root(const MukaiForm& form, const MukaiVector& v);
bool is_positive_root(const MukaiForm& form, const MukaiVector& v);

/// Negates roots of negative rank (a shift by [1] does not change the twist).
/// Throws NotARoot for non-roots and for roots of rank zero.
MukaiVector canonical_root(const MukaiForm& form, const MukaiVector& v);

/// Projective sign normalization: first nonzero coordinate made positive.
MukaiVector sign_normalized(const MukaiVector& v);

/// alpha + <alpha, rho> rho. Throws NotARoot unless q(rho) = -1.
MukaiVector reflect(const MukaiForm& form, const MukaiVector& rho, const MukaiVector& alpha);
Isometry3 reflection_matrix(const MukaiForm& form, const MukaiVector& rho);

/// Action of - (x) O_Y(alpha): (r, l, s) -> (r, l + alpha r, s + 2 delta alpha l + delta alpha^2 r).
Isometry3 translation_matrix(const MukaiForm& form, const Integer& alpha);

/// Positive roots with 1 <= r <= r_max and |l| <= l_max, sorted.
std::vector<MukaiVector> enumerate_roots(const MukaiForm& form, long r_max, long l_max);

}  // namespace k3twist
