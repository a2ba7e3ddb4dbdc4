#include "k3twist/moebius.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "k3twist/errors.hpp"

namespace k3twist {

namespace {

std::strong_ordering compare(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace

MoebiusMap::MoebiusMap(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ <= 0) {
    throw std::invalid_argument("Moebius matrix needs a positive determinant");
  }
  Integer g = gcd(gcd(a_, b_), gcd(c_, d_));
  const Integer& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
  if (lead < 0) g = -g;
  if (g != 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
    d_ /= g;
  }
}

MoebiusMap MoebiusMap::from_rational(const Rational& a, const Rational& b, const Rational& c,
                                     const Rational& d) {
  Integer den = lcm(lcm(a.get_den(), b.get_den()), lcm(c.get_den(), d.get_den()));
  auto scaled = [&](const Rational& x) { return Integer(x.get_num() * (den / x.get_den())); };
  return {scaled(a), scaled(b), scaled(c), scaled(d)};
}

MoebiusMap MoebiusMap::operator*(const MoebiusMap& g) const {
  return {a_ * g.a_ + b_ * g.c_, a_ * g.b_ + b_ * g.d_, c_ * g.a_ + d_ * g.c_,
          c_ * g.b_ + d_ * g.d_};
}

MoebiusMap MoebiusMap::inverse() const { return {d_, -b_, -c_, a_}; }

MoebiusMap MoebiusMap::pow(long k) const {
  MoebiusMap base = k < 0 ? inverse() : *this;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  MoebiusMap result = identity();
  while (n) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

std::strong_ordering MoebiusMap::operator<=>(const MoebiusMap& o) const {
  if (auto c = compare(a_, o.a_); c != 0) return c;
  if (auto c = compare(b_, o.b_); c != 0) return c;
  if (auto c = compare(c_, o.c_); c != 0) return c;
  return compare(d_, o.d_);
}

std::string MoebiusMap::to_string() const {
  return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() +
         "]]";
}

MoebiusMap parse_moebius(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char c) { return c == '[' || c == ']' || c == '(' || c == ')' || c == ' '; });
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) parts.push_back(part);
  if (parts.size() != 4) {
    throw std::invalid_argument("expected a,b,c,d but got '" + std::string(text) + "'");
  }
  return {parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]),
          parse_integer(parts[3])};
}

HPoint::HPoint(Rational x_, Rational y_sq_) : x(std::move(x_)), y_sq(std::move(y_sq_)) {
  if (y_sq <= 0) throw std::invalid_argument("HPoint requires y^2 > 0");
}

std::strong_ordering HPoint::operator<=>(const HPoint& o) const {
  if (auto c = compare(x, o.x); c != 0) return c;
  return compare(y_sq, o.y_sq);
}

std::string HPoint::to_string() const {
  return "(x=" + x.get_str() + ", y^2=" + y_sq.get_str() + ")";
}

IsometricCircle::IsometricCircle(Rational center_, Rational radius_sq_)
    : center(std::move(center_)), radius_sq(std::move(radius_sq_)) {
  if (radius_sq <= 0) throw std::invalid_argument("circle radius must be positive");
}

std::strong_ordering IsometricCircle::operator<=>(const IsometricCircle& o) const {
  if (auto c = compare(center, o.center); c != 0) return c;
  return compare(radius_sq, o.radius_sq);
}

std::string IsometricCircle::to_string() const {
  return "(center=" + center.get_str() + ", r^2=" + radius_sq.get_str() + ")";
}

CircleSide locate(const IsometricCircle& circle, const HPoint& p) {
  Rational dx = p.x - circle.center;
  Rational dist_sq = dx * dx + p.y_sq;
  int c = cmp(dist_sq, circle.radius_sq);
  return c < 0 ? CircleSide::Inside : (c == 0 ? CircleSide::On : CircleSide::Outside);
}

HPoint apply(const MoebiusMap& f, const HPoint& p) {
  Rational a(f.a()), b(f.b()), c(f.c()), d(f.d());
  Rational cx_d = c * p.x + d;
  Rational denom = cx_d * cx_d + c * c * p.y_sq;
  Rational x = ((a * p.x + b) * cx_d + a * c * p.y_sq) / denom;
  Rational det(f.det());
  Rational y_sq = det * det * p.y_sq / (denom * denom);
  return {x, y_sq};
}

bool is_elliptic(const MoebiusMap& f) {
  Integer tr = f.trace();
  return tr * tr < 4 * f.det();
}

HPoint fixed_point(const MoebiusMap& f) {
  if (!is_elliptic(f)) throw NotElliptic(f.to_string() + " is not elliptic");
  Integer tr = f.trace();
  Rational x(Integer(f.a() - f.d()), Integer(2 * f.c()));
  Rational y_sq(Integer(4 * f.det() - tr * tr), Integer(4 * f.c() * f.c()));
  x.canonicalize();
  y_sq.canonicalize();
  return {x, y_sq};
}

std::optional<long> finite_order(const MoebiusMap& f, long max_order) {
  MoebiusMap power = f;
  for (long k = 1; k <= max_order; ++k) {
    if (power.is_identity()) return k;
    power = power * f;
  }
  return std::nullopt;
}

HPoint h_point_of_vector(const MukaiForm& form, const MukaiVector& v) {
  if (q_value(form, v) >= 0) throw NotNegative(v.to_string() + " has q >= 0");
  MukaiVector w = v.r > 0 ? v : -v;
  const Integer& delta = form.delta();
  Rational x(w.l, w.r);
  Rational y_sq(Integer(w.r * w.s - delta * w.l * w.l), Integer(delta * w.r * w.r));
  x.canonicalize();
  y_sq.canonicalize();
  return {x, y_sq};
}

RationalTriple vector_of_h_point(const MukaiForm& form, const HPoint& p) {
  return {Rational(1), p.x, Rational(form.delta()) * (p.x * p.x + p.y_sq)};
}

MukaiVector primitive_vector(const RationalTriple& v) {
  Integer den = lcm(lcm(v[0].get_den(), v[1].get_den()), v[2].get_den());
  Integer r = v[0].get_num() * (den / v[0].get_den());
  Integer l = v[1].get_num() * (den / v[1].get_den());
  Integer s = v[2].get_num() * (den / v[2].get_den());
  Integer g = gcd(gcd(r, l), s);
  if (g == 0) return {0, 0, 0};
  return sign_normalized(MukaiVector(Integer(r / g), Integer(l / g), Integer(s / g)));
}

Isometry3 to_isometry3(const MukaiForm& form, const MoebiusMap& f) {
  const Rational a(f.a()), b(f.b()), c(f.c()), d(f.d());
  const Rational delta(form.delta());
  const Rational det(f.det());
  Matrix3 m;
  m[0] = {d * d / det, 2 * c * d / det, c * c / (delta * det)};
  m[1] = {b * d / det, (b * c + a * d) / det, a * c / (delta * det)};
  m[2] = {b * b * delta / det, 2 * a * b * delta / det, a * a / det};
  return make_isometry_unchecked(form, std::move(m));
}

MoebiusMap from_isometry3(const Isometry3& m) {
  const Rational delta(m.form().delta());
  const Matrix3& M = m.matrix();
  // Phi = lambda * M for the representative with the pivot entry set to 1;
  // try a, then d, then b, then c.
  std::optional<MoebiusMap> candidate;
  auto attempt = [&](const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    if (a * d - b * c <= 0) return;
    MoebiusMap f = MoebiusMap::from_rational(a, b, c, d);
    if (to_isometry3(m.form(), f) == m) candidate = f;
  };
  if (M[2][2] != 0) {
    Rational lambda = 1 / M[2][2];
    Rational b = lambda * M[2][1] / (2 * delta);
    Rational c = delta * lambda * M[1][2];
    Rational d = lambda * M[1][1] - b * c;
    attempt(1, b, c, d);
  }
  if (!candidate && M[0][0] != 0) {
    Rational lambda = 1 / M[0][0];
    Rational c = lambda * M[0][1] / 2;
    Rational b = lambda * M[1][0];
    Rational a = lambda * M[1][1] - b * c;
    attempt(a, b, c, 1);
  }
  if (!candidate && M[2][0] != 0) {
    Rational lambda = delta / M[2][0];
    Rational a = lambda * M[2][1] / (2 * delta);
    Rational d = lambda * M[1][0];
    Rational c = lambda * M[1][1] - a * d;
    attempt(a, 1, c, d);
  }
  if (!candidate && M[0][2] != 0) {
    Rational lambda = 1 / (delta * M[0][2]);
    Rational d = lambda * M[0][1] / 2;
    Rational a = delta * lambda * M[1][2];
    Rational b = lambda * M[1][1] - a * d;
    attempt(a, b, 1, d);
  }
  if (!candidate) throw NotInImage("matrix " + m.to_string() + " is not the image of a Moebius map");
  return *candidate;
}

MoebiusMap reflection_moebius(const MukaiForm& form, const MukaiVector& rho) {
  MukaiVector root = canonical_root(form, rho);
  const Integer& delta = form.delta();
  return {delta * root.l, -root.s, delta * root.r, -delta * root.l};
}

MoebiusMap translation_moebius(const Integer& alpha) { return {Integer(1), alpha, Integer(0), Integer(1)}; }

IsometricCircle isometric_circle(const MoebiusMap& f) {
  if (f.c() == 0) throw NoCircle(f.to_string() + " fixes infinity");
  Rational center(Integer(-f.d()), f.c());
  Rational radius_sq(f.det(), Integer(f.c() * f.c()));
  center.canonicalize();
  radius_sq.canonicalize();
  return {center, radius_sq};
}

}  // namespace k3twist
