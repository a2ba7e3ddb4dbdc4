#include "k3twist/mukai_lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "k3twist/errors.hpp"

namespace k3twist {

namespace {

std::strong_ordering compare(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

MukaiForm::MukaiForm(Integer delta) : delta_(std::move(delta)) {
  if (delta_ < 1) throw std::invalid_argument("delta must be a positive integer");
}

std::strong_ordering MukaiVector::operator<=>(const MukaiVector& o) const {
  if (auto c = compare(r, o.r); c != 0) return c;
  if (auto c = compare(l, o.l); c != 0) return c;
  return compare(s, o.s);
}

std::string MukaiVector::to_string() const {
  return "(" + r.get_str() + "," + l.get_str() + "," + s.get_str() + ")";
}

MukaiVector parse_vector(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) parts.push_back(part);
  if (parts.size() != 3) {
    throw std::invalid_argument("expected r,l,s but got '" + std::string(text) + "'");
  }
  return {parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2])};
}

Matrix3 identity3() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  }
  return m;
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational sum = 0;
      for (int k = 0; k < 3; ++k) sum += a[i][k] * b[k][j];
      c[i][j] = sum;
    }
  }
  return c;
}

Matrix3 transpose(const Matrix3& a) {
  Matrix3 t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  }
  return t;
}

Rational determinant(const Matrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Matrix3 gram_matrix(const MukaiForm& form) {
  Matrix3 q;
  for (auto& row : q) row.fill(0);
  q[0][2] = -1;
  q[2][0] = -1;
  q[1][1] = Rational(form.degree());
  return q;
}

bool preserves_form(const MukaiForm& form, const Matrix3& m) {
  Matrix3 q = gram_matrix(form);
  return multiply(multiply(transpose(m), q), m) == q;
}

Isometry3 make_isometry_unchecked(MukaiForm form, Matrix3 m) {
  return Isometry3(std::move(form), std::move(m), Isometry3::Unchecked{});
}

Isometry3::Isometry3(MukaiForm form, Matrix3 m) : form_(std::move(form)), m_(std::move(m)) {
  if (!preserves_form(form_, m_)) {
    throw InvariantViolation("matrix does not preserve the Mukai pairing");
  }
  Rational det = k3twist::determinant(m_);
  if (det != 1 && det != -1) throw InvariantViolation("isometry determinant must be +-1");
}

Isometry3 Isometry3::identity(const MukaiForm& form) {
  return make_isometry_unchecked(form, identity3());
}

bool Isometry3::is_integral() const {
  for (const auto& row : m_) {
    for (const auto& x : row) {
      if (!k3twist::is_integer(x)) return false;
    }
  }
  return true;
}

Isometry3 Isometry3::operator*(const Isometry3& other) const {
  if (!(form_ == other.form_)) throw std::invalid_argument("isometries of different forms");
  return make_isometry_unchecked(form_, multiply(m_, other.m_));
}

Isometry3 Isometry3::operator-() const {
  Matrix3 n = m_;
  for (auto& row : n) {
    for (auto& x : row) x = -x;
  }
  return make_isometry_unchecked(form_, std::move(n));
}

Isometry3 Isometry3::inverse() const {
  // m^{-1} = Q^{-1} m^T Q for an isometry of Q.
  Matrix3 q = gram_matrix(form_);
  Matrix3 q_inv;
  for (auto& row : q_inv) row.fill(0);
  q_inv[0][2] = -1;
  q_inv[2][0] = -1;
  q_inv[1][1] = Rational(1) / q[1][1];
  return make_isometry_unchecked(form_, multiply(multiply(q_inv, transpose(m_)), q));
}

RationalTriple Isometry3::apply(const RationalTriple& v) const {
  RationalTriple out;
  for (int i = 0; i < 3; ++i) out[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2];
  return out;
}

MukaiVector Isometry3::apply(const MukaiVector& v) const {
  RationalTriple out = apply(RationalTriple{Rational(v.r), Rational(v.l), Rational(v.s)});
  for (const auto& x : out) {
    if (!k3twist::is_integer(x)) throw std::domain_error("isometry image is not integral");
  }
  return {out[0].get_num(), out[1].get_num(), out[2].get_num()};
}

std::string Isometry3::to_string() const {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += (i ? ",[" : "[");
    for (int j = 0; j < 3; ++j) out += (j ? "," : "") + m_[i][j].get_str();
    out += "]";
  }
  return out + "]";
}

Integer pairing(const MukaiForm& form, const MukaiVector& u, const MukaiVector& v) {
  return form.degree() * u.l * v.l - u.r * v.s - v.r * u.s;
}

Integer q_value(const MukaiForm& form, const MukaiVector& v) {
  return form.delta() * v.l * v.l - v.r * v.s;
}

bool is_root(const MukaiForm& form, const MukaiVector& v) { return q_value(form, v) == -1; }

bool is_positive_root(const MukaiForm& form, const MukaiVector& v) {
  return is_root(form, v) && v.r > 0;
}

MukaiVector canonical_root(const MukaiForm& form, const MukaiVector& v) {
  if (!is_root(form, v)) throw NotARoot(v.to_string() + " is not a root");
  if (v.r == 0) throw NotARoot(v.to_string() + " has rank zero");
  return v.r > 0 ? v : -v;
}

MukaiVector sign_normalized(const MukaiVector& v) {
  if (v.r < 0 || (v.r == 0 && (v.l < 0 || (v.l == 0 && v.s < 0)))) return -v;
  return v;
}

MukaiVector reflect(const MukaiForm& form, const MukaiVector& rho, const MukaiVector& alpha) {
  if (!is_root(form, rho)) throw NotARoot(rho.to_string() + " is not a root");
  return alpha + rho * pairing(form, alpha, rho);
}

Isometry3 reflection_matrix(const MukaiForm& form, const MukaiVector& rho) {
  if (!is_root(form, rho)) throw NotARoot(rho.to_string() + " is not a root");
  // Column j is the image of the j-th basis vector.
  const MukaiVector basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  Matrix3 m;
  for (int j = 0; j < 3; ++j) {
    MukaiVector image = reflect(form, rho, basis[j]);
    m[0][j] = Rational(image.r);
    m[1][j] = Rational(image.l);
    m[2][j] = Rational(image.s);
  }
  return make_isometry_unchecked(form, std::move(m));
}

Isometry3 translation_matrix(const MukaiForm& form, const Integer& alpha) {
  const Integer& delta = form.delta();
  Matrix3 m;
  m[0] = {Rational(1), Rational(0), Rational(0)};
  m[1] = {Rational(alpha), Rational(1), Rational(0)};
  m[2] = {Rational(delta * alpha * alpha), Rational(2 * delta * alpha), Rational(1)};
  return make_isometry_unchecked(form, std::move(m));
}

std::vector<MukaiVector> enumerate_roots(const MukaiForm& form, long r_max, long l_max) {
  if (r_max < 1 || l_max < 1) throw std::invalid_argument("r_max and l_max must be >= 1");
  std::vector<MukaiVector> roots;
  for (long r = 1; r <= r_max; ++r) {
    for (long l = -l_max; l <= l_max; ++l) {
      // r s = delta l^2 + 1
      Integer numerator = form.delta() * l * l + 1;
      if (divides(Integer(r), numerator)) roots.emplace_back(Integer(r), Integer(l), Integer(numerator / r));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace k3twist
