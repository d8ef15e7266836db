#pragma once

#include <gmpxx.h>
#include <Eigen/Core>

#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace ellwall {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QVector = Vec<Rational>;
using QMatrix = Mat<Rational>;

Rational rational(long p, long q = 1);
Rational rational(const Integer& p, const Integer& q = 1);

// "p/q", "p", "-p/q"; whitespace is not accepted. Throws Error on bad input.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
// unevaluated gmp expressions
template <typename U>
std::string to_string(const __gmp_expr<mpz_t, U>& x) { return to_string(Integer(x)); }
template <typename U>
std::string to_string(const __gmp_expr<mpq_t, U>& x) { return to_string(Rational(x)); }

bool is_integer(const Rational& x);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);
// throws NonIntegral when x is not an integer
Integer to_integer(const Rational& x, const char* what = "value");

Integer gcd(const Integer& a, const Integer& b);
// returns g and sets s,t with s*a + t*b = g >= 0
Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

QVector qvector(std::initializer_list<long> xs);
QVector qvector(const std::vector<Rational>& xs);
bool equal(const QVector& x, const QVector& y);
bool is_integral(const QVector& x);
bool is_zero(const QVector& x);

template <typename Scalar>
Scalar bilinear(const Mat<Scalar>& g, const Vec<Scalar>& x, const Vec<Scalar>& y) {
  return x.dot(g * y);
}

// exact determinant by fraction elimination (no pivot tolerance)
template <typename Scalar>
Scalar determinant(Mat<Scalar> m) {
  const Eigen::Index n = m.rows();
  Scalar det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Scalar k = m(r, c) / m(c, c);
      for (Eigen::Index j = c; j < n; ++j) m(r, j) -= k * m(c, j);
    }
  }
  return det;
}

// Sylvester: -G positive definite iff (-1)^k det(G_k) > 0 for all k
template <typename Scalar>
bool is_negative_definite(const Mat<Scalar>& g) {
  for (Eigen::Index k = 1; k <= g.rows(); ++k) {
    Scalar d = determinant<Scalar>(g.topLeftCorner(k, k));
    if (k % 2 == 1 ? !(d < 0) : !(d > 0)) return false;
  }
  return true;
}

template <typename Scalar>
Eigen::Index rank(Mat<Scalar> m) {
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.row(piv).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Scalar k = m(i, c) / m(r, c);
      m.row(i) -= k * m.row(r);
    }
    ++r;
  }
  return r;
}

}  // namespace ellwall
