#include "ellwall/numeric.hpp"

#include "ellwall/error.hpp"

#include <cctype>

namespace ellwall {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::UnknownFiber: return "UnknownFiber";
    case ErrorCode::NonPositiveDenominator: return "NonPositiveDenominator";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::ZeroRank: return "ZeroRank";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NonIntegralLength: return "NonIntegralLength";
    case ErrorCode::NegativeLength: return "NegativeLength";
    case ErrorCode::InvalidWallClass: return "InvalidWallClass";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::UnrepresentableSlope: return "UnrepresentableSlope";
    case ErrorCode::BadDeterminant: return "BadDeterminant";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::LengthTooSmall: return "LengthTooSmall";
    case ErrorCode::NonNegativeInput: return "NonNegativeInput";
    case ErrorCode::Pole: return "Pole";
    case ErrorCode::BoundaryInput: return "BoundaryInput";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::InconsistentHodge: return "InconsistentHodge";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Error";
}

Rational rational(long p, long q) {
  if (q == 0) throw Error(ErrorCode::Parse, "zero denominator");
  Rational x(p, q);
  x.canonicalize();
  return x;
}

Rational rational(const Integer& p, const Integer& q) {
  if (q == 0) throw Error(ErrorCode::Parse, "zero denominator");
  Rational x(p, q);
  x.canonicalize();
  return x;
}

static bool valid_int(const std::string& s) {
  size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::Parse, "not a rational: '" + s + "'");
  Integer p(num[0] == '+' ? num.substr(1) : num, 10), q(den, 10);
  return rational(p, q);
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer floor(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer to_integer(const Rational& x, const char* what) {
  if (!is_integer(x))
    throw Error(ErrorCode::NonIntegral,
                std::string(what) + " is not integral: " + to_string(x));
  return x.get_num();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

QVector qvector(std::initializer_list<long> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

QVector qvector(const std::vector<Rational>& xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  for (size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

bool equal(const QVector& x, const QVector& y) {
  if (x.size() != y.size()) return false;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) != y(i)) return false;
  return true;
}

bool is_integral(const QVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!is_integer(x(i))) return false;
  return true;
}

bool is_zero(const QVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) != 0) return false;
  return true;
}

}  // namespace ellwall
