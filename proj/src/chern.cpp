#include "ellwall/chern.hpp"

#include "ellwall/error.hpp"

namespace ellwall {

bool ChernVector::is_integral() const {
  return is_integer(r) && is_integer(a) && ellwall::is_integral(xi);
}

bool ChernVector::is_zero() const {
  return r == 0 && a == 0 && ellwall::is_zero(xi);
}

ChernVector ChernVector::operator+(const ChernVector& o) const {
  return {r + o.r, DivisorClass(xi + o.xi), a + o.a};
}

ChernVector ChernVector::operator-(const ChernVector& o) const {
  return {r - o.r, DivisorClass(xi - o.xi), a - o.a};
}

ChernVector ChernVector::operator-() const {
  return {-r, DivisorClass(-xi), -a};
}

bool ChernVector::operator==(const ChernVector& o) const {
  return r == o.r && a == o.a && equal(xi, o.xi);
}

ChernVector operator*(const Rational& c, const ChernVector& e) {
  return {c * e.r, DivisorClass(e.xi * c), c * e.a};
}

ChernVector chern(const Rational& r, const DivisorClass& xi,
                  const Rational& a) {
  return {r, xi, a};
}

Polarization make_polarization(const SurfaceGeometry& s, const DivisorClass& H,
                               const DivisorClass& alpha) {
  Rational hh = intersect(s, H, H);
  Rational hf = intersect(s, H, s.f);
  if (hh <= 0 || hf <= 0)
    throw Error(ErrorCode::PreconditionViolated,
                "polarization needs (H.H) > 0 and (H.f) > 0");
  // alpha and alpha + c H define the same stability condition
  Rational c = intersect(s, alpha, s.f) / hf;
  return {H, DivisorClass(alpha - H * c), alpha};
}

Polarization default_polarization(const SurfaceGeometry& s) {
  return make_polarization(s, s.H, DivisorClass::Zero(s.ns_rank()));
}

Rational euler_pairing(const SurfaceGeometry& s, const ChernVector& e1,
                       const ChernVector& e2) {
  const DivisorClass K = canonical_class(s);
  return e1.r * e2.a + e2.r * e1.a - intersect(s, e1.xi, e2.xi) -
         e1.r * e2.r * s.e_chi + e2.r * intersect(s, e1.xi, K);
}

Rational twisted_chi(const SurfaceGeometry& s, const ChernVector& e,
                     const DivisorClass& alpha) {
  return e.a - intersect(s, e.xi, alpha);
}

Rational slope_1dim(const SurfaceGeometry& s, const ChernVector& e,
                    const Polarization& p) {
  if (e.r != 0)
    throw Error(ErrorCode::PreconditionViolated, "slope_1dim needs rank 0");
  Rational d = intersect(s, e.xi, p.H);
  if (d <= 0)
    throw Error(ErrorCode::NonPositiveDenominator,
                "(xi.H) = " + to_string(d) + " is not positive");
  return twisted_chi(s, e, p.alpha) / d;
}

Rational fiber_degree(const SurfaceGeometry& s, const ChernVector& e) {
  return intersect(s, e.xi, s.f);
}

Integer dim_moduli_1dim(const SurfaceGeometry& s, const ChernVector& e) {
  if (e.r != 0 || fiber_degree(s, e) != 1)
    throw Error(ErrorCode::PreconditionViolated,
                "dim_moduli_1dim needs r = 0 and (xi.f) = 1");
  return to_integer(intersect(s, e.xi, e.xi) + s.g + s.e_chi - 1,
                    "dim_moduli_1dim");
}

void require_coprime_rank(const SurfaceGeometry& s, const ChernVector& e) {
  if (!is_integer(e.r) || e.r <= 0)
    throw Error(ErrorCode::GcdViolation, "rank must be a positive integer");
  Rational d = fiber_degree(s, e);
  if (!is_integer(d) || gcd(e.r.get_num(), d.get_num()) != 1)
    throw Error(ErrorCode::GcdViolation,
                "gcd(r, xi.f) must be 1, got r = " + to_string(e.r) +
                    ", xi.f = " + to_string(d));
}

Integer dim_stack_lambda(const SurfaceGeometry& s, const ChernVector& e) {
  require_coprime_rank(s, e);
  const Rational xiK = intersect(s, e.xi, canonical_class(s));
  to_integer(e.r * xiK, "r(xi.K)");
  Rational v = intersect(s, e.xi, e.xi) - 2 * e.r * e.a +
               (e.r * e.r + 1) * s.e_chi - e.r * xiK + s.g - 1;
  return to_integer(v, "dim_stack_lambda");
}

Rational bogomolov_defect(const SurfaceGeometry& s, const ChernVector& e) {
  if (e.r == 0) throw Error(ErrorCode::ZeroRank, "bogomolov_defect needs r > 0");
  const Rational xiK = intersect(s, e.xi, canonical_class(s));
  return e.r * s.e_chi - xiK / 2 + intersect(s, e.xi, e.xi) / (2 * e.r) - e.a;
}

ChernVector reflect(const SurfaceGeometry& s, const ChernVector& e,
                    const ChernVector& u, bool involutive) {
  if (u.r != 0 || fiber_degree(s, u) != 0)
    throw Error(ErrorCode::PreconditionViolated,
                "reflect needs a fiber-supported class (rank 0, c1.f = 0)");
  if (involutive && euler_pairing(s, u, u) != 2)
    throw Error(ErrorCode::NotSpherical,
                "chi(u,u) = " + to_string(euler_pairing(s, u, u)) + " != 2");
  return e - euler_pairing(s, u, e) * u;
}

int ktheory_hyperplane_rank(const SurfaceGeometry& s, const ChernVector& e) {
  if (e.is_zero()) throw Error(ErrorCode::ZeroVector, "e must be nonzero");
  const int n = s.ns_rank();
  // the functional v -> chi(v, e) on the standard basis of Z + NS + Z
  QMatrix row(1, n + 2);
  for (int j = 0; j < n + 2; ++j) {
    ChernVector v{0, DivisorClass::Zero(n), 0};
    if (j == 0)
      v.r = 1;
    else if (j == n + 1)
      v.a = 1;
    else
      v.xi(j - 1) = 1;
    row(0, j) = euler_pairing(s, v, e);
  }
  return n + 2 - static_cast<int>(rank<Rational>(row));
}

ChernVector theta_fiber_class(const SurfaceGeometry& s, const ChernVector& e,
                              const Integer& k) {
  if (e.r <= 0)
    throw Error(ErrorCode::PreconditionViolated,
                "theta_fiber_class needs r > 0");
  Rational kq(k);
  return {0, DivisorClass(s.f * (e.r * kq)), kq * fiber_degree(s, e)};
}

Integer hilb_length(const SurfaceGeometry& s, const ChernVector& e) {
  Integer twice = dim_stack_lambda(s, e) + 1 - s.g;
  if (twice % 2 != 0)
    throw Error(ErrorCode::NonIntegralLength,
                "dim M - q = " + to_string(twice) + " is odd");
  Integer l = twice / 2;
  if (l < 0)
    throw Error(ErrorCode::NegativeLength,
                "Hilbert scheme length " + to_string(l) + " is negative");
  return l;
}

}  // namespace ellwall
