#pragma once

#include "ellwall/lattice.hpp"

namespace ellwall {

// (r, xi, a). Entries are kept rational so that fiber classes such as
// (0, r_i f_i, d_i) and cleared-denominator rays share one type.
struct ChernVector {
  Rational r;
  DivisorClass xi;
  Rational a;

  bool is_integral() const;
  bool is_zero() const;
  ChernVector operator+(const ChernVector& o) const;
  ChernVector operator-(const ChernVector& o) const;
  ChernVector operator-() const;
  bool operator==(const ChernVector& o) const;
  bool operator!=(const ChernVector& o) const { return !(*this == o); }
};

ChernVector operator*(const Rational& c, const ChernVector& e);

ChernVector chern(const Rational& r, const DivisorClass& xi, const Rational& a);

struct Polarization {
  DivisorClass H;
  DivisorClass alpha;           // normalized: (alpha.f) = 0
  DivisorClass alpha_original;  // as supplied
};

Polarization make_polarization(const SurfaceGeometry& s, const DivisorClass& H,
                               const DivisorClass& alpha);
Polarization default_polarization(const SurfaceGeometry& s);

Rational euler_pairing(const SurfaceGeometry& s, const ChernVector& e1,
                       const ChernVector& e2);
Rational twisted_chi(const SurfaceGeometry& s, const ChernVector& e,
                     const DivisorClass& alpha);
Rational slope_1dim(const SurfaceGeometry& s, const ChernVector& e,
                    const Polarization& p);

Rational fiber_degree(const SurfaceGeometry& s, const ChernVector& e);

Integer dim_moduli_1dim(const SurfaceGeometry& s, const ChernVector& e);
Integer dim_stack_lambda(const SurfaceGeometry& s, const ChernVector& e);
Rational bogomolov_defect(const SurfaceGeometry& s, const ChernVector& e);

ChernVector reflect(const SurfaceGeometry& s, const ChernVector& e,
                    const ChernVector& u, bool involutive = false);

int ktheory_hyperplane_rank(const SurfaceGeometry& s, const ChernVector& e);

ChernVector theta_fiber_class(const SurfaceGeometry& s, const ChernVector& e,
                              const Integer& k);

Integer hilb_length(const SurfaceGeometry& s, const ChernVector& e);

// throws GcdViolation unless r > 0 and gcd(r, xi.f) = 1
void require_coprime_rank(const SurfaceGeometry& s, const ChernVector& e);

}  // namespace ellwall
