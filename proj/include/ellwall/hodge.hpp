#pragma once

#include "ellwall/chern.hpp"

#include <map>
#include <utility>

namespace ellwall {

// sum h^{p,q} x^p y^q; the virtual Hodge polynomial is sum (-1)^{p+q} h^{p,q} x^p y^q
struct HodgePolynomial {
  std::map<std::pair<int, int>, Integer> h;

  static HodgePolynomial one();
  Integer at(int p, int q) const;
  HodgePolynomial operator*(const HodgePolynomial& o) const;
  bool operator==(const HodgePolynomial& o) const { return h == o.h; }
  Integer euler() const;       // evaluation of the virtual polynomial at x = y = 1
  Integer total_rank() const;  // sum of h^{p,q}
  bool symmetric() const;
  bool nonnegative() const;
  int degree() const;  // max p + q
};

HodgePolynomial hodge_poly_surface(const SurfaceGeometry& s);
HodgePolynomial hodge_poly_hilb(const SurfaceGeometry& s, int n);
// same, from explicit surface Hodge numbers
HodgePolynomial hodge_poly_hilb(const HodgePolynomial& surface, int n);
HodgePolynomial hodge_poly_pic0(const SurfaceGeometry& s);
HodgePolynomial moduli_hodge(const SurfaceGeometry& s, const ChernVector& e);

}  // namespace ellwall
