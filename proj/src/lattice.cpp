#include "ellwall/lattice.hpp"

#include "ellwall/error.hpp"

namespace ellwall {

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::Validation, msg);
}

void check_len(const SurfaceGeometry& s, const DivisorClass& x,
               const std::string& what) {
  need(x.size() == s.ns_rank(), what + ": expected " +
                                    std::to_string(s.ns_rank()) +
                                    " coordinates, got " +
                                    std::to_string(x.size()));
}

}  // namespace

bool SurfaceGeometry::has_reducible_fibers() const {
  for (const auto& fl : fiber_lattices)
    if (!fl.components.empty()) return true;
  return false;
}

void validate(const SurfaceGeometry& s) {
  need(s.g >= 0, "g must be >= 0");
  need(s.e_chi >= 0, "e_chi must be >= 0");
  need(s.p_g() >= 0, "p_g = e_chi + g - 1 must be >= 0");
  for (int m : s.multiple_fibers)
    need(m >= 2, "multiple fiber multiplicity must be >= 2, got " +
                     std::to_string(m));
  need(s.ns_rank() >= 2, "ns_rank must be >= 2");
  need(s.gram.rows() == s.gram.cols(), "gram must be square");
  for (Eigen::Index i = 0; i < s.gram.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      need(s.gram(i, j) == s.gram(j, i), "gram is not symmetric at (" +
                                             std::to_string(i) + "," +
                                             std::to_string(j) + ")");
  need(determinant<Rational>(s.gram) != 0, "gram is degenerate");
  check_len(s, s.f, "f");
  check_len(s, s.H, "H");
  need(is_integral(s.f), "f must have integral coordinates");
  need(is_integral(s.H), "H must have integral coordinates");
  need(intersect(s, s.f, s.f) == 0, "(f.f) must be 0");
  need(intersect(s, s.f, s.H) > 0, "(f.H) must be > 0");
  need(intersect(s, s.H, s.H) > 0, "(H.H) must be > 0");
  if (s.sigma) {
    check_len(s, *s.sigma, "sigma");
    need(is_integral(*s.sigma), "sigma must have integral coordinates");
    need(intersect(s, *s.sigma, *s.sigma) == -s.e_chi,
         "(sigma.sigma) must equal -e_chi");
    need(intersect(s, *s.sigma, s.f) == 1, "(sigma.f) must be 1");
  }
  if (s.h11) need(*s.h11 >= 1, "h11 must be >= 1");
  for (const auto& fl : s.fiber_lattices) {
    const std::string tag = "fiber lattice '" + fl.fiber_id + "'";
    need(fl.multiplicity >= 1, tag + ": multiplicity must be >= 1");
    need(fl.components.size() == fl.comp_multiplicities.size(),
         tag + ": components and comp_multiplicities differ in length");
    for (size_t j = 0; j < fl.components.size(); ++j) {
      check_len(s, fl.components[j], tag + " component " + std::to_string(j));
      need(is_integral(fl.components[j]),
           tag + ": component " + std::to_string(j) + " is not integral");
      need(intersect(s, fl.components[j], s.f) == 0,
           tag + ": component " + std::to_string(j) + " has (C.f) != 0");
      need(fl.comp_multiplicities[j] >= 1,
           tag + ": component multiplicities must be positive");
    }
    if (!fl.components.empty())
      need(is_negative_definite<Rational>(component_gram(s, fl)),
           tag + ": component Gram matrix is not negative definite");
  }
  for (size_t i = 0; i < s.fiber_lattices.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      need(s.fiber_lattices[i].fiber_id != s.fiber_lattices[j].fiber_id,
           "duplicate fiber_id '" + s.fiber_lattices[i].fiber_id + "'");
}

Rational intersect(const SurfaceGeometry& s, const DivisorClass& x,
                   const DivisorClass& y) {
  if (x.size() != s.ns_rank() || y.size() != s.ns_rank())
    throw Error(ErrorCode::DimensionMismatch,
                "divisor class length does not match ns_rank " +
                    std::to_string(s.ns_rank()));
  return bilinear<Rational>(s.gram, x, y);
}

DivisorClass canonical_class(const SurfaceGeometry& s) {
  Rational c = 2 * s.g - 2 + s.e_chi;
  for (int m : s.multiple_fibers) c += rational(m - 1, m);
  return DivisorClass(s.f * c);
}

DivisorClass multiple_fiber_class(const SurfaceGeometry& s, int m) {
  return DivisorClass(s.f / Rational(m));
}

const FiberComponentLattice& find_fiber(const SurfaceGeometry& s,
                                        const std::string& fiber_id) {
  for (const auto& fl : s.fiber_lattices)
    if (fl.fiber_id == fiber_id) return fl;
  throw Error(ErrorCode::UnknownFiber, "unknown fiber_id '" + fiber_id + "'");
}

QMatrix component_gram(const SurfaceGeometry& s,
                       const FiberComponentLattice& fl) {
  const auto n = static_cast<Eigen::Index>(fl.components.size());
  QMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = intersect(s, fl.components[i], fl.components[j]);
  return g;
}

std::vector<FiberRoot> enumerate_fiber_roots(const SurfaceGeometry& s,
                                             const std::string& fiber_id) {
  const auto& fl = find_fiber(s, fiber_id);
  std::vector<FiberRoot> pos;
  const size_t n = fl.components.size();
  if (n == 0) return pos;
  const QMatrix g = component_gram(s, fl);
  std::vector<int> b(n, 0);
  // odometer over the box, first coordinate fastest
  while (true) {
    size_t i = 0;
    while (i < n && b[i] == fl.comp_multiplicities[i]) b[i++] = 0;
    if (i == n) break;
    ++b[i];
    QVector bv(static_cast<Eigen::Index>(n));
    for (size_t j = 0; j < n; ++j) bv(static_cast<Eigen::Index>(j)) = b[j];
    if (bilinear<Rational>(g, bv, bv) != -2) continue;
    DivisorClass D = DivisorClass::Zero(s.ns_rank());
    for (size_t j = 0; j < n; ++j) D += fl.components[j] * Rational(b[j]);
    pos.push_back({D, b, 1});
  }
  std::vector<FiberRoot> out = pos;
  for (const auto& r : pos) out.push_back({DivisorClass(-r.D), r.coeffs, -1});
  return out;
}

}  // namespace ellwall
