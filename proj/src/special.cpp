#include "ellwall/special.hpp"

#include "ellwall/error.hpp"

#include <algorithm>

namespace ellwall {

std::string to_string(const IntervalIndex& ix) {
  if (ix.boundary)
    return "Boundary(" + std::to_string(ix.n - 1) + "/" + std::to_string(ix.n) + ")";
  return std::to_string(ix.n);
}

const char* normalization_name(Normalization n) {
  return n == Normalization::Phi ? "Phi" : "DualPhi";
}

const char* ampleness_name(Ampleness a) {
  switch (a) {
    case Ampleness::Ample: return "Ample";
    case Ampleness::Contraction: return "Contraction";
    case Ampleness::NotAmple: return "NotAmple";
  }
  return "?";
}

std::vector<Rational> walls_I0(int l) {
  if (l < 2) throw Error(ErrorCode::LengthTooSmall, "l must be >= 2");
  std::vector<Rational> w;
  for (long p = 1; 2 * p < l; ++p)
    for (long q = -l; q < -2 * p; ++q)
      if (gcd(Integer(p), Integer(q)) == 1) w.push_back(rational(q, p));
  std::sort(w.begin(), w.end(), [](const Rational& a, const Rational& b) { return b < a; });
  return w;
}

IntervalIndex interval_index(const Rational& t) {
  if (t >= 0) throw Error(ErrorCode::NonNegativeInput, "t must be negative");
  IntervalIndex ix;
  if (t < -2) return ix;
  Rational x = Rational(-2) / t;
  Integer n = floor(x);
  ix.n = static_cast<int>(n.get_si());
  ix.boundary = is_integer(x);
  return ix;
}

Rational phi(const Rational& t) {
  if (t == -1) throw Error(ErrorCode::Pole, "phi has a pole at t = -1");
  return t / (1 + t);
}

std::pair<Rational, std::vector<Normalization>> normalize_to_I0(const Rational& t) {
  IntervalIndex ix = interval_index(t);
  if (ix.boundary)
    throw Error(ErrorCode::BoundaryInput, "t = " + to_string(t) + " is an interval boundary");
  Rational x = t;
  std::vector<Normalization> word;
  while (ix.n >= 2) {
    x = phi(x);
    word.push_back(Normalization::Phi);
    ix = interval_index(x);
  }
  if (ix.n == 1) {
    x = -phi(x);
    word.push_back(Normalization::DualPhi);
  }
  return {x, word};
}

std::pair<Integer, Integer> fm_fiber_action(const Integer& p, const Integer& q) {
  if (p == 0 && q == 0) throw Error(ErrorCode::ZeroClass, "(p,q) = (0,0)");
  return {p + q, q};
}

std::vector<ChamberInterval> chambers_I0(int l) {
  std::vector<Rational> w = walls_I0(l);
  std::reverse(w.begin(), w.end());
  std::vector<ChamberInterval> out;
  LambdaValue left = LambdaValue::minus_infinity();
  for (const Rational& x : w) {
    out.push_back({left, x, 0});
    left = LambdaValue::finite(x);
  }
  out.push_back({left, Rational(-2), 0});
  return out;
}

void require_special_surface(const SurfaceGeometry& s) {
  if (s.ns_rank() != 2 || s.g != 0 || !s.multiple_fibers.empty() ||
      s.has_reducible_fibers())
    throw Error(ErrorCode::PreconditionViolated,
                "special case needs NS = ZH + Zf, g = 0, no multiple or "
                "reducible fibers");
  QMatrix basis(2, 2);
  basis.col(0) = s.H;
  basis.col(1) = s.f;
  Rational det = determinant<Rational>(basis);
  if (det != 1 && det != -1)
    throw Error(ErrorCode::PreconditionViolated, "H and f must span NS");
}

ChernVector special_invariant(const SurfaceGeometry& s, int l) {
  return {1, DivisorClass::Zero(s.ns_rank()), Rational(s.e_chi - l)};
}

namespace {

ChernVector primitive(const ChernVector& v) {
  Integer den = v.r.get_den();
  auto fold_den = [&](const Rational& x) {
    den = den / gcd(den, x.get_den()) * x.get_den();
  };
  fold_den(v.a);
  for (Eigen::Index i = 0; i < v.xi.size(); ++i) fold_den(v.xi(i));
  ChernVector w = Rational(den) * v;
  Integer g = 0;
  g = gcd(g, w.r.get_num());
  g = gcd(g, w.a.get_num());
  for (Eigen::Index i = 0; i < w.xi.size(); ++i) g = gcd(g, w.xi(i).get_num());
  if (g == 0) return w;
  return rational(Integer(1), g) * w;
}

}  // namespace

RaySpec f_class(const SurfaceGeometry& s, const LambdaValue& t, int l) {
  require_special_surface(s);
  const Rational hk = intersect(s, s.H, canonical_class(s));
  ChernVector v{0, s.H, -hk};
  if (!t.infinite) {
    if (t.value >= 0) throw Error(ErrorCode::PreconditionViolated, "t must be < 0");
    Rational c = intersect(s, s.H, s.f) / t.value;
    v = v + c * ChernVector{1, DivisorClass::Zero(s.ns_rank()), Rational(l)};
  }
  if (euler_pairing(s, v, special_invariant(s, l)) != 0)
    throw Error(ErrorCode::InvariantViolation, "F_t is off the hyperplane");
  return {t, v, primitive(v)};
}

std::pair<RaySpec, RaySpec> nef_cone(const SurfaceGeometry& s,
                                     const ChamberInterval& chamber, int l) {
  if (!s.kodaira_dim_one)
    throw Error(ErrorCode::PreconditionViolated,
                "cone statements need the kodaira_dim_one flag");
  return {f_class(s, chamber.t1, l), f_class(s, LambdaValue::finite(chamber.t2), l)};
}

std::pair<RaySpec, RaySpec> movable_cone(const SurfaceGeometry& s, int l) {
  if (l < 2) throw Error(ErrorCode::LengthTooSmall, "l must be >= 2");
  if (!s.kodaira_dim_one)
    throw Error(ErrorCode::PreconditionViolated,
                "cone statements need the kodaira_dim_one flag");
  return {f_class(s, LambdaValue::minus_infinity(), l),
          f_class(s, LambdaValue::finite(-2), l)};
}

Ampleness is_relatively_ample(const SurfaceGeometry& s, const DivisorClass& eta,
                              const LambdaValue& lambda1, const Rational& lambda2) {
  Rational x = intersect(s, eta, s.f) / intersect(s, s.H, s.f);
  if (x == lambda2 || (!lambda1.infinite && x == lambda1.value))
    return Ampleness::Contraction;
  if (x < lambda2 && (lambda1.infinite || lambda1.value < x)) return Ampleness::Ample;
  return Ampleness::NotAmple;
}

FmKernelData special_kernel(const Integer& fH) { return fm_kernel(1, -1, -1, 0, fH); }

}  // namespace ellwall
