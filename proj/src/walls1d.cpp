#include "ellwall/walls1d.hpp"

#include "ellwall/error.hpp"

namespace ellwall {

const char* kind_name(WallKind k) {
  return k == WallKind::Root ? "Root" : "Isotropic";
}

const char* move_name(MoveTag t) {
  switch (t) {
    case MoveTag::ReflectionIso: return "ReflectionIso";
    case MoveTag::DoubleReflectionBirational: return "DoubleReflectionBirational";
    case MoveTag::FmIso: return "FmIso";
    case MoveTag::FmDetTwistIso: return "FmDetTwistIso";
    case MoveTag::DualBirational: return "DualBirational";
    case MoveTag::IdentityOffCodim2: return "IdentityOffCodim2";
  }
  return "?";
}

const char* side_name(Side s) {
  switch (s) {
    case Side::Below: return "Below";
    case Side::On: return "On";
    case Side::Above: return "Above";
  }
  return "?";
}

namespace {

std::optional<Rational> fiber_multiple(const SurfaceGeometry& s,
                                       const DivisorClass& x) {
  for (Eigen::Index i = 0; i < s.f.size(); ++i) {
    if (s.f(i) == 0) continue;
    Rational c = x(i) / s.f(i);
    if (equal(x, DivisorClass(s.f * c))) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

void require_1dim(const SurfaceGeometry& s, const ChernVector& e) {
  if (!e.is_integral() || e.r != 0 || fiber_degree(s, e) != 1)
    throw Error(ErrorCode::PreconditionViolated,
                "walls1d needs an integral e = (0, xi, a) with (xi.f) = 1");
}

}  // namespace

WallKind classify_wall_class(const SurfaceGeometry& s, const ChernVector& u) {
  if (!u.is_integral() || u.r != 0)
    throw Error(ErrorCode::InvalidWallClass,
                "wall class must be integral of rank 0");
  if (auto c = fiber_multiple(s, u.xi)) {
    if (!is_integer(*c) || *c <= 0 ||
        gcd(c->get_num(), u.a.get_num()) != 1)
      throw Error(ErrorCode::InvalidWallClass,
                  "isotropic wall class needs (0, r f, d) with r > 0, "
                  "gcd(r, d) = 1");
    return WallKind::Isotropic;
  }
  if (intersect(s, u.xi, s.f) == 0 && intersect(s, u.xi, u.xi) == -2)
    return WallKind::Root;
  throw Error(ErrorCode::InvalidWallClass,
              "u is neither a root class (D.D = -2, D.f = 0) nor isotropic");
}

Side wall_side(const SurfaceGeometry& s, const ChernVector& e,
               const ChernVector& u, const Polarization& p) {
  Rational d = slope_1dim(s, u, p) - slope_1dim(s, e, p);
  return d < 0 ? Side::Below : (d == 0 ? Side::On : Side::Above);
}

Codim crossing_codim_1d(const SurfaceGeometry& s, const ChernVector& e,
                        const ChernVector& u) {
  require_1dim(s, e);
  if (classify_wall_class(s, u) == WallKind::Isotropic)
    return to_integer(*fiber_multiple(s, u.xi)) - 1;
  Integer xd = to_integer(intersect(s, e.xi, u.xi), "(xi.D)");
  if (xd < 0) return std::nullopt;
  return xd + 1;
}

bool is_divisorial_1d(const SurfaceGeometry& s, const ChernVector& e,
                      const ChernVector& u) {
  require_1dim(s, e);
  if (classify_wall_class(s, u) == WallKind::Isotropic) {
    Rational r = *fiber_multiple(s, u.xi);
    return r == 1 || r == 2;
  }
  return intersect(s, e.xi, u.xi) == 0;
}

MoveDescriptor birational_move_1d(const SurfaceGeometry& s,
                                  const ChernVector& e, const ChernVector& u) {
  require_1dim(s, e);
  MoveDescriptor m;
  m.target = e;
  if (classify_wall_class(s, u) == WallKind::Isotropic) {
    Integer r = to_integer(*fiber_multiple(s, u.xi));
    if (r == 1) {
      m.tag = MoveTag::FmIso;
    } else if (r == 2) {
      m.tag = MoveTag::FmDetTwistIso;
    } else {
      m.tag = MoveTag::DualBirational;
      m.codim = r - 1;
    }
    return m;
  }
  Rational xd = intersect(s, e.xi, u.xi);
  if (xd == 0) {
    m.tag = MoveTag::ReflectionIso;
    m.target = reflect(s, e, u, true);
  } else if (xd < 0) {
    m.tag = MoveTag::DoubleReflectionBirational;
    ChernVector ep = e + xd * u;
    m.target = ep;
    m.chain = {e, ep, ep, e};
  } else {
    m.tag = MoveTag::IdentityOffCodim2;
  }
  return m;
}

std::vector<Wall1D> enumerate_wall_classes_1d(
    const SurfaceGeometry& s, const ChernVector& e,
    const std::optional<Polarization>& p) {
  require_1dim(s, e);
  const Integer xi2 = to_integer(intersect(s, e.xi, e.xi), "(xi.xi)");
  std::vector<Wall1D> out;

  auto finish = [&](Wall1D& w) {
    w.codim = crossing_codim_1d(s, e, w.u);
    w.divisorial = is_divisorial_1d(s, e, w.u);
    w.move = birational_move_1d(s, e, w.u);
    if (p) {
      try {
        w.side = side_name(wall_side(s, e, w.u, *p));
      } catch (const Error&) {
        w.side = "Undefined";
      }
    }
  };

  // root families: D = sign*D0 + k f, effective, (xi.D) <= (xi^2 + e - 2)/2
  const Integer root_bound = floor(Rational(xi2 + s.e_chi - 2, 2));
  for (const auto& fl : s.fiber_lattices) {
    for (const auto& root : enumerate_fiber_roots(s, fl.fiber_id)) {
      const Integer x0 = to_integer(intersect(s, e.xi, root.D), "(xi.D)");
      Integer k = root.sign > 0 ? 0 : 1;
      for (; x0 + k <= root_bound; ++k) {
        Wall1D w;
        w.kind = WallKind::Root;
        w.fiber_id = fl.fiber_id;
        w.root_sign = root.sign;
        w.root_coeffs = root.coeffs;
        w.fiber_shift = k;
        w.pairing = x0 + k;
        w.u = {0, DivisorClass(root.D + s.f * Rational(k)), 0};
        w.locus = "(b - (D.alpha))(xi.H) = (a - (xi.alpha))(D.H), b = chi(0,D,b)";
        finish(w);
        out.push_back(w);
      }
    }
  }

  const Integer iso_bound = floor(Rational(xi2 + s.e_chi, 2));
  for (Integer r = 1; r <= iso_bound; ++r) {
    Wall1D w;
    w.kind = WallKind::Isotropic;
    w.pairing = r;
    w.u = {0, DivisorClass(s.f * Rational(r)), 1};
    w.locus = "(d - r(f.alpha))(xi.H) = r(f.H)(a - (xi.alpha)), gcd(r,d) = 1";
    finish(w);
    out.push_back(w);
  }
  return out;
}

}  // namespace ellwall
