#include "ellwall/lambda_walls.hpp"

#include "ellwall/error.hpp"

#include <algorithm>
#include <tuple>

namespace ellwall {

LambdaValue LambdaValue::minus_infinity() {
  LambdaValue v;
  v.infinite = true;
  return v;
}

LambdaValue LambdaValue::finite(const Rational& x) {
  LambdaValue v;
  v.value = x;
  return v;
}

bool LambdaValue::operator<(const LambdaValue& o) const {
  if (infinite) return !o.infinite;
  if (o.infinite) return false;
  return value < o.value;
}

bool LambdaValue::operator==(const LambdaValue& o) const {
  if (infinite || o.infinite) return infinite == o.infinite;
  return value == o.value;
}

std::string to_string(const LambdaValue& v) {
  return v.infinite ? "-inf" : to_string(v.value);
}

const char* crossing_name(CrossingKind k) {
  switch (k) {
    case CrossingKind::Isomorphism: return "Isomorphism";
    case CrossingKind::Codim1: return "Codim1";
    case CrossingKind::HigherCodim: return "HigherCodim";
    case CrossingKind::Empty: return "Empty";
  }
  return "?";
}

const char* reduction_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::IsomorphismToHilb: return "IsomorphismToHilb";
    case ReductionKind::BirationalCodim2: return "BirationalCodim2";
    case ReductionKind::BirationalWeaker: return "BirationalWeaker";
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

// t = d0/r0 with r0 > 0 reduced
std::pair<Integer, Integer> as_pair(const Rational& t) {
  return {t.get_den(), t.get_num()};
}

LambdaValue from_pair(const Integer& r0, const Integer& d0, const Integer& fH) {
  if (r0 == 0) return LambdaValue::minus_infinity();
  Rational t = rational(d0, r0);
  LambdaValue v = LambdaValue::finite(t / Rational(fH));
  v.slope_pair = as_pair(t);
  return v;
}

void require_divisible_degree(const SurfaceGeometry& s, const ChernVector& e) {
  Integer d = to_integer(fiber_degree(s, e), "(xi.f)");
  for (int m : s.multiple_fibers)
    if (d % m != 0)
      throw Error(ErrorCode::PreconditionViolated,
                  "(xi.f) = " + to_string(d) +
                      " is not divisible by the multiple fiber m = " +
                      std::to_string(m));
}

bool projective_flag(const std::vector<int>& m, const Integer& d_prime,
                     const Integer& xf,
                     const std::vector<FiberDecomposition>& base) {
  bool all_odd = std::all_of(m.begin(), m.end(), [](int x) { return x % 2; });
  bool all_k1 = std::all_of(base.begin(), base.end(),
                            [](const FiberDecomposition& b) { return b.k_i == 1; });
  return all_odd || d_prime % 2 != 0 || xf % 2 != 0 || all_k1;
}

bool tau_less(const ChernVector& x, const ChernVector& y) {
  if (x.r != y.r) return x.r < y.r;
  for (Eigen::Index i = 0; i < x.xi.size(); ++i)
    if (x.xi(i) != y.xi(i)) return x.xi(i) < y.xi(i);
  return x.a < y.a;
}

}  // namespace

LambdaValue lambda_of(const SurfaceGeometry& s, const ChernVector& tau,
                      const Polarization& p) {
  LambdaValue v = LambdaValue::finite(slope_1dim(s, tau, p));
  if (auto c = fiber_multiple(s, tau.xi)) {
    Rational fH = intersect(s, s.f, p.H);
    Rational t = v.value * fH + intersect(s, s.f, p.alpha);
    v.slope_pair = as_pair(t);
  }
  return v;
}

std::vector<FiberDecomposition> isotropic_decomposition_base(
    const std::vector<int>& multiplicities, const Integer& r_prime,
    const Integer& d_prime) {
  if (r_prime <= 0 || gcd(r_prime, d_prime) != 1)
    throw Error(ErrorCode::NotCoprime,
                "isotropic base needs r' > 0 and gcd(r', d') = 1");
  std::vector<FiberDecomposition> out;
  for (int m : multiplicities) {
    FiberDecomposition b;
    b.m = m;
    Integer g = gcd(r_prime * m, d_prime);
    b.r_i = r_prime * m / g;
    b.d_i = d_prime / g;
    b.p_i = gcd(b.r_i, Integer(m));
    b.k_i = Integer(m) / b.p_i;
    // r_i = p_i r', m_i = p_i (d'/d_i), class equality
    bool ok = b.r_i == b.p_i * r_prime && b.p_i * b.k_i == m &&
              b.k_i * b.d_i == d_prime &&
              Rational(b.k_i) * rational(b.r_i, m) == Rational(r_prime);
    if (b.d_i != 0) ok = ok && d_prime % b.d_i == 0 && d_prime / b.d_i == b.k_i;
    if (!ok)
      throw Error(ErrorCode::InvariantViolation,
                  "isotropic decomposition failed for m = " + std::to_string(m));
    out.push_back(b);
  }
  return out;
}

std::vector<FiberDecomposition> isotropic_decomposition_base(
    const SurfaceGeometry& s, const Integer& r_prime, const Integer& d_prime) {
  return isotropic_decomposition_base(s.multiple_fibers, r_prime, d_prime);
}

IsotropicDecomposition canonical_isotropic_tuple(
    const Integer& r_prime, const Integer& d_prime,
    const std::vector<FiberDecomposition>& base,
    const std::vector<Integer>& n_fiber, const Integer& n) {
  if (n_fiber.size() != base.size())
    throw Error(ErrorCode::DimensionMismatch, "tuple length mismatch");
  IsotropicDecomposition d{r_prime, d_prime, base, {}, n};
  for (size_t i = 0; i < base.size(); ++i) {
    if (n_fiber[i] < 0 || n < 0)
      throw Error(ErrorCode::InvariantViolation, "tuple entries must be >= 0");
    d.l_fiber.push_back(n_fiber[i] % base[i].k_i);
    d.l += n_fiber[i] / base[i].k_i;
  }
  return d;
}

Rational tuple_multiple(const IsotropicDecomposition& dec) {
  Rational c = dec.l;
  for (size_t i = 0; i < dec.per_fiber.size(); ++i)
    c += rational(dec.l_fiber[i], dec.per_fiber[i].k_i);
  return c;
}

Integer stack_dim_isotropic(const SurfaceGeometry& s,
                            const IsotropicDecomposition& dec) {
  if (dec.per_fiber.size() != s.multiple_fibers.size() ||
      dec.l_fiber.size() != dec.per_fiber.size() || dec.l < 0)
    throw Error(ErrorCode::InvariantViolation, "malformed decomposition");
  for (size_t i = 0; i < dec.per_fiber.size(); ++i)
    if (dec.l_fiber[i] < 0 || dec.l_fiber[i] >= dec.per_fiber[i].k_i)
      throw Error(ErrorCode::InvariantViolation,
                  "tuple entry l_" + std::to_string(i + 1) + " out of range");
  return dec.l;
}

CodimAnalysis isotropic_codim_analysis(const SurfaceGeometry& s,
                                       const ChernVector& e,
                                       const Integer& r_prime,
                                       const Integer& d_prime) {
  require_coprime_rank(s, e);
  require_divisible_degree(s, e);
  if (r_prime <= 0 || gcd(r_prime, d_prime) != 1)
    throw Error(ErrorCode::InvalidWallClass,
                "isotropic wall class needs r' > 0 and gcd(r', d') = 1");
  const Integer r = e.r.get_num();
  const Integer xf = fiber_degree(s, e).get_num();
  CodimAnalysis a;
  a.delta = r_prime * xf - r * d_prime;
  if (a.delta <= 0)
    throw Error(ErrorCode::InvalidWallClass,
                "r'(xi.f) - r d' = " + to_string(a.delta) + " is not positive");
  a.defect = bogomolov_defect(s, e);
  const auto base = isotropic_decomposition_base(s, r_prime, d_prime);
  const Rational cmax = Rational(r) * a.defect / Rational(a.delta);
  const size_t n = base.size();

  std::optional<Rational> best;
  std::vector<Integer> lf(n, 0);
  while (true) {
    Rational cf = 0;
    for (size_t i = 0; i < n; ++i) cf += rational(lf[i], base[i].k_i);
    Integer l = cf == 0 ? 1 : 0;
    Rational c = cf + Rational(l);
    if (c <= cmax) {
      ++a.feasible_tuples;
      Rational codim = c * Rational(a.delta) - Rational(l);
      if (!best || codim < *best) {
        best = codim;
        a.argmin = {r_prime, d_prime, base, lf, l};
        a.base_achieves = false;
        a.fiber_achieves = false;
      }
      if (codim == *best) (l == 1 && cf == 0 ? a.base_achieves : a.fiber_achieves) = true;
    }
    size_t i = 0;
    while (i < n && lf[i] + 1 == base[i].k_i) lf[i++] = 0;
    if (i == n) break;
    ++lf[i];
  }
  if (!best)
    throw Error(ErrorCode::InvalidWallClass,
                "no Bogomolov-feasible decomposition: (0," + to_string(r_prime) +
                    "f," + to_string(d_prime) + ") does not destabilize e");
  a.codim = to_integer(*best, "isotropic crossing codimension");
  return a;
}

Codim crossing_codim_lambda(const SurfaceGeometry& s, const ChernVector& e,
                            const ChernVector& tau) {
  require_coprime_rank(s, e);
  if (!tau.is_integral() || tau.r != 0)
    throw Error(ErrorCode::InvalidWallClass, "tau must be integral of rank 0");
  if (auto c = fiber_multiple(s, tau.xi)) {
    if (!is_integer(*c))
      throw Error(ErrorCode::InvalidWallClass, "tau = (0, r'f, d') needs integral r'");
    return isotropic_codim_analysis(s, e, c->get_num(), tau.a.get_num()).codim;
  }
  if (classify_wall_class(s, tau) != WallKind::Root)
    throw Error(ErrorCode::InvalidWallClass, "tau is not a wall class");
  Integer v = to_integer(intersect(s, tau.xi, e.xi), "(D.xi)") -
              e.r.get_num() * tau.a.get_num();
  if (v < 0) return std::nullopt;
  return v + 1;
}

Classification classify_crossing(const SurfaceGeometry& s,
                                 const ChernVector& e, const ChernVector& tau) {
  auto c = fiber_multiple(s, tau.xi);
  if (tau.r != 0 || !c || !is_integer(*c) || !is_integer(tau.a))
    throw Error(ErrorCode::InvalidWallClass,
                "classify_crossing needs an isotropic class (0, r'f, d')");
  const Integer rp = c->get_num(), dp = tau.a.get_num();
  const CodimAnalysis a = isotropic_codim_analysis(s, e, rp, dp);
  Classification cl;
  if (a.codim == 0) {
    cl.kind = CrossingKind::Isomorphism;
  } else if (a.codim == 1) {
    cl.kind = CrossingKind::Codim1;
    cl.crossing_case = a.base_achieves ? "I" : "II";
    cl.projective = projective_flag(s.multiple_fibers, dp,
                                    fiber_degree(s, e).get_num(),
                                    a.argmin.per_fiber);
  } else {
    cl.kind = CrossingKind::HigherCodim;
    cl.d = a.codim;
  }
  return cl;
}

Rational lambda_threshold(const SurfaceGeometry& s, const ChernVector& e,
                          const Polarization& p) {
  return (fiber_degree(s, e) - e.r * intersect(s, s.f, p.alpha)) /
         (e.r * intersect(s, s.f, p.H));
}

std::vector<WallLambda> enumerate_walls_lambda(
    const SurfaceGeometry& s, const ChernVector& e, const Polarization& p,
    const LambdaValue& lambda0, const std::optional<LambdaValue>& lambda_min,
    const EnumerationOptions& opts) {
  require_coprime_rank(s, e);
  if (!e.is_integral())
    throw Error(ErrorCode::PreconditionViolated, "e must be integral");
  require_divisible_degree(s, e);
  const Rational thr = lambda_threshold(s, e, p);
  if (lambda0.infinite || !(lambda0.value < thr))
    throw Error(ErrorCode::PreconditionViolated,
                "lambda0 must be finite and below " + to_string(thr));
  const LambdaValue lo = lambda_min ? *lambda_min : LambdaValue::minus_infinity();
  if (!(lo < lambda0))
    throw Error(ErrorCode::PreconditionViolated, "lambda_min must be < lambda0");
  auto in_window = [&](const Rational& x) {
    return x < lambda0.value && (lo.infinite || lo.value < x);
  };

  const int scale = std::max(1, opts.bound_scale);
  const Integer r = e.r.get_num();
  const Integer xf = fiber_degree(s, e).get_num();
  const Rational fH = intersect(s, s.f, p.H);
  const Rational B = bogomolov_defect(s, e);
  std::vector<WallLambda> out;
  if (B < 0) return out;
  const Integer dim = dim_stack_lambda(s, e);

  // isotropic (0, r'f, d')
  int mmax = 1;
  for (int m : s.multiple_fibers) mmax = std::max(mmax, m);
  const Integer delta_max = floor(Rational(r) * B * mmax) * scale;
  const Rational gap = Rational(xf) / Rational(r) - lambda0.value * fH;
  for (Integer delta = 1; delta <= delta_max; ++delta) {
    const Rational rp_bound = Rational(delta) / (Rational(r) * gap) * scale;
    for (Integer rp = 1; rp < rp_bound; ++rp) {
      Integer num = rp * xf - delta;
      if (num % r != 0) continue;
      Integer dp = num / r;
      if (gcd(rp, dp) != 1) continue;
      Rational lam = rational(dp, rp) / fH;
      if (!in_window(lam)) continue;
      CodimAnalysis a;
      try {
        a = isotropic_codim_analysis(s, e, rp, dp);
      } catch (const Error& err) {
        if (err.code() == ErrorCode::InvalidWallClass) continue;
        throw;
      }
      if (a.codim > dim) continue;
      WallLambda w;
      w.kind = WallKind::Isotropic;
      w.tau = {0, DivisorClass(s.f * Rational(rp)), Rational(dp)};
      w.lambda = lambda_of(s, w.tau, p);
      w.codim = a.codim;
      w.delta = a.delta;
      w.decomposition = a.argmin;
      w.classification = classify_crossing(s, e, w.tau);
      out.push_back(w);
    }
  }

  // roots (0, D', b), D' = sign D0 + k f/mult
  for (const auto& fl : s.fiber_lattices) {
    const DivisorClass unit = s.f / Rational(fl.multiplicity);
    const Rational coef =
        (Rational(xf) / Rational(r) - lambda0.value * fH) / fl.multiplicity;
    for (const auto& root : enumerate_fiber_roots(s, fl.fiber_id)) {
      const Rational sx = intersect(s, e.xi, root.D);
      const Rational sa = intersect(s, root.D, p.alpha);
      const Rational sh = intersect(s, root.D, p.H);
      const Rational A = (sx + 1) / Rational(r) - B - sa - lambda0.value * sh;
      const Integer k0 = root.sign > 0 ? 0 : 1;
      Integer kend = std::max(k0, ceil(-A / coef));
      kend = k0 + (kend - k0 + 1) * scale;
      for (Integer k = k0; k <= kend; ++k) {
        DivisorClass D = root.D + unit * Rational(k);
        Rational xd = intersect(s, e.xi, D);
        Rational dh = intersect(s, D, p.H);
        if (dh <= 0 || !is_integer(xd)) continue;
        Integer bhi = floor(xd / Rational(r));
        Integer blo = ceil((xd + 1) / Rational(r) - B);
        blo -= (bhi - blo + 1) * (scale - 1);
        for (Integer b = blo; b <= bhi; ++b) {
          ChernVector tau{0, D, Rational(b)};
          if (bogomolov_defect(s, e - tau) < 0) continue;
          Rational lam = (Rational(b) - intersect(s, D, p.alpha)) / dh;
          if (!in_window(lam)) continue;
          WallLambda w;
          w.kind = WallKind::Root;
          w.tau = tau;
          w.lambda = lambda_of(s, tau, p);
          w.fiber_id = fl.fiber_id;
          w.root_sign = root.sign;
          w.fiber_shift = k;
          w.delta = xd.get_num() - r * b;
          w.codim = w.delta + 1;
          if (w.delta == 0) {
            w.classification.kind = CrossingKind::Isomorphism;
          } else {
            w.classification.kind = CrossingKind::HigherCodim;
            w.classification.d = w.delta + 1;
          }
          out.push_back(w);
        }
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const WallLambda& x, const WallLambda& y) {
    if (!(x.lambda == y.lambda)) return y.lambda < x.lambda;
    if (x.kind != y.kind) return x.kind == WallKind::Root;
    return tau_less(x.tau, y.tau);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const WallLambda& x, const WallLambda& y) {
                          return x.tau == y.tau;
                        }),
            out.end());
  return out;
}

FmKernelData fm_kernel(const Integer& r_prime, const Integer& d_prime,
                       const Integer& p, const Integer& q, const Integer& fH) {
  if (d_prime * p - r_prime * q != 1)
    throw Error(ErrorCode::BadDeterminant,
                "d'p - r'q = " + to_string(Integer(d_prime * p - r_prime * q)) + " != 1");
  if (fH <= 0)
    throw Error(ErrorCode::UnrepresentableSlope, "(f.H) must be positive");
  FmKernelData k;
  k.x_side = {r_prime, d_prime};
  k.p = p;
  k.q = q;
  k.fH = fH;
  k.m00 = d_prime;
  k.m01 = -r_prime;
  k.m10 = -q;
  k.m11 = p;
  // image of the point class (0,1) is (-r', p)
  if (r_prime > 0)
    k.dual_side = {r_prime, -p};
  else
    k.dual_side = {-r_prime, p};
  return k;
}

FmKernelData fm_kernel(const Integer& r_prime, const Integer& d_prime) {
  Integer s, t;
  if (ext_gcd(d_prime, -r_prime, s, t) != 1)
    throw Error(ErrorCode::NotCoprime, "gcd(r', d') != 1");
  return fm_kernel(r_prime, d_prime, s, t);
}

namespace {

LambdaValue apply(const Integer& m00, const Integer& m01, const Integer& m10,
                  const Integer& m11, const Integer& fH, const LambdaValue& lam) {
  Integer r0 = 0, d0 = 1;
  if (!lam.infinite) {
    Rational t = lam.value * Rational(fH);
    r0 = t.get_den();
    d0 = t.get_num();
  }
  Integer r1 = m00 * r0 + m01 * d0;
  Integer d1 = m10 * r0 + m11 * d0;
  if (r1 < 0) {
    r1 = -r1;
    d1 = -d1;
  }
  return from_pair(r1, d1, fH);
}

}  // namespace

LambdaValue mobius_phi(const FmKernelData& k, const LambdaValue& lam) {
  return apply(k.m00, k.m01, k.m10, k.m11, k.fH, lam);
}

LambdaValue mobius_phi_inverse(const FmKernelData& k, const LambdaValue& lam) {
  return apply(k.m11, -k.m01, -k.m10, k.m00, k.fH, lam);
}

LambdaValue mobius_psi(const FmKernelData& k, const LambdaValue& lam) {
  LambdaValue v = mobius_phi(k, lam);
  if (v.infinite) return v;
  LambdaValue w = LambdaValue::finite(-v.value);
  if (v.slope_pair) w.slope_pair = std::make_pair(v.slope_pair->first, -v.slope_pair->second);
  return w;
}

std::pair<Integer, Integer> fm_rank_degree(const FmKernelData& k,
                                           const Integer& rk,
                                           const Integer& deg) {
  if (k.m00 * k.m11 - k.m01 * k.m10 != 1)
    throw Error(ErrorCode::BadDeterminant, "kernel matrix determinant != 1");
  return {k.m00 * rk + k.m01 * deg, k.m10 * rk + k.m11 * deg};
}

std::pair<Integer, Integer> find_coprime_pair(const Integer& r,
                                              const Integer& d) {
  if (r <= 0 || gcd(r, d) != 1)
    throw Error(ErrorCode::NotCoprime, "find_coprime_pair needs r > 0, gcd(r,d) = 1");
  if (r == 1) return {0, -1};
  Integer rp;
  Integer dm = d % r;
  if (dm < 0) dm += r;
  mpz_invert(rp.get_mpz_t(), dm.get_mpz_t(), r.get_mpz_t());
  return {rp, (rp * d - 1) / r};
}

std::pair<Integer, Integer> refine_slope(const Integer& r0, const Integer& d0,
                                         const Integer& fH, const Integer& k) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
  return {r0 * fH * k, d0 * fH * k + 1};
}

ReductionCertificate reduction_decision(const Integer& r, const Integer& d,
                                        const std::vector<int>& m,
                                        const std::optional<Integer>& l,
                                        bool irreducible_fibers,
                                        const DivisorClass& f,
                                        const Rational& fH) {
  ReductionCertificate c;
  c.original_pair = find_coprime_pair(r, d);
  c.chosen_pair = c.original_pair;
  c.irreducible_fibers = irreducible_fibers;
  c.length_l = l;
  for (int mi : m) c.fiber_degree_divisible = c.fiber_degree_divisible && d % mi == 0;
  const Integer rp = c.original_pair.first, dp = c.original_pair.second;

  auto run = [&](const char* test, const Integer& factor, bool with_base) {
    bool all = true;
    std::vector<int> ms = m;
    if (with_base) ms.insert(ms.begin(), 1);
    for (int mi : ms) {
      InequalityWitness w{test, mi, r, factor * mi, r > factor * mi};
      all = all && w.holds;
      c.witnesses.push_back(w);
    }
    return all;
  };

  if (l && irreducible_fibers && run("iso", *l * rp, true)) {
    c.kind = ReductionKind::IsomorphismToHilb;
  } else if (run("codim2", rp, false)) {
    c.kind = ReductionKind::BirationalCodim2;
  } else {
    auto dual = find_coprime_pair(r, -d);
    if (dual.first != r - rp || dual.second != dp - d)
      throw Error(ErrorCode::InvariantViolation, "dual coprime pair mismatch");
    if (rp > 0 && run("dual_codim2", dual.first, false)) {
      c.kind = ReductionKind::BirationalCodim2;
      c.chosen_pair = dual;
      c.used_dual_trick = true;
    } else {
      c.kind = ReductionKind::BirationalWeaker;
      for (size_t i = 0; i < m.size(); ++i) {
        const int mi = m[i];
        if (r > rp * mi) continue;
        for (Integer k = 0; rp * mi + k * r > 0; --k) {
          Integer ri = rp * mi + k * r;
          Rational di = Rational(dp) + Rational(k) * rational(d, Integer(mi));
          WallLambda w;
          w.kind = WallKind::Isotropic;
          w.tau = {0, DivisorClass(f * rational(ri, Integer(mi))), di};
          Rational t = di * Rational(mi) / Rational(ri);
          w.lambda = LambdaValue::finite(t / fH);
          w.lambda.slope_pair = as_pair(t);
          w.codim = Integer(1);
          w.delta = 1;
          w.classification.kind = CrossingKind::Codim1;
          w.classification.crossing_case = "II";
          bool all_odd = std::all_of(m.begin(), m.end(), [](int x) { return x % 2; });
          w.classification.projective = all_odd || dp % 2 != 0 || d % 2 != 0;
          w.fiber_index = static_cast<int>(i);
          w.fiber_shift = k;
          c.obstructions.push_back(w);
        }
      }
    }
  }
  return c;
}

ReductionCertificate reduction_certificate(const SurfaceGeometry& s,
                                           const ChernVector& e) {
  require_coprime_rank(s, e);
  const Integer r = e.r.get_num();
  const Integer d = fiber_degree(s, e).get_num();
  bool divisible = true;
  for (int m : s.multiple_fibers) divisible = divisible && d % m == 0;
  std::optional<Integer> l;
  if (divisible) l = hilb_length(s, e);
  ReductionCertificate c =
      reduction_decision(r, d, s.multiple_fibers, l, !s.has_reducible_fibers(),
                         s.f, intersect(s, s.f, s.H));
  if (l) c.target = ChernVector{1, DivisorClass::Zero(s.ns_rank()), Rational(s.e_chi) - Rational(*l)};
  return c;
}

}  // namespace ellwall
