#pragma once

#include "ellwall/walls1d.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ellwall {

struct LambdaValue {
  bool infinite = false;  // -infinity on the lambda line, the point at infinity in P^1
  Rational value;
  std::optional<std::pair<Integer, Integer>> slope_pair;  // (r0, d0)

  static LambdaValue minus_infinity();
  static LambdaValue finite(const Rational& v);
  bool operator<(const LambdaValue& o) const;
  bool operator==(const LambdaValue& o) const;
};

std::string to_string(const LambdaValue& v);

enum class CrossingKind { Isomorphism, Codim1, HigherCodim, Empty };
const char* crossing_name(CrossingKind k);

struct Classification {
  CrossingKind kind = CrossingKind::Isomorphism;
  std::string crossing_case = "I";  // Codim1 only: I or II
  bool projective = false;   // Codim1 only
  Integer d = 0;             // HigherCodim only
};

struct FiberDecomposition {
  int m = 1;
  Integer r_i, d_i, p_i;
  Integer k_i;  // (0,r'f,d') = k_i (0,r_i f_i,d_i); equals d'/d_i when d_i != 0
};

struct IsotropicDecomposition {
  Integer r_prime, d_prime;
  std::vector<FiberDecomposition> per_fiber;
  std::vector<Integer> l_fiber;
  Integer l = 0;
};

struct WallLambda {
  ChernVector tau;
  WallKind kind = WallKind::Isotropic;
  LambdaValue lambda;
  Codim codim;
  Classification classification;
  // isotropic
  std::optional<IsotropicDecomposition> decomposition;
  Integer delta = 0;  // r'(xi.f) - r d', or (D.xi) - r b for roots
  // root
  std::string fiber_id;
  int root_sign = 1;
  Integer fiber_shift = 0;
  // obstruction bookkeeping (reduction certificates)
  std::optional<int> fiber_index;
};

struct FmKernelData {
  std::pair<Integer, Integer> x_side;     // (r', d'): kernel fiber class
  std::pair<Integer, Integer> dual_side;  // image of the point class, positive rank
  Integer p, q;
  Integer fH = 1;
  // [[d', -r'], [-q, p]]
  Integer m00, m01, m10, m11;
};

FmKernelData fm_kernel(const Integer& r_prime, const Integer& d_prime,
                       const Integer& p, const Integer& q,
                       const Integer& fH = 1);
// kernel for (r', d') with the (p, q) completion chosen by extended Euclid
FmKernelData fm_kernel(const Integer& r_prime, const Integer& d_prime);

LambdaValue lambda_of(const SurfaceGeometry& s, const ChernVector& tau,
                      const Polarization& p);

std::vector<FiberDecomposition> isotropic_decomposition_base(
    const SurfaceGeometry& s, const Integer& r_prime, const Integer& d_prime);
std::vector<FiberDecomposition> isotropic_decomposition_base(
    const std::vector<int>& multiplicities, const Integer& r_prime,
    const Integer& d_prime);

// reduce arbitrary nonnegative multiples n_i of the fiber classes and n of
// tau to the canonical tuple 0 <= l_i < k_i
IsotropicDecomposition canonical_isotropic_tuple(
    const Integer& r_prime, const Integer& d_prime,
    const std::vector<FiberDecomposition>& base,
    const std::vector<Integer>& n_fiber, const Integer& n);

// total class of the tuple as a multiple of (0, r'f, d')
Rational tuple_multiple(const IsotropicDecomposition& dec);

Integer stack_dim_isotropic(const SurfaceGeometry& s,
                            const IsotropicDecomposition& dec);

struct CodimAnalysis {
  Integer delta;
  Rational defect;
  Integer codim;
  IsotropicDecomposition argmin;
  bool base_achieves = false;   // tuple l = 1 attains the minimum
  bool fiber_achieves = false;  // some tuple with l = 0 attains the minimum
  long feasible_tuples = 0;
};

// throws InvalidWallClass when tau does not define a wall for e
CodimAnalysis isotropic_codim_analysis(const SurfaceGeometry& s,
                                       const ChernVector& e,
                                       const Integer& r_prime,
                                       const Integer& d_prime);

Codim crossing_codim_lambda(const SurfaceGeometry& s, const ChernVector& e,
                            const ChernVector& tau);

Classification classify_crossing(const SurfaceGeometry& s,
                                 const ChernVector& e, const ChernVector& tau);

struct EnumerationOptions {
  int bound_scale = 1;  // multiplies every search bound (saturation checks)
};

std::vector<WallLambda> enumerate_walls_lambda(
    const SurfaceGeometry& s, const ChernVector& e, const Polarization& p,
    const LambdaValue& lambda0,
    const std::optional<LambdaValue>& lambda_min = std::nullopt,
    const EnumerationOptions& opts = {});

// upper end of the lambda line for e: (xi.f - r(alpha.f)) / (r(f.H))
Rational lambda_threshold(const SurfaceGeometry& s, const ChernVector& e,
                          const Polarization& p);

LambdaValue mobius_phi(const FmKernelData& k, const LambdaValue& lam);
LambdaValue mobius_phi_inverse(const FmKernelData& k, const LambdaValue& lam);
LambdaValue mobius_psi(const FmKernelData& k, const LambdaValue& lam);

std::pair<Integer, Integer> fm_rank_degree(const FmKernelData& k,
                                           const Integer& rk,
                                           const Integer& deg);

std::pair<Integer, Integer> find_coprime_pair(const Integer& r,
                                              const Integer& d);

std::pair<Integer, Integer> refine_slope(const Integer& r0, const Integer& d0,
                                         const Integer& fH, const Integer& k);

enum class ReductionKind { IsomorphismToHilb, BirationalCodim2, BirationalWeaker };
const char* reduction_name(ReductionKind k);

struct InequalityWitness {
  std::string test;  // "iso", "codim2", "dual_codim2"
  int m = 1;
  Integer lhs, rhs;
  bool holds = false;
};

struct ReductionCertificate {
  ReductionKind kind = ReductionKind::BirationalWeaker;
  std::optional<ChernVector> target;  // (1,0,a'), absent when l is undefined
  std::optional<Integer> length_l;
  std::pair<Integer, Integer> chosen_pair;
  std::pair<Integer, Integer> original_pair;
  bool used_dual_trick = false;
  bool fiber_degree_divisible = true;  // m_i | (xi.f) for all i
  bool irreducible_fibers = true;
  std::vector<InequalityWitness> witnesses;
  std::vector<WallLambda> obstructions;
};

// arithmetic core: rank r, fiber degree d, multiplicities, optional length
// f and fH locate the obstruction classes (0, (r_i/m_i) f, d_i)
ReductionCertificate reduction_decision(const Integer& r, const Integer& d,
                                        const std::vector<int>& m,
                                        const std::optional<Integer>& l,
                                        bool irreducible_fibers,
                                        const DivisorClass& f,
                                        const Rational& fH);

ReductionCertificate reduction_certificate(const SurfaceGeometry& s,
                                           const ChernVector& e);

}  // namespace ellwall
