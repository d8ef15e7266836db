#pragma once

#include "ellwall/lambda_walls.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ellwall {

// NS = ZH + Zf, no multiple fibers, alpha = 0, e = (1, 0, e_chi - l),
// parameter t = lambda (f.H)

struct IntervalIndex {
  int n = 0;
  bool boundary = false;  // t = -2/n, between I_{n-1} and I_n
};

std::string to_string(const IntervalIndex& ix);

struct ChamberInterval {
  LambdaValue t1;
  Rational t2;
  int n = 0;
};

struct RaySpec {
  LambdaValue t;
  ChernVector kvector;
  ChernVector primitive;  // cleared denominators, divided by content
};

enum class Normalization { Phi, DualPhi };
const char* normalization_name(Normalization n);

enum class Ampleness { Ample, Contraction, NotAmple };
const char* ampleness_name(Ampleness a);

std::vector<Rational> walls_I0(int l);
IntervalIndex interval_index(const Rational& t);
Rational phi(const Rational& t);
std::pair<Rational, std::vector<Normalization>> normalize_to_I0(const Rational& t);
std::pair<Integer, Integer> fm_fiber_action(const Integer& p, const Integer& q);
std::vector<ChamberInterval> chambers_I0(int l);

ChernVector special_invariant(const SurfaceGeometry& s, int l);
RaySpec f_class(const SurfaceGeometry& s, const LambdaValue& t, int l);
std::pair<RaySpec, RaySpec> nef_cone(const SurfaceGeometry& s,
                                     const ChamberInterval& chamber, int l);
std::pair<RaySpec, RaySpec> movable_cone(const SurfaceGeometry& s, int l);
Ampleness is_relatively_ample(const SurfaceGeometry& s, const DivisorClass& eta,
                              const LambdaValue& lambda1, const Rational& lambda2);

// kernel with phi(t) = t/(1+t) on t = lambda (f.H): (r',d') = (1,-1), (p,q) = (-1,0)
FmKernelData special_kernel(const Integer& fH = 1);

void require_special_surface(const SurfaceGeometry& s);

}  // namespace ellwall
