#pragma once

#include "ellwall/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellwall {

using DivisorClass = QVector;

struct FiberComponentLattice {
  std::string fiber_id;
  int multiplicity = 1;
  std::vector<DivisorClass> components;  // non-identity components only
  std::vector<int> comp_multiplicities;
};

struct SurfaceGeometry {
  int g = 0;
  int e_chi = 1;
  std::vector<int> multiple_fibers;
  QMatrix gram;
  DivisorClass f;
  DivisorClass H;
  std::optional<DivisorClass> sigma;
  std::vector<FiberComponentLattice> fiber_lattices;
  std::optional<int> h11;
  bool kodaira_dim_one = false;

  int ns_rank() const { return static_cast<int>(gram.rows()); }
  int p_g() const { return e_chi + g - 1; }
  bool has_reducible_fibers() const;
};

// throws Error(Validation) naming the offending field or lattice
void validate(const SurfaceGeometry& s);

Rational intersect(const SurfaceGeometry& s, const DivisorClass& x,
                   const DivisorClass& y);

DivisorClass canonical_class(const SurfaceGeometry& s);

// class of the reduced multiple fiber f/m
DivisorClass multiple_fiber_class(const SurfaceGeometry& s, int m);

struct FiberRoot {
  DivisorClass D;
  std::vector<int> coeffs;  // b_j in the component basis
  int sign = 1;
};

// positive roots first (box order), then their negatives
std::vector<FiberRoot> enumerate_fiber_roots(const SurfaceGeometry& s,
                                             const std::string& fiber_id);

const FiberComponentLattice& find_fiber(const SurfaceGeometry& s,
                                        const std::string& fiber_id);

QMatrix component_gram(const SurfaceGeometry& s,
                       const FiberComponentLattice& fl);

}  // namespace ellwall
