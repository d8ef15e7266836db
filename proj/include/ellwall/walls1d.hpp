#pragma once

#include "ellwall/chern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ellwall {

enum class WallKind { Root, Isotropic };

enum class MoveTag {
  ReflectionIso,
  DoubleReflectionBirational,
  FmIso,
  FmDetTwistIso,
  DualBirational,
  IdentityOffCodim2,
};

const char* kind_name(WallKind k);
const char* move_name(MoveTag t);

struct MoveDescriptor {
  MoveTag tag = MoveTag::ReflectionIso;
  std::optional<Integer> codim;  // DualBirational only
  ChernVector target;
  std::vector<ChernVector> chain;  // invariants visited, DoubleReflection only
};

// nullopt = Empty (stable locus on the wall is empty)
using Codim = std::optional<Integer>;

struct Wall1D {
  WallKind kind = WallKind::Root;
  ChernVector u;
  Codim codim;
  bool divisorial = false;
  MoveDescriptor move;
  std::string locus;
  // root families
  std::string fiber_id;
  int root_sign = 1;
  std::vector<int> root_coeffs;
  Integer fiber_shift = 0;
  // (xi.D) for root, r for isotropic
  Integer pairing = 0;
  // set when a polarization was supplied
  std::optional<std::string> side;
};

enum class Side { Below, On, Above };
const char* side_name(Side s);

WallKind classify_wall_class(const SurfaceGeometry& s, const ChernVector& u);

std::vector<Wall1D> enumerate_wall_classes_1d(
    const SurfaceGeometry& s, const ChernVector& e,
    const std::optional<Polarization>& p = std::nullopt);

Side wall_side(const SurfaceGeometry& s, const ChernVector& e,
               const ChernVector& u, const Polarization& p);

Codim crossing_codim_1d(const SurfaceGeometry& s, const ChernVector& e,
                        const ChernVector& u);

bool is_divisorial_1d(const SurfaceGeometry& s, const ChernVector& e,
                      const ChernVector& u);

MoveDescriptor birational_move_1d(const SurfaceGeometry& s,
                                  const ChernVector& e, const ChernVector& u);

}  // namespace ellwall
