#pragma once

#include "ellwall/io.hpp"

#include <random>
#include <string>
#include <vector>

#ifndef ELLWALL_DATA_DIR
#error "ELLWALL_DATA_DIR must be defined"
#endif

namespace fx {

using namespace ellwall;

inline SurfaceGeometry load(const std::string& name) {
  return load_surface(std::string(ELLWALL_DATA_DIR) + "/" + name + ".json");
}

inline std::string path(const std::string& name) {
  return std::string(ELLWALL_DATA_DIR) + "/" + name + ".json";
}

// every consistent test geometry
inline std::vector<std::string> surface_names() {
  return {"rational_elliptic", "special_e3", "i2", "i3", "m2", "m33", "i2_m2"};
}

inline SurfaceGeometry rational_elliptic() { return load("rational_elliptic"); }

inline ChernVector cv(const SurfaceGeometry& s, long r, std::initializer_list<long> xi, long a) {
  QVector x = qvector(xi);
  if (x.size() != s.ns_rank()) throw std::runtime_error("fixture length");
  return {Rational(r), x, Rational(a)};
}

inline QVector random_vec(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  QVector v(n);
  for (int i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

// integral classes xi with (xi.f) = target; solved on the first coordinate
// that pairs nontrivially with f
inline std::optional<QVector> with_fiber_degree(const SurfaceGeometry& s, QVector xi,
                                                const Rational& target) {
  for (int i = 0; i < s.ns_rank(); ++i) {
    QVector ei = QVector::Zero(s.ns_rank());
    ei(i) = 1;
    Rational c = intersect(s, ei, s.f);
    if (c == 0) continue;
    xi(i) = 0;
    Rational need = (target - intersect(s, xi, s.f)) / c;
    if (!is_integer(need)) return std::nullopt;
    xi(i) = need;
    return xi;
  }
  return std::nullopt;
}

}  // namespace fx
