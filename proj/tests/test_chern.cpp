#include <doctest.h>

#include "ellwall/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <functional>

using namespace ellwall;

namespace {

bool throws_code(ErrorCode c, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == c;
  }
  return false;
}

SurfaceGeometry e2_surface() {
  SurfaceGeometry s;
  s.g = 0;
  s.e_chi = 2;
  s.gram = QMatrix(2, 2);
  s.gram << Rational(-2), Rational(1), Rational(1), Rational(0);
  s.f = qvector({0, 1});
  s.H = qvector({1, 3});
  s.sigma = qvector({1, 0});
  validate(s);
  return s;
}

}  // namespace

TEST_CASE("euler pairing examples and the ch.td oracle") {
  auto s = fx::rational_elliptic();
  auto fib = fx::cv(s, 0, {0, 1}, 0);
  CHECK(euler_pairing(s, fib, fib) == 0);
  auto o = fx::cv(s, 1, {0, 0}, 1);
  CHECK(euler_pairing(s, o, o) == 1);
  CHECK(oracle::euler_pairing(s, o, o) == 1);
  auto x = fx::cv(s, 0, {0, 1}, 1), y = fx::cv(s, 1, {0, 0}, 0);
  CHECK(euler_pairing(s, x, y) == 1);
  CHECK(oracle::euler_pairing(s, x, y) == 1);

  std::mt19937 rng(7);
  for (const auto& name : fx::surface_names()) {
    auto t = fx::load(name);
    for (int i = 0; i < 200; ++i) {
      ChernVector a{rng() % 5, fx::random_vec(rng, t.ns_rank(), -4, 4), Rational(int(rng() % 11) - 5)};
      ChernVector b{rng() % 5, fx::random_vec(rng, t.ns_rank(), -4, 4), Rational(int(rng() % 11) - 5)};
      CHECK(euler_pairing(t, a, b) == oracle::euler_pairing(t, a, b));
    }
  }
}

TEST_CASE("pairing is symmetric against fiber classes") {
  std::mt19937 rng(11);
  for (const auto& name : fx::surface_names()) {
    auto s = fx::load(name);
    std::vector<QVector> fiber_divs = {s.f};
    for (const auto& fl : s.fiber_lattices)
      for (const auto& r : enumerate_fiber_roots(s, fl.fiber_id)) fiber_divs.push_back(r.D);
    for (int i = 0; i < 100; ++i) {
      const QVector& D = fiber_divs[rng() % fiber_divs.size()];
      ChernVector u{0, D, Rational(int(rng() % 7) - 3)};
      ChernVector e{rng() % 4, fx::random_vec(rng, s.ns_rank(), -3, 3), Rational(int(rng() % 9) - 4)};
      CHECK(euler_pairing(s, u, e) == euler_pairing(s, e, u));
    }
  }
}

TEST_CASE("twisted chi and 1-dimensional slope") {
  auto s = fx::rational_elliptic();
  auto e = fx::cv(s, 0, {1, 2}, 4);
  CHECK(twisted_chi(s, e, QVector::Zero(2)) == 4);
  // alpha with (f.alpha) = 1/2
  QVector alpha = qvector({1, 0}) / Rational(2);
  CHECK(twisted_chi(s, fx::cv(s, 0, {0, 1}, 2), alpha) == rational(3, 2));
  // alpha orthogonal to D = f
  CHECK(twisted_chi(s, fx::cv(s, 0, {0, 1}, 5), qvector({0, 7})) == 5);

  Polarization p = default_polarization(s);
  CHECK(slope_1dim(s, fx::cv(s, 0, {0, 1}, 3), p) == 3);
  CHECK(slope_1dim(s, fx::cv(s, 0, {0, 2}, 3), p) == rational(3, 2));
  auto i2 = fx::load("i2");
  Polarization p2 = make_polarization(i2, qvector({1, 2, 0}), QVector::Zero(3));
  CHECK(throws_code(ErrorCode::NonPositiveDenominator, [&] { slope_1dim(i2, fx::cv(i2, 0, {0, 0, 1}, 1), p2); }));
}

TEST_CASE("polarization normalizes alpha") {
  auto s = fx::rational_elliptic();
  Polarization p = make_polarization(s, s.H, qvector({1, 0}));
  CHECK(intersect(s, p.alpha, s.f) == 0);
  CHECK(equal(p.alpha_original, qvector({1, 0})));
  // slopes of two classes compare the same way before and after
  auto a = fx::cv(s, 0, {0, 1}, 2), b = fx::cv(s, 0, {1, 2}, 1);
  Polarization raw{s.H, qvector({1, 0}), qvector({1, 0})};
  Rational before = twisted_chi(s, a, raw.alpha) / intersect(s, a.xi, s.H) -
                    twisted_chi(s, b, raw.alpha) / intersect(s, b.xi, s.H);
  Rational after = slope_1dim(s, a, p) - slope_1dim(s, b, p);
  CHECK(before == after);
}

TEST_CASE("dimension formulas") {
  auto s = fx::rational_elliptic();
  CHECK(dim_moduli_1dim(s, fx::cv(s, 0, {1, 2}, 0)) == 3);
  CHECK(dim_moduli_1dim(s, fx::cv(s, 0, {1, 0}, 0)) == -1);
  auto t = e2_surface();
  CHECK(dim_moduli_1dim(t, fx::cv(t, 0, {1, 1}, 0)) == 1);
  CHECK(throws_code(ErrorCode::PreconditionViolated, [&] { dim_moduli_1dim(s, fx::cv(s, 0, {2, 0}, 0)); }));

  CHECK(dim_stack_lambda(s, fx::cv(s, 1, {0, 0}, 1)) == -1);
  CHECK(dim_stack_lambda(s, fx::cv(s, 1, {0, 0}, 0)) == 1);
  CHECK(dim_stack_lambda(s, fx::cv(s, 2, {1, 0}, 0)) == 5);
  CHECK(throws_code(ErrorCode::GcdViolation, [&] { dim_stack_lambda(s, fx::cv(s, 2, {0, 0}, 0)); }));
}

TEST_CASE("dimension identity on random classes") {
  std::mt19937 rng(2024);
  int checked_r0 = 0, checked_r = 0;
  for (const auto& name : fx::surface_names()) {
    auto s = fx::load(name);
    for (int i = 0; i < 300; ++i) {
      QVector xi = fx::random_vec(rng, s.ns_rank(), -5, 5);
      const long a = static_cast<long>(rng() % 21) - 10;
      if (auto x = fx::with_fiber_degree(s, xi, 1)) {
        ChernVector e{0, *x, Rational(a)};
        CHECK(Rational(dim_moduli_1dim(s, e)) == -euler_pairing(s, e, e) + s.p_g());
        ++checked_r0;
      }
      const long r = 1 + static_cast<long>(rng() % 6);
      ChernVector e{Rational(r), xi, Rational(a)};
      Rational d = fiber_degree(s, e);
      if (gcd(Integer(r), d.get_num()) != 1 || !is_integer(r * intersect(s, xi, canonical_class(s)))) continue;
      CHECK(Rational(dim_stack_lambda(s, e)) == -euler_pairing(s, e, e) + s.p_g());
      ++checked_r;
    }
  }
  CHECK(checked_r0 > 300);
  CHECK(checked_r > 300);
}

TEST_CASE("bogomolov defect") {
  auto s = fx::rational_elliptic();
  CHECK(bogomolov_defect(s, fx::cv(s, 1, {0, 0}, 1)) == 0);
  for (int l = 0; l < 20; ++l) CHECK(bogomolov_defect(s, fx::cv(s, 1, {0, 0}, 1 - l)) == l);
  CHECK(bogomolov_defect(s, fx::cv(s, 2, {0, 0}, 3)) == -1);
  CHECK(throws_code(ErrorCode::ZeroRank, [&] { bogomolov_defect(s, fx::cv(s, 0, {0, 1}, 0)); }));
}

TEST_CASE("reflection") {
  auto s = fx::load("i2");
  auto u = fx::cv(s, 0, {0, 0, 1}, 0);
  auto fixed = fx::cv(s, 0, {1, 0, 0}, 0);
  CHECK(euler_pairing(s, u, fixed) == 0);
  CHECK(reflect(s, fixed, u) == fixed);
  auto e = fx::cv(s, 3, {1, 2, 1}, -1);
  auto ub = fx::cv(s, 0, {0, 0, 1}, 2);
  Rational coef = intersect(s, e.xi, ub.xi) - e.r * ub.a;
  CHECK(reflect(s, e, ub) == e + coef * ub);
  CHECK(reflect(s, reflect(s, e, ub, true), ub, true) == e);
  auto notsph = fx::cv(s, 0, {0, 1, 0}, 1);
  CHECK(throws_code(ErrorCode::NotSpherical, [&] { reflect(s, e, notsph, true); }));
  CHECK(throws_code(ErrorCode::PreconditionViolated, [&] { reflect(s, e, fx::cv(s, 1, {0, 0, 0}, 0)); }));
}

TEST_CASE("K-theory hyperplane rank against integer row reduction") {
  std::mt19937 rng(5);
  for (const auto& name : fx::surface_names()) {
    auto s = fx::load(name);
    for (int i = 0; i < 20; ++i) {
      ChernVector e{rng() % 4, fx::random_vec(rng, s.ns_rank(), -3, 3), Rational(int(rng() % 7) - 3)};
      if (e.is_zero()) continue;
      const int n = s.ns_rank();
      std::vector<Rational> row;
      for (int j = 0; j < n + 2; ++j) {
        ChernVector v{0, QVector::Zero(n), 0};
        if (j == 0) v.r = 1; else if (j == n + 1) v.a = 1; else v.xi(j - 1) = 1;
        row.push_back(oracle::euler_pairing(s, v, e));
      }
      Integer den = 1;
      for (const auto& x : row) den = den / gcd(den, x.get_den()) * x.get_den();
      std::vector<Integer> irow;
      for (const auto& x : row) irow.push_back(Rational(x * Rational(den)).get_num());
      auto basis = oracle::integer_kernel(irow);
      for (const auto& b : basis) {
        Integer dot = 0;
        for (size_t j = 0; j < b.size(); ++j) dot += b[j] * irow[j];
        CHECK(dot == 0);
      }
      CHECK(oracle::integer_rank(basis) == static_cast<int>(basis.size()));
      CHECK(ktheory_hyperplane_rank(s, e) == static_cast<int>(basis.size()));
      CHECK(ktheory_hyperplane_rank(s, e) == n + 1);
    }
  }
  auto s = fx::rational_elliptic();
  CHECK(euler_pairing(s, fx::cv(s, 0, {0, 0}, 1), fx::cv(s, 1, {0, 0}, 0)) == 1);
  CHECK(throws_code(ErrorCode::ZeroVector, [&] { ktheory_hyperplane_rank(s, fx::cv(s, 0, {0, 0}, 0)); }));
}

TEST_CASE("K-theory hyperplane rank with ns_rank 10") {
  SurfaceGeometry s;
  s.g = 0;
  s.e_chi = 1;
  s.gram = QMatrix::Zero(10, 10);
  s.gram(0, 0) = -1;
  s.gram(0, 1) = s.gram(1, 0) = 1;
  for (int i = 2; i < 10; ++i) s.gram(i, i) = -2;
  s.f = QVector::Zero(10);
  s.f(1) = 1;
  s.H = QVector::Zero(10);
  s.H(0) = 1;
  s.H(1) = 2;
  CHECK(ktheory_hyperplane_rank(s, ChernVector{1, QVector::Zero(10), 0}) == 11);
}

TEST_CASE("theta fiber classes lie on the hyperplane") {
  auto s = fx::rational_elliptic();
  auto e = fx::cv(s, 2, {1, 0}, 0);
  CHECK(theta_fiber_class(s, e, 1) == fx::cv(s, 0, {0, 2}, 1));
  CHECK(theta_fiber_class(s, e, 0).is_zero());
  CHECK(theta_fiber_class(s, fx::cv(s, 1, {0, 0}, 4), 3) == fx::cv(s, 0, {0, 3}, 0));
  std::mt19937 rng(3);
  for (const auto& name : fx::surface_names()) {
    auto t = fx::load(name);
    for (int i = 0; i < 50; ++i) {
      ChernVector x{1 + rng() % 4, fx::random_vec(rng, t.ns_rank(), -3, 3), Rational(int(rng() % 7) - 3)};
      CHECK(euler_pairing(t, theta_fiber_class(t, x, 1 + rng() % 5), x) == 0);
    }
  }
}

TEST_CASE("hilbert scheme length") {
  auto s = fx::rational_elliptic();
  for (int l = 0; l < 10; ++l) CHECK(hilb_length(s, fx::cv(s, 1, {0, 0}, 1 - l)) == l);
  CHECK(hilb_length(s, fx::cv(s, 2, {1, 0}, 0)) == 3);
  CHECK(throws_code(ErrorCode::NegativeLength, [&] { hilb_length(s, fx::cv(s, 1, {0, 0}, 2)); }));
  auto m2 = fx::load("m2");
  CHECK(hilb_length(m2, fx::cv(m2, 1, {0, 0}, 1 - 4)) == 4);
}
