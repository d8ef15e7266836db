#include <doctest.h>

#include "ellwall/error.hpp"
#include "ellwall/special.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <functional>
#include <set>

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

// every wall of (1,0,e-l) on the whole t-line: q/p with p >= 1, 1 <= -q <= l
bool is_wall(const Rational& t, int l) {
  return t < 0 && -t.get_num() <= l;
}

}  // namespace

TEST_CASE("walls in I0") {
  CHECK(walls_I0(2).empty());
  CHECK(walls_I0(3) == std::vector<Rational>{Rational(-3)});
  CHECK(walls_I0(5) == std::vector<Rational>{rational(-5, 2), Rational(-3), Rational(-4), Rational(-5)});
  for (int l = 2; l <= 12; ++l) CHECK(walls_I0(l) == oracle::walls_I0(l));
  CHECK(throws_code(ErrorCode::LengthTooSmall, [] { walls_I0(1); }));
}

TEST_CASE("walls grow with l") {
  for (int l = 2; l < 15; ++l) {
    auto a = walls_I0(l), b = walls_I0(l + 1);
    for (const auto& w : a) CHECK(std::find(b.begin(), b.end(), w) != b.end());
  }
}

TEST_CASE("interval index") {
  CHECK(interval_index(Rational(-3)).n == 0);
  CHECK(!interval_index(Rational(-3)).boundary);
  CHECK(interval_index(rational(-9, 20)).n == 4);
  auto b = interval_index(Rational(-2));
  CHECK(b.boundary);
  CHECK(to_string(b) == "Boundary(0/1)");
  CHECK(to_string(interval_index(rational(-2, 5))) == "Boundary(4/5)");
  CHECK(interval_index(rational(-3, 2)).n == 1);
  CHECK(throws_code(ErrorCode::NonNegativeInput, [] { interval_index(Rational(0)); }));
  // against the defining inequalities
  for (long p = 1; p < 40; ++p)
    for (long q = -90; q < 0; ++q) {
      Rational t = rational(q, p);
      auto ix = interval_index(t);
      if (ix.boundary) {
        CHECK(t == rational(-2, ix.n));
      } else if (ix.n == 0) {
        CHECK(t < -2);
      } else {
        CHECK(rational(-2, ix.n) < t);
        CHECK(t < rational(-2, ix.n + 1));
      }
    }
}

TEST_CASE("phi and normalization") {
  CHECK(phi(rational(-9, 20)) == rational(-9, 11));
  CHECK(phi(rational(-9, 11)) == rational(-9, 2));
  CHECK(throws_code(ErrorCode::Pole, [] { phi(Rational(-1)); }));

  auto [x, w] = normalize_to_I0(rational(-9, 20));
  CHECK(x == rational(-9, 2));
  CHECK(w == std::vector<Normalization>{Normalization::Phi, Normalization::Phi});
  auto [y, w2] = normalize_to_I0(Rational(-3));
  CHECK(y == -3);
  CHECK(w2.empty());
  auto [z, w3] = normalize_to_I0(rational(-3, 2));
  CHECK(z == -3);
  CHECK(w3 == std::vector<Normalization>{Normalization::DualPhi});
  CHECK(throws_code(ErrorCode::BoundaryInput, [] { normalize_to_I0(rational(-2, 3)); }));
}

TEST_CASE("phi maps I_n onto I_{n-2}") {
  std::mt19937 rng(21);
  int n_done = 0;
  while (n_done < 1000) {
    Integer p = 1 + rng() % 200;
    Integer q = -Integer(1 + rng() % 400);
    Rational t = rational(q, p);
    auto ix = interval_index(t);
    if (ix.boundary || ix.n < 2) continue;
    ++n_done;
    auto jx = interval_index(phi(t));
    CHECK(!jx.boundary);
    CHECK(jx.n == ix.n - 2);
    // and back
    Rational back = phi(t) / (1 - phi(t));
    CHECK(back == t);
  }
}

TEST_CASE("normalization step bound and wall preservation") {
  std::mt19937 rng(22);
  for (int i = 0; i < 2000; ++i) {
    Integer p = 1 + rng() % 60;
    Integer q = -Integer(1 + rng() % 120);
    Rational t = rational(q, p);
    auto ix = interval_index(t);
    if (ix.boundary) continue;
    auto [x, word] = normalize_to_I0(t);
    CHECK(x < -2);
    CHECK(static_cast<int>(word.size()) <= (ix.n + 1) / 2 + 1);
    for (int l = 2; l <= 12; ++l) CHECK(is_wall(x, l) == is_wall(t, l));
  }
}

TEST_CASE("transport of walls agrees with the fiber action") {
  auto s = fx::rational_elliptic();
  Polarization pol = default_polarization(s);
  for (int l = 2; l <= 12; ++l) {
    auto e = special_invariant(s, l);
    auto ws = enumerate_walls_lambda(s, e, pol, LambdaValue::finite(rational(-1, 100)));
    std::set<Rational> all;
    for (const auto& w : ws) all.insert(w.lambda.value);
    for (const auto& w : walls_I0(l)) CHECK(all.count(w) == 1);
    for (const auto& t : all) {
      CHECK(is_wall(t, l));
      auto ix = interval_index(t);
      if (ix.boundary || ix.n < 2 || ix.n > 8) continue;
      Integer p = t.get_den(), q = t.get_num();
      Rational img = phi(t);
      CHECK(img == rational(q, p + q));
      auto [p2, q2] = fm_fiber_action(p, q);
      CHECK(img == rational(q2, p2));
      CHECK(interval_index(img).n == ix.n - 2);
      CHECK(all.count(img) == 1);
      CHECK(mobius_phi(special_kernel(), LambdaValue::finite(t)).value == img);
    }
  }
}

TEST_CASE("fiber action") {
  using P = std::pair<Integer, Integer>;
  CHECK(fm_fiber_action(1, 0) == P(1, 0));
  CHECK(fm_fiber_action(1, -1) == P(0, -1));
  CHECK(fm_fiber_action(2, -5) == P(-3, -5));
  CHECK(throws_code(ErrorCode::ZeroClass, [] { fm_fiber_action(0, 0); }));
}

TEST_CASE("chambers tile the ray below -2") {
  auto c3 = chambers_I0(3);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].t1.infinite);
  CHECK(c3[0].t2 == -3);
  CHECK(c3[1].t1 == LambdaValue::finite(-3));
  CHECK(c3[1].t2 == -2);
  auto c2 = chambers_I0(2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].t1.infinite);
  CHECK(c2[0].t2 == -2);
  CHECK(chambers_I0(5).size() == 5);

  for (int l = 2; l <= 12; ++l) {
    auto ch = chambers_I0(l);
    auto ws = walls_I0(l);
    CHECK(ch.size() == ws.size() + 1);
    CHECK(ch.front().t1.infinite);
    CHECK(ch.back().t2 == -2);
    std::set<Rational> ends;
    for (size_t i = 0; i < ch.size(); ++i) {
      if (!ch[i].t1.infinite) CHECK(ch[i].t1.value < ch[i].t2);
      if (i + 1 < ch.size()) {
        CHECK(ch[i + 1].t1 == LambdaValue::finite(ch[i].t2));
        ends.insert(ch[i].t2);
      }
      for (const auto& w : ws) CHECK(!(ch[i].t1 < LambdaValue::finite(w) && w < ch[i].t2));
    }
    CHECK(ends == std::set<Rational>(ws.begin(), ws.end()));
  }
}

TEST_CASE("F_t rays lie on the hyperplane") {
  for (const char* name : {"rational_elliptic", "special_e3"}) {
    auto s = fx::load(name);
    const Rational hk = intersect(s, s.H, canonical_class(s));
    const Rational hf = intersect(s, s.H, s.f);
    for (int l = 2; l <= 8; ++l) {
      auto e = special_invariant(s, l);
      auto inf = f_class(s, LambdaValue::minus_infinity(), l);
      CHECK(inf.kvector == ChernVector{0, s.H, -hk});
      auto m2 = f_class(s, LambdaValue::finite(-2), l);
      CHECK(m2.kvector.r == -hf / 2);
      for (long p = 1; p < 8; ++p)
        for (long q = -30; q < 0; ++q) {
          auto ray = f_class(s, LambdaValue::finite(rational(q, p)), l);
          CHECK(euler_pairing(s, ray.kvector, e) == 0);
          CHECK(ray.primitive.is_integral());
          // primitive is a positive multiple of the ray
          Rational c = ray.kvector.r != 0 ? ray.primitive.r / ray.kvector.r
                                          : ray.primitive.a / ray.kvector.a;
          CHECK(c > 0);
          CHECK(ray.primitive == c * ray.kvector);
        }
    }
  }
  auto i2 = fx::load("i2");
  CHECK(throws_code(ErrorCode::PreconditionViolated, [&] { f_class(i2, LambdaValue::finite(-3), 3); }));
}

TEST_CASE("nef and movable cones") {
  auto s = fx::load("special_e3");
  auto c3 = chambers_I0(3);
  auto [a, b] = nef_cone(s, c3[1], 3);
  CHECK(a.t == LambdaValue::finite(-3));
  CHECK(b.t == LambdaValue::finite(-2));
  auto [c, d] = nef_cone(s, c3[0], 3);
  CHECK(c.t.infinite);
  CHECK(d.t == LambdaValue::finite(-3));

  auto mv = movable_cone(s, 2);
  auto nef2 = nef_cone(s, chambers_I0(2)[0], 2);
  CHECK(mv.first.kvector == nef2.first.kvector);
  CHECK(mv.second.kvector == nef2.second.kvector);
  for (int l = 2; l < 8; ++l) {
    auto m = movable_cone(s, l);
    CHECK(m.first.t.infinite);
    CHECK(m.second.t == LambdaValue::finite(-2));
    CHECK(euler_pairing(s, m.first.kvector, special_invariant(s, l)) == 0);
    CHECK(euler_pairing(s, m.second.kvector, special_invariant(s, l)) == 0);
  }
  CHECK(throws_code(ErrorCode::LengthTooSmall, [&] { movable_cone(s, 1); }));
  auto r = fx::rational_elliptic();
  CHECK(throws_code(ErrorCode::PreconditionViolated, [&] { movable_cone(r, 3); }));
}

TEST_CASE("relative ampleness") {
  auto s = fx::rational_elliptic();
  s.H = qvector({2, 3});  // (H.f) = 2
  auto lo = LambdaValue::finite(-3);
  CHECK(is_relatively_ample(s, qvector({-5, 0}), lo, -2) == Ampleness::Ample);
  CHECK(is_relatively_ample(s, qvector({-6, 0}), lo, -2) == Ampleness::Contraction);
  CHECK(is_relatively_ample(s, qvector({-4, 7}), lo, -2) == Ampleness::Contraction);
  CHECK(is_relatively_ample(s, qvector({1, 0}), lo, -2) == Ampleness::NotAmple);
  CHECK(is_relatively_ample(s, qvector({-9, 0}), LambdaValue::minus_infinity(), -2) == Ampleness::Ample);
}
