#include "ellwall/hodge.hpp"

#include "ellwall/error.hpp"

#include <mutex>
#include <vector>

namespace ellwall {

HodgePolynomial HodgePolynomial::one() {
  HodgePolynomial p;
  p.h[{0, 0}] = 1;
  return p;
}

Integer HodgePolynomial::at(int p, int q) const {
  auto it = h.find({p, q});
  return it == h.end() ? Integer(0) : it->second;
}

HodgePolynomial HodgePolynomial::operator*(const HodgePolynomial& o) const {
  HodgePolynomial r;
  for (const auto& [a, x] : h)
    for (const auto& [b, y] : o.h) r.h[{a.first + b.first, a.second + b.second}] += x * y;
  for (auto it = r.h.begin(); it != r.h.end();) it = it->second == 0 ? r.h.erase(it) : ++it;
  return r;
}

Integer HodgePolynomial::euler() const {
  Integer e = 0;
  for (const auto& [pq, x] : h) e += (pq.first + pq.second) % 2 ? Integer(-x) : x;
  return e;
}

Integer HodgePolynomial::total_rank() const {
  Integer t = 0;
  for (const auto& [pq, x] : h) t += x;
  return t;
}

bool HodgePolynomial::symmetric() const {
  for (const auto& [pq, x] : h)
    if (at(pq.second, pq.first) != x) return false;
  return true;
}

bool HodgePolynomial::nonnegative() const {
  for (const auto& [pq, x] : h)
    if (x < 0) return false;
  return true;
}

int HodgePolynomial::degree() const {
  int d = 0;
  for (const auto& [pq, x] : h) d = std::max(d, pq.first + pq.second);
  return d;
}

HodgePolynomial hodge_poly_surface(const SurfaceGeometry& s) {
  if (s.e_chi == 0)
    throw Error(ErrorCode::InconsistentHodge,
                "e_chi = 0 is excluded (R^1 pi_* O_X must not be O_C)");
  const int g = s.g, pg = s.p_g();
  const int h11 = s.h11 ? *s.h11 : 10 * s.e_chi + 2 * g;
  if (h11 < 1) throw Error(ErrorCode::InconsistentHodge, "h11 must be >= 1");
  HodgePolynomial p;
  p.h[{0, 0}] = 1;
  p.h[{2, 2}] = 1;
  p.h[{1, 1}] = h11;
  if (g) {
    p.h[{1, 0}] = g;
    p.h[{0, 1}] = g;
    p.h[{2, 1}] = g;
    p.h[{1, 2}] = g;
  }
  if (pg) {
    p.h[{2, 0}] = pg;
    p.h[{0, 2}] = pg;
  }
  return p;
}

namespace {

using Series = std::vector<HodgePolynomial>;  // coefficient of t^k

void trim(HodgePolynomial& p) {
  for (auto it = p.h.begin(); it != p.h.end();) it = it->second == 0 ? p.h.erase(it) : ++it;
}

// generalized binomial coefficient C(E, j) for integer E
Integer binom(const Integer& E, int j) {
  Integer num = 1, den = 1;
  for (int i = 0; i < j; ++i) {
    num *= E - i;
    den *= i + 1;
  }
  return num / den;
}

HodgePolynomial compute_hilb(const HodgePolynomial& surface, int n) {
  Series acc(n + 1);
  acc[0] = HodgePolynomial::one();
  for (int k = 1; k <= n; ++k) {
    for (const auto& [pq, hpq] : surface.h) {
      const int sgn = (pq.first + pq.second) % 2 ? -1 : 1;
      // (1 - sgn x^{p+k-1} y^{q+k-1} t^k)^(-sgn h)
      const Integer E = -sgn * hpq;
      const int a = pq.first + k - 1, b = pq.second + k - 1;
      Series next(n + 1);
      for (int j = 0; j * k <= n; ++j) {
        Integer c = binom(E, j) * ((j % 2 == 0 || sgn < 0) ? 1 : -1);
        if (c == 0) continue;
        for (int i = 0; i + j * k <= n; ++i)
          for (const auto& [xy, v] : acc[i].h)
            next[i + j * k].h[{xy.first + j * a, xy.second + j * b}] += c * v;
      }
      for (auto& p : next) trim(p);
      acc = std::move(next);
    }
  }
  return acc[n];
}

std::mutex memo_mutex;
std::map<std::pair<std::map<std::pair<int, int>, Integer>, int>, HodgePolynomial> memo;

}  // namespace

HodgePolynomial hodge_poly_hilb(const HodgePolynomial& surface, int n) {
  if (n < 0) throw Error(ErrorCode::PreconditionViolated, "n must be >= 0");
  auto key = std::make_pair(surface.h, n);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  HodgePolynomial p = compute_hilb(surface, n);
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(key, p);
  return p;
}

HodgePolynomial hodge_poly_hilb(const SurfaceGeometry& s, int n) {
  return hodge_poly_hilb(hodge_poly_surface(s), n);
}

HodgePolynomial hodge_poly_pic0(const SurfaceGeometry& s) {
  HodgePolynomial p;
  for (int i = 0; i <= s.g; ++i)
    for (int j = 0; j <= s.g; ++j) {
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), s.g, i);
      Integer d;
      mpz_bin_uiui(d.get_mpz_t(), s.g, j);
      p.h[{i, j}] = c * d;
    }
  return p;
}

HodgePolynomial moduli_hodge(const SurfaceGeometry& s, const ChernVector& e) {
  Integer l = hilb_length(s, e);
  if (!l.fits_sint_p()) throw Error(ErrorCode::PreconditionViolated, "length too large");
  return hodge_poly_hilb(s, static_cast<int>(l.get_si())) * hodge_poly_pic0(s);
}

}  // namespace ellwall
