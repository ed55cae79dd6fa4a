#include "imult/dense_poly.hpp"

#include <algorithm>
#include <cstdlib>

namespace imult::dense {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::int64_t degree(const Poly& p) {
  std::int64_t d = static_cast<std::int64_t>(p.size()) - 1;
  while (d >= 0 && p[d].is_zero()) --d;
  return d;
}

bool is_zero(const Poly& p) { return degree(p) < 0; }

Tower tower_of(const Poly& p) {
  Tower t;
  for (const auto& x : p)
    if (!x.is_rational()) t = common_tower(t, x.tower());
  return t;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) r[i] = a[i] + b[i];
    else r[i] = i < a.size() ? a[i] : b[i];
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) r[i] = a[i] - b[i];
    else r[i] = i < a.size() ? a[i] : -b[i];
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const AlgNum& c) {
  Poly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  trim(r);
  return r;
}

Poly derivative(const Poly& p) {
  Poly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * AlgNum(static_cast<long>(i)));
  trim(r);
  return r;
}

AlgNum eval(const Poly& p, const AlgNum& z) {
  AlgNum acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
  return acc;
}

Poly taylor_shift(const Poly& p, const AlgNum& c) {
  Poly r = p;
  std::size_t n = r.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) r[j] += c * r[j + 1];
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  std::int64_t db = degree(b);
  if (db < 0) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Poly r = a;
  trim(r);
  std::int64_t dr = degree(r);
  if (dr < db) return {Poly{}, r};
  AlgNum inv = b[db].inverse();
  Poly q(dr - db + 1);
  for (std::int64_t i = dr; i >= db; --i) {
    if (r[i].is_zero()) continue;
    AlgNum c = r[i] * inv;
    q[i - db] = c;
    for (std::int64_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    r[i] = AlgNum();
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!is_zero(r)) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  return q;
}

Poly monic(const Poly& p) {
  Poly r = p;
  trim(r);
  if (r.empty() || r.back().is_one()) return r;
  AlgNum inv = r.back().inverse();
  for (auto& x : r) x *= inv;
  r.back() = AlgNum(r.back().tower(), Rep(Rational(1)));
  return r;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ExtGcd ext_gcd_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = divmod(a, m).second;
  Poly s0, s1{AlgNum(1)};
  while (!is_zero(r1)) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  trim(r0);
  AlgNum inv = r0.back().inverse();
  ExtGcd out{scale(r0, inv), scale(s0, inv)};
  out.g.back() = AlgNum(1);
  out.s = divmod(out.s, m).second;
  return out;
}

Poly squarefree_part(const Poly& p) {
  Poly g = gcd(p, derivative(p));
  if (degree(g) <= 0) return monic(p);
  return monic(exact_div(p, g));
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = monic(p);
  if (degree(f) < 1) return out;
  Poly fp = derivative(f);
  Poly a0 = gcd(f, fp);
  Poly b = exact_div(f, a0);
  Poly c = exact_div(fp, a0);
  Poly d = sub(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    Poly a = gcd(b, d);
    if (degree(a) > 0) out.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = sub(c, derivative(b));
  }
  return out;
}

bool all_rational(const Poly& p) {
  return std::all_of(p.begin(), p.end(), [](const AlgNum& x) { return x.is_rational(); });
}

namespace {

std::vector<Integer> positive_divisors(const Integer& n, std::size_t cap) {
  std::vector<Integer> small, large;
  Integer a = abs(n);
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    small.push_back(d);
    if (d * d != a) large.push_back(a / d);
    if (small.size() + large.size() > cap) return {};
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  Poly f = p;
  trim(f);
  std::vector<Rational> roots;
  if (degree(f) < 1) return roots;
  Integer den = 1;
  for (const auto& x : f) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), x.rational().get_den_mpz_t());
    den = g;
  }
  std::vector<Integer> c;
  for (const auto& x : f) c.push_back(Integer(x.rational() * den));
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  c.erase(c.begin(), c.begin() + low);
  if (c.size() < 2) return roots;
  const Integer limit("1000000000000");
  if (abs(c.front()) > limit || abs(c.back()) > limit) return roots;
  auto num = positive_divisors(c.front(), 4000);
  auto dens = positive_divisors(c.back(), 4000);
  if (num.empty() || dens.empty() || num.size() * dens.size() > 200000) return roots;
  auto is_root = [&](const Rational& r) {
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + Rational(c[i]);
    return sgn(acc) == 0;
  };
  std::vector<Rational> found;
  for (const auto& u : num)
    for (const auto& v : dens) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Rational r = make_rational(sign * u, v);
        if (is_root(r)) found.push_back(r);
      }
    }
  std::sort(found.begin(), found.end());
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

}  // namespace imult::dense
