#include "imult/bipoly_gcd.hpp"

#include <map>

namespace imult {

namespace {

using YPoly = std::map<std::int64_t, UniPoly>;

YPoly to_y(const BiPoly& F) { return F.y_coefficients(); }
BiPoly from_y(const YPoly& p) { return BiPoly::from_y_coefficients(p); }

std::int64_t ydeg(const YPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }
const UniPoly& ylc(const YPoly& p) { return p.rbegin()->second; }

void add_into(YPoly& acc, std::int64_t k, const UniPoly& c) {
  auto it = acc.find(k);
  if (it == acc.end()) {
    if (!c.is_zero()) acc.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

YPoly scale(const YPoly& p, const UniPoly& c) {
  YPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, a] : p) {
    UniPoly v = a * c;
    if (!v.is_zero()) r.emplace(k, std::move(v));
  }
  return r;
}

YPoly ydiv_exact(const YPoly& p, const UniPoly& c) {
  YPoly r;
  for (const auto& [k, a] : p) r.emplace(k, exact_div(a, c));
  return r;
}

// Pseudo-remainder lc(B)^(degA - degB + 1) * A mod B.
YPoly prem(const YPoly& A, const YPoly& B) {
  std::int64_t db = ydeg(B);
  YPoly R = A;
  const UniPoly& lb = ylc(B);
  std::int64_t steps = ydeg(A) - db + 1;
  while (!R.empty() && ydeg(R) >= db) {
    std::int64_t dr = ydeg(R);
    UniPoly lr = ylc(R);
    R = scale(R, lb);
    for (const auto& [k, b] : B) add_into(R, k + dr - db, -(b * lr));
    --steps;
  }
  if (steps > 0) R = scale(R, lb.pow(static_cast<std::uint64_t>(steps)));
  return R;
}

UniPoly content(const YPoly& p) {
  UniPoly g;
  for (const auto& [k, c] : p) {
    g = gcd(g, c);
    if (g.degree() == std::int64_t{0}) break;
  }
  return g;
}

BiPoly normalize(const BiPoly& F) {
  if (F.is_zero()) return F;
  return F.scaled(F.terms().rbegin()->second.inverse());
}

}  // namespace

UniPoly content_y(const BiPoly& F) { return content(to_y(F)); }

BiPoly primitive_part_y(const BiPoly& F) {
  if (F.is_zero()) return F;
  YPoly p = to_y(F);
  return from_y(ydiv_exact(p, content(p)));
}

BiPoly exact_div(const BiPoly& A, const BiPoly& B) {
  if (B.is_zero()) throw Error(ErrorCode::DivisionByZero, "bivariate division by zero");
  YPoly R = to_y(A), b = to_y(B), Q;
  std::int64_t db = ydeg(b);
  const UniPoly& lb = ylc(b);
  while (!R.empty()) {
    std::int64_t dr = ydeg(R);
    if (dr < db) throw Error(ErrorCode::InvalidArgument, "inexact bivariate division");
    auto [q, rem] = divmod(ylc(R), lb);
    if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact bivariate division");
    add_into(Q, dr - db, q);
    for (const auto& [k, c] : b) add_into(R, k + dr - db, -(c * q));
  }
  return from_y(Q);
}

bool divides(const BiPoly& B, const BiPoly& A) {
  try {
    exact_div(A, B);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    return false;
  }
}

BiPoly gcd_bivariate(const BiPoly& F, const BiPoly& G) {
  if (F.is_zero() && G.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd of two zero polynomials");
  if (F.is_zero()) return normalize(G);
  if (G.is_zero()) return normalize(F);
  YPoly a = to_y(F), b = to_y(G);
  UniPoly ca = content(a), cb = content(b);
  UniPoly c = gcd(ca, cb);
  a = ydiv_exact(a, ca);
  b = ydiv_exact(b, cb);
  if (ydeg(a) < ydeg(b)) std::swap(a, b);
  while (true) {
    if (ydeg(b) == 0) return normalize(BiPoly::in_x(c));
    YPoly r = prem(a, b);
    if (r.empty()) break;
    a = std::move(b);
    b = ydiv_exact(r, content(r));
  }
  return normalize(from_y(scale(b, c)));
}

UniPoly resultant_y(const BiPoly& F, const BiPoly& G) {
  if (F.is_zero() || G.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  YPoly A = to_y(F), B = to_y(G);
  if (ydeg(A) < 1 || ydeg(B) < 1) throw Error(ErrorCode::InvalidArgument, "resultant needs positive y-degree");
  UniPoly g(AlgNum(1)), h(AlgNum(1));
  AlgNum s(1);
  if (ydeg(A) < ydeg(B)) {
    std::swap(A, B);
    if (ydeg(A) % 2 == 1 && ydeg(B) % 2 == 1) s = -s;
  }
  while (true) {
    std::int64_t da = ydeg(A), db = ydeg(B);
    std::int64_t delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) s = -s;
    YPoly R = prem(A, B);
    A = std::move(B);
    UniPoly divisor = g * h.pow(static_cast<std::uint64_t>(delta));
    B = ydiv_exact(R, divisor);
    g = ylc(A);
    if (delta > 0) h = exact_div(g.pow(static_cast<std::uint64_t>(delta)), h.pow(static_cast<std::uint64_t>(delta - 1)));
    if (B.empty()) return UniPoly();
    if (ydeg(B) == 0) break;
  }
  std::int64_t da = ydeg(A);
  UniPoly lb = ylc(B);
  UniPoly res = da >= 1 ? exact_div(lb.pow(static_cast<std::uint64_t>(da)), h.pow(static_cast<std::uint64_t>(da - 1)))
                        : lb;
  return res.scaled(s);
}

std::vector<std::pair<BiPoly, int>> squarefree_decomposition_y(const BiPoly& F) {
  std::vector<std::pair<BiPoly, int>> out;
  BiPoly f = primitive_part_y(F);
  if (f.is_zero() || f.degree_y().value_or(0) < 1) return out;
  BiPoly fy = f.partial_derivative(0, 1);
  BiPoly a0 = gcd_bivariate(f, fy);
  BiPoly b = exact_div(f, a0);
  BiPoly c = exact_div(fy, a0);
  BiPoly d = c - b.partial_derivative(0, 1);
  for (int i = 1; b.degree_y().value_or(0) > 0; ++i) {
    BiPoly a = gcd_bivariate(b, d);
    if (a.degree_y().value_or(0) > 0) out.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.partial_derivative(0, 1);
  }
  return out;
}

}  // namespace imult
