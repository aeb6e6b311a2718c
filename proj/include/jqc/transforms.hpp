#pragma once

// Birational maps from the quartic models to Weierstrass/Legendre form,
// Legendre orbits, and explicit isomorphisms between general Jacobi quartics.
//
//   E_a     : y^2 = x^4 + a x^2 + 1   <->  W_a     : v^2 = u (u - 1)(u - (2 - a)/4)
//   E_{a,b} : y^2 = x^4 + a x^2 + b   <->  W_{a,b} : v^2 = u (u^2 - 2a u + a^2 - 4b)
//
// The inverse maps are undefined on an exceptional locus (4u + a - 2 = 0 and
// u = 0 respectively); hitting it raises Errc::ExceptionalPoint.

#include <optional>
#include <vector>

#include "jqc/curves.hpp"
#include "jqc/error.hpp"
#include "jqc/field.hpp"

namespace jqc {

/// Certificate for an isomorphism between the Weierstrass models of two
/// general Jacobi quartics under (X, Y) -> (u^2 X + r, u^3 Y). Only u^2 is
/// stored; both values live in the quadratic extension of the base field.
struct IsomorphismWitness {
  FieldElement u_squared;
  FieldElement r;
};

/// The distinct values among lambda, 1/lambda, 1 - lambda, 1/(1 - lambda),
/// lambda/(lambda - 1), (lambda - 1)/lambda, in that order.
struct LegendreOrbit {
  std::vector<FieldElement> values;

  std::size_t size() const noexcept { return values.size(); }
  bool contains(const FieldElement& x) const {
    for (const auto& v : values)
      if (v == x) return true;
    return false;
  }
};

/// W_a as the Legendre curve with lambda = (2 - a)/4.
inline LegendreCurve jacobi_to_legendre_weierstrass(const JacobiQuartic& c) { return LegendreCurve((2 - c.a()) / 4); }

inline AffinePoint map_point_jacobi(const JacobiQuartic& c, const AffinePoint& pt) {
  if (!c.contains(pt)) throw Error(Errc::PointNotOnCurve, pt.to_string() + " is not on " + c.to_string());
  const auto& [x, y] = pt;
  FieldElement x2 = x.square();
  return {(x2 - y + 1) / 2, x * (2 * x2 - 2 * y + c.a()) / 4};
}

inline AffinePoint unmap_point_jacobi(const JacobiQuartic& c, const AffinePoint& pt) {
  if (!jacobi_to_legendre_weierstrass(c).contains(pt))
    throw Error(Errc::PointNotOnCurve, pt.to_string() + " is not on W_a for " + c.to_string());
  const auto& [u, v] = pt;
  FieldElement den = 4 * u + c.a() - 2;
  if (den.is_zero()) throw Error(Errc::ExceptionalPoint, "4u + a - 2 = 0 at " + pt.to_string());
  FieldElement x = 4 * v / den;
  return {x, x.square() - 2 * u + 1};
}

/// W_{a,b}: y^2 = x^3 - 2a x^2 + (a^2 - 4b) x.
inline WeierstrassShort general_to_weierstrass(const GeneralJacobiQuartic& c) {
  return {-2 * c.a(), c.a().square() - 4 * c.b(), c.a().ctx().zero()};
}

inline AffinePoint map_point_general(const GeneralJacobiQuartic& c, const AffinePoint& pt) {
  if (!c.contains(pt)) throw Error(Errc::PointNotOnCurve, pt.to_string() + " is not on " + c.to_string());
  const auto& [x, y] = pt;
  FieldElement u = 2 * x.square() - 2 * y + c.a();
  return {u, 2 * x * u};
}

inline AffinePoint unmap_point_general(const GeneralJacobiQuartic& c, const AffinePoint& pt) {
  if (!general_to_weierstrass(c).contains(pt))
    throw Error(Errc::PointNotOnCurve, pt.to_string() + " is not on W_{a,b} for " + c.to_string());
  const auto& [u, v] = pt;
  if (u.is_zero()) throw Error(Errc::ExceptionalPoint, "u = 0 at " + pt.to_string());
  FieldElement x = v / (2 * u);
  return {x, x.square() - (u - c.a()) / 2};
}

/// W_{a,b} with the x^2 term removed by x -> x + 2a/3:
/// y^2 = x^3 + (-a^2/3 - 4b) x + (2a^3/27 - 8ab/3).
inline WeierstrassShort depress_to_short(const GeneralJacobiQuartic& c) {
  const FieldElement& a = c.a();
  const FieldElement& b = c.b();
  return {a.ctx().zero(), -(a.square() / 3) - 4 * b, 2 * a * a * a / 27 - 8 * a * b / 3};
}

inline LegendreOrbit legendre_orbit(const FieldElement& lambda) {
  if (lambda.is_zero() || lambda.is_one())
    throw Error(Errc::InvalidLambda, "lambda = " + lambda.to_string() + " is degenerate");
  const FieldElement& l = lambda;
  FieldElement candidates[] = {l, l.inv(), 1 - l, (1 - l).inv(), l / (l - 1), (l - 1) / l};
  LegendreOrbit orbit;
  for (auto& v : candidates)
    if (!orbit.contains(v)) orbit.values.push_back(std::move(v));
  return orbit;
}

/// Parameters n with E_{a,n} isomorphic to E_{a,b} over the closure: b and
///   n1 = a^2 (a - 2d)^2 / (4 (a + 6d)^2),  n2 = a^2 (a + 2d)^2 / (4 (a - 6d)^2)
/// with d^2 = b taken in `ext`, the quadratic extension of the base field.
inline std::vector<FieldElement> same_j_fixed_a(const GeneralJacobiQuartic& c, const FieldPtr& ext) {
  if (special_j_class(c) != JClass::Ordinary)
    throw Error(Errc::SpecialJ, c.to_string() + " has j in {0, 1728}");
  const FieldPtr& base = c.field();
  FieldElement a = embed(base, ext, c.a());
  FieldElement b = embed(base, ext, c.b());
  // Every element of F_q is a square in F_{q^2}.
  FieldElement d = sqrt(b)->first;
  FieldElement a2 = a.square();
  std::vector<FieldElement> out{b};
  for (auto& n : {a2 * (a - 2 * d).square() / (4 * (a + 6 * d).square()),
                  a2 * (a + 2 * d).square() / (4 * (a - 6 * d).square())}) {
    bool seen = false;
    for (const auto& v : out) seen = seen || v == n;
    if (!seen) out.push_back(n);
  }
  return out;
}

inline std::vector<FieldElement> same_j_fixed_a(const FieldElement& a, const FieldElement& b, const FieldPtr& ext) {
  return same_j_fixed_a(GeneralJacobiQuartic(a, b), ext);
}

/// E_m with m = a/d for b = d^2 (d the smaller-ranked root); nullopt when b
/// is a non-square.
inline std::optional<JacobiQuartic> reduce_to_jacobi(const GeneralJacobiQuartic& c) {
  auto roots = sqrt(c.b());
  if (!roots) return std::nullopt;
  return JacobiQuartic(c.a() / roots->first);
}

/// E_{m, b m^2 / a^2}.
inline GeneralJacobiQuartic rescale_family(const GeneralJacobiQuartic& c, const FieldElement& m) {
  if (special_j_class(c) == JClass::J1728) throw Error(Errc::SpecialJ1728, c.to_string() + " has j = 1728");
  if (m.is_zero()) throw Error(Errc::ZeroScale, "m = 0");
  return GeneralJacobiQuartic(m, c.b() * m.square() / c.a().square());
}

/// Solves the change-of-variables system between W_{a,b} (source) and
/// W_{m,n} (target):
///   2m u^2             = 2a - 3r
///   (m^2 - 4n) u^4     = 3r^2 - 4ar + (a^2 - 4b)
///   r (r^2 - 2ar + a^2 - 4b) = 0
/// Holds one quadratic extension of the base field for all queries.
class IsomorphismSolver {
 public:
  explicit IsomorphismSolver(FieldPtr base)
      : base_(std::move(base)), ext_(FieldCtx::quadratic_extension(base_)) {}

  const FieldPtr& base() const noexcept { return base_; }
  const FieldPtr& extension() const noexcept { return ext_; }

  std::optional<IsomorphismWitness> solve(const GeneralJacobiQuartic& src, const GeneralJacobiQuartic& dst) const {
    const Params P = lift(src, dst);
    FieldElement d = sqrt(P.b)->first;
    std::vector<FieldElement> rs{ext_->zero()};
    for (auto r : {P.a + 2 * d, P.a - 2 * d}) {
      bool seen = false;
      for (const auto& v : rs) seen = seen || v == r;
      if (!seen) rs.push_back(std::move(r));
    }
    for (const auto& r : rs) {
      std::optional<FieldElement> u2;
      if (!P.m.is_zero()) {
        u2 = (2 * P.a - 3 * r) / (2 * P.m);
      } else {
        // 2m u^2 = 2a - 3r degenerates to r = 2a/3; u^4 then comes from the
        // second equation and u^2 is one of its square roots.
        if (!(2 * P.a - 3 * r).is_zero()) continue;
        FieldElement u4 = rhs2(P, r) / (P.m.square() - 4 * P.n);
        if (auto roots = sqrt(u4)) u2 = roots->first;
      }
      if (!u2 || u2->is_zero()) continue;
      IsomorphismWitness w{*u2, r};
      if (satisfies(src, dst, w)) return w;
    }
    return std::nullopt;
  }

  /// Substitutes a witness into all three equations.
  bool satisfies(const GeneralJacobiQuartic& src, const GeneralJacobiQuartic& dst, const IsomorphismWitness& w) const {
    const Params P = lift(src, dst);
    const FieldElement& u2 = w.u_squared;
    const FieldElement& r = w.r;
    if (u2.is_zero()) return false;
    return 2 * P.m * u2 == 2 * P.a - 3 * r && (P.m.square() - 4 * P.n) * u2.square() == rhs2(P, r) &&
           (r * (r.square() - 2 * P.a * r + P.a.square() - 4 * P.b)).is_zero();
  }

 private:
  struct Params {
    FieldElement a, b, m, n;
  };

  Params lift(const GeneralJacobiQuartic& src, const GeneralJacobiQuartic& dst) const {
    return {embed(base_, ext_, src.a()), embed(base_, ext_, src.b()), embed(base_, ext_, dst.a()),
            embed(base_, ext_, dst.b())};
  }

  static FieldElement rhs2(const Params& P, const FieldElement& r) {
    return 3 * r.square() - 4 * P.a * r + P.a.square() - 4 * P.b;
  }

  FieldPtr base_;
  FieldPtr ext_;
};

inline std::optional<IsomorphismWitness> solve_isomorphism(const GeneralJacobiQuartic& c1,
                                                           const GeneralJacobiQuartic& c2) {
  return IsomorphismSolver(c1.field()).solve(c1, c2);
}

}  // namespace jqc
