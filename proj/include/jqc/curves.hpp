#pragma once

// Curve families and their invariants:
//   JacobiQuartic          y^2 = x^4 + a x^2 + 1,          a^2 != 4
//   GeneralJacobiQuartic   y^2 = x^4 + a x^2 + b,          b (a^2 - 4b) != 0
//   WeierstrassLong        Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6
//   WeierstrassShort       y^2 = x^3 + A2 x^2 + A4 x + A6
//   LegendreCurve          y^2 = x (x - 1)(x - lambda),   lambda != 0, 1
//
// The quartic y^2 = b x^4 + a x^2 + 1 has no type of its own: x -> 1/x turns
// it into y^2 = x^4 + a x^2 + b, so it is represented as GeneralJacobiQuartic.
//
// j = 0 and j = 1728 never coincide: 1728 = 2^6 3^3 is a unit for p >= 5.

#include <string>
#include <string_view>

#include "jqc/error.hpp"
#include "jqc/field.hpp"

namespace jqc {

struct AffinePoint {
  FieldElement x;
  FieldElement y;

  bool operator==(const AffinePoint&) const = default;
  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

enum class JClass { Zero, J1728, Ordinary };

inline std::string_view jclass_name(JClass c) {
  switch (c) {
    case JClass::Zero: return "j=0";
    case JClass::J1728: return "j=1728";
    case JClass::Ordinary: return "ordinary";
  }
  return "?";
}

inline JClass classify_j(const FieldElement& j) {
  if (j.is_zero()) return JClass::Zero;
  if (j == 1728) return JClass::J1728;
  return JClass::Ordinary;
}

class JacobiQuartic {
 public:
  explicit JacobiQuartic(FieldElement a) : a_(std::move(a)) {
    if (a_.square() == 4) throw Error(Errc::InvalidCurve, "a^2 = 4");
  }

  const FieldElement& a() const noexcept { return a_; }
  const FieldPtr& field() const noexcept { return a_.ctx_ptr(); }

  bool contains(const AffinePoint& pt) const {
    FieldElement x2 = pt.x.square();
    return pt.y.square() == x2 * x2 + a_ * x2 + 1;
  }

  std::string to_string() const { return "jacobi:" + a_.to_string(); }

 private:
  FieldElement a_;
};

class GeneralJacobiQuartic {
 public:
  GeneralJacobiQuartic(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
    if (b_.is_zero()) throw Error(Errc::InvalidCurve, "b = 0");
    if (a_.square() == 4 * b_) throw Error(Errc::InvalidCurve, "a^2 = 4b");
  }

  /// The b = 1 member of the family.
  explicit GeneralJacobiQuartic(const JacobiQuartic& c) : GeneralJacobiQuartic(c.a(), c.a().ctx().one()) {}

  const FieldElement& a() const noexcept { return a_; }
  const FieldElement& b() const noexcept { return b_; }
  const FieldPtr& field() const noexcept { return a_.ctx_ptr(); }

  bool contains(const AffinePoint& pt) const {
    FieldElement x2 = pt.x.square();
    return pt.y.square() == x2 * x2 + a_ * x2 + b_;
  }

  std::string to_string() const { return "general:" + a_.to_string() + "," + b_.to_string(); }

 private:
  FieldElement a_;
  FieldElement b_;
};

class WeierstrassLong {
 public:
  WeierstrassLong(FieldElement a1, FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6)
      : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {}

  const FieldElement& a1() const noexcept { return a1_; }
  const FieldElement& a2() const noexcept { return a2_; }
  const FieldElement& a3() const noexcept { return a3_; }
  const FieldElement& a4() const noexcept { return a4_; }
  const FieldElement& a6() const noexcept { return a6_; }

  FieldElement b2() const { return a1_.square() + 4 * a2_; }
  FieldElement b4() const { return 2 * a4_ + a1_ * a3_; }
  FieldElement b6() const { return a3_.square() + 4 * a6_; }
  FieldElement b8() const {
    return a1_.square() * a6_ - a1_ * a3_ * a4_ + 4 * a2_ * a6_ + a2_ * a3_.square() - a4_.square();
  }

  bool contains(const AffinePoint& pt) const {
    const auto& [x, y] = pt;
    return y.square() + a1_ * x * y + a3_ * y == x * x * x + a2_ * x.square() + a4_ * x + a6_;
  }

  /// Coefficients of the curve obtained by (X, Y) -> (u^2 X + r, u^3 Y + u^2 s X + t).
  WeierstrassLong change_variables(const FieldElement& u, const FieldElement& r, const FieldElement& s,
                                   const FieldElement& t) const {
    if (u.is_zero()) throw Error(Errc::DivisionByZero, "u = 0 in change of variables");
    FieldElement u2 = u.square();
    FieldElement n1 = a1_ + 2 * s;
    FieldElement n2 = a2_ - s * a1_ + 3 * r - s.square();
    FieldElement n3 = a3_ + r * a1_ + 2 * t;
    FieldElement n4 = a4_ - s * a3_ + 2 * r * a2_ - (t + r * s) * a1_ + 3 * r.square() - 2 * s * t;
    FieldElement n6 = a6_ + r * a4_ + r.square() * a2_ + r * r * r - t * a3_ - t.square() - r * t * a1_;
    return {n1 / u, n2 / u2, n3 / (u2 * u), n4 / u2.square(), n6 / (u2 * u2 * u2)};
  }

 private:
  FieldElement a1_, a2_, a3_, a4_, a6_;
};

class WeierstrassShort {
 public:
  WeierstrassShort(FieldElement A2, FieldElement A4, FieldElement A6)
      : A2_(std::move(A2)), A4_(std::move(A4)), A6_(std::move(A6)) {}

  const FieldElement& A2() const noexcept { return A2_; }
  const FieldElement& A4() const noexcept { return A4_; }
  const FieldElement& A6() const noexcept { return A6_; }

  WeierstrassLong to_long() const {
    FieldElement z = A2_.ctx().zero();
    return {z, A2_, z, A4_, A6_};
  }

  bool contains(const AffinePoint& pt) const {
    return pt.y.square() == pt.x * pt.x * pt.x + A2_ * pt.x.square() + A4_ * pt.x + A6_;
  }

  std::string to_string() const {
    return "short:" + A2_.to_string() + "," + A4_.to_string() + "," + A6_.to_string();
  }

 private:
  FieldElement A2_, A4_, A6_;
};

class LegendreCurve {
 public:
  explicit LegendreCurve(FieldElement lambda) : lambda_(std::move(lambda)) {
    if (lambda_.is_zero()) throw Error(Errc::InvalidCurve, "lambda = 0");
    if (lambda_.is_one()) throw Error(Errc::InvalidCurve, "lambda = 1");
  }

  const FieldElement& lambda() const noexcept { return lambda_; }

  /// x(x - 1)(x - l) = x^3 - (1 + l) x^2 + l x
  WeierstrassShort to_short() const { return {-(lambda_ + 1), lambda_, lambda_.ctx().zero()}; }

  bool contains(const AffinePoint& pt) const {
    return pt.y.square() == pt.x * (pt.x - 1) * (pt.x - lambda_);
  }

  std::string to_string() const { return "legendre:" + lambda_.to_string(); }

 private:
  FieldElement lambda_;
};

inline FieldElement discriminant(const WeierstrassLong& w) {
  FieldElement b2 = w.b2(), b4 = w.b4(), b6 = w.b6(), b8 = w.b8();
  return -(b2.square() * b8) - 8 * b4 * b4 * b4 - 27 * b6.square() + 9 * b2 * b4 * b6;
}

inline FieldElement discriminant(const WeierstrassShort& w) { return discriminant(w.to_long()); }

inline FieldElement j_weierstrass(const WeierstrassLong& w) {
  FieldElement delta = discriminant(w);
  if (delta.is_zero()) throw Error(Errc::SingularCurve, "discriminant is zero");
  FieldElement c4 = w.b2().square() - 24 * w.b4();
  return c4 * c4 * c4 / delta;
}

inline FieldElement j_weierstrass(const WeierstrassShort& w) { return j_weierstrass(w.to_long()); }

/// 16 (a^2 + 12)^3 / (a^2 - 4)^2
inline FieldElement j_jacobi(const JacobiQuartic& c) {
  FieldElement a2 = c.a().square();
  FieldElement n = a2 + 12;
  return 16 * n * n * n / (a2 - 4).square();
}

/// 16 (a^2 + 12b)^3 / (b (a^2 - 4b)^2)
inline FieldElement j_general(const GeneralJacobiQuartic& c) {
  FieldElement a2 = c.a().square();
  FieldElement n = a2 + 12 * c.b();
  return 16 * n * n * n / (c.b() * (a2 - 4 * c.b()).square());
}

inline FieldElement j_legendre(const LegendreCurve& c) { return j_weierstrass(c.to_short()); }

/// Zero iff a^2 + 12b = 0; J1728 iff a (a^2 - 36b) = 0.
inline JClass special_j_class(const GeneralJacobiQuartic& c) {
  FieldElement a2 = c.a().square();
  if ((a2 + 12 * c.b()).is_zero()) return JClass::Zero;
  if ((c.a() * (a2 - 36 * c.b())).is_zero()) return JClass::J1728;
  return JClass::Ordinary;
}

}  // namespace jqc
