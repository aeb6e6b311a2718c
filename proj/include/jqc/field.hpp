#pragma once

// Exact arithmetic in F_q, q = p^k with p >= 5.
//
// Three representations share one element layout (a vector of `width()`
// residues mod p, low-degree first):
//   Prime      F_p, width 1.
//   Polynomial F_p[t]/(f) with f monic irreducible of degree k, width k.
//   Tower      F_q[s]/(s^2 - z) over a Polynomial base, z the base's first
//              non-residue; width 2*k, the low half is the F_q part.
// A quadratic extension of a prime field is built as a Polynomial field with
// modulus t^2 - z, so the "base element sits in the low coefficients" rule
// holds for every quadratic extension.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "jqc/error.hpp"

namespace jqc {

using Coeffs = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kDefaultQCap = 1'000'000;

class FieldCtx;
class FieldElement;
using FieldPtr = std::shared_ptr<const FieldCtx>;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Inverse of a nonzero residue by the extended Euclidean algorithm.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  if (new_r == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

inline std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(m);
}

// Dense polynomials over F_p, low-degree first, trailing zeros trimmed.
inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

inline Coeffs poly_sub(Coeffs a, const Coeffs& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<Coeffs, Coeffs> poly_divmod(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {Coeffs{}, a};
  const std::uint64_t lead_inv = invmod(b.back(), p);
  Coeffs quot(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const std::uint64_t c = mulmod(a[i], lead_inv, p);
    const std::size_t shift = i + 1 - b.size();
    quot[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

/// Monic irreducibility by trial division against every monic polynomial of
/// degree 1 .. deg(f)/2.
inline bool is_irreducible(const Coeffs& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    Coeffs g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_divmod(f, g, p).second.empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace detail

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  enum class Kind { Prime, Polynomial, Tower };

  /// Builds F_{p^k}. Without an explicit modulus the lexicographically least
  /// monic irreducible polynomial (c0 compared first) is chosen.
  static FieldPtr make(std::uint64_t p, unsigned k = 1, std::optional<Coeffs> modulus = std::nullopt,
                       std::uint64_t q_cap = kDefaultQCap) {
    if (p == 2 || p == 3) throw Error(Errc::SmallCharacteristic, "characteristic " + std::to_string(p) + " <= 3");
    if (!detail::is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(Errc::InvalidModulus, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (q > q_cap / p) throw Error(Errc::FieldTooLarge, "q = " + std::to_string(p) + "^" + std::to_string(k) +
                                                              " exceeds cap " + std::to_string(q_cap));
      q *= p;
    }

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->p_ = p;
    ctx->k_ = k;
    ctx->width_ = k;
    ctx->q_ = q;
    if (k == 1) {
      if (modulus && !(modulus->size() == 2 && (*modulus)[1] == 1))
        throw Error(Errc::InvalidModulus, "prime field modulus must be monic of degree 1");
      ctx->kind_ = Kind::Prime;
    } else {
      ctx->kind_ = Kind::Polynomial;
      if (modulus) {
        Coeffs m = *modulus;
        for (auto& c : m) c %= p;
        if (m.size() != k + 1 || m.back() != 1)
          throw Error(Errc::InvalidModulus, "modulus must be monic of degree " + std::to_string(k));
        if (!detail::is_irreducible(m, p)) throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
        ctx->modulus_ = std::move(m);
      } else {
        ctx->modulus_ = least_irreducible(p, k);
      }
    }
    ctx->finish_setup();
    return ctx;
  }

  /// F_{q^2} as a degree-2 extension of `base` by s^2 = z, z the first
  /// non-residue of `base` in enumeration order.
  static FieldPtr quadratic_extension(const FieldPtr& base) {
    if (base->kind_ == Kind::Tower) throw Error(Errc::IncompatibleTower, "only one quadratic step is supported");
    if (base->q_ > (std::uint64_t{1} << 31)) throw Error(Errc::FieldTooLarge, "q^2 does not fit the exponent range");
    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->p_ = base->p_;
    ctx->k_ = 2 * base->k_;
    ctx->width_ = 2 * base->width_;
    ctx->q_ = base->q_ * base->q_;
    ctx->base_ = base;
    if (base->kind_ == Kind::Prime) {
      ctx->kind_ = Kind::Polynomial;
      ctx->modulus_ = {(base->p_ - base->nonresidue_[0]) % base->p_, 0, 1};
    } else {
      ctx->kind_ = Kind::Tower;
    }
    ctx->finish_setup();
    return ctx;
  }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t p() const noexcept { return p_; }
  /// Degree over the prime field.
  unsigned k() const noexcept { return k_; }
  std::uint64_t q() const noexcept { return q_; }
  std::size_t width() const noexcept { return width_; }
  const Coeffs& modulus() const noexcept { return modulus_; }
  /// Set when this field was built by quadratic_extension.
  const FieldPtr& base() const noexcept { return base_; }
  const Coeffs& nonresidue_raw() const noexcept { return nonresidue_; }

  /// Field spec string: "p", "p^k:c0,...,1", or "(base)^2[z]" for a tower.
  std::string descriptor() const {
    switch (kind_) {
      case Kind::Prime: return std::to_string(p_);
      case Kind::Polynomial: {
        std::string s = std::to_string(p_) + "^" + std::to_string(k_) + ":";
        for (std::size_t i = 0; i < modulus_.size(); ++i) s += (i ? "," : "") + std::to_string(modulus_[i]);
        return s;
      }
      case Kind::Tower: return "(" + base_->descriptor() + ")^2[" + base_->raw_to_string(base_->nonresidue_) + "]";
    }
    return {};
  }

  bool same_as(const FieldCtx& o) const {
    if (this == &o) return true;
    if (p_ != o.p_ || k_ != o.k_ || kind_ != o.kind_ || modulus_ != o.modulus_) return false;
    if (kind_ == Kind::Tower) return base_->same_as(*o.base_);
    return true;
  }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  /// Reduces each coefficient mod p; the vector must have width() entries.
  FieldElement from_coeffs(Coeffs c) const;
  FieldElement element_at(std::uint64_t rank) const;
  /// Comma-separated coefficients (width() of them) or a single integer.
  FieldElement parse_element(std::string_view text) const;
  /// All q elements in enumeration order.
  std::vector<FieldElement> elements() const;

  std::uint64_t rank_of(std::span<const std::uint64_t> c) const {
    std::uint64_t r = 0;
    for (std::uint64_t v : c) r = r * p_ + v;
    return r;
  }

  Coeffs raw_at(std::uint64_t rank) const {
    Coeffs c(width_, 0);
    for (std::size_t i = width_; i-- > 0;) {
      c[i] = rank % p_;
      rank /= p_;
    }
    return c;
  }

  std::string raw_to_string(std::span<const std::uint64_t> c) const {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s;
  }

  // Arithmetic kernel on raw coefficient vectors of length width().

  Coeffs add(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const {
    Coeffs r(width_);
    for (std::size_t i = 0; i < width_; ++i) {
      std::uint64_t s = a[i] + b[i];
      r[i] = s >= p_ ? s - p_ : s;
    }
    return r;
  }

  Coeffs sub(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const {
    Coeffs r(width_);
    for (std::size_t i = 0; i < width_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
    return r;
  }

  Coeffs neg(std::span<const std::uint64_t> a) const {
    Coeffs r(width_);
    for (std::size_t i = 0; i < width_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
    return r;
  }

  Coeffs mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const {
    switch (kind_) {
      case Kind::Prime: return {detail::mulmod(a[0], b[0], p_)};
      case Kind::Polynomial: {
        std::vector<unsigned __int128> acc(2 * width_ - 1, 0);
        for (std::size_t i = 0; i < width_; ++i) {
          if (a[i] == 0) continue;
          for (std::size_t j = 0; j < width_; ++j)
            acc[i + j] = (acc[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p_;
        }
        for (std::size_t i = acc.size(); i-- > width_;) {
          const auto c = static_cast<std::uint64_t>(acc[i]);
          if (c == 0) continue;
          for (std::size_t j = 0; j < width_; ++j)
            acc[i - width_ + j] = (acc[i - width_ + j] + static_cast<unsigned __int128>(c) * (p_ - modulus_[j])) % p_;
        }
        Coeffs r(width_);
        for (std::size_t i = 0; i < width_; ++i) r[i] = static_cast<std::uint64_t>(acc[i]);
        return r;
      }
      case Kind::Tower: {
        // (x0 + x1 s)(y0 + y1 s) = x0 y0 + z x1 y1 + (x0 y1 + x1 y0) s
        const std::size_t h = width_ / 2;
        auto x0 = a.first(h), x1 = a.subspan(h), y0 = b.first(h), y1 = b.subspan(h);
        const FieldCtx& B = *base_;
        Coeffs lo = B.add(B.mul(x0, y0), B.mul(B.nonresidue_, B.mul(x1, y1)));
        Coeffs hi = B.add(B.mul(x0, y1), B.mul(x1, y0));
        lo.insert(lo.end(), hi.begin(), hi.end());
        return lo;
      }
    }
    return {};
  }

  Coeffs inv(std::span<const std::uint64_t> a) const {
    if (is_zero(a)) throw Error(Errc::DivisionByZero, "inverse of zero");
    switch (kind_) {
      case Kind::Prime: return {detail::invmod(a[0], p_)};
      case Kind::Polynomial: {
        // Extended Euclid in F_p[t] on (modulus, a).
        Coeffs r0 = modulus_, r1(a.begin(), a.end());
        detail::trim(r1);
        Coeffs t0, t1{1};
        while (!r1.empty()) {
          auto [quot, rem] = detail::poly_divmod(r0, r1, p_);
          Coeffs t2 = detail::poly_sub(t0, detail::poly_mul(quot, t1, p_), p_);
          r0 = std::move(r1);
          r1 = std::move(rem);
          t0 = std::move(t1);
          t1 = std::move(t2);
        }
        // r0 is a nonzero constant since the modulus is irreducible.
        const std::uint64_t c = detail::invmod(r0[0], p_);
        Coeffs r(width_, 0);
        for (std::size_t i = 0; i < t0.size(); ++i) r[i] = detail::mulmod(t0[i], c, p_);
        return r;
      }
      case Kind::Tower: {
        // 1/(x0 + x1 s) = (x0 - x1 s) / (x0^2 - z x1^2)
        const std::size_t h = width_ / 2;
        auto x0 = a.first(h), x1 = a.subspan(h);
        const FieldCtx& B = *base_;
        Coeffs norm = B.sub(B.mul(x0, x0), B.mul(B.nonresidue_, B.mul(x1, x1)));
        Coeffs ninv = B.inv(norm);
        Coeffs lo = B.mul(x0, ninv);
        Coeffs hi = B.neg(B.mul(x1, ninv));
        lo.insert(lo.end(), hi.begin(), hi.end());
        return lo;
      }
    }
    return {};
  }

  Coeffs pow(std::span<const std::uint64_t> a, std::uint64_t e) const {
    Coeffs r = one_raw();
    Coeffs b(a.begin(), a.end());
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  static bool is_zero(std::span<const std::uint64_t> a) {
    return std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; });
  }

  Coeffs one_raw() const {
    Coeffs r(width_, 0);
    r[0] = 1;
    return r;
  }

  /// 0, 1 or -1 via Euler's criterion x^((q-1)/2).
  int character_raw(std::span<const std::uint64_t> a) const {
    if (is_zero(a)) return 0;
    return pow(a, (q_ - 1) / 2) == one_raw() ? 1 : -1;
  }

  /// One square root of a (any), or nullopt when a is a non-square.
  std::optional<Coeffs> sqrt_raw(std::span<const std::uint64_t> a) const {
    if (is_zero(a)) return Coeffs(width_, 0);
    if (q_ < 64) {
      for (std::uint64_t r = 0; r < q_; ++r) {
        Coeffs x = raw_at(r);
        if (std::ranges::equal(mul(x, x), a)) return x;
      }
      return std::nullopt;
    }
    if (character_raw(a) != 1) return std::nullopt;
    // Tonelli-Shanks with q - 1 = 2^s * t.
    unsigned m = two_adicity_;
    Coeffs c = pow(nonresidue_, odd_part_);
    Coeffs t = pow(a, odd_part_);
    Coeffs r = pow(a, (odd_part_ + 1) / 2);
    const Coeffs one = one_raw();
    while (t != one) {
      unsigned i = 0;
      Coeffs t2 = t;
      while (t2 != one) {
        t2 = mul(t2, t2);
        ++i;
      }
      Coeffs b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return r;
  }

 private:
  FieldCtx() = default;

  static Coeffs least_irreducible(std::uint64_t p, unsigned k) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t rank = 0; rank < count; ++rank) {
      Coeffs f(k + 1, 0);
      std::uint64_t r = rank;
      for (std::size_t i = k; i-- > 0;) {
        f[i] = r % p;
        r /= p;
      }
      f[k] = 1;
      if (f[0] != 0 && detail::is_irreducible(f, p)) return f;
    }
    throw Error(Errc::ReducibleModulus, "no irreducible polynomial found");
  }

  void finish_setup() {
    std::uint64_t t = q_ - 1;
    unsigned s = 0;
    while ((t & 1) == 0) {
      t >>= 1;
      ++s;
    }
    two_adicity_ = s;
    odd_part_ = t;
    for (std::uint64_t r = 1; r < q_; ++r) {
      Coeffs x = raw_at(r);
      if (character_raw(x) == -1) {
        nonresidue_ = std::move(x);
        return;
      }
    }
  }

  Kind kind_ = Kind::Prime;
  std::uint64_t p_ = 0;
  unsigned k_ = 1;
  std::size_t width_ = 1;
  std::uint64_t q_ = 0;
  Coeffs modulus_;
  FieldPtr base_;
  Coeffs nonresidue_;
  unsigned two_adicity_ = 0;
  std::uint64_t odd_part_ = 0;
};

/// Canonical element of a FieldCtx: every coefficient in [0, p).
class FieldElement {
 public:
  FieldElement(FieldPtr ctx, Coeffs c) : ctx_(std::move(ctx)), c_(std::move(c)) {}

  const FieldCtx& ctx() const noexcept { return *ctx_; }
  const FieldPtr& ctx_ptr() const noexcept { return ctx_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return c_; }

  bool is_zero() const { return FieldCtx::is_zero(c_); }
  bool is_one() const { return c_ == ctx_->one_raw(); }
  std::uint64_t rank() const { return ctx_->rank_of(c_); }

  FieldElement operator+(const FieldElement& o) const { return {ctx_, ctx_->add(c_, checked(o))}; }
  FieldElement operator-(const FieldElement& o) const { return {ctx_, ctx_->sub(c_, checked(o))}; }
  FieldElement operator*(const FieldElement& o) const { return {ctx_, ctx_->mul(c_, checked(o))}; }
  FieldElement operator/(const FieldElement& o) const {
    return {ctx_, ctx_->mul(c_, ctx_->inv(checked(o)))};
  }
  FieldElement operator-() const { return {ctx_, ctx_->neg(c_)}; }

  FieldElement operator+(std::int64_t v) const { return *this + ctx_->from_int(v); }
  FieldElement operator-(std::int64_t v) const { return *this - ctx_->from_int(v); }
  FieldElement operator*(std::int64_t v) const { return *this * ctx_->from_int(v); }
  FieldElement operator/(std::int64_t v) const { return *this / ctx_->from_int(v); }
  friend FieldElement operator+(std::int64_t v, const FieldElement& x) { return x + v; }
  friend FieldElement operator-(std::int64_t v, const FieldElement& x) { return x.ctx_->from_int(v) - x; }
  friend FieldElement operator*(std::int64_t v, const FieldElement& x) { return x * v; }
  friend FieldElement operator/(std::int64_t v, const FieldElement& x) { return x.ctx_->from_int(v) / x; }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inv() const { return {ctx_, ctx_->inv(c_)}; }
  FieldElement pow(std::uint64_t e) const { return {ctx_, ctx_->pow(c_, e)}; }
  FieldElement square() const { return *this * *this; }

  bool operator==(const FieldElement& o) const { return std::ranges::equal(c_, checked(o)); }
  bool operator==(std::int64_t v) const { return *this == ctx_->from_int(v); }

  std::string to_string() const { return ctx_->raw_to_string(c_); }

 private:
  std::span<const std::uint64_t> checked(const FieldElement& o) const {
    if (ctx_ != o.ctx_ && !ctx_->same_as(*o.ctx_))
      throw Error(Errc::MixedFields, "operands from " + ctx_->descriptor() + " and " + o.ctx_->descriptor());
    return o.c_;
  }

  FieldPtr ctx_;
  Coeffs c_;
};

inline FieldElement FieldCtx::zero() const { return {shared_from_this(), Coeffs(width_, 0)}; }
inline FieldElement FieldCtx::one() const { return {shared_from_this(), one_raw()}; }

inline FieldElement FieldCtx::from_int(std::int64_t v) const {
  Coeffs c(width_, 0);
  c[0] = detail::reduce_signed(v, p_);
  return {shared_from_this(), std::move(c)};
}

inline FieldElement FieldCtx::from_coeffs(Coeffs c) const {
  if (c.size() != width_)
    throw Error(Errc::ParseError, "expected " + std::to_string(width_) + " coefficients, got " + std::to_string(c.size()));
  for (auto& v : c) v %= p_;
  return {shared_from_this(), std::move(c)};
}

inline FieldElement FieldCtx::element_at(std::uint64_t rank) const { return {shared_from_this(), raw_at(rank % q_)}; }

inline FieldElement FieldCtx::parse_element(std::string_view text) const {
  std::vector<std::int64_t> vals;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(Errc::ParseError, "bad field element '" + std::string(text) + "'");
    vals.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (vals.size() == 1) return from_int(vals[0]);
  if (vals.size() != width_)
    throw Error(Errc::ParseError, "element '" + std::string(text) + "' needs " + std::to_string(width_) + " coefficients");
  Coeffs c(width_);
  for (std::size_t i = 0; i < width_; ++i) c[i] = detail::reduce_signed(vals[i], p_);
  return {shared_from_this(), std::move(c)};
}

inline std::vector<FieldElement> FieldCtx::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t r = 0; r < q_; ++r) out.push_back(element_at(r));
  return out;
}

inline FieldPtr field_new(std::uint64_t p, unsigned k = 1, std::optional<Coeffs> modulus = std::nullopt,
                          std::uint64_t q_cap = kDefaultQCap) {
  return FieldCtx::make(p, k, std::move(modulus), q_cap);
}

inline std::vector<FieldElement> enumerate(const FieldCtx& ctx) { return ctx.elements(); }

inline int quadratic_character(const FieldElement& x) { return x.ctx().character_raw(x.coeffs()); }

inline bool is_square(const FieldElement& x) { return quadratic_character(x) >= 0; }

/// {s, -s} with s^2 = x, smaller enumeration rank first; nullopt for a non-square.
inline std::optional<std::pair<FieldElement, FieldElement>> sqrt(const FieldElement& x) {
  auto root = x.ctx().sqrt_raw(x.coeffs());
  if (!root) return std::nullopt;
  FieldElement s(x.ctx_ptr(), std::move(*root));
  FieldElement t = -s;
  if (t.rank() < s.rank()) std::swap(s, t);
  return std::make_pair(std::move(s), std::move(t));
}

/// Inclusion of `small` into its quadratic extension `big`.
inline FieldElement embed(const FieldPtr& small, const FieldPtr& big, const FieldElement& x) {
  if (!big->base() || !big->base()->same_as(*small))
    throw Error(Errc::IncompatibleTower, big->descriptor() + " is not a quadratic extension of " + small->descriptor());
  if (!x.ctx().same_as(*small)) throw Error(Errc::MixedFields, "element is not in " + small->descriptor());
  Coeffs c(big->width(), 0);
  std::ranges::copy(x.coeffs(), c.begin());
  return {big, std::move(c)};
}

/// The preimage of x under embed, when x lies in the base field.
inline std::optional<FieldElement> restrict_to_base(const FieldElement& x) {
  const FieldPtr& base = x.ctx().base();
  if (!base) throw Error(Errc::IncompatibleTower, x.ctx().descriptor() + " has no base field");
  auto c = x.coeffs();
  const std::size_t h = base->width();
  if (!FieldCtx::is_zero(c.subspan(h))) return std::nullopt;
  return FieldElement(base, Coeffs(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(h)));
}

}  // namespace jqc

template <>
struct std::hash<jqc::FieldElement> {
  std::size_t operator()(const jqc::FieldElement& x) const noexcept { return std::hash<std::uint64_t>{}(x.rank()); }
};
