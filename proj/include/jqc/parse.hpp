#pragma once

// Text forms used by the command-line tool.
//
// Field spec:  "p" | "p^k" | "p^k:c0,c1,...,1" | "p^k[c0,...,1]" | "(base)^2[z]"
//              A bare prime power q (e.g. "25" or "25:2,0,1") is read as p^k.
// Curve spec:  "jacobi:a" | "general:a,b" | "legendre:l" | "short:A2,A4,A6"
//              Each element is one integer (a constant) or, over F_{p^k}, k
//              comma-separated coefficients low-degree first.

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <variant>
#include <vector>

#include "jqc/curves.hpp"
#include "jqc/error.hpp"
#include "jqc/field.hpp"

namespace jqc {

using CurveSpec = std::variant<JacobiQuartic, GeneralJacobiQuartic, LegendreCurve, WeierstrassShort>;

namespace detail {

inline std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == s.npos ? s.npos : next - pos));
    if (next == s.npos) break;
    pos = next + 1;
  }
  return out;
}

/// Splits q into (p, k) when q is a prime power, else returns (q, 1).
inline std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d) continue;
    unsigned k = 0;
    std::uint64_t r = q;
    while (r % d == 0) {
      r /= d;
      ++k;
    }
    return r == 1 ? std::pair{d, k} : std::pair{q, 1u};
  }
  return {q, 1u};
}

}  // namespace detail

inline FieldPtr parse_field_spec(std::string_view spec, std::uint64_t q_cap = kDefaultQCap) {
  if (spec.empty()) throw Error(Errc::ParseError, "empty field spec");
  if (spec.front() == '(') {
    const std::size_t close = spec.rfind(")^2[");
    if (close == spec.npos || spec.back() != ']') throw Error(Errc::ParseError, "bad tower spec '" + std::string(spec) + "'");
    FieldPtr base = parse_field_spec(spec.substr(1, close - 1), q_cap);
    FieldPtr ext = FieldCtx::quadratic_extension(base);
    const std::string_view z = spec.substr(close + 4, spec.size() - close - 5);
    if (base->parse_element(z).to_string() != base->raw_to_string(base->nonresidue_raw()))
      throw Error(Errc::ParseError, "tower '" + std::string(spec) + "' does not match " + ext->descriptor());
    return ext;
  }

  std::string_view head = spec;
  std::optional<std::string_view> mod_text;
  if (auto colon = spec.find(':'); colon != spec.npos) {
    head = spec.substr(0, colon);
    mod_text = spec.substr(colon + 1);
  } else if (auto br = spec.find('['); br != spec.npos) {
    if (spec.back() != ']') throw Error(Errc::ParseError, "unterminated modulus in '" + std::string(spec) + "'");
    head = spec.substr(0, br);
    mod_text = spec.substr(br + 1, spec.size() - br - 2);
  }

  std::uint64_t p = 0;
  unsigned k = 1;
  if (auto caret = head.find('^'); caret != head.npos) {
    p = detail::parse_uint(head.substr(0, caret), "characteristic");
    k = static_cast<unsigned>(detail::parse_uint(head.substr(caret + 1), "extension degree"));
  } else {
    const std::uint64_t n = detail::parse_uint(head, "field size");
    if (n > 3 && !detail::is_prime(n)) std::tie(p, k) = detail::split_prime_power(n);
    else p = n;
  }

  std::optional<Coeffs> modulus;
  if (mod_text) {
    Coeffs m;
    for (auto tok : detail::split(*mod_text, ',')) m.push_back(detail::parse_uint(tok, "modulus coefficient"));
    modulus = std::move(m);
  }
  return FieldCtx::make(p, k, std::move(modulus), q_cap);
}

/// Parses `count` comma-separated elements, each a constant or a full
/// coefficient vector.
inline std::vector<FieldElement> parse_elements(const FieldCtx& ctx, std::string_view text, std::size_t count) {
  auto toks = detail::split(text, ',');
  std::size_t per = 0;
  if (toks.size() == count) per = 1;
  else if (toks.size() == count * ctx.width()) per = ctx.width();
  else
    throw Error(Errc::ParseError, "expected " + std::to_string(count) + " element(s) in '" + std::string(text) + "'");
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string joined;
    for (std::size_t j = 0; j < per; ++j) joined += (j ? "," : "") + std::string(toks[i * per + j]);
    out.push_back(ctx.parse_element(joined));
  }
  return out;
}

inline CurveSpec parse_curve_spec(const FieldCtx& ctx, std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == spec.npos) throw Error(Errc::ParseError, "curve spec '" + std::string(spec) + "' lacks a family prefix");
  const std::string_view family = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  if (family == "jacobi") return JacobiQuartic(parse_elements(ctx, body, 1)[0]);
  if (family == "general") {
    auto v = parse_elements(ctx, body, 2);
    return GeneralJacobiQuartic(v[0], v[1]);
  }
  if (family == "legendre") return LegendreCurve(parse_elements(ctx, body, 1)[0]);
  if (family == "short") {
    auto v = parse_elements(ctx, body, 3);
    return WeierstrassShort(v[0], v[1], v[2]);
  }
  throw Error(Errc::ParseError, "unknown curve family '" + std::string(family) + "'");
}

inline FieldElement j_invariant(const CurveSpec& c) {
  return std::visit(
      [](const auto& curve) -> FieldElement {
        using T = std::decay_t<decltype(curve)>;
        if constexpr (std::is_same_v<T, JacobiQuartic>) return j_jacobi(curve);
        else if constexpr (std::is_same_v<T, GeneralJacobiQuartic>) return j_general(curve);
        else if constexpr (std::is_same_v<T, LegendreCurve>) return j_legendre(curve);
        else return j_weierstrass(curve);
      },
      c);
}

}  // namespace jqc
