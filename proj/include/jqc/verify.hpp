#pragma once

// Full check of one field against every closed form: class counts for both
// families, per-square-class curve counts and class sizes, and the tie between
// the general square-b count and the Jacobi quartic count.

#include <cstdint>
#include <string>
#include <vector>

#include "jqc/census.hpp"

namespace jqc {

struct FieldVerdict {
  FieldInfo field;
  bool jacobi = false;
  bool general = false;
  bool square_b = false;     // class count, curve counts, class sizes = 3(q-1)
  bool nonsquare_b = false;  // class count, curve counts, class sizes = q-1
  bool remark = false;
  std::uint64_t jacobi_classes = 0;
  std::uint64_t general_classes = 0;

  bool ok() const { return jacobi && general && square_b && nonsquare_b && remark; }
};

namespace detail {

inline bool filtered_ok(const CensusReport& r, bool b_square) {
  const std::uint64_t q = r.field.q;
  const CurveCounts want = predict_curve_counts(q, b_square);
  const CurveCounts got{r.ordinary_curves(), r.total_curves, r.j0_curves, r.j1728_curves};
  if (!r.match || got != want) return false;
  if (r.ordinary_classes() != predict_class_counts_ordinary(q, b_square)) return false;
  const std::uint64_t size = b_square ? 3 * (q - 1) : q - 1;
  for (const auto& [s, n] : class_size_histogram(r))
    if (s != size) return false;
  return true;
}

}  // namespace detail

inline FieldVerdict verify_field(const FieldPtr& ctx, unsigned jobs = 1) {
  FieldVerdict v;
  v.field = detail::field_info(*ctx);
  const CensusReport jr = census_jacobi(ctx, jobs);
  const CensusReport gr = census_general(ctx, BFilter::All, jobs);
  v.jacobi = jr.match;
  v.general = gr.match;
  v.jacobi_classes = jr.distinct_j;
  v.general_classes = gr.distinct_j;
  v.square_b = detail::filtered_ok(census_general(ctx, BFilter::SquareB, jobs), true);
  v.nonsquare_b = detail::filtered_ok(census_general(ctx, BFilter::NonsquareB, jobs), false);
  v.remark = remark_consistency(ctx->q());
  return v;
}

/// Primes in [lo, hi] with p >= 5.
inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 5); p <= hi; ++p)
    if (detail::is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace jqc
