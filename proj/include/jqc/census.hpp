#pragma once

// Exhaustive enumeration of the quartic families over F_q, grouped by
// j-invariant, together with the closed-form class and curve counts they are
// checked against.
//
// Class identity over the algebraic closure is j-equality, so the census
// never searches for isomorphisms: it is a single O(q^2) pass over (a, b).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include "jqc/curves.hpp"
#include "jqc/error.hpp"
#include "jqc/field.hpp"

namespace jqc {

enum class Family { Jacobi, General, GeneralSquareB, GeneralNonsquareB };
enum class BFilter { All, SquareB, NonsquareB };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Jacobi: return "jacobi";
    case Family::General: return "general";
    case Family::GeneralSquareB: return "general-square-b";
    case Family::GeneralNonsquareB: return "general-nonsquare-b";
  }
  return "?";
}

/// Validates that q = p^k with p >= 5 prime and returns q mod 12.
inline unsigned check_cardinality(std::uint64_t q) {
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint64_t r = q;
  while (p > 1 && r % p == 0) r /= p;
  if (q < 5 || p < 5 || r != 1) throw Error(Errc::BadCardinality, std::to_string(q) + " is not a power of a prime >= 5");
  return static_cast<unsigned>(q % 12);
}

/// True for q = 1, 7 (mod 12): F_q* has an element of order 3.
inline bool has_cube_roots_of_unity(std::uint64_t q) {
  const unsigned r = check_cardinality(q);
  return r == 1 || r == 7;
}

/// Distinct j-invariants of y^2 = x^4 + a x^2 + 1.
inline std::uint64_t predict_N_jacobi(std::uint64_t q) {
  return has_cube_roots_of_unity(q) ? (q + 5) / 6 : (q + 1) / 6;
}

/// Distinct j-invariants of y^2 = x^4 + a x^2 + b.
inline std::uint64_t predict_N_general(std::uint64_t q) {
  return has_cube_roots_of_unity(q) ? (4 * q + 2) / 6 : (4 * q - 2) / 6;
}

struct CurveCounts {
  std::uint64_t ordinary = 0;
  std::uint64_t total = 0;
  std::uint64_t j0 = 0;
  std::uint64_t j1728 = 0;

  bool operator==(const CurveCounts&) const = default;
};

/// Curve counts for the valid (a, b) with b restricted to one square class.
///
/// For non-square b the j = 1728 count is (q - 1)/2: the curves with a = 0.
/// It is what remains of the total after the ordinary and j = 0 counts.
inline CurveCounts predict_curve_counts(std::uint64_t q, bool b_square) {
  const bool cube = has_cube_roots_of_unity(q);
  const std::uint64_t h = (q - 1) / 2;
  CurveCounts c;
  if (b_square) {
    c.total = (q - 1) * (q - 2) / 2;
    c.j0 = cube ? q - 1 : 0;
    c.j1728 = 3 * h;
    c.ordinary = cube ? (q - 1) * (q - 7) / 2 : (q - 1) * (q - 5) / 2;
  } else {
    c.total = q * (q - 1) / 2;
    c.j0 = cube ? 0 : q - 1;
    c.j1728 = h;
    c.ordinary = cube ? (q - 1) * (q - 1) / 2 : (q - 1) * (q - 3) / 2;
  }
  return c;
}

/// Ordinary (j != 0, 1728) classes met by curves with b in one square class.
inline std::uint64_t predict_class_counts_ordinary(std::uint64_t q, bool b_square) {
  const bool cube = has_cube_roots_of_unity(q);
  if (b_square) return cube ? (q - 7) / 6 : (q - 5) / 6;
  return cube ? (q - 1) / 2 : (q - 3) / 2;
}

/// Special classes (j = 0, j = 1728) attained within one square class of b:
/// j = 1728 always (a = 0); j = 0 needs a^2 = -12b, solvable for square b iff
/// -3 is a square, i.e. iff q = 1, 7 (mod 12).
inline std::uint64_t predict_special_classes(std::uint64_t q, bool b_square) {
  const bool cube = has_cube_roots_of_unity(q);
  return 1 + ((b_square == cube) ? 1 : 0);
}

/// Square-b ordinary classes plus attained special classes reproduce the
/// Jacobi quartic count.
inline bool remark_consistency(std::uint64_t q) {
  return predict_class_counts_ordinary(q, true) + predict_special_classes(q, true) == predict_N_jacobi(q);
}

struct FieldInfo {
  std::string spec;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  unsigned q_mod_12 = 0;
};

struct ClassEntry {
  FieldElement j;
  std::uint64_t size = 0;
  FieldElement rep_a;
  std::optional<FieldElement> rep_b;  // absent for the Jacobi family
  JClass kind = JClass::Ordinary;
};

struct CensusReport {
  FieldInfo field;
  Family family = Family::Jacobi;
  std::uint64_t total_curves = 0;
  std::uint64_t distinct_j = 0;
  std::uint64_t predicted = 0;
  bool match = false;
  std::vector<ClassEntry> classes;  // ascending j rank
  std::uint64_t j0_curves = 0;
  std::uint64_t j1728_curves = 0;
  std::vector<std::string> notes;

  std::uint64_t ordinary_curves() const { return total_curves - j0_curves - j1728_curves; }
  std::uint64_t ordinary_classes() const {
    return static_cast<std::uint64_t>(
        std::ranges::count_if(classes, [](const ClassEntry& c) { return c.kind == JClass::Ordinary; }));
  }
  bool has_class(JClass kind) const {
    return std::ranges::any_of(classes, [kind](const ClassEntry& c) { return c.kind == kind; });
  }
};

/// Per-partition class tally keyed by j rank. Merging adds sizes and keeps the
/// least representative, so partial tallies combine in any order.
class CensusAccumulator {
 public:
  struct Slot {
    std::uint64_t size = 0;
    std::uint64_t rep_a = 0;
    std::uint64_t rep_b = 0;

    bool operator==(const Slot&) const = default;
  };

  void add(std::uint64_t j, std::uint64_t a, std::uint64_t b, std::uint64_t count = 1) {
    auto [it, fresh] = slots_.try_emplace(j, Slot{0, a, b});
    it->second.size += count;
    if (!fresh && std::pair(a, b) < std::pair(it->second.rep_a, it->second.rep_b)) {
      it->second.rep_a = a;
      it->second.rep_b = b;
    }
  }

  void merge(const CensusAccumulator& o) {
    for (const auto& [j, s] : o.slots_) add(j, s.rep_a, s.rep_b, s.size);
  }

  const std::unordered_map<std::uint64_t, Slot>& slots() const noexcept { return slots_; }
  bool operator==(const CensusAccumulator&) const = default;

 private:
  std::unordered_map<std::uint64_t, Slot> slots_;
};

namespace detail {

inline FieldInfo field_info(const FieldCtx& ctx) {
  return {ctx.descriptor(), ctx.p(), ctx.k(), ctx.q(), static_cast<unsigned>(ctx.q() % 12)};
}

/// Runs `work(lo, hi, acc)` over [0, n) split into `jobs` contiguous ranges.
template <class Work>
CensusAccumulator run_partitioned(std::uint64_t n, unsigned jobs, Work work) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(n, 1))));
  std::vector<CensusAccumulator> parts(jobs);
  std::vector<std::thread> threads;
  for (unsigned i = 0; i < jobs; ++i) {
    const std::uint64_t lo = n * i / jobs, hi = n * (i + 1) / jobs;
    if (jobs == 1)
      work(lo, hi, parts[i]);
    else
      threads.emplace_back([&, lo, hi, i] { work(lo, hi, parts[i]); });
  }
  for (auto& t : threads) t.join();
  for (unsigned i = 1; i < jobs; ++i) parts[0].merge(parts[i]);
  return std::move(parts[0]);
}

inline std::vector<ClassEntry> build_classes(const FieldCtx& ctx, const CensusAccumulator& acc, bool with_b) {
  std::vector<ClassEntry> out;
  out.reserve(acc.slots().size());
  for (const auto& [j, s] : acc.slots()) {
    FieldElement jv = ctx.element_at(j);
    std::optional<FieldElement> rb;
    if (with_b) rb = ctx.element_at(s.rep_b);
    out.push_back({jv, s.size, ctx.element_at(s.rep_a), std::move(rb), classify_j(jv)});
  }
  std::ranges::sort(out, [](const ClassEntry& x, const ClassEntry& y) { return x.j.rank() < y.j.rank(); });
  return out;
}

inline void fill_special(CensusReport& r) {
  for (const auto& c : r.classes) {
    if (c.kind == JClass::Zero) r.j0_curves += c.size;
    if (c.kind == JClass::J1728) r.j1728_curves += c.size;
  }
}

}  // namespace detail

inline CensusReport census_jacobi(const FieldPtr& ctx, unsigned jobs = 1) {
  const std::vector<FieldElement> elems = ctx->elements();
  CensusAccumulator acc = detail::run_partitioned(ctx->q(), jobs, [&](std::uint64_t lo, std::uint64_t hi, CensusAccumulator& part) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const FieldElement& a = elems[i];
      if (a.square() == 4) continue;
      part.add(j_jacobi(JacobiQuartic(a)).rank(), i, 0);
    }
  });

  CensusReport r;
  r.field = detail::field_info(*ctx);
  r.family = Family::Jacobi;
  r.classes = detail::build_classes(*ctx, acc, false);
  for (const auto& c : r.classes) r.total_curves += c.size;
  r.distinct_j = r.classes.size();
  r.predicted = predict_N_jacobi(ctx->q());
  r.match = r.distinct_j == r.predicted;
  detail::fill_special(r);
  return r;
}

inline CensusReport census_general(const FieldPtr& ctx, BFilter filter = BFilter::All, unsigned jobs = 1) {
  const std::vector<FieldElement> elems = ctx->elements();
  std::vector<int> chars(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) chars[i] = quadratic_character(elems[i]);
  auto wanted = [&](std::size_t bi) {
    if (chars[bi] == 0) return false;
    if (filter == BFilter::SquareB) return chars[bi] == 1;
    if (filter == BFilter::NonsquareB) return chars[bi] == -1;
    return true;
  };

  CensusAccumulator acc = detail::run_partitioned(ctx->q(), jobs, [&](std::uint64_t lo, std::uint64_t hi, CensusAccumulator& part) {
    for (std::uint64_t ai = lo; ai < hi; ++ai) {
      const FieldElement a2 = elems[ai].square();
      for (std::size_t bi = 0; bi < elems.size(); ++bi) {
        if (!wanted(bi)) continue;
        const FieldElement& b = elems[bi];
        const FieldElement disc = a2 - 4 * b;
        if (disc.is_zero()) continue;
        const FieldElement n = a2 + 12 * b;
        part.add((16 * n * n * n / (b * disc.square())).rank(), ai, bi);
      }
    }
  });

  CensusReport r;
  r.field = detail::field_info(*ctx);
  r.classes = detail::build_classes(*ctx, acc, true);
  for (const auto& c : r.classes) r.total_curves += c.size;
  r.distinct_j = r.classes.size();
  detail::fill_special(r);
  const std::uint64_t q = ctx->q();
  switch (filter) {
    case BFilter::All:
      r.family = Family::General;
      r.predicted = predict_N_general(q);
      break;
    case BFilter::SquareB:
      r.family = Family::GeneralSquareB;
      r.predicted = predict_class_counts_ordinary(q, true) + predict_special_classes(q, true);
      break;
    case BFilter::NonsquareB:
      r.family = Family::GeneralNonsquareB;
      r.predicted = predict_class_counts_ordinary(q, false) + predict_special_classes(q, false);
      r.notes.push_back("j=1728 curves with non-square b are the a = 0 curves: (q-1)/2 = " +
                        std::to_string((q - 1) / 2) + " (a^2 = 36b has no solution)");
      break;
  }
  r.match = r.distinct_j == r.predicted;
  return r;
}

/// Class size -> number of classes of that size.
inline std::map<std::uint64_t, std::uint64_t> class_size_histogram(const CensusReport& report, bool ordinary_only = true) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (const auto& c : report.classes)
    if (!ordinary_only || c.kind == JClass::Ordinary) ++h[c.size];
  return h;
}

}  // namespace jqc
