// Acceptance sweep: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "jqc/jqc.hpp"
#include "jqc/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<jqc::FieldPtr> sweep_fields() {
  std::vector<jqc::FieldPtr> out;
  for (std::uint64_t p : jqc::primes_in(5, 199)) out.push_back(jqc::FieldCtx::make(p));
  for (std::uint64_t q : {25, 49, 121, 169}) out.push_back(jqc::parse_field_spec(std::to_string(q)));
  return out;
}

bool valid_general(const jqc::FieldElement& a, const jqc::FieldElement& b) {
  return !b.is_zero() && a.square() != 4 * b;
}

Outcome jacobi_census(const std::vector<jqc::FieldPtr>& fields) {
  Outcome o;
  for (const auto& f : fields) {
    auto r = jqc::census_jacobi(f);
    if (!r.match) o.fail("q=" + std::to_string(f->q()) + " got " + std::to_string(r.distinct_j));
  }
  for (auto [q, n] : {std::pair{"13", 3u}, {"11", 2u}, {"25", 5u}})
    if (jqc::census_jacobi(jqc::parse_field_spec(q)).distinct_j != n) o.fail(std::string("spot value q=") + q);
  if (o.ok) o.detail = std::to_string(fields.size()) + " fields";
  return o;
}

Outcome general_census(const std::vector<jqc::FieldPtr>& fields) {
  Outcome o;
  for (const auto& f : fields) {
    auto r = jqc::census_general(f, jqc::BFilter::All, workers());
    if (!r.match) o.fail("q=" + std::to_string(f->q()) + " got " + std::to_string(r.distinct_j));
  }
  for (auto [q, n] : {std::pair{"5", 3u}, {"11", 7u}, {"13", 9u}})
    if (jqc::census_general(jqc::parse_field_spec(q)).distinct_j != n) o.fail(std::string("spot value q=") + q);
  if (o.ok) o.detail = std::to_string(fields.size()) + " fields";
  return o;
}

Outcome curve_counts(const std::vector<jqc::FieldPtr>& fields) {
  Outcome o;
  for (const auto& f : fields)
    for (bool sq : {true, false}) {
      auto r = jqc::census_general(f, sq ? jqc::BFilter::SquareB : jqc::BFilter::NonsquareB, workers());
      const jqc::CurveCounts got{r.ordinary_curves(), r.total_curves, r.j0_curves, r.j1728_curves};
      if (got != jqc::predict_curve_counts(f->q(), sq))
        o.fail("q=" + std::to_string(f->q()) + (sq ? " square-b" : " nonsquare-b"));
    }
  if (o.ok) o.detail = "non-square b: j=1728 count is (q-1)/2, from the a = 0 curves";
  return o;
}

Outcome class_sizes(const std::vector<jqc::FieldPtr>& fields) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& f : fields) {
    const std::uint64_t q = f->q();
    if (q > 49) continue;
    ++n;
    for (bool sq : {true, false}) {
      auto r = jqc::census_general(f, sq ? jqc::BFilter::SquareB : jqc::BFilter::NonsquareB);
      for (const auto& [size, count] : jqc::class_size_histogram(r))
        if (size != (sq ? 3 * (q - 1) : q - 1))
          o.fail("q=" + std::to_string(q) + " class of size " + std::to_string(size));
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " fields with q <= 49";
  return o;
}

Outcome birational(std::uint64_t& points) {
  Outcome o;
  points = 0;
  for (std::uint64_t p : {13, 17}) {
    auto f = jqc::FieldCtx::make(p);
    const auto elems = f->elements();
    auto check = [&](const std::string& name, auto&& on_source, auto&& forward, auto&& on_target, auto&& inverse,
                     auto&& exceptional) {
      for (const auto& x : elems)
        for (const auto& y : elems) {
          jqc::AffinePoint pt{x, y};
          if (!on_source(pt)) continue;
          ++points;
          jqc::AffinePoint img = forward(pt);
          if (!on_target(img)) o.fail(name + " image of " + pt.to_string() + " off target");
          if (exceptional(img)) continue;
          if (inverse(img) != pt) o.fail(name + " round trip at " + pt.to_string());
        }
    };
    for (const auto& a : elems) {
      if (a.square() != 4) {
        jqc::JacobiQuartic c(a);
        auto w = jqc::jacobi_to_legendre_weierstrass(c);
        check(
            c.to_string(), [&](const auto& pt) { return c.contains(pt); },
            [&](const auto& pt) { return jqc::map_point_jacobi(c, pt); }, [&](const auto& pt) { return w.contains(pt); },
            [&](const auto& pt) { return jqc::unmap_point_jacobi(c, pt); },
            [&](const auto& pt) { return (4 * pt.x + a - 2).is_zero(); });
      }
      for (const auto& b : elems) {
        if (!valid_general(a, b)) continue;
        jqc::GeneralJacobiQuartic c(a, b);
        auto w = jqc::general_to_weierstrass(c);
        check(
            c.to_string(), [&](const auto& pt) { return c.contains(pt); },
            [&](const auto& pt) { return jqc::map_point_general(c, pt); }, [&](const auto& pt) { return w.contains(pt); },
            [&](const auto& pt) { return jqc::unmap_point_general(c, pt); },
            [&](const auto& pt) { return pt.x.is_zero(); });
      }
    }
  }
  if (o.ok) o.detail = std::to_string(points) + " points";
  return o;
}

Outcome orbits(const std::vector<jqc::FieldPtr>& fields) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& f : fields) {
    if (f->q() > 49) continue;
    ++n;
    std::vector<jqc::FieldElement> lambdas;
    for (const auto& x : f->elements())
      if (!x.is_zero() && !x.is_one()) lambdas.push_back(x);
    std::set<std::set<std::uint64_t>> blocks;
    std::size_t size2 = 0;
    const std::string tag = "q=" + std::to_string(f->q());
    for (const auto& l : lambdas) {
      auto orbit = jqc::legendre_orbit(l);
      const bool three = l == -1 || l == 2 || l == f->from_int(2).inv();
      const bool two = (l.square() - l + 1).is_zero();
      const std::size_t want = two ? 2 : three ? 3 : 6;
      if (orbit.size() != want) o.fail(tag + " orbit of " + l.to_string() + " has size " + std::to_string(orbit.size()));
      std::set<std::uint64_t> block;
      for (const auto& v : orbit.values) block.insert(v.rank());
      if (blocks.insert(block).second && orbit.size() == 2) ++size2;
      const auto jl = jqc::j_legendre(jqc::LegendreCurve(l));
      for (const auto& m : lambdas)
        if (orbit.contains(m) != (jqc::j_legendre(jqc::LegendreCurve(m)) == jl)) o.fail(tag + " j mismatch in orbit");
    }
    std::size_t covered = 0;
    for (const auto& b : blocks) covered += b.size();
    if (covered != lambdas.size()) o.fail(tag + " orbits overlap");
    if (size2 != (jqc::has_cube_roots_of_unity(f->q()) ? 1u : 0u)) o.fail(tag + " size-2 orbit count");
  }
  if (o.ok) o.detail = std::to_string(n) + " fields with q <= 49";
  return o;
}

Outcome witnesses(std::uint64_t& pairs) {
  Outcome o;
  auto f = jqc::FieldCtx::make(13);
  jqc::IsomorphismSolver solver(f);
  std::vector<jqc::GeneralJacobiQuartic> curves;
  for (const auto& a : f->elements())
    for (const auto& b : f->elements())
      if (valid_general(a, b)) curves.emplace_back(a, b);
  pairs = 0;
  std::uint64_t found = 0;
  for (const auto& c1 : curves)
    for (const auto& c2 : curves) {
      ++pairs;
      auto w = solver.solve(c1, c2);
      const bool same_j = jqc::j_general(c1) == jqc::j_general(c2);
      if (w.has_value() != same_j) o.fail(c1.to_string() + " vs " + c2.to_string());
      if (w) {
        ++found;
        if (!solver.satisfies(c1, c2, *w)) o.fail("witness fails substitution for " + c1.to_string());
      }
    }
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(found) + " witnesses";
  return o;
}

Outcome remark(const std::vector<jqc::FieldPtr>& fields) {
  Outcome o;
  for (const auto& f : fields)
    if (!jqc::remark_consistency(f->q())) o.fail("q=" + std::to_string(f->q()));
  if (o.ok) o.detail = std::to_string(fields.size()) + " fields";
  return o;
}

}  // namespace

int main() {
  const auto fields = sweep_fields();
  std::uint64_t points = 0, pairs = 0;

  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no stated limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Jacobi census exactness", 1.0, [&] { return jacobi_census(fields); }},
      {2, "General census exactness", 30.0, [&] { return general_census(fields); }},
      {3, "Curve counts per square class", 0, [&] { return curve_counts(fields); }},
      {4, "Class-size law", 0, [&] { return class_sizes(fields); }},
      {5, "Birational soundness", 0, [&] { return birational(points); }},
      {6, "Orbit structure", 0, [&] { return orbits(fields); }},
      {7, "Witness soundness/completeness", 60.0, [&] { return witnesses(pairs); }},
      {8, "Class-count consistency", 0, [&] { return remark(fields); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s");
    if (!o.ok) ++failed;
    std::printf("[%s] %d. %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
