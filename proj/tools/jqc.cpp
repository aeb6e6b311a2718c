// jqc: command-line front end for the Jacobi quartic census toolkit.
//
// Exit codes: 0 success, 1 census mismatch, 2 bad arguments or field spec,
// 3 invalid curve / lambda / off-curve point, 4 exceptional point.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jqc/jqc.hpp"
#include "jqc/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kInvalid = 3;
constexpr int kExceptional = 4;

int exit_code_for(jqc::Errc c) {
  using jqc::Errc;
  switch (c) {
    case Errc::ExceptionalPoint: return kExceptional;
    case Errc::InvalidCurve:
    case Errc::SingularCurve:
    case Errc::PointNotOnCurve:
    case Errc::InvalidLambda:
    case Errc::SpecialJ:
    case Errc::SpecialJ1728:
    case Errc::ZeroScale:
    case Errc::DivisionByZero: return kInvalid;
    default: return kUsage;
  }
}

std::uint64_t q_cap() {
  if (const char* env = std::getenv("JQC_Q_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw jqc::Error(jqc::Errc::ParseError, std::string("JQC_Q_CAP='") + env + "' is not a number");
    }
  }
  return jqc::kDefaultQCap;
}

struct Output {
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw jqc::Error(jqc::Errc::ParseError, "cannot write " + path);
    f << text;
  }
};

jqc::GeneralJacobiQuartic as_general(const jqc::CurveSpec& c) {
  if (auto* j = std::get_if<jqc::JacobiQuartic>(&c)) return jqc::GeneralJacobiQuartic(*j);
  if (auto* g = std::get_if<jqc::GeneralJacobiQuartic>(&c)) return *g;
  throw jqc::Error(jqc::Errc::ParseError, "expected a jacobi: or general: curve");
}

std::string special_tag(const jqc::CurveSpec& c, const jqc::FieldElement& j) {
  if (auto* g = std::get_if<jqc::GeneralJacobiQuartic>(&c)) return std::string(jqc::jclass_name(jqc::special_j_class(*g)));
  if (auto* q = std::get_if<jqc::JacobiQuartic>(&c))
    return std::string(jqc::jclass_name(jqc::special_j_class(jqc::GeneralJacobiQuartic(*q))));
  return std::string(jqc::jclass_name(jqc::classify_j(j)));
}

int cmd_jinv(const std::string& field, const std::string& curve, const Output& out) {
  auto ctx = jqc::parse_field_spec(field, q_cap());
  auto c = jqc::parse_curve_spec(*ctx, curve);
  auto j = jqc::j_invariant(c);
  out.emit(j.to_string() + " (" + special_tag(c, j) + ")\n");
  return kOk;
}

int cmd_census(const std::string& field, const std::string& family, const std::string& filter,
               const std::string& format, unsigned jobs, const Output& out) {
  auto ctx = jqc::parse_field_spec(field, q_cap());
  jqc::CensusReport r;
  if (family == "jacobi") {
    r = jqc::census_jacobi(ctx, jobs);
  } else {
    jqc::BFilter f = filter == "square-b" ? jqc::BFilter::SquareB
                     : filter == "nonsquare-b" ? jqc::BFilter::NonsquareB
                                               : jqc::BFilter::All;
    r = jqc::census_general(ctx, f, jobs);
  }
  if (format == "json") out.emit(jqc::to_json_string(r));
  else if (format == "csv") out.emit(jqc::to_csv(r));
  else out.emit(jqc::to_text(r));
  return r.match ? kOk : kMismatch;
}

int cmd_verify(std::uint64_t pmin, std::uint64_t pmax, const std::vector<std::uint64_t>& ext, unsigned jobs,
               const Output& out) {
  if (pmin < 5 || pmin > pmax) throw jqc::Error(jqc::Errc::ParseError, "need 5 <= pmin <= pmax");
  const std::uint64_t cap = q_cap();
  std::vector<jqc::FieldPtr> fields;
  for (std::uint64_t p : jqc::primes_in(pmin, pmax)) fields.push_back(jqc::FieldCtx::make(p, 1, std::nullopt, cap));
  for (std::uint64_t q : ext) fields.push_back(jqc::parse_field_spec(std::to_string(q), cap));
  std::ranges::sort(fields, [](const auto& x, const auto& y) { return x->q() < y->q(); });

  std::vector<jqc::FieldVerdict> verdicts(fields.size());
  const unsigned workers = std::max(1u, jobs);
  for (std::size_t start = 0; start < fields.size(); start += workers) {
    std::vector<std::future<jqc::FieldVerdict>> batch;
    for (std::size_t i = start; i < std::min(fields.size(), start + workers); ++i)
      batch.push_back(std::async(std::launch::async, [f = fields[i]] { return jqc::verify_field(f); }));
    for (std::size_t i = 0; i < batch.size(); ++i) verdicts[start + i] = batch[i].get();
  }

  auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
  std::ostringstream s;
  s << "q\tfield\tq%12\tN_a\tN_ab\tjacobi\tgeneral\tsquare-b\tnonsquare-b\tremark\n";
  std::size_t failed = 0;
  for (const auto& v : verdicts) {
    if (!v.ok()) ++failed;
    s << v.field.q << '\t' << v.field.spec << '\t' << v.field.q_mod_12 << '\t' << v.jacobi_classes << '\t'
      << v.general_classes << '\t' << mark(v.jacobi) << '\t' << mark(v.general) << '\t' << mark(v.square_b) << '\t'
      << mark(v.nonsquare_b) << '\t' << mark(v.remark) << '\n';
  }
  s << (failed == 0 ? "all " + std::to_string(verdicts.size()) + " fields pass\n"
                    : std::to_string(failed) + " of " + std::to_string(verdicts.size()) + " fields FAIL\n");
  out.emit(s.str());
  return failed == 0 ? kOk : kMismatch;
}

int cmd_iso(const std::string& field, const std::string& c1, const std::string& c2, bool witness, const Output& out) {
  auto ctx = jqc::parse_field_spec(field, q_cap());
  auto src = as_general(jqc::parse_curve_spec(*ctx, c1));
  auto dst = as_general(jqc::parse_curve_spec(*ctx, c2));
  auto j1 = jqc::j_general(src), j2 = jqc::j_general(dst);
  jqc::IsomorphismSolver solver(ctx);
  auto w = solver.solve(src, dst);
  std::string text = w ? "isomorphic (j = " + j1.to_string() + ")\n"
                       : "not isomorphic (j = " + j1.to_string() + " vs " + j2.to_string() + ")\n";
  if (w && witness) text += jqc::to_json(*w).dump() + "\n";
  out.emit(text);
  return kOk;
}

int cmd_map_point(const std::string& field, const std::string& curve, const std::string& xs, const std::string& ys,
                  const std::string& direction, const Output& out) {
  auto ctx = jqc::parse_field_spec(field, q_cap());
  auto c = jqc::parse_curve_spec(*ctx, curve);
  jqc::AffinePoint pt{ctx->parse_element(xs), ctx->parse_element(ys)};
  const bool forward = direction != "inverse";
  std::string target;
  jqc::AffinePoint img = pt;
  bool on = false;
  if (auto* j = std::get_if<jqc::JacobiQuartic>(&c)) {
    img = forward ? jqc::map_point_jacobi(*j, pt) : jqc::unmap_point_jacobi(*j, pt);
    target = forward ? "W_a" : "E_a";
    on = forward ? jqc::jacobi_to_legendre_weierstrass(*j).contains(img) : j->contains(img);
  } else if (auto* g = std::get_if<jqc::GeneralJacobiQuartic>(&c)) {
    img = forward ? jqc::map_point_general(*g, pt) : jqc::unmap_point_general(*g, pt);
    target = forward ? "W_{a,b}" : "E_{a,b}";
    on = forward ? jqc::general_to_weierstrass(*g).contains(img) : g->contains(img);
  } else {
    throw jqc::Error(jqc::Errc::ParseError, "map-point expects a jacobi: or general: curve");
  }
  out.emit(img.to_string() + " on " + target + ": " + (on ? "verified" : "NOT verified") + "\n");
  return on ? kOk : kMismatch;
}

int cmd_orbit(const std::string& field, const std::string& lambda, const Output& out) {
  auto ctx = jqc::parse_field_spec(field, q_cap());
  auto orbit = jqc::legendre_orbit(ctx->parse_element(lambda));
  std::string text = "{";
  for (std::size_t i = 0; i < orbit.size(); ++i) text += (i ? ", " : "") + orbit.values[i].to_string();
  text += "} size " + std::to_string(orbit.size()) + "\n";
  out.emit(text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi quartic curves over finite fields: j-invariants, maps, and isomorphism-class census"};
  app.require_subcommand(1);

  Output out;
  std::string field, curve, format = "text", family = "general", filter = "all", xs, ys, direction = "forward", lambda;
  std::string curve1, curve2;
  unsigned jobs = 1;
  bool witness = false;
  std::uint64_t pmin = 5, pmax = 199;
  std::vector<std::uint64_t> ext;

  auto add_common = [&](CLI::App* sub) { sub->add_option("--out", out.path, "Write output to PATH instead of stdout"); };

  auto* jinv = app.add_subcommand("jinv", "Print the j-invariant of a curve");
  jinv->add_option("--field", field, "Field spec")->required();
  jinv->add_option("--curve", curve, "Curve spec")->required();
  add_common(jinv);

  auto* census = app.add_subcommand("census", "Enumerate a family and count distinct j-invariants");
  census->add_option("--field", field, "Field spec")->required();
  census->add_option("--family", family, "jacobi | general")->check(CLI::IsMember({"jacobi", "general"}));
  census->add_option("--filter", filter, "all | square-b | nonsquare-b")
      ->check(CLI::IsMember({"all", "square-b", "nonsquare-b"}));
  census->add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  census->add_option("--jobs", jobs, "Worker threads");
  add_common(census);

  auto* verify = app.add_subcommand("verify", "Check every closed form over a sweep of fields");
  verify->add_option("--pmin", pmin, "Smallest prime");
  verify->add_option("--pmax", pmax, "Largest prime");
  verify->add_option("--ext", ext, "Extra prime powers q")->delimiter(',');
  verify->add_option("--jobs", jobs, "Fields checked concurrently");
  add_common(verify);

  auto* iso = app.add_subcommand("iso", "Decide isomorphism over the closure and optionally print a witness");
  iso->add_option("--field", field, "Field spec")->required();
  iso->add_option("curve1", curve1, "First curve spec")->required();
  iso->add_option("curve2", curve2, "Second curve spec")->required();
  iso->add_flag("--witness", witness, "Print the (u^2, r) witness as JSON");
  add_common(iso);

  auto* mp = app.add_subcommand("map-point", "Apply the birational map to a point");
  mp->add_option("--field", field, "Field spec")->required();
  mp->add_option("--curve", curve, "jacobi: or general: curve spec")->required();
  mp->add_option("--x", xs, "x (or u) coordinate")->required();
  mp->add_option("--y", ys, "y (or v) coordinate")->required();
  mp->add_option("--direction", direction, "forward | inverse")->check(CLI::IsMember({"forward", "inverse"}));
  add_common(mp);

  auto* orbit = app.add_subcommand("orbit", "Print the Legendre orbit of lambda");
  orbit->add_option("--field", field, "Field spec")->required();
  orbit->add_option("--lambda", lambda, "lambda")->required();
  add_common(orbit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*jinv) return cmd_jinv(field, curve, out);
    if (*census) return cmd_census(field, family, filter, format, jobs, out);
    if (*verify) return cmd_verify(pmin, pmax, ext, jobs, out);
    if (*iso) return cmd_iso(field, curve1, curve2, witness, out);
    if (*mp) return cmd_map_point(field, curve, xs, ys, direction, out);
    if (*orbit) return cmd_orbit(field, lambda, out);
  } catch (const jqc::Error& e) {
    std::cerr << "jqc: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "jqc: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
