#pragma once

// Report and witness serialization. JSON objects use sorted keys and only
// strings, integers and booleans, so re-serializing parsed output is
// byte-identical.

#include <string>

#include "json.hpp"

#include "jqc/census.hpp"
#include "jqc/transforms.hpp"

namespace jqc {

inline nlohmann::json to_json(const CensusReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json e{{"j", c.j.to_string()}, {"size", c.size}, {"rep_a", c.rep_a.to_string()},
                     {"kind", std::string(jclass_name(c.kind))}};
    if (c.rep_b) e["rep_b"] = c.rep_b->to_string();
    classes.push_back(std::move(e));
  }
  return {
      {"field", {{"spec", r.field.spec}, {"p", r.field.p}, {"k", r.field.k}, {"q", r.field.q}, {"q_mod_12", r.field.q_mod_12}}},
      {"family", std::string(family_name(r.family))},
      {"total_curves", r.total_curves},
      {"distinct_j", r.distinct_j},
      {"predicted", r.predicted},
      {"match", r.match},
      {"special", {{"j0_curves", r.j0_curves}, {"j1728_curves", r.j1728_curves}}},
      {"ordinary", {{"curves", r.ordinary_curves()}, {"classes", r.ordinary_classes()}}},
      {"classes", std::move(classes)},
      {"notes", r.notes},
  };
}

inline std::string to_json_string(const CensusReport& r) { return to_json(r).dump(2) + "\n"; }

namespace detail {
inline std::string csv_cell(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}
}  // namespace detail

/// One row per class: j, size, rep_a, rep_b.
inline std::string to_csv(const CensusReport& r) {
  std::string out = "j,size,rep_a,rep_b\n";
  for (const auto& c : r.classes) {
    out += detail::csv_cell(c.j.to_string()) + "," + std::to_string(c.size) + "," + detail::csv_cell(c.rep_a.to_string()) +
           "," + (c.rep_b ? detail::csv_cell(c.rep_b->to_string()) : std::string()) + "\n";
  }
  return out;
}

inline std::string to_text(const CensusReport& r) {
  std::string out;
  out += "field " + r.field.spec + " (q = " + std::to_string(r.field.q) + ", q mod 12 = " + std::to_string(r.field.q_mod_12) +
         ")\n";
  out += "family " + std::string(family_name(r.family)) + "\n";
  out += "curves " + std::to_string(r.total_curves) + " (j=0: " + std::to_string(r.j0_curves) +
         ", j=1728: " + std::to_string(r.j1728_curves) + ", ordinary: " + std::to_string(r.ordinary_curves()) + ")\n";
  out += "distinct_j " + std::to_string(r.distinct_j) + ", predicted " + std::to_string(r.predicted) + ": " +
         (r.match ? "match" : "MISMATCH") + "\n";
  for (const auto& c : r.classes) {
    out += "  j=" + c.j.to_string() + " size=" + std::to_string(c.size) + " rep=(" + c.rep_a.to_string();
    if (c.rep_b) out += "; " + c.rep_b->to_string();
    out += ") " + std::string(jclass_name(c.kind)) + "\n";
  }
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  return out;
}

inline nlohmann::json to_json(const IsomorphismWitness& w) {
  return {{"u2", w.u_squared.to_string()}, {"r", w.r.to_string()}, {"field", w.u_squared.ctx().descriptor()}};
}

}  // namespace jqc
