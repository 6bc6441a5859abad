#pragma once

#include <farey/bijections.hpp>
#include <farey/fraction.hpp>
#include <farey/identities.hpp>
#include <farey/sequences.hpp>

#include <json.hpp>

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace farey {

using Json = nlohmann::ordered_json;

/// One "h/k" per line, no padding.
inline void write_plain(std::ostream& os, const FareySeq& s) {
  for (const auto& f : s) os << f << '\n';
}

/// Reads the plain format back; blank lines are skipped.
inline std::vector<Fraction> read_plain(std::istream& is) {
  std::vector<Fraction> out;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_fraction(line));
  }
  return out;
}

// {"family":..., "n":..., "m":..., "terms":[[h,k],...]}; m is null for F_n.
inline Json to_json(const FareySeq& s) {
  Json j;
  j["family"] = std::string(family_name(s.descriptor().family));
  j["n"] = s.descriptor().n;
  if (s.descriptor().family == Family::standard) {
    j["m"] = nullptr;
  } else {
    j["m"] = s.descriptor().m;
  }
  Json terms = Json::array();
  for (const auto& f : s) terms.push_back(Json::array({f.h(), f.k()}));
  j["terms"] = std::move(terms);
  return j;
}

inline std::string emit_json(const FareySeq& s) { return to_json(s).dump(); }

// Big values are written as decimal strings so no reader truncates them.
inline Json to_json(const IdentityReport& r) {
  Json j;
  j["name"] = r.name;
  Json params = Json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  j["params"] = std::move(params);
  Json lhs = Json::array();
  for (const auto& v : r.lhs) lhs.push_back(v.str());
  j["lhs"] = std::move(lhs);
  j["rhs"] = r.rhs.str();
  if (!r.side_checks.empty()) {
    Json side = Json::array();
    for (const auto& c : r.side_checks) {
      side.push_back({{"name", c.name}, {"actual", c.actual.str()}, {"expected", c.expected.str()}});
    }
    j["side_checks"] = std::move(side);
  }
  j["pass"] = r.pass();
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["map"] = r.map_name;
  j["params"] = {{"n", r.n}, {"m", r.m}};
  Json checks = Json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"check", name}, {"pass", ok}});
  j["checks"] = std::move(checks);
  if (r.counterexample) {
    Json c;
    c["input"] = to_string(r.counterexample->input);
    c["image"] = r.counterexample->image ? Json(to_string(*r.counterexample->image)) : Json(nullptr);
    c["reason"] = r.counterexample->reason;
    j["counterexample"] = std::move(c);
  }
  j["pass"] = r.passed();
  return j;
}

}  // namespace farey
