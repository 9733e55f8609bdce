#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arfkit/error.hpp"
#include "arfkit/ideal.hpp"
#include "arfkit/semigroup.hpp"
#include "arfkit/verify.hpp"

namespace arfkit {

inline std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

/// "3,5,7", with optional surrounding angle brackets and arbitrary
/// whitespace, so that printed semigroups ("<3,5,7>") parse back.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  std::string_view body = compact;
  if (!body.empty() && body.front() == '<' && body.back() == '>') body = body.substr(1, body.size() - 2);
  if (body.empty()) throw Error(ErrorKind::ParseError, "empty list");
  std::vector<int> out;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw Error(ErrorKind::ParseError, "'" + std::string(item) + "' is not a decimal integer");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

inline NumericalSemigroup parse_semigroup(std::string_view text) {
  return NumericalSemigroup::from_generators(parse_int_list(text));
}

inline nlohmann::ordered_json semigroup_json(const NumericalSemigroup& s) {
  return {{"generators", s.minimal_generators()},
          {"genus", s.genus()},
          {"multiplicity", s.multiplicity()},
          {"embedding_dimension", s.embedding_dimension()},
          {"frobenius", s.frobenius()},
          {"conductor", s.conductor()}};
}

inline nlohmann::ordered_json ideal_json(const RelativeIdeal& e) {
  return {{"offset", e.offset()}, {"window", e.window_string()}};
}

inline nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.check_name;
  j["status"] = to_string(r.status);
  if (r.witness) {
    nlohmann::ordered_json w{{"reason", r.witness->reason}};
    if (r.witness->ideal) {
      w["ideal"] = ideal_json(*r.witness->ideal);
      w["ambient"] = r.witness->ideal->ambient().minimal_generators();
    }
    if (r.witness->semigroup) w["semigroup"] = r.witness->semigroup->minimal_generators();
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["detail"] = {{"ideals_enumerated", r.detail.ideals_enumerated},
                 {"reflexive_found", r.detail.reflexive_found},
                 {"self_dual_found", r.detail.self_dual_found},
                 {"checks_skipped", r.detail.checks_skipped}};
  j["note"] = r.note;
  return j;
}

/// {"semigroup": {...}, "checks": [...]}
inline nlohmann::ordered_json verification_json(const NumericalSemigroup& s, const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json doc;
  doc["semigroup"] = semigroup_json(s);
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) doc["checks"].push_back(report_json(r));
  return doc;
}

}  // namespace arfkit
