#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "arfkit/arf.hpp"
#include "arfkit/error.hpp"
#include "arfkit/io.hpp"
#include "arfkit/lipman.hpp"
#include "arfkit/semigroup.hpp"
#include "arfkit/tree.hpp"
#include "arfkit/verify.hpp"

namespace arfkit {

/// One census row. Field order is the CSV column order.
struct CensusRecord {
  std::vector<int> generators;
  int genus = 0;
  int multiplicity = 1;
  int embedding_dimension = 1;
  int frobenius = -1;
  bool arf_definition = true;
  bool arf_lipman = true;
  bool arf_pattern = true;
  std::size_t chain_length = 1;  // number of chain members, A_0 through the naturals
  std::vector<int> multiplicity_sequence;
  std::size_t ideal_count = 0;
  std::size_t reflexive_count = 0;
  bool all_reflexive_self_dual = true;
  Status theorem_a_status = Status::Pass;
};

inline CensusRecord make_census_record(const NumericalSemigroup& s, int genus_bound = kDefaultIdealGenusBound) {
  CensusRecord r;
  r.generators = s.minimal_generators();
  r.genus = s.genus();
  r.multiplicity = s.multiplicity();
  r.embedding_dimension = s.embedding_dimension();
  r.frobenius = s.frobenius();
  r.arf_definition = is_arf(s, ArfMethod::Definition);
  r.arf_lipman = is_arf(s, ArfMethod::Lipman);
  r.arf_pattern = is_arf(s, ArfMethod::Pattern);
  const LipmanChain chain = lipman_chain(s);
  r.chain_length = chain.size();
  r.multiplicity_sequence = chain.multiplicity_sequence;
  const auto all = enumerate_normalized_ideals(s, IdealFilter::All, genus_bound);
  r.ideal_count = all.size();
  for (const auto& e : all) {
    if (!is_reflexive(e)) continue;
    ++r.reflexive_count;
    if (!is_self_dual(e)) r.all_reflexive_self_dual = false;
  }
  r.theorem_a_status = verify_theorem_A(s, genus_bound).status;
  return r;
}

struct CensusSummary {
  int max_genus = 0;
  std::size_t total = 0;
  std::size_t arf = 0;
  std::size_t arf_disagreements = 0;
  std::size_t theorem_a_failures = 0;
  std::vector<std::size_t> count_by_genus;
};

inline CensusSummary summarize(const std::vector<CensusRecord>& records, int max_genus) {
  CensusSummary s;
  s.max_genus = max_genus;
  s.total = records.size();
  s.count_by_genus.assign(static_cast<std::size_t>(max_genus) + 1, 0);
  for (const auto& r : records) {
    ++s.count_by_genus[static_cast<std::size_t>(r.genus)];
    if (r.arf_pattern) ++s.arf;
    if (r.arf_definition != r.arf_pattern || r.arf_lipman != r.arf_pattern) ++s.arf_disagreements;
    if (r.theorem_a_status == Status::Fail) ++s.theorem_a_failures;
  }
  return s;
}

/// Records for every semigroup of genus <= max_genus in census order.
///
/// With jobs > 1 the tree is expanded breadth-first until the frontier has a
/// few subtrees per worker; workers then claim whole subtrees. The merged
/// rows are sorted, so the result does not depend on `jobs`.
inline std::vector<CensusRecord> census_records(int max_genus, unsigned jobs = 1) {
  check_genus_bound(max_genus);
  jobs = std::max(1u, jobs);

  std::vector<NumericalSemigroup> prefix;
  std::vector<NumericalSemigroup> frontier{NumericalSemigroup::naturals()};
  while (jobs > 1 && frontier.size() < 4 * static_cast<std::size_t>(jobs) && !frontier.empty() &&
         frontier.front().genus() < max_genus) {
    std::vector<NumericalSemigroup> next;
    for (const auto& s : frontier) {
      prefix.push_back(s);
      for (auto& k : tree_children(s)) next.push_back(std::move(k));
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<NumericalSemigroup, CensusRecord>> rows;
  std::mutex sink;
  std::atomic<std::size_t> next_task{0};
  const std::size_t tasks = frontier.size() + prefix.size();
  auto worker = [&] {
    std::vector<std::pair<NumericalSemigroup, CensusRecord>> local;
    for (std::size_t t; (t = next_task.fetch_add(1)) < tasks;) {
      if (t < prefix.size()) {
        local.emplace_back(prefix[t], make_census_record(prefix[t]));
      } else {
        for_each_in_subtree(frontier[t - prefix.size()], max_genus,
                            [&](const NumericalSemigroup& s) { local.emplace_back(s, make_census_record(s)); });
      }
    }
    std::lock_guard lock(sink);
    for (auto& row : local) rows.push_back(std::move(row));
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return census_less(a.first, b.first); });
  std::vector<CensusRecord> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(std::move(row.second));
  return out;
}

inline constexpr std::string_view kCensusColumns =
    "generators,genus,multiplicity,embedding_dimension,frobenius,arf_definition,arf_lipman,arf_pattern,"
    "chain_length,multiplicity_sequence,ideal_count,reflexive_count,all_reflexive_self_dual,theorem_a_status";

inline std::string_view theorem_a_label(Status s) noexcept { return s == Status::NotApplicable ? "n/a" : to_string(s); }

/// List fields are quoted since they contain commas.
inline void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records) {
  out << kCensusColumns << '\n';
  for (const auto& r : records) {
    out << '"' << join_ints(r.generators) << "\"," << r.genus << ',' << r.multiplicity << ','
        << r.embedding_dimension << ',' << r.frobenius << ',' << int(r.arf_definition) << ',' << int(r.arf_lipman)
        << ',' << int(r.arf_pattern) << ',' << r.chain_length << ",\"" << join_ints(r.multiplicity_sequence) << "\","
        << r.ideal_count << ',' << r.reflexive_count << ',' << int(r.all_reflexive_self_dual) << ','
        << theorem_a_label(r.theorem_a_status) << '\n';
  }
}

inline nlohmann::ordered_json census_record_json(const CensusRecord& r) {
  return {{"generators", r.generators},
          {"genus", r.genus},
          {"multiplicity", r.multiplicity},
          {"embedding_dimension", r.embedding_dimension},
          {"frobenius", r.frobenius},
          {"arf_definition", r.arf_definition},
          {"arf_lipman", r.arf_lipman},
          {"arf_pattern", r.arf_pattern},
          {"chain_length", r.chain_length},
          {"multiplicity_sequence", r.multiplicity_sequence},
          {"ideal_count", r.ideal_count},
          {"reflexive_count", r.reflexive_count},
          {"all_reflexive_self_dual", r.all_reflexive_self_dual},
          {"theorem_a_status", theorem_a_label(r.theorem_a_status)}};
}

inline nlohmann::ordered_json summary_json(const CensusSummary& s) {
  return {{"max_genus", s.max_genus},
          {"total", s.total},
          {"arf", s.arf},
          {"arf_disagreements", s.arf_disagreements},
          {"theorem_a_failures", s.theorem_a_failures},
          {"count_by_genus", s.count_by_genus}};
}

inline void write_census_json(std::ostream& out, const std::vector<CensusRecord>& records, int max_genus) {
  nlohmann::ordered_json doc;
  doc["summary"] = summary_json(summarize(records, max_genus));
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) doc["records"].push_back(census_record_json(r));
  out << doc.dump(2) << '\n';
}

enum class CensusFormat { Csv, Json };

inline std::string render_census(const std::vector<CensusRecord>& records, int max_genus, CensusFormat format) {
  std::ostringstream out;
  if (format == CensusFormat::Csv) {
    write_census_csv(out, records);
  } else {
    write_census_json(out, records, max_genus);
  }
  return out.str();
}

/// Runs the census and writes it to `path`.
inline CensusSummary census(int max_genus, const std::string& path, CensusFormat format, unsigned jobs = 1) {
  const auto records = census_records(max_genus, jobs);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoFailure, "cannot open " + path);
  file << render_census(records, max_genus, format);
  file.flush();
  if (!file) throw Error(ErrorKind::IoFailure, "write to " + path + " failed");
  return summarize(records, max_genus);
}

}  // namespace arfkit
