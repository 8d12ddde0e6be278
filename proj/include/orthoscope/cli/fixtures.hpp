#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orthoscope/cli/report.hpp"

namespace orthoscope {

/// One corpus record. Records are blocks of "key: value" lines separated by
/// blank lines; '#' starts a comment line. `fact` may repeat.
struct Fixture {
  std::string name;
  std::string source;
  std::string command = "classify";
  std::string expected_verdict;
  std::optional<std::string> expected_beta;
  std::optional<std::string> expected_witness;
  std::vector<std::pair<std::string, std::string>> expected_facts;
  std::string anchor;
  std::vector<std::string> notes;
};

struct FixtureOutcome {
  std::string name;
  bool passed = false;
  std::string message;
  std::optional<Report> report;
};

inline std::vector<Fixture> parse_fixtures(std::istream& in) {
  std::vector<Fixture> out;
  Fixture cur;
  bool open = false;
  auto flush = [&] {
    if (open) {
      if (cur.name.empty() || cur.source.empty() || cur.expected_verdict.empty())
        throw ParseError("fixture record needs name, source and expected_verdict", 0);
      out.push_back(cur);
    }
    cur = Fixture{};
    open = false;
  };
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t here = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", here);
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    open = true;
    if (key == "name") cur.name = value;
    else if (key == "source") cur.source = value;
    else if (key == "command") cur.command = value;
    else if (key == "expected_verdict") cur.expected_verdict = value;
    else if (key == "expected_beta") cur.expected_beta = value;
    else if (key == "expected_witness") cur.expected_witness = value;
    else if (key == "fact") {
      auto eq = value.find(" => ");
      if (eq == std::string::npos) throw ParseError("fact needs 'name => value'", here);
      cur.expected_facts.emplace_back(value.substr(0, eq), value.substr(eq + 4));
    } else if (key == "anchor") cur.anchor = value;
    else if (key == "note") cur.notes.push_back(value);
    else throw ParseError("unknown fixture key '" + key + "'", here);
  }
  flush();
  return out;
}

inline std::vector<Fixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture file " + path);
  return parse_fixtures(in);
}

inline FixtureOutcome run_fixture(const Fixture& fx) {
  FixtureOutcome res{fx.name};
  std::ostringstream why;
  try {
    Report rep = run(fx.command, parse_system(fx.source));
    emit_json(rep);  // re-verifies the witness
    if (rep.verdict != fx.expected_verdict) why << "verdict " << rep.verdict << " != " << fx.expected_verdict << "; ";
    if (rep.search && rep.search->status == SearchStatus::inconclusive) why << "search inconclusive; ";
    if (fx.expected_beta) {
      std::string got = rep.search && rep.search->beta ? rep.search->beta->get_str() : "none";
      if (got != *fx.expected_beta) why << "beta " << got << " != " << *fx.expected_beta << "; ";
    }
    if (fx.expected_witness) {
      std::string got = rep.witness ? rep.witness->h.to_string() : "none";
      if (got != *fx.expected_witness) why << "witness " << got << " != " << *fx.expected_witness << "; ";
    }
    for (const auto& [k, v] : fx.expected_facts) {
      auto it = std::find_if(rep.facts.begin(), rep.facts.end(), [&](const auto& f) { return f.first == k; });
      if (it == rep.facts.end()) why << "missing fact '" << k << "'; ";
      else if (it->second != v) why << k << ": " << it->second << " != " << v << "; ";
    }
    res.report = std::move(rep);
  } catch (const InconsistencyError&) {
    throw;  // a failed witness aborts the whole run
  } catch (const std::exception& e) {
    why << "error: " << e.what();
  }
  res.message = why.str();
  res.passed = res.message.empty();
  return res;
}

inline std::vector<FixtureOutcome> run_fixtures(const std::vector<Fixture>& fixtures) {
  std::vector<FixtureOutcome> out;
  out.reserve(fixtures.size());
  for (const auto& fx : fixtures) out.push_back(run_fixture(fx));
  return out;
}

}  // namespace orthoscope
