#include "treerel/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "treerel/tree.hpp"

namespace treerel {

namespace {

using nlohmann::json;

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '-';
}

// tokens: labels, '|', '->', '@const', 'kind:', 'labels:'
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '|') {
      out.emplace_back("|");
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.emplace_back("->");
      i += 2;
    } else if (label_char(c) || c == '@') {
      std::size_t start = i;
      if (c == '@') ++i;
      while (i < line.size() && label_char(line[i])) ++i;
      if (i < line.size() && line[i] == ':') ++i;  // kind: / labels:
      out.push_back(line.substr(start, i - start));
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  return out;
}

std::vector<Label> collect_labels(const std::set<Label>& seen) {
  return {seen.begin(), seen.end()};
}

}  // namespace

bool valid_label(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token)
    if (!label_char(c)) return false;
  return true;
}

TernaryRelation TripleFile::to_relation() const {
  TernaryRelation rel;
  rel.labels = labels;
  for (const RootedTriple& t : triples) {
    rel.tuples.insert({t[0], t[1], t[2]});
    rel.tuples.insert({t[1], t[0], t[2]});
  }
  return rel;
}

QuaternaryRelation QuartetFile::to_relation() const {
  QuaternaryRelation rel;
  rel.labels = labels;
  for (const QuartetTuple& q : quartets) {
    const Label &a = q[0], &b = q[1], &c = q[2], &d = q[3];
    for (const QuartetTuple& o :
         {QuartetTuple{a, b, c, d}, QuartetTuple{b, a, c, d},
          QuartetTuple{a, b, d, c}, QuartetTuple{b, a, d, c},
          QuartetTuple{c, d, a, b}, QuartetTuple{d, c, a, b},
          QuartetTuple{c, d, b, a}, QuartetTuple{d, c, b, a}})
      rel.tuples.insert(o);
  }
  return rel;
}

TripleFile parse_triples(std::istream& in) {
  TripleFile out;
  std::set<Label> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 4 || tokens[2] != "|" || !valid_label(tokens[0]) ||
        !valid_label(tokens[1]) || !valid_label(tokens[3]))
      throw SyntaxError("expected `a b | c`", lineno);
    out.triples.push_back({tokens[0], tokens[1], tokens[3]});
    seen.insert(tokens[0]);
    seen.insert(tokens[1]);
    seen.insert(tokens[3]);
  }
  out.labels = collect_labels(seen);
  return out;
}

QuartetFile parse_quartets(std::istream& in) {
  QuartetFile out;
  std::set<Label> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 5 || tokens[2] != "|" || !valid_label(tokens[0]) ||
        !valid_label(tokens[1]) || !valid_label(tokens[3]) ||
        !valid_label(tokens[4]))
      throw SyntaxError("expected `a b | c d`", lineno);
    out.quartets.push_back({tokens[0], tokens[1], tokens[3], tokens[4]});
    for (int i : {0, 1, 3, 4}) seen.insert(tokens[i]);
  }
  out.labels = collect_labels(seen);
  return out;
}

MapFile parse_map(std::istream& in) {
  MapFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "@const") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!valid_label(tokens[i]))
          throw SyntaxError("bad constant name", lineno);
        out.constants.push_back(tokens[i]);
      }
      continue;
    }
    if (tokens.size() != 3 || tokens[1] != "->" || !valid_label(tokens[0]) ||
        !valid_label(tokens[2]))
      throw SyntaxError("expected `src -> dst`", lineno);
    if (!out.assignment.emplace(tokens[0], tokens[2]).second)
      throw SyntaxError("repeated source " + tokens[0], lineno);
  }
  return out;
}

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_kind = false;
  bool have_labels = false;
  std::set<Label> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!have_kind) {
      if (tokens.size() != 2 || tokens[0] != "kind:")
        throw MalformedInstanceError("missing `kind:` header");
      if (tokens[1] == "triples")
        inst.kind = InstanceKind::triples;
      else if (tokens[1] == "quartets")
        inst.kind = InstanceKind::quartets;
      else if (tokens[1] == "forbidden")
        inst.kind = InstanceKind::forbidden_triples;
      else
        throw MalformedInstanceError("unknown kind " + tokens[1]);
      have_kind = true;
      continue;
    }
    if (tokens[0] == "labels:") {
      have_labels = true;
      for (std::size_t i = 1; i < tokens.size(); ++i)
        inst.labels.push_back(tokens[i]);
      continue;
    }
    bool quartet = inst.kind == InstanceKind::quartets;
    std::size_t want = quartet ? 5 : 4;
    if (tokens.size() != want || tokens[2] != "|")
      throw MalformedInstanceError("bad constraint on line " +
                                   std::to_string(lineno));
    std::vector<Label> c;
    if (quartet)
      c = {tokens[0], tokens[1], tokens[3], tokens[4]};
    else
      c = {tokens[0], tokens[1], tokens[3]};
    for (const Label& l : c) seen.insert(l);
    inst.constraints.push_back(std::move(c));
  }
  if (!have_kind) throw MalformedInstanceError("empty instance");
  if (!have_labels) inst.labels = collect_labels(seen);
  inst.validate();
  return inst;
}

std::string format_triples(const LeafStructure& s) {
  std::ostringstream out;
  for (const RootedTriple& t : s.rooted_triples())
    out << t[0] << " " << t[1] << " | " << t[2] << "\n";
  return out.str();
}

std::string format_quartets(const QuartetStructure& s) {
  std::ostringstream out;
  for (const QuartetTuple& q : s.quartets())
    out << q[0] << " " << q[1] << " | " << q[2] << " " << q[3] << "\n";
  return out.str();
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  switch (inst.kind) {
    case InstanceKind::triples: out << "kind: triples\n"; break;
    case InstanceKind::quartets: out << "kind: quartets\n"; break;
    case InstanceKind::forbidden_triples: out << "kind: forbidden\n"; break;
  }
  out << "labels:";
  for (const Label& l : inst.labels) out << " " << l;
  out << "\n";
  for (const auto& c : inst.constraints) {
    if (c.size() == 4)
      out << c[0] << " " << c[1] << " | " << c[2] << " " << c[3] << "\n";
    else
      out << c[0] << " " << c[1] << " | " << c[2] << "\n";
  }
  return out.str();
}

namespace {

std::string join_labels(const std::vector<Label>& ls) {
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += " ";
    out += ls[i];
  }
  return out;
}

std::string status_name(ExistentialStatus s) {
  switch (s) {
    case ExistentialStatus::holds: return "holds";
    case ExistentialStatus::fails_with_witness: return "fails_with_witness";
    case ExistentialStatus::skipped: return "skipped";
  }
  return "skipped";
}

}  // namespace

std::string to_text(const AxiomReport& report) {
  std::ostringstream out;
  out << "universal_violations: " << report.universal_violations.size() << "\n";
  for (const auto& v : report.universal_violations)
    out << "  " << v.axiom << " witness: " << join_labels(v.witness) << "\n";
  for (const auto& [axiom, res] : report.existential_status) {
    out << axiom << ": " << status_name(res.status);
    if (res.status == ExistentialStatus::fails_with_witness)
      out << " witness: " << join_labels(res.witness);
    out << "\n";
  }
  return out.str();
}

std::string to_json_text(const AxiomReport& report) {
  json j;
  j["universal_violations"] = json::array();
  for (const auto& v : report.universal_violations)
    j["universal_violations"].push_back(
        {{"axiom", v.axiom}, {"witness", v.witness}});
  j["existential_status"] = json::object();
  for (const auto& [axiom, res] : report.existential_status) {
    json e;
    e["status"] = status_name(res.status);
    if (res.status == ExistentialStatus::fails_with_witness)
      e["witness"] = res.witness;
    j["existential_status"][axiom] = e;
  }
  return j.dump();
}

std::string to_text(const BehaviorReport& report) {
  std::ostringstream out;
  out << "verdict: " << behavior_name(report.verdict) << "\n";
  out << "precondition_ok: " << (report.precondition_ok ? "true" : "false")
      << "\n";
  out << "holding:";
  for (Behavior b : report.holding) out << " " << behavior_name(b);
  out << "\n";
  for (const auto& w : report.witnesses)
    out << "  violates " << behavior_name(w.family) << ": "
        << join_labels(w.tuple) << "\n";
  return out.str();
}

std::string to_json_text(const BehaviorReport& report) {
  json j;
  j["verdict"] = behavior_name(report.verdict);
  j["precondition_ok"] = report.precondition_ok;
  j["holding"] = json::array();
  for (Behavior b : report.holding) j["holding"].push_back(behavior_name(b));
  j["witnesses"] = json::array();
  for (const auto& w : report.witnesses)
    j["witnesses"].push_back(
        {{"family", behavior_name(w.family)}, {"tuple", w.tuple}});
  return j.dump();
}

std::string to_text(const Solution& solution) {
  std::ostringstream out;
  out << (solution.satisfiable ? "satisfiable" : "unsatisfiable") << "\n";
  if (solution.tree) out << format_newick(*solution.tree) << "\n";
  out << "nodes_explored: " << solution.stats.nodes_explored << "\n";
  out << "elapsed_seconds: " << solution.stats.elapsed_seconds << "\n";
  return out.str();
}

std::string to_json_text(const Solution& solution) {
  json j;
  j["verdict"] = solution.satisfiable ? "satisfiable" : "unsatisfiable";
  if (solution.tree) j["tree"] = format_newick(*solution.tree);
  j["stats"] = {{"nodes_explored", solution.stats.nodes_explored},
                {"elapsed_seconds", solution.stats.elapsed_seconds}};
  return j.dump();
}

}  // namespace treerel
