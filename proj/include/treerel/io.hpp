#ifndef TREEREL_IO_HPP
#define TREEREL_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "treerel/morphisms.hpp"
#include "treerel/relation.hpp"
#include "treerel/solvers.hpp"

namespace treerel {

/// Parsed triple file: lines `a b | c` meaning ab|c, `#` comments.
struct TripleFile {
  std::vector<Label> labels;  // sorted union of mentioned labels
  std::vector<RootedTriple> triples;

  TernaryRelation to_relation() const;
};

/// Parsed quartet file: lines `a b | c d` meaning Q(ab, cd).
struct QuartetFile {
  std::vector<Label> labels;
  std::vector<QuartetTuple> quartets;

  QuaternaryRelation to_relation() const;
};

/// Parsed map file: lines `src -> dst`, `@const c1 c2 ...` for constants.
struct MapFile {
  std::map<Label, Label> assignment;
  std::vector<Label> constants;
};

TripleFile parse_triples(std::istream& in);
QuartetFile parse_quartets(std::istream& in);
MapFile parse_map(std::istream& in);

/// Instance file: `kind: triples|quartets|forbidden` header, an optional
/// `labels: ...` line, then constraint lines in the owning format.
Instance parse_instance(std::istream& in);

std::string format_triples(const LeafStructure& s);
std::string format_quartets(const QuartetStructure& s);
std::string format_instance(const Instance& inst);

std::string to_text(const AxiomReport& report);
std::string to_json_text(const AxiomReport& report);
std::string to_text(const BehaviorReport& report);
std::string to_json_text(const BehaviorReport& report);
std::string to_text(const Solution& solution);
std::string to_json_text(const Solution& solution);

bool valid_label(const std::string& token);

}  // namespace treerel

#endif
