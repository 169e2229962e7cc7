#ifndef TREEREL_RECONSTRUCT_HPP
#define TREEREL_RECONSTRUCT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treerel/morphisms.hpp"
#include "treerel/relation.hpp"
#include "treerel/tree.hpp"

namespace treerel {

/// BUILD: returns a binary tree on `labels` satisfying every triple ab|c, or
/// nullopt when no such tree exists. Components are explored in sorted
/// minimal-label order and multifurcations are binarized as a left comb, so
/// the output is deterministic. Returned trees are re-verified against the
/// input triples.
std::optional<RootedBinaryTree> build_from_triples(
    const std::vector<Label>& labels, const std::vector<RootedTriple>& triples,
    std::uint64_t* nodes_explored = nullptr);

/// True iff every listed triple holds in the tree.
bool satisfies_all(const RootedBinaryTree& tree,
                   const std::vector<RootedTriple>& triples);

/// Amalgam of b1 and b2 over their common restriction: a tree whose leaf
/// structure restricts to b1 and to b2 under the identity on labels. Throws
/// NotAmalgamableError when the restrictions to the overlap disagree.
RootedBinaryTree amalgamate(const LeafStructure& b1, const LeafStructure& b2);

/// C(x; y,z) on labels\{c} <=> Q(cx, yz). The inverse of rerooting at the
/// relation level.
LeafStructure reroot_relation(const QuartetStructure& q, const Label& c);

struct IsoResult {
  bool isomorphic = false;
  std::map<Label, Label> witness;
};

/// Label-bijective isomorphism of leaf structures; the witness transports
/// rooted triples onto rooted triples.
IsoResult is_isomorphic(const LeafStructure& s1, const LeafStructure& s2);

enum class KeyKind { labeled, shape };

/// Canonical text key: recursive minimal newick over sorted subtree keys of
/// the recovered tree. `labeled` keys are equal iff the structures are equal
/// as labeled structures; `shape` keys abstract the labels away.
std::string canonical_form(const LeafStructure& s, KeyKind kind);
std::string canonical_form(const RootedBinaryTree& tree, KeyKind kind);

struct OnePointExtension {
  RootedBinaryTree host;
  PartialMap map;
  Label new_leaf;  // host label the fresh point landed on
};

/// Grows the host by exactly one leaf and extends the C-preserving map f by
/// the fresh point `a`, whose triples over domain(f) are given in
/// `type_triples` (each must mention a). The realized type is completed via
/// build_from_triples; the attachment point is the first host position under
/// which the extended map preserves C.
OnePointExtension extend_one_point(const RootedBinaryTree& host,
                                   const PartialMap& f, const Label& a,
                                   const std::vector<RootedTriple>& type_triples);

}  // namespace treerel

#endif
