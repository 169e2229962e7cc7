#ifndef TREEREL_SOLVERS_HPP
#define TREEREL_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "treerel/relation.hpp"
#include "treerel/tree.hpp"

namespace treerel {

enum class InstanceKind { triples, quartets, forbidden_triples };

struct Instance {
  InstanceKind kind = InstanceKind::triples;
  std::vector<Label> labels;
  // 3 labels per constraint for (forbidden) triples, 4 for quartets
  std::vector<std::vector<Label>> constraints;

  void validate() const;  // throws MalformedInstanceError
};

struct SolveStats {
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

struct Solution {
  bool satisfiable = false;
  std::optional<RootedBinaryTree> tree;
  SolveStats stats;
};

/// Rooted triple consistency via BUILD; polynomial. A satisfiable verdict
/// ships a tree verified against every constraint.
Solution solve_rooted_triples(const Instance& inst);

constexpr int kDefaultSolverBound = 9;

/// Quartet consistency by exhaustive search over all labeled trees; returns
/// the first satisfying tree in enumeration order.
Solution solve_quartets(const Instance& inst,
                        int max_labels = kDefaultSolverBound);

/// Search for a tree avoiding every listed triple.
Solution solve_forbidden_triples(const Instance& inst,
                                 int max_labels = kDefaultSolverBound);

/// Deterministic instance generator. With zero noise and a planted tree the
/// instance is satisfied by the planted tree; noisy constraints are
/// re-oriented uniformly at random.
Instance generate_instance(InstanceKind kind, int n_labels,
                           const std::optional<RootedBinaryTree>& planted,
                           double noise, std::uint64_t seed);

/// Deterministic random tree on the given labels (used for planting).
RootedBinaryTree random_tree(const std::vector<Label>& labels,
                             std::uint64_t seed);

}  // namespace treerel

#endif
