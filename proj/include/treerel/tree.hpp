#ifndef TREEREL_TREE_HPP
#define TREEREL_TREE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treerel/errors.hpp"

namespace treerel {

using Label = std::string;

/// Rooted binary tree with uniquely labeled leaves. Every internal node has
/// exactly two children; the single-leaf tree is permitted. Child order is a
/// planar embedding: it matters for DFS leaf orders, not for logical equality.
/// Values are immutable after construction; the builders return fresh trees.
class RootedBinaryTree {
 public:
  struct Node {
    int parent = -1;
    int left = -1;
    int right = -1;
    int depth = 0;
    Label label;  // leaves only
  };

  static RootedBinaryTree leaf(const Label& label);
  static RootedBinaryTree join(const RootedBinaryTree& left,
                               const RootedBinaryTree& right);

  /// New tree with an extra leaf spliced into the edge above `edge_child`.
  /// The existing subtree keeps the left slot, the new leaf takes the right.
  RootedBinaryTree attach_at_edge(int edge_child, const Label& new_leaf) const;
  /// New tree with a fresh root whose children are the old tree and the leaf.
  RootedBinaryTree attach_above_root(const Label& new_leaf) const;

  int root() const { return root_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  bool is_leaf(int v) const { return nodes_[v].left < 0; }
  int left(int v) const { return nodes_[v].left; }
  int right(int v) const { return nodes_[v].right; }
  int parent(int v) const { return nodes_[v].parent; }
  int depth(int v) const { return nodes_[v].depth; }
  const Label& label(int leaf) const { return nodes_[leaf].label; }

  std::size_t leaf_count() const { return leaf_index_.size(); }
  bool has_leaf(const Label& label) const;
  int leaf_node(const Label& label) const;  // throws UnknownLabelError
  std::vector<Label> leaf_labels_sorted() const;
  std::vector<Label> leaf_labels_dfs() const;

  /// Youngest common ancestor: the node above all named leaves with maximal
  /// depth. Labels must be non-empty and present in the tree.
  int yca(const std::vector<Label>& labels) const;
  int yca_nodes(const std::vector<int>& nodes) const;

  /// s1|s2: neither yca lies (weakly) below the other.
  bool separated(const std::vector<Label>& s1,
                 const std::vector<Label>& s2) const;

  /// True iff `ancestor` lies on the root path of `v` (weakly).
  bool lies_below(int v, int ancestor) const;

  std::vector<int> preorder() const;
  /// Leaf labels of the subtree rooted at `v`, in DFS order.
  std::vector<Label> subtree_leaves(int v) const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
  std::map<Label, int> leaf_index_;

  void reindex();
  friend RootedBinaryTree reroot_tree(const RootedBinaryTree&, const Label&);
};

class LeafStructure;     // relation.hpp
class QuartetStructure;  // relation.hpp

/// Finite map label -> binary word whose word set is prefix-free.
class LeafWordSet {
 public:
  explicit LeafWordSet(std::map<Label, std::string> entries);
  const std::map<Label, std::string>& entries() const { return entries_; }

 private:
  std::map<Label, std::string> entries_;
};

LeafStructure to_leaf_structure(const RootedBinaryTree& tree);
QuartetStructure to_quartets(const RootedBinaryTree& tree);

/// Convex leaf order by depth-first search. When `last` is given, the child
/// whose subtree contains it is explored second at every step, so `last` ends
/// up maximal.
std::vector<Label> convex_order_dfs(const RootedBinaryTree& tree,
                                    const std::optional<Label>& last = {});

/// All leaf orders arising from the 2^(n-1) planar embeddings, in a fixed
/// order (may repeat for degenerate shapes; callers dedupe).
std::vector<std::vector<Label>> all_embedding_orders(
    const RootedBinaryTree& tree);

/// Delete leaf c, suppress its degree-2 parent and re-root the unrooted tree
/// at the point where c was attached. Requires >= 3 leaves.
RootedBinaryTree reroot_tree(const RootedBinaryTree& tree, const Label& c);

constexpr int kDefaultEnumerationBound = 9;

/// All labeled rooted binary trees on the given labels, deterministically:
/// leaves are inserted in sorted label order and the k-th leaf is attached to
/// each of the 2k-3 positions (preorder edges, then above the root).
std::vector<RootedBinaryTree> enumerate_trees(
    const std::vector<Label>& labels, int bound = kDefaultEnumerationBound);

/// Visitor form of enumerate_trees; emits trees in the same order. The
/// callback returns false to stop early.
void for_each_tree(const std::vector<Label>& labels,
                   const std::function<bool(const RootedBinaryTree&)>& fn,
                   int bound = kDefaultEnumerationBound);

/// Number of labeled rooted binary trees on n leaves: (2n-3)!! for n >= 2.
std::uint64_t tree_count(int n);

/// Tree whose leaf structure satisfies C(x; y,z) <=> |lcp(y,z)| > |lcp(x,y)|.
/// Degree-2 chains of the word trie are suppressed.
RootedBinaryTree words_to_tree(const LeafWordSet& words);

RootedBinaryTree parse_newick(const std::string& text);
std::string format_newick(const RootedBinaryTree& tree);

}  // namespace treerel

#endif
