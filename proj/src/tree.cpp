#include "treerel/tree.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "treerel/relation.hpp"

namespace treerel {

namespace {

bool valid_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '-';
}

}  // namespace

void RootedBinaryTree::reindex() {
  leaf_index_.clear();
  // depths + leaf index in one pass from the root
  std::vector<int> stack{root_};
  nodes_[root_].depth = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (is_leaf(v)) {
      auto [it, inserted] = leaf_index_.emplace(nodes_[v].label, v);
      if (!inserted) throw DuplicateLabelError(nodes_[v].label);
    } else {
      nodes_[nodes_[v].left].depth = nodes_[v].depth + 1;
      nodes_[nodes_[v].right].depth = nodes_[v].depth + 1;
      stack.push_back(nodes_[v].right);
      stack.push_back(nodes_[v].left);
    }
  }
}

RootedBinaryTree RootedBinaryTree::leaf(const Label& label) {
  RootedBinaryTree t;
  Node n;
  n.label = label;
  t.nodes_.push_back(n);
  t.root_ = 0;
  t.reindex();
  return t;
}

RootedBinaryTree RootedBinaryTree::join(const RootedBinaryTree& left,
                                        const RootedBinaryTree& right) {
  RootedBinaryTree t;
  t.nodes_ = left.nodes_;
  int offset = left.node_count();
  for (Node n : right.nodes_) {
    if (n.parent >= 0) n.parent += offset;
    if (n.left >= 0) {
      n.left += offset;
      n.right += offset;
    }
    t.nodes_.push_back(n);
  }
  Node root;
  root.left = left.root_;
  root.right = right.root_ + offset;
  t.nodes_.push_back(root);
  t.root_ = t.node_count() - 1;
  t.nodes_[root.left].parent = t.root_;
  t.nodes_[root.right].parent = t.root_;
  t.reindex();
  return t;
}

RootedBinaryTree RootedBinaryTree::attach_at_edge(int edge_child,
                                                  const Label& new_leaf) const {
  RootedBinaryTree t = *this;
  int p = t.nodes_[edge_child].parent;
  Node leaf_node;
  leaf_node.label = new_leaf;
  t.nodes_.push_back(leaf_node);
  int leaf_id = t.node_count() - 1;
  Node mid;
  mid.left = edge_child;
  mid.right = leaf_id;
  mid.parent = p;
  t.nodes_.push_back(mid);
  int mid_id = t.node_count() - 1;
  t.nodes_[edge_child].parent = mid_id;
  t.nodes_[leaf_id].parent = mid_id;
  if (p < 0) {
    t.root_ = mid_id;
  } else if (t.nodes_[p].left == edge_child) {
    t.nodes_[p].left = mid_id;
  } else {
    t.nodes_[p].right = mid_id;
  }
  t.reindex();
  return t;
}

RootedBinaryTree RootedBinaryTree::attach_above_root(
    const Label& new_leaf) const {
  return join(*this, RootedBinaryTree::leaf(new_leaf));
}

bool RootedBinaryTree::has_leaf(const Label& label) const {
  return leaf_index_.count(label) > 0;
}

int RootedBinaryTree::leaf_node(const Label& label) const {
  auto it = leaf_index_.find(label);
  if (it == leaf_index_.end()) throw UnknownLabelError(label);
  return it->second;
}

std::vector<Label> RootedBinaryTree::leaf_labels_sorted() const {
  std::vector<Label> out;
  out.reserve(leaf_index_.size());
  for (const auto& [label, node] : leaf_index_) out.push_back(label);
  return out;
}

std::vector<Label> RootedBinaryTree::leaf_labels_dfs() const {
  std::vector<Label> out;
  for (int v : preorder())
    if (is_leaf(v)) out.push_back(nodes_[v].label);
  return out;
}

int RootedBinaryTree::yca_nodes(const std::vector<int>& nodes) const {
  if (nodes.empty()) throw BadParametersError("yca of empty set");
  int acc = nodes[0];
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    int u = acc, v = nodes[i];
    while (u != v) {
      if (nodes_[u].depth >= nodes_[v].depth)
        u = nodes_[u].parent;
      else
        v = nodes_[v].parent;
    }
    acc = u;
  }
  return acc;
}

int RootedBinaryTree::yca(const std::vector<Label>& labels) const {
  std::vector<int> nodes;
  nodes.reserve(labels.size());
  for (const Label& l : labels) nodes.push_back(leaf_node(l));
  return yca_nodes(nodes);
}

bool RootedBinaryTree::lies_below(int v, int ancestor) const {
  while (v >= 0) {
    if (v == ancestor) return true;
    v = nodes_[v].parent;
  }
  return false;
}

bool RootedBinaryTree::separated(const std::vector<Label>& s1,
                                 const std::vector<Label>& s2) const {
  if (s1.empty() || s2.empty())
    throw BadParametersError("separated: empty side");
  int u = yca(s1);
  int v = yca(s2);
  return !lies_below(u, v) && !lies_below(v, u);
}

std::vector<int> RootedBinaryTree::preorder() const {
  std::vector<int> out;
  out.reserve(nodes_.size());
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    if (!is_leaf(v)) {
      stack.push_back(nodes_[v].right);
      stack.push_back(nodes_[v].left);
    }
  }
  return out;
}

std::vector<Label> RootedBinaryTree::subtree_leaves(int v) const {
  std::vector<Label> out;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (is_leaf(u)) {
      out.push_back(nodes_[u].label);
    } else {
      stack.push_back(nodes_[u].right);
      stack.push_back(nodes_[u].left);
    }
  }
  return out;
}

LeafWordSet::LeafWordSet(std::map<Label, std::string> entries)
    : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    for (auto jt = entries_.begin(); jt != entries_.end(); ++jt) {
      if (it == jt) continue;
      const std::string& a = it->second;
      const std::string& b = jt->second;
      if (a.size() <= b.size() && b.compare(0, a.size(), a) == 0)
        throw NotPrefixFreeError("word of " + it->first + " is a prefix of " +
                                 jt->first + "'s word");
    }
  }
}

LeafStructure to_leaf_structure(const RootedBinaryTree& tree) {
  std::vector<Label> labels = tree.leaf_labels_sorted();
  int n = static_cast<int>(labels.size());
  std::vector<int> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = tree.leaf_node(labels[i]);
  std::vector<std::array<int, 4>> apex;  // (i, j, k, apex position 0..2)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        // the pair with the deepest join is separated from the third leaf
        int dij = tree.depth(tree.yca_nodes({nodes[i], nodes[j]}));
        int dik = tree.depth(tree.yca_nodes({nodes[i], nodes[k]}));
        int djk = tree.depth(tree.yca_nodes({nodes[j], nodes[k]}));
        int a;
        if (djk > dij && djk > dik)
          a = 0;
        else if (dik > dij && dik > djk)
          a = 1;
        else
          a = 2;
        apex.push_back({i, j, k, a});
      }
  return LeafStructure::from_apex_table(labels, apex);
}

QuartetStructure to_quartets(const RootedBinaryTree& tree) {
  std::vector<Label> labels = tree.leaf_labels_sorted();
  int n = static_cast<int>(labels.size());
  std::vector<std::array<int, 5>> pairings;  // (i,j,k,l, partner-of-i 1..3)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          std::array<int, 4> q{i, j, k, l};
          int code = 0;
          for (int partner = 1; partner <= 3; ++partner) {
            std::vector<Label> left{labels[q[0]], labels[q[partner]]};
            std::vector<Label> rightside;
            for (int t = 1; t <= 3; ++t)
              if (t != partner) rightside.push_back(labels[q[t]]);
            bool holds =
                (tree.separated(left, {rightside[0]}) &&
                 tree.separated(left, {rightside[1]})) ||
                (tree.separated({left[0]}, rightside) &&
                 tree.separated({left[1]}, rightside));
            if (holds) {
              if (code != 0)
                throw InvalidStructureError("ambiguous quartet pairing");
              code = partner;
            }
          }
          if (code == 0) throw InvalidStructureError("no quartet pairing");
          pairings.push_back({i, j, k, l, code});
        }
  return QuartetStructure::from_pairing_table(labels, pairings);
}

std::vector<Label> convex_order_dfs(const RootedBinaryTree& tree,
                                    const std::optional<Label>& last) {
  std::set<int> late;  // nodes above `last`: explored as late as possible
  if (last) {
    int v = tree.leaf_node(*last);
    while (v >= 0) {
      late.insert(v);
      v = tree.parent(v);
    }
  }
  std::vector<Label> out;
  std::vector<int> stack{tree.root()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (tree.is_leaf(v)) {
      out.push_back(tree.label(v));
      continue;
    }
    int first = tree.left(v), second = tree.right(v);
    if (late.count(first)) std::swap(first, second);
    stack.push_back(second);
    stack.push_back(first);
  }
  return out;
}

namespace {

std::vector<std::vector<Label>> embedding_orders_rec(
    const RootedBinaryTree& tree, int v) {
  if (tree.is_leaf(v)) return {{tree.label(v)}};
  auto ls = embedding_orders_rec(tree, tree.left(v));
  auto rs = embedding_orders_rec(tree, tree.right(v));
  std::vector<std::vector<Label>> out;
  out.reserve(2 * ls.size() * rs.size());
  for (const auto& a : ls)
    for (const auto& b : rs) {
      std::vector<Label> fwd = a;
      fwd.insert(fwd.end(), b.begin(), b.end());
      out.push_back(std::move(fwd));
      std::vector<Label> rev = b;
      rev.insert(rev.end(), a.begin(), a.end());
      out.push_back(std::move(rev));
    }
  return out;
}

}  // namespace

std::vector<std::vector<Label>> all_embedding_orders(
    const RootedBinaryTree& tree) {
  return embedding_orders_rec(tree, tree.root());
}

namespace {

// Builds the rooted tree for reroot_tree from an unrooted adjacency list,
// ordering children by minimal leaf label.
struct UnrootedBuilder {
  const std::map<int, std::vector<int>>& adj;
  const std::map<int, Label>& leaf_of;

  std::pair<RootedBinaryTree, Label> orient(int v, int from) const {
    auto lf = leaf_of.find(v);
    if (lf != leaf_of.end())
      return {RootedBinaryTree::leaf(lf->second), lf->second};
    std::vector<std::pair<RootedBinaryTree, Label>> kids;
    for (int u : adj.at(v))
      if (u != from) kids.push_back(orient(u, v));
    if (kids.size() != 2)
      throw InvalidStructureError("non-binary vertex while rerooting");
    if (kids[1].second < kids[0].second) std::swap(kids[0], kids[1]);
    return {RootedBinaryTree::join(kids[0].first, kids[1].first),
            std::min(kids[0].second, kids[1].second)};
  }
};

}  // namespace

RootedBinaryTree reroot_tree(const RootedBinaryTree& tree, const Label& c) {
  if (tree.leaf_count() < 3)
    throw TooSmallError("reroot_tree needs at least 3 leaves");
  int cnode = tree.leaf_node(c);

  // unrooted adjacency with the old root suppressed
  std::map<int, std::vector<int>> adj;
  std::map<int, Label> leaf_of;
  for (int v : tree.preorder()) {
    if (tree.is_leaf(v)) leaf_of[v] = tree.label(v);
    if (v == tree.root()) continue;
    int p = tree.parent(v);
    if (p == tree.root()) {
      int sib = (tree.left(p) == v) ? tree.right(p) : tree.left(p);
      adj[v].push_back(sib);
    } else {
      adj[v].push_back(p);
      adj[p].push_back(v);
    }
  }

  int attach = adj[cnode].front();
  auto& ns = adj[attach];
  ns.erase(std::remove(ns.begin(), ns.end(), cnode), ns.end());
  if (ns.size() != 2)
    throw InvalidStructureError("unexpected degree while rerooting");

  UnrootedBuilder builder{adj, leaf_of};
  auto first = builder.orient(ns[0], attach);
  auto second = builder.orient(ns[1], attach);
  if (second.second < first.second) std::swap(first, second);
  return RootedBinaryTree::join(first.first, second.first);
}

std::uint64_t tree_count(int n) {
  if (n <= 1) return n == 1 ? 1 : 0;
  std::uint64_t c = 1;
  for (int k = 3; k <= 2 * n - 3; k += 2) c *= static_cast<std::uint64_t>(k);
  return c;
}

namespace {

bool enumerate_rec(const RootedBinaryTree& t,
                   const std::vector<Label>& labels, std::size_t next,
                   const std::function<bool(const RootedBinaryTree&)>& fn) {
  if (next == labels.size()) return fn(t);
  for (int v : t.preorder()) {
    if (v == t.root()) continue;
    if (!enumerate_rec(t.attach_at_edge(v, labels[next]), labels, next + 1,
                       fn))
      return false;
  }
  return enumerate_rec(t.attach_above_root(labels[next]), labels, next + 1,
                       fn);
}

}  // namespace

void for_each_tree(const std::vector<Label>& labels,
                   const std::function<bool(const RootedBinaryTree&)>& fn,
                   int bound) {
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != labels.size())
    throw DuplicateLabelError("enumerate_trees: repeated label");
  if (sorted.empty())
    throw BadParametersError("enumerate_trees: empty label set");
  if (static_cast<int>(sorted.size()) > bound)
    throw BoundExceededError("enumerate_trees: " +
                             std::to_string(sorted.size()) + " labels > bound " +
                             std::to_string(bound));
  enumerate_rec(RootedBinaryTree::leaf(sorted[0]), sorted, 1, fn);
}

std::vector<RootedBinaryTree> enumerate_trees(const std::vector<Label>& labels,
                                              int bound) {
  std::vector<RootedBinaryTree> out;
  for_each_tree(
      labels,
      [&](const RootedBinaryTree& t) {
        out.push_back(t);
        return true;
      },
      bound);
  return out;
}

namespace {

struct TrieNode {
  std::map<char, int> children;
  std::optional<Label> label;
};

RootedBinaryTree trie_to_tree(const std::vector<TrieNode>& trie, int v) {
  const TrieNode& node = trie[v];
  if (node.children.empty()) return RootedBinaryTree::leaf(*node.label);
  if (node.children.size() == 1)
    return trie_to_tree(trie, node.children.begin()->second);
  if (node.children.size() != 2)
    throw NotBinaryBranchingError("branching of arity " +
                                  std::to_string(node.children.size()));
  auto it = node.children.begin();
  int a = it->second;
  int b = std::next(it)->second;
  return RootedBinaryTree::join(trie_to_tree(trie, a), trie_to_tree(trie, b));
}

}  // namespace

RootedBinaryTree words_to_tree(const LeafWordSet& words) {
  if (words.entries().empty())
    throw BadParametersError("words_to_tree: empty word set");
  std::vector<TrieNode> trie(1);
  for (const auto& [label, word] : words.entries()) {
    int v = 0;
    for (char c : word) {
      auto it = trie[v].children.find(c);
      if (it == trie[v].children.end()) {
        trie.push_back(TrieNode{});
        it = trie[v].children.emplace(c, static_cast<int>(trie.size()) - 1)
                 .first;
      }
      v = it->second;
    }
    trie[v].label = label;
  }
  return trie_to_tree(trie, 0);
}

namespace {

struct NewickParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos);
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  Label parse_label() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && valid_label_char(text[pos])) ++pos;
    if (pos == start) throw SyntaxError("expected label", pos);
    return text.substr(start, pos - start);
  }

  RootedBinaryTree parse_subtree() {
    if (peek() == '(') {
      ++pos;
      RootedBinaryTree left = parse_subtree();
      expect(',');
      RootedBinaryTree right = parse_subtree();
      skip_ws();
      if (pos < text.size() && text[pos] == ',')
        throw NonBinaryError("internal node with more than 2 children");
      expect(')');
      return RootedBinaryTree::join(left, right);
    }
    return RootedBinaryTree::leaf(parse_label());
  }

  RootedBinaryTree parse() {
    RootedBinaryTree t = parse_subtree();
    expect(';');
    skip_ws();
    if (pos != text.size()) throw SyntaxError("trailing input", pos);
    return t;
  }
};

void format_rec(const RootedBinaryTree& t, int v, std::ostringstream& out) {
  if (t.is_leaf(v)) {
    out << t.label(v);
    return;
  }
  out << '(';
  format_rec(t, t.left(v), out);
  out << ',';
  format_rec(t, t.right(v), out);
  out << ')';
}

}  // namespace

RootedBinaryTree parse_newick(const std::string& text) {
  NewickParser p{text};
  return p.parse();
}

std::string format_newick(const RootedBinaryTree& tree) {
  std::ostringstream out;
  format_rec(tree, tree.root(), out);
  out << ';';
  return out.str();
}

}  // namespace treerel
