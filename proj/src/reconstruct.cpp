#include "treerel/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace treerel {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::optional<RootedBinaryTree> build_rec(
    const std::vector<Label>& s, const std::vector<RootedTriple>& triples,
    std::uint64_t* explored) {
  if (explored) ++*explored;
  if (s.size() == 1) return RootedBinaryTree::leaf(s[0]);

  std::map<Label, int> pos;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) pos[s[i]] = i;
  UnionFind uf(static_cast<int>(s.size()));
  std::vector<RootedTriple> inner;
  for (const RootedTriple& t : triples) {
    auto a = pos.find(t[0]);
    auto b = pos.find(t[1]);
    auto c = pos.find(t[2]);
    if (a == pos.end() || b == pos.end() || c == pos.end()) continue;
    inner.push_back(t);
    uf.unite(a->second, b->second);
  }

  std::map<int, std::vector<Label>> comps;  // keyed by min position
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    comps[uf.find(i)].push_back(s[i]);
  if (comps.size() < 2) return std::nullopt;

  std::vector<std::vector<Label>> parts;
  for (auto& [rep, members] : comps) parts.push_back(std::move(members));
  std::sort(parts.begin(), parts.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  std::optional<RootedBinaryTree> acc;
  for (const auto& part : parts) {
    auto sub = build_rec(part, inner, explored);
    if (!sub) return std::nullopt;
    acc = acc ? RootedBinaryTree::join(*acc, *sub) : *sub;
  }
  return acc;
}

}  // namespace

bool satisfies_all(const RootedBinaryTree& tree,
                   const std::vector<RootedTriple>& triples) {
  for (const RootedTriple& t : triples)
    if (!tree.separated({t[0], t[1]}, {t[2]})) return false;
  return true;
}

std::optional<RootedBinaryTree> build_from_triples(
    const std::vector<Label>& labels, const std::vector<RootedTriple>& triples,
    std::uint64_t* nodes_explored) {
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) throw DuplicateLabelError(sorted[i]);
  if (sorted.empty()) throw BadParametersError("build: empty label set");
  for (const RootedTriple& t : triples) {
    for (const Label& l : t)
      if (!std::binary_search(sorted.begin(), sorted.end(), l))
        throw UnknownLabelError(l);
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
      throw BadParametersError("triple with repeated entries");
  }
  auto tree = build_rec(sorted, triples, nodes_explored);
  if (tree && !satisfies_all(*tree, triples))
    throw std::logic_error("BUILD output failed verification");
  return tree;
}

RootedBinaryTree amalgamate(const LeafStructure& b1, const LeafStructure& b2) {
  std::vector<Label> overlap;
  std::set_intersection(b1.labels().begin(), b1.labels().end(),
                        b2.labels().begin(), b2.labels().end(),
                        std::back_inserter(overlap));
  if (!overlap.empty() && !(restrict(b1, overlap) == restrict(b2, overlap)))
    throw NotAmalgamableError("restrictions disagree on the overlap");

  std::vector<Label> all;
  std::set_union(b1.labels().begin(), b1.labels().end(), b2.labels().begin(),
                 b2.labels().end(), std::back_inserter(all));
  std::vector<RootedTriple> triples = b1.rooted_triples();
  auto t2 = b2.rooted_triples();
  triples.insert(triples.end(), t2.begin(), t2.end());

  auto tree = build_from_triples(all, triples);
  if (!tree)
    throw NotAmalgamableError("no common realization of the two structures");
  LeafStructure joined = to_leaf_structure(*tree);
  if (!(restrict(joined, b1.labels()) == b1) ||
      !(restrict(joined, b2.labels()) == b2))
    throw std::logic_error("amalgam failed its restriction contract");
  return *tree;
}

LeafStructure reroot_relation(const QuartetStructure& q, const Label& c) {
  q.index_of(c);
  std::vector<Label> labels;
  for (const Label& l : q.labels())
    if (l != c) labels.push_back(l);
  int n = static_cast<int>(labels.size());
  std::vector<std::array<int, 4>> table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::array<int, 3> subset{i, j, k};
        int apexpos = -1;
        for (int t = 0; t < 3; ++t) {
          const Label& apex = labels[subset[t]];
          const Label& p = labels[subset[(t + 1) % 3]];
          const Label& r = labels[subset[(t + 2) % 3]];
          if (q.contains(c, apex, p, r)) {
            if (apexpos >= 0)
              throw InvalidStructureError("rerooted relation has two apexes");
            apexpos = t;
          }
        }
        if (apexpos < 0)
          throw InvalidStructureError("rerooted relation misses an apex");
        table.push_back({i, j, k, apexpos});
      }
  return LeafStructure::from_apex_table(std::move(labels), table);
}

namespace {

std::optional<RootedBinaryTree> tree_of(const LeafStructure& s) {
  if (s.labels().empty()) return std::nullopt;
  auto tree = build_from_triples(s.labels(), s.rooted_triples());
  if (!tree)
    throw InvalidStructureError("structure is not realized by any tree");
  return tree;
}

std::string key_rec(const RootedBinaryTree& t, int v, KeyKind kind) {
  if (t.is_leaf(v)) return kind == KeyKind::labeled ? t.label(v) : "*";
  std::string a = key_rec(t, t.left(v), kind);
  std::string b = key_rec(t, t.right(v), kind);
  if (b < a) std::swap(a, b);
  return "(" + a + "," + b + ")";
}

void witness_rec(const RootedBinaryTree& t1, int v1, const RootedBinaryTree& t2,
                 int v2, std::map<Label, Label>& out) {
  if (t1.is_leaf(v1)) {
    out[t1.label(v1)] = t2.label(v2);
    return;
  }
  std::string l1 = key_rec(t1, t1.left(v1), KeyKind::shape);
  std::string r1 = key_rec(t1, t1.right(v1), KeyKind::shape);
  std::string l2 = key_rec(t2, t2.left(v2), KeyKind::shape);
  std::string r2 = key_rec(t2, t2.right(v2), KeyKind::shape);
  int a1 = t1.left(v1), b1 = t1.right(v1);
  if (r1 < l1) std::swap(a1, b1);
  int a2 = t2.left(v2), b2 = t2.right(v2);
  if (r2 < l2) std::swap(a2, b2);
  witness_rec(t1, a1, t2, a2, out);
  witness_rec(t1, b1, t2, b2, out);
}

}  // namespace

IsoResult is_isomorphic(const LeafStructure& s1, const LeafStructure& s2) {
  IsoResult result;
  if (s1.labels().size() != s2.labels().size()) return result;
  if (s1.labels().empty()) {
    result.isomorphic = true;
    return result;
  }
  auto t1 = tree_of(s1);
  auto t2 = tree_of(s2);
  if (canonical_form(*t1, KeyKind::shape) != canonical_form(*t2, KeyKind::shape))
    return result;
  std::map<Label, Label> witness;
  witness_rec(*t1, t1->root(), *t2, t2->root(), witness);
  for (const RootedTriple& t : s1.rooted_triples())
    if (!s2.contains_strict(witness.at(t[2]), witness.at(t[0]),
                            witness.at(t[1])))
      throw std::logic_error("isomorphism witness failed triple transport");
  result.isomorphic = true;
  result.witness = std::move(witness);
  return result;
}

std::string canonical_form(const RootedBinaryTree& tree, KeyKind kind) {
  return key_rec(tree, tree.root(), kind);
}

std::string canonical_form(const LeafStructure& s, KeyKind kind) {
  if (s.labels().empty()) return kind == KeyKind::labeled ? "()" : "()";
  return canonical_form(*tree_of(s), kind);
}

OnePointExtension extend_one_point(
    const RootedBinaryTree& host, const PartialMap& f, const Label& a,
    const std::vector<RootedTriple>& type_triples) {
  f.validate();
  const std::vector<Label>& domain = f.source.labels();
  if (std::binary_search(domain.begin(), domain.end(), a))
    throw BadParametersError("point already in the domain: " + a);
  for (const RootedTriple& t : type_triples) {
    bool mentions = false;
    for (const Label& l : t) {
      if (l == a)
        mentions = true;
      else
        f.source.index_of(l);
    }
    if (!mentions)
      throw BadParametersError("type triple does not mention the new point");
  }

  std::vector<Label> ext_labels = domain;
  ext_labels.push_back(a);
  std::sort(ext_labels.begin(), ext_labels.end());
  std::vector<RootedTriple> all = f.source.rooted_triples();
  all.insert(all.end(), type_triples.begin(), type_triples.end());
  auto ext_tree = build_from_triples(ext_labels, all);
  if (!ext_tree)
    throw InconsistentTypeError("type of " + a +
                                " is not realized over the domain");
  LeafStructure ext_struct = to_leaf_structure(*ext_tree);

  Label new_leaf = a;
  while (host.has_leaf(new_leaf)) new_leaf += "_";

  std::vector<RootedBinaryTree> candidates;
  for (int v : host.preorder())
    if (v != host.root()) candidates.push_back(host.attach_at_edge(v, new_leaf));
  candidates.push_back(host.attach_above_root(new_leaf));

  for (RootedBinaryTree& grown : candidates) {
    PartialMap extended;
    extended.source = ext_struct;
    extended.target = to_leaf_structure(grown);
    extended.assignment = f.assignment;
    extended.assignment[a] = new_leaf;
    if (preserves_c(extended).preserved)
      return {std::move(grown), std::move(extended), new_leaf};
  }
  throw std::logic_error("no attachment point extends the map");
}

}  // namespace treerel
