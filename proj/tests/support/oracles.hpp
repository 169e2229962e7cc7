#ifndef TREEREL_TESTS_ORACLES_HPP
#define TREEREL_TESTS_ORACLES_HPP

// Reference implementations kept independent of the library's fast paths;
// tests compare against these instead of trusting frozen numbers alone.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "treerel/relation.hpp"
#include "treerel/tree.hpp"

namespace oracle {

using treerel::Label;
using treerel::RootedBinaryTree;
using treerel::RootedTriple;

// (2n-3)!! labeled rooted binary trees on n leaves
inline std::uint64_t tree_count_formula(int n) {
  if (n <= 0) return 0;
  if (n == 1) return 1;
  std::uint64_t c = 1;
  for (int k = 3; k <= 2 * n - 3; k += 2) c *= k;
  return c;
}

inline std::vector<int> ancestors(const RootedBinaryTree& t, int v) {
  std::vector<int> out;
  while (v >= 0) {
    out.push_back(v);
    v = t.parent(v);
  }
  return out;
}

// yca by intersecting full ancestor chains
inline int yca_brute(const RootedBinaryTree& t, const std::vector<Label>& ls) {
  std::set<int> common;
  bool first = true;
  for (const Label& l : ls) {
    auto chain = ancestors(t, t.leaf_node(l));
    std::set<int> here(chain.begin(), chain.end());
    if (first) {
      common = here;
      first = false;
    } else {
      std::set<int> keep;
      for (int v : common)
        if (here.count(v)) keep.insert(v);
      common = keep;
    }
  }
  int best = -1;
  for (int v : common)
    if (best < 0 || t.depth(v) > t.depth(best)) best = v;
  return best;
}

// C(a; b,c) straight from the definition: yca(b,c) strictly below yca(a,b,c)
inline bool c_of_tree(const RootedBinaryTree& t, const Label& a, const Label& b,
                      const Label& c) {
  if (a == b || a == c) return false;
  if (b == c) return true;
  int u = yca_brute(t, {b, c});
  int w = yca_brute(t, {a, b, c});
  if (u == w) return false;
  for (int v : ancestors(t, u))
    if (v == w) return true;
  return false;
}

inline bool triple_holds(const RootedBinaryTree& t, const RootedTriple& tr) {
  return c_of_tree(t, tr[2], tr[0], tr[1]);
}

// partner of q[0] in the unique pairing of a 4-subset, via the defining
// disjunction evaluated with c_of_tree only
inline int quartet_partner(const RootedBinaryTree& t,
                           const std::array<Label, 4>& q) {
  int found = 0;
  for (int partner = 1; partner <= 3; ++partner) {
    const Label& x = q[0];
    const Label& y = q[partner];
    const Label& u = q[partner == 1 ? 2 : 1];
    const Label& v = q[partner == 3 ? 2 : 3];
    bool holds = (c_of_tree(t, u, x, y) && c_of_tree(t, v, x, y)) ||
                 (c_of_tree(t, x, u, v) && c_of_tree(t, y, u, v));
    if (holds) {
      if (found) return -1;  // ambiguous
      found = partner;
    }
  }
  return found;
}

// convexity of a leaf order: for i<j<k the middle element is never the apex
inline bool convex(const RootedBinaryTree& t, const std::vector<Label>& order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      for (std::size_t k = j + 1; k < order.size(); ++k)
        if (c_of_tree(t, order[j], order[i], order[k])) return false;
  return true;
}

inline std::string lcp(const std::string& a, const std::string& b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return a.substr(0, n);
}

// C(x; y,z) on words: |lcp(y,z)| > |lcp(x,y)|
inline bool lcp_c(const std::map<Label, std::string>& words, const Label& x,
                  const Label& y, const Label& z) {
  return lcp(words.at(y), words.at(z)).size() >
         lcp(words.at(x), words.at(y)).size();
}

// brute-force rooted-triple consistency over the full tree enumeration
inline std::optional<RootedBinaryTree> brute_force_triples(
    const std::vector<Label>& labels, const std::vector<RootedTriple>& triples) {
  std::optional<RootedBinaryTree> found;
  treerel::for_each_tree(labels, [&](const RootedBinaryTree& t) {
    for (const RootedTriple& tr : triples)
      if (!triple_holds(t, tr)) return true;
    found = t;
    return false;
  });
  return found;
}

inline std::uint64_t type_count_formula(int k, bool ordered) {
  std::uint64_t shapes = tree_count_formula(k);
  return ordered ? shapes << (k - 1) : shapes;
}

// all label subsets of the given size range
inline std::vector<std::vector<Label>> subsets(const std::vector<Label>& ls,
                                               std::size_t min_size,
                                               std::size_t max_size) {
  std::vector<std::vector<Label>> out;
  std::size_t n = ls.size();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::vector<Label> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) sub.push_back(ls[i]);
    if (sub.size() >= min_size && sub.size() <= max_size)
      out.push_back(std::move(sub));
  }
  return out;
}

inline std::vector<Label> letters(int n) {
  std::vector<Label> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, 'a' + i));
  return out;
}

}  // namespace oracle

#endif
