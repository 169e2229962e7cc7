#include "treerel/morphisms.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "treerel/reconstruct.hpp"

namespace treerel {

namespace {

std::vector<Label> sorted_unique_labels(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) throw DuplicateLabelError(v[i]);
  return v;
}

bool strict_q(const QuartetStructure& s, const Label& a, const Label& b,
              const Label& c, const Label& d) {
  std::set<Label> distinct{a, b, c, d};
  return distinct.size() == 4 && s.contains(a, b, c, d);
}

}  // namespace

const Label& PartialMap::operator()(const Label& l) const {
  auto it = assignment.find(l);
  if (it == assignment.end()) throw UnknownLabelError(l);
  return it->second;
}

std::vector<Label> PartialMap::image(const std::vector<Label>& ls) const {
  std::vector<Label> out;
  out.reserve(ls.size());
  for (const Label& l : ls) out.push_back((*this)(l));
  return out;
}

bool PartialMap::injective_on(const std::vector<Label>& ls) const {
  std::set<Label> seen;
  for (const Label& l : ls)
    if (!seen.insert((*this)(l)).second) return false;
  return true;
}

void PartialMap::validate() const {
  for (const Label& l : source.labels()) {
    auto it = assignment.find(l);
    if (it == assignment.end())
      throw BadParametersError("assignment is not total: missing " + l);
    target.index_of(it->second);
  }
  for (const Label& c : source_constants) source.index_of(c);
  if (source_order) {
    if (source_order->size() != source.labels().size())
      throw BadParametersError("source order does not cover the labels");
    for (const Label& l : *source_order) source.index_of(l);
  }
  if (target_order) {
    if (target_order->size() != target.labels().size())
      throw BadParametersError("target order does not cover the labels");
    for (const Label& l : *target_order) target.index_of(l);
  }
}

// ---------------------------------------------------------------------------
// Preservation

PreservationReport preserves_c(const PartialMap& m) {
  m.validate();
  PreservationReport report;
  report.preserved = true;
  for (const RootedTriple& t : m.source.rooted_triples()) {
    if (!m.target.contains_strict(m(t[2]), m(t[0]), m(t[1]))) {
      report.preserved = false;
      report.witness = {t[0], t[1], t[2]};
      break;
    }
  }
  const std::vector<Label>& labels = m.source.labels();
  report.injective = true;
  for (std::size_t i = 0; i < labels.size() && report.injective; ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (m(labels[i]) == m(labels[j])) {
        report.injective = false;
        report.collision = {labels[i], labels[j]};
        break;
      }
  if (report.preserved && report.injective) {
    report.complement_preserved = true;
    for (const Label& a : labels)
      for (const Label& p : labels)
        for (const Label& q : labels) {
          if (a == p || a == q || p == q) continue;
          if (!m.source.contains(a, p, q) && m.target.contains(m(a), m(p), m(q))) {
            report.complement_preserved = false;
            report.complement_witness = {a, p, q};
            return report;
          }
        }
  }
  return report;
}

PreservationReport preserves_q(const QuartetStructure& src,
                               const QuartetStructure& tgt,
                               const std::map<Label, Label>& assignment) {
  PreservationReport report;
  auto apply = [&](const Label& l) -> const Label& {
    auto it = assignment.find(l);
    if (it == assignment.end()) throw UnknownLabelError(l);
    return it->second;
  };
  report.preserved = true;
  for (const QuartetTuple& q : src.quartets()) {
    if (!strict_q(tgt, apply(q[0]), apply(q[1]), apply(q[2]), apply(q[3]))) {
      report.preserved = false;
      report.witness = {q[0], q[1], q[2], q[3]};
      break;
    }
  }
  const std::vector<Label>& labels = src.labels();
  report.injective = true;
  for (std::size_t i = 0; i < labels.size() && report.injective; ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (apply(labels[i]) == apply(labels[j])) {
        report.injective = false;
        report.collision = {labels[i], labels[j]};
        break;
      }
  if (report.preserved && report.injective) {
    report.complement_preserved = true;
    int n = static_cast<int>(labels.size());
    for (int a = 0; a < n && report.complement_preserved; ++a)
      for (int b = 0; b < n && report.complement_preserved; ++b)
        for (int c = 0; c < n && report.complement_preserved; ++c)
          for (int d = 0; d < n; ++d) {
            std::set<int> distinct{a, b, c, d};
            if (distinct.size() != 4) continue;
            const Label &la = labels[a], &lb = labels[b], &lc = labels[c],
                        &ld = labels[d];
            if (!src.contains(la, lb, lc, ld) &&
                strict_q(tgt, apply(la), apply(lb), apply(lc), apply(ld))) {
              report.complement_preserved = false;
              report.complement_witness = {la, lb, lc, ld};
              break;
            }
          }
  }
  return report;
}

PreservationReport preserves_q(const PartialMap& m) {
  m.validate();
  return preserves_q(c_to_q(m.source), c_to_q(m.target), m.assignment);
}

std::vector<Label> find_invq_split(const PartialMap& m) {
  m.validate();
  const std::vector<Label>& a = m.source.labels();
  if (a.size() < 2)
    throw BadParametersError("find_invq_split needs at least 2 labels");
  if (!m.injective_on(a))
    throw NotQPreservingError("map collapses labels");
  if (!preserves_q(m).preserved)
    throw NotQPreservingError("map does not preserve the quartet relation");
  if (a.size() == 2) return {a.front()};

  LeafStructure image = restrict(m.target, m.image(a));
  auto [v, w] = find_split(image, image.labels());
  std::map<Label, Label> back;
  for (const Label& l : a) back[m(l)] = l;
  std::vector<Label> b1, b2;
  for (const Label& l : v) b1.push_back(back.at(l));
  for (const Label& l : w) b2.push_back(back.at(l));
  std::sort(b1.begin(), b1.end());
  std::sort(b2.begin(), b2.end());

  auto all_separated = [&](const std::vector<Label>& side,
                           const std::vector<Label>& rest) {
    for (const Label& x : rest)
      if (!sets_separated(m.source, side, {x})) return false;
    return true;
  };
  if (all_separated(b1, b2)) return b1;
  if (all_separated(b2, b1)) return b2;
  throw std::logic_error("invq split: neither side satisfies the postcondition");
}

// ---------------------------------------------------------------------------
// Cones

const std::vector<Label>& ConePartition::class_of(const Label& l) const {
  for (const auto& cls : classes)
    if (std::binary_search(cls.begin(), cls.end(), l)) return cls;
  throw UnknownLabelError(l);
}

ConePartition cones(const LeafStructure& s,
                    const std::vector<Label>& constants) {
  std::set<Label> cset;
  for (const Label& c : constants) {
    s.index_of(c);
    if (!cset.insert(c).second) throw DuplicateLabelError(c);
  }
  std::vector<Label> members;
  for (const Label& l : s.labels())
    if (!cset.count(l)) members.push_back(l);

  auto related = [&](const Label& x, const Label& y) {
    for (const Label& c : constants)
      if (!s.contains(c, x, y)) return false;
    return true;
  };

  ConePartition out;
  out.anchors = constants;
  std::vector<bool> used(members.size(), false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (used[i]) continue;
    std::vector<Label> cls{members[i]};
    used[i] = true;
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!used[j] && related(members[i], members[j])) {
        cls.push_back(members[j]);
        used[j] = true;
      }
    out.classes.push_back(std::move(cls));
  }
  for (const auto& c1 : out.classes)
    for (const auto& c2 : out.classes)
      for (const Label& x : c1)
        for (const Label& y : c2) {
          if (x == y) continue;
          bool same = &c1 == &c2;
          if (related(x, y) != same)
            throw InvalidStructureError("cone relation is not an equivalence");
        }
  return out;
}

// ---------------------------------------------------------------------------
// Behavior classification

std::string behavior_name(Behavior b) {
  switch (b) {
    case Behavior::id: return "id";
    case Behavior::lin: return "lin";
    case Behavior::nil: return "nil";
    case Behavior::id_c: return "id_c";
    case Behavior::cut_c: return "cut_c";
    case Behavior::rer_c: return "rer_c";
    case Behavior::tilde_rer_c: return "tilde_rer_c";
    case Behavior::none: return "none";
  }
  return "none";
}

bool BehaviorReport::holds(Behavior b) const {
  return std::find(holding.begin(), holding.end(), b) != holding.end();
}

BehaviorReport behavior_classify_plain(const PartialMap& m,
                                       const std::vector<Label>& a) {
  m.validate();
  if (!m.source_order)
    throw BadParametersError("plain classification needs an ordered source");
  std::vector<Label> set = sorted_unique_labels(a);
  for (const Label& l : set) m.source.index_of(l);
  if (!m.injective_on(set))
    throw NotInjectiveError("map is not injective on the given set");

  std::map<Label, int> rank;
  for (std::size_t i = 0; i < m.source_order->size(); ++i)
    rank[(*m.source_order)[i]] = static_cast<int>(i);
  std::vector<Label> by_rank = set;
  std::sort(by_rank.begin(), by_rank.end(),
            [&](const Label& x, const Label& y) { return rank.at(x) < rank.at(y); });

  BehaviorReport report;
  bool id_ok = true, lin_ok = true, nil_ok = true;
  std::size_t n = by_rank.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Label &x = by_rank[i], &y = by_rank[j], &z = by_rank[k];
        if (lin_ok && !m.target.contains_strict(m(x), m(y), m(z))) {
          lin_ok = false;
          report.witnesses.push_back({Behavior::lin, {x, y, z}});
        }
        if (nil_ok && !m.target.contains_strict(m(z), m(x), m(y))) {
          nil_ok = false;
          report.witnesses.push_back({Behavior::nil, {x, y, z}});
        }
        if (id_ok) {
          Label apex = m.source.apex_of(x, y, z);
          Label p = (apex == x) ? y : x;
          Label q = (apex == z) ? y : z;
          if (!m.target.contains_strict(m(apex), m(p), m(q))) {
            id_ok = false;
            report.witnesses.push_back({Behavior::id, {p, q, apex}});
          }
        }
      }
  if (id_ok) report.holding.push_back(Behavior::id);
  if (lin_ok) report.holding.push_back(Behavior::lin);
  if (nil_ok) report.holding.push_back(Behavior::nil);
  report.verdict = report.holding.empty() ? Behavior::none : report.holding.front();
  return report;
}

BehaviorReport behavior_classify_anchored(const PartialMap& m, const Label& c,
                                          const std::vector<Label>& a) {
  m.validate();
  m.source.index_of(c);
  std::vector<Label> set = sorted_unique_labels(a);
  for (const Label& l : set) {
    m.source.index_of(l);
    if (l == c) throw BadParametersError("anchor occurs in the set");
  }
  std::vector<Label> with_anchor = set;
  with_anchor.push_back(c);
  if (!m.injective_on(with_anchor))
    throw NotInjectiveError("map is not injective on the set plus anchor");

  BehaviorReport report;

  // cone classes of c restricted to the set
  std::vector<std::vector<Label>> classes;
  std::vector<bool> used(set.size(), false);
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (used[i]) continue;
    std::vector<Label> cls{set[i]};
    used[i] = true;
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!used[j] && m.source.contains(c, set[i], set[j])) {
        cls.push_back(set[j]);
        used[j] = true;
      }
    classes.push_back(std::move(cls));
  }

  for (const auto& cls : classes) {
    if (!sets_separated(m.target, {m(c)}, m.image(cls))) {
      report.precondition_ok = false;
      report.witnesses.push_back({Behavior::none, cls});
    }
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        for (std::size_t k = j + 1; k < cls.size(); ++k) {
          Label apex = m.source.apex_of(cls[i], cls[j], cls[k]);
          Label p = (apex == cls[i]) ? cls[j] : cls[i];
          Label q = (apex == cls[k]) ? cls[j] : cls[k];
          if (!m.target.contains_strict(m(apex), m(p), m(q))) {
            report.precondition_ok = false;
            report.witnesses.push_back({Behavior::none, {p, q, apex}});
          }
        }
  }
  for (std::size_t i = 0; i < classes.size() && report.precondition_ok; ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (!sets_separated(m.target, m.image(classes[i]), m.image(classes[j]))) {
        report.precondition_ok = false;
        report.witnesses.push_back({Behavior::none, {classes[i].front(),
                                                     classes[j].front()}});
      }
  if (!report.precondition_ok) {
    report.verdict = Behavior::none;
    return report;
  }

  auto sep_src = [&](const std::vector<Label>& y, const std::vector<Label>& z) {
    return sets_separated(m.source, y, z);
  };
  auto sep_tgt = [&](const std::vector<Label>& y, const std::vector<Label>& z) {
    return sets_separated(m.target, y, z);
  };

  bool id_ok = true, cut_ok = true, rer_ok = true, tilde_ok = true;
  for (const Label& x : set)
    for (const Label& y : set)
      for (const Label& z : set) {
        if (x == y || x == z || y == z) continue;
        if (!sep_src({x}, {y, z, c}) || !sep_src({y}, {z, c})) continue;
        if (id_ok && !(sep_tgt({m(x)}, {m(y), m(z), m(c)}) &&
                       sep_tgt({m(y)}, {m(z), m(c)}))) {
          id_ok = false;
          report.witnesses.push_back({Behavior::id_c, {x, y, z}});
        }
        if (cut_ok && !(sep_tgt({m(x), m(y), m(z)}, {m(c)}) &&
                        sep_tgt({m(x)}, {m(y), m(z)}))) {
          cut_ok = false;
          report.witnesses.push_back({Behavior::cut_c, {x, y, z}});
        }
        if (rer_ok && !(sep_tgt({m(x), m(y), m(z)}, {m(c)}) &&
                        sep_tgt({m(x), m(y)}, {m(z)}))) {
          rer_ok = false;
          report.witnesses.push_back({Behavior::rer_c, {x, y, z}});
        }
      }
  for (const Label& x : set)
    for (const Label& y : set) {
      if (x == y || !tilde_ok) continue;
      if (!sep_src({x}, {y, c})) continue;
      if (!sep_tgt({m(y)}, {m(x), m(c)})) {
        tilde_ok = false;
        report.witnesses.push_back({Behavior::tilde_rer_c, {x, y}});
      }
    }

  if (id_ok) report.holding.push_back(Behavior::id_c);
  if (cut_ok) report.holding.push_back(Behavior::cut_c);
  if (rer_ok) report.holding.push_back(Behavior::rer_c);
  if (tilde_ok) report.holding.push_back(Behavior::tilde_rer_c);
  report.verdict = report.holding.empty() ? Behavior::none : report.holding.front();
  return report;
}

bool rer_equiv_q_check(const PartialMap& m, const Label& a,
                       const std::vector<Label>& x) {
  m.validate();
  std::vector<Label> set = sorted_unique_labels(x);
  bool has_anchor = false;
  for (const Label& l : set) {
    m.source.index_of(l);
    if (l == a) has_anchor = true;
  }
  if (!has_anchor) throw BadParametersError("anchor not in the set");
  if (!m.injective_on(set))
    throw PreconditionFailedError("map collapses the set");
  std::vector<Label> rest;
  for (const Label& l : set)
    if (l != a) rest.push_back(l);
  if (rest.empty()) throw BadParametersError("set must contain another point");
  if (!sets_separated(m.target, {m(a)}, m.image(rest)))
    throw PreconditionFailedError("image of the anchor is not split off");

  BehaviorReport anchored = behavior_classify_anchored(m, a, rest);
  bool behaves_rer = anchored.precondition_ok && anchored.holds(Behavior::rer_c);

  QuartetStructure qsrc = c_to_q(restrict(m.source, set));
  QuartetStructure qtgt = c_to_q(restrict(m.target, m.image(set)));
  bool q_preserved = preserves_q(qsrc, qtgt, m.assignment).preserved;

  return behaves_rer == q_preserved;
}

bool nil_check(const OrderedLeafStructure& s, const std::vector<Label>& tuple) {
  std::set<Label> seen;
  for (const Label& l : tuple) {
    s.structure().index_of(l);
    if (!seen.insert(l).second) throw DuplicateLabelError(l);
  }
  if (tuple.empty()) throw BadParametersError("empty tuple");
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (!s.less(tuple[i - 1], tuple[i])) return false;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    std::vector<Label> prefix(tuple.begin(), tuple.begin() + i);
    if (!sets_separated(s.structure(), prefix, {tuple[i]})) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Types and canonicity

TupleType tuple_type_key(const LeafStructure& s,
                         const std::optional<std::vector<Label>>& order,
                         const std::vector<Label>& tuple,
                         const std::vector<Label>& constants) {
  std::vector<Label> full = tuple;
  full.insert(full.end(), constants.begin(), constants.end());
  std::map<Label, int> rank;
  if (order)
    for (std::size_t i = 0; i < order->size(); ++i)
      rank[(*order)[i]] = static_cast<int>(i);

  std::ostringstream key;
  std::size_t n = full.size();
  key << "e";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      key << (full[i] == full[j] ? '1' : '0');
  if (order) {
    key << "|o";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        int ri = rank.at(full[i]), rj = rank.at(full[j]);
        key << (ri < rj ? '<' : (ri > rj ? '>' : '='));
      }
  }
  key << "|c";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        key << (s.contains(full[i], full[j], full[k]) ? '1' : '0');
  return {static_cast<int>(tuple.size()), key.str()};
}

CanonicalResult check_canonical(const PartialMap& m, int k_max) {
  m.validate();
  CanonicalResult result;
  result.canonical = true;
  const std::vector<Label>& labels = m.source.labels();
  if (labels.empty()) return result;
  std::vector<Label> image_constants = m.image(m.source_constants);
  int n = static_cast<int>(labels.size());

  std::map<std::string, std::pair<std::string, std::vector<Label>>> seen;
  std::vector<int> idx;
  for (int k = 1; k <= k_max; ++k) {
    idx.assign(k, 0);
    while (true) {
      std::vector<Label> tuple;
      tuple.reserve(k);
      for (int t : idx) tuple.push_back(labels[t]);
      TupleType src =
          tuple_type_key(m.source, m.source_order, tuple, m.source_constants);
      TupleType img = tuple_type_key(m.target, m.target_order, m.image(tuple),
                                     image_constants);
      std::string skey = std::to_string(k) + ":" + src.key;
      auto it = seen.find(skey);
      if (it == seen.end()) {
        seen.emplace(skey, std::make_pair(img.key, tuple));
        result.type_map[skey] = img.key;
      } else if (it->second.first != img.key) {
        result.canonical = false;
        result.witness_a = it->second.second;
        result.witness_b = tuple;
        result.type_map.clear();
        return result;
      }
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - 1) idx[pos--] = 0;
      if (pos < 0) break;
      ++idx[pos];
    }
  }
  return result;
}

std::vector<TupleType> enumerate_tuple_types(int k, bool ordered, int bound) {
  if (k < 1 || k > bound)
    throw BoundExceededError("tuple arity " + std::to_string(k) +
                             " outside 1.." + std::to_string(bound));
  std::vector<Label> labels;
  for (int i = 0; i < k; ++i) labels.push_back(std::string(1, 'a' + i));
  std::set<std::string> keys;
  for_each_tree(labels, [&](const RootedBinaryTree& t) {
    LeafStructure s = to_leaf_structure(t);
    if (!ordered) {
      keys.insert(tuple_type_key(s, std::nullopt, labels).key);
    } else {
      for (const auto& order : all_embedding_orders(t))
        keys.insert(tuple_type_key(s, order, labels).key);
    }
    return true;
  });
  std::vector<TupleType> out;
  for (const std::string& key : keys) out.push_back({k, key});
  return out;
}

// ---------------------------------------------------------------------------
// Behavior realization and the cut composition

std::pair<OrderedLeafStructure, PartialMap> realize_behavior(
    const OrderedLeafStructure& s, Behavior which) {
  if (which != Behavior::lin && which != Behavior::nil)
    throw BadParametersError("realize_behavior handles lin and nil only");
  const std::vector<Label>& order = s.order();
  std::map<Label, int> rank;
  for (std::size_t i = 0; i < order.size(); ++i)
    rank[order[i]] = static_cast<int>(i);

  // Leaf insertion in rank order always lands on the same comb: new minima
  // start a fresh root split, new maxima pair with the previous extremum,
  // middle elements split the suffix (lin) or prefix (nil) they enter.
  std::vector<Label> by_rank = s.structure().labels();
  std::sort(by_rank.begin(), by_rank.end(),
            [&](const Label& a, const Label& b) { return rank.at(a) < rank.at(b); });
  std::optional<RootedBinaryTree> image;
  if (which == Behavior::lin) {
    for (auto it = by_rank.rbegin(); it != by_rank.rend(); ++it) {
      RootedBinaryTree leaf = RootedBinaryTree::leaf(*it);
      image = image ? RootedBinaryTree::join(leaf, *image) : leaf;
    }
  } else {
    for (const Label& l : by_rank) {
      RootedBinaryTree leaf = RootedBinaryTree::leaf(l);
      image = image ? RootedBinaryTree::join(*image, leaf) : leaf;
    }
  }

  LeafStructure image_struct = to_leaf_structure(*image);
  OrderedLeafStructure ordered_image(image_struct, order);
  PartialMap m;
  m.source = s.structure();
  m.source_order = order;
  m.target = image_struct;
  m.target_order = order;
  for (const Label& l : s.structure().labels()) m.assignment[l] = l;
  return {std::move(ordered_image), std::move(m)};
}

namespace {

std::optional<std::vector<Label>> convex_order_with_increasing(
    const RootedBinaryTree& tree, const std::vector<Label>& tuple) {
  for (const auto& order : all_embedding_orders(tree)) {
    std::map<Label, int> rank;
    for (std::size_t i = 0; i < order.size(); ++i)
      rank[order[i]] = static_cast<int>(i);
    bool ok = true;
    for (std::size_t i = 1; i < tuple.size() && ok; ++i)
      ok = rank.at(tuple[i - 1]) < rank.at(tuple[i]);
    if (ok) return order;
  }
  return std::nullopt;
}

// Image of a cut-behaving map at anchor u: u split off on top, cone copies
// below it ordered from the root-nearest cone downward.
LeafStructure cut_image(const LeafStructure& cur, const Label& u) {
  std::vector<Label> rest;
  for (const Label& l : cur.labels())
    if (l != u) rest.push_back(l);
  ConePartition cp = cones(cur, {u});
  std::vector<std::vector<Label>> classes = cp.classes;
  std::sort(classes.begin(), classes.end(),
            [&](const std::vector<Label>& x, const std::vector<Label>& y) {
              // nearer the root means separated from the other cone plus u
              return sets_separated(cur, {x.front()}, {y.front(), u});
            });
  std::optional<RootedBinaryTree> acc;
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
    auto part = build_from_triples(*it, restrict(cur, *it).rooted_triples());
    if (!part) throw ConstructionFailedError("cone copy not realizable");
    acc = acc ? RootedBinaryTree::join(*part, *acc) : *part;
  }
  RootedBinaryTree image = acc
      ? RootedBinaryTree::join(RootedBinaryTree::leaf(u), *acc)
      : RootedBinaryTree::leaf(u);
  return to_leaf_structure(image);
}

}  // namespace

bool cut_composition_check(const RootedBinaryTree& host,
                           const std::vector<Label>& tuple) {
  std::set<Label> seen;
  for (const Label& l : tuple) {
    host.leaf_node(l);
    if (!seen.insert(l).second) throw DuplicateLabelError(l);
  }
  if (tuple.empty()) throw BadParametersError("empty tuple");
  if (!convex_order_with_increasing(host, tuple))
    throw BadParametersError("tuple is not increasing in any convex order");
  if (tuple.size() == 1) return true;

  std::vector<Label> sorted_tuple = tuple;
  std::sort(sorted_tuple.begin(), sorted_tuple.end());
  LeafStructure cur = restrict(to_leaf_structure(host), sorted_tuple);

  for (std::size_t step = 1; step < tuple.size(); ++step) {
    const Label& u = tuple[step];
    LeafStructure next = cut_image(cur, u);
    PartialMap g;
    g.source = cur;
    g.target = next;
    for (const Label& l : cur.labels()) g.assignment[l] = l;
    std::vector<Label> rest;
    for (const Label& l : cur.labels())
      if (l != u) rest.push_back(l);
    BehaviorReport rep = behavior_classify_anchored(g, u, rest);
    if (!rep.precondition_ok || !rep.holds(Behavior::cut_c))
      throw ConstructionFailedError("constructed map does not behave as cut");
    cur = next;
  }

  auto final_tree = build_from_triples(cur.labels(), cur.rooted_triples());
  if (!final_tree)
    throw ConstructionFailedError("final image structure not realizable");
  auto order = convex_order_with_increasing(*final_tree, tuple);
  if (!order) return false;
  return nil_check(OrderedLeafStructure(cur, *order), tuple);
}

}  // namespace treerel
