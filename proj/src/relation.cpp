#include "treerel/relation.hpp"

#include <algorithm>

namespace treerel {

namespace {

void require_known(const std::vector<Label>& labels, const Label& l) {
  if (!std::binary_search(labels.begin(), labels.end(), l))
    throw UnknownLabelError(l);
}

std::vector<Label> sorted_unique(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i] == labels[i - 1]) throw DuplicateLabelError(labels[i]);
  return labels;
}

}  // namespace

bool TernaryRelation::contains(const Label& apex, const Label& p,
                               const Label& q) const {
  if (tuples.count({p, q, apex})) return true;
  if (derive_degenerates && p == q && apex != p) return true;
  return false;
}

bool QuaternaryRelation::contains(const Label& a, const Label& b,
                                  const Label& c, const Label& d) const {
  if (tuples.count({a, b, c, d})) return true;
  if (derive_degenerates) {
    bool disjoint = a != c && a != d && b != c && b != d;
    if (disjoint && (a == b || c == d)) return true;
  }
  return false;
}

bool AxiomReport::names_axiom(const std::string& axiom) const {
  for (const auto& v : universal_violations)
    if (v.axiom == axiom) return true;
  auto it = existential_status.find(axiom);
  return it != existential_status.end() &&
         it->second.status == ExistentialStatus::fails_with_witness;
}

// ---------------------------------------------------------------------------
// LeafStructure

LeafStructure::LeafStructure() = default;

void LeafStructure::build_index() {
  index_.clear();
  for (int i = 0; i < label_count(); ++i) index_[labels_[i]] = i;
}

LeafStructure LeafStructure::from_apex_table(
    std::vector<Label> labels, const std::vector<std::array<int, 4>>& table) {
  LeafStructure s;
  s.labels_ = std::move(labels);
  s.build_index();
  std::size_t n = s.labels_.size();
  s.cube_.assign(n * n * n, 0);
  auto set = [&](int a, int p, int q) {
    s.cube_[(static_cast<std::size_t>(a) * n + p) * n + q] = 1;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) set(static_cast<int>(a), static_cast<int>(b),
                      static_cast<int>(b));
  for (const auto& row : table) {
    std::array<int, 3> subset{row[0], row[1], row[2]};
    int apex = subset[row[3]];
    std::array<int, 2> pair{};
    int w = 0;
    for (int t = 0; t < 3; ++t)
      if (t != row[3]) pair[w++] = subset[t];
    set(apex, pair[0], pair[1]);
    set(apex, pair[1], pair[0]);
  }
  return s;
}

LeafStructure LeafStructure::from_relation(const TernaryRelation& rel) {
  AxiomReport report = check_c_axioms(rel, CheckMode::universal_only);
  if (!report.universal_ok()) {
    const AxiomViolation& v = report.universal_violations.front();
    std::string w;
    for (const Label& l : v.witness) w += " " + l;
    throw InvalidStructureError("universal axiom " + v.axiom +
                                " fails, witness:" + w);
  }
  std::vector<Label> labels = sorted_unique(rel.labels);
  int n = static_cast<int>(labels.size());
  std::vector<std::array<int, 4>> table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::array<int, 3> subset{i, j, k};
        int apexpos = -1;
        for (int t = 0; t < 3; ++t) {
          const Label& a = labels[subset[t]];
          const Label& p = labels[subset[(t + 1) % 3]];
          const Label& q = labels[subset[(t + 2) % 3]];
          if (rel.contains(a, p, q)) apexpos = t;
        }
        // C8 guarantees an apex, C2 its uniqueness
        table.push_back({i, j, k, apexpos});
      }
  return from_apex_table(std::move(labels), table);
}

LeafStructure::LeafStructure(std::vector<Label> labels,
                             const std::vector<RootedTriple>& triples) {
  TernaryRelation rel;
  rel.labels = sorted_unique(std::move(labels));
  for (const RootedTriple& t : triples) {
    for (const Label& l : t) require_known(rel.labels, l);
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
      throw InvalidStructureError("triple with repeated entries");
    rel.tuples.insert({t[0], t[1], t[2]});
    rel.tuples.insert({t[1], t[0], t[2]});
  }
  *this = from_relation(rel);
}

int LeafStructure::index_of(const Label& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw UnknownLabelError(l);
  return it->second;
}

bool LeafStructure::has_label(const Label& l) const {
  return index_.count(l) > 0;
}

bool LeafStructure::contains(const Label& apex, const Label& p,
                             const Label& q) const {
  return cube_at(index_of(apex), index_of(p), index_of(q)) != 0;
}

bool LeafStructure::contains_index(int apex, int p, int q) const {
  return cube_at(apex, p, q) != 0;
}

bool LeafStructure::contains_strict(const Label& apex, const Label& p,
                                    const Label& q) const {
  if (apex == p || apex == q || p == q) return false;
  return contains(apex, p, q);
}

int LeafStructure::apex_index(int i, int j, int k) const {
  if (cube_at(i, j, k)) return i;
  if (cube_at(j, i, k)) return j;
  if (cube_at(k, i, j)) return k;
  throw InvalidStructureError("no apex for subset");
}

Label LeafStructure::apex_of(const Label& x, const Label& y,
                             const Label& z) const {
  if (x == y || x == z || y == z)
    throw BadParametersError("apex_of needs distinct labels");
  return labels_[apex_index(index_of(x), index_of(y), index_of(z))];
}

std::vector<RootedTriple> LeafStructure::rooted_triples() const {
  std::vector<RootedTriple> out;
  int n = label_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int a = apex_index(i, j, k);
        std::array<int, 2> pair{};
        int w = 0;
        for (int t : {i, j, k})
          if (t != a) pair[w++] = t;
        out.push_back({labels_[pair[0]], labels_[pair[1]], labels_[a]});
      }
  return out;
}

std::size_t LeafStructure::ordered_triple_count() const {
  std::size_t count = 0;
  int n = label_count();
  for (int a = 0; a < n; ++a)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (a != p && a != q && p != q && cube_at(a, p, q)) ++count;
  return count;
}

TernaryRelation LeafStructure::to_relation() const {
  TernaryRelation rel;
  rel.labels = labels_;
  for (const RootedTriple& t : rooted_triples()) {
    rel.tuples.insert({t[0], t[1], t[2]});
    rel.tuples.insert({t[1], t[0], t[2]});
  }
  return rel;
}

bool LeafStructure::operator==(const LeafStructure& other) const {
  return labels_ == other.labels_ && cube_ == other.cube_;
}

// ---------------------------------------------------------------------------
// QuartetStructure

QuartetStructure::QuartetStructure() = default;

void QuartetStructure::build_index() {
  index_.clear();
  for (int i = 0; i < label_count(); ++i) index_[labels_[i]] = i;
}

QuartetStructure QuartetStructure::from_pairing_table(
    std::vector<Label> labels, const std::vector<std::array<int, 5>>& table) {
  QuartetStructure s;
  s.labels_ = std::move(labels);
  s.build_index();
  for (const auto& row : table)
    s.pairing_[{row[0], row[1], row[2], row[3]}] = row[4];
  return s;
}

QuartetStructure QuartetStructure::from_relation(
    const QuaternaryRelation& rel) {
  AxiomReport report = check_d_axioms(rel, CheckMode::universal_only);
  if (!report.universal_ok()) {
    const AxiomViolation& v = report.universal_violations.front();
    std::string w;
    for (const Label& l : v.witness) w += " " + l;
    throw InvalidStructureError("universal axiom " + v.axiom +
                                " fails, witness:" + w);
  }
  std::vector<Label> labels = sorted_unique(rel.labels);
  int n = static_cast<int>(labels.size());
  std::vector<std::array<int, 5>> table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          std::array<int, 4> q{i, j, k, l};
          int partner = 0;
          for (int t = 1; t <= 3; ++t) {
            int o1 = q[t == 1 ? 2 : 1];
            int o2 = q[t == 3 ? 2 : 3];
            if (rel.contains(labels[i], labels[q[t]], labels[o1], labels[o2]))
              partner = t;
          }
          table.push_back({i, j, k, l, partner});
        }
  return from_pairing_table(std::move(labels), table);
}

QuartetStructure::QuartetStructure(std::vector<Label> labels,
                                   const std::vector<QuartetTuple>& quartets) {
  QuaternaryRelation rel;
  rel.labels = sorted_unique(std::move(labels));
  for (const QuartetTuple& q : quartets) {
    for (const Label& l : q) require_known(rel.labels, l);
    std::set<Label> distinct(q.begin(), q.end());
    if (distinct.size() != 4)
      throw InvalidStructureError("quartet with repeated entries");
    const Label &a = q[0], &b = q[1], &c = q[2], &d = q[3];
    for (const QuartetTuple& o :
         {QuartetTuple{a, b, c, d}, QuartetTuple{b, a, c, d},
          QuartetTuple{a, b, d, c}, QuartetTuple{b, a, d, c},
          QuartetTuple{c, d, a, b}, QuartetTuple{d, c, a, b},
          QuartetTuple{c, d, b, a}, QuartetTuple{d, c, b, a}})
      rel.tuples.insert(o);
  }
  *this = from_relation(rel);
}

int QuartetStructure::index_of(const Label& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) throw UnknownLabelError(l);
  return it->second;
}

bool QuartetStructure::has_label(const Label& l) const {
  return index_.count(l) > 0;
}

int QuartetStructure::pairing_partner(int i, int j, int k, int l) const {
  auto it = pairing_.find({i, j, k, l});
  if (it == pairing_.end())
    throw InvalidStructureError("no pairing stored for subset");
  return it->second;
}

bool QuartetStructure::contains_index(int a, int b, int c, int d) const {
  bool disjoint = a != c && a != d && b != c && b != d;
  if (!disjoint) return false;
  if (a == b || c == d) return true;
  std::array<int, 4> sorted{a, b, c, d};
  std::sort(sorted.begin(), sorted.end());
  int partner = pairing_partner(sorted[0], sorted[1], sorted[2], sorted[3]);
  int mate = sorted[partner];
  // Q(ab, cd) holds iff the stored pairing separates {a,b} from {c,d}
  bool min_in_ab = (sorted[0] == a || sorted[0] == b);
  bool mate_in_ab = (mate == a || mate == b);
  return min_in_ab == mate_in_ab;
}

bool QuartetStructure::contains(const Label& a, const Label& b, const Label& c,
                                const Label& d) const {
  return contains_index(index_of(a), index_of(b), index_of(c), index_of(d));
}

std::vector<QuartetTuple> QuartetStructure::quartets() const {
  std::vector<QuartetTuple> out;
  for (const auto& [subset, partner] : pairing_) {
    std::array<int, 2> rest{};
    int w = 0;
    for (int t = 1; t <= 3; ++t)
      if (t != partner) rest[w++] = subset[t];
    out.push_back({labels_[subset[0]], labels_[subset[partner]],
                   labels_[rest[0]], labels_[rest[1]]});
  }
  return out;
}

QuaternaryRelation QuartetStructure::to_relation() const {
  QuaternaryRelation rel;
  rel.labels = labels_;
  for (const QuartetTuple& q : quartets()) {
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

bool QuartetStructure::operator==(const QuartetStructure& other) const {
  return labels_ == other.labels_ && pairing_ == other.pairing_;
}

// ---------------------------------------------------------------------------
// OrderedLeafStructure

OrderedLeafStructure::OrderedLeafStructure(LeafStructure structure,
                                           std::vector<Label> order)
    : structure_(std::move(structure)), order_(std::move(order)) {
  if (order_.size() != structure_.labels().size())
    throw InvalidStructureError("order does not cover the label set");
  for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
    structure_.index_of(order_[i]);
    if (!rank_.emplace(order_[i], i).second)
      throw DuplicateLabelError(order_[i]);
  }
  int n = static_cast<int>(order_.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (structure_.apex_of(order_[i], order_[j], order_[k]) == order_[j])
          throw InvalidStructureError(
              "order is not convex: " + order_[i] + " " + order_[k] + " | " +
              order_[j] + " with " + order_[j] + " in the middle");
}

OrderedLeafStructure OrderedLeafStructure::from_tree(
    const RootedBinaryTree& tree, const std::optional<Label>& last) {
  return OrderedLeafStructure(to_leaf_structure(tree),
                              convex_order_dfs(tree, last));
}

int OrderedLeafStructure::rank(const Label& l) const {
  auto it = rank_.find(l);
  if (it == rank_.end()) throw UnknownLabelError(l);
  return it->second;
}

bool OrderedLeafStructure::less(const Label& a, const Label& b) const {
  return rank(a) < rank(b);
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

// The axiom loops run on label indices with a membership functor so that
// validated structures use their O(1) tables while raw relations keep their
// literal tuple sets.

template <typename M3>
AxiomReport c_axioms_core(const std::vector<Label>& labels, M3 M,
                          CheckMode mode) {
  AxiomReport report;
  int n = static_cast<int>(labels.size());
  auto wit = [&](std::initializer_list<int> ids) {
    std::vector<Label> out;
    for (int i : ids) out.push_back(labels[i]);
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (M(a, b, c)) {
          if (!M(a, c, b))
            report.universal_violations.push_back({"C1", wit({a, b, c})});
          if (M(b, a, c))
            report.universal_violations.push_back({"C2", wit({a, b, c})});
          for (int d = 0; d < n; ++d)
            if (!M(a, d, c) && !M(d, b, c))
              report.universal_violations.push_back({"C3", wit({a, b, c, d})});
        }
        if (!(a == b && b == c) && a <= b && b <= c && !M(a, b, c) &&
            !M(b, a, c) && !M(c, a, b))
          report.universal_violations.push_back({"C8", wit({a, b, c})});
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && !M(a, b, b))
        report.universal_violations.push_back({"C4", wit({a, b, b})});

  if (mode == CheckMode::full) {
    ExistentialResult c5{ExistentialStatus::holds, {}};
    ExistentialResult c6{ExistentialStatus::holds, {}};
    ExistentialResult c7{ExistentialStatus::holds, {}};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (c5.status == ExistentialStatus::holds) {
          bool found = false;
          for (int c = 0; c < n; ++c)
            if (M(c, a, b)) found = true;
          if (!found) c5 = {ExistentialStatus::fails_with_witness, wit({a, b})};
        }
        if (c6.status == ExistentialStatus::holds && a != b) {
          bool found = false;
          for (int c = 0; c < n; ++c)
            if (c != b && M(a, b, c)) found = true;
          if (!found) c6 = {ExistentialStatus::fails_with_witness, wit({a, b})};
        }
        if (c7.status == ExistentialStatus::holds)
          for (int c = 0; c < n; ++c) {
            if (!M(c, a, b)) continue;
            bool found = false;
            for (int e = 0; e < n; ++e)
              if (M(c, e, b) && M(e, a, b)) found = true;
            if (!found) {
              c7 = {ExistentialStatus::fails_with_witness, wit({a, b, c})};
              break;
            }
          }
      }
    report.existential_status["C5"] = c5;
    report.existential_status["C6"] = c6;
    report.existential_status["C7"] = c7;
  } else {
    report.existential_status["C5"] = {};
    report.existential_status["C6"] = {};
    report.existential_status["C7"] = {};
  }
  return report;
}

template <typename M4>
AxiomReport d_axioms_core(const std::vector<Label>& labels, M4 M,
                          CheckMode mode) {
  AxiomReport report;
  int n = static_cast<int>(labels.size());
  auto wit = [&](std::initializer_list<int> ids) {
    std::vector<Label> out;
    for (int i : ids) out.push_back(labels[i]);
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (M(a, b, c, d)) {
            if (!M(b, a, c, d) || !M(a, b, d, c) || !M(c, d, a, b))
              report.universal_violations.push_back({"D1", wit({a, b, c, d})});
            if (M(a, c, b, d))
              report.universal_violations.push_back({"D2", wit({a, b, c, d})});
            for (int e = 0; e < n; ++e)
              if (!M(e, b, c, d) && !M(a, b, c, e))
                report.universal_violations.push_back(
                    {"D3", wit({a, b, c, d, e})});
          }
          int distinct = 1 + (b != a) + (c != a && c != b) +
                         (d != a && d != b && d != c);
          if (distinct >= 3 && !M(a, b, c, d) && !M(a, c, b, d) &&
              !M(a, d, b, c))
            report.universal_violations.push_back({"D7", wit({a, b, c, d})});
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (a != c && b != c && !M(a, b, c, c))
          report.universal_violations.push_back({"D4", wit({a, b, c, c})});

  if (mode == CheckMode::full) {
    ExistentialResult d5{ExistentialStatus::holds, {}};
    ExistentialResult d6{ExistentialStatus::holds, {}};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (d5.status == ExistentialStatus::holds && a != b && a != c &&
              b != c) {
            bool found = false;
            for (int d = 0; d < n; ++d)
              if (d != a && d != b && d != c && M(a, b, c, d)) found = true;
            if (!found)
              d5 = {ExistentialStatus::fails_with_witness, wit({a, b, c})};
          }
          if (d6.status == ExistentialStatus::holds)
            for (int d = 0; d < n; ++d) {
              if (!M(a, b, c, d)) continue;
              bool found = false;
              for (int e = 0; e < n; ++e)
                if (M(e, b, c, d) && M(a, e, c, d) && M(a, b, e, d) &&
                    M(a, b, c, e))
                  found = true;
              if (!found) {
                d6 = {ExistentialStatus::fails_with_witness, wit({a, b, c, d})};
                break;
              }
            }
        }
    report.existential_status["D5"] = d5;
    report.existential_status["D6"] = d6;
  } else {
    report.existential_status["D5"] = {};
    report.existential_status["D6"] = {};
  }
  return report;
}

template <typename M3>
AxiomReport c_cons_core(const std::vector<Label>& labels, M3 M) {
  AxiomReport report;
  int n = static_cast<int>(labels.size());
  auto wit = [&](std::initializer_list<int> ids) {
    std::vector<Label> out;
    for (int i : ids) out.push_back(labels[i]);
    return out;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t) {
          if (M(x, y, z) && M(x, y, t) && !M(x, z, t))
            report.universal_violations.push_back({"Ccons1", wit({x, y, z, t})});
          if (M(x, z, t) && M(z, x, y) && (!M(t, x, y) || !M(y, z, t)))
            report.universal_violations.push_back({"Ccons2", wit({x, y, z, t})});
          if (M(z, x, y) && M(y, x, t) && (!M(z, y, t) || !M(z, x, t)))
            report.universal_violations.push_back({"Ccons3", wit({x, y, z, t})});
        }
  return report;
}

template <typename M4>
AxiomReport d_cons_core(const std::vector<Label>& labels, M4 M) {
  AxiomReport report;
  int n = static_cast<int>(labels.size());
  auto wit = [&](std::initializer_list<int> ids) {
    std::vector<Label> out;
    for (int i : ids) out.push_back(labels[i]);
    return out;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            if (M(x, y, z, u) && M(x, y, z, v) && !M(x, y, u, v))
              report.universal_violations.push_back(
                  {"Dcons1", wit({x, y, z, u, v})});
            if (M(x, y, z, u)) {
              bool left = M(x, v, z, u) && M(y, v, z, u);
              bool right = M(x, y, z, v) && M(x, y, u, v);
              if (!left && !right)
                report.universal_violations.push_back(
                    {"Dcons2", wit({x, y, z, u, v})});
            }
          }
  return report;
}

}  // namespace

AxiomReport check_c_axioms(const TernaryRelation& rel, CheckMode mode) {
  const std::vector<Label> labels = sorted_unique(rel.labels);
  auto M = [&](int a, int p, int q) {
    return rel.contains(labels[a], labels[p], labels[q]);
  };
  return c_axioms_core(labels, M, mode);
}

AxiomReport check_c_axioms(const LeafStructure& s, CheckMode mode) {
  auto M = [&](int a, int p, int q) { return s.contains_index(a, p, q); };
  return c_axioms_core(s.labels(), M, mode);
}

AxiomReport check_d_axioms(const QuaternaryRelation& rel, CheckMode mode) {
  const std::vector<Label> labels = sorted_unique(rel.labels);
  auto M = [&](int a, int b, int c, int d) {
    return rel.contains(labels[a], labels[b], labels[c], labels[d]);
  };
  return d_axioms_core(labels, M, mode);
}

AxiomReport check_d_axioms(const QuartetStructure& s, CheckMode mode) {
  auto M = [&](int a, int b, int c, int d) {
    return s.contains_index(a, b, c, d);
  };
  return d_axioms_core(s.labels(), M, mode);
}

AxiomReport check_c_consequences(const TernaryRelation& rel) {
  const std::vector<Label> labels = sorted_unique(rel.labels);
  auto M = [&](int a, int p, int q) {
    return rel.contains(labels[a], labels[p], labels[q]);
  };
  return c_cons_core(labels, M);
}

AxiomReport check_c_consequences(const LeafStructure& s) {
  auto M = [&](int a, int p, int q) { return s.contains_index(a, p, q); };
  return c_cons_core(s.labels(), M);
}

AxiomReport check_d_consequences(const QuaternaryRelation& rel) {
  const std::vector<Label> labels = sorted_unique(rel.labels);
  auto M = [&](int a, int b, int c, int d) {
    return rel.contains(labels[a], labels[b], labels[c], labels[d]);
  };
  return d_cons_core(labels, M);
}

AxiomReport check_d_consequences(const QuartetStructure& s) {
  auto M = [&](int a, int b, int c, int d) {
    return s.contains_index(a, b, c, d);
  };
  return d_cons_core(s.labels(), M);
}

// ---------------------------------------------------------------------------
// Set separation, splits, derived quartets

bool sets_separated(const LeafStructure& s, const std::vector<Label>& ys,
                    const std::vector<Label>& zs) {
  if (ys.empty() || zs.empty())
    throw BadParametersError("sets_separated: empty side");
  for (const Label& y : ys)
    for (const Label& z : zs)
      if (y == z) throw BadParametersError("sets_separated: overlapping sides");
  for (const Label& y : ys)
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j)
        if (!s.contains(y, zs[i], zs[j])) return false;
  for (const Label& z : zs)
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t j = i + 1; j < ys.size(); ++j)
        if (!s.contains(z, ys[i], ys[j])) return false;
  return true;
}

std::pair<std::vector<Label>, std::vector<Label>> find_split(
    const LeafStructure& s, const std::vector<Label>& y) {
  std::vector<Label> sorted = sorted_unique(y);
  for (const Label& l : sorted) s.index_of(l);
  if (sorted.size() < 2)
    throw BadParametersError("find_split needs at least 2 labels");
  std::vector<Label> a{sorted[0]}, b{sorted[1]};
  for (std::size_t i = 2; i < sorted.size(); ++i) {
    const Label& fresh = sorted[i];
    const Label& rep_a = a.front();
    const Label& rep_b = b.front();
    if (s.contains(fresh, rep_a, rep_b)) {
      std::vector<Label> merged;
      std::merge(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(merged));
      a = {fresh};
      b = std::move(merged);
    } else if (s.contains(rep_b, fresh, rep_a)) {
      a.insert(std::lower_bound(a.begin(), a.end(), fresh), fresh);
    } else if (s.contains(rep_a, fresh, rep_b)) {
      b.insert(std::lower_bound(b.begin(), b.end(), fresh), fresh);
    } else {
      throw NoSplitError("not a valid leaf structure on the given subset");
    }
  }
  return {a, b};
}

namespace {

std::vector<std::vector<Label>> partition_rec(const LeafStructure& s,
                                              const std::vector<Label>& u,
                                              const Label& c) {
  if (u.empty()) return {};
  if (sets_separated(s, {c}, u)) return {u};
  auto [v, w] = find_split(s, u);
  std::vector<Label> v_and_c = v;
  v_and_c.push_back(c);
  std::vector<Label> w_and_c = w;
  w_and_c.push_back(c);
  if (sets_separated(s, v_and_c, w)) {
    auto parts = partition_rec(s, v, c);
    parts.push_back(w);
    return parts;
  }
  if (sets_separated(s, v, w_and_c)) {
    auto parts = partition_rec(s, w, c);
    parts.push_back(v);
    return parts;
  }
  throw InvalidStructureError("anchored partition: no case applies");
}

}  // namespace

std::vector<std::vector<Label>> partition_from_anchor(
    const LeafStructure& s, const std::vector<Label>& u, const Label& c) {
  s.index_of(c);
  std::vector<Label> sorted = sorted_unique(u);
  for (const Label& l : sorted) {
    s.index_of(l);
    if (l == c) throw BadParametersError("anchor occurs in the subset");
  }
  return partition_rec(s, sorted, c);
}

QuartetStructure c_to_q(const LeafStructure& s) {
  const std::vector<Label>& labels = s.labels();
  int n = s.label_count();
  std::vector<std::array<int, 5>> table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          std::array<int, 4> q{i, j, k, l};
          int code = 0;
          for (int partner = 1; partner <= 3; ++partner) {
            int x = q[0], y = q[partner];
            int u = q[partner == 1 ? 2 : 1];
            int v = q[partner == 3 ? 2 : 3];
            bool holds = (s.contains_index(u, x, y) &&
                          s.contains_index(v, x, y)) ||
                         (s.contains_index(x, u, v) &&
                          s.contains_index(y, u, v));
            if (holds) {
              if (code != 0)
                throw InvalidStructureError("ambiguous derived pairing");
              code = partner;
            }
          }
          if (code == 0)
            throw InvalidStructureError("no derived pairing for " + labels[i] +
                                        " " + labels[j] + " " + labels[k] +
                                        " " + labels[l]);
          table.push_back({i, j, k, l, code});
        }
  return QuartetStructure::from_pairing_table(labels, table);
}

LeafStructure restrict(const LeafStructure& s,
                       const std::vector<Label>& subset) {
  std::vector<Label> labels = sorted_unique(subset);
  std::vector<int> src(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    src[i] = s.index_of(labels[i]);
  int n = static_cast<int>(labels.size());
  std::vector<std::array<int, 4>> table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int apex = s.apex_index(src[i], src[j], src[k]);
        int pos = apex == src[i] ? 0 : (apex == src[j] ? 1 : 2);
        table.push_back({i, j, k, pos});
      }
  return LeafStructure::from_apex_table(std::move(labels), table);
}

QuartetStructure restrict(const QuartetStructure& s,
                          const std::vector<Label>& subset) {
  std::vector<Label> labels = sorted_unique(subset);
  std::vector<int> src(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    src[i] = s.index_of(labels[i]);
  int n = static_cast<int>(labels.size());
  std::vector<std::array<int, 5>> table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          // src indices are increasing, so the partner position transfers
          int partner = s.pairing_partner(src[i], src[j], src[k], src[l]);
          table.push_back({i, j, k, l, partner});
        }
  return QuartetStructure::from_pairing_table(std::move(labels), table);
}

}  // namespace treerel
