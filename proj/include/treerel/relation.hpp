#ifndef TREEREL_RELATION_HPP
#define TREEREL_RELATION_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "treerel/errors.hpp"
#include "treerel/tree.hpp"

namespace treerel {

/// (a, b, c) read as ab|c, i.e. C(c; a,b). Matches the `a b | c` file format.
using RootedTriple = std::array<Label, 3>;

/// (a, b, c, d) read as Q(ab, cd). Matches the `a b | c d` file format.
using QuartetTuple = std::array<Label, 4>;

/// Raw ternary relation: an arbitrary set of ordered triples (apex last, as
/// in RootedTriple) over a label set. Membership optionally completes the
/// degenerate tuples C(a; b,b) for a != b; raw relations built for axiom
/// checking can switch that off to expose C4 itself.
struct TernaryRelation {
  std::vector<Label> labels;
  std::set<RootedTriple> tuples;  // stored literally, no closure applied
  bool derive_degenerates = true;

  /// C(apex; p, q) under this relation's membership rule.
  bool contains(const Label& apex, const Label& p, const Label& q) const;
};

/// Raw 4-ary relation: ordered tuples read as Q(t0 t1, t2 t3); no symmetry
/// closure, so D1 is genuinely checkable.
struct QuaternaryRelation {
  std::vector<Label> labels;
  std::set<QuartetTuple> tuples;
  bool derive_degenerates = true;

  bool contains(const Label& a, const Label& b, const Label& c,
                const Label& d) const;
};

enum class CheckMode { universal_only, full };
enum class ExistentialStatus { holds, fails_with_witness, skipped };

struct AxiomViolation {
  std::string axiom;
  std::vector<Label> witness;
};

struct ExistentialResult {
  ExistentialStatus status = ExistentialStatus::skipped;
  std::vector<Label> witness;  // failing instance when status is fails
};

struct AxiomReport {
  std::vector<AxiomViolation> universal_violations;
  std::map<std::string, ExistentialResult> existential_status;

  bool universal_ok() const { return universal_violations.empty(); }
  bool names_axiom(const std::string& axiom) const;
};

/// Validated C-relation on a finite label set: one apex per 3-subset,
/// universal axioms checked at construction. Immutable.
class LeafStructure {
 public:
  LeafStructure();  // empty label set
  /// Throws InvalidStructureError unless the triples describe exactly one
  /// apex per 3-subset and the universal axioms hold.
  LeafStructure(std::vector<Label> labels,
                const std::vector<RootedTriple>& triples);
  static LeafStructure from_relation(const TernaryRelation& rel);
  /// Trusted path for extraction code: apex table rows are (i, j, k, apexpos)
  /// with i<j<k label indices and apexpos in {0,1,2}.
  static LeafStructure from_apex_table(
      std::vector<Label> labels, const std::vector<std::array<int, 4>>& table);

  const std::vector<Label>& labels() const { return labels_; }
  int label_count() const { return static_cast<int>(labels_.size()); }
  int index_of(const Label& l) const;  // throws UnknownLabelError
  bool has_label(const Label& l) const;

  /// C(apex; p, q) including derived degenerate tuples.
  bool contains(const Label& apex, const Label& p, const Label& q) const;
  bool contains_index(int apex, int p, int q) const;
  /// Distinct-entry membership only.
  bool contains_strict(const Label& apex, const Label& p,
                       const Label& q) const;

  /// Apex label of a 3-subset of distinct labels.
  Label apex_of(const Label& x, const Label& y, const Label& z) const;
  int apex_index(int i, int j, int k) const;  // any distinct indices

  /// One canonical triple per 3-subset, as RootedTriple (pair sorted).
  std::vector<RootedTriple> rooted_triples() const;
  std::size_t ordered_triple_count() const;

  TernaryRelation to_relation() const;
  bool operator==(const LeafStructure& other) const;

 private:
  std::vector<Label> labels_;
  std::map<Label, int> index_;
  std::vector<std::uint8_t> cube_;  // full ordered membership, n^3

  void build_index();
  int cube_at(int a, int p, int q) const {
    return cube_[(static_cast<std::size_t>(a) * labels_.size() + p) *
                     labels_.size() +
                 q];
  }
};

/// Validated D-relation on a finite label set: one pairing per 4-subset,
/// universal axioms checked at construction. Immutable.
class QuartetStructure {
 public:
  QuartetStructure();
  QuartetStructure(std::vector<Label> labels,
                   const std::vector<QuartetTuple>& quartets);
  static QuartetStructure from_relation(const QuaternaryRelation& rel);
  /// Trusted path: rows (i, j, k, l, partner) with i<j<k<l and partner in
  /// {1,2,3} naming which of j,k,l pairs with i.
  static QuartetStructure from_pairing_table(
      std::vector<Label> labels, const std::vector<std::array<int, 5>>& table);

  const std::vector<Label>& labels() const { return labels_; }
  int label_count() const { return static_cast<int>(labels_.size()); }
  int index_of(const Label& l) const;
  bool has_label(const Label& l) const;

  /// Q(ab, cd) including derived degenerate tuples.
  bool contains(const Label& a, const Label& b, const Label& c,
                const Label& d) const;
  bool contains_index(int a, int b, int c, int d) const;

  /// Partner of the minimum index in the stored pairing of {i,j,k,l}.
  int pairing_partner(int i, int j, int k, int l) const;

  /// One canonical tuple per 4-subset.
  std::vector<QuartetTuple> quartets() const;

  QuaternaryRelation to_relation() const;
  bool operator==(const QuartetStructure& other) const;

 private:
  std::vector<Label> labels_;
  std::map<Label, int> index_;
  std::map<std::array<int, 4>, int> pairing_;  // sorted subset -> partner

  void build_index();
};

/// LeafStructure together with a convex total order on its labels.
class OrderedLeafStructure {
 public:
  OrderedLeafStructure(LeafStructure structure, std::vector<Label> order);
  static OrderedLeafStructure from_tree(const RootedBinaryTree& tree,
                                        const std::optional<Label>& last = {});

  const LeafStructure& structure() const { return structure_; }
  const std::vector<Label>& order() const { return order_; }
  int rank(const Label& l) const;
  bool less(const Label& a, const Label& b) const;

 private:
  LeafStructure structure_;
  std::vector<Label> order_;
  std::map<Label, int> rank_;
};

AxiomReport check_c_axioms(const TernaryRelation& rel,
                           CheckMode mode = CheckMode::universal_only);
AxiomReport check_c_axioms(const LeafStructure& s,
                           CheckMode mode = CheckMode::universal_only);
AxiomReport check_d_axioms(const QuaternaryRelation& rel,
                           CheckMode mode = CheckMode::universal_only);
AxiomReport check_d_axioms(const QuartetStructure& s,
                           CheckMode mode = CheckMode::universal_only);

/// The three derived implications of a C-relation, checked exhaustively.
AxiomReport check_c_consequences(const TernaryRelation& rel);
AxiomReport check_c_consequences(const LeafStructure& s);
/// The two derived implications of a D-relation.
AxiomReport check_d_consequences(const QuaternaryRelation& rel);
AxiomReport check_d_consequences(const QuartetStructure& s);

/// C(Y, Z) over distinct-entry triples; for tree-derived structures this is
/// exactly the separation Y|Z. Sides must be non-empty and disjoint.
bool sets_separated(const LeafStructure& s, const std::vector<Label>& ys,
                    const std::vector<Label>& zs);

/// Splits y into non-empty (A, B) with A u B = y and C(A, B), following the
/// incremental argument with labels processed in sorted order.
std::pair<std::vector<Label>, std::vector<Label>> find_split(
    const LeafStructure& s, const std::vector<Label>& y);

/// Partition U1..Uk of u with ({c} u U1 u ... u U(i-1)) | Ui for all i.
std::vector<std::vector<Label>> partition_from_anchor(
    const LeafStructure& s, const std::vector<Label>& u, const Label& c);

/// Relation-level quartet derivation; agrees with to_quartets on trees.
QuartetStructure c_to_q(const LeafStructure& s);

LeafStructure restrict(const LeafStructure& s,
                       const std::vector<Label>& subset);
QuartetStructure restrict(const QuartetStructure& s,
                          const std::vector<Label>& subset);

}  // namespace treerel

#endif
