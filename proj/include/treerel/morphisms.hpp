#ifndef TREEREL_MORPHISMS_HPP
#define TREEREL_MORPHISMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treerel/relation.hpp"

namespace treerel {

/// Total map from the labels of a source structure into the labels of a
/// target structure. Orders and designated constants are optional; constants
/// are source labels treated as distinguished points.
struct PartialMap {
  LeafStructure source;
  std::optional<std::vector<Label>> source_order;
  std::vector<Label> source_constants;
  LeafStructure target;
  std::optional<std::vector<Label>> target_order;
  std::map<Label, Label> assignment;

  const Label& operator()(const Label& l) const;
  std::vector<Label> image(const std::vector<Label>& ls) const;
  bool injective_on(const std::vector<Label>& ls) const;
  /// Checks the assignment is total on source labels and lands in the target.
  void validate() const;
};

struct PreservationReport {
  bool preserved = false;  // every source tuple lands on a target tuple
  std::vector<Label> witness;
  bool injective = false;
  std::vector<Label> collision;  // two labels with equal image
  bool complement_preserved = false;
  std::vector<Label> complement_witness;

  explicit operator bool() const { return preserved; }
};

/// Transport of the rooted-triple relation; when it holds, injectivity and
/// complement preservation are re-verified and reported alongside.
PreservationReport preserves_c(const PartialMap& m);
/// Same for the derived quartet relation.
PreservationReport preserves_q(const PartialMap& m);
PreservationReport preserves_q(const QuartetStructure& src,
                               const QuartetStructure& tgt,
                               const std::map<Label, Label>& assignment);

/// For a Q-preserving map on A = source labels, |A| >= 2: a non-empty B c A
/// with f(B) | f(A\B) in the target and B | x for every x in A\B.
std::vector<Label> find_invq_split(const PartialMap& m);

struct ConePartition {
  std::vector<Label> anchors;
  std::vector<std::vector<Label>> classes;  // each sorted; sorted by front

  const std::vector<Label>& class_of(const Label& l) const;
};

/// Equivalence classes of E(x,y) <=> xy|c_i for every constant c_i.
ConePartition cones(const LeafStructure& s, const std::vector<Label>& constants);

enum class Behavior { id, lin, nil, id_c, cut_c, rer_c, tilde_rer_c, none };

std::string behavior_name(Behavior b);

struct BehaviorWitness {
  Behavior family = Behavior::none;
  std::vector<Label> tuple;
};

struct BehaviorReport {
  Behavior verdict = Behavior::none;
  bool precondition_ok = true;
  std::vector<Behavior> holding;  // every clause family that holds on A
  std::vector<BehaviorWitness> witnesses;

  bool holds(Behavior b) const;
};

/// id / lin / nil classification on A. The source must carry a convex order
/// and m must be injective on A. Verdict picks id before lin before nil when
/// several clause families hold (they coincide on degenerate sources);
/// `holding` lists them all.
BehaviorReport behavior_classify_plain(const PartialMap& m,
                                       const std::vector<Label>& a);

/// id_c / cut_c / rer_c / tilde_rer_c classification on A with anchor c.
/// Verifies the three anchored preconditions first; clause families are only
/// meaningful when precondition_ok.
BehaviorReport behavior_classify_anchored(const PartialMap& m, const Label& c,
                                          const std::vector<Label>& a);

/// Self-test of the equivalence "behaves as rer_a on X iff preserves Q on X"
/// under the hypothesis f(a) | f(X\{a}). Always true on correct inputs.
bool rer_equiv_q_check(const PartialMap& m, const Label& a,
                       const std::vector<Label>& x);

/// Nil(a1..ak): a1 < ... < ak in the order and a1..a(i-1) | ai for all i.
bool nil_check(const OrderedLeafStructure& s, const std::vector<Label>& tuple);

struct TupleType {
  int arity = 0;
  std::string key;

  bool operator<(const TupleType& o) const {
    return arity != o.arity ? arity < o.arity : key < o.key;
  }
  bool operator==(const TupleType& o) const {
    return arity == o.arity && key == o.key;
  }
};

/// Atomic-diagram key of a tuple: equalities, order comparisons (when an
/// order is given) and C-membership over positions. Constants, when given,
/// are appended to the tuple before the diagram is taken.
TupleType tuple_type_key(const LeafStructure& s,
                         const std::optional<std::vector<Label>>& order,
                         const std::vector<Label>& tuple,
                         const std::vector<Label>& constants = {});

struct CanonicalResult {
  bool canonical = false;
  std::map<std::string, std::string> type_map;  // source key -> image key
  std::vector<Label> witness_a, witness_b;      // same type, images differ
};

/// A map is canonical at arity <= k_max when the image tuple's type depends
/// only on the source tuple's type.
CanonicalResult check_canonical(const PartialMap& m, int k_max = 4);

constexpr int kDefaultTypeBound = 6;

/// Types of k-tuples of distinct elements: labeled tree shapes on k leaves
/// crossed with convex orders (ordered case), deduplicated by key.
std::vector<TupleType> enumerate_tuple_types(int k, bool ordered,
                                             int bound = kDefaultTypeBound);

/// Constructs an order-preserving injective map out of s whose plain
/// classification has the requested behavior (lin or nil).
std::pair<OrderedLeafStructure, PartialMap> realize_behavior(
    const OrderedLeafStructure& s, Behavior which);

/// Composes explicitly constructed cut-behaving maps along x1 < ... < xk and
/// reports whether the final image tuple satisfies Nil. Always true for
/// correct inputs; exposed as a self-test of the finite induction step.
bool cut_composition_check(const RootedBinaryTree& host,
                           const std::vector<Label>& tuple);

}  // namespace treerel

#endif
