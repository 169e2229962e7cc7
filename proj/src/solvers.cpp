#include "treerel/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "treerel/reconstruct.hpp"

namespace treerel {

namespace {

int constraint_arity(InstanceKind kind) {
  return kind == InstanceKind::quartets ? 4 : 3;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

bool quartet_holds(const RootedBinaryTree& t, const std::vector<Label>& q) {
  return (t.separated({q[0], q[1]}, {q[2]}) &&
          t.separated({q[0], q[1]}, {q[3]})) ||
         (t.separated({q[0]}, {q[2], q[3]}) &&
          t.separated({q[1]}, {q[2], q[3]}));
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;  // deterministic across platforms, bias irrelevant here
}

}  // namespace

void Instance::validate() const {
  std::set<Label> known(labels.begin(), labels.end());
  if (known.size() != labels.size())
    throw MalformedInstanceError("repeated label in the label set");
  int arity = constraint_arity(kind);
  for (const auto& c : constraints) {
    if (static_cast<int>(c.size()) != arity)
      throw MalformedInstanceError("constraint of wrong arity");
    std::set<Label> entries;
    for (const Label& l : c) {
      if (!known.count(l))
        throw MalformedInstanceError("constraint mentions unknown label " + l);
      if (!entries.insert(l).second)
        throw MalformedInstanceError("constraint with repeated entries");
    }
  }
}

Solution solve_rooted_triples(const Instance& inst) {
  if (inst.kind != InstanceKind::triples)
    throw MalformedInstanceError("expected a rooted-triple instance");
  inst.validate();
  auto start = std::chrono::steady_clock::now();
  Solution result;
  if (inst.labels.empty()) {
    result.satisfiable = true;
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
  }
  std::vector<RootedTriple> triples;
  for (const auto& c : inst.constraints) triples.push_back({c[0], c[1], c[2]});
  auto tree =
      build_from_triples(inst.labels, triples, &result.stats.nodes_explored);
  if (tree) {
    result.satisfiable = true;
    result.tree = std::move(tree);
  }
  result.stats.elapsed_seconds = seconds_since(start);
  return result;
}

namespace {

Solution exhaustive_solve(
    const Instance& inst, int max_labels,
    const std::function<bool(const RootedBinaryTree&)>& accepts) {
  inst.validate();
  if (static_cast<int>(inst.labels.size()) > max_labels)
    throw BoundExceededError("instance has " +
                             std::to_string(inst.labels.size()) +
                             " labels, bound is " + std::to_string(max_labels));
  auto start = std::chrono::steady_clock::now();
  Solution result;
  if (inst.labels.empty()) {
    result.satisfiable = true;
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
  }
  for_each_tree(inst.labels, [&](const RootedBinaryTree& t) {
    ++result.stats.nodes_explored;
    if (accepts(t)) {
      result.satisfiable = true;
      result.tree = t;
      return false;
    }
    return true;
  });
  result.stats.elapsed_seconds = seconds_since(start);
  return result;
}

}  // namespace

Solution solve_quartets(const Instance& inst, int max_labels) {
  if (inst.kind != InstanceKind::quartets)
    throw MalformedInstanceError("expected a quartet instance");
  return exhaustive_solve(inst, max_labels, [&](const RootedBinaryTree& t) {
    for (const auto& c : inst.constraints)
      if (!quartet_holds(t, c)) return false;
    return true;
  });
}

Solution solve_forbidden_triples(const Instance& inst, int max_labels) {
  if (inst.kind != InstanceKind::forbidden_triples)
    throw MalformedInstanceError("expected a forbidden-triples instance");
  return exhaustive_solve(inst, max_labels, [&](const RootedBinaryTree& t) {
    for (const auto& c : inst.constraints)
      if (t.separated({c[0], c[1]}, {c[2]})) return false;
    return true;
  });
}

RootedBinaryTree random_tree(const std::vector<Label>& labels,
                             std::uint64_t seed) {
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw BadParametersError("random_tree: no labels");
  std::mt19937_64 rng(seed);
  RootedBinaryTree t = RootedBinaryTree::leaf(sorted[0]);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    std::vector<int> positions;
    for (int v : t.preorder())
      if (v != t.root()) positions.push_back(v);
    std::uint64_t pick = draw(rng, positions.size() + 1);
    t = pick < positions.size()
            ? t.attach_at_edge(positions[pick], sorted[i])
            : t.attach_above_root(sorted[i]);
  }
  return t;
}

Instance generate_instance(InstanceKind kind, int n_labels,
                           const std::optional<RootedBinaryTree>& planted,
                           double noise, std::uint64_t seed) {
  if (n_labels < 1 || n_labels > 26)
    throw BadParametersError("n_labels out of range");
  if (noise < 0.0 || noise > 1.0) throw BadParametersError("noise out of range");
  Instance inst;
  inst.kind = kind;
  for (int i = 0; i < n_labels; ++i)
    inst.labels.push_back(std::string(1, 'a' + i));

  RootedBinaryTree tree =
      planted ? *planted : random_tree(inst.labels, seed ^ 0x9e3779b97f4a7c15ULL);
  if (tree.leaf_labels_sorted() != inst.labels)
    throw BadParametersError("planted tree has a different label set");
  LeafStructure s = to_leaf_structure(tree);

  std::mt19937_64 rng(seed);
  auto noisy = [&]() { return draw(rng, 1000000) < noise * 1000000.0; };
  int n = n_labels;
  const std::vector<Label>& ls = inst.labels;

  if (kind == InstanceKind::quartets) {
    QuartetStructure q = to_quartets(tree);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int l = k + 1; l < n; ++l) {
            int partner = q.pairing_partner(i, j, k, l);
            if (noisy()) partner = 1 + static_cast<int>(draw(rng, 3));
            std::array<int, 4> sub{i, j, k, l};
            std::vector<Label> c{ls[i], ls[sub[partner]]};
            for (int t = 1; t <= 3; ++t)
              if (t != partner) c.push_back(ls[sub[t]]);
            inst.constraints.push_back(c);
          }
    return inst;
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::array<Label, 3> sub{ls[i], ls[j], ls[k]};
        Label apex = s.apex_of(sub[0], sub[1], sub[2]);
        int apexpos = apex == sub[0] ? 0 : (apex == sub[1] ? 1 : 2);
        if (kind == InstanceKind::triples) {
          if (noisy()) apexpos = static_cast<int>(draw(rng, 3));
        } else {  // forbid a non-planted orientation by default
          int other = static_cast<int>(draw(rng, 2));
          apexpos = (apexpos + 1 + other) % 3;
          if (noisy()) apexpos = static_cast<int>(draw(rng, 3));
        }
        std::vector<Label> c;
        for (int t = 0; t < 3; ++t)
          if (t != apexpos) c.push_back(sub[t]);
        c.push_back(sub[apexpos]);
        inst.constraints.push_back(c);
      }
  return inst;
}

}  // namespace treerel
