#include "treerel/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "treerel/io.hpp"
#include "treerel/morphisms.hpp"
#include "treerel/reconstruct.hpp"
#include "treerel/relation.hpp"
#include "treerel/solvers.hpp"
#include "treerel/tree.hpp"

namespace treerel {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

LeafStructure structure_from_triple_text(const std::string& text) {
  std::istringstream in(text);
  TripleFile file = parse_triples(in);
  return LeafStructure(file.labels, file.triples);
}

std::vector<Label> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<Label> out;
  Label word;
  while (in >> word) out.push_back(word);
  return out;
}

struct CliState {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json_out = false;
  int exit_code = 0;
};

void cmd_check_c(CliState& s, const std::string& path, bool full) {
  std::istringstream text(slurp(path, s.in));
  TripleFile file = parse_triples(text);
  AxiomReport report = check_c_axioms(
      file.to_relation(), full ? CheckMode::full : CheckMode::universal_only);
  s.out << (s.json_out ? to_json_text(report) + "\n" : to_text(report));
  if (!report.universal_ok()) s.exit_code = 1;
}

void cmd_check_d(CliState& s, const std::string& path, bool full) {
  std::istringstream text(slurp(path, s.in));
  QuartetFile file = parse_quartets(text);
  AxiomReport report = check_d_axioms(
      file.to_relation(), full ? CheckMode::full : CheckMode::universal_only);
  s.out << (s.json_out ? to_json_text(report) + "\n" : to_text(report));
  if (!report.universal_ok()) s.exit_code = 1;
}

void cmd_triples(CliState& s, const std::string& path) {
  RootedBinaryTree tree = parse_newick(slurp(path, s.in));
  LeafStructure st = to_leaf_structure(tree);
  if (s.json_out) {
    json j;
    j["triples"] = json::array();
    for (const RootedTriple& t : st.rooted_triples())
      j["triples"].push_back({t[0], t[1], t[2]});
    s.out << j.dump() << "\n";
  } else {
    s.out << format_triples(st);
  }
}

void cmd_quartets(CliState& s, const std::string& path) {
  RootedBinaryTree tree = parse_newick(slurp(path, s.in));
  QuartetStructure q = to_quartets(tree);
  if (s.json_out) {
    json j;
    j["quartets"] = json::array();
    for (const QuartetTuple& t : q.quartets())
      j["quartets"].push_back({t[0], t[1], t[2], t[3]});
    s.out << j.dump() << "\n";
  } else {
    s.out << format_quartets(q);
  }
}

void cmd_build(CliState& s, const std::string& path) {
  std::istringstream text(slurp(path, s.in));
  TripleFile file = parse_triples(text);
  auto tree = build_from_triples(file.labels, file.triples);
  if (!tree) {
    if (s.json_out)
      s.out << json{{"verdict", "inconsistent"}}.dump() << "\n";
    else
      s.out << "Inconsistent\n";
    s.exit_code = 1;
    return;
  }
  if (s.json_out)
    s.out << json{{"verdict", "consistent"}, {"tree", format_newick(*tree)}}
                 .dump()
          << "\n";
  else
    s.out << format_newick(*tree) << "\n";
}

void cmd_solve(CliState& s, const std::string& path, InstanceKind kind,
               int max_labels) {
  std::istringstream text(slurp(path, s.in));
  Instance inst = parse_instance(text);
  if (inst.kind != kind)
    throw MalformedInstanceError("instance kind does not match subcommand");
  Solution sol;
  switch (kind) {
    case InstanceKind::triples: sol = solve_rooted_triples(inst); break;
    case InstanceKind::quartets: sol = solve_quartets(inst, max_labels); break;
    case InstanceKind::forbidden_triples:
      sol = solve_forbidden_triples(inst, max_labels);
      break;
  }
  s.out << (s.json_out ? to_json_text(sol) + "\n" : to_text(sol));
  if (!sol.satisfiable) s.exit_code = 1;
}

void cmd_amalgam(CliState& s, const std::string& path1,
                 const std::string& path2) {
  LeafStructure b1 = structure_from_triple_text(slurp(path1, s.in));
  LeafStructure b2 = structure_from_triple_text(slurp(path2, s.in));
  RootedBinaryTree tree = amalgamate(b1, b2);
  if (s.json_out)
    s.out << json{{"tree", format_newick(tree)}}.dump() << "\n";
  else
    s.out << format_newick(tree) << "\n";
}

void cmd_reroot(CliState& s, const std::string& path, const Label& leaf) {
  RootedBinaryTree tree = parse_newick(slurp(path, s.in));
  RootedBinaryTree rerooted = reroot_tree(tree, leaf);
  if (s.json_out)
    s.out << json{{"tree", format_newick(rerooted)}}.dump() << "\n";
  else
    s.out << format_newick(rerooted) << "\n";
}

void cmd_convex(CliState& s, const std::string& path,
                const std::optional<Label>& last) {
  RootedBinaryTree tree = parse_newick(slurp(path, s.in));
  std::vector<Label> order = convex_order_dfs(tree, last);
  if (s.json_out) {
    s.out << json{{"order", order}}.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < order.size(); ++i)
      s.out << (i ? " " : "") << order[i];
    s.out << "\n";
  }
}

void cmd_orbits(CliState& s, int k, bool unordered) {
  std::size_t count = enumerate_tuple_types(k, !unordered).size();
  if (s.json_out)
    s.out << json{{"k", k}, {"ordered", !unordered}, {"count", count}}.dump()
          << "\n";
  else
    s.out << count << "\n";
}

void cmd_enumerate(CliState& s, int n) {
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, 'a' + i));
  if (s.json_out) {
    json j;
    j["trees"] = json::array();
    for_each_tree(labels, [&](const RootedBinaryTree& t) {
      j["trees"].push_back(format_newick(t));
      return true;
    });
    j["count"] = j["trees"].size();
    s.out << j.dump() << "\n";
  } else {
    for_each_tree(labels, [&](const RootedBinaryTree& t) {
      s.out << format_newick(t) << "\n";
      return true;
    });
  }
}

void cmd_behavior(CliState& s, const std::string& source_path,
                  const std::string& target_path, const std::string& map_path,
                  const std::optional<Label>& anchor_flag,
                  const std::string& order_text) {
  LeafStructure source = structure_from_triple_text(slurp(source_path, s.in));
  LeafStructure target = structure_from_triple_text(slurp(target_path, s.in));
  std::istringstream map_text(slurp(map_path, s.in));
  MapFile mf = parse_map(map_text);

  PartialMap m;
  m.source = source;
  m.target = target;
  m.assignment = mf.assignment;
  m.source_constants = mf.constants;

  std::optional<Label> anchor = anchor_flag;
  if (!anchor && mf.constants.size() == 1) anchor = mf.constants.front();

  BehaviorReport report;
  if (anchor) {
    std::vector<Label> rest;
    for (const Label& l : source.labels())
      if (l != *anchor) rest.push_back(l);
    report = behavior_classify_anchored(m, *anchor, rest);
  } else {
    std::vector<Label> order;
    if (!order_text.empty()) {
      order = split_words(order_text);
    } else {
      auto tree = build_from_triples(source.labels(), source.rooted_triples());
      if (!tree) throw InvalidStructureError("source is not tree-realizable");
      order = convex_order_dfs(*tree);
    }
    m.source_order = order;
    report = behavior_classify_plain(m, source.labels());
  }
  s.out << (s.json_out ? to_json_text(report) + "\n" : to_text(report));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"rooted triples, quartets and their tree relations"};
  app.require_subcommand(1);
  CliState state{in, out, err};
  app.add_flag("--json", state.json_out, "emit JSON instead of text");

  std::string path = "-", path2 = "-";
  bool full = false, unordered = false;
  int k = 0, n = 0, max_labels = kDefaultSolverBound;
  std::string leaf, last, order_text, source_path, target_path, map_path;

  auto* check_c = app.add_subcommand("check-c", "check C-axioms of a triple file");
  check_c->add_option("file", path, "triple file or - for stdin");
  check_c->add_flag("--full", full, "also decide the existential axioms");

  auto* check_d = app.add_subcommand("check-d", "check D-axioms of a quartet file");
  check_d->add_option("file", path, "quartet file or - for stdin");
  check_d->add_flag("--full", full, "also decide the existential axioms");

  auto* triples = app.add_subcommand("triples", "extract rooted triples from newick");
  triples->add_option("file", path, "newick file or -");

  auto* quartets = app.add_subcommand("quartets", "extract quartets from newick");
  quartets->add_option("file", path, "newick file or -");

  auto* build = app.add_subcommand("build", "reconstruct a tree from triples");
  build->add_option("file", path, "triple file or -");

  auto* solve_q = app.add_subcommand("solve-quartets", "quartet consistency");
  solve_q->add_option("file", path, "instance file or -");
  solve_q->add_option("--max-labels", max_labels, "exhaustive search bound");

  auto* solve_f = app.add_subcommand("solve-forbidden", "forbidden triples");
  solve_f->add_option("file", path, "instance file or -");
  solve_f->add_option("--max-labels", max_labels, "exhaustive search bound");

  auto* amalgam = app.add_subcommand("amalgam", "amalgamate two structures");
  amalgam->add_option("file1", path, "triple file")->required();
  amalgam->add_option("file2", path2, "triple file")->required();

  auto* reroot = app.add_subcommand("reroot", "delete a leaf and reroot there");
  reroot->add_option("file", path, "newick file or -");
  reroot->add_option("--leaf", leaf, "leaf to reroot at")->required();

  auto* convex = app.add_subcommand("convex", "convex leaf order by DFS");
  convex->add_option("file", path, "newick file or -");
  convex->add_option("--last", last, "leaf forced to be maximal");

  auto* orbits = app.add_subcommand("orbits", "count tuple types of arity k");
  orbits->add_option("k", k, "tuple arity")->required();
  orbits->add_flag("--unordered", unordered, "ignore the convex order");

  auto* behavior = app.add_subcommand("behavior", "classify a finite map");
  behavior->add_option("--source", source_path, "source triple file")->required();
  behavior->add_option("--target", target_path, "target triple file")->required();
  behavior->add_option("--map", map_path, "map file")->required();
  std::string anchor;
  behavior->add_option("--anchor", anchor, "anchored classification at this label");
  behavior->add_option("--order", order_text, "convex order of the source");

  auto* enumerate = app.add_subcommand("enumerate", "list all trees on n leaves");
  enumerate->add_option("n", n, "number of leaves")->required();

  for (CLI::App* sub : {check_c, check_d, triples, quartets, build, solve_q,
                        solve_f, amalgam, reroot, convex, orbits, behavior,
                        enumerate})
    sub->fallthrough();  // lets --json appear after the subcommand

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (check_c->parsed()) cmd_check_c(state, path, full);
    else if (check_d->parsed()) cmd_check_d(state, path, full);
    else if (triples->parsed()) cmd_triples(state, path);
    else if (quartets->parsed()) cmd_quartets(state, path);
    else if (build->parsed()) cmd_build(state, path);
    else if (solve_q->parsed())
      cmd_solve(state, path, InstanceKind::quartets, max_labels);
    else if (solve_f->parsed())
      cmd_solve(state, path, InstanceKind::forbidden_triples, max_labels);
    else if (amalgam->parsed()) cmd_amalgam(state, path, path2);
    else if (reroot->parsed()) cmd_reroot(state, path, leaf);
    else if (convex->parsed())
      cmd_convex(state, path,
                 last.empty() ? std::nullopt : std::optional<Label>(last));
    else if (orbits->parsed()) cmd_orbits(state, k, unordered);
    else if (behavior->parsed())
      cmd_behavior(state, source_path, target_path, map_path,
                   anchor.empty() ? std::nullopt : std::optional<Label>(anchor),
                   order_text);
    else if (enumerate->parsed()) cmd_enumerate(state, n);
  } catch (const NotAmalgamableError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return state.exit_code;
}

}  // namespace treerel
