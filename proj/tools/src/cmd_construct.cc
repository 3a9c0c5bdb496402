#include "conflux/constructions.h"
#include "common.h"

namespace conflux::cli {

namespace {

struct ConstructOptions {
  std::string edge;
  bool map_to_first = false;
  bool check = false;
  std::string vertex;
  std::string embed;
  std::string chain;
  std::size_t copies = 2;
  std::string at;
  std::string cycle_vertex;
  std::size_t bound = 20;
};

Outcome bundle(const GraphPtr& g, const Morphism& f) {
  Json doc;
  doc["graph"] = graph_to_json(*g);
  doc["morphism"] = map_to_json(f);
  doc["confluent"] = classify(f).confluent;
  return Outcome{doc, kOk, to_dot(f)};
}

Json cover_doc(const CycleCover& c) {
  Json doc;
  doc["graph"] = graph_to_json(*c.graph);
  doc["morphism"] = map_to_json(c.map);
  doc["confluent"] = classify(c.map).confluent;
  Json order = Json::array();
  for (Vertex v : c.cycle.order()) order.push_back(c.graph->name(v));
  doc["cycle"] = std::move(order);
  return doc;
}

// The input graph together with the oriented cycle it declares.
std::pair<GraphPtr, OrientedCycle> graph_with_cycle(const std::string& path) {
  const Json doc = load(path);
  GraphPtr g = share(graph_from_json(doc));
  auto c = orientation_from_json(*g, doc);
  if (!c) c = as_cycle(*g);
  if (!c) throw UsageError("the graph document needs an \"orientation\"");
  return {g, *c};
}

// Sets separated by ';', or a JSON array of token arrays.
std::vector<VertexSet> parse_chain(const Graph& g, const std::string& text) {
  std::vector<VertexSet> chain;
  if (!text.empty() && text.front() == '[') {
    const Json doc = parse_json(text);
    if (!doc.is_array()) throw UsageError("--chain must be an array of token arrays");
    for (const Json& set : doc) chain.push_back(vertex_set_from_json(g, set));
    return chain;
  }
  std::string current;
  for (char ch : text + ";") {
    if (ch != ';') {
      current += ch;
      continue;
    }
    if (!current.empty()) chain.push_back(parse_set(g, current));
    current.clear();
  }
  return chain;
}

Json set_list(const Graph& g, const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const VertexSet& s : sets) out.push_back(vertex_set_to_json(g, s));
  return out;
}

}  // namespace

void add_construct_commands(CLI::App& app, Session& s) {
  CLI::App* group = app.add_subcommand("construct", "build graphs with their confluent maps");
  group->require_subcommand(1);
  auto opts = std::make_shared<ConstructOptions>();

  auto* split = add_command(*group, s, "split-edge", "replace an edge a-b by a path a-s-b", [&s, opts] {
    const GraphPtr g = load_graph(input(s, 0, 1));
    const auto ends = split_tokens(opts->edge);
    if (ends.size() != 2) throw UsageError("--edge needs two tokens a,b");
    const Vertex a = parse_vertex(*g, ends[0]);
    const Vertex b = parse_vertex(*g, ends[1]);
    const EdgeSplit e = split_edge(g, a, b, opts->map_to_first);
    Outcome out = bundle(e.graph, e.map);
    out.doc["split"] = e.graph->name(e.split);
    out.doc["split_maps_to"] = g->name(e.map(e.split));
    if (opts->check) {
      Json triples = Json::array();
      bool all = true;
      for (Vertex c : g->neighbors(b)) {
        if (c == a) continue;
        const bool ok = separates_triple(e.map, a, b, c);
        all = all && ok;
        triples.push_back(Json{{"triple", {g->name(a), g->name(b), g->name(c)}}, {"separated", ok}});
      }
      out.doc["triples"] = std::move(triples);
      if (!all) out.status = kViolation;
    }
    return out;
  });
  split->add_option("--edge", opts->edge, "the edge, as a,b")->required();
  split->add_flag("--paper-literal", opts->map_to_first, "send the new vertex to a instead of b");
  split->add_flag("--check", opts->check, "check that every triple a, b, c is separated");

  auto* indec = add_command(*group, s, "indec", "indecomposability witness over F", [&s, opts] {
    const GraphPtr f = load_graph(input(s, 0, 1));
    const Construction c = indecomposability_witness(f);
    Outcome out = bundle(c.graph, c.map);
    if (opts->check) {
      const TwoPassResult r = check_two_pass(c.map);
      Json two;
      two["holds"] = r.holds;
      two["pairs"] = r.pairs;
      if (r.counterexample) {
        two["counterexample"] = {vertex_set_to_json(*c.graph, r.counterexample->first),
                                 vertex_set_to_json(*c.graph, r.counterexample->second)};
      }
      out.doc["two_pass"] = std::move(two);
      if (!r.holds) out.status = kViolation;
    }
    return out;
  });
  indec->add_flag("--check", opts->check, "check the covering condition exhaustively");

  auto* delta = add_command(*group, s, "delta", "two copies glued at a vertex", [&s, opts] {
    const GraphPtr g = load_graph(input(s, 0, 1));
    const Construction c = delta_double(g, parse_vertex(*g, opts->vertex));
    return bundle(c.graph, c.map);
  });
  delta->add_option("--vertex", opts->vertex, "the gluing vertex")->required();

  auto* extend = add_command(*group, s, "extend", "extend f : W -> U along U inside G", [&s, opts] {
    const Morphism f = load_morphism(input(s, 0, 2));
    const GraphPtr g = load_graph(input(s, 1, 2));
    const Graph& u = f.codomain();
    std::vector<Vertex> embed(u.size());
    for (Vertex v = 0; v < u.size(); ++v) embed[v] = parse_vertex(*g, u.name(v));
    for (const std::string& pair : split_tokens(opts->embed)) {
      const auto eq = pair.find('=');
      if (eq == std::string::npos) throw UsageError("--embed entries look like u=g");
      embed[parse_vertex(u, pair.substr(0, eq))] = parse_vertex(*g, pair.substr(eq + 1));
    }
    const Construction c = extend_confluent(f, g, embed);
    return bundle(c.graph, c.map);
  });
  extend->add_option("--embed", opts->embed, "u=g pairs placing U in G (default: equal tokens)");

  auto* unfold_cmd = add_command(*group, s, "unfold", "unfold B along a chain of connected sets", [&s, opts] {
    const GraphPtr b = load_graph(input(s, 0, 1));
    const UnfoldingResult u = unfold(b, parse_chain(*b, opts->chain));
    Outcome out = bundle(u.graph, u.map);
    const Graph& c = *u.graph;
    out.doc["kernel"] = vertex_set_to_json(c, u.kernel);
    out.doc["layers"] = set_list(c, u.layers);
    out.doc["chain"] = set_list(*b, u.chain);
    Json copies = Json::array();
    for (const UnfoldCopy& k : u.copies) {
      Json copy;
      copy["level"] = k.level;
      copy["step"] = k.step;
      copy["parent"] = k.parent ? Json(c.name(*k.parent)) : Json(nullptr);
      copy["anchor"] = k.anchor ? Json(c.name(*k.anchor)) : Json(nullptr);
      copy["members"] = vertex_set_to_json(c, k.members);
      copies.push_back(std::move(copy));
    }
    out.doc["copies"] = std::move(copies);
    out.doc["tree"] = is_tree(collapse_copies(u));
    Json adj = Json::array();
    for (std::size_t k = 0; k < u.chain.size(); ++k) {
      adj.push_back(is_adjacently_disconnecting(c, unfold_component(u, k)));
    }
    out.doc["adjacently_disconnecting"] = std::move(adj);
    return out;
  });
  unfold_cmd->add_option("--chain", opts->chain, "sets X_0;X_1;...;B as comma lists")->required();

  auto* heruni = add_command(*group, s, "heruni", "two-level witness over a cycle division", [&s, opts] {
    const GraphPtr f = load_graph(input(s, 0, 1));
    const auto div = find_cycle_division(*f);
    if (!div) {
      return Outcome{Json{{"division", nullptr}}, kViolation, to_dot(*f)};
    }
    const Construction c = unicoherence_witness(f, *div);
    Outcome out = bundle(c.graph, c.map);
    out.doc["division"] = division_to_json(*f, *div);
    if (opts->check) {
      if (c.graph->size() > opts->bound) throw BudgetExceeded("witness too large to search", 0);
      const auto lifted = division_over(c.map, *div);
      out.doc["lifted_division"] = lifted ? division_to_json(*c.graph, *lifted) : Json(nullptr);
      if (lifted) out.status = kViolation;
    }
    return out;
  });
  heruni->add_flag("--check", opts->check, "search for a division of the witness over the input one");
  heruni->add_option("--bound", opts->bound, "largest witness searched");

  auto* wrap = add_command(*group, s, "wrap", "m copies of A wrapping its cycle m times", [&s, opts] {
    auto [a, c] = graph_with_cycle(input(s, 0, 1));
    const CycleCover cover = wrap_copies(a, c, opts->copies);
    return Outcome{cover_doc(cover), kOk, to_dot(cover.map)};
  });
  wrap->add_option("--copies", opts->copies, "number of copies m")->check(CLI::PositiveNumber);

  auto* attach = add_command(*group, s, "attach", "new vertex joined to a and c, sent to a", [&s, opts] {
    const GraphPtr a = load_graph(input(s, 0, 1));
    Vertex added = 0;
    const Construction c =
        attach_cycle_vertex(a, parse_vertex(*a, opts->at), parse_vertex(*a, opts->cycle_vertex), &added);
    Outcome out = bundle(c.graph, c.map);
    out.doc["added"] = c.graph->name(added);
    return out;
  });
  attach->add_option("--at", opts->at, "the vertex a")->required();
  attach->add_option("--cycle-vertex", opts->cycle_vertex, "the vertex c")->required();

  add_command(*group, s, "double", "double the declared cycle with winding one", [&s] {
    auto [a, c] = graph_with_cycle(input(s, 0, 1));
    const CycleCover cover = double_cycle(a, c);
    return Outcome{cover_doc(cover), kOk, to_dot(cover.map)};
  });
}

void add_lift_commands(CLI::App& app, Session& s) {
  CLI::App* group = app.add_subcommand("lift", "lift arcs and cycles along confluent maps");
  group->require_subcommand(1);
  auto arc_text = std::make_shared<std::string>();
  auto start = std::make_shared<std::string>();
  auto cycle_text = std::make_shared<std::string>();

  auto* arc = add_command(*group, s, "arc", "lift an arc of the codomain", [&s, arc_text, start] {
    const Morphism f = load_morphism(input(s, 0, 1));
    const VertexSet a = parse_set(f.codomain(), *arc_text);
    const std::vector<Vertex> lifted = lift_arc(f, a, parse_vertex(f.domain(), *start));
    Json doc;
    Json order = Json::array();
    std::map<Vertex, std::string> labels;
    for (Vertex v : lifted) {
      order.push_back(f.domain().name(v));
      labels[v] = f.domain().name(v) + " *";
    }
    doc["arc"] = std::move(order);
    return Outcome{doc, kOk, to_dot(f.domain(), "G", labels)};
  });
  arc->add_option("--arc", *arc_text, "the arc, as tokens")->required();
  arc->add_option("--start", *start, "domain vertex over an end of the arc")->required();

  auto* cycle = add_command(*group, s, "cycle", "lift a cycle of the codomain", [&s, cycle_text] {
    const Morphism f = load_morphism(input(s, 0, 1));
    std::vector<Vertex> order;
    for (const std::string& t : split_tokens(*cycle_text)) order.push_back(parse_vertex(f.codomain(), t));
    const OrientedCycle lifted = lift_cycle(f, OrientedCycle(f.codomain(), std::move(order)));
    Json doc;
    Json tokens = Json::array();
    std::map<Vertex, std::string> labels;
    for (Vertex v : lifted.order()) {
      tokens.push_back(f.domain().name(v));
      labels[v] = f.domain().name(v) + " *";
    }
    doc["cycle"] = std::move(tokens);
    return Outcome{doc, kOk, to_dot(f.domain(), "G", labels)};
  });
  cycle->add_option("--cycle", *cycle_text, "the cycle in travel order")->required();
}

}  // namespace conflux::cli
