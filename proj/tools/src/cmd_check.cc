#include "common.h"

namespace conflux::cli {

namespace {

struct CheckOptions {
  std::size_t bound = kDefaultDivisionBound;
  std::string set;
};

Outcome classify_command(const Session& s, bool Classification::*property) {
  const Morphism f = load_morphism(input(s, 0, 1));
  const Classification c = classify(f);
  return Outcome{classification_to_json(c, f), c.*property ? kOk : kViolation, to_dot(f)};
}

}  // namespace

void add_check_commands(CLI::App& app, Session& s) {
  CLI::App* group = app.add_subcommand("check", "decide properties of maps and graphs");
  group->require_subcommand(1);
  auto opts = std::make_shared<CheckOptions>();

  add_command(*group, s, "hom", "is the map a homomorphism",
              [&s] { return classify_command(s, &Classification::homomorphism); });
  add_command(*group, s, "epi", "is the map an epimorphism",
              [&s] { return classify_command(s, &Classification::epimorphism); });
  add_command(*group, s, "monotone", "is the map a monotone epimorphism",
              [&s] { return classify_command(s, &Classification::monotone); });
  add_command(*group, s, "confluent", "is the map a confluent epimorphism",
              [&s] { return classify_command(s, &Classification::confluent); });

  auto* division = add_command(*group, s, "cycle-division", "search for a cycle division", [&s, opts] {
    const GraphPtr g = load_graph(input(s, 0, 1));
    const auto d = find_cycle_division(*g, opts->bound);
    Json doc;
    doc["division"] = d ? division_to_json(*g, *d) : Json(nullptr);
    return Outcome{doc, d ? kOk : kViolation, to_dot(*g)};
  });
  division->add_option("--bound", opts->bound, "largest graph searched")->check(CLI::PositiveNumber);

  auto* heruni = add_command(*group, s, "heruni", "is the graph hereditarily unicoherent", [&s, opts] {
    const GraphPtr g = load_graph(input(s, 0, 1));
    const auto d = find_cycle_division(*g, opts->bound);
    Json doc;
    doc["hereditarily_unicoherent"] = !d;
    doc["division"] = d ? division_to_json(*g, *d) : Json(nullptr);
    return Outcome{doc, d ? kViolation : kOk, to_dot(*g)};
  });
  heruni->add_option("--bound", opts->bound, "largest graph searched")->check(CLI::PositiveNumber);

  auto* adj = add_command(*group, s, "adj-disc", "is a connected set adjacently disconnecting", [&s, opts] {
    const GraphPtr g = load_graph(input(s, 0, 1));
    const VertexSet t = parse_set(*g, opts->set);
    const bool holds = is_adjacently_disconnecting(*g, t);
    Json doc;
    doc["set"] = vertex_set_to_json(*g, t);
    doc["adjacently_disconnecting"] = holds;
    std::map<Vertex, std::string> labels;
    t.for_each([&](Vertex v) { labels[v] = g->name(v) + " *"; });
    return Outcome{doc, holds ? kOk : kViolation, to_dot(*g, "G", labels)};
  });
  adj->add_option("--set", opts->set, "the set T, as tokens")->required();
}

}  // namespace conflux::cli
