#include "conflux/cycles.h"
#include "common.h"

namespace conflux::cli {

namespace {

Json quadruple_to_json(const CycleMap& w, const SwapQuadruple& q) {
  const Graph& c = w.map.codomain();
  const Graph& d = w.map.domain();
  return Json{{"x", c.name(q.x)}, {"z", c.name(q.z)}, {"a", d.name(q.a)}, {"c", d.name(q.c)}};
}

std::optional<Morphism> proper_witness(const CycleMap& w) { return find_confluent_witness(w, true); }

}  // namespace

void add_cycles_commands(CLI::App& app, Session& s) {
  CLI::App* group = app.add_subcommand("cycles", "maps between cycles");
  group->require_subcommand(1);
  auto proper = std::make_shared<bool>(false);

  add_command(*group, s, "winding", "winding number of a confluent map between cycles", [&s] {
    const Morphism f = load_morphism(input(s, 0, 1));
    Json doc;
    const bool confluent = classify(f).confluent;
    doc["confluent"] = confluent;
    if (!confluent) return Outcome{doc, kViolation, to_dot(f)};
    doc["winding"] = winding_number(f);
    return Outcome{doc, kOk, to_dot(f)};
  });

  add_command(*group, s, "almost", "is the map almost wrapping", [&s] {
    const CycleMap w = load_cycle_map(input(s, 0, 1));
    const AlmostWrappingCheck c = is_almost_wrapping(w);
    Json doc;
    doc["almost_wrapping"] = c.almost_wrapping;
    doc["violation"] = c.violation ? quadruple_to_json(w, *c.violation) : Json(nullptr);
    doc["backward_zigzag"] = has_backward_zigzag(w);
    return Outcome{doc, c.almost_wrapping ? kOk : kViolation, to_dot(w.map)};
  });

  auto* witness = add_command(*group, s, "witness", "canonical confluent witness", [&s, proper] {
    const CycleMap w = load_cycle_map(input(s, 0, 1));
    const auto f = find_confluent_witness(w, *proper);
    Json doc;
    doc["proper"] = *proper;
    doc["witness"] = f ? map_to_json(*f) : Json(nullptr);
    if (f) doc["winding"] = winding_number(*f);
    return Outcome{doc, f ? kOk : kViolation, f ? to_dot(*f) : to_dot(w.map)};
  });
  witness->add_flag("--proper", *proper, "require fibre components of two or more vertices");

  add_command(*group, s, "compose", "proper witness for outer after inner", [&s] {
    const CycleMap outer = load_cycle_map(input(s, 0, 2));
    const CycleMap inner = load_cycle_map(input(s, 1, 2));
    const auto f_outer = proper_witness(outer);
    const auto f_inner = proper_witness(inner);
    if (!f_outer || !f_inner) {
      Json doc;
      doc["outer_witness"] = f_outer.has_value();
      doc["inner_witness"] = f_inner.has_value();
      return Outcome{doc, kViolation, to_dot(inner.map)};
    }
    const WitnessPair pair = compose_witness({outer, *f_outer}, {inner, *f_inner});
    Json doc;
    doc["map"] = cycle_map_to_json(pair.w);
    doc["witness"] = map_to_json(pair.f);
    doc["proper"] = is_witness(pair.w, pair.f, true);
    doc["winding"] = winding_number(pair.f);
    return Outcome{doc, doc["proper"].get<bool>() ? kOk : kViolation, to_dot(pair.f)};
  });

  add_command(*group, s, "amalgam", "amalgamate two wrapping maps into a cycle", [&s] {
    const CycleMap f = load_cycle_map(input(s, 0, 2));
    const CycleMap g = load_cycle_map(input(s, 1, 2));
    const CycleAmalgam a = cycle_amalgam(f, g);
    Json doc = amalgam_to_json(a.amalgam);
    Json order = Json::array();
    for (Vertex v : a.cycle.order()) order.push_back(a.amalgam.graph->name(v));
    doc["cycle"] = std::move(order);
    doc["fibre"] = a.fibre;
    doc["winding_first"] = a.winding_first;
    doc["winding_second"] = a.winding_second;
    doc["valid"] = is_valid_amalgam(f.map, g.map, a.amalgam);
    return Outcome{doc, kOk, to_dot(*a.amalgam.graph)};
  });
}

}  // namespace conflux::cli
