#include "common.h"

namespace conflux::cli {

CLI::App* add_command(CLI::App& group, Session& s, const std::string& name,
                      const std::string& help, Handler make) {
  CLI::App* sub = group.add_subcommand(name, help);
  sub->add_option("-i,--input", s.common.inputs, "input document (repeatable)");
  sub->add_option("-o,--output", s.common.output, "write the report here instead of stdout");
  sub->add_option("--dot", s.common.dot, "also write a DOT rendering to this file");
  sub->add_option("--budget", s.common.budget, "search budget")->check(CLI::PositiveNumber);
  sub->callback([&s, make = std::move(make)] { s.chosen = make; });
  return sub;
}

const std::string& input(const Session& s, std::size_t n, std::size_t count) {
  if (s.common.inputs.size() != count) {
    throw UsageError("expected " + std::to_string(count) + " input document(s), got " +
                     std::to_string(s.common.inputs.size()));
  }
  return s.common.inputs[n];
}

Json load(const std::string& path) { return read_json_file(path); }

GraphPtr load_graph(const std::string& path) { return share(graph_from_json(load(path))); }

Morphism load_morphism(const std::string& path) {
  return morphism_from_json(load(path), std::filesystem::path(path).parent_path());
}

CycleMap load_cycle_map(const std::string& path) {
  return cycle_map_from_json(load(path), std::filesystem::path(path).parent_path());
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  if (!text.empty() && text.front() == '[') {
    const Json doc = parse_json(text);
    if (!doc.is_array()) throw UsageError("expected a JSON array of tokens");
    for (const Json& t : doc) {
      if (!t.is_string()) throw UsageError("tokens must be strings");
      out.push_back(t.get<std::string>());
    }
    return out;
  }
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty() || !out.empty()) out.push_back(current);
  return out;
}

Vertex parse_vertex(const Graph& g, const std::string& token) {
  auto v = g.find(token);
  if (!v) throw UsageError("unknown vertex \"" + token + "\"");
  return *v;
}

VertexSet parse_set(const Graph& g, const std::string& text) {
  VertexSet s(g.size());
  for (const std::string& t : split_tokens(text)) s.insert(parse_vertex(g, t));
  return s;
}

Json classification_to_json(const Classification& c, const Morphism& f) {
  Json doc;
  doc["homomorphism"] = c.homomorphism;
  doc["epimorphism"] = c.epimorphism;
  doc["monotone"] = c.monotone;
  doc["confluent"] = c.confluent;
  if (c.violation) {
    const Graph& h = f.codomain();
    doc["witness"] = Json{{"edge", {h.name(c.violation->edge.first), h.name(c.violation->edge.second)}},
                          {"component", vertex_set_to_json(f.domain(), c.violation->component)}};
  }
  return doc;
}

Json division_to_json(const Graph& g, const CycleDivision& d) {
  return Json{{"h", vertex_set_to_json(g, d.h)},
              {"k", vertex_set_to_json(g, d.k)},
              {"c", vertex_set_to_json(g, d.c)},
              {"d", vertex_set_to_json(g, d.d)}};
}

Json amalgam_to_json(const Amalgam& a) {
  Json doc;
  doc["graph"] = graph_to_json(*a.graph);
  doc["to_first"] = map_to_json(a.to_first);
  doc["to_second"] = map_to_json(a.to_second);
  doc["route"] = to_string(a.route);
  return doc;
}

}  // namespace conflux::cli
