#include "conflux/io.h"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace conflux {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

std::string token_of(const Json& t, const char* where) {
  if (t.is_string()) return t.get<std::string>();
  if (t.is_number_integer()) return std::to_string(t.get<long long>());
  fail(std::string(where) + ": vertex tokens must be strings");
}

const Json& field(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object()) fail(std::string(what) + " must be an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string(what) + " lacks \"" + key + "\"");
  return *it;
}

Vertex vertex_of(const Graph& g, const Json& t, const char* where) {
  const std::string token = token_of(t, where);
  auto v = g.find(token);
  if (!v) fail(std::string(where) + ": unknown vertex \"" + token + "\"");
  return *v;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const ParseError& e) {
    fail(path.string() + ": " + e.what());
  }
}

Graph graph_from_json(const Json& doc) {
  const Json& vertices = field(doc, "vertices", "graph document");
  if (!vertices.is_array()) fail("\"vertices\" must be an array");
  std::vector<std::string> names;
  for (const Json& t : vertices) names.push_back(token_of(t, "vertices"));
  std::vector<std::pair<std::string, std::string>> edges;
  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) fail("\"edges\" must be an array");
    for (const Json& e : *it) {
      if (!e.is_array() || e.size() != 2) fail("every edge must be a two-element array");
      edges.emplace_back(token_of(e[0], "edges"), token_of(e[1], "edges"));
    }
  }
  try {
    return Graph(std::move(names), edges);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    fail(e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json doc;
  doc["vertices"] = g.names();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.first), g.name(e.second)});
  doc["edges"] = std::move(edges);
  return doc;
}

GraphPtr graph_ref_from_json(const Json& doc, const std::filesystem::path& base) {
  if (doc.is_string()) {
    const std::filesystem::path path = base / doc.get<std::string>();
    return share(graph_from_json(read_json_file(path)));
  }
  return share(graph_from_json(doc));
}

std::optional<OrientedCycle> orientation_from_json(const Graph& g, const Json& doc) {
  if (!doc.is_object()) return std::nullopt;
  auto it = doc.find("orientation");
  if (it == doc.end()) return std::nullopt;
  if (!it->is_array()) fail("\"orientation\" must be an array");
  std::vector<Vertex> order;
  for (const Json& t : *it) order.push_back(vertex_of(g, t, "orientation"));
  try {
    return OrientedCycle(g, std::move(order));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    fail(std::string("orientation: ") + e.what());
  }
}

Json cycle_to_json(const Graph& g, const OrientedCycle& c) {
  Json doc = graph_to_json(g);
  Json order = Json::array();
  for (Vertex v : c.order()) order.push_back(g.name(v));
  doc["orientation"] = std::move(order);
  return doc;
}

Morphism map_from_json(const GraphPtr& domain, const GraphPtr& codomain, const Json& pairs) {
  if (!pairs.is_array()) fail("\"map\" must be an array of [from, to] pairs");
  std::vector<std::int64_t> image(domain->size(), -1);
  for (const Json& p : pairs) {
    if (!p.is_array() || p.size() != 2) fail("every map entry must be a [from, to] pair");
    const Vertex from = vertex_of(*domain, p[0], "map source");
    const Vertex to = vertex_of(*codomain, p[1], "map target");
    if (image[from] >= 0) fail("map assigns \"" + domain->name(from) + "\" twice");
    image[from] = to;
  }
  std::vector<Vertex> map;
  for (Vertex v = 0; v < image.size(); ++v) {
    if (image[v] < 0) fail("map leaves \"" + domain->name(v) + "\" unassigned");
    map.push_back(static_cast<Vertex>(image[v]));
  }
  return Morphism(domain, codomain, std::move(map));
}

Json map_to_json(const Morphism& f) {
  Json pairs = Json::array();
  for (Vertex v = 0; v < f.domain().size(); ++v) {
    pairs.push_back({f.domain().name(v), f.codomain().name(f(v))});
  }
  return pairs;
}

Morphism morphism_from_json(const Json& doc, const std::filesystem::path& base) {
  GraphPtr domain = graph_ref_from_json(field(doc, "domain", "morphism document"), base);
  GraphPtr codomain = graph_ref_from_json(field(doc, "codomain", "morphism document"), base);
  return map_from_json(domain, codomain, field(doc, "map", "morphism document"));
}

Json morphism_to_json(const Morphism& f) {
  Json doc;
  doc["domain"] = graph_to_json(f.domain());
  doc["codomain"] = graph_to_json(f.codomain());
  doc["map"] = map_to_json(f);
  return doc;
}

CycleMap cycle_map_from_json(const Json& doc, const std::filesystem::path& base) {
  auto side = [&](const char* key) {
    const Json& ref = field(doc, key, "cycle map document");
    const Json side_doc = ref.is_string() ? read_json_file(base / ref.get<std::string>()) : ref;
    GraphPtr g = share(graph_from_json(side_doc));
    auto c = orientation_from_json(*g, side_doc);
    if (!c) c = as_cycle(*g);
    if (!c || c->size() != g->size()) fail(std::string(key) + " is not a cycle");
    return std::pair{g, *c};
  };
  auto [dg, dc] = side("domain");
  auto [cg, cc] = side("codomain");
  return CycleMap{map_from_json(dg, cg, field(doc, "map", "cycle map document")), dc, cc};
}

Json cycle_map_to_json(const CycleMap& w) {
  Json doc;
  doc["domain"] = cycle_to_json(w.map.domain(), w.domain);
  doc["codomain"] = cycle_to_json(w.map.codomain(), w.codomain);
  doc["map"] = map_to_json(w.map);
  return doc;
}

VertexSet vertex_set_from_json(const Graph& g, const Json& tokens) {
  if (!tokens.is_array()) fail("a vertex set must be an array of tokens");
  VertexSet s(g.size());
  for (const Json& t : tokens) s.insert(vertex_of(g, t, "vertex set"));
  return s;
}

Json vertex_set_to_json(const Graph& g, const VertexSet& s) { return g.tokens(s); }

InverseSequence sequence_from_json(const Json& doc) {
  const Json& levels_doc = field(doc, "levels", "sequence document");
  if (!levels_doc.is_array() || levels_doc.empty()) fail("\"levels\" must be a nonempty array");
  std::vector<GraphPtr> levels;
  for (const Json& l : levels_doc) levels.push_back(share(graph_from_json(l)));

  std::vector<Morphism> bonds;
  if (auto it = doc.find("bonds"); it != doc.end()) {
    if (!it->is_array()) fail("\"bonds\" must be an array");
    if (it->size() + 1 != levels.size()) fail("a sequence needs one bond less than it has levels");
    for (std::size_t n = 0; n < it->size(); ++n) {
      const Json& b = (*it)[n];
      const Json& pairs = b.is_array() ? b : field(b, "map", "bond");
      bonds.push_back(map_from_json(levels[n + 1], levels[n], pairs));
    }
  } else if (levels.size() > 1) {
    fail("sequence document lacks \"bonds\"");
  }

  InverseSequence seq;
  try {
    seq = InverseSequence(levels, bonds);
    if (auto it = doc.find("thread"); it != doc.end() && !it->is_null()) {
      if (!it->is_array() || it->size() != levels.size()) fail("\"thread\" needs one token per level");
      std::vector<Vertex> points;
      for (std::size_t n = 0; n < levels.size(); ++n) {
        points.push_back(vertex_of(*levels[n], (*it)[n], "thread"));
      }
      seq.set_thread(std::move(points));
    }
    if (auto it = doc.find("orientations"); it != doc.end() && !it->is_null()) {
      if (!it->is_array() || it->size() != levels.size()) {
        fail("\"orientations\" needs one cycle per level");
      }
      std::vector<OrientedCycle> cycles;
      for (std::size_t n = 0; n < levels.size(); ++n) {
        Json wrapper;
        wrapper["orientation"] = (*it)[n];
        cycles.push_back(*orientation_from_json(*levels[n], wrapper));
      }
      seq.set_orientations(std::move(cycles));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    fail(e.what());
  }

  if (auto it = doc.find("ledger"); it != doc.end()) {
    if (!it->is_array()) fail("\"ledger\" must be an array");
    for (const Json& e : *it) {
      LedgerEntry entry;
      try {
        entry.level = field(e, "level", "ledger entry").get<std::size_t>();
        entry.demand_level = field(e, "demand_level", "ledger entry").get<std::size_t>();
        entry.task = field(e, "task", "ledger entry").get<std::string>();
        entry.how = field(e, "how", "ledger entry").get<std::string>();
      } catch (const nlohmann::json::exception& ex) {
        fail(std::string("ledger entry: ") + ex.what());
      }
      if (entry.level >= levels.size() || entry.demand_level >= levels.size()) {
        fail("ledger entry names a missing level");
      }
      if (auto g = e.find("graph"); g != e.end()) {
        GraphPtr a = share(graph_from_json(*g));
        if (auto d = e.find("demand"); d != e.end()) {
          entry.demand = map_from_json(a, levels[entry.demand_level], *d);
        }
        if (auto w = e.find("witness"); w != e.end()) {
          entry.witness = map_from_json(levels[entry.level], a, *w);
        }
      }
      seq.add_ledger_entry(std::move(entry));
    }
  }
  return seq;
}

Json sequence_to_json(const InverseSequence& seq) {
  Json doc;
  Json levels = Json::array();
  for (std::size_t n = 0; n < seq.size(); ++n) levels.push_back(graph_to_json(seq.level(n)));
  doc["levels"] = std::move(levels);
  Json bonds = Json::array();
  for (const Morphism& b : seq.bonds()) bonds.push_back(Json{{"map", map_to_json(b)}});
  doc["bonds"] = std::move(bonds);
  if (seq.thread()) {
    Json thread = Json::array();
    for (std::size_t n = 0; n < seq.size(); ++n) thread.push_back(seq.level(n).name((*seq.thread())[n]));
    doc["thread"] = std::move(thread);
  }
  if (!seq.orientations().empty()) {
    Json cycles = Json::array();
    for (std::size_t n = 0; n < seq.size(); ++n) {
      Json order = Json::array();
      for (Vertex v : seq.orientations()[n].order()) order.push_back(seq.level(n).name(v));
      cycles.push_back(std::move(order));
    }
    doc["orientations"] = std::move(cycles);
  }
  Json ledger = Json::array();
  for (const LedgerEntry& e : seq.ledger()) {
    Json entry;
    entry["level"] = e.level;
    entry["demand_level"] = e.demand_level;
    entry["task"] = e.task;
    entry["how"] = e.how;
    const Morphism* any = e.demand ? &*e.demand : nullptr;
    if (any) {
      entry["graph"] = graph_to_json(any->domain());
      entry["demand"] = map_to_json(*any);
    } else if (e.witness) {
      entry["graph"] = graph_to_json(e.witness->codomain());
    }
    if (e.witness) entry["witness"] = map_to_json(*e.witness);
    ledger.push_back(std::move(entry));
  }
  doc["ledger"] = std::move(ledger);
  return doc;
}

std::string to_dot(const Graph& g, const std::string& name,
                   const std::map<Vertex, std::string>& labels) {
  std::string out = "graph " + quoted(name) + " {\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out += "  " + quoted(g.name(v));
    if (auto it = labels.find(v); it != labels.end()) out += " [label=" + quoted(it->second) + "]";
    out += ";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  " + quoted(g.name(e.first)) + " -- " + quoted(g.name(e.second)) + ";\n";
  }
  return out + "}\n";
}

std::string to_dot(const Morphism& f, const std::string& name) {
  std::map<Vertex, std::string> labels;
  for (Vertex v = 0; v < f.domain().size(); ++v) {
    labels[v] = f.domain().name(v) + " -> " + f.codomain().name(f(v));
  }
  return to_dot(f.domain(), name, labels);
}

}  // namespace conflux
