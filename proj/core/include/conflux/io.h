// JSON documents for graphs, maps, cycles and sequences, and DOT export.
//
//   graph     {"vertices": [tok, ...], "edges": [[tok, tok], ...]}
//   cycle     a graph document with "orientation": [tok, ...], a chordless
//             cycle of the graph listed in travel order
//   morphism  {"domain": graph|path, "codomain": graph|path, "map": [[from, to], ...]}
//   sequence  {"levels": [graph, ...], "bonds": [{"map": ...}, ...],
//              "thread": [tok, ...], "orientations": [[tok, ...], ...], "ledger": [...]}
//
// A string in place of a graph is a path to a graph document, relative to the
// directory of the document that names it. Readers throw ParseError.
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "conflux/cycles.h"
#include "conflux/graph.h"
#include "conflux/morphism.h"
#include "conflux/sequence.h"

namespace conflux {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);

Graph graph_from_json(const Json& doc);
Json graph_to_json(const Graph& g);

// Inline graph document or a path to one.
GraphPtr graph_ref_from_json(const Json& doc, const std::filesystem::path& base = {});

// The orientation of a cycle document, when it has one.
std::optional<OrientedCycle> orientation_from_json(const Graph& g, const Json& doc);
Json cycle_to_json(const Graph& g, const OrientedCycle& c);

// Pairs [from, to] naming every domain vertex exactly once.
Morphism map_from_json(const GraphPtr& domain, const GraphPtr& codomain, const Json& pairs);
Json map_to_json(const Morphism& f);

Morphism morphism_from_json(const Json& doc, const std::filesystem::path& base = {});
Json morphism_to_json(const Morphism& f);

// A morphism document whose domain and codomain carry orientations.
CycleMap cycle_map_from_json(const Json& doc, const std::filesystem::path& base = {});
Json cycle_map_to_json(const CycleMap& w);

VertexSet vertex_set_from_json(const Graph& g, const Json& tokens);
Json vertex_set_to_json(const Graph& g, const VertexSet& s);

InverseSequence sequence_from_json(const Json& doc);
Json sequence_to_json(const InverseSequence& seq);

// Undirected DOT text; loops are left out. `labels` adds a label per vertex.
std::string to_dot(const Graph& g, const std::string& name = "G",
                   const std::map<Vertex, std::string>& labels = {});
// The domain of f with each vertex labelled by its image.
std::string to_dot(const Morphism& f, const std::string& name = "G");

}  // namespace conflux
