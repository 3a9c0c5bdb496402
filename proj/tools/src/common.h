#pragma once

#include <CLI11.hpp>

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "conflux/io.h"

namespace conflux::cli {

enum Status : int { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

// What a subcommand produces: a report, an exit status and DOT text.
struct Outcome {
  Json doc;
  int status = kOk;
  std::string dot;
  bool raw = false;  // print the DOT text instead of the report
};

struct Common {
  std::vector<std::string> inputs;
  std::string output;
  std::string dot;
  std::size_t budget = kDefaultSearchBudget;
};

using Handler = std::function<Outcome()>;

// Shared state of one invocation: the options every subcommand takes and
// the handler of the subcommand that was selected.
struct Session {
  Common common;
  Handler chosen;
};

class UsageError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Adds -i, -o, --dot and --budget to `sub` and installs `make` as its handler.
CLI::App* add_command(CLI::App& group, Session& s, const std::string& name,
                      const std::string& help, Handler make);

// The n-th input file; throws UsageError unless exactly `count` were given.
const std::string& input(const Session& s, std::size_t n, std::size_t count);

Json load(const std::string& path);
GraphPtr load_graph(const std::string& path);
Morphism load_morphism(const std::string& path);
CycleMap load_cycle_map(const std::string& path);

// Comma separated tokens, or a JSON array when the text starts with '['.
std::vector<std::string> split_tokens(const std::string& text);
VertexSet parse_set(const Graph& g, const std::string& text);
Vertex parse_vertex(const Graph& g, const std::string& token);

Json classification_to_json(const Classification& c, const Morphism& f);
Json division_to_json(const Graph& g, const CycleDivision& d);
Json amalgam_to_json(const Amalgam& a);

void add_check_commands(CLI::App& app, Session& s);
void add_amalgamate_commands(CLI::App& app, Session& s);
void add_construct_commands(CLI::App& app, Session& s);
void add_lift_commands(CLI::App& app, Session& s);
void add_cycles_commands(CLI::App& app, Session& s);
void add_sequence_commands(CLI::App& app, Session& s);
void add_export_commands(CLI::App& app, Session& s);

}  // namespace conflux::cli
