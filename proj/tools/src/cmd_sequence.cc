#include "conflux/sequence.h"
#include "common.h"

namespace conflux::cli {

namespace {

struct SequenceOptions {
  std::size_t task_bound = 3;
  std::size_t depth = 4;
  bool unfold = false;
  bool one_per_step = false;
  std::size_t max_vertices = 20'000;
  std::optional<std::size_t> levels;
  std::size_t from = 0;
  std::optional<std::size_t> to;
};

InverseSequence load_sequence(const std::string& path) { return sequence_from_json(load(path)); }

std::string sequence_dot(const InverseSequence& seq) {
  return to_dot(seq.level(seq.size() - 1), "level " + std::to_string(seq.size() - 1));
}

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

void add_sequence_commands(CLI::App& app, Session& s) {
  CLI::App* group = app.add_subcommand("sequence", "finite prefixes of inverse sequences");
  group->require_subcommand(1);
  auto opts = std::make_shared<SequenceOptions>();

  auto* build = add_command(*group, s, "build", "build a prefix meeting small demands", [&s, opts] {
    if (!s.common.inputs.empty()) throw UsageError("build takes no input documents");
    BuildOptions options;
    options.unfold = opts->unfold;
    options.group_by_level = !opts->one_per_step;
    options.search_budget = s.common.budget;
    options.max_vertices = opts->max_vertices;
    try {
      const InverseSequence seq = build_fraisse_prefix(opts->task_bound, opts->depth, options);
      return Outcome{sequence_to_json(seq), kOk, sequence_dot(seq)};
    } catch (const PrefixBudgetExceeded& e) {
      Json doc = sequence_to_json(e.partial_sequence());
      doc["aborted"] = e.what();
      return Outcome{doc, kBudget, sequence_dot(e.partial_sequence())};
    }
  });
  build->add_option("--task-bound", opts->task_bound, "largest demand graphs")->check(CLI::PositiveNumber);
  build->add_option("--depth", opts->depth, "number of levels")->check(CLI::PositiveNumber);
  build->add_flag("--unfold", opts->unfold, "unfold every new level along the thread");
  build->add_flag("--one-per-step", opts->one_per_step, "meet a single demand per level");
  build->add_option("--max-vertices", opts->max_vertices, "largest level allowed")->check(CLI::PositiveNumber);

  auto* verify = add_command(*group, s, "verify", "check demands against a prefix", [&s, opts] {
    const InverseSequence seq = load_sequence(input(s, 0, 1));
    const std::size_t budget = s.common.budget;
    const FraisseReport r = verify_fraisse_prefix(seq, opts->task_bound, budget);
    const std::size_t considered = opts->levels.value_or(seq.size());
    Json doc;
    doc["task_bound"] = r.task_bound;
    Json tasks = Json::array();
    std::size_t open = 0;
    for (const TaskResult& t : r.tasks) {
      Json task;
      task["level"] = t.level;
      task["graph"] = t.graph;
      task["demand"] = map_to_json(t.demand);
      task["satisfied"] = t.satisfied;
      task["at"] = optional_size(t.at);
      task["via"] = t.via;
      task["budget_exceeded"] = t.budget_exceeded;
      if (t.witness) task["witness"] = map_to_json(*t.witness);
      tasks.push_back(std::move(task));
      if (t.level < considered && !t.satisfied) ++open;
    }
    doc["tasks"] = std::move(tasks);
    doc["total"] = r.tasks.size();
    doc["satisfied"] = r.satisfied();
    doc["open_below_level"] = Json{{"levels", considered}, {"open", open}};
    return Outcome{doc, open == 0 ? kOk : kViolation, sequence_dot(seq)};
  });
  verify->add_option("--task-bound", opts->task_bound, "largest demand graphs")->check(CLI::PositiveNumber);
  verify->add_option("--levels", opts->levels, "only demands posed below this level decide the status");

  add_command(*group, s, "sharp", "fibre and winding audit of a tower of cycles", [&s] {
    const InverseSequence seq = load_sequence(input(s, 0, 1));
    const SharpReport r = check_sharp(seq);
    Json doc;
    Json bonds = Json::array();
    bool all = true;
    for (const BondAudit& b : r.bonds) {
      bonds.push_back(Json{{"index", b.index},
                           {"applicable", b.applicable},
                           {"sharp", b.sharp},
                           {"winding", optional_size(b.winding)}});
      all = all && b.applicable && b.sharp;
    }
    doc["bonds"] = std::move(bonds);
    doc["windings"] = r.windings;
    doc["divisors"] = r.divisors;
    return Outcome{doc, all ? kOk : kViolation, sequence_dot(seq)};
  });

  auto* fibers = add_command(*group, s, "fibers", "fibres of a bonding map", [&s, opts] {
    const InverseSequence seq = load_sequence(input(s, 0, 1));
    const std::size_t to = opts->to.value_or(seq.size() - 1);
    const auto fibres = thread_fibers(seq, opts->from, to);
    const Graph& top = seq.level(to);
    Json doc;
    doc["from"] = opts->from;
    doc["to"] = to;
    doc["metric_base"] = 2;
    Json list = Json::array();
    for (const FibreInfo& f : fibres) {
      Json entry;
      entry["vertex"] = seq.level(opts->from).name(f.vertex);
      Json parts = Json::array();
      Json sizes = Json::array();
      for (const VertexSet& c : f.components) {
        parts.push_back(vertex_set_to_json(top, c));
        sizes.push_back(c.size());
      }
      entry["components"] = std::move(parts);
      entry["sizes"] = std::move(sizes);
      entry["diameter"] = f.diameter;
      list.push_back(std::move(entry));
    }
    doc["fibres"] = std::move(list);
    if (seq.thread()) doc["thread_stars_adjacently_disconnecting"] = thread_stars_adjacently_disconnecting(seq);
    return Outcome{doc, kOk, to_dot(compose_bonding(seq, opts->from, to))};
  });
  fibers->add_option("--from", opts->from, "lower level n");
  fibers->add_option("--to", opts->to, "upper level m (default: the last)");

  add_command(*group, s, "solenoid", "is the prefix that of an almost graph-solenoid", [&s] {
    const InverseSequence seq = load_sequence(input(s, 0, 1));
    const SolenoidReport r = is_almost_graph_solenoid_prefix(seq);
    Json doc;
    doc["holds"] = r.holds;
    doc["reason"] = r.reason;
    doc["proxy"] = "at least half of the bonds, rounded up, wind more than once";
    doc["required"] = r.required;
    doc["wide"] = r.wide;
    Json bonds = Json::array();
    for (const SolenoidBond& b : r.bonds) {
      Json bond;
      bond["index"] = b.index;
      bond["almost_wrapping"] = b.almost_wrapping;
      if (b.violation) {
        const Graph& c = seq.level(b.index);
        const Graph& d = seq.level(b.index + 1);
        bond["violation"] = Json{{"x", c.name(b.violation->x)}, {"z", c.name(b.violation->z)},
                                 {"a", d.name(b.violation->a)}, {"c", d.name(b.violation->c)}};
      } else {
        bond["violation"] = nullptr;
      }
      bond["proper_witness"] = b.proper_witness;
      bond["winding"] = optional_size(b.winding);
      bonds.push_back(std::move(bond));
    }
    doc["bonds"] = std::move(bonds);
    Json orientations = Json::array();
    for (std::size_t n = 0; n < r.orientations.size(); ++n) {
      Json order = Json::array();
      for (Vertex v : r.orientations[n].order()) order.push_back(seq.level(n).name(v));
      orientations.push_back(std::move(order));
    }
    doc["orientations"] = std::move(orientations);
    return Outcome{doc, r.holds ? kOk : kViolation, sequence_dot(seq)};
  });
}

void add_export_commands(CLI::App& app, Session& s) {
  CLI::App* group = app.add_subcommand("export", "render documents");
  group->require_subcommand(1);
  add_command(*group, s, "dot", "DOT text of a graph, map or sequence", [&s] {
    const std::string& path = input(s, 0, 1);
    const Json doc = load(path);
    std::string dot;
    if (doc.is_object() && doc.contains("levels")) {
      dot = sequence_dot(sequence_from_json(doc));
    } else if (doc.is_object() && doc.contains("domain")) {
      dot = to_dot(morphism_from_json(doc, std::filesystem::path(path).parent_path()));
    } else {
      dot = to_dot(graph_from_json(doc));
    }
    return Outcome{Json::object(), kOk, dot, true};
  });
}

}  // namespace conflux::cli
