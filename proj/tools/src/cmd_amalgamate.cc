#include "conflux/amalgamation.h"
#include "common.h"

namespace conflux::cli {

namespace {

struct VerifyOptions {
  std::size_t max_vertices = 3;
  std::size_t sample = 0;
  std::optional<std::uint64_t> seed;
};

Outcome amalgam_outcome(const Amalgam& a) { return Outcome{amalgam_to_json(a), kOk, to_dot(*a.graph)}; }

}  // namespace

void add_amalgamate_commands(CLI::App& app, Session& s) {
  CLI::App* group = app.add_subcommand("amalgamate", "amalgamate confluent epimorphisms");
  group->require_subcommand(1);

  add_command(*group, s, "standard", "fibre product of f and g", [&s] {
    const Morphism f = load_morphism(input(s, 0, 2));
    const Morphism g = load_morphism(input(s, 1, 2));
    return amalgam_outcome(standard_amalgam(f, g));
  });
  add_command(*group, s, "connected", "connected amalgam of f and g", [&s] {
    const Morphism f = load_morphism(input(s, 0, 2));
    const Morphism g = load_morphism(input(s, 1, 2));
    const Amalgam a = connected_amalgam(f, g, s.common.budget);
    Outcome out = amalgam_outcome(a);
    out.doc["valid"] = is_valid_amalgam(f, g, a);
    return out;
  });
  add_command(*group, s, "refine", "common refinement of two graphs", [&s] {
    const GraphPtr b = load_graph(input(s, 0, 2));
    const GraphPtr c = load_graph(input(s, 1, 2));
    return amalgam_outcome(common_refinement(b, c));
  });

  auto opts = std::make_shared<VerifyOptions>();
  auto* verify = add_command(*group, s, "verify", "check amalgamation over small graphs", [&s, opts] {
    if (!s.common.inputs.empty()) throw UsageError("verify takes no input documents");
    if (opts->sample > 0 && !opts->seed) throw UsageError("sampling needs --seed");
    const AmalgamationReport r = verify_amalgamation(opts->max_vertices, opts->sample, opts->seed.value_or(0));
    Json doc;
    doc["max_vertices"] = r.max_vertices;
    doc["sample"] = r.sample;
    doc["seed"] = r.seed;
    doc["instances"] = r.instances;
    doc["checked"] = r.checked;
    doc["passed"] = r.passed;
    doc["via_component"] = r.via_component;
    doc["via_search"] = r.via_search;
    Json bad = Json::array();
    for (const auto& c : r.counterexamples) {
      bad.push_back(Json{{"first", c.first}, {"second", c.second}, {"reason", c.reason}});
    }
    doc["counterexamples"] = std::move(bad);
    return Outcome{doc, r.counterexamples.empty() ? kOk : kViolation, to_dot(Graph(), "verify")};
  });
  verify->add_option("--max-vertices", opts->max_vertices, "largest graphs used")->check(CLI::PositiveNumber);
  verify->add_option("--sample", opts->sample, "number of sampled pairs; 0 checks all");
  verify->add_option("--seed", opts->seed, "seed for sampling");
}

}  // namespace conflux::cli
