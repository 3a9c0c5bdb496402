#include "conflux/sequence.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "conflux/amalgamation.h"
#include "conflux/catalog.h"
#include "conflux/constructions.h"

namespace conflux {

namespace {

bool same_graph(const GraphPtr& a, const GraphPtr& b) { return a == b || *a == *b; }

}  // namespace

InverseSequence::InverseSequence(std::vector<GraphPtr> levels, std::vector<Morphism> bonds)
    : levels_(std::move(levels)), bonds_(std::move(bonds)) {
  const std::size_t expected = levels_.empty() ? 0 : levels_.size() - 1;
  if (bonds_.size() != expected) {
    throw InvalidArgument("a sequence of " + std::to_string(levels_.size()) + " levels needs " +
                          std::to_string(expected) + " bonds");
  }
  for (std::size_t n = 0; n < bonds_.size(); ++n) {
    const Morphism& b = bonds_[n];
    if (!same_graph(b.domain_ptr(), levels_[n + 1]) || !same_graph(b.codomain_ptr(), levels_[n])) {
      throw InvalidArgument("bond " + std::to_string(n) + " does not join levels " +
                            std::to_string(n + 1) + " and " + std::to_string(n));
    }
    if (!is_epimorphism(b)) {
      throw InvalidArgument("bond " + std::to_string(n) + " is not an epimorphism");
    }
  }
}

void InverseSequence::set_thread(std::vector<Vertex> points) {
  if (points.size() != levels_.size()) throw InvalidArgument("thread needs one vertex per level");
  for (std::size_t n = 0; n < points.size(); ++n) {
    if (points[n] >= levels_[n]->size()) {
      throw InvalidArgument("thread vertex out of range at level " + std::to_string(n));
    }
    if (n > 0 && bonds_[n - 1](points[n]) != points[n - 1]) {
      throw InvalidArgument("thread is not coherent at level " + std::to_string(n));
    }
  }
  thread_ = std::move(points);
}

void InverseSequence::set_orientations(std::vector<OrientedCycle> orientations) {
  if (orientations.size() != levels_.size()) {
    throw InvalidArgument("orientations need one cycle per level");
  }
  for (std::size_t n = 0; n < orientations.size(); ++n) {
    const std::size_t size = levels_[n]->size();
    if (orientations[n].size() != size || orientations[n].universe() != size ||
        levels_[n]->edge_count() != size) {
      throw InvalidArgument("level " + std::to_string(n) + " is not the oriented cycle given");
    }
  }
  orientations_ = std::move(orientations);
}

Morphism compose_bonding(const InverseSequence& seq, std::size_t n, std::size_t m) {
  if (n > m || m >= seq.size()) {
    throw InvalidArgument("bonding indices " + std::to_string(n) + ", " + std::to_string(m) +
                          " out of range");
  }
  std::vector<Vertex> map(seq.level(m).size());
  std::iota(map.begin(), map.end(), Vertex{0});
  for (std::size_t k = m; k > n; --k) {
    const Morphism& b = seq.bond(k - 1);
    for (Vertex& v : map) v = b(v);
  }
  return Morphism(seq.level_ptr(m), seq.level_ptr(n), std::move(map));
}

// ---------------------------------------------------------------------------
// Demands and factor search

namespace {

struct DemandCatalog {
  std::vector<GraphPtr> graphs;
  std::vector<std::string> codes;
  std::vector<std::vector<std::vector<Vertex>>> autos;

  explicit DemandCatalog(std::size_t bound) {
    for (Graph& g : connected_graphs_up_to(bound)) {
      codes.push_back(canonical_code(g));
      autos.push_back(automorphisms(g));
      graphs.push_back(share(std::move(g)));
    }
  }
};

struct Demand {
  std::size_t level = 0;
  std::size_t graph = 0;
  Morphism f;
  std::string id;
};

std::string task_id(std::size_t level, const std::string& code, const Morphism& f) {
  std::string id = std::to_string(level) + ":" + code + ":";
  for (Vertex v = 0; v < f.domain().size(); ++v) {
    if (v > 0) id += ",";
    id += f.codomain().name(f(v));
  }
  return id;
}

std::vector<Demand> demands_at(const DemandCatalog& cat, const GraphPtr& target, std::size_t level) {
  std::vector<Demand> out;
  for (std::size_t a = 0; a < cat.graphs.size(); ++a) {
    if (cat.graphs[a]->size() < target->size()) continue;
    for (Morphism& f : enumerate_confluent_epis(cat.graphs[a], target)) {
      std::string id = task_id(level, cat.codes[a], f);
      out.push_back(Demand{level, a, std::move(f), std::move(id)});
    }
  }
  return out;
}

// f after sigma, least over the automorphisms sigma of the domain, and the
// automorphism attaining it.
std::pair<std::vector<Vertex>, std::size_t> orbit_key(const Morphism& f,
                                                      const std::vector<std::vector<Vertex>>& autos) {
  std::vector<Vertex> best;
  std::size_t which = 0;
  for (std::size_t s = 0; s < autos.size(); ++s) {
    std::vector<Vertex> key(f.domain().size());
    for (Vertex v = 0; v < key.size(); ++v) key[v] = f(autos[s][v]);
    if (s == 0 || key < best) {
      best = std::move(key);
      which = s;
    }
  }
  return {best, which};
}

bool commutes(const Morphism& f, const Morphism& g, const Morphism& alpha) {
  if (!same_graph(g.codomain_ptr(), f.domain_ptr()) || !same_graph(g.domain_ptr(), alpha.domain_ptr())) {
    return false;
  }
  for (Vertex x = 0; x < alpha.domain().size(); ++x) {
    if (f(g(x)) != alpha(x)) return false;
  }
  return true;
}

bool is_factor(const Morphism& f, const Morphism& g, const Morphism& alpha) {
  return commutes(f, g, alpha) && classify(g).confluent;
}

// A confluent epimorphism g with f g = alpha, searched with g(x) restricted
// to the f-fibre over alpha(x).
std::optional<Morphism> find_factor(const Morphism& f, const Morphism& alpha, std::size_t budget,
                                    bool& exceeded) {
  const Graph& source = alpha.domain();
  std::vector<VertexSet> allowed;
  allowed.reserve(source.size());
  for (Vertex x = 0; x < source.size(); ++x) allowed.push_back(f.preimage(alpha(x)));
  std::optional<Morphism> found;
  try {
    for_each_homomorphism(
        source, f.domain(), budget,
        [&](const std::vector<Vertex>& map) {
          Morphism g(alpha.domain_ptr(), f.domain_ptr(), map);
          if (!classify(g).confluent) return true;
          found = std::move(g);
          return false;
        },
        &allowed);
  } catch (const BudgetExceeded&) {
    exceeded = true;
  }
  return found;
}

}  // namespace

// ---------------------------------------------------------------------------
// Verification

std::size_t FraisseReport::satisfied() const {
  return static_cast<std::size_t>(
      std::count_if(tasks.begin(), tasks.end(), [](const TaskResult& t) { return t.satisfied; }));
}

FraisseReport verify_fraisse_prefix(const InverseSequence& seq, std::size_t task_bound,
                                    std::size_t budget) {
  FraisseReport report;
  report.task_bound = task_bound;
  const DemandCatalog cat(task_bound);
  std::multimap<std::string, const LedgerEntry*> by_task;
  for (const LedgerEntry& e : seq.ledger()) by_task.emplace(e.task, &e);

  for (std::size_t n = 0; n < seq.size(); ++n) {
    for (Demand& d : demands_at(cat, seq.level_ptr(n), n)) {
      TaskResult result;
      result.level = n;
      result.graph = cat.codes[d.graph];
      result.demand = d.f;

      auto [lo, hi] = by_task.equal_range(d.id);
      for (auto it = lo; it != hi && !result.satisfied; ++it) {
        const LedgerEntry& e = *it->second;
        if (!e.witness || e.level < n || e.level >= seq.size()) continue;
        if (is_factor(d.f, *e.witness, compose_bonding(seq, n, e.level))) {
          result.satisfied = true;
          result.at = e.level;
          result.via = "ledger";
          result.witness = e.witness;
        }
      }
      for (std::size_t m = n; m < seq.size() && !result.satisfied; ++m) {
        bool exceeded = false;
        const Morphism alpha = compose_bonding(seq, n, m);
        if (auto g = find_factor(d.f, alpha, budget, exceeded)) {
          result.satisfied = true;
          result.at = m;
          result.via = "search";
          result.witness = std::move(g);
        }
        result.budget_exceeded = result.budget_exceeded || exceeded;
      }
      report.tasks.push_back(std::move(result));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Building

namespace {

class PrefixBuilder {
 public:
  PrefixBuilder(std::size_t task_bound, const BuildOptions& options)
      : cat_(task_bound), options_(options) {}

  InverseSequence run(std::size_t depth) {
    if (depth == 0) throw InvalidArgument("depth must be positive");
    auto edge = share(connected_graphs(2).front());
    if (options_.unfold) {
      std::vector<VertexSet> chain{edge->set_of({0}), edge->all()};
      UnfoldingResult u = unfold(edge, chain);
      push_level(u.graph, std::nullopt, *u.layers[0].first());
    } else {
      push_level(edge, std::nullopt, 0);
    }
    while (levels_.size() < depth) {
      std::optional<Demand> target = next_open_demand();
      if (options_.unfold) {
        unfold_step(target);
      } else if (target) {
        amalgam_step(*target);
      } else {
        split_step();
      }
    }
    return snapshot();
  }

 private:
  struct Satisfied {
    std::size_t level;
    std::size_t automorphism;
    Morphism witness;
  };
  using OrbitKey = std::tuple<std::size_t, std::size_t, std::vector<Vertex>>;

  InverseSequence snapshot() const {
    InverseSequence seq(levels_, bonds_);
    seq.set_thread(thread_);
    for (const LedgerEntry& e : ledger_) seq.add_ledger_entry(e);
    return seq;
  }

  [[noreturn]] void abort(const std::string& why) const {
    throw PrefixBudgetExceeded(why, snapshot());
  }

  Morphism bonding(std::size_t n, std::size_t m) const {
    std::vector<Vertex> map(levels_[m]->size());
    std::iota(map.begin(), map.end(), Vertex{0});
    for (std::size_t k = m; k > n; --k) {
      for (Vertex& v : map) v = bonds_[k - 1](v);
    }
    return Morphism(levels_[m], levels_[n], std::move(map));
  }

  void push_level(const GraphPtr& g, std::optional<Morphism> bond, Vertex point) {
    if (g->size() > options_.max_vertices) {
      abort("level " + std::to_string(levels_.size()) + " would have " +
            std::to_string(g->size()) + " vertices");
    }
    levels_.push_back(g);
    if (bond) bonds_.push_back(std::move(*bond));
    thread_.push_back(point);
    for (Demand& d : demands_at(cat_, g, levels_.size() - 1)) queue_.push_back(std::move(d));
  }

  void record(const Demand& d, std::size_t level, const std::string& how, Morphism witness) {
    auto [key, sigma] = orbit_key(d.f, cat_.autos[d.graph]);
    satisfied_.emplace(OrbitKey{d.level, d.graph, std::move(key)}, Satisfied{level, sigma, witness});
    ledger_.push_back(LedgerEntry{level, d.level, d.id, how, d.f, std::move(witness)});
  }

  // Meets the demand through a satisfied demand in the same orbit under
  // the automorphisms of A.
  bool by_symmetry(const Demand& d) {
    const auto& autos = cat_.autos[d.graph];
    auto [key, mine] = orbit_key(d.f, autos);
    auto it = satisfied_.find(OrbitKey{d.level, d.graph, key});
    if (it == satisfied_.end()) return false;
    const Satisfied& s = it->second;
    // f = f' tau with tau = other mine^-1, so g = mine other^-1 g'.
    const auto& other = autos[s.automorphism];
    std::vector<Vertex> other_inverse(other.size());
    for (Vertex v = 0; v < other.size(); ++v) other_inverse[other[v]] = v;
    std::vector<Vertex> map(s.witness.domain().size());
    for (Vertex x = 0; x < map.size(); ++x) map[x] = autos[mine][other_inverse[s.witness(x)]];
    Morphism g(s.witness.domain_ptr(), d.f.domain_ptr(), std::move(map));
    if (!is_factor(d.f, g, bonding(d.level, s.level))) return false;
    ledger_.push_back(LedgerEntry{s.level, d.level, d.id, "symmetry", d.f, std::move(g)});
    return true;
  }

  bool by_search(const Demand& d) {
    const std::size_t top = levels_.size() - 1;
    bool exceeded = false;
    auto g = find_factor(d.f, bonding(d.level, top), options_.search_budget, exceeded);
    if (!g) return false;
    record(d, top, "found", std::move(*g));
    return true;
  }

  std::optional<Demand> next_open_demand() {
    while (!queue_.empty()) {
      Demand d = std::move(queue_.front());
      queue_.pop_front();
      if (by_symmetry(d) || by_search(d)) continue;
      return d;
    }
    return std::nullopt;
  }

  Amalgam amalgamate(const Morphism& down, const Demand& d) {
    try {
      return connected_amalgam(down, d.f, options_.search_budget);
    } catch (const BudgetExceeded& e) {
      abort(std::string("amalgam budget exceeded for demand ") + d.id + ": " + e.what());
    }
  }

  // Amalgamates `down` : F -> F_top with the target demand and, when
  // grouping, with the later open demands of the same level that F does not
  // meet yet. Returns the map onto F_top and a witness per met demand.
  struct Batch {
    Morphism to_top;
    std::vector<std::pair<Demand, Morphism>> met;
  };

  Batch meet(Morphism to_top, const Demand& first) {
    const std::size_t top = levels_.size() - 1;
    Batch batch{std::move(to_top), {}};
    auto absorb = [&](const Demand& d) {
      Amalgam am = amalgamate(compose(bonding(d.level, top), batch.to_top), d);
      for (auto& [_, g] : batch.met) g = compose(g, am.to_first);
      batch.to_top = compose(batch.to_top, am.to_first);
      batch.met.emplace_back(d, am.to_second);
    };
    absorb(first);
    if (!options_.group_by_level) return batch;
    std::deque<Demand> rest;
    for (Demand& d : queue_) {
      if (d.level != first.level) {
        rest.push_back(std::move(d));
        continue;
      }
      auto [key, _] = orbit_key(d.f, cat_.autos[d.graph]);
      bool covered = false;
      for (const auto& [m, g] : batch.met) {
        if (m.graph == d.graph && orbit_key(m.f, cat_.autos[m.graph]).first == key) covered = true;
      }
      bool exceeded = false;
      if (!covered && !find_factor(d.f, compose(bonding(d.level, top), batch.to_top),
                                   options_.search_budget, exceeded)) {
        absorb(d);
        continue;
      }
      rest.push_back(std::move(d));
    }
    queue_ = std::move(rest);
    return batch;
  }

  void amalgam_step(const Demand& d) {
    const std::size_t top = levels_.size() - 1;
    Batch batch = meet(identity(levels_.back()), d);
    const Vertex point = *batch.to_top.preimage(thread_.back()).first();
    push_level(batch.to_top.domain_ptr(), batch.to_top, point);
    for (auto& [demand, g] : batch.met) record(demand, top + 1, "amalgam", std::move(g));
  }

  void split_step() {
    const GraphPtr& top = levels_.back();
    const Edge e = top->edges().front();
    EdgeSplit split = split_edge(top, e.first, e.second);
    const Vertex point = *split.map.preimage(thread_.back()).first();
    push_level(split.graph, split.map, point);
  }

  // One step of the unfolding construction: subdivide the edges at the
  // thread point, meet the demand over the result, then unfold along the
  // components of the preimages of the thread stars.
  void unfold_step(const std::optional<Demand>& target) {
    const std::size_t top = levels_.size() - 1;
    const GraphPtr& k = levels_.back();
    const Vertex x = thread_.back();

    GraphBuilder builder;
    std::vector<Vertex> sub_map;
    for (Vertex v = 0; v < k->size(); ++v) {
      builder.add_vertex(k->name(v));
      sub_map.push_back(v);
    }
    for (const Edge& e : k->edges()) {
      if (e.first != x && e.second != x) {
        builder.add_edge(e.first, e.second);
        continue;
      }
      const Vertex y = e.first == x ? e.second : e.first;
      std::string token = k->name(y) + "'";
      while (builder.has_token(token)) token += "'";
      const Vertex mid = builder.add_vertex(token);
      sub_map.push_back(x);
      builder.add_edge(x, mid);
      builder.add_edge(mid, y);
    }
    auto sub = share(builder.build());
    Morphism down(sub, k, std::move(sub_map));  // G -> K_top

    GraphPtr base = sub;
    Morphism to_top = down;  // F -> K_top
    std::vector<std::pair<Demand, Morphism>> met;
    if (target) {
      Batch batch = meet(down, *target);
      base = batch.to_top.domain_ptr();
      to_top = std::move(batch.to_top);
      met = std::move(batch.met);
    }

    // A vertex over x all of whose neighbours also lie over x.
    std::optional<Vertex> v;
    to_top.preimage(x).for_each([&](Vertex c) {
      if (v) return;
      const auto& nb = base->neighbors(c);
      if (std::all_of(nb.begin(), nb.end(), [&](Vertex u) { return to_top(u) == x; })) v = c;
    });
    if (!v) throw Error("no vertex with its whole star over the thread point");

    std::vector<VertexSet> chain{base->set_of({*v})};
    auto extend = [&](VertexSet next) {
      if (next != chain.back()) chain.push_back(std::move(next));
    };
    for (std::size_t i = 0; i <= top; ++i) {
      const std::size_t m = top - i;
      const Morphism across = compose(bonding(m, top), to_top);
      const VertexSet st = star(*levels_[m], levels_[m]->set_of({thread_[m]}));
      extend(component_of(*base, across.preimage(st), *v));
    }
    extend(base->all());

    UnfoldingResult u = unfold(base, chain);
    Morphism bond = compose(to_top, u.map);
    push_level(u.graph, std::move(bond), *u.layers[0].first());
    for (auto& [demand, g] : met) record(demand, top + 1, "amalgam", compose(g, u.map));
  }

  DemandCatalog cat_;
  BuildOptions options_;
  std::vector<GraphPtr> levels_;
  std::vector<Morphism> bonds_;
  std::vector<Vertex> thread_;
  std::vector<LedgerEntry> ledger_;
  std::deque<Demand> queue_;
  std::map<OrbitKey, Satisfied> satisfied_;
};

}  // namespace

InverseSequence build_fraisse_prefix(std::size_t task_bound, std::size_t depth,
                                     const BuildOptions& options) {
  if (task_bound == 0) throw InvalidArgument("task bound must be positive");
  return PrefixBuilder(task_bound, options).run(depth);
}

// ---------------------------------------------------------------------------
// Audits

SharpReport check_sharp(const InverseSequence& seq) {
  SharpReport report;
  std::vector<bool> cycle(seq.size());
  for (std::size_t n = 0; n < seq.size(); ++n) cycle[n] = as_cycle(seq.level(n)).has_value();
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
    BondAudit audit;
    audit.index = n;
    const Morphism& b = seq.bond(n);
    audit.applicable = cycle[n] && cycle[n + 1] && classify(b).confluent;
    if (audit.applicable) {
      audit.sharp = true;
      for (Vertex x = 0; x < b.codomain().size(); ++x) {
        for (const VertexSet& part : components(b.domain(), b.preimage(x))) {
          if (part.size() < 2) audit.sharp = false;
        }
      }
      audit.winding = winding_number(b);
    }
    report.bonds.push_back(audit);
  }
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    std::vector<std::size_t> windings;
    for (std::size_t l = k + 1; l < seq.size() && report.bonds[l - 1].applicable; ++l) {
      windings.push_back(winding_number(compose_bonding(seq, k, l)));
    }
    std::set<std::size_t> divisors;
    for (std::size_t w : windings) {
      for (std::size_t d = 1; d <= w; ++d) {
        if (w % d == 0) divisors.insert(d);
      }
    }
    report.windings.push_back(std::move(windings));
    report.divisors.emplace_back(divisors.begin(), divisors.end());
  }
  return report;
}

std::vector<FibreInfo> thread_fibers(const InverseSequence& seq, std::size_t n, std::size_t m) {
  if (n > m || m >= seq.size()) {
    throw InvalidArgument("fibre indices " + std::to_string(n) + ", " + std::to_string(m) +
                          " out of range");
  }
  std::vector<Morphism> down;  // down[k - n]: F_m -> F_k
  for (std::size_t k = n; k <= m; ++k) down.push_back(compose_bonding(seq, k, m));
  const Morphism& alpha = down.front();
  std::vector<FibreInfo> out;
  for (Vertex v = 0; v < seq.level(n).size(); ++v) {
    FibreInfo info;
    info.vertex = v;
    const VertexSet fibre = alpha.preimage(v);
    info.components = components(seq.level(m), fibre);
    const std::vector<Vertex> members = fibre.elements();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        for (std::size_t k = n + 1; k <= m; ++k) {
          const Morphism& at = down[k - n];
          if (at(members[i]) != at(members[j])) {
            info.diameter = std::max(info.diameter, std::ldexp(1.0, -static_cast<int>(k)));
            break;
          }
        }
      }
    }
    out.push_back(std::move(info));
  }
  return out;
}

SolenoidReport is_almost_graph_solenoid_prefix(const InverseSequence& seq) {
  SolenoidReport report;
  if (seq.size() == 0) {
    report.reason = "empty sequence";
    return report;
  }
  std::vector<OrientedCycle> canonical;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    auto c = as_cycle(seq.level(n));
    if (!c) {
      report.reason = "level " + std::to_string(n) + " is not a cycle";
      return report;
    }
    canonical.push_back(std::move(*c));
  }
  const bool given = !seq.orientations().empty();
  report.orientations.push_back(given ? seq.orientations()[0] : canonical[0]);

  bool all_good = true;
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
    const OrientedCycle& below = report.orientations.back();
    std::vector<OrientedCycle> options;
    if (given) {
      options.push_back(seq.orientations()[n + 1]);
    } else {
      options.push_back(canonical[n + 1]);
      options.push_back(canonical[n + 1].reversed());
    }
    SolenoidBond best;
    OrientedCycle chosen = options.front();
    bool settled = false;
    for (const OrientedCycle& above : options) {
      const CycleMap w{seq.bond(n), above, below};
      SolenoidBond bond;
      bond.index = n;
      const AlmostWrappingCheck check = is_almost_wrapping(w);
      bond.almost_wrapping = check.almost_wrapping;
      bond.violation = check.violation;
      if (auto f = find_confluent_witness(w, true)) {
        bond.proper_witness = true;
        bond.winding = winding_number(*f);
      }
      if (&above == &options.front()) best = bond;
      if (bond.almost_wrapping && bond.proper_witness) {
        best = bond;
        chosen = above;
        settled = true;
        break;
      }
    }
    if (!settled) {
      all_good = false;
      if (report.reason.empty()) {
        report.reason = "bond " + std::to_string(n) +
                        (best.almost_wrapping ? " has no proper confluent witness"
                                              : " is not almost wrapping");
      }
    }
    if (best.winding && *best.winding > 1) ++report.wide;
    report.bonds.push_back(best);
    report.orientations.push_back(chosen);
  }
  const std::size_t bonds = seq.size() - 1;
  report.required = (bonds + 1) / 2;
  if (all_good && report.wide < report.required) {
    report.reason = "only " + std::to_string(report.wide) + " of " + std::to_string(bonds) +
                    " bonds wind more than once";
  }
  report.holds = all_good && report.wide >= report.required;
  return report;
}

bool thread_stars_adjacently_disconnecting(const InverseSequence& seq) {
  if (!seq.thread()) throw InvalidArgument("sequence has no thread");
  const std::vector<Vertex>& x = *seq.thread();
  for (std::size_t n = 0; n < seq.size(); ++n) {
    const Graph& level = seq.level(n);
    if (!is_adjacently_disconnecting(level, level.set_of({x[n]}))) return false;
    for (std::size_t m = 0; m < n; ++m) {
      const Morphism alpha = compose_bonding(seq, m, n);
      const VertexSet st = star(seq.level(m), seq.level(m).set_of({x[m]}));
      if (!is_adjacently_disconnecting(level, component_of(level, alpha.preimage(st), x[n]))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace conflux
