#include "conflux/cycles.h"

#include <algorithm>
#include <functional>
#include <string>

namespace conflux {
namespace {

void require_cycle_graph(const Graph& g, const char* role) {
  if (!as_cycle(g)) throw InvalidArgument(std::string(role) + " is not a cycle");
}

void require_orientations(const CycleMap& w) {
  if (w.domain.size() != w.map.domain().size() || w.codomain.size() != w.map.codomain().size()) {
    throw InvalidArgument("orientations must run through the whole domain and codomain");
  }
}

// Position along C of the image of the k-th vertex of D.
std::vector<std::size_t> image_positions(const CycleMap& w) {
  std::vector<std::size_t> pos;
  for (Vertex v : w.domain.order()) pos.push_back(w.codomain.position(w.map(v)));
  return pos;
}

void require_surjective_homomorphism(const CycleMap& w) {
  require_orientations(w);
  if (!is_homomorphism(w.map) || w.map.image().size() != w.map.codomain().size()) {
    throw InvalidArgument("map between cycles must be a surjective homomorphism");
  }
}

// Enumerates choices shift[k] in {0, 1} with f_k = w_k - shift[k] stepping
// forward by 0 or 1 around D, in lexicographic order of the shift vector.
void for_each_witness(const CycleMap& w, bool require_proper,
                      const std::function<bool(const std::vector<Vertex>&)>& visit) {
  require_surjective_homomorphism(w);
  const std::size_t len = w.domain.size();
  const std::size_t n = w.codomain.size();
  const std::vector<std::size_t> wpos = image_positions(w);
  std::vector<std::size_t> f(len);
  // Index of the first forward step seen so far and start of the current run.
  std::optional<std::size_t> first_step;
  std::size_t run_start = 0;
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == len) {
      const std::size_t close = (f[0] + n - f[len - 1]) % n;
      if (close > 1 || (!first_step && close == 0)) return;
      if (require_proper) {
        // The run wrapping through position 0 spans the tail and the head.
        const std::size_t head = first_step ? *first_step : len;
        const std::size_t tail = len - run_start;
        if (close == 1) {
          if (tail < 2 || head < 2) return;
        } else if (head + tail < 2) {
          return;
        }
      }
      std::vector<Vertex> map(w.map.domain().size());
      for (std::size_t i = 0; i < len; ++i) map[w.domain.at(i)] = w.codomain.at(f[i]);
      stop = !visit(map);
      return;
    }
    for (std::size_t shift = 0; shift <= 1 && !stop; ++shift) {
      f[k] = (wpos[k] + n - shift) % n;
      if (k == 0) {
        rec(1);
        continue;
      }
      const std::size_t step = (f[k] + n - f[k - 1]) % n;
      if (step > 1) continue;
      const auto saved_first = first_step;
      const std::size_t saved_start = run_start;
      if (step == 1) {
        if (require_proper && first_step && k - run_start < 2) continue;
        if (!first_step) first_step = k;
        run_start = k;
      }
      rec(k + 1);
      first_step = saved_first;
      run_start = saved_start;
    }
  };
  rec(0);
}

}  // namespace

std::size_t winding_number(const Morphism& f) {
  require_cycle_graph(f.domain(), "domain");
  require_cycle_graph(f.codomain(), "codomain");
  if (!classify(f).confluent) throw InvalidArgument("winding number needs a confluent epimorphism");
  std::optional<std::size_t> count;
  for (Vertex v = 0; v < f.codomain().size(); ++v) {
    const std::size_t here = components(f.domain(), f.preimage(v)).size();
    if (count && *count != here) throw InvalidArgument("fibres have different numbers of components");
    count = here;
  }
  return *count;
}

std::vector<Vertex> oriented_arc(const OrientedCycle& c, Vertex a, Vertex b) {
  std::vector<Vertex> out{a};
  for (std::size_t i = c.position(a); out.back() != b; ++i) out.push_back(c.at(i + 1));
  if (out.size() == c.size() && a != b) throw InvalidArgument("the arc would be the whole cycle");
  return out;
}

AlmostWrappingCheck is_almost_wrapping(const CycleMap& w) {
  require_surjective_homomorphism(w);
  const Graph& cg = w.map.codomain();
  const std::size_t len = w.domain.size();
  AlmostWrappingCheck result;
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = w.domain.at(i);
    const Vertex z = w.map(a);
    VertexSet seen(cg.size());
    seen.insert(z);
    // c runs over a's successors up to (not including) a's predecessor.
    for (std::size_t s = 1; s + 1 < len; ++s) {
      const Vertex c = w.domain.at(i + s);
      const Vertex x = w.map(c);
      seen.insert(x);
      if (x == z || cg.adjacent(x, z)) continue;
      if (seen == cg.set_of(oriented_arc(w.codomain, x, z))) {
        result.violation = SwapQuadruple{x, z, a, c};
        return result;
      }
    }
  }
  result.almost_wrapping = true;
  return result;
}

std::optional<Morphism> find_confluent_witness(const CycleMap& w, bool require_proper) {
  std::optional<Morphism> found;
  for_each_witness(w, require_proper, [&](const std::vector<Vertex>& map) {
    found.emplace(w.map.domain_ptr(), w.map.codomain_ptr(), map);
    return false;
  });
  return found;
}

std::vector<Morphism> all_confluent_witnesses(const CycleMap& w, bool require_proper) {
  std::vector<Morphism> out;
  for_each_witness(w, require_proper, [&](const std::vector<Vertex>& map) {
    out.emplace_back(w.map.domain_ptr(), w.map.codomain_ptr(), map);
    return true;
  });
  return out;
}

bool has_backward_zigzag(const CycleMap& w) {
  const std::size_t len = w.domain.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex x = w.domain.at(i);
    const Vertex y = w.domain.at(i + 1);
    const Vertex z = w.domain.at(i + 2);
    if (x == z) continue;
    if (w.codomain.pred(w.map(x)) == w.map(y) && w.codomain.pred(w.map(y)) == w.map(z)) return true;
  }
  return false;
}

bool is_witness(const CycleMap& w, const Morphism& f, bool require_proper) {
  if (f.map().size() != w.map.map().size() || !classify(f).confluent) return false;
  const std::size_t len = w.domain.size();
  const std::size_t n = w.codomain.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex y = w.domain.at(i);
    if (w.map(y) != f(y) && w.map(y) != w.codomain.succ(f(y))) return false;
    const std::size_t step =
        (w.codomain.position(f(w.domain.at(i + 1))) + n - w.codomain.position(f(y))) % n;
    if (step > 1) return false;
  }
  if (require_proper) {
    for (Vertex c = 0; c < f.codomain().size(); ++c) {
      for (const VertexSet& part : components(f.domain(), f.preimage(c))) {
        if (part.size() < 2) return false;
      }
    }
  }
  return true;
}

WitnessPair compose_witness(const WitnessPair& outer, const WitnessPair& inner) {
  if (!(inner.w.codomain == outer.w.domain)) {
    throw InvalidArgument("inner map must land on the oriented domain of the outer map");
  }
  if (!is_witness(outer.w, outer.f, true) || !is_witness(inner.w, inner.f, true)) {
    throw InvalidArgument("composition needs proper confluent witnesses");
  }
  const OrientedCycle& e = inner.w.domain;
  const OrientedCycle& c = outer.w.codomain;
  const Morphism g = compose(outer.w.map, inner.w.map);
  const Morphism f0 = compose(outer.f, inner.f);
  const std::size_t len = e.size();
  auto value = [&](std::size_t i) { return c.position(f0(e.at(i))); };

  // Runs of f0 along E, starting at the first run boundary.
  std::size_t origin = 0;
  while (value(origin) == value(origin + len - 1)) ++origin;
  struct Run {
    std::size_t start, length, value;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t p = origin + i;
    if (runs.empty() || value(p) != runs.back().value) {
      runs.push_back({p, 1, value(p)});
    } else {
      ++runs.back().length;
    }
  }

  std::vector<Vertex> map(len);
  const std::size_t r = runs.size();
  for (std::size_t k = 0; k < r; ++k) {
    const Run& x = runs[(k + r - 1) % r];
    const Run& y = runs[k];
    const std::size_t j = y.value;
    const Vertex next = c.at(j + 1);
    const Vertex after = c.at(j + 2);
    // Absolute positions along E, shifted by len so the previous run never
    // starts below zero.
    const std::size_t y_start = y.start + len;
    const std::size_t y_end = y_start + y.length;
    std::size_t from = y_start;
    for (std::size_t p = y_start - x.length; p < y_start; ++p) {
      if (g(e.at(p)) == next) {
        from = p;
        break;
      }
    }
    std::size_t to = y_end;
    for (std::size_t p = y_start; p < y_end; ++p) {
      if (g(e.at(p)) == after) {
        to = p;
        break;
      }
    }
    for (std::size_t p = from; p < to; ++p) map[e.at(p)] = c.at(j);
  }
  std::vector<Vertex> images(inner.w.map.domain().size());
  for (std::size_t i = 0; i < len; ++i) images[e.at(i)] = map[e.at(i)];
  Morphism f(inner.w.map.domain_ptr(), outer.w.map.codomain_ptr(), std::move(images));
  CycleMap composed{g, e, c};
  if (!is_witness(composed, f, true)) {
    throw Error("re-cut fibres do not form a proper witness");
  }
  return WitnessPair{std::move(composed), std::move(f)};
}

namespace {

struct Runs {
  std::vector<std::vector<Vertex>> runs;  // in traversal order, run t over a_{t mod k}
};

// Fibre runs of a wrapping map, read in the direction in which the map runs
// forward along the codomain orientation, starting with a run over a_0.
Runs runs_of(const CycleMap& f) {
  const OrientedCycle& a = f.codomain;
  const std::size_t k = a.size();
  const std::size_t len = f.domain.size();
  bool forward = true;
  bool backward = true;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t step =
        (a.position(f.map(f.domain.at(i + 1))) + k - a.position(f.map(f.domain.at(i)))) % k;
    forward = forward && step <= 1;
    backward = backward && (step == 0 || step == k - 1);
  }
  if (!forward && !backward) throw InvalidArgument("map does not run monotonically around the cycle");
  const OrientedCycle walk = forward ? f.domain : f.domain.reversed();
  std::size_t start = 0;
  while (!(f.map(walk.at(start)) == a.at(0) && f.map(walk.at(start + len - 1)) != a.at(0))) ++start;
  Runs out;
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = walk.at(start + i);
    if (out.runs.empty() || f.map(v) != f.map(out.runs.back().back())) out.runs.emplace_back();
    out.runs.back().push_back(v);
  }
  return out;
}

}  // namespace

CycleAmalgam cycle_amalgam(const CycleMap& f, const CycleMap& g) {
  if (!(f.codomain == g.codomain)) throw InvalidArgument("both maps must land on the same oriented cycle");
  require_orientations(f);
  require_orientations(g);
  CycleAmalgam out;
  out.winding_first = winding_number(f.map);
  out.winding_second = winding_number(g.map);
  const Runs rf = runs_of(f);
  const Runs rg = runs_of(g);
  for (const auto* rs : {&rf, &rg}) {
    for (const auto& run : rs->runs) out.fibre = std::max(out.fibre, run.size());
  }
  const std::size_t k = f.codomain.size();
  const std::size_t blocks = k * out.winding_first * out.winding_second;
  const std::size_t total = blocks * out.fibre;

  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  for (std::size_t t = 0; t < blocks; ++t) {
    const auto& bf = rf.runs[t % rf.runs.size()];
    const auto& bg = rg.runs[t % rg.runs.size()];
    for (std::size_t p = 0; p < out.fibre; ++p) {
      names.push_back("d" + std::to_string(names.size()));
      first.push_back(bf[std::min(p, bf.size() - 1)]);
      second.push_back(bg[std::min(p, bg.size() - 1)]);
    }
  }
  for (std::size_t i = 0; i < total; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % total));
  }
  auto d = share(Graph(std::move(names), edges));
  std::vector<Vertex> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = static_cast<Vertex>(i);
  out.cycle = OrientedCycle(*d, std::move(order));
  out.amalgam = Amalgam{d, Morphism(d, f.map.domain_ptr(), std::move(first)),
                        Morphism(d, g.map.domain_ptr(), std::move(second)),
                        Amalgam::Route::kCycleBlocks};
  return out;
}

}  // namespace conflux
