#include <algorithm>
#include <unordered_map>

#include "engine/tuple_hash.hpp"
#include "hgemb/engine.hpp"
#include "hgemb/errors.hpp"

namespace hgemb::engine {

namespace {

// Positions (within e's sorted member list) of the vertices also in `other`.
std::vector<std::size_t> shared_positions(VertexSet e, VertexSet other) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  for_each_vertex(e, [&](int v) {
    if (other.contains(v)) out.push_back(pos);
    ++pos;
  });
  return out;
}

Tuple project(const Tuple& t, const std::vector<std::size_t>& positions) {
  Tuple out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(t[p]);
  return out;
}

// Connected, smallest-table-first: start from the smallest table, then keep
// taking the smallest table that shares a variable with what is placed.
std::vector<std::size_t> join_order(const SumProdInstance& inst) {
  const std::size_t m = inst.h.num_edges();
  std::vector<std::size_t> order;
  std::vector<bool> placed(m, false);
  VertexSet bound;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pick = m;
    bool pick_connected = false;
    for (std::size_t e = 0; e < m; ++e) {
      if (placed[e]) continue;
      const bool connected = inst.h.edge(e).intersects(bound);
      const bool better = pick == m || (connected && !pick_connected) ||
                          (connected == pick_connected &&
                           inst.factors[e].entries.size() < inst.factors[pick].entries.size());
      if (better) {
        pick = e;
        pick_connected = connected;
      }
    }
    placed[pick] = true;
    bound |= inst.h.edge(pick);
    order.push_back(pick);
  }
  return order;
}

class Backtracker {
 public:
  Backtracker(const SumProdInstance& inst, const Semiring& s) : inst_(inst), s_(s) {
    const auto order = join_order(inst);
    VertexSet bound;
    for (auto e : order) {
      Step step;
      step.edge = e;
      step.vars = inst.h.edge(e).members();
      step.shared = shared_positions(inst.h.edge(e), bound);
      for (std::size_t i = 0; i < step.vars.size(); ++i) {
        if (std::find(step.shared.begin(), step.shared.end(), i) == step.shared.end()) step.fresh.push_back(i);
      }
      const auto& entries = inst.factors[e].entries;
      for (std::size_t i = 0; i < entries.size(); ++i) step.index[project(entries[i].first, step.shared)].push_back(i);
      steps_.push_back(std::move(step));
      bound |= inst.h.edge(e);
    }
    assignment_.assign(static_cast<std::size_t>(inst.h.num_vertices()), 0);
  }

  Value run() {
    total_ = s_.zero();
    descend(0, s_.one());
    return total_;
  }

 private:
  struct Step {
    std::size_t edge = 0;
    std::vector<int> vars;
    std::vector<std::size_t> shared;
    std::vector<std::size_t> fresh;
    std::unordered_map<Tuple, std::vector<std::size_t>, TupleHash> index;
  };

  bool descend(std::size_t depth, Value acc) {
    if (depth == steps_.size()) {
      total_ = s_.plus(total_, acc);
      return !s_.absorbs(total_);
    }
    const Step& step = steps_[depth];
    key_.clear();
    for (auto p : step.shared) key_.push_back(assignment_[static_cast<std::size_t>(step.vars[p])]);
    const auto it = step.index.find(key_);
    if (it == step.index.end()) return true;
    const auto& entries = inst_.factors[step.edge].entries;
    for (auto i : it->second) {
      const auto& [tuple, value] = entries[i];
      for (auto p : step.fresh) assignment_[static_cast<std::size_t>(step.vars[p])] = tuple[p];
      if (!descend(depth + 1, s_.times(acc, value))) return false;
    }
    return true;
  }

  const SumProdInstance& inst_;
  const Semiring& s_;
  std::vector<Step> steps_;
  std::vector<std::int64_t> assignment_;
  Tuple key_;
  Value total_ = 0;
};

}  // namespace

Value eval_bruteforce(const SumProdInstance& inst, const Semiring& s) {
  validate(inst, s);
  return Backtracker(inst, s).run();
}

namespace {

struct JoinForest {
  std::vector<std::size_t> order;  // leaves first
  std::vector<int> parent;         // -1 for roots
};

// Repeatedly removes an ear: an edge whose intersection with the other
// remaining edges lies inside one of them. Returns false if stuck.
bool build_join_forest(const Hypergraph& h, JoinForest& forest) {
  const std::size_t m = h.num_edges();
  forest.parent.assign(m, -1);
  std::vector<bool> alive(m, true);
  for (std::size_t left = m; left > 0; --left) {
    bool removed = false;
    for (std::size_t e = 0; e < m && !removed; ++e) {
      if (!alive[e]) continue;
      VertexSet others;
      for (std::size_t f = 0; f < m; ++f) {
        if (alive[f] && f != e) others |= h.edge(f);
      }
      const VertexSet boundary = h.edge(e) & others;
      if (boundary.empty()) {
        removed = true;
      } else {
        for (std::size_t f = 0; f < m; ++f) {
          if (alive[f] && f != e && boundary.subset_of(h.edge(f))) {
            forest.parent[e] = static_cast<int>(f);
            removed = true;
            break;
          }
        }
      }
      if (removed) {
        alive[e] = false;
        forest.order.push_back(e);
      }
    }
    if (!removed) return false;
  }
  return true;
}

}  // namespace

Value eval_acyclic(const SumProdInstance& inst, const Semiring& s) {
  validate(inst, s);
  JoinForest forest;
  if (!build_join_forest(inst.h, forest)) throw InputError("eval_acyclic: hypergraph is not acyclic");
  std::vector<std::vector<std::pair<Tuple, Value>>> tables;
  for (const auto& f : inst.factors) tables.push_back(f.entries);

  Value result = s.one();
  for (auto e : forest.order) {
    const int p = forest.parent[e];
    if (p < 0) {
      Value sum = s.zero();
      for (const auto& [t, v] : tables[e]) sum = s.plus(sum, v);
      result = s.times(result, sum);
      continue;
    }
    const auto pe = static_cast<std::size_t>(p);
    const auto mine = shared_positions(inst.h.edge(e), inst.h.edge(pe));
    const auto theirs = shared_positions(inst.h.edge(pe), inst.h.edge(e));
    std::unordered_map<Tuple, Value, TupleHash> message;
    for (const auto& [t, v] : tables[e]) {
      auto [it, fresh] = message.try_emplace(project(t, mine), v);
      if (!fresh) it->second = s.plus(it->second, v);
    }
    std::vector<std::pair<Tuple, Value>> updated;
    for (auto& [t, v] : tables[pe]) {
      const auto it = message.find(project(t, theirs));
      if (it == message.end()) continue;
      const Value w = s.times(v, it->second);
      if (!s.equal(w, s.zero())) updated.emplace_back(std::move(t), w);
    }
    tables[pe] = std::move(updated);
    tables[e].clear();
  }
  return result;
}

Value kclique_direct(const WeightedGraph& g, int k, const Semiring& s) {
  if (k < 2) throw InputError("kclique_direct needs k >= 2");
  Value total = s.zero();
  std::vector<int> chosen;
  auto descend = [&](auto&& self, int next, Value acc) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      total = s.plus(total, acc);
      return;
    }
    for (int v = next; v < g.n; ++v) {
      Value with = acc;
      bool clique = true;
      for (int u : chosen) {
        const Value* w = g.find(u, v);
        if (!w) {
          clique = false;
          break;
        }
        with = s.times(with, *w);
      }
      if (!clique) continue;
      chosen.push_back(v);
      self(self, v + 1, with);
      chosen.pop_back();
    }
  };
  descend(descend, 0, s.one());
  return total;
}

}  // namespace hgemb::engine
