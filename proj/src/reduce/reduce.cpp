#include "hgemb/reduce.hpp"

#include <set>
#include <sstream>

#include "hgemb/errors.hpp"

namespace hgemb::reduce {

KPartiteGraph kpartite_lift(const engine::WeightedGraph& g, int k, LiftMode mode) {
  if (k < 2) throw InputError("k-partite lift needs k >= 2");
  KPartiteGraph out;
  out.n = g.n;
  out.k = k;
  out.graph.n = g.n * k;
  for (const auto& [uv, w] : g.weights) {
    const auto [u, v] = uv;  // u < v
    for (int j = 0; j < k; ++j) {
      for (int q = 0; q < k; ++q) {
        if (j == q) continue;
        if (mode == LiftMode::canonical && !(j < q)) continue;
        out.graph.set(out.vertex(u, j), out.vertex(v, q), w);
      }
    }
  }
  return out;
}

ThetaAssignment assign_theta(const Hypergraph& h, const Embedding& e) {
  const auto report = is_valid_embedding(h, e);
  if (!report.valid) throw InputError("not a valid embedding: " + report.violations.front());
  ThetaAssignment theta;
  for (int i = 0; i < e.k; ++i) {
    for (int j = i + 1; j < e.k; ++j) {
      const VertexSet a = e.images[static_cast<std::size_t>(i)];
      const VertexSet b = e.images[static_cast<std::size_t>(j)];
      for (std::size_t f = 0; f < h.num_edges(); ++f) {
        if (h.edge(f).intersects(a) && h.edge(f).intersects(b)) {
          theta[{i, j}] = f;
          break;
        }
      }
      // Valid embeddings only guarantee touching, which may be a plain
      // intersection; any edge through a shared vertex then meets both.
      if (!theta.count({i, j})) throw InputError("images of clique vertices do not share a hyperedge");
    }
  }
  return theta;
}

namespace {

engine::Value checked_mul(engine::Value a, engine::Value b) {
  engine::Value r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("domain encoding does not fit 64 bits");
  return r;
}

}  // namespace

ReductionOutput build_instance(const Hypergraph& h, const Embedding& e, const KPartiteGraph& g,
                               const engine::Semiring& s) {
  if (g.k != e.k) {
    throw InputError("graph has " + std::to_string(g.k) + " parts but the embedding maps " + std::to_string(e.k) +
                     " clique vertices");
  }
  ReductionOutput out;
  out.theta = assign_theta(h, e);
  out.n = g.n;
  out.k = g.k;
  out.lambda = weak_edge_depth(h, e);

  const int nv = h.num_vertices();
  std::vector<std::vector<int>> preimage(static_cast<std::size_t>(nv));
  for (int i = 0; i < e.k; ++i) {
    for_each_vertex(e.images[static_cast<std::size_t>(i)], [&](int x) { preimage[static_cast<std::size_t>(x)].push_back(i); });
  }
  // Encoding range check: n^|preimage| must fit.
  for (const auto& pre : preimage) {
    engine::Value range = 1;
    for (std::size_t t = 0; t < pre.size(); ++t) range = checked_mul(range, std::max(g.n, 1));
  }

  std::vector<std::set<std::int64_t>> active(static_cast<std::size_t>(nv));
  std::vector<engine::Factor> factors;
  for (std::size_t f = 0; f < h.num_edges(); ++f) {
    const VertexSet edge = h.edge(f);
    std::vector<int> parts;
    for (int i = 0; i < e.k; ++i) {
      if (e.images[static_cast<std::size_t>(i)].intersects(edge)) parts.push_back(i);
    }
    const auto vars = edge.members();
    std::vector<int> chosen(static_cast<std::size_t>(e.k), 0);
    engine::Factor factor;

    auto emit = [&](engine::Value value) {
      engine::Tuple tuple;
      for (int x : vars) {
        engine::Value code = 0;
        for (int i : preimage[static_cast<std::size_t>(x)]) code = code * g.n + chosen[static_cast<std::size_t>(i)];
        tuple.push_back(code);
        active[static_cast<std::size_t>(x)].insert(code);
      }
      factor.entries.emplace_back(std::move(tuple), value);
    };
    // Ordered backtracking over the parts in `parts`.
    auto descend = [&](auto&& self, std::size_t depth, engine::Value acc) -> void {
      if (depth == parts.size()) {
        if (!s.equal(acc, s.zero())) emit(acc);
        return;
      }
      const int part = parts[depth];
      for (int a = 0; a < g.n; ++a) {
        engine::Value next = acc;
        bool clique = true;
        for (std::size_t t = 0; t < depth; ++t) {
          const int other = parts[t];
          const engine::Value* w =
              g.graph.find(g.vertex(chosen[static_cast<std::size_t>(other)], other), g.vertex(a, part));
          if (!w) {
            clique = false;
            break;
          }
          if (out.theta.at({other, part}) == f) next = s.times(next, *w);
        }
        if (!clique) continue;
        chosen[static_cast<std::size_t>(part)] = a;
        self(self, depth + 1, next);
      }
    };
    descend(descend, 0, s.one());
    factors.push_back(std::move(factor));
  }

  std::vector<std::vector<std::int64_t>> domains;
  for (const auto& values : active) {
    if (values.empty()) {
      domains.push_back({0});
    } else {
      domains.emplace_back(values.begin(), values.end());
    }
  }
  out.instance = engine::SumProdInstance{h, std::move(domains), std::move(factors), std::string(s.name())};
  return out;
}

std::string format_sidecar(const Hypergraph& h, const ReductionOutput& out) {
  std::ostringstream os;
  os << "k: " << out.k << "\n";
  os << "n: " << out.n << "\n";
  os << "lambda: " << out.lambda << "\n";
  os << "# lifted vertex j*n+i is copy j of original vertex i\n";
  for (const auto& [pair, f] : out.theta) {
    os << "theta " << pair.first + 1 << ' ' << pair.second + 1 << ": " << h.describe(h.edge(f)) << "\n";
  }
  return os.str();
}

RoundTrip roundtrip_check(const Hypergraph& h, const Embedding& e, const engine::WeightedGraph& g,
                          const engine::Semiring& s) {
  const auto lift = kpartite_lift(g, e.k, LiftMode::canonical);
  const auto out = build_instance(h, e, lift, s);
  RoundTrip r;
  r.instance_size = out.instance.size();
  r.lhs = engine::eval_bruteforce(out.instance, s);
  r.rhs = engine::kclique_direct(g, e.k, s);
  r.equal = s.equal(r.lhs, r.rhs);
  return r;
}

}  // namespace hgemb::reduce
