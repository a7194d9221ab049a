#include "hgemb/embedding.hpp"

#include <algorithm>
#include <sstream>

#include "common/text.hpp"
#include "embedding/subset_model.hpp"
#include "hgemb/errors.hpp"

namespace hgemb {

namespace {

void check_shape(const Hypergraph& h, const Embedding& e) {
  if (e.k < 1) throw InputError("embedding needs k >= 1");
  if (static_cast<int>(e.images.size()) != e.k) {
    throw InputError("embedding lists " + std::to_string(e.images.size()) + " images for k = " + std::to_string(e.k));
  }
  for (int i = 0; i < e.k; ++i) {
    const VertexSet s = e.images[static_cast<std::size_t>(i)];
    if (s.empty()) throw InputError("clique vertex " + std::to_string(i + 1) + " has an empty image");
    h.check_in_range(s);
  }
}

}  // namespace

int weak_edge_depth(const Hypergraph& h, const Embedding& e) {
  int wed = 0;
  for (const VertexSet edge : h.edges()) {
    const auto d = std::count_if(e.images.begin(), e.images.end(), [&](VertexSet s) { return s.intersects(edge); });
    wed = std::max(wed, static_cast<int>(d));
  }
  return wed;
}

EmbeddingReport is_valid_embedding(const Hypergraph& h, const Embedding& e) {
  check_shape(h, e);
  EmbeddingReport r;
  for (int i = 0; i < e.k; ++i) {
    if (!is_connected(h, e.images[static_cast<std::size_t>(i)])) {
      r.violations.push_back("image of " + std::to_string(i + 1) + " " + h.describe(e.images[static_cast<std::size_t>(i)]) +
                             " is not connected");
    }
  }
  for (int i = 0; i < e.k; ++i) {
    for (int j = i + 1; j < e.k; ++j) {
      if (!touches(h, e.images[static_cast<std::size_t>(i)], e.images[static_cast<std::size_t>(j)])) {
        r.violations.push_back("images of " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not touch");
      }
    }
  }
  r.valid = r.violations.empty();

  r.vertex_depths.assign(static_cast<std::size_t>(h.num_vertices()), 0);
  for (const VertexSet s : e.images) {
    for_each_vertex(s, [&](int v) { ++r.vertex_depths[static_cast<std::size_t>(v)]; });
  }
  for (const VertexSet edge : h.edges()) {
    int weak = 0, full = 0;
    for (const VertexSet s : e.images) weak += s.intersects(edge) ? 1 : 0;
    for_each_vertex(edge, [&](int v) { full += r.vertex_depths[static_cast<std::size_t>(v)]; });
    r.edge_weak_depths.push_back(weak);
    r.edge_depths.push_back(full);
    r.wed = std::max(r.wed, weak);
    r.ed = std::max(r.ed, full);
  }
  return r;
}

namespace {

Integer multiset_count(std::size_t n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n + static_cast<std::size_t>(k) - 1),
               static_cast<unsigned long>(k));
  return out;
}

class WedSearch {
 public:
  WedSearch(const detail::SubsetModel& m, std::size_t num_edges, int k)
      : m_(m), k_(k), counts_(num_edges, 0), edges_of_(m.sets.size()) {
    for (std::size_t e = 0; e < m.meeting.size(); ++e) {
      for (auto i : m.meeting[e]) edges_of_[i].push_back(static_cast<std::uint32_t>(e));
    }
  }

  void run() {
    // Nothing beats k + 1, so the first complete choice is always kept.
    best_ = k_ + 1;
    levels_.assign(static_cast<std::size_t>(k_) + 1, {});
    auto& all = levels_[0];
    all.resize(m_.sets.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
    descend(0, 0);
  }

  int best() const { return best_; }
  const std::vector<std::uint32_t>& best_choice() const { return best_choice_; }

 private:
  // levels_[level]: indices >= the last chosen one that touch everything
  // chosen so far.
  void descend(std::size_t level, int depth_so_far) {
    if (static_cast<int>(chosen_.size()) == k_) {
      if (depth_so_far < best_) {
        best_ = depth_so_far;
        best_choice_ = chosen_;
      }
      return;
    }
    const auto& candidates = levels_[level];
    auto& next = levels_[level + 1];
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const std::uint32_t i = candidates[c];
      int depth = depth_so_far;
      for (auto e : edges_of_[i]) depth = std::max(depth, counts_[e] + 1);
      if (depth >= best_) continue;
      next.clear();
      for (std::size_t d = c; d < candidates.size(); ++d) {
        if (m_.touch[i][candidates[d]]) next.push_back(candidates[d]);
      }
      for (auto e : edges_of_[i]) ++counts_[e];
      chosen_.push_back(i);
      descend(level + 1, depth);
      chosen_.pop_back();
      for (auto e : edges_of_[i]) --counts_[e];
    }
  }

  const detail::SubsetModel& m_;
  int k_;
  std::vector<int> counts_;
  std::vector<std::vector<std::uint32_t>> edges_of_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::vector<std::uint32_t>> levels_;
  int best_ = 0;
  std::vector<std::uint32_t> best_choice_;
};

void check_k(int k) {
  if (k < 1) throw InputError("clique size k must be >= 1, got " + std::to_string(k));
}

}  // namespace

WedResult min_wed_bruteforce(const Hypergraph& h, int k, const BruteForceOptions& options) {
  check_k(k);
  if (h.num_vertices() == 0) throw InputError("hypergraph has no vertices");
  const auto model = detail::build_subset_model(h);
  const Integer candidates = multiset_count(model.sets.size(), k);
  if (candidates > Integer(std::to_string(options.budget))) {
    throw ResourceError("brute force over " + candidates.get_str() + " multisets exceeds budget " +
                        std::to_string(options.budget));
  }
  WedSearch search(model, h.num_edges(), k);
  search.run();
  WedResult out;
  out.wed = search.best();
  out.witness.k = k;
  for (auto i : search.best_choice()) out.witness.images.push_back(model.sets[i]);
  return out;
}

namespace {

// Shared skeleton of the integer and the normalised program. Variable
// layout: x_S for every connected S, then y_S for every conflicted S, then w.
struct EmbeddingProgram {
  lp::MilpModel model;
  std::size_t w_index = 0;
};

EmbeddingProgram build_program(const detail::SubsetModel& m, std::size_t num_edges, const Rational& total,
                               bool integral_x, std::int64_t k) {
  const std::size_t nx = m.sets.size();
  const std::size_t ny = m.conflicted.size();
  EmbeddingProgram p;
  p.w_index = nx + ny;
  auto& lp = p.model.lp;
  lp = lp::LinearProgram(lp::Sense::minimize, nx + ny + 1);
  lp.objective[p.w_index] = 1;

  auto& sum = lp.add(lp::Relation::equal, total);
  for (std::size_t i = 0; i < nx; ++i) sum.coeffs[i] = 1;

  for (std::size_t e = 0; e < num_edges; ++e) {
    auto& row = lp.add(lp::Relation::less_equal, 0);
    for (auto i : m.meeting[e]) row.coeffs[i] = 1;
    row.coeffs[p.w_index] = -1;
  }

  std::vector<std::size_t> y_of(nx, 0);
  for (std::size_t c = 0; c < ny; ++c) {
    const std::size_t s = m.conflicted[c];
    y_of[s] = nx + c;
    auto& row = lp.add(lp::Relation::less_equal, total);
    row.coeffs[s] = 1;
    row.coeffs[nx + c] = total;
  }
  for (const auto& [s, t] : m.apart) {
    auto& row = lp.add(lp::Relation::greater_equal, 1);
    row.coeffs[y_of[s]] = 1;
    row.coeffs[y_of[t]] = 1;
  }

  // x_S <= k follows from the sum row, y_S <= 1 from x_S + k*y_S <= k.
  if (integral_x) {
    for (std::size_t i = 0; i < nx; ++i) p.model.integers.push_back({i, 0, k, true});
  }
  for (std::size_t c = 0; c < ny; ++c) p.model.integers.push_back({nx + c, 0, 1, true});
  if (integral_x) p.model.integers.push_back({p.w_index, 0, k});
  return p;
}

}  // namespace

WedResult min_wed_ilp(const Hypergraph& h, int k, const SolverOptions& options) {
  check_k(k);
  if (h.num_vertices() == 0) throw InputError("hypergraph has no vertices");
  const auto model = detail::build_subset_model(h);
  const auto program = build_program(model, h.num_edges(), Rational(k), true, k);
  const auto result = lp::solve_milp(program.model, options.milp);
  if (result.status != lp::Status::optimal) {
    throw std::logic_error("embedding program reported " + std::string(lp::status_name(result.status)));
  }
  WedResult out;
  out.wed = static_cast<int>(result.value.get_num().get_si());
  out.witness.k = k;
  for (std::size_t i = 0; i < model.sets.size(); ++i) {
    const long copies = result.solution[i].get_num().get_si();
    for (long c = 0; c < copies; ++c) out.witness.images.push_back(model.sets[i]);
  }
  return out;
}

namespace {

FractionalWitness fractional_connected(const Hypergraph& h, const SolverOptions& options) {
  const auto model = detail::build_subset_model(h);
  const auto program = build_program(model, h.num_edges(), Rational(1), false, 1);
  const auto result = lp::solve_milp(program.model, options.milp);
  if (result.status != lp::Status::optimal) {
    throw std::logic_error("normalised embedding program reported " + std::string(lp::status_name(result.status)));
  }
  FractionalWitness w;
  w.w_star = result.value;
  w.emb = 1 / w.w_star;
  w.K = 1;
  w.nodes = result.nodes;
  for (std::size_t i = 0; i < model.sets.size(); ++i) {
    const Rational& x = result.solution[i];
    if (sgn(x) == 0) continue;
    w.weights.emplace_back(model.sets[i], x);
    mpz_lcm(w.K.get_mpz_t(), w.K.get_mpz_t(), x.get_den_mpz_t());
  }
  return w;
}

}  // namespace

FractionalWitness emb_fractional(const Hypergraph& h, const SolverOptions& options) {
  if (h.num_vertices() == 0) throw InputError("hypergraph has no vertices");
  const auto components = connected_components(h);
  if (components.size() == 1) {
    auto w = fractional_connected(h, options);
    w.component = h.vertices();
    return w;
  }
  FractionalWitness best;
  bool have = false;
  std::size_t nodes = 0;
  for (const VertexSet comp : components) {
    auto w = fractional_connected(restrict_to(h, comp), options);
    nodes += w.nodes;
    if (have && w.emb <= best.emb) continue;
    // Map the component-local sets back to the original indices.
    const auto members = comp.members();
    for (auto& [s, x] : w.weights) {
      VertexSet mapped;
      for_each_vertex(s, [&](int v) { mapped.insert(members[static_cast<std::size_t>(v)]); });
      s = mapped;
    }
    std::sort(w.weights.begin(), w.weights.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    w.component = comp;
    best = std::move(w);
    have = true;
  }
  best.disconnected = true;
  best.nodes = nodes;
  return best;
}

Embedding embedding_from_weights(const FractionalWitness& w) {
  Embedding e;
  e.k = static_cast<int>(w.K.get_si());
  for (const auto& [s, x] : w.weights) {
    const Rational copies = x * Rational(w.K);
    for (long c = 0; c < copies.get_num().get_si(); ++c) e.images.push_back(s);
  }
  return e;
}

std::vector<std::pair<int, Rational>> emb_k_curve(const Hypergraph& h, int k_max, const SolverOptions& options) {
  check_k(k_max);
  std::vector<std::pair<int, Rational>> out;
  for (int k = 1; k <= k_max; ++k) {
    const int wed = min_wed_ilp(h, k, options).wed;
    Rational r(k, wed);
    r.canonicalize();
    out.emplace_back(k, r);
  }
  return out;
}

Embedding parse_embedding(const Hypergraph& h, std::string_view input) {
  Embedding e;
  std::vector<bool> seen;
  for (const auto& line : text::logical_lines(input)) {
    std::string_view key, rest;
    if (!text::split_key(line.content, key, rest)) text::fail(line.number, "expected 'key: values'");
    const auto tokens = text::split_ws(rest);
    if (key == "k") {
      if (e.k != 0) text::fail(line.number, "duplicate 'k' line");
      if (tokens.size() != 1) text::fail(line.number, "'k' takes one value");
      const auto k = text::parse_int(tokens[0], line.number);
      if (k < 1 || k > 1'000'000) text::fail(line.number, "k out of range");
      e.k = static_cast<int>(k);
      e.images.assign(static_cast<std::size_t>(e.k), VertexSet{});
      seen.assign(static_cast<std::size_t>(e.k), false);
      continue;
    }
    const auto head = text::split_ws(key);
    if (head.size() != 2 || head[0] != "map") text::fail(line.number, "unknown key '" + std::string(key) + "'");
    if (e.k == 0) text::fail(line.number, "'map' before 'k'");
    const auto i = text::parse_int(head[1], line.number);
    if (i < 1 || i > e.k) text::fail(line.number, "clique vertex " + std::string(head[1]) + " outside 1..k");
    const auto idx = static_cast<std::size_t>(i - 1);
    if (seen[idx]) text::fail(line.number, "clique vertex " + std::string(head[1]) + " mapped twice");
    if (tokens.empty()) text::fail(line.number, "empty image");
    seen[idx] = true;
    for (auto t : tokens) {
      const int v = h.find_label(t);
      if (v < 0) text::fail(line.number, "unknown vertex '" + std::string(t) + "'");
      e.images[idx].insert(v);
    }
  }
  if (e.k == 0) throw InputError("missing 'k' line");
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw InputError("clique vertex " + std::to_string(i + 1) + " is not mapped");
  }
  return e;
}

Embedding read_embedding(const Hypergraph& h, const std::string& path) {
  return parse_embedding(h, text::read_file(path));
}

std::string format_embedding(const Hypergraph& h, const Embedding& e) {
  std::ostringstream out;
  out << "k: " << e.k << '\n';
  for (std::size_t i = 0; i < e.images.size(); ++i) {
    out << "map " << i + 1 << ':';
    for_each_vertex(e.images[i], [&](int v) { out << ' ' << h.label(v); });
    out << '\n';
  }
  return out.str();
}

}  // namespace hgemb
