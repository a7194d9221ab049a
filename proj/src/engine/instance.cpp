#include <algorithm>
#include <set>
#include <sstream>

#include "common/text.hpp"
#include "hgemb/engine.hpp"
#include "hgemb/errors.hpp"

namespace hgemb::engine {

std::size_t SumProdInstance::size() const {
  std::size_t total = 0;
  for (const auto& f : factors) total += f.entries.size();
  return total;
}

void validate(const SumProdInstance& inst, const Semiring& s) {
  const auto& h = inst.h;
  if (inst.domains.size() != static_cast<std::size_t>(h.num_vertices())) {
    throw InputError("instance has " + std::to_string(inst.domains.size()) + " domains for " +
                     std::to_string(h.num_vertices()) + " vertices");
  }
  if (inst.factors.size() != h.num_edges()) throw InputError("instance needs one factor per edge");
  std::vector<std::set<std::int64_t>> domain_sets;
  for (const auto& d : inst.domains) domain_sets.emplace_back(d.begin(), d.end());
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto vars = h.edge(e).members();
    std::set<Tuple> seen;
    for (const auto& [tuple, value] : inst.factors[e].entries) {
      const std::string where = "factor on " + h.describe(h.edge(e));
      if (tuple.size() != vars.size()) throw InputError(where + ": tuple of wrong arity");
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!domain_sets[static_cast<std::size_t>(vars[i])].count(tuple[i])) {
          throw InputError(where + ": value " + std::to_string(tuple[i]) + " outside the domain of " + h.label(vars[i]));
        }
      }
      if (!seen.insert(tuple).second) throw InputError(where + ": duplicate tuple");
      if (!s.contains(value)) throw InputError(where + ": value outside the " + std::string(s.name()) + " semiring");
      if (s.equal(value, s.zero())) throw InputError(where + ": stored zero value");
    }
  }
}

namespace {

// "(0,1)=3" -> tuple and optional value text.
void parse_entry(std::string_view token, int line, Tuple& tuple, std::string_view& value) {
  if (token.empty() || token.front() != '(') text::fail(line, "expected '(' in '" + std::string(token) + "'");
  const auto close = token.find(')');
  if (close == std::string_view::npos) text::fail(line, "missing ')' in '" + std::string(token) + "'");
  std::string_view inner = token.substr(1, close - 1);
  tuple.clear();
  while (true) {
    const auto comma = inner.find(',');
    tuple.push_back(text::parse_int(text::trim(inner.substr(0, comma)), line));
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  std::string_view rest = token.substr(close + 1);
  if (rest.empty()) {
    value = {};
  } else if (rest.front() == '=' && rest.size() > 1) {
    value = rest.substr(1);
  } else {
    text::fail(line, "expected '=value' after tuple in '" + std::string(token) + "'");
  }
}

}  // namespace

SumProdInstance parse_instance(std::string_view input) {
  const auto lines = text::logical_lines(input);
  std::string semiring_name = "boolean";
  bool have_semiring = false;
  for (const auto& line : lines) {
    std::string_view key, rest;
    if (text::split_key(line.content, key, rest) && key == "semiring") {
      if (have_semiring) text::fail(line.number, "duplicate 'semiring' line");
      have_semiring = true;
      semiring_name = std::string(rest);
    }
  }
  const Semiring& s = semiring_by_name(semiring_name);

  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> domains;
  std::vector<VertexSet> edges;
  std::vector<Factor> factors;
  for (const auto& line : lines) {
    std::string_view key, rest;
    if (!text::split_key(line.content, key, rest)) text::fail(line.number, "expected 'key: values'");
    if (key == "semiring") continue;
    const auto head = text::split_ws(key);
    if (head.size() == 2 && head[0] == "domain") {
      if (!factors.empty()) text::fail(line.number, "'domain' after 'factor'");
      if (std::find(names.begin(), names.end(), head[1]) != names.end()) {
        text::fail(line.number, "duplicate domain for '" + std::string(head[1]) + "'");
      }
      names.emplace_back(head[1]);
      auto& dom = domains.emplace_back();
      for (auto t : text::split_ws(rest)) dom.push_back(text::parse_int(t, line.number));
      if (static_cast<int>(names.size()) > kMaxVertices) text::fail(line.number, "too many variables");
      continue;
    }
    if (key.substr(0, 6) != "factor") text::fail(line.number, "unknown key '" + std::string(key) + "'");
    const auto open = key.find("edge(");
    const auto close = key.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
      text::fail(line.number, "expected 'factor edge(v1 v2 ...)'");
    }
    std::vector<int> listed;
    VertexSet e;
    for (auto t : text::split_ws(key.substr(open + 5, close - open - 5))) {
      const auto it = std::find(names.begin(), names.end(), t);
      if (it == names.end()) text::fail(line.number, "unknown variable '" + std::string(t) + "'");
      const int v = static_cast<int>(it - names.begin());
      if (e.contains(v)) text::fail(line.number, "variable '" + std::string(t) + "' repeated in edge");
      e.insert(v);
      listed.push_back(v);
    }
    if (listed.empty()) text::fail(line.number, "empty edge");
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) text::fail(line.number, "duplicate edge");
    // Position of each listed variable in increasing-index order.
    std::vector<int> sorted = listed;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> slot(listed.size());
    for (std::size_t i = 0; i < listed.size(); ++i) {
      slot[i] = static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), listed[i]) - sorted.begin());
    }
    Factor f;
    Tuple raw, ordered(listed.size());
    std::string_view value_text;
    for (auto t : text::split_ws(rest)) {
      parse_entry(t, line.number, raw, value_text);
      if (raw.size() != listed.size()) text::fail(line.number, "tuple arity does not match the edge");
      for (std::size_t i = 0; i < raw.size(); ++i) ordered[slot[i]] = raw[i];
      Value v = s.one();
      if (!value_text.empty()) {
        try {
          v = s.parse(value_text);
        } catch (const InputError& err) {
          text::fail(line.number, err.what());
        }
      }
      if (s.equal(v, s.zero())) continue;
      f.entries.emplace_back(ordered, v);
    }
    edges.push_back(e);
    factors.push_back(std::move(f));
  }
  const int n = static_cast<int>(names.size());
  SumProdInstance inst{Hypergraph(n, std::move(edges), std::move(names)),
                       std::move(domains), std::move(factors), semiring_name};
  validate(inst, s);
  return inst;
}

SumProdInstance read_instance(const std::string& path) { return parse_instance(text::read_file(path)); }

std::string format_instance(const SumProdInstance& inst, const Semiring& s) {
  std::ostringstream out;
  out << "semiring: " << s.name() << '\n';
  for (int v = 0; v < inst.h.num_vertices(); ++v) {
    out << "domain " << inst.h.label(v) << ':';
    for (auto d : inst.domains[static_cast<std::size_t>(v)]) out << ' ' << d;
    out << '\n';
  }
  for (std::size_t e = 0; e < inst.h.num_edges(); ++e) {
    out << "factor edge(";
    bool first = true;
    for_each_vertex(inst.h.edge(e), [&](int v) {
      out << (first ? "" : " ") << inst.h.label(v);
      first = false;
    });
    out << "):";
    for (const auto& [tuple, value] : inst.factors[e].entries) {
      out << " (";
      for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? "," : "") << tuple[i];
      out << ")=" << s.format(value);
    }
    out << '\n';
  }
  return out.str();
}

void WeightedGraph::set(int u, int v, Value w) {
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("graph vertex out of range");
  weights[{std::min(u, v), std::max(u, v)}] = w;
}

const Value* WeightedGraph::find(int u, int v) const {
  const auto it = weights.find({std::min(u, v), std::max(u, v)});
  return it == weights.end() ? nullptr : &it->second;
}

WeightedGraph parse_graph(std::string_view input, const Semiring& s) {
  WeightedGraph g;
  bool have_n = false;
  for (const auto& line : text::logical_lines(input)) {
    std::string_view key, rest;
    if (text::split_key(line.content, key, rest)) {
      if (key != "n") text::fail(line.number, "unknown key '" + std::string(key) + "'");
      if (have_n) text::fail(line.number, "duplicate 'n' line");
      const auto n = text::parse_int(rest, line.number);
      if (n < 0 || n > 1'000'000) text::fail(line.number, "vertex count out of range");
      g.n = static_cast<int>(n);
      have_n = true;
      continue;
    }
    const auto tokens = text::split_ws(line.content);
    if (tokens.empty() || tokens[0] != "edge" || tokens.size() < 3 || tokens.size() > 4) {
      text::fail(line.number, "expected 'edge u v [weight]'");
    }
    if (!have_n) text::fail(line.number, "'edge' before 'n'");
    const auto u = text::parse_int(tokens[1], line.number);
    const auto v = text::parse_int(tokens[2], line.number);
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) text::fail(line.number, "vertex out of range");
    if (u == v) text::fail(line.number, "self-loop");
    if (g.find(static_cast<int>(u), static_cast<int>(v))) text::fail(line.number, "duplicate edge");
    Value w = s.one();
    if (tokens.size() == 4) {
      try {
        w = s.parse(tokens[3]);
      } catch (const InputError& err) {
        text::fail(line.number, err.what());
      }
    }
    if (s.equal(w, s.zero())) continue;
    g.set(static_cast<int>(u), static_cast<int>(v), w);
  }
  if (!have_n) throw InputError("missing 'n' line");
  return g;
}

WeightedGraph read_graph(const std::string& path, const Semiring& s) { return parse_graph(text::read_file(path), s); }

std::string format_graph(const WeightedGraph& g, const Semiring& s) {
  std::ostringstream out;
  out << "n: " << g.n << '\n';
  for (const auto& [key, w] : g.weights) out << "edge " << key.first << ' ' << key.second << ' ' << s.format(w) << '\n';
  return out.str();
}

}  // namespace hgemb::engine
