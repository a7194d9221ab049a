#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "common/text.hpp"
#include "hgemb/embedding.hpp"
#include "hgemb/engine.hpp"
#include "hgemb/errors.hpp"
#include "hgemb/families.hpp"
#include "hgemb/reduce.hpp"
#include "hgemb/widths.hpp"
#include "repro.hpp"

namespace hgemb::cli {

using nlohmann::json;

namespace {

// Raised for a domain-level failure that is not an exception elsewhere
// (an invalid embedding handed to verify, a FAIL in repro).
struct DomainFailure {};

struct Globals {
  bool json = false;
  std::uint64_t budget = BruteForceOptions{}.budget;
  int max_n = kMaxTriangulationVertices;
  int threads = 1;
  std::size_t max_nodes = lp::MilpOptions{}.max_nodes;
};

struct Target {
  std::string family;
  std::vector<int> params;
  std::string path;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--family", family, "built-in family name");
    cmd->add_option("--param", params, "family parameter (repeatable)");
    auto* p = cmd->add_option("--hypergraph", path, "hypergraph file")->check(CLI::ExistingFile);
    f->excludes(p);
  }

  Hypergraph load() const {
    if (!family.empty()) return families::by_name(family, params);
    if (!path.empty()) return read_hypergraph(path);
    throw CLI::ValidationError("one of --family or --hypergraph is required");
  }
};

json set_names(const Hypergraph& h, VertexSet s) {
  json out = json::array();
  for_each_vertex(s, [&](int v) { out.push_back(h.label(v)); });
  return out;
}

SolverOptions solver_options(const Globals& g) {
  SolverOptions o;
  o.milp.max_nodes = g.max_nodes;
  return o;
}

json embedding_json(const Hypergraph& h, const Embedding& e) {
  json images = json::array();
  for (const auto& s : e.images) images.push_back(set_names(h, s));
  return json{{"k", e.k}, {"images", images}};
}

void cmd_emb(const Globals& g, const Target& t, const std::string& witness_out, json& j, std::ostream& text) {
  const Hypergraph h = t.load();
  const auto w = emb_fractional(h, solver_options(g));
  text << "emb = " << to_string(w.emb) << ", K = " << to_string(w.K) << "\n";
  text << "w* = " << to_string(w.w_star) << "\n";
  if (w.disconnected) text << "component: " << h.describe(w.component) << "\n";
  json weights = json::array();
  for (const auto& [s, x] : w.weights) {
    text << "weight " << h.describe(s) << ": " << to_string(x) << "\n";
    weights.push_back({{"set", set_names(h, s)}, {"weight", to_string(x)}});
  }
  j = {{"emb", to_string(w.emb)}, {"K", to_string(w.K)}, {"w_star", to_string(w.w_star)},
       {"weights", weights},        {"nodes", w.nodes},       {"disconnected", w.disconnected}};
  if (!witness_out.empty()) text::write_file(witness_out, format_embedding(h, embedding_from_weights(w)));
}

void cmd_embk(const Globals& g, const Target& t, int k, const std::string& method, const std::string& witness_out,
              json& j, std::ostream& text) {
  const Hypergraph h = t.load();
  const WedResult r = method == "bruteforce" ? min_wed_bruteforce(h, k, BruteForceOptions{g.budget})
                                             : min_wed_ilp(h, k, solver_options(g));
  const Rational ratio = make_rational(k, r.wed);
  text << "k = " << k << ", wed = " << r.wed << ", k/wed = " << to_string(ratio) << "\n";
  text << format_embedding(h, r.witness);
  j = {{"k", k}, {"wed", r.wed}, {"ratio", to_string(ratio)}, {"method", method},
       {"witness", embedding_json(h, r.witness)}};
  if (!witness_out.empty()) text::write_file(witness_out, format_embedding(h, r.witness));
}

void cmd_verify(const Target& t, const std::string& embedding_path, json& j, std::ostream& text) {
  const Hypergraph h = t.load();
  const Embedding e = read_embedding(h, embedding_path);
  const auto r = is_valid_embedding(h, e);
  text << "valid: " << (r.valid ? "yes" : "no") << "\n";
  text << "k = " << e.k << ", wed = " << r.wed << ", ed = " << r.ed << "\n";
  json edges = json::array();
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    text << "edge " << h.describe(h.edge(i)) << ": d = " << r.edge_weak_depths[i] << ", d+ = " << r.edge_depths[i]
         << "\n";
    edges.push_back({{"edge", set_names(h, h.edge(i))},
                     {"weak_depth", r.edge_weak_depths[i]},
                     {"depth", r.edge_depths[i]}});
  }
  for (const auto& v : r.violations) text << "violation: " << v << "\n";
  j = {{"valid", r.valid}, {"k", e.k},           {"wed", r.wed},
       {"ed", r.ed},       {"vertex_depths", r.vertex_depths}, {"edges", edges},
       {"violations", r.violations}};
  if (!r.valid) throw DomainFailure{};
}

struct WidthFlags {
  bool fhw = false, chordal = false, acyclic = false, proper = false;
  std::string function_path;
  bool hyper_boat_function = false;
  std::string common_bag;
};

void cmd_widths(const Globals& g, const Target& t, WidthFlags f, json& j, std::ostream& text) {
  const Hypergraph h = t.load();
  if (!f.fhw && !f.chordal && !f.acyclic && !f.proper && f.function_path.empty() && !f.hyper_boat_function &&
      f.common_bag.empty()) {
    f.fhw = f.chordal = f.acyclic = true;
  }
  j = json::object();
  if (f.acyclic) {
    const bool a = is_acyclic(h);
    text << "acyclic: " << (a ? "yes" : "no") << "\n";
    j["acyclic"] = a;
  }
  if (f.chordal) {
    const bool c = is_chordal(h);
    text << "chordal: " << (c ? "yes" : "no") << "\n";
    j["chordal"] = c;
  }
  if (f.fhw) {
    const Rational w = fhw(h, g.max_n);
    text << "fhw = " << to_string(w) << "\n";
    j["fhw"] = to_string(w);
  }
  if (f.proper) {
    json all = json::array();
    for (const auto& bags : proper_tree_decompositions(h, g.max_n)) {
      json one = json::array();
      text << "decomposition:";
      for (const auto& b : bags) {
        text << ' ' << h.describe(b);
        one.push_back(set_names(h, b));
      }
      text << "\n";
      all.push_back(one);
    }
    j["proper_decompositions"] = all;
  }
  if (!f.function_path.empty() || f.hyper_boat_function) {
    if (f.hyper_boat_function && !(h == families::hyper_boat())) {
      throw InputError("--hyper-boat-function needs the hyper-boat hypergraph");
    }
    const SetFunction fn = f.hyper_boat_function ? hyper_boat_width_function() : read_set_function(h, f.function_path);
    const auto cert = certify_set_function(h, fn);
    text << "set function: zero at empty " << (cert.zero_at_empty ? "yes" : "no") << ", monotone "
         << (cert.monotone ? "yes" : "no") << ", submodular " << (cert.submodular ? "yes" : "no")
         << ", edge-dominated " << (cert.edge_dominated ? "yes" : "no") << "\n";
    j["certificate"] = {{"zero_at_empty", cert.zero_at_empty},
                        {"monotone", cert.monotone},
                        {"submodular", cert.submodular},
                        {"edge_dominated", cert.edge_dominated}};
    if (!cert.all()) throw DomainFailure{};
    const Rational lb = width_lower_bound(h, fn, g.max_n);
    text << "width lower bound = " << to_string(lb) << "\n";
    j["width_lower_bound"] = to_string(lb);
  }
  if (!f.common_bag.empty()) {
    const Embedding e = read_embedding(h, f.common_bag);
    const bool c = common_bag_check(h, e, g.max_n);
    text << "common bag in every proper decomposition: " << (c ? "yes" : "no") << "\n";
    j["common_bag"] = c;
    if (!c) throw DomainFailure{};
  }
}

void cmd_reduce(const Target& t, const std::string& embedding_path, const std::string& graph_path,
                const std::string& semiring, const std::string& out_path, std::string sidecar, json& j,
                std::ostream& text) {
  const Hypergraph h = t.load();
  const Embedding e = read_embedding(h, embedding_path);
  const auto& s = engine::semiring_by_name(semiring);
  const auto g = engine::read_graph(graph_path, s);
  const auto lift = reduce::kpartite_lift(g, e.k, reduce::LiftMode::canonical);
  const auto r = reduce::build_instance(h, e, lift, s);
  text::write_file(out_path, engine::format_instance(r.instance, s));
  if (sidecar.empty()) sidecar = out_path + ".theta";
  text::write_file(sidecar, reduce::format_sidecar(h, r));
  text << "instance: " << out_path << " (" << r.instance.size() << " tuples, lambda = " << r.lambda << ")\n";
  text << "sidecar: " << sidecar << "\n";
  j = {{"instance", out_path}, {"sidecar", sidecar}, {"tuples", r.instance.size()}, {"lambda", r.lambda},
       {"k", r.k},              {"n", r.n}};
}

void cmd_eval(const std::string& path, const std::string& semiring, bool acyclic, const std::string& heavy_light,
              json& j, std::ostream& text) {
  engine::SumProdInstance inst = engine::read_instance(path);
  if (!semiring.empty()) inst.semiring = semiring;
  const auto& s = engine::semiring_by_name(inst.semiring);
  if (!heavy_light.empty()) {
    if (s.name() != "boolean") throw InputError("the heavy-light split is for the boolean semiring");
    const auto eps = parse_rational(heavy_light);
    const auto r = engine::solve_boat_heavy_light(
        inst, eps, [](const engine::SumProdInstance& q) { return engine::eval_bruteforce(q, engine::boolean()); });
    text << "value = " << s.format(r.answer) << "\n";
    text << "delta = " << r.delta << ", heavy x1 = " << r.heavy_x1 << ", heavy x8 = " << r.heavy_x8
         << ", left = " << r.left_table << ", right = " << r.right_table << "\n";
    j = {{"value", s.format(r.answer)}, {"delta", r.delta},       {"heavy_x1", r.heavy_x1},
         {"heavy_x8", r.heavy_x8},      {"left", r.left_table}, {"right", r.right_table},
         {"used_oracle", r.used_oracle}};
    return;
  }
  const engine::Value v = acyclic ? engine::eval_acyclic(inst, s) : engine::eval_bruteforce(inst, s);
  text << "value = " << s.format(v) << "\n";
  j = {{"value", s.format(v)}, {"semiring", std::string(s.name())}, {"tuples", inst.size()}};
}

void cmd_family(const std::string& name, const std::vector<int>& params, const std::string& out_path,
                const std::string& witness_out, json& j, std::ostream& text) {
  const Hypergraph h = families::by_name(name, params);
  const std::string body = format_hypergraph(h);
  if (out_path.empty()) {
    text << body;
  } else {
    text::write_file(out_path, body);
  }
  j = {{"vertices", h.labels()}, {"edges", json::array()}};
  for (const auto& e : h.edges()) j["edges"].push_back(set_names(h, e));
  if (!witness_out.empty()) {
    const auto w = families::witness(name, params);
    text::write_file(witness_out, format_embedding(w.h, w.e));
    j["witness"] = embedding_json(w.h, w.e);
    j["witness_wed"] = w.wed;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique embeddings, widths and sum-of-products queries over hypergraphs", "hgemb"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--budget", g.budget, "brute-force candidate limit")->check(CLI::PositiveNumber);
  app.add_option("--max-n", g.max_n, "vertex limit for triangulation enumeration")->check(CLI::Range(1, 20));
  app.add_option("--max-nodes", g.max_nodes, "branch-and-bound node limit")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads (all modules currently run on one)")
      ->check(CLI::PositiveNumber);

  Target target;
  std::string witness_out, embedding_path, graph_path, semiring, out_path, sidecar, instance_path, method = "ilp",
                                                                                   heavy_light, what;
  int k = 0;
  bool acyclic = false;
  WidthFlags wf;
  std::vector<int> family_params;

  auto* emb = app.add_subcommand("emb", "clique embedding power");
  target.attach(emb);
  emb->add_option("--witness", witness_out, "write the K-clique witness embedding here");

  auto* embk = app.add_subcommand("embk", "minimum weak edge depth for a fixed clique size");
  target.attach(embk);
  embk->add_option("--k", k, "clique size")->required()->check(CLI::PositiveNumber);
  embk->add_option("--method", method, "ilp or bruteforce")->check(CLI::IsMember({"ilp", "bruteforce"}));
  embk->add_option("--witness", witness_out, "write the optimal embedding here");

  auto* verify = app.add_subcommand("verify", "check an embedding and report its depths");
  target.attach(verify);
  verify->add_option("--embedding", embedding_path, "embedding file")->required()->check(CLI::ExistingFile);

  auto* widths = app.add_subcommand("widths", "acyclicity, chordality, fhw and set-function bounds");
  target.attach(widths);
  widths->add_flag("--fhw", wf.fhw, "fractional hypertree width");
  widths->add_flag("--chordal", wf.chordal, "chordality of the clique graph");
  widths->add_flag("--acyclic", wf.acyclic, "alpha-acyclicity");
  widths->add_flag("--proper-tds", wf.proper, "list proper tree decompositions");
  widths->add_option("--set-function", wf.function_path, "certify a set function and take its width")
      ->check(CLI::ExistingFile);
  widths->add_flag("--hyper-boat-function", wf.hyper_boat_function, "use the built-in hyper-boat function");
  widths->add_option("--common-bag", wf.common_bag, "embedding whose images must share a bag")
      ->check(CLI::ExistingFile);

  auto* red = app.add_subcommand("reduce", "compile a k-clique instance into a query instance");
  target.attach(red);
  red->add_option("--embedding", embedding_path, "embedding file")->required()->check(CLI::ExistingFile);
  red->add_option("--graph", graph_path, "graph file")->required()->check(CLI::ExistingFile);
  red->add_option("--semiring", semiring, "semiring")
      ->required()
      ->check(CLI::IsMember({"boolean", "counting", "tropical", "max_times"}));
  red->add_option("-o,--output", out_path, "instance output file")->required();
  red->add_option("--sidecar", sidecar, "theta and partition map (default: OUTPUT.theta)");

  auto* eval = app.add_subcommand("eval", "evaluate a query instance");
  eval->add_option("--instance", instance_path, "instance file")->required()->check(CLI::ExistingFile);
  eval->add_option("--semiring", semiring, "override the file's semiring")
      ->check(CLI::IsMember({"boolean", "counting", "tropical", "max_times"}));
  eval->add_flag("--acyclic", acyclic, "use join-tree message passing");
  eval->add_option("--heavy-light", heavy_light, "boat query only: split at degree m^EPS (EPS as p/q)");

  auto* fam = app.add_subcommand("family", "write a built-in hypergraph");
  std::string family_name;
  fam->add_option("name", family_name, "family name")->required();
  fam->add_option("params", family_params, "family parameters");
  fam->add_option("-o,--output", out_path, "output file (default: stdout)");
  fam->add_option("--witness", witness_out, "also write the family's witness embedding");

  auto* repro = app.add_subcommand("repro", "reproduce the reference tables");
  repro->add_option("what", what, "table1, boat or curve6")
      ->required()
      ->check(CLI::IsMember({"table1", "boat", "curve6"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  json j;
  std::ostringstream text;
  bool ok = true;
  try {
    if (*emb) cmd_emb(g, target, witness_out, j, text);
    if (*embk) cmd_embk(g, target, k, method, witness_out, j, text);
    if (*verify) cmd_verify(target, embedding_path, j, text);
    if (*widths) cmd_widths(g, target, wf, j, text);
    if (*red) cmd_reduce(target, embedding_path, graph_path, semiring, out_path, sidecar, j, text);
    if (*eval) cmd_eval(instance_path, semiring, acyclic, heavy_light, j, text);
    if (*fam) cmd_family(family_name, family_params, out_path, witness_out, j, text);
    if (*repro) {
      const auto options = solver_options(g);
      if (what == "table1") j = repro_reference(text, options, g.max_n, ok);
      if (what == "boat") j = repro_boat(text, options, g.max_n, ok);
      if (what == "curve6") j = repro_curve6(text, options, g.budget, ok);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainFailure&) {
    ok = false;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 1;
  }
  if (g.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return ok ? 0 : 1;
}

}  // namespace hgemb::cli
