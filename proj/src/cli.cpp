#include "ramsey/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/json_io.hpp"

namespace ramsey {
namespace {

using nlohmann::json;

constexpr const char* kGrammar =
    "Graph specs:\n"
    "  complete:7 cycle:5 path:4 star:5    named families, sized\n"
    "  cmp:4,4,4                           complete multipartite\n"
    "  kpartite:3:10                       balanced 3-partite on 10 vertices\n"
    "  cmm:7                               clique minus a maximum matching\n"
    "  starapex:4                          star plus an apex over all of it\n"
    "  treeapex:path,4,0+3                 tree plus an apex on listed vertices\n"
    "  union:cmm:4;cmm:4  join:cmm:4;cmm:4 disjoint union / complete join\n"
    "  g6:D~{  or a bare graph6 string     verbatim graph6\n"
    "\n"
    "Probabilities: exact \"p/q\" or power form \"c*n^x\" with rational c, x\n"
    "(quantized to 2^-53 for sampling). Rationals print as \"p/q\".\n"
    "\n"
    "--config FILE reads a JSON object of long option names; values given on\n"
    "the command line after --config override it.\n";

Graph parse_graph(const std::string& text) {
  try {
    return build(GraphSpec::parse(text));
  } catch (const std::invalid_argument&) {
    const bool g6ish = !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
      return c >= 63 && c <= 126;
    });
    if (g6ish) return parse_graph6(text);
    throw;
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<PModel> parse_p_list(const std::string& text) {
  std::vector<PModel> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(PModel::parse(item));
  if (out.empty()) throw std::invalid_argument("empty probability list");
  return out;
}

// "0,1,2;3,4" -> one mask per ';'-separated group
std::vector<std::uint64_t> parse_mask_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    std::uint64_t mask = 0;
    for (const int v : parse_int_list(group)) {
      if (v < 0 || v >= 64) throw std::invalid_argument("vertex out of range in '" + group + "'");
      mask |= std::uint64_t{1} << v;
    }
    out.push_back(mask);
  }
  return out;
}

std::string config_token(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Expands --config FILE into option tokens at its position.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a file path");
      path = args[i + 1];
      ++i;
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
      continue;
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("malformed config file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (value.is_boolean()) {
        if (value.get<bool>()) out.push_back("--" + key);
        continue;
      }
      std::string token;
      if (value.is_array()) {
        for (const json& item : value) {
          if (!token.empty()) token += ",";
          token += config_token(item);
        }
      } else {
        token = config_token(value);
      }
      out.push_back("--" + key);
      out.push_back(token);
    }
  }
  return out;
}

void take_last_everywhere(CLI::App* app) {
  for (CLI::Option* o : app->get_options())
    o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  for (CLI::App* sub : app->get_subcommands({})) take_last_everywhere(sub);
}

bool any_unknown(const HypothesisReport& r) {
  for (const ConditionReport& c : r.conditions)
    if (c.status == CheckStatus::Unknown) return true;
  return false;
}

std::string registry_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("RAMSEY_REGISTRY")) return env;
  return {};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for Ramsey thresholds of randomly perturbed dense graphs"};
  app.footer(kGrammar);
  app.require_subcommand(0, 1);

  bool verbose = false;
  int threads = 0;
  app.add_flag("--verbose", verbose, "human-readable summary on stderr");
  app.add_option("--threads", threads, "worker thread count (0 = all cores)");

  struct {
    std::string graph, h1, h2, host, red, blue, K, G, H, base;
    std::string d, mu, p = "0", ns, ps, forbid_red, forbid_blue, registry;
    int k = 0, n = 0, trials = 1;
    std::uint64_t seed = 0, budget = 0;
    bool no_prune = false;
  } a;

  CLI::App* c_density = app.add_subcommand("density", "all density functionals of one graph");
  c_density->add_option("--graph", a.graph, "graph spec")->required();

  CLI::App* c_asym = app.add_subcommand("asym-density", "asymmetric 2-density of a graph pair");
  c_asym->add_option("--h1", a.h1, "denser side")->required();
  c_asym->add_option("--h2", a.h2, "sparser side")->required();

  CLI::App* c_balance = app.add_subcommand("balance-check", "balance and strict 2-balance flags");
  c_balance->add_option("--graph", a.graph, "graph spec")->required();

  const auto add_arrow_opts = [&](CLI::App* c) {
    c->add_option("--host", a.host, "host graph")->required();
    c->add_option("--red", a.red, "red pattern")->required();
    c->add_option("--blue", a.blue, "blue pattern")->required();
    c->add_option("--budget", a.budget, "node budget");
    c->add_flag("--no-prune", a.no_prune, "disable symmetry pruning");
  };

  CLI::App* c_arrows = app.add_subcommand("arrows", "does every 2-coloring contain a target?");
  add_arrow_opts(c_arrows);

  CLI::App* c_good = app.add_subcommand("good-coloring", "search a coloring avoiding both targets");
  add_arrow_opts(c_good);

  CLI::App* c_robust = app.add_subcommand("robust-check", "arrows with forbidden copy locations");
  add_arrow_opts(c_robust);
  c_robust->add_option("--forbid-red", a.forbid_red, "vertex sets, e.g. 0,1,2;3,4,5");
  c_robust->add_option("--forbid-blue", a.forbid_blue, "vertex sets");

  CLI::App* c_global = app.add_subcommand("global-check", "arrows on every large vertex subset");
  add_arrow_opts(c_global);
  c_global->add_option("--mu", a.mu, "subset fraction, rational")->required();

  CLI::App* c_v31 = app.add_subcommand("verify-thm31", "k-partition hypothesis report");
  c_v31->add_option("--K", a.K, "red pattern")->required();
  c_v31->add_option("--G", a.G, "dense-side pattern")->required();
  c_v31->add_option("--H", a.H, "partition pattern")->required();
  c_v31->add_option("--k", a.k, "number of parts")->required();
  c_v31->add_option("--registry", a.registry, "assumption registry JSON");

  CLI::App* c_v32 = app.add_subcommand("verify-thm32", "chromatic-route hypothesis report");
  c_v32->add_option("--K", a.K, "red pattern")->required();
  c_v32->add_option("--G", a.G, "dense-side pattern")->required();
  c_v32->add_option("--registry", a.registry, "assumption registry JSON");

  CLI::App* c_thr = app.add_subcommand("threshold", "route (K, G, d) to its exponent");
  c_thr->add_option("--K", a.K, "red pattern")->required();
  c_thr->add_option("--G", a.G, "dense-side pattern")->required();
  c_thr->add_option("--d", a.d, "edge density of the dense part, rational in (0,1)")->required();
  c_thr->add_option("--registry", a.registry, "assumption registry JSON");

  CLI::App* c_w31 = app.add_subcommand("witness31", "k-partite lower-bound coloring");
  c_w31->add_option("--n", a.n, "host order")->required();
  c_w31->add_option("--k", a.k, "parts")->required();
  c_w31->add_option("--K", a.K, "red pattern")->required();
  c_w31->add_option("--H", a.H, "partition pattern")->required();
  c_w31->add_option("--G", a.G, "blue pattern to verify against")->required();
  c_w31->add_option("--p", a.p, "edge probability");
  c_w31->add_option("--seed", a.seed, "sampling seed");
  c_w31->add_option("--budget", a.budget, "node budget");

  CLI::App* c_w32 = app.add_subcommand("witness32", "(k-1)-partite lower-bound coloring");
  c_w32->add_option("--n", a.n, "host order")->required();
  c_w32->add_option("--k", a.k, "chromatic number of G")->required();
  c_w32->add_option("--K", a.K, "red pattern")->required();
  c_w32->add_option("--G", a.G, "blue pattern")->required();
  c_w32->add_option("--p", a.p, "edge probability");
  c_w32->add_option("--seed", a.seed, "sampling seed");
  c_w32->add_option("--budget", a.budget, "node budget");

  CLI::App* c_sim = app.add_subcommand("simulate", "Monte Carlo sweep over an (n, p) grid");
  c_sim->add_option("--base", a.base, "base spec; bare n sizes follow the cell")->required();
  c_sim->add_option("--red", a.red, "red pattern")->required();
  c_sim->add_option("--blue", a.blue, "blue pattern")->required();
  c_sim->add_option("--n", a.ns, "comma-separated host orders")->required();
  c_sim->add_option("--p", a.ps, "comma-separated probabilities")->required();
  c_sim->add_option("--trials", a.trials, "trials per cell");
  c_sim->add_option("--seed", a.seed, "experiment seed");
  c_sim->add_option("--budget", a.budget, "node budget per arrow call");

  CLI::App* c_chrom = app.add_subcommand("chromatic", "exact chromatic number");
  c_chrom->add_option("--graph", a.graph, "graph spec")->required();

  take_last_everywhere(&app);
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  std::reverse(args.begin(), args.end());  // the vector overload consumes back to front
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    for (CLI::App* sub : app.get_subcommands({}))
      if (sub->parsed()) {
        out << sub->help();
        return 0;
      }
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  int rc = 0;
  try {
    ArrowOptions opts;
    if (a.budget > 0) opts.node_budget = a.budget;
    opts.orbit_pruning = !a.no_prune;

    if (app.got_subcommand(c_density)) {
      const Graph g = parse_graph(a.graph);
      const DensityReport m2r = m2(g);
      const DensityReport mr = m_density(g);
      emit(out, density_json(g, m2r, mr, two_density(g), ev_density(g)));
      if (verbose)
        err << "m2 = " << m2r.value.str() << (m2r.strict ? " (strictly 2-balanced)" : "") << "\n";
    } else if (app.got_subcommand(c_asym)) {
      const Graph h1 = parse_graph(a.h1);
      const Graph h2 = parse_graph(a.h2);
      const DensityReport r = asym_density(h1, h2);
      emit(out, asym_json(h1, h2, r));
      if (verbose) err << "m2(h1,h2) = " << r.value.str() << "\n";
    } else if (app.got_subcommand(c_balance)) {
      const Graph g = parse_graph(a.graph);
      emit(out, balance_json(g, is_balanced(g), is_strictly_2_balanced(g)));
    } else if (app.got_subcommand(c_arrows) || app.got_subcommand(c_good)) {
      const Graph host = parse_graph(a.host);
      const ArrowResult r = search_arrow(host, parse_graph(a.red), parse_graph(a.blue), opts);
      if (app.got_subcommand(c_arrows)) {
        emit(out, arrow_json(host, r));
      } else {
        json j{{"schema", "coloring-report/1"},
               {"found", r.verdict == ArrowVerdict::NotRamsey}};
        if (r.verdict == ArrowVerdict::NotRamsey)
          j["certificate"] = certificate_json(host, r.good_red);
        if (r.verdict == ArrowVerdict::Unknown) j["found"] = nullptr;
        emit(out, j);
      }
      if (r.verdict == ArrowVerdict::Unknown) rc = 2;
      if (verbose) err << "nodes visited: " << r.nodes << "\n";
    } else if (app.got_subcommand(c_robust)) {
      const Graph host = parse_graph(a.host);
      RobustQuery q;
      q.forbidden_red = parse_mask_list(a.forbid_red);
      q.forbidden_blue = parse_mask_list(a.forbid_blue);
      const ArrowResult r = robust_arrow(host, parse_graph(a.red), parse_graph(a.blue), q, opts);
      emit(out, arrow_json(host, r));
      if (r.verdict == ArrowVerdict::Unknown) rc = 2;
    } else if (app.got_subcommand(c_global)) {
      const Graph host = parse_graph(a.host);
      const Rational mu = Rational::parse(a.mu);
      const GlobalArrowResult r =
          global_arrow(host, parse_graph(a.red), parse_graph(a.blue), mu, opts);
      emit(out, global_json(host, mu, r));
      if (r.verdict == ArrowVerdict::Unknown) rc = 2;
    } else if (app.got_subcommand(c_v31)) {
      const AssumptionRegistry reg = load_registry(registry_path(a.registry));
      const HypothesisReport r = check_thm31(parse_graph(a.K), parse_graph(a.G),
                                             parse_graph(a.H), a.k, reg);
      emit(out, hypothesis_json(r));
      if (any_unknown(r)) rc = 2;
    } else if (app.got_subcommand(c_v32)) {
      const AssumptionRegistry reg = load_registry(registry_path(a.registry));
      const HypothesisReport r = check_thm32(parse_graph(a.K), parse_graph(a.G), reg);
      emit(out, hypothesis_json(r));
      if (any_unknown(r)) rc = 2;
    } else if (app.got_subcommand(c_thr)) {
      const AssumptionRegistry reg = load_registry(registry_path(a.registry));
      const ThresholdReport r =
          threshold_exponent(parse_graph(a.K), parse_graph(a.G), Rational::parse(a.d), reg);
      emit(out, threshold_json(r));
      if (r.routed && r.hypothesis && any_unknown(*r.hypothesis)) rc = 2;
      if (verbose) {
        if (r.routed) err << "exponent " << r.exponent.str() << " via " << r.source << "\n";
        else err << "no route\n";
      }
    } else if (app.got_subcommand(c_w31)) {
      const WitnessOutcome o =
          lower_bound_witness_31(a.n, a.k, parse_graph(a.K), parse_graph(a.H), parse_graph(a.G),
                                 PModel::parse(a.p), a.seed, opts);
      emit(out, witness_json(o));
      if (o.status == WitnessStatus::Unknown) rc = 2;
    } else if (app.got_subcommand(c_w32)) {
      const WitnessOutcome o =
          lower_bound_witness_32(a.n, a.k, parse_graph(a.K), parse_graph(a.G),
                                 PModel::parse(a.p), a.seed,
                                 a.budget > 0 ? a.budget : default_subgraph_budget);
      emit(out, witness_json(o));
      if (o.status == WitnessStatus::Unknown) rc = 2;
    } else if (app.got_subcommand(c_sim)) {
      SimConfig cfg;
      cfg.base_spec = a.base;
      cfg.red_spec = a.red;
      cfg.blue_spec = a.blue;
      cfg.ns = parse_int_list(a.ns);
      cfg.ps = parse_p_list(a.ps);
      cfg.trials = a.trials;
      cfg.seed = a.seed;
      if (a.budget > 0) cfg.node_budget = a.budget;
      const SimResult r = run_experiment(cfg);
      out << sim_csv(r);
      if (verbose) err << r.cells.size() << " cells done\n";
    } else if (app.got_subcommand(c_chrom)) {
      const Graph g = parse_graph(a.graph);
      const ChromaticResult r = chromatic_number(g);
      emit(out, chromatic_json(g, r));
      if (r.status != SearchStatus::Found) rc = 2;
    } else {
      out << app.help();
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}

}  // namespace ramsey
