#include "ramsey/perturb.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ramsey/family.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {
namespace {

std::string mask_str(std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (int v = 0; v < 64; ++v) {
    if (!(mask >> v & 1)) continue;
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::string describe(const MonoCopy& mc) {
  std::uint64_t mask = 0;
  for (const int v : mc.embedding.map) mask |= std::uint64_t{1} << v;
  return std::string(mc.color == MonoColor::red ? "red" : "blue") + " copy on " + mask_str(mask);
}

Graph sample_from_stream(int n, std::uint64_t stream, std::uint64_t thr) {
  Graph g(n);
  int index = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++index)
      if (edge_u53(stream, index) < thr) g.add_edge(u, v);
  return g;
}

}  // namespace

const char* to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Built: return "Built";
    case WitnessStatus::NoneFound: return "NoneFound";
    case WitnessStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

PModel PModel::exact(const Rational& value) {
  if (value < Rational(0) || Rational(1) < value)
    throw std::invalid_argument("edge probability must lie in [0,1]");
  PModel m;
  m.value = value;
  return m;
}

PModel PModel::power(const Rational& coeff, const Rational& expo) {
  if (coeff < Rational(0)) throw std::invalid_argument("probability coefficient must be >= 0");
  PModel m;
  m.exponent_form = true;
  m.coeff = coeff;
  m.expo = expo;
  return m;
}

PModel PModel::parse(const std::string& text) {
  const auto caret = text.find("n^");
  if (caret == std::string::npos) return exact(Rational::parse(text));
  const std::string tail = text.substr(caret + 2);
  if (caret == 0) return power(Rational(1), Rational::parse(tail));
  if (text[caret - 1] != '*')
    throw std::invalid_argument("cannot parse probability '" + text + "'");
  return power(Rational::parse(text.substr(0, caret - 1)), Rational::parse(tail));
}

std::uint64_t PModel::threshold(int n) const {
  if (!exponent_form) return dyadic_threshold(value);
  if (n < 1) throw std::invalid_argument("probability n^x needs n >= 1");
  const long double c = static_cast<long double>(coeff.num()) / static_cast<long double>(coeff.den());
  const long double x = static_cast<long double>(expo.num()) / static_cast<long double>(expo.den());
  const long double p = c * std::pow(static_cast<long double>(n), x);
  if (p <= 0.0L) return 0;
  if (p >= 1.0L) return u53_one;
  return static_cast<std::uint64_t>(std::llroundl(p * static_cast<long double>(u53_one)));
}

Rational PModel::effective(int n) const {
  return Rational(static_cast<std::int64_t>(threshold(n)), static_cast<std::int64_t>(u53_one));
}

std::string PModel::str() const {
  if (!exponent_form) return value.str();
  return coeff.str() + "*n^" + expo.str();
}

Graph sample_gnp(int n, const PModel& p, std::uint64_t seed) {
  if (n < 0 || n > Graph::max_vertices) throw std::invalid_argument("sample_gnp: n out of range");
  return sample_from_stream(n, gnp_stream(seed, n, 0), p.threshold(n));
}

Graph perturb(const Graph& base, const Graph& random_part) {
  if (base.vertex_count() != random_part.vertex_count())
    throw std::invalid_argument("perturb: vertex counts differ");
  Graph g = base;
  for (const auto& [u, v] : random_part.edges()) g.add_edge(u, v);
  return g;
}

WitnessOutcome lower_bound_witness_31(int n, int k, const Graph& K, const Graph& H,
                                      const Graph& G, const PModel& p, std::uint64_t seed,
                                      const ArrowOptions& opts) {
  if (k < 1) throw std::invalid_argument("witness construction needs k >= 1");
  const Graph gamma = build_balanced_kpartite(n, k);
  const Graph host = perturb(gamma, sample_gnp(n, p, seed));

  Graph inside(n);
  for (const auto& [u, v] : host.edges())
    if (!gamma.has_edge(u, v)) inside.add_edge(u, v);

  WitnessOutcome out;
  std::vector<std::uint8_t> inside_red(static_cast<std::size_t>(inside.edge_count()), 0);
  if (inside.edge_count() > 0) {
    const ArrowResult ar = search_arrow(inside, K, H, opts);
    if (ar.verdict == ArrowVerdict::Unknown) {
      out.status = WitnessStatus::Unknown;
      out.note = "good-coloring search ran out of budget";
      return out;
    }
    if (ar.verdict == ArrowVerdict::Ramsey) {
      out.status = WitnessStatus::NoneFound;
      out.note = "every coloring of the sampled inside-part edges has a red copy or a blue copy";
      return out;
    }
    inside_red = ar.good_red;
  }

  const EdgeColoring inside_col(inside, inside_red);
  EdgeColoring col(host);
  {
    int j = 0;
    const auto& ie = inside_col.edges();
    for (int i = 0; i < col.edge_count(); ++i) {
      const auto& e = col.edges()[static_cast<std::size_t>(i)];
      if (j < inside_col.edge_count() && ie[static_cast<std::size_t>(j)] == e) {
        col.set_red(i, inside_col.red(j));
        ++j;
      }
    }
  }

  const MonoCopy mc = find_mono_copy(col, K, G);
  ColoredWitness w{host, col,
                   "k-partition lower bound, k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                       ", p=" + p.str(),
                   mc.status == SearchStatus::NotFound,
                   mc.status == SearchStatus::Found ? describe(mc) : std::string{}};
  out.status = mc.status == SearchStatus::Unknown ? WitnessStatus::Unknown : WitnessStatus::Built;
  if (mc.status == SearchStatus::Unknown) out.note = "verification ran out of budget";
  out.witness = std::move(w);
  return out;
}

WitnessOutcome lower_bound_witness_32(int n, int k, const Graph& K, const Graph& G,
                                      const PModel& p, std::uint64_t seed, std::uint64_t budget) {
  if (k < 2) throw std::invalid_argument("witness construction needs k >= 2");
  const Graph gamma = build_balanced_kpartite(n, k - 1);
  const Graph host = perturb(gamma, sample_gnp(n, p, seed));

  EdgeColoring col(host);
  for (int i = 0; i < col.edge_count(); ++i) {
    const auto& e = col.edges()[static_cast<std::size_t>(i)];
    if (!gamma.has_edge(e.first, e.second)) col.set_red(i, true);
  }

  const MonoCopy mc = find_mono_copy(col, K, G, budget);
  WitnessOutcome out;
  ColoredWitness w{host, col,
                   "(k-1)-partite lower bound, k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                       ", p=" + p.str(),
                   mc.status == SearchStatus::NotFound,
                   mc.status == SearchStatus::Found ? describe(mc) : std::string{}};
  out.status = mc.status == SearchStatus::Unknown ? WitnessStatus::Unknown : WitnessStatus::Built;
  if (mc.status == SearchStatus::Unknown) out.note = "verification ran out of budget";
  out.witness = std::move(w);
  return out;
}

SimResult run_experiment(const SimConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.ns.empty()) throw std::invalid_argument("no n values");
  if (cfg.ps.empty()) throw std::invalid_argument("no p values");

  const Graph red = build(GraphSpec::parse(cfg.red_spec));
  const Graph blue = build(GraphSpec::parse(cfg.blue_spec));
  ArrowOptions opts;
  opts.node_budget = cfg.node_budget;

  SimResult out;
  out.note =
      "finite-scale probe: empirical curves and concrete witnesses only, no asymptotic claims";

  const std::size_t np = cfg.ps.size();
  for (const int n : cfg.ns) {
    const Graph base = build(GraphSpec::parse(substitute_n(cfg.base_spec, n)));
    if (base.vertex_count() != n)
      throw std::invalid_argument("base spec builds " + std::to_string(base.vertex_count()) +
                                  " vertices for cell n = " + std::to_string(n));

    std::vector<std::uint64_t> thr(np);
    for (std::size_t i = 0; i < np; ++i) thr[i] = cfg.ps[i].threshold(n);
    std::vector<std::size_t> order(np);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return thr[a] < thr[b]; });

    std::vector<CellResult> cells(np);
    for (std::size_t i = 0; i < np; ++i) {
      cells[i].n = n;
      cells[i].p_text = cfg.ps[i].str();
      cells[i].p_effective = cfg.ps[i].effective(n);
      cells[i].trials = cfg.trials;
      cells[i].verdicts.resize(static_cast<std::size_t>(cfg.trials), ArrowVerdict::Unknown);
    }

    const int m = n * (n - 1) / 2;
    std::vector<std::uint64_t> u(static_cast<std::size_t>(m));
    for (int t = 0; t < cfg.trials; ++t) {
      const std::uint64_t stream = gnp_stream(cfg.seed, n, t);
      for (int e = 0; e < m; ++e) u[static_cast<std::size_t>(e)] = edge_u53(stream, e);

      int last_decided = -1;  // monotone in the threshold sweep
      for (std::size_t oi = 0; oi < np; ++oi) {
        const std::size_t pi = order[oi];
        ArrowVerdict verdict;
        if (oi > 0 && thr[order[oi - 1]] == thr[pi]) {
          verdict = cells[order[oi - 1]].verdicts[static_cast<std::size_t>(t)];
        } else {
          Graph host = base;
          int index = 0;
          for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++index)
              if (u[static_cast<std::size_t>(index)] < thr[pi]) host.add_edge(a, b);
          verdict = search_arrow(host, red, blue, opts).verdict;
        }
        cells[pi].verdicts[static_cast<std::size_t>(t)] = verdict;
        if (verdict == ArrowVerdict::Ramsey) cells[pi].ramsey += 1;
        else if (verdict == ArrowVerdict::NotRamsey) cells[pi].notramsey += 1;
        else cells[pi].unknown += 1;
        if (verdict != ArrowVerdict::Unknown) {
          const int d = verdict == ArrowVerdict::Ramsey ? 1 : 0;
          assert(d >= last_decided);
          last_decided = d;
        }
      }
    }
    for (std::size_t i = 0; i < np; ++i) out.cells.push_back(std::move(cells[i]));
  }
  return out;
}

Wilson wilson95(int successes, int total) {
  Wilson w;
  if (total <= 0) return w;
  const double z = 1.96;
  const double nn = total;
  const double ph = static_cast<double>(successes) / nn;
  const double denom = 1.0 + z * z / nn;
  const double center = (ph + z * z / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / nn + z * z / (4.0 * nn * nn)) / denom;
  w.low = std::max(0.0, center - half);
  w.high = std::min(1.0, center + half);
  return w;
}

std::string substitute_n(const std::string& spec_text, int n) {
  std::string out, token, prev;
  const auto flush = [&](char sep) {
    if (token == "n" && prev != "g6") out += std::to_string(n);
    else out += token;
    prev = token;
    token.clear();
    if (sep != 0) out += sep;
  };
  for (const char c : spec_text) {
    if (c == ':' || c == ',' || c == ';' || c == '+') flush(c);
    else token += c;
  }
  flush(0);
  return out;
}

}  // namespace ramsey
