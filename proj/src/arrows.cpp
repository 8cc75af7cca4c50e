#include "ramsey/arrows.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>

namespace ramsey {
namespace {

// At or below this many edges the search runs as one DFS; above it, the tree
// is split at a fixed depth into tasks. The split depends only on the edge
// count, never on the thread count, so verdicts and certificates match across
// serial and parallel runs.
constexpr int kSplitThreshold = 16;

// Bron-Kerbosch with lowest-bit pivoting. Deterministic: candidates are taken
// in ascending vertex order, so the same host always yields the same clique.
void largest_clique_rec(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                        std::uint64_t& best) {
  if (p == 0 && x == 0) {
    if (std::popcount(r) > std::popcount(best)) best = r;
    return;
  }
  if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
  const int pivot = std::countr_zero(p | x);
  std::uint64_t cand = p & ~g.neighbors(pivot);
  while (cand) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    const std::uint64_t bit = std::uint64_t{1} << v;
    const std::uint64_t nb = g.neighbors(v);
    largest_clique_rec(g, r | bit, p & nb, x & nb, best);
    p &= ~bit;
    x |= bit;
  }
}

std::uint64_t largest_clique(const Graph& g) {
  std::uint64_t best = 0;
  largest_clique_rec(g, 0, g.vertex_mask(), 0, best);
  return best;
}

bool is_triangle(const Graph& g) { return g.vertex_count() == 3 && g.edge_count() == 3; }

struct Ctx {
  Graph red_g;
  Graph blue_g;
  std::vector<std::int8_t> colors;  // -1 unassigned, 0 blue, 1 red
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  std::vector<std::uint8_t> found;
  bool out_of_budget = false;

  Ctx(int n, int e, std::uint64_t b)
      : red_g(n), blue_g(n), colors(static_cast<std::size_t>(e), -1), budget(b) {}
};

class Engine {
 public:
  Engine(const Graph& host, const Graph& red_p, const Graph& blue_p, const ArrowOptions& opts)
      : host_(host),
        red_p_(red_p),
        blue_p_(blue_p),
        opts_(opts),
        edges_(host.edges()),
        e_(static_cast<int>(edges_.size())),
        n_(host.vertex_count()) {
    if (red_p.edge_count() == 0 || blue_p.edge_count() == 0)
      throw std::invalid_argument("arrow search: both patterns need at least one edge");
    const bool filters = (opts.forbidden_red && !opts.forbidden_red->empty()) ||
                         (opts.forbidden_blue && !opts.forbidden_blue->empty());
    prune_ = opts.orbit_pruning && !filters && n_ >= 3 && is_complete(host_);
    budget_left_ = opts.node_budget;
    // The copy check after each assignment reduces to a common-neighbor mask
    // when the pattern is a triangle and no copies are filtered out.
    red_fast_ = is_triangle(red_p_) && !(opts.forbidden_red && !opts.forbidden_red->empty());
    blue_fast_ = is_triangle(blue_p_) && !(opts.forbidden_blue && !opts.forbidden_blue->empty());
    no_filters_ = !filters;
  }

  ArrowResult run() {
    if (std::optional<ArrowResult> settled = clique_shortcut()) return *settled;
    int split = 0;
    if (e_ > kSplitThreshold && opts_.prefix_depth > 0 && opts_.prefix_depth < e_)
      split = opts_.prefix_depth;
    return split == 0 ? run_plain() : run_split(split);
  }

 private:
  enum Step { Exhausted, FoundLeaf, Budget };

  // Any coloring of the host restricts to a coloring of an induced subgraph,
  // and a monochromatic copy inside the subgraph is one in the host. So if the
  // largest clique alone forces a copy, the host does too, and that clique is
  // searched in orbit normal form, which is vastly cheaper than the raw tree
  // of a dense host with no usable symmetry. Only the Ramsey verdict
  // transfers; anything else falls through to the full search, minus the
  // nodes the attempt consumed. Tight budgets skip the attempt so their
  // starvation behavior stays that of the plain engine.
  std::optional<ArrowResult> clique_shortcut() {
    if (!no_filters_ || opts_.node_budget < 1'000'000) return std::nullopt;
    if (is_complete(host_)) return std::nullopt;
    const std::uint64_t clique = largest_clique(host_);
    const int size = std::popcount(clique);
    if (size >= n_) return std::nullopt;
    if (size < std::max(red_p_.vertex_count(), blue_p_.vertex_count())) return std::nullopt;
    const Graph sub = host_.induced(clique);
    ArrowResult pre = Engine(sub, red_p_, blue_p_, opts_).run();
    if (pre.verdict == ArrowVerdict::Ramsey) {
      pre.good_red.clear();
      return pre;
    }
    pre_nodes_ = pre.nodes;
    budget_left_ = opts_.node_budget > pre.nodes ? opts_.node_budget - pre.nodes : 0;
    return std::nullopt;
  }

  // Colorings of a complete host are explored only in a per-orbit normal form:
  // the star of vertex 0 sorted blue-before-red, and vertex 1's remaining
  // edges sorted the same way within each group the star coloring leaves
  // interchangeable. Each orbit's lexicographically least member has both
  // properties, so the least good coloring overall is never skipped.
  bool allowed(const std::vector<std::int8_t>& colors, int idx, std::int8_t c) const {
    if (!prune_) return true;
    const int star = n_ - 1;
    if (idx > 0 && idx < star) return c >= colors[static_cast<std::size_t>(idx - 1)];
    if (n_ >= 4 && idx >= star && idx < 2 * n_ - 3) {
      int a = 0;
      for (int i = 0; i < star; ++i)
        if (colors[static_cast<std::size_t>(i)] == 0) ++a;
      const int peer = idx - star + 2;  // this edge is (1, peer)
      if (peer == 2) return true;
      if (a >= 2 && peer == a + 1) return true;
      return c >= colors[static_cast<std::size_t>(idx - 1)];
    }
    return true;
  }

  // Walks edges [idx, stop) in canonical order, blue first. With a sink, stop
  // is a split depth and surviving prefixes are collected; without one, stop
  // is the edge count and reaching it is a good coloring, since a
  // monochromatic copy is detected the moment its last edge gets its color.
  Step dfs(Ctx& ctx, int idx, int stop, std::vector<std::vector<std::int8_t>>* sink) {
    if (idx == stop) {
      if (sink) {
        sink->emplace_back(ctx.colors.begin(), ctx.colors.begin() + stop);
        return Exhausted;
      }
      ctx.found.assign(ctx.colors.begin(), ctx.colors.end());
      return FoundLeaf;
    }
    const auto [u, v] = edges_[static_cast<std::size_t>(idx)];
    for (std::int8_t c = 0; c <= 1; ++c) {
      if (!allowed(ctx.colors, idx, c)) continue;
      if (++ctx.nodes > ctx.budget) {
        ctx.out_of_budget = true;
        return Budget;
      }
      Graph& g = c ? ctx.red_g : ctx.blue_g;
      g.add_edge(u, v);
      ctx.colors[static_cast<std::size_t>(idx)] = c;
      bool copy_found;
      bool starved = false;
      if (c ? red_fast_ : blue_fast_) {
        copy_found = (g.neighbors(u) & g.neighbors(v)) != 0;
      } else {
        const Graph& pat = c ? red_p_ : blue_p_;
        const auto* forbidden = c ? opts_.forbidden_red : opts_.forbidden_blue;
        const SubgraphResult hit =
            find_subgraph_using_edge(g, pat, u, v, ctx.budget - ctx.nodes, forbidden);
        ctx.nodes += hit.nodes;
        copy_found = hit.status == SearchStatus::Found;
        starved = hit.status == SearchStatus::Unknown;
      }
      Step step = Exhausted;
      if (starved) {
        ctx.out_of_budget = true;
        step = Budget;
      } else if (!copy_found) {
        step = dfs(ctx, idx + 1, stop, sink);
      }
      g.remove_edge(u, v);
      ctx.colors[static_cast<std::size_t>(idx)] = -1;
      if (step != Exhausted) return step;
    }
    return Exhausted;
  }

  void replay(Ctx& ctx, const std::vector<std::int8_t>& prefix) const {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      ctx.colors[i] = prefix[i];
      const auto [u, v] = edges_[i];
      (prefix[i] ? ctx.red_g : ctx.blue_g).add_edge(u, v);
    }
  }

  ArrowResult run_plain() {
    Ctx ctx(n_, e_, budget_left_);
    const Step s = dfs(ctx, 0, e_, nullptr);
    ArrowResult out;
    out.nodes = pre_nodes_ + ctx.nodes;
    if (s == FoundLeaf) {
      out.verdict = ArrowVerdict::NotRamsey;
      out.good_red = ctx.found;
    } else {
      out.verdict = ctx.out_of_budget ? ArrowVerdict::Unknown : ArrowVerdict::Ramsey;
    }
    return out;
  }

  ArrowResult run_split(int split) {
    std::vector<std::vector<std::int8_t>> prefixes;
    Ctx pctx(n_, e_, budget_left_);
    dfs(pctx, 0, split, &prefixes);
    ArrowResult out;
    out.nodes = pre_nodes_ + pctx.nodes;
    if (pctx.out_of_budget) return out;  // Unknown
    if (prefixes.empty()) {
      out.verdict = ArrowVerdict::Ramsey;
      return out;
    }

    const int tasks = static_cast<int>(prefixes.size());
    // Static, equal budget shares keep the outcome independent of scheduling.
    const std::uint64_t per_task = (budget_left_ - pctx.nodes) / static_cast<std::uint64_t>(tasks);
    std::vector<std::uint8_t> found(static_cast<std::size_t>(tasks), 0);
    std::vector<std::uint8_t> starved(static_cast<std::size_t>(tasks), 0);
    std::vector<std::vector<std::uint8_t>> certs(static_cast<std::size_t>(tasks));
    std::vector<std::uint64_t> spent(static_cast<std::size_t>(tasks), 0);
    std::atomic<int> first_found{tasks};

#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < tasks; ++t) {
      // A task later than an already-found one cannot change the answer: the
      // winner is the smallest found index. Earlier tasks always run.
      if (t > first_found.load(std::memory_order_relaxed)) continue;
      Ctx ctx(n_, e_, per_task);
      replay(ctx, prefixes[static_cast<std::size_t>(t)]);
      const Step s = dfs(ctx, split, e_, nullptr);
      spent[static_cast<std::size_t>(t)] = ctx.nodes;
      if (s == FoundLeaf) {
        certs[static_cast<std::size_t>(t)] = ctx.found;
        found[static_cast<std::size_t>(t)] = 1;
        int cur = first_found.load();
        while (t < cur && !first_found.compare_exchange_weak(cur, t)) {
        }
      } else if (ctx.out_of_budget) {
        starved[static_cast<std::size_t>(t)] = 1;
      }
    }

    for (int t = 0; t < tasks; ++t) out.nodes += spent[static_cast<std::size_t>(t)];
    for (int t = 0; t < tasks; ++t) {
      if (found[static_cast<std::size_t>(t)]) {
        out.verdict = ArrowVerdict::NotRamsey;
        out.good_red = certs[static_cast<std::size_t>(t)];
        return out;
      }
    }
    // No task found a coloring, so none were skipped and every starvation is
    // visible here.
    const bool any_starved =
        std::find(starved.begin(), starved.end(), std::uint8_t{1}) != starved.end();
    if (!any_starved) {
      out.verdict = ArrowVerdict::Ramsey;
      return out;
    }
    // Equal shares starve when the tree is skewed, long before the budget is
    // really gone. Nothing was found and no task was skipped, so the state
    // here does not depend on scheduling; redo the walk in one piece with
    // whatever budget remains.
    const std::uint64_t used = out.nodes - pre_nodes_;
    budget_left_ = budget_left_ > used ? budget_left_ - used : 0;
    pre_nodes_ = out.nodes;
    return run_plain();
  }

  const Graph& host_;
  const Graph& red_p_;
  const Graph& blue_p_;
  ArrowOptions opts_;
  std::vector<std::pair<int, int>> edges_;
  int e_;
  int n_;
  bool prune_ = false;
  bool red_fast_ = false;
  bool blue_fast_ = false;
  bool no_filters_ = true;
  std::uint64_t budget_left_ = 0;
  std::uint64_t pre_nodes_ = 0;
};

void check_masks(const std::vector<std::uint64_t>& masks, const Graph& host,
                 const Graph& pattern, const char* side) {
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const std::uint64_t m = masks[i];
    if ((m & ~host.vertex_mask()) != 0)
      throw std::invalid_argument(std::string(side) + " forbidden set " + std::to_string(i) +
                                  " lies outside the host");
    if (std::popcount(m) != pattern.vertex_count())
      throw std::invalid_argument(std::string(side) + " forbidden set " + std::to_string(i) +
                                  " has the wrong cardinality");
  }
}

}  // namespace

ArrowResult search_arrow(const Graph& host, const Graph& red_pattern, const Graph& blue_pattern,
                         const ArrowOptions& opts) {
  return Engine(host, red_pattern, blue_pattern, opts).run();
}

MonoCopy find_mono_copy(const EdgeColoring& coloring, const Graph& red_pattern,
                        const Graph& blue_pattern, std::uint64_t budget,
                        const std::vector<std::uint64_t>* forbidden_red,
                        const std::vector<std::uint64_t>* forbidden_blue) {
  MonoCopy out;
  const SubgraphResult red =
      find_subgraph(coloring.red_subgraph(), red_pattern, budget, forbidden_red);
  out.nodes = red.nodes;
  if (red.status == SearchStatus::Found) {
    out.status = SearchStatus::Found;
    out.color = MonoColor::red;
    out.embedding = red.embedding;
    return out;
  }
  const SubgraphResult blue = find_subgraph(coloring.blue_subgraph(), blue_pattern,
                                            budget - std::min(budget, red.nodes), forbidden_blue);
  out.nodes += blue.nodes;
  if (blue.status == SearchStatus::Found) {
    out.status = SearchStatus::Found;
    out.color = MonoColor::blue;
    out.embedding = blue.embedding;
    return out;
  }
  out.status = (red.status == SearchStatus::Unknown || blue.status == SearchStatus::Unknown)
                   ? SearchStatus::Unknown
                   : SearchStatus::NotFound;
  return out;
}

ArrowResult robust_arrow(const Graph& host, const Graph& red_pattern, const Graph& blue_pattern,
                         const RobustQuery& query, const ArrowOptions& opts) {
  check_masks(query.forbidden_red, host, red_pattern, "red");
  check_masks(query.forbidden_blue, host, blue_pattern, "blue");
  ArrowOptions local = opts;
  local.forbidden_red = &query.forbidden_red;
  local.forbidden_blue = &query.forbidden_blue;
  return search_arrow(host, red_pattern, blue_pattern, local);
}

GlobalArrowResult global_arrow(const Graph& host, const Graph& red_pattern,
                               const Graph& blue_pattern, const Rational& mu,
                               const ArrowOptions& opts) {
  const int n = host.vertex_count();
  std::int64_t s = (mu.num() * n + mu.den() - 1) / mu.den();  // ceil(mu * n)
  if (s < 0) s = 0;
  GlobalArrowResult out;
  if (s > n) {
    out.verdict = ArrowVerdict::Ramsey;  // no subset qualifies
    return out;
  }

  const int k = static_cast<int>(s);
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  std::uint64_t budget = opts.node_budget;

  while (true) {
    if (budget == 0) return out;  // Unknown
    --budget;                     // a subset visit costs one step of its own
    std::uint64_t mask = 0;
    for (const int v : pick) mask |= std::uint64_t{1} << v;
    ArrowOptions local = opts;
    local.node_budget = budget;
    const ArrowResult r = search_arrow(host.induced(mask), red_pattern, blue_pattern, local);
    out.nodes += r.nodes + 1;
    budget -= std::min(budget, r.nodes);
    if (r.verdict == ArrowVerdict::Unknown) return out;  // Unknown
    if (r.verdict == ArrowVerdict::NotRamsey) {
      out.verdict = ArrowVerdict::NotRamsey;
      out.witness_subset = mask;
      out.good_red = r.good_red;
      return out;
    }

    // next k-combination of {0..n-1} in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  out.verdict = ArrowVerdict::Ramsey;
  return out;
}

}  // namespace ramsey
