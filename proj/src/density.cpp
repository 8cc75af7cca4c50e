#include "ramsey/density.hpp"

#include <bit>
#include <optional>

namespace ramsey {
namespace {

// Total order on candidate witnesses: larger value, then fewer vertices, then
// the lexicographically smaller mask (the one containing the lowest differing
// bit). Total means the parallel merge is schedule-independent.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

struct Candidate {
  bool valid = false;
  Rational value;
  std::uint64_t mask = 0;
  int card = 0;
};

bool improves(const Candidate& a, const Candidate& b) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  if (a.value != b.value) return b.value < a.value;
  if (a.card != b.card) return a.card < b.card;
  return lex_less(a.mask, b.mask);
}

struct Accum {
  Candidate best;
  Rational proper_max;
  bool has_proper = false;

  void absorb(const Accum& o) {
    if (improves(o.best, best)) best = o.best;
    if (o.has_proper && (!has_proper || proper_max < o.proper_max)) {
      proper_max = o.proper_max;
      has_proper = true;
    }
  }
};

Rational d2_value(int v, int e) {
  if (e == 0) return Rational(0);
  if (v == 2) return {1, 2};
  return {e - 1, v - 2};
}

// F: (card, edges) -> std::optional<Rational>; nullopt skips the subset.
template <class F>
DensityReport scan_subsets(const Graph& g, int cap, ExecMode mode, F f) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("density scan needs at least one vertex");
  if (n > cap) throw EnumerationCapError(n, cap);

  const std::uint64_t full = g.vertex_mask();
  const std::int64_t total = std::int64_t{1} << n;

  auto consider = [&](std::uint64_t mask, Accum& acc) {
    const int card = std::popcount(mask);
    const int e = g.edges_inside(mask);
    const std::optional<Rational> val = f(card, e);
    if (!val) return;
    Candidate c{true, *val, mask, card};
    if (improves(c, acc.best)) acc.best = c;
    if (mask != full && (!acc.has_proper || acc.proper_max < *val)) {
      acc.proper_max = *val;
      acc.has_proper = true;
    }
  };

  Accum acc;
  if (mode == ExecMode::serial || total < 4096) {
    for (std::int64_t mask = 1; mask < total; ++mask)
      consider(static_cast<std::uint64_t>(mask), acc);
  } else {
#pragma omp parallel
    {
      Accum local;
#pragma omp for schedule(static)
      for (std::int64_t mask = 1; mask < total; ++mask)
        consider(static_cast<std::uint64_t>(mask), local);
#pragma omp critical(ramsey_density_merge)
      acc.absorb(local);
    }
  }

  if (!acc.best.valid)
    throw std::logic_error("density scan found no admissible subset");

  DensityReport r;
  r.value = acc.best.value;
  r.witness = acc.best.mask;
  r.strict = !acc.has_proper || acc.proper_max < acc.best.value;
  return r;
}

}  // namespace

Rational two_density(const Graph& g) {
  return d2_value(g.vertex_count(), g.edge_count());
}

Rational ev_density(const Graph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("ev_density needs at least one vertex");
  return {g.edge_count(), g.vertex_count()};
}

DensityReport m2(const Graph& g, int cap, ExecMode mode) {
  return scan_subsets(g, cap, mode, [](int card, int e) {
    return std::optional<Rational>(d2_value(card, e));
  });
}

DensityReport asym_density(const Graph& h1, const Graph& h2, int cap, ExecMode mode) {
  if (h1.edge_count() == 0)
    throw std::invalid_argument("asym_density: h1 has no edges");
  if (h2.edge_count() == 0)
    throw std::invalid_argument("asym_density: h2 has no edges");
  const Rational q1 = m2(h1, cap, mode).value;
  const Rational q2 = m2(h2, cap, mode).value;
  if (q1 < q2) throw DensityOrderError();
  const Rational inv = q2.inverse();
  return scan_subsets(h1, cap, mode, [inv](int card, int e) -> std::optional<Rational> {
    if (e == 0) return std::nullopt;
    return Rational(e) / (Rational(card - 2) + inv);
  });
}

DensityReport m_density(const Graph& g, int cap, ExecMode mode) {
  return scan_subsets(g, cap, mode, [](int card, int e) {
    return std::optional<Rational>(Rational(e, card));
  });
}

bool is_strictly_2_balanced(const Graph& g, int cap) {
  return m2(g, cap).strict;
}

bool is_strictly_balanced_wrt(const Graph& h1, const Graph& h2, int cap) {
  return asym_density(h1, h2, cap).strict;
}

bool is_balanced(const Graph& g, int cap) {
  return ev_density(g) == m_density(g, cap).value;
}

std::vector<int> witness_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

}  // namespace ramsey
