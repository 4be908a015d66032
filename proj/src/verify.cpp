#include "ulab/verify.hpp"

#include <algorithm>
#include <set>

namespace ulab {
namespace {

struct SubsetSum {
  Label sum;
  std::uint64_t mask;
};

// Distinct subset sums of `labels` in increasing order, each with the first
// subset (by construction order) that produces it.
std::vector<SubsetSum> distinct_subset_sums(std::span<const Label> labels) {
  std::vector<SubsetSum> sums{{0, 0}};
  std::vector<SubsetSum> shifted;
  std::vector<SubsetSum> merged;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    shifted.clear();
    for (const auto& s : sums) shifted.push_back({s.sum + labels[i], s.mask | (std::uint64_t{1} << i)});
    merged.clear();
    merged.reserve(sums.size() + shifted.size());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < sums.size() || b < shifted.size()) {
      const SubsetSum& next =
          (b == shifted.size() || (a < sums.size() && sums[a].sum <= shifted[b].sum)) ? sums[a++]
                                                                                      : shifted[b++];
      if (merged.empty() || merged.back().sum != next.sum) merged.push_back(next);
    }
    sums.swap(merged);
  }
  return sums;
}

std::optional<SubsetSum> find_sum(const std::vector<SubsetSum>& sums, Label target) {
  const auto it = std::lower_bound(sums.begin(), sums.end(), target,
                                   [](const SubsetSum& s, Label t) { return s.sum < t; });
  if (it == sums.end() || it->sum != target) return std::nullopt;
  return *it;
}

struct Side {
  std::vector<EdgeId> edges;
  std::vector<Label> labels;
};

Side labeled_side(const Graph& g, const EdgeLabeling& l, Vertex x, EdgeId excluded) {
  Side side;
  for (EdgeId f : g.incident(x)) {
    if (f == excluded || !l.has(f)) continue;
    side.edges.push_back(f);
    side.labels.push_back(l.at(f));
  }
  return side;
}

std::vector<EdgeId> expand(const Side& side, std::uint64_t mask) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < side.edges.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(side.edges[i]);
  }
  return out;
}

}  // namespace

std::vector<Label> in_sums(const Graph& g, const EdgeLabeling& l, const Orientation& o) {
  require_total(g, l);
  std::vector<Label> sums(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    sums[static_cast<std::size_t>(o.head(e))] += l.at(e);
  }
  return sums;
}

VerificationReport verify_brute(const Graph& g, const EdgeLabeling& l, int max_edges) {
  require_total(g, l);
  const int m = g.edge_count();
  if (m > max_edges || m > 62) {
    throw Error(ErrorKind::kCapExceeded, std::to_string(m) + " edges exceed the brute-force cap of " +
                                             std::to_string(std::min(max_edges, 62)) +
                                             "; use the local method");
  }
  VerificationReport report;
  report.method = VerifyMethod::kBrute;
  std::vector<Label> sums(static_cast<std::size_t>(g.vertex_count()));
  std::vector<Vertex> heads(static_cast<std::size_t>(m));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(sums.begin(), sums.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      heads[static_cast<std::size_t>(e)] = ((mask >> e) & 1U) ? ed.v : ed.u;
      sums[static_cast<std::size_t>(heads[static_cast<std::size_t>(e)])] += l.at(e);
    }
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (sums[static_cast<std::size_t>(ed.u)] != sums[static_cast<std::size_t>(ed.v)]) continue;
      Witness w;
      w.edge = e;
      w.head = heads[static_cast<std::size_t>(e)];
      for (EdgeId f : g.incident(ed.u)) {
        if (f != e && heads[static_cast<std::size_t>(f)] == ed.u) w.into_u.push_back(f);
      }
      for (EdgeId f : g.incident(ed.v)) {
        if (f != e && heads[static_cast<std::size_t>(f)] == ed.v) w.into_v.push_back(f);
      }
      report.universal = false;
      report.witness = std::move(w);
      return report;
    }
  }
  return report;
}

std::optional<Witness> find_edge_witness(const Graph& g, const EdgeLabeling& l, EdgeId e) {
  const Edge& ed = g.edge(e);
  const Label x = l.at(e);
  const Side su = labeled_side(g, l, ed.u, e);
  const Side sv = labeled_side(g, l, ed.v, e);
  if (su.edges.size() > 63 || sv.edges.size() > 63) {
    throw Error(ErrorKind::kCapExceeded, "vertex degree too large for subset enumeration");
  }
  const auto sums_u = distinct_subset_sums(su.labels);
  const auto sums_v = distinct_subset_sums(sv.labels);
  for (const SubsetSum& a : sums_u) {
    // e into u: a + x == b.
    if (const auto b = find_sum(sums_v, a.sum + x)) {
      return Witness{e, expand(su, a.mask), expand(sv, b->mask), ed.u};
    }
    // e into v: a == b + x.
    if (a.sum - x >= 0) {
      if (const auto b = find_sum(sums_v, a.sum - x)) {
        return Witness{e, expand(su, a.mask), expand(sv, b->mask), ed.v};
      }
    }
  }
  return std::nullopt;
}

VerificationReport verify_local(const Graph& g, const EdgeLabeling& l, int max_degree) {
  require_total(g, l);
  if (g.max_degree() > max_degree) {
    throw Error(ErrorKind::kCapExceeded, "max degree " + std::to_string(g.max_degree()) +
                                             " exceeds the local-check cap of " +
                                             std::to_string(max_degree));
  }
  VerificationReport report;
  report.method = VerifyMethod::kLocal;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (auto w = find_edge_witness(g, l, e)) {
      report.universal = false;
      report.witness = std::move(w);
      return report;
    }
  }
  return report;
}

Orientation witness_orientation(const Graph& g, const Witness& w) {
  const Edge& ed = g.edge(w.edge);
  std::vector<Vertex> heads(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId f = 0; f < g.edge_count(); ++f) heads[static_cast<std::size_t>(f)] = g.edge(f).v;
  for (const Vertex x : {ed.u, ed.v}) {
    for (EdgeId f : g.incident(x)) heads[static_cast<std::size_t>(f)] = g.other(f, x);
  }
  for (EdgeId f : w.into_u) heads[static_cast<std::size_t>(f)] = ed.u;
  for (EdgeId f : w.into_v) heads[static_cast<std::size_t>(f)] = ed.v;
  heads[static_cast<std::size_t>(w.edge)] = w.head;
  return Orientation(g, std::move(heads));
}

bool is_proper_edge_coloring(const Graph& g, const EdgeLabeling& l) {
  require_total(g, l);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto labels = labels_at(g, l, v);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
  }
  return true;
}

bool is_sum_free(std::span<const Label> values) {
  const std::set<Label> members(values.begin(), values.end());
  if (members.empty()) return true;
  const Label top = *members.rbegin();
  // Sums of non-empty subsets of the members seen so far. Every member is
  // larger than all earlier ones, so hitting it needs at least two summands.
  std::set<Label> reachable;
  for (const Label x : members) {
    if (reachable.contains(x)) return false;
    std::vector<Label> added{x};
    for (const Label s : reachable) {
      if (s + x > top) break;
      added.push_back(s + x);
    }
    reachable.insert(added.begin(), added.end());
  }
  return true;
}

std::vector<Label> labels_at(const Graph& g, const EdgeLabeling& l, Vertex v) {
  std::vector<Label> out;
  for (EdgeId e : g.incident(v)) out.push_back(l.at(e));
  return out;
}

std::string_view to_string(VerifyMethod m) { return m == VerifyMethod::kBrute ? "brute" : "local"; }

nlohmann::json to_json(const Graph& g, const VerificationReport& report) {
  nlohmann::json j;
  j["universal"] = report.universal;
  j["method"] = std::string(to_string(report.method));
  if (report.witness) {
    const Witness& w = *report.witness;
    const Edge& ed = g.edge(w.edge);
    j["witness"] = {{"edge", {ed.u, ed.v}},
                    {"intoU", w.into_u},
                    {"intoV", w.into_v},
                    {"direction", w.head == ed.u ? "u" : "v"}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace ulab
