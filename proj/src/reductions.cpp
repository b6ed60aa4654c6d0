#include "multipack/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "multipack/class_checkers.hpp"

namespace multipack {

namespace {

std::string sup(const std::string& base, std::size_t i, std::size_t level) {
  return base + "_" + std::to_string(i) + "^" + std::to_string(level);
}

void require_k(ReductionVariant variant, std::uint32_t k) {
  if (k < minimum_k(variant)) {
    throw std::invalid_argument(variant_name(variant) + " reduction needs k >= " +
                                std::to_string(minimum_k(variant)) + " (got " + std::to_string(k) + ")");
  }
}

bool member(const std::vector<std::uint32_t>& set, std::uint32_t e) {
  return std::find(set.begin(), set.end(), e) != set.end();
}

// Collects vertices and edges; vertex ids are handed out in call order.
class Builder {
 public:
  Vertex add(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(labels_.size() - 1);
  }
  void connect(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  void clique(const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) connect(vs[i], vs[j]);
    }
  }
  /// A path of `count` fresh vertices labelled base_i^1..base_i^count.
  std::vector<Vertex> path(const std::string& base, std::size_t i, std::size_t count) {
    std::vector<Vertex> vs;
    for (std::size_t level = 1; level <= count; ++level) {
      vs.push_back(add(sup(base, i, level)));
      if (level > 1) connect(vs[level - 2], vs[level - 1]);
    }
    return vs;
  }
  ReductionOutput finish(ReductionVariant variant, std::uint32_t k, std::vector<Claim> claims) {
    ReductionOutput out;
    out.variant = variant;
    out.graph = Graph::from_edges(static_cast<Vertex>(labels_.size()), edges_);
    out.k = k;
    out.provenance = std::move(labels_);
    out.claims = std::move(claims);
    return out;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

struct HsCore {
  std::vector<Vertex> family;
  std::vector<std::vector<Vertex>> paths;
};

// Family vertices, then one path of `path_len` vertices per element.
HsCore hs_core(Builder& b, const HittingSetInstance& inst, std::size_t path_len) {
  HsCore core;
  for (std::size_t j = 0; j < inst.family.size(); ++j) core.family.push_back(b.add("S_" + std::to_string(j)));
  for (std::uint32_t i = 0; i < inst.n; ++i) core.paths.push_back(b.path("u", i, path_len));
  return core;
}

void join_non_members(Builder& b, const HittingSetInstance& inst, const HsCore& core) {
  for (std::size_t j = 0; j < inst.family.size(); ++j) {
    for (std::uint32_t i = 0; i < inst.n; ++i) {
      if (!member(inst.family[j], i)) b.connect(core.paths[i].front(), core.family[j]);
    }
  }
}

void set_ends(ReductionOutput& out, const std::vector<std::vector<Vertex>>& paths) {
  for (const auto& p : paths) {
    out.heads.push_back(p.front());
    out.anchors.push_back(p.back());
  }
}

void join_complement(Builder& b, const Graph& g, const std::vector<Vertex>& heads) {
  for (Vertex i = 0; i < g.order(); ++i) {
    for (Vertex j = i + 1; j < g.order(); ++j) {
      if (!g.adjacent(i, j)) b.connect(heads[i], heads[j]);
    }
  }
}

}  // namespace

std::string Claim::tag() const {
  switch (property) {
    case Property::Chordal:
      return "chordal";
    case Property::HalfHyperbolic:
      return "half_hyperbolic";
    case Property::Bipartite:
      return "bipartite";
    case Property::ClawFree:
      return "claw_free";
    case Property::Regular:
      return "regular(" + std::to_string(degree) + ")";
    case Property::ConvPromise:
      return "conv_promise";
  }
  return "unknown";
}

std::uint32_t minimum_k(ReductionVariant variant) {
  switch (variant) {
    case ReductionVariant::HsChordal:
    case ReductionVariant::HsBipartite:
    case ReductionVariant::TdsConv:
      return 2;
    case ReductionVariant::HsHalfHyperbolic:
    case ReductionVariant::HsClawFree:
      return 3;
    case ReductionVariant::TdsRegular:
      return 4;
  }
  return 2;
}

std::string variant_name(ReductionVariant variant) {
  switch (variant) {
    case ReductionVariant::HsChordal:
      return "chordal";
    case ReductionVariant::HsHalfHyperbolic:
      return "hyperbolic";
    case ReductionVariant::HsBipartite:
      return "bipartite";
    case ReductionVariant::HsClawFree:
      return "clawfree";
    case ReductionVariant::TdsRegular:
      return "regular";
    case ReductionVariant::TdsConv:
      return "conv";
  }
  return "unknown";
}

ReductionOutput reduce_hs_chordal(const HittingSetInstance& inst) {
  require_k(ReductionVariant::HsChordal, inst.k);
  inst.validate();
  Builder b;
  auto core = hs_core(b, inst, inst.k - 1);
  b.clique(core.family);
  join_non_members(b, inst, core);
  auto out = b.finish(ReductionVariant::HsChordal, inst.k, {{Property::Chordal}});
  set_ends(out, core.paths);
  return out;
}

ReductionOutput reduce_hs_half_hyperbolic(const HittingSetInstance& inst) {
  require_k(ReductionVariant::HsHalfHyperbolic, inst.k);
  inst.validate();
  Builder b;
  auto core = hs_core(b, inst, inst.k - 1);
  join_non_members(b, inst, core);
  std::vector<Vertex> hub = core.family;
  for (std::uint32_t i = 0; i < inst.n; ++i) {
    for (std::uint32_t j = i + 1; j < inst.n; ++j) {
      Vertex y = b.add("y_{" + std::to_string(i) + "," + std::to_string(j) + "}");
      b.connect(y, core.paths[i].front());
      b.connect(y, core.paths[j].front());
      hub.push_back(y);
    }
  }
  b.clique(hub);
  auto out = b.finish(ReductionVariant::HsHalfHyperbolic, inst.k, {{Property::Chordal}, {Property::HalfHyperbolic}});
  set_ends(out, core.paths);
  return out;
}

ReductionOutput reduce_hs_bipartite(const HittingSetInstance& inst) {
  require_k(ReductionVariant::HsBipartite, inst.k);
  inst.validate();
  Builder b;
  auto core = hs_core(b, inst, inst.k - 1);
  join_non_members(b, inst, core);
  Vertex apex = b.add("C");
  for (Vertex s : core.family) b.connect(apex, s);
  auto out = b.finish(ReductionVariant::HsBipartite, inst.k, {{Property::Bipartite}});
  set_ends(out, core.paths);
  return out;
}

ReductionOutput reduce_hs_clawfree(const HittingSetInstance& inst) {
  require_k(ReductionVariant::HsClawFree, inst.k);
  inst.validate();
  Builder b;
  auto core = hs_core(b, inst, inst.k - 2);
  b.clique(core.family);
  struct Subdivider {
    std::size_t set;
    std::uint32_t element;
    Vertex v;
  };
  std::vector<Subdivider> w;
  for (std::size_t j = 0; j < inst.family.size(); ++j) {
    for (std::uint32_t i = 0; i < inst.n; ++i) {
      if (member(inst.family[j], i)) continue;
      Vertex v = b.add("w_{" + std::to_string(j) + "," + std::to_string(i) + "}");
      b.connect(core.family[j], v);
      b.connect(v, core.paths[i].front());
      w.push_back({j, i, v});
    }
  }
  for (std::size_t x = 0; x < w.size(); ++x) {
    for (std::size_t y = x + 1; y < w.size(); ++y) {
      if (w[x].set == w[y].set || w[x].element == w[y].element) b.connect(w[x].v, w[y].v);
    }
  }
  auto out = b.finish(ReductionVariant::HsClawFree, inst.k, {{Property::ClawFree}});
  set_ends(out, core.paths);
  return out;
}

ReductionOutput reduce_hs(const HittingSetInstance& inst, ReductionVariant variant) {
  switch (variant) {
    case ReductionVariant::HsChordal:
      return reduce_hs_chordal(inst);
    case ReductionVariant::HsHalfHyperbolic:
      return reduce_hs_half_hyperbolic(inst);
    case ReductionVariant::HsBipartite:
      return reduce_hs_bipartite(inst);
    case ReductionVariant::HsClawFree:
      return reduce_hs_clawfree(inst);
    default:
      throw std::invalid_argument(variant_name(variant) + " is not a hitting-set reduction");
  }
}

Graph havel_hakimi_regular(std::uint32_t n, std::uint32_t d) {
  if (d >= n) {
    throw std::invalid_argument("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                                " vertices: degree must be below the vertex count");
  }
  if ((static_cast<std::uint64_t>(n) * d) % 2 != 0) {
    throw std::invalid_argument("no " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                                " vertices: n*d is odd");
  }
  std::vector<std::uint32_t> residual(n, d);
  std::vector<Vertex> order(n);
  std::vector<Edge> edges;
  while (true) {
    // Highest residual first; ties by smallest id.
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return residual[a] > residual[b]; });
    const Vertex head = order.front();
    const std::uint32_t need = residual[head];
    if (need == 0) break;
    if (need >= n || residual[order[need]] == 0) throw std::logic_error("degree sequence is not graphic");
    residual[head] = 0;
    for (std::uint32_t i = 1; i <= need; ++i) {
      --residual[order[i]];
      edges.emplace_back(head, order[i]);
    }
  }
  return Graph::from_edges(n, edges);
}

ReductionOutput reduce_tds_regular(const Graph& g, std::uint32_t k) {
  require_k(ReductionVariant::TdsRegular, k);
  const Vertex n = g.order();
  if (n < 6) throw std::invalid_argument("regular reduction needs a cubic input with at least 6 vertices");
  if (regularity(g) != std::optional<std::size_t>{3}) throw std::invalid_argument("regular reduction needs a cubic input");
  const std::uint32_t d = n - 4;
  const Graph inner = havel_hakimi_regular(d * d, 2 * d - 1);

  Builder b;
  std::vector<Vertex> heads, anchors;
  for (Vertex a = 0; a < n; ++a) {
    const std::string h = "H_" + std::to_string(a) + ":";
    auto layer_label = [&](std::uint32_t i, std::uint32_t j) {
      return h + "u^{" + std::to_string(i) + "," + std::to_string(j) + "}";
    };
    const Vertex head = b.add(h + "u^1");
    // layers[i - 2] = S_a^i, for 2 <= i <= k-2.
    std::vector<std::vector<Vertex>> layers;
    for (std::uint32_t i = 2; i <= k - 2; ++i) {
      std::vector<Vertex> layer;
      for (std::uint32_t j = 1; j <= d; ++j) layer.push_back(b.add(layer_label(i, j)));
      layers.push_back(std::move(layer));
    }
    std::vector<Vertex> tail;
    for (std::uint32_t j = 1; j <= d * d; ++j) tail.push_back(b.add(layer_label(k - 1, j)));

    for (Vertex s : layers.front()) b.connect(head, s);
    b.clique(layers.front());
    for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
      for (Vertex x : layers[i]) {
        for (Vertex y : layers[i + 1]) b.connect(x, y);
      }
    }
    for (auto [x, y] : inner.edges()) b.connect(tail[x], tail[y]);
    // U_j = tail[(j-1)d .. jd) hangs off u_a^{k-2,j}.
    for (std::uint32_t j = 0; j < d; ++j) {
      for (std::uint32_t t = 0; t < d; ++t) b.connect(layers.back()[j], tail[j * d + t]);
    }
    heads.push_back(head);
    anchors.push_back(tail.front());
  }
  join_complement(b, g, heads);
  auto out = b.finish(ReductionVariant::TdsRegular, k, {{Property::Regular, 2 * static_cast<std::size_t>(d)}});
  out.heads = std::move(heads);
  out.anchors = std::move(anchors);
  return out;
}

ReductionOutput reduce_tds_conv(const Graph& g, std::uint32_t k) {
  require_k(ReductionVariant::TdsConv, k);
  Builder b;
  std::vector<std::vector<Vertex>> paths;
  for (Vertex i = 0; i < g.order(); ++i) paths.push_back(b.path("u", i, k - 1));
  std::vector<Vertex> heads;
  for (const auto& p : paths) heads.push_back(p.front());
  join_complement(b, g, heads);
  auto out = b.finish(ReductionVariant::TdsConv, k, {{Property::ConvPromise}});
  set_ends(out, paths);
  return out;
}

std::size_t expected_order(ReductionVariant variant, const HittingSetInstance& inst) {
  const std::size_t m = inst.family.size(), n = inst.n, k = inst.k;
  switch (variant) {
    case ReductionVariant::HsChordal:
      return m + n * (k - 1);
    case ReductionVariant::HsHalfHyperbolic:
      return m + n * (k - 1) + n * (n - 1) / 2;
    case ReductionVariant::HsBipartite:
      return m + 1 + n * (k - 1);
    case ReductionVariant::HsClawFree: {
      std::size_t w = 0;
      for (const auto& set : inst.family) w += n - set.size();
      return m + n * (k - 2) + w;
    }
    default:
      throw std::invalid_argument("not a hitting-set reduction");
  }
}

std::size_t expected_order(ReductionVariant variant, Vertex input_order, std::uint32_t k) {
  const std::size_t n = input_order;
  switch (variant) {
    case ReductionVariant::TdsRegular: {
      const std::size_t d = n - 4;
      return n * (1 + (k - 3) * d + d * d);
    }
    case ReductionVariant::TdsConv:
      return n * (k - 1);
    default:
      throw std::invalid_argument("not a total-domination reduction");
  }
}

VertexSet forward_witness(const ReductionOutput& out, const VertexSet& selection) {
  std::vector<bool> chosen(out.anchors.size(), false);
  for (Vertex i : selection) {
    if (i >= out.anchors.size()) throw std::out_of_range("selection index out of range");
    chosen[i] = true;
  }
  std::size_t count = selection.size();
  for (std::size_t i = 0; i < chosen.size() && count < out.k; ++i) {
    if (!chosen[i]) {
      chosen[i] = true;
      ++count;
    }
  }
  if (count < out.k) {
    throw std::invalid_argument("only " + std::to_string(out.anchors.size()) + " anchors; cannot reach k = " +
                                std::to_string(out.k));
  }
  std::vector<Vertex> members;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) members.push_back(out.anchors[i]);
  }
  return VertexSet(std::move(members));
}

std::vector<ClaimCheck> certify(const ReductionOutput& out) {
  std::vector<ClaimCheck> checks;
  for (const auto& claim : out.claims) {
    ClaimCheck c{claim, std::nullopt};
    switch (claim.property) {
      case Property::Chordal:
        c.holds = is_chordal(out.graph).chordal;
        break;
      case Property::HalfHyperbolic: {
        // Hyperbolicity of a disconnected graph is taken component-wise.
        bool ok = true;
        for (const auto& comp : connected_components(out.graph)) {
          const Graph part = induced_subgraph(out.graph, comp);
          ok = ok && hyperbolicity(part, all_pairs(part)) <= HalfInteger::from_twice(1);
        }
        c.holds = ok;
        break;
      }
      case Property::Bipartite:
        c.holds = is_bipartite(out.graph).bipartite;
        break;
      case Property::ClawFree:
        c.holds = is_clawfree(out.graph).claw_free;
        break;
      case Property::Regular:
        c.holds = regularity(out.graph) == std::optional<std::size_t>{claim.degree};
        break;
      case Property::ConvPromise:
        break;
    }
    checks.push_back(c);
  }
  return checks;
}

}  // namespace multipack
