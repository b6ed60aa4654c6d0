#pragma once

#include <string>
#include <vector>

#include "multipack/graph.hpp"
#include "multipack/oracle.hpp"

namespace multipack {

enum class ReductionVariant { HsChordal, HsHalfHyperbolic, HsBipartite, HsClawFree, TdsRegular, TdsConv };

enum class Property { Chordal, HalfHyperbolic, Bipartite, ClawFree, Regular, ConvPromise };

/// A structural property the construction guarantees. `degree` is only
/// meaningful for Regular.
struct Claim {
  Property property = Property::Chordal;
  std::size_t degree = 0;

  /// "chordal", "half_hyperbolic", "bipartite", "claw_free", "regular(d)",
  /// "conv_promise".
  std::string tag() const;
  bool operator==(const Claim&) const = default;
};

/// Constructed instance plus bookkeeping.
///
/// Vertex layout is fixed: family block (HS variants), then one path per
/// element or input vertex in row-major order, then the variant's extra
/// block (C, Y or W). The regular variant lays out one H_a gadget after
/// another. `heads[i]` is u_i^1; `anchors[i]` is the vertex the forward
/// witness picks for element or input vertex i.
struct ReductionOutput {
  ReductionVariant variant = ReductionVariant::HsChordal;
  Graph graph;
  std::uint32_t k = 0;
  std::vector<std::string> provenance;
  std::vector<Claim> claims;
  std::vector<Vertex> heads;
  std::vector<Vertex> anchors;
};

/// Smallest k each variant accepts.
std::uint32_t minimum_k(ReductionVariant variant);
std::string variant_name(ReductionVariant variant);

ReductionOutput reduce_hs_chordal(const HittingSetInstance& inst);
ReductionOutput reduce_hs_half_hyperbolic(const HittingSetInstance& inst);
ReductionOutput reduce_hs_bipartite(const HittingSetInstance& inst);
ReductionOutput reduce_hs_clawfree(const HittingSetInstance& inst);
ReductionOutput reduce_hs(const HittingSetInstance& inst, ReductionVariant variant);

/// Havel–Hakimi construction of a simple d-regular graph on n vertices.
/// Throws std::invalid_argument when n·d is odd or d >= n.
Graph havel_hakimi_regular(std::uint32_t n, std::uint32_t d);

/// Input must be 3-regular with n >= 6; k >= 4.
ReductionOutput reduce_tds_regular(const Graph& g, std::uint32_t k);
/// The caller promises g is planar; this is recorded, not checked.
ReductionOutput reduce_tds_conv(const Graph& g, std::uint32_t k);

/// Closed-form vertex count of the construction.
std::size_t expected_order(ReductionVariant variant, const HittingSetInstance& inst);
std::size_t expected_order(ReductionVariant variant, Vertex input_order, std::uint32_t k);

/// The multipacking the "hitting set / total dominating set implies
/// multipacking" direction builds: anchors of `selection`, padded with the
/// smallest unused indices up to out.k. Throws if too few indices exist.
VertexSet forward_witness(const ReductionOutput& out, const VertexSet& selection);

struct ClaimCheck {
  Claim claim;
  /// Unset for promises that are not verified (conv_promise).
  std::optional<bool> holds;
};

/// Runs the matching class checker for every claim.
std::vector<ClaimCheck> certify(const ReductionOutput& out);

}  // namespace multipack
