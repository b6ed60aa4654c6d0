#pragma once

#include <memory>
#include <vector>

#include "multipack/graph.hpp"

namespace multipack {

/// A rooted tree over a (possibly sparse) set of vertex ids.
///
/// Trees produced by surgery keep the ids of the surviving vertices and share
/// the parent/children/depth layout of the tree they were cut from; only the
/// membership flags are copied. Removing a subtree never changes the depth of
/// a surviving vertex, so depths stay valid. The default-constructed tree is
/// the EMPTY tree, with height -1.
class RootedTree {
 public:
  RootedTree() = default;

  /// `parent[v]` is kNoVertex for the root and only for the root.
  static RootedTree from_parents(std::vector<Vertex> parent);

  /// The tree `g` rooted at `root`. Throws if g is not a tree.
  static RootedTree from_tree_graph(const Graph& g, Vertex root);

  bool empty() const { return root_ == kNoVertex; }
  Vertex root() const { return root_; }
  /// Size of the id space (one past the largest id ever present).
  Vertex capacity() const { return layout_ ? static_cast<Vertex>(layout_->parent.size()) : 0; }
  /// Number of vertices currently present.
  std::size_t size() const { return size_; }
  bool contains(Vertex v) const { return v < present_.size() && present_[v]; }

  Vertex parent(Vertex v) const { return layout_->parent[v]; }
  std::uint32_t depth(Vertex v) const { return layout_->depth[v]; }
  /// Present children of v in ascending order.
  std::vector<Vertex> children(Vertex v) const;
  std::size_t child_count(Vertex v) const;
  bool is_leaf(Vertex v) const { return child_count(v) == 0; }

  /// Present vertices in ascending order.
  std::vector<Vertex> vertices() const;
  /// Vertices of T_u in ascending order.
  std::vector<Vertex> subtree(Vertex u) const;

  int height() const;
  /// Height of T_u measured from u.
  int subtree_height(Vertex u) const;

  /// The tree as a graph on the full id space (absent ids are isolated).
  Graph to_graph() const;

  bool operator==(const RootedTree& other) const;

 private:
  struct Layout {
    std::vector<Vertex> parent;
    std::vector<std::vector<Vertex>> children;
    std::vector<std::uint32_t> depth;
  };

  RootedTree(std::shared_ptr<const Layout> layout, std::vector<bool> present,
             Vertex root, std::size_t size)
      : layout_(std::move(layout)), present_(std::move(present)), root_(root), size_(size) {}

  friend RootedTree remove_subtree(const RootedTree& t, Vertex u);
  friend RootedTree remove_leaf(const RootedTree& t, Vertex w);

  std::shared_ptr<const Layout> layout_;
  std::vector<bool> present_;
  Vertex root_ = kNoVertex;
  std::size_t size_ = 0;
};

enum class GadgetKind { H1, H2, Other };

/// H1(k): a root with k leaf children. H2(k1, k2): a root with k1 legs of
/// length two and k2 leaf children.
struct GadgetShape {
  GadgetKind kind = GadgetKind::Other;
  std::uint32_t k = 0;
  std::uint32_t k1 = 0;
  std::uint32_t k2 = 0;

  static GadgetShape h1(std::uint32_t k) { return {GadgetKind::H1, k, 0, 0}; }
  static GadgetShape h2(std::uint32_t k1, std::uint32_t k2) { return {GadgetKind::H2, 0, k1, k2}; }
  static GadgetShape other() { return {}; }

  /// Vertex count of the gadget (0 for Other).
  std::uint32_t order() const;

  bool operator==(const GadgetShape&) const = default;
};

/// A gadget together with the ids realising it. For H1 the leaves are in
/// `leaves`; for H2, legs are head-a[i]-b[i] and `leaves` holds the c's.
struct Gadget {
  GadgetShape shape;
  Vertex head = kNoVertex;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Vertex> leaves;
};

/// Deepest vertices, ascending.
std::vector<Vertex> deepest_vertices(const RootedTree& t);

/// Deletes T_u. Removing the root yields the EMPTY tree.
RootedTree remove_subtree(const RootedTree& t, Vertex u);
/// Throws if w has children.
RootedTree remove_leaf(const RootedTree& t, Vertex w);

GadgetShape classify_subtree(const RootedTree& t, Vertex u);
/// classify_subtree plus the concrete vertex ids (legs sorted by a[i]).
Gadget extract_gadget(const RootedTree& t, Vertex u);

}  // namespace multipack
