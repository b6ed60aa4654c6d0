#include "multipack/rooted_tree.hpp"

#include <algorithm>
#include <string>

namespace multipack {

RootedTree RootedTree::from_parents(std::vector<Vertex> parent) {
  const auto n = static_cast<Vertex>(parent.size());
  if (n == 0) return RootedTree();
  auto layout = std::make_shared<Layout>();
  layout->children.resize(n);
  layout->depth.assign(n, 0);
  Vertex root = kNoVertex;
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] == kNoVertex) {
      if (root != kNoVertex) throw std::invalid_argument("rooted tree has more than one root");
      root = v;
    } else if (parent[v] >= n || parent[v] == v) {
      throw std::invalid_argument("bad parent for vertex " + std::to_string(v));
    } else {
      layout->children[parent[v]].push_back(v);
    }
  }
  if (root == kNoVertex) throw std::invalid_argument("rooted tree has no root");

  // Depths by a walk from the root; anything unreached sits on a cycle.
  std::vector<Vertex> order{root};
  for (std::size_t head = 0; head < order.size(); ++head) {
    Vertex u = order[head];
    for (Vertex c : layout->children[u]) {
      layout->depth[c] = layout->depth[u] + 1;
      order.push_back(c);
    }
  }
  if (order.size() != n) throw std::invalid_argument("parent array contains a cycle");
  layout->parent = std::move(parent);
  return RootedTree(std::move(layout), std::vector<bool>(n, true), root, n);
}

RootedTree RootedTree::from_tree_graph(const Graph& g, Vertex root) {
  if (g.order() == 0) return RootedTree();
  if (g.size() + 1 != g.order()) throw std::invalid_argument("graph is not a tree");
  return bfs_tree(g, root);
}

std::vector<Vertex> RootedTree::children(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex c : layout_->children[v]) {
    if (present_[c]) out.push_back(c);
  }
  return out;
}

std::size_t RootedTree::child_count(Vertex v) const {
  return static_cast<std::size_t>(std::count_if(layout_->children[v].begin(), layout_->children[v].end(),
                                                [&](Vertex c) { return present_[c]; }));
}

std::vector<Vertex> RootedTree::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for (Vertex v = 0; v < present_.size(); ++v) {
    if (present_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> RootedTree::subtree(Vertex u) const {
  std::vector<Vertex> out{u};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Vertex c : layout_->children[out[head]]) {
      if (present_[c]) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int RootedTree::height() const {
  if (empty()) return -1;
  std::uint32_t h = 0;
  for (Vertex v = 0; v < present_.size(); ++v) {
    if (present_[v]) h = std::max(h, layout_->depth[v]);
  }
  return static_cast<int>(h);
}

int RootedTree::subtree_height(Vertex u) const {
  std::uint32_t h = layout_->depth[u];
  for (Vertex v : subtree(u)) h = std::max(h, layout_->depth[v]);
  return static_cast<int>(h - layout_->depth[u]);
}

Graph RootedTree::to_graph() const {
  std::vector<Edge> edges;
  for (Vertex v : vertices()) {
    if (v != root_) edges.emplace_back(parent(v), v);
  }
  return Graph::from_edges(capacity(), edges);
}

bool RootedTree::operator==(const RootedTree& other) const {
  if (root_ != other.root_ || size_ != other.size_) return false;
  if (empty()) return true;
  auto mine = vertices();
  if (mine != other.vertices()) return false;
  return std::all_of(mine.begin(), mine.end(),
                     [&](Vertex v) { return v == root_ || parent(v) == other.parent(v); });
}

std::uint32_t GadgetShape::order() const {
  switch (kind) {
    case GadgetKind::H1:
      return k + 1;
    case GadgetKind::H2:
      return 2 * k1 + k2 + 1;
    case GadgetKind::Other:
      break;
  }
  return 0;
}

std::vector<Vertex> deepest_vertices(const RootedTree& t) {
  std::vector<Vertex> out;
  if (t.empty()) return out;
  const auto h = static_cast<std::uint32_t>(t.height());
  for (Vertex v : t.vertices()) {
    if (t.depth(v) == h) out.push_back(v);
  }
  return out;
}

RootedTree remove_subtree(const RootedTree& t, Vertex u) {
  if (!t.contains(u)) throw std::invalid_argument("vertex " + std::to_string(u) + " is not in the tree");
  if (u == t.root()) return RootedTree();
  std::vector<bool> present = t.present_;
  auto doomed = t.subtree(u);
  for (Vertex v : doomed) present[v] = false;
  return RootedTree(t.layout_, std::move(present), t.root_, t.size_ - doomed.size());
}

RootedTree remove_leaf(const RootedTree& t, Vertex w) {
  if (!t.contains(w)) throw std::invalid_argument("vertex " + std::to_string(w) + " is not in the tree");
  if (!t.is_leaf(w)) throw std::invalid_argument("vertex " + std::to_string(w) + " is not a leaf");
  if (w == t.root()) return RootedTree();
  std::vector<bool> present = t.present_;
  present[w] = false;
  return RootedTree(t.layout_, std::move(present), t.root_, t.size_ - 1);
}

Gadget extract_gadget(const RootedTree& t, Vertex u) {
  if (!t.contains(u)) throw std::invalid_argument("vertex " + std::to_string(u) + " is not in the tree");
  Gadget g;
  g.head = u;
  auto kids = t.children(u);
  bool all_leaves = true;
  for (Vertex c : kids) {
    if (!t.is_leaf(c)) {
      all_leaves = false;
      break;
    }
  }
  if (all_leaves) {
    g.shape = GadgetShape::h1(static_cast<std::uint32_t>(kids.size()));
    g.leaves = std::move(kids);
    return g;
  }
  for (Vertex c : kids) {
    auto grand = t.children(c);
    if (grand.empty()) {
      g.leaves.push_back(c);
    } else if (grand.size() == 1 && t.is_leaf(grand.front())) {
      g.a.push_back(c);
      g.b.push_back(grand.front());
    } else {
      return Gadget{GadgetShape::other(), u, {}, {}, {}};
    }
  }
  g.shape = GadgetShape::h2(static_cast<std::uint32_t>(g.a.size()), static_cast<std::uint32_t>(g.leaves.size()));
  return g;
}

GadgetShape classify_subtree(const RootedTree& t, Vertex u) { return extract_gadget(t, u).shape; }

}  // namespace multipack
