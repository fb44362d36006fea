#include "thin/nice_decomposition.hpp"

#include <algorithm>

namespace thin {

int NiceDecomposition::width() const {
  int w = -1;
  for (const auto &node : nodes)
    w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceDecomposition::as_tree_decomposition() const {
  TreeDecomposition td;
  td.parent.assign(nodes.size(), -1);
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    td.bags.push_back(nodes[u].bag);
    for (int c : nodes[u].children)
      td.parent[static_cast<std::size_t>(c)] = static_cast<int>(u);
  }
  return td;
}

namespace {

class Builder {
public:
  explicit Builder(const TreeDecomposition &td) : td_(td), children_(td.children()) {}

  NiceDecomposition run() {
    NiceDecomposition out;
    int top;
    if (td_.bags.empty()) {
      top = leaf();
    } else {
      // Post-order without recursion: decompositions of long paths are deep.
      std::vector<int> built(td_.bags.size(), -1);
      std::vector<std::pair<int, std::size_t>> stack{{td_.root(), 0}};
      while (!stack.empty()) {
        auto &[b, next] = stack.back();
        const auto &ch = children_[static_cast<std::size_t>(b)];
        if (next < ch.size()) {
          int c = ch[next++];
          stack.emplace_back(c, 0);
          continue;
        }
        built[static_cast<std::size_t>(b)] = assemble(b, built);
        stack.pop_back();
      }
      top = built[static_cast<std::size_t>(td_.root())];
    }
    top = morph(top, {});
    out.nodes = std::move(nodes_);
    out.root = top;
    return out;
  }

private:
  int add(NiceNode node) {
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size() - 1);
  }

  int leaf() { return add(NiceNode{}); }

  /// Forget then introduce until the bag equals `target` (sorted).
  int morph(int from, const std::vector<Vertex> &target) {
    int cur = from;
    std::vector<Vertex> bag = nodes_[static_cast<std::size_t>(cur)].bag;
    std::vector<Vertex> gone, fresh;
    std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(), std::back_inserter(gone));
    std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(), std::back_inserter(fresh));
    for (Vertex v : gone) {
      bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
      cur = add(NiceNode{NiceType::Forget, v, bag, {cur}});
    }
    for (Vertex v : fresh) {
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      cur = add(NiceNode{NiceType::Introduce, v, bag, {cur}});
    }
    return cur;
  }

  int assemble(int b, const std::vector<int> &built) {
    const auto &bag = td_.bags[static_cast<std::size_t>(b)];
    const auto &ch = children_[static_cast<std::size_t>(b)];
    if (ch.empty())
      return morph(leaf(), bag);
    int acc = morph(built[static_cast<std::size_t>(ch.front())], bag);
    for (std::size_t i = 1; i < ch.size(); ++i) {
      int other = morph(built[static_cast<std::size_t>(ch[i])], bag);
      acc = add(NiceNode{NiceType::Join, -1, bag, {acc, other}});
    }
    return acc;
  }

  const TreeDecomposition &td_;
  std::vector<std::vector<int>> children_;
  std::vector<NiceNode> nodes_;
};

} // namespace

NiceDecomposition nice_decomposition(const Graph &g, const TreeDecomposition &td) {
  validate_decomposition(g, td);
  return Builder(td).run();
}

} // namespace thin
