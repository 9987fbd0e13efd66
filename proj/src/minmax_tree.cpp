#include "parityperm/minmax_tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "parityperm/qnum.hpp"

namespace parityperm {

int MinMaxTree::build_range(std::span<const int> word, int lo, int hi) {
  if (lo >= hi) return -1;
  int mini = lo, maxi = lo;
  for (int i = lo + 1; i < hi; ++i) {
    if (word[i] < word[mini]) mini = i;
    if (word[i] > word[maxi]) maxi = i;
  }
  const int root = std::min(mini, maxi);  // leftmost extreme position
  const int idx = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{word[root], -1, -1});
  nodes_[idx].left = build_range(word, lo, root);
  nodes_[idx].right = build_range(word, root + 1, hi);
  return idx;
}

MinMaxTree MinMaxTree::build(std::span<const int> word) {
  std::set<int> seen(word.begin(), word.end());
  if (seen.size() != word.size())
    throw std::invalid_argument("MinMaxTree: letters must be distinct");
  MinMaxTree t;
  t.nodes_.reserve(word.size());
  t.root_ = t.build_range(word, 0, static_cast<int>(word.size()));
  return t;
}

MinMaxTree MinMaxTree::build(const Permutation& w) {
  validate(w);
  return build(std::span<const int>(w.values));
}

void MinMaxTree::inorder_walk(int node, std::vector<int>& out) const {
  if (node < 0) return;
  inorder_walk(nodes_[node].left, out);
  out.push_back(node);
  inorder_walk(nodes_[node].right, out);
}

std::vector<int> MinMaxTree::inorder() const {
  std::vector<int> idx;
  inorder_walk(root_, idx);
  std::vector<int> word;
  word.reserve(idx.size());
  for (int i : idx) word.push_back(nodes_[i].label);
  return word;
}

void MinMaxTree::collect(int node, std::vector<int>& out) const {
  if (node < 0) return;
  out.push_back(node);
  collect(nodes_[node].left, out);
  collect(nodes_[node].right, out);
}

MinMaxTree::NodeKind MinMaxTree::kind_of(int node) const {
  if (nodes_[node].left < 0 && nodes_[node].right < 0) return NodeKind::Leaf;
  std::vector<int> sub;
  collect(node, sub);
  bool is_min = true, is_max = true;
  for (int j : sub) {
    if (j == node) continue;
    if (nodes_[j].label < nodes_[node].label) is_min = false;
    if (nodes_[j].label > nodes_[node].label) is_max = false;
  }
  if (is_min == is_max)
    throw std::logic_error("MinMaxTree: node is neither min nor max");
  return is_min ? NodeKind::Min : NodeKind::Max;
}

MinMaxTree::NodeView MinMaxTree::node_at(int i) const {
  std::vector<int> idx;
  inorder_walk(root_, idx);
  if (i < 1 || i > static_cast<int>(idx.size()))
    throw std::invalid_argument("node_at: position out of range");
  const int node = idx[i - 1];
  return NodeView{nodes_[node].label, kind_of(node), nodes_[node].left >= 0,
                  nodes_[node].right >= 0};
}

bool MinMaxTree::all_interior_min() const {
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    if (kind_of(static_cast<int>(j)) == NodeKind::Max) return false;
  return true;
}

MinMaxTree MinMaxTree::apply_psi(int i) const {
  std::vector<int> idx;
  inorder_walk(root_, idx);
  if (i < 1 || i > static_cast<int>(idx.size()))
    throw std::invalid_argument("apply_psi: position out of range");
  const int node = idx[i - 1];
  if (nodes_[node].right < 0) return *this;  // leaves and left-only nodes fixed

  const NodeKind kind = kind_of(node);
  MinMaxTree out = *this;
  std::vector<int> sub;
  collect(nodes_[node].right, sub);
  std::vector<int> labels;
  labels.reserve(sub.size());
  for (int j : sub) labels.push_back(nodes_[j].label);

  // The pivot letter trades places with the extreme letter of the right
  // subtree; the subtree is relabeled order-isomorphically, the pivot letter
  // joining its label set in place of the letter that moved up.
  const int moved = kind == NodeKind::Min
                        ? *std::max_element(labels.begin(), labels.end())
                        : *std::min_element(labels.begin(), labels.end());
  std::vector<int> old_sorted = labels;
  std::sort(old_sorted.begin(), old_sorted.end());
  std::vector<int> new_sorted = old_sorted;
  new_sorted.erase(std::find(new_sorted.begin(), new_sorted.end(), moved));
  new_sorted.insert(std::lower_bound(new_sorted.begin(), new_sorted.end(),
                                     nodes_[node].label),
                    nodes_[node].label);
  for (std::size_t k = 0; k < sub.size(); ++k) {
    const auto rank = std::lower_bound(old_sorted.begin(), old_sorted.end(),
                                       labels[k]) -
                      old_sorted.begin();
    out.nodes_[sub[k]].label = new_sorted[rank];
  }
  out.nodes_[node].label = moved;
  return out;
}

MinMaxTree MinMaxTree::apply_psi_set(std::span<const int> positions) const {
  std::vector<int> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("apply_psi_set: repeated position");
  MinMaxTree t = *this;
  for (int i : sorted) t = t.apply_psi(i);
  return t;
}

namespace {

struct Renderer {
  const std::vector<int>& labels;
  const std::vector<std::pair<int, int>>& children;
  const std::vector<MinMaxTree::NodeKind>& kinds;
  std::string out;

  void walk(int node, int depth, bool is_root, bool is_left) {
    if (node < 0) return;
    for (int s = 0; s < depth; ++s) out += "  ";
    if (!is_root) out += is_left ? "L: " : "R: ";
    out += std::to_string(labels[node]);
    if (kinds[node] == MinMaxTree::NodeKind::Min) out += " (min)";
    if (kinds[node] == MinMaxTree::NodeKind::Max) out += " (max)";
    out += '\n';
    walk(children[node].first, depth + 1, false, true);
    walk(children[node].second, depth + 1, false, false);
  }
};

}  // namespace

std::string MinMaxTree::render_ascii() const {
  std::vector<int> labels(nodes_.size());
  std::vector<std::pair<int, int>> children(nodes_.size());
  std::vector<NodeKind> kinds(nodes_.size(), NodeKind::Leaf);
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    labels[j] = nodes_[j].label;
    children[j] = {nodes_[j].left, nodes_[j].right};
    kinds[j] = kind_of(static_cast<int>(j));
  }
  Renderer r{labels, children, kinds, {}};
  r.walk(root_, 0, true, false);
  return r.out;
}

bool MinMaxTree::operator==(const MinMaxTree& o) const {
  // Structural equality: same shape and labels. Node indices may differ, so
  // compare by parallel traversal from the roots.
  struct Cmp {
    const std::vector<Node>&a, &b;
    bool eq(int x, int y) const {
      if (x < 0 || y < 0) return x == y;
      return a[x].label == b[y].label && eq(a[x].left, b[y].left) &&
             eq(a[x].right, b[y].right);
    }
  };
  if (nodes_.size() != o.nodes_.size()) return false;
  return Cmp{nodes_, o.nodes_}.eq(root_, o.root_);
}

Factorization factorize(const Permutation& w, int i) {
  validate(w);
  const int n = w.size();
  if (i < 1 || i > n) throw std::invalid_argument("factorize: bad position");
  Factorization f;
  f.pivot = w.values[i - 1];
  int lo = i - 1;  // w2 = w(lo+1 .. i-1), all letters > pivot
  while (lo > 0 && w.values[lo - 1] > f.pivot) --lo;
  int hi = i;  // w4 = w(i+1 .. hi), all letters > pivot
  while (hi < n && w.values[hi] > f.pivot) ++hi;
  f.w1.assign(w.values.begin(), w.values.begin() + lo);
  f.w2.assign(w.values.begin() + lo, w.values.begin() + (i - 1));
  f.w4.assign(w.values.begin() + i, w.values.begin() + hi);
  f.w5.assign(w.values.begin() + hi, w.values.end());
  return f;
}

bool is_andre_first_definition(const Permutation& w) {
  const int n = w.size();
  const auto& v = w.values;
  if (n >= 2 && v[n - 2] > v[n - 1]) return false;  // must end with an ascent
  for (int i = 2; i <= n - 1; ++i) {
    const bool left_desc = v[i - 2] > v[i - 1];
    const bool right_desc = v[i - 1] > v[i];
    if (left_desc && right_desc) return false;  // double descent
    if (left_desc && !right_desc) {
      // valley: compare the maxima flanking the pivot
      Factorization f = factorize(w, i);
      const int m2 = *std::max_element(f.w2.begin(), f.w2.end());
      const int m4 = *std::max_element(f.w4.begin(), f.w4.end());
      if (m2 > m4) return false;
    }
  }
  return true;
}

bool is_andre_first_tree(const Permutation& w) {
  return MinMaxTree::build(w).all_interior_min();
}

bool is_andre_first(const Permutation& w) {
  const bool by_def = is_andre_first_definition(w);
  const bool by_tree = is_andre_first_tree(w);
  if (by_def != by_tree)
    throw std::logic_error("is_andre_first: definition and tree disagree");
  return by_def;
}

namespace {

bool no_double_descent(const std::vector<int>& v) {
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i - 2] > v[i - 1] && v[i - 1] > v[i]) return false;
  return true;
}

// Apply pred to the restrictions of w to its smallest k letters, all k.
template <typename Pred>
bool all_restrictions(const Permutation& w, Pred&& pred) {
  std::vector<int> r = w.values;
  for (int k = w.size(); k >= 1; --k) {
    if (!pred(r)) return false;
    std::erase(r, k);
  }
  return true;
}

int descent_count(std::span<const int> v) {
  int d = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] > v[i]) ++d;
  return d;
}

}  // namespace

bool is_simsun(const Permutation& w) {
  validate(w);
  return all_restrictions(w, no_double_descent);
}

bool is_andre_second(const Permutation& w) {
  validate(w);
  return all_restrictions(w, [](const std::vector<int>& v) {
    if (v.size() >= 2 && v[v.size() - 2] > v.back()) return false;
    return no_double_descent(v);
  });
}

AndreTable andre_tables(int n) {
  if (n < 1) throw std::invalid_argument("andre_tables: n must be positive");
  AndreTable t;
  t.n = n;
  t.d.assign(n / 2 + 1, 0);
  enumerate(n, PermKind::Plain, [&](std::span<const int> word) {
    Permutation w{{word.begin(), word.end()}};
    MinMaxTree tree = MinMaxTree::build(w);
    int two_child = 0;
    for (int i = 1; i <= n; ++i) {
      auto nv = tree.node_at(i);
      if (nv.has_left && nv.has_right) ++two_child;
    }
    if (is_andre_first(w)) {
      const int des = descent_count(word);
      // For first-kind permutations the descent count equals the number of
      // two-child interior nodes of M(w).
      if (des != two_child)
        throw std::logic_error("andre_tables: descents != two-child nodes");
      t.d.at(des) += 1;
      Monomial m{};
      m[static_cast<std::size_t>(Var::X)] = static_cast<std::uint16_t>(des);
      t.descent_poly.add_term(m, 1);
    }
  });
  t.dbar.assign(t.d.size(), 0);
  for (std::size_t i = 0; i < t.dbar.size(); ++i)
    for (std::size_t j = i; j < t.d.size(); ++j)
      t.dbar[i] += binomial_int(static_cast<int>(j), static_cast<int>(i)) * t.d[j];
  if (n == 1) {
    t.rs_prev = MultiPoly(1);  // the empty permutation
  } else {
    enumerate(n - 1, PermKind::Plain, [&](std::span<const int> word) {
      Permutation w{{word.begin(), word.end()}};
      if (!is_simsun(w)) return;
      Monomial m{};
      m[static_cast<std::size_t>(Var::X)] =
          static_cast<std::uint16_t>(descent_count(word));
      t.rs_prev.add_term(m, 1);
    });
  }
  return t;
}

}  // namespace parityperm
