#pragma once

// Min-max trees: the tree M(w) of a word w with distinct letters has as root
// the leftmost position achieving the minimum or maximum letter of w, with
// M(prefix) and M(suffix) as left/right subtrees; the inorder readout
// recovers w. An interior node is a min node when its letter is smaller than
// every descendant's, a max node when larger; the construction guarantees
// one of the two. psi_i is the rank-preserving pivot swap at the node in
// inorder position i: it exchanges the pivot letter with the extreme letter
// of the right subtree (max under a min node, min under a max node) and
// relabels that subtree order-isomorphically; nodes without a right child
// are fixed.

#include <span>
#include <string>
#include <vector>

#include "parityperm/multipoly.hpp"
#include "parityperm/permutation.hpp"

namespace parityperm {

class MinMaxTree {
 public:
  enum class NodeKind { Leaf, Min, Max };

  struct NodeView {
    int label = 0;
    NodeKind kind = NodeKind::Leaf;
    bool has_left = false, has_right = false;
  };

  static MinMaxTree build(std::span<const int> word);  // letters distinct
  static MinMaxTree build(const Permutation& w);

  int size() const { return static_cast<int>(nodes_.size()); }
  std::vector<int> inorder() const;

  // Node at inorder position i (1-based).
  NodeView node_at(int i) const;
  bool all_interior_min() const;

  // Apply psi at inorder position i (1-based). Applying at a leaf or at a
  // node with no right child returns the tree unchanged.
  MinMaxTree apply_psi(int i) const;
  MinMaxTree apply_psi_set(std::span<const int> positions) const;

  std::string render_ascii() const;

  bool operator==(const MinMaxTree& o) const;

 private:
  struct Node {
    int label = 0;
    int left = -1, right = -1;
  };
  int build_range(std::span<const int> word, int lo, int hi);  // [lo,hi)
  void inorder_walk(int node, std::vector<int>& out) const;
  void collect(int node, std::vector<int>& out) const;
  NodeKind kind_of(int node) const;
  std::vector<Node> nodes_;
  int root_ = -1;
};

// The i-th letter's factorization w = w1 w2 x w4 w5: w2 is the longest
// right factor of the prefix whose letters all exceed x = w(i), w4 the
// longest left factor of the suffix with the same property.
struct Factorization {
  std::vector<int> w1, w2, w4, w5;
  int pivot = 0;
  bool operator==(const Factorization&) const = default;
};

Factorization factorize(const Permutation& w, int i);

// First kind, by the factorization definition: no double descents, final
// ascent, and max(w2) < max(w4) at every valley. Also characterized by
// M(w) having only min interior nodes; both routes are computed and must
// agree (std::logic_error otherwise).
bool is_andre_first(const Permutation& w);
bool is_andre_first_definition(const Permutation& w);
bool is_andre_first_tree(const Permutation& w);

// Every smallest-k restriction avoids three consecutive decreasing letters.
bool is_simsun(const Permutation& w);
// Every smallest-k restriction additionally ends with an ascent.
bool is_andre_second(const Permutation& w);

struct AndreTable {
  int n = 0;
  // First-kind count by number of descents, indices 0..floor(n/2).
  std::vector<BigInt> d;
  // dbar[i] = sum_{j >= i} C(j, i) d[j], same index range as d.
  std::vector<BigInt> dbar;
  MultiPoly descent_poly;  // sum over first-kind of x^des
  MultiPoly rs_prev;       // sum over Simsun (n-1)-permutations of x^des
};

AndreTable andre_tables(int n);

}  // namespace parityperm
