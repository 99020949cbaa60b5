#pragma once

#include <string>
#include <vector>

namespace cellab {

/// Set partition of {top nodes} u {bottom nodes}. Nodes are numbered
/// 0..n_top-1 (top row) and n_top..n_top+n_bot-1 (bottom row; node n_top+j
/// renders as (j+1)'). Blocks are kept canonical: each block ascending,
/// blocks ordered by least node, so structural equality is diagram
/// equivalence.
class SetPartition {
 public:
  SetPartition(int n_top, int n_bot, std::vector<std::vector<int>> blocks);
  static SetPartition identity(int n);

  int n_top() const { return n_top_; }
  int n_bot() const { return n_bot_; }
  int n_nodes() const { return n_top_ + n_bot_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int node) const { return block_of_[node]; }

  std::string key() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_top_ == b.n_top_ && a.n_bot_ == b.n_bot_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }

 private:
  int n_top_, n_bot_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

struct ComposeResult {
  SetPartition partition;
  int removed;  // interior components not meeting either boundary
};

/// Stacked composition: a above b, a's bottom row glued to b's top row.
/// Throws on size mismatch.
ComposeResult compose_set_partitions(const SetPartition& a, const SetPartition& b);

/// Display name of a colour index: r, b, g, y, then c4, c5, ...
std::string colour_name(int i);
int colour_from_name(const std::string& token);

/// Set partition with a colour per node; every block is colour-homogeneous.
/// Equivalent to a tuple of per-colour partitions on disjoint supports.
class ColouredDiagram {
 public:
  ColouredDiagram(int m, SetPartition partition, std::vector<int> node_colours);

  int m() const { return m_; }
  int n_top() const { return partition_.n_top(); }
  int n_bot() const { return partition_.n_bot(); }
  const SetPartition& partition() const { return partition_; }
  const std::vector<int>& colours() const { return colours_; }
  std::vector<int> top_colours() const;
  std::vector<int> bot_colours() const;

  /// Per-colour node supports on the top row (the tuple (A_i) restricted
  /// to unprimed nodes).
  std::vector<std::vector<int>> top_support() const;

  std::string key() const;
  std::string render() const;
  static ColouredDiagram parse(const std::string& text, int n_top, int n_bot, int m);

  friend bool operator==(const ColouredDiagram& a, const ColouredDiagram& b) {
    return a.m_ == b.m_ && a.colours_ == b.colours_ && a.partition_ == b.partition_;
  }
  friend bool operator!=(const ColouredDiagram& a, const ColouredDiagram& b) { return !(a == b); }

 private:
  int m_;
  SetPartition partition_;
  std::vector<int> colours_;
};

struct ColouredComposeResult {
  bool zero;                 // interface colourings differ: the product is 0
  std::vector<int> removed;  // removed interior components per colour
  std::vector<ColouredDiagram> diagram;  // singleton when !zero
};

/// Componentwise stacked composition; zero unless bot colours of a equal
/// top colours of b. Throws when n or m disagree.
ColouredComposeResult compose_coloured(const ColouredDiagram& a, const ColouredDiagram& b);

/// Circular boundary position used for planarity tests (top row left to
/// right, then bottom row right to left).
int circular_position(const SetPartition& p, int node);

/// True when every pair of same-coloured blocks of a pairing diagram is
/// non-crossing in the circular order. Blocks must all have size <= 2.
bool pairing_planar_per_colour(const ColouredDiagram& d);

/// Half diagram on n boundary nodes: a colour per node and a per-colour
/// planar system of cups, remaining nodes being defects; no defect sits
/// inside a same-coloured cup.
struct HalfDiagram {
  int n = 0;
  std::vector<int> colour;  // size n
  std::vector<int> mate;    // mate[i] = partner of a cup, or -1 for a defect

  std::vector<int> through_counts(int m) const;
  std::vector<int> defect_positions() const;
  std::string label() const;  // e.g. "rrb" or "rrb(1,2)" with 1-based cups
  std::string key() const;

  friend bool operator==(const HalfDiagram& a, const HalfDiagram& b) {
    return a.n == b.n && a.colour == b.colour && a.mate == b.mate;
  }
};

/// All half diagrams on n nodes with m colours, in a fixed deterministic
/// order (sorted by label).
std::vector<HalfDiagram> enumerate_half_diagrams(int n, int m);

/// The diagram with top half s and mirrored bottom half t; the k-th
/// colour-c defect of s is joined to the k-th colour-c defect of t.
/// Requires equal through vectors.
ColouredDiagram join_half_diagrams(const HalfDiagram& s, const HalfDiagram& t, int m);

/// All set partitions of {0..count-1} as block lists, in a deterministic
/// (restricted-growth) order.
std::vector<std::vector<std::vector<int>>> enumerate_set_partitions(int count);

}  // namespace cellab
