#include "cellab/diagrams.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cellab/union_find.hpp"

namespace cellab {

namespace {

std::string node_text(int node, int n_top) {
  if (node < n_top) return std::to_string(node + 1);
  return std::to_string(node - n_top + 1) + "'";
}

int node_from_text(const std::string& t, int n_top, int n_bot) {
  if (t.empty()) throw std::invalid_argument("diagram: empty node token");
  bool primed = t.back() == '\'';
  int v = std::stoi(primed ? t.substr(0, t.size() - 1) : t) - 1;
  int node = primed ? n_top + v : v;
  if (v < 0 || (primed ? v >= n_bot : v >= n_top))
    throw std::invalid_argument("diagram: node " + t + " out of range");
  return node;
}

}  // namespace

SetPartition::SetPartition(int n_top, int n_bot, std::vector<std::vector<int>> blocks)
    : n_top_(n_top), n_bot_(n_bot), blocks_(std::move(blocks)) {
  if (n_top < 0 || n_bot < 0) throw std::invalid_argument("SetPartition: negative size");
  const int n = n_top_ + n_bot_;
  std::vector<int> seen(n, 0);
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 0 || x >= n) throw std::invalid_argument("SetPartition: node out of range");
      if (seen[x]++) throw std::invalid_argument("SetPartition: node in two blocks");
    }
  }
  for (int x = 0; x < n; ++x)
    if (!seen[x]) throw std::invalid_argument("SetPartition: node " + node_text(x, n_top_) + " uncovered");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  block_of_.assign(n, -1);
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int x : blocks_[i]) block_of_[x] = static_cast<int>(i);
}

SetPartition SetPartition::identity(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
  return SetPartition(n, n, std::move(blocks));
}

std::string SetPartition::key() const {
  std::string s = std::to_string(n_top_) + ";" + std::to_string(n_bot_) + ";";
  for (const auto& b : blocks_) {
    for (int x : b) {
      s += std::to_string(x);
      s += ',';
    }
    s += '|';
  }
  return s;
}

ComposeResult compose_set_partitions(const SetPartition& a, const SetPartition& b) {
  if (a.n_bot() != b.n_top())
    throw std::invalid_argument("compose_set_partitions: interface size mismatch");
  const int at = a.n_top(), mid = a.n_bot(), bb = b.n_bot();
  // ids: a top -> 0..at-1, middle -> at..at+mid-1, b bottom -> at+mid..
  UnionFind uf(at + mid + bb);
  for (const auto& blk : a.blocks()) {
    for (size_t i = 1; i < blk.size(); ++i) uf.merge(blk[0], blk[i]);
  }
  auto b_id = [&](int node) { return node < b.n_top() ? at + node : at + mid + (node - b.n_top()); };
  for (const auto& blk : b.blocks()) {
    for (size_t i = 1; i < blk.size(); ++i) uf.merge(b_id(blk[0]), b_id(blk[i]));
  }
  std::map<int, std::vector<int>> comp_external;  // root -> external result nodes
  std::map<int, bool> comp_seen;
  for (int i = 0; i < at + mid + bb; ++i) comp_seen[uf.find(i)] = true;
  for (int i = 0; i < at; ++i) comp_external[uf.find(i)].push_back(i);
  for (int j = 0; j < bb; ++j) comp_external[uf.find(at + mid + j)].push_back(at + j);
  std::vector<std::vector<int>> blocks;
  int removed = 0;
  for (auto& [root, _] : comp_seen) {
    auto it = comp_external.find(root);
    if (it == comp_external.end())
      ++removed;
    else
      blocks.push_back(it->second);
  }
  return {SetPartition(at, bb, std::move(blocks)), removed};
}

std::string colour_name(int i) {
  static const char* names[] = {"r", "b", "g", "y"};
  if (i >= 0 && i < 4) return names[i];
  return "c" + std::to_string(i);
}

int colour_from_name(const std::string& token) {
  for (int i = 0; i < 4; ++i)
    if (token == colour_name(i)) return i;
  if (token.size() > 1 && token[0] == 'c') return std::stoi(token.substr(1));
  throw std::invalid_argument("diagram: unknown colour '" + token + "'");
}

ColouredDiagram::ColouredDiagram(int m, SetPartition partition, std::vector<int> node_colours)
    : m_(m), partition_(std::move(partition)), colours_(std::move(node_colours)) {
  if (m_ <= 0) throw std::invalid_argument("ColouredDiagram: need at least one colour");
  if (static_cast<int>(colours_.size()) != partition_.n_nodes())
    throw std::invalid_argument("ColouredDiagram: colour count != node count");
  for (int c : colours_)
    if (c < 0 || c >= m_) throw std::invalid_argument("ColouredDiagram: colour out of range");
  for (const auto& blk : partition_.blocks()) {
    for (int x : blk)
      if (colours_[x] != colours_[blk.front()])
        throw std::invalid_argument("ColouredDiagram: block mixes colours");
  }
}

std::vector<int> ColouredDiagram::top_colours() const {
  return std::vector<int>(colours_.begin(), colours_.begin() + n_top());
}

std::vector<int> ColouredDiagram::bot_colours() const {
  return std::vector<int>(colours_.begin() + n_top(), colours_.end());
}

std::vector<std::vector<int>> ColouredDiagram::top_support() const {
  std::vector<std::vector<int>> sup(m_);
  for (int i = 0; i < n_top(); ++i) sup[colours_[i]].push_back(i);
  return sup;
}

std::string ColouredDiagram::key() const {
  std::string s = std::to_string(m_) + ";";
  for (int c : colours_) {
    s += std::to_string(c);
    s += '.';
  }
  return s + partition_.key();
}

std::string ColouredDiagram::render() const {
  std::string out;
  for (const auto& blk : partition_.blocks()) {
    if (!out.empty()) out += '|';
    out += colour_name(colours_[blk.front()]);
    out += ":{";
    for (size_t i = 0; i < blk.size(); ++i) {
      if (i) out += ',';
      out += node_text(blk[i], n_top());
    }
    out += '}';
  }
  return out;
}

ColouredDiagram ColouredDiagram::parse(const std::string& text, int n_top, int n_bot, int m) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> colours(n_top + n_bot, -1);
  size_t pos = 0;
  while (pos < text.size()) {
    size_t bar = text.find('|', pos);
    std::string part = text.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    pos = bar == std::string::npos ? text.size() : bar + 1;
    size_t colon = part.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("diagram: block without colour tag");
    int col = colour_from_name(part.substr(0, colon));
    if (col >= m) throw std::invalid_argument("diagram: colour out of range");
    std::string body = part.substr(colon + 1);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
      throw std::invalid_argument("diagram: malformed block " + part);
    body = body.substr(1, body.size() - 2);
    std::vector<int> blk;
    size_t p2 = 0;
    while (p2 < body.size()) {
      size_t comma = body.find(',', p2);
      std::string tok = body.substr(p2, comma == std::string::npos ? std::string::npos : comma - p2);
      p2 = comma == std::string::npos ? body.size() : comma + 1;
      int node = node_from_text(tok, n_top, n_bot);
      blk.push_back(node);
      colours[node] = col;
    }
    blocks.push_back(std::move(blk));
  }
  for (int c : colours)
    if (c < 0) throw std::invalid_argument("diagram: node without a block");
  return ColouredDiagram(m, SetPartition(n_top, n_bot, std::move(blocks)), std::move(colours));
}

ColouredComposeResult compose_coloured(const ColouredDiagram& a, const ColouredDiagram& b) {
  if (a.m() != b.m()) throw std::invalid_argument("compose_coloured: colour count mismatch");
  if (a.n_bot() != b.n_top()) throw std::invalid_argument("compose_coloured: interface size mismatch");
  if (a.bot_colours() != b.top_colours()) return {true, {}, {}};
  std::vector<int> mid_colours = b.top_colours();

  const int at = a.n_top(), mid = a.n_bot(), bb = b.n_bot();
  UnionFind uf(at + mid + bb);
  for (const auto& blk : a.partition().blocks())
    for (size_t i = 1; i < blk.size(); ++i) uf.merge(blk[0], blk[i]);
  auto b_id = [&](int node) { return node < mid ? at + node : at + mid + (node - mid); };
  for (const auto& blk : b.partition().blocks())
    for (size_t i = 1; i < blk.size(); ++i) uf.merge(b_id(blk[0]), b_id(blk[i]));

  auto colour_of_stack_node = [&](int id) {
    if (id < at) return a.colours()[id];
    if (id < at + mid) return mid_colours[id - at];
    return b.colours()[mid + (id - at - mid)];
  };

  std::map<int, std::vector<int>> comp_external;
  std::map<int, int> comp_colour;
  for (int i = 0; i < at + mid + bb; ++i) {
    int root = uf.find(i);
    comp_colour[root] = colour_of_stack_node(i);
  }
  for (int i = 0; i < at; ++i) comp_external[uf.find(i)].push_back(i);
  for (int j = 0; j < bb; ++j) comp_external[uf.find(at + mid + j)].push_back(at + j);

  std::vector<std::vector<int>> blocks;
  std::vector<int> colours(at + bb, 0);
  std::vector<int> removed(a.m(), 0);
  for (auto& [root, col] : comp_colour) {
    auto it = comp_external.find(root);
    if (it == comp_external.end()) {
      ++removed[col];
    } else {
      for (int node : it->second) colours[node] = col;
      blocks.push_back(it->second);
    }
  }
  ColouredComposeResult out;
  out.zero = false;
  out.removed = std::move(removed);
  out.diagram.emplace_back(a.m(), SetPartition(at, bb, std::move(blocks)), std::move(colours));
  return out;
}

int circular_position(const SetPartition& p, int node) {
  if (node < p.n_top()) return node;
  return p.n_top() + (p.n_bot() - 1 - (node - p.n_top()));
}

bool pairing_planar_per_colour(const ColouredDiagram& d) {
  std::vector<std::pair<int, int>> chords;  // circular positions, per block
  std::vector<int> chord_colour;
  for (const auto& blk : d.partition().blocks()) {
    if (blk.size() > 2) return false;
    if (blk.size() < 2) continue;
    int x = circular_position(d.partition(), blk[0]);
    int y = circular_position(d.partition(), blk[1]);
    chords.emplace_back(std::min(x, y), std::max(x, y));
    chord_colour.push_back(d.colours()[blk[0]]);
  }
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j) {
      if (chord_colour[i] != chord_colour[j]) continue;
      auto [a1, a2] = chords[i];
      auto [b1, b2] = chords[j];
      bool b1_in = a1 < b1 && b1 < a2;
      bool b2_in = a1 < b2 && b2 < a2;
      if (b1_in != b2_in) return false;
    }
  return true;
}

std::vector<int> HalfDiagram::through_counts(int m) const {
  std::vector<int> k(m, 0);
  for (int i = 0; i < n; ++i)
    if (mate[i] < 0) ++k[colour[i]];
  return k;
}

std::vector<int> HalfDiagram::defect_positions() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mate[i] < 0) out.push_back(i);
  return out;
}

std::string HalfDiagram::label() const {
  std::string s;
  for (int i = 0; i < n; ++i) s += colour_name(colour[i]);
  for (int i = 0; i < n; ++i)
    if (mate[i] > i) s += "(" + std::to_string(i + 1) + "," + std::to_string(mate[i] + 1) + ")";
  return s;
}

std::string HalfDiagram::key() const { return label(); }

namespace {

// cup patterns on the ordered positions `pos`; defects allowed only when
// `allow_defects` (inside a cup everything must be matched)
void cup_patterns(const std::vector<int>& pos, bool allow_defects,
                  std::vector<std::pair<int, int>>& cups, std::vector<int>& defects,
                  const std::function<void(const std::vector<std::pair<int, int>>&, const std::vector<int>&)>& emit) {
  if (pos.empty()) {
    emit(cups, defects);
    return;
  }
  if (allow_defects) {
    defects.push_back(pos[0]);
    cup_patterns(std::vector<int>(pos.begin() + 1, pos.end()), true, cups, defects, emit);
    defects.pop_back();
  }
  for (size_t j = 1; j < pos.size(); ++j) {
    std::vector<int> inside(pos.begin() + 1, pos.begin() + j);
    std::vector<int> after(pos.begin() + j + 1, pos.end());
    cups.emplace_back(pos[0], pos[j]);
    cup_patterns(inside, false, cups, defects,
                 [&](const std::vector<std::pair<int, int>>&, const std::vector<int>&) {
                   cup_patterns(after, allow_defects, cups, defects, emit);
                 });
    cups.pop_back();
  }
}

}  // namespace

std::vector<HalfDiagram> enumerate_half_diagrams(int n, int m) {
  if (n < 0 || m < 1) throw std::invalid_argument("enumerate_half_diagrams: bad parameters");
  std::vector<HalfDiagram> out;
  std::vector<int> colouring(n, 0);
  auto emit_for_colouring = [&]() {
    // per-colour positions
    std::vector<std::vector<int>> pos(m);
    for (int i = 0; i < n; ++i) pos[colouring[i]].push_back(i);
    // build cup patterns colour by colour, cartesian product
    std::vector<std::vector<std::vector<std::pair<int, int>>>> per_colour(m);
    for (int c = 0; c < m; ++c) {
      std::vector<std::pair<int, int>> cups;
      std::vector<int> defects;
      cup_patterns(pos[c], true, cups, defects,
                   [&](const std::vector<std::pair<int, int>>& cc, const std::vector<int>&) {
                     per_colour[c].push_back(cc);
                   });
    }
    std::vector<size_t> idx(m, 0);
    while (true) {
      HalfDiagram h;
      h.n = n;
      h.colour = colouring;
      h.mate.assign(n, -1);
      for (int c = 0; c < m; ++c)
        for (auto [x, y] : per_colour[c][idx[c]]) {
          h.mate[x] = y;
          h.mate[y] = x;
        }
      out.push_back(std::move(h));
      int c = m - 1;
      while (c >= 0 && ++idx[c] == per_colour[c].size()) {
        idx[c] = 0;
        --c;
      }
      if (c < 0) break;
    }
  };
  while (true) {
    emit_for_colouring();
    int i = n - 1;
    while (i >= 0 && ++colouring[i] == m) {
      colouring[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const HalfDiagram& a, const HalfDiagram& b) { return a.label() < b.label(); });
  return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_set_partitions(int count) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks;
  // restricted growth: node k joins an existing block or opens a new one
  std::function<void(int)> rec = [&](int k) {
    if (k == count) {
      out.push_back(blocks);
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(k);
      rec(k + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({k});
    rec(k + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

ColouredDiagram join_half_diagrams(const HalfDiagram& s, const HalfDiagram& t, int m) {
  if (s.n != t.n) throw std::invalid_argument("join_half_diagrams: size mismatch");
  if (s.through_counts(m) != t.through_counts(m))
    throw std::invalid_argument("join_half_diagrams: through vectors differ");
  const int n = s.n;
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i)
    if (s.mate[i] > i) blocks.push_back({i, s.mate[i]});
  for (int j = 0; j < n; ++j)
    if (t.mate[j] > j) blocks.push_back({n + j, n + t.mate[j]});
  // join defects per colour, in order
  std::vector<std::vector<int>> s_def(m), t_def(m);
  for (int i = 0; i < n; ++i)
    if (s.mate[i] < 0) s_def[s.colour[i]].push_back(i);
  for (int j = 0; j < n; ++j)
    if (t.mate[j] < 0) t_def[t.colour[j]].push_back(j);
  for (int c = 0; c < m; ++c)
    for (size_t k = 0; k < s_def[c].size(); ++k) blocks.push_back({s_def[c][k], n + t_def[c][k]});
  std::vector<int> colours(2 * n);
  for (int i = 0; i < n; ++i) colours[i] = s.colour[i];
  for (int j = 0; j < n; ++j) colours[n + j] = t.colour[j];
  return ColouredDiagram(m, SetPartition(n, n, std::move(blocks)), std::move(colours));
}

}  // namespace cellab
