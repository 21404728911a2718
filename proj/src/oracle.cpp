#include "planeheight/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace planeheight {

int disk_edge_count(const LocalDisk& disk) {
  int count = 0;
  for (const auto& e : disk.tree.edges())
    if (disk.is_interior(e.parent) || disk.is_interior(e.child)) ++count;
  return count;
}

int height_lower_bound(const LocalDisk& disk) {
  int lb = std::max<int>({1, static_cast<int>(disk.left.size()), static_cast<int>(disk.right.size())});
  for (VertexId v = 0; v < disk.tree.vertex_count(); ++v)
    if (disk.is_interior(v)) lb = std::max(lb, (disk.tree.degree(v) + 1) / 2);
  return lb;
}

namespace {

// Renumbers strands by first appearance on the frontier and drops dead ones.
void normalize(SweepState& s) {
  std::vector<int> remap(s.strands.size(), -1);
  std::vector<Strand> strands;
  for (auto& c : s.frontier) {
    if (remap[c.strand] < 0) {
      remap[c.strand] = static_cast<int>(strands.size());
      strands.push_back(s.strands[c.strand]);
    }
    c.strand = remap[c.strand];
  }
  s.strands = std::move(strands);
}

std::string key_of(const SweepState& s) {
  std::string k;
  k.reserve(3 * s.frontier.size() + s.swept.size() / 8 + 2);
  for (const auto& c : s.frontier) {
    k.push_back(static_cast<char>(c.edge));
    k.push_back(static_cast<char>(c.strand));
    k.push_back(static_cast<char>(s.strands[c.strand].attached));
  }
  k.push_back('|');
  unsigned char acc = 0;
  for (std::size_t v = 0; v < s.swept.size(); ++v) {
    if (s.swept[v]) acc |= static_cast<unsigned char>(1u << (v % 8));
    if (v % 8 == 7) {
      k.push_back(static_cast<char>(acc));
      acc = 0;
    }
  }
  k.push_back(static_cast<char>(acc));
  return k;
}

struct Node {
  SweepState state;
  int parent;
  Move move;
};

// Legal successors of s whose frontier stays within H.
void successors(const LocalDisk& disk, const SweepState& s, int H, bool bends, std::vector<Move>& out) {
  out.clear();
  const auto& t = disk.tree;
  const int F = static_cast<int>(s.frontier.size());
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    if (!disk.is_interior(v) || s.swept[v]) continue;
    const auto& rot = t.rotation(v);
    const int d = static_cast<int>(rot.size());
    if (d == 0) {
      out.push_back(Move::vertex_move(v, 0, 0, 0));
      continue;
    }
    for (int st = 0; st < d; ++st) {
      if (F + d <= H)
        for (int g = 0; g <= F; ++g) out.push_back(Move::vertex_move(v, st, 0, g));
      for (int k = 1; k <= d; ++k) {
        if (F - k + (d - k) > H) continue;
        for (int p = 0; p + k <= F; ++p) {
          bool ok = true;
          for (int j = 0; j < k && ok; ++j) {
            const Crossing& c = s.frontier[p + j];
            if (c.edge != rot[(st + k - 1 - j) % d]) {
              ok = false;
              break;
            }
            const Strand& sd = s.strands[c.strand];
            if (sd.crossings == 1 && s.live[c.edge] != 1) ok = false;
          }
          if (ok) out.push_back(Move::vertex_move(v, st, k, p));
        }
      }
    }
  }
  for (int p = 0; p + 1 < F; ++p) {
    const Crossing &a = s.frontier[p], &b = s.frontier[p + 1];
    if (a.edge != b.edge || a.strand == b.strand) continue;
    const Strand &sa = s.strands[a.strand], &sb = s.strands[b.strand];
    if (sa.attached & sb.attached) continue;
    if (sa.crossings + sb.crossings == 2 && s.live[a.edge] != 2) continue;
    out.push_back(Move::right_bend(p));
  }
  if (bends && F + 2 <= H) {
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
      const auto& te = t.edge(e);
      if (!disk.is_interior(te.parent) && !disk.is_interior(te.child)) continue;
      if (s.swept[te.parent] && s.swept[te.child] && s.live[e] == 0) continue;
      for (int g = 0; g <= F; ++g) out.push_back(Move::left_bend(e, g));
    }
  }
}

// Breadth-first search with frontier size capped at H; returns the witness moves if one exists.
bool search(const LocalDisk& disk, int H, bool bends, std::vector<Move>& witness, long long& expanded) {
  SweepState start = SweepState::initial(disk);
  if (static_cast<int>(start.frontier.size()) > H) return false;
  normalize(start);
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> seen;
  nodes.push_back({start, -1, {}});
  seen.emplace(key_of(start), 0);
  std::vector<Move> moves;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ++expanded;
    if (final_state_problem(disk, nodes[i].state).empty()) {
      witness.clear();
      for (int at = static_cast<int>(i); nodes[at].parent >= 0; at = nodes[at].parent) witness.push_back(nodes[at].move);
      std::reverse(witness.begin(), witness.end());
      return true;
    }
    successors(disk, nodes[i].state, H, bends, moves);
    for (const Move& m : moves) {
      SweepState next = nodes[i].state;
      apply_move_inplace(disk, next, m);
      normalize(next);
      auto [it, fresh] = seen.emplace(key_of(next), static_cast<int>(nodes.size()));
      if (fresh) nodes.push_back({std::move(next), static_cast<int>(i), m});
    }
  }
  return false;
}

OracleResult solve(const LocalDisk& disk, const OracleOptions& opt) {
  disk.validate();
  const int edges = disk_edge_count(disk);
  if (edges > opt.edge_cap) throw OracleScaleExceeded(edges, opt.edge_cap);
  if (disk.interior_count() == 0) throw std::invalid_argument("disk has no interior vertex");
  OracleResult r;
  r.witness.disk = disk;
  for (int H = height_lower_bound(disk); H <= opt.height_limit; ++H) {
    if (search(disk, H, opt.allow_bends, r.witness.moves, r.states)) {
      r.height = H;
      return r;
    }
  }
  throw std::runtime_error("no drawing within the height limit");
}

}  // namespace

OracleResult optimal_height_exact(const LocalDisk& disk, const OracleOptions& opt) { return solve(disk, opt); }

OracleResult optimal_height_bendfree(const LocalDisk& disk, OracleOptions opt) {
  opt.allow_bends = false;
  return solve(disk, opt);
}

LocalDisk bubble_disk(const OrderedTree& t, Dart anchor) {
  LocalDisk disk{t, std::vector<char>(t.vertex_count(), 0), {}, {dart_edge(anchor)}};
  for (VertexId v : side_vertices(t, anchor)) disk.interior[v] = 1;
  return disk;
}

int exposed_height_exact(const OrderedTree& t, Dart anchor, const OracleOptions& opt) {
  return optimal_height_exact(bubble_disk(t, anchor), opt).height;
}

}  // namespace planeheight
