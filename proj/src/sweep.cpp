#include "planeheight/sweep.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace planeheight {

LocalDisk LocalDisk::whole(const OrderedTree& t) {
  return {t, std::vector<char>(t.vertex_count(), 1), {}, {}};
}

int LocalDisk::interior_count() const { return static_cast<int>(std::count(interior.begin(), interior.end(), 1)); }

VertexId LocalDisk::inner_end(EdgeId e) const {
  const auto& te = tree.edge(e);
  if (interior[te.parent] == interior[te.child]) throw std::invalid_argument("edge is not a boundary edge");
  return interior[te.parent] ? te.parent : te.child;
}

void LocalDisk::validate() const {
  if (static_cast<int>(interior.size()) != tree.vertex_count()) throw std::invalid_argument("interior mask has wrong size");
  std::vector<int> side(tree.edge_count(), 0);
  for (EdgeId e : left) {
    if (e < 0 || e >= tree.edge_count()) throw std::invalid_argument("boundary edge out of range");
    if (side[e]) throw std::invalid_argument("boundary edge listed twice");
    side[e] = 1;
  }
  for (EdgeId e : right) {
    if (e < 0 || e >= tree.edge_count()) throw std::invalid_argument("boundary edge out of range");
    if (side[e]) throw std::invalid_argument("boundary edge listed twice");
    side[e] = 2;
  }
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    bool crosses = interior[tree.edge(e).parent] != interior[tree.edge(e).child];
    if (crosses && !side[e]) throw std::invalid_argument("edge leaving the disk is not a boundary edge");
    if (!crosses && side[e]) throw std::invalid_argument("boundary edge must have exactly one interior endpoint");
  }
}

std::string to_string(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::Vertex:
      os << "V(" << m.vertex << "," << m.start << "," << m.left << "," << m.pos << ")";
      break;
    case MoveKind::LeftBend:
      os << "L(" << m.edge << "," << m.pos << ")";
      break;
    case MoveKind::RightBend:
      os << "R(" << m.pos << ")";
      break;
  }
  return os.str();
}

FrontierEffect effect_of(const OrderedTree& t, const Move& m) {
  switch (m.kind) {
    case MoveKind::Vertex:
      return {m.pos, m.left, t.degree(m.vertex) - m.left};
    case MoveKind::LeftBend:
      return {m.pos, 0, 2};
    case MoveKind::RightBend:
      return {m.pos, 2, 0};
  }
  return {0, 0, 0};
}

std::uint8_t endpoint_bit(const OrderedTree& t, EdgeId e, VertexId v) {
  return t.edge(e).parent == v ? 1 : 2;
}

SweepState SweepState::initial(const LocalDisk& disk) {
  SweepState s;
  const auto& t = disk.tree;
  s.swept.assign(t.vertex_count(), 0);
  s.live.assign(t.edge_count(), 0);
  for (EdgeId e : disk.left) {
    int id = static_cast<int>(s.strands.size());
    s.strands.push_back({e, 1, endpoint_bit(t, e, disk.outer_end(e))});
    s.frontier.push_back({e, id});
    ++s.live[e];
  }
  return s;
}

namespace {

// Attaches one end of strand `id` to endpoint bit `bit`, completing it if both ends are attached.
void attach(SweepState& s, int id, std::uint8_t bit) {
  Strand& st = s.strands[id];
  if (st.attached & bit) throw IllegalMove("strand already attached at that endpoint");
  st.attached |= bit;
  --st.crossings;
  if (st.crossings == 0) {
    if (s.live[st.edge] != 1) throw IllegalMove("completing edge " + std::to_string(st.edge) + " would leave a floating piece");
    --s.live[st.edge];
  }
}

}  // namespace

void apply_move_inplace(const LocalDisk& disk, SweepState& s, const Move& m) {
  const auto& t = disk.tree;
  const int F = static_cast<int>(s.frontier.size());
  switch (m.kind) {
    case MoveKind::Vertex: {
      const VertexId v = m.vertex;
      if (v < 0 || v >= t.vertex_count()) throw IllegalMove("vertex out of range");
      if (!disk.is_interior(v)) throw IllegalMove("vertex " + std::to_string(v) + " is not inside the disk");
      if (s.swept[v]) throw IllegalMove("already-swept vertex " + std::to_string(v));
      const auto& rot = t.rotation(v);
      const int d = static_cast<int>(rot.size());
      if (m.left < 0 || m.left > d) throw IllegalMove("left arc larger than the degree");
      if (m.start < 0 || m.start >= std::max(d, 1)) throw IllegalMove("arc start out of range");
      if (m.pos < 0 || m.pos + m.left > F) throw IllegalMove("block position out of range");
      for (int j = 0; j < m.left; ++j) {
        EdgeId want = rot[(m.start + m.left - 1 - j) % d];
        if (s.frontier[m.pos + j].edge != want)
          throw IllegalMove("non-contiguous block: frontier position " + std::to_string(m.pos + j) + " is not edge " +
                            std::to_string(want));
      }
      for (int j = 0; j < m.left; ++j) {
        const Crossing c = s.frontier[m.pos + j];
        attach(s, c.strand, endpoint_bit(t, c.edge, v));
      }
      std::vector<Crossing> fresh;
      for (int j = m.left; j < d; ++j) {
        EdgeId e = rot[(m.start + j) % d];
        int id = static_cast<int>(s.strands.size());
        s.strands.push_back({e, 1, endpoint_bit(t, e, v)});
        ++s.live[e];
        fresh.push_back({e, id});
      }
      s.frontier.erase(s.frontier.begin() + m.pos, s.frontier.begin() + m.pos + m.left);
      s.frontier.insert(s.frontier.begin() + m.pos, fresh.begin(), fresh.end());
      s.swept[v] = 1;
      ++s.swept_count;
      break;
    }
    case MoveKind::LeftBend: {
      const EdgeId e = m.edge;
      if (e < 0 || e >= t.edge_count()) throw IllegalMove("edge out of range");
      const auto& te = t.edge(e);
      if (!disk.is_interior(te.parent) && !disk.is_interior(te.child))
        throw IllegalMove("edge " + std::to_string(e) + " is not part of the disk");
      if (s.swept[te.parent] && s.swept[te.child] && s.live[e] == 0)
        throw IllegalMove("edge " + std::to_string(e) + " is already complete");
      if (m.pos < 0 || m.pos > F) throw IllegalMove("bend gap out of range");
      int id = static_cast<int>(s.strands.size());
      s.strands.push_back({e, 2, 0});
      ++s.live[e];
      s.frontier.insert(s.frontier.begin() + m.pos, 2, Crossing{e, id});
      break;
    }
    case MoveKind::RightBend: {
      if (m.pos < 0 || m.pos + 1 >= F) throw IllegalMove("non-adjacent crossings: bend position out of range");
      const Crossing a = s.frontier[m.pos];
      const Crossing b = s.frontier[m.pos + 1];
      if (a.edge != b.edge) throw IllegalMove("non-adjacent crossings: positions carry different edges");
      if (a.strand == b.strand) throw IllegalMove("loop closure: both crossings belong to one strand");
      Strand& sa = s.strands[a.strand];
      Strand& sb = s.strands[b.strand];
      if (sa.attached & sb.attached) throw IllegalMove("strands attached at the same endpoint");
      sa.crossings += sb.crossings - 2;
      sa.attached |= sb.attached;
      sb.crossings = 0;
      --s.live[a.edge];
      s.frontier.erase(s.frontier.begin() + m.pos, s.frontier.begin() + m.pos + 2);
      for (auto& c : s.frontier)
        if (c.strand == b.strand) c.strand = a.strand;
      if (sa.crossings == 0) {
        if (s.live[a.edge] != 1) throw IllegalMove("completing edge " + std::to_string(a.edge) + " would leave a floating piece");
        --s.live[a.edge];
      }
      break;
    }
  }
}

SweepState apply_move(const LocalDisk& disk, const SweepState& s, const Move& m) {
  SweepState next = s;
  apply_move_inplace(disk, next, m);
  return next;
}

std::string final_state_problem(const LocalDisk& disk, const SweepState& s) {
  for (VertexId v = 0; v < disk.tree.vertex_count(); ++v)
    if (disk.is_interior(v) && !s.swept[v]) return "vertex " + std::to_string(v) + " never swept";
  if (s.frontier.size() != disk.right.size()) return "final frontier does not match the right boundary";
  for (std::size_t i = 0; i < s.frontier.size(); ++i) {
    const Crossing& c = s.frontier[i];
    if (c.edge != disk.right[i]) return "final frontier does not match the right boundary";
    const Strand& st = s.strands[c.strand];
    if (st.crossings != 1 || !(st.attached & endpoint_bit(disk.tree, c.edge, disk.inner_end(c.edge))))
      return "boundary edge " + std::to_string(c.edge) + " is not connected to its inner endpoint";
  }
  return {};
}

ReplayResult replay(const Drawing& d) {
  ReplayResult r;
  r.final_state = SweepState::initial(d.disk);
  r.frontier_sizes.push_back(static_cast<int>(r.final_state.frontier.size()));
  for (std::size_t i = 0; i < d.moves.size(); ++i) {
    try {
      apply_move_inplace(d.disk, r.final_state, d.moves[i]);
    } catch (const IllegalMove& e) {
      throw IllegalMove(e.what(), static_cast<int>(i));
    }
    r.frontier_sizes.push_back(static_cast<int>(r.final_state.frontier.size()));
  }
  std::string problem = final_state_problem(d.disk, r.final_state);
  if (!problem.empty()) throw IllegalMove(problem, static_cast<int>(d.moves.size()));
  return r;
}

int height_of(const Drawing& d) {
  auto r = replay(d);
  int h = *std::max_element(r.frontier_sizes.begin(), r.frontier_sizes.end());
  if (d.disk.interior_count() > 0) h = std::max(h, 1);
  return h;
}

std::vector<VertexBalance> balance_report(const Drawing& d) {
  std::vector<VertexBalance> out;
  for (std::size_t i = 0; i < d.moves.size(); ++i) {
    const Move& m = d.moves[i];
    if (m.kind != MoveKind::Vertex) continue;
    int right = d.disk.tree.degree(m.vertex) - m.left;
    out.push_back({static_cast<int>(i), m.vertex, m.left, right, std::abs(m.left - right) <= 1});
  }
  return out;
}

bool is_balanced(const Drawing& d) {
  auto r = balance_report(d);
  return std::all_of(r.begin(), r.end(), [](const VertexBalance& b) { return b.balanced; });
}

// Rewriting ------------------------------------------------------------------

namespace {

// Right bend at i encloses the gap left by a closing move at i-1.
bool right_bend_stuck(const OrderedTree& t, const std::vector<Move>& ms, int i) {
  if (i == 0) return false;
  FrontierEffect prev = effect_of(t, ms[i - 1]);
  return prev.inserted == 0 && prev.pos == ms[i].pos + 1;
}

// Left bend at i encloses an opening move at i+1.
bool left_bend_stuck(const OrderedTree& t, const std::vector<Move>& ms, int i) {
  if (i + 1 >= static_cast<int>(ms.size())) return false;
  FrontierEffect next = effect_of(t, ms[i + 1]);
  return next.removed == 0 && next.pos == ms[i].pos + 1;
}

bool stuck(const OrderedTree& t, const std::vector<Move>& ms, int i) {
  if (ms[i].kind == MoveKind::RightBend) return right_bend_stuck(t, ms, i);
  if (ms[i].kind == MoveKind::LeftBend) return left_bend_stuck(t, ms, i);
  return false;
}

// Whether the second move touches what the first one inserted (or sits inside it).
bool connected(const FrontierEffect& a, const FrontierEffect& b) {
  const int lo = a.pos, hi = a.pos + a.inserted;
  if (b.removed > 0) return b.pos < hi && b.pos + b.removed > lo;
  return b.pos > lo && b.pos < hi;
}

// Exchanges two unconnected consecutive moves.
std::pair<Move, Move> exchange(const OrderedTree& t, Move m1, Move m2) {
  FrontierEffect a = effect_of(t, m1), b = effect_of(t, m2);
  if (b.pos + b.removed <= a.pos) {
    m1.pos = a.pos - b.removed + b.inserted;
  } else {
    m2.pos = b.pos - a.inserted + a.removed;
  }
  return {m2, m1};
}

int imbalance(int d, int k) { return std::abs(k - (d - k)); }

}  // namespace

StuckStatus classify_stuck(const Drawing& d, int i) {
  if (i < 0 || i >= static_cast<int>(d.moves.size())) throw std::out_of_range("classify_stuck: index out of range");
  if (!d.moves[i].is_bend()) return StuckStatus::NotABend;
  return stuck(d.disk.tree, d.moves, i) ? StuckStatus::Stuck : StuckStatus::NotStuck;
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::StuckSlide:
      return "stuck-slide";
    case Rule::BendBendSeparation:
      return "bend-bend-separation";
    case Rule::BendBendCancellation:
      return "bend-bend-cancellation";
    case Rule::VertexBendSeparation:
      return "vertex-bend-separation";
    case Rule::VertexBendCancellation:
      return "vertex-bend-cancellation";
  }
  return "?";
}

namespace {

// Rule for the pair (i, i+1), if any.
std::optional<Simplification> rule_at(const OrderedTree& t, const std::vector<Move>& ms, int i) {
  const Move& m1 = ms[i];
  const Move& m2 = ms[i + 1];
  FrontierEffect a = effect_of(t, m1), b = effect_of(t, m2);

  if (m2.kind == MoveKind::RightBend && !right_bend_stuck(t, ms, i + 1)) {
    switch (m1.kind) {
      case MoveKind::RightBend:
        if (right_bend_stuck(t, ms, i)) return Simplification{i, Rule::StuckSlide, false};
        return std::nullopt;
      case MoveKind::LeftBend:
        if (connected(a, b)) return Simplification{i, Rule::BendBendCancellation, false};
        return Simplification{i, Rule::BendBendSeparation, false};
      case MoveKind::Vertex: {
        if (!connected(a, b)) return Simplification{i, Rule::VertexBendSeparation, false};
        const int d = t.degree(m1.vertex);
        bool strong = imbalance(d, m1.left + 1) >= imbalance(d, m1.left);
        return Simplification{i, Rule::VertexBendCancellation, strong};
      }
    }
  }
  if (m1.kind == MoveKind::LeftBend && !left_bend_stuck(t, ms, i)) {
    switch (m2.kind) {
      case MoveKind::LeftBend:
        if (left_bend_stuck(t, ms, i + 1)) return Simplification{i, Rule::StuckSlide, false};
        return std::nullopt;
      case MoveKind::RightBend:
        if (connected(a, b)) return Simplification{i, Rule::BendBendCancellation, false};
        return Simplification{i, Rule::BendBendSeparation, false};
      case MoveKind::Vertex: {
        if (!connected(a, b)) return Simplification{i, Rule::VertexBendSeparation, false};
        const int d = t.degree(m2.vertex);
        bool strong = imbalance(d, m2.left - 1) >= imbalance(d, m2.left);
        return Simplification{i, Rule::VertexBendCancellation, strong};
      }
    }
  }
  return std::nullopt;
}

int priority(Rule r) {
  switch (r) {
    case Rule::BendBendCancellation:
    case Rule::VertexBendCancellation:
      return 0;
    case Rule::BendBendSeparation:
    case Rule::VertexBendSeparation:
      return 1;
    case Rule::StuckSlide:
      return 2;
  }
  return 3;
}

}  // namespace

std::vector<Simplification> applicable_simplifications(const Drawing& d) {
  std::vector<Simplification> out;
  const auto& ms = d.moves;
  for (int i = 0; i + 1 < static_cast<int>(ms.size()); ++i)
    if (auto s = rule_at(d.disk.tree, ms, i)) out.push_back(*s);
  return out;
}

Drawing apply_simplification(const Drawing& d, const Simplification& s) {
  const auto& t = d.disk.tree;
  Drawing out = d;
  auto& ms = out.moves;
  const int i = s.index;
  const Move m1 = ms[i], m2 = ms[i + 1];
  switch (s.rule) {
    case Rule::StuckSlide:
    case Rule::BendBendSeparation:
    case Rule::VertexBendSeparation: {
      auto [x, y] = exchange(t, m1, m2);
      ms[i] = x;
      ms[i + 1] = y;
      break;
    }
    case Rule::BendBendCancellation:
      ms.erase(ms.begin() + i, ms.begin() + i + 2);
      break;
    case Rule::VertexBendCancellation: {
      Move v = m1.kind == MoveKind::Vertex ? m1 : m2;
      const int deg = t.degree(v.vertex);
      if (m1.kind == MoveKind::Vertex) {
        // the right bend joins the topmost or bottommost outgoing edge to its neighbour
        FrontierEffect a = effect_of(t, m1);
        if (m2.pos == a.pos - 1) {
          v.left += 1;
          v.pos -= 1;
        } else {
          v.start = (v.start + deg - 1) % deg;
          v.left += 1;
        }
      } else {
        // the vertex swallows one crossing of the left bend
        if (m2.pos == m1.pos + 1) {
          v.left -= 1;
          v.pos = m1.pos;
        } else {
          v.start = (v.start + 1) % deg;
          v.left -= 1;
        }
      }
      ms[i] = v;
      ms.erase(ms.begin() + i + 1);
      break;
    }
  }
  return out;
}

Drawing simplify(const Drawing& d, SimplifyMode mode, SimplifyStats* stats) {
  Drawing cur = d;
  SimplifyStats local;
  // generous guard; the rewrite system terminates but a bug should not hang
  const long long guard = 1000000LL + 1000LL * static_cast<long long>(d.moves.size()) * d.moves.size();
  for (long long step = 0;; ++step) {
    if (step > guard) throw std::logic_error("simplify did not terminate");
    auto all = applicable_simplifications(cur);
    const Simplification* best = nullptr;
    for (const auto& s : all) {
      if (mode == SimplifyMode::NonStrongOnly && s.strong) continue;
      if (!best || priority(s.rule) < priority(best->rule)) best = &s;
    }
    if (!best) break;
    switch (priority(best->rule)) {
      case 0:
        ++local.cancellations;
        break;
      case 1:
        ++local.separations;
        break;
      default:
        ++local.stuck_slides;
    }
    ++local.steps;
    cur = apply_simplification(cur, *best);
  }
  if (stats) *stats = local;
  return cur;
}

Drawing balance(const Drawing& d) {
  Drawing cur = simplify(d, SimplifyMode::NonStrongOnly);
  const auto& t = cur.disk.tree;
  const int guard = 4 * (static_cast<int>(cur.moves.size()) + 1) * (t.vertex_count() + 1) + 64;
  for (int round = 0;; ++round) {
    if (round > guard) throw std::logic_error("balance did not terminate");
    int at = -1;
    for (int i = 0; i < static_cast<int>(cur.moves.size()); ++i) {
      const Move& m = cur.moves[i];
      if (m.kind == MoveKind::Vertex && imbalance(t.degree(m.vertex), m.left) > 1) {
        at = i;
        break;
      }
    }
    if (at < 0) break;
    const Move m = cur.moves[at];
    const int deg = t.degree(m.vertex);
    const int right = deg - m.left;
    std::vector<Move> repl;
    if (m.left > right) {
      // topmost left edge bent over the top and closed by a right bend
      repl = {Move::vertex_move(m.vertex, m.start, m.left - 1, m.pos + 1), Move::right_bend(m.pos)};
    } else {
      // topmost right edge opened by a left bend above and entered from the left
      EdgeId e = t.rotation(m.vertex)[(m.start + m.left) % deg];
      repl = {Move::left_bend(e, m.pos), Move::vertex_move(m.vertex, m.start, m.left + 1, m.pos + 1)};
    }
    cur.moves.erase(cur.moves.begin() + at);
    cur.moves.insert(cur.moves.begin() + at, repl.begin(), repl.end());
    cur = simplify(cur, SimplifyMode::NonStrongOnly);
  }
  return cur;
}

// Random drawings --------------------------------------------------------------

std::optional<Drawing> random_drawing(const LocalDisk& disk, std::uint64_t seed, int max_frontier, double bend_rate) {
  std::mt19937_64 rng(seed);
  const auto& t = disk.tree;
  const int budget = 20 * (t.vertex_count() + 4) * (max_frontier + 1);
  for (int attempt = 0; attempt < 50; ++attempt) {
    Drawing d{disk, {}};
    SweepState s = SweepState::initial(disk);
    for (int step = 0; step < budget; ++step) {
      if (final_state_problem(disk, s).empty()) return d;
      const int F = static_cast<int>(s.frontier.size());
      std::vector<Move> vertex_moves, merges, opens;
      for (VertexId v = 0; v < t.vertex_count(); ++v) {
        if (!disk.is_interior(v) || s.swept[v]) continue;
        const auto& rot = t.rotation(v);
        const int deg = static_cast<int>(rot.size());
        for (int st = 0; st < std::max(deg, 1); ++st) {
          if (F + deg <= max_frontier)
            for (int g = 0; g <= F; ++g) vertex_moves.push_back(Move::vertex_move(v, st, 0, g));
          for (int k = 1; k <= deg; ++k) {
            if (F - k + (deg - k) > max_frontier) continue;
            for (int p = 0; p + k <= F; ++p) {
              Move m = Move::vertex_move(v, st, k, p);
              try {
                apply_move(disk, s, m);
                vertex_moves.push_back(m);
              } catch (const IllegalMove&) {
              }
            }
          }
        }
      }
      for (int p = 0; p + 1 < F; ++p) {
        Move m = Move::right_bend(p);
        try {
          apply_move(disk, s, m);
          merges.push_back(m);
        } catch (const IllegalMove&) {
        }
      }
      if (F + 2 <= max_frontier)
        for (EdgeId e = 0; e < t.edge_count(); ++e)
          for (int g = 0; g <= F; ++g) {
            Move m = Move::left_bend(e, g);
            try {
              apply_move(disk, s, m);
              opens.push_back(m);
            } catch (const IllegalMove&) {
            }
          }
      std::uniform_real_distribution<double> u(0.0, 1.0);
      const std::vector<Move>* pool = nullptr;
      double r = u(rng);
      if (!opens.empty() && r < bend_rate / 2) pool = &opens;
      else if (!merges.empty() && r < bend_rate) pool = &merges;
      else if (!vertex_moves.empty()) pool = &vertex_moves;
      else if (!merges.empty()) pool = &merges;
      else if (!opens.empty()) pool = &opens;
      if (!pool) break;
      std::uniform_int_distribution<std::size_t> pick(0, pool->size() - 1);
      Move m = (*pool)[pick(rng)];
      apply_move_inplace(disk, s, m);
      d.moves.push_back(m);
    }
  }
  return std::nullopt;
}

}  // namespace planeheight
