#include "planeheight/dp.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace planeheight {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

using Lookup = std::function<std::optional<int>(const DiskKey&)>;

struct WrapEdge {
  DiskKey to;  // raw neighbour
  CaseTag tag;
  int floor;   // height of the column where the bend closes
};

// The four ways to route one boundary edge around the rest of the disk.
std::vector<WrapEdge> wrap_options(const DiskKey& d) {
  std::vector<WrapEdge> out;
  const int L = static_cast<int>(d.left.size()), R = static_cast<int>(d.right.size());
  if (L) {
    DiskKey a{{d.left.begin(), d.left.end() - 1}, d.right};
    a.right.push_back(d.left.back());
    out.push_back({a, CaseTag::WrapLeftBottom, R + 2});
    DiskKey b{{d.left.begin() + 1, d.left.end()}, {d.left.front()}};
    b.right.insert(b.right.end(), d.right.begin(), d.right.end());
    out.push_back({b, CaseTag::WrapLeftTop, R + 2});
  }
  if (R) {
    DiskKey a{d.left, {d.right.begin(), d.right.end() - 1}};
    a.left.push_back(d.right.back());
    out.push_back({a, CaseTag::WrapRightBottom, L + 2});
    DiskKey b{{d.right.front()}, {d.right.begin() + 1, d.right.end()}};
    b.left.insert(b.left.end(), d.left.begin(), d.left.end());
    out.push_back({b, CaseTag::WrapRightTop, L + 2});
  }
  return out;
}

void consider(OptRecord& best, int h, CaseTag tag, std::vector<DiskKey> children, std::vector<int> offsets) {
  if (h < best.height) best = {h, tag, std::move(children), std::move(offsets)};
}

// Best decomposition of d that does not keep the interior: a single vertex,
// a bubble, or a cut of the spine. Child heights come from `get`.
OptRecord evaluate(const OrderedTree& t, const DiskKey& d, const DiskInfo& info, const Lookup& get) {
  OptRecord best;
  best.height = kInf;
  const int n = t.vertex_count();
  const int L = static_cast<int>(d.left.size()), R = static_cast<int>(d.right.size());
  if (info.size == 1) {
    best.height = std::max({1, L, R});
    best.tag = CaseTag::Vertex;
    return best;
  }

  std::vector<char> boundary(t.edge_count(), 0);
  for (Dart x : d.left) boundary[dart_edge(x)] = 1;
  for (Dart x : d.right) boundary[dart_edge(x)] = 1;

  // darts pointing away from the spine inside the interior
  std::vector<Dart> clean;
  {
    std::vector<char> seen(n, 0);
    std::vector<VertexId> queue;
    if (info.spine.empty()) {
      for (EdgeId e = 0; e < t.edge_count(); ++e) {
        clean.push_back(dart_of(e, false));
        clean.push_back(dart_of(e, true));
      }
    } else {
      for (VertexId v : info.spine) {
        seen[v] = 1;
        queue.push_back(v);
      }
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (EdgeId e : t.rotation(queue[i])) {
          VertexId w = t.other_end(e, queue[i]);
          if (boundary[e] || seen[w]) continue;
          seen[w] = 1;
          queue.push_back(w);
          clean.push_back(t.dart_from(e, queue[i]));
        }
    }
  }

  for (Dart f : clean) {
    auto eh = get(bubble_key(f));
    if (!eh) continue;
    for (int s = 0; s < 2; ++s) {
      const auto& list = s ? d.right : d.left;
      const int side = static_cast<int>(list.size());
      if (side + *eh >= best.height) continue;
      for (int p = 0; p <= side; ++p) {
        DiskKey k = d;
        auto& l2 = s ? k.right : k.left;
        l2.insert(l2.begin() + p, f);
        auto h = get(k);
        if (!h) continue;
        int v = std::max(*h, side + *eh);
        if (s)
          consider(best, v, CaseTag::BubbleRight, {k, rotated(bubble_key(f))}, {0, p});
        else
          consider(best, v, CaseTag::BubbleLeft, {bubble_key(f), k}, {p, 0});
      }
    }
  }

  for (std::size_t i = 0; i + 1 < info.spine.size(); ++i)
    for (int o = 0; o < 2; ++o) {
      VertexId x = info.spine[i + o], y = info.spine[i + 1 - o];
      EdgeId g = -1;
      for (EdgeId e : t.rotation(x))
        if (t.other_end(e, x) == y) g = e;
      const Dart gxy = t.dart_from(g, x), gyx = dart_reverse(gxy);
      std::vector<char> iny(n, 0);
      for (VertexId w : side_vertices(t, gxy)) iny[w] = 1;
      auto on_y = [&](Dart a) { return iny[t.dart_tail(a)] != 0; };

      // x's end hangs inside one side
      for (int s = 0; s < 2; ++s) {
        const auto& side = s ? d.right : d.left;
        const auto& other = s ? d.left : d.right;
        if (!std::all_of(other.begin(), other.end(), on_y)) continue;
        int first = -1, last = -1;
        for (int j = 0; j < static_cast<int>(side.size()); ++j)
          if (!on_y(side[j])) {
            if (first < 0) first = j;
            last = j;
          }
        if (first < 0) continue;
        bool run = true;
        for (int j = first; j <= last; ++j) run = run && !on_y(side[j]);
        if (!run) continue;
        std::vector<Dart> xs(side.begin() + first, side.begin() + last + 1), ys(side.begin(), side.begin() + first);
        ys.push_back(gyx);
        ys.insert(ys.end(), side.begin() + last + 1, side.end());
        DiskKey X = s ? DiskKey{{gxy}, xs} : DiskKey{xs, {gxy}};
        DiskKey Y = s ? DiskKey{other, ys} : DiskKey{ys, other};
        auto hx = get(X);
        if (!hx) continue;
        auto hy = get(Y);
        if (!hy) continue;
        int v = std::max(*hx + static_cast<int>(side.size() - xs.size()), *hy);
        if (s)
          consider(best, v, CaseTag::NestRight, {Y, X}, {0, first});
        else
          consider(best, v, CaseTag::NestLeft, {X, Y}, {first, 0});
      }

      // x's part takes the top (or bottom) of both sides
      auto cut = [&](const std::vector<Dart>& v, std::vector<Dart>& xs, std::vector<Dart>& ys, bool x_first) {
        xs.clear();
        ys.clear();
        bool second = false;
        for (Dart a : v) {
          bool y = on_y(a);
          if (y == x_first) second = true;
          else if (second) return false;
          (y ? ys : xs).push_back(a);
        }
        return true;
      };
      for (int arr = 0; arr < 2; ++arr) {
        std::vector<Dart> LX, LY, RX, RY;
        if (!cut(d.left, LX, LY, arr == 0) || !cut(d.right, RX, RY, arr == 0)) continue;
        DiskKey X, Y;
        if (arr == 0) {
          X = {LX, RX};
          X.right.push_back(gxy);
          Y = {{gyx}, RY};
          Y.left.insert(Y.left.end(), LY.begin(), LY.end());
        } else {
          X = {LX, {gxy}};
          X.right.insert(X.right.end(), RX.begin(), RX.end());
          Y = {LY, RY};
          Y.left.push_back(gyx);
        }
        auto hx = get(X);
        if (!hx) continue;
        auto hy = get(Y);
        if (!hy) continue;
        int v = std::max(*hx + static_cast<int>(LY.size()), *hy + static_cast<int>(RX.size()));
        if (arr == 0)
          consider(best, v, CaseTag::StairTop, {X, Y}, {0, static_cast<int>(RX.size())});
        else
          consider(best, v, CaseTag::StairBottom, {X, Y}, {static_cast<int>(LY.size()), 0});
      }
    }
  return best;
}

// Shortest-path relaxation over wraps inside one group of equal interiors.
// `base` holds the non-wrap optimum of every member and is updated in place.
void relax_wraps(std::map<DiskKey, OptRecord>& base, const std::function<std::optional<int>(const DiskKey&)>& fixed) {
  std::map<DiskKey, std::vector<WrapEdge>> back;  // member -> members that can wrap onto it
  for (auto& [y, rec] : base)
    for (auto& w : wrap_options(y)) {
      if (w.to.whole()) continue;
      DiskKey c = canonical(w.to);
      if (base.count(c)) {
        back[c].push_back({y, w.tag, w.floor});
      } else if (auto h = fixed(c)) {
        int v = std::max(*h + 1, w.floor);
        if (v < rec.height) rec = {v, w.tag, {w.to}, {}};
      }
    }
  using Item = std::pair<int, DiskKey>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (auto& [k, rec] : base)
    if (rec.height < kInf) pq.push({rec.height, k});
  std::set<DiskKey> done;
  while (!pq.empty()) {
    auto [h, x] = pq.top();
    pq.pop();
    if (done.count(x) || base[x].height != h) continue;
    done.insert(x);
    for (auto& [y, tag, floor_h] : back[x]) {
      if (done.count(y)) continue;
      int v = std::max(h + 1, floor_h);
      auto& rec = base[y];
      if (v < rec.height) {
        DiskKey raw;
        for (auto& w : wrap_options(y))
          if (w.tag == tag) raw = w.to;
        rec = {v, tag, {raw}, {}};
        pq.push({v, y});
      }
    }
  }
}

std::set<DiskKey> collect_reachable(const DpTable& table) {
  std::set<DiskKey> out;
  if (!table.find(DiskKey{})) return out;
  std::vector<DiskKey> stack{DiskKey{}};
  out.insert(DiskKey{});
  while (!stack.empty()) {
    DiskKey k = stack.back();
    stack.pop_back();
    for (const auto& c : table.find(k)->children) {
      DiskKey cc = canonical(c);
      if (out.insert(cc).second) stack.push_back(cc);
    }
  }
  return out;
}

int trivial_lower_bound(const OrderedTree& t) {
  int lb = 1;
  for (VertexId v = 0; v < t.vertex_count(); ++v) lb = std::max(lb, (t.degree(v) + 1) / 2);
  return lb;
}

class TopDown {
 public:
  explicit TopDown(const OrderedTree& t) : t_(t), table_(t.vertex_count()) {}

  std::optional<int> height(const DiskKey& k) {
    const DiskKey c = canonical(k);
    if (auto* r = table_.find(c)) return r->height < kInf ? std::optional<int>(r->height) : std::nullopt;
    auto info = analyze_disk(t_, c);
    if (!info.ok()) return std::nullopt;
    solve_group(c, info.size);
    const OptRecord* r = table_.find(c);
    return r->height < kInf ? std::optional<int>(r->height) : std::nullopt;
  }

  DpTable take() {
    table_.erase_unsolved();
    return std::move(table_);
  }

 private:
  void solve_group(const DiskKey& start, int size) {
    // every disk with the same interior reachable by wraps
    std::map<DiskKey, OptRecord> group;
    std::vector<DiskKey> order{start};
    group[start];
    for (std::size_t i = 0; i < order.size(); ++i)
      for (auto& w : wrap_options(order[i])) {
        if (w.to.whole()) continue;
        DiskKey c = canonical(w.to);
        if (group.count(c) || table_.find(c) || !analyze_disk(t_, c).ok()) continue;
        group[c];
        order.push_back(c);
      }
    Lookup get = [this](const DiskKey& k) { return height(k); };
    for (auto& k : order) group[k] = evaluate(t_, k, analyze_disk(t_, k), get);
    relax_wraps(group, [this](const DiskKey& c) -> std::optional<int> {
      if (auto* r = table_.find(c)) return r->height < kInf ? std::optional<int>(r->height) : std::nullopt;
      return std::nullopt;
    });
    for (auto& [k, rec] : group) table_.put(size, k, rec);
  }

  const OrderedTree& t_;
  DpTable table_;
};

struct PathData {
  std::vector<VertexId> vertices;
  std::vector<Dart> anchors;  // fan order
  std::vector<int> sizes;
  int big_threshold;          // (2*cap+1)-th largest anchor size, or 0
};

std::vector<PathData> all_paths(const OrderedTree& t, int cap) {
  std::vector<PathData> out;
  for (VertexId a = 0; a < t.vertex_count(); ++a)
    for (VertexId z = a; z < t.vertex_count(); ++z) {
      PathData p;
      p.vertices = path_between(t, a, z).vertices;
      p.anchors = anchor_fan(t, TreePath{p.vertices}).anchors;
      for (Dart d : p.anchors) p.sizes.push_back(t.subtree_size(d));
      std::vector<int> s = p.sizes;
      std::sort(s.rbegin(), s.rend());
      p.big_threshold = static_cast<int>(s.size()) > 2 * cap ? s[2 * cap] : 0;
      out.push_back(std::move(p));
    }
  return out;
}

// Candidates of one row. `eh` gives the exposed height of each dart's subtree
// (kInf when unknown).
void candidates_for_row(const OrderedTree& t, int m, int cap, const std::vector<PathData>& paths,
                        const std::vector<int>& eh, std::set<DiskKey>& out) {
  for (const auto& P : paths) {
    const int p = static_cast<int>(P.vertices.size());
    if (p > m) continue;
    // more than 2*cap anchors too big to stay inside
    if (P.big_threshold > m - p) continue;
    const int A = static_cast<int>(P.anchors.size());
    std::set<std::vector<char>> tried;
    for (int H = 1; H <= cap; ++H)
      for (int b = 1; b <= H; ++b) {
        std::vector<char> forced(A, 0);
        int nforced = 0;
        for (int i = 0; i < A; ++i)
          if (P.sizes[i] > m - p || eh[P.anchors[i]] > H - b + 1) forced[i] = 1, ++nforced;
        if (nforced > 2 * b) continue;
        for (int want = 2 * b - 1; want <= 2 * b; ++want) {
          const int c = want - nforced;
          if (c < 0) continue;
          std::vector<std::vector<int>> adds;
          if (c == 0) adds.push_back({});
          else
            for (VertexId v : P.vertices) {
              std::vector<int> E0, E1;
              for (int i = 0; i < A; ++i) {
                if (forced[i] || t.dart_tail(P.anchors[i]) != v) continue;
                (eh[P.anchors[i]] == H - b + 1 ? E0 : E1).push_back(i);
              }
              for (int k0 = 0; k0 <= c; ++k0) {
                const int k1 = c - k0;
                if (k0 > static_cast<int>(E0.size()) || k1 > static_cast<int>(E1.size())) continue;
                for (int s0 = 0; s0 + k0 <= static_cast<int>(E0.size()); ++s0) {
                  for (int s1 = 0; s1 + k1 <= static_cast<int>(E1.size()); ++s1) {
                    std::vector<int> add(E0.begin() + s0, E0.begin() + s0 + k0);
                    add.insert(add.end(), E1.begin() + s1, E1.begin() + s1 + k1);
                    adds.push_back(std::move(add));
                    if (k1 == 0) break;
                  }
                  if (k0 == 0) break;
                }
              }
            }
          for (const auto& add : adds) {
            std::vector<char> in = forced;
            for (int i : add) in[i] = 1;
            long long inside = p;
            for (int i = 0; i < A; ++i)
              if (!in[i]) inside += P.sizes[i];
            if (inside != m || !tried.insert(in).second) continue;
            std::vector<Dart> cyc;
            for (int i = 0; i < A; ++i)
              if (in[i]) cyc.push_back(P.anchors[i]);
            const int len = static_cast<int>(cyc.size());
            if (len == 0) continue;
            for (int st = 0; st < len; ++st)
              for (int r = 0; r <= len; ++r) {
                DiskKey k;
                for (int j = 0; j < r; ++j) k.right.push_back(cyc[(st + j) % len]);
                for (int j = len - 1; j >= r; --j) k.left.push_back(cyc[(st + j) % len]);
                DiskKey cz = canonical(k);
                if (out.count(cz)) continue;
                if (analyze_disk(t, k).ok()) out.insert(cz);
              }
          }
        }
      }
  }
}

std::vector<int> exposed_from_table(const OrderedTree& t, const DpTable& table) {
  std::vector<int> eh(2 * t.edge_count(), kInf);
  for (Dart d = 0; d < 2 * t.edge_count(); ++d)
    if (auto* r = table.find(bubble_key(d))) eh[d] = r->height;
  return eh;
}

DpTable build_rows(const OrderedTree& t, int cap) {
  const int n = t.vertex_count();
  DpTable table(n);
  auto paths = all_paths(t, cap);
  std::vector<int> eh(2 * t.edge_count(), kInf);
  for (int m = 1; m <= n; ++m) {
    std::set<DiskKey> cands;
    candidates_for_row(t, m, cap, paths, eh, cands);
    if (m == n) cands.insert(DiskKey{});
    Lookup get = [&](const DiskKey& k) -> std::optional<int> {
      if (auto* r = table.find(k)) return r->height;
      return std::nullopt;
    };
    std::map<DiskKey, OptRecord> row;
    for (const auto& k : cands) row[k] = evaluate(t, k, analyze_disk(t, k), get);
    relax_wraps(row, [](const DiskKey&) { return std::nullopt; });
    for (auto& [k, rec] : row)
      if (rec.height < kInf) table.put(m, k, std::move(rec));
    for (Dart d = 0; d < 2 * t.edge_count(); ++d)
      if (t.subtree_size(d) == m)
        if (auto* r = table.find(bubble_key(d))) eh[d] = r->height;
  }
  return table;
}

}  // namespace

std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Vertex: return "vertex";
    case CaseTag::BubbleLeft: return "bubble-left";
    case CaseTag::BubbleRight: return "bubble-right";
    case CaseTag::StairTop: return "stair-top";
    case CaseTag::StairBottom: return "stair-bottom";
    case CaseTag::NestLeft: return "nest-left";
    case CaseTag::NestRight: return "nest-right";
    case CaseTag::WrapLeftBottom: return "wrap-left-bottom";
    case CaseTag::WrapLeftTop: return "wrap-left-top";
    case CaseTag::WrapRightBottom: return "wrap-right-bottom";
    case CaseTag::WrapRightTop: return "wrap-right-top";
  }
  return "?";
}

void DpTable::put(int m, const DiskKey& k, OptRecord rec) {
  rows[m][k] = std::move(rec);
  row_of[k] = m;
}

void DpTable::erase_unsolved() {
  for (auto& row : rows)
    for (auto it = row.begin(); it != row.end();) {
      if (it->second.height < kInf) {
        ++it;
        continue;
      }
      row_of.erase(it->first);
      it = row.erase(it);
    }
}

const OptRecord* DpTable::find(const DiskKey& k) const {
  const DiskKey c = canonical(k);
  auto it = row_of.find(c);
  if (it == row_of.end()) return nullptr;
  return &rows[it->second].at(c);
}

DpResult solve_topdown(const OrderedTree& t) {
  TopDown td(t);
  auto h = td.height(DiskKey{});
  if (!h) throw std::logic_error("top-down: whole tree has no decomposition");
  DpResult res;
  res.height = *h;
  res.table = td.take();
  res.reachable = collect_reachable(res.table);
  return res;
}

DpResult solve_bottomup(const OrderedTree& t, const BottomUpOptions& opt) {
  int cap = opt.start_cap > 0 ? opt.start_cap : trivial_lower_bound(t);
  for (;; ++cap) {
    DpTable table = build_rows(t, cap);
    const OptRecord* whole = table.find(DiskKey{});
    if (whole && whole->height <= cap) {
      DpResult res;
      res.height = whole->height;
      res.table = std::move(table);
      res.reachable = collect_reachable(res.table);
      res.height_cap = cap;
      return res;
    }
    if (cap > t.vertex_count()) throw std::logic_error("bottom-up: no height cap fits");
  }
}

std::vector<DiskKey> seed_row_one(const OrderedTree& t) {
  std::set<DiskKey> out;
  for (VertexId v = 0; v < t.vertex_count(); ++v) {
    const auto& rot = t.rotation(v);
    const int d = static_cast<int>(rot.size());
    for (int s = 0; s < d; ++s)
      for (int k : {d / 2, (d + 1) / 2}) {
        DiskKey key;
        for (int j = k - 1; j >= 0; --j) key.left.push_back(t.dart_from(rot[(s + j) % d], v));
        for (int j = k; j < d; ++j) key.right.push_back(t.dart_from(rot[(s + j) % d], v));
        if (analyze_disk(t, key).ok()) out.insert(canonical(key));
      }
  }
  return {out.begin(), out.end()};
}

std::optional<std::vector<Dart>> forced_boundary(const OrderedTree& t, const AnchorFan& fan, int b, int m) {
  const int p = static_cast<int>(fan.path.vertices.size());
  std::vector<Dart> out;
  for (Dart d : fan.anchors)
    if (t.subtree_size(d) > m - p) out.push_back(d);
  if (static_cast<int>(out.size()) > 2 * b) return std::nullopt;
  return out;
}

bool is_light(int exposed_height, int H, int b) { return exposed_height <= H - b + 1; }

std::vector<DiskKey> enumerate_candidates(const OrderedTree& t, int m, const DpTable& table, int height_cap) {
  std::set<DiskKey> out;
  candidates_for_row(t, m, height_cap, all_paths(t, height_cap), exposed_from_table(t, table), out);
  if (m == t.vertex_count()) out.insert(DiskKey{});
  return {out.begin(), out.end()};
}

namespace {

std::vector<Move> shifted(std::vector<Move> moves, int off) {
  for (auto& m : moves) m.pos += off;
  return moves;
}

LocalDisk rotated_disk(const LocalDisk& d) {
  return {d.tree, d.interior, {d.right.rbegin(), d.right.rend()}, {d.left.rbegin(), d.left.rend()}};
}

std::vector<Move> rotate_moves(const LocalDisk& disk, const std::vector<Move>& moves) {
  const auto& t = disk.tree;
  SweepState s = SweepState::initial(disk);
  std::vector<Move> out;
  for (const Move& m : moves) {
    const std::vector<Crossing> before = s.frontier;
    apply_move_inplace(disk, s, m);
    const int after = static_cast<int>(s.frontier.size());
    switch (m.kind) {
      case MoveKind::Vertex: {
        const int d = t.degree(m.vertex);
        if (d == 0) {
          out.push_back(m);
          break;
        }
        out.push_back(Move::vertex_move(m.vertex, (m.start + m.left) % d, d - m.left, after - m.pos - (d - m.left)));
        break;
      }
      case MoveKind::LeftBend:
        out.push_back(Move::right_bend(after - m.pos - 2));
        break;
      case MoveKind::RightBend:
        out.push_back(Move::left_bend(before[m.pos].edge, after - m.pos));
        break;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Move> moves_for(const OrderedTree& t, const DpTable& table, const DiskKey& k) {
  const DiskKey c = canonical(k);
  const OptRecord* rec = table.find(c);
  if (!rec) throw std::invalid_argument("disk missing from table: " + descriptor_json(t, k));
  std::vector<Move> out;
  auto append = [&](const DiskKey& child, int off) {
    auto mv = shifted(moves_for(t, table, child), off);
    out.insert(out.end(), mv.begin(), mv.end());
  };
  const int L = static_cast<int>(c.left.size()), R = static_cast<int>(c.right.size());
  switch (rec->tag) {
    case CaseTag::Vertex: {
      auto info = analyze_disk(t, c);
      VertexId v = static_cast<VertexId>(std::find(info.interior.begin(), info.interior.end(), 1) - info.interior.begin());
      if (t.degree(v) == 0) out.push_back(Move::vertex_move(v, 0, 0, 0));
      else if (L) out.push_back(Move::vertex_move(v, t.rotation_index(v, dart_edge(c.left.back())), L, 0));
      else out.push_back(Move::vertex_move(v, t.rotation_index(v, dart_edge(c.right.front())), 0, 0));
      break;
    }
    case CaseTag::WrapLeftBottom:
      append(rec->children[0], 0);
      out.push_back(Move::right_bend(R));
      break;
    case CaseTag::WrapLeftTop:
      append(rec->children[0], 1);
      out.push_back(Move::right_bend(0));
      break;
    case CaseTag::WrapRightBottom:
      out.push_back(Move::left_bend(dart_edge(c.right.back()), L));
      append(rec->children[0], 0);
      break;
    case CaseTag::WrapRightTop:
      out.push_back(Move::left_bend(dart_edge(c.right.front()), 0));
      append(rec->children[0], 1);
      break;
    default:
      for (std::size_t i = 0; i < rec->children.size(); ++i) append(rec->children[i], rec->offsets[i]);
  }
  if (c == k) return out;
  return rotate_moves(to_local_disk(t, c), out);
}

}  // namespace

Drawing rotate_drawing(const Drawing& d) { return {rotated_disk(d.disk), rotate_moves(d.disk, d.moves)}; }

Drawing reconstruct_drawing(const OrderedTree& t, const DpTable& table, const DiskKey& k) {
  return {to_local_disk(t, k), moves_for(t, table, k)};
}

std::string dump_table(const OrderedTree& t, const DpTable& table) {
  auto desc = [&](const DiskKey& k) {
    auto j = nlohmann::json::parse(descriptor_json(t, k));
    j.erase("status");
    return j;
  };
  std::ostringstream os;
  for (std::size_t m = 0; m < table.rows.size(); ++m)
    for (const auto& [k, rec] : table.rows[m]) {
      nlohmann::json line;
      line["row"] = m;
      line["key"] = desc(k);
      line["height"] = rec.height;
      line["case_tag"] = to_string(rec.tag);
      line["children"] = nlohmann::json::array();
      for (const auto& c : rec.children) line["children"].push_back(desc(c));
      os << line.dump() << "\n";
    }
  return os.str();
}

}  // namespace planeheight
