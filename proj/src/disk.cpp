#include "planeheight/disk.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace planeheight {

DiskKey rotated(const DiskKey& k) {
  DiskKey r{{k.right.rbegin(), k.right.rend()}, {k.left.rbegin(), k.left.rend()}};
  return r;
}

DiskKey canonical(const DiskKey& k) {
  DiskKey r = rotated(k);
  return r < k ? r : k;
}

std::string canonical_key(const DiskKey& k) {
  std::string s;
  s.reserve(4 * (k.left.size() + k.right.size()) + 2);
  auto put = [&](Dart d) {
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((static_cast<unsigned>(d) >> (8 * i)) & 0xff));
  };
  for (Dart d : k.left) put(d);
  s.push_back('|');
  s.push_back(static_cast<char>(k.left.size() & 0xff));
  for (Dart d : k.right) put(d);
  return s;
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Ok:
      return "ok";
    case Axiom::BadDart:
      return "bad boundary dart";
    case Axiom::Disconnected:
      return "boundary does not enclose a connected interior";
    case Axiom::SpineNotPath:
      return "boundary edges do not hang off one spine path";
    case Axiom::Pairing:
      return "left and right boundary edges are not paired along the spine";
    case Axiom::EndsBare:
      return "an extreme spine vertex carries no boundary edge";
    case Axiom::Order:
      return "boundary order is not planar";
  }
  return "?";
}

DiskInfo analyze_disk(const OrderedTree& t, const DiskKey& k, const std::vector<VertexId>* declared_spine) {
  DiskInfo info;
  const int n = t.vertex_count();
  const int E = t.edge_count();
  std::vector<char> boundary(E, 0);
  for (const auto* side : {&k.left, &k.right})
    for (Dart d : *side) {
      if (d < 0 || d >= 2 * E || boundary[dart_edge(d)]) {
        info.status = Axiom::BadDart;
        return info;
      }
      boundary[dart_edge(d)] = 1;
    }
  if (k.whole()) {
    info.interior.assign(n, 1);
    info.size = n;
    if (declared_spine && declared_spine->size() > 1) info.status = Axiom::EndsBare;
    return info;
  }

  const Dart first = k.left.empty() ? k.right[0] : k.left[0];
  info.interior.assign(n, 0);
  std::vector<VertexId> queue{t.dart_tail(first)};
  info.interior[queue[0]] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (EdgeId e : t.rotation(queue[i])) {
      if (boundary[e]) continue;
      VertexId w = t.other_end(e, queue[i]);
      if (!info.interior[w]) {
        info.interior[w] = 1;
        queue.push_back(w);
      }
    }
  info.size = static_cast<int>(queue.size());
  std::vector<char> tail(n, 0);
  for (const auto* side : {&k.left, &k.right})
    for (Dart d : *side) {
      if (!info.interior[t.dart_tail(d)] || info.interior[t.dart_head(d)]) {
        info.status = Axiom::Disconnected;
        return info;
      }
      tail[t.dart_tail(d)] = 1;
    }

  // hull of the inner endpoints: peel interior leaves that carry no boundary edge
  std::vector<int> deg(n, 0);
  std::vector<char> in_hull = info.interior;
  for (EdgeId e = 0; e < E; ++e)
    if (!boundary[e] && info.interior[t.edge(e).parent]) {
      ++deg[t.edge(e).parent];
      ++deg[t.edge(e).child];
    }
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v)
    if (in_hull[v] && deg[v] <= 1 && !tail[v]) leaves.push_back(v);
  while (!leaves.empty()) {
    VertexId v = leaves.back();
    leaves.pop_back();
    if (!in_hull[v]) continue;
    in_hull[v] = 0;
    for (EdgeId e : t.rotation(v)) {
      if (boundary[e]) continue;
      VertexId w = t.other_end(e, v);
      if (in_hull[w] && --deg[w] <= 1 && !tail[w]) leaves.push_back(w);
    }
  }
  VertexId end = -1;
  for (VertexId v = 0; v < n; ++v) {
    if (!in_hull[v]) continue;
    if (deg[v] > 2) {
      info.status = Axiom::SpineNotPath;
      return info;
    }
    if (deg[v] <= 1 && end < 0) end = v;
  }
  for (VertexId prev = -1, v = end; v >= 0;) {
    info.spine.push_back(v);
    VertexId next = -1;
    for (EdgeId e : t.rotation(v)) {
      if (boundary[e]) continue;
      VertexId w = t.other_end(e, v);
      if (w != prev && in_hull[w]) next = w;
    }
    prev = v;
    v = next;
  }
  if (declared_spine) {
    const auto& ds = *declared_spine;
    if (!is_simple_path(t, TreePath{ds})) {
      info.status = Axiom::SpineNotPath;
      return info;
    }
    if (!tail[ds.front()] || !tail[ds.back()]) {
      info.status = Axiom::EndsBare;
      return info;
    }
    std::vector<VertexId> rev(info.spine.rbegin(), info.spine.rend());
    if (ds != info.spine && ds != rev) {
      info.status = Axiom::SpineNotPath;
      return info;
    }
  }

  std::vector<int> balance(n, 0);
  for (Dart d : k.left) --balance[t.dart_tail(d)];
  for (Dart d : k.right) ++balance[t.dart_tail(d)];
  int total = 0;
  for (VertexId v = 0; v < n; ++v)
    if (balance[v]) {
      total += std::abs(balance[v]);
      info.skew_vertex = v;
      info.skew_side = balance[v] > 0 ? 1 : -1;
    }
  if (total > 1) {
    info.status = Axiom::Pairing;
    return info;
  }
  if (total == 0) info.skew_vertex = -1, info.skew_side = 0;

  // clockwise around the contracted spine: right side top to bottom, then left side bottom to top
  std::vector<Dart> expected(k.right);
  expected.insert(expected.end(), k.left.rbegin(), k.left.rend());
  std::vector<Dart> seen;
  for (Dart d : anchor_fan(t, TreePath{info.spine}).anchors)
    if (boundary[dart_edge(d)]) seen.push_back(d);
  auto it = std::find(seen.begin(), seen.end(), expected[0]);
  if (seen.size() != expected.size() || it == seen.end()) {
    info.status = Axiom::Order;
    return info;
  }
  std::rotate(seen.begin(), it, seen.end());
  if (seen != expected) info.status = Axiom::Order;
  return info;
}

Axiom validate_descriptor(const OrderedTree& t, const DiskKey& k, const std::vector<VertexId>* declared_spine) {
  return analyze_disk(t, k, declared_spine).status;
}

int interior_vertex_count(const OrderedTree& t, const DiskKey& k) {
  auto info = analyze_disk(t, k);
  if (!info.ok()) throw std::invalid_argument("invalid disk: " + to_string(info.status));
  return info.size;
}

int vertex_disk_height(const OrderedTree& t, const DiskKey& k) {
  if (interior_vertex_count(t, k) != 1) throw std::invalid_argument("not a vertex disk");
  return std::max<int>({1, static_cast<int>(k.left.size()), static_cast<int>(k.right.size())});
}

LocalDisk to_local_disk(const OrderedTree& t, const DiskKey& k) {
  auto info = analyze_disk(t, k);
  if (info.status == Axiom::BadDart || info.status == Axiom::Disconnected)
    throw std::invalid_argument("invalid disk: " + to_string(info.status));
  LocalDisk d{t, info.interior, {}, {}};
  for (Dart x : k.left) d.left.push_back(dart_edge(x));
  for (Dart x : k.right) d.right.push_back(dart_edge(x));
  return d;
}

DiskKey bubble_key(Dart into_subtree) { return {{}, {dart_reverse(into_subtree)}}; }

std::vector<DiskKey> enumerate_disks(const OrderedTree& t) {
  const int E = t.edge_count();
  std::set<DiskKey> out{DiskKey{}};
  std::vector<int> pick(E, 0);  // 0 inside, 1 parent side out, 2 child side out
  for (;;) {
    std::vector<Dart> chosen;
    for (EdgeId e = 0; e < E; ++e)
      if (pick[e]) chosen.push_back(dart_of(e, pick[e] == 2));
    if (!chosen.empty()) {
      auto info = analyze_disk(t, {{}, chosen});
      if (info.status != Axiom::BadDart && info.status != Axiom::Disconnected && info.status != Axiom::SpineNotPath) {
        std::vector<Dart> cyc;
        for (Dart d : anchor_fan(t, TreePath{info.spine}).anchors)
          if (std::find(chosen.begin(), chosen.end(), d) != chosen.end()) cyc.push_back(d);
        const int m = static_cast<int>(cyc.size());
        for (int st = 0; st < m; ++st)
          for (int r = 0; r <= m; ++r) {
            DiskKey k;
            for (int j = 0; j < r; ++j) k.right.push_back(cyc[(st + j) % m]);
            for (int j = m - 1; j >= r; --j) k.left.push_back(cyc[(st + j) % m]);
            if (analyze_disk(t, k).ok()) out.insert(canonical(k));
          }
      }
    }
    int e = 0;
    while (e < E && pick[e] == 2) pick[e++] = 0;
    if (e == E) break;
    ++pick[e];
  }
  return {out.begin(), out.end()};
}

std::string descriptor_json(const OrderedTree& t, const DiskKey& k) {
  auto info = analyze_disk(t, k);
  nlohmann::json j;
  j["spine"] = info.spine;
  std::vector<EdgeId> l, r;
  for (Dart d : k.left) l.push_back(dart_edge(d));
  for (Dart d : k.right) r.push_back(dart_edge(d));
  j["left"] = l;
  j["right"] = r;
  if (info.skew_vertex >= 0) {
    // the unpaired edge: lowest one of the skew vertex on the heavier side
    const auto& heavy = info.skew_side > 0 ? k.right : k.left;
    EdgeId extra = -1;
    for (Dart d : heavy)
      if (t.dart_tail(d) == info.skew_vertex) extra = dart_edge(d);
    j["skew"] = {{"edge", extra}, {"vertex", info.skew_vertex}, {"side", info.skew_side > 0 ? "right" : "left"}};
  }
  else
    j["skew"] = nullptr;
  j["status"] = to_string(info.status);
  return j.dump();
}

}  // namespace planeheight
