#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "planeheight/disk.hpp"

namespace planeheight {

/// How the optimum of a table entry was obtained.
enum class CaseTag {
  Vertex,       // one interior vertex, drawn by a single vertex move
  BubbleLeft,   // a subtree drawn in a bubble before the rest, crossing the left side
  BubbleRight,  // same, drawn after the rest
  StairTop,     // spine cut; the first part owns the top of both sides
  StairBottom,  // spine cut; the first part owns the bottom of both sides
  NestLeft,     // spine cut; the end part hangs inside the left side
  NestRight,    // spine cut; the end part hangs inside the right side
  WrapLeftBottom,   // bottom left edge passes under the rest and is bent back at the right
  WrapLeftTop,
  WrapRightBottom,  // bottom right edge is bent back at the left and passes under the rest
  WrapRightTop,
};
std::string to_string(CaseTag c);

struct OptRecord {
  int height = 0;
  CaseTag tag = CaseTag::Vertex;
  /// Child disks exactly as the case uses them (not canonicalized), in drawing order.
  std::vector<DiskKey> children;
  /// Frontier offset of each child's band.
  std::vector<int> offsets;
};

/// Rows indexed by interior vertex count; keys are canonical.
struct DpTable {
  std::vector<std::map<DiskKey, OptRecord>> rows;
  std::map<DiskKey, int> row_of;

  explicit DpTable(int n = 0) : rows(n + 1) {}
  void put(int m, const DiskKey& canonical_key, OptRecord rec);
  void erase_unsolved();
  const OptRecord* find(const DiskKey& k) const;
  std::size_t size() const { return row_of.size(); }
};

struct DpResult {
  int height = 0;
  DpTable table;
  /// Canonical keys used by the optimal decomposition of the whole tree.
  std::set<DiskKey> reachable;
  /// Height cap that candidate generation ran with (bottom-up only).
  int height_cap = 0;
};

/// Memoized recursion over every disk the cases can reach. Exact, but the
/// reachable set grows quickly with n.
DpResult solve_topdown(const OrderedTree& t);

struct BottomUpOptions {
  /// First height cap to try; 0 means the trivial lower bound.
  int start_cap = 0;
};

/// Row by row over filtered candidates. The cap on the hypothesized height is
/// raised until the answer fits under it.
DpResult solve_bottomup(const OrderedTree& t, const BottomUpOptions& opt = {});

/// Vertex disks: each vertex with its edges split into a left and a right run
/// whose sizes differ by at most one.
std::vector<DiskKey> seed_row_one(const OrderedTree& t);

/// Anchors of a path whose subtrees cannot fit in an m-vertex disk, or nothing
/// when they already exceed 2b.
std::optional<std::vector<Dart>> forced_boundary(const OrderedTree& t, const AnchorFan& fan, int b, int m);

/// An anchor is light for a disk of height H with b boundary pairs when its
/// subtree can be exposed within H - b + 1.
bool is_light(int exposed_height, int H, int b);

/// Candidate disks with m interior vertices. Rows below m must be complete;
/// exposed heights missing from the table count as too large.
std::vector<DiskKey> enumerate_candidates(const OrderedTree& t, int m, const DpTable& table, int height_cap);

/// Optimal drawing of a disk from a solved table. The whole tree by default.
Drawing reconstruct_drawing(const OrderedTree& t, const DpTable& table, const DiskKey& k = {});

/// The drawing of the same disk turned half a turn.
Drawing rotate_drawing(const Drawing& d);

/// One JSON object per line: key, height, case_tag, children.
std::string dump_table(const OrderedTree& t, const DpTable& table);

}  // namespace planeheight
