#pragma once

#include <string>
#include <vector>

#include "planeheight/sweep.hpp"

namespace planeheight {

/// A spine or skew spine disk of a fixed tree. Boundary edges are stored as
/// darts pointing out of the disk, each side listed top to bottom. The spine is
/// the path spanned by the inner endpoints of the boundary edges; with no
/// boundary at all the disk is the whole tree.
struct DiskKey {
  std::vector<Dart> left;
  std::vector<Dart> right;

  int b() const { return static_cast<int>(std::max(left.size(), right.size())); }
  bool whole() const { return left.empty() && right.empty(); }
  bool operator==(const DiskKey&) const = default;
  auto operator<=>(const DiskKey&) const = default;
};

/// The same disk turned half a turn: sides swap and each list is reversed.
DiskKey rotated(const DiskKey& k);
/// The smaller of k and rotated(k); both have equal optimal height.
DiskKey canonical(const DiskKey& k);
/// Byte string identifying the key exactly.
std::string canonical_key(const DiskKey& k);

enum class Axiom {
  Ok,
  BadDart,         // dart out of range or an edge listed twice
  Disconnected,    // inner endpoints not in one component, or a boundary edge points inward
  SpineNotPath,    // inner endpoints do not lie on one path
  Pairing,         // left/right counts per spine vertex differ by more than one in total
  EndsBare,        // an extreme spine vertex carries no boundary edge
  Order,           // boundary orders not planar with respect to the anchor fan
};
std::string to_string(Axiom a);

struct DiskInfo {
  Axiom status = Axiom::Ok;
  std::vector<char> interior;
  int size = 0;                  // interior vertex count
  std::vector<VertexId> spine;   // spine path, empty for the whole tree
  VertexId skew_vertex = -1;     // vertex where left and right counts differ
  int skew_side = 0;             // +1 extra edge on the right, -1 on the left

  bool ok() const { return status == Axiom::Ok; }
};

/// Checks the disk axioms. A declared spine, when given, must be a simple path
/// whose two ends both carry boundary edges and which spans the inner endpoints.
DiskInfo analyze_disk(const OrderedTree& t, const DiskKey& k, const std::vector<VertexId>* declared_spine = nullptr);
Axiom validate_descriptor(const OrderedTree& t, const DiskKey& k, const std::vector<VertexId>* declared_spine = nullptr);
int interior_vertex_count(const OrderedTree& t, const DiskKey& k);

/// Height of a disk whose interior is one vertex.
int vertex_disk_height(const OrderedTree& t, const DiskKey& k);

/// The equivalent local disk for the sweep engine and the oracle.
LocalDisk to_local_disk(const OrderedTree& t, const DiskKey& k);

/// Bubble of the subtree a dart points into: the dart's reverse is its only
/// boundary edge, on the right.
DiskKey bubble_key(Dart into_subtree);

/// Every valid disk of a small tree, canonical and sorted, the whole tree
/// included. Tries all 3^edges boundary choices.
std::vector<DiskKey> enumerate_disks(const OrderedTree& t);

std::string descriptor_json(const OrderedTree& t, const DiskKey& k);

}  // namespace planeheight
