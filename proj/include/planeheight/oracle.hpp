#pragma once

#include <stdexcept>

#include "planeheight/sweep.hpp"

namespace planeheight {

class OracleScaleExceeded : public std::runtime_error {
public:
  explicit OracleScaleExceeded(int edges, int cap)
      : std::runtime_error("oracle scale exceeded: " + std::to_string(edges) + " edges, cap " + std::to_string(cap)) {}
};

struct OracleOptions {
  int edge_cap = 8;
  bool allow_bends = true;
  int height_limit = 64;  // give up (throw) past this height
};

struct OracleResult {
  int height = 0;
  Drawing witness;
  long long states = 0;  // states expanded over all deepening rounds
};

/// Number of edges with at least one endpoint inside the disk.
int disk_edge_count(const LocalDisk& disk);

/// Trivial lower bound: one crossing per boundary edge, ceil(deg/2) at every vertex.
int height_lower_bound(const LocalDisk& disk);

/// Exact minimum height over all drawings of the disk, with a witness.
OracleResult optimal_height_exact(const LocalDisk& disk, const OracleOptions& opt = {});

/// Same search with bends disabled.
OracleResult optimal_height_bendfree(const LocalDisk& disk, OracleOptions opt = {});

/// Height of the bubble holding the head side of `anchor`, with the anchor as
/// its single (right) boundary edge.
int exposed_height_exact(const OrderedTree& t, Dart anchor, const OracleOptions& opt = {});

/// Disk for the head side of a dart with the dart's edge on the right boundary.
LocalDisk bubble_disk(const OrderedTree& t, Dart anchor);

}  // namespace planeheight
