#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planeheight/tree.hpp"

namespace planeheight {

/// A local disk of an ambient tree: the interior vertex set plus the boundary
/// edges crossing its left and right arcs, each listed top to bottom.
struct LocalDisk {
  OrderedTree tree;
  std::vector<char> interior;
  std::vector<EdgeId> left;
  std::vector<EdgeId> right;

  static LocalDisk whole(const OrderedTree& t);
  int interior_count() const;
  bool is_interior(VertexId v) const { return interior[v] != 0; }
  /// Endpoint of a boundary edge inside the disk.
  VertexId inner_end(EdgeId e) const;
  VertexId outer_end(EdgeId e) const { return tree.other_end(e, inner_end(e)); }
  /// Throws std::invalid_argument when the boundary does not match the interior.
  void validate() const;
};

enum class MoveKind { Vertex, LeftBend, RightBend };

/// One sweep event.
///  Vertex:    rotation[start .. start+left-1] (cyclic) are the edges met from
///             the left, read bottom to top; they occupy frontier[pos .. pos+left-1]
///             top to bottom. The other edges leave to the right, top to bottom
///             rotation[start+left], ..., and are inserted at pos.
///  LeftBend:  a new strand of `edge` enters at gap `pos` (two crossings).
///  RightBend: crossings pos and pos+1 are joined.
struct Move {
  MoveKind kind = MoveKind::Vertex;
  VertexId vertex = -1;
  int start = 0;
  int left = 0;
  EdgeId edge = -1;
  int pos = 0;

  static Move vertex_move(VertexId v, int start, int left, int pos) { return {MoveKind::Vertex, v, start, left, -1, pos}; }
  static Move left_bend(EdgeId e, int gap) { return {MoveKind::LeftBend, -1, 0, 0, e, gap}; }
  static Move right_bend(int pos) { return {MoveKind::RightBend, -1, 0, 0, -1, pos}; }

  bool is_bend() const { return kind != MoveKind::Vertex; }
  bool operator==(const Move&) const = default;
};

std::string to_string(const Move& m);

/// What a move does to the frontier: `removed` crossings at pos are replaced by
/// `inserted` new ones.
struct FrontierEffect {
  int pos;
  int removed;
  int inserted;
};
FrontierEffect effect_of(const OrderedTree& t, const Move& m);

struct Drawing {
  LocalDisk disk;
  std::vector<Move> moves;
};

struct Crossing {
  EdgeId edge;
  int strand;
  bool operator==(const Crossing&) const = default;
};

/// A connected piece of an edge left of the sweep line. `attached` holds bit 0
/// for the parent endpoint and bit 1 for the child endpoint.
struct Strand {
  EdgeId edge;
  int crossings;
  std::uint8_t attached;
};

struct SweepState {
  std::vector<Crossing> frontier;  // top to bottom
  std::vector<Strand> strands;
  std::vector<char> swept;
  std::vector<int> live;  // live strands per edge
  int swept_count = 0;

  static SweepState initial(const LocalDisk& disk);
};

class IllegalMove : public std::runtime_error {
public:
  IllegalMove(const std::string& what, int index = -1)
      : std::runtime_error(index < 0 ? what : "move " + std::to_string(index) + ": " + what), index_(index) {}
  int index() const { return index_; }

private:
  int index_;
};

std::uint8_t endpoint_bit(const OrderedTree& t, EdgeId e, VertexId v);

/// Applies m in place; throws IllegalMove naming the violated precondition.
void apply_move_inplace(const LocalDisk& disk, SweepState& s, const Move& m);
SweepState apply_move(const LocalDisk& disk, const SweepState& s, const Move& m);

/// Empty string when s is a legal final state, otherwise the reason it is not.
std::string final_state_problem(const LocalDisk& disk, const SweepState& s);

struct ReplayResult {
  std::vector<int> frontier_sizes;  // before the first move, between moves, after the last
  SweepState final_state;
};

/// Replays a drawing, throwing IllegalMove (with index) on the first bad move or
/// on a wrong final state (index = number of moves).
ReplayResult replay(const Drawing& d);
int height_of(const Drawing& d);

struct VertexBalance {
  int move_index;
  VertexId vertex;
  int left;
  int right;
  bool balanced;
};
std::vector<VertexBalance> balance_report(const Drawing& d);
bool is_balanced(const Drawing& d);

enum class StuckStatus { Stuck, NotStuck, NotABend };
StuckStatus classify_stuck(const Drawing& d, int i);

enum class Rule { StuckSlide, BendBendSeparation, BendBendCancellation, VertexBendSeparation, VertexBendCancellation };
std::string to_string(Rule r);

struct Simplification {
  int index;  // first move of the pair
  Rule rule;
  bool strong;
  bool operator==(const Simplification&) const = default;
};

std::vector<Simplification> applicable_simplifications(const Drawing& d);

/// The drawing after rewriting the pair at s.index.
Drawing apply_simplification(const Drawing& d, const Simplification& s);

enum class SimplifyMode { NonStrongOnly, All };

struct SimplifyStats {
  int steps = 0;
  int cancellations = 0;
  int separations = 0;
  int stuck_slides = 0;
};

/// Rewrites to a fixpoint, lowest index first, cancellations before separations
/// before stuck slides.
Drawing simplify(const Drawing& d, SimplifyMode mode, SimplifyStats* stats = nullptr);

/// Balances every vertex by bending edges over or under it, re-simplifying
/// (non-strong rules only) after each step.
Drawing balance(const Drawing& d);

/// Random legal drawing of the disk, produced by a random walk over moves.
/// Returns nullopt if the walk failed to finish within its budget.
std::optional<Drawing> random_drawing(const LocalDisk& disk, std::uint64_t seed, int max_frontier = 8,
                                      double bend_rate = 0.3);

// Geometry ------------------------------------------------------------------

struct Point {
  double x;
  double y;
  bool operator==(const Point&) const = default;
};

struct EdgeCurve {
  EdgeId edge;
  std::vector<Point> points;
};

struct Geometry {
  std::vector<Point> vertices;          // indexed by vertex id; unswept ones are NaN
  std::vector<char> has_vertex;         // vertices drawn in this geometry
  std::vector<EdgeCurve> curves;        // one polyline per drawn edge
  double width = 0;                     // x extent [0, width]
};

Geometry render(const Drawing& d);
std::string to_svg(const Geometry& g);

/// Max number of crossings of a vertical line with the geometry, measured
/// between consecutive distinct x coordinates. Throws on vertical segments.
int verify_rendering(const Geometry& g);

/// True when no two segments of different curves meet except at shared
/// endpoints, and no curve crosses itself.
bool is_planar(const Geometry& g);

}  // namespace planeheight
