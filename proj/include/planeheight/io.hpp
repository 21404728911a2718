#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "planeheight/disk.hpp"
#include "planeheight/sweep.hpp"

namespace planeheight {

/// Malformed drawing or descriptor file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {tree, interior, boundary_in, moves:[{kind,args}], boundary_out}.
/// kind is "vertex" (args v, start, left, pos), "left_bend" (edge, gap) or
/// "right_bend" (pos).
std::string drawing_to_json(const Drawing& d, int indent = -1);

/// Reads what drawing_to_json writes. Without "tree" the caller's tree is used;
/// without "interior" every vertex is inside.
Drawing drawing_from_json(std::string_view text, const OrderedTree* tree = nullptr);

/// Descriptor {spine, left, right}: edge ids oriented away from the endpoint
/// that lies on the spine. An empty descriptor is the whole tree.
DiskKey descriptor_from_json(const OrderedTree& t, std::string_view text);

}  // namespace planeheight
