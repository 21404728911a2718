#include "planeheight/io.hpp"

#include <algorithm>

#include "json.hpp"

namespace planeheight {

using nlohmann::json;

std::string drawing_to_json(const Drawing& d, int indent) {
  json j;
  j["tree"] = serialize_tree(d.disk.tree);
  std::vector<VertexId> inside;
  for (VertexId v = 0; v < d.disk.tree.vertex_count(); ++v)
    if (d.disk.is_interior(v)) inside.push_back(v);
  j["interior"] = inside;
  j["boundary_in"] = d.disk.left;
  j["boundary_out"] = d.disk.right;
  j["moves"] = json::array();
  for (const Move& m : d.moves) {
    switch (m.kind) {
      case MoveKind::Vertex:
        j["moves"].push_back({{"kind", "vertex"}, {"args", {m.vertex, m.start, m.left, m.pos}}});
        break;
      case MoveKind::LeftBend:
        j["moves"].push_back({{"kind", "left_bend"}, {"args", {m.edge, m.pos}}});
        break;
      case MoveKind::RightBend:
        j["moves"].push_back({{"kind", "right_bend"}, {"args", {m.pos}}});
        break;
    }
  }
  return j.dump(indent);
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("bad JSON: ") + e.what());
  }
}

std::vector<int> int_list(const json& j, const char* field) {
  if (!j.contains(field)) return {};
  const json& a = j.at(field);
  if (!a.is_array()) throw FormatError(std::string(field) + " must be an array");
  std::vector<int> out;
  for (const auto& x : a) {
    if (!x.is_number_integer()) throw FormatError(std::string(field) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Drawing drawing_from_json(std::string_view text, const OrderedTree* tree) {
  json j = parse_json(text);
  if (!j.is_object()) throw FormatError("drawing must be a JSON object");
  OrderedTree t;
  if (j.contains("tree")) {
    if (!j["tree"].is_string()) throw FormatError("tree must be a string");
    t = parse_tree(j["tree"].get<std::string>());
  } else if (tree) {
    t = *tree;
  } else {
    throw FormatError("drawing has no tree");
  }
  Drawing d{LocalDisk{t, std::vector<char>(t.vertex_count(), j.contains("interior") ? 0 : 1), {}, {}}, {}};
  for (int v : int_list(j, "interior")) {
    if (v < 0 || v >= t.vertex_count()) throw FormatError("interior vertex out of range");
    d.disk.interior[v] = 1;
  }
  for (int e : int_list(j, "boundary_in")) d.disk.left.push_back(e);
  for (int e : int_list(j, "boundary_out")) d.disk.right.push_back(e);
  for (auto* side : {&d.disk.left, &d.disk.right})
    for (EdgeId e : *side)
      if (e < 0 || e >= t.edge_count()) throw FormatError("boundary edge out of range");
  if (!j.contains("moves") || !j["moves"].is_array()) throw FormatError("moves must be an array");
  for (const auto& m : j["moves"]) {
    if (!m.is_object() || !m.contains("kind") || !m["kind"].is_string()) throw FormatError("move needs a kind");
    const std::string kind = m["kind"];
    std::vector<int> a = int_list(m, "args");
    auto need = [&](std::size_t n) {
      if (a.size() != n) throw FormatError(kind + " takes " + std::to_string(n) + " args");
    };
    if (kind == "vertex") {
      need(4);
      d.moves.push_back(Move::vertex_move(a[0], a[1], a[2], a[3]));
    } else if (kind == "left_bend") {
      need(2);
      d.moves.push_back(Move::left_bend(a[0], a[1]));
    } else if (kind == "right_bend") {
      need(1);
      d.moves.push_back(Move::right_bend(a[0]));
    } else {
      throw FormatError("unknown move kind " + kind);
    }
  }
  return d;
}

DiskKey descriptor_from_json(const OrderedTree& t, std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object()) throw FormatError("descriptor must be a JSON object");
  std::vector<int> spine = int_list(j, "spine");
  std::vector<char> on(t.vertex_count(), 0);
  for (int v : spine) {
    if (v < 0 || v >= t.vertex_count()) throw FormatError("spine vertex out of range");
    on[v] = 1;
  }
  auto orient = [&](int e) {
    if (e < 0 || e >= t.edge_count()) throw FormatError("edge out of range");
    const auto& te = t.edge(e);
    if (on[te.parent] == on[te.child]) throw FormatError("edge " + std::to_string(e) + " does not leave the spine");
    return t.dart_from(e, on[te.parent] ? te.parent : te.child);
  };
  DiskKey k;
  for (int e : int_list(j, "left")) k.left.push_back(orient(e));
  for (int e : int_list(j, "right")) k.right.push_back(orient(e));
  return k;
}

}  // namespace planeheight
