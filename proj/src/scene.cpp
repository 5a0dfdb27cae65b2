#include "emd/scene.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace emd {

namespace {

using nlohmann::json;

constexpr double kBalanceTol = 1e-6;

int intrinsic_dim(SideKind k) {
  switch (k) {
    case SideKind::Points: return 0;
    case SideKind::Segments: return 1;
    case SideKind::Triangles: return 2;
    case SideKind::Simplices: return -1;  // full-dimensional
  }
  return 0;
}

Vec parse_vec(const json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw std::runtime_error("parse error: expected " + std::to_string(dim) +
                             " coordinates at " + where);
  Vec v(dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_number()) throw std::runtime_error("parse error: non-numeric coordinate at " + where);
    v[i] = j[i].get<double>();
  }
  if (!v.finite()) throw std::runtime_error("parse error: non-finite coordinate at " + where);
  return v;
}

MassSide parse_side(const json& j, int dim, const std::string& name) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("items"))
    throw std::runtime_error("parse error: side " + name + " needs \"kind\" and \"items\"");
  MassSide side;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "points")
    side.kind = SideKind::Points;
  else if (kind == "segments")
    side.kind = SideKind::Segments;
  else if (kind == "triangles")
    side.kind = SideKind::Triangles;
  else if (kind == "simplices")
    side.kind = SideKind::Simplices;
  else
    throw std::runtime_error("parse error: unknown kind \"" + kind + "\" in side " + name);

  const json& items = j["items"];
  if (!items.is_array() || items.empty())
    throw std::runtime_error("parse error: side " + name + " has no items");

  int vertex_count = 0;
  switch (side.kind) {
    case SideKind::Points: vertex_count = 0; break;
    case SideKind::Segments: vertex_count = 2; break;
    case SideKind::Triangles: vertex_count = 3; break;
    case SideKind::Simplices: vertex_count = dim + 1; break;
  }

  for (size_t i = 0; i < items.size(); ++i) {
    const std::string where = "side " + name + " item " + std::to_string(i);
    const json& it = items[i];
    if (side.kind == SideKind::Points) {
      if (!it.is_object() || !it.contains("pos") || !it.contains("mass"))
        throw std::runtime_error("parse error: " + where + " needs \"pos\" and \"mass\"");
      WeightedPoint wp;
      wp.position = parse_vec(it["pos"], dim, where);
      wp.mass = it["mass"].get<double>();
      if (!(wp.mass > 0.0) || !std::isfinite(wp.mass))
        throw std::runtime_error("invalid mass at " + where);
      side.points.push_back(wp);
      continue;
    }
    if (!it.is_array() || static_cast<int>(it.size()) != vertex_count)
      throw std::runtime_error("parse error: " + where + " expected " +
                               std::to_string(vertex_count) + " vertices");
    if (side.kind == SideKind::Segments) {
      SegmentGeom s;
      s.a = parse_vec(it[0], dim, where);
      s.b = parse_vec(it[1], dim, where);
      if (segment_length(s) <= 0.0)
        throw std::runtime_error("degenerate object at index " + std::to_string(i) + " in side " + name);
      side.segments.push_back(s);
    } else {
      SimplexGeom g;
      for (int v = 0; v < vertex_count; ++v) g.vertices.push_back(parse_vec(it[v], dim, where));
      try {
        simplex_measure(g);
      } catch (const std::exception&) {
        throw std::runtime_error("degenerate object at index " + std::to_string(i) + " in side " + name);
      }
      side.simplices.push_back(g);
    }
  }
  return side;
}

json side_to_json(const MassSide& side, int dim) {
  json j;
  j["kind"] = side_kind_name(side.kind);
  json items = json::array();
  auto vec_json = [dim](const Vec& v) {
    json a = json::array();
    for (int i = 0; i < dim; ++i) a.push_back(v[i]);
    return a;
  };
  if (side.kind == SideKind::Points) {
    for (const auto& p : side.points) items.push_back({{"pos", vec_json(p.position)}, {"mass", p.mass}});
  } else if (side.kind == SideKind::Segments) {
    for (const auto& s : side.segments) items.push_back(json::array({vec_json(s.a), vec_json(s.b)}));
  } else {
    for (const auto& s : side.simplices) {
      json verts = json::array();
      for (const auto& v : s.vertices) verts.push_back(vec_json(v));
      items.push_back(verts);
    }
  }
  j["items"] = items;
  return j;
}

}  // namespace

const char* side_kind_name(SideKind k) {
  switch (k) {
    case SideKind::Points: return "points";
    case SideKind::Segments: return "segments";
    case SideKind::Triangles: return "triangles";
    case SideKind::Simplices: return "simplices";
  }
  return "?";
}

int MassSide::object_count() const {
  switch (kind) {
    case SideKind::Points: return static_cast<int>(points.size());
    case SideKind::Segments: return static_cast<int>(segments.size());
    default: return static_cast<int>(simplices.size());
  }
}

double MassSide::object_mass(int index) const {
  switch (kind) {
    case SideKind::Points: return points[index].mass;
    case SideKind::Segments: return segment_length(segments[index]);
    default: return simplex_measure(simplices[index]);
  }
}

double MassSide::total_mass() const {
  double t = 0.0;
  for (int i = 0; i < object_count(); ++i) t += object_mass(i);
  return t;
}

MassScene load_scene(const std::string& text, const LoadOptions& opt) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("parse error: top level must be an object");
  MassScene sc;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw std::runtime_error("parse error: missing integer \"dimension\"");
  sc.dimension = j["dimension"].get<int>();
  if (sc.dimension < 1 || sc.dimension > kMaxDim)
    throw std::runtime_error("invalid dimension " + std::to_string(sc.dimension) +
                             " (supported: 1.." + std::to_string(kMaxDim) + ")");
  if (!j.contains("metric")) throw std::runtime_error("parse error: missing \"metric\"");
  const std::string m = j["metric"].get<std::string>();
  if (m == "l1")
    sc.metric = Metric::L1;
  else if (m == "l2")
    sc.metric = Metric::L2;
  else
    throw std::runtime_error("parse error: metric must be \"l1\" or \"l2\"");
  if (!j.contains("P") || !j.contains("S"))
    throw std::runtime_error("parse error: missing side \"P\" or \"S\"");
  sc.sideP = parse_side(j["P"], sc.dimension, "P");
  sc.sideS = parse_side(j["S"], sc.dimension, "S");

  if (sc.sideP.kind == SideKind::Triangles || sc.sideS.kind == SideKind::Triangles) {
    if (sc.dimension != 2) throw std::runtime_error("triangles require dimension 2");
  }
  // Mixed object kinds are not supported; points pair with anything.
  if (sc.sideP.kind != SideKind::Points && sc.sideS.kind != SideKind::Points &&
      sc.sideP.kind != sc.sideS.kind)
    throw std::runtime_error("kind mismatch: object sides must have the same kind");

  const double massP = sc.sideP.total_mass();
  const double massS = sc.sideS.total_mass();
  if (!(massP > 0.0) || !(massS > 0.0)) throw std::runtime_error("zero total mass");
  const double rel = std::abs(massP - massS) / std::max(massP, massS);
  if (rel > kBalanceTol) {
    if (!opt.rebalance)
      throw std::runtime_error("unbalanced mass: side P has " + std::to_string(massP) +
                               ", side S has " + std::to_string(massS) +
                               " (pass --rebalance to rescale a points side)");
    if (sc.sideP.kind == SideKind::Points) {
      const double f = massS / massP;
      for (auto& p : sc.sideP.points) p.mass *= f;
    } else if (sc.sideS.kind == SideKind::Points) {
      const double f = massP / massS;
      for (auto& p : sc.sideS.points) p.mass *= f;
    } else {
      throw std::runtime_error(
          "unbalanced mass: cannot rebalance object sides (measure is geometric)");
    }
  }
  sc.total_input_mass = sc.sideP.total_mass();
  sc.scale_factor = 1.0;
  return sc;
}

MassScene load_scene_file(const std::string& path, const LoadOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scene file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_scene(ss.str(), opt);
}

std::string scene_to_json(const MassScene& scene) {
  json j;
  j["metric"] = metric_name(scene.metric);
  j["dimension"] = scene.dimension;
  j["P"] = side_to_json(scene.sideP, scene.dimension);
  j["S"] = side_to_json(scene.sideS, scene.dimension);
  return j.dump(2);
}

namespace {

void scale_side(MassSide& side, double lambda) {
  for (auto& p : side.points) p.position = p.position * lambda;
  for (auto& s : side.segments) {
    s.a = s.a * lambda;
    s.b = s.b * lambda;
  }
  for (auto& s : side.simplices)
    for (auto& v : s.vertices) v = v * lambda;
}

double side_longest_edge(const MassSide& side) {
  double m = 0.0;
  for (const auto& s : side.segments) m = std::max(m, segment_length(s));
  for (const auto& s : side.simplices) m = std::max(m, longest_edge(s));
  return m;
}

}  // namespace

MassScene normalize(const MassScene& scene) {
  MassScene sc = scene;
  const double massP = sc.sideP.total_mass();
  const double massS = sc.sideS.total_mass();
  const double rel = std::abs(massP - massS) / std::max(massP, massS);
  if (rel > kBalanceTol) throw std::runtime_error("normalize: unbalanced scene");

  // The coordinate scale is fixed by an object side (measure scales as
  // lambda^k); a pure points scene only rescales weights.
  double lambda = 1.0;
  const MassSide* obj = nullptr;
  if (sc.sideP.kind != SideKind::Points)
    obj = &sc.sideP;
  else if (sc.sideS.kind != SideKind::Points)
    obj = &sc.sideS;
  if (obj != nullptr) {
    int k = intrinsic_dim(obj->kind);
    if (k < 0) k = sc.dimension;
    lambda = std::pow(obj->total_mass(), -1.0 / k);
  }
  scale_side(sc.sideP, lambda);
  scale_side(sc.sideS, lambda);
  for (MassSide* side : {&sc.sideP, &sc.sideS}) {
    if (side->kind == SideKind::Points) {
      const double t = side->total_mass();
      for (auto& p : side->points) p.mass /= t;
    }
  }
  sc.scale_factor = scene.scale_factor / lambda;
  sc.longest_edge = std::max(side_longest_edge(sc.sideP), side_longest_edge(sc.sideS));
  return sc;
}

}  // namespace emd
