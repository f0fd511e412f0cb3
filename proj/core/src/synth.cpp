// Copyright 2026 The icmesh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "icmesh/synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include "icmesh/box_surface.hpp"
#include "icmesh/error.hpp"

namespace icmesh::synth {
namespace {

struct Ring {
  std::vector<double> cos_t;
  std::vector<double> sin_t;
};

Ring unit_ring(int n) {
  Ring ring;
  ring.cos_t.resize(n);
  ring.sin_t.resize(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    ring.cos_t[k] = k == 0 ? 1.0 : std::cos(t);
    ring.sin_t[k] = k == 0 ? 0.0 : std::sin(t);
  }
  return ring;
}

Point3 ring_point(const Vec2& c, const Ring& ring, int k, double r, double z) {
  return {c.x + ring.cos_t[k] * r, c.y + ring.sin_t[k] * r, z};
}

std::vector<double> ring_levels(const SynthSpec& spec) {
  std::vector<double> z(spec.n_z + 1);
  for (int j = 0; j <= spec.n_z; ++j) {
    z[j] = lattice_coordinate(spec.z_min, spec.z_max, spec.n_z, j);
  }
  return z;
}

bool stacked(const SynthSpec& spec) {
  return spec.kind == Kind::kHourglass && spec.slope != 0.0;
}

// Annular solid with one outer wall and inner rings at `levels`.
void append_annulus(const SynthSpec& spec, const Vec2& c,
                    const std::vector<double>& levels,
                    std::vector<Point3>& vertices,
                    std::vector<Triangle>& triangles) {
  const int n = spec.n_theta;
  const int m = static_cast<int>(levels.size());
  const Ring ring = unit_ring(n);
  const Index base = static_cast<Index>(vertices.size());
  for (int k = 0; k < n; ++k) {
    vertices.push_back(ring_point(c, ring, k, spec.r_outer, spec.z_min));
  }
  for (int k = 0; k < n; ++k) {
    vertices.push_back(ring_point(c, ring, k, spec.r_outer, spec.z_max));
  }
  for (int j = 0; j < m; ++j) {
    const double r = inner_radius(spec, levels[j]);
    for (int k = 0; k < n; ++k) {
      vertices.push_back(ring_point(c, ring, k, r, levels[j]));
    }
  }
  const auto ob = [&](int k) { return base + static_cast<Index>(k % n); };
  const auto ot = [&](int k) { return base + static_cast<Index>(n + k % n); };
  const auto in = [&](int j, int k) {
    return base + static_cast<Index>((2 + j) * n + k % n);
  };
  for (int k = 0; k < n; ++k) {
    triangles.push_back({ob(k), ob(k + 1), ot(k + 1)});
    triangles.push_back({ob(k), ot(k + 1), ot(k)});
  }
  for (int j = 0; j + 1 < m; ++j) {
    for (int k = 0; k < n; ++k) {
      triangles.push_back({in(j, k), in(j + 1, k + 1), in(j, k + 1)});
      triangles.push_back({in(j, k), in(j + 1, k), in(j + 1, k + 1)});
    }
  }
  for (int k = 0; k < n; ++k) {
    triangles.push_back({ob(k), in(0, k), in(0, k + 1)});
    triangles.push_back({ob(k), in(0, k + 1), ob(k + 1)});
    triangles.push_back({ot(k), in(m - 1, k + 1), in(m - 1, k)});
    triangles.push_back({ot(k), ot(k + 1), in(m - 1, k + 1)});
  }
}

TriSurfaceMesh annuli(const SynthSpec& spec, const std::vector<double>& levels) {
  std::vector<Point3> vertices;
  std::vector<Triangle> triangles;
  for (const Vec2& c : axes(spec)) {
    append_annulus(spec, c, levels, vertices, triangles);
  }
  return TriSurfaceMesh(std::move(vertices), std::move(triangles));
}

}  // namespace

std::optional<Kind> parse_kind(std::string_view name) {
  if (name == "tube") return Kind::kTube;
  if (name == "hourglass") return Kind::kHourglass;
  if (name == "two_pore" || name == "two-pore") return Kind::kTwoPore;
  return std::nullopt;
}

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kTube: return "tube";
    case Kind::kHourglass: return "hourglass";
    case Kind::kTwoPore: return "two_pore";
  }
  return "unknown";
}

void validate(const SynthSpec& spec) {
  const auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidSpec, what);
  };
  if (!(spec.r_inner > 0.0)) fail("r_inner must be positive");
  if (!(spec.r_outer > spec.r_inner)) fail("r_outer must exceed r_inner");
  if (!(spec.z_min < spec.z_max)) fail("z_min must be below z_max");
  if (spec.n_theta < 3) fail("n_theta must be at least 3");
  if (!(spec.slope >= 0.0) || !std::isfinite(spec.slope)) {
    fail("slope must be a finite nonnegative number");
  }
  if (spec.kind == Kind::kHourglass) {
    if (spec.n_z < 1) fail("n_z must be at least 1");
    if (!(spec.r_inner * (1.0 + spec.slope) < spec.r_outer)) {
      fail("hourglass mouth r_inner * (1 + slope) must stay below r_outer");
    }
  }
  if (spec.kind == Kind::kTwoPore && !(spec.center_offset > spec.r_outer)) {
    fail("center_offset must exceed r_outer so the two solids are disjoint");
  }
}

double inner_radius(const SynthSpec& spec, double z) {
  if (spec.kind != Kind::kHourglass || spec.slope == 0.0) return spec.r_inner;
  const double mid = 0.5 * (spec.z_min + spec.z_max);
  const double half = 0.5 * (spec.z_max - spec.z_min);
  const double s = std::min(1.0, std::abs(std::clamp(z, spec.z_min,
                                                     spec.z_max) - mid) /
                                     half);
  return spec.r_inner * (1.0 + spec.slope * s);
}

double polygon_area(int n, double r) {
  return 0.5 * n * r * r * std::sin(2.0 * std::numbers::pi / n);
}

std::vector<Vec2> axes(const SynthSpec& spec) {
  if (spec.kind == Kind::kTwoPore) {
    return {{-spec.center_offset, 0.0}, {spec.center_offset, 0.0}};
  }
  return {{0.0, 0.0}};
}

TriSurfaceMesh make_tube(const SynthSpec& spec) {
  SynthSpec s = spec;
  s.kind = Kind::kTube;
  validate(s);
  return annuli(s, {s.z_min, s.z_max});
}

TriSurfaceMesh make_hourglass(const SynthSpec& spec) {
  SynthSpec s = spec;
  s.kind = Kind::kHourglass;
  validate(s);
  if (s.slope == 0.0) return make_tube(s);
  return annuli(s, ring_levels(s));
}

TriSurfaceMesh make_two_pore(const SynthSpec& spec) {
  SynthSpec s = spec;
  s.kind = Kind::kTwoPore;
  validate(s);
  return annuli(s, {s.z_min, s.z_max});
}

TriSurfaceMesh make_surface(const SynthSpec& spec) {
  switch (spec.kind) {
    case Kind::kTube: return make_tube(spec);
    case Kind::kHourglass: return make_hourglass(spec);
    case Kind::kTwoPore: return make_two_pore(spec);
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown synthetic kind");
}

namespace {

// Planar vertex whose position at height z is p + u * (alpha * r(z) + beta),
// r(z) being the pore radius there.
struct PlanarVertex {
  Vec2 p;
  Vec2 u;
  double alpha = 0.0;
  double beta = 0.0;
};

enum class Zone : std::uint8_t { kPore, kAnnulus, kOuter };

struct PlanarMesh {
  std::vector<PlanarVertex> vertices;
  std::vector<Triangle> triangles;
  std::vector<Zone> zones;
};

// Coordinate on [lo, hi] through c: j = -q gives lo, 0 gives c, q gives hi.
double side_coordinate(double c, double lo, double hi, int j, int q) {
  if (j == q) return hi;
  if (j == -q) return lo;
  if (j == 0) return c;
  return j > 0 ? c + (hi - c) * j / q : c - (c - lo) * (-j) / q;
}

// Point k of n on the block rectangle, matched to ring angle 2 pi k / n.
Vec2 rect_point(const Vec2& c, double x0, double x1, double y0, double y1,
                int n, int k) {
  const int q = n / 8;
  if (k <= q) return {x1, side_coordinate(c.y, y0, y1, k, q)};
  if (k <= 3 * q) return {side_coordinate(c.x, x0, x1, 2 * q - k, q), y1};
  if (k <= 5 * q) return {x0, side_coordinate(c.y, y0, y1, 4 * q - k, q)};
  if (k <= 7 * q) return {side_coordinate(c.x, x0, x1, k - 6 * q, q), y0};
  return {x1, side_coordinate(c.y, y0, y1, k - n, q)};
}

class PlanarBuilder {
 public:
  Index add(const PlanarVertex& v) {
    if (v.u.x == 0.0 && v.u.y == 0.0) {
      const auto key = std::pair{v.p.x, v.p.y};
      if (const auto it = fixed_.find(key); it != fixed_.end()) {
        return it->second;
      }
      const Index id = push(v);
      fixed_.emplace(key, id);
      return id;
    }
    return push(v);
  }
  PlanarMesh& mesh() { return mesh_; }

 private:
  Index push(const PlanarVertex& v) {
    mesh_.vertices.push_back(v);
    return static_cast<Index>(mesh_.vertices.size() - 1);
  }
  PlanarMesh mesh_;
  std::map<std::pair<double, double>, Index> fixed_;
};

void add_block(const SynthSpec& spec, double h, const Vec2& c, double x0,
               double x1, double y0, double y1, PlanarBuilder& builder) {
  const int n = spec.n_theta;
  const Ring ring = unit_ring(n);
  const double r_max = spec.kind == Kind::kHourglass
                           ? spec.r_inner * (1.0 + spec.slope)
                           : spec.r_inner;
  const int m_pore = grid_fit(r_max, h).n;
  const int m_annulus = grid_fit(spec.r_outer - spec.r_inner, h).n;
  const double reach = std::max({x1 - c.x, c.x - x0, y1 - c.y, c.y - y0});
  const int m_outer = grid_fit(reach - spec.r_outer, h).n;

  std::vector<std::vector<Index>> rings;
  std::vector<Zone> zone_below;  // zone between ring i-1 and ring i
  const Index center = builder.add({c, {0.0, 0.0}, 0.0, 0.0});
  const auto angular = [&](double alpha, double beta) {
    std::vector<Index> ids(n);
    for (int k = 0; k < n; ++k) {
      ids[k] = builder.add({c, {ring.cos_t[k], ring.sin_t[k]}, alpha, beta});
    }
    return ids;
  };
  for (int i = 1; i <= m_pore; ++i) {
    rings.push_back(angular(static_cast<double>(i) / m_pore, 0.0));
    zone_below.push_back(Zone::kPore);
  }
  for (int i = 1; i <= m_annulus; ++i) {
    const double f = static_cast<double>(i) / m_annulus;
    rings.push_back(angular(1.0 - f, spec.r_outer * f));
    zone_below.push_back(Zone::kAnnulus);
  }
  for (int i = 1; i <= m_outer; ++i) {
    std::vector<Index> ids(n);
    const double f = static_cast<double>(i) / m_outer;
    for (int k = 0; k < n; ++k) {
      const Vec2 q = rect_point(c, x0, x1, y0, y1, n, k);
      Vec2 p = q;
      if (i < m_outer) {
        const Vec2 circle{c.x + ring.cos_t[k] * spec.r_outer,
                          c.y + ring.sin_t[k] * spec.r_outer};
        p = circle + (q - circle) * f;
      }
      ids[k] = builder.add({p, {0.0, 0.0}, 0.0, 0.0});
    }
    rings.push_back(std::move(ids));
    zone_below.push_back(Zone::kOuter);
  }

  PlanarMesh& mesh = builder.mesh();
  for (int k = 0; k < n; ++k) {
    const int k1 = (k + 1) % n;
    mesh.triangles.push_back({center, rings[0][k], rings[0][k1]});
    mesh.zones.push_back(Zone::kPore);
  }
  for (std::size_t i = 1; i < rings.size(); ++i) {
    const auto& lo = rings[i - 1];
    const auto& hi = rings[i];
    for (int k = 0; k < n; ++k) {
      const int k1 = (k + 1) % n;
      mesh.triangles.push_back({lo[k], lo[k1], hi[k1]});
      mesh.triangles.push_back({lo[k], hi[k1], hi[k]});
      mesh.zones.push_back(zone_below[i]);
      mesh.zones.push_back(zone_below[i]);
    }
  }
}

// Pore radius at z, linear between the surface's ring levels so that mesh
// vertices stay on the surface's facets.
class PoreProfile {
 public:
  explicit PoreProfile(const SynthSpec& spec) {
    if (stacked(spec)) {
      levels_ = ring_levels(spec);
    } else {
      levels_ = {spec.z_min, spec.z_max};
    }
    for (double z : levels_) radii_.push_back(inner_radius(spec, z));
  }
  const std::vector<double>& levels() const { return levels_; }
  double operator()(double z) const {
    if (z <= levels_.front()) return radii_.front();
    if (z >= levels_.back()) return radii_.back();
    const auto it = std::upper_bound(levels_.begin(), levels_.end(), z);
    const std::size_t j = static_cast<std::size_t>(it - levels_.begin()) - 1;
    if (z == levels_[j]) return radii_[j];
    const double s = (z - levels_[j]) / (levels_[j + 1] - levels_[j]);
    return radii_[j] + (radii_[j + 1] - radii_[j]) * s;
  }

 private:
  std::vector<double> levels_;
  std::vector<double> radii_;
};

}  // namespace

TetMesh make_fixture_tet_mesh(const SynthSpec& spec, const BoxDomain& box,
                              const MembraneSlab& slab,
                              const FixtureMeshOptions& options) {
  validate(spec);
  if (spec.n_theta % 8 != 0) {
    throw Error(ErrorCode::kInvalidSpec,
                "fixture meshes need n_theta divisible by 8");
  }
  if (!(options.h > 0.0)) {
    throw Error(ErrorCode::kInvalidSpec, "fixture edge length must be > 0");
  }
  if (!box.valid() || !slab.valid() || slab.z1 <= box.lz1 ||
      slab.z2 >= box.lz2) {
    throw Error(ErrorCode::kInvalidSpec, "slab must lie inside a valid box");
  }
  const std::vector<Vec2> centers = axes(spec);
  const double r_max = spec.r_outer;
  for (const Vec2& c : centers) {
    if (c.x - r_max <= box.lx1 || c.x + r_max >= box.lx2 ||
        c.y - r_max <= box.ly1 || c.y + r_max >= box.ly2 ||
        spec.z_min <= box.lz1 || spec.z_max >= box.lz2) {
      throw Error(ErrorCode::kInvalidSpec, "solid does not fit in the box");
    }
  }

  // Planar mesh: one block per axis, split halfway between axes.
  PlanarBuilder builder;
  for (std::size_t b = 0; b < centers.size(); ++b) {
    const double x0 =
        b == 0 ? box.lx1 : 0.5 * (centers[b - 1].x + centers[b].x);
    const double x1 = b + 1 == centers.size()
                          ? box.lx2
                          : 0.5 * (centers[b].x + centers[b + 1].x);
    add_block(spec, options.h, centers[b], x0, x1, box.ly1, box.ly2, builder);
  }
  const PlanarMesh& plane = builder.mesh();

  // Layers: every plane the solid or the slab defines, refined to ~h.
  const PoreProfile profile(spec);
  std::vector<double> breaks = {box.lz1, box.lz2, slab.z1, slab.z2};
  breaks.insert(breaks.end(), profile.levels().begin(),
                profile.levels().end());
  std::sort(breaks.begin(), breaks.end());
  const double merge = 1e-9 * box.length_z();
  std::vector<double> levels;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i];
    const double hi = breaks[i + 1];
    if (hi - lo <= merge) continue;
    const int cells = grid_fit(hi - lo, options.h).n;
    for (int k = 0; k < cells; ++k) {
      levels.push_back(lattice_coordinate(lo, hi, cells, k));
    }
  }
  levels.push_back(box.lz2);

  const std::size_t n2 = plane.vertices.size();
  std::vector<Point3> vertices;
  vertices.reserve(n2 * levels.size());
  for (double z : levels) {
    const double r = profile(z);
    for (const PlanarVertex& v : plane.vertices) {
      const double s = v.alpha * r + v.beta;
      vertices.push_back({v.p.x + v.u.x * s, v.p.y + v.u.y * s, z});
    }
  }

  std::vector<Tet> tets;
  std::vector<RegionLabel> labels;
  tets.reserve(3 * plane.triangles.size() * (levels.size() - 1));
  labels.reserve(tets.capacity());
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    const double zm = 0.5 * (levels[l] + levels[l + 1]);
    const bool in_solid = zm > spec.z_min && zm < spec.z_max;
    const Index lo = static_cast<Index>(l * n2);
    const Index hi = static_cast<Index>((l + 1) * n2);
    for (std::size_t t = 0; t < plane.triangles.size(); ++t) {
      Triangle tri = plane.triangles[t];
      std::sort(tri.begin(), tri.end());
      const Index a = tri[0], b = tri[1], c = tri[2];
      const std::array<Tet, 3> split = {{
          {a + lo, b + lo, c + lo, c + hi},
          {a + lo, b + lo, b + hi, c + hi},
          {a + lo, a + hi, b + hi, c + hi},
      }};
      const Point3& pa = vertices[a + lo];
      const Point3& pb = vertices[b + lo];
      const Point3& pc = vertices[c + lo];
      const double s =
          cross(Vec2{pb.x - pa.x, pb.y - pa.y}, Vec2{pc.x - pa.x, pc.y - pa.y});
      for (int i = 0; i < 3; ++i) {
        const Tet& tet = split[i];
        const double o =
            orient3d(vertices[tet[0]], vertices[tet[1]], vertices[tet[2]],
                     vertices[tet[3]]);
        if (!(o * (i == 1 ? -s : s) > 0.0)) {
          throw Error(ErrorCode::kInternalError,
                      "fixture mesher produced an inverted tetrahedron; "
                      "refine h or enlarge the box");
        }
        tets.push_back(tet);
        const Zone zone = plane.zones[t];
        const bool solid = in_solid && (zone == Zone::kAnnulus ||
                                        (options.fill_pore &&
                                         zone == Zone::kPore));
        labels.push_back(solid ? RegionLabel::kProtein : RegionLabel::kSolvent);
      }
    }
  }
  return TetMesh(std::move(vertices), std::move(tets), std::move(labels));
}

}  // namespace icmesh::synth
