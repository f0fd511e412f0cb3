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

#include "icmesh/cross_section.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

#include "icmesh/error.hpp"

namespace icmesh {
namespace {

std::uint64_t edge_key(Index a, Index b) {
  const Index lo = std::min(a, b);
  const Index hi = std::max(a, b);
  return (std::uint64_t{lo} << 32) | hi;
}

// Crossing point of edge (a, b) with the plane, computed from the edge's
// lower-indexed end so that both triangles sharing it agree exactly.
Vec2 edge_crossing(const std::vector<Point3>& v, Index a, Index b, double z) {
  const Point3& p = v[std::min(a, b)];
  const Point3& q = v[std::max(a, b)];
  const double t = (z - p.z) / (q.z - p.z);
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

bool vertex_near_plane(const TriSurfaceMesh& surface, double z, double eps) {
  return std::any_of(
      surface.vertices().begin(), surface.vertices().end(),
      [&](const Point3& p) { return std::abs(p.z - z) <= eps; });
}

struct Segment {
  std::uint64_t from;
  std::uint64_t to;
};

}  // namespace

PlanarLoopSet cross_section_loops(const TriSurfaceMesh& surface, double z) {
  PlanarLoopSet result;
  result.requested_z = z;
  result.z = z;
  result.epsilon = surface.epsilon();
  if (surface.empty()) return result;

  const double eps = surface.epsilon();
  const double shift = kPlaneShift * std::max(surface.aabb().diagonal(), 1.0);
  double zc = z;
  int attempt = 0;
  while (vertex_near_plane(surface, zc, eps)) {
    if (attempt == kPlaneShiftRetries) {
      throw Error(ErrorCode::kOpenCrossSection,
                  "vertices stay on the plane z = " + std::to_string(z) +
                      " after shifting");
    }
    ++attempt;
    zc = z + attempt * shift;
  }
  result.z = zc;
  if (zc <= surface.aabb().min.z || zc >= surface.aabb().max.z) return result;

  const auto& verts = surface.vertices();
  std::vector<Segment> segments;
  std::unordered_map<std::uint64_t, Vec2> points;
  for (std::size_t t = 0; t < surface.triangle_count(); ++t) {
    const Triangle& tri = surface.triangles()[t];
    bool above[3];
    for (int k = 0; k < 3; ++k) above[k] = verts[tri[k]].z > zc;
    if (above[0] == above[1] && above[1] == above[2]) continue;

    std::uint64_t keys[2];
    Vec2 pts[2];
    int found = 0;
    for (int k = 0; k < 3; ++k) {
      const Index a = tri[k];
      const Index b = tri[(k + 1) % 3];
      if (above[k] == above[(k + 1) % 3]) continue;
      keys[found] = edge_key(a, b);
      pts[found] = edge_crossing(verts, a, b, zc);
      ++found;
    }
    // Solid on the left: the in-plane part of the outward normal must point
    // to the right of the segment.
    const Vec3 n = cross(verts[tri[1]] - verts[tri[0]],
                         verts[tri[2]] - verts[tri[0]]);
    const Vec2 d = pts[1] - pts[0];
    Segment seg{keys[0], keys[1]};
    if (d.y * n.x - d.x * n.y < 0.0) std::swap(seg.from, seg.to);
    segments.push_back(seg);
    points.emplace(keys[0], pts[0]);
    points.emplace(keys[1], pts[1]);
  }

  std::unordered_map<std::uint64_t, std::size_t> outgoing;
  outgoing.reserve(segments.size());
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (!outgoing.emplace(segments[s].from, s).second) {
      throw Error(ErrorCode::kOpenCrossSection,
                  "cross-section point with two outgoing segments at z = " +
                      std::to_string(zc));
    }
  }

  std::vector<bool> used(segments.size(), false);
  for (std::size_t s0 = 0; s0 < segments.size(); ++s0) {
    if (used[s0]) continue;
    std::vector<Vec2> loop;
    std::size_t s = s0;
    while (!used[s]) {
      used[s] = true;
      loop.push_back(points.at(segments[s].from));
      const auto next = outgoing.find(segments[s].to);
      if (next == outgoing.end()) {
        throw Error(ErrorCode::kOpenCrossSection,
                    "open chain in the cross-section at z = " +
                        std::to_string(zc));
      }
      s = next->second;
    }
    if (s != s0) {
      throw Error(ErrorCode::kOpenCrossSection,
                  "chain joins another loop at z = " + std::to_string(zc));
    }
    result.loops.push_back(std::move(loop));
  }

  result.depth.assign(result.loops.size(), 0);
  for (std::size_t i = 0; i < result.loops.size(); ++i) {
    for (std::size_t j = 0; j < result.loops.size(); ++j) {
      if (i != j && point_in_polygon(result.loops[i][0], result.loops[j])) {
        ++result.depth[i];
      }
    }
  }
  return result;
}

bool point_in_polygon(const Vec2& q, const std::vector<Vec2>& loop) {
  bool inside = false;
  const std::size_t n = loop.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = loop[i];
    const Vec2& b = loop[j];
    if ((a.y > q.y) != (b.y > q.y)) {
      const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (q.x < x) inside = !inside;
    }
  }
  return inside;
}

double point_segment_distance(const Vec2& q, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(q - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(q - (a + ab * t));
}

double distance_to_loops(const Vec2& q, const PlanarLoopSet& loops) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& loop : loops.loops) {
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      best = std::min(best, point_segment_distance(q, loop[i],
                                                   loop[(i + 1) % n]));
    }
  }
  return best;
}

LoopQuery loop_containment_depth(const Vec2& q, const PlanarLoopSet& loops) {
  LoopQuery out;
  for (const auto& loop : loops.loops) {
    if (point_in_polygon(q, loop)) ++out.depth;
  }
  out.on_boundary = distance_to_loops(q, loops) <= loops.epsilon;
  return out;
}

}  // namespace icmesh
