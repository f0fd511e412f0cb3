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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

namespace icmesh {

using Index = std::uint32_t;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

  constexpr double operator[](int axis) const {
    return axis == 0 ? x : (axis == 1 ? y : z);
  }
};

// Positions are in Angstroms.
using Point3 = Vec3;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(const Vec2& a, const Vec2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend constexpr Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend constexpr Vec2 operator*(const Vec2& a, double s) {
    return {a.x * s, a.y * s};
  }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

constexpr double dot(const Vec2& a, const Vec2& b) {
  return a.x * b.x + a.y * b.y;
}

constexpr double cross(const Vec2& a, const Vec2& b) {
  return a.x * b.y - a.y * b.x;
}

inline double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }

inline bool is_finite(const Vec3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

// Six times the signed volume of tet (a, b, c, d).
constexpr double orient3d(const Point3& a, const Point3& b, const Point3& c,
                          const Point3& d) {
  return dot(b - a, cross(c - a, d - a));
}

inline double triangle_area(const Point3& a, const Point3& b,
                            const Point3& c) {
  return 0.5 * norm(cross(b - a, c - a));
}

inline double tet_volume(const Point3& a, const Point3& b, const Point3& c,
                         const Point3& d) {
  return orient3d(a, b, c, d) / 6.0;
}

struct AABB {
  Point3 min;
  Point3 max;

  Vec3 extent() const { return max - min; }
  double diagonal() const { return norm(max - min); }
  bool contains(const Point3& p, double slack = 0.0) const {
    return p.x >= min.x - slack && p.x <= max.x + slack &&
           p.y >= min.y - slack && p.y <= max.y + slack &&
           p.z >= min.z - slack && p.z <= max.z + slack;
  }
  void expand(const Point3& p) {
    min = {std::min(min.x, p.x), std::min(min.y, p.y), std::min(min.z, p.z)};
    max = {std::max(max.x, p.x), std::max(max.y, p.y), std::max(max.z, p.z)};
  }
  static AABB of(const Point3& p) { return {p, p}; }
};

// Simulation box [lx1, lx2] x [ly1, ly2] x [lz1, lz2].
struct BoxDomain {
  double lx1 = 0.0, lx2 = 0.0;
  double ly1 = 0.0, ly2 = 0.0;
  double lz1 = 0.0, lz2 = 0.0;

  double length_x() const { return lx2 - lx1; }
  double length_y() const { return ly2 - ly1; }
  double length_z() const { return lz2 - lz1; }
  bool valid() const { return lx1 < lx2 && ly1 < ly2 && lz1 < lz2; }
  AABB aabb() const { return {{lx1, ly1, lz1}, {lx2, ly2, lz2}}; }
  friend bool operator==(const BoxDomain&, const BoxDomain&) = default;
};

// Membrane occupies z1 <= z <= z2.
struct MembraneSlab {
  double z1 = 0.0;
  double z2 = 0.0;

  bool valid() const { return z1 < z2; }
  bool contains_z(double z) const { return z >= z1 && z <= z2; }
};

// Scale-relative tolerance used by every on-plane and on-boundary test.
inline double geometric_epsilon(const AABB& domain) {
  const double diag = domain.diagonal();
  return 1e-9 * (diag > 0.0 ? diag : 1.0);
}

}  // namespace icmesh
