#include "sfem/mesh.hpp"

#include "sfem/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <utility>

namespace sfem {

int SurfaceMesh::num_edges() const {
  // closed orientable surface of genus 0: V - E + F = 2
  return num_vertices() + num_triangles() - 2;
}

double SurfaceMesh::nominal_h() const {
  return std::sqrt(2.0) / static_cast<double>(1 << level);
}

namespace {

SurfaceMesh base_octahedron() {
  SurfaceMesh m;
  m.level = 0;
  m.vertices = {Vec3(1, 0, 0),  Vec3(-1, 0, 0), Vec3(0, 1, 0),
                Vec3(0, -1, 0), Vec3(0, 0, 1),  Vec3(0, 0, -1)};
  // oriented so that normal . centroid > 0 on every face
  m.triangles = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                 {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return m;
}

} // namespace

SurfaceMesh refine(const SurfaceMesh& mesh) {
  SurfaceMesh out;
  out.level = mesh.level + 1;
  out.vertices = mesh.vertices; // old vertices keep index and position
  out.triangles.reserve(4 * mesh.triangles.size());

  std::map<std::pair<int, int>, int> midpoint;
  auto midpoint_of = [&](int i, int j) {
    const auto key = std::minmax(i, j);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    Vec3 m = 0.5 * (mesh.vertices[i] + mesh.vertices[j]);
    m.normalize();
    const int idx = static_cast<int>(out.vertices.size());
    out.vertices.push_back(m);
    midpoint.emplace(key, idx);
    return idx;
  };

  for (const auto& t : mesh.triangles) {
    const int i = t[0], j = t[1], k = t[2];
    const int mij = midpoint_of(i, j);
    const int mjk = midpoint_of(j, k);
    const int mki = midpoint_of(k, i);
    out.triangles.push_back({i, mij, mki});
    out.triangles.push_back({j, mjk, mij});
    out.triangles.push_back({k, mki, mjk});
    out.triangles.push_back({mij, mjk, mki});
  }
  return out;
}

SurfaceMesh build_octahedron_sphere(int level) {
  if (level < 0 || level > 10)
    throw std::invalid_argument("build_octahedron_sphere: level must be in [0, 10], got " +
                                std::to_string(level));
  SurfaceMesh m = base_octahedron();
  for (int l = 0; l < level; ++l) m = refine(m);
  return m;
}

double measured_h(const SurfaceMesh& mesh) {
  double hmax = 0.0;
  for (const auto& t : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const Vec3 d = mesh.vertices[t[e]] - mesh.vertices[t[(e + 1) % 3]];
      hmax = std::max(hmax, d.norm());
    }
  }
  return hmax;
}

int vertex_at(const SurfaceMesh& mesh, const Vec3& point, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("vertex_at: tol must be positive");
  int found = -1;
  for (int i = 0; i < mesh.num_vertices(); ++i) {
    if ((mesh.vertices[i] - point).norm() <= tol) {
      if (found >= 0)
        throw LookupError("vertex_at: more than one vertex within tolerance");
      found = i;
    }
  }
  if (found < 0) throw LookupError("vertex_at: no vertex within tolerance");
  return found;
}

void export_off(const SurfaceMesh& mesh, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("export_off: cannot open '" + path + "' for writing");
  os << "OFF\n";
  os << mesh.num_vertices() << ' ' << mesh.num_triangles() << ' ' << mesh.num_edges() << '\n';
  char buf[96];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    os << buf;
  }
  for (const auto& t : mesh.triangles) os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  if (!os) throw IoError("export_off: write to '" + path + "' failed");
}

} // namespace sfem
