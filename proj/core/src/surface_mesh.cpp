#include "heis/surface_mesh.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "heis/angles.hpp"
#include "heis/equidistant.hpp"
#include "heis/error.hpp"

namespace heis {

namespace {

constexpr double kClampSlack = 1e-12;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Node {
  bool admissible = false;
  bool seam = false;
  double c = 0.0;
};

double grid_value(int i, int n) {
  return kTwoPiOver3 * (2.0 * static_cast<double>(i) / static_cast<double>(n - 1) - 1.0);
}

Node evaluate(double a, double b) {
  const double u = 1.5 - std::cos(a) - std::cos(b);
  Node node;
  if (u > 1.0 + kClampSlack || u < -0.5 - kClampSlack) return node;
  node.admissible = true;
  node.c = std::min(std::acos(std::clamp(u, -0.5, 1.0)), kTwoPiOver3);
  if (u >= 1.0 - kClampSlack) {
    node.c = 0.0;
    node.seam = true;
  }
  return node;
}

std::vector<std::vector<Node>> evaluate_grid(int n, unsigned threads) {
  std::vector<std::vector<Node>> rows(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < n; i = next++) {
      std::vector<Node> row(static_cast<std::size_t>(n));
      const double a = grid_value(i, n);
      for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = evaluate(a, grid_value(j, n));
      rows[static_cast<std::size_t>(i)] = std::move(row);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
  }
  return rows;
}

}  // namespace

SurfaceMesh sample_surface(const SampleOptions& options) {
  const int n = options.resolution;
  if (n < 8) throw DomainError("surface resolution must be at least 8");
  const auto rows = evaluate_grid(n, options.threads);

  SurfaceMesh mesh;
  mesh.component = options.component;
  const double shift_a = kTwoPi * options.component[0];
  const double shift_b = kTwoPi * options.component[1];
  const double shift_c = kTwoPi * options.component[2];

  const auto un = static_cast<std::size_t>(n);
  std::vector<std::size_t> top(un * un, kNone);
  std::vector<std::size_t> bottom(un * un, kNone);
  for (std::size_t i = 0; i < un; ++i) {
    const double a = grid_value(static_cast<int>(i), n) + shift_a;
    for (std::size_t j = 0; j < un; ++j) {
      const Node& node = rows[i][j];
      if (!node.admissible) continue;
      const double b = grid_value(static_cast<int>(j), n) + shift_b;
      ++mesh.admissible_nodes;
      top[i * un + j] = mesh.vertices.size();
      mesh.vertices.push_back({a, b, shift_c + node.c});
      if (node.seam) {
        ++mesh.seam_nodes;
        bottom[i * un + j] = top[i * un + j];
      } else {
        bottom[i * un + j] = mesh.vertices.size();
        mesh.vertices.push_back({a, b, shift_c - node.c});
      }
    }
  }

  // Triangles of the top sheet as grid-node ids, counter-clockwise in (a,b).
  std::vector<std::array<std::size_t, 3>> sheet;
  for (std::size_t i = 0; i + 1 < un; ++i) {
    for (std::size_t j = 0; j + 1 < un; ++j) {
      const std::array<std::size_t, 4> cycle{i * un + j, (i + 1) * un + j,
                                             (i + 1) * un + j + 1, i * un + j + 1};
      std::array<std::size_t, 4> live{};
      std::size_t count = 0;
      for (std::size_t id : cycle) {
        if (top[id] != kNone) live[count++] = id;
      }
      if (count == 4) {
        sheet.push_back({live[0], live[1], live[2]});
        sheet.push_back({live[0], live[2], live[3]});
      } else if (count == 3) {
        sheet.push_back({live[0], live[1], live[2]});
      }
    }
  }

  std::unordered_map<std::size_t, int> edge_use;
  const auto edge_key = [&](std::size_t u, std::size_t v) {
    return std::min(u, v) * un * un + std::max(u, v);
  };
  for (const auto& t : sheet) {
    for (int k = 0; k < 3; ++k) ++edge_use[edge_key(t[k], t[(k + 1) % 3])];
  }

  for (const auto& t : sheet) {
    mesh.faces.push_back({top[t[0]], top[t[1]], top[t[2]]});
    mesh.faces.push_back({bottom[t[0]], bottom[t[2]], bottom[t[1]]});
  }
  // Close the rim: a wall strip joins the sheets along each boundary edge.
  for (const auto& t : sheet) {
    for (int k = 0; k < 3; ++k) {
      const std::size_t u = t[k];
      const std::size_t v = t[(k + 1) % 3];
      if (edge_use[edge_key(u, v)] != 1) continue;
      if (top[u] != bottom[u]) mesh.faces.push_back({top[v], top[u], bottom[u]});
      if (top[v] != bottom[v]) mesh.faces.push_back({top[v], bottom[u], bottom[v]});
    }
  }
  return mesh;
}

double max_vertex_residual(const SurfaceMesh& mesh) {
  double worst = 0.0;
  for (const auto& v : mesh.vertices) {
    worst = std::max(worst, std::abs(surface_residual(v[0], v[1], v[2])));
  }
  return worst;
}

void write_csv(std::ostream& out, const SurfaceMesh& mesh) {
  out << "a,b,c\n" << std::setprecision(17);
  for (const auto& v : mesh.vertices) out << v[0] << ',' << v[1] << ',' << v[2] << '\n';
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh) {
  out << "# equidistant surface component " << mesh.component[0] << ' '
      << mesh.component[1] << ' ' << mesh.component[2] << '\n'
      << std::setprecision(17);
  for (const auto& v : mesh.vertices) out << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& f : mesh.faces) {
    out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
  }
}

}  // namespace heis
