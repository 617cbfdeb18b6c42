#pragma once

#include <cstdint>
#include <vector>

// Periodic 1D mesh: cells I_j = (edges[j], edges[j+1]), j = 0..n-1.
// Interface i in [0, n) sits at edges[i]; interface 0 is the periodic wrap,
// with cell n-1 on its left and cell 0 on its right.  No ghost cells anywhere;
// all neighbor lookups go through the modular helpers below.

namespace fwdg {

struct Mesh1D {
  double a = 0.0, b = 1.0;
  std::vector<double> edges;  // size n+1, strictly increasing, edges[0]=a, edges[n]=b

  int n_cells() const { return static_cast<int>(edges.size()) - 1; }
  double length() const { return b - a; }
  double h(int j) const { return edges[j + 1] - edges[j]; }
  double center(int j) const { return 0.5 * (edges[j] + edges[j + 1]); }
  // Map reference coordinate xi in [-1,1] to physical x in cell j.
  double x_of(int j, double xi) const { return center(j) + 0.5 * h(j) * xi; }

  int left_cell(int iface) const { return (iface + n_cells() - 1) % n_cells(); }
  int right_cell(int iface) const { return iface; }
  int iface_left_of(int j) const { return j; }
  int iface_right_of(int j) const { return (j + 1) % n_cells(); }

  double h_min() const;
  double h_max() const;
};

// Uniform n-cell mesh on [a, b]; when perturb > 0 each interior edge is moved
// by an independent U(-perturb, perturb) multiple of the uniform spacing
// (perturb < 0.5 keeps edges strictly increasing).  Deterministic in `seed`.
Mesh1D build_mesh(double a, double b, int n, double perturb = 0.0,
                  std::uint64_t seed = 0);

}  // namespace fwdg
