#pragma once

#include <Eigen/Sparse>

#include "spindle/mesh.hpp"
#include "spindle/spectral.hpp"

namespace spindle {

// P1 discretization of the Rayleigh quotient on flat triangles with
// spherical vertices. Dirichlet vertices are eliminated through the
// free-index map.
struct AssembledSystem {
  Eigen::SparseMatrix<double> stiffness;  // full vertex set
  Eigen::SparseMatrix<double> mass;
  std::vector<int> free_index;  // vertex -> free dof, -1 on Dirichlet
  int n_free = 0;
};

// Element matrices on one flat triangle (exposed for the reference checks).
// Stiffness is the classic cotangent form, mass the exact P1 matrix
// area/12 * [2 1 1; 1 2 1; 1 1 2].
std::array<std::array<double, 3>, 3> element_stiffness(const Vec3& p0,
                                                       const Vec3& p1,
                                                       const Vec3& p2);
std::array<std::array<double, 3>, 3> element_mass(const Vec3& p0,
                                                  const Vec3& p1,
                                                  const Vec3& p2);

AssembledSystem assemble(const SurfaceMesh& mesh);

// Smallest generalized eigenvalue of (stiffness, mass) on the free dofs by
// inverse power iteration over a sparse LDLT factorization, deterministic
// all-ones start. Requires at least one Dirichlet vertex. When given,
// `eigenvector` receives the mass-normalized eigenvector on the free dofs.
EigenResult smallest_eigenvalue(const AssembledSystem& sys, double tol,
                                Eigen::VectorXd* eigenvector = nullptr);

// mesh -> assemble -> solve at h and 2h; the value is the fine-level
// eigenvalue, the error estimate the Richardson difference |mu_h - mu_2h|/3.
EigenResult dn_eigenvalue(const RegionSpec& spec, double h, double tol);

// Smallest nonzero eigenvalue of a closed surface mesh (constants deflated
// in the mass inner product); used by the sphere-spectrum checks.
double closed_surface_smallest_nonzero(const SurfaceMesh& mesh, double tol);

}  // namespace spindle
