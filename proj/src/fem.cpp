#include "spindle/fem.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>

namespace spindle {

namespace {

double triangle_area(const Vec3& p0, const Vec3& p1, const Vec3& p2) {
  return 0.5 * norm(cross(p1 - p0, p2 - p0));
}

}  // namespace

std::array<std::array<double, 3>, 3> element_stiffness(const Vec3& p0,
                                                       const Vec3& p1,
                                                       const Vec3& p2) {
  const double area = triangle_area(p0, p1, p2);
  if (area < 1e-16) throw DegenerateTriangle("zero-area element");
  const std::array<Vec3, 3> p{p0, p1, p2};
  std::array<std::array<double, 3>, 3> k{};
  // Off-diagonal entries are -cot(opposite angle)/2.
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, l = (i + 2) % 3;
    const Vec3 u = p[static_cast<std::size_t>(j)] - p[static_cast<std::size_t>(i)];
    const Vec3 v = p[static_cast<std::size_t>(l)] - p[static_cast<std::size_t>(i)];
    const double cot = dot(u, v) / norm(cross(u, v));
    k[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] = -0.5 * cot;
    k[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] = -0.5 * cot;
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, l = (i + 2) % 3;
    k[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        -k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
        k[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
  }
  return k;
}

std::array<std::array<double, 3>, 3> element_mass(const Vec3& p0,
                                                  const Vec3& p1,
                                                  const Vec3& p2) {
  const double area = triangle_area(p0, p1, p2);
  std::array<std::array<double, 3>, 3> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          area / 12.0 * (i == j ? 2.0 : 1.0);
  return m;
}

AssembledSystem assemble(const SurfaceMesh& mesh) {
  const int nv = static_cast<int>(mesh.vertices.size());
  std::vector<Eigen::Triplet<double>> tk, tm;
  tk.reserve(mesh.triangles.size() * 9);
  tm.reserve(mesh.triangles.size() * 9);
  for (const auto& t : mesh.triangles) {
    const Vec3& p0 = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Vec3& p1 = mesh.vertices[static_cast<std::size_t>(t[1])];
    const Vec3& p2 = mesh.vertices[static_cast<std::size_t>(t[2])];
    const auto k = element_stiffness(p0, p1, p2);
    const auto m = element_mass(p0, p1, p2);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        tk.emplace_back(t[static_cast<std::size_t>(i)],
                        t[static_cast<std::size_t>(j)],
                        k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        tm.emplace_back(t[static_cast<std::size_t>(i)],
                        t[static_cast<std::size_t>(j)],
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    }
  }
  AssembledSystem sys;
  sys.stiffness.resize(nv, nv);
  sys.mass.resize(nv, nv);
  sys.stiffness.setFromTriplets(tk.begin(), tk.end());
  sys.mass.setFromTriplets(tm.begin(), tm.end());

  sys.free_index.assign(static_cast<std::size_t>(nv), 0);
  for (const auto& e : mesh.boundary) {
    if (e.tag == SurfaceMesh::Tag::Dirichlet) {
      sys.free_index[static_cast<std::size_t>(e.v0)] = -1;
      sys.free_index[static_cast<std::size_t>(e.v1)] = -1;
    }
  }
  int next = 0;
  for (auto& f : sys.free_index)
    if (f == 0) f = next++;
  sys.n_free = next;
  return sys;
}

namespace {

Eigen::SparseMatrix<double> restrict_free(const Eigen::SparseMatrix<double>& m,
                                          const std::vector<int>& free_index,
                                          int n_free) {
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<std::size_t>(m.nonZeros()));
  for (int col = 0; col < m.outerSize(); ++col) {
    const int fc = free_index[static_cast<std::size_t>(col)];
    if (fc < 0) continue;
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, col); it; ++it) {
      const int fr = free_index[static_cast<std::size_t>(it.row())];
      if (fr >= 0) t.emplace_back(fr, fc, it.value());
    }
  }
  Eigen::SparseMatrix<double> out(n_free, n_free);
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

double inverse_iteration(const Eigen::SparseMatrix<double>& k,
                         const Eigen::SparseMatrix<double>& m, double tol,
                         const Eigen::VectorXd* deflate,
                         Eigen::VectorXd* eigenvector = nullptr) {
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
  solver.compute(k);
  if (solver.info() != Eigen::Success)
    throw SolverStagnation("sparse factorization failed");

  Eigen::VectorXd x = Eigen::VectorXd::Ones(k.rows());
  auto m_dot = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return a.dot(m * b);
  };
  if (deflate) x -= (*deflate) * (m_dot(*deflate, x) / m_dot(*deflate, *deflate));
  x /= std::sqrt(m_dot(x, x));

  for (int it = 0; it < 500; ++it) {
    Eigen::VectorXd y = solver.solve(m * x);
    if (deflate)
      y -= (*deflate) * (m_dot(*deflate, y) / m_dot(*deflate, *deflate));
    y /= std::sqrt(m_dot(y, y));
    const double lambda = y.dot(k * y);
    const Eigen::VectorXd residual = k * y - lambda * (m * y);
    x = y;
    if (residual.norm() / (lambda * std::sqrt(m_dot(y, y))) <= tol && it > 0) {
      if (eigenvector) *eigenvector = y;
      return lambda;
    }
  }
  throw SolverStagnation("inverse iteration did not converge");
}

}  // namespace

EigenResult smallest_eigenvalue(const AssembledSystem& sys, double tol,
                                Eigen::VectorXd* eigenvector) {
  if (sys.n_free == static_cast<int>(sys.free_index.size()))
    throw BadRegionSpec(
        "pure Neumann problem: smallest eigenvalue is 0, not computed");
  const auto k = restrict_free(sys.stiffness, sys.free_index, sys.n_free);
  const auto m = restrict_free(sys.mass, sys.free_index, sys.n_free);
  EigenResult r;
  r.value = inverse_iteration(k, m, tol, nullptr, eigenvector);
  r.method = EigenResult::Method::fem;
  r.error_estimate = tol;
  return r;
}

EigenResult dn_eigenvalue(const RegionSpec& spec, double h, double tol) {
  const SurfaceMesh coarse = mesh_region(spec, 2.0 * h);
  const SurfaceMesh fine = mesh_region(spec, h);
  const double mu_coarse = smallest_eigenvalue(assemble(coarse), tol).value;
  EigenResult r = smallest_eigenvalue(assemble(fine), tol);
  r.discretization = fine.h;
  r.error_estimate = std::abs(r.value - mu_coarse) / 3.0 + tol;
  return r;
}

double closed_surface_smallest_nonzero(const SurfaceMesh& mesh, double tol) {
  AssembledSystem sys = assemble(mesh);
  if (!mesh.boundary.empty())
    throw BadRegionSpec("closed-surface solver needs a boundaryless mesh");
  // Shift by the mass matrix so the factorization sees an SPD operator;
  // the pencil eigenvectors are unchanged, eigenvalues shift by one.
  Eigen::SparseMatrix<double> shifted = sys.stiffness + sys.mass;
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(sys.stiffness.rows());
  const double shifted_val = [&] {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
    solver.compute(shifted);
    if (solver.info() != Eigen::Success)
      throw SolverStagnation("sparse factorization failed");
    Eigen::VectorXd x = Eigen::VectorXd::Ones(shifted.rows());
    auto m_dot = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
      return a.dot(sys.mass * b);
    };
    // Random-free deterministic start orthogonal to constants.
    for (int i = 0; i < x.size(); ++i)
      x[i] = std::sin(static_cast<double>(i) + 1.0);
    x -= ones * (m_dot(ones, x) / m_dot(ones, ones));
    x /= std::sqrt(m_dot(x, x));
    double lambda = 0.0;
    for (int it = 0; it < 500; ++it) {
      Eigen::VectorXd y = solver.solve(sys.mass * x);
      y -= ones * (m_dot(ones, y) / m_dot(ones, ones));
      y /= std::sqrt(m_dot(y, y));
      lambda = y.dot(shifted * y);
      const Eigen::VectorXd residual = shifted * y - lambda * (sys.mass * y);
      x = y;
      if (residual.norm() / lambda <= tol && it > 0) break;
    }
    return lambda;
  }();
  return shifted_val - 1.0;
}

}  // namespace spindle
