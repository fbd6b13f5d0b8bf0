#include "sharp/catalog.hpp"

#include "sharp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sharp {
namespace {

void normalize_columns(Matrix& m) {
  for (Eigen::Index i = 0; i < m.cols(); ++i) m.col(i).normalize();
}

// Unnormalized E8 roots (norm^2 = 2) as the columns of an 8 x 240 matrix.
Matrix e8_lattice_roots() {
  Matrix roots(8, 240);
  Eigen::Index col = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          roots.col(col).setZero();
          roots(i, col) = si;
          roots(j, col) = sj;
          ++col;
        }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    for (int i = 0; i < 8; ++i) roots(i, col) = (mask >> i) & 1u ? -0.5 : 0.5;
    ++col;
  }
  return roots;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

int parse_index(const std::string& name, const std::string& arg) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc() || ptr != arg.data() + arg.size())
    throw std::invalid_argument("catalog name '" + name + "': expected an integer after ':'");
  return value;
}

} // namespace

PointConfiguration polygon(int n) {
  if (n < 2) throw std::invalid_argument("polygon: invalid cardinality " + std::to_string(n));
  Matrix pts(2, n);
  for (int k = 0; k < n; ++k) {
    // Exact coordinates on the axes keep the square and its kin free of 1e-17 noise.
    if ((4 * k) % n == 0) {
      const int quarter = (4 * k) / n;
      const double c[4] = {1, 0, -1, 0}, s[4] = {0, 1, 0, -1};
      pts(0, k) = c[quarter];
      pts(1, k) = s[quarter];
    } else {
      const double angle = 2.0 * std::numbers::pi * k / n;
      pts(0, k) = std::cos(angle);
      pts(1, k) = std::sin(angle);
    }
  }
  return PointConfiguration("polygon:" + std::to_string(n), 1, std::move(pts));
}

PointConfiguration simplex(int d) {
  if (d < 1) throw std::invalid_argument("simplex: d must be >= 1");
  const int n = d + 2;
  const double off = -1.0 / (d + 1);
  Matrix gram = Matrix::Constant(n, n, off);
  gram.diagonal().setOnes();
  // Spectrum: (d+2)/(d+1) with multiplicity d+1, and 0 once (eigenvector 1).
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  const Matrix top = eig.eigenvectors().rightCols(d + 1);
  const Vector scale = eig.eigenvalues().tail(d + 1).cwiseMax(0.0).cwiseSqrt();
  Matrix pts = scale.asDiagonal() * top.transpose();
  normalize_columns(pts);
  return PointConfiguration("simplex:" + std::to_string(d), d, std::move(pts));
}

PointConfiguration cross_polytope(int d) {
  if (d < 1) throw std::invalid_argument("cross_polytope: d must be >= 1");
  Matrix pts = Matrix::Zero(d + 1, 2 * (d + 1));
  for (int i = 0; i <= d; ++i) {
    pts(i, 2 * i) = 1.0;
    pts(i, 2 * i + 1) = -1.0;
  }
  return PointConfiguration("cross_polytope:" + std::to_string(d), d, std::move(pts));
}

PointConfiguration icosahedron() {
  const double phi = std::numbers::phi;
  Matrix pts(3, 12);
  Eigen::Index col = 0;
  for (int shift = 0; shift < 3; ++shift)
    for (double a : {1.0, -1.0})
      for (double b : {phi, -phi}) {
        Eigen::Vector3d v(0.0, a, b);
        for (int i = 0; i < 3; ++i) pts((i + shift) % 3, col) = v(i);
        ++col;
      }
  normalize_columns(pts);
  return PointConfiguration("icosahedron", 2, std::move(pts));
}

PointConfiguration e8_roots() {
  Matrix pts = e8_lattice_roots() / std::sqrt(2.0);
  normalize_columns(pts);
  return PointConfiguration("e8", 7, std::move(pts));
}

PointConfiguration schlafli_27() {
  // Roots r with r.a = 1 and r.b = 0 for the A2 pair a = e1 - e2, b = e2 - e3
  // (a.b = -1), projected onto span(a, b)^perp.
  const Matrix roots = e8_lattice_roots();
  Vector a = Vector::Zero(8), b = Vector::Zero(8);
  a(0) = 1;
  a(1) = -1;
  b(1) = 1;
  b(2) = -1;
  Matrix ab(8, 2);
  ab << a, b;
  const Matrix q = Eigen::HouseholderQR<Matrix>(ab).householderQ();
  const Matrix complement = q.rightCols(6);

  Matrix pts(6, 27);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < roots.cols(); ++i) {
    const auto r = roots.col(i);
    if (std::abs(r.dot(a) - 1.0) < 1e-12 && std::abs(r.dot(b)) < 1e-12) {
      if (col == 27) throw std::logic_error("schlafli_27: root selection overflow");
      pts.col(col++) = complement.transpose() * r;
    }
  }
  if (col != 27) throw std::logic_error("schlafli_27: root selection underflow");
  normalize_columns(pts);
  return PointConfiguration("schlafli", 5, std::move(pts));
}

std::vector<std::string> catalog_names() {
  return {"antipodal_pair", "triangle", "square",   "tetrahedron", "octahedron",
          "icosahedron",    "schlafli", "e8",       "polygon:N",   "simplex:D",
          "cross_polytope:D"};
}

PointConfiguration catalog_by_name(const std::string& name) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  if (colon != std::string::npos) {
    const int k = parse_index(name, name.substr(colon + 1));
    if (head == "polygon") return polygon(k);
    if (head == "simplex") return simplex(k);
    if (head == "cross_polytope" || head == "cross") return cross_polytope(k);
  } else {
    if (head == "antipodal_pair") return polygon(2);
    if (head == "triangle") return polygon(3);
    if (head == "square") return polygon(4);
    if (head == "tetrahedron") return simplex(2);
    if (head == "octahedron") return cross_polytope(2);
    if (head == "icosahedron") return icosahedron();
    if (head == "schlafli" || head == "schlafli_27") return schlafli_27();
    if (head == "e8" || head == "e8_roots") return e8_roots();
  }

  auto names = catalog_names();
  std::stable_sort(names.begin(), names.end(), [&](const auto& x, const auto& y) {
    return edit_distance(head, x.substr(0, x.find(':'))) <
           edit_distance(head, y.substr(0, y.find(':')));
  });
  std::string msg = "unknown configuration '" + name + "'; did you mean";
  for (std::size_t i = 0; i < 3; ++i) msg += (i ? ", " : " ") + names[i];
  throw std::invalid_argument(msg + "?");
}

std::vector<PointConfiguration> standard_catalog() {
  std::vector<PointConfiguration> out;
  for (int n = 2; n <= 8; ++n) out.push_back(polygon(n));
  for (int d = 1; d <= 6; ++d) out.push_back(simplex(d));
  for (int d = 1; d <= 7; ++d) out.push_back(cross_polytope(d));
  out.push_back(icosahedron());
  out.push_back(schlafli_27());
  out.push_back(e8_roots());
  return out;
}

} // namespace sharp
