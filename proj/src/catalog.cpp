#include "starbundle/catalog.hpp"

#include <cmath>
#include <map>

namespace starbundle {

Representation make_so2_standard_rep(DescriptorPtr domain) {
  return Representation(
      "so2-standard", domain, 2,
      [](const GroupElement& h) -> Matrix { return h.matrix().topLeftCorner(2, 2); },
      [](const AlgebraElement& b) -> Matrix { return b.matrix().topLeftCorner(2, 2); });
}

Representation make_trivial_rep(DescriptorPtr domain, int fiber_dim) {
  return Representation(
      "trivial-" + std::to_string(fiber_dim), domain, fiber_dim,
      [fiber_dim](const GroupElement&) -> Matrix {
        return Matrix::Identity(fiber_dim, fiber_dim);
      },
      [fiber_dim](const AlgebraElement&) -> Matrix {
        return Matrix::Zero(fiber_dim, fiber_dim);
      });
}

Representation make_identity_character(DescriptorPtr domain) {
  return Representation(
      "identity-character", domain, 1,
      [](const GroupElement&) -> Matrix { return Matrix::Identity(1, 1); },
      [](const AlgebraElement&) -> Matrix { return Matrix::Zero(1, 1); });
}

Representation make_inclusion_rep(DescriptorPtr domain) {
  const int n = domain->matrix_size();
  return Representation(
      "standard-inclusion", domain, n,
      [](const GroupElement& h) -> Matrix { return h.matrix(); },
      [](const AlgebraElement& b) -> Matrix { return b.matrix(); });
}

namespace {

// Rotation with R p0 = x for unit vectors on S^2, p0 = (0,0,1); the
// chart excludes the antipode, where no canonical rotation exists.
Matrix rotation_taking_pole_to(const Eigen::Vector3d& x) {
  const Eigen::Vector3d p0(0, 0, 1);
  const Eigen::Vector3d axis = p0.cross(x);
  const double s = axis.norm();
  const double c = p0.dot(x);
  if (s <= 1e-12) {
    if (c > 0.0) return Matrix::Identity(3, 3);
    throw ChartViolation("sphere: label at the antipode of the base point");
  }
  const Matrix k = so3_hat(axis / s);
  const double angle = std::atan2(s, c);
  return Matrix::Identity(3, 3) + std::sin(angle) * k +
         (1.0 - std::cos(angle)) * k * k;
}

SpacePtr make_circle_space() {
  auto so2 = make_so2();
  auto trivial = make_trivial_group(2);
  // H = {e}: cosets are group elements and the section inverts the
  // label exactly.
  auto section = [so2](const EmbeddedTangentVector& label) -> StarElement {
    const Vector& x = label.base().coords();
    Matrix g(2, 2);
    g << x[0], -x[1], x[1], x[0];
    const Vector jx = so2_generator() * x;
    const double t = label.vec().dot(jx);
    return StarElement(AlgebraElement::from_coords(so2, Vector::Constant(1, t)),
                       GroupElement(so2, g));
  };
  return std::make_shared<HomogeneousSpace>(
      "circle", so2, trivial, Matrix::Zero(1, 0), make_unit_circle(), section);
}

SpacePtr make_sphere_space() {
  auto so3 = make_so3();
  auto hz = make_so2_about_z();
  Matrix inclusion = Matrix::Zero(3, 1);
  inclusion(2, 0) = 1.0;  // span{L_z} inside so(3)
  auto section = [so3](const EmbeddedTangentVector& label) -> StarElement {
    const Eigen::Vector3d x = label.base().coords();
    const Eigen::Vector3d w = label.vec();
    const Matrix g = rotation_taking_pole_to(x);
    // horizontal lift: a = hat(x cross w) satisfies a x = w and has no
    // component along the isotropy generator hat(x)
    const Eigen::Vector3d omega = x.cross(w);
    return StarElement(
        AlgebraElement::from_matrix(so3, so3_hat(omega), 1e-9),
        GroupElement(so3, g));
  };
  return std::make_shared<HomogeneousSpace>("sphere", so3, hz, inclusion,
                                            make_unit_sphere(), section);
}

SpacePtr make_euclidean_space() {
  auto se2 = make_se2();
  auto h_rot = make_so2_in_se2();
  Matrix inclusion = Matrix::Zero(3, 1);
  inclusion(0, 0) = 1.0;  // span{J2} inside se(2)
  auto section = [se2](const EmbeddedTangentVector& label) -> StarElement {
    const Vector& x = label.base().coords();
    const Vector& w = label.vec();
    Matrix g = Matrix::Identity(3, 3);
    g(0, 2) = x[0];
    g(1, 2) = x[1];
    Vector coords(3);
    coords << 0.0, w[0], w[1];  // pure-translation tangent lift
    return StarElement(AlgebraElement::from_coords(se2, coords),
                       GroupElement(se2, g));
  };
  return std::make_shared<HomogeneousSpace>("euclidean", se2, h_rot, inclusion,
                                            make_euclidean_plane(), section);
}

std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> entries;

  auto circle = make_circle_space();
  auto circle_rep = make_trivial_rep(circle->subgroup(), 2);
  circle_rep.validate();
  entries.emplace("circle", CatalogEntry{circle, circle_rep});

  auto sphere = make_sphere_space();
  auto sphere_rep = make_so2_standard_rep(sphere->subgroup());
  sphere_rep.validate();
  entries.emplace("sphere", CatalogEntry{sphere, sphere_rep});

  auto euclidean = make_euclidean_space();
  auto euclidean_rep = make_so2_standard_rep(euclidean->subgroup());
  euclidean_rep.validate();
  entries.emplace("euclidean", CatalogEntry{euclidean, euclidean_rep});

  return entries;
}

const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> entries = build_catalog();
  return entries;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, entry] : catalog()) out.push_back(name);
    return out;
  }();
  return names;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  const auto& entries = catalog();
  auto it = entries.find(name);
  if (it == entries.end())
    throw UsageError("unknown catalog example: " + name);
  return it->second;
}

Representation catalog_representation(const CatalogEntry& entry,
                                      const std::string& rep_id) {
  const auto& subgroup = entry.space->subgroup();
  if (rep_id == entry.rep.id()) return entry.rep;
  if (rep_id == "so2-standard") {
    if (subgroup->algebra_dim() != 1)
      throw UsageError("so2-standard is unavailable for " + entry.space->name());
    return make_so2_standard_rep(subgroup);
  }
  if (rep_id == "identity-character") return make_identity_character(subgroup);
  if (rep_id == "standard-inclusion") return make_inclusion_rep(subgroup);
  if (rep_id.rfind("trivial-", 0) == 0) {
    const int m = std::atoi(rep_id.c_str() + 8);
    if (m < 1 || m > 16)
      throw UsageError("trivial-m: fiber dimension out of range in " + rep_id);
    return make_trivial_rep(subgroup, m);
  }
  throw UsageError("unknown representation id: " + rep_id);
}

namespace {

// f(g) = first m components of g^-1 u. Equivariant because every
// catalog H acts block-diagonally on the leading m coordinates, where
// it equals sigma.
SectionGenerator pullback_frame_generator(int fiber_dim, Vector u) {
  auto value = [u, fiber_dim](const GroupElement& g) -> Vector {
    return (g.matrix().inverse() * u).head(fiber_dim);
  };
  auto lift = [u, fiber_dim](const AlgebraElement& a,
                             const GroupElement& g) -> Vector {
    // d/dt (exp(ta) g)^-1 u = -g^-1 a u at t = 0
    return (-(g.matrix().inverse() * (a.matrix() * u))).head(fiber_dim);
  };
  return SectionGenerator{"pullback-frame", value, lift};
}

SectionGenerator zero_generator(int fiber_dim) {
  return SectionGenerator{
      "zero",
      [fiber_dim](const GroupElement&) -> Vector {
        return Vector::Zero(fiber_dim);
      },
      [fiber_dim](const AlgebraElement&, const GroupElement&) -> Vector {
        return Vector::Zero(fiber_dim);
      }};
}

// f(g) = (g p0)_z * (g^-1 u).head(2): height of the coset point times a
// pulled-back frame component.
SectionGenerator sphere_height_times_frame() {
  Vector u(3);
  u << 0.3, -1.1, 0.7;
  Vector p0(3);
  p0 << 0, 0, 1;
  auto value = [u, p0](const GroupElement& g) -> Vector {
    const double height = (g.matrix() * p0)[2];
    return (height * (g.matrix().inverse() * u).head(2)).eval();
  };
  auto lift = [u, p0](const AlgebraElement& a, const GroupElement& g) -> Vector {
    const Vector gp0 = g.matrix() * p0;
    const double height = gp0[2];
    const double dheight = (a.matrix() * gp0)[2];
    const Vector frame = (g.matrix().inverse() * u).head(2);
    const Vector dframe = (-(g.matrix().inverse() * (a.matrix() * u))).head(2);
    return (dheight * frame + height * dframe).eval();
  };
  return SectionGenerator{"sphere-height-times-frame", value, lift};
}

}  // namespace

SectionGenerator catalog_section_generator(const CatalogEntry& entry,
                                           const std::string& id) {
  const int m = entry.rep.fiber_dim();
  if (id == "zero") return zero_generator(m);
  if (id == "pullback-frame") {
    Vector u(entry.space->big_group()->matrix_size());
    if (u.size() == 2)
      u << 1.0, 0.5;
    else if (entry.space->name() == "sphere")
      u << 0.3, -1.1, 0.7;
    else
      u << 0.4, 0.9, 1.0;
    return pullback_frame_generator(m, u);
  }
  if (id == "sphere-height-times-frame" && entry.space->name() == "sphere")
    return sphere_height_times_frame();
  throw UsageError("unknown section generator '" + id + "' for " +
                   entry.space->name());
}

std::vector<std::string> catalog_generator_ids(const CatalogEntry& entry) {
  std::vector<std::string> ids = {"zero", "pullback-frame"};
  if (entry.space->name() == "sphere") ids.push_back("sphere-height-times-frame");
  return ids;
}

}  // namespace starbundle
