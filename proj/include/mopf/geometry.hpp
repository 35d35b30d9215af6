#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mopf/chains.hpp"
#include "mopf/complex.hpp"
#include "mopf/limits.hpp"
#include "mopf/poset.hpp"
#include "mopf/rational.hpp"

namespace mopf {

using Point = std::vector<Rational>;

/// coefficients . x <= bound
struct Inequality {
  std::vector<Rational> coefficients;
  Rational bound;

  Rational slack(const Point& x) const;  // bound - coefficients . x
  bool satisfied_by(const Point& x) const { return sgn(slack(x)) >= 0; }
  bool tight_at(const Point& x) const { return sgn(slack(x)) == 0; }

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Polytope { x : A x <= b } over the unmarked elements of a marked poset;
/// marked coordinates are substituted by their values.
struct ExactPolytope {
  std::vector<int> vars;  // element index of each coordinate
  std::vector<Inequality> inequalities;

  int ambient_dim() const { return static_cast<int>(vars.size()); }
  bool contains(const Point& x) const;
  /// Indices of inequalities tight at x.
  std::vector<std::size_t> tight_set(const Point& x) const;
};

/// One inequality per cover relation, marked coordinates substituted;
/// covers between two marked elements are dropped and duplicates removed.
ExactPolytope hrep(const MarkedPoset& mp);

/// The defining system of the cell F_L for an arbitrary ideal chain: constant
/// on blocks, weakly increasing across blocks, marked values pinned. Rows that
/// become constant after substitution are kept, so infeasibility is visible.
ExactPolytope cell_system(const MarkedPoset& mp, const IdealChain& chain);

/// All vertices, exact and sorted, from the d x d tight subsystems.
/// Throws SizeLimit above limits.max_oracle_vars and Unbounded when a
/// recession direction or lineality exists.
std::vector<Point> enumerate_vertices(const ExactPolytope& p, const Limits& limits = {});

/// Affine dimension of the hull of `points` (-1 for no points).
int affine_dimension(const std::vector<Point>& points);

using VertexSet = boost::dynamic_bitset<>;

struct Face {
  VertexSet vertices;
  int dim = 0;
};

struct FaceLattice {
  std::vector<Point> vertices;
  /// Every nonempty face, the polytope itself included, ordered by dimension.
  std::vector<Face> faces;
  /// superfaces[i]: indices of faces strictly containing faces[i].
  std::vector<std::vector<std::size_t>> superfaces;

  FVector fvector() const;
};

/// Faces as closures of single-inequality tight sets under intersection.
FaceLattice face_lattice(const ExactPolytope& p, const Limits& limits = {});

struct GeomCell {
  AdmissibleChain source;
  Point full_point;             // coordinates over all elements
  Point rel_interior_point;     // projection onto the polytope's vars
  int dim = 0;                  // affine dimension of the cell
  std::vector<std::size_t> carrier;  // ambient inequalities tight at the point
};

/// Relative-interior point of F_L by equal spacing between marked values,
/// with its affine dimension and carrier face.
GeomCell realize_cell(const MarkedPoset& mp, const AdmissibleChain& c);
GeomCell realize_cell(const MarkedPoset& mp, const AdmissibleChain& c, const ExactPolytope& ambient);

/// The face-relative cochain complex of the subdivision by cells F_L: the
/// coboundary of a cell sums the cells one dimension up that contain it and
/// share its carrier face. Same basis ordering as build_complex().
CochainComplex build_geometric_complex(const MarkedPoset& mp, const Limits& limits = {});

/// Checks F_L n F_L' = F_{L n L'} when L n L' is admissible and emptiness of
/// F_L n F_L' otherwise, by comparing exact vertex sets.
bool verify_intersection_lemma(const MarkedPoset& mp, const AdmissibleChain& a, const AdmissibleChain& b,
                               const Limits& limits = {});

/// Wall of the subdivision: x_u = x_v (both unmarked) or x_u = value.
struct SubdivisionHyperplane {
  int element = 0;
  std::optional<int> other;        // set for x_u = x_v
  std::optional<Rational> value;   // set for x_u = value

  bool contains(const Point& full_point) const;
  std::string describe(const Poset& poset) const;

  friend bool operator==(const SubdivisionHyperplane&, const SubdivisionHyperplane&) = default;
};

std::vector<SubdivisionHyperplane> subdivision_hyperplanes(const MarkedPoset& mp);

}  // namespace mopf
