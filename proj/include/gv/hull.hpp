#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gv/linalg.hpp"
#include "gv/rat.hpp"

namespace gv {

// Vertex description with exact rational coordinates.
struct Polytope {
  std::vector<std::vector<Rat>> points;
  std::string label;

  std::size_t ambient_dim() const { return points.empty() ? 0 : points[0].size(); }
};

struct FacetDescription {
  struct Facet {
    std::vector<Rat> normal;  // normal . x <= offset
    Rat offset;
    std::uint64_t incident = 0;  // bit i set iff vertex i lies on the facet
  };
  std::vector<Facet> facets;
  std::size_t nvertices = 0;
  std::size_t dim = 0;  // ambient = affine dimension of the input
};

// Dimension of the affine hull (0 for a single point).
std::size_t affine_dim(const Polytope& p);

// Keeps exactly the extreme points, decided per point by an exact LP
// separation against the convex hull of the others.
Polytope vertex_reduce(const Polytope& p);

// Re-expresses the points in rational coordinates on a basis of their affine
// hull; output ambient dimension = affine_dim(p). Face lattice is preserved
// (the map is an affine isomorphism onto the hull).
Polytope reduce_to_full_dim(const Polytope& p);

// Complete irredundant facet list + exact incidences, via the double
// description method on the polar cone. Requires a full-dimensional input
// (route through reduce_to_full_dim first); throws std::invalid_argument
// otherwise. At most 64 vertices are supported.
FacetDescription facet_enum(const Polytope& p);

// Vertex file format: '#' comment lines; one point per line as
// whitespace-separated rationals ("3/2" or "2"); equal arity everywhere.
Polytope read_vertex_file(std::istream& in);
Polytope read_vertex_file(const std::string& path);
void write_vertex_file(std::ostream& out, const Polytope& p);

}  // namespace gv
