#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "gv/hull.hpp"

namespace gv {

using Bits = boost::dynamic_bitset<>;

// Graded face lattice: unique bottom (dim -1) and top (dim d), cover
// relations raising dim by exactly one. Immutable after construction.
struct FaceLattice {
  int d = -1;
  std::vector<int> dims;      // per face id, in {-1, ..., d}
  std::vector<Bits> above;    // above[i][j] = (face i <= face j); reflexive

  std::size_t size() const { return dims.size(); }
  bool leq(std::size_t i, std::size_t j) const { return above[i].test(j); }
  std::size_t bottom() const;
  std::size_t top() const;
  std::vector<std::size_t> level(int dim) const;
  std::vector<long long> face_counts() const;  // by dim, -1..d
};

// Chain counts f_S indexed by bitmask over {0,...,d-1}; always 2^d entries.
struct FlagVector {
  int d = 0;
  std::vector<long long> counts;  // size 1 << d

  bool operator==(const FlagVector&) const = default;
};

// Integer formal combination of flag vectors of equal dimension.
struct FormalFlagSum {
  int d = 0;
  std::vector<long long> counts;

  FormalFlagSum() = default;
  explicit FormalFlagSum(const FlagVector& f) : d(f.d), counts(f.counts) {}
  FormalFlagSum& operator+=(const FormalFlagSum& o);
  FormalFlagSum& operator-=(const FormalFlagSum& o);
  FormalFlagSum& operator*=(long long k);
  bool operator==(const FormalFlagSum&) const = default;
};
FormalFlagSum operator+(FormalFlagSum a, const FormalFlagSum& b);
FormalFlagSum operator-(FormalFlagSum a, const FormalFlagSum& b);

FaceLattice point_lattice();
FaceLattice segment_lattice();

// Pyramid CX: every face F of X contributes F and cone(F).
FaceLattice pyramid(const FaceLattice& l);

// Prism IX = X x segment.
FaceLattice prism(const FaceLattice& l);

// Cartesian product: nonempty faces are pairs of nonempty faces with
// componentwise order; a single empty face is adjoined.
FaceLattice product(const FaceLattice& a, const FaceLattice& b);

// Builds the face lattice from vertex-facet incidences via the closure
// operator (a face = intersection of the facets containing it). Throws
// std::logic_error if the result is not graded with top dimension d.
FaceLattice lattice_from_incidence(const FacetDescription& fd, int d);

// f_S = number of chains of proper nonempty faces with dimension set S,
// computed by level-to-level incidence products.
FlagVector flag_vector(const FaceLattice& l);

// f'_S = f_{sigma(S)} with sigma(i) = d-1-i (inclusion reversal).
FlagVector polar_flag(const FlagVector& f);

// "d=<d>;" + 2^d comma-separated counts in ascending-bitmask order.
std::string flag_str(const FlagVector& f);
FlagVector flag_parse(const std::string& s);

}  // namespace gv
