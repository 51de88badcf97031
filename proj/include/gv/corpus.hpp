#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gv/cdbasis.hpp"

namespace gv {

// Subset of d-cube vertices as a 2^d-bit mask; bit i = vertex whose
// coordinate j is bit j of i.
struct VertexMask {
  int d = 0;
  std::uint64_t mask = 0;

  int popcount() const;
  bool operator==(const VertexMask&) const = default;
};

// Minimum mask over the hyperoctahedral orbit (all coordinate permutations
// and complementations; group order 2^d d!).
VertexMask canonical_form(const VertexMask& m);

// Vertex-index remap tables, one per group element. Shared per dimension.
const std::vector<std::vector<std::uint8_t>>& cube_symmetries(int d);

// Polytope with the 0/1 coordinates selected by the mask.
Polytope mask_polytope(const VertexMask& m);

// Affine dimension of the masked vertex set (cheap rank computation).
int mask_dim(const VertexMask& m);

// One canonical representative per full-dimensional orbit, ascending mask
// order. Exhaustive scan; throws std::invalid_argument for d >= 5.
std::vector<VertexMask> enumerate_01(int d);

// n distinct canonical full-dimensional classes by seeded rejection
// sampling; identical seed => identical stream. Throws std::runtime_error
// if the retry budget is exhausted.
std::vector<VertexMask> sample_01(int d, int n, std::uint64_t seed);

struct CorpusEntry {
  int d = 0;
  std::uint64_t mask = 0;  // canonical source mask
  bool polar = false;
  FlagVector flag;
  CDVector cd;
};

// Full pipeline for the primal (reduce / hull / lattice / flag / decompose);
// the polar entry is derived at flag level. Errors carry the mask.
std::pair<CorpusEntry, CorpusEntry> build_entry(const VertexMask& m);

// Builds entries for many masks; worker count from threads (0 = hardware,
// overridable by GVLAB_THREADS). Output order is independent of threads:
// entries sorted by (canonical mask, primal-before-polar).
std::vector<CorpusEntry> build_corpus(const std::vector<VertexMask>& masks,
                                      unsigned threads = 0);

struct DistanceCount {
  std::vector<int> counts;  // index i = #{v' : hamming(v, v') = i}

  bool operator==(const DistanceCount&) const = default;
};

DistanceCount distance_count(int d, int vertex, std::uint64_t vset);

// All canonical k-subsets where every member vertex has the target distance
// count. Pruned depth-first search.
std::vector<VertexMask> find_by_distance_count(int d, int k,
                                               const std::vector<int>& target);

// The 24-vertex exceptional 5-polytope: the 5-cube minus the unique (up to
// symmetry) 8-vertex set with distance count (1,0,2,4,1,0).
VertexMask exceptional_mask5();
// The 8 removed vertices themselves.
VertexMask exceptional_missing5();

// Corpus cache: header "gvlab-corpus-v1", then one entry per line:
// "<d>;<hex mask or P:hex>;<flag>;<cd>".
void cache_write(std::ostream& out, const std::vector<CorpusEntry>& entries);
void cache_write(const std::string& path, const std::vector<CorpusEntry>& entries);

struct CacheReadResult {
  std::vector<CorpusEntry> entries;  // deduplicated on (mask, polar)
  std::vector<std::string> errors;   // per malformed line, with line number
};
CacheReadResult cache_read(std::istream& in);
CacheReadResult cache_read(const std::string& path);

// Mask list: one "d=<d> mask=0x<hex>" per line, '#' comments allowed.
std::vector<VertexMask> read_mask_list(std::istream& in);
std::vector<VertexMask> read_mask_list(const std::string& path);
std::string mask_record(const VertexMask& m);

}  // namespace gv
