#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gv/corpus.hpp"

namespace gv {

inline constexpr const char* kToolVersion = "gvlab 1.0.0";

struct EffectiveFamily {
  int d = 0;
  std::size_t corpus_size = 0;
  std::size_t distinct_cd = 0;
  std::vector<std::uint32_t> members;  // word-set masks with min lambda_s >= 0, sorted
  struct Exclusion {
    std::uint32_t set_mask = 0;
    std::size_t witness = 0;  // index into the corpus entry list
    Rat lambda;               // the (negative) minimising value
  };
  std::vector<Exclusion> excluded;

  bool is_member(std::uint32_t set_mask) const;
};

// Sweeps all 2^{F_{d+1}} word-sets over the deduplicated CD vectors.
// Throws std::invalid_argument on an empty corpus.
EffectiveFamily effective_sets(const std::vector<CorpusEntry>& entries,
                               unsigned threads = 0);

// Members not expressible as a nonnegative rational combination of the other
// nonempty members (exact LP); the empty set is never extremal.
std::vector<std::uint32_t> extremal_subsets(const EffectiveFamily& fam);

enum class SetClass { order_zero, higher_order, residual };
const char* set_class_name(SetClass c);

// order_zero: s = {w : deg_D w = i} for some i; higher_order: lambda_s
// vanishes on simple polytopes; residual otherwise.
SetClass classify(const WordSet& s);

// Expresses indicator(s) in the given component basis and renders the
// nonnegativity of lambda_s as an inequality between g components, e.g.
// "g_122 <= g_221 + g_2111". Throws if s is outside the basis span.
std::string render_inequality(const WordSet& s, const std::vector<WordSet>& basis);

// g_s = lambda_s per component set.
std::vector<Rat> g_vector(const CDVector& cd, const std::vector<WordSet>& components);

struct SearchReport {
  int d = 0;
  std::size_t corpus_size = 0;
  std::size_t distinct_cd = 0;
  std::string corpus_fingerprint;
  EffectiveFamily family;
  struct ExtremalInfo {
    std::uint32_t set_mask = 0;
    SetClass cls = SetClass::residual;
    std::string index;       // word index string, C->1, D->2
    std::string inequality;  // rendered when a component basis exists
  };
  std::vector<ExtremalInfo> extremal;
};

SearchReport run_search(const std::vector<CorpusEntry>& entries,
                        const std::string& fingerprint, unsigned threads = 0);

// Human-readable section followed by a machine-readable JSON section
// ("gvlab-report-v1").
void write_report(std::ostream& out, const SearchReport& rep);

// FNV-1a over a file's bytes, rendered as hex; used as corpus fingerprint.
std::string file_fingerprint(const std::string& path);

}  // namespace gv
