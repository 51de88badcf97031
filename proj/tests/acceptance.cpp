// Acceptance suite: one self-contained check per criterion, selected by
// --criterion N (1..8). Prints a single PASS/FAIL line per criterion and
// exits nonzero on failure. Criterion 8 (full d=5 class list reproduction)
// needs an externally supplied enumeration and is reported, not gated.

#include <algorithm>
#include <bit>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "gv/d5.hpp"
#include "gv/search.hpp"
#include "oracles.hpp"

using gv::CorpusEntry;
using gv::Rat;
using gv::VertexMask;
using gv::WordSet;

namespace {

gv::FaceLattice simplex_lattice(int d) {
  gv::FaceLattice l = gv::point_lattice();
  for (int i = 0; i < d; ++i) l = gv::pyramid(l);
  return l;
}

gv::FaceLattice cube_lattice(int d) {
  gv::FaceLattice l = gv::point_lattice();
  for (int i = 0; i < d; ++i) l = gv::prism(l);
  return l;
}

gv::FaceLattice cross_lattice(int d) {
  gv::Polytope p;
  for (int i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      std::vector<Rat> pt(d, Rat(0));
      pt[i] = s;
      p.points.push_back(std::move(pt));
    }
  return gv::lattice_from_incidence(gv::facet_enum(p), d);
}

std::vector<CorpusEntry> exhaustive_with_polars(int d) {
  std::vector<CorpusEntry> out;
  for (const auto& e : gv::build_corpus(gv::enumerate_01(d))) out.push_back(e);
  return out;
}

// --- criterion 1: the 24-vertex exceptional 5-polytope, exact values ---

bool criterion1() {
  auto [primal, polar] = gv::build_entry(gv::exceptional_mask5());
  const gv::CDVector ref = gv::d5::exceptional_cd();
  const bool primal_hits = primal.cd == ref;
  const bool polar_hits = polar.cd == ref;
  if (primal_hits == polar_hits) return false;  // need exactly one match
  const gv::CDVector& hit = primal_hits ? primal.cd : polar.cd;
  if (gv::lambda_sum(hit, gv::word_set(5, {"CDCC", "CCDC", "CCCD"})) != Rat(-2))
    return false;
  return gv::g_vector(hit, gv::d5::component_sets()) == gv::d5::exceptional_g();
}

// --- criterion 2: Fibonacci ranks + zero-residual span membership ---

bool criterion2() {
  const long long expect[] = {1, 1, 2, 3, 5, 8, 13};
  for (int d = 0; d <= 6; ++d) {
    const gv::FlagBasis& b = gv::flag_basis(d);
    if (b.matrix.cols != static_cast<std::size_t>(expect[d])) return false;
    if (gv::mat_rank(b.matrix) != static_cast<std::size_t>(expect[d])) return false;
  }
  for (int d = 1; d <= 4; ++d)
    for (const auto& e : exhaustive_with_polars(d)) {
      // build_corpus already decomposes; re-verify the residual explicitly
      std::vector<Rat> recon(e.flag.counts.size(), Rat(0));
      const gv::FlagBasis& b = gv::flag_basis(d);
      for (std::size_t r = 0; r < recon.size(); ++r)
        for (std::size_t c = 0; c < b.matrix.cols; ++c)
          recon[r] += b.matrix.at(r, c) * e.cd.coeffs[c];
      for (std::size_t r = 0; r < recon.size(); ++r)
        if (recon[r] != Rat(static_cast<long>(e.flag.counts[r]))) return false;
    }
  return true;
}

// --- criterion 3: IC-equation and D-I commutation over >= 50 polytopes ---

bool criterion3() {
  using gv::FormalFlagSum;
  std::vector<gv::FaceLattice> xs;
  for (int d = 0; d <= 4; ++d) {
    xs.push_back(simplex_lattice(d));
    xs.push_back(cube_lattice(d));
    if (d >= 2) xs.push_back(cross_lattice(d));
  }
  for (int d = 1; d <= 3; ++d)
    for (const auto& m : gv::enumerate_01(d)) {
      gv::Polytope p = gv::reduce_to_full_dim(gv::mask_polytope(m));
      xs.push_back(gv::lattice_from_incidence(gv::facet_enum(p), d));
    }
  // pyramids and prisms of the d=3 classes, to pass 50 distinct inputs
  const std::size_t base = xs.size();
  for (std::size_t i = 0; i < base; ++i) {
    if (xs[i].d != 3) continue;
    xs.push_back(gv::pyramid(xs[i]));
    xs.push_back(gv::prism(xs[i]));
  }
  if (xs.size() < 50) return false;

  gv::FaceLattice square = cube_lattice(2);
  gv::FaceLattice triangle = simplex_lattice(2);
  auto flag = [](const gv::FaceLattice& l) {
    return FormalFlagSum(gv::flag_vector(l));
  };
  for (const auto& x : xs) {
    // IC X - CC X = I^2 X - (triangle x X)
    FormalFlagSum lhs = flag(gv::prism(gv::pyramid(x))) - flag(gv::pyramid(gv::pyramid(x)));
    FormalFlagSum rhs = flag(gv::prism(gv::prism(x))) - flag(gv::product(triangle, x));
    if (!(lhs == rhs)) return false;
    // equivalent square form
    FormalFlagSum rhs2 = flag(gv::product(square, x)) - flag(gv::product(triangle, x));
    if (!(lhs == rhs2)) return false;
    // D I X = I D X
    FormalFlagSum di = flag(gv::prism(gv::pyramid(gv::prism(x)))) -
                       flag(gv::pyramid(gv::pyramid(gv::prism(x))));
    FormalFlagSum id = flag(gv::prism(gv::prism(gv::pyramid(x)))) -
                       flag(gv::prism(gv::pyramid(gv::pyramid(x))));
    if (!(di == id)) return false;
  }
  return true;
}

// --- criterion 4: unit decomposition of every word, d <= 6 ---

bool criterion4() {
  for (int d = 0; d <= 6; ++d)
    for (std::size_t i = 0; i < gv::words(d).size(); ++i) {
      gv::CDVector cd = gv::cd_decompose(gv::word_flag(gv::words(d)[i]));
      for (std::size_t j = 0; j < cd.coeffs.size(); ++j)
        if (cd.coeffs[j] != Rat(i == j ? 1 : 0)) return false;
    }
  return true;
}

// --- criterion 5: small-d search vs independent brute force ---

// Independent effective check: re-derive every CD vector by solving the full
// 2^d system with the generic solver (no pivot-row shortcut), then evaluate
// every lambda_s against every entry without deduplication.
std::vector<std::uint32_t> brute_effective(const std::vector<CorpusEntry>& entries) {
  const int d = entries[0].d;
  const gv::FlagBasis& b = gv::flag_basis(d);
  std::vector<std::vector<Rat>> cds;
  for (const auto& e : entries) {
    std::vector<Rat> rhs;
    for (long long c : e.flag.counts) rhs.push_back(Rat(static_cast<long>(c)));
    gv::SolveResult s = gv::solve_linear(b.matrix, rhs);
    if (s.status != gv::SolveStatus::ok) return {};  // signal failure
    cds.push_back(std::move(s.x));
  }
  const std::size_t nw = b.matrix.cols;
  std::vector<std::uint32_t> members;
  for (std::uint32_t s = 0; s < (1u << nw); ++s) {
    bool ok = true;
    for (const auto& cd : cds) {
      Rat acc = 0;
      for (std::size_t wi = 0; wi < nw; ++wi)
        if ((s >> wi) & 1) acc += cd[wi];
      if (acc < 0) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(s);
  }
  return members;
}

bool criterion5() {
  // polygons
  std::vector<CorpusEntry> polys;
  for (int m = 3; m <= 12; ++m) {
    CorpusEntry e;
    e.d = 2;
    e.flag.d = 2;
    e.flag.counts = {1, m, m, 2 * m};
    e.cd = gv::cd_decompose(e.flag);
    polys.push_back(e);
  }
  gv::EffectiveFamily pf = gv::effective_sets(polys);
  if (gv::extremal_subsets(pf) != std::vector<std::uint32_t>{1, 2}) return false;

  // d=4 class count against the from-scratch orbit enumeration
  std::vector<std::uint64_t> oracle_classes = oracle::enumerate_01_orbits(4);
  std::vector<VertexMask> engine_classes = gv::enumerate_01(4);
  if (engine_classes.size() != oracle_classes.size()) return false;
  for (std::size_t i = 0; i < oracle_classes.size(); ++i)
    if (engine_classes[i].mask != oracle_classes[i]) return false;

  for (int d : {3, 4}) {
    std::vector<CorpusEntry> corpus = exhaustive_with_polars(d);
    gv::EffectiveFamily fam = gv::effective_sets(corpus);
    if (fam.members != brute_effective(corpus)) return false;

    std::vector<std::uint32_t> extremal = gv::extremal_subsets(fam);
    for (int i = 0; 2 * i <= d; ++i) {
      std::uint32_t oz = 0;
      for (std::size_t w = 0; w < gv::words(d).size(); ++w)
        if (gv::words(d)[w].deg_D() == i) oz |= (1u << w);
      if (!fam.is_member(oz)) return false;
      if (std::find(extremal.begin(), extremal.end(), oz) == extremal.end())
        return false;
    }
  }
  return true;
}

// --- criterion 6: d=5 sampled consistency with the published sets ---

bool criterion6() {
  std::vector<VertexMask> masks = gv::sample_01(5, 10000, 20100705);
  masks.push_back(gv::canonical_form(gv::exceptional_mask5()));
  std::sort(masks.begin(), masks.end(),
            [](const VertexMask& a, const VertexMask& b) { return a.mask < b.mask; });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<CorpusEntry> corpus = gv::build_corpus(masks);
  gv::EffectiveFamily fam = gv::effective_sets(corpus);

  for (const WordSet& s : gv::d5::extremal_sets())
    if (!fam.is_member(s.mask)) return false;

  // the one non-effective union of component sets, witnessed at -2
  WordSet bad = gv::word_set(5, {"CDCC", "CCDC", "CCCD"});
  if (fam.is_member(bad.mask)) return false;
  std::uint64_t exc = gv::canonical_form(gv::exceptional_mask5()).mask;
  bool witnessed = false;
  for (const auto& e : corpus)
    if (e.mask == exc && gv::lambda_sum(e.cd, bad) == Rat(-2)) witnessed = true;
  if (!witnessed) return false;

  // structural upper-triangularity of the component order: each set's first
  // word does not occur in any later set
  std::vector<WordSet> comps = gv::d5::component_sets();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::uint32_t first = 1u << std::countr_zero(comps[i].mask);
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (comps[j].mask & first) return false;
  }

  for (const auto& [s, expect] : gv::d5::residual_sets())
    if (gv::render_inequality(s, comps) != expect) return false;
  return true;
}

// --- criterion 7: distance-count propositions ---

bool criterion7() {
  VertexMask missing = gv::exceptional_missing5();
  for (int v = 0; v < 32; ++v)
    if ((missing.mask >> v) & 1)
      if (gv::distance_count(5, v, missing.mask).counts !=
          gv::d5::exceptional_distance_count())
        return false;
  std::vector<VertexMask> hits =
      gv::find_by_distance_count(5, 8, gv::d5::exceptional_distance_count());
  return hits.size() == 1 && hits[0] == gv::canonical_form(missing);
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
      criterion = std::atoi(argv[++i]);

  static const struct {
    int n;
    const char* what;
    bool (*run)();
  } checks[] = {
      {1, "exceptional 24-vertex 5-polytope: CD vector, lambda sums, g components", criterion1},
      {2, "Fibonacci basis ranks d=0..6 and corpus zero-residual span membership", criterion2},
      {3, "IC equation and D-I commutation over >= 50 polytopes", criterion3},
      {4, "unit CD decomposition of every basis word, d <= 6", criterion4},
      {5, "small-d search equals independent brute force (d=2 polygons, d=3/4 exhaustive)", criterion5},
      {6, "d=5 sampled corpus: 13 published sets effective, exclusion witnessed, inequalities verbatim", criterion6},
      {7, "distance-count propositions: histogram and uniqueness of the 8-vertex set", criterion7},
  };

  if (criterion == 8) {
    std::cout << "SKIP: criterion 8: full d=5 class-list reproduction needs an external "
                 "enumeration file (use `gvlab corpus 5 --ingest ...` then `gvlab search`); "
                 "reported, not gated\n";
    return 0;
  }

  bool all_ok = true;
  for (const auto& c : checks) {
    if (criterion != 0 && criterion != c.n) continue;
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::cout << "FAIL: criterion " << c.n << ": " << c.what
                << " (exception: " << e.what() << ")\n";
      all_ok = false;
      continue;
    }
    std::cout << (ok ? "PASS" : "FAIL") << ": criterion " << c.n << ": " << c.what << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
