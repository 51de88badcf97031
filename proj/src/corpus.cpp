#include "gv/corpus.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gv {

int VertexMask::popcount() const { return std::popcount(mask); }

const std::vector<std::vector<std::uint8_t>>& cube_symmetries(int d) {
  if (d < 1 || d > 6) throw std::invalid_argument("cube_symmetries: 1 <= d <= 6");
  static const auto table = [] {
    std::vector<std::vector<std::vector<std::uint8_t>>> all(7);
    for (int dim = 1; dim <= 6; ++dim) {
      const int nv = 1 << dim;
      std::vector<int> perm(dim);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        for (int flips = 0; flips < nv; ++flips) {
          std::vector<std::uint8_t> map(nv);
          for (int v = 0; v < nv; ++v) {
            int u = 0;
            for (int j = 0; j < dim; ++j)
              u |= (((v >> perm[j]) & 1) ^ ((flips >> j) & 1)) << j;
            map[v] = static_cast<std::uint8_t>(u);
          }
          all[dim].push_back(std::move(map));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return all;
  }();
  return table[d];
}

namespace {

std::uint64_t apply_map(std::uint64_t mask, const std::vector<std::uint8_t>& map) {
  std::uint64_t out = 0;
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    out |= (1ULL << map[v]);
  }
  return out;
}

}  // namespace

VertexMask canonical_form(const VertexMask& m) {
  std::uint64_t best = m.mask;
  for (const auto& map : cube_symmetries(m.d))
    best = std::min(best, apply_map(m.mask, map));
  return {m.d, best};
}

Polytope mask_polytope(const VertexMask& m) {
  Polytope p;
  std::ostringstream lbl;
  lbl << "d=" << m.d << " mask=0x" << std::hex << m.mask;
  p.label = lbl.str();
  for (int v = 0; v < (1 << m.d); ++v) {
    if (!((m.mask >> v) & 1)) continue;
    std::vector<Rat> pt(m.d);
    for (int j = 0; j < m.d; ++j) pt[j] = (v >> j) & 1;
    p.points.push_back(std::move(pt));
  }
  if (p.points.empty()) throw std::invalid_argument("mask_polytope: empty mask");
  return p;
}

int mask_dim(const VertexMask& m) {
  return static_cast<int>(affine_dim(mask_polytope(m)));
}

std::vector<VertexMask> enumerate_01(int d) {
  if (d < 1) throw std::invalid_argument("enumerate_01: d >= 1 required");
  if (d > 4)
    throw std::invalid_argument(
        "enumerate_01: exhaustive mode is limited to d <= 4; use sample_01 or ingest a mask list");
  const auto& syms = cube_symmetries(d);
  const std::uint64_t nmasks = 1ULL << (1 << d);
  std::vector<VertexMask> out;
  for (std::uint64_t mask = 1; mask < nmasks; ++mask) {
    if (std::popcount(mask) < d + 1) continue;
    bool canonical = true;
    for (const auto& map : syms)
      if (apply_map(mask, map) < mask) { canonical = false; break; }
    if (!canonical) continue;
    VertexMask vm{d, mask};
    if (mask_dim(vm) != d) continue;
    out.push_back(vm);
  }
  return out;
}

std::vector<VertexMask> sample_01(int d, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_01: n >= 1 required");
  if (d < 1 || d > 6) throw std::invalid_argument("sample_01: 1 <= d <= 6");
  std::mt19937_64 rng(seed);
  const int nv = 1 << d;
  const std::uint64_t all = (nv == 64) ? ~0ULL : ((1ULL << nv) - 1);
  std::set<std::uint64_t> seen;
  std::vector<VertexMask> out;
  const long long budget = 4096LL * n + 1000000;
  for (long long tries = 0; tries < budget && static_cast<int>(out.size()) < n; ++tries) {
    std::uint64_t mask = rng() & all;
    if (std::popcount(mask) < d + 1) continue;
    VertexMask cm = canonical_form({d, mask});
    if (seen.count(cm.mask)) continue;
    if (mask_dim(cm) != d) continue;
    seen.insert(cm.mask);
    out.push_back(cm);
  }
  if (static_cast<int>(out.size()) < n)
    throw std::runtime_error("sample_01: retry budget exhausted before finding " +
                             std::to_string(n) + " classes");
  return out;
}

std::pair<CorpusEntry, CorpusEntry> build_entry(const VertexMask& m) {
  VertexMask cm = canonical_form(m);
  try {
    Polytope p = reduce_to_full_dim(mask_polytope(cm));
    const int dim = static_cast<int>(p.ambient_dim());
    FacetDescription fd = facet_enum(p);
    FaceLattice l = lattice_from_incidence(fd, dim);
    CorpusEntry primal;
    primal.d = dim;
    primal.mask = cm.mask;
    primal.polar = false;
    primal.flag = flag_vector(l);
    primal.cd = cd_decompose(primal.flag);
    CorpusEntry polar;
    polar.d = dim;
    polar.mask = cm.mask;
    polar.polar = true;
    polar.flag = polar_flag(primal.flag);
    polar.cd = cd_decompose(polar.flag);
    return {std::move(primal), std::move(polar)};
  } catch (const std::exception& e) {
    std::ostringstream os;
    os << "build_entry failed for d=" << cm.d << " mask=0x" << std::hex << cm.mask
       << ": " << e.what();
    throw std::runtime_error(os.str());
  }
}

std::vector<CorpusEntry> build_corpus(const std::vector<VertexMask>& masks,
                                      unsigned threads) {
  if (threads == 0) {
    if (const char* env = std::getenv("GVLAB_THREADS")) threads = std::atoi(env);
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
  }
  std::vector<VertexMask> work(masks);
  for (auto& m : work) m = canonical_form(m);
  std::sort(work.begin(), work.end(), [](const VertexMask& a, const VertexMask& b) {
    return a.mask < b.mask;
  });
  work.erase(std::unique(work.begin(), work.end()), work.end());

  std::vector<std::pair<CorpusEntry, CorpusEntry>> results(work.size());
  std::vector<std::string> failures(work.size());
  auto run = [&](unsigned t) {
    for (std::size_t i = t; i < work.size(); i += threads) {
      try {
        results[i] = build_entry(work[i]);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  if (threads <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures)
    if (!f.empty()) throw std::runtime_error(f);
  std::vector<CorpusEntry> out;
  out.reserve(2 * work.size());
  for (auto& [primal, polar] : results) {
    out.push_back(std::move(primal));
    out.push_back(std::move(polar));
  }
  return out;
}

DistanceCount distance_count(int d, int vertex, std::uint64_t vset) {
  DistanceCount dc;
  dc.counts.assign(d + 1, 0);
  while (vset) {
    int v = std::countr_zero(vset);
    vset &= vset - 1;
    dc.counts[std::popcount(static_cast<unsigned>(v ^ vertex))]++;
  }
  return dc;
}

std::vector<VertexMask> find_by_distance_count(int d, int k,
                                               const std::vector<int>& target) {
  if (static_cast<int>(target.size()) != d + 1)
    throw std::invalid_argument("find_by_distance_count: target length must be d+1");
  std::vector<VertexMask> found;
  if (k < 1) return found;
  if (target[0] != 1) return found;  // each member is at distance 0 from itself only
  if (std::accumulate(target.begin(), target.end(), 0) != k) return found;
  const int nv = 1 << d;

  // Every orbit of a candidate set contains a set through vertex 0, so root
  // the search there and canonicalise matches at the end.
  std::vector<int> chosen = {0};
  std::vector<std::vector<int>> hist(1, std::vector<int>(d + 1, 0));
  hist[0][0] = 1;
  std::set<std::uint64_t> canon;

  auto full_check = [&]() {
    for (const auto& h : hist)
      if (h != target) return false;
    return true;
  };
  std::function<void(int)> dfs = [&](int next) {
    if (static_cast<int>(chosen.size()) == k) {
      if (full_check()) {
        std::uint64_t mask = 0;
        for (int v : chosen) mask |= (1ULL << v);
        canon.insert(canonical_form({d, mask}).mask);
      }
      return;
    }
    const int need = k - static_cast<int>(chosen.size());
    for (int v = next; v < nv; ++v) {
      if (nv - v < need) break;
      bool ok = true;
      std::vector<int> dists(chosen.size());
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        dists[i] = std::popcount(static_cast<unsigned>(chosen[i] ^ v));
        if (hist[i][dists[i]] + 1 > target[dists[i]]) { ok = false; break; }
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < chosen.size(); ++i) hist[i][dists[i]]++;
      hist.emplace_back(d + 1, 0);
      auto& hv = hist.back();
      hv[0] = 1;
      for (int dist : dists) hv[dist]++;
      if (std::equal(hv.begin(), hv.end(), target.begin(),
                     [](int a, int b) { return a <= b; })) {
        chosen.push_back(v);
        dfs(v + 1);
        chosen.pop_back();
      }
      hist.pop_back();
      for (std::size_t i = 0; i < chosen.size(); ++i) hist[i][dists[i]]--;
    }
  };
  dfs(1);
  for (std::uint64_t m : canon) found.push_back({d, m});
  return found;
}

VertexMask exceptional_missing5() {
  // Two diagonal vertex pairs on one 4-face and the four vertices of the
  // opposite 4-face at Hamming distance 3 from all of them.
  std::uint64_t mask = 0;
  for (int v : {0, 24, 6, 30, 21, 13, 19, 11}) mask |= (1ULL << v);
  return {5, mask};
}

VertexMask exceptional_mask5() {
  return {5, 0xFFFFFFFFULL & ~exceptional_missing5().mask};
}

namespace {
constexpr const char* kCacheHeader = "gvlab-corpus-v1";

std::string hex_of(std::uint64_t m) {
  std::ostringstream os;
  os << std::hex << m;
  return os.str();
}
}  // namespace

void cache_write(std::ostream& out, const std::vector<CorpusEntry>& entries) {
  out << kCacheHeader << "\n";
  for (const auto& e : entries) {
    out << e.d << ";" << (e.polar ? "P:" : "") << hex_of(e.mask) << ";"
        << flag_str(e.flag) << ";" << cd_str(e.cd) << "\n";
  }
}

void cache_write(const std::string& path, const std::vector<CorpusEntry>& entries) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  cache_write(out, entries);
}

CacheReadResult cache_read(std::istream& in) {
  CacheReadResult res;
  std::string line;
  std::size_t lineno = 0;
  std::set<std::pair<std::uint64_t, bool>> seen;
  if (!std::getline(in, line) || line != kCacheHeader) {
    res.errors.push_back("line 1: missing '" + std::string(kCacheHeader) + "' header");
    return res;
  }
  lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      std::vector<std::string> parts;
      std::size_t start = 0;
      for (int i = 0; i < 5; ++i) {
        auto semi = line.find(';', start);
        if (semi == std::string::npos) throw std::runtime_error("too few fields");
        parts.push_back(line.substr(start, semi - start));
        start = semi + 1;
      }
      parts.push_back(line.substr(start));
      // Fields: d ; mask ; "d=k" ; counts ; "d=k" ; cd-body
      CorpusEntry e;
      e.d = std::stoi(parts[0]);
      std::string maskstr = parts[1];
      if (maskstr.rfind("P:", 0) == 0) {
        e.polar = true;
        maskstr = maskstr.substr(2);
      }
      e.mask = std::stoull(maskstr, nullptr, 16);
      e.flag = flag_parse(parts[2] + ";" + parts[3]);
      e.cd = cd_parse(parts[4] + ";" + parts[5]);
      if (e.flag.d != e.d || e.cd.d != e.d)
        throw std::runtime_error("dimension fields disagree");
      if (seen.emplace(e.mask, e.polar).second) res.entries.push_back(std::move(e));
    } catch (const std::exception& ex) {
      res.errors.push_back("line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return res;
}

CacheReadResult cache_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return cache_read(in);
}

std::string mask_record(const VertexMask& m) {
  return "d=" + std::to_string(m.d) + " mask=0x" + hex_of(m.mask);
}

std::vector<VertexMask> read_mask_list(std::istream& in) {
  std::vector<VertexMask> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    int d = 0;
    unsigned long long mask = 0;
    if (std::sscanf(line.c_str(), "d=%d mask=0x%llx", &d, &mask) != 2 || d < 1 || d > 6)
      throw std::runtime_error("mask list line " + std::to_string(lineno) +
                               ": expected 'd=<d> mask=0x<hex>'");
    out.push_back({d, mask});
  }
  return out;
}

std::vector<VertexMask> read_mask_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_mask_list(in);
}

}  // namespace gv
