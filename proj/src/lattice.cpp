#include "gv/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gv {

std::size_t FaceLattice::bottom() const {
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] == -1) return i;
  throw std::logic_error("lattice without bottom face");
}

std::size_t FaceLattice::top() const {
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] == d) return i;
  throw std::logic_error("lattice without top face");
}

std::vector<std::size_t> FaceLattice::level(int dim) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] == dim) out.push_back(i);
  return out;
}

std::vector<long long> FaceLattice::face_counts() const {
  std::vector<long long> c(d + 2, 0);
  for (int k : dims) c[k + 1]++;
  return c;
}

FormalFlagSum& FormalFlagSum::operator+=(const FormalFlagSum& o) {
  if (d != o.d) throw std::invalid_argument("formal sum: dimension mismatch");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  return *this;
}
FormalFlagSum& FormalFlagSum::operator-=(const FormalFlagSum& o) {
  if (d != o.d) throw std::invalid_argument("formal sum: dimension mismatch");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] -= o.counts[i];
  return *this;
}
FormalFlagSum& FormalFlagSum::operator*=(long long k) {
  for (auto& c : counts) c *= k;
  return *this;
}
FormalFlagSum operator+(FormalFlagSum a, const FormalFlagSum& b) { return a += b; }
FormalFlagSum operator-(FormalFlagSum a, const FormalFlagSum& b) { return a -= b; }

FaceLattice point_lattice() {
  FaceLattice l;
  l.d = 0;
  l.dims = {-1, 0};
  l.above.assign(2, Bits(2));
  l.above[0].set(0);
  l.above[0].set(1);
  l.above[1].set(1);
  return l;
}

FaceLattice segment_lattice() { return pyramid(point_lattice()); }

FaceLattice pyramid(const FaceLattice& l) {
  const std::size_t n = l.size();
  FaceLattice out;
  out.d = l.d + 1;
  out.dims.resize(2 * n);
  out.above.assign(2 * n, Bits(2 * n));
  // ids: F -> F, cone(F) -> n + F.
  for (std::size_t f = 0; f < n; ++f) {
    out.dims[f] = l.dims[f];
    out.dims[n + f] = l.dims[f] + 1;
    for (std::size_t g = 0; g < n; ++g) {
      if (!l.leq(f, g)) continue;
      out.above[f].set(g);
      out.above[f].set(n + g);      // F <= cone(G) iff F <= G
      out.above[n + f].set(n + g);  // cone monotone
    }
  }
  return out;
}

FaceLattice product(const FaceLattice& a, const FaceLattice& b) {
  std::vector<std::size_t> fa, fb;  // nonempty faces
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.dims[i] >= 0) fa.push_back(i);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.dims[i] >= 0) fb.push_back(i);
  const std::size_t n = fa.size() * fb.size() + 1;
  FaceLattice out;
  out.d = a.d + b.d;
  out.dims.resize(n);
  out.above.assign(n, Bits(n));
  out.dims[0] = -1;
  for (std::size_t j = 0; j < n; ++j) out.above[0].set(j);  // empty face below all
  auto id = [&](std::size_t i, std::size_t j) { return 1 + i * fb.size() + j; };
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j)
      out.dims[id(i, j)] = a.dims[fa[i]] + b.dims[fb[j]];
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j) {
      auto& row = out.above[id(i, j)];
      for (std::size_t i2 = 0; i2 < fa.size(); ++i2) {
        if (!a.leq(fa[i], fa[i2])) continue;
        for (std::size_t j2 = 0; j2 < fb.size(); ++j2)
          if (b.leq(fb[j], fb[j2])) row.set(id(i2, j2));
      }
    }
  return out;
}

FaceLattice prism(const FaceLattice& l) { return product(l, segment_lattice()); }

FaceLattice lattice_from_incidence(const FacetDescription& fd, int d) {
  const std::size_t nv = fd.nvertices;
  const std::size_t nf = fd.facets.size();
  if (nv == 0 || nv > 64) throw std::invalid_argument("lattice_from_incidence: vertex count");

  std::vector<Bits> vert_facets(nv, Bits(nf));
  std::vector<std::uint64_t> facet_verts(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    facet_verts[f] = fd.facets[f].incident;
    for (std::size_t v = 0; v < nv; ++v)
      if ((facet_verts[f] >> v) & 1) vert_facets[v].set(f);
  }
  const std::uint64_t all_verts = (nv == 64) ? ~0ULL : ((1ULL << nv) - 1);
  auto verts_of = [&](const Bits& fs) {
    std::uint64_t v = all_verts;
    for (std::size_t f = fs.find_first(); f != Bits::npos; f = fs.find_next(f))
      v &= facet_verts[f];
    return v;
  };

  // Closure BFS over (vertex set, facet set) pairs, starting from vertices.
  std::vector<std::uint64_t> face_verts;
  std::vector<Bits> face_facets;
  std::unordered_map<std::uint64_t, std::size_t> index;
  auto add_face = [&](std::uint64_t vs, Bits fs) {
    auto [it, fresh] = index.try_emplace(vs, face_verts.size());
    if (fresh) {
      face_verts.push_back(vs);
      face_facets.push_back(std::move(fs));
    }
    return it->second;
  };
  add_face(0, Bits(nf).set());                 // empty face
  add_face(all_verts, Bits(nf));               // whole polytope
  for (std::size_t v = 0; v < nv; ++v) {
    std::uint64_t vs = verts_of(vert_facets[v]);
    add_face(vs, vert_facets[v]);
  }
  for (std::size_t head = 0; head < face_verts.size(); ++head) {
    std::uint64_t vs = face_verts[head];
    if (vs == 0 || vs == all_verts) continue;
    Bits fs = face_facets[head];
    for (std::size_t v = 0; v < nv; ++v) {
      if ((vs >> v) & 1) continue;
      Bits fs2 = fs & vert_facets[v];
      std::uint64_t vs2 = verts_of(fs2);  // evaluate before fs2 is moved from
      add_face(vs2, std::move(fs2));
    }
  }

  const std::size_t n = face_verts.size();
  FaceLattice out;
  out.d = d;
  out.dims.assign(n, -2);
  out.above.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((face_verts[i] & ~face_verts[j]) == 0) out.above[i].set(j);

  // dim = longest chain from the empty face, filled in popcount order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::popcount(face_verts[x]) < std::popcount(face_verts[y]);
  });
  for (std::size_t i : order) {
    int best = -2;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && out.leq(j, i)) best = std::max(best, out.dims[j]);
    out.dims[i] = (face_verts[i] == 0) ? -1 : best + 1;
  }
  if (out.dims[out.top()] != d || face_verts[index[all_verts]] != all_verts)
    throw std::logic_error("face lattice: top dimension mismatch (hull bug?)");

  // Gradedness: every proper face has a subface one dim lower and a superface
  // one dim higher, and no cover relation skips a level.
  std::vector<Bits> below(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = out.above[i].find_first(); j != Bits::npos;
         j = out.above[i].find_next(j))
      below[j].set(i);
  std::vector<Bits> level_mask(d + 2, Bits(n));
  for (std::size_t i = 0; i < n; ++i) level_mask[out.dims[i] + 1].set(i);
  for (std::size_t i = 0; i < n; ++i) {
    int k = out.dims[i];
    if (k >= 0 && !(below[i] & level_mask[k]).any())
      throw std::logic_error("face lattice not graded: missing lower cover");
    if (k < d && !(out.above[i] & level_mask[k + 2]).any())
      throw std::logic_error("face lattice not graded: missing upper cover");
    for (std::size_t j = out.above[i].find_first(); j != Bits::npos;
         j = out.above[i].find_next(j)) {
      if (j == i || out.dims[j] <= k + 1) continue;
      Bits between = out.above[i] & below[j];
      if (between.count() < 3)  // i, j and at least one strictly between
        throw std::logic_error("face lattice not graded: cover skips a level");
    }
  }

  // Euler relation on proper faces.
  long long euler = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (out.dims[i] >= 0 && out.dims[i] < d)
      euler += (out.dims[i] % 2 == 0) ? 1 : -1;
  if (euler != 1 - ((d % 2 == 0) ? 1 : -1))
    throw std::logic_error("face lattice: Euler relation violated");
  return out;
}

FlagVector flag_vector(const FaceLattice& l) {
  const int d = l.d;
  FlagVector f;
  f.d = d;
  f.counts.assign(1ULL << d, 0);
  std::vector<std::vector<std::size_t>> levels(d);
  for (int k = 0; k < d; ++k) levels[k] = l.level(k);
  for (std::uint64_t s = 0; s < (1ULL << d); ++s) {
    if (s == 0) {
      f.counts[0] = 1;
      continue;
    }
    std::vector<int> dims_in_s;
    for (int k = 0; k < d; ++k)
      if ((s >> k) & 1) dims_in_s.push_back(k);
    const auto& first = levels[dims_in_s[0]];
    std::vector<long long> v(first.size(), 1);
    std::vector<std::size_t> cur = first;
    for (std::size_t step = 1; step < dims_in_s.size(); ++step) {
      const auto& nxt = levels[dims_in_s[step]];
      std::vector<long long> nv(nxt.size(), 0);
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (v[i] == 0) continue;
        const Bits& up = l.above[cur[i]];
        for (std::size_t j = 0; j < nxt.size(); ++j)
          if (up.test(nxt[j])) nv[j] += v[i];
      }
      v = std::move(nv);
      cur = nxt;
    }
    f.counts[s] = std::accumulate(v.begin(), v.end(), 0LL);
  }
  return f;
}

FlagVector polar_flag(const FlagVector& f) {
  FlagVector out;
  out.d = f.d;
  out.counts.assign(f.counts.size(), 0);
  for (std::uint64_t s = 0; s < f.counts.size(); ++s) {
    std::uint64_t rs = 0;
    for (int i = 0; i < f.d; ++i)
      if ((s >> i) & 1) rs |= (1ULL << (f.d - 1 - i));
    out.counts[rs] = f.counts[s];
  }
  return out;
}

std::string flag_str(const FlagVector& f) {
  std::ostringstream os;
  os << "d=" << f.d << ";";
  for (std::size_t i = 0; i < f.counts.size(); ++i)
    os << (i ? "," : "") << f.counts[i];
  return os.str();
}

FlagVector flag_parse(const std::string& s) {
  if (s.rfind("d=", 0) != 0) throw std::runtime_error("flag vector: missing d= prefix");
  auto semi = s.find(';');
  if (semi == std::string::npos) throw std::runtime_error("flag vector: missing ';'");
  FlagVector f;
  f.d = std::stoi(s.substr(2, semi - 2));
  if (f.d < 0 || f.d > 20) throw std::runtime_error("flag vector: bad dimension");
  std::istringstream body(s.substr(semi + 1));
  std::string tok;
  while (std::getline(body, tok, ',')) f.counts.push_back(std::stoll(tok));
  if (f.counts.size() != (1ULL << f.d))
    throw std::runtime_error("flag vector: wrong component count");
  return f;
}

}  // namespace gv
