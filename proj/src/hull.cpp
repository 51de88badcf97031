#include "gv/hull.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gv {
namespace {

// Rank and pivot-row/column bookkeeping for small dense systems.
std::size_t rank_of(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return mat_rank(std::move(m));
}

// Greedily selects row indices whose span has full rank `target`.
std::vector<std::size_t> independent_rows(const std::vector<std::vector<Rat>>& rows,
                                          std::size_t cols, std::size_t target) {
  std::vector<std::vector<Rat>> elim;  // reduced copies of the kept rows
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < rows.size() && kept.size() < target; ++i) {
    std::vector<Rat> r = rows[i];
    for (const auto& e : elim) {
      std::size_t lead = 0;
      while (lead < cols && e[lead] == 0) ++lead;
      if (lead < cols && r[lead] != 0) {
        Rat f = r[lead] / e[lead];
        for (std::size_t j = lead; j < cols; ++j) r[j] -= f * e[j];
      }
    }
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j)
      if (r[j] != 0) { nonzero = true; break; }
    if (!nonzero) continue;
    // Re-reduce existing rows is unnecessary: keep echelon by leading entry.
    elim.push_back(std::move(r));
    kept.push_back(i);
    std::sort(elim.begin(), elim.end(), [&](const auto& a, const auto& b) {
      std::size_t la = 0, lb = 0;
      while (la < cols && a[la] == 0) ++la;
      while (lb < cols && b[lb] == 0) ++lb;
      return la < lb;
    });
  }
  return kept;
}

// Scales a rational vector to a primitive integer vector (gcd 1), preserving
// direction.
void make_primitive(std::vector<Rat>& v) {
  Int lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Int g = 0;
  for (auto& x : v) {
    x *= lcm;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (g > 1)
    for (auto& x : v) x /= g;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::size_t affine_dim(const Polytope& p) {
  if (p.points.empty()) throw std::invalid_argument("affine_dim: no points");
  const std::size_t n = p.points.size();
  const std::size_t d = p.ambient_dim();
  std::vector<std::vector<Rat>> diffs;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Rat> r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = p.points[i][j] - p.points[0][j];
    diffs.push_back(std::move(r));
  }
  return rank_of(diffs, d);
}

Polytope vertex_reduce(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<std::vector<Rat>> pts = p.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope out;
  out.label = p.label;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // p_i is extreme iff it is not a convex combination of the others.
    QMatrix a(d + 1, pts.size() - 1);
    std::vector<Rat> b(d + 1);
    std::size_t col = 0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < d; ++k) a.at(k, col) = pts[j][k];
      a.at(d, col) = 1;
      ++col;
    }
    for (std::size_t k = 0; k < d; ++k) b[k] = pts[i][k];
    b[d] = 1;
    if (!lp_nonneg_feasible(a, b).feasible) out.points.push_back(pts[i]);
  }
  // Preserve original point order among the survivors.
  std::vector<std::vector<Rat>> ordered;
  for (const auto& q : p.points)
    if (std::binary_search(pts.begin(), pts.end(), q) &&
        std::find(out.points.begin(), out.points.end(), q) != out.points.end() &&
        std::find(ordered.begin(), ordered.end(), q) == ordered.end())
      ordered.push_back(q);
  out.points = std::move(ordered);
  return out;
}

Polytope reduce_to_full_dim(const Polytope& p) {
  if (p.points.empty()) throw std::invalid_argument("reduce_to_full_dim: no points");
  const std::size_t n = p.points.size();
  const std::size_t d = p.ambient_dim();
  std::vector<std::vector<Rat>> diffs(n > 0 ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i) {
    diffs[i - 1].resize(d);
    for (std::size_t j = 0; j < d; ++j)
      diffs[i - 1][j] = p.points[i][j] - p.points[0][j];
  }
  const std::size_t k = rank_of(diffs, d);
  Polytope out;
  out.label = p.label;
  if (k == 0) {
    out.points.assign(n, {});
    // Distinct-point invariant: a zero-dimensional hull is a single point.
    out.points.resize(1);
    return out;
  }
  std::vector<std::size_t> basis_idx = independent_rows(diffs, d, k);
  // D: d x k, columns = chosen difference vectors.
  QMatrix dd(d, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < d; ++r) dd.at(r, c) = diffs[basis_idx[c]][r];
  for (const auto& pt : p.points) {
    std::vector<Rat> rhs(d);
    for (std::size_t r = 0; r < d; ++r) rhs[r] = pt[r] - p.points[0][r];
    SolveResult s = solve_linear(dd, rhs);
    if (s.status != SolveStatus::ok)
      throw std::logic_error("reduce_to_full_dim: point outside its own affine hull");
    out.points.push_back(std::move(s.x));
  }
  return out;
}

FacetDescription facet_enum(const Polytope& p) {
  const std::size_t n = p.points.size();
  const std::size_t d = p.ambient_dim();
  if (n > 64) throw std::invalid_argument("facet_enum: more than 64 vertices");
  if (d == 0 || affine_dim(p) != d)
    throw std::invalid_argument("facet_enum: input is not full-dimensional");

  // Work in the polar cone C* = { y in Q^{d+1} : y0 + y.(p_i - c) >= 0 },
  // with c the centroid so that 0 is interior. Extreme rays of C* are in
  // bijection with the facets of P.
  std::vector<Rat> c(d);
  for (const auto& pt : p.points)
    for (std::size_t j = 0; j < d; ++j) c[j] += pt[j];
  for (std::size_t j = 0; j < d; ++j) c[j] /= Rat(static_cast<long>(n));

  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(d + 1));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][0] = 1;
    for (std::size_t j = 0; j < d; ++j) rows[i][j + 1] = p.points[i][j] - c[j];
  }

  std::vector<std::size_t> init = independent_rows(rows, d + 1, d + 1);
  if (init.size() != d + 1)
    throw std::logic_error("facet_enum: initial basis not found");

  // Initial rays: columns of B^{-1} for the chosen row submatrix B.
  QMatrix bmat(d + 1, d + 1);
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= d; ++j) bmat.at(i, j) = rows[init[i]][j];
  std::vector<std::vector<Rat>> rays;
  for (std::size_t col = 0; col <= d; ++col) {
    std::vector<Rat> e(d + 1);
    e[col] = 1;
    SolveResult s = solve_linear(bmat, e);
    if (s.status != SolveStatus::ok)
      throw std::logic_error("facet_enum: singular initial basis");
    make_primitive(s.x);
    rays.push_back(std::move(s.x));
  }

  std::uint64_t processed = 0;
  for (std::size_t i : init) processed |= (1ULL << i);
  auto zero_set = [&](const std::vector<Rat>& ray, std::uint64_t within) {
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((within >> i) & 1)
        if (dot(rows[i], ray) == 0) z |= (1ULL << i);
    return z;
  };
  std::vector<std::uint64_t> zsets;
  for (const auto& r : rays) zsets.push_back(zero_set(r, processed));

  for (std::size_t k = 0; k < n; ++k) {
    if ((processed >> k) & 1) continue;
    std::vector<Rat> vals(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) vals[r] = dot(rows[k], rays[r]);

    std::vector<std::vector<Rat>> next_rays;
    std::vector<std::uint64_t> next_z;
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (vals[r] > 0) pos.push_back(r);
      else if (vals[r] < 0) neg.push_back(r);
      if (vals[r] >= 0) {
        next_rays.push_back(rays[r]);
        next_z.push_back(zsets[r] | (vals[r] == 0 ? (1ULL << k) : 0));
      }
    }
    for (std::size_t ip : pos) {
      for (std::size_t im : neg) {
        std::uint64_t common = zsets[ip] & zsets[im];
        if (static_cast<std::size_t>(std::popcount(common)) + 2 < d + 1) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size(); ++t) {
          if (t == ip || t == im) continue;
          if ((common & ~zsets[t]) == 0) { adjacent = false; break; }
        }
        if (!adjacent) continue;
        std::vector<Rat> nr(d + 1);
        for (std::size_t j = 0; j <= d; ++j)
          nr[j] = vals[ip] * rays[im][j] - vals[im] * rays[ip][j];
        make_primitive(nr);
        std::uint64_t z = zero_set(nr, processed | (1ULL << k));
        next_rays.push_back(std::move(nr));
        next_z.push_back(z);
      }
    }
    rays = std::move(next_rays);
    zsets = std::move(next_z);
    processed |= (1ULL << k);
  }

  FacetDescription fd;
  fd.nvertices = n;
  fd.dim = d;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (rays[r][0] <= 0)
      throw std::logic_error("facet_enum: ray with nonpositive height (unbounded?)");
    FacetDescription::Facet f;
    f.normal.resize(d);
    for (std::size_t j = 0; j < d; ++j) f.normal[j] = -rays[r][j + 1];
    f.offset = rays[r][0] + dot(f.normal, c);
    std::vector<Rat> joint = f.normal;
    joint.push_back(f.offset);
    make_primitive(joint);
    f.offset = joint.back();
    joint.pop_back();
    f.normal = std::move(joint);
    f.incident = zsets[r];
    if (static_cast<std::size_t>(std::popcount(f.incident)) < d)
      throw std::logic_error("facet_enum: facet with too few incident vertices");
    fd.facets.push_back(std::move(f));
  }
  // Double-description validity: every vertex satisfies every inequality.
  for (const auto& f : fd.facets)
    for (std::size_t i = 0; i < n; ++i) {
      Rat v = dot(f.normal, p.points[i]);
      if (v > f.offset) throw std::logic_error("facet_enum: inequality violated");
      if ((v == f.offset) != bool((f.incident >> i) & 1))
        throw std::logic_error("facet_enum: incidence mismatch");
    }
  return fd;
}

Polytope read_vertex_file(std::istream& in) {
  Polytope p;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<Rat> pt;
    std::string tok;
    while (ls >> tok) pt.push_back(rat_parse(tok));
    if (!p.points.empty() && pt.size() != p.points[0].size())
      throw std::runtime_error("vertex file line " + std::to_string(lineno) +
                               ": arity mismatch");
    p.points.push_back(std::move(pt));
  }
  if (p.points.empty()) throw std::runtime_error("vertex file: no points");
  return p;
}

Polytope read_vertex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_vertex_file(in);
}

void write_vertex_file(std::ostream& out, const Polytope& p) {
  if (!p.label.empty()) out << "# " << p.label << "\n";
  for (const auto& pt : p.points) {
    for (std::size_t j = 0; j < pt.size(); ++j)
      out << (j ? " " : "") << rat_str(pt[j]);
    out << "\n";
  }
}

}  // namespace gv
