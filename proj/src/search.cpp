#include "gv/search.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace gv {

bool EffectiveFamily::is_member(std::uint32_t set_mask) const {
  return std::binary_search(members.begin(), members.end(), set_mask);
}

EffectiveFamily effective_sets(const std::vector<CorpusEntry>& entries,
                               unsigned threads) {
  if (entries.empty())
    throw std::invalid_argument("effective_sets: empty corpus (effectivity needs test polytopes)");
  const int d = entries[0].d;
  for (const auto& e : entries)
    if (e.d != d) throw std::invalid_argument("effective_sets: mixed dimensions");
  const std::size_t nw = words(d).size();

  // Deduplicate CD vectors; keep one witness entry per distinct vector.
  std::map<std::vector<Rat>, std::size_t> distinct;
  for (std::size_t i = 0; i < entries.size(); ++i)
    distinct.try_emplace(entries[i].cd.coeffs, i);
  std::vector<const std::vector<Rat>*> vecs;
  std::vector<std::size_t> witness_of;
  for (const auto& [v, idx] : distinct) {
    vecs.push_back(&v);
    witness_of.push_back(idx);
  }

  if (threads == 0) {
    if (const char* env = std::getenv("GVLAB_THREADS")) threads = std::atoi(env);
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
  }

  const std::uint32_t nsets = 1u << nw;
  std::vector<char> member(nsets, 0);
  std::vector<std::size_t> min_at(nsets, 0);
  std::vector<Rat> min_val(nsets);
  auto sweep = [&](unsigned t) {
    for (std::uint32_t s = t; s < nsets; s += threads) {
      Rat best;
      std::size_t best_at = 0;
      for (std::size_t v = 0; v < vecs.size(); ++v) {
        Rat acc = 0;
        std::uint32_t bits = s;
        while (bits) {
          acc += (*vecs[v])[std::countr_zero(bits)];
          bits &= bits - 1;
        }
        if (v == 0 || acc < best) {
          best = std::move(acc);
          best_at = v;
        }
      }
      member[s] = (best >= 0);
      min_at[s] = best_at;
      min_val[s] = std::move(best);
    }
  };
  if (threads <= 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(sweep, t);
    for (auto& th : pool) th.join();
  }

  EffectiveFamily fam;
  fam.d = d;
  fam.corpus_size = entries.size();
  fam.distinct_cd = vecs.size();
  for (std::uint32_t s = 0; s < nsets; ++s) {
    if (member[s]) fam.members.push_back(s);
    else fam.excluded.push_back({s, witness_of[min_at[s]], min_val[s]});
  }
  return fam;
}

std::vector<std::uint32_t> extremal_subsets(const EffectiveFamily& fam) {
  const std::size_t nw = words(fam.d).size();
  std::vector<std::uint32_t> nonempty;
  for (std::uint32_t s : fam.members)
    if (s != 0) nonempty.push_back(s);
  std::vector<std::uint32_t> out;
  for (std::uint32_t s : nonempty) {
    QMatrix a(nw, nonempty.size() - 1);
    std::vector<Rat> b(nw);
    std::size_t col = 0;
    for (std::uint32_t t : nonempty) {
      if (t == s) continue;
      for (std::size_t r = 0; r < nw; ++r) a.at(r, col) = (t >> r) & 1;
      ++col;
    }
    for (std::size_t r = 0; r < nw; ++r) b[r] = (s >> r) & 1;
    if (!lp_nonneg_feasible(a, b).feasible) out.push_back(s);
  }
  return out;
}

const char* set_class_name(SetClass c) {
  switch (c) {
    case SetClass::order_zero: return "order-zero";
    case SetClass::higher_order: return "higher-order";
    case SetClass::residual: return "residual";
  }
  return "?";
}

SetClass classify(const WordSet& s) {
  const auto& ws = words(s.d);
  for (int i = 0; 2 * i <= s.d; ++i) {
    std::uint32_t oz = 0;
    for (std::size_t w = 0; w < ws.size(); ++w)
      if (ws[w].deg_D() == i) oz |= (1u << w);
    if (s.mask == oz) return SetClass::order_zero;
  }
  if (vanishes_on_simple(s)) return SetClass::higher_order;
  return SetClass::residual;
}

namespace {

// Paper-style layout: terms ordered by descending canonical position of the
// component's first word.
std::string render_terms(const std::vector<std::pair<Rat, const WordSet*>>& terms) {
  if (terms.empty()) return "0";
  std::vector<std::pair<Rat, const WordSet*>> sorted = terms;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::countr_zero(a.second->mask) > std::countr_zero(b.second->mask);
  });
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += " + ";
    if (sorted[i].first != 1) out += rat_str(sorted[i].first) + "*";
    out += "g_" + word_index(*sorted[i].second);
  }
  return out;
}

}  // namespace

std::string render_inequality(const WordSet& s, const std::vector<WordSet>& basis) {
  const std::size_t nw = words(s.d).size();
  QMatrix a(nw, basis.size());
  std::vector<Rat> b(nw);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (basis[c].d != s.d) throw std::invalid_argument("render_inequality: dimension mismatch");
    for (std::size_t r = 0; r < nw; ++r) a.at(r, c) = (basis[c].mask >> r) & 1;
  }
  for (std::size_t r = 0; r < nw; ++r) b[r] = (s.mask >> r) & 1;
  SolveResult sol = solve_linear(a, b);
  if (sol.status == SolveStatus::rank_deficient)
    throw std::invalid_argument("render_inequality: basis indicators are dependent");
  if (sol.status == SolveStatus::not_in_span)
    throw std::invalid_argument("render_inequality: word-set outside the basis span");
  std::vector<std::pair<Rat, const WordSet*>> lhs, rhs;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (sol.x[c] > 0) rhs.emplace_back(sol.x[c], &basis[c]);
    else if (sol.x[c] < 0) lhs.emplace_back(-sol.x[c], &basis[c]);
  }
  return render_terms(lhs) + " <= " + render_terms(rhs);
}

std::vector<Rat> g_vector(const CDVector& cd, const std::vector<WordSet>& components) {
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (components[i] == components[j])
        throw std::invalid_argument("g_vector: duplicate component");
  std::vector<Rat> g;
  for (const auto& s : components) g.push_back(lambda_sum(cd, s));
  return g;
}

SearchReport run_search(const std::vector<CorpusEntry>& entries,
                        const std::string& fingerprint, unsigned threads) {
  SearchReport rep;
  rep.family = effective_sets(entries, threads);
  rep.d = rep.family.d;
  rep.corpus_size = rep.family.corpus_size;
  rep.distinct_cd = rep.family.distinct_cd;
  rep.corpus_fingerprint = fingerprint;

  std::vector<std::uint32_t> extremal = extremal_subsets(rep.family);
  // Component basis for inequality rendering: the order-zero and
  // higher-order extremals, ordered by first-word position.
  std::vector<WordSet> components;
  for (std::uint32_t m : extremal) {
    WordSet s{rep.d, m};
    if (classify(s) != SetClass::residual) components.push_back(s);
  }
  std::sort(components.begin(), components.end(), [](const WordSet& a, const WordSet& b) {
    return std::countr_zero(a.mask) < std::countr_zero(b.mask);
  });
  const std::size_t nw = words(rep.d).size();
  bool basis_usable = components.size() == nw;
  if (basis_usable) {
    QMatrix ind(nw, nw);
    for (std::size_t c = 0; c < nw; ++c)
      for (std::size_t r = 0; r < nw; ++r) ind.at(r, c) = (components[c].mask >> r) & 1;
    basis_usable = mat_rank(ind) == nw;
  }

  for (std::uint32_t m : extremal) {
    SearchReport::ExtremalInfo info;
    info.set_mask = m;
    WordSet s{rep.d, m};
    info.cls = classify(s);
    info.index = word_index(s);
    if (basis_usable) info.inequality = render_inequality(s, components);
    rep.extremal.push_back(std::move(info));
  }
  return rep;
}

void write_report(std::ostream& out, const SearchReport& rep) {
  out << "gvlab search report (gvlab-report-v1), " << kToolVersion << "\n";
  out << "dimension: " << rep.d << "\n";
  out << "corpus: " << rep.corpus_size << " entries, " << rep.distinct_cd
      << " distinct CD vectors, fingerprint " << rep.corpus_fingerprint << "\n";
  out << "effective word-sets: " << rep.family.members.size() << " of "
      << (rep.family.members.size() + rep.family.excluded.size()) << "\n";
  out << "extremal word-sets: " << rep.extremal.size() << "\n";
  for (const auto& e : rep.extremal) {
    WordSet s{rep.d, e.set_mask};
    out << "  " << e.index << " [" << set_class_name(e.cls) << "] {";
    bool first = true;
    for (const auto& w : s.members()) {
      out << (first ? "" : ", ") << w.letters;
      first = false;
    }
    out << "}";
    if (!e.inequality.empty()) out << "  " << e.inequality;
    out << "\n";
  }

  nlohmann::json j;
  j["version"] = "gvlab-report-v1";
  j["tool"] = kToolVersion;
  j["d"] = rep.d;
  j["corpus"] = {{"size", rep.corpus_size},
                 {"distinct_cd", rep.distinct_cd},
                 {"fingerprint", rep.corpus_fingerprint}};
  auto set_words = [&](std::uint32_t mask) {
    std::vector<std::string> ws;
    for (const auto& w : WordSet{rep.d, mask}.members()) ws.push_back(w.letters);
    std::sort(ws.begin(), ws.end());
    return ws;
  };
  j["effective"] = nlohmann::json::array();
  for (std::uint32_t m : rep.family.members) j["effective"].push_back(set_words(m));
  j["extremal"] = nlohmann::json::array();
  for (const auto& e : rep.extremal) {
    nlohmann::json je;
    je["words"] = set_words(e.set_mask);
    je["class"] = set_class_name(e.cls);
    je["index"] = e.index;
    if (!e.inequality.empty()) je["inequality"] = e.inequality;
    j["extremal"].push_back(std::move(je));
  }
  j["excluded"] = nlohmann::json::array();
  for (const auto& ex : rep.family.excluded) {
    nlohmann::json je;
    je["words"] = set_words(ex.set_mask);
    je["witness_entry"] = ex.witness;
    je["lambda"] = rat_str(ex.lambda);
    j["excluded"].push_back(std::move(je));
  }
  out << "\n" << j.dump(2) << "\n";
}

std::string file_fingerprint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::uint64_t h = 1469598103934665603ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace gv
