#include "gv/cdbasis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gv {

int Word::deg_C() const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), 'C'));
}
int Word::deg_D() const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), 'D'));
}
int Word::order() const {
  int n = 0;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == 'C' && letters[i + 1] == 'D') ++n;
  return n;
}

long long fibonacci(int n) {
  long long a = 1, b = 1;  // F_1, F_2
  if (n <= 2) return 1;
  for (int i = 3; i <= n; ++i) {
    long long c = a + b;
    a = b;
    b = c;
  }
  return b;
}

namespace {

std::vector<Word> make_words(int d) {
  std::vector<Word> out;
  for (int k = 0; 2 * k <= d; ++k) {
    const int len = d - k;  // k D's and d - 2k C's
    // D positions in lex ascending order.
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = i;
    for (;;) {
      Word w;
      w.letters.assign(len, 'C');
      for (int i = 0; i < k; ++i) w.letters[pos[i]] = 'D';
      out.push_back(std::move(w));
      if (k == 0) break;
      int i = k - 1;
      while (i >= 0 && pos[i] == len - k + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return out;
}

constexpr int kMaxDim = 10;

}  // namespace

const std::vector<Word>& words(int d) {
  if (d < 0 || d > kMaxDim) throw std::invalid_argument("words: dimension out of range");
  static const auto table = [] {
    std::vector<std::vector<Word>> t;
    for (int i = 0; i <= kMaxDim; ++i) t.push_back(make_words(i));
    return t;
  }();
  return table[d];
}

std::size_t word_position(const Word& w) {
  const auto& ws = words(w.deg());
  auto it = std::find(ws.begin(), ws.end(), w);
  if (it == ws.end()) throw std::invalid_argument("word_position: not a canonical word");
  return static_cast<std::size_t>(it - ws.begin());
}

std::vector<std::pair<int, std::string>> expand_to_CI(const Word& w) {
  std::vector<std::pair<int, std::string>> terms = {{1, ""}};
  for (char c : w.letters) {
    std::vector<std::pair<int, std::string>> next;
    for (const auto& [sign, prefix] : terms) {
      if (c == 'C') {
        next.emplace_back(sign, prefix + "C");
      } else {
        next.emplace_back(sign, prefix + "IC");
        next.emplace_back(-sign, prefix + "CC");
      }
    }
    terms = std::move(next);
  }
  return terms;
}

std::vector<Word> WordSet::members() const {
  const auto& ws = words(d);
  std::vector<Word> out;
  for (std::size_t i = 0; i < ws.size(); ++i)
    if ((mask >> i) & 1) out.push_back(ws[i]);
  return out;
}

WordSet word_set(int d, std::initializer_list<const char*> list) {
  WordSet s{d, 0};
  for (const char* w : list)
    s.mask |= (1u << word_position(Word{w}));
  return s;
}

FlagVector ci_flag(const std::string& ci_word) {
  static std::map<std::string, FlagVector> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ci_word);
    if (it != cache.end()) return it->second;
  }
  FaceLattice l = point_lattice();
  for (auto it = ci_word.rbegin(); it != ci_word.rend(); ++it) {
    if (*it == 'C') l = pyramid(l);
    else if (*it == 'I') l = prism(l);
    else throw std::invalid_argument("ci_flag: letters must be C or I");
  }
  FlagVector f = flag_vector(l);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(ci_word, f);
  return f;
}

FormalFlagSum word_flag(const Word& w) {
  FormalFlagSum total;
  total.d = w.deg();
  total.counts.assign(1ULL << total.d, 0);
  for (const auto& [sign, ci] : expand_to_CI(w)) {
    FormalFlagSum term(ci_flag(ci));
    term *= sign;
    total += term;
  }
  return total;
}

namespace {

FlagBasis make_basis(int d) {
  FlagBasis b;
  b.d = d;
  b.basis_words = words(d);
  const std::size_t nw = b.basis_words.size();
  const std::size_t rows = 1ULL << d;
  b.matrix = QMatrix(rows, nw);
  for (std::size_t c = 0; c < nw; ++c) {
    FormalFlagSum col = word_flag(b.basis_words[c]);
    for (std::size_t r = 0; r < rows; ++r)
      b.matrix.at(r, c) = static_cast<long>(col.counts[r]);
  }
  if (mat_rank(b.matrix) != nw)
    throw std::logic_error("flag basis rank is not the Fibonacci number (operator bug)");
  // Greedy independent row selection for the decomposition solve.
  std::vector<std::vector<Rat>> elim;
  for (std::size_t r = 0; r < rows && b.pivot_rows.size() < nw; ++r) {
    std::vector<Rat> v(nw);
    for (std::size_t c = 0; c < nw; ++c) v[c] = b.matrix.at(r, c);
    for (const auto& e : elim) {
      std::size_t lead = 0;
      while (lead < nw && e[lead] == 0) ++lead;
      if (lead < nw && v[lead] != 0) {
        Rat f = v[lead] / e[lead];
        for (std::size_t j = lead; j < nw; ++j) v[j] -= f * e[j];
      }
    }
    if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; })) continue;
    elim.push_back(std::move(v));
    std::sort(elim.begin(), elim.end(), [&](const auto& x, const auto& y) {
      std::size_t lx = 0, ly = 0;
      while (lx < nw && x[lx] == 0) ++lx;
      while (ly < nw && y[ly] == 0) ++ly;
      return lx < ly;
    });
    b.pivot_rows.push_back(r);
  }
  if (b.pivot_rows.size() != nw)
    throw std::logic_error("flag basis: pivot row selection failed");
  return b;
}

}  // namespace

const FlagBasis& flag_basis(int d) {
  if (d < 0 || d > kMaxDim) throw std::invalid_argument("flag_basis: dimension out of range");
  static std::vector<std::unique_ptr<FlagBasis>> cache(kMaxDim + 1);
  static std::vector<std::once_flag> flags(kMaxDim + 1);
  std::call_once(flags[d], [&] { cache[d] = std::make_unique<FlagBasis>(make_basis(d)); });
  return *cache[d];
}

namespace {

CDVector decompose(int d, const std::vector<long long>& counts) {
  const FlagBasis& b = flag_basis(d);
  const std::size_t nw = b.basis_words.size();
  QMatrix sq(nw, nw);
  std::vector<Rat> rhs(nw);
  for (std::size_t i = 0; i < nw; ++i) {
    for (std::size_t j = 0; j < nw; ++j) sq.at(i, j) = b.matrix.at(b.pivot_rows[i], j);
    rhs[i] = static_cast<long>(counts[b.pivot_rows[i]]);
  }
  SolveResult s = solve_linear(sq, rhs);
  if (s.status != SolveStatus::ok)
    throw std::logic_error("cd_decompose: pivot system singular (basis bug)");
  // Verify the full system, not just the pivot rows.
  for (std::size_t r = 0; r < counts.size(); ++r) {
    Rat acc = 0;
    for (std::size_t j = 0; j < nw; ++j) acc += b.matrix.at(r, j) * s.x[j];
    if (acc != Rat(static_cast<long>(counts[r])))
      throw NotInFlagSpan("vector fails the flag-span (Dehn-Sommerville) check");
  }
  CDVector cd;
  cd.d = d;
  cd.coeffs = std::move(s.x);
  return cd;
}

}  // namespace

CDVector cd_decompose(const FlagVector& f) { return decompose(f.d, f.counts); }
CDVector cd_decompose(const FormalFlagSum& f) { return decompose(f.d, f.counts); }

Rat lambda_sum(const CDVector& cd, const WordSet& s) {
  if (cd.d != s.d) throw std::invalid_argument("lambda_sum: dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < cd.coeffs.size(); ++i)
    if ((s.mask >> i) & 1) acc += cd.coeffs[i];
  return acc;
}

std::vector<Rat> g_order_zero(const CDVector& cd) {
  const auto& ws = words(cd.d);
  std::vector<Rat> g(cd.d / 2 + 1);
  for (std::size_t i = 0; i < ws.size(); ++i)
    g[ws[i].deg_D()] += cd.coeffs[i];
  return g;
}

std::vector<Rat> h_vector(const std::vector<Rat>& g, int d) {
  if (g.size() != static_cast<std::size_t>(d / 2 + 1))
    throw std::invalid_argument("h_vector: wrong g length");
  std::vector<Rat> h(d + 1);
  Rat acc = 0;
  for (int i = 0; 2 * i <= d; ++i) {
    acc += g[i];
    h[i] = acc;
  }
  for (int i = d / 2 + 1; i <= d; ++i) h[i] = h[d - i];
  return h;
}

bool vanishes_on_simple(const WordSet& s) {
  for (const Word& w : s.members()) {
    bool seen_c = false;
    bool sorted = true;  // all D's before all C's, i.e. D^i C^{d-2i}
    for (char c : w.letters) {
      if (c == 'C') seen_c = true;
      else if (seen_c) { sorted = false; break; }
    }
    if (sorted) return false;
  }
  return true;
}

std::string word_index(const WordSet& s) {
  if (s.mask == 0) throw std::invalid_argument("word_index: empty word-set");
  const auto& ws = words(s.d);
  for (std::size_t i = 0; i < ws.size(); ++i)
    if ((s.mask >> i) & 1) {
      std::string idx;
      for (char c : ws[i].letters) idx += (c == 'C') ? '1' : '2';
      return idx;
    }
  throw std::logic_error("word_index: mask out of range");
}

std::string cd_str(const CDVector& cd) {
  const auto& ws = words(cd.d);
  std::ostringstream os;
  os << "d=" << cd.d << ";";
  for (std::size_t i = 0; i < ws.size(); ++i)
    os << (i ? "," : "") << ws[i].letters << ":" << rat_str(cd.coeffs[i]);
  return os.str();
}

CDVector cd_parse(const std::string& s) {
  if (s.rfind("d=", 0) != 0) throw std::runtime_error("cd vector: missing d= prefix");
  auto semi = s.find(';');
  if (semi == std::string::npos) throw std::runtime_error("cd vector: missing ';'");
  CDVector cd;
  cd.d = std::stoi(s.substr(2, semi - 2));
  const auto& ws = words(cd.d);
  cd.coeffs.assign(ws.size(), Rat(0));
  std::istringstream body(s.substr(semi + 1));
  std::string tok;
  std::size_t idx = 0;
  while (std::getline(body, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::runtime_error("cd vector: missing ':'");
    if (idx >= ws.size() || tok.substr(0, colon) != ws[idx].letters)
      throw std::runtime_error("cd vector: word order mismatch");
    cd.coeffs[idx] = rat_parse(tok.substr(colon + 1));
    ++idx;
  }
  if (idx != ws.size()) throw std::runtime_error("cd vector: wrong entry count");
  return cd;
}

}  // namespace gv
