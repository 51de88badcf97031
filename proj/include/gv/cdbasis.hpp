#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gv/lattice.hpp"
#include "gv/linalg.hpp"

namespace gv {

// A word over {C, D}; degree = #C + 2 #D.
struct Word {
  std::string letters;

  int deg_C() const;
  int deg_D() const;
  int deg() const { return deg_C() + 2 * deg_D(); }
  int order() const;  // number of "CD" substrings

  bool operator==(const Word&) const = default;
};

// All degree-d words, canonical order: deg_D ascending, then the D-position
// vector lexicographically ascending. Count is the Fibonacci number F_{d+1}
// (convention F_1 = F_2 = 1, so F_6 = 8).
const std::vector<Word>& words(int d);

long long fibonacci(int n);  // F_1 = F_2 = 1

// Index of w within words(w.deg()); throws if absent.
std::size_t word_position(const Word& w);

// Distributive expansion of each D into +IC - CC: 2^{deg_D} signed (C,I)
// words.
std::vector<std::pair<int, std::string>> expand_to_CI(const Word& w);

// Subset of words(d), encoded as a bitmask over canonical word indices.
struct WordSet {
  int d = 0;
  std::uint32_t mask = 0;

  std::vector<Word> members() const;
  bool operator==(const WordSet&) const = default;
};
WordSet word_set(int d, std::initializer_list<const char*> ws);

struct FlagBasis {
  int d = 0;
  std::vector<Word> basis_words;
  QMatrix matrix;  // 2^d rows (flag components, ascending bitmask) x F_{d+1}
  // Decomposition support: F_{d+1} independent rows chosen by elimination.
  std::vector<std::size_t> pivot_rows;
};

// Built once per dimension and cached; asserts rank F_{d+1}.
const FlagBasis& flag_basis(int d);

// Flag vector of w(point) for a (C,I) word, rightmost letter applied first.
FlagVector ci_flag(const std::string& ci_word);

// Flag vector of w(point) as a formal sum, via expand_to_CI.
FormalFlagSum word_flag(const Word& w);

struct CDVector {
  int d = 0;
  std::vector<Rat> coeffs;  // aligned with words(d)

  bool operator==(const CDVector&) const = default;
};

// Thrown when a vector fails the generalized Dehn-Sommerville membership
// (nonzero residual), as opposed to an internal solver failure.
struct NotInFlagSpan : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unique lambda with sum_w lambda_w f(w(point)) = f, verified over all 2^d
// components. Throws NotInFlagSpan when the residual is nonzero.
CDVector cd_decompose(const FlagVector& f);
CDVector cd_decompose(const FormalFlagSum& f);

Rat lambda_sum(const CDVector& cd, const WordSet& s);

// g_i = lambda over {w : deg_D w = i}, i = 0..floor(d/2).
std::vector<Rat> g_order_zero(const CDVector& cd);

// h_i = sum_{j<=i} g_j for 2i <= d, extended palindromically.
std::vector<Rat> h_vector(const std::vector<Rat>& g, int d);

// True iff s avoids every word of the form D^i C^{d-2i}; such lambda_s
// vanish on simple polytopes.
bool vanishes_on_simple(const WordSet& s);

// First member in canonical order with C -> 1, D -> 2.
std::string word_index(const WordSet& s);

// "d=<d>;" + "word:rational" pairs, canonical order, commas.
std::string cd_str(const CDVector& cd);
CDVector cd_parse(const std::string& s);

}  // namespace gv
