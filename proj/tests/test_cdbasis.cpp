#include <doctest.h>

#include <algorithm>

#include "gv/cdbasis.hpp"
#include "gv/d5.hpp"

using gv::Rat;
using gv::Word;

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

std::vector<std::string> letters_of(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.letters);
  return out;
}

}  // namespace

TEST_CASE("word counts are Fibonacci numbers") {
  const long long expect[] = {1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int d = 0; d <= 8; ++d) {
    CHECK(gv::fibonacci(d + 1) == expect[d]);
    CHECK(gv::words(d).size() == static_cast<std::size_t>(expect[d]));
  }
}

TEST_CASE("canonical word order") {
  CHECK(letters_of(gv::words(0)) == std::vector<std::string>{""});
  CHECK(letters_of(gv::words(2)) == std::vector<std::string>{"CC", "D"});
  CHECK(letters_of(gv::words(5)) ==
        std::vector<std::string>{"CCCCC", "DCCC", "CDCC", "CCDC", "CCCD", "DDC",
                                 "DCD", "CDD"});
  for (std::size_t i = 0; i < gv::words(5).size(); ++i)
    CHECK(gv::word_position(gv::words(5)[i]) == i);
}

TEST_CASE("word degree, order and expansion") {
  Word w{"DDC"};
  CHECK(w.deg_C() == 1);
  CHECK(w.deg_D() == 2);
  CHECK(w.deg() == 5);
  CHECK(w.order() == 0);
  CHECK(Word{"CDD"}.order() == 1);
  CHECK(Word{"CDCD"}.order() == 2);

  CHECK(gv::expand_to_CI(Word{"CCCCC"}) ==
        std::vector<std::pair<int, std::string>>{{1, "CCCCC"}});
  CHECK(gv::expand_to_CI(Word{"DC"}) ==
        std::vector<std::pair<int, std::string>>{{1, "ICC"}, {-1, "CCC"}});
  CHECK(gv::expand_to_CI(Word{"DD"}) ==
        std::vector<std::pair<int, std::string>>{
            {1, "ICIC"}, {-1, "ICCC"}, {-1, "CCIC"}, {1, "CCCC"}});
}

TEST_CASE("flag basis columns at d=2") {
  const gv::FlagBasis& b = gv::flag_basis(2);
  REQUIRE(b.basis_words.size() == 2);
  gv::FlagVector tri = gv::flag_vector(simplex_lattice(2));
  gv::FlagVector sq = gv::flag_vector(cube_lattice(2));
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(b.matrix.at(r, 0) == Rat(static_cast<long>(tri.counts[r])));
    CHECK(b.matrix.at(r, 1) == Rat(static_cast<long>(sq.counts[r] - tri.counts[r])));
  }
}

TEST_CASE("basis rank is the Fibonacci number") {
  for (int d = 0; d <= 6; ++d) {
    const gv::FlagBasis& b = gv::flag_basis(d);
    CHECK(b.matrix.cols == gv::words(d).size());
    CHECK(gv::mat_rank(b.matrix) == b.matrix.cols);
  }
}

TEST_CASE("cd_decompose of the 5-simplex is the unit on CCCCC") {
  gv::CDVector cd = gv::cd_decompose(gv::flag_vector(simplex_lattice(5)));
  for (std::size_t i = 0; i < cd.coeffs.size(); ++i)
    CHECK(cd.coeffs[i] == Rat(i == 0 ? 1 : 0));
}

TEST_CASE("cd_decompose of the 5-cube") {
  gv::CDVector cd = gv::cd_decompose(gv::flag_vector(cube_lattice(5)));
  // lambda = CCCCC + 4 DCCC + 5 DDC; independent oracle below.
  gv::CDVector expect = gv::cd_parse("d=5;CCCCC:1,DCCC:4,CDCC:0,CCDC:0,CCCD:0,DDC:5,DCD:0,CDD:0");
  CHECK(cd == expect);

  // Oracle: reconstruct the cube's flag vector from the claimed combination.
  gv::FormalFlagSum acc;
  acc.d = 5;
  acc.counts.assign(32, 0);
  for (std::size_t i = 0; i < cd.coeffs.size(); ++i) {
    REQUIRE(cd.coeffs[i].get_den() == 1);
    gv::FormalFlagSum t = gv::word_flag(gv::words(5)[i]);
    t *= cd.coeffs[i].get_num().get_si();
    acc += t;
  }
  CHECK(acc.counts == gv::flag_vector(cube_lattice(5)).counts);

  CHECK(gv::g_order_zero(cd) == std::vector<Rat>{1, 4, 5});
  CHECK(gv::h_vector(gv::g_order_zero(cd), 5) ==
        std::vector<Rat>{1, 5, 10, 10, 5, 1});
}

TEST_CASE("pyramid preserves g; the h rule repeats the middle term") {
  gv::CDVector cube_cd = gv::cd_decompose(gv::flag_vector(cube_lattice(5)));
  gv::CDVector pyr_cd = gv::cd_decompose(gv::flag_vector(gv::pyramid(cube_lattice(5))));
  CHECK(gv::g_order_zero(pyr_cd) == std::vector<Rat>{1, 4, 5, 0});
  CHECK(gv::g_order_zero(cube_cd) == std::vector<Rat>{1, 4, 5});
  // h(C X) = (1,5,10,10,10,5,1): middle term of h(X) repeated
  CHECK(gv::h_vector(gv::g_order_zero(pyr_cd), 6) ==
        std::vector<Rat>{1, 5, 10, 10, 10, 5, 1});
}

TEST_CASE("g on basis words is the unit pattern") {
  for (int d = 2; d <= 5; ++d)
    for (const Word& w : gv::words(d)) {
      gv::CDVector cd = gv::cd_decompose(gv::word_flag(w));
      std::vector<Rat> g = gv::g_order_zero(cd);
      for (int i = 0; 2 * i <= d; ++i) CHECK(g[i] == Rat(w.deg_D() == i ? 1 : 0));
    }
}

TEST_CASE("simple polytopes decompose on sorted words with nonnegative integers") {
  for (int d = 2; d <= 5; ++d) {
    gv::CDVector cd = gv::cd_decompose(gv::flag_vector(cube_lattice(d)));
    for (std::size_t i = 0; i < cd.coeffs.size(); ++i) {
      const std::string& w = gv::words(d)[i].letters;
      // D^i C^{d-2i} means all D's precede all C's
      bool sorted = w.find("CD") == std::string::npos;
      if (!sorted) CHECK(cd.coeffs[i] == 0);
      CHECK(cd.coeffs[i] >= 0);
      CHECK(cd.coeffs[i].get_den() == 1);
    }
  }
}

TEST_CASE("reference lambda sums of the exceptional d=5 vector") {
  gv::CDVector cd = gv::d5::exceptional_cd();
  CHECK(gv::lambda_sum(cd, gv::WordSet{5, 0}) == 0);
  CHECK(gv::lambda_sum(cd, gv::word_set(5, {"CDCC", "CCDC", "CCCD"})) == Rat(-2));
  CHECK(gv::lambda_sum(cd, gv::d5::s221()) == Rat(15));
  CHECK(gv::lambda_sum(cd, gv::d5::s2111()) == Rat(18));
  CHECK(gv::g_order_zero(cd) == std::vector<Rat>{1, 18, 15});
}

TEST_CASE("vanishes_on_simple and word_index") {
  CHECK_FALSE(gv::vanishes_on_simple(gv::d5::s11111()));
  CHECK(gv::vanishes_on_simple(gv::d5::s1211()));
  CHECK_FALSE(gv::vanishes_on_simple(gv::d5::s221()));

  CHECK(gv::word_index(gv::d5::s221()) == "221");
  CHECK(gv::word_index(gv::d5::s1211()) == "1211");
  CHECK(gv::word_index(gv::d5::s11111()) == "11111");
  CHECK_THROWS(gv::word_index(gv::WordSet{5, 0}));
}

TEST_CASE("cd_decompose rejects vectors outside the flag span") {
  gv::FlagVector f = gv::flag_vector(cube_lattice(4));
  f.counts[5] += 1;  // break a Dehn-Sommerville relation
  CHECK_THROWS_AS(gv::cd_decompose(f), gv::NotInFlagSpan);
}

TEST_CASE("cd serialization round trip") {
  gv::CDVector cd = gv::d5::exceptional_cd();
  CHECK(gv::cd_str(cd) ==
        "d=5;CCCCC:1,DCCC:20,CDCC:-66,CCDC:56,CCCD:8,DDC:-5,DCD:0,CDD:20");
  CHECK(gv::cd_parse(gv::cd_str(cd)) == cd);
  CHECK_THROWS(gv::cd_parse("d=5;CCCCC:1"));
  CHECK_THROWS(gv::cd_parse("d=5;DCCC:1,CCCCC:1"));
}
