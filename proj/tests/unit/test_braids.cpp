#include <doctest.h>

#include <gmpxx.h>

#include <fstream>
#include <random>
#include <sstream>

#include "meridian/braids/braid.hpp"
#include "meridian/braids/monodromy.hpp"
#include "meridian/error.hpp"
#include "meridian/fpgroups/word.hpp"

using namespace meridian;

namespace {

// Unreduced Burau matrices at a fixed rational t, built independently of
// the free-group action.
using Mat = std::vector<std::vector<mpq_class>>;

Mat identity(int n) {
  Mat m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat burau(const BraidWord& b, const mpq_class& t) {
  Mat m = identity(b.strands());
  for (int l : b.letters()) {
    Mat s = identity(b.strands());
    const auto j = static_cast<std::size_t>(std::abs(l) - 1);
    if (l > 0) {
      s[j][j] = 1 - t; s[j][j + 1] = t; s[j + 1][j] = 1; s[j + 1][j + 1] = 0;
    } else {
      s[j][j] = 0; s[j][j + 1] = 1; s[j + 1][j] = 1 / t; s[j + 1][j + 1] = 1 - 1 / t;
    }
    m = mul(m, s);
  }
  return m;
}

bool burau_equal(const BraidWord& a, const BraidWord& b) {
  for (const mpq_class t : {mpq_class(2), mpq_class(-3), mpq_class(5, 7)})
    if (burau(a, t) != burau(b, t)) return false;
  return true;
}

BraidWord s(int j, long e = 1) { return BraidWord::generator(3, j, e); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("artin action examples") {
  const BraidWord s1 = BraidWord::generator(2, 1);
  CHECK(artin_action(s1, Word{1}) == Word{2});
  CHECK(artin_action(s1, Word{2}) == Word{2, 1, -2});
  CHECK(artin_action(s(2, 5), Word{3, 2, 1}) == Word{3, 2, 1});
  CHECK_THROWS_AS(artin_action(s1, Word{3}), MalformedWord);
}

TEST_CASE("artin action is an automorphism respecting the braid relations") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> gen(1, 3), sign(0, 1), len(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> letters;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) letters.push_back((sign(rng) ? 1 : -1) * gen(rng));
    const BraidWord b(4, letters);
    for (int i = 1; i <= 4; ++i)
      CHECK(artin_action(b * b.inverse(), Word{i}) == Word{i});
    CHECK(artin_action(b, Word{4, 3, 2, 1}) == Word{4, 3, 2, 1});
  }
  for (int j = 1; j <= 2; ++j) {
    const BraidWord a(4, {j, j + 1, j}), c(4, {j + 1, j, j + 1});
    CHECK(braid_equal(a, c));
  }
  CHECK(braid_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
}

TEST_CASE("braid_equal examples") {
  CHECK(braid_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK_FALSE(braid_equal(s(1), s(2)));
  const BraidWord lhs = braid_conjugate(BraidWord(3, {2, 2, -1, 2, 1}), s(2, 5));
  const BraidWord rhs = braid_conjugate(s(2, 2), s(1, 5));
  CHECK(braid_equal(lhs, rhs));
  CHECK(burau_equal(lhs, rhs));
  CHECK_THROWS_AS(braid_equal(s(1), BraidWord::generator(4, 1)), InvalidArgument);
}

TEST_CASE("braid_equal agrees with the Burau oracle on random pairs") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> gen(1, 2), sign(0, 1), len(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    auto rand_braid = [&] {
      std::vector<int> l;
      const int n = len(rng);
      for (int i = 0; i < n; ++i) l.push_back((sign(rng) ? 1 : -1) * gen(rng));
      return BraidWord(3, l);
    };
    const BraidWord a = rand_braid(), b = rand_braid();
    // Burau is faithful on B3, so the two tests must agree.
    CHECK(braid_equal(a, b) == burau_equal(a, b));
    CHECK(braid_equal(a * b, b * a) == burau_equal(a * b, b * a));
  }
}

TEST_CASE("braid parser and printer") {
  CHECK(parse_braid("s2^2*s1^-1*s2", 3) == BraidWord(3, {2, 2, -1, 2}));
  CHECK(parse_braid("(s1*s2)^-1", 3) == BraidWord(3, {-2, -1}));
  CHECK(parse_braid("1", 3).empty());
  CHECK(format_braid(BraidWord(3, {2, 2, -1, 2})) == "s2^2*s1^-1*s2");
  CHECK(format_braid(BraidWord(3)) == "1");
  CHECK_THROWS_AS(parse_braid("s3", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("s1*", 3), ParseError);
  CHECK_THROWS_AS(BraidWord(3, {0}), InvalidArgument);
}

TEST_CASE("path composition on the bundled table") {
  const auto file = parse_monodromy(slurp(MERIDIAN_PRESET_DIR "/degtyarev-table1.mono"));
  REQUIRE(file.data.braids.size() == 3);
  const BraidWord& mu_plus = file.data.braids[0].second;
  const BraidWord& mu_0 = file.data.braids[1].second;
  const BraidWord& mu_minus = file.data.braids[2].second;
  CHECK(braid_equal(mu_plus, s(2, 5)));
  CHECK(braid_equal(mu_0, braid_conjugate(BraidWord(3, {2, 2, -1, 2}), s(1))));
  CHECK(burau_equal(mu_0, braid_conjugate(BraidWord(3, {2, 2, -1, 2}), s(1))));
  // Literal composition of the table along the third loop.
  CHECK(braid_equal(mu_minus, braid_conjugate(BraidWord(3, {2, 2, -1, 2}), s(2, 5))));

  // The reversed product does not reproduce the second loop.
  std::vector<PathStep> loop0 = file.loops[1].second;
  std::reverse(loop0.begin(), loop0.end());
  CHECK_FALSE(braid_equal(compose_path_monodromy(file.paths, loop0), mu_0));

  CHECK(file.data.infinity_meridian == Word{3, 2, 1, 2, 1}.inverse());
  CHECK_THROWS_AS(compose_path_monodromy(file.paths, {{"δ", false}}), InvalidArgument);
}

TEST_CASE("monodromy file errors") {
  CHECK_THROWS_AS(parse_monodromy("path a: s1;"), ParseError);
  CHECK_THROWS_AS(parse_monodromy("strands 2; loop m: a;"), ParseError);
  CHECK_THROWS_AS(parse_monodromy("strands 2; braid m: s2;"), ParseError);
  CHECK_THROWS_AS(parse_monodromy("strands 2; infinity: g3;"), ParseError);
  CHECK_THROWS_AS(parse_monodromy("strands 2; braid m: s1; braid m: s1;"), ParseError);
  const auto f = parse_monodromy("strands 2; path a: s1; loop m: a*a^-1*a; braid n: s1^2;");
  REQUIRE(f.data.braids.size() == 2);
  CHECK(f.data.braids[0].second == BraidWord(2, {1}));
  CHECK_FALSE(f.data.infinity_meridian);
}

TEST_CASE("zvk presentations") {
  MonodromyData node{2, {{"m", BraidWord(2, {1, 1})}}, std::nullopt};
  auto p = zvk_presentation(node);
  REQUIRE(p.relators().size() == 2);
  for (const Word& r : p.relators())
    CHECK(cyclic_canonical(r) == cyclic_canonical(Word{2, 1, -2, -1}));
  REQUIRE(zvk_presentation(node, Reduction::block).relators().size() == 1);

  MonodromyData cusp{2, {{"m", BraidWord(2, {1, 1, 1})}}, std::nullopt};
  auto full = zvk_presentation(cusp, Reduction::none);
  auto block = zvk_presentation(cusp, Reduction::block);
  CHECK(full.relators().size() == 2);
  REQUIRE(block.relators().size() == 1);
  const Word braid_rel = Word{1, 2, 1} * Word{2, 1, 2}.inverse();
  CHECK(cyclic_canonical(block.relators()[0]) == cyclic_canonical(braid_rel.cyclically_reduced()));

  MonodromyData with_inf = cusp;
  with_inf.infinity_meridian = Word{2, 1};
  auto proj = zvk_presentation(with_inf, Reduction::block);
  CHECK(proj.relators().size() == 2);
  CHECK(proj.relators().back() == Word{2, 1});
}

TEST_CASE("block reduction on a conjugated braid keeps one relator per block") {
  // (s2^-1 s1) * s2^5 peels to a conjugate of s2^5: one block of two strands.
  const BraidWord beta = braid_conjugate(BraidWord(3, {-2, 1}), s(2, 5));
  MonodromyData m{3, {{"b", beta}}, std::nullopt};
  CHECK(zvk_presentation(m, Reduction::block).relators().size() == 1);
  CHECK(zvk_presentation(m, Reduction::none).relators().size() == 3);
}
