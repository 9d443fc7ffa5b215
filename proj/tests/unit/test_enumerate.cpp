#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "meridian/abelian/abelian.hpp"
#include "meridian/enumerate/coset_table.hpp"
#include "meridian/enumerate/finite_group.hpp"
#include "meridian/error.hpp"
#include "meridian/fpgroups/text_format.hpp"

using namespace meridian;

namespace {

const char* degtyarev =
    "gens x y; rel x*y*x*y*x = y*x*y*x*y; rel [x, y*x*y^-1*x*y*x*y^-1*x*y];";

std::size_t order_of(const Presentation& p) {
  const auto r = todd_coxeter(p);
  REQUIRE(r.status == EnumerationStatus::complete);
  return r.table->index();
}

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // a then b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return c;
}

Perm eval(const Word& w, const std::vector<Perm>& gens) {
  Perm r(gens[0].size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i);
  for (int l : w) {
    const Perm& g = gens[static_cast<std::size_t>(std::abs(l) - 1)];
    r = compose(r, l > 0 ? g : perm_inverse(g));
  }
  return r;
}

// Size of the permutation group generated by gens, by breadth-first closure.
std::size_t closure_size(const std::vector<Perm>& gens) {
  Perm id(gens[0].size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> queue{id};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const Perm& g : gens) {
      Perm n = compose(queue[k], g);
      if (seen.insert(n).second) queue.push_back(n);
    }
  return seen.size();
}

void check_table(const Presentation& p, const CosetTable& t) {
  for (std::size_t c = 0; c < t.index(); ++c) {
    for (const Word& r : p.relators()) CHECK(t.trace(c, r) == c);
    for (int g = 1; g <= p.generator_count(); ++g) CHECK(t.act(t.act(c, g), -g) == c);
  }
  if (t.subgroup().mode == SubgroupSpec::Mode::generators)
    for (const Word& h : t.subgroup().generators) CHECK(t.trace(0, h) == 0);
}

}  // namespace

TEST_CASE("coset enumeration examples") {
  const Presentation g = parse_presentation(degtyarev);
  const Presentation gp = g.with_relators({Word{1, 1, 1, 1, 1}});
  const auto r = todd_coxeter(gp);
  REQUIRE(r.status == EnumerationStatus::complete);
  CHECK(r.table->index() == 320);
  check_table(gp, *r.table);

  // Independent oracle: x = (0 1)(2 3), y = (0 2 4) generate A5 in S5 and
  // satisfy the relators.
  const Presentation a5 = parse_presentation("gens x y; rel x^2; rel y^3; rel (x*y)^5;");
  const std::vector<Perm> gens{{1, 0, 3, 2, 4}, {2, 1, 4, 3, 0}};
  for (const Word& rel : a5.relators()) CHECK(eval(rel, gens) == Perm{0, 1, 2, 3, 4});
  CHECK(order_of(a5) == closure_size(gens));
  CHECK(order_of(a5) == 60);

  CHECK(order_of(parse_presentation("gens x y; rel x^2; rel y^2; rel (x*y)^3;")) == 6);
  CHECK(order_of(parse_presentation("gens x; rel x^7;")) == 7);
  CHECK(order_of(parse_presentation("gens a b; rel a; rel b;")) == 1);
}

TEST_CASE("enumeration against permutation oracles") {
  // Random permutation pairs in S5: the enumerated order of the group given
  // by their relators plus enough power relators is at least the closure.
  const Presentation s3 = parse_presentation("gens a b; rel a^2; rel b^3; rel a*b*a*b;");
  CHECK(order_of(s3) == closure_size({{1, 0, 2}, {1, 2, 0}}));
  const Presentation q8 = parse_presentation("gens i j; rel i^4; rel i^2 = j^2; rel j*i*j^-1*i;");
  CHECK(order_of(q8) == 8);
  const Presentation s4 = parse_presentation("gens a b; rel a^2; rel b^3; rel (a*b)^4;");
  CHECK(order_of(s4) == closure_size({{1, 0, 2, 3}, {0, 2, 3, 1}}));
}

TEST_CASE("subgroup enumeration") {
  const Presentation s4 = parse_presentation("gens a b; rel a^2; rel b^3; rel (a*b)^4;");
  const auto r = todd_coxeter(s4, SubgroupSpec::generated_by({Word{2}}));
  REQUIRE(r.table);
  CHECK(r.table->index() == 8);
  check_table(s4, *r.table);

  const Presentation orb = parse_presentation("gens x y; rel x^2; rel y^5; rel (x*y)^10;");
  const auto k = todd_coxeter(orb, SubgroupSpec::kernel({10}, {{5}, {2}}));
  REQUIRE(k.table);
  CHECK(k.table->index() == 10);
  check_table(orb, *k.table);
  CHECK_THROWS_AS(todd_coxeter(orb, SubgroupSpec::kernel({10}, {{1}, {1}})), InvalidArgument);
}

TEST_CASE("overflow is reported, not an error") {
  const Presentation z = parse_presentation("gens x y; rel x*y*x^-1*y^-1;");
  const auto r = todd_coxeter(z, SubgroupSpec::trivial(), 500);
  CHECK(r.status == EnumerationStatus::overflow);
  CHECK_FALSE(r.table);
  CHECK(r.peak_cosets <= 500);
  const Presentation gp = parse_presentation(degtyarev).with_relators({Word{1, 1, 1, 1, 1}});
  CHECK(todd_coxeter(gp, SubgroupSpec::trivial(), 100).status == EnumerationStatus::overflow);
  CHECK_THROWS_AS(todd_coxeter(gp, SubgroupSpec::trivial(), 0), InvalidArgument);
}

TEST_CASE("regular representation and center") {
  const Presentation gp = parse_presentation(degtyarev).with_relators({Word{1, 1, 1, 1, 1}});
  const auto r = todd_coxeter(gp);
  REQUIRE(r.table);
  const auto rc = regular_rep_and_center(*r.table);
  CHECK(rc.center.elements.size() == 4);
  CHECK(rc.center.structure.to_string() == "Z/2 x Z/2");
  for (std::size_t z : rc.center.elements) CHECK(rc.table.power(z, 2) == rc.table.identity());
  // Index equals the size of the closure of the generators.
  CHECK(rc.table.generated_subgroup(rc.table.generators()).size() == 320);

  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> el(0, 319);
  for (int k = 0; k < 500; ++k) {
    const std::size_t a = el(rng), b = el(rng), c = el(rng);
    CHECK(rc.table.product(rc.table.product(a, b), c) == rc.table.product(a, rc.table.product(b, c)));
    CHECK(rc.table.product(a, rc.table.inverse(a)) == rc.table.identity());
  }
  // x has order 5.
  CHECK(rc.table.element_order(rc.table.generators()[0]) == 5);

  const auto z5 = todd_coxeter(parse_presentation("gens x; rel x^5;"));
  CHECK(regular_rep_and_center(*z5.table).center.elements.size() == 5);
  const auto d10 = todd_coxeter(parse_presentation("gens x y; rel x^2; rel y^5; rel (x*y)^2;"));
  CHECK(regular_rep_and_center(*d10.table).center.elements.size() == 1);

  const Presentation s4 = parse_presentation("gens a b; rel a^2; rel b^3; rel (a*b)^4;");
  const auto sub = todd_coxeter(s4, SubgroupSpec::generated_by({Word{2}}));
  CHECK_THROWS_AS(regular_representation(*sub.table), InvalidArgument);
}

TEST_CASE("abelian invariants from element orders") {
  const MultTable c12 = cyclic_table(12);
  std::vector<std::size_t> all(12);
  for (std::size_t i = 0; i < 12; ++i) all[i] = i;
  CHECK(abelian_invariants(c12, all).to_string() == "Z/12");
  const auto t = todd_coxeter(parse_presentation("gens a b c; rel a^2; rel b^4; rel c^3; rel [a,b]; rel [a,c]; rel [b,c];"));
  const MultTable m = regular_representation(*t.table);
  CHECK(center(m).structure.to_string() == "Z/2 x Z/12");
}

TEST_CASE("reidemeister-schreier") {
  const Presentation f2 = parse_presentation("gens x y;");
  const auto k2 = todd_coxeter(f2, SubgroupSpec::kernel({2}, {{1}, {1}}));
  const Presentation sub = reidemeister_schreier(f2, *k2.table);
  CHECK(sub.generator_count() == 3);
  CHECK(sub.relators().empty());

  const Presentation orb = parse_presentation("gens x y; rel x^2; rel y^5; rel (x*y)^10;");
  const auto k = todd_coxeter(orb, SubgroupSpec::kernel({10}, {{5}, {2}}));
  CHECK(abelianization(reidemeister_schreier(orb, *k.table)).to_string() == "Z^4");

  // Index one keeps the abelianization.
  const Presentation g = parse_presentation(degtyarev);
  const auto one = todd_coxeter(g, SubgroupSpec::kernel({1}, {{0}, {0}}));
  CHECK(one.table->index() == 1);
  CHECK(abelianization(reidemeister_schreier(g, *one.table)).same_invariants(abelianization(g)));
}

TEST_CASE("nielsen-schreier rank on random finite-index subgroups of free groups") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + trial % 2;
    const long n = 2 + trial % 5;
    std::vector<std::vector<long>> images;
    for (int g = 0; g < r; ++g) images.push_back({static_cast<long>(rng() % static_cast<unsigned>(n))});
    images[0][0] = 1;  // surjective
    const Presentation f = Presentation::with_generators(r, "x");
    const auto t = todd_coxeter(f, SubgroupSpec::kernel({n}, images));
    REQUIRE(t.table);
    CHECK(t.table->index() == static_cast<std::size_t>(n));
    const AbelianGroup a = abelianization(reidemeister_schreier(f, *t.table));
    CHECK(a.rank == 1 + n * (r - 1));
    CHECK(a.torsion.empty());
  }
}

TEST_CASE("derived subgroup of the order-ten quotient") {
  // Abelianization of <t_n (n mod 10) | t_{n+1} t_{n+3} = t_n t_{n+2} t_{n+4},
  // B_n = B_{n+1}> with B_n = t_n - t_{n+1} + t_{n+2} - t_{n+3} + t_{n+4}.
  IntMatrix m(20, 10);
  for (std::size_t n = 0; n < 10; ++n) {
    auto t = [&](std::size_t row, std::size_t k, long v) { m(row, (n + k) % 10) += v; };
    t(n, 1, 1); t(n, 3, 1); t(n, 0, -1); t(n, 2, -1); t(n, 4, -1);
    const long b[] = {1, -1, 1, -1, 1};
    for (std::size_t k = 0; k < 5; ++k) {
      t(10 + n, k, b[k]);
      t(10 + n, k + 1, -b[k]);
    }
  }
  AbelianGroup oracle;
  for (const auto& d : smith_normal_form(m).diagonal) {
    if (d == 0) ++oracle.rank;
    else if (d > 1) oracle.torsion.push_back(d);
  }

  const Presentation g0 = parse_presentation(degtyarev).with_relators({Word{1, 2, 1, 2, 1, 2, 1, 2, 1, 2}});
  CHECK(abelianization(g0).to_string() == "Z/10");
  const auto k = todd_coxeter(g0, SubgroupSpec::kernel({10}, {{1}, {1}}));
  REQUIRE(k.table);
  CHECK(k.table->index() == 10);
  const AbelianGroup computed = abelianization(reidemeister_schreier(g0, *k.table));
  CHECK(computed.same_invariants(oracle));
}

TEST_CASE("epimorphism search") {
  const Presentation g = parse_presentation(degtyarev);
  CHECK_FALSE(find_epimorphisms(g, dihedral_table(5)).empty());
  CHECK_FALSE(find_epimorphisms(g.with_relators({Word{1, 1, 1, 1, 1}}), cyclic_table(5)).empty());
  CHECK(find_epimorphisms(parse_presentation("gens x; rel x^2;"), cyclic_table(3)).empty());

  // Stable under relator reordering.
  const Presentation rev({"x", "y"}, {g.relators()[1], g.relators()[0]});
  CHECK(find_epimorphisms(rev, dihedral_table(5)) == find_epimorphisms(g, dihedral_table(5)));

  // Every reported assignment satisfies the relators and generates.
  const MultTable d10 = dihedral_table(5);
  for (const auto& a : find_epimorphisms(g, d10)) {
    for (const Word& r : g.relators()) CHECK(d10.evaluate(r, a) == d10.identity());
    CHECK(d10.generated_subgroup(a).size() == 10);
  }
  CHECK_THROWS_AS(find_epimorphisms(Presentation::with_generators(8), cyclic_table(10)), LimitExceeded);
}

TEST_CASE("multiplication table format and checks") {
  const MultTable d = dihedral_table(4);
  const MultTable back = parse_mult_table(format_mult_table(d));
  CHECK(back.order() == 8);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) CHECK(back.product(a, b) == d.product(a, b));
  CHECK_THROWS_AS(MultTable(2, {0, 1, 0, 1}, 0, {}), InvalidArgument);
  CHECK_THROWS_AS(parse_mult_table("order 2; identity 0; row 0 1;"), ParseError);
}

TEST_CASE("subgroup spec syntax") {
  const Presentation g = parse_presentation(degtyarev);
  const SubgroupSpec k = parse_subgroup_spec("kernel Z/10 x->5 y->2;", g);
  CHECK(k.mode == SubgroupSpec::Mode::kernel);
  CHECK(k.target == std::vector<long>{10});
  CHECK(k.images == std::vector<std::vector<long>>{{5}, {2}});
  const SubgroupSpec k2 = parse_subgroup_spec("kernel Z/2 x Z/5 x->(1,1) y->(1,1);", g);
  CHECK(k2.target == std::vector<long>{2, 5});
  const SubgroupSpec h = parse_subgroup_spec("gens x*y^-1, y^2 x;", g);
  CHECK(h.generators.size() == 3);
  CHECK_THROWS_AS(parse_subgroup_spec("kernel Z/10 z->1;", g), ParseError);
  CHECK_THROWS_AS(parse_subgroup_spec("kernel Z/10 x->(1,2);", g), ParseError);
  CHECK_THROWS_AS(parse_subgroup_spec("normal x;", g), ParseError);
}
