#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "hnp/finab.hpp"
#include "hnp/fixtures.hpp"
#include "oracles.hpp"

using namespace hnp;

namespace {

std::vector<Int> inv(std::initializer_list<long> v) { return std::vector<Int>(v.begin(), v.end()); }

IntMatrix cols(std::size_t rows, const std::vector<std::vector<long>>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  return m;
}

}  // namespace

TEST_CASE("FinAb validates the divisibility chain") {
  CHECK_NOTHROW(FinAb(inv({2, 4, 8})));
  CHECK_NOTHROW(FinAb(inv({})));
  CHECK_THROWS_AS(FinAb(inv({4, 2})), PreconditionError);
  CHECK_THROWS_AS(FinAb(inv({1, 2})), PreconditionError);
  CHECK(FinAb(inv({2, 6})).order() == 12);
  CHECK(FinAb(inv({})).order() == 1);
}

TEST_CASE("abelianization: worked examples") {
  GroupPtr s3g = corpus::s3();
  Abelianization s3(whole_group(s3g));
  CHECK(s3.group().invariants() == inv({2}));

  GroupPtr c12 = corpus::c12();
  Subgroup c4 = subgroup_from_generators(c12, {parse_permutation("(1,4,7,10)(2,5,8,11)(3,6,9,12)", 12)});
  CHECK(Abelianization(c4).group().invariants() == inv({4}));

  GroupPtr m11 = load_m11();
  CHECK(Abelianization(whole_group(m11)).group().invariants().empty());

  CHECK(Abelianization(trivial_subgroup(s3g)).group().is_trivial());
}

TEST_CASE("abelianization: projection is a homomorphism with the right kernel") {
  for (const auto& [name, g] : corpus::small_corpus()) {
    CAPTURE(name);
    Subgroup whole = whole_group(g);
    Abelianization ab(whole);
    Subgroup der = derived_subgroup(whole);
    CHECK(ab.group().order() == Int(whole.order() / der.order()));

    // proj(lift(e_i)) = e_i
    for (std::size_t i = 0; i < ab.group().rank(); ++i) {
      std::vector<Int> e = ab.project(ab.group().lift(i));
      for (std::size_t j = 0; j < ab.group().rank(); ++j) CHECK(e[j] == (i == j ? 1 : 0));
    }

    // homomorphism property on sampled pairs, kernel = derived subgroup
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
      ElementIndex a = ElementIndex(rng() % g->order());
      ElementIndex b = ElementIndex(rng() % g->order());
      std::vector<Int> lhs = ab.project(g->mul(a, b));
      std::vector<Int> va = ab.project(a), vb = ab.project(b);
      for (std::size_t j = 0; j < va.size(); ++j) va[j] += vb[j];
      CHECK(lhs == ab.group().reduce(std::move(va)));
    }
    for (ElementIndex e : der.members_list()) {
      std::vector<Int> v = ab.project(e);
      for (const Int& x : v) CHECK(x == 0);
    }
  }
}

TEST_CASE("abelianization of an abelian subgroup preserves the order") {
  for (const auto& g : {corpus::c6(), corpus::c12(), corpus::c2xc4(), corpus::c3xc3()}) {
    Subgroup whole = whole_group(g);
    CHECK(Abelianization(whole).group().order() == Int(whole.order()));
  }
}

TEST_CASE("hom construction: zero and reduction maps; ill-defined maps refused") {
  FinAb z4(inv({4})), z2(inv({2})), t(inv({}));
  AbHom zero(z4, t, IntMatrix(0, 1));
  CHECK(kernel(zero).order() == 4);

  AbHom red(z4, z2, cols(1, {{1}}));  // x mod 2
  CHECK(kernel(red).order() == 2);
  CHECK(image(red).order() == 2);

  // Z/2 -> Z/4 sending the generator to an element of order 4 is not a hom
  CHECK_THROWS_AS(AbHom(z2, z4, cols(1, {{1}})), PreconditionError);
  CHECK_NOTHROW(AbHom(z2, z4, cols(1, {{2}})));
}

TEST_CASE("kernel and image orders multiply to the domain order") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    // random domain and codomain with invariants over {2,4,8,3,9,6,12}
    auto random_finab = [&](std::size_t max_rank) {
      static const long pool[] = {2, 4, 8, 3, 9, 6, 12};
      std::vector<Int> v;
      std::size_t rank = rng() % (max_rank + 1);
      for (std::size_t i = 0; i < rank; ++i) v.push_back(pool[rng() % 7]);
      // normalize into a chain via the direct-sum machinery
      std::vector<FinAb> parts;
      for (const Int& d : v) parts.push_back(FinAb({d}));
      return direct_sum(parts).sum;
    };
    FinAb dom = random_finab(3), cod = random_finab(3);
    // image of generator j: random element annihilated by dom invariant d_j
    IntMatrix m(cod.rank(), dom.rank());
    for (std::size_t j = 0; j < dom.rank(); ++j)
      for (std::size_t i = 0; i < cod.rank(); ++i) {
        Int step = cod.invariants()[i] / gcd(cod.invariants()[i], dom.invariants()[j]);
        Int k = Int(rng() % 4);
        m.at(i, j) = step * k;
      }
    AbHom f(dom, cod, m);
    CHECK(kernel(f).order() * image(f).order() == dom.order());

    // exhaustive oracle when the domain is small
    if (dom.order() <= 64) {
      std::set<std::vector<Int>> ker_set;
      for (const auto& x : oracle::all_elements(dom)) {
        std::vector<Int> y = f(x);
        if (std::all_of(y.begin(), y.end(), [](const Int& v) { return v == 0; })) ker_set.insert(x);
      }
      CHECK(Int(ker_set.size()) == kernel(f).order());
      for (const auto& x : ker_set) CHECK(kernel(f).contains(x));
      CHECK(oracle::subab_elements(kernel(f)) == ker_set);
    }
  }
}

TEST_CASE("pushforward and join against exhaustive enumeration") {
  FinAb a(inv({2, 4}));
  SubAb s1(a, cols(2, {{1, 0}}));
  SubAb s2(a, cols(2, {{0, 2}}));
  CHECK(s1.order() == 2);
  CHECK(s2.order() == 2);
  SubAb j = join(s1, s2);
  CHECK(j.order() == 4);
  CHECK(j.contains(s1));
  CHECK(j.contains(s2));
  CHECK(oracle::subab_elements(j).size() == 4);

  AbHom red(a, FinAb(inv({2})), cols(1, {{1}, {0}}));
  CHECK(pushforward(red, s1).order() == 2);
  CHECK(pushforward(red, s2).order() == 1);
  CHECK(pushforward(red, full_subab(a)).order() == image(red).order());
}

TEST_CASE("quotient invariants") {
  FinAb z4(inv({4}));
  SubAb two(z4, cols(1, {{2}}));
  CHECK(quotient_invariants(z4, two) == inv({2}));
  CHECK(quotient_invariants(z4, trivial_subab(z4)) == inv({4}));
  CHECK(quotient_invariants(z4, full_subab(z4)).empty());

  FinAb v4(inv({2, 2}));
  CHECK(quotient_invariants(v4, full_subab(v4)).empty());

  // product of quotient invariants = |G| / |S| on random subgroups
  std::mt19937_64 rng(880);
  FinAb big = direct_sum({FinAb(inv({2})), FinAb(inv({4})), FinAb(inv({3}))}).sum;
  for (int t = 0; t < 50; ++t) {
    IntMatrix gens(big.rank(), 2);
    for (std::size_t r = 0; r < big.rank(); ++r)
      for (std::size_t c = 0; c < 2; ++c) gens.at(r, c) = Int(rng() % 12);
    SubAb s(big, gens);
    Int prod = 1;
    for (const Int& d : quotient_invariants(big, s)) prod *= d;
    CHECK(prod * s.order() == big.order());
  }
}

TEST_CASE("subquotient invariants") {
  FinAb z8(inv({8}));
  SubAb four(z8, cols(1, {{2}}));   // order 4
  SubAb two(z8, cols(1, {{4}}));    // order 2
  CHECK(subquotient_invariants(four, two) == inv({2}));
  CHECK(subquotient_invariants(four, four).empty());
  CHECK(subquotient_invariants(full_subab(z8), trivial_subab(z8)) == inv({8}));
  CHECK_THROWS_AS(subquotient_invariants(two, four), PreconditionError);
}

TEST_CASE("direct sums renormalize to invariant-factor form") {
  CHECK(direct_sum({}).sum.is_trivial());
  CHECK(direct_sum({FinAb(inv({2})), FinAb(inv({2}))}).sum.invariants() == inv({2, 2}));
  CHECK(direct_sum({FinAb(inv({2})), FinAb(inv({4}))}).sum.invariants() == inv({2, 4}));
  CHECK(direct_sum({FinAb(inv({4})), FinAb(inv({2}))}).sum.invariants() == inv({2, 4}));
  CHECK(direct_sum({FinAb(inv({2})), FinAb(inv({3}))}).sum.invariants() == inv({6}));

  // order multiplies; injections are injective and jointly surjective
  std::vector<FinAb> parts{FinAb(inv({2, 4})), FinAb(inv({3})), FinAb(inv({8}))};
  DirectSum ds = direct_sum(parts);
  Int expect = 1;
  for (const FinAb& p : parts) expect *= p.order();
  CHECK(ds.sum.order() == expect);
  SubAb total = trivial_subab(ds.sum);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    AbHom inj = ds.injection(i, parts);
    CHECK(kernel(inj).order() == 1);
    total = join(total, image(inj));
  }
  CHECK(total.order() == ds.sum.order());
}
