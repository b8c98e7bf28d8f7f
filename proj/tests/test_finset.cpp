#include "doctest.h"
#include "fincat/finset.hpp"

#include <vector>

using namespace fincat;

namespace {

// Oracle: every mapping T->Y as a raw index vector, odometer order.
std::vector<std::vector<std::size_t>> all_assignments(std::size_t nt,
                                                      std::size_t ny) {
  std::vector<std::vector<std::size_t>> out;
  if (nt == 0) {
    out.push_back({});
    return out;
  }
  if (ny == 0) return out;
  std::vector<std::size_t> digits(nt, 0);
  const std::vector<std::size_t> radices(nt, ny);
  do {
    out.push_back(digits);
  } while (next_tuple(digits, radices));
  return out;
}

std::vector<FinitePoset> all_posets(std::size_t n) {
  FiniteSet carrier = FiniteSet::range(n, "p");
  std::vector<FinitePoset> out;
  const std::size_t cells = n * n;
  for (std::size_t mask = 0; mask < (std::size_t(1) << cells); ++mask) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = (mask >> (i * n + j)) & 1;
    bool refl = true;
    for (std::size_t i = 0; i < n; ++i) refl = refl && m[i][i];
    if (!refl) continue;
    try {
      out.push_back(FinitePoset(carrier, m));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("finset");

TEST_CASE("product shapes and projections") {
  FiniteSet two = FiniteSet::range(2);
  FiniteSet three = FiniteSet::range(3);
  FiniteSet one({"a"});
  FiniteSet empty(std::vector<std::string>{});

  CHECK(product(two, two).set.size() == 4);
  CHECK(product(one, empty).set.size() == 0);

  Product p = product(two, three);
  CHECK(p.set.size() == 6);
  CHECK(p.proj1.is_surjective());
  CHECK(p.proj2.is_surjective());
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t t = 0; t < 3; ++t) {
      const std::size_t i = p.pair_index(x, t);
      CHECK(p.proj1.apply_index(i) == x);
      CHECK(p.proj2.apply_index(i) == t);
    }
}

TEST_CASE("exponential enumerates all mappings lexicographically") {
  FiniteSet two = FiniteSet::range(2);
  FiniteSet three = FiniteSet::range(3);
  FiniteSet empty(std::vector<std::string>{});

  CHECK(exponential(two, two).points.size() == 4);
  CHECK(exponential(empty, two).points.size() == 1);
  CHECK(exponential(empty, empty).points.size() == 1);

  Exponential e = exponential(three, two);
  auto oracle = all_assignments(3, 2);
  REQUIRE(e.points.size() == oracle.size());  // 8 mappings
  CHECK(e.points.size() == 8);
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    CHECK(e.points[i].assignment() == oracle[i]);
    CHECK(e.index_of(e.points[i]) == i);
  }
}

TEST_CASE("name on projections and constants") {
  FiniteSet one({"0"});
  FiniteSet two = FiniteSet::range(2);
  Product p = product(one, two);

  Mapping f = p.proj2;  // second projection
  Mapping g = name(f, one, two);
  Exponential e = exponential(two, two);
  CHECK(e.points[g.apply_index(0)].is_identity());

  Mapping cst = Mapping::constant(p.set, two, 1);
  Mapping gc = name(cst, one, two);
  CHECK(e.points[gc.apply_index(0)] == Mapping::constant(two, two, 1));
}

TEST_CASE("name is injective over all 16 forms at size 2") {
  FiniteSet X = FiniteSet::range(2, "x");
  FiniteSet T = FiniteSet::range(2, "t");
  FiniteSet Y = FiniteSet::range(2, "y");
  Product xt = product(X, T);

  std::vector<Mapping> names;
  for (const auto& a : all_assignments(xt.set.size(), Y.size())) {
    Mapping f(xt.set, Y, a);
    names.push_back(name(f, X, T));
  }
  REQUIRE(names.size() == 16);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      CHECK(names[i] != names[j]);
}

TEST_CASE("realize and name are mutually inverse") {
  FiniteSet X = FiniteSet::range(2, "x");
  FiniteSet T = FiniteSet::range(2, "t");
  FiniteSet Y = FiniteSet::range(2, "y");
  Product xt = product(X, T);
  Exponential e = exponential(T, Y);

  for (const auto& a : all_assignments(xt.set.size(), Y.size())) {
    Mapping f(xt.set, Y, a);
    CHECK(realize(name(f, X, T), X, T, Y) == f);
  }
  for (const auto& a : all_assignments(X.size(), e.set.size())) {
    Mapping g(X, e.set, a);
    CHECK(name(realize(g, X, T, Y), X, T) == g);
  }

  // g constant at the identity mapping realizes to the second projection
  Exponential ett = exponential(T, T);
  Mapping g =
      Mapping::constant(X, ett.set, ett.index_of(Mapping::identity(T)));
  CHECK(realize(g, X, T, T) == product(X, T).proj2);
}

TEST_CASE("unit section equals the name of the identity") {
  FiniteSet X1({"0"});
  FiniteSet T1({"0"});
  Mapping l = unit_section(X1, T1);
  Product p = product(X1, T1);
  Exponential e = exponential(T1, p.set);
  CHECK(e.points[l.apply_index(0)](T1.at(0)) == encode_pair("0", "0"));

  for (std::size_t nx = 0; nx <= 3; ++nx)
    for (std::size_t nt = 0; nt <= 3; ++nt) {
      FiniteSet X = FiniteSet::range(nx, "x");
      FiniteSet T = FiniteSet::range(nt, "t");
      Product xt = product(X, T);
      CHECK(unit_section(X, T) == name(Mapping::identity(xt.set), X, T));
      // first triangle identity
      CHECK(realize(unit_section(X, T), X, T, xt.set) ==
            Mapping::identity(xt.set));
    }
}

TEST_CASE("counit evaluation and the second triangle identity") {
  FiniteSet two = FiniteSet::range(2);
  Exponential e = exponential(two, two);
  Product et = product(e.set, two);
  Mapping ev = counit_eval(two, two);
  const std::size_t id_idx = e.index_of(Mapping::identity(two));
  CHECK(ev.apply_index(et.pair_index(id_idx, 1)) == 1);
  const std::size_t c1 = e.index_of(Mapping::constant(two, two, 1));
  CHECK(ev.apply_index(et.pair_index(c1, 0)) == 1);

  for (std::size_t nt = 0; nt <= 3; ++nt)
    for (std::size_t ny = 0; ny <= 3; ++ny) {
      FiniteSet T = FiniteSet::range(nt, "t");
      FiniteSet Y = FiniteSet::range(ny, "y");
      Exponential ex = exponential(T, Y);
      Mapping n = name(counit_eval(Y, T), ex.set, T);
      CHECK(n.is_identity());
    }
}

TEST_CASE("adjunction bijection counts at every size up to 3") {
  for (std::size_t nx = 1; nx <= 3; ++nx)
    for (std::size_t nt = 1; nt <= 3; ++nt)
      for (std::size_t ny = 1; ny <= 3; ++ny) {
        const std::size_t forms = sat_pow(ny, nx * nt);
        const std::size_t names_count =
            sat_pow(sat_pow(ny, nt), nx);
        CHECK(forms == names_count);
      }
}

TEST_CASE("naturality squares for mappings between small sets") {
  // name(u x 1 ; f ; v) = u ; name(f) ; v^T over all u, v, f at size <= 2.
  for (std::size_t nx = 1; nx <= 2; ++nx)
    for (std::size_t nxp = 1; nxp <= 2; ++nxp)
      for (std::size_t nt = 1; nt <= 2; ++nt)
        for (std::size_t ny = 1; ny <= 2; ++ny)
          for (std::size_t nyp = 1; nyp <= 2; ++nyp) {
            FiniteSet X = FiniteSet::range(nx, "x");
            FiniteSet Xp = FiniteSet::range(nxp, "u");
            FiniteSet T = FiniteSet::range(nt, "t");
            FiniteSet Y = FiniteSet::range(ny, "y");
            FiniteSet Yp = FiniteSet::range(nyp, "z");
            Product xt = product(X, T);
            Product xpt = product(Xp, T);
            Exponential eY = exponential(T, Y);
            Exponential eYp = exponential(T, Yp);

            for (const auto& ua : all_assignments(nxp, nx))
              for (const auto& va : all_assignments(ny, nyp))
                for (const auto& fa :
                     all_assignments(xt.set.size(), ny)) {
                  Mapping u(Xp, X, ua);
                  Mapping v(Y, Yp, va);
                  Mapping f(xt.set, Y, fa);

                  // u x id_T at the product level
                  std::vector<std::size_t> uxid(xpt.set.size());
                  for (std::size_t x = 0; x < nxp; ++x)
                    for (std::size_t t = 0; t < nt; ++t)
                      uxid[xpt.pair_index(x, t)] =
                          xt.pair_index(u.apply_index(x), t);
                  Mapping u_times_id(xpt.set, xt.set, uxid);

                  // v^T: post-composition on the exponential
                  std::vector<std::size_t> vexp(eY.set.size());
                  for (std::size_t i = 0; i < eY.points.size(); ++i)
                    vexp[i] = eYp.index_of(eY.points[i].then(v));
                  Mapping v_pow(eY.set, eYp.set, vexp);

                  Mapping lhs = name(u_times_id.then(f).then(v), Xp, T);
                  Mapping rhs = u.then(name(f, X, T)).then(v_pow);
                  CHECK(lhs == rhs);
                }
          }
}

TEST_CASE("poset validation is eager") {
  FiniteSet c = FiniteSet::range(2);
  std::vector<std::vector<bool>> not_refl{{false, false}, {false, true}};
  CHECK_THROWS_AS(FinitePoset(c, not_refl), Error);
  std::vector<std::vector<bool>> not_antisym{{true, true}, {true, true}};
  CHECK_THROWS_AS(FinitePoset(c, not_antisym), Error);
  FiniteSet c3 = FiniteSet::range(3);
  std::vector<std::vector<bool>> not_trans{
      {true, true, false}, {false, true, true}, {false, false, true}};
  CHECK_THROWS_AS(FinitePoset(c3, not_trans), Error);
}

TEST_CASE("poset exponential counts monotone maps") {
  FinitePoset chain2 = FinitePoset::chain(2);
  PosetExponential pe = poset_exponential(chain2, chain2);
  CHECK(pe.points.size() == 3);  // of 4 total
  CHECK(exponential(chain2.carrier(), chain2.carrier()).points.size() == 4);

  // discrete exponent: no constraints
  FinitePoset disc = FinitePoset::discrete(FiniteSet::range(2));
  CHECK(poset_exponential(disc, chain2).points.size() == 4);

  // monotone self-maps of the 3-chain, against a direct filter oracle
  FinitePoset chain3 = FinitePoset::chain(3);
  std::size_t oracle = 0;
  for (const auto& a : all_assignments(3, 3)) {
    bool mono = true;
    for (std::size_t i = 0; i < 3 && mono; ++i)
      for (std::size_t j = i; j < 3 && mono; ++j)
        mono = a[i] <= a[j];
    if (mono) ++oracle;
  }
  CHECK(oracle == 10);
  CHECK(poset_exponential(chain3, chain3).points.size() == oracle);
}

TEST_CASE("evaluation is monotone on poset exponentials") {
  // all posets with up to 3 elements, exhaustively
  for (std::size_t n = 0; n <= 3; ++n) {
    auto posets = all_posets(n);
    for (const auto& T : posets)
      for (const auto& Y : posets) {
        EvalMonotoneReport rep = poset_eval_monotone_check(T, Y);
        CHECK(rep.ok);
      }
  }
  CHECK(all_posets(3).size() == 19);  // labeled posets on 3 elements

  // one-point exponent reduces to the order on Y
  FinitePoset pt = FinitePoset::chain(1);
  FinitePoset chain3 = FinitePoset::chain(3);
  CHECK(poset_eval_monotone_check(pt, chain3).ok);

  // antichain exponent: pointwise order only
  FinitePoset anti = FinitePoset::discrete(FiniteSet::range(3));
  CHECK(poset_eval_monotone_check(anti, chain3).ok);
}

TEST_CASE("limit sets and the continuity characterization") {
  FinitePoset chain3 = FinitePoset::chain(3);
  CHECK(limit_set(chain3, "1") == FiniteSet({"1", "2"}));
  CHECK(limit_set(chain3, "2") == FiniteSet({"2"}));
  CHECK_THROWS_AS(limit_set(chain3, "9"), Error);

  // monotone <=> limit-continuous over all maps between <=3-element posets
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m) {
      auto src = all_posets(n);
      auto dst = all_posets(m);
      for (const auto& P : src)
        for (const auto& Q : dst)
          for (const auto& a : all_assignments(n, m)) {
            Mapping f(P.carrier(), Q.carrier(), a);
            CHECK(is_monotone(f, P, Q) == limit_continuous(f, P, Q));
          }
    }
}

TEST_SUITE_END();
