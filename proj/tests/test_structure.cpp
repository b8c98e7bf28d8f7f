#include "doctest.h"
#include "fincat/fixtures.hpp"
#include "fincat/structure.hpp"

using namespace fincat;

namespace {

std::vector<Transport> all_transports(GraphPtr T, GraphPtr Y) {
  std::vector<Transport> out;
  Budget b;
  enumerate_transports(T, Y, b, [&](const Transport& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<Transform> all_transforms(const Transport& phi,
                                      const Transport& psi) {
  std::vector<Transform> out;
  Budget b;
  enumerate_transforms(phi, psi, b, [&](const Transform& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("structure");

TEST_CASE("original graph validation") {
  CHECK(validate_original(walking_arrow()).ok);
  CHECK(validate_original(z2_category()).ok);
  CHECK(validate_original(one_object_original(FiniteSet({"1", "x"}),
                                              {{0, 1}, {1, 1}}, 0))
            .ok);
  // broken left unit: 1.x = 1
  CheckResult r = validate_original(
      one_object_original(FiniteSet({"1", "x"}), {{0, 0}, {1, 1}}, 0));
  CHECK(!r.ok);
  CHECK(r.witnesses.front() == "1.x:*->*");
}

TEST_CASE("category validation and the canonical magma") {
  CHECK(validate_category(walking_arrow()).ok);
  CHECK(validate_category(composable_pair()).ok);
  CHECK(validate_category(z2_category()).ok);

  // the canonical search result: every non-unit product collapses to the
  // unit, computed by the table oracle below
  OriginalGraph m3 = m3_magma();
  const FiniteSet& elems = m3.graph->hom(0, 0);
  CHECK(elems == FiniteSet({"1", "a", "b"}));
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 1; j < 3; ++j) CHECK(m3.compose(0, 0, 0, i, j) == 0);
  CHECK(validate_original(m3).ok);

  CheckResult r = validate_category(m3);
  CHECK(!r.ok);
  // first failing triple in lexicographic order: (a, a, b)
  CHECK(r.witnesses.front() == "a:*->* a:*->* b:*->*");

  // oracle: recheck the witness against the stored table directly
  const std::size_t a = 1, b = 2;
  CHECK(m3.compose(0, 0, 0, m3.compose(0, 0, 0, a, a), b) !=
        m3.compose(0, 0, 0, a, m3.compose(0, 0, 0, a, b)));
}

TEST_CASE("transport classification") {
  OriginalGraph m3 = m3_magma();
  Transport id = Transport::identity(m3.graph);
  TransportClassification c = classify_transport(id, m3, m3);
  CHECK(c.crude);
  CHECK(c.natural);

  // unit-preserving but composition-breaking endo-transport exists on M3
  bool found = false;
  for (const auto& f : all_transports(m3.graph, m3.graph)) {
    TransportClassification k = classify_transport(f, m3, m3);
    if (k.crude && !k.natural) found = true;
  }
  CHECK(found);

  // every crude+natural endo-transport of a category stays crude+natural
  // after composition
  OriginalGraph wa = walking_arrow();
  std::vector<Transport> functors;
  for (const auto& f : all_transports(wa.graph, wa.graph)) {
    TransportClassification k = classify_transport(f, wa, wa);
    if (k.crude && k.natural) functors.push_back(f);
  }
  CHECK(!functors.empty());
  for (const auto& f : functors)
    for (const auto& g : functors) {
      TransportClassification k =
          classify_transport(compose_transports(f, g), wa, wa);
      CHECK(k.crude);
      CHECK(k.natural);
    }
}

TEST_CASE("natural transform checking") {
  OriginalGraph z2 = z2_category();
  GraphPtr pt = share(point_graph());

  // identity transforms with neutral units are natural
  for (const auto& phi : all_transports(pt, z2.graph))
    CHECK(natural_transform_check(identity_transform(phi, z2.units),
                                  z2.contact)
              .ok);

  // endo-transforms into a one-object commutative target are natural
  for (const auto& phi : all_transports(pt, z2.graph))
    for (const auto& al : all_transforms(phi, phi))
      CHECK(natural_transform_check(al, z2.contact).ok);

  // a non-natural witness with a 2-element hom target
  OriginalGraph wa = walking_arrow();
  GraphPtr arrow = wa.graph;
  bool found = false;
  for (const auto& phi : all_transports(arrow, z2.graph))
    for (const auto& psi : all_transports(arrow, z2.graph))
      for (const auto& al : all_transforms(phi, psi)) {
        CheckResult r = natural_transform_check(al, z2.contact);
        if (!r.ok) {
          found = true;
          CHECK(!r.witnesses.empty());
        }
      }
  CHECK(found);
}

TEST_CASE("natural exponential graphs") {
  OriginalGraph wa = walking_arrow();

  // exponent without edges: nothing is filtered
  FiniteGraph t0{FiniteSet({"s"})};
  NaturalExponential n0 = natural_exponential(share(t0), wa);
  ExponentialGraph e0 = exponential_graph(share(t0), wa.graph);
  for (std::size_t i = 0; i < n0.points.size(); ++i)
    for (std::size_t j = 0; j < n0.points.size(); ++j)
      CHECK(n0.graph.hom(i, j).size() == e0.hom_size(i, j));

  // walking arrow over itself: 3 points, hand-counted hom sizes, and all
  // transforms natural because every hom is at most a singleton
  NaturalExponential n1 = natural_exponential(wa.graph, wa);
  REQUIRE(n1.points.size() == 3);
  ExponentialGraph e1 = exponential_graph(wa.graph, wa.graph);
  std::size_t total = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(n1.graph.hom(i, j).size() == e1.hom_size(i, j));
      total += n1.graph.hom(i, j).size();
    }
  CHECK(total == 6);

  // composing natural transforms stays natural when the target is a
  // validated category
  for (const auto& cat : {walking_arrow(), z2_category(), composable_pair()}) {
    REQUIRE(validate_category(cat).ok);
    GraphPtr T = walking_arrow().graph;
    for (const auto& phi : all_transports(T, cat.graph))
      for (const auto& psi : all_transports(T, cat.graph))
        for (const auto& xi : all_transports(T, cat.graph))
          for (const auto& al : all_transforms(phi, psi)) {
            if (!natural_transform_check(al, cat.contact).ok) continue;
            for (const auto& be : all_transforms(psi, xi)) {
              if (!natural_transform_check(be, cat.contact).ok) continue;
              CHECK(natural_transform_check(
                        compose_transforms(al, be, cat.contact), cat.contact)
                        .ok);
            }
          }
  }
}

TEST_CASE("transform composition on a non-associative target leaks") {
  OriginalGraph m3 = m3_magma();
  GraphPtr arrow = share(bare_arrow_graph());
  bool witness = false;
  for (const auto& phi : all_transports(arrow, m3.graph))
    for (const auto& psi : all_transports(arrow, m3.graph))
      for (const auto& xi : all_transports(arrow, m3.graph))
        for (const auto& al : all_transforms(phi, psi)) {
          if (!natural_transform_check(al, m3.contact).ok) continue;
          for (const auto& be : all_transforms(psi, xi)) {
            if (!natural_transform_check(be, m3.contact).ok) continue;
            if (!natural_transform_check(
                     compose_transforms(al, be, m3.contact), m3.contact)
                     .ok)
              witness = true;
          }
        }
  CHECK(witness);

  // unit transforms stay neutral for vertical composition
  OriginalGraph z2 = z2_category();
  GraphPtr pt = share(point_graph());
  for (const auto& phi : all_transports(pt, z2.graph))
    for (const auto& psi : all_transports(pt, z2.graph))
      for (const auto& al : all_transforms(phi, psi)) {
        CHECK(compose_transforms(identity_transform(phi, z2.units), al,
                                 z2.contact) == al);
        CHECK(compose_transforms(al, identity_transform(psi, z2.units),
                                 z2.contact) == al);
      }

  // vertical composition is associative over a category target
  for (const auto& phi : all_transports(pt, z2.graph))
    for (const auto& al : all_transforms(phi, phi))
      for (const auto& be : all_transforms(phi, phi))
        for (const auto& ga : all_transforms(phi, phi))
          CHECK(compose_transforms(compose_transforms(al, be, z2.contact), ga,
                                   z2.contact) ==
                compose_transforms(al, compose_transforms(be, ga, z2.contact),
                                   z2.contact));
}

TEST_CASE("representable characters") {
  OriginalGraph wa = walking_arrow();
  Character r1 = Character::representable(wa, 1);
  CHECK(r1.value(0) == FiniteSet({"a"}));
  CHECK(r1.value(1) == FiniteSet({"id1"}));

  // action is source changing: h |-> h.f
  OriginalGraph z2 = z2_category();
  Character rz = Character::representable(z2, 0);
  CHECK(rz.value(0).size() == 2);
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t f = 0; f < 2; ++f)
      CHECK(rz.act(0, 0, h, f) == z2.compose(0, 0, 0, h, f));

  // vertex with only its unit loop
  Character r0 = Character::representable(wa, 0);
  CHECK(r0.value(0) == FiniteSet({"id0"}));
  CHECK(r0.value(1).empty());
}

TEST_CASE("social points") {
  // identity actions everywhere: all points social
  OriginalGraph wa = walking_arrow();
  {
    std::vector<FiniteSet> values{FiniteSet::range(2, "m"),
                                  FiniteSet::range(2, "m")};
    std::vector<std::vector<std::vector<std::size_t>>> actions(4);
    actions[0 * 2 + 0] = {{0, 1}};
    actions[1 * 2 + 1] = {{0, 1}};
    actions[0 * 2 + 1] = {{0, 1}};  // a in X(0;1)
    Character f(wa.graph, values, actions);
    CHECK(social_points(wa, f, 0).size() == 2);
    CHECK(social_points(wa, f, 1).size() == 2);
  }

  // category: the whole value set of a representable is social
  for (const auto& cat : {walking_arrow(), z2_category(), composable_pair()})
    for (std::size_t x = 0; x < cat.graph->order(); ++x) {
      Character r = Character::representable(cat, x);
      for (std::size_t a = 0; a < cat.graph->order(); ++a)
        CHECK(social_points(cat, r, a).size() == r.value(a).size());
    }

  // the canonical magma has non-social points: only the unit survives
  OriginalGraph m3 = m3_magma();
  Character rm = Character::representable(m3, 0);
  std::vector<std::size_t> s = social_points(m3, rm, 0);
  REQUIRE(s.size() == 1);
  CHECK(rm.value(0).at(s[0]) == "1");
}

TEST_CASE("yoneda correspondence") {
  Budget budget(Budget::kDefault);
  OriginalGraph wa = walking_arrow();

  // representable at 1, probed at 0: exactly one transform
  Character r1 = Character::representable(wa, 1);
  YonedaReport rep = yoneda_correspondence(wa, r1, 0, budget);
  CHECK(rep.ok);
  CHECK(rep.transform_count == 1);
  CHECK(rep.social_count == 1);

  // counts agree over every character on M3 with two values
  OriginalGraph m3 = m3_magma();
  Budget big(4'000'000);
  std::size_t checked = 0;
  enumerate_characters(m3, {2}, big, [&](const Character& F) {
    YonedaReport r = yoneda_correspondence(m3, F, 0, big);
    ++checked;
    CHECK(r.ok);
    return true;
  });
  CHECK(checked == 64);
}

TEST_CASE("edge transform correspondence and isomorphisms") {
  Budget budget;
  OriginalGraph cp = composable_pair();
  YonedaReport rep = edge_transform_correspondence(cp, 0, 1, budget);
  CHECK(rep.ok);
  CHECK(rep.transform_count == 1);

  OriginalGraph wa = walking_arrow();
  // unit loop: self-inverse
  IsoReport unit = iso_check(wa, 0, 0, wa.units.unit(0), budget);
  REQUIRE(unit.inverse.has_value());
  CHECK(*unit.inverse == wa.units.unit(0));
  CHECK(unit.transforms_mutually_inverse);

  // Z/2 generator is its own inverse
  OriginalGraph z2 = z2_category();
  IsoReport gen = iso_check(z2, 0, 0, 1, budget);
  REQUIRE(gen.inverse.has_value());
  CHECK(*gen.inverse == 1);
  CHECK(gen.transforms_mutually_inverse);

  // the walking arrow has no inverse for a
  IsoReport arrow = iso_check(wa, 0, 1, 0, budget);
  CHECK(!arrow.inverse.has_value());
}

TEST_CASE("full faithfulness of the embedding") {
  Budget budget;
  CHECK(fullfaithful_check(walking_arrow(), budget).ok);
  CHECK(fullfaithful_check(z2_category(), budget).ok);
  CHECK(fullfaithful_check(composable_pair(), budget).ok);

  // discrete two-object category
  FiniteGraph d{FiniteSet({"0", "1"})};
  d.set_hom(0, 0, FiniteSet({"id0"}));
  d.set_hom(1, 1, FiniteSet({"id1"}));
  GraphPtr dp = share(std::move(d));
  std::vector<std::vector<std::size_t>> tables(8);
  tables[(0 * 2 + 0) * 2 + 0] = {0};
  tables[(1 * 2 + 1) * 2 + 1] = {0};
  OriginalGraph disc{dp, UnitChoice(dp, {0, 0}),
                     ContactTable(dp, std::move(tables))};
  CHECK(fullfaithful_check(disc, budget).ok);

  // Z/2: both sides have two elements
  YonedaReport rep = edge_transform_correspondence(z2_category(), 0, 0, budget);
  CHECK(rep.transform_count == 2);
  CHECK(rep.social_count == 2);
}

TEST_CASE("first triangle identity with the componentwise contact") {
  for (const auto& X : {walking_arrow(), z2_category()})
    for (const auto& T : {walking_arrow(), z2_category()}) {
      BiproductGraph XT = carte_biproduct(X.graph, T.graph);
      OriginalGraph PO = biproduct_original(XT, X, T);
      ExponentialGraph XT_T = exponential_graph(T.graph, XT.self);
      BiproductGraph P2 = carte_biproduct(XT_T.self, T.graph);
      Transport lam = sections_transport(XT, X.units, T.units, XT_T);
      Transport id_t = Transport::identity(T.graph);
      for (EvalSide side : {EvalSide::pre, EvalSide::post}) {
        Transport ev = evaluation(XT_T, P2, PO.contact, side);
        Transport round = compose_transports(
            biproduct_transport(lam, id_t, XT, P2), ev);
        CHECK(round == Transport::identity(XT.self));
      }
    }
}

TEST_CASE("pre and post evaluation agree on natural transforms") {
  for (const auto& cat : {walking_arrow(), z2_category(), composable_pair()}) {
    GraphPtr T = walking_arrow().graph;
    ExponentialGraph YT = exponential_graph(T, cat.graph);
    BiproductGraph P = carte_biproduct(YT.self, T);
    Transport pre = evaluation(YT, P, cat.contact, EvalSide::pre);
    Transport post = evaluation(YT, P, cat.contact, EvalSide::post);
    for (std::size_t phi = 0; phi < YT.points.size(); ++phi)
      for (std::size_t psi = 0; psi < YT.points.size(); ++psi)
        for (std::size_t e = 0; e < YT.hom_size(phi, psi); ++e) {
          if (!natural_transform_check(YT.decode(phi, psi, e), cat.contact)
                   .ok)
            continue;
          for (std::size_t s = 0; s < T->order(); ++s)
            for (std::size_t t = 0; t < T->order(); ++t)
              for (std::size_t j = 0; j < T->hom(s, t).size(); ++j) {
                const std::size_t pe = P.edge_index(s, t, e, j);
                CHECK(pre.edge_image(P.vertex_index(phi, s),
                                     P.vertex_index(psi, t), pe) ==
                      post.edge_image(P.vertex_index(phi, s),
                                      P.vertex_index(psi, t), pe));
              }
        }
  }
}

TEST_CASE("bijection suite") {
  Budget budget(4'000'000);

  // one object, one loop: both sides are singletons
  OriginalGraph triv = one_object_original(FiniteSet({"1"}), {{0}}, 0);
  BijectionSuiteReport r0 = bijection_suite(triv, triv, triv, budget);
  CHECK(r0.ok);
  CHECK(r0.decomposable_forms == 1);
  CHECK(r0.neutral_natural_names == 1);

  // the walking arrow cubed
  OriginalGraph wa = walking_arrow();
  BijectionSuiteReport r1 = bijection_suite(wa, wa, wa, budget);
  CHECK(r1.ok);
  CHECK(r1.decomposable_forms == r1.neutral_natural_names);
  CHECK(r1.decomposable_forms > 0);
}

TEST_SUITE_END();
