#include "fincat/ordered.hpp"

#include <algorithm>

namespace fincat {

namespace {

std::string edge_str(const FiniteGraph& g, std::size_t a, std::size_t b,
                     std::size_t i) {
  return g.hom(a, b).at(i) + ":" + g.vertices().at(a) + "->" +
         g.vertices().at(b);
}

bool dir_holds(Direction dir, const OrderedGraph& Y, std::size_t a,
               std::size_t b, std::size_t composite, std::size_t direct) {
  return dir == Direction::lower ? Y.edge_leq(a, b, composite, direct)
                                 : Y.edge_leq(a, b, direct, composite);
}

}  // namespace

OrderedGraph make_ordered(GraphPtr g, std::vector<FinitePoset> hom_orders,
                          std::optional<UnitChoice> units,
                          std::optional<ContactTable> contact) {
  const std::size_t n = g->order();
  if (hom_orders.size() != n * n)
    throw Error("ordered graph needs one poset per hom");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (hom_orders[a * n + b].carrier() != g->hom(a, b))
        throw Error("hom order carrier mismatch at " + g->vertices().at(a) +
                    "," + g->vertices().at(b));
  return OrderedGraph{std::move(g), std::move(hom_orders), std::move(units),
                      std::move(contact)};
}

OrderedGraph with_discrete_orders(const OriginalGraph& G) {
  const std::size_t n = G.graph->order();
  std::vector<FinitePoset> orders;
  orders.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      orders.push_back(FinitePoset::discrete(G.graph->hom(a, b)));
  return make_ordered(G.graph, std::move(orders), G.units, G.contact);
}

namespace {

OrderedGraph two_chain(std::size_t unit, bool meet) {
  FiniteGraph g{FiniteSet({"*"})};
  g.set_hom(0, 0, FiniteSet({"o0", "o1"}));
  GraphPtr gp = share(std::move(g));
  std::vector<std::size_t> table(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      table[i * 2 + j] = meet ? std::min(i, j) : std::max(i, j);
  ContactTable contact(gp, {table});
  UnitChoice units(gp, {unit});
  std::vector<FinitePoset> orders{FinitePoset::chain(2, "o")};
  return make_ordered(gp, std::move(orders), units, contact);
}

}  // namespace

OrderedGraph two_chain_meet() { return two_chain(1, true); }
OrderedGraph two_chain_join() { return two_chain(0, false); }

CheckResult contact_monotone_check(const OrderedGraph& Y) {
  CheckResult res;
  if (!Y.contact) {
    res.fail("no contact table");
    return res;
  }
  const FiniteGraph& g = *Y.graph;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      for (std::size_t c = 0; c < g.order(); ++c) {
        const std::size_t nab = g.hom(a, b).size();
        const std::size_t nbc = g.hom(b, c).size();
        for (std::size_t i = 0; i < nab; ++i)
          for (std::size_t ip = 0; ip < nab; ++ip) {
            if (!Y.edge_leq(a, b, i, ip)) continue;
            for (std::size_t j = 0; j < nbc; ++j)
              if (!Y.edge_leq(a, c, Y.contact->compose(a, b, c, i, j),
                              Y.contact->compose(a, b, c, ip, j))) {
                res.fail("left argument at " + edge_str(g, a, b, i) + "<=" +
                         edge_str(g, a, b, ip));
                return res;
              }
          }
        for (std::size_t j = 0; j < nbc; ++j)
          for (std::size_t jp = 0; jp < nbc; ++jp) {
            if (!Y.edge_leq(b, c, j, jp)) continue;
            for (std::size_t i = 0; i < nab; ++i)
              if (!Y.edge_leq(a, c, Y.contact->compose(a, b, c, i, j),
                              Y.contact->compose(a, b, c, i, jp))) {
                res.fail("right argument at " + edge_str(g, b, c, j) + "<=" +
                         edge_str(g, b, c, jp));
                return res;
              }
          }
      }
  return res;
}

bool transport_leq(const Transport& f, const Transport& g,
                   const OrderedGraph& Y) {
  if (f.source() != g.source() || f.target() != g.target() ||
      f.target() != *Y.graph)
    throw Error("transport order: endpoint mismatch");
  if (f.vertex_map() != g.vertex_map())
    throw Error("transport order: transports are not parallel");
  const std::size_t n = f.source().order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t e = 0; e < f.source().hom(a, b).size(); ++e)
        if (!Y.edge_leq(f.vertex_image(a), f.vertex_image(b),
                        f.edge_image(a, b, e), g.edge_image(a, b, e)))
          return false;
  return true;
}

CheckResult monotone_transport_check(const Transport& f, const OrderedGraph& X,
                                     const OrderedGraph& Y) {
  if (f.source() != *X.graph || f.target() != *Y.graph)
    throw Error("monotone transport check: endpoint mismatch");
  CheckResult res;
  const std::size_t n = f.source().order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t k = f.source().hom(a, b).size();
      for (std::size_t e = 0; e < k; ++e)
        for (std::size_t ep = 0; ep < k; ++ep)
          if (X.edge_leq(a, b, e, ep) &&
              !Y.edge_leq(f.vertex_image(a), f.vertex_image(b),
                          f.edge_image(a, b, e), f.edge_image(a, b, ep))) {
            res.fail(edge_str(f.source(), a, b, e) + "<=" +
                     edge_str(f.source(), a, b, ep));
            return res;
          }
    }
  return res;
}

bool deformed_square_holds(const Transform& alpha, const OrderedGraph& Y,
                           DeformSide side) {
  if (!Y.contact) throw Error("deformed square needs a contact table");
  const Transport& phi = alpha.dom;
  const Transport& psi = alpha.cod;
  const FiniteGraph& T = phi.source();
  for (std::size_t s = 0; s < T.order(); ++s)
    for (std::size_t t = 0; t < T.order(); ++t)
      for (std::size_t j = 0; j < T.hom(s, t).size(); ++j) {
        const std::size_t pre = Y.contact->compose(
            phi.vertex_image(s), psi.vertex_image(s), psi.vertex_image(t),
            alpha.comps[s], psi.edge_image(s, t, j));
        const std::size_t post = Y.contact->compose(
            phi.vertex_image(s), phi.vertex_image(t), psi.vertex_image(t),
            phi.edge_image(s, t, j), alpha.comps[t]);
        const bool ok =
            side == DeformSide::continuous
                ? Y.edge_leq(phi.vertex_image(s), psi.vertex_image(t), pre,
                             post)
                : Y.edge_leq(phi.vertex_image(s), psi.vertex_image(t), post,
                             pre);
        if (!ok) return false;
      }
  return true;
}

std::vector<Transform> continuous_transform_set(const ExponentialGraph& YT,
                                                const OrderedGraph& Y,
                                                std::size_t phi,
                                                std::size_t psi,
                                                DeformSide side) {
  std::vector<Transform> out;
  for (std::size_t e = 0; e < YT.hom_size(phi, psi); ++e) {
    Transform tr = YT.decode(phi, psi, e);
    if (deformed_square_holds(tr, Y, side)) out.push_back(std::move(tr));
  }
  return out;
}

CheckResult decomposition_inequality_check(const Transport& f,
                                           const BiproductGraph& XT,
                                           const UnitChoice& uX,
                                           const UnitChoice& uT,
                                           const OrderedGraph& Y,
                                           EvalSide side, Direction dir) {
  if (!Y.contact) throw Error("decomposition inequality needs a contact");
  if (f.source() != XT.graph || f.target() != *Y.graph)
    throw Error("decomposition inequality: shape mismatch");
  const FiniteGraph& X = *XT.left;
  const FiniteGraph& T = *XT.right;
  CheckResult res;
  for (std::size_t a = 0; a < X.order(); ++a)
    for (std::size_t b = 0; b < X.order(); ++b)
      for (std::size_t i = 0; i < X.hom(a, b).size(); ++i)
        for (std::size_t s = 0; s < T.order(); ++s)
          for (std::size_t t = 0; t < T.order(); ++t)
            for (std::size_t j = 0; j < T.hom(s, t).size(); ++j) {
              const std::size_t va = f.vertex_image(XT.vertex_index(a, s));
              const std::size_t vb = f.vertex_image(XT.vertex_index(b, t));
              const std::size_t direct =
                  f.edge_image(XT.vertex_index(a, s), XT.vertex_index(b, t),
                               XT.edge_index(s, t, i, j));
              std::size_t composite;
              if (side == EvalSide::pre) {
                const std::size_t mid = f.vertex_image(XT.vertex_index(b, s));
                composite = Y.contact->compose(
                    va, mid, vb,
                    f.edge_image(XT.vertex_index(a, s), XT.vertex_index(b, s),
                                 XT.edge_index(s, s, i, uT.unit(s))),
                    f.edge_image(XT.vertex_index(b, s), XT.vertex_index(b, t),
                                 XT.edge_index(s, t, uX.unit(b), j)));
              } else {
                const std::size_t mid = f.vertex_image(XT.vertex_index(a, t));
                composite = Y.contact->compose(
                    va, mid, vb,
                    f.edge_image(XT.vertex_index(a, s), XT.vertex_index(a, t),
                                 XT.edge_index(s, t, uX.unit(a), j)),
                    f.edge_image(XT.vertex_index(a, t), XT.vertex_index(b, t),
                                 XT.edge_index(t, t, i, uT.unit(t))));
              }
              if (!dir_holds(dir, Y, va, vb, composite, direct)) {
                res.fail("alpha=" + edge_str(X, a, b, i) +
                         " u=" + edge_str(T, s, t, j));
                return res;
              }
            }
  return res;
}

CheckResult neutrality_inequality_check(const Transport& g,
                                        const BiproductGraph& XT,
                                        const UnitChoice& uX,
                                        const UnitChoice& uT,
                                        const ExponentialGraph& YT,
                                        const OrderedGraph& Y, EvalSide side,
                                        Direction dir) {
  if (!Y.contact) throw Error("neutrality inequality needs a contact");
  if (g.source() != *XT.left || g.target() != YT.graph)
    throw Error("neutrality inequality: shape mismatch");
  const FiniteGraph& X = *XT.left;
  const FiniteGraph& T = *XT.right;
  CheckResult res;
  const Direction upper = dir;
  for (std::size_t a = 0; a < X.order(); ++a) {
    const std::size_t pa = g.vertex_image(a);
    const Transport& A = YT.points[pa];
    Transform unit_tr = YT.decode(pa, pa, g.edge_image(a, a, uX.unit(a)));
    for (std::size_t s = 0; s < T.order(); ++s)
      for (std::size_t t = 0; t < T.order(); ++t)
        for (std::size_t j = 0; j < T.hom(s, t).size(); ++j) {
          const std::size_t au = A.edge_image(s, t, j);
          const std::size_t got =
              side == EvalSide::pre
                  ? Y.contact->compose(A.vertex_image(s), A.vertex_image(s),
                                       A.vertex_image(t), unit_tr.comps[s],
                                       au)
                  : Y.contact->compose(A.vertex_image(s), A.vertex_image(t),
                                       A.vertex_image(t), au,
                                       unit_tr.comps[t]);
          // upper: composite above the plain action
          const bool ok = upper == Direction::upper
                              ? Y.edge_leq(A.vertex_image(s),
                                           A.vertex_image(t), au, got)
                              : Y.edge_leq(A.vertex_image(s),
                                           A.vertex_image(t), got, au);
          if (!ok) {
            res.fail("a=" + X.vertices().at(a) + " u=" + edge_str(T, s, t, j));
            return res;
          }
        }
  }
  for (std::size_t a = 0; a < X.order(); ++a)
    for (std::size_t b = 0; b < X.order(); ++b)
      for (std::size_t i = 0; i < X.hom(a, b).size(); ++i) {
        const std::size_t pa = g.vertex_image(a);
        const std::size_t pb = g.vertex_image(b);
        const Transport& A = YT.points[pa];
        const Transport& B = YT.points[pb];
        Transform tr = YT.decode(pa, pb, g.edge_image(a, b, i));
        for (std::size_t s = 0; s < T.order(); ++s) {
          std::size_t got;
          if (side == EvalSide::pre)
            got = Y.contact->compose(A.vertex_image(s), B.vertex_image(s),
                                     B.vertex_image(s), tr.comps[s],
                                     B.edge_image(s, s, uT.unit(s)));
          else
            got = Y.contact->compose(A.vertex_image(s), A.vertex_image(s),
                                     B.vertex_image(s),
                                     A.edge_image(s, s, uT.unit(s)),
                                     tr.comps[s]);
          const bool ok =
              upper == Direction::upper
                  ? Y.edge_leq(A.vertex_image(s), B.vertex_image(s),
                               tr.comps[s], got)
                  : Y.edge_leq(A.vertex_image(s), B.vertex_image(s), got,
                               tr.comps[s]);
          if (!ok) {
            res.fail("alpha=" + edge_str(X, a, b, i) +
                     " s=" + T.vertices().at(s));
            return res;
          }
        }
      }
  return res;
}

bool name_form_leq(const Transport& g1, const Transport& g2,
                   const ExponentialGraph& YT, const OrderedGraph& Y) {
  if (g1.source() != g2.source() || g1.target() != YT.graph ||
      g2.target() != YT.graph)
    throw Error("name form order: shape mismatch");
  const std::size_t nX = g1.source().order();
  const std::size_t nT = YT.exponent->order();
  // secondary parallel: the projected vertex assignments agree
  for (std::size_t x = 0; x < nX; ++x)
    if (YT.points[g1.vertex_image(x)].vertex_map() !=
        YT.points[g2.vertex_image(x)].vertex_map())
      throw Error("name form order: not secondary-parallel");
  for (std::size_t x = 0; x < nX; ++x) {
    const Transport& A = YT.points[g1.vertex_image(x)];
    const Transport& B = YT.points[g2.vertex_image(x)];
    for (std::size_t s = 0; s < nT; ++s)
      for (std::size_t t = 0; t < nT; ++t)
        for (std::size_t j = 0; j < YT.exponent->hom(s, t).size(); ++j)
          if (!Y.edge_leq(A.vertex_image(s), A.vertex_image(t),
                          A.edge_image(s, t, j), B.edge_image(s, t, j)))
            return false;
  }
  const FiniteGraph& X = g1.source();
  for (std::size_t a = 0; a < nX; ++a)
    for (std::size_t b = 0; b < nX; ++b)
      for (std::size_t i = 0; i < X.hom(a, b).size(); ++i) {
        Transform t1 = YT.decode(g1.vertex_image(a), g1.vertex_image(b),
                                 g1.edge_image(a, b, i));
        Transform t2 = YT.decode(g2.vertex_image(a), g2.vertex_image(b),
                                 g2.edge_image(a, b, i));
        for (std::size_t s = 0; s < nT; ++s)
          if (!Y.edge_leq(t1.dom.vertex_image(s), t1.cod.vertex_image(s),
                          t1.comps[s], t2.comps[s]))
            return false;
      }
  return true;
}

std::vector<std::size_t> social_points_ordered(const OriginalGraph& X,
                                               const OrderedCharacter& F,
                                               std::size_t x, Direction dir) {
  const FiniteGraph& g = *X.graph;
  const Character& chr = F.chr;
  if (chr.base() != g) throw Error("ordered social points: base mismatch");
  std::vector<std::size_t> out;
  const std::size_t n = g.order();
  for (std::size_t m = 0; m < chr.value(x).size(); ++m) {
    if (chr.act(x, x, X.unit(x), m) != m) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t f = 0; f < g.hom(a, x).size() && ok; ++f)
          for (std::size_t h = 0; h < g.hom(b, a).size(); ++h) {
            const std::size_t stepwise = chr.act(b, a, h, chr.act(a, x, f, m));
            const std::size_t direct =
                chr.act(b, x, X.compose(b, a, x, h, f), m);
            const bool holds =
                dir == Direction::lower
                    ? F.value_orders[b].leq(stepwise, direct)
                    : F.value_orders[b].leq(direct, stepwise);
            if (!holds) {
              ok = false;
              break;
            }
          }
    if (ok) out.push_back(m);
  }
  return out;
}

namespace {

// Components of the transform generated by a point: f |-> f^F(m).
std::vector<std::vector<std::size_t>> generated_components(
    const OriginalGraph& X, const Character& F, std::size_t x, std::size_t m) {
  const FiniteGraph& g = *X.graph;
  std::vector<std::vector<std::size_t>> comps(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) {
    comps[a].resize(g.hom(a, x).size());
    for (std::size_t f = 0; f < comps[a].size(); ++f)
      comps[a][f] = F.act(a, x, f, m);
  }
  return comps;
}

// Deformed squares for a transform from the representable at x into F.
bool continuous_char_transform(
    const OriginalGraph& X, const OrderedCharacter& F, std::size_t x,
    const std::vector<std::vector<std::size_t>>& comps) {
  const FiniteGraph& g = *X.graph;
  for (std::size_t b = 0; b < g.order(); ++b)
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t h = 0; h < g.hom(b, a).size(); ++h)
        for (std::size_t f = 0; f < g.hom(a, x).size(); ++f) {
          const std::size_t pre = F.chr.act(b, a, h, comps[a][f]);
          const std::size_t post = comps[b][X.compose(b, a, x, h, f)];
          if (!F.value_orders[b].leq(pre, post)) return false;
        }
  return true;
}

}  // namespace

ContinuousYonedaReport continuous_yoneda_check(const OriginalGraph& X,
                                               const OrderedCharacter& F,
                                               std::size_t x, Budget& budget) {
  ContinuousYonedaReport rep;
  const FiniteGraph& g = *X.graph;
  std::vector<std::size_t> social =
      social_points_ordered(X, F, x, Direction::lower);
  rep.lower_social = social.size();

  // all continuous transforms, by enumeration of component tuples
  std::vector<std::size_t> radices;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t f = 0; f < g.hom(a, x).size(); ++f) {
      radices.push_back(F.chr.value(a).size());
      slots.emplace_back(a, f);
    }
  std::vector<std::vector<std::vector<std::size_t>>> continuous;
  for_each_tuple(radices, budget, [&](const std::vector<std::size_t>& d) {
    std::vector<std::vector<std::size_t>> comps(g.order());
    for (std::size_t a = 0; a < g.order(); ++a)
      comps[a].resize(g.hom(a, x).size());
    for (std::size_t s = 0; s < slots.size(); ++s)
      comps[slots[s].first][slots[s].second] = d[s];
    if (continuous_char_transform(X, F, x, comps))
      continuous.push_back(std::move(comps));
    return true;
  });
  rep.continuous_transforms = continuous.size();

  rep.ok = true;
  std::vector<std::vector<std::vector<std::size_t>>> generated;
  for (std::size_t m : social) {
    auto comps = generated_components(X, F.chr, x, m);
    if (!continuous_char_transform(X, F, x, comps)) {
      rep.ok = false;
      rep.witnesses.push_back("social point " + F.chr.value(x).at(m) +
                              " does not generate a continuous transform");
      continue;
    }
    if (comps[x][X.unit(x)] != m) {
      rep.ok = false;
      rep.witnesses.push_back("round trip moves point " +
                              F.chr.value(x).at(m));
    }
    generated.push_back(std::move(comps));
  }
  rep.generated = generated.size();
  // injectivity comes with the round trip; surjectivity is reported, not
  // required
  std::size_t hit = 0;
  for (const auto& c : continuous)
    if (std::find(generated.begin(), generated.end(), c) != generated.end())
      ++hit;
  rep.surjective = hit == continuous.size() && rep.generated == hit;
  return rep;
}

AdjunctionSuiteReport adjunction_inequality_suite(const OrderedGraph& X,
                                                  const OrderedGraph& T,
                                                  const OrderedGraph& Y,
                                                  Budget& budget) {
  if (!X.units || !T.units) throw Error("adjunction suite needs unit choices");
  if (!Y.contact || !contact_monotone_check(Y).ok)
    throw Error("adjunction suite needs a monotone contact");
  AdjunctionSuiteReport rep;
  rep.ok = true;
  BiproductGraph XT = carte_biproduct(X.graph, T.graph);
  ExponentialGraph YT = exponential_graph(T.graph, Y.graph, &budget);

  std::vector<Transport> forms;
  enumerate_transports(XT.self, Y.graph, budget, [&](const Transport& f) {
    forms.push_back(f);
    return true;
  });
  for (const Transport& f : forms) {
    if (!decomposition_inequality_check(f, XT, *X.units, *T.units, Y,
                                        EvalSide::pre, Direction::lower)
             .ok)
      continue;
    ++rep.eligible_forms;
    Transport g = name_appointment(f, XT, *X.units, *T.units, YT);
    Transport back = realization(g, XT, YT, *Y.contact, EvalSide::pre);
    if (!transport_leq(back, f, Y)) {
      rep.ok = false;
      rep.witnesses.push_back("unit inequality fails on a form");
    }
  }

  std::vector<Transport> names;
  enumerate_transports(X.graph, YT.self, budget, [&](const Transport& t) {
    names.push_back(t);
    return true;
  });
  for (const Transport& g : names) {
    if (!neutrality_inequality_check(g, XT, *X.units, *T.units, YT, Y,
                                     EvalSide::pre, Direction::upper)
             .ok)
      continue;
    ++rep.eligible_names;
    Transport f = realization(g, XT, YT, *Y.contact, EvalSide::pre);
    Transport round = name_appointment(f, XT, *X.units, *T.units, YT);
    if (!name_form_leq(g, round, YT, Y)) {
      rep.ok = false;
      rep.witnesses.push_back("counit inequality fails on a name form");
    }
  }

  // monotonicity of the two appointments
  for (const Transport& f : forms)
    for (const Transport& fp : forms) {
      if (f.vertex_map() != fp.vertex_map()) continue;
      if (!transport_leq(f, fp, Y)) continue;
      ++rep.monotone_name_pairs;
      Transport gf = name_appointment(f, XT, *X.units, *T.units, YT);
      Transport gfp = name_appointment(fp, XT, *X.units, *T.units, YT);
      if (!name_form_leq(gf, gfp, YT, Y)) {
        rep.ok = false;
        rep.witnesses.push_back("name appointment is not monotone");
      }
    }
  for (const Transport& g : names)
    for (const Transport& gp : names) {
      bool leq;
      try {
        leq = name_form_leq(g, gp, YT, Y);
      } catch (const Error&) {
        continue;  // not secondary-parallel
      }
      if (!leq) continue;
      ++rep.monotone_realization_pairs;
      Transport fg = realization(g, XT, YT, *Y.contact, EvalSide::pre);
      Transport fgp = realization(gp, XT, YT, *Y.contact, EvalSide::pre);
      if (!transport_leq(fg, fgp, Y)) {
        rep.ok = false;
        rep.witnesses.push_back("realization appointment is not monotone");
      }
    }
  return rep;
}

RegularBoundReport regular_bound(const Transport& f, const BiproductGraph& XT,
                                 const UnitChoice& uX, const UnitChoice& uT,
                                 const OrderedGraph& Y, EvalSide side,
                                 Budget& budget) {
  if (!Y.contact) throw Error("regular bound needs a contact table");
  RegularBoundReport rep;
  const Direction hyp_dir =
      side == EvalSide::pre ? Direction::upper : Direction::lower;
  rep.hypothesis =
      decomposition_inequality_check(f, XT, uX, uT, Y, side, hyp_dir).ok;
  if (!rep.hypothesis)
    throw Error("regular bound: decomposition hypothesis fails");

  ExponentialGraph YT = exponential_graph(XT.right, Y.graph, &budget);
  auto round = [&](const Transport& h) {
    return realization(name_appointment(h, XT, uX, uT, YT), XT, YT, *Y.contact,
                       side);
  };
  rep.bound = round(f);
  rep.is_bound = side == EvalSide::pre ? transport_leq(f, rep.bound, Y)
                                       : transport_leq(rep.bound, f, Y);
  rep.is_regular = round(rep.bound) == rep.bound;

  // extremality, certified against every parallel regular transport
  rep.extremal = true;
  enumerate_transports(XT.self, Y.graph, budget, [&](const Transport& h) {
    if (h.vertex_map() != f.vertex_map()) return true;
    if (!(round(h) == h)) return true;  // not regular
    if (side == EvalSide::pre) {
      if (transport_leq(f, h, Y) && !transport_leq(rep.bound, h, Y)) {
        rep.extremal = false;
        rep.witnesses.push_back("smaller preregular upper bound: " + h.label());
        return false;
      }
    } else {
      if (transport_leq(h, f, Y) && !transport_leq(h, rep.bound, Y)) {
        rep.extremal = false;
        rep.witnesses.push_back("bigger postregular lower bound: " + h.label());
        return false;
      }
    }
    return true;
  });
  return rep;
}

CheckResult corestriction_check(const Transport& f, const BiproductGraph& XT,
                                const UnitChoice& uX, const UnitChoice& uT,
                                const OrderedGraph& Y) {
  if (!Y.contact) throw Error("corestriction check needs a contact table");
  CheckResult res;
  ExponentialGraph YT = exponential_graph(XT.right, Y.graph);
  Transport g = name_appointment(f, XT, uX, uT, YT);
  const FiniteGraph& X = *XT.left;
  for (std::size_t a = 0; a < X.order(); ++a)
    for (std::size_t b = 0; b < X.order(); ++b)
      for (std::size_t i = 0; i < X.hom(a, b).size(); ++i) {
        Transform tr = YT.decode(g.vertex_image(a), g.vertex_image(b),
                                 g.edge_image(a, b, i));
        // the hypotheses pin the precontact arrow above the postcontact one
        if (!deformed_square_holds(tr, Y, DeformSide::cocontinuous)) {
          res.fail("alpha=" + edge_str(X, a, b, i));
          return res;
        }
      }
  return res;
}

CheckResult continuous_composition_closure(const OrderedGraph& Y, GraphPtr T,
                                           DeformSide side, Budget& budget) {
  if (!Y.contact) throw Error("composition closure needs a contact table");
  if (!contact_monotone_check(Y).ok)
    throw Error("composition closure: contact is not monotone");
  // associativity of the contact
  {
    OriginalGraph check{Y.graph,
                        Y.units ? *Y.units : UnitChoice::first_loops(Y.graph),
                        *Y.contact};
    const FiniteGraph& g = *Y.graph;
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        for (std::size_t c = 0; c < g.order(); ++c)
          for (std::size_t d = 0; d < g.order(); ++d)
            for (std::size_t i = 0; i < g.hom(a, b).size(); ++i)
              for (std::size_t j = 0; j < g.hom(b, c).size(); ++j)
                for (std::size_t k = 0; k < g.hom(c, d).size(); ++k)
                  if (check.compose(a, c, d, check.compose(a, b, c, i, j),
                                    k) !=
                      check.compose(a, b, d, i,
                                    check.compose(b, c, d, j, k)))
                    throw Error("composition closure: contact not associative");
  }
  CheckResult res;
  ExponentialGraph YT = exponential_graph(T, Y.graph, &budget);
  const std::size_t m = YT.points.size();
  for (std::size_t phi = 0; phi < m; ++phi)
    for (std::size_t psi = 0; psi < m; ++psi) {
      auto as = continuous_transform_set(YT, Y, phi, psi, side);
      if (as.empty()) continue;
      for (std::size_t xi = 0; xi < m; ++xi) {
        auto bs = continuous_transform_set(YT, Y, psi, xi, side);
        for (const Transform& al : as)
          for (const Transform& be : bs) {
            budget.charge();
            Transform comp = compose_transforms(al, be, *Y.contact);
            if (!deformed_square_holds(comp, Y, side)) {
              res.fail("composite of " + al.label() + " and " + be.label());
              return res;
            }
          }
      }
    }
  return res;
}

}  // namespace fincat
