#include "fincat/structure.hpp"

#include <algorithm>

namespace fincat {

namespace {

std::string edge_str(const FiniteGraph& g, std::size_t a, std::size_t b,
                     std::size_t i) {
  return g.hom(a, b).at(i) + ":" + g.vertices().at(a) + "->" +
         g.vertices().at(b);
}

}  // namespace

OriginalGraph one_object_original(
    const FiniteSet& elements,
    const std::vector<std::vector<std::size_t>>& table, std::size_t unit) {
  FiniteGraph g{FiniteSet({"*"})};
  g.set_hom(0, 0, elements);
  GraphPtr gp = share(std::move(g));
  const std::size_t k = elements.size();
  std::vector<std::size_t> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = table.at(i).at(j);
  ContactTable contact(gp, {flat});
  UnitChoice units(gp, {unit});
  return OriginalGraph{gp, std::move(units), std::move(contact)};
}

OriginalGraph biproduct_original(const BiproductGraph& XT,
                                 const OriginalGraph& X,
                                 const OriginalGraph& T) {
  if (*X.graph != *XT.left || *T.graph != *XT.right)
    throw Error("biproduct structure does not match the factors");
  const std::size_t n = XT.graph.order();
  std::vector<std::size_t> units(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [x, t] = XT.vertex_split(v);
    units[v] = XT.edge_index(t, t, X.unit(x), T.unit(t));
  }
  std::vector<std::vector<std::size_t>> tables(n * n * n);
  for (std::size_t va = 0; va < n; ++va)
    for (std::size_t vb = 0; vb < n; ++vb)
      for (std::size_t vc = 0; vc < n; ++vc) {
        auto [a, s] = XT.vertex_split(va);
        auto [b, t] = XT.vertex_split(vb);
        auto [c, u] = XT.vertex_split(vc);
        auto& cell = tables[(va * n + vb) * n + vc];
        const std::size_t left = XT.graph.hom(va, vb).size();
        const std::size_t right = XT.graph.hom(vb, vc).size();
        cell.resize(left * right);
        for (std::size_t e = 0; e < left; ++e)
          for (std::size_t f = 0; f < right; ++f) {
            auto [i1, j1] = XT.edge_split(s, t, e);
            auto [i2, j2] = XT.edge_split(t, u, f);
            cell[e * right + f] =
                XT.edge_index(s, u, X.compose(a, b, c, i1, i2),
                              T.compose(s, t, u, j1, j2));
          }
      }
  return OriginalGraph{XT.self, UnitChoice(XT.self, std::move(units)),
                       ContactTable(XT.self, std::move(tables))};
}

CheckResult validate_original(const OriginalGraph& G) {
  const FiniteGraph& g = *G.graph;
  CheckResult res;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      for (std::size_t i = 0; i < g.hom(a, b).size(); ++i) {
        if (G.compose(a, a, b, G.unit(a), i) != i) {
          res.fail("1." + edge_str(g, a, b, i));
          return res;
        }
        if (G.compose(a, b, b, i, G.unit(b)) != i) {
          res.fail(edge_str(g, a, b, i) + ".1");
          return res;
        }
      }
  return res;
}

CheckResult validate_category(const OriginalGraph& G) {
  CheckResult res = validate_original(G);
  if (!res.ok) return res;
  const FiniteGraph& g = *G.graph;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      for (std::size_t c = 0; c < g.order(); ++c)
        for (std::size_t d = 0; d < g.order(); ++d)
          for (std::size_t i = 0; i < g.hom(a, b).size(); ++i)
            for (std::size_t j = 0; j < g.hom(b, c).size(); ++j)
              for (std::size_t k = 0; k < g.hom(c, d).size(); ++k) {
                const std::size_t left =
                    G.compose(a, c, d, G.compose(a, b, c, i, j), k);
                const std::size_t right =
                    G.compose(a, b, d, i, G.compose(b, c, d, j, k));
                if (left != right) {
                  res.fail(edge_str(g, a, b, i) + " " + edge_str(g, b, c, j) +
                           " " + edge_str(g, c, d, k));
                  return res;
                }
              }
  return res;
}

TransportClassification classify_transport(const Transport& f,
                                           const OriginalGraph& X,
                                           const OriginalGraph& Y) {
  if (f.source() != *X.graph || f.target() != *Y.graph)
    throw Error("classify: transport endpoints mismatch");
  TransportClassification out;
  const FiniteGraph& g = *X.graph;
  for (std::size_t a = 0; a < g.order() && out.crude; ++a)
    if (f.edge_image(a, a, X.unit(a)) != Y.unit(f.vertex_image(a))) {
      out.crude = false;
      out.witnesses.push_back("unit at " + g.vertices().at(a));
    }
  for (std::size_t a = 0; a < g.order() && out.natural; ++a)
    for (std::size_t b = 0; b < g.order() && out.natural; ++b)
      for (std::size_t c = 0; c < g.order() && out.natural; ++c)
        for (std::size_t i = 0; i < g.hom(a, b).size() && out.natural; ++i)
          for (std::size_t j = 0; j < g.hom(b, c).size(); ++j) {
            const std::size_t lhs =
                f.edge_image(a, c, X.compose(a, b, c, i, j));
            const std::size_t rhs = Y.compose(
                f.vertex_image(a), f.vertex_image(b), f.vertex_image(c),
                f.edge_image(a, b, i), f.edge_image(b, c, j));
            if (lhs != rhs) {
              out.natural = false;
              out.witnesses.push_back(edge_str(g, a, b, i) + " " +
                                      edge_str(g, b, c, j));
              break;
            }
          }
  return out;
}

CheckResult natural_transform_check(const Transform& alpha,
                                    const ContactTable& contactY) {
  const Transport& phi = alpha.dom;
  const Transport& psi = alpha.cod;
  if (contactY.graph() != phi.target())
    throw Error("natural transform check: contact is not on the target");
  const FiniteGraph& T = phi.source();
  CheckResult res;
  for (std::size_t s = 0; s < T.order(); ++s)
    for (std::size_t t = 0; t < T.order(); ++t)
      for (std::size_t j = 0; j < T.hom(s, t).size(); ++j) {
        const std::size_t pre = contactY.compose(
            phi.vertex_image(s), psi.vertex_image(s), psi.vertex_image(t),
            alpha.comps[s], psi.edge_image(s, t, j));
        const std::size_t post = contactY.compose(
            phi.vertex_image(s), phi.vertex_image(t), psi.vertex_image(t),
            phi.edge_image(s, t, j), alpha.comps[t]);
        if (pre != post) {
          res.fail("u=" + edge_str(T, s, t, j));
          return res;
        }
      }
  return res;
}

Transform identity_transform(const Transport& phi, const UnitChoice& uY) {
  if (uY.graph() != phi.target())
    throw Error("identity transform: unit choice is not on the target");
  std::vector<std::size_t> comps(phi.source().order());
  for (std::size_t t = 0; t < comps.size(); ++t)
    comps[t] = uY.unit(phi.vertex_image(t));
  return Transform{phi, phi, std::move(comps)};
}

Transform compose_transforms(const Transform& alpha, const Transform& beta,
                             const ContactTable& contactY) {
  if (!(alpha.cod == beta.dom))
    throw Error("transform composition mismatch");
  const std::size_t n = alpha.comps.size();
  std::vector<std::size_t> comps(n);
  for (std::size_t s = 0; s < n; ++s)
    comps[s] = contactY.compose(alpha.dom.vertex_image(s),
                                alpha.cod.vertex_image(s),
                                beta.cod.vertex_image(s), alpha.comps[s],
                                beta.comps[s]);
  return Transform{alpha.dom, beta.cod, std::move(comps)};
}

NaturalExponential natural_exponential(GraphPtr T, const OriginalGraph& Y,
                                       Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  ExponentialGraph full = exponential_graph(T, Y.graph, &b);
  NaturalExponential out;
  out.exponent = T;
  out.base = Y.graph;
  out.points = full.points;
  const std::size_t m = full.points.size();
  out.transforms.resize(m * m);
  FiniteGraph g{full.graph.vertices()};
  for (std::size_t phi = 0; phi < m; ++phi)
    for (std::size_t psi = 0; psi < m; ++psi) {
      std::vector<std::string> edges;
      auto& kept = out.transforms[phi * m + psi];
      const std::size_t k = full.hom_size(phi, psi);
      for (std::size_t e = 0; e < k; ++e) {
        b.charge();
        Transform tr = full.decode(phi, psi, e);
        if (natural_transform_check(tr, Y.contact).ok) {
          edges.push_back(full.graph.hom(phi, psi).at(e));
          kept.push_back(tr.comps);
        }
      }
      g.set_hom(phi, psi, FiniteSet(std::move(edges)));
    }
  out.graph = std::move(g);
  out.self = share(out.graph);
  return out;
}

Character::Character(GraphPtr base, std::vector<FiniteSet> values,
                     std::vector<std::vector<std::vector<std::size_t>>> actions)
    : base_(std::move(base)),
      values_(std::move(values)),
      actions_(std::move(actions)) {
  const std::size_t n = base_->order();
  if (values_.size() != n) throw Error("character needs a value set per vertex");
  if (actions_.size() != n * n) throw Error("character actions have wrong shape");
  for (std::size_t bb = 0; bb < n; ++bb)
    for (std::size_t a = 0; a < n; ++a) {
      const auto& per_edge = actions_[bb * n + a];
      if (per_edge.size() != base_->hom(bb, a).size())
        throw Error("character action missing for an edge");
      for (const auto& fn : per_edge) {
        if (fn.size() != values_[a].size())
          throw Error("character action not total");
        for (auto v : fn)
          if (v >= values_[bb].size())
            throw Error("character action lands outside the value set");
      }
    }
}

Character Character::representable(const OriginalGraph& X, std::size_t x) {
  const FiniteGraph& g = *X.graph;
  if (x >= g.order()) throw Error("representable: unknown vertex");
  const std::size_t n = g.order();
  std::vector<FiniteSet> values(n);
  for (std::size_t a = 0; a < n; ++a) values[a] = g.hom(a, x);
  std::vector<std::vector<std::vector<std::size_t>>> actions(n * n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      auto& per_edge = actions[b * n + a];
      per_edge.resize(g.hom(b, a).size());
      for (std::size_t h = 0; h < per_edge.size(); ++h) {
        auto& fn = per_edge[h];
        fn.resize(g.hom(a, x).size());
        for (std::size_t f = 0; f < fn.size(); ++f)
          fn[f] = X.compose(b, a, x, h, f);
      }
    }
  return Character(X.graph, std::move(values), std::move(actions));
}

std::size_t Character::act(std::size_t b, std::size_t a, std::size_t i,
                           std::size_t m) const {
  return actions_.at(b * base_->order() + a).at(i).at(m);
}

bool Character::functorial(const OriginalGraph& X) const {
  const FiniteGraph& g = *base_;
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t m = 0; m < values_[a].size(); ++m)
      if (act(a, a, X.unit(a), m) != m) return false;
  // h in X(b;a), f in X(a;c): action composition against contact
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t h = 0; h < g.hom(b, a).size(); ++h)
          for (std::size_t f = 0; f < g.hom(a, c).size(); ++f)
            for (std::size_t m = 0; m < values_[c].size(); ++m)
              if (act(b, a, h, act(a, c, f, m)) !=
                  act(b, c, X.compose(b, a, c, h, f), m))
                return false;
  return true;
}

bool char_transform_natural(const Character& F, const Character& G,
                            const CharTransform& t) {
  const FiniteGraph& g = F.base();
  const std::size_t n = g.order();
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t h = 0; h < g.hom(b, a).size(); ++h)
        for (std::size_t m = 0; m < F.value(a).size(); ++m)
          if (G.act(b, a, h, t.comps[a][m]) != t.comps[b][F.act(b, a, h, m)])
            return false;
  return true;
}

std::vector<CharTransform> natural_char_transforms(const Character& F,
                                                   const Character& G,
                                                   Budget& budget) {
  const std::size_t n = F.base().order();
  // flatten component slots: per vertex a, per point of F0(a), a value in G0(a)
  std::vector<std::size_t> radices;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t m = 0; m < F.value(a).size(); ++m) {
      radices.push_back(G.value(a).size());
      slots.emplace_back(a, m);
    }
  std::vector<CharTransform> out;
  for_each_tuple(radices, budget, [&](const std::vector<std::size_t>& digits) {
    CharTransform t;
    t.comps.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      t.comps[a].resize(F.value(a).size());
    for (std::size_t s = 0; s < slots.size(); ++s)
      t.comps[slots[s].first][slots[s].second] = digits[s];
    if (char_transform_natural(F, G, t)) out.push_back(std::move(t));
    return true;
  });
  return out;
}

std::vector<std::size_t> social_points(const OriginalGraph& X,
                                       const Character& F, std::size_t x) {
  const FiniteGraph& g = *X.graph;
  if (F.base() != g) throw Error("social points: character base mismatch");
  if (x >= g.order()) throw Error("social points: unknown vertex");
  std::vector<std::size_t> out;
  const std::size_t n = g.order();
  for (std::size_t m = 0; m < F.value(x).size(); ++m) {
    // the chosen unit must fix the point; composites may then be chased
    if (F.act(x, x, X.unit(x), m) != m) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t f = 0; f < g.hom(a, x).size() && ok; ++f)
          for (std::size_t h = 0; h < g.hom(b, a).size(); ++h) {
            const std::size_t stepwise = F.act(b, a, h, F.act(a, x, f, m));
            const std::size_t direct =
                F.act(b, x, X.compose(b, a, x, h, f), m);
            if (stepwise != direct) {
              ok = false;
              break;
            }
          }
    if (ok) out.push_back(m);
  }
  return out;
}

namespace {

CharTransform transform_from_point(const OriginalGraph& X, const Character& F,
                                   std::size_t x, std::size_t m) {
  const FiniteGraph& g = *X.graph;
  const std::size_t n = g.order();
  CharTransform t;
  t.comps.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.comps[a].resize(g.hom(a, x).size());
    for (std::size_t f = 0; f < g.hom(a, x).size(); ++f)
      t.comps[a][f] = F.act(a, x, f, m);
  }
  return t;
}

}  // namespace

YonedaReport yoneda_correspondence(const OriginalGraph& X, const Character& F,
                                   std::size_t x, Budget& budget) {
  YonedaReport rep;
  Character R = Character::representable(X, x);
  std::vector<std::size_t> social = social_points(X, F, x);
  std::vector<CharTransform> nat = natural_char_transforms(R, F, budget);
  rep.social_count = social.size();
  rep.transform_count = nat.size();
  rep.ok = social.size() == nat.size();

  // point -> transform -> point must close, and the generated transform
  // must be natural
  for (std::size_t m : social) {
    CharTransform t = transform_from_point(X, F, x, m);
    if (!char_transform_natural(R, F, t)) {
      rep.ok = false;
      rep.witnesses.push_back("point " + F.value(x).at(m) +
                              " generates a non-natural transform");
    }
    if (t.comps[x][X.unit(x)] != m) {
      rep.ok = false;
      rep.witnesses.push_back("round trip moved point " + F.value(x).at(m));
    }
  }
  // transform -> point -> transform must reproduce the transform, onto a
  // social point
  for (const CharTransform& t : nat) {
    const std::size_t m = t.comps[x][X.unit(x)];
    if (std::find(social.begin(), social.end(), m) == social.end()) {
      rep.ok = false;
      rep.witnesses.push_back("transform lands on a non-social point " +
                              F.value(x).at(m));
      continue;
    }
    if (!(transform_from_point(X, F, x, m) == t)) {
      rep.ok = false;
      rep.witnesses.push_back("transform is not regenerated by its point " +
                              F.value(x).at(m));
    }
  }
  return rep;
}

YonedaReport edge_transform_correspondence(const OriginalGraph& X,
                                           std::size_t x, std::size_t y,
                                           Budget& budget) {
  Character Ry = Character::representable(X, y);
  YonedaReport rep = yoneda_correspondence(X, Ry, x, budget);
  // composition law: the composite of generated transforms picks out the
  // contact arrow theta . kappa
  const FiniteGraph& g = *X.graph;
  for (std::size_t z = 0; z < g.order(); ++z) {
    Character Rz = Character::representable(X, z);
    for (std::size_t theta : social_points(X, Ry, x))
      for (std::size_t kappa : social_points(X, Rz, y)) {
        CharTransform a = transform_from_point(X, Ry, x, theta);
        CharTransform b = transform_from_point(X, Rz, y, kappa);
        // componentwise composite, then its point
        const std::size_t point = b.comps[y][a.comps[x][X.unit(x)]];
        if (point != X.compose(x, y, z, theta, kappa)) {
          rep.ok = false;
          rep.witnesses.push_back("composition law fails at " +
                                  g.hom(x, y).at(theta) + "," +
                                  g.hom(y, z).at(kappa));
        }
      }
  }
  return rep;
}

IsoReport iso_check(const OriginalGraph& X, std::size_t x, std::size_t y,
                    std::size_t theta, Budget& budget) {
  const FiniteGraph& g = *X.graph;
  IsoReport rep;
  for (std::size_t inv = 0; inv < g.hom(y, x).size(); ++inv) {
    budget.charge();
    if (X.compose(x, y, x, theta, inv) == X.unit(x) &&
        X.compose(y, x, y, inv, theta) == X.unit(y)) {
      rep.inverse = inv;
      break;
    }
  }
  if (!rep.inverse) return rep;
  // induced transforms X(-;x) <=> X(-;y) must cancel on every component
  Character Ry = Character::representable(X, y);
  Character Rx = Character::representable(X, x);
  CharTransform fwd = transform_from_point(X, Ry, x, theta);
  CharTransform bwd = transform_from_point(X, Rx, y, *rep.inverse);
  rep.transforms_mutually_inverse = true;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t f = 0; f < g.hom(a, x).size(); ++f)
      if (bwd.comps[a][fwd.comps[a][f]] != f)
        rep.transforms_mutually_inverse = false;
    for (std::size_t f = 0; f < g.hom(a, y).size(); ++f)
      if (fwd.comps[a][bwd.comps[a][f]] != f)
        rep.transforms_mutually_inverse = false;
  }
  return rep;
}

CheckResult fullfaithful_check(const OriginalGraph& X, Budget& budget) {
  CheckResult res;
  const FiniteGraph& g = *X.graph;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      YonedaReport rep = edge_transform_correspondence(X, a, b, budget);
      if (!rep.ok || rep.transform_count != g.hom(a, b).size() ||
          rep.social_count != g.hom(a, b).size()) {
        res.fail("hom " + g.vertices().at(a) + "," + g.vertices().at(b) +
                 ": |hom|=" + std::to_string(g.hom(a, b).size()) +
                 " |nat|=" + std::to_string(rep.transform_count));
        return res;
      }
    }
  return res;
}

BijectionSuiteReport bijection_suite(const OriginalGraph& X,
                                     const OriginalGraph& T,
                                     const OriginalGraph& Y, Budget& budget) {
  BijectionSuiteReport rep;
  rep.ok = true;
  BiproductGraph XT = carte_biproduct(X.graph, T.graph);
  ExponentialGraph YT = exponential_graph(T.graph, Y.graph, &budget);

  std::vector<Transport> forms;   // decomposable on both sides
  std::vector<std::string> names_of_forms;
  enumerate_transports(XT.self, Y.graph, budget, [&](const Transport& f) {
    if (decomposability_check(f, XT, X.units, T.units, Y.contact,
                              EvalSide::pre)
            .ok &&
        decomposability_check(f, XT, X.units, T.units, Y.contact,
                              EvalSide::post)
            .ok)
      forms.push_back(f);
    return true;
  });

  for (const Transport& f : forms) {
    Transport g = name_appointment(f, XT, X.units, T.units, YT);
    names_of_forms.push_back(g.label());
    // the name must corestrict into the natural exponential
    const FiniteGraph& Xg = *X.graph;
    for (std::size_t a = 0; a < Xg.order(); ++a)
      for (std::size_t b = 0; b < Xg.order(); ++b)
        for (std::size_t i = 0; i < Xg.hom(a, b).size(); ++i) {
          Transform tr = YT.decode(g.vertex_image(a), g.vertex_image(b),
                                   g.edge_image(a, b, i));
          if (!natural_transform_check(tr, Y.contact).ok) {
            rep.ok = false;
            rep.witnesses.push_back("name of a decomposable form not natural");
          }
        }
    if (!neutrality_check(g, XT, X.units, T.units, YT, Y.contact,
                          EvalSide::pre)
             .ok ||
        !neutrality_check(g, XT, X.units, T.units, YT, Y.contact,
                          EvalSide::post)
             .ok) {
      rep.ok = false;
      rep.witnesses.push_back("name of a decomposable form not neutral");
    }
    Transport back_pre = realization(g, XT, YT, Y.contact, EvalSide::pre);
    Transport back_post = realization(g, XT, YT, Y.contact, EvalSide::post);
    if (!(back_pre == f) || !(back_post == f)) {
      rep.ok = false;
      rep.witnesses.push_back("realization does not reverse the name");
    }
  }
  rep.decomposable_forms = forms.size();

  // name forms: neutral on both sides and corestricted into the natural
  // exponential
  std::size_t matched = 0;
  enumerate_transports(X.graph, YT.self, budget, [&](const Transport& g) {
    if (!neutrality_check(g, XT, X.units, T.units, YT, Y.contact,
                          EvalSide::pre)
             .ok ||
        !neutrality_check(g, XT, X.units, T.units, YT, Y.contact,
                          EvalSide::post)
             .ok)
      return true;
    const FiniteGraph& Xg = *X.graph;
    for (std::size_t a = 0; a < Xg.order(); ++a)
      for (std::size_t b = 0; b < Xg.order(); ++b)
        for (std::size_t i = 0; i < Xg.hom(a, b).size(); ++i) {
          Transform tr = YT.decode(g.vertex_image(a), g.vertex_image(b),
                                   g.edge_image(a, b, i));
          if (!natural_transform_check(tr, Y.contact).ok) return true;
        }
    ++rep.neutral_natural_names;
    Transport f_pre = realization(g, XT, YT, Y.contact, EvalSide::pre);
    Transport f_post = realization(g, XT, YT, Y.contact, EvalSide::post);
    if (!(f_pre == f_post)) {
      rep.ok = false;
      rep.witnesses.push_back("pre and post realizations differ on " +
                              g.label());
      return true;
    }
    if (!(name_appointment(f_pre, XT, X.units, T.units, YT) == g)) {
      rep.ok = false;
      rep.witnesses.push_back("name does not reverse the realization of " +
                              g.label());
      return true;
    }
    if (std::find(names_of_forms.begin(), names_of_forms.end(), g.label()) !=
        names_of_forms.end())
      ++matched;
    return true;
  });

  if (rep.neutral_natural_names != rep.decomposable_forms ||
      matched != rep.decomposable_forms) {
    rep.ok = false;
    rep.witnesses.push_back(
        "restricted name appointment is not a bijection: forms=" +
        std::to_string(rep.decomposable_forms) +
        " names=" + std::to_string(rep.neutral_natural_names) +
        " matched=" + std::to_string(matched));
  }
  return rep;
}

}  // namespace fincat
