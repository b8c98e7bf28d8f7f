#include "fincat/graphs.hpp"

#include <algorithm>

namespace fincat {

namespace {

std::string edge_str(const FiniteGraph& g, std::size_t a, std::size_t b,
                     std::size_t i) {
  return g.hom(a, b).at(i) + ":" + g.vertices().at(a) + "->" +
         g.vertices().at(b);
}

}  // namespace

FiniteGraph::FiniteGraph(FiniteSet vertices)
    : vertices_(std::move(vertices)),
      homs_(vertices_.size() * vertices_.size()) {}

FiniteGraph::FiniteGraph(FiniteSet vertices, std::vector<FiniteSet> homs)
    : vertices_(std::move(vertices)), homs_(std::move(homs)) {
  if (homs_.size() != vertices_.size() * vertices_.size())
    throw Error("graph hom table has wrong shape");
}

void FiniteGraph::set_hom(std::size_t a, std::size_t b, FiniteSet edges) {
  homs_.at(a * vertices_.size() + b) = std::move(edges);
}

std::size_t FiniteGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& h : homs_) n += h.size();
  return n;
}

Transport::Transport(GraphPtr source, GraphPtr target,
                     std::vector<std::size_t> vmap,
                     std::vector<std::vector<std::size_t>> emaps)
    : source_(std::move(source)),
      target_(std::move(target)),
      vmap_(std::move(vmap)),
      emaps_(std::move(emaps)) {
  const std::size_t n = source_->order();
  if (vmap_.size() != n) throw Error("transport vertex map has wrong size");
  for (auto v : vmap_)
    if (v >= target_->order())
      throw Error("transport vertex image out of range");
  if (emaps_.size() != n * n)
    throw Error("transport edge maps have wrong shape");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& em = emaps_[a * n + b];
      if (em.size() != source_->hom(a, b).size())
        throw Error("transport edge map not total on hom " +
                    source_->vertices().at(a) + "," +
                    source_->vertices().at(b));
      const std::size_t cod = target_->hom(vmap_[a], vmap_[b]).size();
      for (auto e : em)
        if (e >= cod) throw Error("transport edge image out of range");
    }
}

Transport Transport::identity(GraphPtr g) {
  const std::size_t n = g->order();
  std::vector<std::size_t> vmap(n);
  for (std::size_t i = 0; i < n; ++i) vmap[i] = i;
  std::vector<std::vector<std::size_t>> emaps(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto& em = emaps[a * n + b];
      em.resize(g->hom(a, b).size());
      for (std::size_t i = 0; i < em.size(); ++i) em[i] = i;
    }
  return Transport(g, g, std::move(vmap), std::move(emaps));
}

std::string Transport::label() const {
  std::vector<std::string> vparts;
  vparts.reserve(vmap_.size());
  for (auto v : vmap_) vparts.push_back(target_->vertices().at(v));
  std::vector<std::string> eparts;
  const std::size_t n = source_->order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::string> cell;
      for (auto e : emaps_[a * n + b])
        cell.push_back(target_->hom(vmap_[a], vmap_[b]).at(e));
      eparts.push_back(encode_tuple(cell));
    }
  return encode_tuple({encode_tuple(vparts), encode_tuple(eparts)});
}

bool Transport::operator==(const Transport& o) const {
  return *source_ == *o.source_ && *target_ == *o.target_ &&
         vmap_ == o.vmap_ && emaps_ == o.emaps_;
}

Transport compose_transports(const Transport& f, const Transport& g) {
  if (f.target() != g.source()) throw Error("transport composition mismatch");
  const std::size_t n = f.source().order();
  std::vector<std::size_t> vmap(n);
  for (std::size_t i = 0; i < n; ++i)
    vmap[i] = g.vertex_image(f.vertex_image(i));
  std::vector<std::vector<std::size_t>> emaps(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t k = f.source().hom(a, b).size();
      auto& em = emaps[a * n + b];
      em.resize(k);
      for (std::size_t i = 0; i < k; ++i)
        em[i] = g.edge_image(f.vertex_image(a), f.vertex_image(b),
                             f.edge_image(a, b, i));
    }
  return Transport(f.source_ptr(), g.target_ptr(), std::move(vmap),
                   std::move(emaps));
}

std::string Transform::label() const {
  std::vector<std::string> parts;
  parts.reserve(comps.size());
  for (std::size_t t = 0; t < comps.size(); ++t)
    parts.push_back(cod.target()
                        .hom(dom.vertex_image(t), cod.vertex_image(t))
                        .at(comps[t]));
  return encode_tuple(parts);
}

UnitChoice::UnitChoice(GraphPtr g, std::vector<std::size_t> unit_edges)
    : graph_(std::move(g)), units_(std::move(unit_edges)) {
  if (units_.size() != graph_->order())
    throw Error("unit choice must cover every vertex");
  for (std::size_t v = 0; v < units_.size(); ++v)
    if (units_[v] >= graph_->hom(v, v).size())
      throw Error("chosen unit is not a loop at " + graph_->vertices().at(v));
}

UnitChoice UnitChoice::first_loops(GraphPtr g) {
  for (std::size_t v = 0; v < g->order(); ++v)
    if (g->hom(v, v).empty())
      throw Error("vertex " + g->vertices().at(v) +
                  " has no loop to use as unit");
  std::vector<std::size_t> units(g->order(), 0);
  return UnitChoice(std::move(g), std::move(units));
}

ContactTable::ContactTable(GraphPtr g,
                           std::vector<std::vector<std::size_t>> tables)
    : graph_(std::move(g)), tables_(std::move(tables)) {
  const std::size_t n = graph_->order();
  if (tables_.size() != n * n * n)
    throw Error("contact table has wrong shape");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& t = tables_[(a * n + b) * n + c];
        const std::size_t want =
            graph_->hom(a, b).size() * graph_->hom(b, c).size();
        if (t.size() != want) throw Error("contact table cell has wrong size");
        for (auto e : t)
          if (e >= graph_->hom(a, c).size())
            throw Error("contact result outside hom set");
      }
}

std::size_t ContactTable::compose(std::size_t a, std::size_t b, std::size_t c,
                                  std::size_t i, std::size_t j) const {
  const std::size_t n = graph_->order();
  return tables_.at((a * n + b) * n + c).at(i * graph_->hom(b, c).size() + j);
}

std::vector<std::size_t>& ContactTable::table(std::size_t a, std::size_t b,
                                              std::size_t c) {
  const std::size_t n = graph_->order();
  return tables_.at((a * n + b) * n + c);
}

const std::vector<std::size_t>& ContactTable::table(std::size_t a,
                                                    std::size_t b,
                                                    std::size_t c) const {
  const std::size_t n = graph_->order();
  return tables_.at((a * n + b) * n + c);
}

BiproductGraph carte_biproduct(const FiniteGraph& X, const FiniteGraph& Y) {
  return carte_biproduct(share(X), share(Y));
}

BiproductGraph carte_biproduct(GraphPtr X, GraphPtr Y) {
  BiproductGraph out;
  out.left = std::move(X);
  out.right = std::move(Y);
  const FiniteGraph& L = *out.left;
  const FiniteGraph& R = *out.right;
  std::vector<std::string> vnames;
  vnames.reserve(L.order() * R.order());
  for (std::size_t x = 0; x < L.order(); ++x)
    for (std::size_t y = 0; y < R.order(); ++y)
      vnames.push_back(encode_pair(L.vertices().at(x), R.vertices().at(y)));
  FiniteGraph g{FiniteSet(std::move(vnames))};
  for (std::size_t x = 0; x < L.order(); ++x)
    for (std::size_t y = 0; y < R.order(); ++y)
      for (std::size_t xp = 0; xp < L.order(); ++xp)
        for (std::size_t yp = 0; yp < R.order(); ++yp) {
          std::vector<std::string> edges;
          for (std::size_t i = 0; i < L.hom(x, xp).size(); ++i)
            for (std::size_t j = 0; j < R.hom(y, yp).size(); ++j)
              edges.push_back(
                  encode_pair(L.hom(x, xp).at(i), R.hom(y, yp).at(j)));
          g.set_hom(x * R.order() + y, xp * R.order() + yp,
                    FiniteSet(std::move(edges)));
        }
  out.graph = std::move(g);
  out.self = share(out.graph);
  return out;
}

Transport biproduct_transport(const Transport& f, const Transport& g,
                              const BiproductGraph& src,
                              const BiproductGraph& dst) {
  if (f.source() != *src.left || g.source() != *src.right ||
      f.target() != *dst.left || g.target() != *dst.right)
    throw Error("biproduct transport shape mismatch");
  const std::size_t n = src.graph.order();
  std::vector<std::size_t> vmap(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [x, y] = src.vertex_split(v);
    vmap[v] = dst.vertex_index(f.vertex_image(x), g.vertex_image(y));
  }
  std::vector<std::vector<std::size_t>> emaps(n * n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      auto [x, y] = src.vertex_split(v);
      auto [xp, yp] = src.vertex_split(w);
      const std::size_t k = src.graph.hom(v, w).size();
      auto& em = emaps[v * n + w];
      em.resize(k);
      for (std::size_t e = 0; e < k; ++e) {
        auto [i, j] = src.edge_split(y, yp, e);
        em[e] = dst.edge_index(g.vertex_image(y), g.vertex_image(yp),
                               f.edge_image(x, xp, i), g.edge_image(y, yp, j));
      }
    }
  return Transport(src.self, dst.self, std::move(vmap), std::move(emaps));
}

void enumerate_transports(GraphPtr T, GraphPtr Y, Budget& budget,
                          const std::function<bool(const Transport&)>& fn) {
  const std::size_t n = T->order();
  const std::size_t m = Y->order();
  if (n > 0 && m == 0) return;
  std::vector<std::size_t> vdigits(n, 0);
  const std::vector<std::size_t> vradices(n, m);
  bool more = true;
  while (more) {
    budget.charge();
    std::vector<std::size_t> radices;
    bool feasible = true;
    for (std::size_t a = 0; a < n && feasible; ++a)
      for (std::size_t b = 0; b < n && feasible; ++b) {
        const std::size_t k = T->hom(a, b).size();
        const std::size_t r = Y->hom(vdigits[a], vdigits[b]).size();
        if (k > 0 && r == 0) feasible = false;
        for (std::size_t i = 0; i < k; ++i) radices.push_back(r);
      }
    if (feasible) {
      std::vector<std::size_t> edigits(radices.size(), 0);
      bool emore = true;
      while (emore) {
        budget.charge();
        std::vector<std::vector<std::size_t>> emaps(n * n);
        std::size_t slot = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const std::size_t k = T->hom(a, b).size();
            auto& em = emaps[a * n + b];
            em.assign(edigits.begin() + slot, edigits.begin() + slot + k);
            slot += k;
          }
        if (!fn(Transport(T, Y, vdigits, std::move(emaps)))) return;
        emore = !radices.empty() && next_tuple(edigits, radices);
      }
    }
    more = n > 0 && next_tuple(vdigits, vradices);
  }
}

ExponentialGraph exponential_graph(GraphPtr T, GraphPtr Y, Budget* budget) {
  Budget local;
  Budget& b = budget ? *budget : local;
  ExponentialGraph out;
  out.exponent = T;
  out.base = Y;
  enumerate_transports(T, Y, b, [&](const Transport& t) {
    out.points.push_back(t);
    return true;
  });
  const std::size_t m = out.points.size();
  std::vector<std::string> vnames;
  vnames.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    vnames.push_back(out.points[i].label());
    out.by_label_.emplace(vnames.back(), i);
  }
  FiniteGraph g{FiniteSet(std::move(vnames))};
  const std::size_t nT = T->order();
  for (std::size_t phi = 0; phi < m; ++phi)
    for (std::size_t psi = 0; psi < m; ++psi) {
      std::vector<std::size_t> radices(nT);
      for (std::size_t t = 0; t < nT; ++t)
        radices[t] = Y->hom(out.points[phi].vertex_image(t),
                            out.points[psi].vertex_image(t))
                         .size();
      std::vector<std::string> edges;
      if (!tuple_space_empty(radices)) {
        std::vector<std::size_t> digits(nT, 0);
        do {
          b.charge();
          std::vector<std::string> parts(nT);
          for (std::size_t t = 0; t < nT; ++t)
            parts[t] = Y->hom(out.points[phi].vertex_image(t),
                              out.points[psi].vertex_image(t))
                           .at(digits[t]);
          edges.push_back(encode_tuple(parts));
        } while (nT > 0 && next_tuple(digits, radices));
      }
      g.set_hom(phi, psi, FiniteSet(std::move(edges)));
    }
  out.graph = std::move(g);
  out.self = share(out.graph);
  return out;
}

std::size_t ExponentialGraph::index_of(const Transport& t) const {
  auto found = find(t);
  if (!found) throw Error("transport is not a point of this exponential");
  return *found;
}

std::optional<std::size_t> ExponentialGraph::find(const Transport& t) const {
  auto it = by_label_.find(t.label());
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

Transform ExponentialGraph::decode(std::size_t phi, std::size_t psi,
                                   std::size_t e) const {
  const std::size_t nT = exponent->order();
  std::vector<std::size_t> comps(nT);
  for (std::size_t t = nT; t-- > 0;) {
    const std::size_t r = base->hom(points[phi].vertex_image(t),
                                    points[psi].vertex_image(t))
                              .size();
    comps[t] = e % r;
    e /= r;
  }
  return Transform{points[phi], points[psi], std::move(comps)};
}

std::size_t ExponentialGraph::encode(
    std::size_t phi, std::size_t psi,
    const std::vector<std::size_t>& comps) const {
  const std::size_t nT = exponent->order();
  std::size_t e = 0;
  for (std::size_t t = 0; t < nT; ++t) {
    const std::size_t r = base->hom(points[phi].vertex_image(t),
                                    points[psi].vertex_image(t))
                              .size();
    e = e * r + comps[t];
  }
  return e;
}

void enumerate_transforms(const Transport& phi, const Transport& psi,
                          Budget& budget,
                          const std::function<bool(const Transform&)>& fn) {
  if (phi.source() != psi.source() || phi.target() != psi.target())
    throw Error("transforms require parallel transports");
  const std::size_t nT = phi.source().order();
  std::vector<std::size_t> radices(nT);
  for (std::size_t t = 0; t < nT; ++t)
    radices[t] =
        phi.target().hom(phi.vertex_image(t), psi.vertex_image(t)).size();
  for_each_tuple(radices, budget, [&](const std::vector<std::size_t>& comps) {
    return fn(Transform{phi, psi, comps});
  });
}

Transport target_change(const Transport& g, const ExponentialGraph& YT,
                        const ExponentialGraph& YpT) {
  if (g.source() != *YT.base || g.target() != *YpT.base)
    throw Error("target change endpoint mismatch");
  if (*YT.exponent != *YpT.exponent)
    throw Error("target change exponent mismatch");
  const std::size_t m = YT.points.size();
  std::vector<std::size_t> vmap(m);
  for (std::size_t i = 0; i < m; ++i)
    vmap[i] = YpT.index_of(compose_transports(YT.points[i], g));
  const std::size_t nT = YT.exponent->order();
  std::vector<std::vector<std::size_t>> emaps(m * m);
  for (std::size_t phi = 0; phi < m; ++phi)
    for (std::size_t psi = 0; psi < m; ++psi) {
      const std::size_t k = YT.hom_size(phi, psi);
      auto& em = emaps[phi * m + psi];
      em.resize(k);
      for (std::size_t e = 0; e < k; ++e) {
        Transform tr = YT.decode(phi, psi, e);
        std::vector<std::size_t> comps(nT);
        for (std::size_t t = 0; t < nT; ++t)
          comps[t] = g.edge_image(YT.points[phi].vertex_image(t),
                                  YT.points[psi].vertex_image(t), tr.comps[t]);
        em[e] = YpT.encode(vmap[phi], vmap[psi], comps);
      }
    }
  return Transport(YT.self, YpT.self, std::move(vmap), std::move(emaps));
}

Transport sections_transport(const BiproductGraph& XT, const UnitChoice& uX,
                             const UnitChoice& uT,
                             const ExponentialGraph& XT_T) {
  const FiniteGraph& X = *XT.left;
  const FiniteGraph& T = *XT.right;
  if (uX.graph() != X || uT.graph() != T)
    throw Error("sections transport: unit choices do not match the factors");
  if (*XT_T.exponent != T || *XT_T.base != XT.graph)
    throw Error("sections transport: exponential mismatch");
  const std::size_t nX = X.order();
  const std::size_t nT = T.order();

  std::vector<std::size_t> vmap(nX);
  for (std::size_t x = 0; x < nX; ++x) {
    std::vector<std::size_t> svmap(nT);
    for (std::size_t t = 0; t < nT; ++t) svmap[t] = XT.vertex_index(x, t);
    std::vector<std::vector<std::size_t>> semaps(nT * nT);
    for (std::size_t s = 0; s < nT; ++s)
      for (std::size_t t = 0; t < nT; ++t) {
        const std::size_t k = T.hom(s, t).size();
        auto& em = semaps[s * nT + t];
        em.resize(k);
        for (std::size_t j = 0; j < k; ++j)
          em[j] = XT.edge_index(s, t, uX.unit(x), j);
      }
    vmap[x] = XT_T.index_of(Transport(XT_T.exponent, XT.self,
                                      std::move(svmap), std::move(semaps)));
  }

  std::vector<std::vector<std::size_t>> emaps(nX * nX);
  for (std::size_t a = 0; a < nX; ++a)
    for (std::size_t b = 0; b < nX; ++b) {
      const std::size_t k = X.hom(a, b).size();
      auto& em = emaps[a * nX + b];
      em.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> comps(nT);
        for (std::size_t s = 0; s < nT; ++s)
          comps[s] = XT.edge_index(s, s, i, uT.unit(s));
        em[i] = XT_T.encode(vmap[a], vmap[b], comps);
      }
    }
  return Transport(XT.left, XT_T.self, std::move(vmap), std::move(emaps));
}

Transport evaluation(const ExponentialGraph& YT, const BiproductGraph& YTxT,
                     const ContactTable& contact, EvalSide side) {
  if (*YTxT.left != YT.graph || *YTxT.right != *YT.exponent)
    throw Error(
        "evaluation: product must pair the exponential with its exponent");
  if (contact.graph() != *YT.base)
    throw Error("evaluation: contact table is not on the base graph");
  const std::size_t n = YTxT.graph.order();
  std::vector<std::size_t> vmap(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [phi, s] = YTxT.vertex_split(v);
    vmap[v] = YT.points[phi].vertex_image(s);
  }
  std::vector<std::vector<std::size_t>> emaps(n * n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      auto [phi, s] = YTxT.vertex_split(v);
      auto [psi, t] = YTxT.vertex_split(w);
      const Transport& A = YT.points[phi];
      const Transport& B = YT.points[psi];
      const std::size_t k = YTxT.graph.hom(v, w).size();
      auto& em = emaps[v * n + w];
      em.resize(k);
      for (std::size_t e = 0; e < k; ++e) {
        auto [tre, j] = YTxT.edge_split(s, t, e);
        Transform tr = YT.decode(phi, psi, tre);
        if (side == EvalSide::pre)
          em[e] = contact.compose(A.vertex_image(s), B.vertex_image(s),
                                  B.vertex_image(t), tr.comps[s],
                                  B.edge_image(s, t, j));
        else
          em[e] = contact.compose(A.vertex_image(s), A.vertex_image(t),
                                  B.vertex_image(t), A.edge_image(s, t, j),
                                  tr.comps[t]);
      }
    }
  return Transport(YTxT.self, YT.base, std::move(vmap), std::move(emaps));
}

Transport name_appointment(const Transport& f, const BiproductGraph& XT,
                           const UnitChoice& uX, const UnitChoice& uT,
                           const ExponentialGraph& YT) {
  if (f.source() != XT.graph)
    throw Error("name: form is not over the given biproduct");
  if (f.target() != *YT.base || *YT.exponent != *XT.right)
    throw Error("name: exponential mismatch");
  const FiniteGraph& X = *XT.left;
  const FiniteGraph& T = *XT.right;
  const std::size_t nX = X.order();
  const std::size_t nT = T.order();

  std::vector<std::size_t> vmap(nX);
  for (std::size_t x = 0; x < nX; ++x) {
    std::vector<std::size_t> pvmap(nT);
    for (std::size_t t = 0; t < nT; ++t)
      pvmap[t] = f.vertex_image(XT.vertex_index(x, t));
    std::vector<std::vector<std::size_t>> pemaps(nT * nT);
    for (std::size_t s = 0; s < nT; ++s)
      for (std::size_t t = 0; t < nT; ++t) {
        const std::size_t k = T.hom(s, t).size();
        auto& em = pemaps[s * nT + t];
        em.resize(k);
        for (std::size_t j = 0; j < k; ++j)
          em[j] = f.edge_image(XT.vertex_index(x, s), XT.vertex_index(x, t),
                               XT.edge_index(s, t, uX.unit(x), j));
      }
    vmap[x] = YT.index_of(
        Transport(YT.exponent, YT.base, std::move(pvmap), std::move(pemaps)));
  }

  std::vector<std::vector<std::size_t>> emaps(nX * nX);
  for (std::size_t a = 0; a < nX; ++a)
    for (std::size_t b = 0; b < nX; ++b) {
      const std::size_t k = X.hom(a, b).size();
      auto& em = emaps[a * nX + b];
      em.resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> comps(nT);
        for (std::size_t s = 0; s < nT; ++s)
          comps[s] = f.edge_image(XT.vertex_index(a, s), XT.vertex_index(b, s),
                                  XT.edge_index(s, s, i, uT.unit(s)));
        em[i] = YT.encode(vmap[a], vmap[b], comps);
      }
    }
  return Transport(XT.left, YT.self, std::move(vmap), std::move(emaps));
}

Transport realization(const Transport& g, const BiproductGraph& XT,
                      const ExponentialGraph& YT, const ContactTable& contact,
                      EvalSide side) {
  if (g.source() != *XT.left || g.target() != YT.graph)
    throw Error("realization: name form shape mismatch");
  if (*YT.exponent != *XT.right)
    throw Error("realization: exponent does not match the biproduct");
  if (contact.graph() != *YT.base)
    throw Error("realization: contact table is not on the base graph");
  const std::size_t n = XT.graph.order();
  std::vector<std::size_t> vmap(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [x, t] = XT.vertex_split(v);
    vmap[v] = YT.points[g.vertex_image(x)].vertex_image(t);
  }
  std::vector<std::vector<std::size_t>> emaps(n * n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      auto [a, s] = XT.vertex_split(v);
      auto [b, t] = XT.vertex_split(w);
      const Transport& A = YT.points[g.vertex_image(a)];
      const Transport& B = YT.points[g.vertex_image(b)];
      const std::size_t k = XT.graph.hom(v, w).size();
      auto& em = emaps[v * n + w];
      em.resize(k);
      for (std::size_t e = 0; e < k; ++e) {
        auto [i, j] = XT.edge_split(s, t, e);
        Transform tr = YT.decode(g.vertex_image(a), g.vertex_image(b),
                                 g.edge_image(a, b, i));
        if (side == EvalSide::pre)
          em[e] = contact.compose(A.vertex_image(s), B.vertex_image(s),
                                  B.vertex_image(t), tr.comps[s],
                                  B.edge_image(s, t, j));
        else
          em[e] = contact.compose(A.vertex_image(s), A.vertex_image(t),
                                  B.vertex_image(t), A.edge_image(s, t, j),
                                  tr.comps[t]);
      }
    }
  return Transport(XT.self, YT.base, std::move(vmap), std::move(emaps));
}

CheckResult decomposability_check(const Transport& f, const BiproductGraph& XT,
                                  const UnitChoice& uX, const UnitChoice& uT,
                                  const ContactTable& contact, EvalSide side) {
  if (f.source() != XT.graph)
    throw Error("decomposability: form is not over the given biproduct");
  if (contact.graph() != f.target())
    throw Error("decomposability: contact table is not on the target");
  const FiniteGraph& X = *XT.left;
  const FiniteGraph& T = *XT.right;
  CheckResult res;
  for (std::size_t a = 0; a < X.order(); ++a)
    for (std::size_t b = 0; b < X.order(); ++b)
      for (std::size_t i = 0; i < X.hom(a, b).size(); ++i)
        for (std::size_t s = 0; s < T.order(); ++s)
          for (std::size_t t = 0; t < T.order(); ++t)
            for (std::size_t j = 0; j < T.hom(s, t).size(); ++j) {
              const std::size_t direct =
                  f.edge_image(XT.vertex_index(a, s), XT.vertex_index(b, t),
                               XT.edge_index(s, t, i, j));
              std::size_t composite;
              if (side == EvalSide::pre) {
                const std::size_t left =
                    f.edge_image(XT.vertex_index(a, s), XT.vertex_index(b, s),
                                 XT.edge_index(s, s, i, uT.unit(s)));
                const std::size_t right =
                    f.edge_image(XT.vertex_index(b, s), XT.vertex_index(b, t),
                                 XT.edge_index(s, t, uX.unit(b), j));
                composite = contact.compose(
                    f.vertex_image(XT.vertex_index(a, s)),
                    f.vertex_image(XT.vertex_index(b, s)),
                    f.vertex_image(XT.vertex_index(b, t)), left, right);
              } else {
                const std::size_t left =
                    f.edge_image(XT.vertex_index(a, s), XT.vertex_index(a, t),
                                 XT.edge_index(s, t, uX.unit(a), j));
                const std::size_t right =
                    f.edge_image(XT.vertex_index(a, t), XT.vertex_index(b, t),
                                 XT.edge_index(t, t, i, uT.unit(t)));
                composite = contact.compose(
                    f.vertex_image(XT.vertex_index(a, s)),
                    f.vertex_image(XT.vertex_index(a, t)),
                    f.vertex_image(XT.vertex_index(b, t)), left, right);
              }
              if (composite != direct) {
                res.fail("alpha=" + edge_str(X, a, b, i) +
                         " u=" + edge_str(T, s, t, j));
                return res;
              }
            }
  return res;
}

CheckResult neutrality_check(const Transport& g, const BiproductGraph& XT,
                             const UnitChoice& uX, const UnitChoice& uT,
                             const ExponentialGraph& YT,
                             const ContactTable& contact, EvalSide side) {
  if (g.source() != *XT.left || g.target() != YT.graph)
    throw Error("neutrality: name form shape mismatch");
  if (contact.graph() != *YT.base)
    throw Error("neutrality: contact table is not on the base graph");
  const FiniteGraph& X = *XT.left;
  const FiniteGraph& T = *XT.right;
  CheckResult res;
  // family 1: the transform image of a chosen X-unit is neutral against the
  // edge actions of the partial transports
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
                  ? contact.compose(A.vertex_image(s), A.vertex_image(s),
                                    A.vertex_image(t), unit_tr.comps[s], au)
                  : contact.compose(A.vertex_image(s), A.vertex_image(t),
                                    A.vertex_image(t), au, unit_tr.comps[t]);
          if (got != au) {
            res.fail("a=" + X.vertices().at(a) + " u=" + edge_str(T, s, t, j));
            return res;
          }
        }
  }
  // family 2: partial-transport images of the chosen T-units are neutral
  // against every transform component
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
            got = contact.compose(A.vertex_image(s), B.vertex_image(s),
                                  B.vertex_image(s), tr.comps[s],
                                  B.edge_image(s, s, uT.unit(s)));
          else
            got = contact.compose(A.vertex_image(s), A.vertex_image(s),
                                  B.vertex_image(s),
                                  A.edge_image(s, s, uT.unit(s)), tr.comps[s]);
          if (got != tr.comps[s]) {
            res.fail("alpha=" + edge_str(X, a, b, i) +
                     " s=" + T.vertices().at(s));
            return res;
          }
        }
      }
  return res;
}

}  // namespace fincat
