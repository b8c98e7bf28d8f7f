#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fincat/enumerate.hpp"
#include "fincat/finset.hpp"

namespace fincat {

/// Directed multigraph: a finite set of edge labels for every ordered vertex
/// pair. Hom sets default to empty.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(FiniteSet vertices);
  FiniteGraph(FiniteSet vertices, std::vector<FiniteSet> homs);

  const FiniteSet& vertices() const { return vertices_; }
  std::size_t order() const { return vertices_.size(); }
  const FiniteSet& hom(std::size_t a, std::size_t b) const {
    return homs_.at(a * vertices_.size() + b);
  }
  void set_hom(std::size_t a, std::size_t b, FiniteSet edges);
  std::size_t edge_count() const;

  bool operator==(const FiniteGraph& o) const {
    return vertices_ == o.vertices_ && homs_ == o.homs_;
  }
  bool operator!=(const FiniteGraph& o) const { return !(*this == o); }

 private:
  FiniteSet vertices_;
  std::vector<FiniteSet> homs_;
};

using GraphPtr = std::shared_ptr<const FiniteGraph>;

inline GraphPtr share(FiniteGraph g) {
  return std::make_shared<const FiniteGraph>(std::move(g));
}

/// Edge of a graph addressed by source, destination and label position.
struct EdgeRef {
  std::size_t src = 0, dst = 0, idx = 0;
  bool operator==(const EdgeRef&) const = default;
};

/// Morphism of graphs: a vertex assignment plus one edge-set mapping per
/// vertex pair.
class Transport {
 public:
  Transport() = default;
  Transport(GraphPtr source, GraphPtr target, std::vector<std::size_t> vmap,
            std::vector<std::vector<std::size_t>> emaps);

  const FiniteGraph& source() const { return *source_; }
  const FiniteGraph& target() const { return *target_; }
  const GraphPtr& source_ptr() const { return source_; }
  const GraphPtr& target_ptr() const { return target_; }

  std::size_t vertex_image(std::size_t v) const { return vmap_.at(v); }
  const std::vector<std::size_t>& vertex_map() const { return vmap_; }
  /// Image of edge i in hom(a,b); an index into hom(f(a), f(b)) of the target.
  std::size_t edge_image(std::size_t a, std::size_t b, std::size_t i) const {
    return emaps_.at(a * source_->order() + b).at(i);
  }
  const std::vector<std::vector<std::size_t>>& edge_maps() const {
    return emaps_;
  }

  static Transport identity(GraphPtr g);
  /// Canonical text form; injective, used for vertex names of exponential
  /// graphs and for witness reporting.
  std::string label() const;

  bool operator==(const Transport& o) const;
  bool operator!=(const Transport& o) const { return !(*this == o); }

 private:
  GraphPtr source_, target_;
  std::vector<std::size_t> vmap_;
  std::vector<std::vector<std::size_t>> emaps_;
};

/// Diagrammatic composition: source of g must equal target of f, and the
/// vertex map of the composite is x |-> g(f(x)).
Transport compose_transports(const Transport& f, const Transport& g);

/// Edge of an exponential graph: a family of target edges indexed by the
/// vertices of the exponent, between two parallel transports.
struct Transform {
  Transport dom, cod;
  std::vector<std::size_t> comps;  // comps[t] indexes hom(dom(t), cod(t))

  std::string label() const;
  bool operator==(const Transform& o) const {
    return dom == o.dom && cod == o.cod && comps == o.comps;
  }
};

/// Chosen unit loop for every vertex.
class UnitChoice {
 public:
  UnitChoice() = default;
  UnitChoice(GraphPtr g, std::vector<std::size_t> unit_edges);
  /// Picks the first loop of every vertex; fails if one is missing.
  static UnitChoice first_loops(GraphPtr g);

  const FiniteGraph& graph() const { return *graph_; }
  std::size_t unit(std::size_t v) const { return units_.at(v); }

 private:
  GraphPtr graph_;
  std::vector<std::size_t> units_;
};

/// Total composition table E(a,b) x E(b,c) -> E(a,c) over all vertex triples.
class ContactTable {
 public:
  ContactTable() = default;
  ContactTable(GraphPtr g, std::vector<std::vector<std::size_t>> tables);

  const FiniteGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  /// Index into E(a,c) of (edge i of E(a,b)) then (edge j of E(b,c)).
  std::size_t compose(std::size_t a, std::size_t b, std::size_t c,
                      std::size_t i, std::size_t j) const;
  std::vector<std::size_t>& table(std::size_t a, std::size_t b, std::size_t c);
  const std::vector<std::size_t>& table(std::size_t a, std::size_t b,
                                        std::size_t c) const;

 private:
  GraphPtr graph_;
  // tables_[(a*n+b)*n+c], row-major over (i,j)
  std::vector<std::vector<std::size_t>> tables_;
};

/// Carte biproduct X x Y with index arithmetic for its vertices and edges.
struct BiproductGraph {
  FiniteGraph graph;
  GraphPtr left, right;
  GraphPtr self;  // shared handle to `graph`

  std::size_t vertex_index(std::size_t x, std::size_t y) const {
    return x * right->order() + y;
  }
  std::pair<std::size_t, std::size_t> vertex_split(std::size_t v) const {
    return {v / right->order(), v % right->order()};
  }
  /// Edges of hom(<x,y>,<x',y'>) are pairs; index = i * |R(y,y')| + j.
  std::size_t edge_index(std::size_t y, std::size_t yp, std::size_t i,
                         std::size_t j) const {
    return i * right->hom(y, yp).size() + j;
  }
  std::pair<std::size_t, std::size_t> edge_split(std::size_t y, std::size_t yp,
                                                 std::size_t e) const {
    const std::size_t r = right->hom(y, yp).size();
    return {e / r, e % r};
  }
};

BiproductGraph carte_biproduct(const FiniteGraph& X, const FiniteGraph& Y);
BiproductGraph carte_biproduct(GraphPtr X, GraphPtr Y);

/// Componentwise biproduct of transports f x g : X x Y -> X' x Y'.
Transport biproduct_transport(const Transport& f, const Transport& g,
                              const BiproductGraph& src,
                              const BiproductGraph& dst);

/// Exponential graph Y^T: vertices are all transports T -> Y, the hom set
/// of (phi, psi) is the product of the target hom sets over the exponent's
/// vertices (every component family counts, natural or not).
struct ExponentialGraph {
  FiniteGraph graph;
  GraphPtr self;
  GraphPtr exponent, base;  // T, Y
  std::vector<Transport> points;

  std::size_t index_of(const Transport& t) const;
  std::optional<std::size_t> find(const Transport& t) const;

  /// Decodes edge e of hom(phi, psi) into its component family.
  Transform decode(std::size_t phi, std::size_t psi, std::size_t e) const;
  std::size_t encode(std::size_t phi, std::size_t psi,
                     const std::vector<std::size_t>& comps) const;
  std::size_t hom_size(std::size_t phi, std::size_t psi) const {
    return graph.hom(phi, psi).size();
  }

 private:
  friend ExponentialGraph exponential_graph(GraphPtr, GraphPtr, Budget*);
  std::unordered_map<std::string, std::size_t> by_label_;
};

ExponentialGraph exponential_graph(GraphPtr T, GraphPtr Y,
                                   Budget* budget = nullptr);

/// Enumerates all transports T -> Y in lexicographic order (vertex map
/// first, then edge assignments), charging one budget unit per candidate.
void enumerate_transports(GraphPtr T, GraphPtr Y, Budget& budget,
                          const std::function<bool(const Transport&)>& fn);

/// Enumerates all transforms phi -> psi.
void enumerate_transforms(const Transport& phi, const Transport& psi,
                          Budget& budget,
                          const std::function<bool(const Transform&)>& fn);

/// Functorial action of g : Y -> Y' on exponentials, phi |-> phi . g.
Transport target_change(const Transport& g, const ExponentialGraph& YT,
                        const ExponentialGraph& YpT);

/// Unit transport lambda_X : X -> (X x T)^T built from chosen unit loops.
Transport sections_transport(const BiproductGraph& XT, const UnitChoice& uX,
                             const UnitChoice& uT,
                             const ExponentialGraph& XT_T);

enum class EvalSide { pre, post };

/// Evaluation transport Y^T x T -> Y; edges go to the pre- or post-contact
/// arrow.
Transport evaluation(const ExponentialGraph& YT, const BiproductGraph& YTxT,
                     const ContactTable& contact, EvalSide side);

/// Currying at the graph level: g0(x) is t |-> f(<x,t>), u |-> f(<1_x,u>),
/// and g(alpha) has components f(<alpha,1_s>).
Transport name_appointment(const Transport& f, const BiproductGraph& XT,
                           const UnitChoice& uX, const UnitChoice& uT,
                           const ExponentialGraph& YT);

/// Uncurrying: f(<x,t>) = g(x)(t) with the pre- or post-contact edge action.
Transport realization(const Transport& g, const BiproductGraph& XT,
                      const ExponentialGraph& YT, const ContactTable& contact,
                      EvalSide side);

struct CheckResult {
  bool ok = true;
  std::vector<std::string> witnesses;

  void fail(std::string w) {
    ok = false;
    witnesses.push_back(std::move(w));
  }
};

/// Whether f : X x T -> Y factors through its unit slices on the given
/// side: pre demands f(a,1_s) . f(1_b,u) = f(a,u), post the mirror image.
CheckResult decomposability_check(const Transport& f, const BiproductGraph& XT,
                                  const UnitChoice& uX, const UnitChoice& uT,
                                  const ContactTable& contact, EvalSide side);

/// Unit compatibility of a name form g : X -> Y^T; two equation families
/// per side.
CheckResult neutrality_check(const Transport& g, const BiproductGraph& XT,
                             const UnitChoice& uX, const UnitChoice& uT,
                             const ExponentialGraph& YT,
                             const ContactTable& contact, EvalSide side);

}  // namespace fincat
