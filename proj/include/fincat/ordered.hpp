#pragma once

#include "fincat/structure.hpp"

namespace fincat {

/// Graph whose edge sets are posets. Units and contact are optional; a
/// contact table may additionally be validated monotone in each argument.
struct OrderedGraph {
  GraphPtr graph;
  std::vector<FinitePoset> hom_orders;  // one poset per hom, matching labels
  std::optional<UnitChoice> units;
  std::optional<ContactTable> contact;

  const FinitePoset& order(std::size_t a, std::size_t b) const {
    return hom_orders.at(a * graph->order() + b);
  }
  bool edge_leq(std::size_t a, std::size_t b, std::size_t e1,
                std::size_t e2) const {
    return order(a, b).leq(e1, e2);
  }
};

OrderedGraph make_ordered(GraphPtr g, std::vector<FinitePoset> hom_orders,
                          std::optional<UnitChoice> units = std::nullopt,
                          std::optional<ContactTable> contact = std::nullopt);

/// Discrete orders on every hom: the ordered reading of a plain original
/// graph. Every ordered predicate then degenerates to its exact version.
OrderedGraph with_discrete_orders(const OriginalGraph& G);

/// One vertex, hom the 2-chain o0 < o1. Meet variant has unit o1 and
/// contact min, join variant unit o0 and contact max; both are associative,
/// monotone and unit-neutral.
OrderedGraph two_chain_meet();
OrderedGraph two_chain_join();

/// Contact must be monotone in each argument separately.
CheckResult contact_monotone_check(const OrderedGraph& Y);

/// Pointwise comparison of parallel transports (same endpoints, equal
/// vertex maps); the order on edges comes from the target.
bool transport_leq(const Transport& f, const Transport& g,
                   const OrderedGraph& Y);

/// Every edge-set mapping of f must be monotone.
CheckResult monotone_transport_check(const Transport& f, const OrderedGraph& X,
                                     const OrderedGraph& Y);

/// Deformed-square direction for a transform: continuous demands the
/// precontact arrow below the postcontact one, cocontinuous the reverse.
enum class DeformSide { continuous, cocontinuous };

bool deformed_square_holds(const Transform& alpha, const OrderedGraph& Y,
                           DeformSide side);

/// Edges of Y^T(phi,psi) satisfying the chosen inequality for every edge of
/// the exponent.
std::vector<Transform> continuous_transform_set(const ExponentialGraph& YT,
                                                const OrderedGraph& Y,
                                                std::size_t phi,
                                                std::size_t psi,
                                                DeformSide side);

/// Where the unit-slice composite sits relative to the form itself.
enum class Direction { lower, upper };

/// Inequality version of decomposability: lower asks composite <= f(alpha,u),
/// upper asks composite >= f(alpha,u); side picks the pre or post factoring.
CheckResult decomposition_inequality_check(const Transport& f,
                                           const BiproductGraph& XT,
                                           const UnitChoice& uX,
                                           const UnitChoice& uT,
                                           const OrderedGraph& Y,
                                           EvalSide side, Direction dir);

/// Inequality version of the neutrality families.
CheckResult neutrality_inequality_check(const Transport& g,
                                        const BiproductGraph& XT,
                                        const UnitChoice& uX,
                                        const UnitChoice& uT,
                                        const ExponentialGraph& YT,
                                        const OrderedGraph& Y, EvalSide side,
                                        Direction dir);

/// Order on name forms g, g' : X -> Y^T. Vertex images are transports, so
/// parallelism only demands equal vertex maps after projecting to Y; the
/// comparison then covers the partial transports' edge maps and the
/// transform components. Throws if the two are not comparable in shape.
bool name_form_leq(const Transport& g1, const Transport& g2,
                   const ExponentialGraph& YT, const OrderedGraph& Y);

/// Character together with a poset on every value set.
struct OrderedCharacter {
  Character chr;
  std::vector<FinitePoset> value_orders;
};

/// Points whose unit action is exact and whose composite-action triangles
/// hold up to the requested inequality (lower: stepwise below direct).
std::vector<std::size_t> social_points_ordered(const OriginalGraph& X,
                                               const OrderedCharacter& F,
                                               std::size_t x, Direction dir);

struct ContinuousYonedaReport {
  bool ok = false;          // generation is injective and inverts on its image
  bool surjective = false;  // every continuous transform is generated
  std::size_t lower_social = 0;
  std::size_t continuous_transforms = 0;
  std::size_t generated = 0;
  std::vector<std::string> witnesses;
};

/// Lower social points against continuous transforms X(-;x) => F. Every
/// lower social point generates a continuous transform and is recovered
/// from it; the report also records whether the generation map is onto the
/// whole continuous transform set.
ContinuousYonedaReport continuous_yoneda_check(const OriginalGraph& X,
                                               const OrderedCharacter& F,
                                               std::size_t x, Budget& budget);

struct AdjunctionSuiteReport {
  bool ok = false;
  std::size_t eligible_forms = 0;
  std::size_t eligible_names = 0;
  std::size_t monotone_name_pairs = 0;
  std::size_t monotone_realization_pairs = 0;
  std::vector<std::string> witnesses;
};

/// Unit and counit inequalities for the ordered adjunction plus
/// monotonicity of name and realization. X and T carry units, Y a monotone
/// contact.
AdjunctionSuiteReport adjunction_inequality_suite(const OrderedGraph& X,
                                                  const OrderedGraph& T,
                                                  const OrderedGraph& Y,
                                                  Budget& budget);

struct RegularBoundReport {
  Transport bound;
  bool hypothesis = false;   // the decomposition inequality for this side
  bool is_bound = false;     // f+ above f, or f- below f
  bool is_regular = false;   // the round trip fixes the bound
  bool extremal = false;     // certified against every regular transport
  std::vector<std::string> witnesses;
};

/// f+ (pre) or f- (post): the name round trip as the extremal regular
/// bound, with the extremality certified exhaustively over all parallel
/// regular transports.
RegularBoundReport regular_bound(const Transport& f, const BiproductGraph& XT,
                                 const UnitChoice& uX, const UnitChoice& uT,
                                 const OrderedGraph& Y, EvalSide side,
                                 Budget& budget);

/// Under upper predecomposition and lower postdecomposition the name's
/// transform images keep the precontact arrow above the postcontact one.
CheckResult corestriction_check(const Transport& f, const BiproductGraph& XT,
                                const UnitChoice& uX, const UnitChoice& uT,
                                const OrderedGraph& Y);

/// Composition closure of the chosen deformed-square class; demands an
/// associative and monotone contact.
CheckResult continuous_composition_closure(const OrderedGraph& Y, GraphPtr T,
                                           DeformSide side, Budget& budget);

}  // namespace fincat
