#pragma once

#include <optional>

#include "fincat/graphs.hpp"

namespace fincat {

/// Graph with chosen unit loops and a total contact table. Unit neutrality
/// is a validated property, not a construction invariant, so searches can
/// build broken candidates and ask.
struct OriginalGraph {
  GraphPtr graph;
  UnitChoice units;
  ContactTable contact;

  std::size_t compose(std::size_t a, std::size_t b, std::size_t c,
                      std::size_t i, std::size_t j) const {
    return contact.compose(a, b, c, i, j);
  }
  std::size_t unit(std::size_t v) const { return units.unit(v); }
};

/// One-object original graph from a binary operation table.
OriginalGraph one_object_original(const FiniteSet& elements,
                                  const std::vector<std::vector<std::size_t>>& table,
                                  std::size_t unit);

/// Componentwise units and contact on a Carte biproduct of original graphs.
OriginalGraph biproduct_original(const BiproductGraph& XT,
                                 const OriginalGraph& X,
                                 const OriginalGraph& T);

/// Both unit laws, exhaustively.
CheckResult validate_original(const OriginalGraph& G);

/// Unit laws plus associativity of the contact table.
CheckResult validate_category(const OriginalGraph& G);

struct TransportClassification {
  bool crude = true;     // maintains chosen units
  bool natural = true;   // maintains contact
  std::vector<std::string> witnesses;
};

TransportClassification classify_transport(const Transport& f,
                                           const OriginalGraph& X,
                                           const OriginalGraph& Y);

/// Commuting-square condition alpha_s . psi(u) = phi(u) . alpha_t for every
/// edge u of the exponent.
CheckResult natural_transform_check(const Transform& alpha,
                                    const ContactTable& contactY);

/// Identity transform 1_phi built from chosen units of the target.
Transform identity_transform(const Transport& phi, const UnitChoice& uY);

/// Vertical composition (alpha . beta)_s = alpha_s . beta_s.
Transform compose_transforms(const Transform& alpha, const Transform& beta,
                             const ContactTable& contactY);

/// Sub-graph of Y^T keeping only the natural transforms as edges. Points
/// still enumerate every transport.
struct NaturalExponential {
  FiniteGraph graph;
  GraphPtr self, exponent, base;
  std::vector<Transport> points;
  // transforms[phi * points + psi][k] = component family of edge k
  std::vector<std::vector<std::vector<std::size_t>>> transforms;
};

NaturalExponential natural_exponential(GraphPtr T, const OriginalGraph& Y,
                                       Budget* budget = nullptr);

/// Arbitrary transport X^op => Set: a value set per vertex and, for every
/// edge h in X(b;a), an action F0(a) -> F0(b). No functoriality is assumed.
class Character {
 public:
  Character() = default;
  Character(GraphPtr base, std::vector<FiniteSet> values,
            std::vector<std::vector<std::vector<std::size_t>>> actions);

  static Character representable(const OriginalGraph& X, std::size_t x);

  const FiniteGraph& base() const { return *base_; }
  const GraphPtr& base_ptr() const { return base_; }
  const FiniteSet& value(std::size_t v) const { return values_.at(v); }
  /// Action of edge i in X(b;a) on a point of F0(a); lands in F0(b).
  std::size_t act(std::size_t b, std::size_t a, std::size_t i,
                  std::size_t m) const;

  /// Whether every unit acts as the identity and actions compose exactly
  /// (the functorial refinement used in tests).
  bool functorial(const OriginalGraph& X) const;

 private:
  GraphPtr base_;
  std::vector<FiniteSet> values_;
  std::vector<std::vector<std::vector<std::size_t>>> actions_;
};

/// Transform between characters: one value mapping per vertex.
struct CharTransform {
  // comps[a][m] = image in G0(a) of point m in F0(a)
  std::vector<std::vector<std::size_t>> comps;
  bool operator==(const CharTransform&) const = default;
};

bool char_transform_natural(const Character& F, const Character& G,
                            const CharTransform& t);

std::vector<CharTransform> natural_char_transforms(const Character& F,
                                                   const Character& G,
                                                   Budget& budget);

/// Points of F0(x) on which the action respects the chosen unit exactly and
/// composition up to the contact table.
std::vector<std::size_t> social_points(const OriginalGraph& X,
                                       const Character& F, std::size_t x);

struct YonedaReport {
  bool ok = false;
  std::size_t social_count = 0;
  std::size_t transform_count = 0;
  std::vector<std::string> witnesses;
};

/// Bijection between social points of F at x and natural transforms
/// X(-;x) => F: point from transform is the value at the unit, transform
/// from point acts by f |-> f^F(m). Verifies the two maps are mutually
/// inverse.
YonedaReport yoneda_correspondence(const OriginalGraph& X, const Character& F,
                                   std::size_t x, Budget& budget);

/// Same bijection for F = X(-;y): social edges of X(x;y) against natural
/// transforms between the representables, plus the composition law
/// (the composite transform picks out the contact arrow).
YonedaReport edge_transform_correspondence(const OriginalGraph& X,
                                           std::size_t x, std::size_t y,
                                           Budget& budget);

struct IsoReport {
  std::optional<std::size_t> inverse;  // index into X(y;x)
  bool transforms_mutually_inverse = false;
};

/// Two-sided inverse of an edge, if any, with the induced representable
/// transforms checked to cancel.
IsoReport iso_check(const OriginalGraph& X, std::size_t x, std::size_t y,
                    std::size_t theta, Budget& budget);

/// Yoneda embedding is full and faithful on a validated category:
/// |X(a;b)| = |Nat(X(-;a),X(-;b))| with the edge correspondence bijective.
CheckResult fullfaithful_check(const OriginalGraph& X, Budget& budget);

struct BijectionSuiteReport {
  bool ok = false;
  std::size_t decomposable_forms = 0;
  std::size_t neutral_natural_names = 0;
  std::vector<std::string> witnesses;
};

/// Restricted adjunction bijection: forms decomposable on both sides
/// against neutral name forms corestricted into the natural exponential.
/// Verifies name/realization are mutually inverse between the two sets and
/// that both realizations coincide there.
BijectionSuiteReport bijection_suite(const OriginalGraph& X,
                                     const OriginalGraph& T,
                                     const OriginalGraph& Y, Budget& budget);

}  // namespace fincat
