#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fincat/enumerate.hpp"

namespace fincat {

/// Finite set of interned string atoms. Iteration order is the stored order;
/// every enumeration built on top of it is reproducible byte for byte.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<std::string> elements);

  /// {prefix0, prefix1, ...}
  static FiniteSet range(std::size_t n, const std::string& prefix = "");

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::string& at(std::size_t i) const { return elems_.at(i); }
  const std::vector<std::string>& elements() const { return elems_; }
  bool contains(const std::string& e) const { return index_.count(e) != 0; }
  std::size_t index_of(const std::string& e) const;

  bool operator==(const FiniteSet& o) const { return elems_ == o.elems_; }
  bool operator!=(const FiniteSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> elems_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Total function between finite sets, stored as target indices per source
/// element.
class Mapping {
 public:
  Mapping() = default;
  Mapping(FiniteSet source, FiniteSet target, std::vector<std::size_t> assign);

  static Mapping identity(const FiniteSet& s);
  static Mapping constant(const FiniteSet& source, const FiniteSet& target,
                          std::size_t value_index);
  /// Builds from element-level pairs; every source element must be assigned.
  static Mapping from_pairs(
      const FiniteSet& source, const FiniteSet& target,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  const FiniteSet& source() const { return source_; }
  const FiniteSet& target() const { return target_; }
  std::size_t apply_index(std::size_t i) const { return assign_.at(i); }
  const std::string& operator()(const std::string& x) const;
  const std::vector<std::size_t>& assignment() const { return assign_; }

  /// Diagrammatic order: (f.then(g))(x) = g(f(x)).
  Mapping then(const Mapping& g) const;
  bool is_identity() const;
  bool is_surjective() const;
  bool is_injective() const;

  bool operator==(const Mapping& o) const;
  bool operator!=(const Mapping& o) const { return !(*this == o); }

 private:
  FiniteSet source_, target_;
  std::vector<std::size_t> assign_;
};

/// Carte product X x T together with its projections and index arithmetic.
struct Product {
  FiniteSet set;  // elements are encoded pairs, X-major order
  Mapping proj1, proj2;
  std::size_t nx = 0, nt = 0;

  std::size_t pair_index(std::size_t x, std::size_t t) const {
    return x * nt + t;
  }
  std::pair<std::size_t, std::size_t> split(std::size_t p) const {
    return {p / nt, p % nt};
  }
};

Product product(const FiniteSet& X, const FiniteSet& T);

/// Functional space Y^T: all mappings T -> Y in lexicographic order of their
/// value tuples (empty T yields exactly the empty mapping).
struct Exponential {
  FiniteSet set;  // encoded value tuples, aligned with points
  std::vector<Mapping> points;
  FiniteSet exponent, base;  // T, Y

  std::size_t index_of(const Mapping& m) const;
};

Exponential exponential(const FiniteSet& T, const FiniteSet& Y);

/// Currying: for f : X x T -> Y produces the name form X -> Y^T with
/// name(f)(x) the partial form t |-> f(<x,t>).
Mapping name(const Mapping& f, const FiniteSet& X, const FiniteSet& T);

/// Uncurrying: realize(g)(<x,t>) = g(x)(t). Inverse of name.
Mapping realize(const Mapping& g, const FiniteSet& X, const FiniteSet& T,
                const FiniteSet& Y);

/// Unit of the adjunction: x |-> the section t |-> <x,t>.
Mapping unit_section(const FiniteSet& X, const FiniteSet& T);

/// Counit of the adjunction: <phi,s> |-> phi(s).
Mapping counit_eval(const FiniteSet& Y, const FiniteSet& T);

class FinitePoset {
 public:
  FinitePoset() = default;
  /// Validates reflexivity, antisymmetry and transitivity eagerly.
  FinitePoset(FiniteSet carrier, std::vector<std::vector<bool>> leq);

  static FinitePoset discrete(const FiniteSet& carrier);
  static FinitePoset chain(std::size_t n, const std::string& prefix = "");
  /// Reflexive-transitive closure of the given covers; fails if the result
  /// is not antisymmetric.
  static FinitePoset from_pairs(
      const FiniteSet& carrier,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  const FiniteSet& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool leq(const std::string& a, const std::string& b) const;
  const std::vector<std::vector<bool>>& matrix() const { return leq_; }

  bool operator==(const FinitePoset& o) const {
    return carrier_ == o.carrier_ && leq_ == o.leq_;
  }

 private:
  FiniteSet carrier_;
  std::vector<std::vector<bool>> leq_;
};

bool is_monotone(const Mapping& f, const FinitePoset& src,
                 const FinitePoset& dst);

/// Sub-poset of the full exponential spanned by the monotone maps, ordered
/// pointwise (initial order for the projections).
struct PosetExponential {
  FinitePoset poset;
  std::vector<Mapping> points;
};

PosetExponential poset_exponential(const FinitePoset& T, const FinitePoset& Y);

/// One violating tuple of a monotonicity check, in evaluation terms:
/// phi <= psi and s <= t but phi(s) !<= psi(t).
struct EvalViolation {
  std::size_t phi, psi, s, t;
};

/// Checks that evaluation restricted to poset_exponential(T,Y) x T is
/// monotone; reports the first violating pair in lexicographic order.
struct EvalMonotoneReport {
  bool ok = true;
  std::optional<EvalViolation> violation;
  std::size_t pairs_checked = 0;
};

EvalMonotoneReport poset_eval_monotone_check(const FinitePoset& T,
                                             const FinitePoset& Y);

/// All points above x: {y : x <= y}.
FiniteSet limit_set(const FinitePoset& P, const std::string& x);

/// f is monotone iff f(limit_set(x)) is contained in limit_set(f(x)) for
/// every x; this evaluates the right-hand characterization directly.
bool limit_continuous(const Mapping& f, const FinitePoset& src,
                      const FinitePoset& dst);

}  // namespace fincat
