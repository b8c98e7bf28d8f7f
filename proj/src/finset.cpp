#include "fincat/finset.hpp"

#include <algorithm>

namespace fincat {

FiniteSet::FiniteSet(std::vector<std::string> elements)
    : elems_(std::move(elements)) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    auto [it, fresh] = index_.emplace(elems_[i], i);
    if (!fresh) throw Error("duplicate element: " + elems_[i]);
  }
}

FiniteSet FiniteSet::range(std::size_t n, const std::string& prefix) {
  std::vector<std::string> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.push_back(prefix + std::to_string(i));
  return FiniteSet(std::move(e));
}

std::size_t FiniteSet::index_of(const std::string& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw Error("unknown element: " + e);
  return it->second;
}

Mapping::Mapping(FiniteSet source, FiniteSet target,
                 std::vector<std::size_t> assign)
    : source_(std::move(source)),
      target_(std::move(target)),
      assign_(std::move(assign)) {
  if (assign_.size() != source_.size())
    throw Error("mapping must assign every source element");
  for (auto v : assign_)
    if (v >= target_.size()) throw Error("mapping value outside target");
}

Mapping Mapping::identity(const FiniteSet& s) {
  std::vector<std::size_t> a(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) a[i] = i;
  return Mapping(s, s, std::move(a));
}

Mapping Mapping::constant(const FiniteSet& source, const FiniteSet& target,
                          std::size_t value_index) {
  if (value_index >= target.size()) throw Error("constant value outside target");
  return Mapping(source, target,
                 std::vector<std::size_t>(source.size(), value_index));
}

Mapping Mapping::from_pairs(
    const FiniteSet& source, const FiniteSet& target,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::size_t> a(source.size(), target.size());
  for (const auto& [k, v] : pairs) a.at(source.index_of(k)) = target.index_of(v);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == target.size())
      throw Error("unassigned source element: " + source.at(i));
  return Mapping(source, target, std::move(a));
}

const std::string& Mapping::operator()(const std::string& x) const {
  return target_.at(assign_.at(source_.index_of(x)));
}

Mapping Mapping::then(const Mapping& g) const {
  if (target_ != g.source_) throw Error("composition shape mismatch");
  std::vector<std::size_t> a(assign_.size());
  for (std::size_t i = 0; i < assign_.size(); ++i)
    a[i] = g.assign_[assign_[i]];
  return Mapping(source_, g.target_, std::move(a));
}

bool Mapping::is_identity() const {
  if (source_ != target_) return false;
  for (std::size_t i = 0; i < assign_.size(); ++i)
    if (assign_[i] != i) return false;
  return true;
}

bool Mapping::is_surjective() const {
  std::vector<bool> hit(target_.size(), false);
  for (auto v : assign_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool Mapping::is_injective() const {
  std::vector<bool> hit(target_.size(), false);
  for (auto v : assign_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool Mapping::operator==(const Mapping& o) const {
  return source_ == o.source_ && target_ == o.target_ && assign_ == o.assign_;
}

Product product(const FiniteSet& X, const FiniteSet& T) {
  Product p;
  p.nx = X.size();
  p.nt = T.size();
  std::vector<std::string> pairs;
  std::vector<std::size_t> p1, p2;
  pairs.reserve(p.nx * p.nt);
  for (std::size_t x = 0; x < p.nx; ++x)
    for (std::size_t t = 0; t < p.nt; ++t) {
      pairs.push_back(encode_pair(X.at(x), T.at(t)));
      p1.push_back(x);
      p2.push_back(t);
    }
  p.set = FiniteSet(std::move(pairs));
  p.proj1 = Mapping(p.set, X, std::move(p1));
  p.proj2 = Mapping(p.set, T, std::move(p2));
  return p;
}

Exponential exponential(const FiniteSet& T, const FiniteSet& Y) {
  Exponential e;
  e.exponent = T;
  e.base = Y;
  std::vector<std::string> names;
  if (T.empty()) {
    names.push_back(encode_tuple({}));
    e.points.push_back(Mapping(T, Y, {}));
  } else if (!Y.empty()) {
    std::vector<std::size_t> digits(T.size(), 0);
    const std::vector<std::size_t> radices(T.size(), Y.size());
    do {
      std::vector<std::string> parts;
      parts.reserve(T.size());
      for (auto d : digits) parts.push_back(Y.at(d));
      names.push_back(encode_tuple(parts));
      e.points.push_back(Mapping(T, Y, digits));
    } while (next_tuple(digits, radices));
  }
  e.set = FiniteSet(std::move(names));
  return e;
}

std::size_t Exponential::index_of(const Mapping& m) const {
  if (m.source() != exponent || m.target() != base)
    throw Error("mapping does not live in this exponential");
  // Value tuples enumerate lexicographically, so the index is the
  // base-|Y| number spelled by the assignment.
  std::size_t idx = 0;
  for (auto v : m.assignment()) idx = idx * base.size() + v;
  return idx;
}

Mapping name(const Mapping& f, const FiniteSet& X, const FiniteSet& T) {
  Product xt = product(X, T);
  if (f.source() != xt.set)
    throw Error("name: source is not the product of the given factors");
  Exponential e = exponential(T, f.target());
  std::vector<std::size_t> assign;
  assign.reserve(X.size());
  for (std::size_t x = 0; x < X.size(); ++x) {
    std::vector<std::size_t> partial(T.size());
    for (std::size_t t = 0; t < T.size(); ++t)
      partial[t] = f.apply_index(xt.pair_index(x, t));
    assign.push_back(e.index_of(Mapping(T, f.target(), std::move(partial))));
  }
  return Mapping(X, e.set, std::move(assign));
}

Mapping realize(const Mapping& g, const FiniteSet& X, const FiniteSet& T,
                const FiniteSet& Y) {
  Exponential e = exponential(T, Y);
  if (g.target() != e.set)
    throw Error("realize: target is not the expected exponential");
  if (g.source() != X) throw Error("realize: source mismatch");
  Product xt = product(X, T);
  std::vector<std::size_t> assign(xt.set.size());
  for (std::size_t x = 0; x < X.size(); ++x) {
    const Mapping& partial = e.points[g.apply_index(x)];
    for (std::size_t t = 0; t < T.size(); ++t)
      assign[xt.pair_index(x, t)] = partial.apply_index(t);
  }
  return Mapping(xt.set, Y, std::move(assign));
}

Mapping unit_section(const FiniteSet& X, const FiniteSet& T) {
  Product xt = product(X, T);
  return name(Mapping::identity(xt.set), X, T);
}

Mapping counit_eval(const FiniteSet& Y, const FiniteSet& T) {
  Exponential e = exponential(T, Y);
  Product et = product(e.set, T);
  std::vector<std::size_t> assign(et.set.size());
  for (std::size_t phi = 0; phi < e.set.size(); ++phi)
    for (std::size_t t = 0; t < T.size(); ++t)
      assign[et.pair_index(phi, t)] = e.points[phi].apply_index(t);
  return Mapping(et.set, Y, std::move(assign));
}

FinitePoset::FinitePoset(FiniteSet carrier, std::vector<std::vector<bool>> leq)
    : carrier_(std::move(carrier)), leq_(std::move(leq)) {
  const std::size_t n = carrier_.size();
  if (leq_.size() != n) throw Error("poset relation has wrong shape");
  for (const auto& row : leq_)
    if (row.size() != n) throw Error("poset relation has wrong shape");
  for (std::size_t a = 0; a < n; ++a)
    if (!leq_[a][a]) throw Error("poset relation not reflexive at " + carrier_.at(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a])
        throw Error("poset relation not antisymmetric at " + carrier_.at(a) +
                    "," + carrier_.at(b));
      if (leq_[a][b])
        for (std::size_t c = 0; c < n; ++c)
          if (leq_[b][c] && !leq_[a][c])
            throw Error("poset relation not transitive at " + carrier_.at(a) +
                        "," + carrier_.at(b) + "," + carrier_.at(c));
    }
}

FinitePoset FinitePoset::discrete(const FiniteSet& carrier) {
  std::vector<std::vector<bool>> m(carrier.size(),
                                   std::vector<bool>(carrier.size(), false));
  for (std::size_t i = 0; i < carrier.size(); ++i) m[i][i] = true;
  return FinitePoset(carrier, std::move(m));
}

FinitePoset FinitePoset::chain(std::size_t n, const std::string& prefix) {
  FiniteSet c = FiniteSet::range(n, prefix);
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = true;
  return FinitePoset(std::move(c), std::move(m));
}

FinitePoset FinitePoset::from_pairs(
    const FiniteSet& carrier,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = carrier.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  for (const auto& [a, b] : pairs)
    m[carrier.index_of(a)][carrier.index_of(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
  return FinitePoset(carrier, std::move(m));
}

bool FinitePoset::leq(const std::string& a, const std::string& b) const {
  return leq_[carrier_.index_of(a)][carrier_.index_of(b)];
}

bool is_monotone(const Mapping& f, const FinitePoset& src,
                 const FinitePoset& dst) {
  if (f.source() != src.carrier() || f.target() != dst.carrier())
    throw Error("monotone check: carrier mismatch");
  const std::size_t n = src.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (src.leq(a, b) && !dst.leq(f.apply_index(a), f.apply_index(b)))
        return false;
  return true;
}

PosetExponential poset_exponential(const FinitePoset& T, const FinitePoset& Y) {
  Exponential full = exponential(T.carrier(), Y.carrier());
  PosetExponential out;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < full.points.size(); ++i) {
    if (is_monotone(full.points[i], T, Y)) {
      names.push_back(full.set.at(i));
      out.points.push_back(full.points[i]);
    }
  }
  FiniteSet carrier(std::move(names));
  const std::size_t n = carrier.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t t = 0; t < T.size() && le; ++t)
        le = Y.leq(out.points[i].apply_index(t), out.points[j].apply_index(t));
      leq[i][j] = le;
    }
  out.poset = FinitePoset(std::move(carrier), std::move(leq));
  return out;
}

EvalMonotoneReport poset_eval_monotone_check(const FinitePoset& T,
                                             const FinitePoset& Y) {
  PosetExponential pe = poset_exponential(T, Y);
  EvalMonotoneReport rep;
  const std::size_t n = pe.points.size();
  for (std::size_t phi = 0; phi < n; ++phi)
    for (std::size_t psi = 0; psi < n; ++psi) {
      if (!pe.poset.leq(phi, psi)) continue;
      for (std::size_t s = 0; s < T.size(); ++s)
        for (std::size_t t = 0; t < T.size(); ++t) {
          if (!T.leq(s, t)) continue;
          ++rep.pairs_checked;
          if (!Y.leq(pe.points[phi].apply_index(s),
                     pe.points[psi].apply_index(t))) {
            if (rep.ok) {
              rep.ok = false;
              rep.violation = EvalViolation{phi, psi, s, t};
            }
            return rep;
          }
        }
    }
  return rep;
}

FiniteSet limit_set(const FinitePoset& P, const std::string& x) {
  const std::size_t xi = P.carrier().index_of(x);
  std::vector<std::string> up;
  for (std::size_t y = 0; y < P.size(); ++y)
    if (P.leq(xi, y)) up.push_back(P.carrier().at(y));
  return FiniteSet(std::move(up));
}

bool limit_continuous(const Mapping& f, const FinitePoset& src,
                      const FinitePoset& dst) {
  for (std::size_t x = 0; x < src.size(); ++x) {
    const std::size_t fx = f.apply_index(x);
    for (std::size_t y = 0; y < src.size(); ++y)
      if (src.leq(x, y) && !dst.leq(fx, f.apply_index(y))) return false;
  }
  return true;
}

}  // namespace fincat
