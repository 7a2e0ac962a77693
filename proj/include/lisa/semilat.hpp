#ifndef LISA_SEMILAT_HPP
#define LISA_SEMILAT_HPP

#include <bit>

#include "lisa/algebra.hpp"
#include "lisa/carrier.hpp"

namespace lisa {

/// Finite meet semilattice as an explicit table, with an optional unit.
class MeetSemilattice {
public:
  static MeetSemilattice make(std::vector<std::string> ids, std::vector<int> meet,
                              std::optional<int> unit = std::nullopt) {
    MeetSemilattice l;
    l.ids_ = std::move(ids);
    l.meet_ = std::move(meet);
    l.unit_ = unit;
    size_t n = l.ids_.size();
    if (l.meet_.size() != n * n) throw DimensionMismatch("meet table size mismatch");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        int m = l.meet_[i * n + j];
        if (m < 0 || (size_t)m >= n) throw ValidationError("meet table entry out of range");
        if (m != l.meet_[j * n + i]) throw ValidationError("meet not commutative");
      }
    for (size_t i = 0; i < n; ++i)
      if ((size_t)l.meet_[i * n + i] != i) throw ValidationError("meet not idempotent");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k)
          if (l.meet(l.meet(i, j), (int)k) != l.meet((int)i, l.meet(j, (int)k)))
            throw ValidationError("meet not associative");
    if (unit) {
      if (*unit < 0 || (size_t)*unit >= n) throw ValidationError("unit out of range");
      for (size_t i = 0; i < n; ++i)
        if ((size_t)l.meet(*unit, (int)i) != i) throw ValidationError("unit law fails");
    }
    return l;
  }

  size_t size() const { return ids_.size(); }
  const std::string& id(int i) const { return ids_.at(i); }
  const std::vector<std::string>& ids() const { return ids_; }
  int index_of(const std::string& id) const {
    for (size_t i = 0; i < ids_.size(); ++i)
      if (ids_[i] == id) return (int)i;
    throw Error("unknown semilattice element: " + id);
  }
  int meet(int i, int j) const { return meet_[(size_t)i * ids_.size() + j]; }
  std::optional<int> unit() const { return unit_; }
  bool leq(int i, int j) const { return meet(i, j) == i; }

private:
  std::vector<std::string> ids_;
  std::vector<int> meet_;
  std::optional<int> unit_;
};

/// Powerset of an n-point set, ordered by inclusion, meet = intersection,
/// unit = the full set. Element i is the bitmask i.
inline MeetSemilattice powerset_semilattice(size_t npoints) {
  size_t n = size_t(1) << npoints;
  std::vector<std::string> ids;
  for (size_t mask = 0; mask < n; ++mask) {
    std::string s = "{";
    bool first = true;
    for (size_t b = 0; b < npoints; ++b)
      if (mask & (size_t(1) << b)) {
        if (!first) s += ",";
        s += std::to_string(b + 1);
        first = false;
      }
    ids.push_back(s + "}");
  }
  std::vector<int> meet(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) meet[i * n + j] = int(i & j);
  return MeetSemilattice::make(std::move(ids), std::move(meet), int(n - 1));
}

/// Presheaf of algebras on a finite meet semilattice: one algebra per
/// element and a restriction homomorphism for every comparable pair,
/// subject to functoriality along chains.
template <class F>
class Presheaf {
public:
  static Presheaf make(MeetSemilattice base, std::vector<StructAlgebra<F>> objects,
                       std::map<std::pair<int, int>, Matrix<F>> restrictions) {
    Presheaf p;
    p.base_ = std::move(base);
    p.objects_ = std::move(objects);
    p.restr_ = std::move(restrictions);
    size_t n = p.base_.size();
    if (p.objects_.size() != n) throw DimensionMismatch("one algebra per lattice element");
    for (size_t hi = 0; hi < n; ++hi)
      for (size_t lo = 0; lo < n; ++lo) {
        if (hi == lo || !p.base_.leq((int)lo, (int)hi)) continue;
        auto it = p.restr_.find({(int)hi, (int)lo});
        if (it == p.restr_.end())
          throw ValidationError("missing restriction " + p.base_.id((int)hi) + " -> " +
                                p.base_.id((int)lo));
        // restriction maps must be algebra homomorphisms
        auto src = std::make_shared<StructAlgebra<F>>(p.objects_[hi]);
        auto dst = std::make_shared<StructAlgebra<F>>(p.objects_[lo]);
        AlgebraHom<F>::make(src, dst, it->second);
      }
    // functoriality on chains hi >= mid >= lo
    for (size_t hi = 0; hi < n; ++hi)
      for (size_t mid = 0; mid < n; ++mid)
        for (size_t lo = 0; lo < n; ++lo) {
          if (!(p.base_.leq((int)mid, (int)hi) && p.base_.leq((int)lo, (int)mid))) continue;
          Matrix<F> composed = p.restrict_matrix((int)mid, (int)lo) *
                               p.restrict_matrix((int)hi, (int)mid);
          if (composed != p.restrict_matrix((int)hi, (int)lo))
            throw ValidationError("functoriality fails along " + p.base_.id((int)hi) +
                                  " >= " + p.base_.id((int)mid) + " >= " +
                                  p.base_.id((int)lo));
        }
    return p;
  }

  const MeetSemilattice& base() const { return base_; }
  const StructAlgebra<F>& object(int i) const { return objects_.at(i); }

  Matrix<F> restrict_matrix(int hi, int lo) const {
    if (hi == lo) return Matrix<F>::identity(objects_[hi].field(), objects_[hi].dim());
    auto it = restr_.find({hi, lo});
    if (it == restr_.end())
      throw Error("no restriction " + base_.id(hi) + " -> " + base_.id(lo));
    return it->second;
  }

  Vec<F> restrict(int hi, int lo, const Vec<F>& v) const {
    if (hi == lo) return v;
    return restrict_matrix(hi, lo).apply(v);
  }

  const std::map<std::pair<int, int>, Matrix<F>>& restrictions() const { return restr_; }

private:
  MeetSemilattice base_;
  std::vector<StructAlgebra<F>> objects_;
  std::map<std::pair<int, int>, Matrix<F>> restr_;
};

/// Element of the disjoint union S_F, tagged by its lattice level.
template <class F>
struct SLElement {
  int level = 0;
  Vec<F> value;

  bool operator==(const SLElement& o) const { return level == o.level && value == o.value; }
  bool operator!=(const SLElement& o) const { return !(*this == o); }
  bool operator<(const SLElement& o) const {
    if (level != o.level) return level < o.level;
    return value < o.value;
  }
};

/// The carrier S_F = disjoint union of the presheaf's algebras, with
/// x + y and x y computed after restriction to the meet level.
template <class F>
class SFCarrier {
public:
  using Element = SLElement<F>;
  using Field = F;

  explicit SFCarrier(std::shared_ptr<const Presheaf<F>> p) : p_(std::move(p)) {
    if (p_->base().size() == 0) throw Error("empty lattice");
    f_ = p_->object(0).field();
  }

  const F& field() const { return *f_; }
  const Presheaf<F>& presheaf() const { return *p_; }

  Element make(int level, Vec<F> v) const {
    if (v.size() != (size_t)p_->object(level).dim())
      throw DimensionMismatch("value dimension does not match its level");
    return Element{level, std::move(v)};
  }

  Element add(const Element& x, const Element& y) const {
    int lev = p_->base().meet(x.level, y.level);
    return Element{lev, vec_add(p_->restrict(x.level, lev, x.value),
                                p_->restrict(y.level, lev, y.value))};
  }
  Element neg(const Element& x) const { return Element{x.level, vec_neg(x.value)}; }
  Element smul(const typename F::Element& c, const Element& x) const {
    return Element{x.level, vec_smul(c, x.value)};
  }
  Element mul(const Element& x, const Element& y) const {
    int lev = p_->base().meet(x.level, y.level);
    return Element{lev, p_->object(lev).multiply(p_->restrict(x.level, lev, x.value),
                                                 p_->restrict(y.level, lev, y.value))};
  }
  Element zero() const
  // the additive identity lives at the unit level when the lattice has one
  {
    auto u = p_->base().unit();
    if (!u) throw Error("carrier has no zero: lattice has no unit");
    return Element{*u, vec_zero(field(), p_->object(*u).dim())};
  }

  std::vector<Element> elements() const
    requires std::same_as<F, PrimeField>
  {
    std::vector<Element> out;
    for (size_t lev = 0; lev < p_->base().size(); ++lev) {
      size_t d = p_->object((int)lev).dim();
      uint64_t total = pow_u64(field().characteristic(), d);
      for (uint64_t i = 0; i < total; ++i)
        out.push_back(Element{(int)lev, vec_from_index(field(), d, i)});
    }
    return out;
  }

  Element sample(std::mt19937_64& rng) const {
    int lev = int(rng() % p_->base().size());
    Vec<F> v(p_->object(lev).dim(), field().zero());
    for (auto& c : v) c = field().sample(rng);
    return Element{lev, v};
  }

  std::string show(const Element& x) const {
    return p_->base().id(x.level) + ":" + vec_str(x.value);
  }

private:
  std::shared_ptr<const Presheaf<F>> p_;
  std::optional<F> f_;
};

// ---------------------------------------------------------------------------
// fixture presheaves

/// Presheaf over a two-element chain hi >= lo realizing a single algebra
/// homomorphism as its restriction.
template <class F>
Presheaf<F> two_chain_presheaf(const StructAlgebra<F>& hi, const StructAlgebra<F>& lo,
                               const Matrix<F>& hom) {
  std::vector<int> meet = {0, 0, 0, 1};  // 0 = lo, 1 = hi
  MeetSemilattice base = MeetSemilattice::make({"lo", "hi"}, meet, 1);
  std::map<std::pair<int, int>, Matrix<F>> restr;
  restr.emplace(std::make_pair(1, 0), hom);
  return Presheaf<F>::make(base, {lo, hi}, std::move(restr));
}

/// Partial functions on an n-point set with values in F: level U carries
/// the functions U -> F under pointwise product, restrictions restrict.
template <class F>
Presheaf<F> partial_functions_presheaf(size_t npoints, const F& f) {
  MeetSemilattice base = powerset_semilattice(npoints);
  std::vector<StructAlgebra<F>> objects;
  for (size_t mask = 0; mask < base.size(); ++mask)
    objects.push_back(diagonal_assoc(std::popcount(mask), f));
  std::map<std::pair<int, int>, Matrix<F>> restr;
  for (size_t hi = 0; hi < base.size(); ++hi)
    for (size_t lo = 0; lo < base.size(); ++lo) {
      if (hi == lo || (hi & lo) != lo) continue;
      // select the coordinates of lo inside hi
      Matrix<F> m(f, std::popcount(lo), std::popcount(hi));
      size_t r = 0;
      for (size_t b = 0; b < npoints; ++b) {
        if (!(lo & (size_t(1) << b))) continue;
        size_t c = 0;
        for (size_t b2 = 0; b2 < npoints; ++b2) {
          if (!(hi & (size_t(1) << b2))) continue;
          if (b2 == b) m.at(r, c) = f.one();
          ++c;
        }
        ++r;
      }
      restr.emplace(std::make_pair((int)hi, (int)lo), m);
    }
  return Presheaf<F>::make(base, std::move(objects), std::move(restr));
}

// ---------------------------------------------------------------------------
// decomposition: a finite semilattice-of-algebras carrier into a presheaf

template <class F>
struct Decomposition {
  Presheaf<F> presheaf;
  // carrier element (rendered) -> (level, coordinates in the level basis)
  std::map<std::string, std::pair<int, Vec<F>>> chart;
  std::vector<std::string> level_ids;
};

/// Rebuild the presheaf hiding inside a finite semilattice of algebras:
/// levels are the idempotents under e ^ f = e + f, the level algebra at e
/// is {x : 0_x = e} with basis extracted greedily, and the restriction
/// along e >= f is the translation x -> f + x.
template <class C>
Decomposition<typename C::Field> decompose(const C& c, Flavor flavor) {
  using F = typename C::Field;
  using K = typename F::Element;
  static_assert(std::same_as<F, PrimeField>, "decomposition enumerates finite carriers");
  FiniteOps<C> o(c);
  const F& f = c.field();
  uint64_t p = f.characteristic();

  const auto& idems = o.idempotents();
  size_t nl = idems.size();
  std::map<int, int> level_of_idem;
  for (size_t i = 0; i < nl; ++i) level_of_idem[idems[i]] = (int)i;

  std::vector<std::string> ids;
  for (int e : idems) ids.push_back(o.show(e));
  std::vector<int> meet(nl * nl);
  for (size_t i = 0; i < nl; ++i)
    for (size_t j = 0; j < nl; ++j) {
      auto it = level_of_idem.find(o.add(idems[i], idems[j]));
      if (it == level_of_idem.end()) throw Error("idempotents not closed under +");
      meet[i * nl + j] = it->second;
    }
  std::optional<int> unit;
  auto z = o.zero();
  if (z) unit = level_of_idem.at(*z);
  MeetSemilattice base = MeetSemilattice::make(ids, std::move(meet), unit);

  // per-level basis extraction and coordinates
  std::vector<std::vector<int>> members(nl);
  for (int i = 0; i < o.n(); ++i) members[level_of_idem.at(o.zero_of(i))].push_back(i);

  std::vector<std::vector<int>> bases(nl);
  std::vector<std::map<int, Vec<F>>> coords(nl);
  auto scalars = f.all_elements();
  for (size_t lev = 0; lev < nl; ++lev) {
    int e = idems[(int)lev];
    // span of the current basis: all linear combinations, via carrier ops
    auto respan = [&]() {
      coords[lev].clear();
      size_t k = bases[lev].size();
      uint64_t total = pow_u64(p, k);
      for (uint64_t code = 0; code < total; ++code) {
        auto cvec = vec_from_index(f, k, code);
        int acc = e;
        for (size_t t = 0; t < k; ++t)
          acc = o.add(acc, o.smul(cvec[t], bases[lev][t]));
        coords[lev].emplace(acc, cvec);
      }
    };
    respan();
    for (int x : members[lev]) {
      if (coords[lev].count(x)) continue;
      bases[lev].push_back(x);
      respan();
    }
    if (coords[lev].size() != members[lev].size())
      throw Error("level " + ids[lev] + " is not a vector space over the base field");
  }

  // level algebras from structure constants
  std::vector<StructAlgebra<F>> objects;
  for (size_t lev = 0; lev < nl; ++lev) {
    size_t k = bases[lev].size();
    std::vector<K> table(k * k * k, f.zero());
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) {
        int prod = o.mul(bases[lev][i], bases[lev][j]);
        auto it = coords[lev].find(prod);
        if (it == coords[lev].end())
          throw Error("level " + ids[lev] + " is not closed under the product");
        for (size_t t = 0; t < k; ++t) table[(i * k + j) * k + t] = it->second[t];
      }
    objects.push_back(StructAlgebra<F>::make(f, k, flavor, std::move(table)));
  }

  // restrictions: translation by the lower idempotent
  std::map<std::pair<int, int>, Matrix<F>> restr;
  for (size_t hi = 0; hi < nl; ++hi)
    for (size_t lo = 0; lo < nl; ++lo) {
      if (hi == lo || !base.leq((int)lo, (int)hi)) continue;
      Matrix<F> m(f, bases[lo].size(), bases[hi].size());
      for (size_t j = 0; j < bases[hi].size(); ++j) {
        int moved = o.add(idems[(int)lo], bases[hi][j]);
        auto it = coords[lo].find(moved);
        if (it == coords[lo].end()) throw Error("translation leaves the target level");
        m.set_col(j, it->second);
      }
      restr.emplace(std::make_pair((int)hi, (int)lo), m);
    }

  Decomposition<F> dec{Presheaf<F>::make(std::move(base), std::move(objects), std::move(restr)),
                       {},
                       ids};
  for (int i = 0; i < o.n(); ++i) {
    int lev = level_of_idem.at(o.zero_of(i));
    dec.chart.emplace(o.show(i), std::make_pair(lev, coords[lev].at(i)));
  }
  return dec;
}

/// Witness that the carrier is isomorphic to the carrier rebuilt from its
/// own decomposition: x -> (level of 0_x, coordinates of x) preserves all
/// three operations, bijectively.
template <class C>
CheckReport roundtrip_iso(const C& c, Flavor flavor) {
  using F = typename C::Field;
  CheckReport rep;
  rep.mode = CheckMode{true, 0, 0};
  auto dec = decompose(c, flavor);
  auto ps = std::make_shared<Presheaf<F>>(dec.presheaf);
  SFCarrier<F> rebuilt(ps);

  FiniteOps<C> o(c);
  FiniteOps<SFCarrier<F>> r(rebuilt);
  auto to_r = [&](int i) {
    const auto& [lev, cv] = dec.chart.at(o.show(i));
    return r.index_of(SLElement<F>{lev, cv});
  };

  std::vector<int> image(o.n());
  for (int i = 0; i < o.n(); ++i) image[i] = to_r(i);
  std::vector<bool> hit(r.n(), false);
  bool bij = (o.n() == r.n());
  for (int i : image) {
    if (hit[i]) bij = false;
    hit[i] = true;
  }
  rep.add("iso.1", "the chart is a bijection onto the rebuilt carrier", bij, "");

  std::string cex;
  bool ok = o.for_pairs([&](int i, int j) {
    if (image[o.add(i, j)] == r.add(image[i], image[j]) &&
        image[o.mul(i, j)] == r.mul(image[i], image[j]))
      return true;
    cex = "x=" + o.show(i) + ", y=" + o.show(j);
    return false;
  });
  rep.add("iso.2", "the chart preserves + and the product", ok, cex);

  ok = true;
  cex.clear();
  for (int i = 0; i < o.n() && ok; ++i)
    for (const auto& a : o.scalars())
      if (image[o.smul(a, i)] != r.smul(a, image[i])) {
        ok = false;
        cex = "x=" + o.show(i) + ", a=" + a.str();
        break;
      }
  rep.add("iso.3", "the chart preserves scalars", ok, cex);
  return rep;
}

/// Instance form of the equivalence between presheaves on a fixed lattice
/// and semilattices of algebras: decomposing the carrier built from a
/// presheaf returns an isomorphic presheaf (levels matched through the
/// idempotents (lambda, 0), objects through per-level linear charts that
/// are algebra isomorphisms commuting with the restrictions).
template <class F>
CheckReport presheaf_roundtrip(const Presheaf<F>& p, Flavor flavor) {
  static_assert(std::same_as<F, PrimeField>);
  CheckReport rep;
  rep.mode = CheckMode{true, 0, 0};
  auto ps = std::make_shared<Presheaf<F>>(p);
  SFCarrier<F> sf(ps);
  auto dec = decompose(sf, flavor);
  const F& f = sf.field();

  // match levels: lambda -> the level of the idempotent (lambda, 0)
  size_t nl = p.base().size();
  std::vector<int> match(nl);
  std::vector<Matrix<F>> charts;
  bool levels_ok = (dec.presheaf.base().size() == nl);
  for (size_t lev = 0; lev < nl && levels_ok; ++lev) {
    SLElement<F> idem{(int)lev, vec_zero(f, p.object((int)lev).dim())};
    auto it = dec.chart.find(sf.show(idem));
    if (it == dec.chart.end()) {
      levels_ok = false;
      break;
    }
    match[lev] = it->second.first;
  }
  rep.add("peq.1", "levels correspond to the idempotents (lambda,0)", levels_ok, "");
  if (!levels_ok) return rep;

  bool meets_ok = true;
  std::string cex;
  for (size_t i = 0; i < nl && meets_ok; ++i)
    for (size_t j = 0; j < nl; ++j)
      if (match[p.base().meet((int)i, (int)j)] !=
          dec.presheaf.base().meet(match[i], match[j])) {
        meets_ok = false;
        cex = p.base().id((int)i) + ", " + p.base().id((int)j);
        break;
      }
  rep.add("peq.2", "the level matching preserves meets", meets_ok, cex);

  // per-level charts: basis vector e_t at level lambda -> its coordinates
  bool charts_ok = true;
  cex.clear();
  for (size_t lev = 0; lev < nl && charts_ok; ++lev) {
    size_t d = p.object((int)lev).dim();
    Matrix<F> chart(f, dec.presheaf.object(match[lev]).dim(), d);
    for (size_t t = 0; t < d; ++t) {
      SLElement<F> basis_el{(int)lev, vec_unit(f, d, t)};
      const auto& [lev2, cv] = dec.chart.at(sf.show(basis_el));
      if (lev2 != match[lev]) {
        charts_ok = false;
        cex = "basis vector leaves its level at " + p.base().id((int)lev);
        break;
      }
      chart.set_col(t, cv);
    }
    if (!charts_ok) break;
    if (chart.rank() != d || dec.presheaf.object(match[lev]).dim() != d) {
      charts_ok = false;
      cex = "chart at " + p.base().id((int)lev) + " is not invertible";
      break;
    }
    auto src = std::make_shared<StructAlgebra<F>>(p.object((int)lev));
    auto dst = std::make_shared<StructAlgebra<F>>(dec.presheaf.object(match[lev]));
    try {
      AlgebraHom<F>::make(src, dst, chart);
    } catch (const ValidationError& e) {
      charts_ok = false;
      cex = std::string("chart at ") + p.base().id((int)lev) + ": " + e.what();
      break;
    }
    charts.push_back(chart);
  }
  rep.add("peq.3", "per-level charts are algebra isomorphisms", charts_ok, cex);
  if (!charts_ok) return rep;

  bool nat_ok = true;
  cex.clear();
  for (size_t hi = 0; hi < nl && nat_ok; ++hi)
    for (size_t lo = 0; lo < nl; ++lo) {
      if (hi == lo || !p.base().leq((int)lo, (int)hi)) continue;
      Matrix<F> lhs = charts[lo] * p.restrict_matrix((int)hi, (int)lo);
      Matrix<F> rhs = dec.presheaf.restrict_matrix(match[hi], match[lo]) * charts[hi];
      if (lhs != rhs) {
        nat_ok = false;
        cex = p.base().id((int)hi) + " -> " + p.base().id((int)lo);
        break;
      }
    }
  rep.add("peq.4", "charts commute with the restrictions", nat_ok, cex);
  return rep;
}

}  // namespace lisa

#endif
