#ifndef LISA_PMAPS_HPP
#define LISA_PMAPS_HPP

#include "lisa/algebra.hpp"
#include "lisa/carrier.hpp"

namespace lisa {

/// Linear map defined on a subspace of F^n, with values in F^n. The action
/// matrix is expressed on the canonical (reduced row-echelon) basis of the
/// domain, one column per basis vector, so equality is structural.
template <class F>
class PartialEndo {
public:
  using K = typename F::Element;

  static PartialEndo make(Subspace<F> domain, Matrix<F> action) {
    if (action.rows() != domain.ambient_dim() || action.cols() != domain.dim())
      throw DimensionMismatch("action matrix shape mismatch");
    return PartialEndo(std::move(domain), std::move(action));
  }

  /// Everywhere-defined map given by a square matrix.
  static PartialEndo total(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("total map must be square");
    return PartialEndo(Subspace<F>::full(m.field(), m.rows()), m);
  }

  static PartialEndo identity(const F& f, size_t n) {
    return total(Matrix<F>::identity(f, n));
  }

  static PartialEndo zero_on(const Subspace<F>& domain) {
    return PartialEndo(domain, Matrix<F>(domain.field(), domain.ambient_dim(), domain.dim()));
  }

  const F& field() const { return domain_.field(); }
  size_t ambient_dim() const { return domain_.ambient_dim(); }
  const Subspace<F>& domain() const { return domain_; }
  const Matrix<F>& action() const { return action_; }

  std::vector<K> apply(const std::vector<K>& v) const {
    auto coords = domain_.coordinates(v);
    if (!coords) throw Error("vector outside the domain");
    return action_.apply(*coords);
  }

  bool is_zero_map() const { return action_.is_zero(); }

  bool operator==(const PartialEndo& o) const {
    return domain_ == o.domain_ && action_ == o.action_;
  }
  bool operator!=(const PartialEndo& o) const { return !(*this == o); }
  bool operator<(const PartialEndo& o) const {
    if (domain_ != o.domain_) return domain_ < o.domain_;
    return action_ < o.action_;
  }

  std::string str() const {
    return "{dom=" + domain_.str() + ", act=" + action_.str() + "}";
  }

private:
  PartialEndo(Subspace<F> d, Matrix<F> a) : domain_(std::move(d)), action_(std::move(a)) {}

  Subspace<F> domain_;
  Matrix<F> action_;
};

/// {v in dom(phi) : phi(v) in s}.
template <class F>
Subspace<F> partial_preimage(const PartialEndo<F>& phi, const Subspace<F>& s) {
  if (s.ambient_dim() != phi.ambient_dim())
    throw DimensionMismatch("preimage target ambient mismatch");
  Matrix<F> z = s.annihilator();
  Matrix<F> constraint = z * phi.action();       // on domain coordinates
  Matrix<F> coord_basis = constraint.kernel();   // rows in coordinate space
  Matrix<F> gens = coord_basis * phi.domain().basis();
  return Subspace<F>::span(gens);
}

template <class F>
PartialEndo<F> pe_add(const PartialEndo<F>& a, const PartialEndo<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient mismatch");
  Subspace<F> dom = intersect(a.domain(), b.domain());
  Matrix<F> act(a.field(), a.ambient_dim(), dom.dim());
  for (size_t j = 0; j < dom.dim(); ++j) {
    auto v = dom.basis().row(j);
    act.set_col(j, vec_add(a.apply(v), b.apply(v)));
  }
  return PartialEndo<F>::make(dom, act);
}

template <class F>
PartialEndo<F> pe_smul(const typename F::Element& c, const PartialEndo<F>& a) {
  return PartialEndo<F>::make(a.domain(), a.action().scaled(c));
}

template <class F>
PartialEndo<F> pe_neg(const PartialEndo<F>& a) {
  return pe_smul(-a.field().one(), a);
}

template <class F>
PartialEndo<F> pe_zero_of(const PartialEndo<F>& a) {
  return PartialEndo<F>::zero_on(a.domain());
}

/// Composition a(b(.)) on {v in dom(b) : b(v) in dom(a)}.
template <class F>
PartialEndo<F> pe_compose(const PartialEndo<F>& a, const PartialEndo<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient mismatch");
  Subspace<F> dom = partial_preimage(b, a.domain());
  Matrix<F> act(a.field(), a.ambient_dim(), dom.dim());
  for (size_t j = 0; j < dom.dim(); ++j)
    act.set_col(j, a.apply(b.apply(dom.basis().row(j))));
  return PartialEndo<F>::make(dom, act);
}

/// All partial endomorphisms of F_p^n (domains in enumeration order, action
/// entries in odometer order).
inline std::vector<PartialEndo<PrimeField>> all_partial_endos(const PrimeField& f, size_t n,
                                                              size_t dim_cap = 2) {
  if (n > dim_cap) throw Error("partial endomorphism enumeration bound exceeded");
  std::vector<PartialEndo<PrimeField>> out;
  uint64_t p = f.characteristic();
  for (const auto& dom : enumerate_subspaces(f, n)) {
    size_t entries = n * dom.dim();
    uint64_t total = pow_u64(p, entries);
    for (uint64_t code = 0; code < total; ++code) {
      Matrix<PrimeField> act(f, n, dom.dim());
      uint64_t rest = code;
      for (size_t c = 0; c < dom.dim(); ++c)
        for (size_t r = 0; r < n; ++r) {
          act.at(r, c) = Fp(rest % p, p);
          rest /= p;
        }
      out.push_back(PartialEndo<PrimeField>::make(dom, act));
    }
  }
  return out;
}

/// PEnd(V): inverse semialgebra of partial endomorphisms under pointwise
/// sum on intersected domains and composition on the pulled-back domain.
template <class F>
class PEndCarrier {
public:
  using Element = PartialEndo<F>;
  using Field = F;

  PEndCarrier(const F& f, size_t n, size_t dim_cap = 2) : f_(f), n_(n), cap_(dim_cap) {}

  const F& field() const { return f_; }
  size_t ambient_dim() const { return n_; }

  Element add(const Element& a, const Element& b) const { return pe_add(a, b); }
  Element neg(const Element& a) const { return pe_neg(a); }
  Element smul(const typename F::Element& c, const Element& a) const { return pe_smul(c, a); }
  Element mul(const Element& a, const Element& b) const { return pe_compose(a, b); }
  Element zero() const { return Element::total(Matrix<F>(f_, n_, n_)); }

  std::vector<Element> elements() const
    requires std::same_as<F, PrimeField>
  {
    return all_partial_endos(f_, n_, cap_);
  }

  Element sample(std::mt19937_64& rng) const {
    size_t k = rng() % (n_ + 1);
    Matrix<F> gens(f_, k, n_);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < n_; ++j) gens.at(i, j) = f_.sample(rng);
    Subspace<F> dom = Subspace<F>::span(gens);
    Matrix<F> act(f_, n_, dom.dim());
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < dom.dim(); ++j) act.at(i, j) = f_.sample(rng);
    return Element::make(dom, act);
  }

  std::string show(const Element& a) const { return a.str(); }

private:
  F f_;
  size_t n_, cap_;
};

// ---------------------------------------------------------------------------
// partial derivations

/// Leibniz constraints for a linear map dom -> A as a linear system on the
/// action entries (column-major: unknown (r, c) at index c * n + r). The
/// kernel of the returned matrix is the space of partial derivations on dom.
template <class F>
Matrix<F> leibniz_system(const StructAlgebra<F>& alg, const Subspace<F>& dom) {
  const F& f = alg.field();
  size_t n = alg.dim(), k = dom.dim();
  size_t unknowns = n * k;
  std::vector<std::vector<typename F::Element>> rows;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      auto bi = dom.basis().row(i), bj = dom.basis().row(j);
      auto prod = alg.multiply(bi, bj);
      auto coords = dom.coordinates(prod);
      if (!coords)
        throw NotSubalgebra("domain is not a subalgebra (basis pair " + std::to_string(i) +
                            "," + std::to_string(j) + ")");
      // phi(bi bj) - phi(bi) bj - bi phi(bj) = 0, one equation per output coord
      for (size_t s = 0; s < n; ++s) {
        std::vector<typename F::Element> row(unknowns, f.zero());
        for (size_t c = 0; c < k; ++c)
          if (!(*coords)[c].is_zero())
            for (size_t r = 0; r < n; ++r)
              if (r == s) row[c * n + r] += (*coords)[c];
        for (size_t r = 0; r < n; ++r) {
          auto t2 = alg.multiply(alg.basis_vector(r), bj);  // e_r * bj, weight a_{r,i}
          row[i * n + r] = row[i * n + r] - t2[s];
          auto t3 = alg.multiply(bi, alg.basis_vector(r));  // bi * e_r, weight a_{r,j}
          row[j * n + r] = row[j * n + r] - t3[s];
        }
        rows.push_back(std::move(row));
      }
    }
  if (rows.empty()) return Matrix<F>(f, 0, unknowns);
  return Matrix<F>::from_rows(f, rows);
}

/// Partial derivation: partial endomorphism of the underlying space of an
/// algebra whose domain is a subalgebra and which satisfies the Leibniz
/// identity there.
template <class F>
class PartialDerivation {
public:
  using K = typename F::Element;

  static PartialDerivation make(AlgebraPtr<F> base, Subspace<F> domain, Matrix<F> action) {
    return make(std::move(base), PartialEndo<F>::make(std::move(domain), std::move(action)));
  }

  static PartialDerivation make(AlgebraPtr<F> base, PartialEndo<F> pe) {
    if (pe.ambient_dim() != base->dim())
      throw DimensionMismatch("derivation ambient/algebra mismatch");
    if (!base->is_subalgebra(pe.domain()))
      throw NotSubalgebra("domain is not a subalgebra");
    for (size_t i = 0; i < pe.domain().dim(); ++i)
      for (size_t j = 0; j < pe.domain().dim(); ++j) {
        auto bi = pe.domain().basis().row(i), bj = pe.domain().basis().row(j);
        auto lhs = pe.apply(base->multiply(bi, bj));
        auto rhs = vec_add(base->multiply(pe.apply(bi), bj), base->multiply(bi, pe.apply(bj)));
        if (lhs != rhs)
          throw LeibnizViolation("Leibniz fails on basis pair (" + std::to_string(i) + "," +
                                 std::to_string(j) + "): " + vec_str(bi) + ", " + vec_str(bj));
      }
    return PartialDerivation(std::move(base), std::move(pe));
  }

  const AlgebraPtr<F>& base() const { return base_; }
  const PartialEndo<F>& map() const { return pe_; }
  const Subspace<F>& domain() const { return pe_.domain(); }
  std::vector<K> apply(const std::vector<K>& v) const { return pe_.apply(v); }

  bool operator==(const PartialDerivation& o) const { return pe_ == o.pe_; }
  bool operator!=(const PartialDerivation& o) const { return !(*this == o); }
  bool operator<(const PartialDerivation& o) const { return pe_ < o.pe_; }

  std::string str() const { return pe_.str(); }

private:
  PartialDerivation(AlgebraPtr<F> base, PartialEndo<F> pe)
      : base_(std::move(base)), pe_(std::move(pe)) {}

  AlgebraPtr<F> base_;
  PartialEndo<F> pe_;
};

template <class F>
PartialDerivation<F> pd_add(const PartialDerivation<F>& a, const PartialDerivation<F>& b) {
  return PartialDerivation<F>::make(a.base(), pe_add(a.map(), b.map()));
}

template <class F>
PartialDerivation<F> pd_smul(const typename F::Element& c, const PartialDerivation<F>& a) {
  return PartialDerivation<F>::make(a.base(), pe_smul(c, a.map()));
}

template <class F>
PartialDerivation<F> pd_neg(const PartialDerivation<F>& a) {
  return PartialDerivation<F>::make(a.base(), pe_neg(a.map()));
}

/// [a, b] = ab - ba on dom = a^{-1}(dom b) intersect b^{-1}(dom a); the
/// result is validated as a derivation again.
template <class F>
PartialDerivation<F> pd_bracket(const PartialDerivation<F>& a, const PartialDerivation<F>& b) {
  PartialEndo<F> ab = pe_compose(a.map(), b.map());
  PartialEndo<F> ba = pe_compose(b.map(), a.map());
  return PartialDerivation<F>::make(a.base(), pe_add(ab, pe_neg(ba)));
}

/// All Leibniz actions on a given subalgebra, over a prime field, as the
/// enumerated kernel of the Leibniz system.
inline std::vector<PartialDerivation<PrimeField>> derivations_on(
    const AlgebraPtr<PrimeField>& base, const Subspace<PrimeField>& dom) {
  const PrimeField& f = base->field();
  size_t n = base->dim(), k = dom.dim();
  Matrix<PrimeField> sys = leibniz_system(*base, dom);
  Matrix<PrimeField> ker = sys.kernel();
  std::vector<PartialDerivation<PrimeField>> out;
  uint64_t total = pow_u64(f.characteristic(), ker.rows());
  for (uint64_t code = 0; code < total; ++code) {
    auto coeffs = vec_from_index(f, ker.rows(), code);
    std::vector<Fp> entries(n * k, f.zero());
    for (size_t r = 0; r < ker.rows(); ++r)
      if (!coeffs[r].is_zero())
        for (size_t e = 0; e < entries.size(); ++e) entries[e] += coeffs[r] * ker.at(r, e);
    Matrix<PrimeField> act(f, n, k);
    for (size_t c = 0; c < k; ++c)
      for (size_t r = 0; r < n; ++r) act.at(r, c) = entries[c * n + r];
    out.push_back(PartialDerivation<PrimeField>::make(base, dom, act));
  }
  return out;
}

/// PDer(A): partial derivations of A under the induced operations; a Lie
/// inverse subsemialgebra of PEnd(A)^-.
template <class F>
class PDerCarrier {
public:
  using Element = PartialDerivation<F>;
  using Field = F;

  explicit PDerCarrier(AlgebraPtr<F> base, size_t dim_cap = 3)
      : base_(std::move(base)), cap_(dim_cap) {}

  const F& field() const { return base_->field(); }
  const AlgebraPtr<F>& base() const { return base_; }

  Element add(const Element& a, const Element& b) const { return pd_add(a, b); }
  Element neg(const Element& a) const { return pd_neg(a); }
  Element smul(const typename F::Element& c, const Element& a) const { return pd_smul(c, a); }
  Element mul(const Element& a, const Element& b) const { return pd_bracket(a, b); }
  Element zero() const {
    return Element::make(base_, PartialEndo<F>::total(Matrix<F>(field(), base_->dim(), base_->dim())));
  }

  std::vector<Element> elements() const
    requires std::same_as<F, PrimeField>
  {
    std::vector<Element> out;
    for (const auto& dom : enumerate_subspaces(field(), base_->dim(), cap_)) {
      if (!base_->is_subalgebra(dom)) continue;
      auto ders = derivations_on(base_, dom);
      out.insert(out.end(), ders.begin(), ders.end());
    }
    return out;
  }

  /// Random subalgebra by closure of random vectors, then a random point of
  /// the Leibniz solution space on it.
  Element sample(std::mt19937_64& rng) const {
    const F& f = field();
    size_t n = base_->dim();
    size_t seeds = rng() % 3;
    Matrix<F> gens(f, seeds, n);
    for (size_t i = 0; i < seeds; ++i)
      for (size_t j = 0; j < n; ++j) gens.at(i, j) = f.sample(rng);
    Subspace<F> dom = Subspace<F>::span(gens);
    while (true) {
      Matrix<F> prods(f, dom.dim() * dom.dim(), n);
      for (size_t i = 0; i < dom.dim(); ++i)
        for (size_t j = 0; j < dom.dim(); ++j)
          prods.set_row(i * dom.dim() + j,
                        base_->multiply(dom.basis().row(i), dom.basis().row(j)));
      Subspace<F> next = dom + Subspace<F>::span(prods);
      if (next == dom) break;
      dom = next;
    }
    Matrix<F> ker = leibniz_system(*base_, dom).kernel();
    std::vector<typename F::Element> entries(n * dom.dim(), f.zero());
    for (size_t r = 0; r < ker.rows(); ++r) {
      auto c = f.sample(rng);
      if (!c.is_zero())
        for (size_t e = 0; e < entries.size(); ++e) entries[e] += c * ker.at(r, e);
    }
    Matrix<F> act(f, n, dom.dim());
    for (size_t c = 0; c < dom.dim(); ++c)
      for (size_t r = 0; r < n; ++r) act.at(r, c) = entries[c * n + r];
    return Element::make(base_, dom, act);
  }

  std::string show(const Element& a) const { return a.str(); }

private:
  AlgebraPtr<F> base_;
  size_t cap_;
};

// ---------------------------------------------------------------------------
// class-restricted partial derivations

enum class AlgClass { unital_assoc, semisimple_lie, idempotent };

inline std::string alg_class_name(AlgClass c) {
  switch (c) {
    case AlgClass::unital_assoc: return "unital_assoc";
    case AlgClass::semisimple_lie: return "semisimple_lie";
    case AlgClass::idempotent: return "idempotent";
  }
  return "?";
}

/// Does the subspace, as an algebra in its own right, belong to the class?
template <class F>
bool ideal_in_class(const StructAlgebra<F>& base, const Subspace<F>& ideal, AlgClass cls) {
  Flavor flavor = cls == AlgClass::unital_assoc   ? Flavor::associative
                  : cls == AlgClass::semisimple_lie ? Flavor::lie
                                                    : Flavor::general;
  auto [sub, incl] = subalgebra_as_algebra(base, ideal, flavor);
  switch (cls) {
    case AlgClass::unital_assoc: return sub.find_unit().has_value();
    case AlgClass::semisimple_lie: return sub.is_semisimple_lie();
    case AlgClass::idempotent: return sub.is_idempotent_algebra();
  }
  return false;
}

/// PDer_A(A): partial derivations whose domains are two-sided ideals lying
/// in a fixed class of algebras; a semilattice of Lie algebras.
template <class F>
class PDerClassCarrier {
public:
  using Element = PartialDerivation<F>;
  using Field = F;

  PDerClassCarrier(AlgebraPtr<F> base, AlgClass cls, std::vector<Subspace<F>> ideals)
      : base_(std::move(base)), cls_(cls), ideals_(std::move(ideals)) {
    for (const auto& i : ideals_) {
      if (!base_->is_ideal(i)) throw ValidationError("domain is not an ideal: " + i.str());
      if (!ideal_in_class(*base_, i, cls_))
        throw ValidationError("ideal not in class " + alg_class_name(cls_) + ": " + i.str());
    }
  }

  /// Over a prime field, collect every class ideal by enumeration.
  static PDerClassCarrier enumerate(AlgebraPtr<F> base, AlgClass cls, size_t dim_cap = 3)
    requires std::same_as<F, PrimeField>
  {
    std::vector<Subspace<F>> ideals;
    for (const auto& s : enumerate_subspaces(base->field(), base->dim(), dim_cap))
      if (base->is_ideal(s) && ideal_in_class(*base, s, cls)) ideals.push_back(s);
    return PDerClassCarrier(std::move(base), cls, std::move(ideals));
  }

  const F& field() const { return base_->field(); }
  const AlgebraPtr<F>& base() const { return base_; }
  AlgClass alg_class() const { return cls_; }
  const std::vector<Subspace<F>>& ideals() const { return ideals_; }

  Element add(const Element& a, const Element& b) const { return pd_add(a, b); }
  Element neg(const Element& a) const { return pd_neg(a); }
  Element smul(const typename F::Element& c, const Element& a) const { return pd_smul(c, a); }
  Element mul(const Element& a, const Element& b) const { return pd_bracket(a, b); }
  Element zero() const {
    return Element::make(base_,
                         PartialEndo<F>::total(Matrix<F>(field(), base_->dim(), base_->dim())));
  }

  std::vector<Element> elements() const
    requires std::same_as<F, PrimeField>
  {
    std::vector<Element> out;
    for (const auto& dom : ideals_) {
      auto ders = derivations_on(base_, dom);
      out.insert(out.end(), ders.begin(), ders.end());
    }
    return out;
  }

  Element sample(std::mt19937_64& rng) const {
    const F& f = field();
    size_t n = base_->dim();
    const Subspace<F>& dom = ideals_[rng() % ideals_.size()];
    Matrix<F> ker = leibniz_system(*base_, dom).kernel();
    std::vector<typename F::Element> entries(n * dom.dim(), f.zero());
    for (size_t r = 0; r < ker.rows(); ++r) {
      auto c = f.sample(rng);
      if (!c.is_zero())
        for (size_t e = 0; e < entries.size(); ++e) entries[e] += c * ker.at(r, e);
    }
    Matrix<F> act(f, n, dom.dim());
    for (size_t c = 0; c < dom.dim(); ++c)
      for (size_t r = 0; r < n; ++r) act.at(r, c) = entries[c * n + r];
    return Element::make(base_, dom, act);
  }

  std::string show(const Element& a) const { return a.str(); }

private:
  AlgebraPtr<F> base_;
  AlgClass cls_;
  std::vector<Subspace<F>> ideals_;
};

/// Domain coincidence for class partial derivations:
/// dom(a+b) = K_a n K_b = a^{-1}(K_b) n b^{-1}(K_a) = dom([a,b]).
template <class F>
CheckReport check_u1_domain_coincidence(const PDerClassCarrier<F>& c,
                                        const CheckOptions& opt = {}) {
  CheckReport rep;
  std::string cex;
  auto body = [&](const PartialDerivation<F>& a, const PartialDerivation<F>& b) {
    auto meet = intersect(a.domain(), b.domain());
    auto pulled = intersect(partial_preimage(a.map(), b.domain()),
                            partial_preimage(b.map(), a.domain()));
    auto sum_dom = pd_add(a, b).domain();
    auto br_dom = pd_bracket(a, b).domain();
    if (sum_dom == meet && meet == pulled && pulled == br_dom) return true;
    cex = "phi1=" + a.str() + ", phi2=" + b.str();
    return false;
  };
  if constexpr (std::same_as<F, PrimeField>) {
    auto elems = c.elements();
    rep.mode = CheckMode{true, 0, 0};
    bool ok = true;
    for (const auto& a : elems) {
      for (const auto& b : elems)
        if (!body(a, b)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    rep.add("u1.1", "dom(phi1+phi2) = K1 n K2 = phi1^-1(K2) n phi2^-1(K1) = dom([phi1,phi2])",
            ok, cex);
  } else {
    rep.mode = CheckMode{false, opt.trials, opt.seed};
    std::mt19937_64 rng(opt.seed);
    bool ok = true;
    for (int t = 0; t < opt.trials && ok; ++t) ok = body(c.sample(rng), c.sample(rng));
    rep.add("u1.1", "dom(phi1+phi2) = K1 n K2 = phi1^-1(K2) n phi2^-1(K1) = dom([phi1,phi2])",
            ok, cex);
  }
  return rep;
}

}  // namespace lisa

#endif
