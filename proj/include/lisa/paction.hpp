#ifndef LISA_PACTION_HPP
#define LISA_PACTION_HPP

#include "lisa/exel.hpp"

namespace lisa {

/// Partial action of a Lie algebra L on a non-associative algebra A: an
/// assignment x -> theta_x, a partial derivation of A whose domain D_x is
/// a two-sided ideal. Table mode carries one entry per element of L;
/// intensional mode derives entries from a rule.
template <class F>
class PartialAction {
public:
  using Entry = PartialDerivation<F>;

  static PartialAction from_table(AlgebraPtr<F> L, AlgebraPtr<F> A, std::vector<Entry> table)
    requires std::same_as<F, PrimeField>
  {
    uint64_t expect = pow_u64(L->field().characteristic(), L->dim());
    if (table.size() != expect)
      throw ValidationError("partial action table must cover all " + std::to_string(expect) +
                            " elements of L");
    for (const auto& e : table)
      if (!A->is_ideal(e.domain()))
        throw ValidationError("domain is not an ideal: " + e.domain().str());
    auto shared = std::make_shared<std::vector<Entry>>(std::move(table));
    return PartialAction(std::move(L), std::move(A),
                         [shared](const Vec<F>& x) { return (*shared)[vec_index(x)]; }, true);
  }

  static PartialAction intensional(AlgebraPtr<F> L, AlgebraPtr<F> A,
                                   std::function<Entry(const Vec<F>&)> rule) {
    return PartialAction(std::move(L), std::move(A), std::move(rule), false);
  }

  const AlgebraPtr<F>& source() const { return L_; }
  const AlgebraPtr<F>& base() const { return A_; }
  bool table_mode() const { return table_mode_; }

  Entry theta(const Vec<F>& x) const { return rule_(x); }

private:
  PartialAction(AlgebraPtr<F> L, AlgebraPtr<F> A, std::function<Entry(const Vec<F>&)> rule,
                bool table)
      : L_(std::move(L)), A_(std::move(A)), rule_(std::move(rule)), table_mode_(table) {}

  AlgebraPtr<F> L_;
  AlgebraPtr<F> A_;
  std::function<Entry(const Vec<F>&)> rule_;
  bool table_mode_;
};

/// The four defining conditions of a partial action, the equivalent-form
/// remark for condition (2), ideal domains, and the premorphism property
/// of the induced map into PDer(A).
template <class F>
CheckReport check_partial_action(const PartialAction<F>& pa, const CheckOptions& opt = {}) {
  CheckReport rep;
  rep.mode = std::same_as<F, PrimeField> ? CheckMode{true, 0, 0}
                                         : CheckMode{false, opt.trials, opt.seed};
  auto xs = detail::source_vectors(*pa.source(), opt);
  const F& f = pa.source()->field();
  size_t adim = pa.base()->dim();
  auto full = Subspace<F>::full(f, adim);
  std::string cex;

  bool all_total = true;
  bool ok = true;
  for (const auto& x : xs) {
    auto th = pa.theta(x);
    if (!pa.base()->is_ideal(th.domain())) {
      ok = false;
      cex = "x=" + vec_str(x);
      break;
    }
    if (th.domain() != full) all_total = false;
  }
  rep.add("pact.ideal", "every domain D_x is a two-sided ideal of A", ok, cex);

  {
    auto th0 = pa.theta(vec_zero(f, pa.source()->dim()));
    bool z_ok = th0.domain() == full && th0.map().is_zero_map();
    rep.add("pact.1", "D_0 = A and theta_0 = 0", z_ok, z_ok ? "" : "theta_0=" + th0.str());
  }

  ok = true;
  cex.clear();
  bool remark_ok = true;
  std::string remark_cex;
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      auto tx = pa.theta(x), ty = pa.theta(y);
      auto txy = pa.theta(vec_add(x, y));
      auto meet = intersect(tx.domain(), ty.domain());
      if (!txy.domain().contains(meet)) {
        ok = false;
        cex = "x=" + vec_str(x) + ", y=" + vec_str(y);
        break;
      }
      for (size_t i = 0; i < meet.dim(); ++i) {
        auto v = meet.basis().row(i);
        if (txy.apply(v) != vec_add(tx.apply(v), ty.apply(v))) {
          ok = false;
          cex = "x=" + vec_str(x) + ", y=" + vec_str(y) + ", a=" + vec_str(v);
          break;
        }
      }
      if (!ok) break;
      if (remark_ok && !(meet == intersect(txy.domain(), tx.domain()))) {
        remark_ok = false;
        remark_cex = "x=" + vec_str(x) + ", y=" + vec_str(y);
      }
    }
    if (!ok) break;
  }
  rep.add("pact.2", "D_x n D_y <= D_(x+y) with theta_(x+y) = theta_x + theta_y there", ok, cex);
  rep.add("pact.d1", "D_x n D_y = D_(x+y) n D_x", remark_ok, remark_cex);

  ok = true;
  cex.clear();
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      auto tx = pa.theta(x), ty = pa.theta(y);
      auto tbr = pa.theta(pa.source()->multiply(x, y));
      auto commutator = pe_add(pe_compose(tx.map(), ty.map()),
                               pe_neg(pe_compose(ty.map(), tx.map())));
      if (!tbr.domain().contains(commutator.domain())) {
        ok = false;
        cex = "x=" + vec_str(x) + ", y=" + vec_str(y);
        break;
      }
      for (size_t i = 0; i < commutator.domain().dim(); ++i) {
        auto v = commutator.domain().basis().row(i);
        if (tbr.apply(v) != commutator.apply(v)) {
          ok = false;
          cex = "x=" + vec_str(x) + ", y=" + vec_str(y) + ", a=" + vec_str(v);
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  rep.add("pact.3",
          "theta_x^-1(D_y) n theta_y^-1(D_x) <= D_[x,y] with theta_[x,y] the commutator there",
          ok, cex);

  ok = true;
  cex.clear();
  for (const auto& x : xs) {
    auto tx = pa.theta(x);
    for (const auto& a : f.scalar_pool()) {
      if (a.is_zero()) continue;
      auto tax = pa.theta(vec_smul(a, x));
      if (!(tax.domain() == tx.domain()) || !(tax.map() == pe_smul(a, tx.map()))) {
        ok = false;
        cex = "x=" + vec_str(x) + ", a=" + a.str();
        break;
      }
    }
    if (!ok) break;
  }
  rep.add("pact.4", "D_(a x) = D_x and theta_(a x) = a theta_x, a != 0", ok, cex);

  {
    PDerCarrier<F> pder(pa.base());
    Premorphism<F, PDerCarrier<F>> pm{pa.source(), &pder,
                                      [&pa](const Vec<F>& x) { return pa.theta(x); },
                                      "induced"};
    auto sub = check_premorphism(pm, opt);
    for (auto& r : sub.results) {
      r.axiom = "pact." + r.axiom;
      rep.results.push_back(r);
    }
  }

  rep.add("pact.scope", all_total ? "global (every D_x = A)" : "properly partial", true, "");
  return rep;
}

/// Strongness: theta_x^-1(D_y) n theta_y^-1(D_x) = D_x n D_y n D_[x,y].
template <class F>
CheckReport check_strong_action(const PartialAction<F>& pa, const CheckOptions& opt = {}) {
  CheckReport rep;
  rep.mode = std::same_as<F, PrimeField> ? CheckMode{true, 0, 0}
                                         : CheckMode{false, opt.trials, opt.seed};
  auto xs = detail::source_vectors(*pa.source(), opt);
  std::string cex;
  bool ok = true;
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      auto tx = pa.theta(x), ty = pa.theta(y);
      auto lhs = intersect(partial_preimage(tx.map(), ty.domain()),
                           partial_preimage(ty.map(), tx.domain()));
      auto rhs = intersect(intersect(tx.domain(), ty.domain()),
                           pa.theta(pa.source()->multiply(x, y)).domain());
      if (!(lhs == rhs)) {
        ok = false;
        cex = "x=" + vec_str(x) + ", y=" + vec_str(y);
        break;
      }
    }
    if (!ok) break;
  }
  rep.add("pact.strong",
          "theta_x^-1(D_y) n theta_y^-1(D_x) = D_x n D_y n D_[x,y]", ok, cex);
  return rep;
}

// ---------------------------------------------------------------------------
// restriction of a global action

/// A global action eta: L -> Der(B) (one derivation matrix per basis
/// vector of L; eta extends linearly since it is a homomorphism), plus an
/// ideal A of B to restrict to.
template <class F>
class GlobalRestriction {
public:
  static GlobalRestriction make(AlgebraPtr<F> L, AlgebraPtr<F> B, Subspace<F> ideal,
                                std::vector<Matrix<F>> eta_basis) {
    if (eta_basis.size() != L->dim())
      throw DimensionMismatch("one derivation matrix per basis vector of L");
    if (!B->is_ideal(ideal)) throw ValidationError("A is not an ideal of B");
    for (size_t i = 0; i < eta_basis.size(); ++i)
      PartialDerivation<F>::make(B, Subspace<F>::full(B->field(), B->dim()), eta_basis[i]);
    // eta must be a Lie algebra homomorphism into Der(B)
    for (size_t i = 0; i < L->dim(); ++i)
      for (size_t j = 0; j < L->dim(); ++j) {
        Matrix<F> comm = eta_basis[i] * eta_basis[j] - eta_basis[j] * eta_basis[i];
        Matrix<F> want(B->field(), B->dim(), B->dim());
        auto coeffs = L->basis_product(i, j);
        for (size_t k = 0; k < L->dim(); ++k)
          if (!coeffs[k].is_zero()) want = want + eta_basis[k].scaled(coeffs[k]);
        if (comm != want)
          throw ValidationError("eta is not a homomorphism on basis pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
    return GlobalRestriction(std::move(L), std::move(B), std::move(ideal),
                             std::move(eta_basis));
  }

  const AlgebraPtr<F>& source() const { return L_; }
  const AlgebraPtr<F>& big() const { return B_; }
  const Subspace<F>& ideal() const { return ideal_; }

  Matrix<F> eta(const Vec<F>& x) const {
    Matrix<F> m(B_->field(), B_->dim(), B_->dim());
    for (size_t i = 0; i < L_->dim(); ++i)
      if (!x[i].is_zero()) m = m + eta_[i].scaled(x[i]);
    return m;
  }

private:
  GlobalRestriction(AlgebraPtr<F> L, AlgebraPtr<F> B, Subspace<F> ideal,
                    std::vector<Matrix<F>> eta)
      : L_(std::move(L)), B_(std::move(B)), ideal_(std::move(ideal)), eta_(std::move(eta)) {}

  AlgebraPtr<F> L_;
  AlgebraPtr<F> B_;
  Subspace<F> ideal_;
  std::vector<Matrix<F>> eta_;
};

template <class F>
struct RestrictedAction {
  PartialAction<F> action;
  AlgebraPtr<F> ideal_algebra;  // A with its induced structure
  Matrix<F> inclusion;          // A-coordinates -> B-coordinates
};

/// D_x = A n eta_x^{-1}(A), theta_x = eta_x restricted, all expressed in
/// the coordinates of A.
template <class F>
RestrictedAction<F> restrict_global(const GlobalRestriction<F>& gr) {
  const F& f = gr.big()->field();
  auto [ideal_alg_val, incl] = subalgebra_as_algebra(*gr.big(), gr.ideal(), gr.big()->flavor());
  auto A = std::make_shared<StructAlgebra<F>>(ideal_alg_val);
  Matrix<F> inclusion = incl;
  Subspace<F> ideal = gr.ideal();

  auto rule = [gr, A, inclusion, ideal, f](const Vec<F>& x) {
    Matrix<F> ex = gr.eta(x);
    Subspace<F> Dx_in_B = intersect(ideal, Subspace<F>::preimage(ex, ideal));
    Subspace<F> Dx = subspace_in_coords(Dx_in_B, ideal);
    Matrix<F> act(f, A->dim(), Dx.dim());
    for (size_t j = 0; j < Dx.dim(); ++j) {
      auto in_B = inclusion.apply(Dx.basis().row(j));
      auto image = ex.apply(in_B);
      auto coords = ideal.coordinates(image);
      if (!coords) throw Error("eta_x does not map D_x into A");
      act.set_col(j, *coords);
    }
    return PartialDerivation<F>::make(A, Dx, act);
  };
  return RestrictedAction<F>{PartialAction<F>::intensional(gr.source(), A, rule), A,
                             inclusion};
}

/// The identity restrictions of global actions satisfy:
/// theta_x^-1(D_y) n theta_y^-1(D_x) = D_[x,y] n theta_x^-1(D_y) n D_y.
template <class F>
CheckReport check_restriction_identity(const PartialAction<F>& pa,
                                       const CheckOptions& opt = {}) {
  CheckReport rep;
  rep.mode = std::same_as<F, PrimeField> ? CheckMode{true, 0, 0}
                                         : CheckMode{false, opt.trials, opt.seed};
  auto xs = detail::source_vectors(*pa.source(), opt);
  std::string cex;
  bool ok = true;
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      auto tx = pa.theta(x), ty = pa.theta(y);
      auto txinv = partial_preimage(tx.map(), ty.domain());
      auto tyinv = partial_preimage(ty.map(), tx.domain());
      auto lhs = intersect(txinv, tyinv);
      auto dbr = pa.theta(pa.source()->multiply(x, y)).domain();
      auto rhs = intersect(dbr, intersect(txinv, ty.domain()));
      auto rhs2 = intersect(dbr, intersect(tx.domain(), tyinv));
      if (!(lhs == rhs) || !(lhs == rhs2)) {
        ok = false;
        cex = "x=" + vec_str(x) + ", y=" + vec_str(y);
        break;
      }
    }
    if (!ok) break;
  }
  rep.add("pact.restr",
          "theta_x^-1(D_y) n theta_y^-1(D_x) = D_[x,y] n theta_x^-1(D_y) n D_y", ok, cex);
  return rep;
}

// ---------------------------------------------------------------------------
// correspondence with homomorphisms E(L) -> PDer_A(A)

template <class F>
Premorphism<F, PDerClassCarrier<F>> action_premorphism(const PartialAction<F>& pa,
                                                       const PDerClassCarrier<F>& target) {
  return Premorphism<F, PDerClassCarrier<F>>{
      pa.source(), &target, [&pa](const Vec<F>& x) { return pa.theta(x); }, "action"};
}

/// theta_x = psi(tau(x)) for a homomorphism psi defined on E(L).
template <class F, class Hom>
PartialAction<F> action_from_hom(AlgebraPtr<F> L, AlgebraPtr<F> A, const ELCarrier<F>& el,
                                 Hom psi) {
  return PartialAction<F>::intensional(
      std::move(L), std::move(A),
      [&el, psi](const Vec<F>& x) { return psi(el.tau(x)); });
}

/// Full instance verification of the one-to-one correspondence between
/// class partial actions of L on A and homomorphisms E(L) -> PDer_A(A):
/// enumerates both sides, maps each action through the extension of its
/// premorphism, and checks the two round trips.
inline CheckReport check_action_hom_bijection(AlgebraPtr<PrimeField> L,
                                              const PDerClassCarrier<PrimeField>& target,
                                              size_t max_actions = 4096) {
  CheckReport rep;
  rep.mode = CheckMode{true, 0, 0};
  const PrimeField& f = L->field();
  ELCarrier<PrimeField> el(L);
  FiniteOps<ELCarrier<PrimeField>> s(el);
  FiniteOps<PDerClassCarrier<PrimeField>> t(target);

  // all homomorphisms E(L) -> PDer_A(A)
  HomSearchConfig cfg;
  cfg.require_mul = true;
  cfg.max_solutions = 4096;
  HomSearch<ELCarrier<PrimeField>, PDerClassCarrier<PrimeField>> search(s, t, cfg);
  auto homs = search.run({});

  // all class partial actions: tables over L with theta_0 = 0, filtered
  uint64_t slots = pow_u64(f.characteristic(), L->dim()) - 1;
  uint64_t total = 1;
  for (uint64_t i = 0; i < slots; ++i) {
    total *= t.n();
    if (total > max_actions) throw Error("action enumeration bound exceeded");
  }
  auto telems = target.elements();
  std::vector<std::vector<PartialDerivation<PrimeField>>> actions;
  for (uint64_t code = 0; code < total; ++code) {
    std::vector<PartialDerivation<PrimeField>> table;
    table.push_back(target.zero());
    uint64_t rest = code;
    for (uint64_t i = 0; i < slots; ++i) {
      table.push_back(telems[rest % t.n()]);
      rest /= t.n();
    }
    auto pa = PartialAction<PrimeField>::from_table(L, target.base(), table);
    if (check_partial_action(pa).ok()) actions.push_back(std::move(table));
  }

  rep.add("cor.count",
          "as many class partial actions as homomorphisms (" +
              std::to_string(actions.size()) + " each)",
          actions.size() == homs.size(),
          std::to_string(actions.size()) + " actions vs " + std::to_string(homs.size()) +
              " homomorphisms");

  // forward: each action's extension is one of the homs; all distinct; round trips
  std::vector<std::vector<int>> forwarded;
  bool fwd_ok = true, round_ok = true;
  std::string cex, round_cex;
  for (const auto& table : actions) {
    auto pa = PartialAction<PrimeField>::from_table(L, target.base(), table);
    auto ext = extend_premorphism(action_premorphism(pa, target));
    std::vector<int> tab(s.n());
    for (int i = 0; i < s.n(); ++i) tab[i] = t.index_of(ext.eval(s.element(i)));
    if (std::find(homs.begin(), homs.end(), tab) == homs.end()) {
      fwd_ok = false;
      cex = "action with theta_(e1) = " + table[1].str();
    }
    // action -> hom -> action: psi(tau(x)) must reproduce theta_x
    for (const auto& x : all_vectors(f, L->dim()))
      if (!(ext.eval(el.tau(x)) == pa.theta(x))) {
        round_ok = false;
        round_cex = "x=" + vec_str(x);
      }
    forwarded.push_back(std::move(tab));
  }
  std::sort(forwarded.begin(), forwarded.end());
  bool injective = std::adjacent_find(forwarded.begin(), forwarded.end()) == forwarded.end();
  rep.add("cor.forward", "every class action extends to a homomorphism", fwd_ok, cex);
  rep.add("cor.inj", "the correspondence is injective", injective, "");
  bool surj = forwarded.size() == homs.size();
  if (surj) {
    auto sorted_homs = homs;
    std::sort(sorted_homs.begin(), sorted_homs.end());
    surj = (forwarded == sorted_homs);
  }
  rep.add("cor.surj", "every homomorphism arises from a class action", surj, "");
  rep.add("cor.round", "action -> homomorphism -> action is the identity", round_ok, round_cex);

  // hom -> action -> hom: by uniqueness of the extension
  bool back_ok = true;
  std::string back_cex;
  for (const auto& hom : homs) {
    auto psi = [&](const ELElement<PrimeField>& e) { return t.element(hom[s.index_of(e)]); };
    auto pa = action_from_hom(L, target.base(), el, psi);
    if (!check_partial_action(pa).ok()) {
      back_ok = false;
      back_cex = "composite with tau is not a partial action";
      break;
    }
    auto ext = extend_premorphism(action_premorphism(pa, target));
    for (int i = 0; i < s.n(); ++i)
      if (t.index_of(ext.eval(s.element(i))) != hom[i]) {
        back_ok = false;
        back_cex = "at " + s.show(i);
        break;
      }
    if (!back_ok) break;
  }
  rep.add("cor.round2", "homomorphism -> action -> homomorphism is the identity", back_ok,
          back_cex);
  return rep;
}

}  // namespace lisa

#endif
