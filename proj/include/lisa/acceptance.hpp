#ifndef LISA_ACCEPTANCE_HPP
#define LISA_ACCEPTANCE_HPP

#include <chrono>

#include "lisa/finverse.hpp"
#include "lisa/paction.hpp"
#include "lisa/semilat.hpp"

namespace lisa {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  double budget = 0.0;
  std::string detail;

  std::string line() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2fs / %.0fs", seconds, budget);
    std::string s = (pass ? "[PASS] " : "[FAIL] ");
    s += "criterion " + std::to_string(number) + " (" + buf + "): " + title;
    if (!pass && !detail.empty()) s += "\n       " + detail;
    return s;
  }
};

namespace acceptance {

namespace detail_acc {

inline void gather(const CheckReport& rep, bool& pass, std::string& detail,
                   const std::string& tag) {
  if (!rep.ok()) {
    pass = false;
    for (const auto& r : rep.results)
      if (r.verdict == Verdict::fail) {
        detail += tag + " " + r.axiom + " failed at " + r.counterexample + "; ";
        break;
      }
  }
}

}  // namespace detail_acc

/// 1. PEnd(F2^2): 29 maps; semialgebra laws + associativity + right
/// distributivity hold exhaustively, left distributivity has a witness.
inline CriterionResult criterion1() {
  CriterionResult c{1, "PEnd(F2^2) laws, exhaustive over 29 partial endomorphisms", true,
                    0, 5, ""};
  PrimeField f2(2);
  PEndCarrier<PrimeField> pend(f2, 2);
  if (pend.elements().size() != 29) {
    c.pass = false;
    c.detail = "expected 29 elements";
  }
  detail_acc::gather(check_naisa(pend), c.pass, c.detail, "naisa");
  detail_acc::gather(check_assoc_rdist(pend), c.pass, c.detail, "assoc/rdist");
  auto cex = find_left_distributivity_counterexample(pend);
  if (!cex) {
    c.pass = false;
    c.detail += "no left-distributivity counterexample found; ";
  } else {
    c.detail += "left distributivity fails at " + *cex;
  }
  return c;
}

/// 2. E(L) for dim-3 L over F2: 51 elements, full Lie battery and the
/// bracket-idempotent identity on all pairs.
inline CriterionResult criterion2() {
  CriterionResult c{2, "E(L) axioms, exhaustive over F2 with dim L = 3 (51 elements)", true,
                    0, 30, ""};
  PrimeField f2(2);
  auto L = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f2));
  ELCarrier<PrimeField> el(L);
  if (el.elements().size() != 51) {
    c.pass = false;
    c.detail = "expected 51 elements";
  }
  detail_acc::gather(check_lie_isa(el), c.pass, c.detail, "lie");
  detail_acc::gather(check_el_identities(el), c.pass, c.detail, "el-identities");
  return c;
}

/// 3. The Heisenberg witness over Q and F3.
inline CriterionResult criterion3() {
  CriterionResult c{3, "Heisenberg fixture over Q and F3", true, 0, 1, ""};
  auto overq = heisenberg_fixture(RationalField{});
  auto overf3 = heisenberg_fixture(PrimeField(3));
  if (!overq.pass) {
    c.pass = false;
    c.detail += "over Q: " + overq.str();
  }
  if (!overf3.pass) {
    c.pass = false;
    c.detail += "over F3: " + overf3.str();
  }
  return c;
}

/// 4. The extension theorem: rho~ of tau is the identity; the extension
/// into class partial derivations is the unique homomorphism.
inline CriterionResult criterion4() {
  CriterionResult c{4, "extension theorem: identity for tau, homomorphism + uniqueness "
                       "into PDer_A(F2 x F2)",
                    true, 0, 60, ""};
  PrimeField f2(2);
  for (bool solvable : {false, true}) {
    auto L = std::make_shared<StructAlgebra<PrimeField>>(solvable ? solvable2(f2)
                                                                  : abelian(2, f2));
    ELCarrier<PrimeField> el(L);
    auto ext = extend_premorphism(tau_premorphism(el));
    for (const auto& x : el.elements())
      if (!(ext.eval(x) == x)) {
        c.pass = false;
        c.detail += "tau~ is not the identity at " + x.str() + "; ";
        break;
      }
    detail_acc::gather(check_extension(ext, el), c.pass, c.detail, "tau-extension");
    auto uniq = verify_unique_extension(ext, el);
    if (!uniq.ok) {
      c.pass = false;
      c.detail += "tau uniqueness: " + uniq.detail + "; ";
    }
  }

  auto L1 = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f2));
  auto A = std::make_shared<StructAlgebra<PrimeField>>(diagonal_assoc(2, f2));
  auto target = PDerClassCarrier<PrimeField>::enumerate(A, AlgClass::unital_assoc);
  auto e1 = Subspace<PrimeField>::line(f2, {f2.one(), f2.zero()});
  std::vector<PartialDerivation<PrimeField>> table = {
      target.zero(),
      PartialDerivation<PrimeField>::make(A, PartialEndo<PrimeField>::zero_on(e1))};
  auto rho = table_premorphism(L1, target, std::move(table));
  auto ext = extend_premorphism(rho);
  ELCarrier<PrimeField> el1(L1);
  auto rep = check_extension(ext, el1);
  detail_acc::gather(rep, c.pass, c.detail, "pder-extension");
  auto uniq = verify_unique_extension(ext, el1);
  if (!uniq.ok) {
    c.pass = false;
    c.detail += "pder uniqueness: " + uniq.detail;
  }
  return c;
}

/// 5. The Jacobson obstruction at p = 3.
inline CriterionResult criterion5() {
  CriterionResult c{5, "Jacobson fixture at p = 3: dim L = 9, I_d of dim 3, "
                       "bracket domain 0, rho~ not a homomorphism",
                    true, 0, 10, ""};
  JacobsonData data;
  auto rep = jacobson_fixture(3, false, &data);
  if (!rep.pass || !data.applicable || data.dim_L != 9 || data.dim_Id != 3 ||
      data.dim_bracket_dom != 0) {
    c.pass = false;
    c.detail = rep.str();
  }
  return c;
}

/// 6. Semilattice <-> presheaf round trips.
inline CriterionResult criterion6() {
  CriterionResult c{6, "semilattice/presheaf round trip: partial functions on 2 points "
                       "and E(abelian(2,F2))",
                    true, 0, 10, ""};
  PrimeField f2(2);
  auto p = partial_functions_presheaf(2, f2);
  detail_acc::gather(presheaf_roundtrip(p, Flavor::associative), c.pass, c.detail,
                     "presheaf-roundtrip");
  auto ps = std::make_shared<Presheaf<PrimeField>>(p);
  SFCarrier<PrimeField> sf(ps);
  detail_acc::gather(check_semilattice_of_algebras(sf, ProductKind::associative), c.pass,
                     c.detail, "sf-semilattice");
  detail_acc::gather(roundtrip_iso(sf, Flavor::associative), c.pass, c.detail, "sf-iso");

  auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(2, f2));
  ELCarrier<PrimeField> el(L);
  detail_acc::gather(check_semilattice_of_algebras(el, ProductKind::lie), c.pass, c.detail,
                     "el-semilattice");
  detail_acc::gather(roundtrip_iso(el, Flavor::lie), c.pass, c.detail, "el-iso");
  return c;
}

/// 7. Domain coincidence for class partial derivations over F2 x F2.
inline CriterionResult criterion7() {
  CriterionResult c{7, "class partial derivations of F2 x F2: domain coincidence on all "
                       "pairs",
                    true, 0, 10, ""};
  PrimeField f2(2);
  auto A = std::make_shared<StructAlgebra<PrimeField>>(diagonal_assoc(2, f2));
  auto carrier = PDerClassCarrier<PrimeField>::enumerate(A, AlgClass::unital_assoc);
  if (carrier.ideals().size() != 4) {
    c.pass = false;
    c.detail = "expected the 4 unital ideals";
  }
  detail_acc::gather(check_u1_domain_coincidence(carrier), c.pass, c.detail, "u1");
  detail_acc::gather(check_semilattice_of_algebras(carrier, ProductKind::lie), c.pass,
                     c.detail, "semilattice");
  return c;
}

/// 8. The categorical equivalence on subspace-lattice representations.
inline CriterionResult criterion8() {
  CriterionResult c{8, "equivalence: F(P_f(L),L) = E(L), xi/eta/gamma witnesses, sigma "
                       "generic = analytic (L of dim 1 and 2 over F3)",
                    true, 0, 60, ""};
  PrimeField f3(3);
  std::vector<StructAlgebra<PrimeField>> algebras = {abelian(1, f3), abelian(2, f3),
                                                     solvable2(f3)};
  for (const auto& alg : algebras) {
    auto L = std::make_shared<StructAlgebra<PrimeField>>(alg);
    detail_acc::gather(check_f_pf_is_el(L), c.pass, c.detail, "F=E");
    auto pf = pf_representation(L);
    detail_acc::gather(check_partial_rep(pf.rep), c.pass, c.detail, "rep");
    detail_acc::gather(check_rep_equivalence(pf.rep), c.pass, c.detail, "xi-eta");
    auto rp = std::make_shared<PartialRep>(pf.rep);
    FCarrier fc(rp);
    detail_acc::gather(check_f_carrier_structure(fc), c.pass, c.detail, "sigma");
    detail_acc::gather(check_lie_isa(fc), c.pass, c.detail, "lie");
    detail_acc::gather(check_F_inverse(fc), c.pass, c.detail, "finverse");
    detail_acc::gather(check_gamma(fc), c.pass, c.detail, "gamma");
  }
  return c;
}

/// 9. The adjunction, with both naturality squares.
inline CriterionResult criterion9() {
  CriterionResult c{9, "adjunction: beta bijective for H = F3 and H = heisenberg(F3); "
                       "naturality in both arguments",
                    true, 0, 120, ""};
  PrimeField f3(3);
  auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f3));
  auto pfL = pf_representation(L);

  detail_acc::gather(beta_bijection_check(pfL, pfL.rep), c.pass, c.detail, "beta(F3,F3)");

  auto H = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f3));
  auto pfH = pf_representation(H);
  detail_acc::gather(beta_bijection_check(pfL, pfH.rep), c.pass, c.detail,
                     "beta(F3,heis)");

  // naturality in the source, over every Lie endomorphism gamma of L
  for (const auto& gamma : enumerate_lie_homs(*L, *L))
    detail_acc::gather(beta_naturality_source(pfL, pfL, pfH.rep, gamma), c.pass, c.detail,
                       "nat-source");

  // naturality in the target: identity on (P_f(H),H) and the projection
  // heisenberg -> F3 killing the derived subalgebra
  {
    std::vector<int> theta(pfH.rep.lattice().size());
    for (size_t i = 0; i < theta.size(); ++i) theta[i] = (int)i;
    RepMorphism id(theta, Matrix<PrimeField>::identity(f3, 3));
    detail_acc::gather(beta_naturality_target(pfL, pfH.rep, pfH.rep, id), c.pass, c.detail,
                       "nat-target-id");
  }
  {
    Matrix<PrimeField> proj(f3, 1, 3);
    proj.at(0, 0) = f3.one();
    auto theta = theta_of_hom(pfH, pfL.rep, proj);
    RepMorphism m(theta, proj);
    detail_acc::gather(beta_naturality_target(pfL, pfH.rep, pfL.rep, m), c.pass, c.detail,
                       "nat-target-proj");
  }
  return c;
}

/// 10. The sampled rational battery, replayed for determinism.
inline CriterionResult criterion10(uint64_t seed = 20260810, int trials = 1000) {
  CriterionResult c{10, "sampled Q battery: 1000 seeded trials on PEnd(Q^3), "
                        "PDer(heisenberg(Q)), E(heisenberg(Q)); replay-deterministic",
                    true, 0, 600, ""};
  RationalField q;
  CheckOptions opt;
  opt.seed = seed;
  opt.trials = trials;

  PEndCarrier<RationalField> pend(q, 3);
  auto r1 = check_naisa(pend, opt);
  detail_acc::gather(r1, c.pass, c.detail, "pend");

  auto heis = std::make_shared<StructAlgebra<RationalField>>(heisenberg(q));
  PDerCarrier<RationalField> pder(heis);
  auto r2 = check_lie_isa(pder, opt);
  detail_acc::gather(r2, c.pass, c.detail, "pder");

  ELCarrier<RationalField> el(heis);
  auto r3 = check_lie_isa(el, opt);
  detail_acc::gather(r3, c.pass, c.detail, "el");

  // byte-identical replay of the verdict sections
  auto r1b = check_naisa(pend, opt);
  auto r2b = check_lie_isa(pder, opt);
  auto r3b = check_lie_isa(el, opt);
  if (r1.summary() != r1b.summary() || r2.summary() != r2b.summary() ||
      r3.summary() != r3b.summary()) {
    c.pass = false;
    c.detail += "replay under the fixed seed diverged";
  }
  return c;
}

inline std::vector<CriterionResult> run_all(uint64_t seed = 20260810, int trials = 1000) {
  using clock = std::chrono::steady_clock;
  std::vector<CriterionResult> out;
  auto timed = [&](auto fn) {
    auto t0 = clock::now();
    CriterionResult c = fn();
    c.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    if (c.seconds > c.budget) {
      c.pass = false;
      c.detail += " exceeded the runtime budget";
    }
    out.push_back(std::move(c));
  };
  timed([] { return criterion1(); });
  timed([] { return criterion2(); });
  timed([] { return criterion3(); });
  timed([] { return criterion4(); });
  timed([] { return criterion5(); });
  timed([] { return criterion6(); });
  timed([] { return criterion7(); });
  timed([] { return criterion8(); });
  timed([&] { return criterion10(seed, trials); });
  // criterion 9 last: it is the longest enumeration
  auto t0 = clock::now();
  CriterionResult c9 = criterion9();
  c9.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  if (c9.seconds > c9.budget) {
    c9.pass = false;
    c9.detail += " exceeded the runtime budget";
  }
  out.insert(out.begin() + 8, std::move(c9));
  return out;
}

}  // namespace acceptance

}  // namespace lisa

#endif
