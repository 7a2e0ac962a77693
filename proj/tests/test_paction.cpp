#include <catch2/catch_amalgamated.hpp>

#include "lisa/paction.hpp"

using namespace lisa;

namespace {

PrimeField f2(2);
PrimeField f3(3);
RationalField Q;

using PSub = Subspace<PrimeField>;
using PMat = Matrix<PrimeField>;
using PDer = PartialDerivation<PrimeField>;

}  // namespace

TEST_CASE("global action passes and is flagged", "[paction]") {
  // heisenberg acting on itself by ad, in table mode over F3
  auto L = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f3));
  std::vector<PDer> table;
  for (const auto& x : all_vectors(f3, 3))
    table.push_back(PDer::make(L, PSub::full(f3, 3), L->ad(x)));
  auto pa = PartialAction<PrimeField>::from_table(L, L, table);
  auto rep = check_partial_action(pa);
  INFO(rep.summary());
  REQUIRE(rep.ok());
  REQUIRE(rep.find("pact.scope")->description.find("global") != std::string::npos);
  REQUIRE(check_strong_action(pa).ok());
}

TEST_CASE("the zero-outside-zero action on an idempotent algebra", "[paction]") {
  // A = sl2 (idempotent since [sl2,sl2] = sl2), D_0 = A, D_x = 0 otherwise
  auto A = std::make_shared<StructAlgebra<PrimeField>>(sl2(f3));
  REQUIRE(A->is_idempotent_algebra());
  auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f3));
  std::vector<PDer> table;
  for (const auto& x : all_vectors(f3, 1)) {
    if (vec_is_zero(x))
      table.push_back(PDer::make(A, PartialEndo<PrimeField>::total(PMat(f3, 3, 3))));
    else
      table.push_back(PDer::make(A, PartialEndo<PrimeField>::zero_on(PSub::zero(f3, 3))));
  }
  auto pa = PartialAction<PrimeField>::from_table(L, A, table);
  auto rep = check_partial_action(pa);
  INFO(rep.summary());
  REQUIRE(rep.ok());
  REQUIRE(rep.find("pact.scope")->description.find("partial") != std::string::npos);
  auto strong = check_strong_action(pa);
  INFO(strong.summary());
  REQUIRE(strong.ok());
}

TEST_CASE("a mutated table fails condition (2)", "[paction]") {
  auto A = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f3));
  auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f3));
  auto total_zero = PDer::make(A, PartialEndo<PrimeField>::total(PMat(f3, 1, 1)));
  auto zero_on_zero =
      PDer::make(A, PartialEndo<PrimeField>::zero_on(PSub::zero(f3, 1)));
  // D_1 = A, D_2 = 0: D_1 n D_1 = A is not inside D_2 = D_(1+1)
  std::vector<PDer> table = {total_zero, total_zero, zero_on_zero};
  auto pa = PartialAction<PrimeField>::from_table(L, A, table);
  auto rep = check_partial_action(pa);
  REQUIRE_FALSE(rep.ok());
  REQUIRE(rep.find("pact.2")->verdict == Verdict::fail);
  // and the induced map correspondingly fails to be a premorphism
  REQUIRE(rep.find("pact.pm.1")->verdict == Verdict::fail);
}

TEST_CASE("restriction of a global action", "[paction]") {
  SECTION("invariant ideal recovers a global action") {
    // ad on heisenberg restricted to the invariant ideal span{b, c}
    auto B = std::make_shared<StructAlgebra<RationalField>>(heisenberg(Q));
    auto L = B;
    std::vector<Matrix<RationalField>> eta;
    for (size_t i = 0; i < 3; ++i) eta.push_back(B->ad(B->basis_vector(i)));
    Matrix<RationalField> gens(Q, 2, 3);
    gens.at(0, 1) = Q.one();
    gens.at(1, 2) = Q.one();
    auto ideal = Subspace<RationalField>::span(gens);
    auto gr = GlobalRestriction<RationalField>::make(L, B, ideal, eta);
    auto restricted = restrict_global(gr);
    CheckOptions opt;
    opt.trials = 40;
    auto rep = check_partial_action(restricted.action, opt);
    INFO(rep.summary());
    REQUIRE(rep.ok());
    REQUIRE(rep.find("pact.scope")->description.find("global") != std::string::npos);
    REQUIRE(check_restriction_identity(restricted.action, opt).ok());
  }
  SECTION("eta = 0 restricts to the zero action") {
    auto B = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f3));
    std::vector<PMat> eta(3, PMat(f3, 3, 3));
    Matrix<PrimeField> gens(f3, 1, 3);
    gens.at(0, 2) = f3.one();
    auto gr = GlobalRestriction<PrimeField>::make(
        B, B, PSub::span(gens), eta);
    auto restricted = restrict_global(gr);
    for (const auto& x : all_vectors(f3, 3)) {
      auto th = restricted.action.theta(x);
      REQUIRE(th.domain() == PSub::full(f3, 1));
      REQUIRE(th.map().is_zero_map());
    }
  }
  SECTION("eta must be a homomorphism into Der(B)") {
    auto B = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f3));
    // swap ad(a) and ad(b): breaks eta([a,b]) = [eta a, eta b]
    std::vector<PMat> eta = {B->ad(B->basis_vector(1)), B->ad(B->basis_vector(0)),
                             B->ad(B->basis_vector(2))};
    Matrix<PrimeField> gens(f3, 1, 3);
    gens.at(0, 2) = f3.one();
    // [ad b, ad a] = ad([b,a]) = -ad(c) but the table says eta_c = ad(c)=0;
    // heisenberg ad(c)=0 so this particular swap still passes; perturb instead
    eta[2] = Matrix<PrimeField>::identity(f3, 3);
    REQUIRE_THROWS_AS(
        GlobalRestriction<PrimeField>::make(B, B, PSub::span(gens), eta),
        ValidationError);
  }
}

TEST_CASE("jacobson restriction is a non-strong partial action", "[paction]") {
  uint64_t p = 3;
  PrimeField f(p);
  auto L = std::make_shared<StructAlgebra<PrimeField>>(
      tensor_lie(sl2(f), truncated_poly(p)));
  size_t n = L->dim();
  Matrix<PrimeField> d(f, n, n);
  for (size_t i = 0; i < 3; ++i)
    for (size_t al = 1; al < p; ++al)
      d.at(i * p + al - 1, i * p + al) = f.from_int((long long)al);
  Matrix<PrimeField> igens(f, 3 * (p - 1), n);
  size_t row = 0;
  for (size_t i = 0; i < 3; ++i)
    for (size_t al = 1; al < p; ++al) igens.at(row++, i * p + al) = f.one();
  auto I = PSub::span(igens);
  auto L0 = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f));

  auto gr = GlobalRestriction<PrimeField>::make(L0, L, I, {d});
  auto restricted = restrict_global(gr);
  auto rep = check_partial_action(restricted.action);
  INFO(rep.summary());
  REQUIRE(rep.ok());
  REQUIRE(check_restriction_identity(restricted.action).ok());

  auto strong = check_strong_action(restricted.action);
  INFO(strong.summary());
  REQUIRE_FALSE(strong.ok());
  REQUIRE(!strong.find("pact.strong")->counterexample.empty());

  // D_d = S (x) span{z^2}
  auto th = restricted.action.theta({f.one()});
  REQUIRE(th.domain().dim() == 3);
}

TEST_CASE("actions correspond to homomorphisms E(L) -> PDer_A(A)", "[paction]") {
  auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f2));
  auto A = std::make_shared<StructAlgebra<PrimeField>>(diagonal_assoc(2, f2));
  auto target = PDerClassCarrier<PrimeField>::enumerate(A, AlgClass::unital_assoc);
  auto rep = check_action_hom_bijection(L, target);
  INFO(rep.summary());
  REQUIRE(rep.ok());
  // both sides have exactly 4 members (one per unital ideal)
  REQUIRE(rep.find("cor.count")->description.find("4") != std::string::npos);
}

TEST_CASE("zero action corresponds to the inf-idempotent homomorphism", "[paction]") {
  auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f2));
  auto A = std::make_shared<StructAlgebra<PrimeField>>(diagonal_assoc(2, f2));
  auto target = PDerClassCarrier<PrimeField>::enumerate(A, AlgClass::unital_assoc);
  std::vector<PDer> table = {target.zero(), target.zero()};
  auto pa = PartialAction<PrimeField>::from_table(L, A, table);
  REQUIRE(check_partial_action(pa).ok());
  auto ext = extend_premorphism(action_premorphism(pa, target));
  ELCarrier<PrimeField> el(L);
  // every (A,a) maps to a total zero map, the inf-idempotent of rho
  for (const auto& x : el.elements()) {
    auto img = ext.eval(x);
    REQUIRE(img.map().is_zero_map());
    REQUIRE(img.domain() == PSub::full(f2, 2));
  }
}
