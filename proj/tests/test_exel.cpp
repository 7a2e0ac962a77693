#include <catch2/catch_amalgamated.hpp>

#include "lisa/exel.hpp"

using namespace lisa;

namespace {

RationalField Q;

std::vector<Rational> qvec(const std::vector<long long>& v) {
  std::vector<Rational> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("E(L) operations", "[exel]") {
  auto L = std::make_shared<StructAlgebra<RationalField>>(heisenberg(Q));
  ELCarrier<RationalField> el(L);
  auto x = el.tau(qvec({1, 0, 0}));
  auto y = el.tau(qvec({0, 1, 0}));

  SECTION("bracket of the two generators reaches the center") {
    auto b = el.mul(x, y);
    REQUIRE(b.a == qvec({0, 0, 1}));
    REQUIRE(b.A == Subspace<RationalField>::full(Q, 3));
  }
  SECTION("scalar action fixes the subspace component") {
    auto two = el.smul(Rational(2), x);
    REQUIRE(two.A == x.A);
    REQUIRE(two.a == qvec({2, 0, 0}));
    REQUIRE(el.smul(Rational(1), x) == x);
    REQUIRE(el.smul(Rational(0), x) == carrier_zero_of(el, x));
  }
  SECTION("membership invariant enforced") {
    REQUIRE_THROWS_AS(el.make(x.A, qvec({0, 1, 0})), ValidationError);
  }
  SECTION("zero_of is (A,0) and the order is reverse inclusion at fixed point") {
    auto z = carrier_zero_of(el, x);
    REQUIRE(z.A == x.A);
    REQUIRE(vec_is_zero(z.a));
    // (A,a) <= (B,b) iff a=b and B subseteq A
    auto big = el.make(x.A + y.A, qvec({1, 0, 0}));
    REQUIRE(carrier_leq(el, big, x));
    REQUIRE_FALSE(carrier_leq(el, x, big));
  }
}

TEST_CASE("E(L) identities and axioms over F2, dim 3", "[exel]") {
  PrimeField f2(2);
  auto L = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f2));
  ELCarrier<PrimeField> el(L);
  REQUIRE(el.elements().size() == 51);

  auto lie = check_lie_isa(el);
  INFO(lie.summary());
  REQUIRE(lie.ok());

  auto ids = check_el_identities(el);
  INFO(ids.summary());
  REQUIRE(ids.ok());
}

TEST_CASE("E(L) axioms over F3 heisenberg, exhaustive", "[exel]") {
  PrimeField f3(3);
  auto L = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f3));
  ELCarrier<PrimeField> el(L);
  REQUIRE(el.elements().size() == 184);
  auto lie = check_lie_isa(el);
  INFO(lie.summary());
  REQUIRE(lie.ok());
  REQUIRE(lie.find("def6.d4")->verdict == Verdict::pass);
}

TEST_CASE("E(L) sampled over Q", "[exel]") {
  auto L = std::make_shared<StructAlgebra<RationalField>>(heisenberg(Q));
  ELCarrier<RationalField> el(L);
  CheckOptions opt;
  opt.trials = 120;
  auto lie = check_lie_isa(el, opt);
  INFO(lie.summary());
  REQUIRE(lie.ok());
  REQUIRE_FALSE(lie.mode.exhaustive);
}

TEST_CASE("tau is a strong premorphism", "[exel]") {
  SECTION("over Q, sampled") {
    auto L = std::make_shared<StructAlgebra<RationalField>>(heisenberg(Q));
    ELCarrier<RationalField> el(L);
    auto pm = tau_premorphism(el);
    CheckOptions opt;
    opt.trials = 60;
    auto rep = check_premorphism(pm, opt);
    INFO(rep.summary());
    REQUIRE(rep.ok());
    auto strong = check_strong_premorphism(pm, opt);
    INFO(strong.summary());
    REQUIRE(strong.ok());
  }
  SECTION("over F3, exhaustive") {
    PrimeField f3(3);
    auto L = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f3));
    ELCarrier<PrimeField> el(L);
    auto pm = tau_premorphism(el);
    REQUIRE(check_premorphism(pm).ok());
    REQUIRE(check_strong_premorphism(pm).ok());
  }
  SECTION("tau pointwise") {
    auto L = std::make_shared<StructAlgebra<RationalField>>(heisenberg(Q));
    ELCarrier<RationalField> el(L);
    auto t0 = el.tau(qvec({0, 0, 0}));
    REQUIRE(t0 == el.zero());
    auto ta = el.tau(qvec({1, 0, 0})), tb = el.tau(qvec({0, 1, 0}));
    REQUIRE(carrier_leq(el, el.add(ta, tb), el.tau(qvec({1, 1, 0}))));
    // [tau a, tau b] = 0_(tau a + tau b) + tau(c)
    auto lhs = el.mul(ta, tb);
    auto rhs = el.add(carrier_zero_of(el, el.add(ta, tb)), el.tau(qvec({0, 0, 1})));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("sigma on E(L)", "[exel]") {
  SECTION("abelian F2 dim 2: classes indexed by the 4 points") {
    PrimeField f2(2);
    auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(2, f2));
    ELCarrier<PrimeField> el(L);
    auto rep = check_sigma_el(el);
    INFO(rep.summary());
    REQUIRE(rep.ok());
    FiniteOps<ELCarrier<PrimeField>> o(el);
    REQUIRE(sigma_partition(o).classes.size() == 4);
  }
  SECTION("heisenberg F3: greatest elements are (Fa,a)") {
    PrimeField f3(3);
    auto L = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f3));
    ELCarrier<PrimeField> el(L);
    auto rep = check_sigma_el(el);
    INFO(rep.summary());
    REQUIRE(rep.ok());
  }
}

TEST_CASE("E(L) is F-inverse", "[exel]") {
  PrimeField f2(2);
  auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(2, f2));
  ELCarrier<PrimeField> el(L);
  auto rep = check_F_inverse(el);
  INFO(rep.summary());
  REQUIRE(rep.ok());

  PrimeField f3(3);
  auto L3 = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f3));
  ELCarrier<PrimeField> el3(L3);
  auto rep3 = check_F_inverse(el3);
  INFO(rep3.summary());
  REQUIRE(rep3.ok());
}

TEST_CASE("extension of tau is the identity", "[exel]") {
  PrimeField f2(2);
  for (bool use_solvable : {false, true}) {
    auto L = std::make_shared<StructAlgebra<PrimeField>>(
        use_solvable ? solvable2(f2) : abelian(2, f2));
    ELCarrier<PrimeField> el(L);
    auto ext = extend_premorphism(tau_premorphism(el));
    for (const auto& x : el.elements()) REQUIRE(ext.eval(x) == x);

    auto rep = check_extension(ext, el);
    INFO(rep.summary());
    REQUIRE(rep.ok());

    auto uniq = verify_unique_extension(ext, el);
    INFO(uniq.detail);
    REQUIRE(uniq.ok);
    REQUIRE(uniq.solutions == 1);
  }
}

TEST_CASE("extension into class partial derivations is a homomorphism", "[exel]") {
  PrimeField f2(2);
  auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f2));
  auto A = std::make_shared<StructAlgebra<PrimeField>>(diagonal_assoc(2, f2));
  auto target = PDerClassCarrier<PrimeField>::enumerate(A, AlgClass::unital_assoc);

  // rho: 0 -> zero map on A, x1 -> zero map on span{e1}
  auto e1_ideal = Subspace<PrimeField>::line(f2, {f2.one(), f2.zero()});
  std::vector<PartialDerivation<PrimeField>> table = {
      target.zero(), PartialDerivation<PrimeField>::make(
                         A, PartialEndo<PrimeField>::zero_on(e1_ideal))};
  auto rho = table_premorphism(L, target, std::move(table));

  auto prep = check_premorphism(rho);
  INFO(prep.summary());
  REQUIRE(prep.ok());
  // premorphisms into a semilattice of Lie algebras are strong
  REQUIRE(check_strong_premorphism(rho).ok());
  REQUIRE(check_sminus_identity(target).ok());

  auto ext = extend_premorphism(rho);
  ELCarrier<PrimeField> el(L);
  auto rep = check_extension(ext, el);
  INFO(rep.summary());
  REQUIRE(rep.ok());
  REQUIRE(rep.find("ext.hom")->verdict == Verdict::pass);

  auto uniq = verify_unique_extension(ext, el);
  INFO(uniq.detail);
  REQUIRE(uniq.ok);
}

TEST_CASE("heisenberg fixture", "[exel]") {
  auto over_q = heisenberg_fixture(Q);
  INFO(over_q.str());
  REQUIRE(over_q.pass);

  auto over_f3 = heisenberg_fixture(PrimeField(3));
  INFO(over_f3.str());
  REQUIRE(over_f3.pass);

  REQUIRE_THROWS_AS(heisenberg_fixture(PrimeField(2)), Error);
}

TEST_CASE("jacobson fixture", "[exel]") {
  SECTION("p = 3") {
    JacobsonData data;
    auto rep = jacobson_fixture(3, false, &data);
    INFO(rep.str());
    REQUIRE(rep.pass);
    REQUIRE(data.applicable);
    REQUIRE(data.dim_L == 9);
    REQUIRE(data.dim_Id == 3);
    REQUIRE(data.dim_bracket_dom == 0);
  }
  SECTION("p = 5") {
    JacobsonData data;
    auto rep = jacobson_fixture(5, false, &data);
    INFO(rep.str());
    REQUIRE(rep.pass);
    REQUIRE(data.dim_L == 15);
    REQUIRE(data.dim_Id == 9);
    REQUIRE(data.dim_bracket_dom == 6);
  }
  SECTION("abelian control is inapplicable") {
    JacobsonData data;
    auto rep = jacobson_fixture(3, true, &data);
    INFO(rep.str());
    REQUIRE(rep.pass);
    REQUIRE_FALSE(data.applicable);
  }
  SECTION("p must be an odd prime") {
    REQUIRE_THROWS_AS(jacobson_fixture(2), Error);
    REQUIRE_THROWS_AS(jacobson_fixture(9), Error);
  }
}
