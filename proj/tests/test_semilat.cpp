#include <catch2/catch_amalgamated.hpp>

#include "lisa/exel.hpp"
#include "lisa/semilat.hpp"

using namespace lisa;

namespace {

PrimeField f2(2);
PrimeField f3(3);

}  // namespace

TEST_CASE("meet semilattice validation", "[semilat]") {
  SECTION("powerset lattice") {
    auto lat = powerset_semilattice(2);
    REQUIRE(lat.size() == 4);
    REQUIRE(lat.meet(1, 2) == 0);            // {1} n {2} = {}
    REQUIRE(lat.unit().value() == 3);        // {1,2}
    REQUIRE(lat.leq(1, 3));
    REQUIRE_FALSE(lat.leq(3, 1));
  }
  SECTION("broken tables rejected") {
    REQUIRE_THROWS_AS(MeetSemilattice::make({"a", "b"}, {0, 1, 0, 1}), ValidationError);
    REQUIRE_THROWS_AS(MeetSemilattice::make({"a", "b"}, {1, 0, 0, 1}), ValidationError);
    // non-associative commutative idempotent table needs 3 elements
    REQUIRE_THROWS_AS(
        MeetSemilattice::make({"a", "b", "c"},
                              {0, 2, 1,
                               2, 1, 0,
                               1, 0, 2}),
        ValidationError);
  }
}

TEST_CASE("one-point presheaf carrier is the algebra itself", "[semilat]") {
  MeetSemilattice pt = MeetSemilattice::make({"*"}, {0}, 0);
  auto p = std::make_shared<Presheaf<PrimeField>>(
      Presheaf<PrimeField>::make(pt, {diagonal_assoc(2, f2)}, {}));
  SFCarrier<PrimeField> sf(p);
  REQUIRE(sf.elements().size() == 4);
  auto rep = check_semilattice_of_algebras(sf, ProductKind::associative);
  INFO(rep.summary());
  REQUIRE(rep.ok());
  REQUIRE(check_naisa(sf).ok());
}

TEST_CASE("two-chain presheaf realizes a homomorphism", "[semilat]") {
  // hi = F2 x F2, lo = F2, hom = sum of coordinates... not a hom; use projection
  Matrix<PrimeField> proj(f2, 1, 2);
  proj.at(0, 0) = f2.one();
  auto hi = diagonal_assoc(2, f2);
  auto lo = diagonal_assoc(1, f2);
  auto p = std::make_shared<Presheaf<PrimeField>>(two_chain_presheaf(hi, lo, proj));
  SFCarrier<PrimeField> sf(p);
  // level 1 = hi, level 0 = lo; adding across levels restricts through proj
  auto a = sf.make(1, {f2.one(), f2.one()});
  auto b = sf.make(0, {f2.one()});
  auto s = sf.add(a, b);
  REQUIRE(s.level == 0);
  REQUIRE(s.value == Vec<PrimeField>{f2.zero()});  // proj(1,1) + 1 = 0
  auto rep = check_semilattice_of_algebras(sf, ProductKind::associative);
  INFO(rep.summary());
  REQUIRE(rep.ok());

  SECTION("functoriality violations are rejected") {
    // a three-chain with inconsistent composite
    MeetSemilattice chain = MeetSemilattice::make(
        {"bot", "mid", "top"}, {0, 0, 0, 0, 1, 1, 0, 1, 2}, 2);
    Matrix<PrimeField> id1 = Matrix<PrimeField>::identity(f2, 1);
    Matrix<PrimeField> zero1(f2, 1, 1);
    std::map<std::pair<int, int>, Matrix<PrimeField>> restr;
    restr.emplace(std::make_pair(2, 1), id1);
    restr.emplace(std::make_pair(1, 0), id1);
    restr.emplace(std::make_pair(2, 0), zero1);  // != id1 * id1
    auto alg = abelian(1, f2);
    REQUIRE_THROWS_AS(
        Presheaf<PrimeField>::make(chain, {alg, alg, alg}, std::move(restr)),
        ValidationError);
  }
}

TEST_CASE("partial functions on a 2-point set", "[semilat]") {
  auto p = std::make_shared<Presheaf<PrimeField>>(partial_functions_presheaf(2, f2));
  SFCarrier<PrimeField> sf(p);
  REQUIRE(sf.elements().size() == 1 + 2 + 2 + 4);
  auto naisa = check_naisa(sf);
  INFO(naisa.summary());
  REQUIRE(naisa.ok());
  auto rep = check_semilattice_of_algebras(sf, ProductKind::associative);
  INFO(rep.summary());
  REQUIRE(rep.ok());
  auto extra = check_assoc_rdist(sf);
  REQUIRE(extra.ok());

  SECTION("the commutator carrier is a semilattice of Lie algebras") {
    SMinus<SFCarrier<PrimeField>> minus(sf);
    auto lie = check_semilattice_of_algebras(minus, ProductKind::lie);
    INFO(lie.summary());
    REQUIRE(lie.ok());
    REQUIRE(check_lie_isa(minus).ok());
    // commutative levels: all brackets are idempotents 0_(x+y)
    FiniteOps<SMinus<SFCarrier<PrimeField>>> o(minus);
    for (int i = 0; i < o.n(); ++i)
      for (int j = 0; j < o.n(); ++j)
        REQUIRE(o.mul(i, j) == o.zero_of(o.add(i, j)));
  }
}

TEST_CASE("matrix algebra level: Jacobi becomes an equality", "[semilat]") {
  MeetSemilattice pt = MeetSemilattice::make({"*"}, {0}, 0);
  auto p = std::make_shared<Presheaf<PrimeField>>(
      Presheaf<PrimeField>::make(pt, {matrix_algebra(2, f3)}, {}));
  SFCarrier<PrimeField> sf(p);
  SMinus<SFCarrier<PrimeField>> minus(sf);
  auto rep = check_semilattice_of_algebras(minus, ProductKind::lie);
  INFO(rep.summary());
  REQUIRE(rep.ok());
  REQUIRE(rep.find("sla.d3")->verdict == Verdict::pass);
  REQUIRE(rep.find("sla.d4")->verdict == Verdict::pass);
}

TEST_CASE("decompose a one-point carrier", "[semilat]") {
  MeetSemilattice pt = MeetSemilattice::make({"*"}, {0}, 0);
  auto p = std::make_shared<Presheaf<PrimeField>>(
      Presheaf<PrimeField>::make(pt, {diagonal_assoc(2, f2)}, {}));
  SFCarrier<PrimeField> sf(p);
  auto dec = decompose(sf, Flavor::associative);
  REQUIRE(dec.presheaf.base().size() == 1);
  REQUIRE(dec.presheaf.object(0).dim() == 2);
}

TEST_CASE("decompose-then-rebuild round trips", "[semilat]") {
  SECTION("two-chain presheaf") {
    Matrix<PrimeField> proj(f2, 1, 2);
    proj.at(0, 0) = f2.one();
    auto p = two_chain_presheaf(diagonal_assoc(2, f2), diagonal_assoc(1, f2), proj);
    auto rep = presheaf_roundtrip(p, Flavor::associative);
    INFO(rep.summary());
    REQUIRE(rep.ok());
    auto ps = std::make_shared<Presheaf<PrimeField>>(p);
    SFCarrier<PrimeField> sf(ps);
    auto iso = roundtrip_iso(sf, Flavor::associative);
    INFO(iso.summary());
    REQUIRE(iso.ok());
  }
  SECTION("partial functions carrier") {
    auto p = partial_functions_presheaf(2, f2);
    auto rep = presheaf_roundtrip(p, Flavor::associative);
    INFO(rep.summary());
    REQUIRE(rep.ok());
    auto ps = std::make_shared<Presheaf<PrimeField>>(p);
    SFCarrier<PrimeField> sf(ps);
    auto iso = roundtrip_iso(sf, Flavor::associative);
    INFO(iso.summary());
    REQUIRE(iso.ok());
  }
  SECTION("E of an abelian Lie algebra") {
    auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(2, f2));
    ELCarrier<PrimeField> el(L);
    REQUIRE(check_semilattice_of_algebras(el, ProductKind::lie).ok());
    auto iso = roundtrip_iso(el, Flavor::lie);
    INFO(iso.summary());
    REQUIRE(iso.ok());
    auto dec = decompose(el, Flavor::lie);
    REQUIRE(dec.presheaf.base().size() == 5);  // subspaces of F2^2
  }
  SECTION("E of a 1-dimensional algebra decomposes over the 2-element lattice") {
    auto L = std::make_shared<StructAlgebra<PrimeField>>(abelian(1, f2));
    ELCarrier<PrimeField> el(L);
    auto dec = decompose(el, Flavor::lie);
    REQUIRE(dec.presheaf.base().size() == 2);
    auto iso = roundtrip_iso(el, Flavor::lie);
    REQUIRE(iso.ok());
  }
}

TEST_CASE("E(heisenberg) is not a semilattice of algebras", "[semilat]") {
  auto L = std::make_shared<StructAlgebra<PrimeField>>(heisenberg(f3));
  ELCarrier<PrimeField> el(L);
  auto rep = check_semilattice_of_algebras(el, ProductKind::lie);
  REQUIRE_FALSE(rep.ok());
  REQUIRE(rep.find("sla.1")->verdict == Verdict::fail);
}

TEST_CASE("carrier homomorphisms need not come from presheaf morphisms", "[semilat]") {
  // phi folds the top level onto the bottom through the restriction and
  // fixes the bottom; it is a homomorphism but moves idempotents across
  // levels, so it is not the identity on the idempotent lattice.
  Matrix<PrimeField> proj(f2, 1, 2);
  proj.at(0, 0) = f2.one();
  auto p = std::make_shared<Presheaf<PrimeField>>(
      two_chain_presheaf(diagonal_assoc(2, f2), diagonal_assoc(1, f2), proj));
  SFCarrier<PrimeField> sf(p);
  FiniteOps<SFCarrier<PrimeField>> o(sf);

  auto phi = [&](const SLElement<PrimeField>& x) {
    if (x.level == 1) return SLElement<PrimeField>{0, proj.apply(x.value)};
    return x;
  };
  for (int i = 0; i < o.n(); ++i)
    for (int j = 0; j < o.n(); ++j) {
      REQUIRE(phi(o.element(o.add(i, j))) == sf.add(phi(o.element(i)), phi(o.element(j))));
      REQUIRE(phi(o.element(o.mul(i, j))) == sf.mul(phi(o.element(i)), phi(o.element(j))));
    }
  SLElement<PrimeField> top_idem{1, vec_zero(f2, 2)};
  REQUIRE(phi(top_idem).level == 0);  // an idempotent changes level
}
