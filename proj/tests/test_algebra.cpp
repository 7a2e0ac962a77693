#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lisa/algebra.hpp"

using namespace lisa;

namespace {

RationalField Q;

std::vector<Rational> qvec(const std::vector<long long>& v) {
  std::vector<Rational> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("structure constant products", "[algebra]") {
  auto heis = heisenberg(Q);
  auto a = heis.basis_vector(0), b = heis.basis_vector(1), c = heis.basis_vector(2);
  REQUIRE(heis.multiply(a, b) == c);
  REQUIRE(heis.multiply(b, a) == vec_neg(c));
  REQUIRE(heis.multiply(a, c) == qvec({0, 0, 0}));
  REQUIRE(heis.multiply(a, qvec({0, 0, 0})) == qvec({0, 0, 0}));

  auto s = sl2(Q);
  auto e = s.basis_vector(0), h = s.basis_vector(1), f = s.basis_vector(2);
  REQUIRE(s.multiply(e, f) == h);
  REQUIRE(s.multiply(h, e) == vec_smul(Rational(2), e));
  REQUIRE(s.multiply(h, f) == vec_smul(Rational(-2), f));
}

TEST_CASE("flavor validation is total", "[algebra]") {
  // [a,b] = a violates Jacobi? no -- violates nothing; break antisymmetry instead
  std::vector<Rational> t(8, Rational(0));
  t[(0 * 2 + 1) * 2 + 0] = Rational(1);  // [a,b] = a but [b,a] = 0
  REQUIRE_THROWS_AS(StructAlgebra<RationalField>::make(Q, 2, Flavor::lie, t),
                    ValidationError);

  // a genuine Jacobi violation: dim 3, [a,b]=c, [a,c]=a, [b,c]=b (antisymmetric)
  std::vector<Rational> t2(27, Rational(0));
  auto set = [&](size_t i, size_t j, size_t k, long long v) {
    t2[(i * 3 + j) * 3 + k] = Rational(v);
  };
  set(0, 1, 2, 1);
  set(1, 0, 2, -1);
  set(0, 2, 0, 1);
  set(2, 0, 0, -1);
  set(1, 2, 1, 1);
  set(2, 1, 1, -1);
  try {
    StructAlgebra<RationalField>::make(Q, 3, Flavor::lie, t2);
    FAIL("expected Jacobi violation");
  } catch (const ValidationError& e) {
    REQUIRE(std::string(e.what()).find("Jacobi") != std::string::npos);
    REQUIRE(std::string(e.what()).find("(") != std::string::npos);
  }

  // non-associative table flagged
  std::vector<Rational> t3(8, Rational(0));
  t3[(0 * 2 + 0) * 2 + 1] = Rational(1);  // e0*e0 = e1
  t3[(1 * 2 + 0) * 2 + 0] = Rational(1);  // e1*e0 = e0
  REQUIRE_THROWS_AS(StructAlgebra<RationalField>::make(Q, 2, Flavor::associative, t3),
                    ValidationError);
}

TEST_CASE("subalgebra and ideal tests", "[algebra]") {
  auto heis = heisenberg(Q);
  using S = Subspace<RationalField>;
  S zero = S::zero(Q, 3);
  REQUIRE(heis.is_subalgebra(zero));
  REQUIRE(heis.is_ideal(zero));

  S center = S::line(Q, qvec({0, 0, 1}));
  REQUIRE(heis.is_ideal(center));

  S span_a = S::line(Q, qvec({1, 0, 0}));
  REQUIRE(heis.is_subalgebra(span_a));
  REQUIRE_FALSE(heis.is_ideal(span_a));
}

TEST_CASE("ideal implies subalgebra on random subspaces", "[algebra]") {
  PrimeField f3(3);
  auto heis = heisenberg(f3);
  for (const auto& s : enumerate_subspaces(f3, 3)) {
    if (heis.is_ideal(s)) REQUIRE(heis.is_subalgebra(s));
  }
}

TEST_CASE("find_unit", "[algebra]") {
  auto ff = diagonal_assoc(2, Q);
  auto u = ff.find_unit();
  REQUIRE(u.has_value());
  REQUIRE(*u == qvec({1, 1}));

  std::vector<Rational> zt(1, Rational(0));
  auto zero_alg = StructAlgebra<RationalField>::make(Q, 1, Flavor::associative, zt);
  REQUIRE_FALSE(zero_alg.find_unit().has_value());

  auto tp = truncated_poly(3);
  auto ut = tp.find_unit();
  REQUIRE(ut.has_value());
  std::vector<Fp> one = {PrimeField(3).one(), PrimeField(3).zero(), PrimeField(3).zero()};
  REQUIRE(*ut == one);
}

TEST_CASE("idempotent algebra predicate", "[algebra]") {
  REQUIRE(diagonal_assoc(2, Q).is_idempotent_algebra());
  REQUIRE_FALSE(abelian(1, Q).is_idempotent_algebra());
  REQUIRE_FALSE(abelian(3, Q).is_idempotent_algebra());
  REQUIRE(sl2(Q).is_idempotent_algebra());
}

TEST_CASE("semisimplicity via the Killing form", "[algebra]") {
  REQUIRE(sl2(Q).is_semisimple_lie());
  REQUIRE_FALSE(abelian(1, Q).is_semisimple_lie());
  REQUIRE_FALSE(heisenberg(Q).is_semisimple_lie());
  PrimeField f3(3);
  REQUIRE_THROWS_AS(sl2(f3).is_semisimple_lie(), Error);
  REQUIRE_THROWS_AS(diagonal_assoc(2, Q).is_semisimple_lie(), Error);
}

TEST_CASE("builders", "[algebra]") {
  SECTION("heisenberg over Q and F3") {
    REQUIRE(heisenberg(Q).dim() == 3);
    REQUIRE(heisenberg(PrimeField(3)).dim() == 3);
  }
  SECTION("truncated polynomial algebra") {
    auto tp = truncated_poly(3);
    REQUIRE(tp.dim() == 3);
    // z * z^2 = 0
    auto z = tp.basis_vector(1), z2 = tp.basis_vector(2);
    REQUIRE(vec_is_zero(tp.multiply(z, z2)));
    REQUIRE(tp.multiply(z, z) == z2);
    REQUIRE_THROWS_AS(truncated_poly(2), Error);
  }
  SECTION("tensor of sl2 with truncated polynomials") {
    PrimeField f3(3);
    auto L = tensor_lie(sl2(f3), truncated_poly(3));
    REQUIRE(L.dim() == 9);  // validated Lie (Jacobi checked in make)
  }
  SECTION("abelian has zero products") {
    auto ab = abelian(2, PrimeField(2));
    REQUIRE(ab.is_abelian());
  }
  SECTION("solvable2: [x,y] = y") {
    auto s = solvable2(PrimeField(3));
    REQUIRE(s.multiply(s.basis_vector(0), s.basis_vector(1)) == s.basis_vector(1));
  }
  SECTION("matrix algebra units") {
    auto m2 = matrix_algebra(2, Q);
    REQUIRE(m2.dim() == 4);
    auto u = m2.find_unit();
    REQUIRE(u.has_value());
    REQUIRE(*u == qvec({1, 0, 0, 1}));
  }
}

TEST_CASE("algebra homs", "[algebra]") {
  auto heis = std::make_shared<StructAlgebra<RationalField>>(heisenberg(Q));
  auto ab = std::make_shared<StructAlgebra<RationalField>>(abelian(1, Q));
  // projection onto span{a} kills the bracket: heis -> abelian(1), a -> x
  Matrix<RationalField> m(Q, 1, 3);
  m.at(0, 0) = Rational(1);
  auto hom = AlgebraHom<RationalField>::make(heis, ab, m);
  REQUIRE(hom.apply(qvec({2, 5, 7})) == qvec({2}));

  // a -> x, c -> x is not multiplicative
  Matrix<RationalField> bad(Q, 1, 3);
  bad.at(0, 0) = Rational(1);
  bad.at(0, 2) = Rational(1);
  REQUIRE_THROWS_AS(AlgebraHom<RationalField>::make(heis, ab, bad), ValidationError);
}

TEST_CASE("induced algebra on a closed subspace", "[algebra]") {
  auto heis = heisenberg(Q);
  auto plane = Subspace<RationalField>::span(
      Matrix<RationalField>::from_rows(Q, {qvec({1, 0, 0}), qvec({0, 0, 1})}));
  auto [sub, incl] = subalgebra_as_algebra(heis, plane, Flavor::lie);
  REQUIRE(sub.dim() == 2);
  REQUIRE(sub.is_abelian());
  REQUIRE(incl.apply(qvec({1, 0})) == qvec({1, 0, 0}));

  auto not_closed = Subspace<RationalField>::span(
      Matrix<RationalField>::from_rows(Q, {qvec({1, 0, 0}), qvec({0, 1, 0})}));
  REQUIRE_THROWS_AS(subalgebra_as_algebra(heis, not_closed, Flavor::lie), NotSubalgebra);
}
