#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lisa/subspace.hpp"

using namespace lisa;

namespace {

using QF = RationalField;
using QMat = Matrix<QF>;
using QSub = Subspace<QF>;
using PMat = Matrix<PrimeField>;
using PSub = Subspace<PrimeField>;

QF Q;

QMat qmat(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> conv;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long long x : r) row.emplace_back(x);
    conv.push_back(row);
  }
  return QMat::from_rows(Q, conv);
}

PMat pmat(const PrimeField& f, const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Fp>> conv;
  for (const auto& r : rows) {
    std::vector<Fp> row;
    for (long long x : r) row.push_back(f.from_int(x));
    conv.push_back(row);
  }
  return PMat::from_rows(f, conv);
}

std::vector<Rational> qvec(const std::vector<long long>& v) {
  std::vector<Rational> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

// Independent oracle: spans of every subset of F_p^n, deduplicated by
// canonical form. Only for tiny (p, n).
size_t count_subspaces_brute(const PrimeField& f, size_t n) {
  auto vecs = all_vectors(f, n);
  std::set<PSub> seen;
  size_t m = vecs.size();
  for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
    std::vector<std::vector<Fp>> gens;
    for (size_t i = 0; i < m; ++i)
      if (mask & (uint64_t(1) << i)) gens.push_back(vecs[i]);
    PMat g(f, gens.size(), n);
    for (size_t i = 0; i < gens.size(); ++i) g.set_row(i, gens[i]);
    seen.insert(PSub::span(g));
  }
  return seen.size();
}

}  // namespace

TEST_CASE("rref canonical forms", "[exactalg]") {
  SECTION("identity is fixed") {
    QMat id = QMat::identity(Q, 2);
    REQUIRE(id.rref() == id);
  }
  SECTION("rank-1 rational matrix") {
    QMat m = qmat({{2, 4}, {1, 2}});
    QSub s = QSub::span(m);
    REQUIRE(s.dim() == 1);
    REQUIRE(s.basis() == qmat({{1, 2}}));
  }
  SECTION("rank-1 over F2") {
    PrimeField f2(2);
    PMat m = pmat(f2, {{1, 1}, {1, 1}});
    PSub s = PSub::span(m);
    REQUIRE(s.dim() == 1);
    REQUIRE(s.basis() == pmat(f2, {{1, 1}}));
  }
}

TEST_CASE("rref is idempotent on random matrices", "[exactalg]") {
  std::mt19937_64 rng(815);
  for (int trial = 0; trial < 60; ++trial) {
    size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    QMat m(Q, r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = Q.sample(rng);
    QMat once = m.rref();
    REQUIRE(once.rref() == once);
  }
  PrimeField f3(3);
  for (int trial = 0; trial < 60; ++trial) {
    size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    PMat m(f3, r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = f3.sample(rng);
    PMat once = m.rref();
    REQUIRE(once.rref() == once);
  }
}

TEST_CASE("subspace sum", "[exactalg]") {
  QSub e1 = QSub::line(Q, qvec({1, 0, 0}));
  QSub e2 = QSub::line(Q, qvec({0, 1, 0}));
  SECTION("independent lines") {
    QSub s = e1 + e2;
    REQUIRE(s.dim() == 2);
    REQUIRE(s.contains(qvec({1, 1, 0})));
    REQUIRE_FALSE(s.contains(qvec({0, 0, 1})));
  }
  SECTION("idempotent") { REQUIRE(e1 + e1 == e1); }
  SECTION("commutative") { REQUIRE(e1 + e2 == e2 + e1); }
  SECTION("two lines spanning the plane") {
    QSub a = QSub::line(Q, qvec({1, 1}));
    QSub b = QSub::line(Q, qvec({1, -1}));
    REQUIRE((a + b) == QSub::full(Q, 2));
  }
  SECTION("ambient mismatch rejected") {
    QSub a = QSub::line(Q, qvec({1, 1}));
    REQUIRE_THROWS_AS(a + e1, DimensionMismatch);
  }
}

TEST_CASE("subspace intersection", "[exactalg]") {
  QSub e1 = QSub::line(Q, qvec({1, 0}));
  QSub e2 = QSub::line(Q, qvec({0, 1}));
  SECTION("transverse lines meet in zero") {
    REQUIRE(intersect(e1, e2) == QSub::zero(Q, 2));
  }
  SECTION("intersection with ambient") {
    REQUIRE(intersect(e1, QSub::full(Q, 2)) == e1);
  }
  SECTION("plane meets line") {
    QSub plane = QSub::span(qmat({{1, 1}, {0, 1}}));
    REQUIRE(intersect(plane, e1) == e1);
  }
  SECTION("idempotent") { REQUIRE(intersect(e1, e1) == e1); }
}

TEST_CASE("modular law at desk scale", "[exactalg]") {
  PrimeField f2(2);
  auto subs = enumerate_subspaces(f2, 3);
  for (const auto& a : subs)
    for (const auto& b : subs) {
      REQUIRE((a + b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("preimage", "[exactalg]") {
  QSub target = QSub::line(Q, qvec({0, 1}));
  SECTION("identity") {
    REQUIRE(QSub::preimage(QMat::identity(Q, 2), target) == target);
  }
  SECTION("zero map pulls back everything") {
    QMat z(Q, 2, 2);
    REQUIRE(QSub::preimage(z, target) == QSub::full(Q, 2));
  }
  SECTION("projection") {
    QMat m = qmat({{1, 0}, {0, 0}});
    REQUIRE(QSub::preimage(m, target) == QSub::line(Q, qvec({0, 1})));
  }
  SECTION("preimage of full is full, of zero is the kernel") {
    QMat m = qmat({{1, 2}, {2, 4}});
    REQUIRE(QSub::preimage(m, QSub::full(Q, 2)) == QSub::full(Q, 2));
    QSub ker = QSub::preimage(m, QSub::zero(Q, 2));
    REQUIRE(ker == QSub::span(m.kernel()));
    REQUIRE(ker.dim() == 1);
  }
}

TEST_CASE("membership", "[exactalg]") {
  QSub s = QSub::line(Q, qvec({1, 2}));
  REQUIRE(s.contains(qvec({0, 0})));
  REQUIRE(s.contains(qvec({1, 2})));
  REQUIRE(s.contains(qvec({-3, -6})));
  REQUIRE_FALSE(s.contains(qvec({1, 0})));
  REQUIRE_FALSE(QSub::line(Q, qvec({0, 1})).contains(qvec({1, 0})));
  REQUIRE_THROWS_AS(s.contains(qvec({1, 2, 3})), DimensionMismatch);
}

TEST_CASE("subspace enumeration matches brute-force oracle", "[exactalg]") {
  PrimeField f2(2), f3(3);
  SECTION("F2 dim 1") {
    auto subs = enumerate_subspaces(f2, 1);
    REQUIRE(subs.size() == 2);
    REQUIRE(count_subspaces_brute(f2, 1) == 2);
  }
  SECTION("F2 dim 3") {
    auto subs = enumerate_subspaces(f2, 3);
    REQUIRE(subs.size() == 16);
    REQUIRE(count_subspaces_brute(f2, 3) == 16);
    std::set<PSub> dedup(subs.begin(), subs.end());
    REQUIRE(dedup.size() == subs.size());
  }
  SECTION("F3 dim 2") {
    auto subs = enumerate_subspaces(f3, 2);
    REQUIRE(subs.size() == 6);
    REQUIRE(count_subspaces_brute(f3, 2) == 6);
  }
  SECTION("rationals rejected, cap enforced") {
    REQUIRE_THROWS_AS(enumerate_subspaces(f2, 5), Error);
  }
}

TEST_CASE("canonical rationals", "[exactalg]") {
  REQUIRE(Rational::parse("-6/8") == Rational(-3, 4));
  REQUIRE(Rational::parse("-6/8").str() == "-3/4");
  REQUIRE(Rational(5).str() == "5");
  REQUIRE_THROWS_AS(Rational::parse("x"), ParseError);
  REQUIRE_THROWS_AS(Rational(1, 0), Error);
  REQUIRE_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("prime field arithmetic", "[exactalg]") {
  PrimeField f7(7);
  Fp a = f7.from_int(3), b = f7.from_int(5);
  REQUIRE((a * b).value() == 1);
  REQUIRE((a + b).value() == 1);
  REQUIRE((-a).value() == 4);
  REQUIRE(a.inverse().value() == 5);
  REQUIRE(f7.from_int(-1).value() == 6);
  REQUIRE_THROWS_AS(PrimeField(6), Error);
  REQUIRE_THROWS_AS(f7.zero().inverse(), Error);
  PrimeField f5(5);
  REQUIRE_THROWS_AS(f7.one() + f5.one(), Error);
}
