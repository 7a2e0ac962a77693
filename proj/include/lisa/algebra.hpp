#ifndef LISA_ALGEBRA_HPP
#define LISA_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <vector>

#include "lisa/subspace.hpp"

namespace lisa {

enum class Flavor { general, associative, lie };

inline std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::general: return "general";
    case Flavor::associative: return "associative";
    case Flavor::lie: return "lie";
  }
  return "?";
}

/// Finite-dimensional algebra given by structure constants
/// e_i * e_j = sum_k c[i][j][k] e_k. Construction validates the flavor:
/// associativity on basis triples, or antisymmetry + alternating + Jacobi
/// in the Lie case (complete by multilinearity).
template <class F>
class StructAlgebra {
public:
  using K = typename F::Element;

  static StructAlgebra make(const F& f, size_t dim, Flavor flavor,
                            std::vector<K> table) {
    if (table.size() != dim * dim * dim)
      throw DimensionMismatch("structure constant table size mismatch");
    StructAlgebra a(f, dim, flavor, std::move(table));
    a.validate();
    return a;
  }

  const F& field() const { return field_; }
  size_t dim() const { return dim_; }
  Flavor flavor() const { return flavor_; }

  const K& c(size_t i, size_t j, size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  std::vector<K> basis_vector(size_t i) const { return vec_unit(field_, dim_, i); }

  std::vector<K> multiply(const std::vector<K>& x, const std::vector<K>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw DimensionMismatch("algebra element dimension mismatch");
    std::vector<K> out(dim_, field_.zero());
    for (size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        K coeff = x[i] * y[j];
        for (size_t k = 0; k < dim_; ++k)
          if (!c(i, j, k).is_zero()) out[k] += coeff * c(i, j, k);
      }
    }
    return out;
  }

  /// Basis product e_i * e_j as a vector.
  std::vector<K> basis_product(size_t i, size_t j) const {
    std::vector<K> out(dim_, field_.zero());
    for (size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
  }

  /// Matrix of y -> x * y.
  Matrix<F> left_multiplication(const std::vector<K>& x) const {
    Matrix<F> m(field_, dim_, dim_);
    for (size_t j = 0; j < dim_; ++j) m.set_col(j, multiply(x, basis_vector(j)));
    return m;
  }

  /// Adjoint map ad(x) = [x, -] for Lie algebras (same as left multiplication).
  Matrix<F> ad(const std::vector<K>& x) const { return left_multiplication(x); }

  bool is_subalgebra(const Subspace<F>& s) const {
    check_space(s);
    for (size_t i = 0; i < s.dim(); ++i)
      for (size_t j = 0; j < s.dim(); ++j)
        if (!s.contains(multiply(s.basis().row(i), s.basis().row(j)))) return false;
    return true;
  }

  bool is_ideal(const Subspace<F>& s) const {
    check_space(s);
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < s.dim(); ++j) {
        std::vector<K> v = s.basis().row(j);
        if (!s.contains(multiply(basis_vector(i), v))) return false;
        if (!s.contains(multiply(v, basis_vector(i)))) return false;
      }
    return true;
  }

  bool is_abelian() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Unique two-sided unit, when the (associative) algebra has one.
  std::optional<std::vector<K>> find_unit() const {
    if (flavor_ != Flavor::associative)
      throw Error("find_unit requires an associative algebra");
    if (dim_ == 0) return std::vector<K>{};
    // linear system: u e_j = e_j and e_j u = e_j for all j
    Matrix<F> sys(field_, 2 * dim_ * dim_, dim_);
    std::vector<K> rhs(2 * dim_ * dim_, field_.zero());
    size_t row = 0;
    for (size_t j = 0; j < dim_; ++j)
      for (size_t k = 0; k < dim_; ++k) {
        for (size_t i = 0; i < dim_; ++i) {
          sys.at(row, i) = c(i, j, k);
          sys.at(row + 1, i) = c(j, i, k);
        }
        K want = (j == k) ? field_.one() : field_.zero();
        rhs[row] = want;
        rhs[row + 1] = want;
        row += 2;
      }
    return sys.solve(rhs);
  }

  /// A^2 = A: the span of all basis products is the whole space.
  bool is_idempotent_algebra() const {
    Matrix<F> prods(field_, dim_ * dim_, dim_);
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < dim_; ++j) prods.set_row(i * dim_ + j, basis_product(i, j));
    return prods.rank() == dim_;
  }

  Matrix<F> killing_form() const {
    Matrix<F> kappa(field_, dim_, dim_);
    std::vector<Matrix<F>> ads;
    ads.reserve(dim_);
    for (size_t i = 0; i < dim_; ++i) ads.push_back(ad(basis_vector(i)));
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < dim_; ++j) {
        Matrix<F> prod = ads[i] * ads[j];
        K tr = field_.zero();
        for (size_t k = 0; k < dim_; ++k) tr += prod.at(k, k);
        kappa.at(i, j) = tr;
      }
    return kappa;
  }

  /// Killing-form nondegeneracy; only decided in characteristic zero.
  bool is_semisimple_lie() const {
    if (flavor_ != Flavor::lie) throw Error("semisimplicity requires a Lie algebra");
    if (field_.characteristic() != 0)
      throw Error("semisimplicity is only decided in characteristic 0");
    if (dim_ == 0) return true;
    return !killing_form().determinant().is_zero();
  }

  bool operator==(const StructAlgebra& o) const {
    return dim_ == o.dim_ && flavor_ == o.flavor_ && c_ == o.c_;
  }

private:
  StructAlgebra(const F& f, size_t dim, Flavor flavor, std::vector<K> table)
      : field_(f), dim_(dim), flavor_(flavor), c_(std::move(table)) {}

  void check_space(const Subspace<F>& s) const {
    if (s.ambient_dim() != dim_) throw DimensionMismatch("subspace/algebra ambient mismatch");
  }

  void validate() const {
    if (flavor_ == Flavor::associative) {
      for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
          for (size_t k = 0; k < dim_; ++k) {
            auto lhs = multiply(basis_product(i, j), basis_vector(k));
            auto rhs = multiply(basis_vector(i), basis_product(j, k));
            if (lhs != rhs)
              throw ValidationError("associativity fails on basis triple (" +
                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
          }
    } else if (flavor_ == Flavor::lie) {
      for (size_t i = 0; i < dim_; ++i) {
        if (!vec_is_zero(basis_product(i, i)))
          throw ValidationError("bracket not alternating at basis index " + std::to_string(i));
        for (size_t j = 0; j < dim_; ++j)
          if (basis_product(i, j) != vec_neg(basis_product(j, i)))
            throw ValidationError("bracket not antisymmetric on basis pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
      }
      for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
          for (size_t k = 0; k < dim_; ++k) {
            auto jac = vec_add(
                multiply(basis_product(i, j), basis_vector(k)),
                vec_add(multiply(basis_product(j, k), basis_vector(i)),
                        multiply(basis_product(k, i), basis_vector(j))));
            if (!vec_is_zero(jac))
              throw ValidationError("Jacobi identity fails on basis triple (" +
                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
          }
    }
  }

  F field_;
  size_t dim_;
  Flavor flavor_;
  std::vector<K> c_;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const StructAlgebra<F>>;

/// Homomorphism of algebras as a matrix, validated on basis pairs.
template <class F>
class AlgebraHom {
public:
  using K = typename F::Element;

  static AlgebraHom make(AlgebraPtr<F> source, AlgebraPtr<F> target, Matrix<F> m) {
    if (m.rows() != target->dim() || m.cols() != source->dim())
      throw DimensionMismatch("hom matrix shape mismatch");
    for (size_t i = 0; i < source->dim(); ++i)
      for (size_t j = 0; j < source->dim(); ++j) {
        auto lhs = m.apply(source->basis_product(i, j));
        auto rhs = target->multiply(m.apply(source->basis_vector(i)),
                                    m.apply(source->basis_vector(j)));
        if (lhs != rhs)
          throw ValidationError("map is not multiplicative on basis pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
      }
    return AlgebraHom(std::move(source), std::move(target), std::move(m));
  }

  const AlgebraPtr<F>& source() const { return source_; }
  const AlgebraPtr<F>& target() const { return target_; }
  const Matrix<F>& matrix() const { return m_; }
  std::vector<K> apply(const std::vector<K>& x) const { return m_.apply(x); }

private:
  AlgebraHom(AlgebraPtr<F> s, AlgebraPtr<F> t, Matrix<F> m)
      : source_(std::move(s)), target_(std::move(t)), m_(std::move(m)) {}

  AlgebraPtr<F> source_, target_;
  Matrix<F> m_;
};

/// The algebra structure induced on a multiplicatively closed subspace,
/// together with the inclusion matrix (ambient_dim x s.dim()).
template <class F>
std::pair<StructAlgebra<F>, Matrix<F>> subalgebra_as_algebra(const StructAlgebra<F>& big,
                                                             const Subspace<F>& s,
                                                             Flavor flavor) {
  using K = typename F::Element;
  const F& f = big.field();
  size_t k = s.dim();
  std::vector<K> table(k * k * k, f.zero());
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      auto prod = big.multiply(s.basis().row(i), s.basis().row(j));
      auto coords = s.coordinates(prod);
      if (!coords)
        throw NotSubalgebra("subspace is not closed under the product (basis pair " +
                            std::to_string(i) + "," + std::to_string(j) + ")");
      for (size_t t = 0; t < k; ++t) table[(i * k + j) * k + t] = (*coords)[t];
    }
  Matrix<F> incl(f, big.dim(), k);
  for (size_t j = 0; j < k; ++j) incl.set_col(j, s.basis().row(j));
  return {StructAlgebra<F>::make(f, k, flavor, std::move(table)), incl};
}

// ---------------------------------------------------------------------------
// builders

/// Heisenberg Lie algebra: basis {a, b, c} with [a,b] = c.
template <class F>
StructAlgebra<F> heisenberg(const F& f) {
  using K = typename F::Element;
  std::vector<K> t(27, f.zero());
  auto set = [&](size_t i, size_t j, size_t k, long long v) {
    t[(i * 3 + j) * 3 + k] = f.from_int(v);
  };
  set(0, 1, 2, 1);
  set(1, 0, 2, -1);
  return StructAlgebra<F>::make(f, 3, Flavor::lie, std::move(t));
}

/// sl2 with basis {e, h, f}: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
template <class F>
StructAlgebra<F> sl2(const F& f) {
  using K = typename F::Element;
  std::vector<K> t(27, f.zero());
  auto set = [&](size_t i, size_t j, size_t k, long long v) {
    t[(i * 3 + j) * 3 + k] = f.from_int(v);
  };
  set(0, 2, 1, 1);
  set(2, 0, 1, -1);  // [e,f] = h
  set(1, 0, 0, 2);
  set(0, 1, 0, -2);  // [h,e] = 2e
  set(1, 2, 2, -2);
  set(2, 1, 2, 2);  // [h,f] = -2f
  return StructAlgebra<F>::make(f, 3, Flavor::lie, std::move(t));
}

template <class F>
StructAlgebra<F> abelian(size_t n, const F& f) {
  using K = typename F::Element;
  return StructAlgebra<F>::make(f, n, Flavor::lie, std::vector<K>(n * n * n, f.zero()));
}

/// Two-dimensional solvable Lie algebra: [x,y] = y.
template <class F>
StructAlgebra<F> solvable2(const F& f) {
  using K = typename F::Element;
  std::vector<K> t(8, f.zero());
  t[(0 * 2 + 1) * 2 + 1] = f.one();
  t[(1 * 2 + 0) * 2 + 1] = -f.one();
  return StructAlgebra<F>::make(f, 2, Flavor::lie, std::move(t));
}

/// F[z]/(z^p) with basis {1, z, ..., z^(p-1)}; requires characteristic p > 2.
inline StructAlgebra<PrimeField> truncated_poly(uint64_t p) {
  if (p <= 2) throw Error("truncated polynomial algebra needs p > 2");
  PrimeField f(p);
  std::vector<Fp> t(p * p * p, f.zero());
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j)
      if (i + j < p) t[(i * p + j) * p + (i + j)] = f.one();
  return StructAlgebra<PrimeField>::make(f, p, Flavor::associative, std::move(t));
}

/// Direct product of n copies of the base field (componentwise product).
template <class F>
StructAlgebra<F> diagonal_assoc(size_t n, const F& f) {
  using K = typename F::Element;
  std::vector<K> t(n * n * n, f.zero());
  for (size_t i = 0; i < n; ++i) t[(i * n + i) * n + i] = f.one();
  return StructAlgebra<F>::make(f, n, Flavor::associative, std::move(t));
}

/// Full matrix algebra M_n(F), basis e_{rc} in row-major order.
template <class F>
StructAlgebra<F> matrix_algebra(size_t n, const F& f) {
  using K = typename F::Element;
  size_t d = n * n;
  std::vector<K> t(d * d * d, f.zero());
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      for (size_t s = 0; s < n; ++s)
        for (size_t u = 0; u < n; ++u)
          if (c == s) t[((r * n + c) * d + (s * n + u)) * d + (r * n + u)] = f.one();
  return StructAlgebra<F>::make(f, d, Flavor::associative, std::move(t));
}

/// S (x) A for a Lie algebra S and commutative associative A, with
/// [s(x)a, t(x)b] = [s,t](x)ab. Basis index (i, alpha) -> i * dim(A) + alpha.
template <class F>
StructAlgebra<F> tensor_lie(const StructAlgebra<F>& s, const StructAlgebra<F>& a) {
  using K = typename F::Element;
  if (s.flavor() != Flavor::lie) throw Error("tensor_lie: first factor must be Lie");
  if (a.flavor() != Flavor::associative)
    throw Error("tensor_lie: second factor must be associative");
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i))
        throw Error("tensor_lie: second factor must be commutative");
  const F& f = s.field();
  size_t m = s.dim(), n = a.dim(), d = m * n;
  std::vector<K> t(d * d * d, f.zero());
  for (size_t i = 0; i < m; ++i)
    for (size_t al = 0; al < n; ++al)
      for (size_t j = 0; j < m; ++j)
        for (size_t be = 0; be < n; ++be)
          for (size_t k = 0; k < m; ++k)
            for (size_t ga = 0; ga < n; ++ga) {
              K v = s.c(i, j, k) * a.c(al, be, ga);
              if (!v.is_zero())
                t[((i * n + al) * d + (j * n + be)) * d + (k * n + ga)] = v;
            }
  return StructAlgebra<F>::make(f, d, Flavor::lie, std::move(t));
}

}  // namespace lisa

#endif
