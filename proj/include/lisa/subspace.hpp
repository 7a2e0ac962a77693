#ifndef LISA_SUBSPACE_HPP
#define LISA_SUBSPACE_HPP

#include <optional>
#include <vector>

#include "lisa/matrix.hpp"

namespace lisa {

/// Subspace of F^n, held as the unique reduced row-echelon basis with no
/// zero rows. Structural equality is subspace equality.
template <class F>
class Subspace {
public:
  using K = typename F::Element;

  /// Canonicalizes an arbitrary generating set (rows of `gens`).
  static Subspace span(const Matrix<F>& gens) {
    std::vector<size_t> piv;
    Matrix<F> r = gens.rref(&piv);
    Matrix<F> basis(gens.field(), piv.size(), gens.cols());
    for (size_t i = 0; i < piv.size(); ++i) basis.set_row(i, r.row(i));
    return Subspace(gens.cols(), basis, piv);
  }

  static Subspace zero(const F& f, size_t ambient) {
    return Subspace(ambient, Matrix<F>(f, 0, ambient), {});
  }

  static Subspace full(const F& f, size_t ambient) {
    std::vector<size_t> piv(ambient);
    for (size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(ambient, Matrix<F>::identity(f, ambient), piv);
  }

  static Subspace line(const F& f, const std::vector<K>& v) {
    Matrix<F> m(f, 1, v.size());
    m.set_row(0, v);
    return span(m);
  }

  const F& field() const { return basis_.field(); }
  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  /// Coordinates of v in the canonical basis, if v lies in the subspace.
  std::optional<std::vector<K>> coordinates(const std::vector<K>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector/ambient mismatch");
    std::vector<K> coords(dim(), field().zero());
    for (size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
    // pivot entries determine the only candidate; verify it reproduces v
    std::vector<K> rebuilt = from_coordinates(coords);
    if (rebuilt != v) return std::nullopt;
    return coords;
  }

  std::vector<K> from_coordinates(const std::vector<K>& coords) const {
    if (coords.size() != dim()) throw DimensionMismatch("coordinate length mismatch");
    std::vector<K> v(ambient_, field().zero());
    for (size_t i = 0; i < dim(); ++i)
      if (!coords[i].is_zero())
        for (size_t j = 0; j < ambient_; ++j) v[j] += coords[i] * basis_.at(i, j);
    return v;
  }

  bool contains(const std::vector<K>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& o) const {
    check_ambient(o);
    for (size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.basis_.row(i))) return false;
    return true;
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    return span(a.basis_.vstack(b.basis_));
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    // (x, y) with x^T A = y^T B; kernel of the n x (dim a + dim b) block
    // matrix [A^T | -B^T].
    const F& f = a.field();
    size_t ka = a.dim(), kb = b.dim();
    Matrix<F> m(f, a.ambient_, ka + kb);
    for (size_t i = 0; i < ka; ++i)
      for (size_t j = 0; j < a.ambient_; ++j) m.at(j, i) = a.basis_.at(i, j);
    for (size_t i = 0; i < kb; ++i)
      for (size_t j = 0; j < a.ambient_; ++j) m.at(j, ka + i) = -b.basis_.at(i, j);
    Matrix<F> ker = m.kernel();
    Matrix<F> gens(f, ker.rows(), a.ambient_);
    for (size_t r = 0; r < ker.rows(); ++r) {
      std::vector<K> v(a.ambient_, f.zero());
      for (size_t i = 0; i < ka; ++i)
        if (!ker.at(r, i).is_zero())
          for (size_t j = 0; j < a.ambient_; ++j)
            v[j] += ker.at(r, i) * a.basis_.at(i, j);
      gens.set_row(r, v);
    }
    return span(gens);
  }

  /// Rows spanning {z : B z = 0}; the subspace is exactly {w : Z w = 0}.
  Matrix<F> annihilator() const { return basis_.kernel(); }

  /// {v : m v in target}; m maps F^cols into the target's ambient space.
  static Subspace preimage(const Matrix<F>& m, const Subspace& target) {
    if (m.rows() != target.ambient_dim())
      throw DimensionMismatch("map codomain / target ambient mismatch");
    Matrix<F> z = target.annihilator();
    return span((z * m).kernel());
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    return basis_ < o.basis_;
  }

  std::string str() const { return "span" + basis_.str(); }

private:
  Subspace(size_t ambient, Matrix<F> basis, std::vector<size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("ambient dimension mismatch");
  }

  size_t ambient_;
  Matrix<F> basis_;
  std::vector<size_t> pivots_;
};

/// Re-expresses `inner` (contained in `outer`) in the coordinates of the
/// canonical basis of `outer`.
template <class F>
Subspace<F> subspace_in_coords(const Subspace<F>& inner, const Subspace<F>& outer) {
  Matrix<F> rows(inner.field(), inner.dim(), outer.dim());
  for (size_t i = 0; i < inner.dim(); ++i) {
    auto coords = outer.coordinates(inner.basis().row(i));
    if (!coords) throw Error("subspace is not contained in the reference space");
    rows.set_row(i, *coords);
  }
  return Subspace<F>::span(rows);
}

/// Mixed-radix index of a vector over F_p (coordinate i weighted p^i).
inline uint64_t vec_index(const std::vector<Fp>& v) {
  uint64_t idx = 0, w = 1;
  for (const auto& x : v) {
    idx += x.value() * w;
    w *= x.modulus();
  }
  return idx;
}

inline std::vector<Fp> vec_from_index(const PrimeField& f, size_t n, uint64_t idx) {
  std::vector<Fp> v;
  v.reserve(n);
  uint64_t p = f.characteristic();
  for (size_t i = 0; i < n; ++i) {
    v.emplace_back(idx % p, p);
    idx /= p;
  }
  return v;
}

inline uint64_t pow_u64(uint64_t b, uint64_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// All vectors of F_p^n in index order.
inline std::vector<std::vector<Fp>> all_vectors(const PrimeField& f, size_t n) {
  uint64_t total = pow_u64(f.characteristic(), n);
  std::vector<std::vector<Fp>> out;
  out.reserve(total);
  for (uint64_t i = 0; i < total; ++i) out.push_back(vec_from_index(f, n, i));
  return out;
}

/// All vectors of a subspace over F_p, zero first, in coefficient order.
inline std::vector<std::vector<Fp>> subspace_elements(const Subspace<PrimeField>& s) {
  const PrimeField& f = s.field();
  uint64_t total = pow_u64(f.characteristic(), s.dim());
  std::vector<std::vector<Fp>> out;
  out.reserve(total);
  for (uint64_t i = 0; i < total; ++i)
    out.push_back(s.from_coordinates(vec_from_index(f, s.dim(), i)));
  return out;
}

namespace detail {

inline void pivot_combinations(size_t n, size_t r, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> c(r);
  for (size_t i = 0; i < r; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    size_t i = r;
    while (i-- > 0) {
      if (c[i] != i + n - r) {
        ++c[i];
        for (size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (r == 0) return;
  }
}

}  // namespace detail

/// Every subspace of F_p^ambient exactly once, in canonical form, by direct
/// enumeration of reduced row-echelon shapes (rank ascending, pivot columns
/// lexicographic, free entries in odometer order).
inline std::vector<Subspace<PrimeField>> enumerate_subspaces(const PrimeField& f,
                                                             size_t ambient,
                                                             size_t dim_cap = 4) {
  if (ambient > dim_cap)
    throw Error("subspace enumeration bound exceeded: ambient " +
                std::to_string(ambient) + " > cap " + std::to_string(dim_cap));
  uint64_t p = f.characteristic();
  std::vector<Subspace<PrimeField>> out;
  for (size_t rank = 0; rank <= ambient; ++rank) {
    std::vector<std::vector<size_t>> combos;
    if (rank == 0) {
      out.push_back(Subspace<PrimeField>::zero(f, ambient));
      continue;
    }
    detail::pivot_combinations(ambient, rank, combos);
    for (const auto& piv : combos) {
      std::vector<bool> is_pivot(ambient, false);
      for (size_t c : piv) is_pivot[c] = true;
      // free slots: to the right of each row's pivot, skipping pivot columns
      std::vector<std::pair<size_t, size_t>> slots;
      for (size_t i = 0; i < rank; ++i)
        for (size_t j = piv[i] + 1; j < ambient; ++j)
          if (!is_pivot[j]) slots.emplace_back(i, j);
      uint64_t total = pow_u64(p, slots.size());
      for (uint64_t code = 0; code < total; ++code) {
        Matrix<PrimeField> m(f, rank, ambient);
        for (size_t i = 0; i < rank; ++i) m.at(i, piv[i]) = f.one();
        uint64_t rest = code;
        for (const auto& [i, j] : slots) {
          m.at(i, j) = Fp(rest % p, p);
          rest /= p;
        }
        out.push_back(Subspace<PrimeField>::span(m));
      }
    }
  }
  return out;
}

}  // namespace lisa

#endif
