#ifndef LISA_CARRIER_HPP
#define LISA_CARRIER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "lisa/check.hpp"
#include "lisa/matrix.hpp"

namespace lisa {

// A carrier is any type providing, by duck typing:
//   using Element;                       regular value type with == and <
//   using Field;                         RationalField or PrimeField
//   const Field& field() const;
//   Element add(a, b), neg(a), smul(scalar, a);
//   std::string show(const Element&) const;
// and optionally:
//   Element mul(a, b);                   the product / Lie bracket
//   Element zero();                      additive identity
//   std::vector<Element> elements();     finite carriers, enumeration order fixed
//   Element sample(std::mt19937_64&);    sampled carriers

template <class C>
concept CarrierHasMul = requires(const C& c, const typename C::Element& x) {
  { c.mul(x, x) } -> std::convertible_to<typename C::Element>;
};

template <class C>
concept CarrierHasZero = requires(const C& c) {
  { c.zero() } -> std::convertible_to<typename C::Element>;
};

template <class C>
concept FiniteCarrier = requires(const C& c) {
  { c.elements() } -> std::convertible_to<std::vector<typename C::Element>>;
};

template <class C>
concept SampledCarrier = requires(const C& c, std::mt19937_64& rng) {
  { c.sample(rng) } -> std::convertible_to<typename C::Element>;
};

template <class C>
typename C::Element carrier_zero_of(const C& c, const typename C::Element& x) {
  return c.add(x, c.neg(x));
}

/// Natural partial order: x <= y iff x = y + 0_x.
template <class C>
bool carrier_leq(const C& c, const typename C::Element& x, const typename C::Element& y) {
  return x == c.add(y, carrier_zero_of(c, x));
}

// ---------------------------------------------------------------------------
// Exhaustive view of a finite carrier: elements are indexed and the binary
// operations are materialized as tables, so quantifier loops are lookups.

template <class C>
class FiniteOps {
public:
  using Element = typename C::Element;
  using Field = typename C::Field;
  using K = typename Field::Element;
  using H = int;

  explicit FiniteOps(const C& c) : c_(&c) {
    elems_ = c.elements();
    for (size_t i = 0; i < elems_.size(); ++i) idx_.emplace(elems_[i], (int)i);
    if (idx_.size() != elems_.size()) throw Error("carrier enumeration has duplicates");
    int n = (int)elems_.size();
    add_.resize((size_t)n * n);
    neg_.resize(n);
    zof_.resize(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) add_[(size_t)i * n + j] = index_of(c.add(elems_[i], elems_[j]));
    for (int i = 0; i < n; ++i) neg_[i] = index_of(c.neg(elems_[i]));
    for (int i = 0; i < n; ++i) zof_[i] = add_[(size_t)i * n + neg_[i]];
    if constexpr (CarrierHasMul<C>) {
      mul_.resize((size_t)n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          mul_[(size_t)i * n + j] = index_of(c.mul(elems_[i], elems_[j]));
    }
    for (int i = 0; i < n; ++i)
      if (zof_[i] == i) idems_.push_back(i);
    scalars_ = c.field().scalar_pool();
  }

  const C& carrier() const { return *c_; }
  int n() const { return (int)elems_.size(); }
  const std::vector<Element>& elements() const { return elems_; }
  const Element& element(int i) const { return elems_[i]; }
  const std::vector<int>& idempotents() const { return idems_; }
  const std::vector<K>& scalars() const { return scalars_; }
  uint64_t char_p() const { return c_->field().characteristic(); }

  int index_of(const Element& e) const {
    auto it = idx_.find(e);
    if (it == idx_.end()) throw Error("carrier is not closed under its operations");
    return it->second;
  }

  H add(H a, H b) const { return add_[(size_t)a * n() + b]; }
  H neg(H a) const { return neg_[a]; }
  H mul(H a, H b) const { return mul_[(size_t)a * n() + b]; }
  H smul(const K& s, H a) const { return index_of(c_->smul(s, elems_[a])); }
  H zero_of(H a) const { return zof_[a]; }
  bool eq(H a, H b) const { return a == b; }
  bool leq(H a, H b) const { return a == add(b, zof_[a]); }
  bool is_idem(H a) const { return zof_[a] == a; }
  bool has_mul() const { return !mul_.empty(); }

  std::optional<H> zero() const {
    if constexpr (CarrierHasZero<C>) return index_of(c_->zero());
    return std::nullopt;
  }

  std::string show(H a) const { return c_->show(elems_[a]); }

  template <class Fn>
  bool for_elems(Fn fn) const {
    for (int i = 0; i < n(); ++i)
      if (!fn(i)) return false;
    return true;
  }
  template <class Fn>
  bool for_pairs(Fn fn) const {
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        if (!fn(i, j)) return false;
    return true;
  }
  template <class Fn>
  bool for_triples(Fn fn) const {
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        for (int k = 0; k < n(); ++k)
          if (!fn(i, j, k)) return false;
    return true;
  }
  template <class Fn>
  bool for_idems(Fn fn) const {
    for (int e : idems_)
      if (!fn(e)) return false;
    return true;
  }
  template <class Fn>
  bool for_idem_pairs(Fn fn) const {
    for (int e : idems_)
      for (int f : idems_)
        if (!fn(e, f)) return false;
    return true;
  }
  template <class Fn>
  bool for_pairs_with_idem(Fn fn) const {
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        for (int e : idems_)
          if (!fn(i, j, e)) return false;
    return true;
  }
  template <class Fn>
  bool for_elems_with_idem(Fn fn) const {
    for (int i = 0; i < n(); ++i)
      for (int e : idems_)
        if (!fn(i, e)) return false;
    return true;
  }

  CheckMode mode() const { return CheckMode{true, 0, 0}; }

private:
  const C* c_;
  std::vector<Element> elems_;
  std::map<Element, int> idx_;
  std::vector<int> add_, mul_;
  std::vector<int> neg_, zof_;
  std::vector<int> idems_;
  std::vector<K> scalars_;
};

// ---------------------------------------------------------------------------
// Sampled view: the same driver interface over random draws. Each driver
// call reseeds deterministically, so verdicts replay under a fixed seed.

template <class C>
class SampledOps {
public:
  using Element = typename C::Element;
  using Field = typename C::Field;
  using K = typename Field::Element;
  using H = Element;

  SampledOps(const C& c, const CheckOptions& opt) : c_(&c), opt_(opt) {
    scalars_ = c.field().scalar_pool();
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.extra_scalars; ++i) scalars_.push_back(c.field().sample(rng));
    for (int i = 0; i < opt.sample_idempotents; ++i) {
      Element e = carrier_zero_of(*c_, c_->sample(rng));
      if (std::find(idems_.begin(), idems_.end(), e) == idems_.end()) idems_.push_back(e);
    }
  }

  const C& carrier() const { return *c_; }
  const std::vector<K>& scalars() const { return scalars_; }
  uint64_t char_p() const { return c_->field().characteristic(); }

  H add(const H& a, const H& b) const { return c_->add(a, b); }
  H neg(const H& a) const { return c_->neg(a); }
  H mul(const H& a, const H& b) const { return c_->mul(a, b); }
  H smul(const K& s, const H& a) const { return c_->smul(s, a); }
  H zero_of(const H& a) const { return carrier_zero_of(*c_, a); }
  bool eq(const H& a, const H& b) const { return a == b; }
  bool leq(const H& a, const H& b) const { return carrier_leq(*c_, a, b); }
  bool is_idem(const H& a) const { return zero_of(a) == a; }

  std::optional<H> zero() const {
    if constexpr (CarrierHasZero<C>) return c_->zero();
    return std::nullopt;
  }

  std::string show(const H& a) const { return c_->show(a); }

  template <class Fn>
  bool for_elems(Fn fn) const {
    auto rng = fresh();
    for (int t = 0; t < opt_.trials; ++t)
      if (!fn(c_->sample(rng))) return false;
    return true;
  }
  template <class Fn>
  bool for_pairs(Fn fn) const {
    auto rng = fresh();
    for (int t = 0; t < opt_.trials; ++t) {
      H x = c_->sample(rng), y = c_->sample(rng);
      if (!fn(x, y)) return false;
    }
    return true;
  }
  template <class Fn>
  bool for_triples(Fn fn) const {
    auto rng = fresh();
    for (int t = 0; t < opt_.trials; ++t) {
      H x = c_->sample(rng), y = c_->sample(rng), z = c_->sample(rng);
      if (!fn(x, y, z)) return false;
    }
    return true;
  }
  template <class Fn>
  bool for_idems(Fn fn) const {
    for (const auto& e : idems_)
      if (!fn(e)) return false;
    return true;
  }
  template <class Fn>
  bool for_idem_pairs(Fn fn) const {
    for (const auto& e : idems_)
      for (const auto& f : idems_)
        if (!fn(e, f)) return false;
    return true;
  }
  template <class Fn>
  bool for_pairs_with_idem(Fn fn) const {
    auto rng = fresh();
    for (int t = 0; t < opt_.trials; ++t) {
      H x = c_->sample(rng), y = c_->sample(rng);
      for (const auto& e : idems_)
        if (!fn(x, y, e)) return false;
    }
    return true;
  }
  template <class Fn>
  bool for_elems_with_idem(Fn fn) const {
    auto rng = fresh();
    for (int t = 0; t < opt_.trials; ++t) {
      H x = c_->sample(rng);
      for (const auto& e : idems_)
        if (!fn(x, e)) return false;
    }
    return true;
  }

  CheckMode mode() const { return CheckMode{false, opt_.trials, opt_.seed}; }

private:
  std::mt19937_64 fresh() const {
    return std::mt19937_64(opt_.seed + 0x9E3779B97F4A7C15ULL * ++call_);
  }

  const C* c_;
  CheckOptions opt_;
  std::vector<K> scalars_;
  std::vector<Element> idems_;
  mutable uint64_t call_ = 0;
};

// ---------------------------------------------------------------------------
// axiom batteries, written once against either view

namespace detail {

template <class O>
void isv_axioms(const O& o, CheckReport& rep) {
  using K = typename O::K;
  std::string cex;
  auto w1 = [&](const auto& x) { return "x=" + o.show(x); };
  auto w2 = [&](const auto& x, const auto& y) { return w1(x) + ", y=" + o.show(y); };

  rep.add("isg.1", "x+y = y+x", o.for_pairs([&](auto x, auto y) {
    if (o.eq(o.add(x, y), o.add(y, x))) return true;
    cex = w2(x, y);
    return false;
  }), cex);

  rep.add("isg.2", "(x+y)+z = x+(y+z)", o.for_triples([&](auto x, auto y, auto z) {
    if (o.eq(o.add(o.add(x, y), z), o.add(x, o.add(y, z)))) return true;
    cex = w2(x, y) + ", z=" + o.show(z);
    return false;
  }), cex);

  rep.add("isg.3", "x = x+(-x)+x", o.for_elems([&](auto x) {
    if (o.eq(x, o.add(o.add(x, o.neg(x)), x))) return true;
    cex = w1(x);
    return false;
  }), cex);

  rep.add("isg.4", "-x = (-x)+x+(-x)", o.for_elems([&](auto x) {
    if (o.eq(o.neg(x), o.add(o.add(o.neg(x), x), o.neg(x)))) return true;
    cex = w1(x);
    return false;
  }), cex);

  rep.add("def2.1", "(a+b)x = ax+bx", o.for_elems([&](auto x) {
    for (const K& a : o.scalars())
      for (const K& b : o.scalars())
        if (!o.eq(o.smul(a + b, x), o.add(o.smul(a, x), o.smul(b, x)))) {
          cex = w1(x) + ", a=" + a.str() + ", b=" + b.str();
          return false;
        }
    return true;
  }), cex);

  rep.add("def2.2", "a(x+y) = ax+ay", o.for_pairs([&](auto x, auto y) {
    for (const K& a : o.scalars())
      if (!o.eq(o.smul(a, o.add(x, y)), o.add(o.smul(a, x), o.smul(a, y)))) {
        cex = w2(x, y) + ", a=" + a.str();
        return false;
      }
    return true;
  }), cex);

  rep.add("def2.3", "a(bx) = (ab)x", o.for_elems([&](auto x) {
    for (const K& a : o.scalars())
      for (const K& b : o.scalars())
        if (!o.eq(o.smul(a, o.smul(b, x)), o.smul(a * b, x))) {
          cex = w1(x) + ", a=" + a.str() + ", b=" + b.str();
          return false;
        }
    return true;
  }), cex);

  rep.add("def2.4", "1x = x", o.for_elems([&](auto x) {
    if (o.eq(o.smul(o.carrier().field().one(), x), x)) return true;
    cex = w1(x);
    return false;
  }), cex);

  rep.add("def2.d1", "(-a)x = a(-x) = -(ax)", o.for_elems([&](auto x) {
    for (const K& a : o.scalars()) {
      auto m = o.neg(o.smul(a, x));
      if (!o.eq(o.smul(-a, x), m) || !o.eq(o.smul(a, o.neg(x)), m)) {
        cex = w1(x) + ", a=" + a.str();
        return false;
      }
    }
    return true;
  }), cex);

  rep.add("def2.d2", "0x = 0_(ax)", o.for_elems([&](auto x) {
    auto zx = o.smul(o.carrier().field().zero(), x);
    for (const K& a : o.scalars())
      if (!o.eq(zx, o.zero_of(o.smul(a, x)))) {
        cex = w1(x) + ", a=" + a.str();
        return false;
      }
    return true;
  }), cex);

  rep.add("def2.d3", "a 0_x = 0_x", o.for_elems([&](auto x) {
    auto zx = o.zero_of(x);
    for (const K& a : o.scalars())
      if (!o.eq(o.smul(a, zx), zx)) {
        cex = w1(x) + ", a=" + a.str();
        return false;
      }
    return true;
  }), cex);
}

template <class O>
void naisa_axioms(const O& o, CheckReport& rep) {
  using K = typename O::K;
  std::string cex;
  auto w2 = [&](const auto& x, const auto& y) {
    return "x=" + o.show(x) + ", y=" + o.show(y);
  };

  rep.add("def4.1", "a(xy) = (ax)y = x(ay), a != 0", o.for_pairs([&](auto x, auto y) {
    for (const K& a : o.scalars()) {
      if (a.is_zero()) continue;
      auto lhs = o.smul(a, o.mul(x, y));
      if (!o.eq(lhs, o.mul(o.smul(a, x), y)) || !o.eq(lhs, o.mul(x, o.smul(a, y)))) {
        cex = w2(x, y) + ", a=" + a.str();
        return false;
      }
    }
    return true;
  }), cex);

  rep.add("def4.2", "x(y+z) >= xy+xz", o.for_triples([&](auto x, auto y, auto z) {
    if (o.leq(o.add(o.mul(x, y), o.mul(x, z)), o.mul(x, o.add(y, z)))) return true;
    cex = w2(x, y) + ", z=" + o.show(z);
    return false;
  }), cex);

  rep.add("def4.3", "(x+z)y >= xy+zy", o.for_triples([&](auto x, auto y, auto z) {
    if (o.leq(o.add(o.mul(x, y), o.mul(z, y)), o.mul(o.add(x, z), y))) return true;
    cex = w2(x, y) + ", z=" + o.show(z);
    return false;
  }), cex);

  rep.add("def4.4", "x(e+z) = xe+xz for idempotent e", o.for_pairs_with_idem(
    [&](auto x, auto z, auto e) {
      if (o.eq(o.mul(x, o.add(e, z)), o.add(o.mul(x, e), o.mul(x, z)))) return true;
      cex = "x=" + o.show(x) + ", z=" + o.show(z) + ", e=" + o.show(e);
      return false;
    }), cex);

  rep.add("def4.5", "(x+e)z = xz+ez for idempotent e", o.for_pairs_with_idem(
    [&](auto x, auto z, auto e) {
      if (o.eq(o.mul(o.add(x, e), z), o.add(o.mul(x, z), o.mul(e, z)))) return true;
      cex = "x=" + o.show(x) + ", z=" + o.show(z) + ", e=" + o.show(e);
      return false;
    }), cex);

  rep.add("def4.6", "e+f <= ef <= f for idempotents", o.for_idem_pairs([&](auto e, auto f) {
    auto ef = o.mul(e, f);
    if (o.leq(o.add(e, f), ef) && o.leq(ef, f)) return true;
    cex = "e=" + o.show(e) + ", f=" + o.show(f);
    return false;
  }), cex);

  rep.add("def4.d1", "ef+fe = e+f for idempotents", o.for_idem_pairs([&](auto e, auto f) {
    if (o.eq(o.add(o.mul(e, f), o.mul(f, e)), o.add(e, f))) return true;
    cex = "e=" + o.show(e) + ", f=" + o.show(f);
    return false;
  }), cex);

  rep.add("def4.d2", "x 0_y and 0_x y are idempotent", o.for_pairs([&](auto x, auto y) {
    if (o.is_idem(o.mul(x, o.zero_of(y))) && o.is_idem(o.mul(o.zero_of(x), y)))
      return true;
    cex = w2(x, y);
    return false;
  }), cex);

  rep.add("def4.d3", "0_(xy) <= 0_x y, x 0_y, 0_x 0_y", o.for_pairs([&](auto x, auto y) {
    auto z = o.zero_of(o.mul(x, y));
    if (o.leq(z, o.mul(o.zero_of(x), y)) && o.leq(z, o.mul(x, o.zero_of(y))) &&
        o.leq(z, o.mul(o.zero_of(x), o.zero_of(y))))
      return true;
    cex = w2(x, y);
    return false;
  }), cex);

  rep.add("def4.d4", "x(y+z)-(xy+xz) = 0_(xy)+0_(xz)", o.for_triples(
    [&](auto x, auto y, auto z) {
      auto s = o.add(o.mul(x, y), o.mul(x, z));
      auto lhs = o.add(o.mul(x, o.add(y, z)), o.neg(s));
      if (o.eq(lhs, o.add(o.zero_of(o.mul(x, y)), o.zero_of(o.mul(x, z))))) return true;
      cex = w2(x, y) + ", z=" + o.show(z);
      return false;
    }), cex);
}

template <class O>
void lie_axioms(const O& o, CheckReport& rep) {
  using K = typename O::K;
  std::string cex;
  auto w2 = [&](const auto& x, const auto& y) {
    return "x=" + o.show(x) + ", y=" + o.show(y);
  };

  rep.add("def6.1", "a[x,y] = [ax,y] = [x,ay], a != 0", o.for_pairs([&](auto x, auto y) {
    for (const K& a : o.scalars()) {
      if (a.is_zero()) continue;
      auto lhs = o.smul(a, o.mul(x, y));
      if (!o.eq(lhs, o.mul(o.smul(a, x), y)) || !o.eq(lhs, o.mul(x, o.smul(a, y)))) {
        cex = w2(x, y) + ", a=" + a.str();
        return false;
      }
    }
    return true;
  }), cex);

  rep.add("def6.2", "[x,y+z] >= [x,y]+[x,z]", o.for_triples([&](auto x, auto y, auto z) {
    if (o.leq(o.add(o.mul(x, y), o.mul(x, z)), o.mul(x, o.add(y, z)))) return true;
    cex = w2(x, y) + ", z=" + o.show(z);
    return false;
  }), cex);

  rep.add("def6.3", "[x,y] = -[y,x]", o.for_pairs([&](auto x, auto y) {
    if (o.eq(o.mul(x, y), o.neg(o.mul(y, x)))) return true;
    cex = w2(x, y);
    return false;
  }), cex);

  rep.add("def6.4", "[x,e+z] = [x,e]+[x,z] for idempotent e", o.for_pairs_with_idem(
    [&](auto x, auto z, auto e) {
      if (o.eq(o.mul(x, o.add(e, z)), o.add(o.mul(x, e), o.mul(x, z)))) return true;
      cex = "x=" + o.show(x) + ", z=" + o.show(z) + ", e=" + o.show(e);
      return false;
    }), cex);

  rep.add("def6.5", "J(x,y,z) <= 0_(x+y+z)", o.for_triples([&](auto x, auto y, auto z) {
    auto jac = o.add(o.mul(o.mul(x, y), z),
                     o.add(o.mul(o.mul(y, z), x), o.mul(o.mul(z, x), y)));
    if (o.leq(jac, o.zero_of(o.add(o.add(x, y), z)))) return true;
    cex = w2(x, y) + ", z=" + o.show(z);
    return false;
  }), cex);

  rep.add("def6.6", "[e,f] = e+f for idempotents", o.for_idem_pairs([&](auto e, auto f) {
    if (o.eq(o.mul(e, f), o.add(e, f))) return true;
    cex = "e=" + o.show(e) + ", f=" + o.show(f);
    return false;
  }), cex);

  rep.add("def6.d1", "[x,-y] = -[x,y] = [-x,y]", o.for_pairs([&](auto x, auto y) {
    auto m = o.neg(o.mul(x, y));
    if (o.eq(o.mul(x, o.neg(y)), m) && o.eq(o.mul(o.neg(x), y), m)) return true;
    cex = w2(x, y);
    return false;
  }), cex);

  rep.add("def6.d2", "[x,e] is idempotent", o.for_elems_with_idem([&](auto x, auto e) {
    if (o.is_idem(o.mul(x, e))) return true;
    cex = "x=" + o.show(x) + ", e=" + o.show(e);
    return false;
  }), cex);

  rep.add("def6.d3", "0_[x,y] <= [x,0_y]+[0_x,y]+0_(x+y)", o.for_pairs([&](auto x, auto y) {
    auto rhs = o.add(o.mul(x, o.zero_of(y)),
                     o.add(o.mul(o.zero_of(x), y), o.zero_of(o.add(x, y))));
    if (o.leq(o.zero_of(o.mul(x, y)), rhs)) return true;
    cex = w2(x, y);
    return false;
  }), cex);

  if (o.char_p() == 2) {
    rep.add_skip("def6.d4", "[x,x] <= 0_x", "skipped: char 2");
  } else {
    rep.add("def6.d4", "[x,x] <= 0_x", o.for_elems([&](auto x) {
      if (o.leq(o.mul(x, x), o.zero_of(x))) return true;
      cex = "x=" + o.show(x);
      return false;
    }), cex);
  }
}

enum class ProductKind { generic, associative, lie };

template <class O>
void semilattice_axioms(const O& o, CheckReport& rep, ProductKind kind) {
  std::string cex;
  auto w2 = [&](const auto& x, const auto& y) {
    return "x=" + o.show(x) + ", y=" + o.show(y);
  };

  rep.add("sla.1", "0_(xy) = 0_(x+y)", o.for_pairs([&](auto x, auto y) {
    if (o.eq(o.zero_of(o.mul(x, y)), o.zero_of(o.add(x, y)))) return true;
    cex = w2(x, y);
    return false;
  }), cex);

  rep.add("sla.d1", "x(y+z) = xy+xz and (y+z)x = yx+zx", o.for_triples(
    [&](auto x, auto y, auto z) {
      if (o.eq(o.mul(x, o.add(y, z)), o.add(o.mul(x, y), o.mul(x, z))) &&
          o.eq(o.mul(o.add(y, z), x), o.add(o.mul(y, x), o.mul(z, x))))
        return true;
      cex = w2(x, y) + ", z=" + o.show(z);
      return false;
    }), cex);

  rep.add("sla.d2", "x 0_y = 0_x y = 0_x 0_y = 0_(xy) = 0_x + 0_y", o.for_pairs(
    [&](auto x, auto y) {
      auto want = o.add(o.zero_of(x), o.zero_of(y));
      if (o.eq(o.mul(x, o.zero_of(y)), want) && o.eq(o.mul(o.zero_of(x), y), want) &&
          o.eq(o.mul(o.zero_of(x), o.zero_of(y)), want) &&
          o.eq(o.zero_of(o.mul(x, y)), want))
        return true;
      cex = w2(x, y);
      return false;
    }), cex);

  if (kind == ProductKind::associative) {
    rep.add("sla.a1", "(xy)z = x(yz)", o.for_triples([&](auto x, auto y, auto z) {
      if (o.eq(o.mul(o.mul(x, y), z), o.mul(x, o.mul(y, z)))) return true;
      cex = w2(x, y) + ", z=" + o.show(z);
      return false;
    }), cex);
  }

  if (kind == ProductKind::lie) {
    rep.add("sla.d3", "J(x,y,z) = 0_(x+y+z)", o.for_triples([&](auto x, auto y, auto z) {
      auto jac = o.add(o.mul(o.mul(x, y), z),
                       o.add(o.mul(o.mul(y, z), x), o.mul(o.mul(z, x), y)));
      if (o.eq(jac, o.zero_of(o.add(o.add(x, y), z)))) return true;
      cex = w2(x, y) + ", z=" + o.show(z);
      return false;
    }), cex);

    if (o.char_p() == 2) {
      rep.add_skip("sla.d4", "[x,x] = 0_x", "skipped: char 2");
    } else {
      rep.add("sla.d4", "[x,x] = 0_x", o.for_elems([&](auto x) {
        if (o.eq(o.mul(x, x), o.zero_of(x))) return true;
        cex = "x=" + o.show(x);
        return false;
      }), cex);
    }
  }
}

template <class O>
void assoc_rdist_axioms(const O& o, CheckReport& rep) {
  std::string cex;
  rep.add("assoc.1", "(xy)z = x(yz)", o.for_triples([&](auto x, auto y, auto z) {
    if (o.eq(o.mul(o.mul(x, y), z), o.mul(x, o.mul(y, z)))) return true;
    cex = "x=" + o.show(x) + ", y=" + o.show(y) + ", z=" + o.show(z);
    return false;
  }), cex);

  rep.add("rdist.1", "(x+z)y = xy+zy", o.for_triples([&](auto x, auto y, auto z) {
    if (o.eq(o.mul(o.add(x, z), y), o.add(o.mul(x, y), o.mul(z, y)))) return true;
    cex = "x=" + o.show(x) + ", y=" + o.show(y) + ", z=" + o.show(z);
    return false;
  }), cex);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// entry points

/// auto_detect runs exhaustively whenever the carrier enumerates; sampled
/// forces random draws (for carriers whose enumeration would not fit).
enum class Mode { auto_detect, exhaustive, sampled };

template <class C, class Fn>
void with_ops(const C& c, const CheckOptions& opt, Mode mode, Fn fn) {
  if constexpr (FiniteCarrier<C> && SampledCarrier<C>) {
    if (mode == Mode::sampled) {
      SampledOps<C> o(c, opt);
      fn(o);
    } else {
      FiniteOps<C> o(c);
      fn(o);
    }
  } else if constexpr (FiniteCarrier<C>) {
    FiniteOps<C> o(c);
    fn(o);
  } else {
    SampledOps<C> o(c, opt);
    fn(o);
  }
}

template <class C>
CheckReport check_inverse_semivector(const C& c, const CheckOptions& opt = {},
                                     Mode mode = Mode::auto_detect) {
  CheckReport rep;
  with_ops(c, opt, mode, [&](auto& o) {
    rep.mode = o.mode();
    detail::isv_axioms(o, rep);
  });
  return rep;
}

template <class C>
  requires CarrierHasMul<C>
CheckReport check_naisa(const C& c, const CheckOptions& opt = {},
                        Mode mode = Mode::auto_detect) {
  CheckReport rep;
  with_ops(c, opt, mode, [&](auto& o) {
    rep.mode = o.mode();
    detail::isv_axioms(o, rep);
    detail::naisa_axioms(o, rep);
  });
  return rep;
}

template <class C>
  requires CarrierHasMul<C>
CheckReport check_lie_isa(const C& c, const CheckOptions& opt = {},
                          Mode mode = Mode::auto_detect) {
  CheckReport rep;
  with_ops(c, opt, mode, [&](auto& o) {
    rep.mode = o.mode();
    detail::isv_axioms(o, rep);
    detail::lie_axioms(o, rep);
  });
  return rep;
}

enum class ProductKind {
  generic = int(detail::ProductKind::generic),
  associative = int(detail::ProductKind::associative),
  lie = int(detail::ProductKind::lie)
};

template <class C>
  requires CarrierHasMul<C>
CheckReport check_semilattice_of_algebras(const C& c, ProductKind kind = ProductKind::generic,
                                          const CheckOptions& opt = {},
                                          Mode mode = Mode::auto_detect) {
  CheckReport rep;
  auto k = detail::ProductKind(int(kind));
  with_ops(c, opt, mode, [&](auto& o) {
    rep.mode = o.mode();
    detail::semilattice_axioms(o, rep, k);
  });
  return rep;
}

/// Associativity plus exact right distributivity (the two extra laws the
/// partial-endomorphism carrier satisfies on top of the semialgebra axioms).
template <class C>
  requires CarrierHasMul<C>
CheckReport check_assoc_rdist(const C& c, const CheckOptions& opt = {},
                              Mode mode = Mode::auto_detect) {
  CheckReport rep;
  with_ops(c, opt, mode, [&](auto& o) {
    rep.mode = o.mode();
    detail::assoc_rdist_axioms(o, rep);
  });
  return rep;
}

/// First triple with x(y+z) != xy+xz, if any (left distributivity is not a
/// law here; the search documents its failure).
template <class C>
  requires(CarrierHasMul<C> && FiniteCarrier<C>)
std::optional<std::string> find_left_distributivity_counterexample(const C& c) {
  FiniteOps<C> o(c);
  std::string cex;
  bool all = o.for_triples([&](auto x, auto y, auto z) {
    if (o.eq(o.mul(x, o.add(y, z)), o.add(o.mul(x, y), o.mul(x, z)))) return true;
    cex = "x=" + o.show(x) + ", y=" + o.show(y) + ", z=" + o.show(z);
    return false;
  });
  if (all) return std::nullopt;
  return cex;
}

// ---------------------------------------------------------------------------
// sigma: the minimum Lie congruence s ~ t iff s+e = t+e for some idempotent e

struct SigmaPartition {
  int estar = -1;                       // minimum idempotent (sum of all)
  std::vector<int> class_of;            // element index -> class id
  std::vector<std::vector<int>> classes;  // class id -> element indices
  std::vector<int> canonical;           // class id -> index of x + estar
};

/// Computed through the minimum idempotent: s ~ t iff s + e* = t + e*.
template <class C>
SigmaPartition sigma_partition(const FiniteOps<C>& o) {
  SigmaPartition p;
  if (o.idempotents().empty()) throw Error("carrier has no idempotents");
  int estar = o.idempotents()[0];
  for (int e : o.idempotents()) estar = o.add(estar, e);
  p.estar = estar;
  p.class_of.assign(o.n(), -1);
  std::map<int, int> by_canonical;
  for (int i = 0; i < o.n(); ++i) {
    int canon = o.add(i, estar);
    auto it = by_canonical.find(canon);
    int cls;
    if (it == by_canonical.end()) {
      cls = (int)p.classes.size();
      by_canonical.emplace(canon, cls);
      p.classes.emplace_back();
      p.canonical.push_back(canon);
    } else {
      cls = it->second;
    }
    p.class_of[i] = cls;
    p.classes[cls].push_back(i);
  }
  return p;
}

/// Existential definition, for cross-validation: some idempotent e with
/// s+e = t+e.
template <class C>
bool sigma_related_generic(const FiniteOps<C>& o, int i, int j) {
  for (int e : o.idempotents())
    if (o.add(i, e) == o.add(j, e)) return true;
  return false;
}

/// Greatest element of each sigma class, or the pair of incomparable
/// maximal witnesses if some class has none.
template <class C>
std::optional<std::vector<int>> class_maxima(const FiniteOps<C>& o, const SigmaPartition& p,
                                             std::string* witness = nullptr) {
  std::vector<int> maxima;
  for (const auto& cls : p.classes) {
    int best = -1;
    for (int cand : cls) {
      bool greatest = true;
      for (int x : cls)
        if (!o.leq(x, cand)) {
          greatest = false;
          break;
        }
      if (greatest) {
        best = cand;
        break;
      }
    }
    if (best < 0) {
      if (witness) {
        // report two maximal elements of the class
        std::vector<int> maximal;
        for (int cand : cls) {
          bool is_max = true;
          for (int x : cls)
            if (x != cand && o.leq(cand, x)) {
              is_max = false;
              break;
            }
          if (is_max) maximal.push_back(cand);
          if (maximal.size() == 2) break;
        }
        *witness = "class of " + o.show(cls[0]) + " has no greatest element";
        if (maximal.size() == 2)
          *witness += "; incomparable maximal elements " + o.show(maximal[0]) + " and " +
                      o.show(maximal[1]);
      }
      return std::nullopt;
    }
    maxima.push_back(best);
  }
  return maxima;
}

/// F-inverse battery: every sigma class has a greatest element m, the
/// bracket satisfies [s,t] = m_[s,t] + 0_(s+t), and the class maxima form a
/// premorphism with m_s + m_t = 0_(m_s) + m_(s+t) and m_(a s) = a m_s.
template <class C>
  requires(CarrierHasMul<C> && FiniteCarrier<C>)
CheckReport check_F_inverse(const C& c, const CheckOptions& opt = {}) {
  (void)opt;
  CheckReport rep;
  FiniteOps<C> o(c);
  rep.mode = o.mode();
  SigmaPartition p = sigma_partition(o);
  std::string witness;
  auto maxima = class_maxima(o, p, &witness);
  rep.add("fin.1", "every sigma class has a greatest element", maxima.has_value(), witness);
  if (!maxima) return rep;

  std::string cex;
  rep.add("fin.2", "[s,t] = m_[s,t] + 0_(s+t)", o.for_pairs([&](auto s, auto t) {
    int b = o.mul(s, t);
    int m = (*maxima)[p.class_of[b]];
    if (o.eq(b, o.add(m, o.zero_of(o.add(s, t))))) return true;
    cex = "s=" + o.show(s) + ", t=" + o.show(t);
    return false;
  }), cex);

  bool ok3 = true;
  cex.clear();
  for (size_t ci = 0; ci < p.classes.size() && ok3; ++ci)
    for (size_t cj = 0; cj < p.classes.size() && ok3; ++cj) {
      int ms = (*maxima)[ci], mt = (*maxima)[cj];
      int msum = (*maxima)[p.class_of[o.add(ms, mt)]];
      if (!o.eq(o.add(ms, mt), o.add(o.zero_of(ms), msum))) {
        ok3 = false;
        cex = "m_s=" + o.show(ms) + ", m_t=" + o.show(mt);
      }
    }
  rep.add("fin.3", "m_s + m_t = 0_(m_s) + m_(s+t)", ok3, cex);

  bool ok4 = true;
  cex.clear();
  for (size_t ci = 0; ci < p.classes.size() && ok4; ++ci) {
    int m = (*maxima)[ci];
    for (const auto& a : o.scalars()) {
      if (a.is_zero()) continue;
      int am = o.smul(a, m);
      if (!o.eq(am, (*maxima)[p.class_of[am]])) {
        ok4 = false;
        cex = "m=" + o.show(m) + ", a=" + a.str();
        break;
      }
    }
  }
  rep.add("fin.4", "m_(a s) = a m_s, a != 0", ok4, cex);
  return rep;
}

// ---------------------------------------------------------------------------
// carrier adaptors

/// The trivial Lie structure [x,y] = 0_(x+y) on any inverse semivector space.
template <class C>
class TrivialLie {
public:
  using Element = typename C::Element;
  using Field = typename C::Field;

  explicit TrivialLie(const C& inner) : inner_(&inner) {}

  const Field& field() const { return inner_->field(); }
  Element add(const Element& a, const Element& b) const { return inner_->add(a, b); }
  Element neg(const Element& a) const { return inner_->neg(a); }
  Element smul(const typename Field::Element& s, const Element& a) const {
    return inner_->smul(s, a);
  }
  Element mul(const Element& a, const Element& b) const {
    return carrier_zero_of(*inner_, inner_->add(a, b));
  }
  std::vector<Element> elements() const
    requires FiniteCarrier<C>
  {
    return inner_->elements();
  }
  Element sample(std::mt19937_64& rng) const
    requires SampledCarrier<C>
  {
    return inner_->sample(rng);
  }
  Element zero() const
    requires CarrierHasZero<C>
  {
    return inner_->zero();
  }
  std::string show(const Element& a) const { return inner_->show(a); }

private:
  const C* inner_;
};

/// Commutator carrier S^-: same elements, product [x,y] = xy - yx.
template <class C>
  requires CarrierHasMul<C>
class SMinus {
public:
  using Element = typename C::Element;
  using Field = typename C::Field;

  explicit SMinus(const C& inner) : inner_(&inner) {}

  const C& inner() const { return *inner_; }
  const Field& field() const { return inner_->field(); }
  Element add(const Element& a, const Element& b) const { return inner_->add(a, b); }
  Element neg(const Element& a) const { return inner_->neg(a); }
  Element smul(const typename Field::Element& s, const Element& a) const {
    return inner_->smul(s, a);
  }
  Element mul(const Element& a, const Element& b) const {
    return inner_->add(inner_->mul(a, b), inner_->neg(inner_->mul(b, a)));
  }
  std::vector<Element> elements() const
    requires FiniteCarrier<C>
  {
    return inner_->elements();
  }
  Element sample(std::mt19937_64& rng) const
    requires SampledCarrier<C>
  {
    return inner_->sample(rng);
  }
  Element zero() const
    requires CarrierHasZero<C>
  {
    return inner_->zero();
  }
  std::string show(const Element& a) const { return inner_->show(a); }

private:
  const C* inner_;
};

/// The bracket-vs-idempotent identity 0_[x,y] = [0_x,y] + [x,0_y] that the
/// commutator of a right distributive associative carrier satisfies.
template <class C>
  requires CarrierHasMul<C>
CheckReport check_sminus_identity(const C& c, const CheckOptions& opt = {},
                                  Mode mode = Mode::auto_detect) {
  CheckReport rep;
  std::string cex;
  with_ops(c, opt, mode, [&](auto& o) {
    rep.mode = o.mode();
    rep.add("sminus.1", "0_[x,y] = [0_x,y] + [x,0_y]", o.for_pairs([&](auto x, auto y) {
      auto lhs = o.zero_of(o.mul(x, y));
      auto rhs = o.add(o.mul(o.zero_of(x), y), o.mul(x, o.zero_of(y)));
      if (o.eq(lhs, rhs)) return true;
      cex = "x=" + o.show(x) + ", y=" + o.show(y);
      return false;
    }), cex);
  });
  return rep;
}

}  // namespace lisa

#endif
