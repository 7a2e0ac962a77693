#ifndef LISA_FIELDS_HPP
#define LISA_FIELDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lisa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct NotSubalgebra : ValidationError {
  using ValidationError::ValidationError;
};

struct LeibnizViolation : ValidationError {
  using ValidationError::ValidationError;
};

/// Exact rational scalar, always in lowest terms with positive denominator.
class Rational {
public:
  using rep = boost::multiprecision::cpp_rational;

  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = rep(num);
    v_ /= den;
  }
  explicit Rational(rep v) : v_(std::move(v)) {}

  static Rational parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    try {
      Rational r;
      r.v_ = rep(s);
      return r;
    } catch (const std::exception&) {
      throw ParseError("bad rational literal: '" + s + "'");
    }
  }

  const rep& raw() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }

  Rational inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rational(1 / v_);
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  std::string str() const { return v_.str(); }

private:
  rep v_;
};

/// Residue in a prime field; the modulus travels with the value.
class Fp {
public:
  Fp() = default;
  Fp(uint64_t v, uint64_t p) : v_(v % p), p_(p) {}

  uint64_t value() const { return v_; }
  uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const { return Fp((v_ + o.v_) % same(o), p_); }
  Fp operator-(const Fp& o) const { return Fp((v_ + same(o) - o.v_) % p_, p_); }
  Fp operator*(const Fp& o) const { return Fp((v_ * o.v_) % same(o), p_); }
  Fp operator-() const { return Fp((p_ - v_) % p_, p_); }
  Fp& operator+=(const Fp& o) {
    v_ = (v_ + o.v_) % same(o);
    return *this;
  }

  Fp inverse() const {
    if (v_ == 0) throw Error("inverse of zero");
    // extended Euclid on (v, p)
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(p_), nr = static_cast<int64_t>(v_);
    while (nr != 0) {
      int64_t q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += static_cast<int64_t>(p_);
    return Fp(static_cast<uint64_t>(t), p_);
  }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }
  bool operator<(const Fp& o) const { return v_ < o.v_; }

  std::string str() const { return std::to_string(v_); }

private:
  uint64_t same(const Fp& o) const {
    if (p_ != o.p_) throw Error("mixed prime fields");
    return p_;
  }

  uint64_t v_ = 0;
  uint64_t p_ = 1;
};

/// The field of rational numbers.
class RationalField {
public:
  using Element = Rational;
  static constexpr bool finite = false;

  uint64_t characteristic() const { return 0; }

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_int(long long n) const { return Rational(n); }
  Element parse(const std::string& s) const { return Rational::parse(s); }

  /// Deterministic scalar battery: small exact values, always containing
  /// 0, 1, -1 and 2.
  std::vector<Element> scalar_pool() const {
    return {Rational(0),      Rational(1),     Rational(-1),   Rational(2),
            Rational(-2),     Rational(1, 2),  Rational(-1, 2), Rational(3),
            Rational(2, 3),   Rational(-3, 4), Rational(5, 7),  Rational(-7, 6),
            Rational(7)};
  }

  /// Random scalar with |numerator| <= 7 and denominator in [1, 7].
  Element sample(std::mt19937_64& rng) const {
    long long num = static_cast<long long>(rng() % 15) - 7;
    long long den = static_cast<long long>(rng() % 7) + 1;
    return Rational(num, den);
  }

  bool operator==(const RationalField&) const { return true; }
  std::string name() const { return "Q"; }
};

/// A prime field F_p for a given prime p.
class PrimeField {
public:
  using Element = Fp;
  static constexpr bool finite = true;

  explicit PrimeField(uint64_t p) : p_(p) {
    if (!is_prime(p)) throw Error("field characteristic must be prime: " + std::to_string(p));
  }

  uint64_t characteristic() const { return p_; }

  Element zero() const { return Fp(0, p_); }
  Element one() const { return Fp(1, p_); }
  Element from_int(long long n) const {
    int64_t m = n % static_cast<int64_t>(p_);
    if (m < 0) m += static_cast<int64_t>(p_);
    return Fp(static_cast<uint64_t>(m), p_);
  }
  Element parse(const std::string& s) const {
    try {
      size_t pos = 0;
      long long n = std::stoll(s, &pos);
      if (pos != s.size()) throw ParseError("");
      return from_int(n);
    } catch (const std::exception&) {
      throw ParseError("bad residue literal: '" + s + "'");
    }
  }

  std::vector<Element> all_elements() const {
    std::vector<Element> out;
    out.reserve(p_);
    for (uint64_t v = 0; v < p_; ++v) out.emplace_back(v, p_);
    return out;
  }

  std::vector<Element> scalar_pool() const { return all_elements(); }

  Element sample(std::mt19937_64& rng) const { return Fp(rng() % p_, p_); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  static bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

private:
  uint64_t p_;
};

}  // namespace lisa

#endif
