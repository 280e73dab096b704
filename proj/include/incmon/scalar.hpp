#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

namespace incmon {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

Integer binomial(long n, long k);

// Prime field Z/P. Used as a fast second backend for the module engine.
template <std::uint32_t P>
class Fp {
 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Fp() = default;
  constexpr Fp(long long v) : v_(reduce(v)) {}  // NOLINT: implicit like int

  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Fp operator+(Fp x, Fp y) { return from_raw((x.v_ + y.v_) % P); }
  friend constexpr Fp operator-(Fp x, Fp y) { return from_raw((x.v_ + P - y.v_) % P); }
  friend constexpr Fp operator*(Fp x, Fp y) {
    return from_raw(static_cast<std::uint32_t>(std::uint64_t(x.v_) * y.v_ % P));
  }
  friend constexpr Fp operator/(Fp x, Fp y) { return x * y.inverse(); }
  constexpr Fp operator-() const { return from_raw((P - v_) % P); }
  Fp& operator+=(Fp y) { return *this = *this + y; }
  Fp& operator-=(Fp y) { return *this = *this - y; }
  Fp& operator*=(Fp y) { return *this = *this * y; }
  Fp& operator/=(Fp y) { return *this = *this / y; }
  friend constexpr bool operator==(Fp x, Fp y) { return x.v_ == y.v_; }

  constexpr Fp inverse() const {
    // Fermat; v_ != 0 is the caller's problem
    Fp r = 1, b = *this;
    for (std::uint32_t e = P - 2; e; e >>= 1) {
      if (e & 1) r *= b;
      b *= b;
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v_; }

 private:
  static constexpr std::uint32_t reduce(long long v) {
    long long r = v % static_cast<long long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }
  static constexpr Fp from_raw(std::uint32_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint32_t v_ = 0;
};

using F32003 = Fp<32003>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
template <std::uint32_t P>
bool is_zero(Fp<P> x) { return x.value() == 0; }

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
template <std::uint32_t P>
std::string to_string(Fp<P> x) { return std::to_string(x.value()); }

Rational parse_rational(const std::string& s);

}  // namespace incmon

namespace Eigen {
template <std::uint32_t P>
struct NumTraits<incmon::Fp<P>> : GenericNumTraits<incmon::Fp<P>> {
  using Real = incmon::Fp<P>;
  using NonInteger = incmon::Fp<P>;
  using Literal = incmon::Fp<P>;
  using Nested = incmon::Fp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
