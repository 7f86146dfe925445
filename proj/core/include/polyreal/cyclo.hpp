#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyreal/rational.hpp"

namespace polyreal {

/// An exact element of a cyclotomic field Q(zeta_n).
///
/// Values are stored in the Zumbroich basis of Q(zeta_n), where n is always
/// the conductor (the smallest n whose field contains the value; rationals
/// have n = 1). The basis consists of roots of unity zeta_n^k and is an
/// integral basis, so the normal form is unique, equality is coefficientwise,
/// and a value is an algebraic integer iff every coefficient is an integer.
/// Mixed-order arithmetic lifts both operands to the lcm of their orders.
class Cyclo {
 public:
  struct Term {
    std::uint32_t exponent;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Largest field order an operation may lift into.
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  Cyclo() = default;
  Cyclo(long long value);  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Cyclo root_of_unity(std::uint32_t n, long long k);
  /// sum_j coeffs[j] * zeta_n^j for j in [0, coeffs.size()), exponents taken mod n.
  static Cyclo from_powers(std::uint32_t n, std::span<const Rational> coeffs);
  static Cyclo from_integer_powers(std::uint32_t n, std::span<const long long> coeffs);
  /// Inverse of basis_coeffs(): coefficients against zumbroich_basis(n).
  static Cyclo from_basis_coeffs(std::uint32_t n, std::span<const Rational> coeffs);

  std::uint32_t order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  /// Dense coefficient vector over zumbroich_basis(order()).
  std::vector<Rational> basis_coeffs() const;

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_real() const;
  std::optional<Rational> as_rational() const;
  bool is_algebraic_integer() const;
  /// Evaluation at zeta_n = exp(2 pi i / n). Display only.
  std::complex<double> to_complex() const;

  /// Complex conjugation, zeta -> zeta^-1.
  Cyclo conj() const { return galois(-1); }
  /// The field automorphism zeta_n -> zeta_n^a; a must be coprime to order().
  Cyclo galois(long long a) const;
  /// Throws DivisionByZero for zero.
  Cyclo inverse() const;

  /// GAP-style text, e.g. "-1/2*E(5)^2+E(5)^3"; rationals print as "p/q".
  std::string to_string() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& other);
  Cyclo& operator-=(const Cyclo& other);
  Cyclo& operator*=(const Cyclo& other);
  Cyclo& operator/=(const Cyclo& other) { return *this *= other.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }
  /// Total order: by conductor, then lexicographically on terms. Used for
  /// canonical sorting only; it has no arithmetic meaning.
  friend std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b);

 private:
  friend class CycloWorkspace;
  Cyclo(std::uint32_t order, std::vector<Term> terms)
      : order_(order), terms_(std::move(terms)) {}

  Cyclo& scale(const Rational& q);

  std::uint32_t order_ = 1;
  std::vector<Term> terms_;
};

std::uint32_t euler_phi(std::uint32_t n);
/// Exponents k in [0, n) whose roots of unity zeta_n^k form the Zumbroich basis.
std::vector<std::uint32_t> zumbroich_basis(std::uint32_t n);

}  // namespace polyreal
