#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ctoda {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double to_double(const Rat& r);
std::string rat_to_string(const Rat& r);

/// Splits n > 0 as s^2 * m with m squarefree. Returns {s, m}.
std::pair<Int, Int> squarefree_split(Int n);

/// Tower of real quadratic radicals sqrt(d_j). Radicands are squarefree
/// integers > 1 and no subset product is a perfect square, so the monomials
/// (products of distinct radicals, optionally times i) form a basis of
/// Q(i, sqrt(d_1), ..., sqrt(d_k)) over Q.
///
/// Append-only; scalars refer to radicands by bit index, which stays stable.
class RadicalTower {
 public:
  /// Represents sqrt(d) as coeff * monomial(mask), adjoining a new radicand
  /// only when sqrt(d) does not already live in the field. Throws on d <= 0.
  std::pair<Rat, std::uint32_t> adjoin_sqrt(const Rat& d);

  const std::vector<Int>& radicands() const { return radicands_; }
  std::size_t size() const { return radicands_.size(); }
  double radical_value(std::size_t j) const;

 private:
  std::vector<Int> radicands_;
};

/// Monomial masks: bit 0 is the imaginary unit, bit j+1 is sqrt(d_j).
inline constexpr std::uint32_t kMonoI = 1u;

/// An element of Q(i, sqrt(d_1), ..., sqrt(d_k)) with exact arithmetic and
/// decidable equality. Immutable value type; terms are kept sorted by
/// monomial mask with no zero coefficients.
class ExactScalar {
 public:
  using Term = std::pair<std::uint32_t, Rat>;

  ExactScalar() = default;
  ExactScalar(int v) : ExactScalar(Rat(v)) {}                    // NOLINT
  ExactScalar(const Rat& v);                                     // NOLINT
  ExactScalar(std::shared_ptr<const RadicalTower> tower, std::vector<Term> terms);

  static ExactScalar i();
  /// coeff * monomial(mask) over the given tower.
  static ExactScalar monomial(std::shared_ptr<const RadicalTower> tower,
                              std::uint32_t mask, const Rat& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Value as a rational; throws when irrational or non-real.
  Rat as_rational() const;

  const std::vector<Term>& terms() const { return terms_; }
  const std::shared_ptr<const RadicalTower>& tower() const { return tower_; }

  ExactScalar operator-() const;
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  bool operator==(const ExactScalar& o) const { return (*this - o).is_zero(); }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  /// Complex conjugation: i -> -i, real radicals fixed. A field automorphism.
  ExactScalar conj() const;
  /// Real and imaginary parts (elements of the real subfield).
  ExactScalar real_part() const;
  ExactScalar imag_part() const;

  /// Multiplicative inverse; throws on zero.
  ExactScalar inverse() const;

  /// Numerical value with all radicals on the positive branch.
  std::complex<double> to_complex() const;

  std::string str() const;

 private:
  void normalize();
  const RadicalTower& tower_ref() const;

  std::shared_ptr<const RadicalTower> tower_;  // null when terms use no radicals
  std::vector<Term> terms_;
};

inline ExactScalar operator*(const Rat& a, const ExactScalar& b) { return ExactScalar(a) * b; }

}  // namespace ctoda
