#pragma once

/**
 * @file ring.hpp
 * @brief Runtime-described commutative rings and their exact elements.
 *
 * A Ring is a cheap, shareable handle onto an immutable descriptor. Raw
 * element payloads (Value) carry no ring of their own; the Ring that owns
 * them interprets and combines them. Elem pairs the two for callers that
 * want ring-checked arithmetic on individual scalars.
 *
 * Payload layout per ring kind:
 *   Integers            Integer (arbitrary precision)
 *   Modular, PrimeField uint64_t residue in [0, m) when m < 2^63,
 *                       otherwise Integer residue in [0, m)
 *   PolyOver            Coeffs over the base ring, lowest degree first,
 *                       no trailing zero (zero polynomial is empty)
 */

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "minortrace/error.hpp"

namespace minortrace {

using Integer = mpz_class;

struct Value;
using Coeffs = std::vector<Value>;

struct Value {
  std::variant<Integer, std::uint64_t, Coeffs> repr;

  Value() = default;
  Value(Integer v) : repr(std::move(v)) {}
  Value(std::uint64_t v) : repr(v) {}
  Value(Coeffs v) : repr(std::move(v)) {}

  friend bool operator==(const Value& a, const Value& b);
};

enum class RingKind { Integers, Modular, PolyOver, PrimeField };

namespace detail {
struct RingData;
}

/// Largest PolyOver nesting depth accepted by Ring::poly_over.
inline constexpr int kMaxPolyDepth = 2;

class Ring {
 public:
  static Ring integers();
  static Ring modular(const Integer& modulus);
  static Ring prime_field(const Integer& p);
  static Ring poly_over(const Ring& base, std::string var = "x");

  RingKind kind() const noexcept;
  /// Modulus of a Modular ring or characteristic of a PrimeField.
  const Integer& modulus() const;
  /// Coefficient ring of a PolyOver ring.
  Ring base() const;
  const std::string& var() const;
  /// 0 for non-polynomial rings, 1 for R[x], 2 for R[x][y].
  int poly_depth() const noexcept;
  bool is_finite() const noexcept;
  /// Compact spec string, e.g. "int", "mod:4", "gf:5", "poly:int:x".
  std::string spec() const;

  friend bool operator==(const Ring& a, const Ring& b);

  Value zero() const;
  Value one() const;
  /// Image of an integer under the canonical map Z -> R.
  Value from_integer(const Integer& v) const;
  Value from_integer(long long v) const { return from_integer(Integer(static_cast<long>(v))); }

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  Value mul(const Value& a, const Value& b) const;

  bool is_zero(const Value& a) const;
  /// Reduces an arbitrary payload of the right shape to canonical form.
  /// Throws ParseError when the payload shape does not fit this ring.
  Value canonical(const Value& a) const;
  bool is_canonical(const Value& a) const;
  std::string format(const Value& a) const;

  /// Residue (Modular/PrimeField) or integer (Integers) as an Integer.
  Integer to_integer(const Value& a) const;

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> data) : d_(std::move(data)) {}
  std::shared_ptr<const detail::RingData> d_;
};

/// Ring operation tallies for the instrumented-count interface.
struct OpCounts {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
};

/// While alive, counts Ring::mul (mul) and Ring::add/sub (add) calls made
/// on the current thread. Scopes nest; the innermost one receives counts.
class CountingScope {
 public:
  CountingScope();
  ~CountingScope();
  CountingScope(const CountingScope&) = delete;
  CountingScope& operator=(const CountingScope&) = delete;

  OpCounts counts() const noexcept { return counts_; }

 private:
  friend class Ring;
  OpCounts counts_;
  CountingScope* previous_;
};

/// A ring element: an exact value paired with the ring it lives in.
class Elem {
 public:
  Elem(Ring ring, const Value& value);
  Elem(Ring ring, long long v);

  const Ring& ring() const noexcept { return ring_; }
  const Value& value() const noexcept { return value_; }
  bool is_zero() const { return ring_.is_zero(value_); }
  std::string str() const { return ring_.format(value_); }

  friend bool operator==(const Elem& a, const Elem& b);

 private:
  Ring ring_;
  Value value_;
};

Elem elem_add(const Elem& a, const Elem& b);
Elem elem_sub(const Elem& a, const Elem& b);
Elem elem_mul(const Elem& a, const Elem& b);
Elem elem_neg(const Elem& a);
/// Returns q with q * b == a. Integers and PrimeField only.
Elem elem_divexact(const Elem& a, const Elem& b);
/// Nonnegative gcd over the Integers; gcd(0, 0) == 0.
Elem elem_gcd(const Elem& a, const Elem& b);
/// a^e by square-and-multiply.
Elem elem_pow(const Elem& a, std::uint64_t e);

inline Elem operator+(const Elem& a, const Elem& b) { return elem_add(a, b); }
inline Elem operator-(const Elem& a, const Elem& b) { return elem_sub(a, b); }
inline Elem operator*(const Elem& a, const Elem& b) { return elem_mul(a, b); }
inline Elem operator-(const Elem& a) { return elem_neg(a); }

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n) noexcept;

}  // namespace minortrace
