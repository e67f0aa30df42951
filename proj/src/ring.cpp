#include "minortrace/ring.hpp"

#include <sstream>
#include <utility>

namespace minortrace {

bool operator==(const Value& a, const Value& b) { return a.repr == b.repr; }

namespace detail {

struct RingData {
  RingKind kind = RingKind::Integers;
  Integer modulus;
  // Nonzero iff the modulus fits below 2^63; residues are then stored as uint64_t.
  std::uint64_t small_mod = 0;
  std::shared_ptr<const RingData> base;
  std::string var;
  int depth = 0;
  std::string spec;
};

}  // namespace detail

namespace {

using detail::RingData;

thread_local CountingScope* g_active_scope = nullptr;

const Integer kTwo63 = Integer(1) << 63;

std::uint64_t to_u64(const Integer& v) {
  // mpz_get_ui truncates to unsigned long, which is 64 bits on supported targets.
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(v.get_mpz_t());
}

Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

Integer floor_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

Value zero_impl(const RingData& r) {
  switch (r.kind) {
    case RingKind::Integers: return Value(Integer(0));
    case RingKind::Modular:
    case RingKind::PrimeField:
      return r.small_mod ? Value(std::uint64_t{0}) : Value(Integer(0));
    case RingKind::PolyOver: return Value(Coeffs{});
  }
  return {};
}

bool is_zero_impl(const RingData& r, const Value& a) {
  switch (r.kind) {
    case RingKind::Integers: return sgn(std::get<Integer>(a.repr)) == 0;
    case RingKind::Modular:
    case RingKind::PrimeField:
      return r.small_mod ? std::get<std::uint64_t>(a.repr) == 0 : sgn(std::get<Integer>(a.repr)) == 0;
    case RingKind::PolyOver: return std::get<Coeffs>(a.repr).empty();
  }
  return false;
}

Value from_integer_impl(const RingData& r, const Integer& v) {
  switch (r.kind) {
    case RingKind::Integers: return Value(v);
    case RingKind::Modular:
    case RingKind::PrimeField: {
      Integer red = floor_mod(v, r.modulus);
      return r.small_mod ? Value(to_u64(red)) : Value(std::move(red));
    }
    case RingKind::PolyOver: {
      Value c = from_integer_impl(*r.base, v);
      if (is_zero_impl(*r.base, c)) return Value(Coeffs{});
      return Value(Coeffs{std::move(c)});
    }
  }
  return {};
}

void strip(const RingData& base, Coeffs& c) {
  while (!c.empty() && is_zero_impl(base, c.back())) c.pop_back();
}

Value add_impl(const RingData& r, const Value& a, const Value& b);
Value neg_impl(const RingData& r, const Value& a);
Value mul_impl(const RingData& r, const Value& a, const Value& b);

Value add_impl(const RingData& r, const Value& a, const Value& b) {
  switch (r.kind) {
    case RingKind::Integers:
      return Value(Integer(std::get<Integer>(a.repr) + std::get<Integer>(b.repr)));
    case RingKind::Modular:
    case RingKind::PrimeField: {
      if (r.small_mod) {
        // Both operands are below 2^63, so the sum cannot wrap.
        std::uint64_t s = std::get<std::uint64_t>(a.repr) + std::get<std::uint64_t>(b.repr);
        if (s >= r.small_mod) s -= r.small_mod;
        return Value(s);
      }
      Integer s = std::get<Integer>(a.repr) + std::get<Integer>(b.repr);
      if (s >= r.modulus) s -= r.modulus;
      return Value(std::move(s));
    }
    case RingKind::PolyOver: {
      const auto& x = std::get<Coeffs>(a.repr);
      const auto& y = std::get<Coeffs>(b.repr);
      const auto& longer = x.size() >= y.size() ? x : y;
      const auto& shorter = x.size() >= y.size() ? y : x;
      Coeffs out = longer;
      for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = add_impl(*r.base, out[i], shorter[i]);
      strip(*r.base, out);
      return Value(std::move(out));
    }
  }
  return {};
}

Value neg_impl(const RingData& r, const Value& a) {
  switch (r.kind) {
    case RingKind::Integers: return Value(Integer(-std::get<Integer>(a.repr)));
    case RingKind::Modular:
    case RingKind::PrimeField: {
      if (r.small_mod) {
        std::uint64_t v = std::get<std::uint64_t>(a.repr);
        return Value(v == 0 ? std::uint64_t{0} : r.small_mod - v);
      }
      const auto& v = std::get<Integer>(a.repr);
      return Value(sgn(v) == 0 ? Integer(0) : Integer(r.modulus - v));
    }
    case RingKind::PolyOver: {
      Coeffs out = std::get<Coeffs>(a.repr);
      for (auto& c : out) c = neg_impl(*r.base, c);
      return Value(std::move(out));
    }
  }
  return {};
}

Value mul_impl(const RingData& r, const Value& a, const Value& b) {
  switch (r.kind) {
    case RingKind::Integers:
      return Value(Integer(std::get<Integer>(a.repr) * std::get<Integer>(b.repr)));
    case RingKind::Modular:
    case RingKind::PrimeField: {
      if (r.small_mod) {
        return Value(mulmod(std::get<std::uint64_t>(a.repr), std::get<std::uint64_t>(b.repr), r.small_mod));
      }
      return Value(floor_mod(Integer(std::get<Integer>(a.repr) * std::get<Integer>(b.repr)), r.modulus));
    }
    case RingKind::PolyOver: {
      const auto& x = std::get<Coeffs>(a.repr);
      const auto& y = std::get<Coeffs>(b.repr);
      if (x.empty() || y.empty()) return Value(Coeffs{});
      Coeffs out(x.size() + y.size() - 1, zero_impl(*r.base));
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
          out[i + j] = add_impl(*r.base, out[i + j], mul_impl(*r.base, x[i], y[j]));
        }
      }
      // Zero divisors in the base can kill the leading coefficient.
      strip(*r.base, out);
      return Value(std::move(out));
    }
  }
  return {};
}

Value canonical_impl(const RingData& r, const Value& a) {
  switch (r.kind) {
    case RingKind::Integers:
      if (auto* v = std::get_if<Integer>(&a.repr)) return Value(*v);
      if (auto* v = std::get_if<std::uint64_t>(&a.repr)) return Value(from_u64(*v));
      break;
    case RingKind::Modular:
    case RingKind::PrimeField:
      if (auto* v = std::get_if<Integer>(&a.repr)) return from_integer_impl(r, *v);
      if (auto* v = std::get_if<std::uint64_t>(&a.repr)) return from_integer_impl(r, from_u64(*v));
      break;
    case RingKind::PolyOver:
      if (auto* v = std::get_if<Coeffs>(&a.repr)) {
        Coeffs out;
        out.reserve(v->size());
        for (const auto& c : *v) out.push_back(canonical_impl(*r.base, c));
        strip(*r.base, out);
        return Value(std::move(out));
      }
      break;
  }
  throw Error(ErrorCode::ParseError, "value shape does not match ring " + r.spec);
}

bool is_canonical_impl(const RingData& r, const Value& a) {
  switch (r.kind) {
    case RingKind::Integers: return std::holds_alternative<Integer>(a.repr);
    case RingKind::Modular:
    case RingKind::PrimeField:
      if (r.small_mod) {
        auto* v = std::get_if<std::uint64_t>(&a.repr);
        return v != nullptr && *v < r.small_mod;
      } else {
        auto* v = std::get_if<Integer>(&a.repr);
        return v != nullptr && sgn(*v) >= 0 && *v < r.modulus;
      }
    case RingKind::PolyOver: {
      auto* v = std::get_if<Coeffs>(&a.repr);
      if (v == nullptr) return false;
      for (const auto& c : *v) {
        if (!is_canonical_impl(*r.base, c)) return false;
      }
      return v->empty() || !is_zero_impl(*r.base, v->back());
    }
  }
  return false;
}

std::string format_impl(const RingData& r, const Value& a) {
  switch (r.kind) {
    case RingKind::Integers: return std::get<Integer>(a.repr).get_str();
    case RingKind::Modular:
    case RingKind::PrimeField:
      return r.small_mod ? std::to_string(std::get<std::uint64_t>(a.repr)) : std::get<Integer>(a.repr).get_str();
    case RingKind::PolyOver: {
      const auto& c = std::get<Coeffs>(a.repr);
      if (c.empty()) return "0";
      std::string out;
      for (std::size_t d = c.size(); d-- > 0;) {
        if (is_zero_impl(*r.base, c[d])) continue;
        if (!out.empty()) out += " + ";
        std::string coeff = format_impl(*r.base, c[d]);
        if (r.base->kind == RingKind::PolyOver && d > 0) coeff = "(" + coeff + ")";
        if (d == 0) {
          out += coeff;
          continue;
        }
        if (coeff != "1") out += coeff + "*";
        out += r.var;
        if (d > 1) out += "^" + std::to_string(d);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

// --- Ring ---------------------------------------------------------------

Ring Ring::integers() {
  static const auto data = [] {
    auto d = std::make_shared<RingData>();
    d->kind = RingKind::Integers;
    d->spec = "int";
    return std::shared_ptr<const RingData>(std::move(d));
  }();
  return Ring(data);
}

Ring Ring::modular(const Integer& modulus) {
  if (modulus < 2) throw Error(ErrorCode::InvalidRing, "modulus must be >= 2, got " + modulus.get_str());
  auto d = std::make_shared<RingData>();
  d->kind = RingKind::Modular;
  d->modulus = modulus;
  d->small_mod = modulus < kTwo63 ? to_u64(modulus) : 0;
  d->spec = "mod:" + modulus.get_str();
  return Ring(std::move(d));
}

Ring Ring::prime_field(const Integer& p) {
  if (p < 2 || p >= kTwo63) {
    throw Error(ErrorCode::InvalidRing, "prime field characteristic must lie in [2, 2^63), got " + p.get_str());
  }
  if (!is_prime_u64(to_u64(p))) throw Error(ErrorCode::InvalidRing, p.get_str() + " is not prime");
  auto d = std::make_shared<RingData>();
  d->kind = RingKind::PrimeField;
  d->modulus = p;
  d->small_mod = to_u64(p);
  d->spec = "gf:" + p.get_str();
  return Ring(std::move(d));
}

Ring Ring::poly_over(const Ring& base, std::string var) {
  if (base.poly_depth() + 1 > kMaxPolyDepth) {
    throw Error(ErrorCode::InvalidRing, "polynomial nesting deeper than " + std::to_string(kMaxPolyDepth));
  }
  if (var.empty() || var.find(':') != std::string::npos) {
    throw Error(ErrorCode::InvalidRing, "invalid polynomial variable name '" + var + "'");
  }
  if (base.kind() == RingKind::PolyOver && base.var() == var) {
    throw Error(ErrorCode::InvalidRing, "nested polynomial rings must use distinct variables");
  }
  auto d = std::make_shared<RingData>();
  d->kind = RingKind::PolyOver;
  d->base = base.d_;
  d->depth = base.poly_depth() + 1;
  d->spec = "poly:" + base.spec() + ":" + var;
  d->var = std::move(var);
  return Ring(std::move(d));
}

RingKind Ring::kind() const noexcept { return d_->kind; }

const Integer& Ring::modulus() const {
  if (d_->kind != RingKind::Modular && d_->kind != RingKind::PrimeField) {
    throw Error(ErrorCode::UnsupportedRing, "ring " + d_->spec + " has no modulus");
  }
  return d_->modulus;
}

Ring Ring::base() const {
  if (d_->kind != RingKind::PolyOver) throw Error(ErrorCode::UnsupportedRing, "ring " + d_->spec + " has no base");
  return Ring(d_->base);
}

const std::string& Ring::var() const {
  if (d_->kind != RingKind::PolyOver) throw Error(ErrorCode::UnsupportedRing, "ring " + d_->spec + " has no variable");
  return d_->var;
}

int Ring::poly_depth() const noexcept { return d_->depth; }

bool Ring::is_finite() const noexcept {
  return d_->kind == RingKind::Modular || d_->kind == RingKind::PrimeField;
}

std::string Ring::spec() const { return d_->spec; }

bool operator==(const Ring& a, const Ring& b) { return a.d_ == b.d_ || a.d_->spec == b.d_->spec; }

Value Ring::zero() const { return zero_impl(*d_); }
Value Ring::one() const { return from_integer_impl(*d_, Integer(1)); }
Value Ring::from_integer(const Integer& v) const { return from_integer_impl(*d_, v); }

Value Ring::add(const Value& a, const Value& b) const {
  if (g_active_scope) ++g_active_scope->counts_.add;
  return add_impl(*d_, a, b);
}

Value Ring::sub(const Value& a, const Value& b) const {
  if (g_active_scope) ++g_active_scope->counts_.add;
  return add_impl(*d_, a, neg_impl(*d_, b));
}

Value Ring::neg(const Value& a) const { return neg_impl(*d_, a); }

Value Ring::mul(const Value& a, const Value& b) const {
  if (g_active_scope) ++g_active_scope->counts_.mul;
  return mul_impl(*d_, a, b);
}

bool Ring::is_zero(const Value& a) const { return is_zero_impl(*d_, a); }
Value Ring::canonical(const Value& a) const { return canonical_impl(*d_, a); }
bool Ring::is_canonical(const Value& a) const { return is_canonical_impl(*d_, a); }
std::string Ring::format(const Value& a) const { return format_impl(*d_, a); }

Integer Ring::to_integer(const Value& a) const {
  switch (d_->kind) {
    case RingKind::Integers: return std::get<Integer>(a.repr);
    case RingKind::Modular:
    case RingKind::PrimeField:
      return d_->small_mod ? from_u64(std::get<std::uint64_t>(a.repr)) : std::get<Integer>(a.repr);
    case RingKind::PolyOver: break;
  }
  throw Error(ErrorCode::UnsupportedRing, "polynomial values have no integer form");
}

// --- CountingScope ------------------------------------------------------

CountingScope::CountingScope() : previous_(g_active_scope) { g_active_scope = this; }
CountingScope::~CountingScope() { g_active_scope = previous_; }

// --- Elem ---------------------------------------------------------------

Elem::Elem(Ring ring, const Value& value) : ring_(std::move(ring)), value_(ring_.canonical(value)) {}
Elem::Elem(Ring ring, long long v) : ring_(std::move(ring)), value_(ring_.from_integer(v)) {}

bool operator==(const Elem& a, const Elem& b) { return a.ring_ == b.ring_ && a.value_ == b.value_; }

namespace {

void require_same(const Elem& a, const Elem& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::RingMismatch, a.ring().spec() + " vs " + b.ring().spec());
  }
}

}  // namespace

Elem elem_add(const Elem& a, const Elem& b) {
  require_same(a, b);
  return Elem(a.ring(), a.ring().add(a.value(), b.value()));
}

Elem elem_sub(const Elem& a, const Elem& b) {
  require_same(a, b);
  return Elem(a.ring(), a.ring().sub(a.value(), b.value()));
}

Elem elem_mul(const Elem& a, const Elem& b) {
  require_same(a, b);
  return Elem(a.ring(), a.ring().mul(a.value(), b.value()));
}

Elem elem_neg(const Elem& a) { return Elem(a.ring(), a.ring().neg(a.value())); }

Elem elem_divexact(const Elem& a, const Elem& b) {
  require_same(a, b);
  const Ring& ring = a.ring();
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "divisor is zero");
  switch (ring.kind()) {
    case RingKind::Integers: {
      const auto& n = std::get<Integer>(a.value().repr);
      const auto& d = std::get<Integer>(b.value().repr);
      if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
        throw Error(ErrorCode::NotDivisible, n.get_str() + " is not divisible by " + d.get_str());
      }
      Integer q;
      mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      return Elem(ring, Value(std::move(q)));
    }
    case RingKind::PrimeField: {
      // b^(p-2) is the inverse of b by Fermat.
      const Integer& p = ring.modulus();
      Elem inv = elem_pow(b, to_u64(p) - 2);
      return elem_mul(a, inv);
    }
    default:
      throw Error(ErrorCode::UnsupportedRing, "exact division over " + ring.spec());
  }
}

Elem elem_gcd(const Elem& a, const Elem& b) {
  require_same(a, b);
  if (a.ring().kind() != RingKind::Integers) {
    throw Error(ErrorCode::UnsupportedRing, "gcd over " + a.ring().spec());
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), std::get<Integer>(a.value().repr).get_mpz_t(), std::get<Integer>(b.value().repr).get_mpz_t());
  return Elem(a.ring(), Value(std::move(g)));
}

Elem elem_pow(const Elem& a, std::uint64_t e) {
  const Ring& ring = a.ring();
  Value result = ring.one();
  Value base = a.value();
  while (e > 0) {
    if (e & 1) result = ring.mul(result, base);
    e >>= 1;
    if (e > 0) base = ring.mul(base, base);
  }
  return Elem(ring, result);
}

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto powmod = [n](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= n;
    while (e > 0) {
      if (e & 1) r = mulmod(r, b, n);
      b = mulmod(b, b, n);
      e >>= 1;
    }
    return r;
  };
  // These witnesses are sufficient for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace minortrace
