#include "dirset/field.hpp"

#include <string>

#include "dirset/error.hpp"

namespace dirset {
namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint64_t v, std::uint32_t p, std::uint32_t count) {
  Poly out(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    out[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return out;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(m.size() - 1);
  if (n <= 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::uint32_t deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly divisor = digits(v, p, deg);
      divisor.push_back(1);
      if (poly_mod(m, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

// Table-free arithmetic used while bootstrapping the log tables.
struct SlowArith {
  std::uint32_t p;
  std::uint32_t n;
  Poly modulus;

  std::uint64_t encode(const Poly& c) const {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
  }

  Element mul(Element a, Element b) const {
    if (n == 1) return static_cast<Element>((std::uint64_t{a} * b) % p);
    const Poly x = digits(a, p, n);
    const Poly y = digits(b, p, n);
    Poly prod(2 * n - 1, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    Poly r = poly_mod(prod, modulus, p);
    r.resize(n, 0);
    return static_cast<Element>(encode(r));
  }

  Element pow(Element a, std::uint64_t e) const {
    Element result = 1;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }
};

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

FieldPtr FieldContext::build(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw Error(ErrorCode::CompositeCharacteristic, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::SizeLimit, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw Error(ErrorCode::SizeLimit, std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^16");
  }

  std::shared_ptr<FieldContext> ctx(new FieldContext());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->q_ = static_cast<std::uint32_t>(q);

  if (n == 1) {
    ctx->modulus_ = {0, 1};
  } else {
    // Monic candidates in increasing order of (c_{n-1}, ..., c_0), which is
    // numeric order of the canonical index of the non-leading part.
    for (std::uint64_t v = 0; v < q; ++v) {
      Poly m = digits(v, p, n);
      m.push_back(1);
      if (is_irreducible(m, p)) {
        ctx->modulus_ = std::move(m);
        break;
      }
    }
  }

  const SlowArith slow{p, n, ctx->modulus_};
  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  for (Element g = 1; g < q; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow.pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx->generator_ = g;
      break;
    }
  }

  ctx->log_.assign(q, 0);
  ctx->antilog_.assign(2 * order, 0);
  Element x = 1;
  for (std::uint64_t e = 0; e < order; ++e) {
    ctx->antilog_[e] = x;
    ctx->antilog_[e + order] = x;
    ctx->log_[x] = static_cast<std::uint32_t>(e);
    x = slow.mul(x, ctx->generator_);
  }

  ctx->neg_.resize(q);
  for (Element a = 0; a < q; ++a) {
    Element r = 0;
    Element scale = 1;
    for (Element v = a; v > 0; v /= p, scale *= p) r += ((p - v % p) % p) * scale;
    ctx->neg_[a] = r;
  }

  if (q <= 256) {
    ctx->add_table_.resize(q * q);
    for (Element a = 0; a < q; ++a)
      for (Element b = 0; b < q; ++b) ctx->add_table_[a * q + b] = ctx->add_digitwise(a, b);
  }
  return ctx;
}

FieldPtr FieldContext::build_q(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::CompositeCharacteristic, "field size must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t n = 0;
  std::uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++n;
  }
  if (v != 1)
    throw Error(ErrorCode::CompositeCharacteristic, std::to_string(q) + " is not a prime power");
  return build(p, n);
}

Element FieldContext::add_digitwise(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) return (a + b) % p_;
  Element r = 0;
  Element scale = 1;
  while (a > 0 || b > 0) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Element FieldContext::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return antilog_[(q_ - 1) - log_[a]];
}

Element FieldContext::div(Element a, Element b) const {
  if (b == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return div_nonzero(a, b);
}

Element FieldContext::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return antilog_[(std::uint64_t{log_[a]} * (e % order)) % order];
}

Element FieldContext::frobenius(Element a, std::uint32_t k) const noexcept {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < k; ++i) e *= p_;
  return pow(a, e);
}

ElementSet FieldContext::mult_subgroup(std::uint32_t d) const {
  if (d == 0 || (q_ - 1) % d != 0)
    throw Error(ErrorCode::NonDivisor,
                std::to_string(d) + " does not divide q-1 = " + std::to_string(q_ - 1));
  // x^d over all x is generated by g^d.
  ElementSet out(q_);
  for (std::uint32_t e = 0; e < q_ - 1; e += d) out.insert(antilog_[e]);
  return out;
}

std::vector<std::uint32_t> FieldContext::coordinates(Element a) const {
  return digits(a, p_, n_);
}

std::string FieldContext::render(Element a) const {
  if (n_ == 1 || a == 0) return std::to_string(a);
  const auto c = coordinates(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

nlohmann::json FieldContext::to_json() const {
  return nlohmann::json{{"p", p_}, {"n", n_}, {"q", q_}, {"modulus", modulus_}, {"generator", generator_}};
}

}  // namespace dirset
