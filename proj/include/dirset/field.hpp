#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <json.hpp>

#include "dirset/element_set.hpp"

namespace dirset {

// Largest supported field; log/antilog tables are materialized in full.
inline constexpr std::uint32_t kMaxFieldSize = 1U << 16;

bool is_prime(std::uint64_t v);

// GF(p^n), fully materialized.
//
// Elements are canonical indices in [0, q): the base-p digits of an index are
// the coordinates c_0, c_1, ... of c_0 + c_1 t + ... + c_{n-1} t^{n-1}, where t
// is a root of the modulus. Index 0 is zero and index 1 is one.
//
// The modulus is the lexicographically smallest monic irreducible polynomial of
// degree n over F_p, comparing coefficients from x^{n-1} down to x^0. For n = 1
// it is x by convention and arithmetic is plain integers mod p. The generator is
// the smallest index of multiplicative order q - 1.
//
// Immutable after construction; share it freely between threads.
class FieldContext {
 public:
  // Throws CompositeCharacteristic or SizeLimit.
  static std::shared_ptr<const FieldContext> build(std::uint32_t p, std::uint32_t n);
  // Accepts q = p^n and recovers (p, n). Throws CompositeCharacteristic when q
  // is not a prime power.
  static std::shared_ptr<const FieldContext> build_q(std::uint32_t q);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  // Coefficients c_0..c_n, constant term first, c_n = 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Element generator() const noexcept { return generator_; }

  Element add(Element a, Element b) const noexcept {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digitwise(a, b);
  }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg_[b]); }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return antilog_[log_[a] + log_[b]];
  }
  // Throws DivisionByZero for a == 0.
  Element inv(Element a) const;
  // a / b for b != 0 (unchecked).
  Element div_nonzero(Element a, Element b) const noexcept {
    if (a == 0) return 0;
    return antilog_[log_[a] + (q_ - 1) - log_[b]];
  }
  // Throws DivisionByZero for b == 0.
  Element div(Element a, Element b) const;
  // 0^0 = 1.
  Element pow(Element a, std::uint64_t e) const noexcept;

  // Discrete log base the generator; a must be nonzero.
  std::uint32_t log(Element a) const noexcept { return log_[a]; }
  Element antilog(std::uint64_t e) const noexcept { return antilog_[e % (q_ - 1)]; }

  // Frobenius power x -> x^{p^k}.
  Element frobenius(Element a, std::uint32_t k) const noexcept;

  // {x^d : x != 0}. Throws NonDivisor unless d >= 1 divides q - 1.
  ElementSet mult_subgroup(std::uint32_t d) const;

  // Digits of a in base p, n entries, constant coordinate first.
  std::vector<std::uint32_t> coordinates(Element a) const;
  // Human rendering, e.g. "2t^2 + t + 1".
  std::string render(Element a) const;

  nlohmann::json to_json() const;

 private:
  FieldContext() = default;
  Element add_digitwise(Element a, Element b) const noexcept;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element generator_ = 0;
  std::vector<std::uint32_t> log_;
  // Doubled so that log sums index without reduction.
  std::vector<Element> antilog_;
  std::vector<Element> neg_;
  // Only for small fields.
  std::vector<Element> add_table_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

}  // namespace dirset
