#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dirset/field.hpp"

namespace dirset {

// A function F_q -> F_q, carried as its value table and its reduced
// polynomial (degree <= q - 1). Both views always describe the same function.
class FqFunction {
 public:
  // Builds from a value table of length q (Lagrange interpolation).
  // Throws LengthMismatch.
  static FqFunction from_table(FieldPtr ctx, std::vector<Element> values);
  // Builds from coefficients, constant term first. Exponents >= q are folded
  // back with x^q = x, so any length is accepted.
  static FqFunction from_coefficients(FieldPtr ctx, std::span<const Element> coeffs);
  static FqFunction constant(FieldPtr ctx, Element c);
  // x -> a x^{p^k} + b
  static FqFunction monomial(FieldPtr ctx, Element a, std::uint32_t k, Element b);

  const FieldContext& field() const noexcept { return *ctx_; }
  const FieldPtr& field_ptr() const noexcept { return ctx_; }
  std::uint32_t q() const noexcept { return ctx_->q(); }

  Element operator()(Element x) const noexcept { return values_[x]; }
  const std::vector<Element>& values() const noexcept { return values_; }
  // Trimmed to degree + 1 entries (a single 0 for the zero function).
  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(coeffs_.size() - 1); }
  bool is_constant() const noexcept { return coeffs_.size() == 1; }

  friend bool operator==(const FqFunction& a, const FqFunction& b) noexcept {
    return a.values_ == b.values_;
  }

 private:
  FqFunction(FieldPtr ctx, std::vector<Element> values, std::vector<Element> coeffs)
      : ctx_(std::move(ctx)), values_(std::move(values)), coeffs_(std::move(coeffs)) {}

  FieldPtr ctx_;
  std::vector<Element> values_;
  std::vector<Element> coeffs_;
};

struct MonomialForm {
  Element a = 0;
  std::uint32_t k = 0;
  Element b = 0;

  friend bool operator==(const MonomialForm&, const MonomialForm&) = default;
};

// Coefficients of the reduced interpolating polynomial, trimmed.
//
// The Lagrange basis polynomial at node a is 1 - (x - a)^{q-1}, and since
// binom(q-1, j) = (-1)^j mod p its expansion collapses to
//   c_0 = f(0),  c_j = -sum_{a != 0} f(a) a^{q-1-j}  (0 < j < q-1),
//   c_{q-1} = -sum_a f(a).
std::vector<Element> interpolate_coefficients(const FieldContext& ctx, std::span<const Element> values);

FqFunction interpolate(FieldPtr ctx, std::vector<Element> values);

// Horner evaluation of the reduced polynomial.
Element evaluate(const FqFunction& f, Element x);

std::uint32_t reduced_degree(const FqFunction& f);
// Degree straight from a value table, scanning coefficients from the top and
// stopping at the first nonzero one.
std::uint32_t reduced_degree(const FieldContext& ctx, std::span<const Element> values);

// Smallest k with f = a x^{p^k} + b, where b = f(0) and a = f(1) - b.
// Constants give (0, 0, f(0)).
std::optional<MonomialForm> detect_monomial_form(const FqFunction& f);
std::optional<MonomialForm> detect_monomial_form(const FieldContext& ctx, std::span<const Element> values);

// Checks f(x + y) = f(x) + f(y) pairwise and, separately, that the reduced
// polynomial is supported on exponents p^i only. Throws InternalDisagreement
// if the two tests differ.
bool is_additive(const FqFunction& f);
bool is_affine(const FqFunction& f);

}  // namespace dirset
