#include "dirset/poly_fn.hpp"

#include <string>

#include "dirset/error.hpp"

namespace dirset {
namespace {

void trim(std::vector<Element>& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.empty()) c.push_back(0);
}

std::vector<Element> horner_table(const FieldContext& ctx, std::span<const Element> coeffs) {
  std::vector<Element> values(ctx.q());
  for (Element x = 0; x < ctx.q(); ++x) {
    Element acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), coeffs[i]);
    values[x] = acc;
  }
  return values;
}

// Coefficient j of the reduced interpolant (see header).
Element coefficient(const FieldContext& ctx, std::span<const Element> values, std::uint32_t j) {
  const std::uint32_t q = ctx.q();
  if (j == 0) return values[0];
  Element sum = 0;
  if (j == q - 1) {
    for (Element v : values) sum = ctx.add(sum, v);
    return ctx.neg(sum);
  }
  const std::uint64_t e = q - 1 - j;
  for (Element a = 1; a < q; ++a) {
    if (values[a] == 0) continue;
    sum = ctx.add(sum, ctx.mul(values[a], ctx.antilog(std::uint64_t{ctx.log(a)} * e)));
  }
  return ctx.neg(sum);
}

}  // namespace

std::vector<Element> interpolate_coefficients(const FieldContext& ctx, std::span<const Element> values) {
  if (values.size() != ctx.q())
    throw Error(ErrorCode::LengthMismatch, "value table has " + std::to_string(values.size()) +
                                               " entries, expected " + std::to_string(ctx.q()));
  std::vector<Element> c(ctx.q());
  for (std::uint32_t j = 0; j < ctx.q(); ++j) c[j] = coefficient(ctx, values, j);
  trim(c);
  return c;
}

FqFunction FqFunction::from_table(FieldPtr ctx, std::vector<Element> values) {
  if (values.size() == ctx->q()) {
    for (Element v : values)
      if (v >= ctx->q()) throw Error(ErrorCode::InvalidSpec, "value " + std::to_string(v) + " outside the field");
  }
  auto coeffs = interpolate_coefficients(*ctx, values);
  return FqFunction(std::move(ctx), std::move(values), std::move(coeffs));
}

FqFunction FqFunction::from_coefficients(FieldPtr ctx, std::span<const Element> coeffs) {
  const std::uint32_t q = ctx->q();
  std::vector<Element> reduced(q, 0);
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] >= q)
      throw Error(ErrorCode::InvalidSpec, "coefficient " + std::to_string(coeffs[e]) + " outside the field");
    const std::size_t target = e < q ? e : (e - 1) % (q - 1) + 1;
    reduced[target] = ctx->add(reduced[target], coeffs[e]);
  }
  trim(reduced);
  auto values = horner_table(*ctx, reduced);
  return FqFunction(std::move(ctx), std::move(values), std::move(reduced));
}

FqFunction FqFunction::constant(FieldPtr ctx, Element c) {
  const Element coeffs[] = {c};
  return from_coefficients(std::move(ctx), coeffs);
}

FqFunction FqFunction::monomial(FieldPtr ctx, Element a, std::uint32_t k, Element b) {
  std::vector<Element> values(ctx->q());
  for (Element x = 0; x < ctx->q(); ++x) values[x] = ctx->add(ctx->mul(a, ctx->frobenius(x, k)), b);
  return from_table(std::move(ctx), std::move(values));
}

FqFunction interpolate(FieldPtr ctx, std::vector<Element> values) {
  return FqFunction::from_table(std::move(ctx), std::move(values));
}

Element evaluate(const FqFunction& f, Element x) {
  const auto& ctx = f.field();
  const auto& c = f.coefficients();
  Element acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), c[i]);
  return acc;
}

std::uint32_t reduced_degree(const FqFunction& f) { return f.degree(); }

std::uint32_t reduced_degree(const FieldContext& ctx, std::span<const Element> values) {
  for (std::uint32_t j = ctx.q() - 1; j > 0; --j)
    if (coefficient(ctx, values, j) != 0) return j;
  return 0;
}

std::optional<MonomialForm> detect_monomial_form(const FieldContext& ctx, std::span<const Element> values) {
  const Element b = values[0];
  const Element a = ctx.sub(values[1 % ctx.q()], b);
  if (a == 0) {
    for (Element v : values)
      if (v != b) return std::nullopt;
    return MonomialForm{0, 0, b};
  }
  for (std::uint32_t k = 0; k < ctx.n(); ++k) {
    bool match = true;
    for (Element x = 0; x < ctx.q() && match; ++x)
      match = values[x] == ctx.add(ctx.mul(a, ctx.frobenius(x, k)), b);
    if (match) return MonomialForm{a, k, b};
  }
  return std::nullopt;
}

std::optional<MonomialForm> detect_monomial_form(const FqFunction& f) {
  return detect_monomial_form(f.field(), f.values());
}

bool is_additive(const FqFunction& f) {
  const auto& ctx = f.field();
  const std::uint32_t q = ctx.q();

  bool pairwise = true;
  for (Element x = 0; x < q && pairwise; ++x)
    for (Element y = x; y < q && pairwise; ++y)
      pairwise = f(ctx.add(x, y)) == ctx.add(f(x), f(y));

  bool support = true;
  const auto& c = f.coefficients();
  for (std::size_t e = 0; e < c.size() && support; ++e) {
    if (c[e] == 0) continue;
    std::size_t pk = 1;
    while (pk < e) pk *= ctx.p();
    support = e != 0 && pk == e;
  }

  if (pairwise != support)
    throw Error(ErrorCode::InternalDisagreement, "pairwise additivity and coefficient support disagree");
  return pairwise;
}

bool is_affine(const FqFunction& f) {
  const auto& ctx = f.field();
  std::vector<Element> shifted(f.values());
  const Element c = f(0);
  for (auto& v : shifted) v = ctx.sub(v, c);
  return is_additive(FqFunction::from_table(f.field_ptr(), std::move(shifted)));
}

}  // namespace dirset
