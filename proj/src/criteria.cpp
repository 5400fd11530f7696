#include "dirset/criteria.hpp"

#include <string>

#include "dirset/error.hpp"

namespace dirset {

bool is_permutation_oracle(std::span<const Element> values) {
  ElementSet seen(static_cast<std::uint32_t>(values.size()));
  for (Element v : values) {
    if (v >= values.size() || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

bool is_permutation_oracle(const FqFunction& f) { return is_permutation_oracle(f.values()); }

Verdict main2_criterion(const FieldContext& ctx, std::span<const Element> values) {
  const std::uint32_t q = ctx.q();
  const std::uint32_t k = reduced_degree(ctx, values);
  if (k == 0 || k >= q)
    throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(k) + " outside (0, q)");
  Verdict v;
  v.degree = k;
  v.set_size = ratio_set_size(ctx, direction_set(ctx, values).set());
  v.threshold = q - k + 2;
  v.kind = v.set_size < v.threshold ? VerdictKind::PermutationProven : VerdictKind::Inconclusive;
  v.oracle_permutation = is_permutation_oracle(values);
  return v;
}

Verdict main2_criterion(const FqFunction& f) { return main2_criterion(f.field(), f.values()); }

Verdict cor1_criterion(const FieldContext& ctx, std::span<const Element> values) {
  const std::uint32_t q = ctx.q();
  const auto directions = direction_set(ctx, values);
  if (directions.size() == 1 && directions.contains_zero())
    throw Error(ErrorCode::ConstantFunction, "criterion needs a non-constant function");
  Verdict v;
  v.set_size = ratio_set_size(ctx, directions.set());
  v.threshold = (q + 1) / 2;
  v.kind = at_most_half_plus(v.set_size, q) ? VerdictKind::PermutationProven : VerdictKind::Inconclusive;
  v.oracle_permutation = is_permutation_oracle(values);
  return v;
}

Verdict cor1_criterion(const FqFunction& f) {
  auto v = cor1_criterion(f.field(), f.values());
  v.degree = f.degree();
  return v;
}

ElementSet sziklai_permitted(const FieldContext& ctx, std::uint32_t d) {
  if (d <= 1)
    throw Error(ErrorCode::NonDivisor, "subgroup index must exceed 1, got " + std::to_string(d));
  ElementSet permitted = ctx.mult_subgroup(d);
  permitted.insert(0);
  return permitted;
}

SziklaiResult sziklai_classify(const FieldContext& ctx, std::span<const Element> values,
                               const ElementSet& permitted) {
  SziklaiResult r;
  const auto directions = direction_set_within(ctx, values, permitted);
  if (!directions) return r;
  r.contained = true;
  r.direction_count = directions->size();
  r.form = detect_monomial_form(ctx, values);
  return r;
}

SziklaiResult sziklai_classify(const FqFunction& f, std::uint32_t d) {
  return sziklai_classify(f.field(), f.values(), sziklai_permitted(f.field(), d));
}

Cor2Result cor2_criterion(const FieldContext& ctx, std::span<const Element> values) {
  const auto directions = direction_set(ctx, values);
  const ElementSet inv = inverse_set(ctx, directions.set());
  const ElementSet triple = product_set(ctx, product_set(ctx, inv, directions.set()), inv);
  Cor2Result r;
  r.triple_size = triple.size();
  // The constant function has an empty triple product and is trivially of the form.
  r.form_proven = at_most_half_plus(r.triple_size, ctx.q());
  if (r.form_proven) r.form = detect_monomial_form(ctx, values);
  return r;
}

Cor2Result cor2_criterion(const FqFunction& f) { return cor2_criterion(f.field(), f.values()); }

ImplicationCheck result1_check(const FieldContext& ctx, std::span<const Element> values,
                               const ElementSet& subgroup) {
  ImplicationCheck c;
  const auto directions = direction_set_within(ctx, values, subgroup);
  c.antecedent = directions.has_value();
  if (c.antecedent) {
    c.direction_count = directions->size();
    c.consequent = detect_monomial_form(ctx, values).has_value();
  }
  return c;
}

ImplicationCheck result1_check(const FqFunction& f, std::uint32_t d) {
  if (d <= 1)
    throw Error(ErrorCode::NonDivisor, "subgroup index must exceed 1, got " + std::to_string(d));
  return result1_check(f.field(), f.values(), f.field().mult_subgroup(d));
}

ImplicationCheck result2_check(const FqFunction& f) {
  ImplicationCheck c;
  c.direction_count = direction_set(f).size();
  c.antecedent = at_most_half_plus(c.direction_count, f.q());
  if (c.antecedent) c.consequent = is_affine(f);
  return c;
}

}  // namespace dirset
