#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "dirset/directions.hpp"
#include "dirset/poly_fn.hpp"

namespace dirset {

// True iff all q values are distinct. Independent of the direction machinery.
bool is_permutation_oracle(std::span<const Element> values);
bool is_permutation_oracle(const FqFunction& f);

// 2|S| <= q + 1, i.e. |S| <= (q + 1) / 2 without rounding questions.
inline bool at_most_half_plus(std::size_t size, std::uint32_t q) noexcept {
  return 2 * size <= std::size_t{q} + 1;
}

enum class VerdictKind { PermutationProven, Inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::size_t set_size = 0;   // |D_f^{-1} D_f|
  std::size_t threshold = 0;  // main2: q - k + 2 (strict); cor1: floor((q + 1) / 2) (inclusive)
  std::uint32_t degree = 0;
  bool oracle_permutation = false;

  bool proven() const noexcept { return kind == VerdictKind::PermutationProven; }
  // A proven verdict the oracle contradicts.
  bool sound() const noexcept { return !proven() || oracle_permutation; }
};

// |D_f^{-1} D_f| < q - k + 2 with k = deg f. Throws DegreeOutOfRange for
// constant functions.
Verdict main2_criterion(const FqFunction& f);
Verdict main2_criterion(const FieldContext& ctx, std::span<const Element> values);

// |D_f^{-1} D_f| <= (q + 1) / 2. Throws ConstantFunction.
Verdict cor1_criterion(const FqFunction& f);
Verdict cor1_criterion(const FieldContext& ctx, std::span<const Element> values);

// D_f inside M_d u {0}: the form a x^{p^k} + b must exist.
struct SziklaiResult {
  bool contained = false;
  std::optional<MonomialForm> form;
  std::size_t direction_count = 0;  // only meaningful when contained

  bool counterexample() const noexcept { return contained && !form.has_value(); }
};

// {0} u M_d. Throws NonDivisor unless d > 1 and d | q - 1.
ElementSet sziklai_permitted(const FieldContext& ctx, std::uint32_t d);

SziklaiResult sziklai_classify(const FqFunction& f, std::uint32_t d);
SziklaiResult sziklai_classify(const FieldContext& ctx, std::span<const Element> values,
                               const ElementSet& permitted);

// |(D_f^{-1} D_f) D_f^{-1}| <= (q + 1) / 2 forces the form a x^{p^k} + b.
struct Cor2Result {
  bool form_proven = false;
  std::size_t triple_size = 0;
  std::optional<MonomialForm> form;

  bool counterexample() const noexcept { return form_proven && !form.has_value(); }
};

Cor2Result cor2_criterion(const FqFunction& f);
Cor2Result cor2_criterion(const FieldContext& ctx, std::span<const Element> values);

// Statement-level implication: antecedent => consequent.
struct ImplicationCheck {
  bool antecedent = false;
  bool consequent = false;
  std::size_t direction_count = 0;

  bool holds() const noexcept { return !antecedent || consequent; }
};

// D_f inside M_d => f = a x^{p^k} + b. Throws NonDivisor.
ImplicationCheck result1_check(const FqFunction& f, std::uint32_t d);
ImplicationCheck result1_check(const FieldContext& ctx, std::span<const Element> values, const ElementSet& subgroup);
// |D_f| <= (q + 1) / 2 => f affine.
ImplicationCheck result2_check(const FqFunction& f);

}  // namespace dirset
