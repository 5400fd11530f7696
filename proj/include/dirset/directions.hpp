#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dirset/element_set.hpp"
#include "dirset/field.hpp"
#include "dirset/poly_fn.hpp"

namespace dirset {

// D_f = {(f(x) - f(y)) / (x - y) : x != y}.
class DirectionSet {
 public:
  DirectionSet() = default;
  explicit DirectionSet(ElementSet set) : set_(std::move(set)), contains_zero_(set_.contains(0)) {}

  const ElementSet& set() const noexcept { return set_; }
  bool contains_zero() const noexcept { return contains_zero_; }
  std::size_t size() const noexcept { return set_.size(); }

 private:
  ElementSet set_;
  bool contains_zero_ = false;
};

DirectionSet direction_set(const FqFunction& f);
DirectionSet direction_set(const FieldContext& ctx, std::span<const Element> values);

// Same as direction_set, but gives up with nullopt as soon as a direction
// outside `permitted` shows up.
std::optional<DirectionSet> direction_set_within(const FieldContext& ctx, std::span<const Element> values,
                                                 const ElementSet& permitted);
std::optional<DirectionSet> direction_set_within(const FqFunction& f, const ElementSet& permitted);

// A^{-1} = {a^{-1} : a in A, a != 0}
ElementSet inverse_set(const FieldContext& ctx, const ElementSet& a);
// AB = {ab : a in A, b in B}
ElementSet product_set(const FieldContext& ctx, const ElementSet& a, const ElementSet& b);
// A - c
ElementSet shift_set(const FieldContext& ctx, const ElementSet& a, Element c);
// lambda A
ElementSet scale_set(const FieldContext& ctx, const ElementSet& a, Element lambda);

// |A^{-1} A|
std::size_t ratio_set_size(const FieldContext& ctx, const ElementSet& a);

struct LineIncidence {
  Element m = 0;
  Element b = 0;
  std::uint32_t k = 0;
};

// Number of points of the graph of f on y = m x + b.
LineIncidence line_intersection_count(const FqFunction& f, Element m, Element b);
// k for every intercept b at fixed slope m, indexed by b. Sums to q.
std::vector<std::uint32_t> line_counts(const FieldContext& ctx, std::span<const Element> values, Element m);

// {beta != 0 : beta R = R}. Only beta = r / r_1 can qualify, so only those
// |R| candidates are tested. Throws ZeroInR or PreconditionViolated (empty R).
ElementSet ratio_stabilizer(const FieldContext& ctx, const ElementSet& r);

// The auxiliary construction behind the line/direction inequality.
// With g(x) = f(x) - m x - b having k roots (1 < k < q), a is the smallest
// root, h(x) = g(x + a), R the nonzero roots of h and
//   H = {x / (x - y) : h(x) != 0, h(y) = 0}.
struct HSetReport {
  Element m = 0;
  Element b = 0;
  std::uint32_t k = 0;
  Element a = 0;
  FqFunction h;
  ElementSet roots{};       // R
  ElementSet h_set{};       // H
  ElementSet h_directions{};  // D_h
  ElementSet ratio_set{};     // D_h^{-1} D_h
  // alpha outside H and {0, 1}; each must come from a stabilizing beta != 1.
  std::vector<Element> exceptional_alphas{};

  bool h_vanishes_at_zero = false;
  bool directions_shift = false;   // D_h == D_f - m
  bool h_in_ratio_set = false;     // H subset of D_h^{-1} D_h
  bool size_bound = false;         // |H| >= q - k + 1
  bool one_in_h = false;
  bool zero_not_in_h = false;
  bool exceptions_stabilize = false;  // beta = alpha/(alpha-1) fixes R, at most k - 2 of them

  bool all_hold() const noexcept {
    return h_vanishes_at_zero && directions_shift && h_in_ratio_set && size_bound && one_in_h &&
           zero_not_in_h && exceptions_stabilize;
  }
};

// Throws PreconditionViolated unless 1 < k < q.
HSetReport build_h_set(const FqFunction& f, Element m, Element b);

struct Theorem1Report {
  Element m = 0;
  Element b = 0;
  std::uint32_t k = 0;
  std::size_t shifted_size = 0;  // |D_f - m|
  std::size_t ratio_size = 0;    // |(D_f - m)^{-1} (D_f - m)|
  std::size_t bound = 0;         // q - k + 2
  bool holds = false;

  long margin() const noexcept { return static_cast<long>(ratio_size) - static_cast<long>(bound); }
};

// Checks |(D_f - m)^{-1}(D_f - m)| >= q - k + 2 for the line y = m x + b.
// Throws PreconditionViolated unless 1 < k < q.
Theorem1Report theorem1_check(const FqFunction& f, Element m, Element b);
// Same, with D_f and k already known.
Theorem1Report theorem1_check(const FieldContext& ctx, const DirectionSet& directions, Element m, Element b,
                              std::uint32_t k);

}  // namespace dirset
