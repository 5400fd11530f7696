#include "dirset/directions.hpp"

#include <string>

#include "dirset/error.hpp"

namespace dirset {

DirectionSet direction_set(const FieldContext& ctx, std::span<const Element> values) {
  const std::uint32_t q = ctx.q();
  ElementSet out(q);
  for (Element x = 0; x < q; ++x) {
    for (Element y = x + 1; y < q; ++y) {
      out.insert(ctx.div_nonzero(ctx.sub(values[x], values[y]), ctx.sub(x, y)));
    }
  }
  return DirectionSet(std::move(out));
}

DirectionSet direction_set(const FqFunction& f) { return direction_set(f.field(), f.values()); }

std::optional<DirectionSet> direction_set_within(const FieldContext& ctx, std::span<const Element> values,
                                                 const ElementSet& permitted) {
  const std::uint32_t q = ctx.q();
  ElementSet out(q);
  for (Element x = 0; x < q; ++x) {
    for (Element y = x + 1; y < q; ++y) {
      const Element d = ctx.div_nonzero(ctx.sub(values[x], values[y]), ctx.sub(x, y));
      if (!permitted.contains(d)) return std::nullopt;
      out.insert(d);
    }
  }
  return DirectionSet(std::move(out));
}

std::optional<DirectionSet> direction_set_within(const FqFunction& f, const ElementSet& permitted) {
  return direction_set_within(f.field(), f.values(), permitted);
}

ElementSet inverse_set(const FieldContext& ctx, const ElementSet& a) {
  ElementSet out(ctx.q());
  a.for_each([&](Element e) {
    if (e != 0) out.insert(ctx.div_nonzero(1, e));
  });
  return out;
}

ElementSet product_set(const FieldContext& ctx, const ElementSet& a, const ElementSet& b) {
  ElementSet out(ctx.q());
  if (a.empty() || b.empty()) return out;
  if (a.contains(0) || b.contains(0)) out.insert(0);
  a.for_each([&](Element x) {
    if (x == 0) return;
    b.for_each([&](Element y) {
      if (y != 0) out.insert(ctx.mul(x, y));
    });
  });
  return out;
}

ElementSet shift_set(const FieldContext& ctx, const ElementSet& a, Element c) {
  ElementSet out(ctx.q());
  a.for_each([&](Element e) { out.insert(ctx.sub(e, c)); });
  return out;
}

ElementSet scale_set(const FieldContext& ctx, const ElementSet& a, Element lambda) {
  ElementSet out(ctx.q());
  a.for_each([&](Element e) { out.insert(ctx.mul(e, lambda)); });
  return out;
}

std::size_t ratio_set_size(const FieldContext& ctx, const ElementSet& a) {
  return product_set(ctx, inverse_set(ctx, a), a).size();
}

std::vector<std::uint32_t> line_counts(const FieldContext& ctx, std::span<const Element> values, Element m) {
  std::vector<std::uint32_t> counts(ctx.q(), 0);
  for (Element x = 0; x < ctx.q(); ++x) ++counts[ctx.sub(values[x], ctx.mul(m, x))];
  return counts;
}

LineIncidence line_intersection_count(const FqFunction& f, Element m, Element b) {
  const auto& ctx = f.field();
  std::uint32_t k = 0;
  for (Element x = 0; x < ctx.q(); ++x)
    if (f(x) == ctx.add(ctx.mul(m, x), b)) ++k;
  return LineIncidence{m, b, k};
}

ElementSet ratio_stabilizer(const FieldContext& ctx, const ElementSet& r) {
  if (r.contains(0)) throw Error(ErrorCode::ZeroInR, "R must consist of nonzero elements");
  if (r.empty()) throw Error(ErrorCode::PreconditionViolated, "R must be nonempty");
  const auto members = r.elements();
  const Element first = members.front();
  ElementSet out(ctx.q());
  for (Element candidate : members) {
    const Element beta = ctx.div_nonzero(candidate, first);
    bool stable = true;
    for (Element x : members) {
      if (!r.contains(ctx.mul(beta, x))) {
        stable = false;
        break;
      }
    }
    if (stable) out.insert(beta);
  }
  return out;
}

namespace {

void require_admissible(std::uint32_t k, std::uint32_t q) {
  if (k <= 1 || k >= q)
    throw Error(ErrorCode::PreconditionViolated,
                "line meets the graph in k = " + std::to_string(k) + " points; need 1 < k < " + std::to_string(q));
}

}  // namespace

HSetReport build_h_set(const FqFunction& f, Element m, Element b) {
  const auto& ctx = f.field();
  const std::uint32_t q = ctx.q();

  std::vector<Element> g(q);
  for (Element x = 0; x < q; ++x) g[x] = ctx.sub(f(x), ctx.add(ctx.mul(m, x), b));
  std::uint32_t k = 0;
  Element a = q;
  for (Element x = 0; x < q; ++x) {
    if (g[x] != 0) continue;
    ++k;
    if (a == q) a = x;
  }
  require_admissible(k, q);

  std::vector<Element> h_values(q);
  for (Element x = 0; x < q; ++x) h_values[x] = g[ctx.add(x, a)];

  HSetReport report{.m = m, .b = b, .k = k, .a = a, .h = FqFunction::from_table(f.field_ptr(), h_values)};
  report.h_vanishes_at_zero = h_values[0] == 0;

  ElementSet zeros(q);
  report.roots = ElementSet(q);
  for (Element x = 0; x < q; ++x) {
    if (h_values[x] != 0) continue;
    zeros.insert(x);
    if (x != 0) report.roots.insert(x);
  }

  report.h_set = ElementSet(q);
  for (Element x = 0; x < q; ++x) {
    if (h_values[x] == 0) continue;
    zeros.for_each([&](Element y) { report.h_set.insert(ctx.div_nonzero(x, ctx.sub(x, y))); });
  }

  report.h_directions = direction_set(ctx, h_values).set();
  report.ratio_set = product_set(ctx, inverse_set(ctx, report.h_directions), report.h_directions);
  report.directions_shift = report.h_directions == shift_set(ctx, direction_set(f).set(), m);
  report.h_in_ratio_set = report.h_set.is_subset_of(report.ratio_set);
  report.size_bound = report.h_set.size() + k >= q + 1;
  report.one_in_h = report.h_set.contains(1);
  report.zero_not_in_h = !report.h_set.contains(0);

  const ElementSet stabilizer = ratio_stabilizer(ctx, report.roots);
  bool explained = true;
  for (Element alpha = 2; alpha < q; ++alpha) {
    if (report.h_set.contains(alpha)) continue;
    report.exceptional_alphas.push_back(alpha);
    const Element beta = ctx.div_nonzero(alpha, ctx.sub(alpha, 1));
    if (beta == 1 || !stabilizer.contains(beta)) explained = false;
  }
  report.exceptions_stabilize = explained && report.exceptional_alphas.size() + 2 <= k;
  return report;
}

Theorem1Report theorem1_check(const FieldContext& ctx, const DirectionSet& directions, Element m, Element b,
                              std::uint32_t k) {
  require_admissible(k, ctx.q());
  const ElementSet shifted = shift_set(ctx, directions.set(), m);
  Theorem1Report report;
  report.m = m;
  report.b = b;
  report.k = k;
  report.shifted_size = shifted.size();
  report.ratio_size = ratio_set_size(ctx, shifted);
  report.bound = ctx.q() - k + 2;
  report.holds = report.ratio_size >= report.bound;
  return report;
}

Theorem1Report theorem1_check(const FqFunction& f, Element m, Element b) {
  const auto incidence = line_intersection_count(f, m, b);
  require_admissible(incidence.k, f.q());
  return theorem1_check(f.field(), direction_set(f), m, b, incidence.k);
}

}  // namespace dirset
