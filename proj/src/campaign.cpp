#include "dirset/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "dirset/criteria.hpp"
#include "dirset/directions.hpp"
#include "dirset/error.hpp"

namespace dirset {

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::Main: return "main";
    case Theorem::Main2: return "main2";
    case Theorem::Cor1: return "cor1";
    case Theorem::Conj: return "conj";
    case Theorem::Cor2: return "cor2";
    case Theorem::Result1: return "result1";
    case Theorem::Result2: return "result2";
  }
  return "unknown";
}

Theorem parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::Main, Theorem::Main2, Theorem::Cor1, Theorem::Conj, Theorem::Cor2, Theorem::Result1,
                    Theorem::Result2}) {
    if (to_string(t) == name) return t;
  }
  throw Error(ErrorCode::InvalidSpec, "unknown theorem '" + std::string(name) + "'");
}

namespace {

std::uint64_t parse_suffix(std::string_view name, std::string_view prefix) {
  const auto digits = name.substr(prefix.size());
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorCode::InvalidSpec, "malformed family '" + std::string(name) + "'");
  return v;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = saturating_mul(r, base);
  return r;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

void horner_fill(const FieldContext& ctx, std::span<const Element> coeffs, std::span<Element> out) {
  for (Element x = 0; x < ctx.q(); ++x) {
    Element acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), coeffs[i]);
    out[x] = acc;
  }
}

// Base-q digits of v into out, least significant first. Returns false on
// overflow out of the last position.
bool increment(std::span<Element> digits, std::uint32_t base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

void decode(std::uint64_t v, std::uint32_t base, std::span<Element> out) {
  for (auto& d : out) {
    d = static_cast<Element>(v % base);
    v /= base;
  }
}

}  // namespace

std::string Family::name() const {
  switch (kind) {
    case FamilyKind::AllFunctions: return "all";
    case FamilyKind::PolyDegree: return "poly-deg-" + std::to_string(degree);
    case FamilyKind::MonicDegree: return "monic-deg-" + std::to_string(degree);
    case FamilyKind::MonomialForms: return "monomial-forms";
    case FamilyKind::RandomSample: return "random-" + std::to_string(sample_size);
  }
  return "unknown";
}

Family Family::parse(std::string_view name, std::uint64_t seed) {
  Family f;
  f.seed = seed;
  if (name == "all") {
    f.kind = FamilyKind::AllFunctions;
  } else if (name == "monomial-forms") {
    f.kind = FamilyKind::MonomialForms;
  } else if (name.starts_with("poly-deg-")) {
    f.kind = FamilyKind::PolyDegree;
    f.degree = static_cast<std::uint32_t>(parse_suffix(name, "poly-deg-"));
  } else if (name.starts_with("monic-deg-")) {
    f.kind = FamilyKind::MonicDegree;
    f.degree = static_cast<std::uint32_t>(parse_suffix(name, "monic-deg-"));
  } else if (name.starts_with("random-")) {
    f.kind = FamilyKind::RandomSample;
    f.sample_size = parse_suffix(name, "random-");
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown family '" + std::string(name) + "'");
  }
  return f;
}

nlohmann::json CampaignSpec::to_json() const {
  nlohmann::json j{{"q", q},
                   {"theorem", std::string(to_string(theorem))},
                   {"family", family.name()},
                   {"jobs", jobs},
                   {"budget", budget}};
  j["d"] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
  j["seed"] = family.kind == FamilyKind::RandomSample ? nlohmann::json(family.seed) : nlohmann::json(nullptr);
  return j;
}

std::uint64_t family_size(const FieldContext& ctx, const Family& family) {
  const std::uint64_t q = ctx.q();
  switch (family.kind) {
    case FamilyKind::AllFunctions:
      return saturating_pow(q, q);
    case FamilyKind::PolyDegree:
      if (family.degree >= q) throw Error(ErrorCode::InvalidSpec, "polynomial degree must be below q");
      return saturating_pow(q, family.degree + 1);
    case FamilyKind::MonicDegree: {
      if (family.degree >= q) throw Error(ErrorCode::InvalidSpec, "polynomial degree must be below q");
      std::uint64_t total = 0;
      for (std::uint32_t j = 0; j <= family.degree; ++j) total = saturating_add(total, saturating_pow(q, j));
      return total;
    }
    case FamilyKind::MonomialForms:
      return q + std::uint64_t{ctx.n()} * (q - 1) * q;
    case FamilyKind::RandomSample:
      return family.sample_size;
  }
  return 0;
}

void enumerate_family(const FieldContext& ctx, const Family& family, std::uint64_t begin, std::uint64_t end,
                      const std::function<void(std::uint64_t, std::span<const Element>)>& visit) {
  const std::uint32_t q = ctx.q();
  std::vector<Element> table(q);
  if (begin >= end) return;

  switch (family.kind) {
    case FamilyKind::AllFunctions: {
      decode(begin, q, table);
      for (std::uint64_t i = begin; i < end; ++i) {
        visit(i, table);
        increment(table, q);
      }
      return;
    }
    case FamilyKind::PolyDegree: {
      std::vector<Element> coeffs(family.degree + 1);
      decode(begin, q, coeffs);
      for (std::uint64_t i = begin; i < end; ++i) {
        horner_fill(ctx, coeffs, table);
        visit(i, table);
        increment(coeffs, q);
      }
      return;
    }
    case FamilyKind::MonicDegree: {
      std::uint32_t degree = 0;
      std::uint64_t offset = begin;
      while (offset >= saturating_pow(q, degree)) offset -= saturating_pow(q, degree++);
      std::vector<Element> coeffs(degree + 1);
      decode(offset, q, std::span<Element>(coeffs).first(degree));
      coeffs[degree] = 1;
      for (std::uint64_t i = begin; i < end; ++i) {
        horner_fill(ctx, coeffs, table);
        visit(i, table);
        if (!increment(std::span<Element>(coeffs).first(degree), q)) {
          ++degree;
          coeffs.assign(degree + 1, 0);
          coeffs[degree] = 1;
        }
      }
      return;
    }
    case FamilyKind::MonomialForms: {
      const std::uint64_t block = std::uint64_t{q - 1} * q;
      for (std::uint64_t i = begin; i < end; ++i) {
        Element a = 0;
        Element b = 0;
        std::uint32_t k = 0;
        if (i < q) {
          b = static_cast<Element>(i);
        } else {
          const std::uint64_t r = i - q;
          k = static_cast<std::uint32_t>(r / block);
          a = static_cast<Element>((r % block) / q + 1);
          b = static_cast<Element>(r % q);
        }
        for (Element x = 0; x < q; ++x) table[x] = ctx.add(ctx.mul(a, ctx.frobenius(x, k)), b);
        visit(i, table);
      }
      return;
    }
    case FamilyKind::RandomSample: {
      std::uniform_int_distribution<Element> dist(0, q - 1);
      for (std::uint64_t i = begin; i < end; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(family.seed), static_cast<std::uint32_t>(family.seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 rng(seq);
        for (auto& v : table) v = dist(rng);
        visit(i, table);
      }
      return;
    }
  }
}

namespace {

nlohmann::json form_json(const std::optional<MonomialForm>& form) {
  if (!form) return nullptr;
  return nlohmann::json{{"a", form->a}, {"k", form->k}, {"b", form->b}};
}

// Per-chunk results. merge() is associative and commutative, so the merged
// report does not depend on how the range was split.
struct Partial {
  std::uint64_t checked = 0;
  std::uint64_t fired = 0;
  std::vector<Counterexample> counterexamples;
  std::optional<long> min;
  std::optional<long> max;
  std::optional<std::uint64_t> argmin;
  nlohmann::json argmin_details;
  std::optional<std::uint64_t> witness_index;
  nlohmann::json witness;
  std::map<std::string, std::uint64_t> tallies;

  void observe(long value, std::uint64_t index, const std::function<nlohmann::json()>& details) {
    if (!min || value < *min || (value == *min && index < *argmin)) {
      min = value;
      argmin = index;
      argmin_details = details();
    }
    if (!max || value > *max) max = value;
  }

  void record(std::uint64_t index, std::span<const Element> table, nlohmann::json details) {
    ++tallies["counterexamples_total"];
    if (counterexamples.size() >= kMaxRecordedCounterexamples && index > counterexamples.back().index) return;
    counterexamples.push_back({index, std::vector<Element>(table.begin(), table.end()), std::move(details)});
    trim();
  }

  void trim() {
    std::stable_sort(counterexamples.begin(), counterexamples.end(),
                     [](const auto& a, const auto& b) { return a.index < b.index; });
    if (counterexamples.size() > kMaxRecordedCounterexamples) counterexamples.resize(kMaxRecordedCounterexamples);
  }

  void merge(Partial&& o) {
    checked += o.checked;
    fired += o.fired;
    for (auto& c : o.counterexamples) counterexamples.push_back(std::move(c));
    trim();
    if (o.min && (!min || *o.min < *min || (*o.min == *min && *o.argmin < *argmin))) {
      min = o.min;
      argmin = o.argmin;
      argmin_details = std::move(o.argmin_details);
    }
    if (o.max && (!max || *o.max > *max)) max = o.max;
    if (o.witness_index && (!witness_index || *o.witness_index < *witness_index)) {
      witness_index = o.witness_index;
      witness = std::move(o.witness);
    }
    for (const auto& [key, value] : o.tallies) tallies[key] += value;
  }
};

using InstanceCheck = std::function<void(std::uint64_t, std::span<const Element>, Partial&)>;

// Splits [0, size) into chunks handed out to `jobs` workers; returns the
// per-chunk results in chunk order.
template <class Result, class Work>
std::vector<Result> run_chunks(std::uint64_t size, unsigned jobs, Work work) {
  jobs = std::max(1U, jobs);
  const std::uint64_t chunk_count = std::max<std::uint64_t>(1, std::min<std::uint64_t>(size, jobs * 16ULL));
  const std::uint64_t chunk_len = (size + chunk_count - 1) / chunk_count;
  std::vector<Result> results(chunk_count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed); c < chunk_count;
         c = next.fetch_add(1, std::memory_order_relaxed)) {
      const std::uint64_t begin = std::min(size, c * chunk_len);
      const std::uint64_t end = std::min(size, begin + chunk_len);
      work(begin, end, results[c]);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  }
  return results;
}

std::uint32_t required_d(const CampaignSpec& spec) {
  if (!spec.d) throw Error(ErrorCode::InvalidSpec, std::string(to_string(spec.theorem)) + " needs a subgroup index d");
  return *spec.d;
}

InstanceCheck make_check(const FieldPtr& field, const CampaignSpec& spec, Extremes& extremes) {
  const FieldContext& ctx = *field;
  const std::uint32_t q = ctx.q();
  const long half = static_cast<long>((q + 1) / 2);

  switch (spec.theorem) {
    case Theorem::Main:
      extremes.statistic = "ratio_size - (q - k + 2)";
      return [field, q](std::uint64_t index, std::span<const Element> values, Partial& out) {
        const FieldContext& ctx = *field;
        ++out.checked;
        out.tallies.try_emplace("inequality_violations", 0);
        out.tallies.try_emplace("h_set_violations", 0);
        out.tallies.try_emplace("h_set_checks", 0);
        const auto directions = direction_set(ctx, values);
        std::optional<FqFunction> f;
        for (Element m = 0; m < q; ++m) {
          const auto counts = line_counts(ctx, values, m);
          for (Element b = 0; b < q; ++b) {
            const std::uint32_t k = counts[b];
            if (k <= 1 || k >= q) continue;
            ++out.fired;
            const auto t = theorem1_check(ctx, directions, m, b, k);
            auto details = [&] {
              return nlohmann::json{{"m", m}, {"b", b}, {"k", k}, {"ratio_size", t.ratio_size}, {"bound", t.bound}};
            };
            out.observe(t.margin(), index, details);
            if (!t.holds) {
              ++out.tallies["inequality_violations"];
              out.record(index, values, details());
            }
            if (t.margin() == 0 && (!out.witness_index || index < *out.witness_index)) {
              out.witness_index = index;
              out.witness = details();
              out.witness["index"] = index;
              out.witness["function_table"] = std::vector<Element>(values.begin(), values.end());
            }
            if (!f) f = FqFunction::from_table(field, std::vector<Element>(values.begin(), values.end()));
            const auto h = build_h_set(*f, m, b);
            ++out.tallies["h_set_checks"];
            if (!h.all_hold()) {
              ++out.tallies["h_set_violations"];
              auto d = details();
              d["h_set"] = {{"a", h.a},
                            {"h_set_size", h.h_set.size()},
                            {"h_vanishes_at_zero", h.h_vanishes_at_zero},
                            {"directions_shift", h.directions_shift},
                            {"h_in_ratio_set", h.h_in_ratio_set},
                            {"size_bound", h.size_bound},
                            {"one_in_h", h.one_in_h},
                            {"zero_not_in_h", h.zero_not_in_h},
                            {"exceptions_stabilize", h.exceptions_stabilize}};
              out.record(index, values, std::move(d));
            }
          }
        }
      };

    case Theorem::Main2:
      extremes.statistic = "ratio_size - (q - deg + 2)";
      return [&ctx = *field](std::uint64_t index, std::span<const Element> values, Partial& out) {
        ++out.checked;
        const bool perm = is_permutation_oracle(values);
        if (perm) ++out.tallies["permutations"];
        if (reduced_degree(ctx, values) == 0) {
          ++out.tallies["skipped_constant"];
          return;
        }
        const Verdict v = main2_criterion(ctx, values);
        auto details = [&] {
          return nlohmann::json{{"degree", v.degree}, {"ratio_size", v.set_size}, {"threshold", v.threshold}};
        };
        out.observe(static_cast<long>(v.set_size) - static_cast<long>(v.threshold), index, details);
        if (v.proven()) ++out.fired;
        if (!v.sound()) out.record(index, values, details());
      };

    case Theorem::Cor1:
      extremes.statistic = "ratio_size - floor((q + 1) / 2)";
      return [&ctx = *field](std::uint64_t index, std::span<const Element> values, Partial& out) {
        ++out.checked;
        if (is_permutation_oracle(values)) ++out.tallies["permutations"];
        if (std::all_of(values.begin(), values.end(), [&](Element v) { return v == values[0]; })) {
          ++out.tallies["skipped_constant"];
          return;
        }
        const Verdict v = cor1_criterion(ctx, values);
        auto details = [&] { return nlohmann::json{{"ratio_size", v.set_size}, {"threshold", v.threshold}}; };
        out.observe(static_cast<long>(v.set_size) - static_cast<long>(v.threshold), index, details);
        if (v.proven()) ++out.fired;
        if (!v.sound()) out.record(index, values, details());
      };

    case Theorem::Conj: {
      const std::uint32_t d = required_d(spec);
      extremes.statistic = "direction_count of contained functions";
      return [&ctx = *field, permitted = sziklai_permitted(ctx, d)](std::uint64_t index, std::span<const Element> values,
                                                           Partial& out) {
        ++out.checked;
        const auto r = sziklai_classify(ctx, values, permitted);
        if (!r.contained) return;
        ++out.fired;
        out.observe(static_cast<long>(r.direction_count), index,
                    [&] { return nlohmann::json{{"form", form_json(r.form)}}; });
        if (r.counterexample())
          out.record(index, values, nlohmann::json{{"direction_count", r.direction_count}, {"form", nullptr}});
      };
    }

    case Theorem::Cor2:
      extremes.statistic = "triple_size - floor((q + 1) / 2)";
      return [&ctx = *field, half](std::uint64_t index, std::span<const Element> values, Partial& out) {
        ++out.checked;
        const auto r = cor2_criterion(ctx, values);
        auto details = [&] { return nlohmann::json{{"triple_size", r.triple_size}, {"form", form_json(r.form)}}; };
        out.observe(static_cast<long>(r.triple_size) - half, index, details);
        if (r.form_proven) ++out.fired;
        if (r.counterexample()) out.record(index, values, details());
      };

    case Theorem::Result1: {
      const std::uint32_t d = required_d(spec);
      if (d <= 1) throw Error(ErrorCode::NonDivisor, "subgroup index must exceed 1");
      extremes.statistic = "direction_count of functions with D_f in M_d";
      return [&ctx = *field, subgroup = ctx.mult_subgroup(d)](std::uint64_t index, std::span<const Element> values,
                                                     Partial& out) {
        ++out.checked;
        const auto c = result1_check(ctx, values, subgroup);
        if (!c.antecedent) return;
        ++out.fired;
        out.observe(static_cast<long>(c.direction_count), index, [] { return nlohmann::json::object(); });
        if (!c.holds()) out.record(index, values, nlohmann::json{{"direction_count", c.direction_count}});
      };
    }

    case Theorem::Result2:
      extremes.statistic = "direction_count - floor((q + 1) / 2)";
      return [field, half](std::uint64_t index, std::span<const Element> values, Partial& out) {
        const FieldContext& ctx = *field;
        ++out.checked;
        const auto directions = direction_set(ctx, values);
        const std::size_t size = directions.size();
        out.observe(static_cast<long>(size) - half, index, [&] { return nlohmann::json{{"direction_count", size}}; });
        if (!at_most_half_plus(size, ctx.q())) return;
        ++out.fired;
        const auto f = FqFunction::from_table(field, std::vector<Element>(values.begin(), values.end()));
        if (!is_affine(f)) out.record(index, values, nlohmann::json{{"direction_count", size}, {"affine", false}});
      };
  }
  throw Error(ErrorCode::InvalidSpec, "unhandled theorem");
}

}  // namespace

VerificationReport run_campaign(const CampaignSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const FieldPtr field = FieldContext::build_q(spec.q);
  if (spec.d && spec.theorem != Theorem::Conj && spec.theorem != Theorem::Result1) {
    // Ignored, but still validated so that a bad flag is not silently accepted.
    if (*spec.d == 0 || (spec.q - 1) % *spec.d != 0)
      throw Error(ErrorCode::NonDivisor, std::to_string(*spec.d) + " does not divide q-1");
  }
  const std::uint64_t size = family_size(*field, spec.family);
  if (size > spec.budget)
    throw Error(ErrorCode::BudgetExceeded, "family " + spec.family.name() + " has " + std::to_string(size) +
                                               " instances, budget is " + std::to_string(spec.budget));

  VerificationReport report;
  report.spec = spec;
  const InstanceCheck check = make_check(field, spec, report.extremes);

  auto partials = run_chunks<Partial>(size, spec.jobs, [&](std::uint64_t begin, std::uint64_t end, Partial& out) {
    enumerate_family(*field, spec.family, begin, end,
                     [&](std::uint64_t index, std::span<const Element> values) { check(index, values, out); });
  });
  Partial total;
  for (auto& p : partials) total.merge(std::move(p));

  report.checked = total.checked;
  report.fired = total.fired;
  report.counterexamples = std::move(total.counterexamples);
  report.extremes.min = total.min;
  report.extremes.max = total.max;
  report.extremes.argmin_index = total.argmin;
  report.extremes.argmin_details = std::move(total.argmin_details);
  if (total.witness_index) report.extremes.equality_witness = std::move(total.witness);
  report.tallies = std::move(total.tallies);
  report.tallies.try_emplace("counterexamples_total", 0);
  report.tallies["family_size"] = size;
  report.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return report;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json cx = nlohmann::json::array();
  for (const auto& c : counterexamples)
    cx.push_back({{"index", c.index}, {"function_table", c.function_table}, {"details", c.details}});
  auto opt = [](const auto& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json ext{{"statistic", extremes.statistic},
                     {"min", opt(extremes.min)},
                     {"max", opt(extremes.max)},
                     {"argmin_index", opt(extremes.argmin_index)},
                     {"argmin_details", extremes.argmin_details},
                     {"equality_witness", opt(extremes.equality_witness)}};
  return nlohmann::json{{"spec", spec.to_json()}, {"checked", checked},   {"fired", fired},
                        {"counterexamples", cx},  {"extremes", ext},     {"tallies", tallies},
                        {"elapsed_ms", elapsed_ms}};
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "key,value\n";
  out << "theorem," << to_string(spec.theorem) << '\n';
  out << "q," << spec.q << '\n';
  out << "family," << spec.family.name() << '\n';
  out << "d," << (spec.d ? std::to_string(*spec.d) : std::string()) << '\n';
  out << "checked," << checked << '\n';
  out << "fired," << fired << '\n';
  out << "counterexamples," << counterexamples.size() << '\n';
  out << "extremes.min," << (extremes.min ? std::to_string(*extremes.min) : std::string()) << '\n';
  out << "extremes.max," << (extremes.max ? std::to_string(*extremes.max) : std::string()) << '\n';
  for (const auto& [key, value] : tallies) out << "tallies." << key << ',' << value << '\n';
  out << "elapsed_ms," << elapsed_ms << '\n';
  return out.str();
}

SearchReport run_search(std::uint32_t q, std::uint32_t d, const Family& family, unsigned jobs,
                        std::uint64_t budget) {
  const FieldPtr field = FieldContext::build_q(q);
  const ElementSet permitted = sziklai_permitted(*field, d);
  const std::uint64_t size = family_size(*field, family);
  if (size > budget)
    throw Error(ErrorCode::BudgetExceeded, "family " + family.name() + " has " + std::to_string(size) +
                                               " instances, budget is " + std::to_string(budget));

  struct Found {
    std::uint64_t checked = 0;
    std::vector<SearchMember> members;
  };
  auto parts = run_chunks<Found>(size, jobs, [&](std::uint64_t begin, std::uint64_t end, Found& out) {
    enumerate_family(*field, family, begin, end, [&](std::uint64_t index, std::span<const Element> values) {
      ++out.checked;
      const auto r = sziklai_classify(*field, values, permitted);
      if (!r.contained) return;
      out.members.push_back({index, std::vector<Element>(values.begin(), values.end()),
                             interpolate_coefficients(*field, values), r.form});
    });
  });

  SearchReport report;
  report.q = q;
  report.d = d;
  report.family = family;
  for (auto& p : parts) {
    report.checked += p.checked;
    for (auto& m : p.members) report.members.push_back(std::move(m));
  }
  return report;
}

nlohmann::json SearchReport::to_json() const {
  nlohmann::json members_json = nlohmann::json::array();
  for (const auto& m : members) {
    members_json.push_back({{"index", m.index},
                            {"function_table", m.function_table},
                            {"coefficients", m.coefficients},
                            {"form", form_json(m.form)}});
  }
  return nlohmann::json{{"q", q},         {"d", d}, {"family", family.name()}, {"checked", checked},
                        {"count", members.size()}, {"members", members_json}};
}

std::string SearchReport::to_csv() const {
  std::ostringstream out;
  out << "index,coefficients,a,k,b\n";
  for (const auto& m : members) {
    out << m.index << ",\"";
    for (std::size_t i = 0; i < m.coefficients.size(); ++i) out << (i ? "," : "") << m.coefficients[i];
    out << "\",";
    if (m.form)
      out << m.form->a << ',' << m.form->k << ',' << m.form->b;
    else
      out << ",,";
    out << '\n';
  }
  return out.str();
}

}  // namespace dirset
