#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirset/field.hpp"
#include "dirset/poly_fn.hpp"

namespace dirset {

enum class Theorem { Main, Main2, Cor1, Conj, Cor2, Result1, Result2 };

std::string_view to_string(Theorem t);
// Throws InvalidSpec.
Theorem parse_theorem(std::string_view name);

enum class FamilyKind {
  AllFunctions,   // value tables as base-q counters, f(0) least significant
  PolyDegree,     // coefficient vectors c_0..c_D as base-q counters, c_0 least significant
  MonicDegree,    // monic of degree 0, 1, ..., D in that order, lower coefficients as counters
  MonomialForms,  // constants b, then a x^{p^k} + b for k, a != 0, b
  RandomSample,   // uniform value tables, instance i seeded from (seed, i)
};

struct Family {
  FamilyKind kind = FamilyKind::AllFunctions;
  std::uint32_t degree = 0;
  std::uint64_t sample_size = 0;
  std::uint64_t seed = 0;

  // "all", "poly-deg-D", "monic-deg-D", "monomial-forms", "random-N".
  std::string name() const;
  // Throws InvalidSpec.
  static Family parse(std::string_view name, std::uint64_t seed = 0);
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 25;

struct CampaignSpec {
  std::uint32_t q = 0;
  Theorem theorem = Theorem::Main2;
  Family family;
  std::optional<std::uint32_t> d;  // conj and result1 only
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultBudget;

  nlohmann::json to_json() const;
};

// Number of instances, saturating at UINT64_MAX. Throws InvalidSpec for
// malformed families (e.g. degree >= q).
std::uint64_t family_size(const FieldContext& ctx, const Family& family);

// Calls visit(index, values) for every instance in [begin, end), in order.
void enumerate_family(const FieldContext& ctx, const Family& family, std::uint64_t begin, std::uint64_t end,
                      const std::function<void(std::uint64_t, std::span<const Element>)>& visit);

struct Counterexample {
  std::uint64_t index = 0;
  std::vector<Element> function_table;
  nlohmann::json details;
};

// Extremal statistic of the selected check, with the instance attaining the
// minimum (smallest index on ties).
struct Extremes {
  std::string statistic;
  std::optional<long> min;
  std::optional<long> max;
  std::optional<std::uint64_t> argmin_index;
  nlohmann::json argmin_details;
  // Main only: first instance with the inequality tight.
  std::optional<nlohmann::json> equality_witness;
};

inline constexpr std::size_t kMaxRecordedCounterexamples = 64;

struct VerificationReport {
  CampaignSpec spec;
  std::uint64_t checked = 0;
  std::uint64_t fired = 0;
  std::vector<Counterexample> counterexamples;  // smallest indices first, capped
  Extremes extremes;
  std::map<std::string, std::uint64_t> tallies;
  std::uint64_t elapsed_ms = 0;

  bool success() const noexcept { return counterexamples.empty(); }
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Throws BudgetExceeded, InvalidSpec, NonDivisor.
VerificationReport run_campaign(const CampaignSpec& spec);

// Members of a family whose directions lie in M_d u {0}.
struct SearchMember {
  std::uint64_t index = 0;
  std::vector<Element> function_table;
  std::vector<Element> coefficients;
  std::optional<MonomialForm> form;
};

struct SearchReport {
  std::uint32_t q = 0;
  std::uint32_t d = 0;
  Family family;
  std::uint64_t checked = 0;
  std::vector<SearchMember> members;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

SearchReport run_search(std::uint32_t q, std::uint32_t d, const Family& family, unsigned jobs = 1,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace dirset
