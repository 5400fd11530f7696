#include "dirset/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dirset/campaign.hpp"
#include "dirset/criteria.hpp"
#include "dirset/directions.hpp"
#include "dirset/error.hpp"
#include "dirset/io.hpp"

namespace dirset {
namespace {

struct Options {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::uint32_t q = 0;
  std::string poly;
  std::string table;
  std::string theorem;
  std::optional<std::uint32_t> d;
  std::string family = "all";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;
  std::string out_path;
  std::string format = "json";
};

std::uint64_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("DIRSET_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidSpec, std::string("DIRSET_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultBudget;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidSpec, "cannot write " + o.out_path);
  file << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json form_json(const std::optional<MonomialForm>& form) {
  if (!form) return nullptr;
  return nlohmann::json{{"a", form->a}, {"k", form->k}, {"b", form->b}};
}

int cmd_field(const Options& o, std::ostream& out) {
  const auto field = FieldContext::build(o.p, o.n);
  if (o.format == "human") {
    std::string text = "GF(" + std::to_string(field->p()) + "^" + std::to_string(field->n()) +
                       "), q = " + std::to_string(field->q()) + "\nmodulus: [" +
                       format_index_list(field->modulus()) + "]\ngenerator: " + std::to_string(field->generator()) +
                       " (" + field->render(field->generator()) + ")\n";
    emit(o, text, out);
  } else {
    emit(o, dump(field->to_json()), out);
  }
  return kExitSuccess;
}

nlohmann::json verdict_json(const Verdict& v) {
  return nlohmann::json{{"verdict", v.proven() ? "PermutationProven" : "Inconclusive"},
                        {"ratio_size", v.set_size},
                        {"threshold", v.threshold}};
}

int cmd_directions(const Options& o, std::ostream& out) {
  const auto field = FieldContext::build_q(o.q);
  const bool as_table = !o.table.empty();
  const FqFunction f = parse_function(field, as_table ? o.table : o.poly, as_table);
  const FieldContext& ctx = *field;

  const auto directions = direction_set(f);
  const ElementSet inv = inverse_set(ctx, directions.set());
  const ElementSet ratio = product_set(ctx, inv, directions.set());
  const bool perm = is_permutation_oracle(f);

  nlohmann::json j;
  j["field"] = ctx.to_json();
  j["function"] = {{"coefficients", f.coefficients()}, {"table", f.values()}, {"degree", f.degree()}};
  j["directions"] = directions.set().elements();
  j["direction_count"] = directions.size();
  j["ratio_size"] = ratio.size();
  j["triple_size"] = product_set(ctx, ratio, inv).size();
  j["permutation"] = perm;
  if (f.is_constant()) {
    j["main2"] = "not applicable: constant function";
    j["cor1"] = "not applicable: constant function";
  } else {
    j["main2"] = verdict_json(main2_criterion(f));
    j["cor1"] = verdict_json(cor1_criterion(f));
  }
  const auto cor2 = cor2_criterion(f);
  j["cor2"] = {{"verdict", cor2.form_proven ? "FormProven" : "Inconclusive"}, {"triple_size", cor2.triple_size}};
  j["monomial_form"] = form_json(detect_monomial_form(f));
  nlohmann::json contained = nlohmann::json::object();
  for (std::uint32_t d = 2; d < ctx.q(); ++d) {
    if ((ctx.q() - 1) % d != 0) continue;
    contained[std::to_string(d)] = sziklai_classify(f, d).contained;
  }
  j["contained_in_subgroup_union_zero"] = contained;

  if (o.format != "human") {
    emit(o, dump(j), out);
    return kExitSuccess;
  }
  std::string text;
  text += "q = " + std::to_string(ctx.q()) + ", f = [" + format_index_list(f.coefficients()) + "] (degree " +
          std::to_string(f.degree()) + ")\n";
  text += "table: " + format_index_list(f.values()) + "\n";
  text += "D_f = {";
  bool first = true;
  directions.set().for_each([&](Element e) {
    text += (first ? "" : ", ") + ctx.render(e);
    first = false;
  });
  text += "}, |D_f| = " + std::to_string(directions.size()) + "\n";
  text += "|D^-1 D| = " + std::to_string(ratio.size()) + ", |D^-1 D D^-1| = " + std::to_string(cor2.triple_size) + "\n";
  text += std::string("permutation: ") + (perm ? "yes" : "no") + "\n";
  auto verdict_text = [](const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v["verdict"].get<std::string>();
  };
  text += "main2: " + verdict_text(j["main2"]) + "\ncor1: " + verdict_text(j["cor1"]) +
          "\ncor2: " + verdict_text(j["cor2"]) + "\n";
  const auto form = detect_monomial_form(f);
  text += form ? "form: a = " + std::to_string(form->a) + ", k = " + std::to_string(form->k) +
                     ", b = " + std::to_string(form->b) + "\n"
               : std::string("form: none\n");
  emit(o, text, out);
  return kExitSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  CampaignSpec spec;
  spec.q = o.q;
  spec.theorem = parse_theorem(o.theorem);
  spec.family = Family::parse(o.family, o.seed);
  spec.d = o.d;
  spec.jobs = o.jobs;
  spec.budget = resolve_budget(o);
  const auto report = run_campaign(spec);
  if (o.format == "csv") {
    emit(o, report.to_csv(), out);
  } else if (o.format == "human") {
    std::string text = std::string(to_string(spec.theorem)) + " over q = " + std::to_string(spec.q) + ", family " +
                       spec.family.name() + ": checked " + std::to_string(report.checked) + ", fired " +
                       std::to_string(report.fired) + ", counterexamples " +
                       std::to_string(report.tallies.at("counterexamples_total")) + "\n";
    emit(o, text, out);
  } else {
    emit(o, dump(report.to_json()), out);
  }
  return report.success() ? kExitSuccess : kExitCounterexample;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (!o.d) throw Error(ErrorCode::InvalidSpec, "search needs --d");
  const auto report = run_search(o.q, *o.d, Family::parse(o.family, o.seed), o.jobs, resolve_budget(o));
  if (o.format == "csv") {
    emit(o, report.to_csv(), out);
  } else if (o.format == "human") {
    std::string text = std::to_string(report.members.size()) + " members\n";
    for (const auto& m : report.members) {
      text += "[" + format_index_list(m.coefficients) + "]";
      if (m.form)
        text += "  a = " + std::to_string(m.form->a) + ", k = " + std::to_string(m.form->k) +
                ", b = " + std::to_string(m.form->b);
      text += "\n";
    }
    emit(o, text, out);
  } else {
    emit(o, dump(report.to_json()), out);
  }
  // A contained member without a form would contradict the classification.
  for (const auto& m : report.members)
    if (!m.form) return kExitCounterexample;
  return kExitSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Direction sets of functions over finite fields"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "csv", "human"};

  auto* field = app.add_subcommand("field", "Describe GF(p^n)");
  field->add_option("--p", o.p, "characteristic")->required();
  field->add_option("--n", o.n, "extension degree");
  field->add_option("--format", o.format)->check(CLI::IsMember({"json", "human"}));
  field->add_option("--out", o.out_path);

  auto* dirs = app.add_subcommand("directions", "Analyse the direction set of one function");
  dirs->add_option("--q", o.q, "field size p^n")->required();
  auto* poly_opt = dirs->add_option("--poly", o.poly, "coefficients, constant term first");
  auto* table_opt = dirs->add_option("--table", o.table, "q values f(0),...,f(q-1)");
  poly_opt->excludes(table_opt);
  dirs->add_option("--format", o.format)->check(CLI::IsMember({"json", "human"}));
  dirs->add_option("--out", o.out_path);

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--theorem", o.theorem, "main|main2|cor1|conj|cor2|result1|result2")->required();
  verify->add_option("--q", o.q)->required();
  verify->add_option("--d", o.d, "subgroup index");
  verify->add_option("--family", o.family, "all|poly-deg-D|monic-deg-D|monomial-forms|random-N");
  verify->add_option("--seed", o.seed);
  verify->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--budget", o.budget, "instance cap (overrides DIRSET_BUDGET)");
  verify->add_option("--out", o.out_path);
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* search = app.add_subcommand("search", "List functions with D_f inside M_d u {0}");
  search->add_option("--q", o.q)->required();
  search->add_option("--d", o.d)->required();
  search->add_option("--family", o.family);
  search->add_option("--seed", o.seed);
  search->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  search->add_option("--budget", o.budget);
  search->add_option("--out", o.out_path);
  search->add_option("--format", o.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*field) return cmd_field(o, out);
    if (*dirs) {
      if (o.poly.empty() == o.table.empty()) throw Error(ErrorCode::InvalidSpec, "give exactly one of --poly, --table");
      return cmd_directions(o, out);
    }
    if (*verify) return cmd_verify(o, out);
    if (*search) return cmd_search(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudgetExceeded : kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace dirset
