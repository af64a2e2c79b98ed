// relcalc: command-line front end for the FO=/CoR translations, the finite
// model evaluator and the verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relcalc/relcalc.hpp"

namespace {

using nlohmann::ordered_json;
using namespace relcalc;

std::string read_input(const std::string& inline_expr, const std::string& file) {
  if (!inline_expr.empty() && !file.empty())
    throw SemanticError("give the input either inline (-e) or as a file (-f), not both");
  if (!inline_expr.empty()) return inline_expr;
  if (file.empty()) throw SemanticError("no input: use -e <expr> or -f <file>");
  std::ifstream in(file);
  if (!in) throw SemanticError("cannot open input file '" + file + "'");
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

ordered_json fo_json(const fo::FormulaPtr& f) {
  if (const auto* n = f->get_if<fo::Atom>())
    return {{"kind", "atom"}, {"pred", n->pred}, {"lhs", n->lhs.name}, {"rhs", n->rhs.name}};
  if (const auto* n = f->get_if<fo::Eq>())
    return {{"kind", "eq"}, {"lhs", n->lhs.name}, {"rhs", n->rhs.name}};
  if (const auto* n = f->get_if<fo::Not>()) return {{"kind", "not"}, {"sub", fo_json(n->sub)}};
  if (const auto* n = f->get_if<fo::And>())
    return {{"kind", "and"}, {"lhs", fo_json(n->lhs)}, {"rhs", fo_json(n->rhs)}};
  const auto* n = f->get_if<fo::Exists>();
  return {{"kind", "exists"}, {"var", n->bound.name}, {"sub", fo_json(n->sub)}};
}

ordered_json term_json(const cor::TermPtr& t) {
  if (const auto* n = t->get_if<cor::RelVar>()) return {{"kind", "rel"}, {"name", n->name}};
  if (t->get_if<cor::Id>()) return {{"kind", "id"}};
  if (const auto* n = t->get_if<cor::Comp>()) return {{"kind", "comp"}, {"sub", term_json(n->sub)}};
  if (const auto* n = t->get_if<cor::Inter>())
    return {{"kind", "inter"}, {"lhs", term_json(n->lhs)}, {"rhs", term_json(n->rhs)}};
  if (const auto* n = t->get_if<cor::Dot>())
    return {{"kind", "dot"}, {"lhs", term_json(n->lhs)}, {"rhs", term_json(n->rhs)}};
  return {{"kind", "conv"}, {"sub", term_json(t->get_if<cor::Conv>()->sub)}};
}

ordered_json qf_json(const cor::QfPtr& f) {
  if (const auto* n = f->get_if<cor::Equation>())
    return {{"kind", "equation"}, {"lhs", term_json(n->lhs)}, {"rhs", term_json(n->rhs)}};
  if (const auto* n = f->get_if<cor::QfNot>()) return {{"kind", "not"}, {"sub", qf_json(n->sub)}};
  const auto* n = f->get_if<cor::QfAnd>();
  return {{"kind", "and"}, {"lhs", qf_json(n->lhs)}, {"rhs", qf_json(n->rhs)}};
}

ordered_json relation_json(const model::Relation& r) {
  ordered_json arr(nlohmann::json::value_t::array);
  for (auto [a, b] : r.pairs()) arr.push_back(ordered_json::array({a, b}));
  return arr;
}

void emit_fo(const fo::FormulaPtr& f, bool as_json) {
  std::cout << (as_json ? fo_json(f).dump() : fo::print_fo(f)) << "\n";
}

void emit_qf(const cor::QfPtr& f, bool as_json) {
  std::cout << (as_json ? qf_json(f).dump() : cor::print_qf(f)) << "\n";
}

struct TranslateOutput {
  std::optional<fo::FormulaPtr> fo_out;
  std::optional<cor::QfPtr> qf_out;
  long long input_size = 0;
  long long output_size = 0;
};

TranslateOutput run_translation(const std::string& from, const std::string& to,
                                const std::string& text) {
  TranslateOutput out;
  if (from == "fo") {
    const fo::FormulaPtr f = fo::parse_fo(text);
    out.input_size = fo::size_fo(f);
    if (to == "cor") {
      const cor::QfPtr eq = trans::fo_to_cor_equation(f);
      out.output_size = cor::size_qf(eq);
      out.qf_out = eq;
      return out;
    }
    if (to == "fo3") {
      const fo::FormulaPtr g = trans::fo_to_fo3(f);
      out.output_size = fo::size_fo(g);
      out.fo_out = g;
      return out;
    }
    throw SemanticError("translation from fo to " + to +
                        " is not available (converse/identity elimination is out of scope)");
  }
  if (from == "cor") {
    if (to == "fo3") {
      const cor::TermPtr t = cor::parse_cor_term(text);
      out.input_size = cor::size_term(t);
      const fo::FormulaPtr g = trans::standard_translation(t);
      out.output_size = fo::size_fo(g);
      out.fo_out = g;
      return out;
    }
    if (to == "sigma2") {
      const cor::QfPtr eq = cor::parse_cor_qf(text);
      out.input_size = cor::size_qf(eq);
      const trans::Sigma2Result s2 = trans::sigma2_normalize(eq);
      out.output_size = cor::size_qf(s2.formula);
      out.qf_out = s2.formula;
      return out;
    }
    if (to == "godel") {
      const cor::QfPtr eq = cor::parse_cor_qf(text);
      out.input_size = cor::size_qf(eq);
      const trans::GodelResult g = trans::godel_reduce(eq);
      out.output_size = fo::size_fo(g.sentence);
      out.fo_out = g.sentence;
      return out;
    }
    throw SemanticError("translation from cor to " + to + " is not available");
  }
  throw SemanticError("unknown source language '" + from + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"relcalc: translations between first-order logic and the calculus of relations,"
               " with a finite-model verification harness"};
  app.require_subcommand(1);

  std::string from, to, expr, file, structure_file;
  int k = 2;
  int max_size = 2;
  uint64_t seed = 42;
  bool as_json = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-e", expr, "inline expression");
    cmd->add_option("-f", file, "read the expression from a file");
  };

  CLI::App* translate = app.add_subcommand("translate", "translate between languages");
  translate->add_option("--from", from, "source language {fo|cor}")->required();
  translate->add_option("--to", to, "target language {cor|fo3|godel|sigma2}")->required();
  add_input(translate);
  translate->add_flag("--json", as_json, "emit the result AST as JSON");

  CLI::App* eval = app.add_subcommand("eval", "evaluate on a finite structure");
  eval->add_option("--from", from, "input language {fo|cor}")->required();
  eval->add_option("-m", structure_file, "structure JSON file")->required();
  add_input(eval);
  eval->add_flag("--json", as_json, "emit JSON");

  CLI::App* check = app.add_subcommand("check-valid", "bounded validity sweep");
  check->add_option("--from", from, "input language {fo|cor}");
  check->add_option("--max-size", max_size, "largest universe size to enumerate");
  add_input(check);

  CLI::App* ktuple = app.add_subcommand("ktuple", "build the k-tuple structure of a model");
  ktuple->add_option("-k", k, "tuple width")->required();
  ktuple->add_option("-m", structure_file, "structure JSON file")->required();

  CLI::App* tseitin_cmd = app.add_subcommand("tseitin", "Tseitin translation of a term");
  add_input(tseitin_cmd);
  tseitin_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* sigma2_cmd = app.add_subcommand("sigma2", "normalize an equation t = top");
  add_input(sigma2_cmd);
  sigma2_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* godel_cmd = app.add_subcommand("godel", "reduce an equation to an E3A* sentence");
  add_input(godel_cmd);
  godel_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* fo3_cmd = app.add_subcommand("fo3", "translate a formula into FO3=");
  add_input(fo3_cmd);
  fo3_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* elim = app.add_subcommand("elim-eq", "eliminate equality from an FO3= formula");
  add_input(elim);
  elim->add_flag("--json", as_json, "emit JSON");

  CLI::App* arity_cmd = app.add_subcommand("arity", "reduce n-ary atoms to binary ones");
  add_input(arity_cmd);
  arity_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* size_report = app.add_subcommand("size-report", "input/output sizes of a translation");
  size_report->add_option("--from", from, "source language {fo|cor}")->required();
  size_report->add_option("--to", to, "target language {cor|fo3|godel|sigma2}")->required();
  add_input(size_report);

  CLI::App* selftest = app.add_subcommand("selftest", "run every verification suite");
  selftest->add_option("--seed", seed, "base seed for the generators");
  selftest->add_flag("--json", as_json, "emit the machine-readable summary");

  app.parse(argc, argv);

  if (translate->parsed()) {
    const TranslateOutput out = run_translation(from, to, read_input(expr, file));
    if (out.fo_out) emit_fo(*out.fo_out, as_json);
    if (out.qf_out) emit_qf(*out.qf_out, as_json);
    return 0;
  }

  if (eval->parsed()) {
    const model::Structure m = model::structure_from_file(structure_file);
    const std::string text = read_input(expr, file);
    if (from == "fo") {
      const fo::FormulaPtr f = fo::parse_fo(text);
      const auto free = fo::free_vars_of(f);
      if (free.empty()) {
        std::cout << (sem::holds_fo(m, f) ? "true" : "false") << "\n";
      } else {
        const sem::AssignmentSet asgn = sem::eval_fo(m, f, free);
        ordered_json arr(nlohmann::json::value_t::array);
        for (const auto& a : asgn.assignments()) {
          ordered_json one;
          for (const auto& [v, val] : a) one[v.name] = val;
          arr.push_back(std::move(one));
        }
        std::cout << arr.dump() << "\n";
      }
      return 0;
    }
    if (from == "cor") {
      const auto parsed = cor::parse_cor(text);
      if (std::holds_alternative<cor::TermPtr>(parsed)) {
        std::cout << relation_json(sem::eval_term(m, std::get<cor::TermPtr>(parsed))).dump()
                  << "\n";
      } else {
        std::cout << (sem::holds_qf(m, std::get<cor::QfPtr>(parsed)) ? "true" : "false") << "\n";
      }
      return 0;
    }
    throw SemanticError("unknown input language '" + from + "'");
  }

  if (check->parsed()) {
    const std::string text = read_input(expr, file);
    sem::ValidityResult result;
    if (from.empty() || from == "fo") {
      const fo::FormulaPtr f = fo::parse_fo(text);
      result = sem::check_valid_upto(f, fo::predicates_of(f), max_size);
    } else if (from == "cor") {
      const cor::QfPtr f = cor::parse_cor_qf(text);
      result = sem::check_valid_upto(f, cor::rel_vars_of(f), max_size);
    } else {
      throw SemanticError("unknown input language '" + from + "'");
    }
    if (result.valid) {
      std::cout << "valid up to size " << result.max_size << "\n";
    } else {
      std::cout << "counterexample: " << model::structure_to_string(*result.counterexample)
                << "\n";
    }
    return 0;
  }

  if (ktuple->parsed()) {
    const model::Structure m = model::structure_from_file(structure_file);
    std::cout << model::structure_to_string(model::k_tuple_structure(m, k, m.names())) << "\n";
    return 0;
  }

  if (tseitin_cmd->parsed()) {
    const cor::TermPtr t = cor::parse_cor_term(read_input(expr, file));
    const trans::TseitinEnv env = trans::tseitin(t);
    if (as_json) {
      ordered_json j;
      j["root"] = env.root;
      ordered_json gamma(nlohmann::json::value_t::array);
      for (const auto& eq : env.gamma) gamma.push_back(cor::print_qf(eq));
      j["gamma"] = std::move(gamma);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << cor::print_qf(harness::tseitin_formula(env)) << "\n";
    }
    return 0;
  }

  if (sigma2_cmd->parsed()) {
    const cor::QfPtr eq = cor::parse_cor_qf(read_input(expr, file));
    emit_qf(trans::sigma2_normalize(eq).formula, as_json);
    return 0;
  }

  if (godel_cmd->parsed()) {
    const cor::QfPtr eq = cor::parse_cor_qf(read_input(expr, file));
    emit_fo(trans::godel_reduce(eq).sentence, as_json);
    return 0;
  }

  if (fo3_cmd->parsed()) {
    emit_fo(trans::fo_to_fo3(fo::parse_fo(read_input(expr, file))), as_json);
    return 0;
  }

  if (elim->parsed()) {
    emit_fo(trans::eliminate_equality(fo::parse_fo(read_input(expr, file))).formula, as_json);
    return 0;
  }

  if (arity_cmd->parsed()) {
    emit_fo(trans::arity_reduce(trans::parse_ext(read_input(expr, file))), as_json);
    return 0;
  }

  if (size_report->parsed()) {
    const TranslateOutput out = run_translation(from, to, read_input(expr, file));
    std::cout << "input size: " << out.input_size << "\n";
    std::cout << "output size: " << out.output_size << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f",
                  static_cast<double>(out.output_size) / static_cast<double>(out.input_size));
    std::cout << "ratio: " << buf << "\n";
    return 0;
  }

  if (selftest->parsed()) {
    harness::GenConfig cfg;
    cfg.seed = seed;
    bool all_passed = true;
    ordered_json reports(nlohmann::json::value_t::array);
    for (const auto& name : harness::suite_names()) {
      const harness::SuiteReport rep = harness::run_suite(name, cfg);
      all_passed = all_passed && rep.passed();
      if (as_json)
        reports.push_back(rep.to_json());
      else
        std::cout << rep.summary_line() << "\n";
    }
    if (as_json) std::cout << reports.dump() << "\n";
    return all_passed ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    return CLI::App{}.exit(e);
  } catch (const relcalc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
