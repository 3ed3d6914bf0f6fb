// bracelab — command-line frontend for brace and Yang-Baxter analyses.
// All output is deterministic: identical inputs give byte-identical output.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "bracelab/analyze.hpp"
#include "bracelab/catalog.hpp"
#include "bracelab/io.hpp"
#include "bracelab/zbrace.hpp"

namespace {

using namespace bracelab;

struct Options {
  std::string format = "text";
  int subbrace_cap = kDefaultSubbraceCap;
  int enum_cap = 0;  // 0 = per-strategy default
};

void emit(const Report& report, const Options& opt) {
  std::cout << (opt.format == "json" ? render_json(report) : render_text(report));
}

ZInt parse_zint(const std::string& s) {
  try {
    return ZInt(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected an integer, got \"" + s + "\"");
  }
}

int run_validate(const std::string& path, const Options& opt) {
  Report r;
  if (detect_file_kind(path) == FileKind::brace) {
    BraceFile f = load_brace_file(path);
    r.push_back({"kind", "brace", "brace"});
    r.push_back({"order", std::to_string(f.brace.order()), f.brace.order()});
  } else {
    Solution s = load_solution(path);
    r.push_back({"kind", "solution", "solution"});
    r.push_back({"size", std::to_string(s.size), s.size});
  }
  r.push_back({"valid", "true", true});
  emit(r, opt);
  return 0;
}

int run_analyze(const std::string& path, const Options& opt) {
  if (detect_file_kind(path) == FileKind::brace) {
    BraceFile f = load_brace_file(path);
    emit(analyze_brace(f.brace, f.name, opt.subbrace_cap), opt);
  } else {
    emit(analyze_solution(load_solution(path)), opt);
  }
  return 0;
}

int run_solution(const std::string& path, const std::string& out_path,
                 const Options& opt) {
  BraceFile f = load_brace_file(path);
  Solution s = associated_solution(f.brace);
  save_solution(s, out_path);
  Report r;
  r.push_back({"size", std::to_string(s.size), s.size});
  r.push_back({"saved", out_path, out_path});
  emit(r, opt);
  return 0;
}

int run_retract(const std::string& path, const std::string& out_path,
                const Options& opt) {
  Solution s = load_solution(path);
  RetractionStep step = retract(s);
  Report r;
  r.push_back({"size", std::to_string(s.size), s.size});
  std::string classes_text;
  nlohmann::ordered_json classes_json = nlohmann::ordered_json::array();
  for (size_t i = 0; i < step.classes.size(); ++i) {
    ElemSet set(s.size);
    for (int e : step.classes[i]) set.insert(e);
    if (i) classes_text += ' ';
    classes_text += set.to_string();
    classes_json.push_back(step.classes[i]);
  }
  r.push_back({"classes", classes_text, classes_json});
  r.push_back({"quotient-size", std::to_string(step.quotient.size),
               step.quotient.size});
  if (!out_path.empty()) {
    save_solution(step.quotient, out_path);
    r.push_back({"saved", out_path, out_path});
  }
  emit(r, opt);
  return 0;
}

int run_level(const std::string& path) {
  Solution s = load_solution(path);
  std::optional<int> level = multipermutation_level_solution(s);
  if (level)
    std::cout << *level << "\n";
  else
    std::cout << "none\n";
  return 0;
}

int run_subbraces(const std::string& path, const Options& opt) {
  BraceFile f = load_brace_file(path);
  auto subs = enumerate_subbraces(f.brace, SubbraceStrategy::lattice, opt.subbrace_cap);
  Report r;
  r.push_back({"order", std::to_string(f.brace.order()), f.brace.order()});
  r.push_back({"count", std::to_string(subs.size()), subs.size()});
  bool dedekind = true;
  for (size_t i = 0; i < subs.size(); ++i) {
    IdealReport ir = is_ideal(f.brace, subs[i]);
    dedekind = dedekind && ir.is_ideal;
    nlohmann::ordered_json j;
    j["members"] = subs[i].sorted_members();
    j["ideal"] = ir.is_ideal;
    std::string text = subs[i].members.to_string();
    text += ir.is_ideal ? " ideal=true" : " ideal=false witness " + ir.witness->to_string();
    if (!ir.is_ideal) j["witness"] = ir.witness->to_string();
    r.push_back({"subbrace-" + std::to_string(i), text, j});
  }
  r.push_back({"dedekind", dedekind ? "true" : "false", dedekind});
  emit(r, opt);
  return 0;
}

int run_quotient(const std::string& path, const std::string& ideal_arg,
                 const std::string& out_path, const Options& opt) {
  BraceFile f = load_brace_file(path);
  ElemSet ideal(f.brace.order());
  std::string tok;
  std::istringstream ss(ideal_arg);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int e = -1;
    try {
      size_t pos = 0;
      e = std::stoi(tok, &pos);
      if (pos != tok.size()) e = -1;
    } catch (const std::exception&) {
    }
    if (e < 0 || e >= f.brace.order())
      throw CLI::ValidationError("--ideal entry \"" + tok + "\" is not an element");
    ideal.insert(e);
  }
  Quotient q = quotient(f.brace, ideal);
  Report r;
  r.push_back({"order", std::to_string(f.brace.order()), f.brace.order()});
  r.push_back({"ideal", ideal.to_string(), detail::set_json(ideal)});
  r.push_back({"quotient-order", std::to_string(q.brace.order()), q.brace.order()});
  std::string proj_text;
  for (size_t i = 0; i < q.projection.size(); ++i) {
    if (i) proj_text += ' ';
    proj_text += std::to_string(q.projection[i]);
  }
  r.push_back({"projection", proj_text, q.projection});
  if (!out_path.empty()) {
    save_brace(q.brace, out_path);
    r.push_back({"saved", out_path, out_path});
  }
  emit(r, opt);
  return 0;
}

int run_enumerate(int order, const std::string& strategy, const Options& opt) {
  EnumStrategy st = strategy == "lambda" ? EnumStrategy::lambda : EnumStrategy::tables;
  Report r;
  r.push_back({"order", std::to_string(order), order});
  r.push_back({"strategy", strategy, strategy});
  int total = 0;
  std::vector<ReportField> rows;
  for (const AbelianGroup& g : abelian_groups(order)) {
    auto braces = enumerate_braces_on(g, st);  // cap was checked by the caller
    for (const FiniteBrace& b : braces) {
      std::string flat;
      for (int i = 0; i < b.order(); ++i)
        for (int j = 0; j < b.order(); ++j) {
          if (!flat.empty()) flat += ',';
          flat += std::to_string(b.mul(i, j));
        }
      nlohmann::ordered_json j;
      j["group"] = g.name();
      j["mul"] = b.mul_table();
      rows.push_back({"brace-" + std::to_string(total),
                      "group=" + g.name() + " mul=[" + flat + "]", j});
      ++total;
    }
  }
  r.push_back({"count", std::to_string(total), total});
  for (auto& row : rows) r.push_back(std::move(row));
  emit(r, opt);
  return 0;
}

int run_zbrace(const std::string& op, const std::vector<std::string>& args) {
  if (op == "mul" || op == "star") {
    if (args.size() != 2)
      throw CLI::ValidationError("zbrace " + op + " needs two integers");
    ZInt n = parse_zint(args[0]), m = parse_zint(args[1]);
    std::cout << (op == "mul" ? z_mul(n, m) : z_star(n, m)) << "\n";
    return 0;
  }
  if (op == "socle") {
    if (args.size() != 1)
      throw CLI::ValidationError("zbrace socle needs one integer");
    ZInt n = parse_zint(args[0]);
    if (z_socle_membership(n))
      std::cout << "true\n";
    else
      std::cout << "false; witness star(" << n << "a,a) = " << z_star(n, 1)
                << "a\n";
    return 0;
  }
  if (op == "ideal-check") {
    if (args.size() != 1)
      throw CLI::ValidationError("zbrace ideal-check needs one integer");
    ZIdealReport r = z_subgroup_ideal_check(parse_zint(args[0]));
    if (r.is_ideal)
      std::cout << "ideal\n";
    else
      std::cout << "not ideal; witness " << r.witness->to_string() << "\n";
    return 0;
  }
  if (op == "dedekind") {
    if (args.size() != 1 || (args[0] != "abelian" && args[0] != "non-abelian"))
      throw CLI::ValidationError("zbrace dedekind needs abelian|non-abelian");
    ZDedekindReport r = z_is_dedekind(args[0] == "non-abelian");
    if (r.is_dedekind)
      std::cout << "dedekind\n";
    else
      std::cout << "not dedekind; witness subgroup " << *r.witness_subgroup
                << "Z with " << r.star_witness->to_string() << "\n";
    return 0;
  }
  throw CLI::ValidationError("unknown zbrace operation \"" + op + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite left braces, their substructure, and the associated "
               "Yang-Baxter solutions"};
  app.require_subcommand(1);

  Options opt;
  if (const char* cap_env = std::getenv("BRACELAB_CAP")) {
    try {
      int cap = std::stoi(cap_env);
      if (cap >= 1) {
        opt.subbrace_cap = cap;
        opt.enum_cap = cap;
      }
    } catch (const std::exception&) {
      std::cerr << "error: BRACELAB_CAP must be a positive integer\n";
      return 2;
    }
  }

  std::string path, out_path, ideal_arg, strategy = "tables";
  int order = 0;
  std::vector<std::string> zargs;
  std::string zop;

  auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "check a brace or solution file");
  validate->add_option("file", path)->required();
  add_format(validate);

  CLI::App* analyze = app.add_subcommand("analyze", "full structural report");
  analyze->add_option("file", path)->required();
  add_format(analyze);

  CLI::App* solution = app.add_subcommand("solution", "associated solution of a brace");
  solution->add_option("file", path)->required();
  solution->add_option("-o,--output", out_path)->required();
  add_format(solution);

  CLI::App* retract_cmd = app.add_subcommand("retract", "one retraction step");
  retract_cmd->add_option("file", path)->required();
  retract_cmd->add_option("-o,--output", out_path);
  add_format(retract_cmd);

  CLI::App* level = app.add_subcommand("level", "multipermutation level of a solution");
  level->add_option("file", path)->required();

  CLI::App* subbraces = app.add_subcommand("subbraces", "all subbraces with ideal flags");
  subbraces->add_option("file", path)->required();
  add_format(subbraces);

  CLI::App* quotient_cmd = app.add_subcommand("quotient", "quotient by an ideal");
  quotient_cmd->add_option("file", path)->required();
  quotient_cmd->add_option("--ideal", ideal_arg, "comma-separated elements")->required();
  quotient_cmd->add_option("-o,--output", out_path);
  add_format(quotient_cmd);

  CLI::App* enumerate = app.add_subcommand("enumerate", "all braces of a given order");
  enumerate->add_option("--order", order)->required();
  enumerate->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"tables", "lambda"}));
  add_format(enumerate);

  CLI::App* zbrace_cmd = app.add_subcommand("zbrace", "symbolic brace on Z");
  zbrace_cmd->add_option("op", zop)->required();
  zbrace_cmd->add_option("args", zargs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*validate) return run_validate(path, opt);
    if (*analyze) return run_analyze(path, opt);
    if (*solution) return run_solution(path, out_path, opt);
    if (*retract_cmd) return run_retract(path, out_path, opt);
    if (*level) return run_level(path);
    if (*subbraces) return run_subbraces(path, opt);
    if (*quotient_cmd) return run_quotient(path, ideal_arg, out_path, opt);
    if (*enumerate) {
      int cap = opt.enum_cap;
      // route through the capped entry point so BRACELAB_CAP applies
      EnumStrategy st = strategy == "lambda" ? EnumStrategy::lambda : EnumStrategy::tables;
      if (cap == 0)
        cap = st == EnumStrategy::tables ? kDefaultTablesEnumCap : kDefaultLambdaEnumCap;
      if (order > cap) throw OrderCapExceeded(order, cap);
      if (order < 1) throw Error("order must be positive");
      return run_enumerate(order, strategy, opt);
    }
    if (*zbrace_cmd) return run_zbrace(zop, zargs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
