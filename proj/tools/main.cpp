// Command-line front end: simplifiability analysis, simplification synthesis,
// forgetting, equivalence checking, and bounded verification for propositional
// extended logic programs.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "relsimp/json_io.hpp"
#include "relsimp/synthesis.hpp"
#include "relsimp/verify.hpp"

using namespace relsimp;

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::vector<std::string> split_atoms(const std::string& csv) {
  std::vector<std::string> out;
  std::string current;
  for (char c : csv) {
    if (c == ',' || c == ' ') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw config_error("cannot write '" + path + "'");
  out << content;
}

Program load_program(const std::string& path) {
  ParseOutcome outcome = parse_program_ex(read_file(path));
  for (const auto& warning : outcome.warnings) {
    std::cerr << "warning: " << path << ": " << warning << "\n";
  }
  return outcome.program;
}

std::string pair_line(const Universe& u, SEPair pr) {
  return "<" + u.set_text(pr.here) + ", " + u.set_text(pr.there) + ">";
}

struct Options {
  std::vector<std::string> inputs;
  std::string remove_csv;
  std::string context_csv;
  bool context_given = false;
  bool remove_given = false;
  bool json = false;
  bool prune = false;
  std::string output;
  ContextBounds bounds;
};

RelCtx build_ctx(const Program& p, const Options& opt) {
  RelCtx ctx;
  ctx.universe = p.full();
  ctx.remove = p.universe->mask_of(split_atoms(opt.remove_csv));
  ctx.context = opt.context_given ? p.universe->mask_of(split_atoms(opt.context_csv)) : p.full();
  return ctx;
}

std::string describe_delta(const Universe& u, const char* name, const DeltaCondition& c) {
  std::string out = std::string("  delta ") + name + ": " + (c.holds ? "holds" : "fails");
  if (c.witness) out += ", witness " + pair_line(u, *c.witness);
  return out;
}

void print_simplifiability_text(std::ostream& os, const std::string& label, const Universe& u,
                                const RelCtx& ctx, const SimplifiabilityReport& report) {
  os << label << ": " << (report.simplifiable ? "simplifiable" : "not simplifiable")
     << "  (remove " << u.set_text(ctx.remove) << ", context " << u.set_text(ctx.context)
     << ")\n";
  os << describe_delta(u, "s1", report.delta.s1) << "\n";
  os << describe_delta(u, "s2", report.delta.s2) << "\n";
  os << describe_delta(u, "s3", report.delta.s3) << "\n";
  os << "  family criterion: " << (report.omega.satisfied ? "satisfied" : "not satisfied");
  if (report.omega.witness_y) {
    os << ", witness Y " << u.set_text(*report.omega.witness_y) << " ("
       << report.omega.witness_count << " witness"
       << (report.omega.witness_count == 1 ? "" : "es") << ")";
  }
  os << "\n";
  if (report.omega.witness_family) {
    os << "  family at the witness:";
    for (const auto& entry : report.omega.witness_family->distinct_sets()) {
      os << " {";
      for (std::size_t i = 0; i < entry.size(); ++i) {
        if (i) os << ", ";
        os << u.set_text(entry[i]);
      }
      os << "}";
    }
    os << "\n";
  }
}

void print_verification_text(std::ostream& os, const VerificationReport& report) {
  os << "semantic check: " << (report.semantic_pass ? "pass" : "fail") << "\n";
  os << "operational check: " << (report.operational_pass ? "pass" : "fail") << " ("
     << report.contexts_checked << " contexts)\n";
  if (report.counterexample) {
    os << "counterexample context:\n";
    std::istringstream lines(format_program(report.counterexample->context));
    std::string line;
    while (std::getline(lines, line)) os << "  " << line << "\n";
    auto print_sets = [&](const char* label, const std::vector<std::vector<std::string>>& sets) {
      os << label;
      for (const auto& s : sets) {
        os << " {";
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i) os << ", ";
          os << s[i];
        }
        os << "}";
      }
      os << "\n";
    };
    print_sets("projected answer sets with the original:", report.counterexample->as_p);
    print_sets("answer sets with the candidate:", report.counterexample->as_q);
  } else {
    os << "no counterexample found within bounds\n";
  }
}

std::string output_header(const Program& p, Mask removed, Mask context, Mask projected,
                          Mask forgotten, const std::string& status) {
  std::string out;
  out += "% removed: " + p.universe->set_text(removed) + "\n";
  out += "% context: " + p.universe->set_text(context) + "\n";
  out += "% projected away: " + p.universe->set_text(projected) + "\n";
  out += "% forgotten: " + p.universe->set_text(forgotten) + "\n";
  out += "% verification: " + status + "\n";
  return out;
}

void emit_program(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    write_file(opt.output, text);
  }
}

int run_answer_sets(const Options& opt) {
  Program p = load_program(opt.inputs.at(0));
  auto sets = answer_sets(p);
  if (opt.json) {
    std::cout << interpretations_json(*p.universe, sets).dump(2) << "\n";
  } else {
    for (Mask m : sets) std::cout << p.universe->set_text(m) << "\n";
  }
  return kExitPositive;
}

int run_se_models(const Options& opt) {
  Program p = load_program(opt.inputs.at(0));
  SEModelSet models = opt.context_given
                          ? rel_se_models(p, p.universe->mask_of(split_atoms(opt.context_csv)))
                          : se_models(p);
  if (opt.json) {
    std::cout << se_model_set_json(models).dump(2) << "\n";
  } else {
    for (SEPair pr : models.pairs) std::cout << pair_line(*p.universe, pr) << "\n";
  }
  return kExitPositive;
}

int run_ab_se_models(const Options& opt) {
  Program p = load_program(opt.inputs.at(0));
  RelCtx ctx = build_ctx(p, opt);
  SEModelSet models = ab_se_models(p, ctx);
  if (opt.json) {
    std::cout << se_model_set_json(models).dump(2) << "\n";
  } else {
    for (SEPair pr : models.pairs) std::cout << pair_line(*models.universe, pr) << "\n";
  }
  return kExitPositive;
}

int run_check(const Options& opt) {
  bool all_simplifiable = true;
  nlohmann::json batch = nlohmann::json::array();
  for (const auto& path : opt.inputs) {
    Program p = load_program(path);
    RelCtx ctx = build_ctx(p, opt);
    SimplifiabilityReport report = is_simplifiable(p, ctx);
    all_simplifiable = all_simplifiable && report.simplifiable;
    if (opt.json) {
      nlohmann::json entry = simplifiability_json(*p.universe, report);
      entry["file"] = path;
      batch.push_back(entry);
    } else {
      print_simplifiability_text(std::cout, path, *p.universe, ctx, report);
    }
  }
  if (opt.json) {
    std::cout << (batch.size() == 1 ? batch[0] : batch).dump(2) << "\n";
  } else if (opt.inputs.size() > 1) {
    std::cout << "summary: " << (all_simplifiable ? "all" : "not all") << " of "
              << opt.inputs.size() << " inputs simplifiable\n";
  }
  return all_simplifiable ? kExitPositive : kExitNegative;
}

int run_simplify(const Options& opt) {
  Program p = load_program(opt.inputs.at(0));
  RelCtx ctx = build_ctx(p, opt);
  try {
    Program out = simplify(p, ctx);
    if (opt.prune) out = prune_redundant_rules(out);
    std::string header =
        output_header(p, ctx.remove, ctx.context, ctx.remove & ctx.context,
                      ctx.remove & ~ctx.context, "relativized SE-model contract holds");
    emit_program(opt, header + format_program(out));
    return kExitPositive;
  } catch (const simplify_error& e) {
    std::cerr << "error: negative: " << e.what() << "\n";
    print_simplifiability_text(std::cerr, opt.inputs.at(0), *p.universe, ctx, e.report());
    return kExitNegative;
  }
}

int run_forget(const Options& opt) {
  Program p = load_program(opt.inputs.at(0));
  Mask a = p.universe->mask_of(split_atoms(opt.remove_csv));
  Mask s =
      opt.context_given ? p.universe->mask_of(split_atoms(opt.context_csv)) : (p.full() & ~a);
  try {
    ForgetResult result = forget_rsp(p, a, s);
    Program out_program = opt.prune ? prune_redundant_rules(result.program) : result.program;
    std::string header =
        output_header(p, a, s, 0, a, "relativized SE-model contract holds");
    emit_program(opt, header + format_program(out_program));
    return kExitPositive;
  } catch (const forget_error& e) {
    std::cerr << "error: negative: " << e.what() << "\n";
    if (e.omega().witness_y) {
      std::cerr << "  witness Y " << p.universe->set_text(*e.omega().witness_y) << "\n";
    }
    return kExitNegative;
  }
}

int run_verify(const Options& opt) {
  Program p = load_program(opt.inputs.at(0));
  Program q = load_program(opt.inputs.at(1));
  RelCtx ctx = build_ctx(p, opt);
  VerificationReport report = check_simplification(p, q, ctx, opt.bounds);
  if (opt.json) {
    std::cout << verification_json(report).dump(2) << "\n";
  } else {
    print_verification_text(std::cout, report);
  }
  return report.pass() ? kExitPositive : kExitNegative;
}

int run_equiv(const Options& opt) {
  if (opt.remove_given) return run_verify(opt);
  Program p = load_program(opt.inputs.at(0));
  Program q = load_program(opt.inputs.at(1));
  Mask b = opt.context_given ? p.universe->mask_of(split_atoms(opt.context_csv)) : p.full();
  Program q_hosted = q.with_universe(p.universe);
  bool equivalent = check_relativized_equivalence(p, q_hosted, b);
  if (opt.json) {
    std::cout << nlohmann::json{{"equivalent", equivalent}}.dump(2) << "\n";
  } else {
    std::cout << (equivalent ? "equivalent" : "not equivalent") << " relative to "
              << p.universe->set_text(b) << "\n";
  }
  return equivalent ? kExitPositive : kExitNegative;
}

int run_qbf_gen(const Options& opt) {
  QbfInstance phi = parse_qbf(read_file(opt.inputs.at(0)));
  QbfReduction red = qbf_reduce(phi);
  bool value = qbf_eval(phi);
  std::string prefix = opt.output.empty() ? opt.inputs.at(0) : opt.output;
  write_file(prefix + ".p.lp", format_program(red.p));
  write_file(prefix + ".q.lp", format_program(red.q));
  std::string a_line;
  for (std::size_t i = 0; i < red.a_atoms.size(); ++i) {
    if (i) a_line += ",";
    a_line += red.a_atoms[i];
  }
  write_file(prefix + ".a.txt", a_line + "\n");
  if (opt.json) {
    std::cout << nlohmann::json{{"value", value},
                                {"p", prefix + ".p.lp"},
                                {"q", prefix + ".q.lp"},
                                {"removeSet", prefix + ".a.txt"}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "formula value: " << (value ? "true" : "false") << "\n";
    std::cout << "wrote " << prefix << ".p.lp, " << prefix << ".q.lp, " << prefix << ".a.txt\n";
  }
  return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativized simplification toolkit for propositional extended logic programs"};
  app.footer(
      "Flag choices cover the equivalence spectrum:\n"
      "  --remove '' --relative-to ''    plain equivalence of answer sets\n"
      "  --remove ''                     strong equivalence\n"
      "  --remove '' --relative-to B     relativized strong equivalence\n"
      "  --remove A                      strong simplification (context = whole universe)\n"
      "  --remove A --relative-to comp   strong persistence forgetting\n"
      "  --remove A --relative-to C      relativized strong persistence, C in the complement\n"
      "  --remove A --relative-to ''     faithful abstraction");
  app.require_subcommand(1);

  Options opt;
  int max_rules = -1, max_body = -1;
  std::size_t context_limit = 0;
  bool no_witnesses = false, no_dneg = false;

  auto add_common = [&](CLI::App* cmd, int n_inputs, bool many = false) {
    auto* positional = cmd->add_option("files", opt.inputs, "input file(s)");
    if (many) {
      positional->expected(-n_inputs)->required();
    } else {
      positional->expected(n_inputs)->required();
    }
    cmd->add_option("-A,--remove", opt.remove_csv, "atoms to remove (comma separated)");
    cmd->add_option("-B,--relative-to", opt.context_csv,
                    "context vocabulary (comma separated; defaults to the whole universe)");
    cmd->add_flag("--json", opt.json, "emit JSON reports");
    cmd->add_option("-o,--output", opt.output, "output path");
    cmd->add_option("--max-rules", max_rules, "context bound: rules per context program");
    cmd->add_option("--max-body", max_body, "context bound: body literals per rule");
    cmd->add_option("--context-limit", context_limit, "abort above this many contexts");
    cmd->add_flag("--no-proof-witnesses", no_witnesses, "skip the proof-shaped context family");
    cmd->add_flag("--simplify-output", opt.prune,
                  "greedily drop output rules whose removal keeps the SE-models");
    cmd->add_flag("--no-double-negation", no_dneg, "exclude doubly negated context bodies");
  };

  auto* answer_sets_cmd = app.add_subcommand("answer-sets", "print the answer sets");
  add_common(answer_sets_cmd, 1);
  auto* se_cmd = app.add_subcommand("se-models", "print the (relativized) SE-models");
  add_common(se_cmd, 1);
  auto* ab_cmd = app.add_subcommand("ab-se-models", "print the projected relativized models");
  add_common(ab_cmd, 1);
  auto* check_cmd = app.add_subcommand("check", "decide relativized simplifiability");
  add_common(check_cmd, 1, /*many=*/true);
  auto* simplify_cmd = app.add_subcommand("simplify", "synthesize the simplification");
  add_common(simplify_cmd, 1);
  auto* verify_cmd = app.add_subcommand("verify", "verify a candidate simplification");
  add_common(verify_cmd, 2);
  auto* forget_cmd = app.add_subcommand("forget", "forget atoms under relativized persistence");
  add_common(forget_cmd, 1);
  auto* equiv_cmd = app.add_subcommand("equiv", "check (relativized) equivalence");
  add_common(equiv_cmd, 2);
  auto* qbf_cmd = app.add_subcommand("qbf-gen", "generate the reduction pair from a formula");
  add_common(qbf_cmd, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPositive : kExitUsage;
  }

  try {
    for (auto* cmd : {answer_sets_cmd, se_cmd, ab_cmd, check_cmd, simplify_cmd, verify_cmd,
                      forget_cmd, equiv_cmd, qbf_cmd}) {
      if (cmd->parsed()) {
        opt.remove_given = cmd->count("--remove") > 0;
        opt.context_given = cmd->count("--relative-to") > 0;
        if (max_rules >= 0) opt.bounds.max_rules = max_rules;
        if (max_body >= 0) opt.bounds.max_body_literals = max_body;
        if (context_limit > 0) opt.bounds.enumeration_limit = context_limit;
        opt.bounds.include_proof_witness_family = !no_witnesses;
        opt.bounds.allow_double_negation = !no_dneg;
      }
    }

    if (answer_sets_cmd->parsed()) return run_answer_sets(opt);
    if (se_cmd->parsed()) return run_se_models(opt);
    if (ab_cmd->parsed()) return run_ab_se_models(opt);
    if (check_cmd->parsed()) return run_check(opt);
    if (simplify_cmd->parsed()) return run_simplify(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
    if (forget_cmd->parsed()) return run_forget(opt);
    if (equiv_cmd->parsed()) return run_equiv(opt);
    if (qbf_cmd->parsed()) return run_qbf_gen(opt);
  } catch (const parse_error& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bound_overflow_error& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitUsage;
  } catch (const config_error& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitUsage;
  } catch (const verification_error& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
