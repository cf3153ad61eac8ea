#include "acbm/fixtures.hpp"
#include "acbm/specfile.hpp"
#include "acbm/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace acbm;

namespace {

enum Exit { ok = 0, check_failure = 1, input_error = 2 };

struct Options {
  std::string file;
  std::string params;
  std::string format = "text";
  std::string fixture;
  std::string output;
};

ReportFormat report_format(const Options &o) {
  return o.format == "machine" ? ReportFormat::machine : ReportFormat::text;
}

Assignment parse_assignment(const std::string &text) {
  Assignment out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos)
      comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--params expects k=v,... but got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    pos = comma + 1;
  }
  return out;
}

fixtures::Fixture apply_params(fixtures::Fixture f, const std::string &params) {
  if (params.empty())
    return f;
  const Assignment a = parse_assignment(params);
  for (const auto &[name, value] : a)
    if (!f.alg.params() || !f.alg.params()->index_of(name))
      throw std::invalid_argument("unknown parameter '" + name + "'");
  return {f.alg.substitute(a), f.s.substitute(a)};
}

fixtures::Fixture load(const Options &o) {
  return apply_params(load_spec_file(o.file), o.params);
}

std::string index_suffix(const Tensor::Index &ix, std::size_t dim) {
  std::string s;
  for (std::size_t k = 0; k < ix.size(); ++k) {
    if (dim > 9 && k > 0)
      s += ",";
    s += std::to_string(ix[k] + 1);
  }
  return s;
}

void print_value(std::ostream &os, const std::string &name, const Scalar &v,
                 const Options &o) {
  if (o.format == "machine")
    os << name << "=" << compact(v) << "\n";
  else
    os << name << " = " << v << "\n";
}

// Nonzero components; with `increasing` only strictly increasing indices.
void print_tensor(std::ostream &os, const std::string &name, const Tensor &t,
                  const Options &o, bool increasing = false) {
  bool any = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.comps()[i].is_zero())
      continue;
    const auto ix = t.unflatten(i);
    if (increasing && !std::is_sorted(ix.begin(), ix.end(), std::less_equal<>()))
      continue;
    print_value(os, name + "_" + index_suffix(ix, t.dim()), t.comps()[i], o);
    any = true;
  }
  if (!any)
    os << name << (o.format == "machine" ? "=0\n" : " = 0\n");
}

void print_connection(std::ostream &os, const std::string &name,
                      const Connection &c, const Options &o) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k)
        v[k] = c(i, j, k);
      const std::string lhs =
          name + "_e" + std::to_string(i + 1) + " e" + std::to_string(j + 1);
      if (o.format == "machine") {
        std::string rhs = format_linear_combination(v);
        std::erase(rhs, ' ');
        os << name << "_e" << i + 1 << "e" << j + 1 << "=" << rhs << "\n";
      } else {
        os << lhs << " = " << format_linear_combination(v) << "\n";
      }
    }
}

int cmd_validate(const Options &o) {
  const auto f = load(o);
  const ValidationReport rep = validate_structure(f.alg, f.s);
  const CheckOutcome jac = jacobi_check(f.alg);
  for (const auto &v : rep.violations)
    std::cout << "violation: " << v << "\n";
  if (!jac) {
    const auto &w = *jac.witness;
    std::cout << "violation: Jacobi identity fails at (" << w.indices[0] + 1
              << "," << w.indices[1] + 1 << "," << w.indices[2] + 1 << "), E"
              << w.indices[3] + 1 << " coefficient " << w.lhs << "\n";
  }
  for (const auto &nt : rep.notes)
    std::cout << "note: " << nt << "\n";
  if (!rep.ok || !jac)
    return input_error;
  std::cout << "valid\n";
  return ok;
}

int cmd_classify(const Options &o) {
  const auto f = load(o);
  const Analysis a = analyze(f.alg, f.s);
  std::cout << most_specific_class(a.classes) << "\n";
  if (o.format == "text") {
    std::cout << "F0: " << a.classes.F0 << ", F3: " << a.classes.F3
              << ", F7: " << a.classes.F7 << ", F3+F7: " << a.classes.F3plusF7
              << "\n"
              << "Killing xi: " << (a.killing ? "yes" : "no") << "\n"
              << "non-Abelian structure: " << (a.non_abelian ? "yes" : "no")
              << "\n";
  }
  return ok;
}

int cmd_connection(const Options &o) {
  const auto f = load(o);
  const Analysis a = analyze(f.alg, f.s);
  print_connection(std::cout, "nabla", a.nabla, o);
  if (!a.D) {
    std::cerr << "error: " << a.phikt_error << "\n";
    return input_error;
  }
  print_connection(std::cout, "D", *a.D, o);
  print_tensor(std::cout, "T", *a.T, o, true);
  return ok;
}

void print_curvature(const Analysis &a, const Options &o) {
  print_tensor(std::cout, "R", a.R, o);
  print_tensor(std::cout, "rho", a.rho, o);
  print_value(std::cout, "tau", a.tau, o);
  print_value(std::cout, "norm_nabla_phi", a.norm_nabla_phi, o);
  if (a.D) {
    print_tensor(std::cout, "K", *a.K, o);
    print_tensor(std::cout, "rhoD", *a.rhoD, o);
    print_value(std::cout, "tauD", *a.tauD, o);
    print_value(std::cout, "norm_T", *a.normT, o);
  } else {
    std::cout << "# " << a.phikt_error << "\n";
  }
}

int cmd_curvature(const Options &o) {
  const auto f = load(o);
  print_curvature(analyze(f.alg, f.s), o);
  return ok;
}

int run_verify(const fixtures::Fixture &f, const Options &o) {
  const auto results = run_suite(f.alg, f.s);
  print_report(std::cout, results, report_format(o));
  return any_failed(results) ? check_failure : ok;
}

int cmd_verify(const Options &o) { return run_verify(load(o), o); }

int cmd_paper_example(const Options &o) {
  const auto f = apply_params(fixtures::paper_family(), o.params);
  const Analysis a = analyze(f.alg, f.s);
  std::cout << "class: " << most_specific_class(a.classes) << "\n";
  print_connection(std::cout, "nabla", a.nabla, o);
  if (a.D) {
    print_connection(std::cout, "D", *a.D, o);
    print_tensor(std::cout, "T", *a.T, o, true);
  }
  print_curvature(a, o);
  return run_verify(f, o);
}

int cmd_export(const Options &o) {
  const auto f = fixtures::fixture_by_name(o.fixture);
  if (!f) {
    std::cerr << "error: unknown fixture '" << o.fixture << "'\n";
    return input_error;
  }
  const std::string text = export_spec(f->alg, f->s);
  if (o.output.empty()) {
    std::cout << text;
    return ok;
  }
  std::ofstream out(o.output);
  if (!(out << text)) {
    std::cerr << "error: cannot write " << o.output << "\n";
    return input_error;
  }
  return ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Almost contact B-metric structures on Lie algebras"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options &)> action;

  auto common = [&](CLI::App *cmd, bool with_file) {
    cmd->add_option("--params", o.params, "Parameter values k=v,...");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));
    if (with_file)
      cmd->add_option("file", o.file, "Spec file")->required();
  };
  struct Command {
    const char *name;
    const char *help;
    int (*run)(const Options &);
  };
  const Command commands[] = {
      {"validate", "Check the structure relations and the Jacobi identity", cmd_validate},
      {"classify", "Print the most specific class", cmd_classify},
      {"connection", "Print the Levi-Civita and phiKT connections", cmd_connection},
      {"curvature", "Print curvature, Ricci and scalar curvatures", cmd_curvature},
      {"verify", "Run the verification suite", cmd_verify},
  };
  for (const auto &c : commands) {
    auto *cmd = app.add_subcommand(c.name, c.help);
    common(cmd, true);
    cmd->callback([&action, run = c.run] { action = run; });
  }
  auto *paper = app.add_subcommand("paper-example",
                                   "Run the full pipeline on the five-dimensional family");
  common(paper, false);
  paper->callback([&] { action = cmd_paper_example; });
  auto *exp = app.add_subcommand("export", "Write a built-in fixture as a spec file");
  exp->add_option("fixture", o.fixture, "Fixture name")
      ->required()
      ->check(CLI::IsMember(fixtures::fixture_names()));
  exp->add_option("path", o.output, "Output file (default: standard output)");
  exp->callback([&] { action = cmd_export; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    return action(o);
  } catch (const ParseError &e) {
    std::cerr << o.file << ":" << e.line() << ":" << e.column() << ": "
              << e.message() << "\n";
  } catch (const ValidationError &e) {
    for (const auto &v : e.violations())
      std::cerr << "validation error: " << v << "\n";
  } catch (const ClassGateError &e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return input_error;
}
