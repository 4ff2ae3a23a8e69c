// Command-line front end. Exit codes: 0 success, 1 domain failure
// (validation, definedness, law violations), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orientals/axioms.hpp"
#include "orientals/canonical.hpp"
#include "orientals/enumeration.hpp"
#include "orientals/json_io.hpp"
#include "orientals/mutants.hpp"
#include "orientals/simplicial.hpp"
#include "orientals/synthesis.hpp"
#include "orientals/wedge.hpp"

namespace {

using namespace orientals;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OrMorphism load(const std::string& path) {
  try {
    return parse_morphism(slurp(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.position(), e.what());
  }
}

ExprPtr load_expression(const std::string& arg) {
  std::ifstream probe(arg);
  return parse_sexpr(probe ? slurp(arg) : arg);
}

std::vector<std::vector<OrMorphism>> or_sample(int n, int max_dim) {
  std::vector<std::vector<OrMorphism>> sample;
  for (int m = 0; m <= max_dim; ++m) sample.push_back(enumerate_or(m, n));
  return sample;
}

template <class C>
LawReport run_suite(const C& carrier, const std::vector<std::vector<OrMorphism>>& sample, const std::string& suite) {
  LawReport report;
  if (suite == "axioms" || suite == "all") report.merge(check_axioms(carrier, sample));
  if (suite == "derived" || suite == "all")
    report.merge(check_derived_laws(carrier, sample, canonical_lambda_instances(sample)));
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the nerves of orientals Or(-,n)"};
  app.require_subcommand(1);

  int m = 0, n = 0, index = 0, max_dim = 0;
  long long cap = 1;
  unsigned threads = 1;
  bool strict = false;
  std::string format = "text", file, file2, suite = "all", mutant, image;

  auto* en = app.add_subcommand("enumerate", "List Or(m,n)");
  en->add_option("--m", m, "source dimension")->required()->check(CLI::Range(0, kMaxSourceDim));
  en->add_option("--n", n, "target dimension")->required()->check(CLI::Range(0, kMaxAmbient));
  en->add_option("--cap", cap, "largest image coefficient")->check(CLI::PositiveNumber);
  en->add_option("--threads", threads, "worker threads");
  en->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* va = app.add_subcommand("validate", "Check that a document is a morphism of orientals");
  va->add_option("file", file)->required();
  va->add_flag("--strict", strict, "also reject coefficients above 1");

  auto* co = app.add_subcommand("compose", "Composite G after F");
  co->add_option("g", file)->required();
  co->add_option("f", file2)->required();

  auto* fa = app.add_subcommand("face", "Face operation");
  fa->add_option("i", index)->required();
  fa->add_option("file", file)->required();

  auto* de = app.add_subcommand("deg", "Degeneracy operation");
  de->add_option("i", index)->required();
  de->add_option("file", file)->required();

  auto* we = app.add_subcommand("wedge", "Wedge X ∧_i Y");
  we->add_option("i", index)->required();
  we->add_option("x", file)->required();
  we->add_option("y", file2)->required();

  auto* ca = app.add_subcommand("canonical", "Canonical decomposition");
  ca->add_option("file", file)->required();

  auto* sy = app.add_subcommand("synthesize", "Expression in terms of iota_n");
  sy->add_option("file", file)->required();

  auto* ev = app.add_subcommand("evaluate", "Evaluate an expression in Or(-,N)");
  ev->add_option("expr", file, "s-expression file or inline text")->required();
  ev->add_option("--image", image, "morphism document for the image of iota_n (default iota_n)");
  ev->add_option("--n", n, "expected leaf dimension");

  auto* ch = app.add_subcommand("check", "Run the law suites on Or(-,n)");
  ch->add_option("--n", n)->required()->check(CLI::Range(0, kMaxAmbient));
  ch->add_option("--max-dim", max_dim)->required()->check(CLI::Range(0, kMaxSourceDim - 1));
  ch->add_option("--suite", suite)->check(CLI::IsMember({"axioms", "derived", "all"}));
  ch->add_option("--mutant", mutant)->check(CLI::IsMember({"wrong-wedge", "shifted-degeneracy", "exchange"}));

  auto* ce = app.add_subcommand("census", "Image-coefficient census of the generation closure");
  ce->add_option("--n", n)->required()->check(CLI::Range(0, kMaxAmbient));
  ce->add_option("--max-dim", max_dim)->required()->check(CLI::Range(0, kMaxSourceDim - 1));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostream& out = std::cout;
  try {
    if (en->parsed()) {
      const auto xs = enumerate_or(m, n, {cap, threads});
      if (format == "json")
        out << dump(to_json(xs));
      else
        out << "count: " << xs.size() << "\n";
    } else if (va->parsed()) {
      const ChainMap f = parse_chain_map(slurp(file));
      const OrMorphism x = strict ? validate_strict(f) : validate(f);
      out << "valid: Or(" << x.source_dim() << "," << x.target_dim() << ") terminus " << x.terminus() << " rank "
          << x.rank() << " corank " << x.corank() << "\n";
    } else if (co->parsed()) {
      out << dump(to_json(compose(load(file), load(file2))));
    } else if (fa->parsed()) {
      out << dump(to_json(face(index, load(file))));
    } else if (de->parsed()) {
      out << dump(to_json(degeneracy(index, load(file))));
    } else if (we->parsed()) {
      out << dump(to_json(wedge(index, load(file), load(file2))));
    } else if (ca->parsed()) {
      out << dump(to_json(decompose(load(file))));
    } else if (sy->parsed()) {
      out << to_sexpr(synthesize(load(file))) << "\n";
    } else if (ev->parsed()) {
      const ExprPtr e = load_expression(file);
      if (ev->count("--n") && e->leaf_dimension() != n)
        throw UsageError("expression is built over iota " + std::to_string(e->leaf_dimension()) + ", not iota " +
                         std::to_string(n));
      const OrMorphism u = image.empty() ? identity(e->leaf_dimension()) : load(image);
      out << dump(to_json(evaluate(e, OrCarrier{}, u)));
    } else if (ch->parsed()) {
      const auto sample = or_sample(n, max_dim);
      LawReport report;
      if (mutant == "wrong-wedge")
        report = run_suite(WrongWedgeCarrier{}, sample, suite);
      else if (mutant == "shifted-degeneracy")
        report = run_suite(ShiftedDegeneracyCarrier{}, sample, suite);
      else if (mutant == "exchange")
        report = run_suite(ExchangeBreakingCarrier{}, sample, suite);
      else
        report = run_suite(OrCarrier{}, sample, suite);
      out << report.summary();
      out << "total: " << report.total_instances() << " instances, " << report.total_violations() << " violations\n";
      out << (report.ok() ? "result: pass\n" : "result: fail\n");
      return report.ok() ? 0 : 1;
    } else if (ce->parsed()) {
      const CensusReport r = coefficient_census(n, max_dim);
      out << "n " << r.n << ", max_dim " << r.max_dim << "\n";
      for (const auto& row : r.rows)
        out << "m=" << row.m << " closure=" << row.closure_size << " max_coef=" << row.closure_max_coefficient
            << " cap=" << row.cap_used << " enumerated=" << row.enumerated_size
            << " contains=" << (row.contains_closure ? "yes" : "no") << " equal=" << (row.equals_closure ? "yes" : "no")
            << "\n";
      out << "max_coef: " << r.max_coefficient() << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
