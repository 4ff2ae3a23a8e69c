// Acceptance run: one PASS/FAIL line per criterion, exact checks only.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "laws.hpp"
#include "orientals/axioms.hpp"
#include "orientals/canonical.hpp"
#include "orientals/enumeration.hpp"
#include "orientals/json_io.hpp"
#include "orientals/mutants.hpp"
#include "process.hpp"
#include "support.hpp"

using namespace orientals;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome from_tallies(std::initializer_list<std::pair<const char*, const laws::Tally*>> parts) {
  Outcome o{true, ""};
  for (const auto& [name, t] : parts) {
    o.pass = o.pass && t->ok();
    o.detail += std::string("\n    ") + name + ": " + t->summary();
  }
  return o;
}

Outcome chain_complex() {
  laws::Tally t;
  laws::chain_complex(6, t);
  return from_tallies({{"boundary and augmentation, n <= 6", &t}});
}

Outcome simplicial() {
  laws::Tally t;
  for (int n = 0; n <= 3; ++n) laws::simplicial_identities(n, 3, t);
  return from_tallies({{"five identity families, m <= 3, n <= 3", &t}});
}

Outcome image_characterizations() {
  laws::Tally deg, wedge;
  for (int n = 0; n <= 3; ++n) {
    laws::degeneracy_image(n, 3, deg);
    laws::wedge_image(n, 4, 3, wedge);
  }
  return from_tallies({{"degeneracy image, m <= 3", &deg},
                       {"wedge image vs forward image (z dim <= 4) and rational split (z dim <= 3)", &wedge}});
}

Outcome wedge_laws() {
  laws::Tally faces, iterated;
  for (int n = 0; n <= 3; ++n) {
    laws::wedge_faces(n, 3, faces);
    laws::iterated_wedges(n, 3, iterated);
  }
  return from_tallies({{"faces and recovery of factors", &faces}, {"iterated wedge fold vs closed form", &iterated}});
}

Outcome canonical_form() {
  laws::CanonicalTallies c;
  for (int n = 0; n <= 3; ++n) laws::canonical(n, 4, c);
  return from_tallies({{"decompose-recompose, m <= 4, n <= 3", &c.recompose},
                       {"gamma contract", &c.gamma_contract},
                       {"alpha contract", &c.alpha_contract},
                       {"cone laws", &c.cones},
                       {"faces below the rank", &c.faces},
                       {"wedge-image transfer", &c.wedge_images},
                       {"lambda stage terminus and corank", &c.lambda_stages}});
}

Outcome worked_example() {
  laws::Tally t;
  const OrMorphism e01 = fixture("edge01"), e12 = fixture("edge12");
  const OrMorphism z = wedge(0, e01, e12);
  t.check(dump(to_json(z)) == fixture_text("z.json"), [] { return "z bytes"; });
  const CanonicalDecomposition d = decompose(z);
  t.check(dump(to_json(d)) == fixture_text("z_decomposition.json"), [] { return "decomposition bytes"; });
  t.check(dump(to_json(d.gamma)) == fixture_text("gamma_z.json"), [] { return "gamma bytes"; });
  t.check(dump(to_json(cone(2, fixture("degenerate_edge1")))) == fixture_text("gamma_z.json"), [] { return "cone"; });
  t.check(dump(to_json(d.alpha(1))) == fixture_text("eps1_edge01.json"), [] { return "alpha 1 bytes"; });
  t.check(dump(to_json(d.alpha(0))) == fixture_text("edge01.json"), [] { return "alpha 0 bytes"; });
  t.check(d.t == 2 && d.r == 2 && d.s == 0, [] { return "profile"; });
  return from_tallies({{"worked example fixtures", &t}});
}

laws::Tally from_report(const LawReport& r) {
  laws::Tally t;
  t.instances = r.total_instances();
  t.failures = r.total_violations();
  for (const auto& w : r.witnesses) t.witnesses.push_back(w.law + ": " + w.detail);
  return t;
}

Outcome axiom_suite() {
  LawReport axioms, derived;
  for (int n = 0; n <= 3; ++n) {
    const auto sample = graded_or(n, 4);
    axioms.merge(check_axioms(OrCarrier{}, sample));
    derived.merge(check_derived_laws(OrCarrier{}, sample, canonical_lambda_instances(sample)));
  }
  const auto small = graded_or(2, 4);
  const std::size_t ww = check_axioms(WrongWedgeCarrier{}, small).total_violations();
  const std::size_t sd = check_axioms(ShiftedDegeneracyCarrier{}, small).total_violations();
  const std::size_t ex = check_axioms(ExchangeBreakingCarrier{}, small).total_violations();

  const laws::Tally a = from_report(axioms), d = from_report(derived);
  Outcome o = from_tallies({{"axioms 0-7 on Or(-,n), n <= 3, dims <= 4", &a}, {"derived laws", &d}});
  o.pass = o.pass && ww > 0 && sd > 0 && ex > 0;
  o.detail += "\n    mutant violations on Or(-,2), dims <= 4: wrong wedge " + std::to_string(ww) + ", shifted degeneracy " +
              std::to_string(sd) + ", exchange breaking " + std::to_string(ex);
  return o;
}

Outcome generation() {
  laws::Tally closure, counts;
  for (int n = 0; n <= 3; ++n) {
    const auto c = generation_closure(n, 4);
    for (int m = 0; m <= 4; ++m)
      closure.check(c[static_cast<std::size_t>(m)] == all_or(m, n),
                    [&] { return "Or(" + std::to_string(m) + "," + std::to_string(n) + ")"; });
  }
  for (int m = 0; m <= 4; ++m) {
    counts.check(all_or(m, 0).size() == 1, [&] { return "Or(" + std::to_string(m) + ",0)"; });
    counts.check(all_or(m, 1).size() == static_cast<std::size_t>(m + 2), [&] { return "Or(" + std::to_string(m) + ",1)"; });
  }
  for (int n = 0; n <= 3; ++n)
    counts.check(all_or(0, n).size() == static_cast<std::size_t>(n + 1), [&] { return "Or(0," + std::to_string(n) + ")"; });
  laws::Tally census;
  for (int n = 0; n <= 3; ++n) {
    const CensusReport r = coefficient_census(n, 4);
    for (const CensusRow& row : r.rows)
      census.check(row.contains_closure && row.equals_closure, [&] { return "census row m=" + std::to_string(row.m); });
  }
  return from_tallies({{"closure equals enumeration, m <= 4, n <= 3", &closure},
                       {"count formulas", &counts},
                       {"coefficient census", &census}});
}

Outcome freeness() {
  laws::Tally t;
  laws::freeness(2, 2, 3, t);
  return from_tallies({{"evaluate(synthesize x, u) = u . x, n, N <= 2, dim x <= 3", &t}});
}

Outcome collapse() {
  laws::Tally t;
  for (int n = 0; n <= 3; ++n) laws::collapse(n, 4, 3, t);
  return from_tallies({{"lambda collapse, r <= 3", &t}});
}

Outcome determinism() {
  std::vector<std::string> commands;
  const std::string c = quoted(cli());
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(ORIENTALS_FIXTURE_DIR)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const std::string& f : files) {
    const std::string q = quoted(f);
    if (f.ends_with(".sexpr")) {
      commands.push_back(c + " evaluate " + q + " --n 2");
      continue;
    }
    for (const char* sub : {"validate", "validate --strict", "canonical", "synthesize", "face 0", "deg 0"})
      commands.push_back(c + " " + sub + " " + q);
    commands.push_back(c + " compose " + q + " " + q);
    commands.push_back(c + " wedge 0 " + q + " " + q);
  }
  commands.push_back(c + " wedge 0 " + quoted(fixture_path("edge01.json")) + " " + quoted(fixture_path("edge12.json")));
  commands.push_back(c + " compose " + quoted(fixture_path("iota2.json")) + " " + quoted(fixture_path("z.json")));
  commands.push_back(c + " enumerate --m 3 --n 3 --format json");
  commands.push_back(c + " enumerate --m 4 --n 3 --threads 4");
  commands.push_back(c + " check --n 1 --max-dim 3");
  commands.push_back(c + " check --n 1 --max-dim 3 --mutant exchange");
  commands.push_back(c + " census --n 2 --max-dim 3");
  commands.push_back(c);

  laws::Tally t;
  for (const std::string& cmd : commands) {
    const RunResult a = run(cmd, true), b = run(cmd, true);
    t.check(a.status == b.status && a.out == b.out, [&] { return cmd; });
  }
  const std::string label = std::to_string(commands.size()) + " commands, each run twice";
  return from_tallies({{label.c_str(), &t}});
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"chain-complex laws", chain_complex},
      {"simplicial identities", simplicial},
      {"degeneracy and wedge image characterizations", image_characterizations},
      {"wedge laws", wedge_laws},
      {"canonical form", canonical_form},
      {"worked example pinned", worked_example},
      {"axiom suite and mutants", axiom_suite},
      {"generation", generation},
      {"freeness", freeness},
      {"lambda collapse", collapse},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("\n    exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << (k + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first
         << " (" << secs << " s)" << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
