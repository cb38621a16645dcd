// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "witt/analysis.hpp"

using namespace witt;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> reports;  // serialized reports, compared by criterion 11
};

void absorb(Outcome& o, const Report& r, const std::string& label) {
  o.reports.push_back(r.dump());
  if (!r.passed()) {
    o.ok = false;
    o.detail += label + ": " + verdict_name(r.verdict) + (r.message.empty() ? "" : " (" + r.message + ")") + "; ";
  }
}

Sl3Params desk() { return Sl3Params::desk(); }

Outcome structure_constants() {
  Outcome o;
  const Report r = verify_sl3_brackets(Sl3Params::symbolic(), 3, 2);
  absorb(o, r, "brackets");
  o.detail += "pairs=" + r.stats["pairs"].dump() + " elements=" + r.stats["elements"].dump();
  return o;
}

Outcome embedding() {
  Outcome o;
  absorb(o, embedding_consistency(Sl3Params::symbolic(), 3, 2), "embedding");
  return o;
}

WittGenerator random_generator(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  WittGenerator g;
  g.r = Lattice::zero(n);
  for (int k = 0; k < n; ++k) {
    g.u.push_back(Scalar(entry(rng)));
    g.r[k] = entry(rng);
  }
  return g;
}

Outcome witt_brackets() {
  Outcome o;
  std::mt19937 rng(20240611);
  const TensorFieldModule cusp = Sl3Params::symbolic().tensor_field();
  std::vector<TensorFieldModule> ext;
  for (int n : {2, 3})
    for (int k = 0; k <= n; ++k) {
      std::vector<Scalar> alpha;
      for (int t = 0; t < n; ++t) alpha.push_back(Scalar(1, 17 + 2 * t));
      ext.push_back(TensorFieldModule::make(exterior_power(n, k), alpha));
    }
  const auto cusp_basis = window_basis(cusp, 1, 1);
  std::vector<std::vector<ModuleElement>> ext_basis;
  for (const auto& M : ext) ext_basis.push_back(window_basis(M, 0, 1));

  struct Sample {
    WittGenerator a2, b2, a3, b3;
  };
  std::vector<Sample> samples;
  for (int t = 0; t < 200; ++t) {
    Sample s;
    s.a2 = random_generator(rng, 2);
    s.b2 = random_generator(rng, 2);
    s.a3 = random_generator(rng, 3);
    s.b3 = random_generator(rng, 3);
    samples.push_back(s);
  }
  std::vector<int> bad(samples.size(), 0);
  for_each_index(samples.size(), ExecPolicy::parallel, [&](std::size_t t) {
    const Sample& s = samples[t];
    if (!witt_bracket_check(cusp, s.a2, s.b2, cusp_basis).passed()) ++bad[t];
    for (std::size_t m = 0; m < ext.size(); ++m) {
      const bool two = ext[m].n() == 2;
      if (!witt_bracket_check(ext[m], two ? s.a2 : s.a3, two ? s.b2 : s.b3, ext_basis[m]).passed()) ++bad[t];
    }
  });
  std::size_t failures = 0;
  for (int b : bad) failures += static_cast<std::size_t>(b);

  std::vector<std::array<WittGenerator, 3>> triples;
  for (int t = 0; t < 50; ++t)
    triples.push_back({random_generator(rng, 2), random_generator(rng, 2), random_generator(rng, 2)});
  std::vector<int> jbad(triples.size(), 0);
  const auto small = window_basis(cusp, 1, 0);
  for_each_index(triples.size(), ExecPolicy::parallel, [&](std::size_t t) {
    if (!jacobi_check(cusp, triples[t][0], triples[t][1], triples[t][2], small).passed()) jbad[t] = 1;
  });
  std::size_t jfail = 0;
  for (int b : jbad) jfail += static_cast<std::size_t>(b);

  o.ok = failures == 0 && jfail == 0;
  o.detail = "bracket samples=200 modules=" + std::to_string(1 + ext.size()) + " failures=" + std::to_string(failures) +
             " jacobi triples=50 failures=" + std::to_string(jfail);
  o.reports.push_back(o.detail);
  return o;
}

Outcome generation() {
  Outcome o;
  const Window w = Window::centered(4, 4, 4, 2);
  const auto seeds = w.inner_keys();
  std::vector<std::string> dumps(seeds.size());
  std::vector<bool> ok(seeds.size());
  for_each_index(seeds.size(), ExecPolicy::parallel, [&](std::size_t k) {
    const Report r = check_generation(desk(), seeds[k], w, ExecPolicy::serial);
    ok[k] = r.passed();
    dumps[k] = r.dump();
  });
  std::size_t passed = 0;
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (ok[k]) ++passed;
    o.reports.push_back(dumps[k]);
  }
  o.ok = passed == seeds.size();
  o.detail = std::to_string(passed) + "/" + std::to_string(seeds.size()) + " seeds generate the inner window";
  return o;
}

Outcome proof_identities() {
  Outcome o;
  absorb(o, proof_identity_suite(Sl3Params::symbolic(), 2, 2, 4), "proof identities");
  return o;
}

Outcome factorization() {
  Outcome o;
  for (int s = 1; s <= 3; ++s) {
    const Report r = recursion_factorization_oracle(s);
    absorb(o, r, "s=" + std::to_string(s));
    if (!r.witnesses.empty()) {
      const Json& w = r.witnesses[0];
      o.detail += "s=" + std::to_string(s) + ": " + w["first_factor"].get<std::string>() + ", " +
                  w["second_factor"].get<std::string>();
      if (w.contains("discrepancy")) o.detail += " [stated " + w["stated_second_factor"].get<std::string>() + "]";
      o.detail += "; ";
    } else {
      o.ok = false;
    }
  }
  return o;
}

Outcome gt_obstructions() {
  Outcome o;
  for (auto q : {QuadraticWord::e12e21, QuadraticWord::e23e32, QuadraticWord::e13e31}) {
    absorb(o, gt_obstruction(q, 4, 2), word_name(quadratic_word(q)));
  }
  return o;
}

Outcome gt_centrality() {
  Outcome o;
  const Window w = Window::centered(4, 3, 3, 2);
  absorb(o, gt_central_check(1, Sl3Params::symbolic(), w), "c31");
  absorb(o, gt_central_check(2, Sl3Params::symbolic(), w), "c32");
  return o;
}

Outcome degenerate() {
  Outcome o;
  Sl3Params p = desk();
  p.alpha1 = p.b + p.lambda;
  p.alpha2 = p.b - p.lambda;
  const Report r = check_degenerate_reducibility(p, Window::centered(4, 4, 4, 2));
  absorb(o, r, "degenerate");
  if (!r.witnesses.empty()) o.detail += "missed " + r.witnesses[0]["missed_vector"].get<std::string>();
  return o;
}

Outcome de_rham() {
  Outcome o;
  absorb(o, de_rham_checks({Scalar(1, 17), Scalar(1, 19)}, 4, 2, 2, {1, -1}), "de Rham");
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "symbolic gl3 structure constants", 60, structure_constants},
      {2, "embedding consistency", 0, embedding},
      {3, "Witt bracket law and Jacobi identity", 120, witt_brackets},
      {4, "single-vector generation at desk scale", 600, generation},
      {5, "proof-identity suite", 0, proof_identities},
      {6, "factorization oracle", 0, factorization},
      {7, "Gelfand-Tsetlin obstruction", 0, gt_obstructions},
      {8, "Gelfand-Tsetlin centrality", 0, gt_centrality},
      {9, "degenerate reducibility", 0, degenerate},
      {10, "de Rham complex", 0, de_rham},
  };

  bool all = true;
  std::vector<std::vector<std::string>> first;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok;
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      o.detail += " over time budget";
    }
    all = all && ok;
    std::printf("criterion %2d %s  %s (%.2fs) %s\n", c.id, ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    first.push_back(std::move(o.reports));
  }

  bool same = true;
  std::string diverged;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome again;
    try {
      again = criteria[k].run();
    } catch (const std::exception&) {
      again.reports.clear();
    }
    if (again.reports != first[k]) {
      same = false;
      diverged += std::to_string(criteria[k].id) + " ";
    }
  }
  all = all && same;
  std::printf("criterion 11 %s  determinism of criteria 1-10 reports %s\n", same ? "PASS" : "FAIL",
              same ? "(byte-identical on rerun)" : ("diverged: " + diverged).c_str());
  return all ? 0 : 1;
}
