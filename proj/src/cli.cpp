#include "witt/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

namespace witt {

std::vector<std::string> command_names() {
  return {"check-generic", "act",   "brackets", "generate", "irreducible", "degenerate",
          "derham",        "proof-identities", "gt", "factorization"};
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(trim(part));
  return out;
}

int to_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError("expected an integer for " + key + ": '" + text + "'");
  }
}

bool symbolic_by_default(const std::string& command) {
  return command == "proof-identities" || command == "gt" || command == "factorization";
}

ExecPolicy policy_of(const RunConfig& cfg) { return cfg.serial ? ExecPolicy::serial : ExecPolicy::parallel; }

Window window_or(const RunConfig& cfg, long I, int R1, int R2, int margin) {
  return cfg.window ? *cfg.window : Window::centered(I, R1, R2, margin);
}

Report group(const std::string& check, const std::string& anchor) {
  Report rep;
  rep.check = check;
  rep.anchor = anchor;
  return rep;
}

Report witt_bracket_sample(const Sl3Params& p, int samples, ExecPolicy policy) {
  Report rep = group("witt_brackets", "[D(u,r), D(v,s)] = D(w, r+s), w = (u|s)v - (v|r)u");
  const auto F = p.tensor_field();
  const auto xs = window_basis(F, 1, 1);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> entry(-2, 2);
  auto draw = [&] {
    WittGenerator g{{Scalar(entry(rng)), Scalar(entry(rng))}, Lattice{entry(rng), entry(rng)}};
    return g;
  };
  std::vector<std::pair<WittGenerator, WittGenerator>> pairs;
  for (int t = 0; t < samples; ++t) {
    WittGenerator a = draw();
    pairs.emplace_back(a, draw());
  }
  std::vector<Report> parts(pairs.size());
  for_each_index(pairs.size(), policy,
                 [&](std::size_t t) { parts[t] = witt_bracket_check(F, pairs[t].first, pairs[t].second, xs); });
  for (const auto& part : parts)
    for (const auto& r : part.residuals) rep.add_residual(r);
  rep.stats["pairs"] = pairs.size();
  rep.stats["elements"] = xs.size();
  return rep;
}

Report act_command(const Sl3Params& p, const RunConfig& cfg) {
  if (cfg.vector.empty()) throw InputError("act needs --vector v:i@r1,r2");
  const GeneratorWord w = parse_word(cfg.word);
  const BasisKey k = parse_basis_symbol(cfg.vector);
  const ModuleElement y = act_word(p, w, ModuleElement::basis(k.index, k.r));
  Report rep = group("act", "generator word applied to a basis vector");
  rep.params = p.to_json();
  rep.params["word"] = word_name(w);
  rep.params["vector"] = basis_symbol(k);
  Json terms = Json::array();
  for (const auto& [key, c] : y.terms()) terms.push_back({{"v", basis_symbol(key)}, {"coeff", c.to_string()}});
  rep.witnesses.push_back({{"result", to_json(y, {p.alpha1, p.alpha2})}, {"terms", terms}});
  return rep;
}

Report generate_command(const Sl3Params& p, const RunConfig& cfg) {
  const Window w = window_or(cfg, 4, 4, 4, 2);
  const BasisKey seed = parse_basis_symbol(cfg.seed.empty() ? "v:0@0,0" : cfg.seed);
  if (cfg.words.empty()) return check_generation(p, seed, w, policy_of(cfg));

  if (!w.inner_contains(seed)) throw InputError("seed must lie in the inner window");
  Report rep = group("generate", "closure of one basis vector under a word list");
  rep.params = p.to_json();
  rep.params["seed"] = basis_symbol(seed);
  Json words = Json::array();
  for (const auto& word : cfg.words) words.push_back(word_name(word));
  rep.params["words"] = words;
  rep.window = w.to_json();
  ClosureStats st;
  const SubspaceBasis basis =
      closure(p, {ModuleElement::basis(seed.index, seed.r)}, cfg.words, w, {10000, policy_of(cfg)}, &st);
  std::size_t missed = 0;
  for (const auto& k : w.inner_keys()) {
    if (!basis.contains(k)) {
      ++missed;
      rep.add_residual(basis_symbol(k));
    }
  }
  rep.stats["closure"] = st.to_json();
  rep.stats["dimension"] = basis.dimension();
  rep.stats["missed"] = missed;
  return rep;
}

}  // namespace

Window parse_window(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw InputError("window must be I,R1,R2,margin: '" + text + "'");
  try {
    return Window::centered(to_int("window", parts[0]), to_int("window", parts[1]), to_int("window", parts[2]),
                            to_int("window", parts[3]));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad window: ") + e.what());
  }
}

void apply_config_entry(const std::string& key, const std::string& value, RunConfig& cfg) {
  if (key == "mode") {
    if (value != "numeric" && value != "symbolic") throw InputError("mode must be numeric or symbolic");
    cfg.mode = value;
  } else if (key == "l" || key == "b" || key == "c" || key == "a1" || key == "a2") {
    cfg.params[key] = value;
  } else if (key == "window") {
    cfg.window = parse_window(value);
  } else if (key == "words") {
    cfg.words.clear();
    for (const auto& w : split(value, ',')) cfg.words.push_back(parse_word(w));
  } else if (key == "seed") {
    cfg.seed = value;
  } else if (key == "word") {
    cfg.word = value;
  } else if (key == "vector") {
    cfg.vector = value;
  } else if (key == "s") {
    cfg.s = to_int(key, value);
  } else if (key == "k") {
    cfg.k = to_int(key, value);
  } else if (key == "integral_alpha") {
    const auto parts = split(value, ',');
    if (parts.size() != 2) throw InputError("integral_alpha must be two integers");
    cfg.integral_alpha = {to_int(key, parts[0]), to_int(key, parts[1])};
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "serial") {
    cfg.serial = value == "1" || value == "true";
  } else {
    throw InputError("unknown config key '" + key + "'");
  }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(path + ":" + std::to_string(number) + ": expected key = value");
    apply_config_entry(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), cfg);
  }
}

Sl3Params resolve_params(const std::string& command, const RunConfig& cfg) {
  const std::string mode = cfg.mode.empty() ? (symbolic_by_default(command) ? "symbolic" : "numeric") : cfg.mode;
  if (mode == "symbolic") {
    if (!cfg.params.empty()) throw InputError("symbolic mode takes no parameter values");
    return Sl3Params::symbolic();
  }
  Sl3Params p = Sl3Params::desk();
  const std::map<std::string, Scalar*> slots = {
      {"l", &p.lambda}, {"b", &p.b}, {"c", &p.c}, {"a1", &p.alpha1}, {"a2", &p.alpha2}};
  for (const auto& [key, text] : cfg.params) {
    const Scalar v = Scalar::parse(text);
    if (v.is_symbolic()) throw InputError("numeric mode needs a rational value for " + key);
    *slots.at(key) = v;
  }
  return p;
}

Report run_command(const std::string& command, const RunConfig& cfg) {
  const Sl3Params p = resolve_params(command, cfg);
  const ExecPolicy policy = policy_of(cfg);

  if (command == "check-generic") {
    if (!p.is_numeric()) throw InputError("check-generic needs numeric parameters");
    Report rep = check_generic(p).to_report();
    rep.params = p.to_json();
    return rep;
  }
  if (command == "act") return act_command(p, cfg);
  if (command == "brackets") {
    const Window w = window_or(cfg, 3, 2, 2, 0);
    Report rep = group("brackets", "structure constants and embedding");
    rep.params = p.to_json();
    rep.window = w.to_json();
    rep.add_subcheck(verify_sl3_brackets(p, w.i_max, w.r1_max, policy));
    rep.add_subcheck(embedding_consistency(p, w.i_max, w.r1_max, policy));
    rep.add_subcheck(witt_bracket_sample(p, 200, policy));
    return rep;
  }
  if (command == "generate") return generate_command(p, cfg);
  if (command == "irreducible") return check_irreducible_generic(p, window_or(cfg, 4, 4, 4, 2), {}, policy);
  if (command == "degenerate") return check_degenerate_reducibility(p, window_or(cfg, 4, 4, 4, 2), policy);
  if (command == "derham") {
    const Window w = window_or(cfg, 1, 3, 3, 1);
    return de_rham_checks({p.alpha1, p.alpha2}, w.r1_max, w.margin, 2, cfg.integral_alpha, policy);
  }
  if (command == "proof-identities") {
    const Window w = window_or(cfg, 2, 2, 2, 0);
    return proof_identity_suite(p, w.i_max, w.r1_max, cfg.s.value_or(4));
  }
  if (command == "gt") {
    const Window w = window_or(cfg, 4, 3, 3, 2);
    Report rep = group("gt", "Gelfand-Tsetlin generators");
    rep.params = p.to_json();
    for (auto q : {QuadraticWord::e12e21, QuadraticWord::e23e32, QuadraticWord::e13e31}) {
      rep.add_subcheck(gt_obstruction(q));
    }
    if (cfg.k) {
      rep.add_subcheck(gt_central_check(*cfg.k, p, w, policy));
    } else {
      rep.add_subcheck(gt_central_check(1, p, w, policy));
      rep.add_subcheck(gt_central_check(2, p, w, policy));
    }
    for (const auto& sub : rep.subchecks) {
      if (sub.verdict == Verdict::error) {
        rep.verdict = Verdict::error;
        rep.message = sub.message;
      }
    }
    return rep;
  }
  if (command == "factorization") {
    if (cfg.s) {
      if (*cfg.s < 1) throw InputError("s must be at least 1");
      return recursion_factorization_oracle(*cfg.s);
    }
    Report rep = group("factorization", "coefficient recursion of a minimal-length vector");
    for (int s = 1; s <= 3; ++s) rep.add_subcheck(recursion_factorization_oracle(s));
    return rep;
  }
  throw InputError("unknown command '" + command + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for tensor-field modules over the Witt algebra and their sl3 restrictions"};
  app.require_subcommand(1);

  struct Flags {
    std::string config, mode, window, seed, word, words, vector, out, s, k, integral_alpha;
    std::vector<std::string> params;
    bool serial = false;
  };
  Flags f;
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", f.config, "flat key = value file");
    sub->add_option("--mode", f.mode, "numeric or symbolic");
    sub->add_option("--param", f.params, "parameter as key=p/q (l b c a1 a2)");
    sub->add_option("--window", f.window, "I,R1,R2,margin");
    sub->add_option("--seed", f.seed, "basis symbol v:i@r1,r2");
    sub->add_option("--word", f.word, "generator word such as E13*E32");
    sub->add_option("--words", f.words, "comma-separated word list for generate");
    sub->add_option("--vector", f.vector, "basis symbol v:i@r1,r2");
    sub->add_option("--s", f.s, "length parameter");
    sub->add_option("--k", f.k, "degree of the central element");
    sub->add_option("--integral-alpha", f.integral_alpha, "integral twist for de Rham witnesses");
    sub->add_option("--out", f.out, "write the report here instead of stdout");
    sub->add_flag("--serial", f.serial, "run kernels on one thread");
  }

  std::string command;
  auto emit = [&](const Report& rep, const std::string& path) {
    const std::string text = rep.dump() + "\n";
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write " + path);
    file << text;
  };
  auto input_error = [&](const std::string& why) {
    Report rep;
    rep.check = command;
    rep.verdict = Verdict::error;
    rep.message = why;
    out << rep.dump() << "\n";
    err << "error: " << why << "\n";
    return exit_code(Verdict::error);
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return input_error(e.what());
  }
  command = app.get_subcommands().front()->get_name();

  RunConfig cfg;
  try {
    if (!f.config.empty()) apply_config_file(f.config, cfg);
    const std::pair<std::string, const std::string*> given[] = {
        {"mode", &f.mode}, {"window", &f.window}, {"seed", &f.seed}, {"word", &f.word},
        {"words", &f.words}, {"vector", &f.vector}, {"s", &f.s}, {"k", &f.k},
        {"integral_alpha", &f.integral_alpha}, {"out", &f.out}};
    for (const auto& [key, value] : given) {
      if (!value->empty()) apply_config_entry(key, *value, cfg);
    }
    for (const auto& kv : f.params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw InputError("--param expects key=value: '" + kv + "'");
      const std::string key = trim(kv.substr(0, eq));
      if (key != "l" && key != "b" && key != "c" && key != "a1" && key != "a2") {
        throw InputError("unknown parameter '" + key + "'");
      }
      apply_config_entry(key, trim(kv.substr(eq + 1)), cfg);
    }
    if (f.serial) cfg.serial = true;

    const Report rep = run_command(command, cfg);
    emit(rep, cfg.out);
    return exit_code(rep.verdict);
  } catch (const ParseError& e) {
    return input_error(e.what());
  } catch (const InputError& e) {
    return input_error(e.what());
  } catch (const std::invalid_argument& e) {
    return input_error(e.what());
  } catch (const std::domain_error& e) {
    return input_error(e.what());
  }
}

}  // namespace witt
