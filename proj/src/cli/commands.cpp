#include "symdyn/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "symdyn/cli/documents.hpp"
#include "symdyn/cyclesub.hpp"
#include "symdyn/entropy.hpp"
#include "symdyn/errors.hpp"

namespace symdyn::cli {
namespace {

struct Options {
  std::size_t max_set_size = Limits{}.max_set_size;
  std::size_t max_iterations = Limits{}.max_iterations;
  bool timing = false;

  std::string graph;
  std::string substitution;
  std::string matrix;
  std::string mode;
  std::string word;
  std::size_t max_len = 8;
  std::size_t len = 6;
  double tol = 1e-12;
  std::size_t gap_min = 2;
  std::size_t gap_max = 3;
  std::size_t m = 2;
  std::size_t n = 0;
  std::size_t l = 1;
  std::size_t k = 2;
  bool counts_only = false;
  bool words = false;
};

class Session {
 public:
  Session(std::istream& in, const Options& opts)
      : in_(in), limits_{opts.max_set_size, opts.max_iterations} {}

  const Limits& limits() const noexcept { return limits_; }

  Json document(const std::string& ref) {
    std::string text;
    if (ref == "-") {
      std::ostringstream buf;
      buf << in_.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(ref, std::ios::binary);
      if (!file) throw InvalidArgument("cannot open '" + ref + "'");
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    Json doc = parse_json_text(text, ref == "-" ? "<stdin>" : ref);
    inputs_.push_back(doc.dump());
    return doc;
  }

  Digraph graph(const std::string& ref) {
    if (auto g = builtin_graph(ref)) {
      inputs_.push_back(emit_graph(*g).dump());
      return *g;
    }
    return parse_graph(document(ref));
  }

  RandomSubstitution substitution(const std::string& ref) {
    return parse_substitution(document(ref));
  }

  MatrixDocument matrix(const std::string& ref) { return parse_matrix(document(ref)); }

  // FNV-1a 64 over the canonical form of every input, in load order.
  std::string digest() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const std::string& part : inputs_) {
      for (unsigned char c : part) h = (h ^ c) * 0x100000001b3ull;
      h = (h ^ 0x0a) * 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
  }

 private:
  std::istream& in_;
  Limits limits_;
  std::vector<std::string> inputs_;
};

Json count_json(const BigCount& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

Json counts_json(const ComplexityProfile& p) {
  Json out = Json::array();
  for (const BigCount& c : p.counts) out.push_back(count_json(c));
  return out;
}

Json estimate_json(const ComplexityProfile& p) {
  const EntropyEstimate e = entropy_estimate(p);
  Json out;
  out["horizon"] = e.horizon;
  out["upper"] = e.upper;
  out["sequence"] = e.sequence;
  return out;
}

Json words_json(const Alphabet& alphabet, const std::vector<WordSet>& by_length) {
  Json out = Json::object();
  for (std::size_t n = 1; n <= by_length.size(); ++n) {
    Json list = Json::array();
    for (const Word& w : by_length[n - 1]) list.push_back(emit_word(alphabet, w));
    out[std::to_string(n)] = std::move(list);
  }
  return out;
}

Json code_json(const OneBlockCode& code) {
  Json out = Json::object();
  for (std::size_t y = 0; y < code.letter_map.size(); ++y)
    out[code.extended.symbol(static_cast<Letter>(y))] = code.base.symbol(code.letter_map[y]);
  return out;
}

Word parse_word_arg(const Alphabet& alphabet, const std::string& text) {
  if (text.empty()) throw InvalidArgument("--word must not be empty");
  return alphabet.parse(text);
}

Json run_cyclesub(Session& s, const Options& o) {
  const Digraph g = s.graph(o.graph);
  const std::string mode = g.mode() == GraphMode::vertex ? "vertex" : "edge";
  if (!o.mode.empty() && o.mode != mode)
    throw PreconditionError("graph '" + o.graph + "' is a " + mode + "-mode graph");
  Json out;
  out["mode"] = mode;
  out["substitution"] = emit_substitution(cycle_substitution(g));
  return out;
}

Json run_verify(Session& s, const Options& o) {
  const Digraph g = s.graph(o.graph);
  const EqualityReport r = verify_language_equality(g, o.max_len, s.limits());
  Json out;
  out["max_len"] = o.max_len;
  out["equal"] = r.equal;
  if (r.first_divergence) {
    Json d;
    d["length"] = r.first_divergence->length;
    d["word"] = emit_word(g.letters(), r.first_divergence->word);
    d["side"] = r.first_divergence->side == Side::shift ? "shift" : "substitution";
    out["first_divergence"] = std::move(d);
  } else {
    out["first_divergence"] = nullptr;
  }
  return out;
}

Json run_witness(Session& s, const Options& o) {
  const Digraph g = s.graph(o.graph);
  const Alphabet& letters = g.letters();
  const DerivationWitness w = derivation_witness(g, parse_word_arg(letters, o.word));
  const ReplayResult replay = replay_witness(cycle_substitution(g), w);
  Json out;
  out["root"] = letters.symbol(w.root);
  out["depth"] = w.depth;
  Json steps = Json::array();
  for (const InsertionStep& step : w.steps) {
    Json item;
    item["position"] = step.position;
    item["inserted"] = emit_word(letters, step.inserted);
    steps.push_back(std::move(item));
  }
  out["steps"] = std::move(steps);
  Json chain = Json::array();
  for (const Word& x : replay.chain) chain.push_back(emit_word(letters, x));
  out["chain"] = std::move(chain);
  out["target"] = emit_word(letters, w.target);
  out["replay_ok"] = true;
  return out;
}

Json run_language(Session& s, const Options& o) {
  const RandomSubstitution sub = s.substitution(o.substitution);
  const LanguageTable t = language_upto(sub, o.len, s.limits());
  Json out;
  out["max_len"] = o.len;
  out["certificate"] = {{"preperiod", t.certificate().preperiod},
                        {"period", t.certificate().period}};
  out["counts"] = counts_json(t.profile());
  if (!o.counts_only) out["words"] = words_json(sub.alphabet(), t.by_length());
  return out;
}

Json run_entropy(Session& s, const Options& o) {
  const int sources = !o.substitution.empty() + !o.graph.empty() + !o.matrix.empty();
  if (sources != 1)
    throw InvalidArgument("entropy needs exactly one of --substitution, --graph, --matrix");
  Json out;
  ComplexityProfile profile;
  std::optional<ZeroOneMatrix> matrix;
  if (!o.substitution.empty()) {
    out["source"] = "substitution";
    profile = language_upto(s.substitution(o.substitution), o.max_len, s.limits()).profile();
  } else {
    const Sft x = !o.graph.empty() ? shift_of(s.graph(o.graph))
                                   : [&] {
                                       auto doc = s.matrix(o.matrix);
                                       return sft_from_matrix(doc.matrix, doc.alphabet);
                                     }();
    out["source"] = !o.graph.empty() ? "graph" : "matrix";
    profile = complexity_profile(x, o.max_len);
    matrix = x.transition();
  }
  out["counts"] = counts_json(profile);
  out["estimate"] = estimate_json(profile);
  if (matrix && matrix_classify(*matrix).irreducible)
    out["log_perron"] = std::log(perron_eigenvalue(*matrix, 1e-12));
  return out;
}

Json run_perron(Session& s, const Options& o) {
  const MatrixDocument doc = s.matrix(o.matrix);
  const MatrixClass cls = matrix_classify(doc.matrix);
  const double lambda = perron_eigenvalue(doc.matrix, o.tol);
  Json out;
  out["order"] = doc.matrix.order();
  out["irreducible"] = cls.irreducible;
  out["primitive"] = cls.primitive;
  out["witness_power"] = cls.witness_power ? Json(*cls.witness_power) : Json(nullptr);
  out["tol"] = o.tol;
  out["eigenvalue"] = lambda;
  out["log_eigenvalue"] = std::log(lambda);
  return out;
}

Json run_gapshift(Session&, const Options& o) {
  const Sft x = gap_shift(o.gap_min, o.gap_max);
  const ComplexityProfile p = complexity_profile(x, o.len);
  Json out;
  out["min"] = o.gap_min;
  out["max"] = o.gap_max;
  out["counts"] = counts_json(p);
  out["estimate"] = estimate_json(p);
  out["bound"] = gap_shift_entropy_bound(o.gap_min, o.gap_max);
  if (o.words) {
    std::vector<WordSet> by_length;
    for (std::size_t n = 1; n <= o.len; ++n) by_length.push_back(original_language(x, n));
    out["words"] = words_json(x.output_alphabet(), by_length);
  }
  return out;
}

Json run_extend(Session& s, const Options& o) {
  Json out;
  out["mode"] = o.mode;
  if (o.mode == "product") {
    if (o.substitution.empty()) throw InvalidArgument("extend --mode product needs --substitution");
    const Extension e = product_extension(s.substitution(o.substitution), o.m);
    out["m"] = o.m;
    out["substitution"] = emit_substitution(e.substitution);
    out["code"] = code_json(e.code);
  } else if (o.mode == "epsilon") {
    if (o.substitution.empty()) throw InvalidArgument("extend --mode epsilon needs --substitution");
    if (o.n == 0) throw InvalidArgument("extend --mode epsilon needs --n >= 1");
    const RandomSubstitution base = s.substitution(o.substitution);
    const EpsilonExtension e = epsilon_extension(base, o.n, s.limits());
    out["n"] = e.power;
    out["max_realization_length"] = e.max_realization_length;
    Json chosen = Json::object();
    for (std::size_t a = 0; a < e.distinguished.size(); ++a) {
      chosen[base.alphabet().symbol(static_cast<Letter>(a))] = {
          {"realization", emit_word(base.alphabet(), e.distinguished[a])},
          {"marked_position", e.marked[a]}};
    }
    out["distinguished"] = std::move(chosen);
    out["substitution"] = emit_substitution(e.substitution);
    out["code"] = code_json(e.code);
  } else if (o.mode == "fractional") {
    const FractionalConstruction f = fractional_entropy_substitution(o.l, o.k, o.m);
    out["l"] = o.l;
    out["k"] = o.k;
    out["m"] = o.m;
    out["entropy"] = static_cast<double>(o.l) / static_cast<double>(o.k) *
                     std::log(static_cast<double>(o.m));
    out["substitution"] = emit_substitution(f.substitution);
    out["psi"] = emit_substitution(f.psi.as_random());
    out["phi"] = emit_substitution(f.phi.as_random());
  } else {
    throw InvalidArgument("extend needs --mode product, epsilon or fractional");
  }
  return out;
}

Json base_report(const std::string& command) {
  Json r;
  r["schema_version"] = kReportSchema;
  r["command"] = command;
  return r;
}

Json caps_json(const Options& o, const char* exceeded) {
  Json caps;
  caps["max_set_size"] = o.max_set_size;
  caps["max_iterations"] = o.max_iterations;
  caps["exceeded"] = exceeded ? Json(exceeded) : Json(nullptr);
  return caps;
}

CommandResult error_report(const std::string& command, int code, const std::string& kind,
                           const std::string& message, Json caps = nullptr) {
  Json r = base_report(command);
  r["status"] = "error";
  r["error"] = {{"kind", kind}, {"message", message}};
  if (!caps.is_null()) r["resource_caps"] = std::move(caps);
  return {code, r.dump(2) + "\n"};
}

Json arguments_json(const CLI::App& app, const CLI::App& sub) {
  Json args = Json::object();
  for (const CLI::App* scope : {&app, &sub}) {
    for (const CLI::Option* opt : scope->get_options()) {
      if (opt->count() == 0 || opt->get_single_name() == "help") continue;
      const auto& results = opt->results();
      args[opt->get_single_name()] = results.size() == 1 ? Json(results[0]) : Json(results);
    }
  }
  return args;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, std::istream& in) {
  Options o;
  CLI::App app{"Shifts of finite type, cycle-substitutions and entropy", "symdyn"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--max-set-size", o.max_set_size, "Cap on words held in one set");
  app.add_option("--max-iterations", o.max_iterations, "Cap on window-iteration steps");
  app.add_flag("--timing", o.timing, "Add wall-clock timing to the report");

  auto* cyclesub = app.add_subcommand("cyclesub", "Cycle-substitution of a graph");
  cyclesub->add_option("--graph", o.graph, "Graph document or built-in name")->required();
  cyclesub->add_option("--mode", o.mode, "Expected graph mode")
      ->check(CLI::IsMember({"vertex", "edge"}));

  auto* verify = app.add_subcommand("verify", "Compare a graph shift with its cycle-substitution");
  verify->add_option("--graph", o.graph, "Graph document or built-in name")->required();
  verify->add_option("--max-len", o.max_len, "Longest compared length")
      ->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "Derivation witness for a cycle word read");
  witness->add_option("--graph", o.graph, "Graph document or built-in name")->required();
  witness->add_option("--word", o.word, "Cycle word read")->required();

  auto* language = app.add_subcommand("language", "Legal words of a random substitution");
  language->add_option("--substitution", o.substitution, "Substitution document")->required();
  language->add_option("--len", o.len, "Longest word length")->check(CLI::PositiveNumber);
  language->add_flag("--counts-only", o.counts_only, "Omit the word lists");

  auto* entropy = app.add_subcommand("entropy", "Finite-horizon entropy estimate");
  entropy->add_option("--substitution", o.substitution, "Substitution document");
  entropy->add_option("--graph", o.graph, "Graph document or built-in name");
  entropy->add_option("--matrix", o.matrix, "Matrix document");
  entropy->add_option("--max-len", o.max_len, "Horizon")->check(CLI::PositiveNumber);

  auto* perron = app.add_subcommand("perron", "Perron eigenvalue of a 0-1 matrix");
  perron->add_option("--matrix", o.matrix, "Matrix document")->required();
  perron->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);

  auto* gapshift = app.add_subcommand("gapshift", "Gap shift counts and entropy bound");
  gapshift->add_option("--min", o.gap_min, "Least gap k")->required();
  gapshift->add_option("--max", o.gap_max, "Largest gap K")->required();
  gapshift->add_option("--len", o.len, "Horizon")->check(CLI::PositiveNumber);
  gapshift->add_flag("--words", o.words, "Include the word lists");

  auto* extend = app.add_subcommand("extend", "Entropy-changing substitution constructions");
  extend->add_option("--mode", o.mode, "product, epsilon or fractional")
      ->required()
      ->check(CLI::IsMember({"product", "epsilon", "fractional"}));
  extend->add_option("--substitution", o.substitution, "Substitution document");
  extend->add_option("--m", o.m, "Copies per letter");
  extend->add_option("--n", o.n, "Power of the base substitution (epsilon)");
  extend->add_option("--l", o.l, "Numerator l (fractional)");
  extend->add_option("--k", o.k, "Image length k (fractional)");

  std::vector<std::string> storage{"symdyn"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    return {kExitOk, subs.empty() ? app.help() : subs.front()->help()};
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    return error_report(subs.empty() ? "" : subs.front()->get_name(), kExitUsage, "usage",
                        e.what());
  }

  const CLI::App& sub = *app.get_subcommands().front();
  const std::string command = sub.get_name();
  Session session(in, o);
  const auto start = std::chrono::steady_clock::now();
  Json result;
  try {
    if (command == "cyclesub") result = run_cyclesub(session, o);
    else if (command == "verify") result = run_verify(session, o);
    else if (command == "witness") result = run_witness(session, o);
    else if (command == "language") result = run_language(session, o);
    else if (command == "entropy") result = run_entropy(session, o);
    else if (command == "perron") result = run_perron(session, o);
    else if (command == "gapshift") result = run_gapshift(session, o);
    else result = run_extend(session, o);
  } catch (const ResourceCapError& e) {
    return error_report(command, kExitResourceCap, "resource_cap", e.what(),
                        caps_json(o, e.cap().c_str()));
  } catch (const ConvergenceError& e) {
    return error_report(command, kExitPrecondition, "convergence", e.what());
  } catch (const PreconditionError& e) {
    return error_report(command, kExitPrecondition, "precondition", e.what());
  } catch (const InvalidArgument& e) {
    return error_report(command, kExitPrecondition, "invalid_input", e.what());
  }

  Json report = base_report(command);
  report["status"] = "ok";
  report["arguments"] = arguments_json(app, sub);
  report["input_digest"] = session.digest();
  report["result"] = std::move(result);
  report["resource_caps"] = caps_json(o, nullptr);
  if (o.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing"] = {
        {"wall_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  }
  return {kExitOk, report.dump(2) + "\n"};
}

}  // namespace symdyn::cli
