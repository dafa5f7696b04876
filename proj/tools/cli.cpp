#include "cli.hpp"

#include "exactcat/exactcat.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

namespace exactcat::cli {

namespace {

using engine::ProbeConfig;
using engine::Report;
using engine::Verdict;

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  std::vector<std::string> inputs;
  std::string category;
  std::string format = "text";
  bool no_hypothesis = false;
  bool probe_only = false;
  ProbeConfig cfg;
};

const std::map<std::string, std::size_t> arity{
    {"kernel", 1},      {"cokernel", 1},          {"classify", 1},            {"strict", 1},
    {"pullback", 2},    {"pushout", 2},           {"semistable-kernel", 1},   {"semistable-cokernel", 1},
    {"pair-check", 2},  {"split-check", 2},
};

const std::vector<std::string> suite_names{"universal", "transport", "axioms",     "kelly",
                                           "theorem",   "structure", "maximality", "coherence"};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputFailure(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputFailure(path + ": malformed JSON: " + e.what());
  }
}

/// A file holds one morphism, an array of morphisms, or a pair {"f", "g"}.
std::vector<json> morphism_documents(const std::vector<std::string>& paths) {
  std::vector<json> docs;
  for (const auto& p : paths) {
    json j = load_json(p);
    if (j.is_array()) {
      for (auto& e : j) docs.push_back(std::move(e));
    } else if (j.is_object() && j.contains("f") && j.contains("g") && !j.contains("matrix")) {
      docs.push_back(j["f"]);
      docs.push_back(j["g"]);
    } else {
      docs.push_back(std::move(j));
    }
  }
  return docs;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EXACTCAT_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputFailure(std::string("EXACTCAT_SEED: not a nonnegative integer: ") + env);
  }
  return 42;
}

int exit_for(const Verdict& v) {
  if (v.is_yes()) return Success;
  if (v.is_no()) return Refuted;
  return Undecided;
}

void emit(const Options& o, const json& doc, std::ostream& out) {
  if (o.format == "json") out << doc.dump(2) << "\n";
  else out << engine::render_document(doc);
}

void emit(const Options& o, const Report& r, std::ostream& out) {
  out << (o.format == "json" ? engine::render_json(r) : engine::render_text(r));
}

json profile_json(const MorphismProfile& p) {
  return json{{"mono", p.mono},           {"epi", p.epi},       {"iso", p.iso},
              {"is_kernel", p.is_kernel}, {"is_cokernel", p.is_cokernel}, {"strict", p.strict}};
}

template <engine::RuledInstance C>
int run_suite(const C& c, const Options& o, std::ostream& out) {
  if (o.inputs.size() != 1) throw InputFailure("suite: expected one suite name");
  const std::string& name = o.inputs.front();
  const std::map<std::string, std::function<Report(const C&, const ProbeConfig&)>> suites{
      {"universal", engine::universal_suite<C>},   {"transport", engine::transport_suite<C>},
      {"axioms", engine::axiom_suite<C>},          {"kelly", engine::kelly_suite<C>},
      {"theorem", engine::theorem_diagram_suite<C>}, {"structure", engine::structure_probe<C>},
      {"maximality", engine::maximality_suite<C>}, {"coherence", engine::coherence_suite<C>},
  };
  const auto it = suites.find(name);
  if (it == suites.end()) throw InputFailure("suite: unknown suite \"" + name + "\"");
  const Report r = it->second(c, o.cfg);
  emit(o, r, out);
  return r.clean() ? Success : Refuted;
}

template <engine::RuledInstance C>
int run_verb(const C& c, const Options& o, std::ostream& out) {
  if (o.verb == "suite") return run_suite(c, o, out);

  const auto docs = morphism_documents(o.inputs);
  const std::size_t want = arity.at(o.verb);
  if (docs.size() != want)
    throw InputFailure(o.verb + ": expected " + std::to_string(want) + " morphism(s), got " + std::to_string(docs.size()));
  std::vector<Mor<C>> m;
  for (const auto& d : docs) m.push_back(morphism_from_json(c, d));
  auto mj = [&](const Mor<C>& f) { return morphism_to_json(c, f); };

  json doc{{"verb", o.verb}, {"category", std::string(c.name())}};
  int code = Success;
  if (o.verb == "kernel") {
    const auto kd = kernel(c, m[0]);
    doc["object"] = c.object_to_json(kd.obj);
    doc["inclusion"] = mj(kd.inclusion);
  } else if (o.verb == "cokernel") {
    const auto cd = cokernel(c, m[0]);
    doc["object"] = c.object_to_json(cd.obj);
    doc["projection"] = mj(cd.projection);
  } else if (o.verb == "pullback") {
    const auto sq = pullback(c, m[0], m[1]);
    doc["object"] = c.object_to_json(sq.obj);
    doc["p_Y"] = mj(sq.p_Y);
    doc["p_T"] = mj(sq.p_T);
  } else if (o.verb == "pushout") {
    const auto sq = pushout(c, m[0], m[1]);
    doc["object"] = c.object_to_json(sq.obj);
    doc["s_Y"] = mj(sq.s_Y);
    doc["s_T"] = mj(sq.s_T);
  } else if (o.verb == "classify") {
    doc["profile"] = profile_json(classify(c, m[0]));
  } else if (o.verb == "strict") {
    const auto sf = induced_strict_map(c, m[0]);
    const bool strict = c.is_iso(sf.fbar);
    doc["strict"] = strict;
    doc["fbar"] = mj(sf.fbar);
    code = strict ? Success : Refuted;
  } else if (o.verb == "semistable-cokernel" || o.verb == "semistable-kernel") {
    const bool cok = o.verb == "semistable-cokernel";
    Verdict v;
    if (o.probe_only) v = cok ? engine::probe_semistable_cokernel(c, m[0], o.cfg) : engine::probe_semistable_kernel(c, m[0], o.cfg);
    else v = cok ? engine::decide_semistable_cokernel(c, m[0], o.cfg) : engine::decide_semistable_kernel(c, m[0], o.cfg);
    doc["verdict"] = v.to_json();
    code = exit_for(v);
  } else if (o.verb == "pair-check") {
    const Verdict v = engine::in_maximal_exact(c, m[0], m[1], o.cfg);
    doc["verdict"] = v.to_json();
    code = exit_for(v);
  } else if (o.verb == "split-check") {
    engine::check_pair_invariants(c, m[0], m[1]);
    const bool split = engine::is_split_exact(c, m[0], m[1]);
    doc["split"] = split;
    code = split ? Success : Refuted;
  }
  emit(o, doc, out);
  return code;
}

std::string detect_category(const Options& o) {
  if (!o.category.empty()) return o.category;
  if (o.verb == "suite") throw InputFailure("category: --category is required for suites");
  for (const auto& d : morphism_documents(o.inputs))
    if (d.is_object() && d.contains("category") && d["category"].is_string()) return d["category"].get<std::string>();
  throw InputFailure("category: not given on the command line or in the input");
}

int dispatch(const Options& o, std::ostream& out) {
  const std::string cat = detect_category(o);
  if (cat == "FinVectQ") return run_verb(FinVectQ{}, o, out);
  if (cat == "LatticeZ") return run_verb(LatticeZ{}, o, out);
  if (cat == "MonoPairsQ") return run_verb(MonoPairsQ(!o.no_hypothesis), o, out);
  throw InputFailure("category: unknown category \"" + cat + "\"");
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact structures on additive categories with exact arithmetic", "exactcat"};
  std::vector<std::string> verbs{"suite"};
  for (const auto& [v, n] : arity) verbs.push_back(v);
  app.add_option("verb", o.verb, "Operation to run")->required()->check(CLI::IsMember(verbs));
  app.add_option("inputs", o.inputs, "Morphism files, or the suite name");
  app.add_option("--category", o.category, "FinVectQ, LatticeZ or MonoPairsQ");
  auto* seed = app.add_option("--seed", o.cfg.seed, "Random seed (default 42 or EXACTCAT_SEED)");
  app.add_option("--samples", o.cfg.samples, "Cases per suite or probes per semi-stability question");
  app.add_option("--max-dim", o.cfg.max_dim, "Largest sampled dimension");
  app.add_option("--max-entry", o.cfg.max_entry, "Largest sampled matrix entry")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", o.cfg.threads, "Worker threads for suites, 0 for all cores");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-hypothesis", o.no_hypothesis, "MonoPairsQ: decide semi-stability by probing only");
  app.add_flag("--probe-only", o.probe_only, "Semi-stability verbs: skip rules and probe");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : InputError;
  }
  try {
    if (seed->count() == 0) o.cfg.seed = default_seed();
    return dispatch(o, out);
  } catch (const InputFailure& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const linalg::MatrixFormatError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return InputError;
}

}  // namespace exactcat::cli
