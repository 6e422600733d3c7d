// kstate: decide whether Kauffman state surfaces are fibers, with
// checkable certificates, a homology obstruction matrix and an Alexander
// polynomial oracle.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kstate/alexander.hpp"
#include "kstate/classify.hpp"
#include "kstate/corpus.hpp"
#include "kstate/decide.hpp"
#include "kstate/homology.hpp"
#include "kstate/log.hpp"

using namespace kstate;

namespace {

struct CommonOptions {
  std::string pd;
  std::string file;
  std::string state;
  bool seifert = false;
  bool all_a = false;
  bool all_b = false;
  std::string format = "text";
  bool allow_disconnected = false;
  bool strict_alternating = false;
};

void add_diagram_options(CLI::App* cmd, CommonOptions& opt) {
  auto* pd = cmd->add_option("--pd", opt.pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
  auto* file = cmd->add_option("--file", opt.file, "file holding a PD code");
  pd->excludes(file);
  cmd->add_flag("--allow-disconnected", opt.allow_disconnected,
                "accept split diagrams (validate only)");
}

void add_state_options(CLI::App* cmd, CommonOptions& opt) {
  auto* state = cmd->add_option("--state", opt.state, "explicit A/B label string");
  auto* seifert = cmd->add_flag("--seifert", opt.seifert, "orientation-induced state");
  auto* all_a = cmd->add_flag("--all-a", opt.all_a, "A at every crossing");
  auto* all_b = cmd->add_flag("--all-b", opt.all_b, "B at every crossing");
  state->excludes(seifert)->excludes(all_a)->excludes(all_b);
  seifert->excludes(all_a)->excludes(all_b);
  all_a->excludes(all_b);
}

void add_format_option(CLI::App* cmd, CommonOptions& opt, const std::string& allowed) {
  cmd->add_option("--format", opt.format, "output format (" + allowed + ")")
      ->check(CLI::IsMember(CLI::detail::split(allowed, '|')));
}

Diagram load_diagram(const CommonOptions& opt) {
  std::string text = opt.pd;
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) fail(ErrorKind::SyntaxError, "cannot open " + opt.file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  if (text.empty()) throw CLI::ValidationError("--pd or --file is required");
  return parse_pd(text, opt.allow_disconnected);
}

KauffmanState load_state(const Diagram& diagram, const CommonOptions& opt) {
  if (opt.seifert) return seifert_state(diagram);
  if (opt.all_a) return KauffmanState::all_a(diagram.crossing_count());
  if (opt.all_b) return KauffmanState::all_b(diagram.crossing_count());
  if (!opt.state.empty()) return make_state(diagram, opt.state);
  throw CLI::ValidationError("one of --state/--seifert/--all-a/--all-b is required");
}

int run_validate(const CommonOptions& opt) {
  const Diagram d = load_diagram(opt);
  if (opt.format == "json") {
    nlohmann::json j;
    j["valid"] = true;
    j["crossings"] = d.crossing_count();
    j["edges"] = d.edge_count();
    j["faces"] = d.face_count();
    j["components"] = d.component_count();
    j["connected"] = d.connected();
    j["alternating_diagram"] = d.alternating_diagram();
    j["reduced_diagram"] = d.reduced_diagram();
    j["pd"] = d.to_pd();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "valid: true\ncrossings: " << d.crossing_count() << "\nedges: " << d.edge_count()
              << "\nfaces: " << d.face_count() << "\ncomponents: " << d.component_count()
              << "\nconnected: " << (d.connected() ? "true" : "false")
              << "\nalternating_diagram: " << (d.alternating_diagram() ? "true" : "false")
              << "\nreduced_diagram: " << (d.reduced_diagram() ? "true" : "false")
              << "\npd: " << d.to_pd() << '\n';
  }
  return 0;
}

int run_classify(const CommonOptions& opt) {
  const Diagram d = load_diagram(opt);
  const KauffmanState s = load_state(d, opt);
  const SmoothedMap m = smooth(d, s);
  const AlternatingRule rule =
      opt.strict_alternating ? AlternatingRule::GloballyConsecutive : AlternatingRule::PerRegion;
  if (opt.format == "json") {
    std::cout << classification_json(m, rule) << '\n';
    return 0;
  }
  const auto [alternating, alt_witness] = is_alternating_state(m, rule);
  const auto [homogeneous, hom_witness] = is_homogeneous_state(m);
  std::cout << "state: " << s.str() << "\nalternating: " << (alternating ? "true" : "false")
            << "\nhomogeneous: " << (homogeneous ? "true" : "false") << '\n';
  auto show = [](const ClassificationWitness& w) {
    std::cout << "witness: "
              << (w.kind == WitnessKind::AlternatingViolation ? "ALTERNATING_VIOLATION"
                                                              : "HOMOGENEITY_VIOLATION");
    if (w.circle >= 0) std::cout << " circle=" << w.circle;
    std::cout << " region=" << w.region << " bands=" << w.bands[0] << ',' << w.bands[1] << '\n';
  };
  if (alt_witness) show(*alt_witness);
  if (hom_witness) show(*hom_witness);
  return 0;
}

int run_decide(const CommonOptions& opt) {
  const Diagram d = load_diagram(opt);
  const KauffmanState s = load_state(d, opt);
  const FiberVerdict v = decide_fiber(d, s);
  if (opt.format == "json") {
    std::cout << to_json_string(v) << '\n';
  } else if (opt.format == "dot") {
    const StateGraph graph = build_graph(smooth(d, s));
    const ReducedGraph reduced = reduce(graph);
    std::cout << "// verdict: " << to_string(v.verdict)
              << " certificate: " << to_string(v.certificate.kind) << '\n'
              << graph.to_dot() << reduced.to_dot();
  } else {
    std::cout << "state: " << s.str() << "\nverdict: " << to_string(v.verdict)
              << "\ncertificate: " << to_string(v.certificate.kind) << "\nstate_class:";
    if (v.state_class.alternating) std::cout << " alternating";
    if (v.state_class.homogeneous) std::cout << " homogeneous";
    if (!v.state_class.alternating && !v.state_class.homogeneous) std::cout << " none";
    std::cout << '\n';
  }
  return 0;
}

int run_census(const CommonOptions& opt, int max_crossings, int threads) {
  const Diagram d = load_diagram(opt);
  const CensusResult r = census(d, max_crossings, threads);
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const CensusRow& row : r.rows) {
      rows.push_back({{"state", row.state},
                      {"circles", row.circles},
                      {"euler", row.euler},
                      {"alternating", row.alternating},
                      {"homogeneous", row.homogeneous},
                      {"verdict", std::string(to_string(row.verdict))},
                      {"certificate", std::string(to_string(row.certificate))}});
    }
    nlohmann::json j{{"rows", rows},
                     {"fibered", r.fibered},
                     {"not_fibered", r.not_fibered},
                     {"unknown", r.unknown}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << to_csv(r);
  }
  return 0;
}

int run_matrix(const CommonOptions& opt) {
  const Diagram d = load_diagram(opt);
  const KauffmanState s = load_state(d, opt);
  const ReducedGraph reduced = reduce(build_graph(smooth(d, s)));
  const HomologyMatrix m = homology_matrix(reduced);
  const DominantDetReport report = check_dominant_det(m.entries);
  if (opt.format == "json") {
    nlohmann::json j = nlohmann::json::parse(to_json_string(m));
    j["hypotheses_hold"] = report.hypotheses_hold;
    j["determinant"] = report.determinant.str();
    j["conclusion_verified"] = report.conclusion_verified;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "size: " << m.entries.size() << '\n';
    for (const auto& row : m.entries) {
      std::cout << "row:";
      for (const BigInt& x : row) std::cout << ' ' << x;
      std::cout << '\n';
    }
    std::cout << "hypotheses_hold: " << (report.hypotheses_hold ? "true" : "false")
              << "\ndeterminant: " << report.determinant
              << "\nconclusion_verified: " << (report.conclusion_verified ? "true" : "false")
              << "\nouter_region: " << m.outer_region << '\n';
  }
  return 0;
}

int run_alexander(const CommonOptions& opt) {
  const Diagram d = load_diagram(opt);
  const LaurentPolynomial delta = alexander_polynomial(d);
  std::string murasugi = "not applicable";
  if (d.component_count() == 1 && d.alternating_diagram() && d.reduced_diagram())
    murasugi = murasugi_verdict(d) == MurasugiVerdict::Fibered ? "FIBERED" : "NOT_FIBERED";
  if (opt.format == "json") {
    nlohmann::json j;
    j["polynomial"] = delta.serialize();
    j["pretty"] = delta.pretty();
    j["monic"] = delta.monic();
    j["determinant"] = delta.evaluate(-1).str();
    j["murasugi"] = murasugi;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "polynomial: " << delta.serialize() << "\npretty: " << delta.pretty()
              << "\nmonic: " << (delta.monic() ? "true" : "false")
              << "\ndeterminant: " << delta.evaluate(-1) << "\nmurasugi: " << murasugi << '\n';
  }
  return 0;
}

int run_corpus_check(const std::string& path, const std::string& format) {
  const auto entries = load_corpus(path);
  int checked = 0, skipped = 0, failures = 0;
  nlohmann::json report = nlohmann::json::array();
  for (const CorpusEntry& entry : entries) {
    const Diagram d = parse_pd(entry.pd);
    std::vector<std::string> problems;
    std::string status = "ok";
    if (d.alternating_diagram() != entry.alternating_diagram)
      problems.push_back("alternating flag mismatch");
    if (entry.alexander && d.component_count() == 1 &&
        !(alexander_polynomial(d) == *entry.alexander))
      problems.push_back("alexander polynomial mismatch");
    if (entry.alternating_diagram && d.component_count() == 1 && d.reduced_diagram()) {
      const bool monic_fibered = murasugi_verdict(d) == MurasugiVerdict::Fibered;
      if (monic_fibered != entry.fibered) problems.push_back("murasugi vs fibered flag");
      const FiberVerdict v = decide_fiber(d, seifert_state(d));
      if (v.state_class.alternating || v.state_class.homogeneous) {
        if ((v.verdict == Verdict::Fibered) != entry.fibered)
          problems.push_back("decide_fiber vs fibered flag");
      }
      ++checked;
    } else {
      status = "skip";
      ++skipped;
    }
    if (!problems.empty()) {
      status = "FAIL";
      ++failures;
    }
    if (format == "json") {
      report.push_back({{"name", entry.name}, {"status", status}, {"problems", problems}});
    } else {
      std::cout << entry.name << ": " << status;
      for (const std::string& p : problems) std::cout << " [" << p << ']';
      std::cout << '\n';
    }
  }
  if (format == "json") {
    nlohmann::json j{{"entries", report},
                     {"checked", checked},
                     {"skipped", skipped},
                     {"failures", failures}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "checked: " << checked << " skipped: " << skipped << " failures: " << failures
              << '\n';
  }
  return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"kstate: fiberedness of Kauffman state surfaces, with certificates"};
  app.require_subcommand(1);

  CommonOptions opt;
  int max_crossings = 20;
  int threads = 0;
  std::string corpus_path;

  auto* validate = app.add_subcommand("validate", "parse and validate a PD code");
  add_diagram_options(validate, opt);
  add_format_option(validate, opt, "text|json");

  auto* classify = app.add_subcommand("classify", "alternating/homogeneous classification");
  add_diagram_options(classify, opt);
  add_state_options(classify, opt);
  add_format_option(classify, opt, "text|json");
  classify->add_flag("--strict-alternating", opt.strict_alternating,
                     "use the globally-consecutive reading of the alternating condition");

  auto* decide = app.add_subcommand("decide", "fiberedness verdict with certificate");
  add_diagram_options(decide, opt);
  add_state_options(decide, opt);
  add_format_option(decide, opt, "text|json|dot");

  auto* census_cmd = app.add_subcommand("census", "verdicts for all 2^n states");
  add_diagram_options(census_cmd, opt);
  add_format_option(census_cmd, opt, "csv|json|text");
  census_cmd->add_option("--max-crossings", max_crossings, "refuse larger diagrams (default 20)");
  census_cmd->add_option("--threads", threads, "worker threads (default: hardware)");

  auto* matrix = app.add_subcommand("matrix", "homology obstruction matrix of the reduced graph");
  add_diagram_options(matrix, opt);
  add_state_options(matrix, opt);
  add_format_option(matrix, opt, "text|json");

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial and Murasugi verdict");
  add_diagram_options(alexander, opt);
  add_format_option(alexander, opt, "text|json");

  auto* corpus_check = app.add_subcommand("corpus-check", "validate a diagram table");
  corpus_check->add_option("--file", corpus_path, "corpus CSV path")->required();
  add_format_option(corpus_check, opt, "text|json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(opt);
    if (classify->parsed()) return run_classify(opt);
    if (decide->parsed()) return run_decide(opt);
    if (census_cmd->parsed()) return run_census(opt, max_crossings, threads);
    if (matrix->parsed()) return run_matrix(opt);
    if (alexander->parsed()) return run_alexander(opt);
    if (corpus_check->parsed()) return run_corpus_check(corpus_path, opt.format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Internal) {
      std::cerr << "internal invariant failure: " << e.what() << '\n';
      return 3;
    }
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
