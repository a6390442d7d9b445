// qbundle: verification front end for the symbolic bundle engine.
//
//   qbundle verify monopole [--params p=1/2,q=1/3] [--n 2]
//   qbundle verify presentation FILE
//   qbundle verify hopf FILE
//   qbundle basis FILE --degree N [--length L]
//   qbundle nf FILE --expr "xs*xs*x"
//
// Exit status: 0 when every check passes, 1 when one fails, 2 on bad usage,
// unreadable input or an engine error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qbundle/qbundle.hpp"
#include "qbundle/report_json.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string report = "text";
  int degree_bound = 4;
  std::string params = "symbolic";
  std::size_t max_steps = 1000000;
  int n = 1;
  bool corrupt = false;
  std::string file;
  std::string expr;
  int degree = 0;
  std::size_t length = 4;
};

std::string params_text(const qb::ParamBindings& b) {
  if (b.empty()) return "symbolic";
  std::string out;
  for (const auto& [k, v] : b) out += (out.empty() ? "" : ",") + k + "=" + v.to_string();
  return out;
}

void print_text(std::ostream& os, const std::string& title, const json& run, const qb::Report& rep) {
  os << title << "\n";
  for (const auto& [k, v] : run.items())
    if (k != "command") os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& n : rep.notes) os << "  note: " << n << "\n";
  os << "\n";
  for (const auto& c : rep.checks) {
    std::string st = qb::status_name(c.status);
    st.resize(8, ' ');
    os << st << c.name << "  (" << c.samples << (c.samples == 1 ? " sample)" : " samples)") << "\n";
    if (c.status == qb::Status::fail) {
      os << "        identity: " << c.anchor << "\n";
      os << "        residue: " << c.residue << "\n";
    }
    for (const auto& n : c.notes) os << "        " << n << "\n";
  }
  os << "\n"
     << "summary: " << rep.count(qb::Status::pass) << " pass, " << rep.count(qb::Status::fail) << " fail, "
     << rep.count(qb::Status::skipped) << " skipped, " << rep.count(qb::Status::vacuous) << " vacuous\n";
}

int emit(const Options& o, const std::string& title, json run, const qb::Report& rep, double seconds) {
  run["report"] = o.report;
  if (o.report == "json") {
    std::cout << qb::report_to_json(rep, run, seconds).dump(2) << "\n";
  } else {
    print_text(std::cout, title, run, rep);
    std::cerr << "time: " << seconds << " s\n";
  }
  return rep.all_passed() ? 0 : 1;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int verify_monopole(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  qb::MonopoleConfig cfg;
  cfg.params = qb::parse_param_list(o.params);
  cfg.n = o.n;
  cfg.degree_bound = o.degree_bound;
  cfg.max_steps = o.max_steps;
  cfg.corrupt_tau21 = o.corrupt;
  auto s = qb::build_scenario(cfg);
  qb::Report rep = qb::verify_all(*s);
  json run{{"command", "verify monopole"},
           {"params", params_text(cfg.params)},
           {"n", cfg.n},
           {"degree_bound", cfg.degree_bound},
           {"max_steps", cfg.max_steps}};
  if (o.corrupt) run["corrupt_transition"] = true;
  return emit(o, "verify monopole", run, rep, since(t0));
}

json file_run(const Options& o, const std::string& command, const qb::ParamBindings& b) {
  return json{{"command", command},
              {"file", o.file},
              {"params", params_text(b)},
              {"degree_bound", o.degree_bound},
              {"max_steps", o.max_steps}};
}

qb::PresentationFile load(const Options& o, const std::set<std::string>& extra = {}) {
  return qb::load_presentation_file(o.file, extra, qb::parse_param_list(o.params));
}

int verify_presentation(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto f = load(o);
  const qb::Presentation& P = *f.pres;
  qb::Report rep;
  rep.notes = P.notes;
  qb::CheckBuilder b("confluence." + P.name, "all critical pairs resolve");
  auto cr = qb::check_local_confluence(P);
  b.sample(cr.ok(), cr.ok() ? std::string() : qb::confluence_failure_text(cr, P));
  rep.add(b.done());
  std::mt19937 rng(20240611);
  rep.add(qb::check_rewriting_properties(P, rng, 200, static_cast<std::size_t>(o.degree_bound)));
  if (P.has_differential) {
    rep.add(qb::check_differential_compatible(P));
    rep.add(qb::check_d_squared(P));
    rep.add(qb::check_d_squared_random(P, rng, 50, 3, static_cast<std::size_t>(o.degree_bound)));
  }
  return emit(o, "verify presentation " + o.file, file_run(o, "verify presentation", f.bindings), rep,
              since(t0));
}

std::map<std::string, std::string> section_map(const std::vector<std::string>& lines, const std::string& name) {
  std::map<std::string, std::string> out;
  for (const auto& l : lines) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw qb::ConstructionError("[" + name + "] expects gen = expr: " + l);
    out[qb::detail::trim(l.substr(0, eq))] = qb::detail::trim(l.substr(eq + 1));
  }
  return out;
}

int verify_hopf(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  const std::set<std::string> extra{"coproduct", "counit", "antipode", "inverse_antipode"};
  auto f = load(o, extra);
  for (const char* need : {"coproduct", "counit", "antipode"})
    if (!f.extra.count(need)) throw qb::ConstructionError(std::string("missing section [") + need + "]");
  auto sec = [&](const std::string& n) {
    return f.extra.count(n) ? section_map(f.extra.at(n), n) : std::map<std::string, std::string>{};
  };
  qb::HopfAlgebra A = qb::make_hopf(f.pres, sec("coproduct"), sec("counit"), sec("antipode"),
                                    sec("inverse_antipode"), f.bindings);
  std::vector<qb::NCPoly> samples;
  for (const auto& w : qb::normal_words(*A.H, static_cast<std::size_t>(o.degree_bound)))
    samples.push_back(qb::NCPoly::word(w));
  qb::Report rep;
  rep.notes = f.pres->notes;
  qb::CheckBuilder b("confluence." + A.H->name, "all critical pairs resolve");
  auto cr = qb::check_local_confluence(*A.H);
  b.sample(cr.ok(), cr.ok() ? std::string() : qb::confluence_failure_text(cr, *A.H));
  rep.add(b.done());
  rep.append(qb::check_hopf_axioms(A, samples));
  return emit(o, "verify hopf " + o.file, file_run(o, "verify hopf", f.bindings), rep, since(t0));
}

int basis(const Options& o) {
  auto f = load(o);
  const qb::Presentation& P = *f.pres;
  auto words = qb::graded_basis(P, o.degree, o.length);
  if (o.report == "json") {
    json j{{"schema_version", qb::kReportSchemaVersion},
           {"run", file_run(o, "basis", f.bindings)},
           {"degree", o.degree},
           {"length", o.length},
           {"count", words.size()}};
    j["basis"] = json::array();
    for (const auto& w : words) j["basis"].push_back(P.word_string(w));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& w : words) std::cout << P.word_string(w) << "\n";
  }
  return 0;
}

int normal_form_cmd(const Options& o) {
  auto f = load(o);
  const qb::Presentation& P = *f.pres;
  qb::NCPoly nf = qb::normal_form(qb::parse_expression(o.expr, P, f.bindings), P);
  if (o.report == "json") {
    json j{{"schema_version", qb::kReportSchemaVersion},
           {"run", file_run(o, "nf", f.bindings)},
           {"input", o.expr},
           {"normal_form", qb::to_string(nf, P)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << qb::to_string(nf, P) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Symbolic checks for quantum principal bundles"};
  app.require_subcommand(1);
  app.add_option("--report", o.report, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--degree-bound", o.degree_bound, "Word length or |k| bound for sampled checks")
      ->check(CLI::Range(0, 64));
  app.add_option("--params", o.params, "Parameter values, e.g. p=1/2,nu=1/3, or 'symbolic'");
  app.add_option("--max-steps", o.max_steps, "Rewrite step limit per normal form")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a verification suite")->fallthrough();
  verify->require_subcommand(1);
  auto* mono = verify->add_subcommand("monopole", "The q-monopole bundle over the glued quantum sphere")
                   ->fallthrough();
  mono->add_option("--n", o.n, "Winding of the transition functions")->check(CLI::Range(1, 16));
  mono->add_flag("--corrupt-transition", o.corrupt, "Use tau12 for tau21 (negative test)");
  auto* vpres = verify->add_subcommand("presentation", "Confluence and rewriting properties")->fallthrough();
  vpres->add_option("file", o.file, "Presentation file")->required()->check(CLI::ExistingFile);
  auto* vhopf = verify->add_subcommand("hopf", "Hopf algebra axioms")->fallthrough();
  vhopf->add_option("file", o.file, "Hopf algebra file")->required()->check(CLI::ExistingFile);

  auto* bas = app.add_subcommand("basis", "Normal words of a form degree")->fallthrough();
  bas->add_option("file", o.file, "Presentation file")->required()->check(CLI::ExistingFile);
  bas->add_option("--degree", o.degree, "Form degree")->required()->check(CLI::NonNegativeNumber);
  bas->add_option("--length", o.length, "Maximal word length");

  auto* nf = app.add_subcommand("nf", "Normal form of an expression")->fallthrough();
  nf->add_option("file", o.file, "Presentation file")->required()->check(CLI::ExistingFile);
  nf->add_option("--expr", o.expr, "Expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    qb::StepLimitScope steps(o.max_steps);
    if (mono->parsed()) return verify_monopole(o);
    if (vpres->parsed()) return verify_presentation(o);
    if (vhopf->parsed()) return verify_hopf(o);
    if (bas->parsed()) return basis(o);
    if (nf->parsed()) return normal_form_cmd(o);
  } catch (const qb::Error& e) {
    std::cerr << "qbundle: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qbundle: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
