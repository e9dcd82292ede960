#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperlap/error.hpp"
#include "hyperlap/family_spectra.hpp"
#include "hyperlap/io.hpp"
#include "hyperlap/oracle.hpp"

namespace hyperlap::cli {

namespace {

constexpr double kCrossCheck = 1e-8;
constexpr double kCompareTol = 1e-6;

std::vector<unsigned> parse_k_list(const std::string& text) {
  std::vector<unsigned> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("--k", "expected integers like 3,4,5");
    ks.push_back(static_cast<unsigned>(v));
  }
  if (ks.empty()) throw CLI::ValidationError("--k", "empty list");
  return ks;
}

void add_solver_flags(CLI::App* app, SolverOptions& o) {
  app->add_option("--seed", o.seed, "oracle seed");
  app->add_option("--tol", o.tol_residual, "eigenpair residual tolerance")->check(CLI::PositiveNumber);
  app->add_option("--tol-root", o.tol_root, "root bracket width")->check(CLI::PositiveNumber);
  app->add_option("--tol-iter", o.tol_iter, "power-iteration bound gap")->check(CLI::PositiveNumber);
  app->add_option("--restarts", o.restarts, "oracle restarts")->check(CLI::PositiveNumber);
  app->add_option("--max-iter", o.max_iter, "iteration budget")->check(CLI::PositiveNumber);
}

CLI::Option* add_output(CLI::App* app, CommandRequest& r) {
  app->add_option("-o,--output", r.output, "output file (default stdout)");
  return app->add_option("--format", r.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

const auto kUniformity = CLI::Range(3u, 64u);

// ---- dispatch helpers ----

FamilySpec family_spec(const CommandRequest& r) {
  auto need = [&](std::size_t v, const char* name) {
    if (v == 0) throw Error(ErrorCode::InvalidFamilyParameter, "family " + r.family + " needs --" + name);
    return v;
  };
  if (r.family == "hyperstar") return Hyperstar{r.k, need(r.d, "d")};
  if (r.family == "hypercycle") return Hypercycle{r.k, need(r.s, "s")};
  if (r.family == "hyperpath") return Hyperpath{r.k, need(r.d, "d")};
  if (r.family == "sunflower") return Sunflower{r.k};
  if (r.family == "complete") return Complete{r.k, need(r.n, "n")};
  if (r.family == "power") {
    if (r.graph.empty()) throw Error(ErrorCode::InvalidFamilyParameter, "family power needs --graph");
    return PowerOf{io::load_graph(r.graph), r.k};
  }
  throw Error(ErrorCode::InvalidFamilyParameter, "unknown family " + r.family);
}

void emit(const CommandRequest& r, const std::string& content, std::ostream& out, ExitReport& report) {
  if (r.output.empty()) {
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
  } else {
    io::write_file_atomic(r.output, content);
    report.outputs.push_back(r.output);
  }
}

std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

bool is_csv(const CommandRequest& r, bool csv_default = false) {
  return r.format.empty() ? csv_default : r.format == "csv";
}

// Closed-form catalog for a recognized family.
SpectrumReport catalog_for(const UniformHypergraph& h, const SolverOptions& opts) {
  const auto family = identify_family(h);
  if (family) {
    if (const auto* f = std::get_if<Hyperstar>(&*family); f && f->d >= 2) return hyperstar_spectrum(f->k, f->d, opts);
    if (const auto* f = std::get_if<Hyperpath>(&*family); f && f->d == 3 && f->k % 2 == 1) {
      return hyperpath3_spectrum(f->k, opts);
    }
    if (const auto* f = std::get_if<Hypercycle>(&*family); f && f->s == 3 && f->k % 2 == 1) {
      return hypercycle3_spectrum(f->k, opts);
    }
  }
  throw Error(ErrorCode::FamilyMismatch,
              "no spectrum catalog for " + (family ? describe(*family) : std::string("this hypergraph")) +
                  "; catalogs cover hyperstars (d >= 2) and odd-uniform hyperpath(k,3), hypercycle(k,3)");
}

SpectrumReport spectrum_request(const CommandRequest& r) {
  if (!r.family.empty()) {
    if (r.family == "hyperstar") return hyperstar_spectrum(r.k, r.d, r.opts);
    if (r.family == "hyperpath3") return hyperpath3_spectrum(r.k, r.opts);
    if (r.family == "hypercycle3") return hypercycle3_spectrum(r.k, r.opts);
    throw Error(ErrorCode::InvalidFamilyParameter, "spectrum families are hyperstar, hyperpath3, hypercycle3");
  }
  if (r.input.empty()) throw Error(ErrorCode::InvalidFamilyParameter, "spectrum needs a hypergraph file or --family");
  return catalog_for(io::load_hypergraph(r.input), r.opts);
}

DenseVector flip_cored(const UniformHypergraph& h, DenseVector x) {
  const auto cored = cored_structure(h);
  for (Vertex v : *cored) x[v] = -x[v];
  return x;
}

DenseVector indicator(std::size_t n, std::size_t v) {
  DenseVector x(n, 0.0);
  x[v] = 1.0;
  return x;
}

EigenPair closed_form(const UniformHypergraph& h, TensorKind kind, const SolverOptions& opts) {
  const auto family = identify_family(h);
  const bool laplacian = kind == TensorKind::laplacian;
  const bool odd = h.k() % 2 == 1;
  if (family) {
    if (const auto* f = std::get_if<Hyperstar>(&*family)) {
      if (laplacian && odd) return make_eigenpair(h, kind, static_cast<double>(f->d), indicator(h.n(), 0));
      const auto q = hyperstar_signless_polynomial(f->k, f->d);
      const double mu = bisect(q, q.domain.lo, q.domain.hi, opts);
      DenseVector x(h.n(), 1.0 / (mu - 1.0));
      x[0] = 1.0;
      return make_eigenpair(h, kind, mu, laplacian ? flip_cored(h, std::move(x)) : std::move(x));
    }
    if (std::holds_alternative<Sunflower>(*family)) {
      if (laplacian && odd) return *sunflower_lambda_max(h.k(), opts).witness;
      const auto g = sunflower_function(h.k());
      const double mu = bisect(g, g.domain.lo, g.domain.hi, opts);
      DenseVector x = sunflower_positive_vector(h.k(), mu);
      return make_eigenpair(h, kind, mu, laplacian ? flip_cored(h, std::move(x)) : std::move(x));
    }
    const bool path = std::holds_alternative<Hyperpath>(*family) && std::get<Hyperpath>(*family).d >= 3;
    const bool cycle = std::holds_alternative<Hypercycle>(*family);
    if (laplacian && odd && (path || cycle)) {
      const auto& deg = h.degree_vector();
      const auto junction = static_cast<std::size_t>(std::find(deg.begin(), deg.end(), 2) - deg.begin());
      return make_eigenpair(h, kind, 2.0, indicator(h.n(), junction));
    }
  }
  throw Error(ErrorCode::FamilyMismatch, "no closed form for this hypergraph and tensor kind");
}

EigenPair iterative(const UniformHypergraph& h, TensorKind kind, const SolverOptions& opts) {
  if (kind == TensorKind::signless) return power_iteration_q(h, opts);
  return lambda_l_even_cored(h, opts);
}

// ---- subcommands ----

ExitReport run_gen(const CommandRequest& r, std::ostream& out) {
  ExitReport rep;
  const auto h = generate(family_spec(r));
  emit(r, dump(io::to_json(h)), out, rep);
  rep.summary = "generated " + describe(family_spec(r)) + " with n=" + std::to_string(h.n()) + ", " +
                std::to_string(h.num_edges()) + " edges";
  return rep;
}

ExitReport run_spectrum(const CommandRequest& r, std::ostream& out) {
  ExitReport rep;
  const auto report = spectrum_request(r);
  const auto h = generate(*report.family);
  std::size_t certified = 0;
  for (const auto& e : report.entries) {
    if (!e.certified) continue;
    ++certified;
    if (residual(h, e.witness->kind, e.witness->lambda, e.witness->x) > r.opts.tol_residual) {
      rep.code = kExitVerificationFailed;
    }
  }
  emit(r, is_csv(r) ? io::spectrum_csv(report) : dump(io::to_json(report)), out, rep);
  rep.summary = report.family_text + ": " + std::to_string(report.entries.size()) + " entries, " +
                std::to_string(certified) + " certified";
  if (rep.code != kExitOk) rep.summary += "; a certified witness failed re-verification";
  return rep;
}

ExitReport run_lmax(const CommandRequest& r, std::ostream& out) {
  ExitReport rep;
  const auto h = io::load_hypergraph(r.input);
  const auto kind = tensor_kind_from_string(r.kind);
  if (kind == TensorKind::adjacency) throw Error(ErrorCode::InvalidFamilyParameter, "--kind must be laplacian or signless");
  io::Json result = io::Json::object();
  std::optional<EigenPair> nqz;
  std::optional<EigenPair> closed;
  if (r.method != "closed") {
    nqz = iterative(h, kind, r.opts);
    result["nqz"] = io::to_json(*nqz);
  }
  if (r.method != "nqz") {
    closed = closed_form(h, kind, r.opts);
    result["closed"] = io::to_json(*closed);
    if (closed->residual > r.opts.tol_residual) rep.code = kExitVerificationFailed;
  }
  std::ostringstream summary;
  summary.precision(17);
  if (nqz && closed) {
    const double diff = std::abs(nqz->lambda - closed->lambda);
    result["difference"] = diff;
    result["agree"] = diff <= kCrossCheck;
    if (diff > kCrossCheck) rep.code = kExitVerificationFailed;
    summary << "lambda nqz " << nqz->lambda << ", closed " << closed->lambda << ", difference " << diff;
  } else {
    summary << "lambda " << (nqz ? nqz->lambda : closed->lambda);
  }
  emit(r, dump(result), out, rep);
  rep.summary = summary.str();
  return rep;
}

ExitReport run_oracle(const CommandRequest& r, std::ostream& out) {
  ExitReport rep;
  const auto h = io::load_hypergraph(r.input);
  const auto findings = multistart_search(h, r.opts, tensor_kind_from_string(r.kind));
  io::Json result{{"restarts", r.opts.restarts}, {"seed", r.opts.seed}, {"findings", io::to_json(findings)}};
  std::vector<double> distinct;
  for (const auto& f : findings) {
    if (std::none_of(distinct.begin(), distinct.end(), [&](double l) { return std::abs(l - f.lambda) <= 1e-8; }))
      distinct.push_back(f.lambda);
  }
  rep.summary = std::to_string(findings.size()) + " findings over " + std::to_string(distinct.size()) +
                " distinct eigenvalues";
  if (r.compare) {
    const auto diff = spectrum_compare(catalog_for(h, r.opts), findings, kCompareTol);
    result["comparison"] = io::to_json(diff);
    if (diff.status == CompareStatus::disagree) rep.code = kExitVerificationFailed;
    rep.summary += ", comparison " + std::string(to_string(diff.status));
  }
  emit(r, dump(result), out, rep);
  return rep;
}

ExitReport run_verify(const CommandRequest& r, std::ostream& out) {
  ExitReport rep;
  const auto h = io::load_hypergraph(r.input);
  const auto pair = make_eigenpair(h, tensor_kind_from_string(r.kind), r.lambda, io::load_vector(r.vector_path));
  const bool ok = pair.residual <= r.opts.tol_residual;
  auto result = io::to_json(pair);
  result["accepted"] = ok;
  emit(r, dump(result), out, rep);
  rep.code = ok ? kExitOk : kExitVerificationFailed;
  rep.summary = "residual " + io::format_double(pair.residual) + (ok ? " accepted" : " rejected");
  return rep;
}

ExitReport run_bipartite(const CommandRequest& r, std::ostream& out) {
  ExitReport rep;
  const auto h = io::load_hypergraph(r.input);
  const auto p = odd_bipartition(h);
  io::Json result{{"odd_bipartite", p.has_value()}};
  if (p) {
    auto ids = [](const std::vector<Vertex>& part) {
      io::Json a = io::Json::array();
      for (Vertex v : part) a.push_back(std::size_t{v} + 1);
      return a;
    };
    result["part1"] = ids(p->part1);
    result["part2"] = ids(p->part2);
    if (!is_odd_bipartition(h, *p)) rep.code = kExitVerificationFailed;
  }
  emit(r, dump(result), out, rep);
  rep.summary = p ? "odd-bipartite" : "not odd-bipartite";
  return rep;
}

ExitReport run_conjecture(const CommandRequest& r, std::ostream& out) {
  ExitReport rep;
  MonotoneFamily family = MonotoneFamily::hyperstar;
  std::size_t parameter = r.d;
  if (r.family == "hypercycle") {
    family = MonotoneFamily::hypercycle;
    parameter = r.s;
  } else if (r.family != "hyperstar") {
    throw Error(ErrorCode::InvalidFamilyParameter, "conjecture families are hyperstar and hypercycle");
  }
  const auto result = monotonicity_check(family, parameter, r.k_list, r.opts);
  emit(r, is_csv(r, true) ? io::monotonicity_csv(result) : dump(io::to_json(result)), out, rep);
  rep.code = result.strictly_decreasing ? kExitOk : kExitVerificationFailed;
  rep.summary = result.strictly_decreasing ? "strictly decreasing" : "not strictly decreasing";
  return rep;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MaxIterations:
    case ErrorCode::NoSignChange:
    case ErrorCode::NonPositiveIterate: return kExitNoConvergence;
    case ErrorCode::NotAnEigenpair: return kExitVerificationFailed;
    default: return kExitInvalidInput;
  }
}

}  // namespace

CommandRequest parse_args(const std::vector<std::string>& args) {
  CommandRequest r;
  CLI::App app{"Spectra of uniform hypergraphs: Laplacian and signless Laplacian H-eigenvalues", "hyperlap"};
  app.require_subcommand(1, 1);
  std::string k_list;

  auto* gen = app.add_subcommand("gen", "generate a family member as hypergraph JSON");
  gen->add_option("--family", r.family, "hyperstar|hypercycle|hyperpath|sunflower|power|complete")
      ->required()
      ->check(CLI::IsMember({"hyperstar", "hypercycle", "hyperpath", "sunflower", "power", "complete"}));
  gen->add_option("--k", r.k, "uniformity")->required()->check(kUniformity);
  gen->add_option("--d", r.d, "hyperstar size or hyperpath length")->check(CLI::PositiveNumber);
  gen->add_option("--s", r.s, "hypercycle size")->check(CLI::Range(std::size_t{2}, std::size_t{1'000'000}));
  gen->add_option("--n", r.n, "vertex count of the complete hypergraph")->check(CLI::PositiveNumber);
  gen->add_option("--graph", r.graph, "base graph JSON for power")->check(CLI::ExistingFile);
  add_output(gen, r);

  auto* spectrum = app.add_subcommand("spectrum", "closed-form spectrum with certified witnesses");
  spectrum->add_option("input", r.input, "hypergraph JSON")->check(CLI::ExistingFile);
  spectrum->add_option("--family", r.family, "hyperstar|hyperpath3|hypercycle3")
      ->check(CLI::IsMember({"hyperstar", "hyperpath3", "hypercycle3"}));
  spectrum->add_option("--k", r.k, "uniformity")->check(kUniformity);
  spectrum->add_option("--d", r.d, "hyperstar size")->check(CLI::PositiveNumber);
  add_output(spectrum, r);
  add_solver_flags(spectrum, r.opts);

  auto* lmax = app.add_subcommand("lmax", "largest H-eigenvalue by power iteration and closed form");
  lmax->add_option("input", r.input, "hypergraph JSON")->required()->check(CLI::ExistingFile);
  lmax->add_option("--method", r.method, "nqz|closed|both")->check(CLI::IsMember({"nqz", "closed", "both"}));
  lmax->add_option("--kind", r.kind, "laplacian|signless")->check(CLI::IsMember({"laplacian", "signless"}));
  add_output(lmax, r);
  add_solver_flags(lmax, r.opts);

  auto* oracle = app.add_subcommand("oracle", "multistart Newton search for Laplacian H-eigenpairs");
  oracle->add_option("input", r.input, "hypergraph JSON")->required()->check(CLI::ExistingFile);
  oracle->add_flag("--compare", r.compare, "compare against the closed-form catalog");
  add_output(oracle, r);
  add_solver_flags(oracle, r.opts);

  auto* verify = app.add_subcommand("verify", "residual of a supplied eigenpair");
  verify->add_option("input", r.input, "hypergraph JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--lambda", r.lambda, "eigenvalue")->required();
  verify->add_option("--vec", r.vector_path, "vector JSON {\"x\": [...]}")->required()->check(CLI::ExistingFile);
  verify->add_option("--kind", r.kind, "laplacian|signless|adjacency")
      ->check(CLI::IsMember({"laplacian", "signless", "adjacency"}));
  add_output(verify, r);
  add_solver_flags(verify, r.opts);

  auto* bipartite = app.add_subcommand("bipartite", "odd-bipartition of an even-uniform hypergraph");
  bipartite->add_option("input", r.input, "hypergraph JSON")->required()->check(CLI::ExistingFile);
  add_output(bipartite, r);

  auto* conjecture = app.add_subcommand("conjecture", "monotonicity of the largest eigenvalue in k");
  conjecture->add_option("--family", r.family, "hyperstar|hypercycle")
      ->required()
      ->check(CLI::IsMember({"hyperstar", "hypercycle"}));
  conjecture->add_option("--d", r.d, "hyperstar size")->check(CLI::PositiveNumber);
  conjecture->add_option("--s", r.s, "hypercycle size")->check(CLI::Range(std::size_t{2}, std::size_t{1'000'000}));
  conjecture->add_option("--k", k_list, "ascending list such as 3,4,5,6")->required();
  add_output(conjecture, r);
  add_solver_flags(conjecture, r.opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (conjecture->parsed()) r.k_list = parse_k_list(k_list);
    r.opts.validate();
  } catch (const CLI::CallForHelp&) {
    throw UsageError("", app.help());
  } catch (const CLI::ParseError& e) {
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    throw UsageError(e.what(), sub->help());
  } catch (const Error& e) {
    throw UsageError(e.what(), app.help());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "gen") r.command = Subcommand::gen;
  else if (name == "spectrum") r.command = Subcommand::spectrum;
  else if (name == "lmax") r.command = Subcommand::lmax;
  else if (name == "oracle") r.command = Subcommand::oracle;
  else if (name == "verify") r.command = Subcommand::verify;
  else if (name == "bipartite") r.command = Subcommand::bipartite;
  else r.command = Subcommand::conjecture;

  if (r.command == Subcommand::spectrum && r.input.empty() && r.family.empty()) {
    throw UsageError("spectrum needs a hypergraph file or --family", chosen->help());
  }
  if (r.command == Subcommand::spectrum && !r.family.empty() && r.k == 0) {
    throw UsageError("--family needs --k", chosen->help());
  }
  return r;
}

ExitReport run(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  ExitReport rep;
  try {
    switch (request.command) {
      case Subcommand::gen: rep = run_gen(request, out); break;
      case Subcommand::spectrum: rep = run_spectrum(request, out); break;
      case Subcommand::lmax: rep = run_lmax(request, out); break;
      case Subcommand::oracle: rep = run_oracle(request, out); break;
      case Subcommand::verify: rep = run_verify(request, out); break;
      case Subcommand::bipartite: rep = run_bipartite(request, out); break;
      case Subcommand::conjecture: rep = run_conjecture(request, out); break;
    }
  } catch (const MaxIterationsError& e) {
    std::ostringstream os;
    os.precision(17);
    os << "error: " << e.what() << " (last bracket [" << e.lower() << ", " << e.upper() << "])";
    rep.code = kExitNoConvergence;
    rep.summary = os.str();
  } catch (const Error& e) {
    rep.code = exit_code_for(e.code());
    rep.summary = "error: " + std::string(e.what());
  } catch (const std::exception& e) {
    rep.code = kExitInvalidInput;
    rep.summary = "error: " + std::string(e.what());
  }
  err << rep.summary << '\n';
  return rep;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandRequest request;
  try {
    request = parse_args(args);
  } catch (const UsageError& e) {
    if (std::string(e.what()).empty()) {
      out << e.usage();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n\n" << e.usage();
    return kExitInvalidInput;
  }
  return run(request, out, err).code;
}

}  // namespace hyperlap::cli
