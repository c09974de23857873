#include "ehrtensor/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ehrtensor/classify.hpp"
#include "ehrtensor/ehrhart.hpp"
#include "ehrtensor/json_io.hpp"
#include "ehrtensor/points.hpp"
#include "ehrtensor/tri2d.hpp"

namespace ehrtensor {

namespace {

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer list: " + text);
    }
    if (used != part.size()) throw InputError("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

// "a,b;c,d" -> rows
IntMatrix parse_matrix(const std::string& text) {
  IntMatrix m;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) m.push_back(parse_int_list(row));
  for (const auto& row_values : m)
    if (row_values.size() != m.size()) throw InputError("matrix must be square");
  return m;
}

unsigned threads_from_env() {
  const char* value = std::getenv("EHRTENSOR_THREADS");
  if (!value) return 1;
  const long parsed = std::strtol(value, nullptr, 10);
  return parsed >= 1 && parsed <= 256 ? static_cast<unsigned>(parsed) : 1;
}

Json read_json(const RunConfig& config, std::istream& in) {
  try {
    if (config.input == "-") return Json::parse(in);
    std::ifstream file(config.input);
    if (!file) throw InputError("cannot open " + config.input);
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

LatticePolytope read_polytope(const RunConfig& config, std::istream& in, bool allow_empty = false) {
  auto p = polytope_from_json(read_json(config, in), kMaxAmbientDim);
  if (p.is_empty() && !allow_empty) throw InputError("the polytope is empty");
  return p;
}

void check_rank_cap(int r) {
  if (r < 0 || r > kMaxEhrhartRank) throw InputError("rank must be in [0, " + std::to_string(kMaxEhrhartRank) + "]");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int emit_report(std::ostream& out, Json j, bool passed) {
  emit(out, j);
  return passed ? kExitOk : kExitFailed;
}

int run_count(const RunConfig& c, std::istream& in, std::ostream& out) {
  const auto p = read_polytope(c, in, true);
  emit(out, Json{{"closed", count(p)}, {"relint", count_relint(p)}});
  return kExitOk;
}

int run_tensor(const RunConfig& c, std::istream& in, std::ostream& out) {
  check_rank_cap(c.r);
  const auto p = read_polytope(c, in, true);
  emit(out, tensor_to_json(c.relint ? discrete_moment_relint(p, c.r) : discrete_moment(p, c.r)));
  return kExitOk;
}

int run_ehrhart(const RunConfig& c, std::istream& in, std::ostream& out) {
  check_rank_cap(c.r);
  const auto p = read_polytope(c, in);
  Json arr = Json::array();
  for (const auto& t : ehrhart_tensors(p, c.r).coefficients) arr.push_back(tensor_to_json(t));
  emit(out, arr);
  return kExitOk;
}

int run_reciprocity(const RunConfig& c, std::istream& in, std::ostream& out) {
  check_rank_cap(c.r);
  const auto p = read_polytope(c, in);
  const auto report = check_reciprocity(p, c.r);
  const auto expansion = ehrhart_tensors(p, c.r);
  const int m = p.dim();
  SymTensor alternating(p.ambient_dim(), c.r);
  for (int i = 0; i <= m + c.r; ++i)
    alternating += expansion.coefficients[static_cast<std::size_t>(i)] * Rational(i % 2 == 0 ? 1 : -1);
  alternating *= Rational((m + c.r) % 2 == 0 ? 1 : -1);
  Json j = report_to_json(report);
  j["dim"] = m;
  j["relint"] = tensor_to_json(discrete_moment_relint(p, c.r));
  j["alternating_sum"] = tensor_to_json(alternating);
  return emit_report(out, j, report.passed);
}

int run_covariance(const RunConfig& c, std::istream& in, std::ostream& out) {
  check_rank_cap(c.r);
  const auto p = read_polytope(c, in);
  IntVec y = c.shift.empty() ? IntVec(static_cast<std::size_t>(p.ambient_dim()), 0) : c.shift;
  if (static_cast<int>(y.size()) != p.ambient_dim()) throw InputError("--y has the wrong length");
  const auto report = check_translation_covariance(p, c.r, y);
  Json j = report_to_json(report);
  j["y"] = y;
  return emit_report(out, j, report.passed);
}

int run_equivariance(const RunConfig& c, std::istream& in, std::ostream& out) {
  check_rank_cap(c.r);
  const auto p = read_polytope(c, in);
  IntMatrix phi;
  if (c.matrix) {
    phi = *c.matrix;
    if (static_cast<int>(phi.size()) != p.ambient_dim()) throw InputError("--matrix has the wrong size");
    if (determinant(phi) != 1) throw InputError("--matrix must have determinant 1");
  } else {
    phi = random_unimodular(p.ambient_dim(), c.seed, c.steps).matrix;
  }
  const auto report = check_equivariance(p, c.r, phi);
  Json j = report_to_json(report);
  j["matrix"] = phi;
  return emit_report(out, j, report.passed);
}

int run_nval(const RunConfig& c, std::istream& in, std::ostream& out) {
  const auto p = read_polytope(c, in);
  if (p.ambient_dim() != 2) throw InputError("nval needs a polygon in the plane");
  const SymTensor value = valuation_n(p);
  if (c.independence_trials <= 0) {
    emit(out, tensor_to_json(value));
    return kExitOk;
  }
  if (p.dim() < 2) throw InputError("--check-independence needs a 2-dimensional polygon");
  const auto base = unimodular_triangulation(p);
  const auto trials = static_cast<std::size_t>(c.independence_trials);
  std::vector<int> ok(trials, 0);
  std::vector<std::thread> pool;
  const unsigned workers = std::max(1u, std::min<unsigned>(c.threads, static_cast<unsigned>(trials)));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < trials; t += workers) {
        const auto walked = flip_walk(base, c.seed + t, c.steps);
        ok[t] = validate(walked, p).empty() && valuation_n(walked) == value;
      }
    });
  }
  for (auto& th : pool) th.join();
  std::size_t first_bad = trials;
  for (std::size_t t = 0; t < trials && first_bad == trials; ++t)
    if (!ok[t]) first_bad = t;
  Json report{{"trials", trials}, {"steps", c.steps}, {"seed", c.seed}, {"passed", first_bad == trials}};
  report["first_failing_trial"] = first_bad == trials ? Json(nullptr) : Json(first_bad);
  emit(out, Json{{"nval", tensor_to_json(value)}, {"independence", report}});
  return first_bad == trials ? kExitOk : kExitFailed;
}

int run_rank(const RunConfig& c, std::ostream& out) {
  if (c.survey) {
    for (int r : c.survey_ranks)
      if (r < 2 || r > kMaxSurveyRank) throw InputError("survey ranks must lie in [2, " + std::to_string(kMaxSurveyRank) + "]");
    const auto report = high_rank_survey(c.survey_ranks);
    out << "r,assembly,unknowns,rank,kernel_dim,expected,designated,matches\n";
    for (const auto& row : report.rows) {
      out << row.r << ',' << row.assembly << ',' << row.unknowns << ',' << row.rank << ',' << row.unknowns - row.rank
          << ',' << (row.expected ? std::to_string(*row.expected) : "") << ',' << (row.designated ? "yes" : "no") << ','
          << (row.expected ? (*row.expected == row.rank ? "yes" : "no") : "") << '\n';
    }
    bool passed = report.designated_match();
    if (report.r9) {
      const auto& k = *report.r9;
      out << "# r=9 kernel_dim=" << k.kernel_dim << " l9_in_kernel=" << k.l9_in_kernel
          << " n_in_kernel=" << k.n_in_kernel << " independent=" << k.independent << '\n';
      passed = passed && k.kernel_dim == 2 && k.l9_in_kernel && k.n_in_kernel && k.independent;
    }
    return passed ? kExitOk : kExitFailed;
  }
  if (c.n < 2) throw InputError("--n must be at least 2");
  if (c.r < 2) throw InputError("--r must be at least 2");
  std::optional<ConstraintSystem> system;
  Json j{{"n", c.n}, {"r", c.r}};
  if (c.n == 2) {
    if (c.r > kMaxSurveyRank) throw InputError("planar rank is capped at r = " + std::to_string(kMaxSurveyRank));
    if (c.parity < -1 || c.parity > 1) throw InputError("--parity must be -1, 0 or 1");
    system = planar_system(c.r, c.parity);
    j["parity"] = c.parity;
  } else {
    if (c.n > kMaxPrismDim || c.r > kMaxSurveyRank)
      throw InputError("prism systems are capped at n = " + std::to_string(kMaxPrismDim) + ", r = " + std::to_string(kMaxSurveyRank));
    CoordinateFilter filter = CoordinateFilter::All;
    if (c.filter == "odd") filter = CoordinateFilter::LastOdd;
    else if (c.filter == "even") filter = CoordinateFilter::LastEven;
    else if (c.filter != "all") throw InputError("--filter must be all, odd or even");
    system = prism_system(c.n, c.r, filter);
    j["filter"] = c.filter;
  }
  const std::size_t unknowns = system->unknowns().size();
  const std::size_t k = rank(*system);
  j["unknowns"] = unknowns;
  j["rank"] = k;
  j["kernel_dim"] = unknowns - k;
  if (c.kernel) {
    Json basis = Json::array();
    for (const auto& t : kernel_basis(*system)) basis.push_back(tensor_to_json(t));
    j["kernel"] = basis;
  }
  emit(out, j);
  return kExitOk;
}

}  // namespace

std::optional<int> parse_args(const std::vector<std::string>& args, RunConfig& config, std::ostream& out,
                              std::ostream& err) {
  CLI::App app{"Discrete moment tensors, Ehrhart tensors and valuation checks on lattice polytopes"};
  app.require_subcommand(1);
  std::string matrix_text, shift_text;

  auto add_input = [&](CLI::App* sub) { sub->add_option("-i,--input", config.input, "polytope JSON file, - for stdin"); };
  auto add_rank = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-r,--r", config.r, "tensor rank");
    if (required) opt->required();
  };

  auto* count_cmd = app.add_subcommand("count", "closed and relative-interior lattice point counts");
  add_input(count_cmd);
  auto* tensor_cmd = app.add_subcommand("tensor", "discrete moment tensor L^r(P)");
  add_input(tensor_cmd);
  add_rank(tensor_cmd, true);
  tensor_cmd->add_flag("--relint", config.relint, "sum over the relative interior");
  auto* ehrhart_cmd = app.add_subcommand("ehrhart", "Ehrhart tensor coefficients L^r_0 .. L^r_(n+r)");
  add_input(ehrhart_cmd);
  add_rank(ehrhart_cmd, true);
  auto* recip_cmd = app.add_subcommand("reciprocity", "check the reciprocity identities");
  add_input(recip_cmd);
  add_rank(recip_cmd, true);
  auto* cov_cmd = app.add_subcommand("covariance", "check translation covariance");
  add_input(cov_cmd);
  add_rank(cov_cmd, true);
  cov_cmd->add_option("--y", shift_text, "translation vector, e.g. 1,-2");
  auto* eq_cmd = app.add_subcommand("equivariance", "check SL_n(Z) equivariance");
  add_input(eq_cmd);
  add_rank(eq_cmd, true);
  eq_cmd->add_option("--matrix", matrix_text, "rows separated by ';', e.g. 1,1;0,1");
  eq_cmd->add_option("--seed", config.seed, "seed for a random unimodular matrix");
  eq_cmd->add_option("--steps", config.steps, "elementary steps for the random matrix");
  auto* nval_cmd = app.add_subcommand("nval", "the rank-9 valuation N of a polygon");
  add_input(nval_cmd);
  nval_cmd->add_option("--check-independence", config.independence_trials, "number of random flip walks to compare");
  nval_cmd->add_option("--seed", config.seed, "seed of the first flip walk");
  nval_cmd->add_option("--steps", config.steps, "flips per walk");
  auto* rank_cmd = app.add_subcommand("rank", "rank of the planar (n = 2) or prism (n >= 3) constraint system");
  rank_cmd->add_option("--n", config.n, "dimension");
  add_rank(rank_cmd, false);
  rank_cmd->add_option("--filter", config.filter, "all | odd | even (parity of the last exponent)");
  rank_cmd->add_option("--parity", config.parity, "planar symmetry sign: 1, -1 or 0 for none");
  rank_cmd->add_flag("--kernel", config.kernel, "also print a kernel basis");
  rank_cmd->add_flag("--survey", config.survey, "CSV table of every planar assembly");
  rank_cmd->add_option("--survey-ranks", config.survey_ranks, "ranks for --survey");
  app.add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("-v,--verbose", config.verbosity, "more output on stderr");

  std::vector<const char*> argv{"ehrtensor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (!shift_text.empty()) config.shift = parse_int_list(shift_text);
    if (!matrix_text.empty()) config.matrix = parse_matrix(matrix_text);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  config.threads = threads_from_env();
  return std::nullopt;
}

int run(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "count") return run_count(c, in, out);
    if (c.subcommand == "tensor") return run_tensor(c, in, out);
    if (c.subcommand == "ehrhart") return run_ehrhart(c, in, out);
    if (c.subcommand == "reciprocity") return run_reciprocity(c, in, out);
    if (c.subcommand == "covariance") return run_covariance(c, in, out);
    if (c.subcommand == "equivariance") return run_equivariance(c, in, out);
    if (c.subcommand == "nval") return run_nval(c, in, out);
    if (c.subcommand == "rank") return run_rank(c, out);
    throw InputError("unknown subcommand " + c.subcommand);
  } catch (const InputError& e) {
    err << Json{{"error", e.what()}}.dump() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << Json{{"error", e.what()}}.dump() << '\n';
    return kExitBadInput;
  }
}

int run_command_line(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (auto code = parse_args(args, config, out, err)) return *code;
  return run(config, in, out, err);
}

}  // namespace ehrtensor
