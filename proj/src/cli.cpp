/*
 *   Copyright 2026 The tropsolve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tropsolve/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>

#include "tropsolve/io.hpp"
#include "tropsolve/optimizer.hpp"
#include "tropsolve/oracle.hpp"
#include "tropsolve/spectral.hpp"
#include "tropsolve/systems.hpp"

namespace tropsolve::cli {

namespace {

using json = nlohmann::ordered_json;

struct Global {
  std::string format = "text";
  bool timings = false;
  bool as_json() const { return format == "json"; }
};

json scalar_json(const Trop& x) { return to_string(x); }

json matrix_json(const TropMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_json(const TropVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.rows(); ++i) out.push_back(to_string(v(i)));
  return out;
}

json scalars_json(const std::vector<Trop>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

// Indices are shown 1-based everywhere.
json indices_json(const std::vector<Index>& xs) {
  json out = json::array();
  for (Index x : xs) out.push_back(x + 1);
  return out;
}

std::string scalars_text(const std::vector<Trop>& xs) {
  std::string out = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + to_string(xs[k]);
  return out + ")";
}

std::string indices_text(const std::vector<Index>& xs) {
  std::string out = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + std::to_string(xs[k] + 1);
  return out + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

ProblemKind parse_kind(const std::string& s) {
  if (s == "component") return ProblemKind::Component;
  if (s == "composite") return ProblemKind::Composite;
  throw ParseError("problem kind must be 'component' or 'composite', got '" + s + "'");
}

std::size_t default_cap() {
  const char* env = std::getenv("TROPSOLVE_MAX_CANDIDATES");
  if (!env || !*env) return kDefaultCandidateCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0 || env[0] == '-')
    throw ParseError(std::string("TROPSOLVE_MAX_CANDIDATES must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

GridSpec parse_grid(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t at; (at = s.find(':', start)) != std::string::npos; start = at + 1)
    parts.push_back(s.substr(start, at - start));
  parts.push_back(s.substr(start));
  if (parts.size() != 3) throw ParseError("--grid expects LO:HI:STEP, got '" + s + "'");
  Rational v[3];
  for (int k = 0; k < 3; ++k) {
    const Trop x = parse_scalar<MaxPlus>(parts[k]);
    if (x.is_zero()) throw ParseError("--grid bounds must be finite");
    v[k] = x.value();
  }
  GridSpec g{v[0], v[1], v[2]};
  try {
    g.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return g;
}

bool negative_scalar(const std::string& s) {
  return s.size() > 1 && s[0] == '-' &&
         (std::isdigit(static_cast<unsigned char>(s[1])) || s == "-inf");
}

// CLI11 reads "-1" or "-inf" as short flags. Option values are glued to
// their option; for `check` every option moves ahead of the positionals and a
// "--" goes in front of the vector entries.
std::vector<std::string> normalize(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued = {"--format", "--grid", "--max-candidates"};
  std::vector<std::string> glued;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k + 1 < args.size() && std::find(valued.begin(), valued.end(), args[k]) != valued.end()) {
      glued.push_back(args[k] + "=" + args[k + 1]);
      ++k;
    } else {
      glued.push_back(args[k]);
    }
  }
  const auto sub = std::find(glued.begin(), glued.end(), "check");
  if (sub == glued.end() || std::find(glued.begin(), glued.end(), "--") != glued.end()) return glued;
  std::vector<std::string> out(glued.begin(), sub + 1), positional;
  for (auto it = sub + 1; it != glued.end(); ++it) {
    if (it->size() > 1 && (*it)[0] == '-' && !negative_scalar(*it))
      out.push_back(*it);
    else
      positional.push_back(*it);
  }
  for (std::size_t k = 0; k < positional.size(); ++k) {
    if (k == 2) out.push_back("--");
    out.push_back(positional[k]);
  }
  return out;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_json(std::ostream& out, json report, const Global& g, double ms) {
  if (g.timings) report["timings"] = {{"total_ms", ms}};
  out << report.dump(2) << '\n';
}

void emit_timing_text(std::ostream& out, const Global& g, double ms) {
  if (g.timings) out << "time: " << ms << " ms\n";
}

int cmd_eigen(const std::string& file, const Global& g, std::ostream& out) {
  Stopwatch clock;
  const TropMatrix a = read_matrix_file(file);
  const Spectrum sp = spectral_radius(a);
  const bool irreducible = is_irreducible(a);
  std::optional<TropMatrix> gen;
  if (irreducible && !sp.rho.is_zero()) gen = eigenvectors(a);
  if (g.as_json()) {
    json r;
    r["command"] = "eigen";
    r["rows"] = a.rows();
    r["spectral_radius"] = scalar_json(sp.rho);
    r["block_eigenvalues"] = scalars_json(sp.per_block);
    r["irreducible"] = irreducible;
    r["eigenvectors"] = gen ? matrix_json(*gen) : json(nullptr);
    emit_json(out, std::move(r), g, clock.ms());
    return kOk;
  }
  out << "matrix: " << a.rows() << "x" << a.cols() << '\n'
      << "spectral radius: " << to_string(sp.rho) << '\n'
      << "block eigenvalues: " << scalars_text(sp.per_block) << '\n'
      << "irreducible: " << yes_no(irreducible) << '\n';
  if (gen) out << "eigenvectors:\n" << format_rows(*gen);
  emit_timing_text(out, g, clock.ms());
  return kOk;
}

int cmd_normal_form(const std::string& file, const Global& g, std::ostream& out) {
  Stopwatch clock;
  const TropMatrix a = read_matrix_file(file);
  const NormalForm nf = normal_form(a);
  if (g.as_json()) {
    json r;
    r["command"] = "normal-form";
    r["order"] = indices_json(nf.order);
    r["block_sizes"] = nf.block_sizes;
    r["sources"] = nf.sources;
    r["block_eigenvalues"] = scalars_json(nf.block_eigenvalues);
    r["permuted"] = matrix_json(nf.permuted);
    emit_json(out, std::move(r), g, clock.ms());
    return kOk;
  }
  std::string sizes = "(";
  for (std::size_t k = 0; k < nf.block_sizes.size(); ++k)
    sizes += (k ? ", " : "") + std::to_string(nf.block_sizes[k]);
  out << "order: " << indices_text(nf.order) << '\n'
      << "block sizes: " << sizes << ")\n"
      << "sources: " << nf.sources << '\n'
      << "block eigenvalues: " << scalars_text(nf.block_eigenvalues) << '\n'
      << "permuted:\n" << format_rows(nf.permuted);
  emit_timing_text(out, g, clock.ms());
  return kOk;
}

int cmd_solve(ProblemKind kind, const std::string& file, const SolveOptions& opts, const Global& g,
              std::ostream& out) {
  Stopwatch clock;
  const TropMatrix a = read_matrix_file(file);
  const SolutionSet sol = solve(kind, a, opts);
  std::size_t accepted = 0;
  for (const auto& k : sol.candidates) accepted += k.accepted ? 1 : 0;
  if (g.as_json()) {
    json r;
    r["command"] = "solve";
    r["problem"] = to_string(kind);
    r["prune"] = opts.prune;
    r["minimum"] = scalar_json(sol.minimum);
    r["normal_form"] = {{"order", indices_json(sol.normal_form.order)},
                        {"block_sizes", sol.normal_form.block_sizes},
                        {"sources", sol.normal_form.sources},
                        {"block_eigenvalues", scalars_json(sol.normal_form.block_eigenvalues)}};
    r["S"] = matrix_json(sol.S);
    r["partial_generator"] = matrix_json(sol.partial_generator);
    json log = json::array();
    for (const auto& k : sol.candidates)
      log.push_back({{"selection", indices_json(k.selection)},
                     {"trace", scalar_json(k.trace)},
                     {"accepted", k.accepted}});
    r["candidates"] = std::move(log);
    r["notes"] = sol.notes;
    emit_json(out, std::move(r), g, clock.ms());
    return kOk;
  }
  out << "problem: " << to_string(kind) << '\n'
      << "order: " << indices_text(sol.normal_form.order) << '\n'
      << "block eigenvalues: " << scalars_text(sol.normal_form.block_eigenvalues) << '\n'
      << "minimum: " << to_string(sol.minimum) << '\n'
      << "candidates: " << sol.candidates.size() << " generated, " << accepted << " accepted ("
      << (opts.prune ? "pruned" : "plain") << ")\n";
  for (std::size_t k = 0; k < sol.candidates.size(); ++k) {
    const auto& c = sol.candidates[k];
    out << "  " << k + 1 << ": selection " << indices_text(c.selection) << ", Tr(B) = "
        << to_string(c.trace) << (c.accepted ? ", accepted" : ", rejected") << '\n';
  }
  out << "partial generator:\n" << format_rows(sol.partial_generator) << "S:\n" << format_rows(sol.S);
  for (const auto& n : sol.notes) out << "note: " << n << '\n';
  emit_timing_text(out, g, clock.ms());
  return kOk;
}

int cmd_check(ProblemKind kind, const std::string& file, const std::vector<std::string>& xs,
              const Global& g, std::ostream& out) {
  Stopwatch clock;
  const TropMatrix a = read_matrix_file(file);
  const TropVector x = parse_vector(xs);
  if (x.rows() != a.cols())
    throw ShapeError("vector has " + std::to_string(x.rows()) + " entries, matrix has " +
                     std::to_string(a.cols()) + " columns");
  if (is_zero(x)) throw DomainError("x is the zero vector");
  // The objective needs a regular x; membership does not.
  const std::optional<Trop> value =
      is_regular(x) ? std::optional<Trop>(objective(kind, a, x)) : std::nullopt;
  const Trop minimum = minimum_value(kind, a);
  const bool member = satisfies_characterization(kind, a, minimum, x);
  const bool optimal = value && *value == minimum;
  if (g.as_json()) {
    json r;
    r["command"] = "check";
    r["problem"] = to_string(kind);
    r["x"] = vector_json(x);
    r["objective"] = value ? scalar_json(*value) : json(nullptr);
    r["minimum"] = scalar_json(minimum);
    r["member"] = member;
    r["optimal"] = optimal;
    emit_json(out, std::move(r), g, clock.ms());
    return kOk;
  }
  out << "problem: " << to_string(kind) << '\n'
      << "x: " << format_vector(x) << '\n'
      << "objective: " << (value ? to_string(*value) : "undefined (x is not regular)") << '\n'
      << "minimum: " << to_string(minimum) << '\n'
      << "member: " << yes_no(member) << '\n'
      << "optimal: " << yes_no(optimal) << '\n';
  emit_timing_text(out, g, clock.ms());
  return kOk;
}

int cmd_verify(ProblemKind kind, const std::string& file, const GridSpec& grid,
               const SolveOptions& opts, const Global& g, std::ostream& out) {
  Stopwatch clock;
  const TropMatrix a = read_matrix_file(file);
  const SolutionSet sol = solve(kind, a, opts);
  const GridResult gr = grid_minimum(kind, a, grid);
  const Trop level = kind == ProblemKind::Component ? sol.normal_form.block_eigenvalues.front()
                                                    : sol.minimum;
  const std::vector<SparseCandidate> ex = exhaustive_candidates(a, kind, level, opts.max_candidates);

  std::vector<TropMatrix> stars;
  for (const auto& k : ex)
    if (k.accepted) stars.push_back(star(k.derived));
  bool span = !stars.empty();
  if (span) {
    const TropMatrix e = hcat(stars);
    for (Index j = 0; j < e.cols() && span; ++j)
      if (!is_zero(e.col(j))) span = is_dependent(e.col(j), sol.S);
    for (Index j = 0; j < sol.S.cols() && span; ++j) span = is_dependent(sol.S.col(j), e);
  }
  const TropVector probe = mat_mul(sol.S, unit_vector<MaxPlus>(sol.S.cols()));
  const bool attained = is_regular(probe) && objective(kind, a, probe) == sol.minimum;
  const bool bound = !(gr.minimum < sol.minimum);
  const bool agree = bound && attained && span;

  if (g.as_json()) {
    json r;
    r["command"] = "verify";
    r["problem"] = to_string(kind);
    r["solver_minimum"] = scalar_json(sol.minimum);
    r["grid"] = {{"lo", grid.lo.get_str()}, {"hi", grid.hi.get_str()}, {"step", grid.step.get_str()},
                 {"points", gr.points}, {"minimum", scalar_json(gr.minimum)},
                 {"argmin", vector_json(gr.argmin)}};
    r["grid_bound_holds"] = bound;
    r["grid_attains_minimum"] = gr.minimum == sol.minimum;
    r["S_sum_attains_minimum"] = attained;
    std::size_t acc = 0;
    for (const auto& k : ex) acc += k.accepted ? 1 : 0;
    r["exhaustive"] = {{"candidates", ex.size()}, {"accepted", acc}};
    r["span_matches_exhaustive"] = span;
    r["agreement"] = agree;
    emit_json(out, std::move(r), g, clock.ms());
    return agree ? kOk : kDisagreement;
  }
  std::size_t acc = 0;
  for (const auto& k : ex) acc += k.accepted ? 1 : 0;
  out << "problem: " << to_string(kind) << '\n'
      << "solver minimum: " << to_string(sol.minimum) << '\n'
      << "grid minimum: " << to_string(gr.minimum) << " over " << gr.points << " points, argmin "
      << format_vector(gr.argmin) << '\n'
      << "grid bound holds: " << yes_no(bound) << '\n'
      << "grid attains minimum: " << yes_no(gr.minimum == sol.minimum) << '\n'
      << "S 1 attains minimum: " << yes_no(attained) << '\n'
      << "exhaustive candidates: " << ex.size() << " (" << acc << " accepted)\n"
      << "span matches exhaustive: " << yes_no(span) << '\n'
      << "agreement: " << yes_no(agree) << '\n';
  emit_timing_text(out, g, clock.ms());
  return agree ? kOk : kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact max-plus spectral analysis and complete solutions of tropical minimization problems",
               "tropsolve"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", g.timings, "append wall-clock timings");

  std::string file, kind_name, grid_text = "-3:3:1";
  std::vector<std::string> xs;
  SolveOptions opts;
  bool no_prune = false;
  std::optional<std::size_t> cap;

  auto* eigen = app.add_subcommand("eigen", "spectral radius, block eigenvalues, eigenvectors");
  eigen->add_option("file", file, "matrix file")->required();
  auto* nform = app.add_subcommand("normal-form", "block-triangular normal form");
  nform->add_option("file", file, "matrix file")->required();

  auto add_solver_flags = [&](CLI::App* sub) {
    sub->add_option("kind", kind_name, "component or composite")->required();
    sub->add_option("file", file, "matrix file")->required();
    sub->add_flag("--no-prune", no_prune, "plain enumeration of sparsified matrices");
    sub->add_option("--max-candidates", cap, "candidate cap")->check(CLI::PositiveNumber);
  };
  auto* solve_cmd = app.add_subcommand("solve", "minimum, generator S, partial family");
  add_solver_flags(solve_cmd);
  auto* check = app.add_subcommand("check", "objective and membership of a vector");
  check->add_option("kind", kind_name, "component or composite")->required();
  check->add_option("file", file, "matrix file")->required();
  check->add_option("x", xs, "vector entries")->required();
  auto* verify = app.add_subcommand("verify", "compare the solver with brute-force oracles");
  add_solver_flags(verify);
  verify->add_option("--grid", grid_text, "grid LO:HI:STEP for the minimum search");

  std::vector<std::string> argv = normalize(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    opts.prune = !no_prune;
    opts.max_candidates = cap ? *cap : default_cap();
    if (*eigen) return cmd_eigen(file, g, out);
    if (*nform) return cmd_normal_form(file, g, out);
    if (*solve_cmd) return cmd_solve(parse_kind(kind_name), file, opts, g, out);
    if (*check) return cmd_check(parse_kind(kind_name), file, xs, g, out);
    return cmd_verify(parse_kind(kind_name), file, parse_grid(grid_text), opts, g, out);
  } catch (const tropsolve::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return kHypothesis;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInconsistency;
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInconsistency;
  }
}

}  // namespace tropsolve::cli
