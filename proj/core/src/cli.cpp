#include "liesym/cli.hpp"

#include "liesym/determine.hpp"
#include "liesym/errors.hpp"
#include "liesym/golden.hpp"
#include "liesym/lie_algebra.hpp"
#include "liesym/optimal.hpp"
#include "liesym/presets.hpp"
#include "liesym/reduce.hpp"
#include "liesym/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace liesym {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

/// User-facing request problems that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool verbose_enabled() {
  const char* v = std::getenv("LIESYM_VERBOSE");
  return v != nullptr && *v != '\0';
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    auto end = text.find(sep, start);
    if (end == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

ParameterPoint parse_point(const std::string& text) {
  ParameterPoint out;
  if (text.empty()) return out;
  for (const std::string& piece : split(text, ',')) {
    auto eq = piece.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("point entry '" + piece + "' is not of the form name=value");
    std::string name = piece.substr(0, eq);
    std::string value = piece.substr(eq + 1);
    try {
      out[name] = Rational(value);
    } catch (const std::exception&) {
      throw UsageError("point entry '" + piece + "' has no exact rational value");
    }
  }
  return out;
}

std::map<std::string, Rational> parse_values(const std::string& text) {
  return parse_point(text);
}

// ---------------------------------------------------------------------
// Equation selection shared by most subcommands.

struct EquationOptions {
  std::string source;  // positional: preset name or path to an equation file
  std::string preset;
  std::string equation;
  std::string params;
  std::string second_point;
  int degree = 0;
};

void add_equation_options(CLI::App* cmd, EquationOptions& opt) {
  cmd->add_option("source", opt.source, "preset name or path to an equation file");
  cmd->add_option("--preset", opt.preset, "named preset equation");
  cmd->add_option("--equation", opt.equation, "evolution equation, e.g. \"u_t + u*u_x = u_x2\"");
  cmd->add_option("--params", opt.params,
                  "parameter point as name=value,... (preset default otherwise)");
  cmd->add_option("--second-point", opt.second_point,
                  "second parameter point, entries must be distinct small primes");
  cmd->add_option("--degree", opt.degree, "polynomial ansatz degree (default 3)");
}

struct ResolvedEquation {
  EvolutionPDE pde;
  ParameterPoint p1;
  ParameterPoint p2;
  int degree = 3;
  std::string source;
  std::string preset;
};

std::string available_presets() {
  std::string names;
  for (const Preset& q : presets()) names += (names.empty() ? "" : ", ") + q.name;
  return names;
}

std::string read_equation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open equation file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
  }
  throw UsageError("equation file '" + path + "' holds no equation");
}

ResolvedEquation resolve_equation(const EquationOptions& opt) {
  int given = (opt.source.empty() ? 0 : 1) + (opt.preset.empty() ? 0 : 1) +
              (opt.equation.empty() ? 0 : 1);
  if (given != 1)
    throw UsageError("give exactly one equation source: a positional preset name or file, "
                     "--preset, or --equation");

  ResolvedEquation r{EvolutionPDE::parse("u_t = 0"), {}, {}, 3, "", ""};
  const Preset* p = nullptr;
  std::string equation_text = opt.equation;
  if (!opt.preset.empty()) {
    p = find_preset(opt.preset);
    if (p == nullptr)
      throw UsageError("unknown preset '" + opt.preset + "' (available: " + available_presets() +
                       ")");
  } else if (!opt.source.empty()) {
    p = find_preset(opt.source);
    if (p == nullptr) {
      if (!std::ifstream(opt.source))
        throw UsageError("'" + opt.source + "' is neither a preset (available: " +
                         available_presets() + ") nor a readable file");
      equation_text = read_equation_file(opt.source);
    }
  }
  if (p != nullptr) {
    r.pde = preset_equation(*p);
    r.p1 = p->point1;
    r.p2 = p->point2;
    r.degree = p->degree;
    r.source = p->equation;
    r.preset = p->name;
  } else {
    r.pde = EvolutionPDE::parse(equation_text);
    r.source = equation_text;
  }
  if (!opt.params.empty()) r.p1 = parse_point(opt.params);
  if (!opt.second_point.empty()) r.p2 = parse_point(opt.second_point);
  if (opt.degree > 0) r.degree = opt.degree;
  return r;
}

SymmetryBasis run_solver(const ResolvedEquation& r, std::ostream& err) {
  if (verbose_enabled())
    err << "# solving the determining system at two parameter points\n";
  return solve_symmetries(r.pde, r.degree, r.p1, r.p2);
}

// ---------------------------------------------------------------------
// Formatting helpers.

std::string field_name(int k) { return "v" + std::to_string(k + 1); }

std::string combo_string(const std::vector<Rational>& coords) {
  Poly p;
  for (std::size_t k = 0; k < coords.size(); ++k)
    p += coords[k] * Poly::variable(param(field_name(static_cast<int>(k))));
  return to_string(to_expr(p));
}

std::string adjoint_image(const AdjointMatrix& m, int j) {
  Poly p;
  for (std::size_t k = 0; k < m.entries.size(); ++k)
    p += expand(m.entries[k][j]) * Poly::variable(param(field_name(static_cast<int>(k))));
  return to_string(to_expr(p));
}

ordered_json point_json(const ParameterPoint& p) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, value] : p) j[name] = to_string(value);
  return j;
}

ordered_json field_json(const VectorField& f) {
  return ordered_json{{"xi", to_string(f.xi)},
                      {"eta", to_string(f.eta)},
                      {"phi", to_string(f.phi)},
                      {"printed", to_string(f)}};
}

ordered_json generators_json(const std::vector<VectorField>& fields) {
  ordered_json arr = ordered_json::array();
  for (std::size_t k = 0; k < fields.size(); ++k) {
    ordered_json g = field_json(fields[k]);
    g["name"] = field_name(static_cast<int>(k));
    arr.push_back(std::move(g));
  }
  return arr;
}

void emit(std::ostream& out, bool as_json, const ordered_json& doc, const std::string& text) {
  if (as_json)
    out << doc.dump(2) << "\n";
  else
    out << text;
}

void emit_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) err << "warning: " << w << "\n";
}

/// Left-justified text grid with a corner label, row labels and column
/// labels, two spaces between columns.
std::string render_grid(const std::string& corner, const std::vector<std::string>& rows,
                        const std::vector<std::string>& cols,
                        const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width(cols.size() + 1);
  width[0] = corner.size();
  for (const std::string& r : rows) width[0] = std::max(width[0], r.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    width[j + 1] = cols[j].size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      width[j + 1] = std::max(width[j + 1], cells[i][j].size());
  }

  std::ostringstream out;
  auto emit_row = [&](const std::string& head, const std::vector<std::string>& line) {
    out << "  " << head << std::string(width[0] - head.size(), ' ');
    for (std::size_t j = 0; j < line.size(); ++j) {
      out << "  " << line[j];
      if (j + 1 < line.size()) out << std::string(width[j + 1] - line[j].size(), ' ');
    }
    out << "\n";
  };
  emit_row(corner, cols);
  for (std::size_t i = 0; i < rows.size(); ++i) emit_row(rows[i], cells[i]);
  return out.str();
}

VectorField field_from_options(const std::string& xi, const std::string& eta,
                               const std::string& phi) {
  try {
    VectorField f{parse_expr(xi), parse_expr(eta), parse_expr(phi)};
    validate_point_field(f);
    return f;
  } catch (const ParseError& e) {
    throw UsageError(std::string("generator component: ") + e.what());
  }
}

/// "v3 + 2*v2" or "v3 + beta*v2" over the computed basis. Every term must
/// be linear in exactly one basis name; cofactors may keep free parameters.
VectorField combination_field(const std::string& text, const std::vector<VectorField>& basis) {
  Poly combo = [&] {
    try {
      return expand(parse_expr(text));
    } catch (const ParseError& e) {
      throw UsageError(std::string("generator combination: ") + e.what());
    }
  }();

  const int n = static_cast<int>(basis.size());
  VectorField out{Expr(), Expr(), Expr()};
  for (const auto& [monomial, coeff] : combo.terms()) {
    int index = -1;
    Poly cofactor = Poly::constant(coeff);
    for (const auto& [var, exp] : monomial.factors()) {
      const std::string name = var_name(var);
      bool is_basis_name = is_parameter(var) && name.size() >= 2 && name[0] == 'v' &&
                           std::all_of(name.begin() + 1, name.end(),
                                       [](unsigned char c) { return std::isdigit(c); });
      int k = is_basis_name ? std::stoi(name.substr(1)) : 0;
      if (is_basis_name && k >= 1 && k <= n) {
        if (index >= 0 || exp != 1)
          throw UsageError("generator combination must be linear in the basis fields");
        index = k - 1;
      } else {
        cofactor *= Poly::variable(var, exp);
      }
    }
    if (index < 0)
      throw UsageError("generator combination term '" + to_string(to_expr(cofactor)) +
                       "' carries no basis field v1..v" + std::to_string(n));
    out = out + scale(to_expr(cofactor), basis[static_cast<std::size_t>(index)]);
  }
  return out;
}

// ---------------------------------------------------------------------
// Subcommands.

int run_analyze(const ResolvedEquation& r, bool as_json, std::ostream& out, std::ostream& err) {
  SymmetryBasis basis = run_solver(r, err);

  std::ostringstream text;
  text << "equation: " << r.source << "\n";
  text << "ansatz degree: " << r.degree << "\n";
  text << "symmetry algebra dimension: " << basis.dimension() << "\n";
  for (std::size_t k = 0; k < basis.fields.size(); ++k)
    text << "  " << field_name(static_cast<int>(k)) << " = " << to_string(basis.fields[k])
         << "\n";

  ordered_json doc{{"command", "analyze"},
                   {"equation", r.source},
                   {"degree", r.degree},
                   {"point1", point_json(basis.point1)},
                   {"point2", point_json(basis.point2)},
                   {"dimension", basis.dimension()},
                   {"generators", generators_json(basis.fields)}};
  emit(out, as_json, doc, text.str());
  return kOk;
}

int run_tables(const ResolvedEquation& r, bool as_json, std::ostream& out, std::ostream& err) {
  SymmetryBasis basis = run_solver(r, err);
  LieAlgebra algebra(basis.fields);
  const int n = algebra.dimension();

  std::vector<std::vector<std::string>> commutators(n, std::vector<std::string>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> c(n);
      for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = algebra.structure(i, j, k);
      commutators[i][j] = combo_string(c);
    }
  }

  const Expr eps = Expr::symbol(param("eps"));
  struct AdjointRow {
    std::vector<std::string> images;
    bool exact;
    int terms;
  };
  std::vector<AdjointRow> adjoint;
  for (int g = 0; g < n; ++g) {
    AdjointMatrix m = [&] {
      try {
        return adjoint_matrix(algebra, g, eps);
      } catch (const UnsupportedError&) {
        // Non-nilpotent direction: fall back to a short exponential series.
        return adjoint_matrix(algebra, g, eps, 4);
      }
    }();
    AdjointRow row{{}, m.exact, m.terms};
    for (int j = 0; j < n; ++j) row.images.push_back(adjoint_image(m, j));
    adjoint.push_back(std::move(row));
  }

  SeriesReport rep = series(algebra);

  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back(field_name(k));

  std::ostringstream text;
  text << "equation: " << r.source << "\n";
  text << "commutator table [row, col]:\n";
  std::vector<std::vector<std::string>> bracket_cells;
  for (int i = 0; i < n; ++i) bracket_cells.push_back(commutators[i]);
  text << render_grid("[ , ]", names, names, bracket_cells);
  text << "adjoint table Ad(exp(eps row)) col:\n";
  std::vector<std::string> adjoint_rows = names;
  std::vector<std::vector<std::string>> adjoint_cells;
  int truncated_terms = 0;
  for (int g = 0; g < n; ++g) {
    adjoint_cells.push_back(adjoint[g].images);
    if (!adjoint[g].exact) {
      adjoint_rows[g] += " *";
      truncated_terms = adjoint[g].terms;
    }
  }
  text << render_grid("Ad", adjoint_rows, names, adjoint_cells);
  if (truncated_terms > 0)
    text << "  * series truncated at eps^" << truncated_terms - 1
         << "; the action is not nilpotent in this direction\n";
  text << "solvable: " << (rep.solvable ? "yes" : "no") << "\n";
  text << "nilpotent: " << (rep.nilpotent ? "yes" : "no") << "\n";
  if (rep.solvable) text << "derived length: " << rep.derived_length << "\n";
  if (rep.nilpotent) text << "nilpotency class: " << rep.nilpotency_class << "\n";

  ordered_json adj = ordered_json::array();
  for (int g = 0; g < n; ++g)
    adj.push_back(ordered_json{{"generator", field_name(g)},
                               {"images", adjoint[g].images},
                               {"exact", adjoint[g].exact}});
  ordered_json doc{{"command", "tables"},
                   {"equation", r.source},
                   {"generators", generators_json(basis.fields)},
                   {"commutators", commutators},
                   {"adjoint", adj},
                   {"series",
                    ordered_json{{"solvable", rep.solvable},
                                 {"nilpotent", rep.nilpotent},
                                 {"derived_length", rep.derived_length},
                                 {"nilpotency_class", rep.nilpotency_class},
                                 {"derived_dims", rep.derived_dims},
                                 {"lower_central_dims", rep.lower_central_dims}}}};
  emit(out, as_json, doc, text.str());
  return kOk;
}

int run_optimal(const ResolvedEquation& r, int samples, std::uint64_t seed, bool coarse,
                bool as_json, std::ostream& out, std::ostream& err) {
  SymmetryBasis basis = run_solver(r, err);
  OptimalSystem1D sys{LieAlgebra(basis.fields)};
  CoverageStats stats = verify_optimal_system(sys, samples, seed);
  if (!stats.witnesses_ok) throw InternalError("a classification witness failed to replay");

  const std::vector<std::string> classes = {"v2", "v3 + alpha*v2"};
  std::vector<std::string> warnings;
  for (const std::string& missing : stats.uncovered)
    warnings.push_back("no listed representative covers class " + missing);

  std::ostringstream text;
  text << "equation: " << r.source << "\n";
  text << "one-dimensional optimal system:\n";
  for (const std::string& c : classes) text << "  " << c << "\n";
  text << "random audit: " << stats.samples << " samples (seed " << seed << ")\n";
  text << "  class v1: " << stats.hits_v1 << "\n";
  text << "  class v2: " << stats.hits_v2 << "\n";
  if (coarse) {
    text << "  class v3 + alpha*v2, alpha < 0: " << stats.hits_v3_alpha_neg << "\n";
    text << "  class v3 + alpha*v2, alpha = 0: " << stats.hits_v3_alpha_zero << "\n";
    text << "  class v3 + alpha*v2, alpha > 0: " << stats.hits_v3_alpha_pos << "\n";
  } else {
    text << "  class v3 + alpha*v2: " << stats.hits_v3_family << "\n";
  }
  text << "witness replay: ok\n";

  ordered_json counts{{"v1", stats.hits_v1}, {"v2", stats.hits_v2}};
  if (coarse) {
    counts["v3_alpha_neg"] = stats.hits_v3_alpha_neg;
    counts["v3_alpha_zero"] = stats.hits_v3_alpha_zero;
    counts["v3_alpha_pos"] = stats.hits_v3_alpha_pos;
  } else {
    counts["v3_family"] = stats.hits_v3_family;
  }
  ordered_json doc{{"command", "optimal"},
                   {"equation", r.source},
                   {"classes", classes},
                   {"samples", stats.samples},
                   {"seed", seed},
                   {"coarse", coarse},
                   {"counts", counts},
                   {"witnesses_ok", stats.witnesses_ok},
                   {"uncovered", stats.uncovered},
                   {"warnings", warnings}};
  emit_warnings(err, warnings);
  emit(out, as_json, doc, text.str());
  return kOk;
}

int run_reduce(const ResolvedEquation& r, const VectorField& generator, bool solve, bool as_json,
               std::ostream& out, std::ostream& err) {
  Invariants inv = invariants(generator);
  ReducedODE ode = reduce_pde(r.pde, inv);
  std::optional<ClosedForm> closed;
  if (solve) closed = solve_linear_first_order(ode, inv);

  std::ostringstream text;
  text << "equation: " << r.source << "\n";
  text << "generator: " << to_string(generator) << "\n";
  text << "chi = " << to_string(inv.chi) << "\n";
  text << "u = zeta(chi) + " << to_string(inv.shift) << "\n";
  text << "reduced equation: " << to_string(ode.expression) << " = 0\n";
  text << "order: " << ode.order << "\n";
  for (const std::string& s : ode.singular_loci) text << "singular locus: " << s << "\n";
  if (closed) {
    text << "closed form: zeta = " << to_string(closed->zeta) << "\n";
    text << "invariant solution: u = " << to_string(closed->u) << "\n";
  } else if (solve) {
    text << "closed form: none found for this shape\n";
  }

  ordered_json doc{{"command", "reduce"},
                   {"equation", r.source},
                   {"generator", field_json(generator)},
                   {"chi", to_string(inv.chi)},
                   {"shift", to_string(inv.shift)},
                   {"ode", to_string(ode.expression)},
                   {"order", ode.order},
                   {"singular_loci", ode.singular_loci},
                   {"warnings", ode.notes}};
  if (closed)
    doc["closed_form"] =
        ordered_json{{"zeta", to_string(closed->zeta)}, {"u", to_string(closed->u)}};
  else
    doc["closed_form"] = nullptr;
  emit_warnings(err, ode.notes);
  emit(out, as_json, doc, text.str());
  return kOk;
}

/// "G3:1/2" or "v3:1/2": a basis generator index and a rational flow value.
std::pair<int, Rational> parse_transform(const std::string& text, int dimension) {
  auto colon = text.find(':');
  std::string head = colon == std::string::npos ? text : text.substr(0, colon);
  if (colon == std::string::npos)
    throw UsageError("--transform needs the form G<k>:<value>, e.g. G3:1/2");
  if (head.size() < 2 || (head[0] != 'G' && head[0] != 'v') ||
      !std::all_of(head.begin() + 1, head.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError("--transform needs a generator G1..G" + std::to_string(dimension));
  int index = std::stoi(head.substr(1));
  if (index < 1 || index > dimension)
    throw UsageError("--transform generator index is out of range 1.." +
                     std::to_string(dimension));
  try {
    return {index - 1, Rational(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw UsageError("--transform flow value must be rational");
  }
}

int run_verify(const ResolvedEquation& r, const std::string& solution_text,
               const std::string& params_text, const std::string& grid_text,
               const std::string& transform_text, const std::string& dump_path, double tolerance,
               bool as_json, std::ostream& out, std::ostream& err) {
  Expr solution = [&] {
    try {
      return parse_expr(solution_text);
    } catch (const ParseError& e) {
      throw UsageError(std::string("solution: ") + e.what());
    }
  }();

  // Preset point values serve as defaults; --params entries override and
  // supply solution constants such as c1.
  std::map<std::string, Rational> params = r.p1;
  for (const auto& [name, value] : parse_values(params_text)) params[name] = value;

  Grid grid;
  if (!grid_text.empty()) {
    std::vector<std::string> parts =
        split(grid_text, grid_text.find(',') != std::string::npos ? ',' : ':');
    if (parts.size() != 6)
      throw UsageError("--grid needs x_min,x_max,t_min,t_max,nx,nt");
    try {
      grid.x_min = std::stod(parts[0]);
      grid.x_max = std::stod(parts[1]);
      grid.t_min = std::stod(parts[2]);
      grid.t_max = std::stod(parts[3]);
      grid.nx = std::stoi(parts[4]);
      grid.nt = std::stoi(parts[5]);
    } catch (const std::exception&) {
      throw UsageError("--grid needs numeric entries");
    }
  }

  std::string transform_note;
  if (!transform_text.empty()) {
    SymmetryBasis basis = run_solver(r, err);
    auto [index, s] = parse_transform(transform_text, basis.dimension());
    solution = transform_solution(basis.fields[static_cast<std::size_t>(index)], s, solution);
    transform_note = "G" + std::to_string(index + 1) + " at s = " + to_string(s);
  }

  Poly sym = residual_symbolic(r.pde, solution);
  ResidualReport num = residual_numeric(r.pde, solution, grid, params);
  bool pass = sym.is_zero() || num.max_abs < tolerance;

  if (!dump_path.empty()) {
    std::ofstream csv(dump_path);
    if (!csv) throw UsageError("cannot write '" + dump_path + "'");
    csv << "x,t,residual\n";
    for (const ResidualSample& p : residual_field(r.pde, solution, grid, params))
      csv << p.x << "," << p.t << "," << p.residual << "\n";
  }

  std::ostringstream text;
  text << "equation: " << r.source << "\n";
  text << "solution: " << solution_text << "\n";
  if (!transform_note.empty()) {
    text << "transformed by: " << transform_note << "\n";
    text << "transformed solution: " << to_string(solution) << "\n";
  }
  text << "symbolic residual: " << (sym.is_zero() ? "0" : to_string(to_expr(sym))) << "\n";
  text << "grid points: " << num.points << " (skipped " << num.singular << ")\n";
  text << "max |residual|: " << num.max_abs << "\n";
  text << "rms residual: " << num.rms << "\n";
  text << "status: " << (pass ? "pass" : "fail") << "\n";

  ordered_json doc{{"command", "verify"},
                   {"equation", r.source},
                   {"solution", solution_text},
                   {"symbolic_zero", sym.is_zero()},
                   {"residual",
                    ordered_json{{"max_abs", num.max_abs},
                                 {"rms", num.rms},
                                 {"points", num.points},
                                 {"singular", num.singular}}},
                   {"tolerance", tolerance},
                   {"status", pass ? "pass" : "fail"}};
  if (!transform_note.empty()) doc["transformed_solution"] = to_string(solution);
  emit(out, as_json, doc, text.str());
  return pass ? kOk : kMismatch;
}

int run_prolong(const VectorField& generator, int order, bool as_json, std::ostream& out) {
  Prolongation pr(generator, order);

  std::ostringstream text;
  ordered_json coeffs = ordered_json::object();
  text << "generator: " << to_string(generator) << "\n";
  text << "prolongation coefficients to order " << order << ":\n";
  for (int total = 1; total <= order; ++total) {
    for (int dt = 0; dt <= total; ++dt) {
      int dx = total - dt;
      std::string name = jet_name(JetVar{dx, dt});
      std::string value = to_string(pr.coeff(dx, dt));
      text << "  " << name << ": " << value << "\n";
      coeffs[name] = value;
    }
  }

  ordered_json doc{{"command", "prolong"},
                   {"generator", field_json(generator)},
                   {"order", order},
                   {"phi", to_string(generator.phi)},
                   {"coefficients", coeffs}};
  emit(out, as_json, doc, text.str());
  return kOk;
}

int run_repro(bool as_json, std::ostream& out, std::ostream& err) {
  const golden::Flagship& want = golden::flagship();
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, std::string>> stages;  // name -> "" or failure detail
  auto stage = [&](const std::string& name, bool ok, const std::string& detail) {
    stages.emplace_back(name, ok ? std::string() : detail);
  };

  const Preset* preset = find_preset(want.preset);
  if (preset == nullptr) throw InternalError("flagship preset is missing");
  ResolvedEquation r{preset_equation(*preset), preset->point1, preset->point2,
                     preset->degree,           preset->equation, preset->name};
  stage("equation", preset->equation == want.equation,
        "preset text differs from the frozen equation");

  // Generators.
  SymmetryBasis basis = run_solver(r, err);
  {
    bool ok = basis.dimension() == static_cast<int>(want.basis.size());
    std::string detail;
    for (std::size_t k = 0; ok && k < want.basis.size(); ++k) {
      if (to_string(basis.fields[k]) != want.basis[k]) {
        ok = false;
        detail = field_name(static_cast<int>(k)) + " is " + to_string(basis.fields[k]) +
                 ", expected " + want.basis[k];
      }
    }
    if (detail.empty() && !ok) detail = "dimension differs";
    stage("generators", ok, detail);
  }

  // Commutator and adjoint tables.
  LieAlgebra algebra(basis.fields);
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; ok && i < 3; ++i) {
      for (int j = 0; ok && j < 3; ++j) {
        std::vector<Rational> c(3);
        for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] = algebra.structure(i, j, k);
        std::string got = combo_string(c);
        if (got != want.commutators[i][j]) {
          ok = false;
          detail = "[" + field_name(i) + ", " + field_name(j) + "] = " + got + ", expected " +
                   want.commutators[i][j];
        }
      }
    }
    stage("commutators", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    const Expr eps = Expr::symbol(param("eps"));
    for (int g = 0; ok && g < 3; ++g) {
      AdjointMatrix m = adjoint_matrix(algebra, g, eps);
      if (!m.exact) {
        ok = false;
        detail = "adjoint action is not exact";
        break;
      }
      for (int j = 0; ok && j < 3; ++j) {
        std::string got = adjoint_image(m, j);
        if (got != want.adjoint[g][j]) {
          ok = false;
          detail = "Ad(exp(eps " + field_name(g) + ")) " + field_name(j) + " = " + got +
                   ", expected " + want.adjoint[g][j];
        }
      }
    }
    stage("adjoint", ok, detail);
  }
  {
    SeriesReport rep = series(algebra);
    bool ok = rep.solvable == want.solvable && rep.nilpotent == want.nilpotent &&
              rep.derived_length == want.derived_length &&
              rep.nilpotency_class == want.nilpotency_class;
    stage("series", ok, "solvability or nilpotency structure differs");
  }

  // Optimal system and its coverage audit.
  {
    OptimalSystem1D sys{algebra};
    CoverageStats stats = verify_optimal_system(sys, 200, 42);
    bool ok = stats.witnesses_ok && stats.uncovered == want.optimal_uncovered &&
              stats.hits_v1 + stats.hits_v2 + stats.hits_v3_family == stats.samples;
    stage("optimal", ok, "classification audit differs");
    for (const std::string& missing : stats.uncovered)
      warnings.push_back("no listed representative covers class " + missing);
  }

  // Reductions.
  for (const golden::Reduction& red : want.reductions) {
    std::string detail;
    bool ok = true;
    VectorField generator{parse_expr(red.xi), parse_expr(red.eta), parse_expr(red.phi)};
    Invariants inv = invariants(generator);
    ReducedODE ode = reduce_pde(r.pde, inv);
    if (to_string(inv.chi) != red.chi) {
      ok = false;
      detail = "chi = " + to_string(inv.chi) + ", expected " + red.chi;
    } else if (to_string(inv.shift) != red.shift) {
      ok = false;
      detail = "shift = " + to_string(inv.shift) + ", expected " + red.shift;
    } else if (to_string(ode.expression) != red.ode) {
      ok = false;
      detail = "ode = " + to_string(ode.expression) + ", expected " + red.ode;
    } else if (ode.order != red.order) {
      ok = false;
      detail = "order differs";
    } else if (static_cast<int>(ode.notes.size()) != red.notes) {
      ok = false;
      detail = "note count differs";
    }
    stage("reduce " + red.label, ok, detail);
    for (const std::string& note : ode.notes) warnings.push_back(note);
  }

  // Closed-form invariant solution of the first reduction.
  {
    const golden::Reduction& red = want.reductions.front();
    VectorField generator{parse_expr(red.xi), parse_expr(red.eta), parse_expr(red.phi)};
    Invariants inv = invariants(generator);
    ReducedODE ode = reduce_pde(r.pde, inv);
    auto closed = solve_linear_first_order(ode, inv);
    bool ok = closed.has_value() && to_string(closed->zeta) == want.zeta_solution &&
              to_string(closed->u) == want.u_solution;
    std::string detail = "closed form differs";
    if (ok) {
      ok = residual_symbolic(r.pde, closed->u).is_zero();
      detail = "symbolic residual is not zero";
    }
    if (ok) {
      std::map<std::string, Rational> params = r.p1;
      params["c1"] = 1;
      ResidualReport num = residual_numeric(r.pde, closed->u, Grid{}, params);
      ok = num.singular == 0 && num.max_abs < 1e-12;
      detail = "numeric residual exceeds 1e-12";
    }
    stage("invariant solution", ok, detail);
  }

  bool all_ok = std::all_of(stages.begin(), stages.end(),
                            [](const auto& s) { return s.second.empty(); });

  std::ostringstream text;
  text << "preset: " << want.preset << "\n";
  text << "equation: " << want.equation << "\n";
  for (const auto& [name, detail] : stages) {
    if (detail.empty())
      text << "ok: " << name << "\n";
    else
      text << "MISMATCH: " << name << " (" << detail << ")\n";
  }
  text << "status: " << (all_ok ? "pass" : "fail") << "\n";

  ordered_json stage_list = ordered_json::array();
  for (const auto& [name, detail] : stages) {
    ordered_json s{{"name", name}, {"status", detail.empty() ? "ok" : "mismatch"}};
    if (!detail.empty()) s["detail"] = detail;
    stage_list.push_back(std::move(s));
  }
  ordered_json doc{{"command", "paper-repro"},
                   {"preset", want.preset},
                   {"equation", want.equation},
                   {"stages", stage_list},
                   {"warnings", warnings},
                   {"status", all_ok ? "pass" : "fail"}};
  emit_warnings(err, warnings);
  emit(out, as_json, doc, text.str());
  return all_ok ? kOk : kMismatch;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie point symmetries of scalar evolution equations"};
  app.name("liesym");
  app.require_subcommand(1);

  EquationOptions eq_analyze, eq_tables, eq_optimal, eq_reduce, eq_verify;
  bool json_analyze = false, json_tables = false, json_optimal = false, json_reduce = false,
       json_verify = false, json_prolong = false, json_repro = false;

  CLI::App* analyze = app.add_subcommand("analyze", "compute the symmetry generators");
  add_equation_options(analyze, eq_analyze);
  analyze->add_flag("--json", json_analyze, "machine readable output");

  CLI::App* tables = app.add_subcommand("tables", "commutator and adjoint tables");
  add_equation_options(tables, eq_tables);
  tables->add_flag("--json", json_tables, "machine readable output");

  CLI::App* optimal = app.add_subcommand("optimal", "one-dimensional optimal system");
  add_equation_options(optimal, eq_optimal);
  int samples = 200;
  std::uint64_t seed = 42;
  bool coarse = false;
  optimal->add_option("--samples", samples, "random vectors to classify")
      ->check(CLI::PositiveNumber);
  optimal->add_option("--seed", seed, "random seed");
  optimal->add_flag("--coarse", coarse, "split the alpha family by sign only");
  optimal->add_flag("--json", json_optimal, "machine readable output");

  CLI::App* reduce = app.add_subcommand("reduce", "symmetry reduction to an ordinary equation");
  add_equation_options(reduce, eq_reduce);
  std::string red_combo, red_xi = "0", red_eta = "0", red_phi = "0";
  bool red_solve = false;
  reduce->add_option("--generator", red_combo,
                     "combination of the computed basis, e.g. \"v3 + 2*v2\"");
  reduce->add_option("--xi", red_xi, "x component of an explicit generator");
  reduce->add_option("--eta", red_eta, "t component of an explicit generator");
  reduce->add_option("--phi", red_phi, "u component of an explicit generator");
  reduce->add_flag("--solve", red_solve, "attempt a closed form of the reduced equation");
  reduce->add_flag("--json", json_reduce, "machine readable output");

  CLI::App* verify = app.add_subcommand("verify", "check a candidate solution");
  add_equation_options(verify, eq_verify);
  std::string solution_text, verify_values, grid_text, transform_text, dump_path;
  double tolerance = 1e-12;
  verify->add_option("--solution", solution_text, "candidate u(x, t)")->required();
  verify->add_option("--values", verify_values,
                     "numeric values name=value,... on top of the equation point, e.g. c1=1");
  verify->add_option("--grid", grid_text, "x_min,x_max,t_min,t_max,nx,nt (default 0,1,1,2,100,100)");
  verify->add_option("--transform", transform_text,
                     "apply a symmetry group element first, e.g. G3:1/2");
  verify->add_option("--dump", dump_path, "write the residual field as CSV (x,t,residual)");
  verify->add_option("--tolerance", tolerance, "numeric pass threshold");
  verify->add_flag("--json", json_verify, "machine readable output");

  CLI::App* prolong = app.add_subcommand("prolong", "prolongation coefficients of a generator");
  std::string pro_xi = "0", pro_eta = "0", pro_phi = "0";
  int pro_order = 2;
  prolong->add_option("--xi", pro_xi, "x component of the generator");
  prolong->add_option("--eta", pro_eta, "t component of the generator");
  prolong->add_option("--phi", pro_phi, "u component of the generator");
  prolong->add_option("--order", pro_order, "jet order")->check(CLI::PositiveNumber);
  prolong->add_flag("--json", json_prolong, "machine readable output");

  CLI::App* repro = app.add_subcommand("paper-repro", "replay the flagship analysis end to end");
  repro->add_flag("--json", json_repro, "machine readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (analyze->parsed()) return run_analyze(resolve_equation(eq_analyze), json_analyze, out, err);
    if (tables->parsed()) return run_tables(resolve_equation(eq_tables), json_tables, out, err);
    if (optimal->parsed())
      return run_optimal(resolve_equation(eq_optimal), samples, seed, coarse, json_optimal, out,
                         err);
    if (reduce->parsed()) {
      ResolvedEquation r = resolve_equation(eq_reduce);
      bool explicit_components = reduce->count("--xi") + reduce->count("--eta") +
                                     reduce->count("--phi") >
                                 0;
      if (red_combo.empty() == !explicit_components)
        throw UsageError("give the generator either as --generator or as --xi/--eta/--phi");
      VectorField generator =
          red_combo.empty() ? field_from_options(red_xi, red_eta, red_phi)
                            : combination_field(red_combo, run_solver(r, err).fields);
      return run_reduce(r, generator, red_solve, json_reduce, out, err);
    }
    if (verify->parsed())
      return run_verify(resolve_equation(eq_verify), solution_text, verify_values, grid_text,
                        transform_text, dump_path, tolerance, json_verify, out, err);
    if (prolong->parsed())
      return run_prolong(field_from_options(pro_xi, pro_eta, pro_phi), pro_order, json_prolong,
                         out);
    if (repro->parsed()) return run_repro(json_repro, out, err);
    throw InternalError("no subcommand dispatched");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MismatchError& e) {
    err << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace liesym
