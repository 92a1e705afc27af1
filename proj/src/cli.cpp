#include "quillen/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "quillen/driver.hpp"
#include "quillen/elimination.hpp"
#include "quillen/error.hpp"
#include "quillen/fixtures.hpp"
#include "quillen/smith.hpp"

namespace quillen::cli {

namespace {

using nlohmann::json;

struct Flags {
  std::string in;
  std::string out;
  std::optional<long> budget;
  std::optional<unsigned> seed;
  bool timing = false;
};

struct Job {
  RingPtr ring;
  std::optional<PolyMatrix> matrix;
  std::optional<std::string> var;
  std::optional<std::vector<std::string>> ideal;
  std::optional<long> budget;
  json source;
};

struct Document {
  json result = json::object();
  json certificate = json::object();
  json stats = json::object();
};

[[noreturn]] void parse_fail(const std::string& msg) { fail(ErrorKind::ParseError, msg); }

RingPtr parse_ring(const json& j) {
  if (!j.is_object()) parse_fail("ring must be an object");
  const std::string coeff = j.value("coeff", "");
  std::vector<std::string> vars;
  if (j.contains("vars")) vars = j.at("vars").get<std::vector<std::string>>();
  if (coeff == "ZZ") return make_ring(CoeffKind::Z, vars);
  if (coeff == "QQ") return make_ring(CoeffKind::Q, vars);
  if (coeff == "Zp") {
    if (!j.contains("p")) parse_fail("Zp ring needs a modulus p");
    return make_ring(CoeffKind::Zp, vars, j.at("p").get<long>());
  }
  parse_fail("coeff must be ZZ, QQ or Zp");
}

PolyMatrix parse_matrix(const json& j, const RingPtr& ring) {
  if (!j.is_array() || j.empty()) parse_fail("matrix must be a nonempty array of rows");
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) parse_fail("matrix rows must be arrays");
    std::vector<Poly> row;
    for (const auto& e : r) row.push_back(parse_poly(e.get<std::string>(), ring));
    if (!rows.empty() && row.size() != rows.front().size()) parse_fail("matrix rows differ in length");
    rows.push_back(std::move(row));
  }
  if (rows.front().empty()) parse_fail("matrix rows are empty");
  return PolyMatrix::from_rows(ring, rows);
}

Job parse_job(const json& j) {
  if (!j.is_object()) parse_fail("job must be an object");
  if (!j.contains("ring")) parse_fail("job needs a ring");
  Job job{parse_ring(j.at("ring")), {}, {}, {}, {}, j};
  if (j.contains("matrix")) job.matrix = parse_matrix(j.at("matrix"), job.ring);
  if (j.contains("var")) job.var = j.at("var").get<std::string>();
  if (j.contains("ideal")) {
    job.ideal = j.at("ideal").get<std::vector<std::string>>();
    for (const auto& g : *job.ideal) parse_poly(g, job.ring);
  }
  if (j.contains("budget")) job.budget = j.at("budget").get<long>();
  return job;
}

// Row e1 * E over QQ[x,y] with E a product of elementary matrices.
json demo_job(unsigned seed) {
  std::mt19937 gen(seed);
  const RingPtr ring = make_ring(CoeffKind::Q, {"x", "y"});
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2), pick(0, 2);
  auto random_poly = [&] {
    std::vector<Term> terms;
    for (int t = 0; t < 3; ++t) {
      Monomial m;
      m[0] = expo(gen);
      m[1] = expo(gen) % (3 - m[0]);
      terms.push_back({m, Coeff(coeff(gen))});
    }
    return Poly::from_terms(ring, terms);
  };
  PolyMatrix E = PolyMatrix::identity(ring, 3);
  for (int k = 0; k < 4; ++k) {
    const int i = pick(gen), j = (i + 1 + pick(gen) % 2) % 3;
    E.add_col_multiple(i, j, random_poly());
  }
  json row = json::array();
  for (const auto& p : E.row(0)) row.push_back(to_string(p));
  return {{"ring", {{"coeff", "QQ"}, {"vars", {"x", "y"}}}}, {"matrix", {row}}, {"ideal", row}};
}

json to_json(const PolyMatrix& m) { return m.to_strings(); }

json to_json(const std::vector<Poly>& row) {
  json out = json::array();
  for (const auto& p : row) out.push_back(to_string(p));
  return out;
}

std::string coeff_string(const Coeff& c) { return c.get_str(); }

const PolyMatrix& need_matrix(const Job& job) {
  if (!job.matrix) parse_fail("this command needs a matrix");
  return *job.matrix;
}

std::vector<Poly> need_row(const Job& job) {
  const PolyMatrix& m = need_matrix(job);
  if (m.rows() != 1) fail(ErrorKind::ShapeError, "this command needs a single row");
  return m.row(0);
}

std::size_t var_index(const Job& job, const std::vector<Poly>& row) {
  if (job.var) {
    const int idx = job.ring->index_of(*job.var);
    if (idx < 0) parse_fail("unknown variable " + *job.var);
    return static_cast<std::size_t>(idx);
  }
  std::size_t k = 0;
  for (const auto& p : row) k = std::max(k, p.active_vars());
  if (k == 0) fail(ErrorKind::ShapeError, "row involves no variable");
  return k - 1;
}

std::vector<Poly> parse_ideal(const Job& job, const RingPtr& ring) {
  std::vector<Poly> gens;
  if (job.ideal)
    for (const auto& g : *job.ideal) gens.push_back(parse_poly(g, ring));
  return gens;
}

QsOptions qs_options(std::optional<long> budget) {
  QsOptions opts;
  if (budget) {
    const auto b = static_cast<std::size_t>(std::max(1L, *budget));
    opts.elimination.normalization.max_candidates = b;
    opts.elimination.max_ideal.max_points = b;
  }
  return opts;
}

json qs_stats(const QsStats& s) {
  return {{"rounds", s.rounds}, {"local_solutions", s.local_solutions}, {"shortcuts", s.shortcuts},
          {"base_cases", s.base_cases}};
}

json ideal_strings(const std::vector<Poly>& gens) { return to_json(gens); }

using Handler = std::function<Document(const Job&, std::optional<long>)>;

Document cmd_is_unimodular(const Job& job, std::optional<long>) {
  const PolyMatrix& M = need_matrix(job);
  if (!is_unimodular(M)) fail(ErrorKind::NotUnimodular, "the maximal minors generate a proper ideal");
  std::vector<Poly> mins = minors(M, M.rows());
  auto cert = one_certificate({M.ring(), mins});
  ensure(cert.has_value(), "unimodular matrix without a certificate");
  Document doc;
  doc.result["unimodular"] = true;
  doc.certificate["minors"] = to_json(mins);
  doc.certificate["cofactors"] = to_json(*cert);
  return doc;
}

Document cmd_qs(const Job& job, std::optional<long> budget) {
  UnimodSolution sol = qs_matrix(need_matrix(job), qs_options(budget));
  Document doc;
  doc.result["V"] = to_json(sol.V);
  doc.certificate["product"] = to_json(sol.certificate);
  doc.certificate["det"] = to_string(sol.det_V);
  doc.stats = qs_stats(sol.stats);
  return doc;
}

Document cmd_complete(const Job& job, std::optional<long> budget) {
  PolyMatrix C = complete_matrix(need_matrix(job), qs_options(budget));
  Document doc;
  doc.result["C"] = to_json(C);
  doc.certificate["det"] = to_string(determinant(C));
  return doc;
}

Document cmd_free_basis(const Job& job, std::optional<long> budget) {
  const PolyMatrix& f = need_matrix(job);
  FreeBasis fb = compute_free_basis(f, qs_options(budget));
  Document doc;
  doc.result["B"] = to_json(fb.B);
  doc.certificate["f_times_B"] = to_json(f * fb.B);
  doc.certificate["W"] = to_json(fb.W);
  doc.certificate["W_times_B"] = to_json(fb.W * fb.B);
  return doc;
}

Document cmd_iso(const Job& job, std::optional<long> budget) {
  const PolyMatrix& f = need_matrix(job);
  FreeBasis fb = qs_isomorphism(f, qs_options(budget));
  Document doc;
  doc.result["B"] = to_json(fb.B);
  doc.result["W"] = to_json(fb.W);
  doc.certificate["f_times_B"] = to_json(f * fb.B);
  doc.certificate["W_times_B"] = to_json(fb.W * fb.B);
  return doc;
}

Document cmd_is_projective(const Job& job, std::optional<long>) {
  const PolyMatrix& P = need_matrix(job);
  auto rank = projective_rank(P);
  Document doc;
  doc.result["projective"] = rank.has_value();
  doc.result["rank"] = rank ? json(*rank) : json(nullptr);
  if (rank) {
    doc.certificate["fitting_unit"] = ideal_strings(fitting_ideal(P, *rank).generators);
    doc.certificate["fitting_zero"] =
        *rank == 0 ? json::array() : ideal_strings(fitting_ideal(P, *rank - 1).generators);
  }
  return doc;
}

MaxIdealBudget max_ideal_budget(std::optional<long> budget) {
  MaxIdealBudget b;
  if (budget) b.max_points = static_cast<std::size_t>(std::max(1L, *budget));
  return b;
}

Document cmd_horrocks(const Job& job, std::optional<long> budget) {
  const std::vector<Poly> f = need_row(job);
  const std::size_t y = var_index(job, f);
  const BaseRing base(job.ring, y);
  MaxIdeal m = get_max_ideal({base.base(), parse_ideal(job, base.base())}, max_ideal_budget(budget));
  LocalSolution sol = horrocks(f, y, m);
  Document doc;
  doc.result["m"] = m.gen_strings();
  json L = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.size(); ++j) row.push_back(to_string(sol.entry(i, j)));
    L.push_back(row);
  }
  doc.result["L"] = L;
  doc.result["denominator"] = to_string(sol.denominator);
  doc.certificate["numerator"] = to_json(sol.numerator);
  doc.certificate["entry_den"] = to_string(sol.entry_den);
  doc.certificate["f_times_numerator"] = to_json(row_times(f, sol.numerator));
  doc.certificate["det_numerator"] = to_string(sol.det_numerator);
  return doc;
}

Document cmd_patch(const Job& job, std::optional<long> budget) {
  const std::vector<Poly> f = need_row(job);
  const std::size_t y = var_index(job, f);
  LocalLoopResult loop = local_loop(f, y, max_ideal_budget(budget));
  PatchResult pr = patch(loop.solutions, y);
  Document doc;
  doc.result["U"] = to_json(pr.U);
  doc.certificate["f_times_U"] = to_json(row_times(f, pr.U));
  doc.certificate["det"] = to_string(determinant(pr.U));
  json ms = json::array();
  for (const auto& s : loop.solutions) ms.push_back(s.m.gen_strings());
  doc.stats["maximal_ideals"] = ms;
  doc.stats["denominators"] = to_json(loop.denominators);
  doc.stats["exponent"] = pr.exponent;
  doc.stats["cofactors"] = to_json(pr.cofactors);
  return doc;
}

Document cmd_change_var(const Job& job, std::optional<long> budget) {
  const std::vector<Poly> f = need_row(job);
  const std::size_t y = var_index(job, f);
  NormalizationBudget nb;
  if (budget) nb.max_candidates = static_cast<std::size_t>(std::max(1L, *budget));
  ChangeVarResult cv = change_var(f, y + 1, nb);
  Document doc;
  doc.result["U1"] = to_json(cv.U1);
  doc.result["substitution"] = to_json(cv.subs.forward());
  doc.result["inverse"] = to_json(cv.subs.inverse());
  doc.result["row"] = to_json(cv.row);
  doc.certificate["monic_in"] = job.ring->var(y);
  doc.certificate["det_U1"] = to_string(determinant(cv.U1));
  return doc;
}

Document cmd_max_ideal(const Job& job, std::optional<long> budget) {
  const std::vector<Poly> gens = parse_ideal(job, job.ring);
  MaxIdeal m = get_max_ideal({job.ring, gens}, max_ideal_budget(budget));
  Document doc;
  doc.result["generators"] = m.gen_strings();
  doc.result["prime"] = m.prime;
  json point = json::array();
  for (const auto& c : m.point) point.push_back(coeff_string(c));
  doc.result["point"] = point;
  json residues = json::array();
  for (const auto& g : gens) residues.push_back(coeff_string(m.residue(g)));
  doc.certificate["input_residues"] = residues;
  return doc;
}

Document cmd_snf(const Job& job, std::optional<long>) {
  const PolyMatrix& A = need_matrix(job);
  SNFResult r = smith_normal_form(A);
  Document doc;
  doc.result["U"] = to_json(r.U);
  doc.result["D"] = to_json(r.D);
  doc.result["W"] = to_json(r.W);
  doc.certificate["U_times_A_times_W"] = to_json(r.U * A * r.W);
  doc.certificate["det_U"] = to_string(determinant(r.U));
  doc.certificate["det_W"] = to_string(determinant(r.W));
  return doc;
}

Document cmd_gb(const Job& job, std::optional<long> budget) {
  const std::vector<Poly> gens = parse_ideal(job, job.ring);
  GroebnerOptions opts;
  if (budget) opts.max_pairs = static_cast<std::size_t>(std::max(1L, *budget));
  GroebnerBasis gb = groebner({job.ring, gens}, opts);
  Document doc;
  doc.result["basis"] = to_json(gb.gens);
  doc.result["contains_one"] = gb.contains_unit();
  json cof = json::array();
  for (const auto& c : gb.cofactors) cof.push_back(to_json(c));
  doc.certificate["cofactors"] = cof;
  doc.stats["pairs"] = gb.pairs_processed;
  return doc;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kParseError;
    case ErrorKind::SearchExhausted:
    case ErrorKind::ResourceExceeded:
    case ErrorKind::NormalizationExhausted: return kBudgetExhausted;
    case ErrorKind::InvariantViolation: return kInternalError;
    default: return kContractFailure;
  }
}

void emit(const json& doc, const Flags& flags, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (flags.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file) fail(ErrorKind::ParseError, "cannot write " + flags.out);
  file << text;
}

int run_fixtures(std::ostream& out) {
  bool all = true;
  for (const auto& c : run_worked_session()) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.passed) out << "  (" << c.detail << ")";
    out << "\n";
    all = all && c.passed;
  }
  out << (all ? "all fixtures passed\n" : "fixture failures\n");
  return all ? kOk : kContractFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const std::map<std::string, std::pair<std::string, Handler>> commands{
      {"is-unimodular", {"Check that the maximal minors generate the unit ideal", cmd_is_unimodular}},
      {"qs", {"Solve the unimodular matrix problem: M V = [I | 0]", cmd_qs}},
      {"complete", {"Complete a unimodular matrix to an invertible square matrix", cmd_complete}},
      {"free-basis", {"Free basis of the kernel of a unimodular matrix", cmd_free_basis}},
      {"iso", {"Isomorphism between a free module and the kernel, with inverse", cmd_iso}},
      {"is-projective", {"Projectivity of the cokernel of a presentation matrix", cmd_is_projective}},
      {"horrocks", {"Local solution of a row at a maximal ideal", cmd_horrocks}},
      {"patch", {"Local loop and patching for one variable", cmd_patch}},
      {"change-var", {"Normalize a row so its first entry is monic", cmd_change_var}},
      {"max-ideal", {"Maximal ideal in linear-point form containing an ideal", cmd_max_ideal}},
      {"snf", {"Smith normal form over ZZ or k[t]", cmd_snf}},
      {"gb", {"Groebner basis with cofactors", cmd_gb}},
  };

  CLI::App app{"Unimodular rows and matrices over polynomial rings"};
  app.name("quillen");
  bool fixtures = false;
  app.add_flag("--fixtures", fixtures, "Run the worked Z[x,y] session and print a pass/fail table");
  Flags flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--in", flags.in, "Job file (JSON)");
    sub->add_option("--out", flags.out, "Output file (default standard output)");
    sub->add_option("--budget", flags.budget, "Search and Groebner budget");
    sub->add_option("--seed", flags.seed, "Generate a demo job over QQ[x,y] when --in is absent");
    sub->add_flag("--timing", flags.timing, "Report elapsed time in stats");
    sub->add_flag("--fixtures", fixtures, "Run the worked Z[x,y] session");
    subs[name] = sub;
  }
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  if (fixtures) return run_fixtures(out);

  std::string name;
  for (const auto& [n, sub] : subs)
    if (sub->parsed()) name = n;
  if (name.empty()) {
    err << app.help();
    return kParseError;
  }

  json source;
  try {
    if (!flags.in.empty()) {
      std::ifstream file(flags.in);
      if (!file) fail(ErrorKind::ParseError, "cannot read " + flags.in);
      source = json::parse(file);
    } else if (flags.seed) {
      source = demo_job(*flags.seed);
    } else {
      fail(ErrorKind::ParseError, "no job: pass --in <file> or --seed <n>");
    }
    Job job = parse_job(source);
    const std::optional<long> budget = flags.budget ? flags.budget : job.budget;

    const auto start = std::chrono::steady_clock::now();
    Document doc = commands.at(name).second(job, budget);
    if (flags.timing)
      doc.stats["elapsed_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit({{"command", name},
          {"ring", job.ring->to_string()},
          {"result", doc.result},
          {"certificate", doc.certificate},
          {"stats", doc.stats}},
         flags, out);
    return kOk;
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.kind() == ErrorKind::InvariantViolation) err << "job: " << source.dump() << "\n";
    try {
      emit({{"command", name}, {"error", to_string(e.kind())}, {"message", e.what()}}, flags, out);
    } catch (const Error&) {
    }
    return exit_code(e.kind());
  } catch (const json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\njob: " << source.dump() << "\n";
    return kInternalError;
  }
}

}  // namespace quillen::cli
