#include "bandspec/cli.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "bandspec/errors.hpp"
#include "bandspec/json_io.hpp"
#include "bandspec/linalg.hpp"
#include "bandspec/spectral.hpp"
#include "bandspec/toda.hpp"
#include "bandspec/tridiag.hpp"

namespace bandspec {

namespace {

struct Opts {
  std::string input;
  std::string output;
  std::string csv;
  double tol = kRankTol;
  double dt = 1e-3;
  std::vector<double> times;
  long long seed = 0;
  int k = 0;
  std::string method = "qr";
  std::string reorth = "on";
};

void attach_common(CLI::App* sub, Opts& o) {
  sub->add_option("input", o.input, "input JSON file")->required();
  sub->add_option("--output", o.output, "write the report to this file too");
  sub->add_option("--tol", o.tol, "rank detection tolerance");
  sub->add_option("--seed", o.seed, "seed echoed into the report");
}

Json meta(const Opts& o, const char* command) {
  Json j;
  j["command"] = command;
  j["seed"] = o.seed;
  j["tol"] = o.tol;
  return j;
}

void emit(const Json& rep, const Opts& o, std::ostream& out) {
  std::string text = rep.dump(2) + "\n";
  out << text;
  if (!o.output.empty()) save_text(o.output, text);
}

// k comes from the file when present; an explicit flag must agree.
int resolve_k(const MatrixInput& in, const Opts& o, bool required = true) {
  if (in.k && o.k > 0 && *in.k != o.k)
    throw SchemaError("--k disagrees with the k stored in the file");
  if (in.k) return *in.k;
  if (o.k > 0) return o.k;
  if (required) throw SchemaError("k is needed: pass --k or use a banded file");
  return 0;
}

Json measure_report(const MatrixMeasure& mu, const MeasureClassReport& rep) {
  Json j;
  j["type"] = "measure";
  j["valid"] = rep.member;
  j["k"] = mu.k();
  j["N"] = rep.dim;
  j["n"] = rep.n;
  j["ell"] = rep.ell;
  j["mass_error"] = rep.mass_error;
  j["krylov_rank"] = rep.krylov_rank;
  j["violations"] = rep.violations;
  return j;
}

int cmd_validate(const Opts& o, std::ostream& out) {
  Json in = load_json(o.input);
  Json rep = meta(o, "validate");
  bool valid = false;
  if (is_measure_json(in)) {
    MatrixMeasure mu = measure_from_json(in);
    MeasureClassReport mrep = validate_measure(mu, -1, o.tol);
    rep.update(measure_report(mu, mrep));
    valid = mrep.member;
  } else {
    MatrixInput m = matrix_input_from_json(in);
    int k = resolve_k(m, o);
    std::vector<std::string> violations = banded_violations(m.dense, k, o.tol);
    int dim = static_cast<int>(m.dense.rows());
    int n = (dim + k - 1) / k;
    rep["type"] = "matrix";
    rep["valid"] = violations.empty();
    rep["k"] = k;
    rep["N"] = dim;
    rep["n"] = n;
    rep["ell"] = n * k - dim;
    rep["violations"] = violations;
    valid = violations.empty();
  }
  emit(rep, o, out);
  return valid ? 0 : 1;
}

int cmd_spectral(const Opts& o, std::ostream& out) {
  MatrixInput in = matrix_input_from_json(load_json(o.input));
  int k = resolve_k(in, o);
  BandedHermitian j = in.banded ? *in.banded
                                : validate_banded(in.dense, k, o.tol);
  MatrixMeasure mu = spectral_map(j, kMergeTol, o.tol);
  Json rep = meta(o, "spectral");
  rep["k"] = k;
  rep["N"] = j.dim();
  rep["atoms"] = mu.size();
  rep["measure"] = measure_to_json(mu);
  emit(rep, o, out);
  return 0;
}

int cmd_inverse(const Opts& o, std::ostream& out) {
  MatrixMeasure mu = measure_from_json(load_json(o.input));
  BandedHermitian j = inverse_spectral_map(mu, o.tol);
  Json rep = meta(o, "inverse");
  rep["k"] = j.k();
  rep["N"] = j.dim();
  rep["matrix"] = banded_to_json(j);
  emit(rep, o, out);
  return 0;
}

int cmd_roundtrip(const Opts& o, std::ostream& out) {
  Json in = load_json(o.input);
  Json rep = meta(o, "roundtrip");
  if (is_measure_json(in)) {
    MatrixMeasure mu = measure_from_json(in);
    MatrixMeasure back = spectral_map(inverse_spectral_map(mu, o.tol),
                                      kMergeTol, o.tol);
    double point_err = 0.0, weight_err = 0.0;
    if (back.size() != mu.size())
      throw RankMismatchError("roundtrip: atom count changed");
    for (int i = 0; i < mu.size(); ++i) {
      point_err = std::max(point_err, std::abs(mu.atom(i).x - back.atom(i).x));
      weight_err =
          std::max(weight_err, max_abs(mu.atom(i).weight - back.atom(i).weight));
    }
    rep["type"] = "measure";
    rep["atoms"] = mu.size();
    rep["max_point_error"] = point_err;
    rep["max_weight_error"] = weight_err;
  } else {
    MatrixInput m = matrix_input_from_json(in);
    int k = resolve_k(m, o);
    BandedHermitian j = m.banded ? *m.banded
                                 : validate_banded(m.dense, k, o.tol);
    BandedHermitian back =
        inverse_spectral_map(spectral_map(j, kMergeTol, o.tol), o.tol);
    rep["type"] = "matrix";
    rep["k"] = k;
    rep["N"] = j.dim();
    rep["max_block_error"] = max_abs(j.dense() - back.dense());
  }
  emit(rep, o, out);
  return 0;
}

int cmd_lanczos(const Opts& o, std::ostream& out) {
  MatrixInput in = matrix_input_from_json(load_json(o.input));
  int k = resolve_k(in, o);
  LanczosResult res =
      block_lanczos_leading(in.dense, k, o.reorth == "on", o.tol);
  Json rep = meta(o, "lanczos");
  rep["k"] = k;
  rep["N"] = static_cast<int>(in.dense.rows());
  rep["reorth"] = o.reorth;
  rep["completed"] = res.completed;
  rep["early_termination"] = res.early_termination;
  rep["steps"] = res.steps;
  Json ranks = Json::array();
  for (const Matrix& v : res.basis) ranks.push_back(v.cols());
  rep["block_ranks"] = std::move(ranks);
  rep["matrix"] = res.completed ? banded_to_json(res.banded()) : Json(nullptr);
  emit(rep, o, out);
  return 0;
}

int cmd_householder(const Opts& o, std::ostream& out) {
  MatrixInput in = matrix_input_from_json(load_json(o.input));
  int k = resolve_k(in, o);
  BandedHermitian j = householder_blocktridiag(in.dense, k, o.tol);
  Json rep = meta(o, "householder");
  rep["k"] = k;
  rep["N"] = j.dim();
  rep["matrix"] = banded_to_json(j);
  rep["violations"] = banded_violations(j.dense(), k, std::max(o.tol, 1e-8));
  emit(rep, o, out);
  return 0;
}

int cmd_equivalence(const Opts& o, std::ostream& out) {
  MatrixInput in = matrix_input_from_json(load_json(o.input));
  int k = resolve_k(in, o);
  EquivalenceReport r = equivalence_check(in.dense, k, kEquivTol, o.tol);
  Json rep = meta(o, "equivalence");
  rep["k"] = k;
  rep["N"] = static_cast<int>(in.dense.rows());
  rep["comparable"] = r.comparable;
  rep["agree"] = r.agree;
  rep["early_termination"] = r.early_termination;
  rep["lanczos_steps"] = r.lanczos_steps;
  rep["lanczos_vs_householder"] = r.lanczos_vs_householder;
  rep["lanczos_vs_inverse"] = r.lanczos_vs_inverse;
  rep["householder_vs_inverse"] = r.householder_vs_inverse;
  rep["scale"] = r.scale;
  emit(rep, o, out);
  return 0;
}

double drift_against(const RealVector& base, const Matrix& dense) {
  HermitianEig e = hermitian_eig(dense, 1e-6);
  return (e.eigenvalues - base).cwiseAbs().maxCoeff();
}

int cmd_toda(const Opts& o, std::ostream& out) {
  MatrixInput in = matrix_input_from_json(load_json(o.input));
  int k = resolve_k(in, o);
  BandedHermitian x0 = in.banded ? *in.banded
                                 : validate_banded(in.dense, k, o.tol);
  RealVector base = hermitian_eig(x0.dense()).eigenvalues;

  std::vector<std::string> methods;
  if (o.method == "compare")
    methods = {"qr", "spectral", "rk4"};
  else
    methods = {o.method};

  std::string text;
  std::string csv = "t,method,eig_drift,qr_vs_spectral,qr_vs_rk4,spectral_vs_rk4\n";
  for (double t : o.times) {
    Matrix x_qr, x_sp, x_rk;
    for (const std::string& m : methods) {
      Json line;
      line["t"] = t;
      line["method"] = m;
      if (m == "qr") {
        TodaSolution sol = toda_qr_flow(x0, t, o.tol);
        x_qr = sol.x.dense();
        line["eig_drift"] = sol.eig_drift;
        line["X"] = banded_to_json(sol.x);
      } else if (m == "spectral") {
        BandedHermitian xt = toda_spectral_flow(x0, t, o.tol);
        x_sp = xt.dense();
        line["eig_drift"] = drift_against(base, x_sp);
        line["X"] = banded_to_json(xt);
      } else {
        Matrix xt = toda_rk4(x0.dense(), t, o.dt);
        x_rk = xt;
        line["eig_drift"] = drift_against(base, xt);
        line["X"] = banded_to_json(banded_part(xt, k));
      }
      line["seed"] = o.seed;
      text += line.dump() + "\n";
      csv += line["t"].dump() + "," + m + "," + line["eig_drift"].dump() +
             ",,,\n";
    }
    if (o.method == "compare") {
      Json line;
      line["t"] = t;
      line["method"] = "compare";
      line["qr_vs_spectral"] = max_abs(x_qr - x_sp);
      line["qr_vs_rk4"] = max_abs(x_qr - x_rk);
      line["spectral_vs_rk4"] = max_abs(x_sp - x_rk);
      line["seed"] = o.seed;
      text += line.dump() + "\n";
      csv += line["t"].dump() + ",compare,," + line["qr_vs_spectral"].dump() +
             "," + line["qr_vs_rk4"].dump() + "," +
             line["spectral_vs_rk4"].dump() + "\n";
    }
  }
  out << text;
  if (!o.output.empty()) save_text(o.output, text);
  if (!o.csv.empty()) save_text(o.csv, csv);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"spectral toolkit for Hermitian block tridiagonal matrices"};
  app.require_subcommand(1);

  Opts o;
  CLI::App* validate = app.add_subcommand(
      "validate", "check a matrix or measure file against its class");
  CLI::App* spectral = app.add_subcommand(
      "spectral", "spectral measure of a banded matrix");
  CLI::App* inverse = app.add_subcommand(
      "inverse", "rebuild the banded matrix from a measure");
  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "error of the map composed with its inverse");
  CLI::App* lanczos = app.add_subcommand(
      "lanczos", "block Lanczos reduction from the leading coordinates");
  CLI::App* householder = app.add_subcommand(
      "householder", "Householder band reduction");
  CLI::App* equivalence = app.add_subcommand(
      "equivalence", "compare Lanczos, Householder, and the measure route");
  CLI::App* toda = app.add_subcommand(
      "toda", "isospectral flow, one JSON line per time and method");

  for (CLI::App* sub : {validate, spectral, inverse, roundtrip, lanczos,
                        householder, equivalence, toda})
    attach_common(sub, o);
  for (CLI::App* sub : {validate, spectral, roundtrip, lanczos, householder,
                        equivalence, toda})
    sub->add_option("--k", o.k, "block size for dense inputs");
  lanczos->add_option("--reorth", o.reorth, "full reorthogonalization")
      ->check(CLI::IsMember({"on", "off"}));
  toda->add_option("--t", o.times, "flow times")->required();
  toda->add_option("--dt", o.dt, "RK4 step size");
  toda->add_option("--method", o.method, "qr | spectral | rk4 | compare")
      ->check(CLI::IsMember({"qr", "spectral", "rk4", "compare"}));
  toda->add_option("--csv", o.csv, "also write a CSV summary");

  std::vector<std::string> argv_store;
  argv_store.push_back("bandspec");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(argv_store.size());
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(o, out);
    if (app.got_subcommand(spectral)) return cmd_spectral(o, out);
    if (app.got_subcommand(inverse)) return cmd_inverse(o, out);
    if (app.got_subcommand(roundtrip)) return cmd_roundtrip(o, out);
    if (app.got_subcommand(lanczos)) return cmd_lanczos(o, out);
    if (app.got_subcommand(householder)) return cmd_householder(o, out);
    if (app.got_subcommand(equivalence)) return cmd_equivalence(o, out);
    if (app.got_subcommand(toda)) return cmd_toda(o, out);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace bandspec
