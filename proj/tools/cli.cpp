#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matrix_file.hpp"
#include "optrig/center_of_mass.hpp"
#include "optrig/errors.hpp"
#include "optrig/linalg.hpp"
#include "optrig/oracle.hpp"
#include "optrig/ortho.hpp"
#include "optrig/trig.hpp"

namespace optrig::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kOracleAgreement = 1e-3;
constexpr double kOracleSlack = 1e-9;
constexpr int kOracleSamples = 100000;

const std::vector<std::string> kCommands = {"cos", "total-cos", "sin", "center-of-mass", "orthogonal", "w0", "minmax"};

struct Options {
  std::string command;
  std::string matrix;
  std::string relative_to;
  bool complex = false;
  std::optional<double> tol;
  int restarts = 32;
  std::optional<std::uint64_t> seed;
  bool verify = false;
  std::string output = "text";
  bool allow_singular = false;
};

struct Inputs {
  MatrixFile t;
  std::optional<MatrixFile> a;

  ComplexMatrix relative() const { return a ? a->matrix : ComplexMatrix::identity(t.matrix.dim()); }
};

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const UnitVector& v) {
  Json arr = Json::array();
  for (int k = 0; k < v.dim(); ++k) arr.push_back(complex_json(v[k]));
  return arr;
}

Json modulus2_json(const UnitVector& v) {
  Json arr = Json::array();
  for (int k = 0; k < v.dim(); ++k) arr.push_back(std::norm(v[k]));
  return arr;
}

Json input_json(const MatrixFile& f) {
  Json j = {{"path", f.path}, {"checksum", f.checksum}, {"n", f.matrix.dim()}};
  if (f.name) j["name"] = *f.name;
  return j;
}

// Collects cross-check failures; any failure maps to exit code 3.
class Checks {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  // oracle - main must lie in [-slack, agreement]
  void oracle_delta(Json& diag, const std::string& key, double oracle_value, double main_value, double scale = 1.0) {
    const double delta = oracle_value - main_value;
    diag[key + "_oracle"] = oracle_value;
    diag[key + "_oracle_delta"] = delta;
    require(delta >= -kOracleSlack * scale && delta <= kOracleAgreement * scale,
            key + ": oracle delta " + std::to_string(delta) + " outside [-1e-9, 1e-3]");
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Report {
  Json doc;
  Checks checks;
};

SphereOptConfig sphere_config(const Options& o) {
  SphereOptConfig cfg;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed.value_or(0);
  return cfg;
}

oracle::SampleOptions sample_options(const Options& o) {
  oracle::SampleOptions s;
  s.samples = kOracleSamples;
  s.seed = o.seed.value_or(0) ^ 0x5DEECE66DULL;
  return s;
}

Json base_report(const Options& o, const Inputs& in) {
  Json inputs = {{"matrix", input_json(in.t)}};
  inputs["relative_to"] = in.a ? input_json(*in.a) : Json("identity");
  return Json{{"command", o.command}, {"inputs", std::move(inputs)}, {"results", Json::object()},
              {"witnesses", Json::object()}, {"diagnostics", Json::object()}};
}

void common_diagnostics(Json& diag, const Options& o, double tol) {
  diag["tol"] = tol;
  diag["seed"] = o.seed.value_or(0);
  diag["restarts"] = o.restarts;
  diag["verified"] = o.verify;
}

void cmd_cos(const Options& o, const Inputs& in, Report& r) {
  const ComplexMatrix& t = in.t.matrix;
  TrigOptions topts;
  topts.sphere = sphere_config(o);
  topts.cross_tol = o.tol.value_or(1e-5);
  const TrigReport rep = trig_report(t, topts);

  Json& res = r.doc["results"];
  res["cos"] = rep.cos_direct;
  res["cos_via_center"] = rep.cos_via_center;
  res["epsilon0"] = rep.epsilon0;
  res["sin"] = rep.sin_value;
  res["minmax_lhs"] = rep.minmax_lhs;
  res["minmax_rhs"] = rep.minmax_rhs;
  r.doc["witnesses"]["antieigenvector"] = vector_json(rep.antieigenvector);

  Json& diag = r.doc["diagnostics"];
  common_diagnostics(diag, o, topts.cross_tol);
  diag["route_delta"] = rep.route_delta();
  diag["identity_delta"] = rep.identity_delta();
  diag["minmax_delta"] = rep.minmax_delta();
  r.checks.require(rep.consistent(topts.cross_tol), "cos: route, identity or min-max delta exceeds cross_tol");

  if (o.verify) {
    const CMatrix& tm = t.data();
    const auto s = oracle::sphere_sample_min(
        [&tm](const CVector& x) {
          const CVector tx = tm * x;
          return x.dot(tx).real() / tx.norm();
        },
        t.dim(), sample_options(o));
    r.checks.oracle_delta(diag, "cos", s.value, rep.cos_direct);
  }
}

void cmd_total_cos(const Options& o, const Inputs& in, Report& r) {
  const ComplexMatrix& t = in.t.matrix;
  const double cross_tol = o.tol.value_or(1e-5);
  Json& res = r.doc["results"];
  Json& diag = r.doc["diagnostics"];
  common_diagnostics(diag, o, cross_tol);

  const Antieigen direct = total_cos_t(t, sphere_config(o), o.allow_singular);
  res["total_cos"] = direct.value;
  res["restricted_to_range"] = direct.restricted;
  r.doc["witnesses"]["antieigenvector"] = vector_json(direct.vector);
  r.doc["witnesses"]["antieigenvector_modulus2"] = modulus2_json(direct.vector);

  if (!direct.restricted) {
    TrigOptions topts;
    topts.sphere = sphere_config(o);
    const TotalViaCenter via = total_cos_via_center(t, topts.center);
    const ComplexMinmax mm = minmax_check_complex(t, topts.sphere, topts.center);
    res["total_cos_via_center"] = via.value;
    res["lambda0"] = complex_json(mm.lambda0);
    res["minmax_lhs"] = mm.lhs;
    res["minmax_rhs"] = mm.rhs;
    const double route = std::abs(direct.value - via.value);
    diag["route_delta"] = route;
    diag["minmax_delta"] = mm.gap();
    r.checks.require(route <= cross_tol && mm.gap() <= cross_tol,
                     "total-cos: route or min-max delta exceeds cross_tol");
  }

  if (o.verify) {
    const CMatrix& tm = t.data();
    const double guard = direct.restricted ? 1e-8 : 1e-12;
    const auto s = oracle::sphere_sample_min(
        [&tm, guard](const CVector& x) {
          const CVector tx = tm * x;
          const double s = tx.norm();
          return s < guard ? std::numeric_limits<double>::infinity() : std::abs(x.dot(tx)) / s;
        },
        t.dim(), sample_options(o));
    r.checks.oracle_delta(diag, "total_cos", s.value, direct.value);
  }
}

void cmd_sin(const Options& o, const Inputs& in, Report& r) {
  const ComplexMatrix& t = in.t.matrix;
  const SinResult s = sin_t(t);
  r.doc["results"]["sin"] = s.value;
  r.doc["results"]["epsilon0"] = s.epsilon0;
  Json& diag = r.doc["diagnostics"];
  common_diagnostics(diag, o, o.tol.value_or(1e-5));

  if (o.verify) {
    const CMatrix& tm = t.data();
    const auto id = CMatrix::Identity(t.dim(), t.dim());
    const oracle::GridSpec spec{0.0, 2.0 / operator_norm(t), 2001, 4};
    const auto g = oracle::grid_min_real([&](double e) { return operator_norm(CMatrix(e * tm - id)); }, spec);
    r.checks.oracle_delta(diag, "sin", g.min, s.value);
  }
}

void cmd_center(const Options& o, const Inputs& in, Report& r) {
  const ComplexMatrix& t = in.t.matrix;
  const ComplexMatrix a = in.relative();
  CenterOptions copts;
  copts.tol = o.tol.value_or(1e-9);
  copts.witness_search.seed = o.seed.value_or(0);
  Json& res = r.doc["results"];
  Json& diag = r.doc["diagnostics"];
  common_diagnostics(diag, o, copts.tol);
  const CMatrix& tm = t.data();
  const CMatrix& am = a.data();
  const double radius = center_search_radius(t, a);
  const double nt = operator_norm(t);

  if (!o.complex) {
    const RealCenterResult c = real_center_of_mass(t, a, copts);
    res["epsilon0"] = c.epsilon0;
    res["residual"] = c.residual;
    res["flat_interval"] = Json::array({c.flat_lo, c.flat_hi});
    res["unique"] = c.unique;
    res["center_uniqueness"] = center_uniqueness(a, c, copts.tol);
    r.doc["witnesses"]["witness"] = vector_json(c.witness);

    const CMatrix b = tm - c.epsilon0 * am;
    const CVector& w = c.witness.data();
    diag["witness_value"] = (am * w).dot(b * w).real();
    diag["witness_norm_delta"] = std::abs((b * w).norm() - c.residual);

    if (o.verify && radius > 0.0) {
      const oracle::GridSpec spec{-radius, radius, 2001, 4};
      const auto g = oracle::grid_min_real([&](double e) { return operator_norm(CMatrix(tm - e * am)); }, spec);
      r.checks.oracle_delta(diag, "residual", g.min, c.residual, std::max(1.0, nt));
    }
  } else {
    const TotalCenterResult c = total_center_of_mass(t, a, copts);
    res["lambda0"] = complex_json(c.lambda0);
    res["residual"] = c.residual;
    res["unique"] = c.unique;
    r.doc["witnesses"]["witness"] = vector_json(c.witness);

    const CMatrix b = tm - c.lambda0 * am;
    const CVector& w = c.witness.data();
    diag["witness_value"] = std::abs((am * w).dot(b * w));
    diag["witness_norm_delta"] = std::abs((b * w).norm() - c.residual);

    if (o.verify && radius > 0.0) {
      const oracle::GridSpec spec{-radius, radius, 81, 3};
      const auto g = oracle::grid_min_complex(
          [&](Complex z) { return operator_norm(CMatrix(tm - z * am)); }, radius, spec);
      r.checks.oracle_delta(diag, "residual", g.min, c.residual, std::max(1.0, nt));
    }
  }
}

void cmd_orthogonal(const Options& o, const Inputs& in, Report& r) {
  const ComplexMatrix& t = in.t.matrix;
  const ComplexMatrix a = in.relative();
  OrthoOptions oopts;
  oopts.tol = o.tol.value_or(1e-6);
  oopts.sphere.seed = o.seed.value_or(0);
  Json& res = r.doc["results"];
  Json& diag = r.doc["diagnostics"];
  common_diagnostics(diag, o, oopts.tol);

  const OrthogonalityVerdict v = o.complex ? is_total_orthogonal(t, a, oopts) : is_real_orthogonal(t, a, oopts);
  const W0Interval w0 = w0_interval(t, a, oopts.tol_subspace);
  res["kind"] = o.complex ? "total" : "real";
  res["orthogonal"] = v.orthogonal;
  res["route_w0"] = v.route_w0;
  res["route_norm"] = v.route_norm;
  res["w0"] = Json::array({w0.lo, w0.hi});
  diag["w0_distance"] = v.w0_distance;
  diag["norm_drop"] = v.norm_drop;
  if (v.witness) r.doc["witnesses"]["witness"] = vector_json(*v.witness);

  if (o.verify) {
    const CMatrix& tm = t.data();
    const CMatrix& am = a.data();
    const double radius = center_search_radius(t, a);
    const double nt = operator_norm(t);
    double grid_min = 0.0;
    if (o.complex) {
      grid_min = oracle::grid_min_complex([&](Complex z) { return operator_norm(CMatrix(tm - z * am)); }, radius,
                                          oracle::GridSpec{-radius, radius, 81, 3})
                     .min;
    } else {
      grid_min = oracle::grid_min_real([&](double e) { return operator_norm(CMatrix(tm - e * am)); },
                                       oracle::GridSpec{-radius, radius, 2001, 4})
                     .min;
    }
    const double drop = (nt - grid_min) / nt;
    diag["norm_drop_oracle"] = drop;
    // A grid cannot undercut the true minimum, so an orthogonal verdict
    // forbids any resolvable drop; a non-orthogonal one must be seen by the grid.
    r.checks.require(v.orthogonal ? drop <= kOracleSlack : drop >= -kOracleSlack,
                     "orthogonal: grid oracle contradicts verdict");
    r.checks.require(std::abs(drop - v.norm_drop) <= kOracleAgreement, "orthogonal: oracle norm drop differs");
  }
}

void cmd_w0(const Options& o, const Inputs& in, Report& r) {
  const ComplexMatrix& t = in.t.matrix;
  const ComplexMatrix a = in.relative();
  const W0Interval w0 = w0_interval(t, a);
  r.doc["results"]["lo"] = w0.lo;
  r.doc["results"]["hi"] = w0.hi;
  r.doc["witnesses"]["attaining_lo"] = vector_json(w0.attaining_lo);
  r.doc["witnesses"]["attaining_hi"] = vector_json(w0.attaining_hi);
  Json& diag = r.doc["diagnostics"];
  common_diagnostics(diag, o, o.tol.value_or(1e-8));

  if (o.verify) {
    const MaximizingSubspace sub = maximizing_subspace(t);
    const CMatrix m = (a.data() * sub.basis).adjoint() * (t.data() * sub.basis);
    const auto form = [&m](const CVector& c) { return c.dot(m * c).real(); };
    auto opts = sample_options(o);
    opts.samples = 10000;
    const auto lo = oracle::sphere_sample_min(form, sub.dim(), opts);
    const auto hi = oracle::sphere_sample_max(form, sub.dim(), opts);
    const double scale = std::max(1.0, operator_norm(t) * operator_norm(a));
    // lo is a minimum: the oracle sits above it; hi is a maximum: below it.
    r.checks.oracle_delta(diag, "lo", lo.value, w0.lo, scale);
    r.checks.oracle_delta(diag, "hi", -hi.value, -w0.hi, scale);
  }
}

void cmd_minmax(const Options& o, const Inputs& in, Report& r) {
  const ComplexMatrix& t = in.t.matrix;
  const double cross_tol = o.tol.value_or(1e-5);
  const SphereOptConfig cfg = sphere_config(o);
  Json& res = r.doc["results"];
  Json& diag = r.doc["diagnostics"];
  common_diagnostics(diag, o, cross_tol);
  res["kind"] = o.complex ? "complex" : "real";

  const CMatrix& tm = t.data();
  const auto id = CMatrix::Identity(t.dim(), t.dim());
  double lhs = 0.0;
  double rhs = 0.0;
  if (!o.complex) {
    const RealMinmax mm = minmax_check_real(t, cfg);
    lhs = mm.lhs;
    rhs = mm.rhs;
    res["lhs"] = mm.lhs;
    res["rhs"] = mm.rhs;
    res["epsilon0"] = mm.epsilon0;
    r.doc["witnesses"]["sup_vector"] = vector_json(mm.sup_vector);
    diag["gap"] = mm.gap();
    r.checks.require(mm.gap() <= cross_tol, "minmax: real gap exceeds cross_tol");
  } else {
    const ComplexMinmax mm = minmax_check_complex(t, cfg);
    lhs = mm.lhs;
    rhs = mm.rhs;
    res["lhs"] = mm.lhs;
    res["rhs"] = mm.rhs;
    res["lambda0"] = complex_json(mm.lambda0);
    r.doc["witnesses"]["sup_vector"] = vector_json(mm.sup_vector);
    diag["gap"] = mm.gap();
    r.checks.require(mm.gap() <= cross_tol, "minmax: complex gap exceeds cross_tol");
  }

  if (o.verify) {
    const bool cplx = o.complex;
    const auto s = oracle::sphere_sample_max(
        [&tm, cplx](const CVector& x) {
          const CVector tx = tm * x;
          const Complex p = x.dot(tx);
          const double q = cplx ? std::norm(p) : p.real() * p.real();
          return 1.0 - q / tx.squaredNorm();
        },
        t.dim(), sample_options(o));
    // lhs is a supremum: the oracle sits below it.
    r.checks.oracle_delta(diag, "lhs", -s.value, -lhs);
    const double radius = 2.0 / operator_norm(t);
    double grid = 0.0;
    if (cplx) {
      grid = oracle::grid_min_complex([&](Complex z) { return std::pow(operator_norm(CMatrix(z * tm - id)), 2); },
                                      radius, oracle::GridSpec{-radius, radius, 81, 3})
                 .min;
    } else {
      grid = oracle::grid_min_real([&](double e) { return std::pow(operator_norm(CMatrix(e * tm - id)), 2); },
                                   oracle::GridSpec{0.0, radius, 2001, 4})
                 .min;
    }
    r.checks.oracle_delta(diag, "rhs", grid, rhs);
  }
}

// ---- text rendering ---------------------------------------------------------

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string inline_value(const Json& j) {
  if (j.is_number_float()) return format_number(j.get<double>());
  if (j.is_number()) return j.dump();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) s += ", ";
      s += inline_value(j[i]);
    }
    return s + "]";
  }
  return j.dump();
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out << prefix << " = " << inline_value(j) << '\n';
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  if (o.output == "json") {
    out << doc.dump(2) << '\n';
  } else {
    render_text(doc, "", out);
  }
}

int fail(const Options& o, std::ostream& out, std::ostream& err, int code, const std::string& kind,
         const std::string& message) {
  err << "optrig: " << message << '\n';
  if (o.output == "json") {
    const Json doc = {{"command", o.command}, {"error", {{"kind", kind}, {"message", message}}}, {"exit_code", code}};
    out << doc.dump(2) << '\n';
  }
  return code;
}

std::optional<std::uint64_t> seed_from_env() {
  const char* env = std::getenv("OPTRIG_SEED");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"optrig: operator trigonometry, centers of mass and Birkhoff-James orthogonality"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::uint64_t seed_value = 0;
  for (const std::string& name : kCommands) {
    CLI::App* sub = app.add_subcommand(name, "");
    sub->add_option("--matrix", o.matrix, "JSON matrix file for T")->required();
    sub->add_option("--relative-to", o.relative_to, "JSON matrix file for A (default: identity)");
    sub->add_flag("--complex", o.complex, "Total (complex-scalar) variant");
    sub->add_option("--tol", o.tol, "Tolerance (meaning depends on the command)")->check(CLI::PositiveNumber);
    sub->add_option("--restarts", o.restarts, "Sphere optimizer restarts")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed_value, "Seed (default: $OPTRIG_SEED or 0)");
    sub->add_flag("--verify", o.verify, "Cross-check against brute-force oracles");
    sub->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--allow-singular", o.allow_singular, "total-cos: restrict the infimum to |Tx| >= 1e-8");
    sub->callback([&o, name] { o.command = name; });
  }
  app.get_subcommand("cos")->description("First antieigenvalue cos T, with sin T and the real min-max check");
  app.get_subcommand("total-cos")->description("Total antieigenvalue |cos| T and the complex min-max check");
  app.get_subcommand("sin")->description("sin T = min over eps > 0 of |eps T - I|");
  app.get_subcommand("center-of-mass")->description("Real (or, with --complex, total) center of mass of T relative to A");
  app.get_subcommand("orthogonal")->description("Real (or total) Birkhoff-James orthogonality of T to A");
  app.get_subcommand("w0")->description("Interval of Re<Tx,Ax> over the maximizing subspace of T");
  app.get_subcommand("minmax")->description("Min-max equality check (real, or complex with --complex)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "optrig: " << e.what() << '\n';
    return kInputError;
  }

  bool seed_given = false;
  for (const std::string& name : kCommands) {
    if (app.got_subcommand(name) && app.get_subcommand(name)->count("--seed") > 0) seed_given = true;
  }
  o.seed = seed_given ? std::optional<std::uint64_t>(seed_value) : seed_from_env();

  const bool binary = o.command == "center-of-mass" || o.command == "orthogonal" || o.command == "w0";
  if (!binary && !o.relative_to.empty()) {
    return fail(o, out, err, kInputError, "Usage", "--relative-to is not used by " + o.command);
  }
  if (o.command == "cos" && o.complex) o.command = "total-cos";

  try {
    Inputs in{read_matrix_file(o.matrix), std::nullopt};
    if (!o.relative_to.empty()) {
      in.a = read_matrix_file(o.relative_to);
      require_same_dim(in.t.matrix, in.a->matrix, o.command.c_str());
    }

    Report r{base_report(o, in), {}};
    if (o.command == "cos") cmd_cos(o, in, r);
    else if (o.command == "total-cos") cmd_total_cos(o, in, r);
    else if (o.command == "sin") cmd_sin(o, in, r);
    else if (o.command == "center-of-mass") cmd_center(o, in, r);
    else if (o.command == "orthogonal") cmd_orthogonal(o, in, r);
    else if (o.command == "w0") cmd_w0(o, in, r);
    else cmd_minmax(o, in, r);

    r.doc["diagnostics"]["self_check_failures"] = r.checks.failures();
    emit(r.doc, o, out);
    if (!r.checks.failures().empty()) {
      for (const auto& f : r.checks.failures()) err << "optrig: self-check failed: " << f << '\n';
      return kSelfCheckFailed;
    }
    return kOk;
  } catch (const InputError& e) {
    return fail(o, out, err, kInputError, "InputError", e.what());
  } catch (const Error& e) {
    const int code = is_precondition(e.kind()) ? kPrecondition : kSelfCheckFailed;
    return fail(o, out, err, code, std::string(kind_name(e.kind())), e.what());
  } catch (const std::exception& e) {
    return fail(o, out, err, kSelfCheckFailed, "Internal", e.what());
  }
}

}  // namespace optrig::cli
