#include "landscape/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "landscape/asymptotics.hpp"
#include "landscape/curvature.hpp"
#include "landscape/verify.hpp"
#include "landscape/volumes.hpp"

#ifndef LANDSCAPE_VERSION
#define LANDSCAPE_VERSION "0.0.0-dev"
#endif

namespace landscape {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string spec_path;
  std::vector<double> rho_values, obs_values;
  std::vector<int> rho_mults, obs_mults;
  std::vector<double> rho_eigenvalues, obs_eigenvalues;
  std::vector<double> eps;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  int grid_points = 200;
  int zmax = 60;
  std::string format = "json";
  std::uint64_t max_tables = 1'000'000;
  unsigned threads = 1;
  std::vector<int> dims = {4, 6, 8, 12};
  bool quick = false;

  bool seed_given = false;
  bool trials_given = false;
};

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// One side of the spec from a JSON document: either an object with values
// and multiplicities, or a flat eigenvalue list grouped by tolerance.
void load_side(const Json& doc, const std::string& side,
               std::vector<double>& values, std::vector<int>& mults) {
  const std::string list_key = side + "_eigenvalues";
  if (doc.contains(side)) {
    const Json& obj = doc.at(side);
    if (!obj.is_object() || !obj.contains("values") || !obj.contains("multiplicities")) {
      throw InvalidInput("spec file: " + side +
                         " must be an object with values and multiplicities");
    }
    values = obj.at("values").get<std::vector<double>>();
    mults = obj.at("multiplicities").get<std::vector<int>>();
  } else if (doc.contains(list_key)) {
    std::tie(values, mults) =
        LandscapeSpec::group_eigenvalues(doc.at(list_key).get<std::vector<double>>());
  } else {
    throw InvalidInput("spec file: missing field " + side + " (or " + list_key + ")");
  }
}

LandscapeSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("spec file not readable: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("spec file " + path + ": " + e.what());
  }
  std::vector<double> rv, ov;
  std::vector<int> rm, om;
  try {
    load_side(doc, "rho", rv, rm);
    load_side(doc, "obs", ov, om);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("spec file " + path + ": " + e.what());
  }
  return LandscapeSpec(std::move(rv), std::move(rm), std::move(ov), std::move(om));
}

std::optional<LandscapeSpec> resolve_spec(const RunConfig& config) {
  const bool inline_given =
      !config.rho_values.empty() || !config.obs_values.empty() ||
      !config.rho_eigenvalues.empty() || !config.obs_eigenvalues.empty();
  if (!config.spec_path.empty() && inline_given) {
    throw InvalidInput("give either --spec or inline eigenvalue flags, not both");
  }
  if (!config.spec_path.empty()) return load_spec_file(config.spec_path);
  if (!inline_given) return std::nullopt;

  auto side = [](const char* name, const std::vector<double>& values,
                 const std::vector<int>& mults, const std::vector<double>& eigs) {
    if (!values.empty() && !eigs.empty()) {
      throw InvalidInput(std::string(name) + ": give grouped values or a full "
                         "eigenvalue list, not both");
    }
    if (!values.empty()) {
      if (mults.empty()) {
        throw InvalidInput(std::string(name) + "-mults required with " + name +
                           "-values");
      }
      return std::make_pair(values, mults);
    }
    if (eigs.empty()) {
      throw InvalidInput(std::string(name) + ": missing eigenvalues (use --" +
                         name + "-values/--" + name + "-mults or --" + name +
                         "-eigenvalues)");
    }
    return LandscapeSpec::group_eigenvalues(eigs);
  };
  auto [rv, rm] = side("rho", config.rho_values, config.rho_mults, config.rho_eigenvalues);
  auto [ov, om] = side("obs", config.obs_values, config.obs_mults, config.obs_eigenvalues);
  return LandscapeSpec(std::move(rv), std::move(rm), std::move(ov), std::move(om));
}

Json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

// Writes records as JSON lines, CSV rows, or a tab-separated table.  The
// column list is fixed per command so CSV output is schema-stable.
class Emitter {
 public:
  Emitter(std::string format, std::ostream& out, std::vector<std::string> columns)
      : format_(std::move(format)), out_(out), columns_(std::move(columns)) {}

  void record(const Json& j) {
    if (format_ == "json") {
      out_ << j.dump() << "\n";
      return;
    }
    write_header_once();
    bool first = true;
    for (const auto& col : columns_) {
      if (!first) out_ << sep();
      first = false;
      if (j.contains(col)) out_ << cell(j.at(col));
    }
    out_ << "\n";
  }

  void summary(const Json& j) {
    if (format_ == "json") {
      out_ << j.dump() << "\n";
    } else if (format_ == "table") {
      for (const auto& [key, value] : j.items()) {
        out_ << "# " << key << ": " << value.dump() << "\n";
      }
    }
    // csv carries records only
  }

 private:
  char sep() const { return format_ == "csv" ? ',' : '\t'; }

  void write_header_once() {
    if (header_written_) return;
    header_written_ = true;
    bool first = true;
    for (const auto& col : columns_) {
      if (!first) out_ << sep();
      first = false;
      out_ << col;
    }
    out_ << "\n";
  }

  std::string cell(const Json& v) const {
    if (v.is_null()) return "";
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    if (format_ == "csv" &&
        (v.is_string() || !v.is_primitive())) {
      std::string quoted = "\"";
      for (char ch : text) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      quoted += '"';
      return quoted;
    }
    return text;
  }

  std::string format_;
  std::ostream& out_;
  std::vector<std::string> columns_;
  bool header_written_ = false;
};

Json base_record(const std::string& command, const std::string& spec_hash,
                 std::uint64_t seed) {
  Json j;
  j["command"] = command;
  j["spec_hash"] = spec_hash;
  j["seed"] = seed;
  j["version"] = LANDSCAPE_VERSION;
  return j;
}

const LandscapeSpec& require_spec(const std::optional<LandscapeSpec>& spec) {
  if (!spec) {
    throw InvalidInput("this command needs a landscape (use --spec FILE or the "
                       "inline --rho-*/--obs-* flags)");
  }
  return *spec;
}

std::vector<double> eps_or_default(const RunConfig& config, double fallback,
                                   bool allow_zero = false) {
  if (!config.eps.empty()) {
    for (double e : config.eps) {
      if (!(allow_zero ? e >= 0 : e > 0)) {
        throw InvalidInput(allow_zero ? "--eps entries must be nonnegative"
                                      : "--eps entries must be positive");
      }
    }
    return config.eps;
  }
  return {fallback};
}

Json spectrum_json(const HessianSpectrum& spectrum) {
  Json lines = Json::array();
  for (const auto& line : spectrum.lines) {
    lines.push_back(Json::array({line.beta, line.multiplicity}));
  }
  return lines;
}

int cmd_enumerate(const RunConfig& config, const std::optional<LandscapeSpec>& maybe_spec,
                  std::ostream& out) {
  const LandscapeSpec& spec = require_spec(maybe_spec);
  const auto subs = enumerate_submanifolds(spec, config.max_tables);
  Emitter emit(config.format, out,
               {"command", "spec_hash", "seed", "version", "index", "value", "dim",
                "codim", "beta_min", "log10_volume", "volume", "table"});
  for (size_t i = 0; i < subs.size(); ++i) {
    const auto& sub = subs[i];
    Json j = base_record("enumerate", spec.hash_hex(), config.seed);
    j["index"] = i;
    j["value"] = sub.value;
    j["dim"] = sub.dim;
    j["codim"] = sub.codim;
    j["beta_min"] = sub.spectrum.beta_min;
    const LogVolume vol = vol_orbit(spec, sub);
    j["log10_volume"] = vol.log10_value();
    j["volume"] = finite_or_null(vol.value());
    j["table"] = sub.table.key();
    emit.record(j);
  }
  emit.summary(Json{{"type", "summary"},
                    {"command", "enumerate"},
                    {"submanifolds", subs.size()},
                    {"dim", spec.dim()}});
  return 0;
}

int cmd_spectrum(const RunConfig& config, const std::optional<LandscapeSpec>& maybe_spec,
                 std::ostream& out) {
  const LandscapeSpec& spec = require_spec(maybe_spec);
  const auto subs = enumerate_submanifolds(spec, config.max_tables);
  Emitter emit(config.format, out,
               {"command", "spec_hash", "seed", "version", "index", "value", "dim",
                "codim", "zero_multiplicity", "beta_min", "spectrum", "table"});
  for (size_t i = 0; i < subs.size(); ++i) {
    const auto& sub = subs[i];
    Json j = base_record("spectrum", spec.hash_hex(), config.seed);
    j["index"] = i;
    j["value"] = sub.value;
    j["dim"] = sub.dim;
    j["codim"] = sub.codim;
    j["zero_multiplicity"] = sub.spectrum.zero_multiplicity;
    j["beta_min"] = sub.spectrum.beta_min;
    j["spectrum"] = spectrum_json(sub.spectrum);
    j["table"] = sub.table.key();
    emit.record(j);
  }
  emit.summary(Json{{"type", "summary"}, {"command", "spectrum"},
                    {"submanifolds", subs.size()}});
  return 0;
}

int cmd_volfrac(const RunConfig& config, const std::optional<LandscapeSpec>& maybe_spec,
                std::ostream& out) {
  const LandscapeSpec& spec = require_spec(maybe_spec);
  const auto subs = enumerate_submanifolds(spec, config.max_tables);
  const std::vector<double> eps_list = eps_or_default(config, 0.1);
  Emitter emit(config.format, out,
               {"command", "spec_hash", "seed", "version", "index", "value", "dim",
                "codim", "power", "log10_coefficient", "eps", "estimate",
                "log10_estimate", "bound", "log10_bound", "flag", "table"});
  size_t flagged = 0;
  for (size_t i = 0; i < subs.size(); ++i) {
    const auto& sub = subs[i];
    Json head = base_record("volfrac", spec.hash_hex(), config.seed);
    head["index"] = i;
    head["value"] = sub.value;
    head["dim"] = sub.dim;
    head["codim"] = sub.codim;
    if (sub.codim == 0) {
      ++flagged;
      Json j = head;
      j["flag"] = "no-near-critical-estimate";
      j["table"] = sub.table.key();
      emit.record(j);
      continue;
    }
    const VolFracEstimate est = volfrac_estimate(spec, sub);
    const VolFracEstimate bound = spherical_tube_coefficient(spec, sub);
    for (double eps : eps_list) {
      Json j = head;
      j["power"] = est.epsilon_power;
      j["log10_coefficient"] = est.coefficient.log10_value();
      j["eps"] = eps;
      j["estimate"] = finite_or_null(est.evaluate(eps));
      j["log10_estimate"] = est.log10_at(eps);
      j["bound"] = finite_or_null(bound.evaluate(eps));
      j["log10_bound"] = bound.log10_at(eps);
      j["table"] = sub.table.key();
      emit.record(j);
    }
  }
  emit.summary(Json{{"type", "summary"},
                    {"command", "volfrac"},
                    {"submanifolds", subs.size()},
                    {"codim_zero", flagged}});
  return 0;
}

int cmd_conjecture(const RunConfig& config, const std::optional<LandscapeSpec>& maybe_spec,
                   std::ostream& out) {
  CampaignConfig campaign;
  campaign.trials = config.trials;
  campaign.seed = config.seed;
  campaign.dims = config.dims;
  campaign.grid_points = config.grid_points;
  campaign.threads = config.threads;
  campaign.fixed_spec = maybe_spec;

  std::string spec_hash;
  if (maybe_spec) {
    spec_hash = maybe_spec->hash_hex();
  } else {
    std::string digest = "campaign:dims=";
    for (size_t i = 0; i < config.dims.size(); ++i) {
      if (i) digest += ",";
      digest += std::to_string(config.dims[i]);
    }
    spec_hash = hex64(fnv1a(digest));
  }

  Emitter emit(config.format, out,
               {"command", "spec_hash", "seed", "version", "trial", "stream_id", "n",
                "spec", "table", "grid_points", "beta_min", "min_slack", "pass",
                "coefficients"});
  auto sink = [&](const ConjectureTrialRecord& r) {
    Json j = base_record("conjecture", spec_hash, config.seed);
    j["trial"] = r.trial_index;
    j["stream_id"] = r.stream_id;
    j["n"] = r.n;
    j["spec"] = r.spec_summary;
    j["table"] = r.table_key;
    j["grid_points"] = r.grid_points;
    j["beta_min"] = r.beta_min;
    j["min_slack"] = r.min_slack;
    j["pass"] = r.pass;
    j["coefficients"] = r.coefficients;
    emit.record(j);
  };
  const CampaignResult result = conjecture_campaign(campaign, sink);
  emit.summary(Json{{"type", "summary"},
                    {"command", "conjecture"},
                    {"trials", result.trials},
                    {"failures", result.failures},
                    {"min_slack", result.min_slack}});
  return result.failures == 0 ? 0 : 2;
}

int cmd_empirical(const RunConfig& config, const std::optional<LandscapeSpec>& maybe_spec,
                  std::ostream& out) {
  const LandscapeSpec& spec = require_spec(maybe_spec);
  const std::vector<double> eps_list = eps_or_default(config, 0.1, true);
  Emitter emit(config.format, out,
               {"command", "spec_hash", "seed", "version", "eps", "trials", "hits",
                "fraction", "ci_low", "ci_high"});
  for (double eps : eps_list) {
    const EmpiricalEstimate est =
        empirical_volfrac(spec, eps, config.trials, config.seed, config.threads);
    Json j = base_record("empirical", spec.hash_hex(), config.seed);
    j["eps"] = eps;
    j["trials"] = est.trials;
    j["hits"] = est.hits;
    j["fraction"] = est.fraction;
    j["ci_low"] = est.ci_low;
    j["ci_high"] = est.ci_high;
    emit.record(j);
  }
  emit.summary(Json{{"type", "summary"}, {"command", "empirical"},
                    {"eps_count", eps_list.size()}});
  return 0;
}

int cmd_asymptotics(const RunConfig& config, const std::optional<LandscapeSpec>& maybe_spec,
                    std::ostream& out) {
  const LandscapeSpec& spec = require_spec(maybe_spec);
  const double eps = eps_or_default(config, 0.5).front();
  if (config.zmax < 2) throw InvalidInput("--zmax must be at least 2");
  const auto subs = enumerate_submanifolds(spec, config.max_tables);
  Emitter emit(config.format, out,
               {"command", "spec_hash", "seed", "version", "index", "value", "zeta",
                "z", "n", "dim", "codim", "log10_D", "log10_F", "log10_G", "flag",
                "table"});
  const double ln10 = std::log(10.0);
  Json tables_summary = Json::array();
  for (size_t i = 0; i < subs.size(); ++i) {
    const auto& sub = subs[i];
    Json head = base_record("asymptotics", spec.hash_hex(), config.seed);
    head["index"] = i;
    head["value"] = sub.value;
    BoundSequence seq;
    try {
      seq = bound_sequence(spec, sub.table, eps, 1, config.zmax);
    } catch (const InvalidInput&) {
      Json j = head;
      j["flag"] = "no-tube-bound";
      j["table"] = sub.table.key();
      emit.record(j);
      tables_summary.push_back(Json{{"index", i}, {"flag", "no-tube-bound"}});
      continue;
    }
    std::vector<double> log_z, log_g;
    for (const auto& point : seq.points) {
      Json j = head;
      j["zeta"] = seq.zeta;
      j["z"] = point.z;
      j["n"] = point.n_z;
      j["dim"] = point.dim;
      j["codim"] = point.codim;
      j["log10_D"] = point.log_d / ln10;
      if (point.log_f) j["log10_F"] = *point.log_f / ln10;
      if (point.log_g) j["log10_G"] = *point.log_g / ln10;
      j["table"] = sub.table.key();
      emit.record(j);
      if (point.log_g && point.z >= std::max(spec.dim() + 1, config.zmax / 2)) {
        log_z.push_back(std::log(static_cast<double>(point.z)));
        log_g.push_back(*point.log_g);
      }
    }
    Json entry{{"index", i}, {"zeta", seq.zeta}, {"value", sub.value}};
    if (log_z.size() >= 2) {
      entry["g_slope"] = fit_slope(log_z, log_g);
    }
    if (seq.zeta == 0) entry["flag"] = "zeta-zero (excluded from convergence claim)";
    tables_summary.push_back(std::move(entry));
  }
  emit.summary(Json{{"type", "summary"},
                    {"command", "asymptotics"},
                    {"eps", eps},
                    {"zmax", config.zmax},
                    {"tables", tables_summary}});
  return 0;
}

int cmd_curvature(const RunConfig& config, const std::optional<LandscapeSpec>& maybe_spec,
                  std::ostream& out) {
  const LandscapeSpec& spec = require_spec(maybe_spec);
  const auto subs = enumerate_submanifolds(spec, config.max_tables);
  const std::uint64_t draws = config.trials_given ? config.trials : 3;
  Emitter emit(config.format, out,
               {"command", "spec_hash", "seed", "version", "index", "value", "dim",
                "codim", "cat_obs_only", "cat_rho_only", "cat_both", "draw",
                "trace_abs", "off_block_residual", "eta_max", "pairing_residual",
                "mean_curvature", "flag", "table"});
  for (size_t i = 0; i < subs.size(); ++i) {
    const auto& sub = subs[i];
    Json head = base_record("curvature", spec.hash_hex(), config.seed);
    head["index"] = i;
    head["value"] = sub.value;
    head["dim"] = sub.dim;
    head["codim"] = sub.codim;
    head["table"] = sub.table.key();
    if (sub.codim == 0) {
      Json j = head;
      j["flag"] = "no-normal-space";
      emit.record(j);
      continue;
    }
    for (std::uint64_t d = 0; d < draws; ++d) {
      RandomStream stream =
          RandomStream(config.seed, 0xC0).substream(i).substream(d);
      const CriticalPoint point = random_critical_point(spec, sub.table, stream);
      const TangentBasis basis = tangent_basis(spec, sub, point);
      const ComplexMatrix z = random_unit_normal(point, basis, stream);
      const ShapeOperator op = shape_operator(spec, sub, point, z);
      const RealVector eig = op.eigenvalues();
      double pairing_residual = 0;
      const int dsize = static_cast<int>(eig.size());
      for (int p = 0; p < dsize; ++p) {
        pairing_residual =
            std::max(pairing_residual, std::abs(eig[p] + eig[dsize - 1 - p]));
      }
      Json j = head;
      j["cat_obs_only"] = basis.obs_only.size();
      j["cat_rho_only"] = basis.rho_only.size();
      j["cat_both"] = basis.both.size();
      j["draw"] = d;
      j["trace_abs"] = op.trace_abs();
      j["off_block_residual"] = op.off_block_residual();
      j["eta_max"] = dsize ? std::max(std::abs(eig[0]), std::abs(eig[dsize - 1])) : 0.0;
      j["pairing_residual"] = pairing_residual;
      j["mean_curvature"] = mean_curvature_norm(spec, sub, point);
      emit.record(j);
    }
  }
  emit.summary(Json{{"type", "summary"}, {"command", "curvature"},
                    {"submanifolds", subs.size()}, {"draws", draws}});
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.quick = config.quick;
  opts.threads = config.threads;
  if (config.seed_given) opts.seed = config.seed;
  const auto results = run_verification(opts, out, &err);
  const bool all_pass =
      std::all_of(results.begin(), results.end(),
                  [](const CheckResult& r) { return r.pass; });
  return all_pass ? 0 : 2;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical-set geometry of the kinematic ensemble control landscape "
               "J(U) = Tr(U rho U' O) on the unitary group"};
  app.set_version_flag("--version", LANDSCAPE_VERSION);
  app.require_subcommand(1);

  RunConfig config;
  struct SubRefs {
    CLI::App* sub;
    CLI::Option* seed = nullptr;
    CLI::Option* trials = nullptr;
  };
  std::vector<SubRefs> subs;

  auto add_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    SubRefs refs{sub};
    sub->add_option("--spec", config.spec_path, "Landscape spec file (JSON)")
        ->envname("LANDSCAPE_SPEC");
    sub->add_option("--rho-values", config.rho_values,
                    "Distinct rho eigenvalues, descending")
        ->delimiter(',')->envname("LANDSCAPE_RHO_VALUES");
    sub->add_option("--rho-mults", config.rho_mults, "rho multiplicities")
        ->delimiter(',')->envname("LANDSCAPE_RHO_MULTS");
    sub->add_option("--obs-values", config.obs_values,
                    "Distinct observable eigenvalues, descending")
        ->delimiter(',')->envname("LANDSCAPE_OBS_VALUES");
    sub->add_option("--obs-mults", config.obs_mults, "Observable multiplicities")
        ->delimiter(',')->envname("LANDSCAPE_OBS_MULTS");
    sub->add_option("--rho-eigenvalues", config.rho_eigenvalues,
                    "Full rho eigenvalue list (grouped by tolerance)")
        ->delimiter(',')->envname("LANDSCAPE_RHO_EIGENVALUES");
    sub->add_option("--obs-eigenvalues", config.obs_eigenvalues,
                    "Full observable eigenvalue list (grouped by tolerance)")
        ->delimiter(',')->envname("LANDSCAPE_OBS_EIGENVALUES");
    sub->add_option("--eps", config.eps, "Gradient-norm thresholds")
        ->delimiter(',')->envname("LANDSCAPE_EPS");
    refs.trials = sub->add_option("--trials", config.trials, "Monte Carlo trials")
        ->envname("LANDSCAPE_TRIALS");
    refs.seed = sub->add_option("--seed", config.seed, "Random seed")
        ->envname("LANDSCAPE_SEED");
    sub->add_option("--grid-points", config.grid_points,
                    "Grid points on [0, pi/(2 sqrt2)]")
        ->envname("LANDSCAPE_GRID_POINTS");
    sub->add_option("--zmax", config.zmax, "Largest embedding step")
        ->envname("LANDSCAPE_ZMAX");
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->envname("LANDSCAPE_FORMAT");
    sub->add_option("--max-tables", config.max_tables,
                    "Abort if a landscape has more critical submanifolds than this")
        ->envname("LANDSCAPE_MAX_TABLES");
    sub->add_option("--threads", config.threads, "Worker threads")
        ->envname("LANDSCAPE_THREADS");
    sub->add_option("--dims", config.dims,
                    "Dimensions sampled by the random campaign")
        ->delimiter(',')->envname("LANDSCAPE_DIMS");
    sub->add_flag("--quick", config.quick, "Reduced verification suite")
        ->envname("LANDSCAPE_QUICK");
    subs.push_back(refs);
    return sub;
  };

  CLI::App* enumerate = add_sub("enumerate", "List every critical submanifold with "
                                "value, dimension, and Hilbert-Schmidt volume");
  CLI::App* spectrum = add_sub("spectrum", "Hessian spectra of the critical "
                               "submanifolds");
  CLI::App* volfrac = add_sub("volfrac", "Near-critical volume-fraction estimates "
                              "and spherical-tube bounds");
  CLI::App* conjecture = add_sub("conjecture", "Randomized trials of the geodesic "
                                 "lower bound on ||grad J||^2");
  CLI::App* empirical = add_sub("empirical", "Haar-sampled near-critical volume "
                                "fractions");
  CLI::App* asymptotics = add_sub("asymptotics", "Tube bounds along the "
                                  "zero-padding embedding sequence");
  CLI::App* curvature = add_sub("curvature", "Shape operators and principal "
                                "curvatures at random critical points");
  CLI::App* verify = add_sub("verify", "Run the built-in consistency suite");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << LANDSCAPE_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  for (const auto& refs : subs) {
    if (refs.sub->parsed()) {
      config.seed_given = refs.seed->count() > 0;
      config.trials_given = refs.trials->count() > 0;
    }
  }

  try {
    const std::optional<LandscapeSpec> spec = resolve_spec(config);
    if (enumerate->parsed()) return cmd_enumerate(config, spec, out);
    if (spectrum->parsed()) return cmd_spectrum(config, spec, out);
    if (volfrac->parsed()) return cmd_volfrac(config, spec, out);
    if (conjecture->parsed()) return cmd_conjecture(config, spec, out);
    if (empirical->parsed()) return cmd_empirical(config, spec, out);
    if (asymptotics->parsed()) return cmd_asymptotics(config, spec, out);
    if (curvature->parsed()) return cmd_curvature(config, spec, out);
    if (verify->parsed()) return cmd_verify(config, out, err);
    err << "error: no command given\n";
    return 1;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace landscape
