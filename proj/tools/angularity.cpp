// Command line front end: one subcommand per computation, JSON reports on
// stdout.  Exit status 0 = pass, 2 = a check failed, 1 = usage or input error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "angularity/crofton.hpp"
#include "angularity/curvmeas.hpp"
#include "angularity/grassrank.hpp"
#include "angularity/io.hpp"
#include "angularity/repcomb.hpp"
#include "angularity/verify.hpp"

namespace {

using namespace angularity;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Options shared by all subcommands.
struct Common {
  std::optional<std::uint64_t> seed;
  double samples = 0;
  std::optional<double> tol;
  std::string json_out;
  int threads = 0;
};

struct Outcome {
  Json result = Json::object();
  bool pass = true;
  bool has_verdict = false;
};

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Digest {
  std::uint64_t h = fnv1a("");
  void add(const std::string& s) { h = fnv1a(s + '\0', h); }
  std::string hex() const {
    std::ostringstream o;
    o << std::hex << std::setw(16) << std::setfill('0') << h;
    return o.str();
  }
};

Digest g_digest;

Json load(const std::string& file) {
  std::ifstream in(file);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    g_digest.add(ss.str());
  }
  return load_json_file(file);
}

std::uint64_t require_seed(const Common& c, const std::string& why) {
  if (!c.seed) throw UsageError("--seed is required: " + why);
  return *c.seed;
}

std::uint64_t sample_count(const Common& c, std::uint64_t fallback) {
  if (c.samples <= 0) return fallback;
  if (c.samples != std::floor(c.samples)) throw UsageError("--samples must be an integer");
  return static_cast<std::uint64_t>(c.samples);
}

bool within(const Common& c, double diff, double sigma) {
  if (c.tol) return std::abs(diff) <= *c.tol;
  return std::abs(diff) <= 3.0 * sigma + 1e-9 * (1.0 + std::abs(diff));
}

Partition parse_partition(const std::string& s, const std::string& flag) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      parts.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError(flag + ": malformed entry '" + tok + "'");
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<int> parse_ints(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError(flag + ": malformed entry '" + tok + "'");
    }
  }
  return out;
}

Json decomposition_json(const Decomposition& d) {
  Json a = Json::array();
  for (const auto& [p, m] : d) a.push_back({{"partition", to_json(p)}, {"multiplicity", m}});
  return a;
}

std::string bigint(const BigInt& x) { return x.str(); }

Json evaluation_json(const CurvatureEvaluation& e) {
  return {{"per_degree", e.per_degree}, {"sigma", e.sigma}, {"total", e.total}, {"total_sigma", e.total_sigma}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angular curvature measures of polytopes: computations and checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");
  Common common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Random seed (required for Monte Carlo paths)");
    sub->add_option("--samples", common.samples, "Monte Carlo sample count (accepts 1e6)");
    sub->add_option("--tol", common.tol, "Absolute tolerance replacing the 3-sigma policy");
    sub->add_option("--json-out", common.json_out, "Also write the report to this file");
    sub->add_option("--threads", common.threads, "Worker threads for Monte Carlo loops")->check(CLI::NonNegativeNumber);
  };

  std::string cone_file, polytope_file, weight_file, form_file, box_file;
  int n = 0, k = 0, nmax = 8, grid = 100;
  double eps = 0.5;
  std::string lambda_s, mu_s, nu_s, m_s, weight_s, group = "sl";
  std::vector<int> only;
  bool constcoeff = false;
  std::optional<double> phi;
  std::uint64_t calibration_samples = 0;

  Outcome out;
  std::function<void()> action;

  auto box_for = [&](int dim) {
    return box_file.empty() ? BorelBox::everything() : box_from_json(load(box_file), dim, "$");
  };
  auto eval_options = [&](int dim, const std::string& why) {
    EvalOptions eo;
    if (dim >= 4) eo.angle.seed = require_seed(common, why);
    else if (common.seed) eo.angle.seed = *common.seed;
    if (common.samples > 0) eo.angle.samples = sample_count(common, eo.angle.samples);
    return eo;
  };

  auto* angle = app.add_subcommand("angle", "External angle of a polyhedral cone");
  angle->add_option("--cone", cone_file, "Cone JSON file")->required();
  add_common(angle);
  angle->callback([&] {
    action = [&] {
      const PolyCone cone = cone_from_json(load(cone_file));
      AngleOptions ao;
      if (cone.dim() >= 4) ao.seed = require_seed(common, "angles in dimension >= 4 may use Monte Carlo");
      else if (common.seed) ao.seed = *common.seed;
      ao.samples = sample_count(common, ao.samples);
      const AngleResult r = external_angle(cone, ao);
      out.result = {{"value", r.value}, {"sigma", r.sigma}, {"exact", r.exact}};
    };
  });

  auto* faces = app.add_subcommand("faces", "Face lattice of a polytope");
  faces->add_option("--polytope", polytope_file, "Polytope JSON file")->required();
  add_common(faces);
  faces->callback([&] {
    action = [&] {
      const Polytope p = polytope_from_json(load(polytope_file));
      Json list = Json::array();
      std::vector<int> fvec(static_cast<std::size_t>(p.dim() + 1), 0);
      for (const auto& f : p.faces()) {
        ++fvec[static_cast<std::size_t>(f.dim)];
        list.push_back({{"dim", f.dim},
                        {"vertex_ids", f.vertices},
                        {"barycenter", std::vector<double>(f.barycenter.data(), f.barycenter.data() + f.barycenter.size())}});
      }
      out.result = to_json(p);
      out.result["dim"] = p.dim();
      out.result["f_vector"] = fvec;
      out.result["faces"] = list;
    };
  });

  auto* intrinsic = app.add_subcommand("intrinsic", "Intrinsic volumes V_0..V_n by the face sum");
  intrinsic->add_option("--polytope", polytope_file, "Polytope JSON file")->required();
  add_common(intrinsic);
  intrinsic->callback([&] {
    action = [&] {
      const Polytope p = polytope_from_json(load(polytope_file));
      std::vector<WeightSpec> all;
      for (int d = 0; d <= p.ambient_dim(); ++d) all.emplace_back(Federer{d});
      const auto e = evaluate(all, p, BorelBox::everything(), eval_options(p.ambient_dim(), "vertex angles may use Monte Carlo"));
      out.result = {{"V", e.per_degree}, {"sigma", e.sigma}};
    };
  });

  auto* steiner = app.add_subcommand("steiner", "Monte Carlo tube volume against the Steiner polynomial");
  steiner->add_option("--polytope", polytope_file, "Polytope JSON file")->required();
  steiner->add_option("--eps", eps, "Tube radius")->check(CLI::PositiveNumber);
  add_common(steiner);
  steiner->callback([&] {
    action = [&] {
      const Polytope p = polytope_from_json(load(polytope_file));
      const auto r = steiner_check(p, eps, sample_count(common, 1000000), require_seed(common, "steiner is Monte Carlo"));
      out.has_verdict = true;
      out.pass = within(common, r.residual, r.sigma);
      out.result = {{"estimate", r.estimate}, {"sigma", r.sigma}, {"target", r.target}, {"residual", r.residual}};
    };
  });

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Face-sum evaluation of curvature measures");
  evaluate_cmd->add_option("--polytope", polytope_file, "Polytope JSON file")->required();
  evaluate_cmd->add_option("--weight", weight_file, "WeightSpec JSON file (object or array)")->required();
  evaluate_cmd->add_option("--box", box_file, "Box JSON file (default: all of R^n)");
  add_common(evaluate_cmd);
  evaluate_cmd->callback([&] {
    action = [&] {
      const Polytope p = polytope_from_json(load(polytope_file));
      const auto w = weights_from_json(load(weight_file), p.ambient_dim());
      const auto e = evaluate(w, p, box_for(p.ambient_dim()), eval_options(p.ambient_dim(), "angles may use Monte Carlo"));
      out.result = evaluation_json(e);
    };
  });

  auto* direct = app.add_subcommand("direct-cc", "Normal-disc-current integral of a constant form vs the face sum");
  direct->add_option("--polytope", polytope_file, "Polytope JSON file")->required();
  direct->add_option("--form", form_file, "BiGradedForm JSON file")->required();
  direct->add_option("--box", box_file, "Box JSON file (default: all of R^n)");
  add_common(direct);
  direct->callback([&] {
    action = [&] {
      const Polytope p = polytope_from_json(load(polytope_file));
      const BiGradedForm omega = form_from_json(load(form_file));
      if (omega.dim() != p.ambient_dim()) throw ParseError("$.n", "form dimension does not match the polytope");
      if (omega.base_grade() + omega.fiber_grade() != omega.dim()) throw ParseError("$.fiber", "bidegree must be (k, n-k)");
      const std::uint64_t seed = require_seed(common, "direct-cc is Monte Carlo");
      const BorelBox u = box_for(p.ambient_dim());
      const auto d = direct_constcoeff(omega, p, u, sample_count(common, 100000), seed);
      EvalOptions eo;
      eo.angle.seed = seed + 1;
      const auto e = evaluate(ConstCoeff{omega}, p, u, eo);
      const double sigma = std::hypot(d.total_sigma, e.total_sigma);
      out.has_verdict = true;
      out.pass = within(common, d.total - e.total, sigma);
      out.result = {{"direct", d.total}, {"direct_sigma", d.total_sigma}, {"face_sum", e.total},
                    {"face_sum_sigma", e.total_sigma}, {"difference", d.total - e.total}};
    };
  });

  auto* classify = app.add_subcommand("classify-rank", "Rank of quadratic Plücker monomials on the Grassmannian");
  classify->add_option("--n", n, "Ambient dimension")->required();
  classify->add_option("--k", k, "Plane dimension")->required();
  classify->add_flag("--constcoeff", constcoeff, "Also rank the constant-coefficient weights");
  add_common(classify);
  classify->callback([&] {
    action = [&] {
      const std::uint64_t seed = require_seed(common, "planes are sampled");
      const auto expected = dim_formula(n, k);
      const std::uint64_t c = binomial(n, k);
      const auto r = restriction_rank(n, k, sample_count(common, std::max<std::uint64_t>(500, 2 * c * (c + 1))), seed);
      out.has_verdict = true;
      out.pass = r.rank == static_cast<int>(expected) && r.stable;
      out.result = {{"n", n}, {"k", k}, {"expected_dim", expected}, {"expected", expected}, {"rank", r.rank},
                    {"singular_value_gap", r.gap}, {"stable", r.stable}};
      if (constcoeff) {
        const auto cc = constcoeff_weight_rank(n, k, 2 * expected, sample_count(common, std::max<std::uint64_t>(500, 2 * c * (c + 1))), seed + 1);
        out.pass = out.pass && cc.rank.rank == r.rank && cc.span_residual < 1e-8;
        out.result["constcoeff_rank"] = cc.rank.rank;
        out.result["span_residual"] = cc.span_residual;
      }
    };
  });

  auto* strichartz = app.add_subcommand("strichartz", "Strichartz vectors on the obstruction family");
  strichartz->add_option("--n", n, "Ambient dimension")->required();
  strichartz->add_option("--k", k, "Plane dimension")->required();
  strichartz->add_option("--m", m_s, "Highest weight m_1,...,m_k (default m_1=1, rest 0)");
  strichartz->add_option("--phi", phi, "Evaluate at a single angle instead of the grid");
  strichartz->add_option("--grid", grid, "Grid size on [0, pi)")->check(CLI::PositiveNumber);
  add_common(strichartz);
  strichartz->callback([&] {
    action = [&] {
      std::vector<int> m = m_s.empty() ? std::vector<int>(static_cast<std::size_t>(k), 0) : parse_ints(m_s, "--m");
      if (m_s.empty() && k > 0) m.front() = 1;
      HighestWeightSpec spec{n, k, m};
      spec.validate();
      if (phi) {
        const auto f = strichartz_vector(spec, obstruction_frame(n, k, *phi));
        out.result = {{"re", f.real()}, {"im", f.imag()}, {"expected", std::pow(std::cos(*phi), 2 * m.front())}};
        return;
      }
      if (std::any_of(m.begin() + 1, m.end(), [](int x) { return x != 0; }))
        throw UsageError("the grid check uses m = (m1, 0, ..., 0)");
      std::vector<double> g;
      for (int i = 0; i < grid; ++i) g.push_back(std::numbers::pi * i / grid);
      const auto r = obstruction_family_check(n, k, m.front(), g);
      out.has_verdict = true;
      const bool quadratic = std::abs(m.front()) <= 1;
      out.pass = r.max_residual < 1e-10 && (quadratic ? r.fit_residual < 1e-8 : r.fit_residual > 0.01);
      out.result = {{"n", n}, {"k", k}, {"m", m}, {"max_residual", r.max_residual}, {"fit_residual", r.fit_residual},
                    {"quadratic", r.fit_residual < 1e-8}};
    };
  });

  auto* fit = app.add_subcommand("fit-quadratic", "Least-squares quadratic fit of a weight over sampled planes");
  fit->add_option("--n", n, "Ambient dimension")->required();
  fit->add_option("--k", k, "Plane dimension")->required();
  fit->add_option("--weight", weight_file, "WeightSpec JSON file")->required();
  add_common(fit);
  fit->callback([&] {
    action = [&] {
      const WeightSpec w = weight_from_json(load(weight_file), n);
      if (weight_degree(w) != k) throw ParseError("$.k", "weight degree differs from --k");
      const std::uint64_t c = binomial(n, k);
      const auto sample = sample_grassmann(n, k, sample_count(common, std::max<std::uint64_t>(500, 2 * c * (c + 1))),
                                           require_seed(common, "planes are sampled"));
      Vec values(static_cast<Eigen::Index>(sample.frames.size()));
      for (std::size_t i = 0; i < sample.frames.size(); ++i) values[static_cast<Eigen::Index>(i)] = weight_eval(w, sample.frames[i]);
      const auto r = fit_quadratic(sample.frames, values);
      out.result = {{"residual", r.residual}, {"condition", r.condition}, {"monomials", r.coefficients.size()},
                    {"quadratic", r.residual < (common.tol ? *common.tol : 1e-8)}};
    };
  });

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  lr->add_option("--lambda", lambda_s, "Partition, e.g. 2,1")->required();
  lr->add_option("--mu", mu_s, "Partition")->required();
  lr->add_option("--nu", nu_s, "Partition (omit for the full decomposition)");
  lr->add_option("--n", n, "Maximum number of parts for the decomposition");
  add_common(lr);
  lr->callback([&] {
    action = [&] {
      const Partition l = parse_partition(lambda_s, "--lambda");
      const Partition m = parse_partition(mu_s, "--mu");
      out.result = {{"lambda", to_json(l)}, {"mu", to_json(m)}};
      if (!nu_s.empty()) {
        const Partition v = parse_partition(nu_s, "--nu");
        out.result["nu"] = to_json(v);
        out.result["coefficient"] = lr_coefficient(l, m, v);
      } else {
        const int parts = n > 0 ? n : l.length() + m.length();
        out.result["n"] = parts;
        out.result["components"] = decomposition_json(tensor_decompose(l, m, parts));
      }
    };
  });

  auto* weyl = app.add_subcommand("weyl-dim", "Weyl dimension for SL(n) or SO(n)");
  weyl->add_option("--n", n, "Rank parameter n")->required();
  weyl->add_option("--group", group, "sl or so")->check(CLI::IsMember({"sl", "so"}));
  weyl->add_option("--weight", weight_s, "Partition (sl) or SO weight entries (so)")->required();
  add_common(weyl);
  weyl->callback([&] {
    action = [&] {
      if (group == "sl") {
        const Partition l = parse_partition(weight_s, "--weight");
        out.result = {{"group", "sl"}, {"n", n}, {"weight", to_json(l)}, {"dim", bigint(weyl_dim_sl(l, n))}};
      } else {
        SOWeight w{n, parse_ints(weight_s, "--weight")};
        try {
          w.validate();
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--weight: ") + e.what());
        }
        out.result = {{"group", "so"}, {"n", n}, {"weight", w.m}, {"dim", bigint(weyl_dim_so(w))}};
      }
    };
  });

  auto* branch = app.add_subcommand("branch", "Stable-range restriction GL(n) -> O(n)");
  branch->add_option("--lambda", lambda_s, "Partition with at most n/2 parts")->required();
  branch->add_option("--n", n, "n")->required();
  add_common(branch);
  branch->callback([&] {
    action = [&] {
      const Partition l = parse_partition(lambda_s, "--lambda");
      out.result = {{"lambda", to_json(l)}, {"n", n}, {"components", decomposition_json(littlewood_restrict(l, n))}};
    };
  });

  auto* lemma = app.add_subcommand("lemma-checks", "Exact dimension identities for n up to nmax");
  lemma->add_option("--nmax", nmax, "Largest n")->check(CLI::Range(2, 40));
  add_common(lemma);
  lemma->callback([&] {
    action = [&] {
      Json quadric = Json::array(), so = Json::array();
      bool ok = true;
      for (int nn = 2; nn <= nmax; ++nn) {
        for (int kk = 1; kk < nn; ++kk) {
          const BigInt r = plucker_quadric_dim_check(nn, kk);
          ok = ok && r == 0;
          quadric.push_back({{"n", nn}, {"k", kk}, {"residual", bigint(r)}});
        }
        if (nn < 3) continue;
        for (int kk = 0; 2 * kk <= nn; ++kk) {
          const BigInt r = so_branch_dim_check(kk, nn);
          ok = ok && r == 0;
          so.push_back({{"n", nn}, {"k", kk}, {"residual", bigint(r)}});
        }
      }
      out.has_verdict = true;
      out.pass = ok;
      out.result = {{"nmax", nmax}, {"plucker_quadric", quadric}, {"so_branch", so}};
    };
  });

  auto* crofton = app.add_subcommand("crofton", "Crofton estimate of V_k after cube calibration");
  crofton->add_option("--polytope", polytope_file, "Polytope JSON file")->required();
  crofton->add_option("--k", k, "Degree")->required();
  crofton->add_option("--calibration-samples", calibration_samples, "Flats used for calibration (default: --samples)");
  add_common(crofton);
  crofton->callback([&] {
    action = [&] {
      const Polytope p = polytope_from_json(load(polytope_file));
      const std::uint64_t seed = require_seed(common, "crofton is Monte Carlo");
      const std::uint64_t samples = sample_count(common, 1000000);
      const FlatMeasure meas =
          calibrate(flat_measure_for(p, k), calibration_samples ? calibration_samples : samples, seed + 1);
      const auto r = crofton_estimate(p, meas, samples, seed);
      const double target = intrinsic_volume(p, k, eval_options(p.ambient_dim(), "the face-sum reference uses angles"));
      out.has_verdict = true;
      out.pass = within(common, r.value - target, r.sigma);
      out.result = {{"value", r.value}, {"sigma", r.sigma}, {"calibration", r.calibration}, {"face_sum", target},
                    {"radius", meas.radius}};
    };
  });

  auto* vk = app.add_subcommand("vk-action", "V_k action on a curvature measure by flat slicing");
  vk->add_option("--polytope", polytope_file, "Polytope JSON file")->required();
  vk->add_option("--weight", weight_file, "WeightSpec JSON file (object or array)")->required();
  vk->add_option("--k", k, "Degree")->required();
  vk->add_option("--box", box_file, "Box JSON file (default: all of R^n)");
  vk->add_option("--calibration-samples", calibration_samples, "Flats used for calibration (default: --samples)");
  add_common(vk);
  vk->callback([&] {
    action = [&] {
      const Polytope p = polytope_from_json(load(polytope_file));
      const auto w = weights_from_json(load(weight_file), p.ambient_dim());
      const std::uint64_t seed = require_seed(common, "vk-action is Monte Carlo");
      const std::uint64_t samples = sample_count(common, 1000000);
      const FlatMeasure meas =
          calibrate(flat_measure_for(p, k), calibration_samples ? calibration_samples : samples, seed + 1);
      EvalOptions eo;
      eo.angle.seed = seed + 2;
      const auto r = vk_action(w, p, box_for(p.ambient_dim()), meas, samples, seed, eo);
      out.result = {{"value", r.value}, {"sigma", r.sigma}, {"calibration", r.calibration}};
    };
  });

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_option("--only", only, "Criteria to run (default: all)")->delimiter(',');
  add_common(verify);
  verify->callback([&] {
    action = [&] {
      VerifyOptions vo;
      if (common.seed) vo.seed = *common.seed;
      vo.only = only;
      Json list = Json::array();
      const auto results = run_acceptance(vo, [](const CriterionResult& r) { std::cerr << format_result(r) << std::endl; });
      bool ok = true;
      for (const auto& r : results) {
        ok = ok && r.pass;
        list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
      }
      out.has_verdict = true;
      out.pass = ok;
      out.result = {{"criteria", list}, {"suite_seed", vo.seed}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  for (int i = 1; i < argc; ++i) g_digest.add(argv[i]);
  if (common.threads > 0) set_thread_count(common.threads);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    action();
  } catch (const ParseError& e) {
    std::cerr << "error: invalid input at " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  Json report = out.result;
  report["command"] = app.get_subcommands().front()->get_name();
  report["inputs_digest"] = g_digest.hex();
  report["seed"] = common.seed ? Json(*common.seed) : Json(nullptr);
  if (out.has_verdict) report["verdict"] = out.pass ? "pass" : "fail";
  report["wall_time_s"] = wall;
  const std::string text = report.dump(2);
  std::cout << text << std::endl;
  if (!common.json_out.empty()) {
    std::ofstream f(common.json_out);
    if (!f) {
      std::cerr << "error: cannot write " << common.json_out << "\n";
      return 1;
    }
    f << text << "\n";
  }
  return out.pass ? 0 : 2;
}
