// zuslab — decide zero-uncertainty states, analyze their rigidity, extract
// normal forms, and build the counterexample catalog from the command line.
// Problem files use the versioned "zuslab/1" JSON schema; every command
// offers --json for machine-readable reports.
//
// Exit codes: 0 = the checked property holds, 1 = it fails on well-formed
// input, 2 = schema/validation/input errors.

#include "zuslab/constructions.hpp"
#include "zuslab/json_io.hpp"
#include "zuslab/normal_form.hpp"
#include "zuslab/rigidity.hpp"
#include "zuslab/steering.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <numbers>
#include <sstream>

namespace {

using namespace zuslab;

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

json report_shell(const std::string& command) {
  json j;
  j["version"] = kSchemaVersion;
  j["command"] = command;
  j["timestamp"] = iso_timestamp();
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// --seed beats the file's seed, which beats ZUSLAB_SEED, which beats the
// built-in default.
std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t cli_seed,
                           const std::optional<std::uint64_t>& file_seed) {
  if (seed_opt && seed_opt->count() > 0) return cli_seed;
  if (file_seed) return *file_seed;
  if (const char* env = std::getenv("ZUSLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw SchemaError("ZUSLAB_SEED is not a non-negative integer");
    }
  }
  return kDefaultSeed;
}

ToleranceConfig resolve_tol(const CLI::Option* tol_opt, double cli_tol,
                            const ToleranceConfig& file_tol) {
  ToleranceConfig tol = file_tol;
  if (tol_opt && tol_opt->count() > 0) {
    if (cli_tol <= 0) throw SchemaError("--tol must be positive");
    tol.eq_tol = cli_tol;
  }
  return tol;
}

std::string verdict_str(bool pass) { return pass ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------- check-zus

int run_check_zus(const std::string& path, const std::string& family_name, bool json_mode,
                  const CLI::Option* tol_opt, double cli_tol) {
  ProblemFile pf = load_problem(path);
  const ToleranceConfig tol = resolve_tol(tol_opt, cli_tol, pf.tolerances);
  LambdaMap map(pf.state, tol);

  std::vector<std::pair<std::string, const PvmFamily*>> selected;
  if (family_name.empty()) {
    for (const auto& [name, fam] : pf.families) selected.emplace_back(name, &fam);
  } else {
    const PvmFamily* fam = pf.find_family(family_name);
    if (!fam) throw SchemaError("no family named '" + family_name + "' in " + path);
    selected.emplace_back(family_name, fam);
  }

  bool all_pass = true;
  json families = json::array();
  for (const auto& [name, fam] : selected) {
    CommonZusVerdict v = is_common_zus(map, *fam);
    all_pass = all_pass && v.pass;
    json pvms = json::array();
    for (const ZusVerdict& pv : v.per_pvm) {
      pvms.push_back(json{{"pvm", pv.pvm_name},
                          {"pass", pv.pass},
                          {"worst_overlap", pv.worst_overlap},
                          {"worst_pair", json::array({pv.worst_pair.first, pv.worst_pair.second})}});
      if (!json_mode) {
        std::ostringstream line;
        line << "family " << name << " / pvm " << pv.pvm_name << ": " << verdict_str(pv.pass)
             << " (worst overlap " << pv.worst_overlap;
        if (!pv.pass) line << ", pair " << pv.worst_pair.first << "," << pv.worst_pair.second;
        line << ")";
        std::cout << line.str() << "\n";
      }
    }
    families.push_back(json{{"family", name}, {"pass", v.pass}, {"pvms", std::move(pvms)}});
  }
  if (json_mode) {
    json rep = report_shell("check-zus");
    rep["file"] = path;
    rep["families"] = std::move(families);
    rep["common_zus"] = all_pass;
    emit(rep);
  } else {
    std::cout << "common zero-uncertainty: " << (all_pass ? "yes" : "no") << "\n";
  }
  return all_pass ? 0 : 1;
}

// ------------------------------------------------------------------ analyze

int run_analyze(const std::string& path, bool json_mode, const CLI::Option* tol_opt,
                double cli_tol, const CLI::Option* seed_opt, std::uint64_t cli_seed) {
  ProblemFile pf = load_problem(path);
  const ToleranceConfig tol = resolve_tol(tol_opt, cli_tol, pf.tolerances);
  const std::uint64_t seed = resolve_seed(seed_opt, cli_seed, pf.seed);

  const PvmFamily merged = pf.merged_family();
  RigidityReport rig = verify_rigidity(pf.state, merged, tol);

  std::vector<Matrix> generators;
  for (const Pvm& pvm : merged.pvms)
    for (const Matrix& p : pvm.projections) generators.push_back(p);
  MatrixAlgebra alg = generate_algebra(generators, pf.state.d_a, tol);
  WedderburnStructure ws = wedderburn_decompose(alg, tol, seed);

  json blocks = json::array();
  for (const WedderburnBlock& blk : ws.blocks)
    blocks.push_back(json{{"n", blk.n}, {"m", blk.m}});

  if (json_mode) {
    json rep = report_shell("analyze");
    rep["file"] = path;
    rep["algebra"] = json{{"dim", rig.algebra_dim},
                          {"full", rig.hypotheses.algebra_full},
                          {"blocks", std::move(blocks)}};
    rep["hypotheses"] = json{{"dims_equal", rig.hypotheses.dims_equal},
                             {"common_zus", rig.hypotheses.common_zus},
                             {"algebra_full", rig.hypotheses.algebra_full},
                             {"worst_overlap", rig.worst_overlap}};
    json conclusions{{"purity", rig.conclusions.purity},
                     {"kraus_rank", rig.conclusions.kraus_rank},
                     {"rho_a_defect", rig.conclusions.rho_a_defect},
                     {"max_entangled", rig.conclusions.is_max_entangled}};
    conclusions["schmidt"] = rig.conclusions.schmidt;
    rep["conclusions"] = std::move(conclusions);
    rep["theorem_violation"] = rig.theorem_violation;
    emit(rep);
  } else {
    std::cout << "algebra: dim " << rig.algebra_dim
              << (rig.hypotheses.algebra_full ? " (full matrix algebra)" : " (proper)")
              << ", blocks";
    for (const WedderburnBlock& blk : ws.blocks)
      std::cout << " (" << blk.n << "," << blk.m << ")";
    std::cout << "\n";
    std::cout << "hypotheses: dims_equal=" << rig.hypotheses.dims_equal
              << " common_zus=" << rig.hypotheses.common_zus
              << " algebra_full=" << rig.hypotheses.algebra_full << "\n";
    std::cout << "state: purity=" << rig.conclusions.purity
              << " kraus_rank=" << rig.conclusions.kraus_rank
              << " rho_a_defect=" << rig.conclusions.rho_a_defect
              << " max_entangled=" << (rig.conclusions.is_max_entangled ? "yes" : "no") << "\n";
    if (rig.hypotheses_hold())
      std::cout << "rigidity: " << (rig.theorem_violation ? "VIOLATION" : "pure, maximally entangled")
                << "\n";
    else
      std::cout << "rigidity: hypotheses not met, theorem silent\n";
  }
  return rig.theorem_violation ? 1 : 0;
}

// -------------------------------------------------------------- normal-form

int run_normal_form(const std::string& path, bool json_mode, bool full_output,
                    const CLI::Option* tol_opt, double cli_tol, const CLI::Option* seed_opt,
                    std::uint64_t cli_seed) {
  ProblemFile pf = load_problem(path);
  const ToleranceConfig tol = resolve_tol(tol_opt, cli_tol, pf.tolerances);
  const std::uint64_t seed = resolve_seed(seed_opt, cli_seed, pf.seed);

  std::vector<Matrix> generators = pf.algebra_generators;
  if (generators.empty())
    for (const auto& [name, fam] : pf.families)
      for (const Pvm& pvm : fam.pvms)
        for (const Matrix& p : pvm.projections) generators.push_back(p);
  MatrixAlgebra alg = generate_algebra(generators, pf.state.d_a, tol);
  LambdaMap map(pf.state, tol);

  AZusReport azus = a_zus_check(map, alg, tol);
  if (!azus.is_azus) {
    if (json_mode) {
      json rep = report_shell("normal-form");
      rep["file"] = path;
      rep["algebra_dim"] = alg.dim();
      rep["azus"] = json{{"pass", false},
                         {"hom_defect", azus.hom_defect},
                         {"commutant_defect", azus.commutant_defect}};
      emit(rep);
    } else {
      std::cout << "not an algebra zero-uncertainty state (hom defect " << azus.hom_defect
                << ", commutant defect " << azus.commutant_defect << ")\n";
    }
    return 1;
  }

  NormalForm nf = compute_normal_form(map, alg, tol, seed);
  json blocks = json::array();
  for (const NormalFormBlock& blk : nf.blocks) {
    Eigensystem es = hermitian_eig(blk.tau, tol);
    std::vector<double> spectrum(es.eigenvalues.data(),
                                 es.eigenvalues.data() + es.eigenvalues.size());
    blocks.push_back(json{{"n", blk.n}, {"k", blk.k}, {"tau_spectrum", spectrum}});
  }

  if (json_mode) {
    json rep = report_shell("normal-form");
    rep["file"] = path;
    rep["algebra_dim"] = alg.dim();
    rep["azus"] = json{{"pass", true},
                       {"hom_defect", azus.hom_defect},
                       {"commutant_defect", azus.commutant_defect}};
    rep["blocks"] = std::move(blocks);
    rep["trivial_blocks"] = nf.trivial_blocks;
    rep["block_structure_defect"] = nf.block_structure_defect;
    rep["reconstruction_defect"] = nf.reconstruction_defect;
    if (full_output) {
      rep["transform"] = matrix_to_json(nf.transform);  // seed-dependent gauge
      rep["support_basis"] = matrix_to_json(nf.support_basis);
    }
    emit(rep);
  } else {
    std::cout << "algebra zero-uncertainty: yes (hom defect " << azus.hom_defect
              << ", commutant defect " << azus.commutant_defect << ")\n";
    for (const auto& blk : blocks) {
      std::cout << "block: n=" << blk["n"] << " dim K=" << blk["k"] << " tau spectrum [";
      const auto& spec = blk["tau_spectrum"];
      for (size_t i = 0; i < spec.size(); ++i)
        std::cout << (i ? ", " : "") << spec[i].get<double>();
      std::cout << "]\n";
    }
    if (!nf.trivial_blocks.empty()) {
      std::cout << "trivial blocks (no memory weight):";
      for (Index t : nf.trivial_blocks) std::cout << " " << t;
      std::cout << "\n";
    }
    std::cout << "block structure defect: " << nf.block_structure_defect << "\n";
    std::cout << "reconstruction defect: " << nf.reconstruction_defect << "\n";
    if (full_output) std::cout << "gauge transform:\n" << nf.transform << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- steering

int run_steering(const std::string& path, bool json_mode, const CLI::Option* tol_opt,
                 double cli_tol) {
  ProblemFile pf = load_problem(path);
  const ToleranceConfig tol = resolve_tol(tol_opt, cli_tol, pf.tolerances);

  bool all_pass = true;
  json families = json::array();
  for (const auto& [fname, fam] : pf.families) {
    Assemblage asm_ = make_assemblage(pf.state, fam, tol);
    ValidationReport rep = check_assemblage(asm_, tol);
    if (!rep.ok()) throw ValidationError(std::move(rep));
    SteeringVerdict verdict = perfect_steering_check(asm_, tol);
    all_pass = all_pass && verdict.pass;

    json settings = json::array();
    for (size_t x = 0; x < asm_.settings.size(); ++x) {
      const SteeringSetting& setting = asm_.settings[x];
      const SettingVerdict& sv = verdict.settings[x];
      json outcomes = json::array();
      for (size_t a = 0; a < setting.sigmas.size(); ++a)
        outcomes.push_back(json{{"outcome", setting.outcomes[a]},
                                {"probability", setting.sigmas[a].trace().real()}});
      json sj{{"setting", setting.label},
              {"pass", sv.pass},
              {"worst_overlap", sv.worst_overlap},
              {"outcomes", std::move(outcomes)}};
      if (sv.pass) {
        BobDecoder decoder = bob_decoder(asm_, setting.label, tol);
        json ranks = json::array();
        for (const Matrix& q : decoder.pvm.projections)
          ranks.push_back(static_cast<Index>(std::llround(q.trace().real())));
        sj["decoder_ranks"] = std::move(ranks);
        sj["decoding_defect"] = decoder.decoding_defect;
      }
      settings.push_back(std::move(sj));
      if (!json_mode) {
        std::cout << "family " << fname << " / setting " << setting.label << ": "
                  << verdict_str(sv.pass) << " (worst overlap " << sv.worst_overlap;
        if (!sv.pass)
          std::cout << ", pair " << sv.worst_pair.first << "," << sv.worst_pair.second;
        std::cout << ")\n";
        if (sv.pass) {
          std::cout << "  decoder ranks:";
          for (const auto& r : settings.back()["decoder_ranks"]) std::cout << " " << r;
          std::cout << "\n";
        }
      }
    }
    families.push_back(json{{"family", fname}, {"settings", std::move(settings)}});
  }
  if (json_mode) {
    json rep = report_shell("steering");
    rep["file"] = path;
    rep["families"] = std::move(families);
    rep["perfect_steering"] = all_pass;
    emit(rep);
  } else {
    std::cout << "perfect coarse-grained steering: " << (all_pass ? "yes" : "no") << "\n";
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- construct

std::vector<std::pair<Index, Index>> parse_blocks(const std::string& text) {
  std::vector<std::pair<Index, Index>> pattern;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto x = part.find('x');
    if (x == std::string::npos)
      throw SchemaError("--blocks expects a comma list of NxM entries, got '" + part + "'");
    try {
      pattern.emplace_back(std::stol(part.substr(0, x)), std::stol(part.substr(x + 1)));
    } catch (const std::exception&) {
      throw SchemaError("--blocks: cannot parse '" + part + "'");
    }
  }
  if (pattern.empty()) throw SchemaError("--blocks: empty pattern");
  return pattern;
}

Matrix build_density(const std::string& kind, Index dim, Index rank, std::uint64_t seed,
                     const char* flag) {
  if (dim < 1) throw SchemaError(std::string(flag) + "-dim must be positive");
  if (kind == "maximally-mixed")
    return Matrix::Identity(dim, dim) / static_cast<double>(dim);
  if (kind == "ground") {
    Matrix m = Matrix::Zero(dim, dim);
    m(0, 0) = 1.0;
    return m;
  }
  if (kind == "random") {
    Prng rng = Prng::substream(seed, 0xd15c0ull);
    const Index r = rank > 0 ? rank : dim;
    if (r > dim) throw SchemaError(std::string(flag) + "-rank exceeds the dimension");
    return random_density(dim, r, rng);
  }
  if (kind == "maximally-entangled") {
    if (dim != 4)
      throw SchemaError(std::string(flag) + " maximally-entangled needs a 2x2 pair (dim 4)");
    return max_entangled_state(2).rho;
  }
  throw SchemaError(std::string(flag) + ": unknown kind '" + kind + "'");
}

Pvm basis_pvm(const Matrix& basis, const std::string& name) {
  std::vector<Matrix> projections;
  for (Index j = 0; j < basis.cols(); ++j)
    projections.push_back(basis.col(j) * basis.col(j).adjoint());
  return validate_pvm(std::move(projections), {}, name);
}

Matrix fourier_basis(Index d) {
  Matrix f(d, d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                           static_cast<double>(d);
      f(j, k) = scale * Cplx(std::cos(angle), std::sin(angle));
    }
  return f;
}

struct ConstructParams {
  std::string kind;
  std::string out = "problem.json";
  Index d = 2;
  std::string sigma = "maximally-mixed";
  Index sigma_dim = 2;
  Index sigma_rank = 0;  // 0 = full rank
  std::string omega = "maximally-mixed";
  Index omega_dim = 2;
  std::string blocks = "2x2";
  bool rotate = false;
  std::string base = "bell";
};

int run_construct(const ConstructParams& params, bool json_mode, const CLI::Option* seed_opt,
                  std::uint64_t cli_seed) {
  const std::uint64_t seed = resolve_seed(seed_opt, cli_seed, std::nullopt);
  ProblemFile pf;
  pf.seed = seed;
  json meta{{"kind", params.kind}};

  if (params.kind == "bell" || params.kind == "mix") {
    pf.state = params.kind == "bell" ? catalog::bell() : catalog::mix();
    pf.families.emplace_back("S1", catalog::s1());
    pf.families.emplace_back("S2", catalog::s2());
  } else if (params.kind == "qutrit") {
    pf.state = catalog::qutrit_phi3();
    pf.families.emplace_back("PQ", catalog::qutrit_family());
  } else if (params.kind == "proper-subalgebra") {
    const auto pattern = parse_blocks(params.blocks);
    Index total = 0;
    for (auto [n, m] : pattern) total += n * m;
    Matrix w = Matrix::Identity(total, total);
    if (params.rotate) {
      Prng rng = Prng::substream(seed, 0x40ull);
      w = haar_unitary(total, rng);
    }
    WedderburnStructure ws = make_structure(pattern, w);
    ProperSubalgebraRecipe recipe{ws, 0, {}, {}};
    pf.state = proper_subalgebra_zus(recipe);
    PvmFamily fam;
    fam.pvms = sample_pvms_in_algebra(ws, 3, seed);
    pf.families.emplace_back("sampled", std::move(fam));
    pf.algebra_generators = algebra_from_structure(ws).basis;
    meta["blocks"] = params.blocks;
    meta["rotate"] = params.rotate;
  } else if (params.kind == "larger-memory") {
    const Matrix sigma =
        build_density(params.sigma, params.sigma_dim, params.sigma_rank, seed, "--sigma");
    pf.state = larger_memory_zus(params.d, sigma);
    Matrix z = Matrix::Identity(params.d, params.d);
    PvmFamily fam;
    Pvm zb = basis_pvm(z, "Z");
    Pvm fb = basis_pvm(fourier_basis(params.d), "F");
    fam.pvms = {std::move(zb), std::move(fb)};
    pf.families.emplace_back("ZF", std::move(fam));
    meta["d"] = params.d;
    meta["sigma"] = params.sigma;
    meta["sigma_dim"] = params.sigma_dim;
  } else if (params.kind == "product-extension") {
    const Matrix omega =
        build_density(params.omega, params.omega_dim, 0, seed, "--omega");
    const BipartiteState base = params.base == "mix" ? catalog::mix() : catalog::bell();
    pf.state = product_extension_zus(base, omega);
    pf.families.emplace_back("S1", catalog::s1());
    pf.families.emplace_back("S2", catalog::s2());
    meta["base"] = params.base;
    meta["omega"] = params.omega;
    meta["omega_dim"] = params.omega_dim;
  } else if (params.kind == "two-qubit-product") {
    const Matrix omega = build_density(params.omega, 4, 0, seed, "--omega");
    MemoryExample ex = two_qubit_memory_product(omega);
    pf.state = ex.state;
    WedderburnStructure ws = make_structure({{2, 2}}, Matrix::Identity(4, 4));
    PvmFamily fam;
    fam.pvms = sample_pvms_in_algebra(ws, 3, seed);
    pf.families.emplace_back("sampled", std::move(fam));
    pf.algebra_generators = ex.algebra.basis;
    meta["omega"] = params.omega;
  } else if (params.kind == "two-qubit-ancilla") {
    const Matrix sigma = build_density(params.sigma, 2, params.sigma_rank, seed, "--sigma");
    MemoryExample ex = two_qubit_memory_ancilla(sigma);
    pf.state = ex.state;
    PvmFamily fam;
    fam.pvms = {basis_pvm(Matrix::Identity(2, 2), "Z"), basis_pvm(fourier_basis(2), "F")};
    pf.families.emplace_back("ZF", std::move(fam));
    meta["sigma"] = params.sigma;
  } else {
    throw SchemaError("unknown construct kind '" + params.kind + "'");
  }

  meta["seed"] = seed;
  pf.metadata = std::move(meta);
  save_problem(pf, params.out);
  if (json_mode) {
    json rep = report_shell("construct");
    rep["kind"] = params.kind;
    rep["out"] = params.out;
    rep["d_a"] = pf.state.d_a;
    rep["d_b"] = pf.state.d_b;
    emit(rep);
  } else {
    std::cout << "wrote " << params.out << " (kind " << params.kind << ", d_a=" << pf.state.d_a
              << ", d_b=" << pf.state.d_b << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zuslab: zero-uncertainty states, operator algebras, steering"};
  app.set_version_flag("--version", "zuslab 0.1.0");
  app.require_subcommand(1);

  std::string file, family_name, out;
  bool json_mode = false, full_output = false;
  double cli_tol = 0.0;
  std::uint64_t cli_seed = 0;
  ConstructParams cparams;

  auto add_common = [&](CLI::App* cmd, bool with_file) {
    if (with_file) cmd->add_option("file", file, "problem file (zuslab/1 JSON)")->required();
    cmd->add_flag("--json", json_mode, "machine-readable report");
    return std::pair{cmd->add_option("--tol", cli_tol, "override eq_tol"),
                     cmd->add_option("--seed", cli_seed, "probe seed")};
  };

  CLI::App* check = app.add_subcommand("check-zus", "decide the zero-uncertainty property");
  auto [check_tol, check_seed] = add_common(check, true);
  check->add_option("--family", family_name, "restrict to one named family");

  CLI::App* analyze = app.add_subcommand("analyze", "algebra structure and rigidity report");
  auto [analyze_tol, analyze_seed] = add_common(analyze, true);

  CLI::App* nform = app.add_subcommand("normal-form", "block normal form of an algebra ZUS");
  auto [nform_tol, nform_seed] = add_common(nform, true);
  nform->add_flag("--full-output", full_output, "include the (seed-dependent) gauge unitary");

  CLI::App* steer = app.add_subcommand("steering", "assemblage and perfect-steering report");
  auto [steer_tol, steer_seed] = add_common(steer, true);

  CLI::App* construct = app.add_subcommand("construct", "write a catalog problem file");
  construct
      ->add_option("kind", cparams.kind,
                   "bell|mix|qutrit|proper-subalgebra|larger-memory|product-extension|"
                   "two-qubit-product|two-qubit-ancilla")
      ->required();
  construct->add_flag("--json", json_mode, "machine-readable report");
  auto* construct_seed = construct->add_option("--seed", cli_seed, "sampling seed");
  construct->add_option("--out", cparams.out, "output path (default problem.json)");
  construct->add_option("--d", cparams.d, "A-side dimension (larger-memory)");
  construct->add_option("--sigma", cparams.sigma, "maximally-mixed|ground|random");
  construct->add_option("--sigma-dim", cparams.sigma_dim, "σ dimension (larger-memory)");
  construct->add_option("--sigma-rank", cparams.sigma_rank, "σ rank for random (0 = full)");
  construct->add_option("--omega", cparams.omega,
                        "maximally-mixed|ground|random|maximally-entangled");
  construct->add_option("--omega-dim", cparams.omega_dim, "ω dimension (product-extension)");
  construct->add_option("--blocks", cparams.blocks, "block pattern NxM[,NxM...]");
  construct->add_flag("--rotate", cparams.rotate, "conjugate the algebra by a Haar unitary");
  construct->add_option("--base", cparams.base, "bell|mix (product-extension)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad invocation is an input error
  }

  try {
    if (check->parsed())
      return run_check_zus(file, family_name, json_mode, check_tol, cli_tol);
    if (analyze->parsed())
      return run_analyze(file, json_mode, analyze_tol, cli_tol, analyze_seed, cli_seed);
    if (nform->parsed())
      return run_normal_form(file, json_mode, full_output, nform_tol, cli_tol, nform_seed,
                             cli_seed);
    if (steer->parsed()) return run_steering(file, json_mode, steer_tol, cli_tol);
    if (construct->parsed()) return run_construct(cparams, json_mode, construct_seed, cli_seed);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.report.summary() << "\n";
    return 2;
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // no subcommand dispatched
}
