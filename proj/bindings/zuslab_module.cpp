// Python bindings for the zuslab core. The surface mirrors the C++ headers:
// validated states and measurements plus the worked catalog, the Λ/Φ maps
// with their zero-uncertainty verdicts and Choi data, *-algebras and their
// Wedderburn structure, the rigidity checker, the counterexample
// constructions, algebra-level verdicts and normal forms, steering decoders,
// problem-file I/O, and the seeded samplers.
//
// Conventions at the boundary: matrices cross as numpy complex128 arrays
// (copied both ways); verdict fields named `pass` in C++ surface as `passed`
// (pass is a Python keyword); sizes surface as __len__.

#include "zuslab/constructions.hpp"
#include "zuslab/json_io.hpp"
#include "zuslab/normal_form.hpp"
#include "zuslab/rigidity.hpp"
#include "zuslab/steering.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace zuslab;

namespace {

std::string fmt_overlap(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

}  // namespace

PYBIND11_MODULE(_zuslab, m) {
  m.doc() = "Zero-uncertainty states for degenerate measurement families: "
            "decision procedures, rigidity checks, counterexample "
            "constructions and operator-algebraic normal forms.";
  m.attr("__version__") = "0.1.0";
  m.attr("DEFAULT_SEED") = py::int_(kDefaultSeed);
  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("VANISHED_OUTCOME_TOL") = kVanishedOutcomeTol;
  m.attr("MAX_ENTANGLED_TOL") = kMaxEntangledTol;

  // --- errors --------------------------------------------------------------
  // Base first, subtypes after: translators registered later run first, so
  // each C++ subtype lands on its own Python type rather than the base.

  auto err = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DimensionError>(m, "DimensionError", err.ptr());
  py::register_exception<NotHermitianError>(m, "NotHermitianError", err.ptr());
  py::register_exception<NotPsdError>(m, "NotPsdError", err.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", err.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", err.ptr());
  py::register_exception<DegenerateSplit>(m, "DegenerateSplit", err.ptr());
  py::register_exception<NumericalRankAmbiguity>(m, "NumericalRankAmbiguity", err.ptr());
  py::register_exception<VerificationFailed>(m, "VerificationFailed", err.ptr());
  py::register_exception<NotPure>(m, "NotPure", err.ptr());
  py::register_exception<NotProper>(m, "NotProper", err.ptr());
  py::register_exception<BadBlock>(m, "BadBlock", err.ptr());
  py::register_exception<InvalidSigma>(m, "InvalidSigma", err.ptr());
  py::register_exception<NotAZus>(m, "NotAZus", err.ptr());
  py::register_exception<BlockStructureDefect>(m, "BlockStructureDefect", err.ptr());
  py::register_exception<NotPerfect>(m, "NotPerfect", err.ptr());

  // --- tolerances ------------------------------------------------------------

  py::class_<ToleranceConfig>(m, "ToleranceConfig",
                              "Shared tolerance policy: eq_tol for operator-norm equality, "
                              "rank_tol for rank/support cutoffs, psd_tol for PSD slack.")
      .def(py::init([](double eq_tol, double rank_tol, double psd_tol) {
             return ToleranceConfig{eq_tol, rank_tol, psd_tol};
           }),
           py::arg("eq_tol") = 1e-9, py::arg("rank_tol") = 1e-9, py::arg("psd_tol") = 1e-10)
      .def_readwrite("eq_tol", &ToleranceConfig::eq_tol)
      .def_readwrite("rank_tol", &ToleranceConfig::rank_tol)
      .def_readwrite("psd_tol", &ToleranceConfig::psd_tol)
      .def("__repr__", [](const ToleranceConfig& t) {
        return "ToleranceConfig(eq_tol=" + fmt_overlap(t.eq_tol) +
               ", rank_tol=" + fmt_overlap(t.rank_tol) +
               ", psd_tol=" + fmt_overlap(t.psd_tol) + ")";
      });

  const ToleranceConfig default_tol{};

  // --- linear algebra helpers -----------------------------------------------

  py::enum_<Subsystem>(m, "Subsystem")
      .value("A", Subsystem::A)
      .value("B", Subsystem::B);

  m.def("kron", &kron, py::arg("a"), py::arg("b"),
        "Kronecker product; composite index is row-major (i*d_b + k).");
  m.def("partial_trace", &partial_trace, py::arg("m"), py::arg("d_a"), py::arg("d_b"),
        py::arg("over"), "Tr_A or Tr_B of an operator on C^{d_a} x C^{d_b}.");
  m.def("swap_unitary", &swap_unitary, py::arg("d_a"), py::arg("d_b"),
        "Unitary F with F(x tensor y) = y tensor x.");
  m.def("system_permutation", &system_permutation, py::arg("dims"), py::arg("perm"),
        "Permutation unitary for several tensor slots.");
  m.def("opnorm", &opnorm, py::arg("m"), "Largest singular value.");
  m.def("support_projection", &support_projection, py::arg("m"),
        py::arg("tol") = default_tol);
  m.def("support_isometry", &support_isometry, py::arg("m"), py::arg("tol") = default_tol);
  m.def("psd_power", &psd_power, py::arg("m"), py::arg("exponent"),
        py::arg("tol") = default_tol,
        "Spectral power on the support; exponent -1/2 gives the pseudo-inverse root.");
  m.def("is_hermitian", &is_hermitian, py::arg("m"), py::arg("tol"));
  m.def("hermiticity_defect", &hermiticity_defect, py::arg("m"));
  m.def("hs_inner", &hs_inner, py::arg("a"), py::arg("b"), "Tr(a^dagger b).");
  m.def("hs_norm", &hs_norm, py::arg("a"));

  // --- seeded randomness ------------------------------------------------------

  py::class_<Prng>(m, "Prng",
                   "Deterministic generator; same seed gives the same draws on "
                   "every platform.")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &Prng::uniform)
      .def("gaussian", &Prng::gaussian)
      .def("integer", &Prng::integer, py::arg("bound"))
      .def_static("substream", &Prng::substream, py::arg("seed"), py::arg("k"),
                  "Independent generator for the k-th sub-stream of this seed.");

  m.def("splitmix64", &splitmix64, py::arg("x"));
  m.def("ginibre", &ginibre, py::arg("rows"), py::arg("cols"), py::arg("rng"));
  m.def("haar_unitary", &haar_unitary, py::arg("d"), py::arg("rng"));
  m.def("random_hermitian", &random_hermitian, py::arg("d"), py::arg("rng"));
  m.def("random_density", &random_density, py::arg("d"), py::arg("rank"), py::arg("rng"));
  m.def("random_unit_vector", &random_unit_vector, py::arg("d"), py::arg("rng"));

  // --- states and measurements -------------------------------------------------

  py::class_<Violation>(m, "Violation")
      .def_readonly("kind", &Violation::kind)
      .def_readonly("detail", &Violation::detail)
      .def_readonly("magnitude", &Violation::magnitude)
      .def("__repr__", [](const Violation& v) {
        return "Violation(" + v.kind + ": " + v.detail + ")";
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("violations", &ValidationReport::violations)
      .def("ok", &ValidationReport::ok)
      .def("summary", &ValidationReport::summary)
      .def("__bool__", &ValidationReport::ok)
      .def("__repr__", [](const ValidationReport& r) {
        return "ValidationReport(" + (r.ok() ? std::string("ok") : r.summary()) + ")";
      });

  py::class_<BipartiteState>(m, "BipartiteState",
                             "Density operator on C^{d_a} x C^{d_b}, row-major composite "
                             "index. The constructor validates.")
      .def(py::init([](const Matrix& rho, Index d_a, Index d_b, const ToleranceConfig& tol) {
             return validate_state(rho, d_a, d_b, tol);
           }),
           py::arg("rho"), py::arg("d_a"), py::arg("d_b"), py::arg("tol") = default_tol)
      .def_readonly("rho", &BipartiteState::rho)
      .def_readonly("d_a", &BipartiteState::d_a)
      .def_readonly("d_b", &BipartiteState::d_b)
      .def_property_readonly("dim", &BipartiteState::dim)
      .def("__repr__", [](const BipartiteState& s) {
        return "BipartiteState(d_a=" + std::to_string(s.d_a) +
               ", d_b=" + std::to_string(s.d_b) + ")";
      });

  m.def("check_state", &check_state, py::arg("rho"), py::arg("d_a"), py::arg("d_b"),
        py::arg("tol") = default_tol,
        "Non-throwing validation: returns the report instead of raising.");

  py::class_<Pvm>(m, "Pvm",
                  "Projection-valued measure; labels default to '0', '1', ... "
                  "The constructor validates.")
      .def(py::init([](std::vector<Matrix> projections, std::vector<std::string> labels,
                       std::string name, const ToleranceConfig& tol) {
             return validate_pvm(std::move(projections), std::move(labels), std::move(name),
                                 tol);
           }),
           py::arg("projections"), py::arg("labels") = std::vector<std::string>{},
           py::arg("name") = std::string{}, py::arg("tol") = default_tol)
      .def_readonly("projections", &Pvm::projections)
      .def_readonly("labels", &Pvm::labels)
      .def_readonly("name", &Pvm::name)
      .def_property_readonly("dim", &Pvm::dim)
      .def("__len__", &Pvm::size)
      .def("__repr__", [](const Pvm& p) {
        return "Pvm(" + (p.name.empty() ? std::string("<unnamed>") : p.name) + ", " +
               std::to_string(p.size()) + " outcomes on dim " + std::to_string(p.dim()) + ")";
      });

  m.def("check_pvm", &check_pvm, py::arg("projections"), py::arg("tol") = default_tol);

  py::class_<PvmFamily>(m, "PvmFamily", "A finite family of PVMs on a common space.")
      .def(py::init([](std::vector<Pvm> pvms, const ToleranceConfig& tol) {
             return validate_family(std::move(pvms), tol);
           }),
           py::arg("pvms"), py::arg("tol") = default_tol)
      .def_readonly("pvms", &PvmFamily::pvms)
      .def_property_readonly("dim", &PvmFamily::dim)
      .def("__len__", &PvmFamily::size)
      .def("find",
           [](const PvmFamily& f, const std::string& name) -> std::optional<Pvm> {
             const Pvm* p = f.find(name);
             if (p == nullptr) return std::nullopt;
             return *p;
           },
           py::arg("name"), "The PVM with this name, or None.");

  m.def("check_family", &check_family, py::arg("pvms"), py::arg("tol") = default_tol);
  m.def("max_entangled_vector", &max_entangled_vector, py::arg("d"));
  m.def("max_entangled_state", &max_entangled_state, py::arg("d"));

  auto cat = m.def_submodule("catalog", "Small worked states and measurement families.");
  cat.def("bell", &catalog::bell);
  cat.def("mix", &catalog::mix);
  cat.def("z_basis", &catalog::z_basis);
  cat.def("x_basis", &catalog::x_basis);
  cat.def("s1", &catalog::s1);
  cat.def("s2", &catalog::s2);
  cat.def("qutrit_phi3", &catalog::qutrit_phi3);
  cat.def("qutrit_p", &catalog::qutrit_p);
  cat.def("qutrit_q", &catalog::qutrit_q);
  cat.def("qutrit_family", &catalog::qutrit_family);

  // --- the maps and the zero-uncertainty decision ------------------------------

  py::class_<LambdaMap>(m, "LambdaMap",
                        "Lambda(X) = Tr_A[(X^T tensor I) rho] and its unital "
                        "normalization Phi on the support of rho_B.")
      .def(py::init<BipartiteState, ToleranceConfig>(), py::arg("state"),
           py::arg("tol") = default_tol)
      .def_property_readonly("state", &LambdaMap::state)
      .def_property_readonly("rho_b", &LambdaMap::rho_b)
      .def_property_readonly("support", &LambdaMap::support)
      .def_property_readonly("support_basis", &LambdaMap::support_basis)
      .def_property_readonly("support_dim", &LambdaMap::support_dim)
      .def_property_readonly("tolerances", &LambdaMap::tolerances)
      .def("apply", &LambdaMap::apply, py::arg("x"), "Lambda(X).")
      .def("apply_phi", &LambdaMap::apply_phi, py::arg("x"),
           "Phi(X), as a d_b x d_b operator supported on S.");

  py::class_<ConditionalOperators>(m, "ConditionalOperators")
      .def_readonly("pvm_name", &ConditionalOperators::pvm_name)
      .def_readonly("labels", &ConditionalOperators::labels)
      .def_readonly("operators", &ConditionalOperators::operators);

  m.def("conditional_operators", &conditional_operators, py::arg("map"), py::arg("pvm"),
        "Z_alpha = Tr_A[(P_alpha tensor I) rho] for each outcome.");
  m.def("normalized_overlap", &normalized_overlap, py::arg("za"), py::arg("zb"),
        py::arg("zero_tol") = kVanishedOutcomeTol,
        "||Z_a Z_b|| / (||Z_a|| ||Z_b||); vanished outcomes count as orthogonal.");

  py::class_<ZusVerdict>(m, "ZusVerdict")
      .def_readonly("pvm_name", &ZusVerdict::pvm_name)
      .def_readonly("passed", &ZusVerdict::pass)
      .def_readonly("worst_overlap", &ZusVerdict::worst_overlap)
      .def_readonly("worst_pair", &ZusVerdict::worst_pair)
      .def("__bool__", [](const ZusVerdict& v) { return v.pass; })
      .def("__repr__", [](const ZusVerdict& v) {
        return "ZusVerdict(" + (v.pvm_name.empty() ? std::string("<unnamed>") : v.pvm_name) +
               ": " + (v.pass ? "pass" : "FAIL") +
               ", worst_overlap=" + fmt_overlap(v.worst_overlap) + ")";
      });

  py::class_<CommonZusVerdict>(m, "CommonZusVerdict")
      .def_readonly("passed", &CommonZusVerdict::pass)
      .def_readonly("worst_overlap", &CommonZusVerdict::worst_overlap)
      .def_readonly("per_pvm", &CommonZusVerdict::per_pvm)
      .def("__bool__", [](const CommonZusVerdict& v) { return v.pass; })
      .def("__repr__", [](const CommonZusVerdict& v) {
        return std::string("CommonZusVerdict(") + (v.pass ? "pass" : "FAIL") +
               ", worst_overlap=" + fmt_overlap(v.worst_overlap) + ")";
      });

  m.def("is_zus", &is_zus, py::arg("map"), py::arg("pvm"),
        "Pairwise support orthogonality of one PVM's conditional operators.");
  m.def("is_common_zus", &is_common_zus, py::arg("map"), py::arg("family"));
  m.def("choi_operator", &choi_operator, py::arg("map"),
        "R = sum_ij Lambda(E_ij) tensor E_ij on H_B tensor H_A.");
  m.def("kraus_rank", &kraus_rank, py::arg("map"), "Rank of the Choi operator.");

  // --- *-algebras ---------------------------------------------------------------

  py::class_<MatrixAlgebra>(m, "MatrixAlgebra",
                            "A *-algebra of matrices, held as an HS-orthonormal basis "
                            "of its span.")
      .def_readonly("ambient_dim", &MatrixAlgebra::ambient_dim)
      .def_readonly("basis", &MatrixAlgebra::basis)
      .def_readonly("contains_identity", &MatrixAlgebra::contains_identity)
      .def_property_readonly("dim", &MatrixAlgebra::dim)
      .def("contains", &MatrixAlgebra::contains, py::arg("x"), py::arg("tol"))
      .def("project", &MatrixAlgebra::project, py::arg("x"))
      .def("__repr__", [](const MatrixAlgebra& a) {
        return "MatrixAlgebra(dim=" + std::to_string(a.dim()) + " in M_" +
               std::to_string(a.ambient_dim) + ")";
      });

  m.def("make_algebra", &make_algebra, py::arg("ambient_dim"), py::arg("spanning"),
        py::arg("tol") = default_tol);
  m.def("generate_algebra", &generate_algebra, py::arg("generators"), py::arg("d"),
        py::arg("tol") = default_tol,
        "Smallest unital *-algebra containing the generators.");
  m.def("full_algebra", &full_algebra, py::arg("d"));
  m.def("transpose_algebra", &transpose_algebra, py::arg("alg"));
  m.def("commutant", &commutant, py::arg("alg"), py::arg("tol") = default_tol);
  m.def("center", &center, py::arg("alg"), py::arg("tol") = default_tol);
  m.def("minimal_central_projections", &minimal_central_projections, py::arg("alg"),
        py::arg("tol") = default_tol, py::arg("seed") = kDefaultSeed);

  py::class_<WedderburnBlock>(m, "WedderburnBlock", "One simple summand M_n tensor I_m.")
      .def_readonly("n", &WedderburnBlock::n)
      .def_readonly("m", &WedderburnBlock::m)
      .def_readonly("central_projection", &WedderburnBlock::central_projection)
      .def("__repr__", [](const WedderburnBlock& b) {
        return "WedderburnBlock(n=" + std::to_string(b.n) + ", m=" + std::to_string(b.m) + ")";
      });

  py::class_<WedderburnStructure>(m, "WedderburnStructure",
                                  "Unitary W with W X W^dagger = direct sum of "
                                  "X_a tensor I_{m_a} over the blocks.")
      .def_readonly("ambient_dim", &WedderburnStructure::ambient_dim)
      .def_readonly("transform", &WedderburnStructure::transform)
      .def_readonly("blocks", &WedderburnStructure::blocks)
      .def_property_readonly("block_count", &WedderburnStructure::block_count)
      .def("block_offset", &WedderburnStructure::block_offset, py::arg("a"))
      .def("block_size", &WedderburnStructure::block_size, py::arg("a"))
      .def("block_entry", &WedderburnStructure::block_entry, py::arg("x"), py::arg("a"),
           "X_a extracted from W x W^dagger, averaged over multiplicity slots.")
      .def("embed_block", &WedderburnStructure::embed_block, py::arg("y"), py::arg("a"))
      .def("unit", &WedderburnStructure::unit, py::arg("a"), py::arg("j"), py::arg("k"));

  m.def("wedderburn_defect", &wedderburn_defect, py::arg("alg"), py::arg("ws"));
  m.def("wedderburn_decompose", &wedderburn_decompose, py::arg("alg"),
        py::arg("tol") = default_tol, py::arg("seed") = kDefaultSeed);
  m.def("make_structure", &make_structure, py::arg("pattern"), py::arg("transform"),
        py::arg("tol") = default_tol,
        "Structure with the given (n, m) blocks, conjugated by the unitary; "
        "blocks are canonically re-sorted.");
  m.def("algebra_from_structure", &algebra_from_structure, py::arg("ws"),
        py::arg("tol") = default_tol);

  py::class_<MatrixMap>(m, "MatrixMap",
                        "A linear map on M_d recorded by its values on matrix units.")
      .def(py::init([](Index d_in, std::vector<Matrix> unit_values) {
             return MatrixMap{d_in, std::move(unit_values)};
           }),
           py::arg("d_in"), py::arg("unit_values"))
      .def_readonly("d_in", &MatrixMap::d_in)
      .def_readonly("unit_values", &MatrixMap::unit_values)
      .def("apply", &MatrixMap::apply, py::arg("x"))
      .def_static("sample", &MatrixMap::sample, py::arg("d"), py::arg("f"),
                  "Record a Python callable by its values on matrix units.");

  m.def("md_defect", &md_defect, py::arg("phi"), py::arg("a"));
  m.def("md_member", &md_member, py::arg("phi"), py::arg("a"), py::arg("tol") = default_tol);
  m.def("md_algebra", &md_algebra, py::arg("phi"), py::arg("tol") = default_tol,
        "Multiplicative domain of a unital CP map.");

  // --- rigidity -------------------------------------------------------------------

  m.def("purity", &purity, py::arg("state"));
  m.def("reduced_a", &reduced_a, py::arg("state"));
  m.def("reduced_b", &reduced_b, py::arg("state"));
  m.def("maximally_mixed_defect", &maximally_mixed_defect, py::arg("state"));
  m.def("schmidt_coefficients", &schmidt_coefficients, py::arg("state"),
        py::arg("tol") = default_tol,
        "Squared Schmidt coefficients, descending; requires a pure state.");

  using RigidityHypotheses = decltype(RigidityReport::hypotheses);
  using RigidityConclusions = decltype(RigidityReport::conclusions);

  py::class_<RigidityHypotheses>(m, "RigidityHypotheses")
      .def_readonly("dims_equal", &RigidityHypotheses::dims_equal)
      .def_readonly("common_zus", &RigidityHypotheses::common_zus)
      .def_readonly("algebra_full", &RigidityHypotheses::algebra_full);

  py::class_<RigidityConclusions>(m, "RigidityConclusions")
      .def_readonly("purity", &RigidityConclusions::purity)
      .def_readonly("kraus_rank", &RigidityConclusions::kraus_rank)
      .def_readonly("rho_a_defect", &RigidityConclusions::rho_a_defect)
      .def_readonly("schmidt", &RigidityConclusions::schmidt)
      .def_readonly("is_max_entangled", &RigidityConclusions::is_max_entangled);

  py::class_<RigidityReport>(m, "RigidityReport")
      .def_readonly("hypotheses", &RigidityReport::hypotheses)
      .def_readonly("algebra_dim", &RigidityReport::algebra_dim)
      .def_readonly("worst_overlap", &RigidityReport::worst_overlap)
      .def_readonly("conclusions", &RigidityReport::conclusions)
      .def_readonly("theorem_violation", &RigidityReport::theorem_violation)
      .def("hypotheses_hold", &RigidityReport::hypotheses_hold)
      .def("__repr__", [](const RigidityReport& r) {
        return std::string("RigidityReport(hypotheses ") +
               (r.hypotheses_hold() ? "hold" : "do not hold") +
               (r.theorem_violation ? ", THEOREM VIOLATION" : "") + ")";
      });

  m.def("verify_rigidity", &verify_rigidity, py::arg("state"), py::arg("family"),
        py::arg("tol") = default_tol,
        "Check the hypotheses (equal dims, common ZUS, full generated algebra) "
        "and the conclusions (purity, maximal entanglement) independently.");

  // --- counterexample constructions -------------------------------------------------

  py::class_<ProperSubalgebraRecipe>(m, "ProperSubalgebraRecipe",
                                     "Block choice plus multiplicity-space unit vectors "
                                     "u (A side) and v (B side); empty vectors mean e_0.")
      .def(py::init([](WedderburnStructure structure, Index block, std::optional<Vector> u,
                       std::optional<Vector> v) {
             ProperSubalgebraRecipe r{std::move(structure), block, {}, {}};
             if (u) r.u = *u;
             if (v) r.v = *v;
             return r;
           }),
           py::arg("structure"), py::arg("block") = 0, py::arg("u") = py::none(),
           py::arg("v") = py::none())
      .def_readonly("structure", &ProperSubalgebraRecipe::structure)
      .def_readonly("block", &ProperSubalgebraRecipe::block)
      .def_readonly("u", &ProperSubalgebraRecipe::u)
      .def_readonly("v", &ProperSubalgebraRecipe::v);

  m.def("proper_subalgebra_zus", &proper_subalgebra_zus, py::arg("recipe"),
        py::arg("tol") = default_tol,
        "Pure common zero-uncertainty state for a proper subalgebra.");
  m.def("proper_subalgebra_rho_a", &proper_subalgebra_rho_a, py::arg("recipe"),
        "Closed form of Tr_B of that state.");
  m.def("proper_subalgebra_conditional", &proper_subalgebra_conditional, py::arg("recipe"),
        py::arg("e"), py::arg("tol") = default_tol,
        "Closed form of the conditional operator of a projection in the algebra.");
  m.def("larger_memory_zus", &larger_memory_zus, py::arg("d"), py::arg("sigma"),
        py::arg("tol") = default_tol,
        "max entangled pair tensor sigma on memory C^d tensor C^k.");
  m.def("product_extension_zus", &product_extension_zus, py::arg("rho0"), py::arg("omega"),
        py::arg("tol") = default_tol);
  m.def("sample_pvm_in_algebra", &sample_pvm_in_algebra, py::arg("ws"), py::arg("variant"),
        py::arg("seed"), py::arg("tol") = default_tol,
        "Variant 0: finest deterministic pattern; 1: Fourier-rotated; >= 2: seeded "
        "random coarse-grainings, so degenerate projections occur.");
  m.def("sample_pvms_in_algebra", &sample_pvms_in_algebra, py::arg("ws"), py::arg("count"),
        py::arg("seed"), py::arg("tol") = default_tol);

  py::class_<MemoryExample>(m, "MemoryExample",
                            "A state together with the algebra it is zero-uncertainty for.")
      .def_readonly("state", &MemoryExample::state)
      .def_readonly("algebra", &MemoryExample::algebra);

  m.def("two_qubit_memory_product", &two_qubit_memory_product, py::arg("omega"),
        py::arg("tol") = default_tol);
  m.def("two_qubit_memory_product_conditional", &two_qubit_memory_product_conditional,
        py::arg("e"), py::arg("omega"),
        "Closed form (1/2) e^T tensor Tr_{A2} omega; e is the bare 2x2 factor.");
  m.def("two_qubit_memory_ancilla", &two_qubit_memory_ancilla, py::arg("sigma"),
        py::arg("tol") = default_tol);
  m.def("two_qubit_memory_ancilla_conditional", &two_qubit_memory_ancilla_conditional,
        py::arg("e"), py::arg("sigma"));

  // --- algebra-level verdicts and normal forms -----------------------------------------

  py::class_<RestrictedPhi>(m, "RestrictedPhi",
                            "Phi evaluated on an orthonormal basis of the transposed "
                            "algebra, compressed to the support of rho_B.")
      .def_readonly("algebra_t", &RestrictedPhi::algebra_t)
      .def_readonly("values", &RestrictedPhi::values)
      .def_readonly("support_basis", &RestrictedPhi::support_basis)
      .def_readonly("rho_b_s", &RestrictedPhi::rho_b_s)
      .def_property_readonly("support_dim", &RestrictedPhi::support_dim)
      .def("apply", &RestrictedPhi::apply, py::arg("x_t"));

  m.def("restricted_phi", &restricted_phi, py::arg("map"), py::arg("alg"),
        py::arg("tol") = default_tol);

  py::class_<AZusReport>(m, "AZusReport")
      .def_readonly("is_azus", &AZusReport::is_azus)
      .def_readonly("hom_defect", &AZusReport::hom_defect)
      .def_readonly("commutant_defect", &AZusReport::commutant_defect)
      .def("__bool__", [](const AZusReport& r) { return r.is_azus; })
      .def("__repr__", [](const AZusReport& r) {
        return std::string("AZusReport(") + (r.is_azus ? "pass" : "FAIL") +
               ", hom_defect=" + fmt_overlap(r.hom_defect) +
               ", commutant_defect=" + fmt_overlap(r.commutant_defect) + ")";
      });

  m.def("a_zus_check", &a_zus_check, py::arg("map"), py::arg("alg"),
        py::arg("tol") = default_tol,
        "Quantitative algebra-level test: Phi restricted to the transposed algebra "
        "must be a unital *-homomorphism whose image commutes with rho_B.");

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("algebraic_verdict", &EquivalenceReport::algebraic_verdict)
      .def_readonly("sampled_verdict", &EquivalenceReport::sampled_verdict)
      .def_readonly("worst_overlap", &EquivalenceReport::worst_overlap)
      .def("agree", &EquivalenceReport::agree)
      .def("__repr__", [](const EquivalenceReport& r) {
        return std::string("EquivalenceReport(algebraic=") +
               (r.algebraic_verdict ? "pass" : "FAIL") + ", sampled=" +
               (r.sampled_verdict ? "pass" : "FAIL") + ")";
      });

  m.def("sampled_zus_equivalence", &sampled_zus_equivalence, py::arg("map"), py::arg("alg"),
        py::arg("samples"), py::arg("seed") = kDefaultSeed, py::arg("tol") = default_tol,
        "Cross-check of the algebraic test against directly sampled PVMs.");

  py::class_<NormalFormBlock>(m, "NormalFormBlock")
      .def_readonly("algebra_block", &NormalFormBlock::algebra_block)
      .def_readonly("n", &NormalFormBlock::n)
      .def_readonly("k", &NormalFormBlock::k)
      .def_readonly("tau", &NormalFormBlock::tau);

  py::class_<NormalForm>(m, "NormalForm",
                         "Unitary U on supp rho_B with U Lambda(x) U^dagger = direct sum "
                         "of x_a tensor tau_a over the non-trivial blocks.")
      .def_readonly("algebra_structure", &NormalForm::algebra_structure)
      .def_readonly("support_basis", &NormalForm::support_basis)
      .def_readonly("transform", &NormalForm::transform)
      .def_readonly("blocks", &NormalForm::blocks)
      .def_readonly("trivial_blocks", &NormalForm::trivial_blocks)
      .def_readonly("block_structure_defect", &NormalForm::block_structure_defect)
      .def_readonly("reconstruction_defect", &NormalForm::reconstruction_defect)
      .def("canonical_lambda", &NormalForm::canonical_lambda, py::arg("x_t"));

  m.def("compute_normal_form", &compute_normal_form, py::arg("map"), py::arg("alg"),
        py::arg("tol") = default_tol, py::arg("seed") = kDefaultSeed);

  py::class_<FullAlgebraForm>(m, "FullAlgebraForm",
                              "Co-isometry T on H_B with (I tensor T) rho (I tensor T)^dagger "
                              "= max entangled pair tensor sigma.")
      .def_readonly("t", &FullAlgebraForm::t)
      .def_readonly("sigma", &FullAlgebraForm::sigma)
      .def_readonly("defect", &FullAlgebraForm::defect);

  m.def("full_algebra_form", &full_algebra_form, py::arg("map"), py::arg("tol") = default_tol,
        py::arg("seed") = kDefaultSeed);

  // --- steering ------------------------------------------------------------------------

  py::class_<SteeringSetting>(m, "SteeringSetting")
      .def_readonly("label", &SteeringSetting::label)
      .def_readonly("outcomes", &SteeringSetting::outcomes)
      .def_readonly("sigmas", &SteeringSetting::sigmas);

  py::class_<Assemblage>(m, "Assemblage",
                         "sigma_{a|x} = Tr_A[(P_{x,a} tensor I) rho] for each setting.")
      .def_readonly("settings", &Assemblage::settings)
      .def_readonly("rho_b", &Assemblage::rho_b)
      .def_readonly("d_b", &Assemblage::d_b);

  m.def("make_assemblage", &make_assemblage, py::arg("state"), py::arg("family"),
        py::arg("tol") = default_tol);
  m.def("check_assemblage", &check_assemblage, py::arg("assemblage"),
        py::arg("tol") = default_tol,
        "No-signalling and positivity: each sigma is PSD, each setting sums to rho_B.");

  py::class_<SettingVerdict>(m, "SettingVerdict")
      .def_readonly("setting", &SettingVerdict::setting)
      .def_readonly("passed", &SettingVerdict::pass)
      .def_readonly("worst_overlap", &SettingVerdict::worst_overlap)
      .def_readonly("worst_pair", &SettingVerdict::worst_pair);

  py::class_<SteeringVerdict>(m, "SteeringVerdict")
      .def_readonly("passed", &SteeringVerdict::pass)
      .def_readonly("settings", &SteeringVerdict::settings)
      .def("__bool__", [](const SteeringVerdict& v) { return v.pass; })
      .def("__repr__", [](const SteeringVerdict& v) {
        return std::string("SteeringVerdict(") + (v.pass ? "pass" : "FAIL") + ", " +
               std::to_string(v.settings.size()) + " settings)";
      });

  m.def("perfect_steering_check", &perfect_steering_check, py::arg("assemblage"),
        py::arg("tol") = default_tol);

  py::class_<BobDecoder>(m, "BobDecoder",
                         "Support projections of one setting's members plus a discard "
                         "outcome, as a PVM on supp rho_B.")
      .def_readonly("pvm", &BobDecoder::pvm)
      .def_readonly("support_basis", &BobDecoder::support_basis)
      .def_readonly("decoding_defect", &BobDecoder::decoding_defect);

  m.def("bob_decoder", &bob_decoder, py::arg("assemblage"), py::arg("setting_label"),
        py::arg("tol") = default_tol);

  // --- problem files ---------------------------------------------------------------------
  // The free-form metadata block crosses the boundary as a JSON string.

  py::class_<ProblemFile>(m, "ProblemFile")
      .def(py::init<>())
      .def_readwrite("version", &ProblemFile::version)
      .def_property(
          "metadata", [](const ProblemFile& p) { return p.metadata.dump(); },
          [](ProblemFile& p, const std::string& s) {
            p.metadata = json::parse(s);
          })
      .def_readwrite("state", &ProblemFile::state)
      .def_readwrite("families", &ProblemFile::families)
      .def_readwrite("algebra_generators", &ProblemFile::algebra_generators)
      .def_readwrite("tolerances", &ProblemFile::tolerances)
      .def_readwrite("seed", &ProblemFile::seed)
      .def("find_family",
           [](const ProblemFile& p, const std::string& name) -> std::optional<PvmFamily> {
             const PvmFamily* f = p.find_family(name);
             if (f == nullptr) return std::nullopt;
             return *f;
           },
           py::arg("name"))
      .def("merged_family", &ProblemFile::merged_family);

  m.def("load_problem", &load_problem, py::arg("path"));
  m.def("save_problem", &save_problem, py::arg("p"), py::arg("path"));
  m.def("problem_to_json_string",
        [](const ProblemFile& p) { return problem_to_json(p).dump(2); },
        py::arg("p"));
  m.def("problem_from_json_string",
        [](const std::string& s) { return problem_from_json(json::parse(s)); },
        py::arg("s"));
}
