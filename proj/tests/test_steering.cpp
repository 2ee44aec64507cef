#include "zuslab/steering.hpp"
#include "zuslab/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace zuslab;

TEST_CASE("qutrit assemblage elements are the transposed projections over 3") {
  const Assemblage asm_ =
      make_assemblage(catalog::qutrit_phi3(), catalog::qutrit_family());
  REQUIRE(asm_.settings.size() == 2);
  const Pvm p = catalog::qutrit_p(), q = catalog::qutrit_q();
  for (size_t a = 0; a < 2; ++a) {
    CHECK(oracle::max_abs_diff(asm_.settings[0].sigmas[a],
                               p.projections[a].transpose() / 3.0) < 1e-12);
    CHECK(oracle::max_abs_diff(asm_.settings[1].sigmas[a],
                               q.projections[a].transpose() / 3.0) < 1e-12);
  }
  CHECK(check_assemblage(asm_).ok());
}

TEST_CASE("check_assemblage flags signalling and negativity") {
  Assemblage asm_ = make_assemblage(catalog::qutrit_phi3(), catalog::qutrit_family());
  asm_.settings[0].sigmas[0] *= 1.5;  // breaks Σ_α σ_α = ρ_B
  const ValidationReport rep = check_assemblage(asm_);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].kind == "no-signalling");

  Assemblage neg = make_assemblage(catalog::qutrit_phi3(), catalog::qutrit_family());
  neg.settings[1].sigmas[0] -= 0.1 * Matrix::Identity(3, 3);
  bool saw_psd = false;
  for (const Violation& v : check_assemblage(neg).violations) saw_psd |= v.kind == "psd";
  CHECK(saw_psd);
}

TEST_CASE("perfect steering: qutrit passes both settings, Mix fails on X") {
  const SteeringVerdict qutrit = perfect_steering_check(
      make_assemblage(catalog::qutrit_phi3(), catalog::qutrit_family()));
  CHECK(qutrit.pass);
  REQUIRE(qutrit.settings.size() == 2);
  CHECK(qutrit.settings[0].pass);
  CHECK(qutrit.settings[1].pass);

  const SteeringVerdict mix =
      perfect_steering_check(make_assemblage(catalog::mix(), catalog::s1()));
  CHECK_FALSE(mix.pass);
  CHECK(mix.settings[0].pass);        // Z
  CHECK_FALSE(mix.settings[1].pass);  // X: conditionals coincide
  CHECK(mix.settings[1].worst_overlap == doctest::Approx(1.0));
  CHECK(mix.settings[1].worst_pair.first == "+");
}

TEST_CASE("bob_decoder on the qutrit example: ranks (2,1), no discard needed") {
  const Assemblage asm_ =
      make_assemblage(catalog::qutrit_phi3(), catalog::qutrit_family());
  for (const std::string& setting : {std::string("P"), std::string("Q")}) {
    const BobDecoder dec = bob_decoder(asm_, setting);
    REQUIRE(dec.pvm.size() == 2);  // supports fill supp ρ_B exactly
    CHECK(check_pvm(dec.pvm.projections).ok());
    CHECK(dec.decoding_defect < 1e-12);
    // the rank-2 and rank-1 outcomes, in the setting's own outcome order
    const double r0 = dec.pvm.projections[0].trace().real();
    const double r1 = dec.pvm.projections[1].trace().real();
    CHECK(r0 == doctest::Approx(2.0));
    CHECK(r1 == doctest::Approx(1.0));
  }

  // decoding really identifies the outcome: Tr(Q_α σ_β) = δ_{αβ} Tr(σ_α),
  // with σ compressed to the decoder's support coordinates
  const BobDecoder dec = bob_decoder(asm_, "P");
  const Matrix& vs = dec.support_basis;
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b) {
      const Matrix sigma_s = vs.adjoint() * asm_.settings[0].sigmas[b] * vs;
      const Cplx response = (dec.pvm.projections[a] * sigma_s).trace();
      const double expect = a == b ? asm_.settings[0].sigmas[b].trace().real() : 0.0;
      CHECK(std::abs(response - expect) < 1e-12);
    }
}

TEST_CASE("perfect settings never need the discard outcome") {
  // the conditionals of one setting sum to ρ_B, so their supports always
  // fill supp ρ_B; the discard outcome exists only as a numerical guard
  const Assemblage asm_ = make_assemblage(catalog::mix(), catalog::s2());
  const BobDecoder dec = bob_decoder(asm_, "Z");
  CHECK(dec.pvm.size() == 2);
  for (const std::string& label : dec.pvm.labels) CHECK(label != "discard");
}

TEST_CASE("bob_decoder refuses an imperfect setting") {
  const Assemblage asm_ = make_assemblage(catalog::mix(), catalog::s1());
  CHECK_THROWS_AS(bob_decoder(asm_, "X"), NotPerfect);
  CHECK_THROWS_AS(bob_decoder(asm_, "no-such-setting"), Error);
}

TEST_CASE("rank-deficient rho_B: decoder lives on the support") {
  // Mix embedded into C² ⊗ C³ leaves ρ_B with a kernel direction
  Matrix rho = Matrix::Zero(6, 6);
  rho(0, 0) = 0.5;
  rho(4, 4) = 0.5;
  const BipartiteState st = validate_state(rho, 2, 3);
  const Assemblage asm_ = make_assemblage(st, catalog::s2());
  const BobDecoder dec = bob_decoder(asm_, "Z");
  CHECK(dec.support_basis.cols() == 2);
  CHECK(dec.pvm.dim() == 2);  // compressed coordinates
  CHECK(check_pvm(dec.pvm.projections).ok());
  CHECK(dec.decoding_defect < 1e-12);
}
