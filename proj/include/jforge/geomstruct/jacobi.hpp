#pragma once

#include <variant>

#include "jforge/geomstruct/classify.hpp"
#include "jforge/geomstruct/contact.hpp"

namespace jforge {

struct JacobiPair {
  MultiVectorField Lambda;
  MultiVectorField E;
};

struct JacobiCheck {
  bool bracket_ok = false;
  bool invariance_ok = false;
  bool ok() const { return bracket_ok && invariance_ok; }
};

// Lambda(b, b') = d alpha(phi^{-1} b, phi^{-1} b'), E = phi^{-1}(alpha).
JacobiPair jacobi_from_contact(const ContactData& C);
// Lambda from inverting omega, E = Lambda^#(theta).
JacobiPair jacobi_from_lcs(const LCSPair& p);

// With the bracket convention used here the structure equation reads
// [Lambda, Lambda] + 2 E ^ Lambda = 0 alongside [Lambda, E] = 0.
JacobiCheck jacobi_check(const JacobiPair& P);

// {f,g} = Lambda(df,dg) + f E(g) - g E(f)
ScalarField jacobi_bracket(const JacobiPair& P, const ScalarField& f, const ScalarField& g);

// Lambda^#(df)
MultiVectorField jacobi_hamiltonian(const JacobiPair& P, const ScalarField& f);

using NondegJacobiStructure = std::variant<LCSPair, DifferentialForm>;

// Even dimension gives an lcs pair, odd dimension a contact form with Reeb field E.
// Throws DomainError when the characteristic distribution is not everything.
NondegJacobiStructure structure_from_nondeg_jacobi(const JacobiPair& P, Samples samples = {});

struct HamiltonianResiduals {
  MultiVectorField reeb_residual;     // [E, X_f] - X_{E f}
  MultiVectorField bracket_residual;  // [X_f, X_g] - (X_{f,g} - f X_{Eg} + g X_{Ef} - Lambda(df,dg) E)
  bool zero() const { return reeb_residual.is_zero() && bracket_residual.is_zero(); }
};

HamiltonianResiduals hamiltonian_relations_check(const JacobiPair& P, const ScalarField& f, const ScalarField& g);

}  // namespace jforge
