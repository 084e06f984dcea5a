#pragma once

#include "ffam/exactfield/field.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffam {

using Cplx = std::complex<double>;

struct ExactAtom {
  std::vector<FieldElement> vertices;
  FieldElement rho, t;   // T(z) = rho z + t
};

struct Atom {
  std::vector<Cplx> polygon;   // counterclockwise
  Cplx rho, t;
};

struct PiecewiseIsometry {
  std::string name;
  std::vector<Atom> atoms;
  std::vector<ExactAtom> exact;
};

class PwiError : public std::runtime_error {
 public:
  enum Kind { Boundary, Outside };
  PwiError(Kind k, const std::string& w) : std::runtime_error(w), kind(k) {}
  Kind kind;
};

PiecewiseIsometry goetz_pi5();
PiecewiseIsometry goetz_pi7();

// Index of the atom whose interior holds z; throws PwiError otherwise.
int pwi_atom(Cplx z, const PiecewiseIsometry& m, double tol = 1e-12);
Cplx pwi_step(Cplx z, const PiecewiseIsometry& m, double tol = 1e-12);

// z = t/(1 - rho)
FieldElement fixed_point(const ExactAtom& a);
bool strictly_inside(const FieldElement& z, const ExactAtom& a);
// Interiors of the exact images T_i(A_i), T_j(A_j) are disjoint.
bool images_disjoint(const PiecewiseIsometry& m, int i, int j);

}  // namespace ffam
