#pragma once

#include "ffam/exactfield/field.hpp"

#include <complex>
#include <string>

namespace ffam {

// Complex value of an element under zeta_n -> exp(2 pi i / n). The sum is
// carried at `precision` bits plus guard bits sized to the coefficients, then
// rounded once to double.
std::complex<double> embed(const FieldElement& e, unsigned precision = 128);

// Real part as a fixed-point decimal string with `digits` fractional digits.
std::string embed_decimal(const FieldElement& e, int digits, unsigned precision = 128);

// Correctly rounded trig helpers for the float geometry layer.
double tan_pi_d(long k, long N);
double cos_pi_d(long k, long N);
double sin_pi_d(long k, long N);

}  // namespace ffam
