#pragma once

#include <nlcurve/errors.hpp>

namespace nlcurve {

// Fractional order sigma in (0,1).
class Sigma {
  public:
    explicit Sigma(double value);
    double value() const { return value_; }

  private:
    double value_;
};

// Incomplete beta function  beta_z(a,b) = int_0^z u^(a-1) (1-u)^(b-1) du
// (unregularized), evaluated by continued fraction.  Absolute error <= 1e-12
// for the parameter ranges used here (a = 1/2, b = (1+sigma)/2).
double incomplete_beta(double z, double a, double b);

// Psi_sigma(z) = (1/2) sgn(z) beta_{z^2}(1/2, (1+sigma)/2), odd extension to [-1,1].
double psi_sigma(double z, Sigma sigma);

// int_{pi/2}^{z} sin^sigma(t) dt  for z in [0,pi], via -Psi_sigma(cos z).
double integral_sin_pow(double z, Sigma sigma);

// int_0^z cos^sigma(t) dt  for z in [-pi/2,pi/2], via Psi_sigma(sin z).
double integral_cos_pow(double z, Sigma sigma);

} // namespace nlcurve
