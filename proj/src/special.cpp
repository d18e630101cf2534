#include <nlcurve/special.hpp>

#include <cmath>

namespace nlcurve {

Sigma::Sigma(double value) : value_(value) {
    if (!(value > 0.0 && value < 1.0))
        throw ValidationError("sigma must lie in (0,1)");
}

namespace {

// Lentz continued fraction for the regularized incomplete beta ratio
// (Numerical Recipes betacf).  Converges in a handful of iterations for
// the parameters used here.
double betacf(double a, double b, double x) {
    const double fpmin = 1e-300;
    const double eps = 1e-16;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 400; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

} // namespace

double incomplete_beta(double z, double a, double b) {
    if (!(z >= 0.0 && z <= 1.0))
        throw ValidationError("incomplete_beta: z must lie in [0,1]");
    if (!(a > 0.0) || !(b > 0.0))
        throw ValidationError("incomplete_beta: a and b must be positive");
    if (z == 0.0) return 0.0;
    const double complete = std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
    if (z == 1.0) return complete;
    const double front = std::pow(z, a) * std::pow(1.0 - z, b);
    if (z < (a + 1.0) / (a + b + 2.0))
        return front * betacf(a, b, z) / a;
    return complete - front * betacf(b, a, 1.0 - z) / b;
}

double psi_sigma(double z, Sigma sigma) {
    if (std::fabs(z) > 1.0 + 1e-12)
        throw ValidationError("psi_sigma: |z| must be <= 1");
    if (z == 0.0) return 0.0;
    const double s = z > 0.0 ? 1.0 : -1.0;
    double zz = z * z;
    if (zz > 1.0) zz = 1.0;
    return 0.5 * s * incomplete_beta(zz, 0.5, (1.0 + sigma.value()) / 2.0);
}

double integral_sin_pow(double z, Sigma sigma) {
    const double pi = std::acos(-1.0);
    if (!(z >= -1e-12 && z <= pi + 1e-12))
        throw ValidationError("integral_sin_pow: z must lie in [0,pi]");
    return -psi_sigma(std::cos(z), sigma);
}

double integral_cos_pow(double z, Sigma sigma) {
    const double pi = std::acos(-1.0);
    if (!(z >= -pi / 2 - 1e-12 && z <= pi / 2 + 1e-12))
        throw ValidationError("integral_cos_pow: z must lie in [-pi/2,pi/2]");
    return psi_sigma(std::sin(z), sigma);
}

} // namespace nlcurve
