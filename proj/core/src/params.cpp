#include "shg/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shg/errors.hpp"

namespace shg {

Params Params::reduced(double alpha0, double beta0, double lambda, double mu, double sigma) {
  Params p;
  p.alpha0 = alpha0;
  p.beta0 = beta0;
  p.lambda = lambda;
  p.mu = mu;
  p.sigma = sigma;
  p.alpha = alpha0 - sigma;
  p.beta = beta0 - 2.0 * mu * sigma;
  p.validate();
  return p;
}

Params Params::physical(double alpha, double beta, double mu, double sigma, double lambda) {
  Params p;
  p.alpha = alpha;
  p.beta = beta;
  p.mu = mu;
  p.sigma = sigma;
  p.lambda = lambda;
  p.alpha0 = alpha + sigma;
  p.beta0 = beta + 2.0 * mu * sigma;
  p.validate();
  return p;
}

namespace {

void require(bool ok, const char* what, double value) {
  if (!ok) {
    std::ostringstream os;
    os << what << " (got " << value << ")";
    throw InvalidParameter(os.str());
  }
}

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

void Params::validate() const {
  for (double v : {alpha, beta, mu, sigma, alpha0, beta0, lambda}) {
    require(std::isfinite(v), "parameters must be finite", v);
  }
  require(mu > 0.0, "mu must be positive", mu);
  require(alpha0 > 0.0, "alpha0 = alpha + sigma must be positive", alpha0);
  require(beta0 > 0.0, "beta0 = beta + 2 mu sigma must be positive", beta0);
  require(lambda > 0.0, "lambda must be positive (constraint value lambda > 0)", lambda);
  require(close(alpha0, alpha + sigma), "alpha0 must equal alpha + sigma", alpha0);
  require(close(beta0, beta + 2.0 * mu * sigma), "beta0 must equal beta + 2 mu sigma", beta0);
}

}  // namespace shg
