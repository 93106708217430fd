#include "genbell/moment_analysis.hpp"

#include <string>
#include <utility>

namespace genbell::moment_analysis {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "determinant needs a square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt value = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        m[i][j] = std::move(value);
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

HankelReport hankel_determinants(const normal_order::BellSequence& seq, unsigned order) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "Hankel order starts at 1");
  if (seq.size() < 2 * static_cast<std::size_t>(order)) {
    throw Error(ErrorCode::InsufficientSequence, "Hankel order " + std::to_string(order) + " needs " +
                                                     std::to_string(2 * order) + " sequence entries");
  }
  std::vector<std::vector<BigInt>> h0(order, std::vector<BigInt>(order));
  std::vector<std::vector<BigInt>> h1(order, std::vector<BigInt>(order));
  for (unsigned i = 0; i < order; ++i) {
    for (unsigned j = 0; j < order; ++j) {
      h0[i][j] = seq[i + j];
      h1[i][j] = seq[i + j + 1];
    }
  }
  return {seq.params(), order, bareiss_determinant(std::move(h0)), bareiss_determinant(std::move(h1))};
}

namespace {

Real log_of(const BigInt& v) { return log(Real(v)); }

AsymptoticReport make_report(unsigned n, const FamilyParams& params, const Real& log_prefactor,
                             const Real& leading, const Real& subleading, const Real& log_growth) {
  AsymptoticReport out;
  out.n = n;
  out.exact = normal_order::bell_number(params, n);
  const Real log_exact = log_of(out.exact);
  const Real log_asymptotic = log_prefactor + log(leading + subleading) + log_growth;
  out.asymptotic = exp(log_asymptotic);
  out.ratio = exp(log_exact - log_asymptotic);
  out.leading_only_ratio = exp(log_exact - log_prefactor - log(leading) - log_growth);
  return out;
}

void require_n(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "asymptotic reports need n >= 1");
}

}  // namespace

AsymptoticReport asymptotic_b21(unsigned n, const PrecisionContext& ctx) {
  require_n(n);
  ctx.validate();
  PrecisionScope scope(ctx.precision_bits);
  const Real nn(n);
  const Real log_prefactor = -log(Real(2) * const_e()) / Real(2);
  const Real leading = pow(nn, Real(-0.25));
  const Real subleading = pow(nn, Real(-0.75)) / Real(12);
  const Real log_growth = nn * log(nn) - nn + Real(2) * sqrt(nn);
  return make_report(n, FamilyParams(2, 1), log_prefactor, leading, subleading, log_growth);
}

AsymptoticReport asymptotic_b31(unsigned n, const PrecisionContext& ctx) {
  require_n(n);
  ctx.validate();
  PrecisionScope scope(ctx.precision_bits);
  const Real nn(n);
  const Real two_n = Real(2) * nn;
  const Real third = Real(1) / Real(3);
  const Real log_prefactor = log(Real(2)) / Real(6) - log(Real(3)) / Real(2) - Real(1);
  const Real leading = pow(nn, -third);
  const Real subleading = pow(Real(2), Real(-3) / Real(7)) * pow(nn, Real(-2) * third);
  const Real log_growth = nn * log(two_n) - nn + Real(1.5) * pow(two_n, third);
  return make_report(n, FamilyParams(3, 1), log_prefactor, leading, subleading, log_growth);
}

}  // namespace genbell::moment_analysis
