#include "genbell/coherent_states.hpp"

#include <string>

#include "genbell/normal_order.hpp"

namespace genbell::coherent_states {

CoherentFamily::CoherentFamily(FamilyParams params, unsigned table_size) : params_(params) {
  const normal_order::BellSequence seq = normal_order::bell_sequence(params_, table_size);
  table_.assign(seq.values().begin(), seq.values().end());
}

BigInt CoherentFamily::rho(unsigned n) const {
  if (n < table_.size()) return table_[n];
  return normal_order::bell_number(params_, n);
}

ApproxValue normalization(const CoherentFamily& family, const Real& x, const PrecisionContext& ctx) {
  if (x.sign() < 0) throw Error(ErrorCode::InvalidArgument, "normalization needs x >= 0");
  PrecisionScope scope(ctx.precision_bits);
  Real power(1);
  // Term ratios x rho(n) / rho(n+1) decrease because rho is log-convex.
  return sum_series(
      [&](std::size_t n) {
        if (n > 0) power *= x;
        return power / Real(family.rho(static_cast<unsigned>(n)));
      },
      ctx);
}

Real StateVector::norm_squared() const {
  Real acc;
  for (const Complex& c : coefficients) acc += c.norm();
  return acc;
}

StateVector state_coefficients(const CoherentFamily& family, const Complex& z, unsigned cutoff,
                               const PrecisionContext& ctx, double tolerance) {
  PrecisionScope scope(ctx.precision_bits);
  const Real x = z.norm();
  const ApproxValue total = normalization(family, x, ctx);
  StateVector out;
  out.z = z;
  out.cutoff = cutoff;
  const Real scale = Real(1) / sqrt(total.value);
  Complex power(Real(1));
  Real kept;
  for (unsigned n = 0; n <= cutoff; ++n) {
    const Real root = sqrt(Real(family.rho(n)));
    out.coefficients.push_back(power * (scale / root));
    kept += pow(x, static_cast<long>(n)) / Real(family.rho(n));
    power = power * z;
  }
  out.truncated_weight = max(Real(0), (total.value - kept) / total.value) + total.error_bound / total.value;
  if (out.truncated_weight > Real(tolerance)) {
    throw Error(ErrorCode::TruncationTooSmall, "cutoff " + std::to_string(cutoff) + " leaves weight " +
                                                   out.truncated_weight.to_string(3) + " beyond it");
  }
  return out;
}

ComplexApprox overlap(const CoherentFamily& family, const Complex& z, const Complex& w, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx.precision_bits);
  const ApproxValue nz = normalization(family, z.norm(), ctx);
  const ApproxValue nw = normalization(family, w.norm(), ctx);
  const Complex product = z.conj() * w;
  Complex power(Real(1));
  ComplexApprox sum = sum_complex_series(
      [&](std::size_t n) {
        if (n > 0) power *= product;
        return power / Real(family.rho(static_cast<unsigned>(n)));
      },
      ctx, {.require_positive = false});
  const Real scale = Real(1) / sqrt(nz.value * nw.value);
  ComplexApprox out;
  out.value = sum.value * scale;
  // d(1/sqrt(ab)) = -(1/2) (da/a + db/b) / sqrt(ab)
  const Real relative = (nz.error_bound / nz.value + nw.error_bound / nw.value) / Real(2);
  out.error_bound = sum.error_bound * scale + out.value.abs() * (relative + Real(8) * epsilon());
  out.rigorous = sum.rigorous && nz.rigorous && nw.rigorous;
  return out;
}

namespace {

measures::WeightSpec continuous_weight(const CoherentFamily& family) {
  try {
    measures::WeightSpec spec = measures::WeightSpec::for_family(family.params());
    if (spec.continuous()) return spec;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedKind) throw;
  }
  throw Error(ErrorCode::UnsupportedFamily,
              "no continuous weight is known for " + to_string(family.params()));
}

std::vector<std::pair<double, ApproxValue>> reconstruct(const CoherentFamily& family,
                                                        const measures::WeightSpec& spec,
                                                        const PrecisionContext& ctx, bool& positive) {
  PrecisionScope scope(ctx.precision_bits);
  std::vector<std::pair<double, ApproxValue>> out;
  positive = true;
  for (double x : {0.1, 1.0, 10.0}) {
    const Real xr(x);
    const ApproxValue w = measures::eval_weight(spec, xr, ctx);
    const ApproxValue n = normalization(family, xr, ctx);
    ApproxValue value = scaled(w * n, Real(1) / const_pi());
    if (!(value.value - value.error_bound > Real(0))) positive = false;
    out.emplace_back(x, std::move(value));
  }
  return out;
}

}  // namespace

std::vector<ResolutionReport> resolution_check_batch(const CoherentFamily& family, unsigned max_n,
                                                     const PrecisionContext& ctx,
                                                     const measures::QuadratureOptions& options) {
  const measures::WeightSpec spec = continuous_weight(family);
  bool positive = false;
  const auto samples = reconstruct(family, spec, ctx, positive);
  std::vector<ResolutionReport> out;
  for (measures::MomentReport& m : measures::moment_quadrature_batch(spec, max_n, ctx, options)) {
    out.push_back({std::move(m), samples, positive});
  }
  return out;
}

ResolutionReport resolution_check(const CoherentFamily& family, unsigned n, const PrecisionContext& ctx,
                                  const measures::QuadratureOptions& options) {
  const measures::WeightSpec spec = continuous_weight(family);
  bool positive = false;
  auto samples = reconstruct(family, spec, ctx, positive);
  return {measures::moment_quadrature(spec, n, ctx, options), std::move(samples), positive};
}

}  // namespace genbell::coherent_states
