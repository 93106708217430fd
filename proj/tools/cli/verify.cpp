#include "verify.hpp"

#include <functional>
#include <sstream>

#include "genbell/coherent_states.hpp"
#include "genbell/dobinski.hpp"
#include "genbell/errata.hpp"
#include "genbell/generating_functions.hpp"
#include "genbell/measures.hpp"
#include "genbell/moment_analysis.hpp"
#include "genbell/normal_order.hpp"

namespace genbell::cli {

namespace {

using normal_order::bell_number;

class Suite {
 public:
  void run(const std::string& name, const std::function<std::string()>& body) {
    Check check{name, false, ""};
    try {
      check.detail = body();
      check.passed = check.detail.empty();
    } catch (const std::exception& e) {
      check.detail = std::string("exception: ") + e.what();
    }
    checks_.push_back(std::move(check));
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::string family(unsigned r, unsigned s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

}  // namespace

std::vector<Check> run_verification(Grid grid, const PrecisionContext& ctx) {
  const bool full = grid == Grid::Full;
  Suite suite;

  suite.run("golden_b96", [&]() -> std::string {
    const char* golden[] = {"1", "207775", "566828686621", "9011375448568566265"};
    for (unsigned n = 1; n <= 4; ++n) {
      const BigInt want(golden[n - 1]);
      if (bell_number(FamilyParams(9, 6), n) != want) return "exact path differs at n=" + std::to_string(n);
      const IntegerRecovery rec = dobinski::dobinski_integer(FamilyParams(9, 6), n, ctx);
      if (!rec.certain || rec.value != want) return "series path differs at n=" + std::to_string(n);
    }
    return std::string();
  });

  suite.run("stirling_vs_fock", [&]() -> std::string {
    const unsigned max_n = full ? 4 : 3;
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned s = 1; s <= r; ++s)
        for (unsigned n = 0; n <= max_n; ++n) {
          const FamilyParams p(r, s);
          if (normal_order::stirling_table(p, n) != normal_order::fock_oracle(p, n, n * (r + s) + 2))
            return "mismatch at " + family(r, s) + " n=" + std::to_string(n);
        }
    return std::string();
  });

  suite.run("bell_vs_dobinski", [&]() -> std::string {
    const unsigned max_r = full ? 4 : 3;
    const unsigned max_n = full ? 6 : 5;
    for (unsigned r = 1; r <= max_r; ++r)
      for (unsigned s = 1; s <= r; ++s)
        for (unsigned n = 1; n <= max_n; ++n) {
          const FamilyParams p(r, s);
          const IntegerRecovery rec = dobinski::dobinski_integer(p, n, ctx);
          if (!rec.certain || rec.value != bell_number(p, n))
            return "mismatch at " + family(r, s) + " n=" + std::to_string(n);
        }
    return std::string();
  });

  suite.run("closed_forms", [&]() -> std::string {
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned n = 1; n <= (full ? 6U : 4U); ++n) {
        const auto table = normal_order::stirling_table(FamilyParams(r, r), n);
        for (unsigned k = r; k <= r * n; ++k)
          if (normal_order::stirling_rr_closed(r, n, k) != table.at(k))
            return "alternating sum differs at r=" + std::to_string(r) + " n=" + std::to_string(n);
      }
    for (unsigned n = 1; n <= (full ? 12U : 8U); ++n) {
      const auto table = normal_order::stirling_table(FamilyParams(2, 1), n);
      for (unsigned k = 1; k <= n; ++k)
        if (normal_order::lah_number(n, k) != table.at(k)) return "Lah differs at n=" + std::to_string(n);
    }
    return std::string();
  });

  suite.run("egf_identity", [&]() -> std::string {
    const unsigned max_n = full ? 15 : 10;
    for (unsigned r : {2U, 3U}) {
      const auto values = generating_functions::egf_coefficients(r, max_n).egf_values();
      for (unsigned n = 0; n <= max_n; ++n)
        if (values[n] != Rational(bell_number(FamilyParams(r, 1), n)))
          return "EGF differs at r=" + std::to_string(r) + " n=" + std::to_string(n);
    }
    const auto classical = generating_functions::classical_egf_check(12).egf_values();
    for (unsigned n = 0; n <= 12; ++n)
      if (classical[n] != Rational(bell_number(FamilyParams(1, 1), n))) return "classical EGF differs";
    return std::string();
  });

  suite.run("moments", [&]() -> std::string {
    struct Case {
      unsigned r, s, max_n;
    };
    const std::vector<Case> cases = full ? std::vector<Case>{{2, 1, 10}, {3, 1, 6}, {4, 2, 6}, {5, 2, 4}}
                                         : std::vector<Case>{{2, 1, 4}, {3, 1, 4}, {4, 2, 4}, {5, 2, 3}};
    for (const Case& c : cases) {
      const auto spec = measures::WeightSpec::for_family(FamilyParams(c.r, c.s));
      for (const auto& rep : measures::moment_quadrature_batch(spec, c.max_n, ctx))
        if (!(rep.relative_error <= 1e-8))
          return "quadrature off at " + family(c.r, c.s) + " n=" + std::to_string(rep.n);
    }
    for (unsigned r = 1; r <= (full ? 3U : 2U); ++r)
      for (unsigned n = 1; n <= (full ? 6U : 4U); ++n) {
        const ApproxValue m = measures::comb_moment(r, n, ctx);
        const Real exact(bell_number(FamilyParams(r, r), n));
        if (!(abs(m.value - exact) / exact < Real(1e-25)))
          return "comb moment off at r=" + std::to_string(r) + " n=" + std::to_string(n);
      }
    return std::string();
  });

  suite.run("hankel_positivity", [&]() -> std::string {
    const unsigned max_r = full ? 4 : 3;
    const unsigned max_order = full ? 8 : 5;
    for (unsigned r = 1; r <= max_r; ++r)
      for (unsigned s = 1; s <= r; ++s) {
        const auto seq = normal_order::bell_sequence(FamilyParams(r, s), 2 * max_order);
        for (unsigned order = 1; order <= max_order; ++order) {
          const auto h = moment_analysis::hankel_determinants(seq, order);
          if (h.det0 <= 0 || h.det1 <= 0)
            return "non-positive determinant at " + family(r, s) + " order " + std::to_string(order);
        }
      }
    return std::string();
  });

  suite.run("matrix_element", [&]() -> std::string {
    PrecisionScope scope(ctx.precision_bits);
    for (unsigned r : {2U, 3U})
      for (double lambda : {0.01, 0.05, 0.1})
        for (const Complex& z : {Complex(0.5, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.5)}) {
          const auto check = generating_functions::matrix_element_exp(r, Real(lambda), z, 16, ctx);
          if (!(check.relative_difference <= 1e-10)) {
            std::ostringstream os;
            os << "closed form and Fock sum differ by " << check.relative_difference << " at r=" << r
               << " lambda=" << lambda;
            return os.str();
          }
        }
    return std::string();
  });

  suite.run("asymptotics_b21", [&]() -> std::string {
    double previous = 1.0;
    for (unsigned n : {50U, 100U, 200U, 400U}) {
      const double gap = std::abs(moment_analysis::asymptotic_b21(n, ctx).ratio.to_double() - 1.0);
      if (n == 100 && !(gap < 0.02)) return "ratio at n=100 is outside 2%";
      if (!(gap < previous)) return "no improvement at n=" + std::to_string(n);
      previous = gap;
    }
    return std::string();
  });

  suite.run("asymptotics_b31_trend", [&]() -> std::string {
    double previous = 1.0;
    for (unsigned n : {50U, 100U, 200U, 400U}) {
      const double gap = std::abs(moment_analysis::asymptotic_b31(n, ctx).ratio.to_double() - 1.0);
      if (!(gap < previous)) return "no improvement at n=" + std::to_string(n);
      previous = gap;
    }
    return std::string();
  });

  suite.run("coherent_states", [&]() -> std::string {
    PrecisionScope scope(ctx.precision_bits);
    for (auto [r, s] : {std::pair{2U, 1U}, {3U, 1U}, {4U, 2U}}) {
      const coherent_states::CoherentFamily fam(FamilyParams(r, s));
      const auto state = coherent_states::state_coefficients(fam, Complex(1.0, 0.0), 40, ctx);
      if (!(abs(state.norm_squared() - Real(1)) <= Real(1e-12))) return "state not normalized at " + family(r, s);
      if (!full && r != 2) continue;
      for (const auto& rep : coherent_states::resolution_check_batch(fam, full ? 6 : 3, ctx)) {
        if (!(rep.moment.relative_error <= 1e-8)) return "resolution off at " + family(r, s);
        if (!rep.reconstructed_positive) return "reconstructed weight not positive at " + family(r, s);
      }
    }
    return std::string();
  });

  suite.run("errata_ledger", [&]() -> std::string {
    if (errata().size() != 4) return std::string("expected four errata");
    for (const Erratum& e : errata())
      if (e.test_id.empty() || e.resolution.empty()) return "incomplete erratum " + std::string(e.id);
    return std::string();
  });

  return suite.take();
}

}  // namespace genbell::cli
