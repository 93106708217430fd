#include "genbell/normal_order.hpp"

#include <string>
#include <utility>

namespace genbell::normal_order {

BigInt falling_factorial(unsigned long p, unsigned s) {
  if (p < s) return 0;
  BigInt out = 1;
  for (unsigned i = 0; i < s; ++i) out *= p - i;
  return out;
}

BigInt monomial_coefficient(const FamilyParams& params, unsigned n, unsigned long m) {
  BigInt out = 1;
  for (unsigned j = 0; j < n && out != 0; ++j) {
    out *= falling_factorial(m + static_cast<unsigned long>(j) * params.shift(), params.s());
  }
  return out;
}

StirlingTable::StirlingTable(FamilyParams params, unsigned n, unsigned min_k, std::vector<BigInt> entries)
    : params_(params), n_(n), min_k_(min_k), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::InvalidArgument, "StirlingTable needs at least one entry");
}

BigInt StirlingTable::at(unsigned k) const {
  if (k < min_k_ || k > max_k()) return 0;
  return entries_[k - min_k_];
}

BigInt StirlingTable::row_sum() const {
  BigInt sum = 0;
  for (const auto& e : entries_) sum += e;
  return sum;
}

StirlingTable stirling_table(const FamilyParams& params, unsigned n) {
  if (n == 0) return StirlingTable(params, 0, 0, {BigInt(1)});

  const unsigned top = n * params.s();
  std::vector<BigInt> solved(top + 1);
  BigInt m_factorial = 1;
  for (unsigned m = 0; m <= top; ++m) {
    if (m > 0) m_factorial *= m;
    // residual = c(m) - sum_{k<m} S(k) ff(m,k); ff(m,k) built up incrementally.
    BigInt residual = monomial_coefficient(params, n, m);
    BigInt ff = 1;
    for (unsigned k = 0; k < m; ++k) {
      if (solved[k] != 0) residual -= solved[k] * ff;
      ff *= m - k;
    }
    if (!mpz_divisible_p(residual.get_mpz_t(), m_factorial.get_mpz_t())) {
      throw Error(ErrorCode::NonIntegralSolve, "inexact division at m = " + std::to_string(m) +
                                                   " for " + to_string(params) + ", n = " + std::to_string(n));
    }
    mpz_divexact(solved[m].get_mpz_t(), residual.get_mpz_t(), m_factorial.get_mpz_t());
  }
  for (unsigned k = 0; k < params.s(); ++k) {
    if (solved[k] != 0) {
      throw Error(ErrorCode::NonIntegralSolve, "nonzero coefficient below k = s");
    }
  }
  std::vector<BigInt> entries(solved.begin() + params.s(), solved.end());
  return StirlingTable(params, n, params.s(), std::move(entries));
}

BigInt bell_number(const FamilyParams& params, unsigned n) { return stirling_table(params, n).row_sum(); }

BellSequence::BellSequence(FamilyParams params, std::vector<BigInt> values)
    : params_(params), values_(std::move(values)) {}

BellSequence bell_sequence(const FamilyParams& params, unsigned max_n) {
  std::vector<BigInt> values;
  values.reserve(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) values.push_back(bell_number(params, n));
  return BellSequence(params, std::move(values));
}

BigInt stirling_rr_closed(unsigned r, unsigned n, unsigned k) {
  if (r == 0 || k < r || k > r * n) {
    throw Error(ErrorCode::OutOfRange, "stirling_rr_closed needs r <= k <= r n");
  }
  Rational sum = 0;
  BigInt p_factorial = 1;
  for (unsigned p = 0; p <= k - r; ++p) {
    if (p > 0) p_factorial *= p;
    const unsigned q = k - p;
    BigInt power;
    const BigInt base = falling_factorial(q, r);
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), n);
    BigInt q_factorial;
    mpz_fac_ui(q_factorial.get_mpz_t(), q);
    Rational term(power, q_factorial * p_factorial);
    term.canonicalize();
    if (p % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum.get_den() != 1) {
    throw Error(ErrorCode::NonIntegralResult, "closed form produced a non-integer");
  }
  return sum.get_num();
}

BigInt lah_number(unsigned n, unsigned k) {
  if (k < 1 || k > n) throw Error(ErrorCode::OutOfRange, "lah_number needs 1 <= k <= n");
  BigInt n_fact;
  BigInt k_fact;
  BigInt binom;
  mpz_fac_ui(n_fact.get_mpz_t(), n);
  mpz_fac_ui(k_fact.get_mpz_t(), k);
  mpz_bin_uiui(binom.get_mpz_t(), n - 1, k - 1);
  return n_fact / k_fact * binom;
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix zero_matrix(unsigned dim) { return Matrix(dim, std::vector<BigInt>(dim, BigInt(0))); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t dim = a.size();
  Matrix out = zero_matrix(static_cast<unsigned>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t l = 0; l < dim; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[l][j] != 0) out[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return out;
}

Matrix power(const Matrix& base, unsigned e, unsigned dim) {
  Matrix out = zero_matrix(dim);
  for (unsigned i = 0; i < dim; ++i) out[i][i] = 1;
  for (unsigned i = 0; i < e; ++i) out = multiply(out, base);
  return out;
}

// Solves the square system a x = b over the rationals by Gauss-Jordan
// elimination with row pivoting.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t size = a.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) throw Error(ErrorCode::NonIntegralSolve, "singular falling-factorial system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < size; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(size);
  for (std::size_t i = 0; i < size; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

StirlingTable fock_oracle(const FamilyParams& params, unsigned n, unsigned dim) {
  const unsigned r = params.r();
  const unsigned s = params.s();
  const unsigned shift = params.shift();
  if (n == 0) return StirlingTable(params, 0, 0, {BigInt(1)});
  if (dim < n * s + n * shift + n * s) {
    throw Error(ErrorCode::TruncationTooSmall,
                "dimension " + std::to_string(dim) + " too small for n = " + std::to_string(n));
  }

  // Basis g_m = sqrt(m!) |m>: a^dagger g_m = g_{m+1}, a g_m = m g_{m-1}.
  // Matrix convention: column = input state, row = output state.
  Matrix create = zero_matrix(dim);
  Matrix annihilate = zero_matrix(dim);
  for (unsigned m = 0; m + 1 < dim; ++m) create[m + 1][m] = 1;
  for (unsigned m = 1; m < dim; ++m) annihilate[m - 1][m] = m;

  const Matrix word = multiply(power(create, r, dim), power(annihilate, s, dim));
  const Matrix full = power(word, n, dim);

  const unsigned top = n * s;
  std::vector<Rational> rhs(top + 1);
  for (unsigned m = 0; m <= top; ++m) {
    for (unsigned row = 0; row < dim; ++row) {
      if (row != m + n * shift && full[row][m] != 0) {
        throw Error(ErrorCode::TruncationTooSmall, "operator does not shift occupation uniformly");
      }
    }
    rhs[m] = full[m + n * shift][m];
  }

  // <m + n(r-s)| . |m> in this basis equals sum_k S(n,k) m!/(m-k)!.
  std::vector<BigInt> factorial(top + 1, BigInt(1));
  for (unsigned i = 1; i <= top; ++i) factorial[i] = factorial[i - 1] * i;
  std::vector<std::vector<Rational>> system(top + 1, std::vector<Rational>(top + 1));
  for (unsigned m = 0; m <= top; ++m) {
    for (unsigned k = 0; k <= m; ++k) system[m][k] = Rational(factorial[m] / factorial[m - k]);
  }
  const std::vector<Rational> solution = solve_rational(std::move(system), std::move(rhs));

  std::vector<BigInt> entries;
  for (unsigned k = 0; k <= top; ++k) {
    if (solution[k].get_den() != 1) throw Error(ErrorCode::NonIntegralSolve, "oracle produced a fraction");
    if (k < s) {
      if (solution[k] != 0) throw Error(ErrorCode::NonIntegralSolve, "oracle coefficient below k = s");
      continue;
    }
    entries.push_back(solution[k].get_num());
  }
  return StirlingTable(params, n, s, std::move(entries));
}

}  // namespace genbell::normal_order
