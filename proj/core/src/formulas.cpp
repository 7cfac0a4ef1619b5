#include "sgames/formulas.hpp"

#include <stdexcept>
#include <string>

namespace sgames {

namespace {

BigInt pow2(int e) { return BigInt{1} << e; }

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (a % b != 0) {
    throw std::logic_error(std::string("non-exact division while evaluating ") + what);
  }
  return a / b;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out = exact_div(out * (n - k + i), i, "binomial");
  }
  return out;
}

CountRecord closed_formulas(int n) {
  if (n < 2) throw std::invalid_argument("count formulas require at least two players");

  CountRecord rec;
  rec.n = n;
  rec.cases = pow2(n + 2) - binomial(n + 3, 1) - binomial(n + 3, 3);

  // Violation count three ways: summed per row count, the parity-split
  // closed form, and the square. They must agree.
  BigInt per_r = 0;
  for (int r = 2; r <= n / 2 + 1; ++r) {
    const int a = n + 2 - 2 * r;
    per_r += (a == 0) ? BigInt{1} : BigInt{4} * a;
  }
  const int half = n / 2;
  BigInt split = BigInt{4} * (n - half - 1) * half;
  if (n % 2 == 0) split += 1;
  BigInt square = BigInt{n - 1} * (n - 1);
  if (per_r != split || split != square) {
    throw std::logic_error("violation-count formulas disagree");
  }
  rec.violations = square;

  rec.r1_count = exact_div(BigInt{n} * n * n + BigInt{6} * n * n - BigInt{13} * n + 6, 6,
                           "single-row count");

  rec.total_pairs = pow2(n + 2) - BigInt{n} * n - BigInt{3} * n - 4;
  if (rec.total_pairs != rec.cases - rec.violations + rec.r1_count) {
    throw std::logic_error("pair-count identity failed");
  }

  if (n % 2 == 1) {
    rec.symmetric = 0;
  } else {
    const int m = n / 2;
    rec.symmetric = pow2(m + 1) - BigInt{2} * m - 2;
  }

  rec.bipartite = burnside_combine(rec.total_pairs, rec.symmetric);
  BigInt closed = (n % 2 == 1)
                      ? pow2(n + 1) - exact_div(BigInt{n} * n + BigInt{3} * n + 4, 2,
                                                "odd-count closed form")
                      : pow2(n + 1) + pow2(n / 2) -
                            exact_div(BigInt{n} * n + BigInt{4} * n + 6, 2,
                                      "even-count closed form");
  if (closed != rec.bipartite) {
    throw std::logic_error("two-class closed form disagrees with the orbit average");
  }
  return rec;
}

BigInt burnside_combine(const BigInt& total, const BigInt& fixed) {
  if (fixed < 0 || fixed > total) {
    throw std::invalid_argument("fixed count must lie in 0..total");
  }
  if ((total + fixed) % 2 != 0) {
    throw std::invalid_argument("orbit average needs total+fixed even");
  }
  return (total + fixed) / 2;
}

BigInt count_symmetric_direct(int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("direct symmetric count requires even n >= 2");
  }
  const int m = n / 2;

  // Swap-fixed staircases have mirrored coordinates, leaving m+1-r free
  // weight split over r+1 slots.
  BigInt solutions = 0;
  for (int r = 2; r <= m + 1; ++r) solutions += binomial(m + 1, r);

  BigInt violated = 0;
  for (int r = 2; r <= m + 1; ++r) violated += (r <= m) ? 2 : 1;

  BigInt single_row = m - 1;  // equal sizes, equal entries, both corners excluded

  BigInt direct = solutions - violated + single_row;
  if (direct != pow2(m + 1) - BigInt{2} * m - 2) {
    throw std::logic_error("symmetric counts disagree");
  }
  return direct;
}

}  // namespace sgames
