#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sgames {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);

// Exact closed-form counts for two-class games on n players. All six values
// are evaluated independently and tied together by identities; a failed
// identity or non-exact division throws std::logic_error.
struct CountRecord {
  int n = 0;
  BigInt cases;        // staircase decompositions with r >= 2
  BigInt violations;   // decompositions whose classes cannot be separated
  BigInt r1_count;     // separated single-row pairs
  BigInt total_pairs;  // all separated pairs, both orderings of the sizes
  BigInt symmetric;    // pairs fixed by swapping the two classes
  BigInt bipartite;    // isomorphism classes with exactly two player classes
};

CountRecord closed_formulas(int n);

// Orbit count of a two-element group action: (total + fixed) / 2, exact.
// Throws std::invalid_argument on parity violation or fixed > total.
BigInt burnside_combine(const BigInt& total, const BigInt& fixed);

// Counts the swap-fixed pairs by direct summation over r and checks the
// result against the closed form. n must be even.
BigInt count_symmetric_direct(int n);

}  // namespace sgames
