#include <boost/multiprecision/cpp_int.hpp>

#include "snap/error.hpp"
#include "snap/synthetic/synthetic.hpp"

namespace snap::synthetic {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

double expected_possible_ancestors(std::size_t n_vertices, std::size_t n_targets) {
  if (n_targets < 1 || n_targets > n_vertices) {
    throw Error(Errc::InvalidQuery, "need 1 <= n_targets <= n_vertices");
  }
  cpp_int numerator = 0;
  for (std::size_t i = n_targets; i <= n_vertices; ++i) numerator += i * binomial(i - 1, n_targets - 1);
  const cpp_rational mean(numerator, binomial(n_vertices, n_targets));
  return mean.convert_to<double>();
}

}  // namespace snap::synthetic
