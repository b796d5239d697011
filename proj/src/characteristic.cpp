#include "hypersing/characteristic.hpp"

namespace hypersing {

DenseMatrix<double> assemble_characteristic(const Mesh& mesh) {
  const int n = mesh.n();
  const auto& t = mesh.nodes();
  DenseMatrix<double> m(n, n);
  for (int i = 1; i <= n; ++i) {
    const double x = mesh.colloc(i);
    for (int j = 1; j <= n; ++j) m(i - 1, j - 1) = 1.0 / (x - t[j]) - 1.0 / (x - t[j - 1]);
  }
  return m;
}

double characteristic_determinant_closed_form(const Mesh& mesh) {
  const int n = mesh.n();
  if (n > 12) {
    throw Error(ErrorCode::size_limit_exceeded,
                "closed-form determinant limited to n <= 12, got " + std::to_string(n));
  }
  const auto& t = mesh.nodes();
  const auto x = [&](int i) { return mesh.colloc(i); };

  double prefactor = 1.0;
  for (int j = 1; j <= n; ++j) prefactor *= (t[j] - t[0]) / (x(j) - t[0]);

  double numerator = 1.0;
  for (int q = 1; q <= n; ++q)
    for (int p = q + 1; p <= n; ++p) numerator *= (t[q] - t[p]) * (x(p) - x(q));

  double denominator = 1.0;
  for (int q = 1; q <= n; ++q)
    for (int p = 1; p <= n; ++p) denominator *= x(q) - t[p];

  return prefactor * numerator / denominator;
}

}  // namespace hypersing
