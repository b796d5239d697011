#include "hypersing/mesh.hpp"

#include <string>

#include "hypersing/error.hpp"

namespace hypersing {

Mesh::Mesh(double a, double b, int n) : a_(a), b_(b), n_(n) {
  if (!(b > a)) {
    throw Error(ErrorCode::invalid_interval,
                "need b > a, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
  if (n < 2) throw Error(ErrorCode::invalid_size, "need n >= 2, got " + std::to_string(n));

  h_ = (b - a) / n;
  nodes_.resize(n + 1);
  colloc_.resize(n);
  for (int j = 0; j <= n; ++j) nodes_[j] = a + j * h_;
  nodes_[0] = a;
  nodes_[n] = b;
  for (int i = 1; i <= n; ++i) colloc_[i - 1] = a + (i - 0.5) * h_;
}

Mesh make_mesh(double a, double b, int n) { return Mesh(a, b, n); }

}  // namespace hypersing
