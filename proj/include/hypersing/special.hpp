#pragma once

namespace hypersing {

/// Cosine integral Ci(z) = -int_z^inf cos(t)/t dt for z > 0.
/// Power series up to z = 4, continued fraction for E1(iz) beyond.
double cosine_integral(double z);

}  // namespace hypersing
