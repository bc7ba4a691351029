#pragma once

#include <vector>

#include "mukade/scalar.hpp"

namespace mukade {

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;

Matrix identity(size_t n);
Matrix transpose(const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);
Vec matvec(const Matrix& a, const Vec& x);
// throws std::domain_error on a singular matrix
Matrix inverse(const Matrix& a);
Vec solve(const Matrix& a, const Vec& b);
Scalar determinant(const Matrix& a);

}  // namespace mukade
