#pragma once

#include <optional>
#include <vector>

#include "crn/interval.hpp"
#include "crn/rational.hpp"

namespace crn {

using QMatrix = std::vector<std::vector<Rational>>;
using IMatrix = std::vector<std::vector<int>>;

QMatrix to_rational(const IMatrix& m);

// In-place reduced row echelon form; returns the pivot column indices in order.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);
int rank(const IMatrix& m);

// RREF basis of {w : w M = 0}, one row per kernel dimension.
QMatrix left_nullspace_rref(const QMatrix& m);

Rational det(QMatrix m);

// Inverse via Gauss-Jordan; nullopt if singular.
std::optional<QMatrix> inverse(const QMatrix& m);

// Determinant of an interval matrix by cofactor expansion (n <= 4 scale).
Interval interval_det(const std::vector<std::vector<Interval>>& m);

}  // namespace crn
