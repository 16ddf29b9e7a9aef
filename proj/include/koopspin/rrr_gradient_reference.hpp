#pragma once

// Projected-gradient reference minimizer for the reduced-rank ridge
// objective. Deliberately independent of the closed-form solver in
// koopman.cpp; used only to cross-check its optimality.

#include "koopspin/operator_algebra.hpp"

namespace koopspin {

// Best objective over `n_starts` random starts (plus the zero start) of
// projected gradient descent on (1/n)||Y - T X||_F^2 + reg ||T||_F^2 with
// rank(T) <= rank. Deterministic for a fixed seed.
double rrr_pgd_best_objective(const RealMatrix& x, const RealMatrix& y, int rank, double reg,
                              int n_starts, unsigned seed);

}  // namespace koopspin
