#ifndef SNBOUND_EXAMPLES_HPP
#define SNBOUND_EXAMPLES_HPP

#include <string>
#include <vector>

#include "snbound/states.hpp"

namespace snbound::examples {

/// Built-in reference states with known Schmidt numbers, used by the
/// `paper-examples` subcommand and the acceptance suite. All amplitudes
/// are exact (1/sqrt(3), 1/2, 1/sqrt(7), 1/3, ...); nothing is loaded
/// from disk.

/// 12 x 12, four orthogonal members of Schmidt ranks 3, 2, 3, 2 on
/// disjoint diagonal blocks; Schmidt number exactly 3.
WeightedEnsemble rho1();

/// 12 x 12, three orthogonal members of Schmidt ranks 4, 3, 3;
/// Schmidt number exactly 4.
WeightedEnsemble rho2();

/// 3 x 9, rank 3, with a full-rank 9 x 9 stacked coefficient matrix;
/// Schmidt number exactly 3.
WeightedEnsemble rank3_on_3x9();

/// 5 x 5 uniform mixture of three Schmidt-rank-3 band states
/// (Schmidt number at most 3).
WeightedEnsemble locc_source();

/// 8 x 8 even mixture of a maximally entangled state and an orthogonal
/// Schmidt-rank-2 state (Schmidt number at least 4).
WeightedEnsemble locc_target();

struct ExampleCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// The four reference assertions: Schmidt numbers 3, 4, 3 and the LOCC
/// exclusion of the 5x5 -> 8x8 conversion.
std::vector<ExampleCheck> run_builtin_checks(const ToleranceConfig& tol);

}  // namespace snbound::examples

#endif
