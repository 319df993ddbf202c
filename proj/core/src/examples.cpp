#include "snbound/examples.hpp"

#include <cmath>
#include <initializer_list>
#include <sstream>
#include <utility>

#include "snbound/bounds.hpp"

namespace snbound::examples {

namespace {

// 1-based |i,j> positions, one shared amplitude
PureState uniform_terms(Index m, Index n,
                        std::initializer_list<std::pair<Index, Index>> terms) {
  ComplexMatrix A = ComplexMatrix::Zero(m, n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(terms.size()));
  for (auto [i, j] : terms) A(i - 1, j - 1) = amp;
  return PureState(A);
}

}  // namespace

WeightedEnsemble rho1() {
  return WeightedEnsemble(
      12, 12,
      {{0.25, uniform_terms(12, 12, {{1, 1}, {2, 2}, {3, 3}})},
       {0.25, uniform_terms(12, 12, {{4, 4}, {5, 5}})},
       {0.25, uniform_terms(12, 12, {{7, 7}, {8, 8}, {9, 9}})},
       {0.25, uniform_terms(12, 12, {{11, 11}, {12, 12}})}});
}

WeightedEnsemble rho2() {
  const double third = 1.0 / 3.0;
  return WeightedEnsemble(
      12, 12,
      {{third, uniform_terms(12, 12, {{1, 1}, {2, 2}, {3, 3}, {4, 4}})},
       {third, uniform_terms(12, 12, {{5, 5}, {6, 6}, {7, 7}})},
       {third, uniform_terms(12, 12, {{10, 10}, {11, 11}, {12, 12}})}});
}

WeightedEnsemble rank3_on_3x9() {
  const double third = 1.0 / 3.0;
  return WeightedEnsemble(
      3, 9,
      {{third, uniform_terms(3, 9,
                             {{1, 1}, {1, 2}, {1, 3}, {1, 5}, {1, 7},
                              {2, 2}, {2, 8}, {3, 3}, {3, 9}})},
       {third, uniform_terms(3, 9,
                             {{1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 7},
                              {3, 6}, {3, 9}})},
       {third, uniform_terms(3, 9, {{1, 7}, {1, 9}, {2, 8}, {3, 9}})}});
}

WeightedEnsemble locc_source() {
  const double third = 1.0 / 3.0;
  std::vector<WeightedEnsemble::Member> members;
  for (Index i = 1; i <= 3; ++i)
    members.push_back(
        {third, uniform_terms(5, 5, {{i, i}, {i + 1, i + 1}, {i + 2, i + 2}})});
  return WeightedEnsemble(5, 5, std::move(members));
}

WeightedEnsemble locc_target() {
  ComplexMatrix maximal = ComplexMatrix::Identity(8, 8) / std::sqrt(8.0);
  return WeightedEnsemble(8, 8,
                          {{0.5, PureState(maximal)},
                           {0.5, uniform_terms(8, 8, {{1, 2}, {2, 1}})}});
}

namespace {

ExampleCheck check_exact(const std::string& name, const WeightedEnsemble& e,
                         int expected, const ToleranceConfig& tol) {
  const BoundReport rep = analyze(e, tol);
  std::ostringstream actual;
  actual << "lower " << rep.lower_bound << ", upper "
         << (rep.upper_bound ? std::to_string(*rep.upper_bound) : "none")
         << (rep.exact ? ", exact" : ", not exact");
  return {name, "exact " + std::to_string(expected), actual.str(),
          rep.exact && rep.lower_bound == expected};
}

}  // namespace

std::vector<ExampleCheck> run_builtin_checks(const ToleranceConfig& tol) {
  std::vector<ExampleCheck> checks;
  checks.push_back(check_exact("rho1 (12x12)", rho1(), 3, tol));
  checks.push_back(check_exact("rho2 (12x12)", rho2(), 4, tol));
  checks.push_back(check_exact("rank-3 state (3x9)", rank3_on_3x9(), 3, tol));

  const BoundReport source = analyze(locc_source(), tol);
  const BoundReport target = analyze(locc_target(), tol);
  const bool excluded = locc_conversion_excluded(source, target);
  std::ostringstream actual;
  actual << "source upper " << *source.upper_bound << ", target lower "
         << target.lower_bound << (excluded ? ": excluded" : ": undecided");
  checks.push_back({"locc 5x5 -> 8x8", "excluded", actual.str(), excluded});
  return checks;
}

}  // namespace snbound::examples
