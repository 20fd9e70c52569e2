#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv::lp {

enum class Relation { LessEq, GreaterEq };

// coefficients * x  (<= | >=)  bound. All non-strict.
struct LinearConstraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::LessEq;
    Rational bound;
};

struct FeasibilityResult {
    // Present iff the system is satisfiable; always re-checked against every
    // constraint with exact arithmetic before being returned.
    std::optional<std::vector<Rational>> witness;

    bool feasible() const { return witness.has_value(); }
};

// Decides satisfiability of the conjunction of `constraints`, with the
// variables listed in `nonneg_vars` additionally constrained to be >= 0 and
// all others free. Exact phase-one simplex with Bland's rule; the tableau is
// built on the transposed (Farkas) system so its size is governed by the
// variable count, not the row count. Either outcome is certified: a feasible
// verdict re-substitutes the witness, an infeasible verdict re-checks the
// Farkas combination. A certificate failure is a solver bug and throws
// std::logic_error.
FeasibilityResult feasible(const std::vector<LinearConstraint>& constraints,
                           const std::vector<int>& nonneg_vars);

// Same decision by Fourier-Motzkin elimination. Independent of the simplex
// code on purpose: the two must agree, and tests hold them to that. Guarded
// at 8 variables (CapacityError) because elimination can square the row
// count per step.
bool fourier_motzkin_feasible(const std::vector<LinearConstraint>& constraints,
                              const std::vector<int>& nonneg_vars);

// Human-readable rendering, one constraint per line, variables x1..xn.
std::string dump_system(const std::vector<LinearConstraint>& constraints);

}  // namespace fairdiv::lp
