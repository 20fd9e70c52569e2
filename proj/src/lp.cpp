#include "fairdiv/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv::lp {

namespace {

using Row = std::vector<Rational>;

// Common normal form: every constraint and every nonnegativity requirement
// becomes a row of G x <= h over free variables.
struct LeSystem {
    int num_vars = 0;
    std::vector<Row> lhs;
    std::vector<Rational> rhs;
};

LeSystem normalize(const std::vector<LinearConstraint>& constraints,
                   const std::vector<int>& nonneg_vars) {
    LeSystem sys;
    if (!constraints.empty()) {
        sys.num_vars = static_cast<int>(constraints.front().coefficients.size());
    } else {
        for (int v : nonneg_vars) sys.num_vars = std::max(sys.num_vars, v + 1);
    }
    for (const auto& c : constraints) {
        if (static_cast<int>(c.coefficients.size()) != sys.num_vars)
            throw std::invalid_argument("constraint arity mismatch");
        Row row = c.coefficients;
        Rational bound = c.bound;
        if (c.relation == Relation::GreaterEq) {
            for (auto& a : row) a = -a;
            bound = -bound;
        }
        sys.lhs.push_back(std::move(row));
        sys.rhs.push_back(std::move(bound));
    }
    for (int v : nonneg_vars) {
        if (v < 0 || v >= sys.num_vars)
            throw std::invalid_argument("nonnegative variable index out of range");
        Row row(static_cast<std::size_t>(sys.num_vars), Rational(0));
        row[static_cast<std::size_t>(v)] = -1;
        sys.lhs.push_back(std::move(row));
        sys.rhs.emplace_back(0);
    }
    return sys;
}

}  // namespace

FeasibilityResult feasible(const std::vector<LinearConstraint>& constraints,
                           const std::vector<int>& nonneg_vars) {
    LeSystem sys = normalize(constraints, nonneg_vars);
    const int n = sys.num_vars;
    const int m = static_cast<int>(sys.lhs.size());

    // G x <= h is unsatisfiable iff some y >= 0 has G^T y = 0 and h^T y = -1
    // (Farkas). Phase-one simplex on that transposed system: rows are the n
    // equations G^T y = 0 plus -h^T y = 1, columns are y_0..y_{m-1} followed
    // by one artificial per row. Minimizing the artificial total to zero
    // exhibits the Farkas combination; failing to do so leaves simplex
    // multipliers pi with G pi_{0..n-1} <= h * pi_n and pi_n > 0, i.e. a
    // witness x = pi_{0..n-1} / pi_n.
    const int rows = n + 1;
    const int cols = m + rows;  // + rhs, kept separately

    std::vector<Row> tab(static_cast<std::size_t>(rows),
                         Row(static_cast<std::size_t>(cols), Rational(0)));
    std::vector<Rational> rhs(static_cast<std::size_t>(rows), Rational(0));
    for (int j = 0; j < m; ++j) {
        for (int v = 0; v < n; ++v) tab[v][j] = sys.lhs[j][v];
        tab[n][j] = -sys.rhs[static_cast<std::size_t>(j)];
    }
    for (int r = 0; r < rows; ++r) tab[r][m + r] = 1;
    rhs[static_cast<std::size_t>(n)] = 1;

    std::vector<int> basis(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) basis[r] = m + r;

    // Reduced costs for the phase-one objective (cost 1 on artificials).
    Row cost(static_cast<std::size_t>(cols), Rational(0));
    for (int j = 0; j < cols; ++j) {
        Rational colsum(0);
        for (int r = 0; r < rows; ++r) colsum += tab[r][j];
        cost[j] = (j >= m ? Rational(1) : Rational(0)) - colsum;
    }

    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (cost[j] < 0) {
                enter = j;  // Bland: lowest index, guarantees termination
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio;
        for (int r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rational ratio = rhs[r] / tab[r][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("phase-one objective unbounded");

        Rational pivot = tab[leave][enter];
        for (int j = 0; j < cols; ++j) tab[leave][j] /= pivot;
        rhs[leave] /= pivot;
        for (int r = 0; r < rows; ++r) {
            if (r == leave) continue;
            Rational factor = tab[r][enter];
            if (factor == 0) continue;
            for (int j = 0; j < cols; ++j) tab[r][j] -= factor * tab[leave][j];
            rhs[r] -= factor * rhs[leave];
        }
        Rational cf = cost[enter];
        for (int j = 0; j < cols; ++j) cost[j] -= cf * tab[leave][j];
        basis[leave] = enter;
    }

    // Optimal phase-one value = what the artificials still carry.
    Rational objective(0);
    for (int r = 0; r < rows; ++r)
        if (basis[r] >= m) objective += rhs[r];

    if (objective == 0) {
        // Farkas certificate: read y off the basis and re-check it.
        std::vector<Rational> y(static_cast<std::size_t>(m), Rational(0));
        for (int r = 0; r < rows; ++r)
            if (basis[r] < m) y[static_cast<std::size_t>(basis[r])] = rhs[r];
        Rational hy(0);
        for (int j = 0; j < m; ++j) {
            if (y[j] < 0) throw std::logic_error("negative Farkas multiplier");
            hy += y[j] * sys.rhs[static_cast<std::size_t>(j)];
        }
        for (int v = 0; v < n; ++v) {
            Rational dot(0);
            for (int j = 0; j < m; ++j) dot += y[j] * sys.lhs[j][v];
            if (dot != 0) throw std::logic_error("Farkas combination does not vanish");
        }
        if (hy >= 0) throw std::logic_error("Farkas certificate not separating");
        return {};
    }

    // pi_r = 1 - reduced cost of artificial r.
    std::vector<Rational> pi(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) pi[r] = Rational(1) - cost[m + r];
    if (pi[static_cast<std::size_t>(n)] <= 0)
        throw std::logic_error("degenerate multiplier on the bound row");
    std::vector<Rational> witness(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        witness[v] = pi[static_cast<std::size_t>(v)] / pi[static_cast<std::size_t>(n)];

    for (int j = 0; j < m; ++j) {
        Rational lhs(0);
        for (int v = 0; v < n; ++v) lhs += sys.lhs[j][v] * witness[v];
        if (lhs > sys.rhs[static_cast<std::size_t>(j)])
            throw std::logic_error("witness fails constraint " + std::to_string(j));
    }
    return {std::move(witness)};
}

bool fourier_motzkin_feasible(const std::vector<LinearConstraint>& constraints,
                              const std::vector<int>& nonneg_vars) {
    LeSystem sys = normalize(constraints, nonneg_vars);
    const int n = sys.num_vars;
    if (n > 8)
        throw CapacityError("Fourier-Motzkin limited to 8 variables, got " +
                            std::to_string(n));

    // Rows as (lhs, bound); canonical form scales the first nonzero
    // coefficient to +-1 so identical left sides collapse to their tightest
    // bound.
    std::map<Row, Rational> rows;
    auto insert_row = [&](Row lhs, Rational bound) -> bool {
        int first = -1;
        for (int v = 0; v < n; ++v)
            if (lhs[static_cast<std::size_t>(v)] != 0) {
                first = v;
                break;
            }
        if (first < 0) return bound >= 0;  // 0 <= bound: tautology or clash
        Rational scale = abs(lhs[static_cast<std::size_t>(first)]);
        for (auto& a : lhs) a /= scale;
        bound /= scale;
        auto [it, fresh] = rows.emplace(std::move(lhs), bound);
        if (!fresh && bound < it->second) it->second = std::move(bound);
        return true;
    };

    for (std::size_t j = 0; j < sys.lhs.size(); ++j)
        if (!insert_row(sys.lhs[j], sys.rhs[j])) return false;

    std::vector<char> eliminated(static_cast<std::size_t>(n), 0);
    for (int round = 0; round < n; ++round) {
        // Cheapest variable first: fewest positive*negative combinations.
        int var = -1;
        std::size_t best_cost = 0;
        for (int v = 0; v < n; ++v) {
            if (eliminated[static_cast<std::size_t>(v)]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& [lhs, bound] : rows) {
                int c = sgn(lhs[static_cast<std::size_t>(v)]);
                if (c > 0) ++pos;
                else if (c < 0) ++neg;
            }
            std::size_t combo = pos * neg;
            if (var < 0 || combo < best_cost) {
                var = v;
                best_cost = combo;
            }
        }
        eliminated[static_cast<std::size_t>(var)] = 1;

        std::vector<std::pair<Row, Rational>> pos, neg, zero;
        for (auto& [lhs, bound] : rows) {
            int c = sgn(lhs[static_cast<std::size_t>(var)]);
            auto entry = std::make_pair(lhs, bound);
            if (c > 0) pos.push_back(std::move(entry));
            else if (c < 0) neg.push_back(std::move(entry));
            else zero.push_back(std::move(entry));
        }
        rows.clear();
        for (auto& [lhs, bound] : zero)
            if (!insert_row(std::move(lhs), std::move(bound))) return false;
        for (const auto& [pl, pb] : pos) {
            const Rational& pc = pl[static_cast<std::size_t>(var)];
            for (const auto& [nl, nb] : neg) {
                const Rational& nc = nl[static_cast<std::size_t>(var)];
                // pc > 0 > nc; combine with multipliers (-nc) and pc.
                Row lhs(static_cast<std::size_t>(n), Rational(0));
                for (int v = 0; v < n; ++v)
                    lhs[v] = -nc * pl[v] + pc * nl[v];
                lhs[static_cast<std::size_t>(var)] = 0;  // cancels exactly
                if (!insert_row(std::move(lhs), -nc * pb + pc * nb)) return false;
            }
        }
        if (rows.size() > 1'000'000)
            throw CapacityError("Fourier-Motzkin row blowup");
    }
    return true;
}

std::string dump_system(const std::vector<LinearConstraint>& constraints) {
    std::string out;
    for (const auto& c : constraints) {
        bool any = false;
        for (std::size_t v = 0; v < c.coefficients.size(); ++v) {
            const Rational& a = c.coefficients[v];
            if (a == 0) continue;
            if (any)
                out += a < 0 ? " - " : " + ";
            else if (a < 0)
                out += "-";
            Rational mag = abs(a);
            if (mag != 1) out += to_fraction_string(mag) + " ";
            out += "x" + std::to_string(v + 1);
            any = true;
        }
        if (!any) out += "0";
        out += c.relation == Relation::LessEq ? " <= " : " >= ";
        out += to_fraction_string(c.bound);
        out += "\n";
    }
    return out;
}

}  // namespace fairdiv::lp
