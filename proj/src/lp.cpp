#include "graphcurv/lp.hpp"

namespace graphcurv::lp {

namespace {

template <class Q>
Solution<Q> solve_with(const IntProblem& prob) {
    Simplex<Q> simplex(prob.num_vars);
    for (std::size_t i = 0; i < prob.rows.size(); ++i) {
        std::vector<Q> row;
        row.reserve(prob.num_vars);
        for (std::int64_t c : prob.rows[i]) {
            row.push_back(Q(c));
        }
        simplex.add_row(std::move(row), Q(prob.rhs[i]));
    }
    std::vector<Q> cost;
    cost.reserve(prob.num_vars);
    for (std::int64_t c : prob.cost) {
        cost.push_back(Q(c));
    }
    simplex.set_objective(std::move(cost), Q(prob.cost_const));
    return simplex.minimize();
}

}  // namespace

Solution<Rational> solve_int_min(const IntProblem& prob) {
    try {
        const Solution<Rat64> fast = solve_with<Rat64>(prob);
        Solution<Rational> out;
        out.status = fast.status;
        out.value = to_rational(fast.value);
        out.x.reserve(fast.x.size());
        for (const Rat64& v : fast.x) {
            out.x.push_back(to_rational(v));
        }
        return out;
    } catch (const Overflow&) {
        return solve_with<Rational>(prob);
    }
}

}  // namespace graphcurv::lp
