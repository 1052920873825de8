#include "graphcurv/curvature.hpp"

#include "graphcurv/lp.hpp"
#include "graphcurv/parallel.hpp"

#include <algorithm>
#include <vector>

namespace graphcurv {

namespace {

// Support vertices for the edge (x, y): the union of the closed 1-balls,
// sorted ascending, or all of V in validation mode.
std::vector<VertexId> support_set(const Graph& g, VertexId x, VertexId y, LpSupport support) {
    if (support == LpSupport::kFullVertexSet) {
        std::vector<VertexId> all(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            all[v] = v;
        }
        return all;
    }
    std::vector<VertexId> s;
    s.reserve(g.degree(x) + g.degree(y) + 2);
    s.push_back(x);
    s.push_back(y);
    s.insert(s.end(), g.neighbors(x).begin(), g.neighbors(x).end());
    s.insert(s.end(), g.neighbors(y).begin(), g.neighbors(y).end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// The Lipschitz program in simplex form. After pinning f(x) = 0 and
// f(y) = 1, every support vertex u gets the shifted variable
//
//     t_u := d(x, u) - f(u)  (so t_x = t_y = 0 identically),
//
// which turns the pair constraint f(a) - f(b) <= d(a, b) into
//
//     t_b - t_a <= d(a, b) - d(x, a) + d(x, b),
//
// a row with a nonnegative right-hand side by the triangle inequality. The
// pairs (a, x) become t_a >= 0, exactly the simplex sign constraint, and
// f = d(x, .) itself is the feasible origin, so phase 1 never runs here.
//
// A pair row is skipped when some support vertex w lies on a geodesic from
// a to b: the rows for (a, w) and (w, b) then sum to the skipped row, and
// both involve strictly smaller distances, so the reduced system bounds the
// same polytope. (The unit tests re-solve without this reduction and compare.)
lp::IntProblem build_lipschitz_problem(const Graph& g, VertexId x, VertexId y,
                                       const DistanceData& dd,
                                       const std::vector<VertexId>& support,
                                       bool reduce_pairs) {
    const std::size_t k = support.size();
    std::vector<std::size_t> var_of(g.num_vertices(), static_cast<std::size_t>(-1));
    std::vector<VertexId> var_vertex;
    for (VertexId u : support) {
        if (u != x && u != y) {
            var_of[u] = var_vertex.size();
            var_vertex.push_back(u);
        }
    }
    const std::size_t num_vars = var_vertex.size();

    lp::IntProblem prob;
    prob.num_vars = num_vars;

    for (std::size_t ia = 0; ia < k; ++ia) {
        const VertexId a = support[ia];
        for (std::size_t ib = 0; ib < k; ++ib) {
            const VertexId b = support[ib];
            if (a == b || b == x) {
                continue;  // (a, x) rows are the sign constraints t_a >= 0
            }
            if (a == x && b == y) {
                continue;  // constant row, trivially satisfied
            }
            const bool a_free = var_of[a] != static_cast<std::size_t>(-1);
            const bool b_free = var_of[b] != static_cast<std::size_t>(-1);
            if (!a_free && !b_free) {
                continue;
            }
            if (reduce_pairs) {
                bool implied = false;
                for (VertexId w : support) {
                    if (w != a && w != b &&
                        dd.distance(a, w) + dd.distance(w, b) == dd.distance(a, b)) {
                        implied = true;
                        break;
                    }
                }
                if (implied) {
                    continue;
                }
            }
            std::vector<std::int64_t> row(num_vars, 0);
            if (b_free) {
                row[var_of[b]] += 1;
            }
            if (a_free) {
                row[var_of[a]] -= 1;
            }
            prob.rows.push_back(std::move(row));
            prob.rhs.push_back(dd.distance(a, b) - dd.distance(x, a) + dd.distance(x, b));
        }
    }

    // Objective Df(x) - Df(y) under the shift: the constant collects the
    // pinned values, each free neighbor of x contributes -t, of y +t.
    std::vector<std::int64_t> cost(num_vars, 0);
    std::int64_t constant = 0;
    for (VertexId w : g.neighbors(x)) {
        constant += dd.distance(x, w);
        if (var_of[w] != static_cast<std::size_t>(-1)) {
            cost[var_of[w]] -= 1;
        }
    }
    for (VertexId w : g.neighbors(y)) {
        constant -= dd.distance(x, w);
        if (var_of[w] != static_cast<std::size_t>(-1)) {
            cost[var_of[w]] += 1;
        }
    }
    constant += g.degree(y);
    prob.cost = std::move(cost);
    prob.cost_const = constant;
    return prob;
}

}  // namespace

Rational ollivier_curvature(const Graph& g, VertexId x, VertexId y, const DistanceData& dd,
                            LpSupport support_mode) {
    if (!g.has_edge(x, y)) {
        throw GraphError("ollivier_curvature: (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") is not an edge");
    }
    const auto support = support_set(g, x, y, support_mode);
    const auto prob = build_lipschitz_problem(g, x, y, dd, support, true);
    const auto sol = lp::solve_int_min(prob);
    if (sol.status != lp::Status::kOptimal) {
        // Feasible (f = d(x, .)) and bounded (every value is pinned within
        // distance 1 of f(x) or f(y)), so anything else is a solver bug.
        throw std::logic_error("ollivier_curvature: LP did not reach an optimum");
    }
    return sol.value;
}

Rational ollivier_curvature(const Graph& g, VertexId x, VertexId y) {
    return ollivier_curvature(g, x, y, all_pairs(g));
}

namespace detail {

Rational lipschitz_optimum_unreduced(const Graph& g, VertexId x, VertexId y,
                                     const DistanceData& dd, LpSupport support_mode) {
    const auto support = support_set(g, x, y, support_mode);
    const auto prob = build_lipschitz_problem(g, x, y, dd, support, false);
    const auto sol = lp::solve_int_min(prob);
    if (sol.status != lp::Status::kOptimal) {
        throw std::logic_error("lipschitz_optimum_unreduced: LP did not reach an optimum");
    }
    return sol.value;
}

}  // namespace detail

namespace {

struct OracleState {
    const DistanceData* dd = nullptr;
    std::vector<VertexId> order;    // x, y first, then the rest of the support
    std::vector<std::size_t> slot;  // vertex id -> position in `order`
    std::vector<int> value;         // assigned function values, aligned with `order`
    bool have_best = false;
    long long best = 0;
};

// Depth-first enumeration of f over the support. The candidate range needs
// no search beyond {-1, 0, 1, 2}: every support vertex lies in a closed unit
// ball around x (pinned to 0) or around y (pinned to 1), so 1-Lipschitzness
// confines its value to [-1, 1] or [0, 2]; and because the pair constraints
// form a difference system with integer bounds, some optimizer is integral.
// Partial assignments are pruned against every already-assigned vertex.
void oracle_search(OracleState& st, const Graph& g, VertexId x, VertexId y, std::size_t depth) {
    if (depth == st.order.size()) {
        long long objective = 0;
        for (VertexId w : g.neighbors(x)) {
            objective += st.value[st.slot[w]];  // f(x) = 0
        }
        for (VertexId w : g.neighbors(y)) {
            objective -= st.value[st.slot[w]] - 1;
        }
        if (!st.have_best || objective < st.best) {
            st.have_best = true;
            st.best = objective;
        }
        return;
    }
    const VertexId u = st.order[depth];
    const int lo = depth == 0 ? 0 : (depth == 1 ? 1 : -1);
    const int hi = depth == 0 ? 0 : (depth == 1 ? 1 : 2);
    for (int f = lo; f <= hi; ++f) {
        bool ok = true;
        for (std::size_t j = 0; j < depth; ++j) {
            const int d = st.dd->distance(u, st.order[j]);
            const int diff = f - st.value[j];
            if (diff > d || -diff > d) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        st.value[depth] = f;
        oracle_search(st, g, x, y, depth + 1);
    }
}

}  // namespace

OracleResult curvature_oracle(const Graph& g, VertexId x, VertexId y, const DistanceData& dd,
                              std::size_t support_budget) {
    if (!g.has_edge(x, y)) {
        throw GraphError("curvature_oracle: (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") is not an edge");
    }
    const auto support = support_set(g, x, y, LpSupport::kBallUnion);
    OracleResult result;
    if (support.size() > support_budget) {
        result.available = false;  // explicit refusal, never a silent fallback
        return result;
    }
    OracleState st;
    st.dd = &dd;
    st.order.reserve(support.size());
    st.order.push_back(x);
    st.order.push_back(y);
    for (VertexId u : support) {
        if (u != x && u != y) {
            st.order.push_back(u);
        }
    }
    st.slot.assign(g.num_vertices(), 0);
    for (std::size_t i = 0; i < st.order.size(); ++i) {
        st.slot[st.order[i]] = i;
    }
    st.value.assign(st.order.size(), 0);
    oracle_search(st, g, x, y, 0);
    result.available = true;
    result.value = Rational(st.best);
    return result;
}

EdgeMeasure curvature_all_edges(const Graph& g, const DistanceData& dd, unsigned threads) {
    EdgeMeasure out;
    out.values.assign(g.num_edges(), Rational(0));
    parallel_for(g.num_edges(), threads, [&](std::size_t i) {
        const Edge e = g.edges()[i];
        out.values[i] = ollivier_curvature(g, e.u, e.v, dd);
    });
    return out;
}

Rational average_curvature_weighted(const Graph& g, const EdgeMeasure& g_measure,
                                    const EdgeMeasure& ric) {
    if (g_measure.values.size() != g.num_edges() || ric.values.size() != g.num_edges()) {
        throw GraphError("average_curvature_weighted: measure does not match the edge set");
    }
    Rational weighted = 0;
    Rational total = 0;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        weighted += g_measure.values[i] * ric.values[i];
        total += g_measure.values[i];
    }
    if (total == 0) {
        throw GraphError("average_curvature_weighted: weight measure sums to zero");
    }
    return weighted / total;
}

}  // namespace graphcurv
