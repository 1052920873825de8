#pragma once

// Exact dictionary simplex for small dense problems:
//
//     minimize    c . x + c0
//     subject to  A x <= b,  x >= 0
//
// Entries are exact rationals. Pricing starts with Dantzig's rule and
// switches permanently to Bland's rule after a run of degenerate pivots;
// leaving-row ties always break on the smallest basic label, so once Bland
// pricing is active the classic anti-cycling argument applies and the solve
// terminates. Phase 1 uses the single artificial-column construction and is
// only entered when some right-hand side is negative.

#include "graphcurv/rational.hpp"

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace graphcurv::lp {

class Overflow : public std::overflow_error {
  public:
    Overflow() : std::overflow_error("lp: 64-bit rational overflow") {}
};

namespace detail {

inline unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        const unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

/// Rational on int64 with overflow detection. Intermediates live in __int128
/// (a product of two 64-bit values always fits); a reduced result that does
/// not fit back into 64 bits throws Overflow, and the caller re-solves with
/// arbitrary precision.
struct Rat64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat64() = default;
    Rat64(std::int64_t value) : num(value), den(1) {}  // NOLINT: implicit for literals

    static Rat64 make(__int128 n, __int128 d) {
        if (d == 0) {
            throw std::domain_error("lp: division by zero");
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            return Rat64{};
        }
        const unsigned __int128 an = n < 0 ? static_cast<unsigned __int128>(-n)
                                           : static_cast<unsigned __int128>(n);
        const unsigned __int128 g = detail::gcd_u128(an, static_cast<unsigned __int128>(d));
        n /= static_cast<__int128>(g);
        d /= static_cast<__int128>(g);
        constexpr __int128 kMax = INT64_MAX;
        constexpr __int128 kMin = INT64_MIN;
        if (n > kMax || n < kMin || d > kMax) {
            throw Overflow();
        }
        Rat64 q;
        q.num = static_cast<std::int64_t>(n);
        q.den = static_cast<std::int64_t>(d);
        return q;
    }

    friend Rat64 operator+(const Rat64& a, const Rat64& b) {
        return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rat64 operator-(const Rat64& a, const Rat64& b) {
        return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rat64 operator*(const Rat64& a, const Rat64& b) {
        return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }
    friend Rat64 operator/(const Rat64& a, const Rat64& b) {
        return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    }
    Rat64 operator-() const {
        Rat64 q;
        q.num = -num;
        q.den = den;
        return q;
    }
    Rat64& operator+=(const Rat64& o) { return *this = *this + o; }
    Rat64& operator-=(const Rat64& o) { return *this = *this - o; }
    Rat64& operator*=(const Rat64& o) { return *this = *this * o; }

    friend bool operator==(const Rat64& a, const Rat64& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat64& a, const Rat64& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
    friend bool operator<=(const Rat64& a, const Rat64& b) { return !(b < a); }
    friend bool operator>=(const Rat64& a, const Rat64& b) { return !(a < b); }
    friend bool operator!=(const Rat64& a, const Rat64& b) { return !(a == b); }
};

inline Rational to_rational(const Rat64& q) {
    return Rational(BigInt(q.num), BigInt(q.den));
}
inline Rational to_rational(const Rational& q) {
    return q;
}

enum class Status { kOptimal, kUnbounded, kInfeasible };

template <class Q>
struct Solution {
    Status status = Status::kOptimal;
    Q value{};        // objective at the optimum, constant term included
    std::vector<Q> x; // structural variable values
};

template <class Q>
class Simplex {
  public:
    explicit Simplex(std::size_t num_vars) : n_(num_vars), cost_(num_vars, Q(0)) {}

    void add_row(std::vector<Q> coeffs, Q rhs) {
        if (coeffs.size() != n_) {
            throw std::invalid_argument("lp: row width mismatch");
        }
        tableau_.push_back(std::move(coeffs));
        rhs_.push_back(std::move(rhs));
    }

    void set_objective(std::vector<Q> coeffs, Q constant) {
        if (coeffs.size() != n_) {
            throw std::invalid_argument("lp: objective width mismatch");
        }
        cost_ = std::move(coeffs);
        cost_const_ = std::move(constant);
    }

    Solution<Q> minimize() {
        const std::size_t m = tableau_.size();
        col_label_.resize(n_);
        row_label_.resize(m);
        for (std::size_t j = 0; j < n_; ++j) {
            col_label_[j] = j;
        }
        for (std::size_t i = 0; i < m; ++i) {
            row_label_[i] = n_ + i;
        }
        bland_ = false;
        degenerate_run_ = 0;

        bool feasible = true;
        for (const Q& b : rhs_) {
            if (b < Q(0)) {
                feasible = false;
                break;
            }
        }
        if (!feasible && !phase_one()) {
            Solution<Q> sol;
            sol.status = Status::kInfeasible;
            return sol;
        }

        Solution<Q> sol;
        if (!optimize(cost_, cost_const_)) {
            sol.status = Status::kUnbounded;
            return sol;
        }
        sol.status = Status::kOptimal;
        sol.value = cost_const_;
        sol.x.assign(n_, Q(0));
        for (std::size_t i = 0; i < row_label_.size(); ++i) {
            if (row_label_[i] < n_) {
                sol.x[row_label_[i]] = rhs_[i];
            }
        }
        return sol;
    }

  private:
    // basic_i = rhs_i - sum_j tableau_[i][j] * nonbasic_j
    // objective = const + sum_j cost_j * nonbasic_j
    void pivot(std::size_t r, std::size_t s, std::vector<Q>& cost, Q& constant) {
        const Q inv = Q(1) / tableau_[r][s];
        auto& row = tableau_[r];
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = row[j] * inv;
        }
        row[s] = inv;
        rhs_[r] = rhs_[r] * inv;
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (i == r) {
                continue;
            }
            const Q factor = tableau_[i][s];
            if (factor == Q(0)) {
                continue;
            }
            auto& other = tableau_[i];
            for (std::size_t j = 0; j < other.size(); ++j) {
                if (j != s) {
                    other[j] = other[j] - factor * row[j];
                }
            }
            other[s] = -factor * inv;
            rhs_[i] = rhs_[i] - factor * rhs_[r];
        }
        const Q cfactor = cost[s];
        if (cfactor != Q(0)) {
            for (std::size_t j = 0; j < cost.size(); ++j) {
                if (j != s) {
                    cost[j] = cost[j] - cfactor * row[j];
                }
            }
            cost[s] = -cfactor * inv;
            constant = constant + cfactor * rhs_[r];
        }
        std::swap(row_label_[r], col_label_[s]);
    }

    // Returns the entering column, or npos when the dictionary is optimal.
    std::size_t choose_entering(const std::vector<Q>& cost) const {
        std::size_t best = npos;
        for (std::size_t j = 0; j < cost.size(); ++j) {
            if (!(cost[j] < Q(0))) {
                continue;
            }
            if (best == npos) {
                best = j;
                continue;
            }
            if (bland_) {
                if (col_label_[j] < col_label_[best]) {
                    best = j;
                }
            } else if (cost[j] < cost[best] ||
                       (cost[j] == cost[best] && col_label_[j] < col_label_[best])) {
                best = j;
            }
        }
        return best;
    }

    // Standard ratio test; ties break on the smallest basic label.
    std::size_t choose_leaving(std::size_t s) const {
        std::size_t best = npos;
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (!(tableau_[i][s] > Q(0))) {
                continue;
            }
            if (best == npos) {
                best = i;
                continue;
            }
            const Q lhs = rhs_[i] * tableau_[best][s];
            const Q rhs = rhs_[best] * tableau_[i][s];
            if (lhs < rhs || (lhs == rhs && row_label_[i] < row_label_[best])) {
                best = i;
            }
        }
        return best;
    }

    bool optimize(std::vector<Q>& cost, Q& constant) {
        std::size_t iterations = 0;
        const std::size_t cap = 1000 * (n_ + tableau_.size() + 10) + 100000;
        while (true) {
            const std::size_t s = choose_entering(cost);
            if (s == npos) {
                return true;
            }
            const std::size_t r = choose_leaving(s);
            if (r == npos) {
                return false;  // unbounded
            }
            if (rhs_[r] == Q(0)) {
                if (++degenerate_run_ > 40) {
                    bland_ = true;
                }
            } else {
                degenerate_run_ = 0;
            }
            pivot(r, s, cost, constant);
            if (++iterations > cap) {
                throw std::runtime_error("lp: iteration cap exceeded");
            }
        }
    }

    // Single artificial column, driven in at the most negative row. Returns
    // false when the original constraints are infeasible.
    bool phase_one() {
        const std::size_t art = n_ + tableau_.size();  // largest label of all
        for (auto& row : tableau_) {
            row.push_back(Q(-1));
        }
        col_label_.push_back(art);
        std::vector<Q> phase_cost(col_label_.size(), Q(0));
        phase_cost.back() = Q(1);
        Q phase_const = Q(0);

        std::size_t worst = 0;
        for (std::size_t i = 1; i < rhs_.size(); ++i) {
            if (rhs_[i] < rhs_[worst]) {
                worst = i;
            }
        }
        pivot(worst, col_label_.size() - 1, phase_cost, phase_const);
        if (!optimize(phase_cost, phase_const)) {
            throw std::runtime_error("lp: phase 1 unbounded");  // cannot happen
        }
        if (phase_const != Q(0)) {
            return false;
        }
        // If the artificial variable is still basic (at value zero), pivot it
        // out on any nonzero entry of its row.
        for (std::size_t i = 0; i < row_label_.size(); ++i) {
            if (row_label_[i] != art) {
                continue;
            }
            std::size_t s = npos;
            for (std::size_t j = 0; j < col_label_.size(); ++j) {
                if (col_label_[j] != art && tableau_[i][j] != Q(0) &&
                    (s == npos || col_label_[j] < col_label_[s])) {
                    s = j;
                }
            }
            if (s == npos) {
                // Row is vacuous; drop it.
                tableau_.erase(tableau_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                row_label_.erase(row_label_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                pivot(i, s, phase_cost, phase_const);
            }
            break;
        }
        // Remove the artificial column.
        std::size_t slot = npos;
        for (std::size_t j = 0; j < col_label_.size(); ++j) {
            if (col_label_[j] == art) {
                slot = j;
                break;
            }
        }
        for (auto& row : tableau_) {
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(slot));
        }
        col_label_.erase(col_label_.begin() + static_cast<std::ptrdiff_t>(slot));

        // Express the original objective over the current nonbasic set.
        std::vector<Q> cost(col_label_.size(), Q(0));
        Q constant = cost_const_;
        for (std::size_t v = 0; v < n_; ++v) {
            const Q cv = cost_[v];
            if (cv == Q(0)) {
                continue;
            }
            bool placed = false;
            for (std::size_t j = 0; j < col_label_.size(); ++j) {
                if (col_label_[j] == v) {
                    cost[j] += cv;
                    placed = true;
                    break;
                }
            }
            if (placed) {
                continue;
            }
            for (std::size_t i = 0; i < row_label_.size(); ++i) {
                if (row_label_[i] == v) {
                    constant = constant + cv * rhs_[i];
                    for (std::size_t j = 0; j < col_label_.size(); ++j) {
                        cost[j] = cost[j] - cv * tableau_[i][j];
                    }
                    break;
                }
            }
        }
        cost_ = std::move(cost);
        cost_const_ = std::move(constant);
        return true;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t n_;
    std::vector<std::vector<Q>> tableau_;
    std::vector<Q> rhs_;
    std::vector<Q> cost_;
    Q cost_const_ = Q(0);
    std::vector<std::size_t> col_label_;
    std::vector<std::size_t> row_label_;
    bool bland_ = false;
    unsigned degenerate_run_ = 0;
};

/// Integer-coefficient problem description, solved with the 64-bit fast path
/// first and transparently re-solved in arbitrary precision on overflow.
struct IntProblem {
    std::size_t num_vars = 0;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> rhs;
    std::vector<std::int64_t> cost;
    std::int64_t cost_const = 0;
};

Solution<Rational> solve_int_min(const IntProblem& prob);

}  // namespace graphcurv::lp
