/**
 * Exact rational feasibility of small linear systems by Fourier-Motzkin
 * elimination.  Sized for fan computations (a handful of variables).
 */

#ifndef TORIC_POLYHEDRAL_HPP
#define TORIC_POLYHEDRAL_HPP

#include <set>
#include <vector>

#include "zlattice.hpp"

namespace toric {

/// coeffs . x >= rhs   (or > rhs when strict)
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational rhs = 0;
    bool strict = false;
};

namespace detail {

// Scale so the first nonzero coefficient has absolute value 1; identical
// constraints then compare equal.
inline LinearConstraint normalize_constraint(LinearConstraint c)
{
    for (const Rational& a : c.coeffs) {
        if (a != 0) {
            Rational s = a < 0 ? Rational(-a) : a;
            for (Rational& b : c.coeffs)
                b /= s;
            c.rhs /= s;
            break;
        }
    }
    return c;
}

struct ConstraintKey {
    std::vector<Rational> coeffs;
    Rational rhs;
    bool strict;
    bool operator<(const ConstraintKey& o) const
    {
        if (coeffs != o.coeffs)
            return coeffs < o.coeffs;
        if (rhs != o.rhs)
            return rhs < o.rhs;
        return strict < o.strict;
    }
};

}  // namespace detail

/**
 * Decide whether {x in Q^n : every constraint holds} is nonempty.
 * Equalities are passed as two opposite inequalities.
 */
inline bool fm_feasible(std::vector<LinearConstraint> system, std::size_t num_vars)
{
    for (std::size_t var = num_vars; var-- > 0;) {
        std::vector<LinearConstraint> pos, neg, rest;
        for (auto& c : system) {
            if (c.coeffs[var] > 0)
                pos.push_back(std::move(c));
            else if (c.coeffs[var] < 0)
                neg.push_back(std::move(c));
            else
                rest.push_back(std::move(c));
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                // eliminate var: (-q_v) * p + (p_v) * q
                Rational a = -q.coeffs[var], b = p.coeffs[var];
                LinearConstraint c;
                c.coeffs.resize(num_vars);
                for (std::size_t k = 0; k < num_vars; ++k)
                    c.coeffs[k] = a * p.coeffs[k] + b * q.coeffs[k];
                c.coeffs[var] = 0;
                c.rhs = a * p.rhs + b * q.rhs;
                c.strict = p.strict || q.strict;
                rest.push_back(std::move(c));
            }
        std::set<detail::ConstraintKey> seen;
        system.clear();
        for (auto& c : rest) {
            c = detail::normalize_constraint(std::move(c));
            bool trivial = std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& r) { return r == 0; });
            if (trivial) {
                if (c.strict ? !(0 > c.rhs) : !(0 >= c.rhs))
                    return false;
                continue;
            }
            if (seen.insert({c.coeffs, c.rhs, c.strict}).second)
                system.push_back(std::move(c));
        }
    }
    for (const auto& c : system)
        if (c.strict ? !(0 > c.rhs) : !(0 >= c.rhs))
            return false;
    return true;
}

}  // namespace toric

#endif
