#include "polyspace/groebner.hpp"

#include "polyspace/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace polyspace {

namespace {

GradedPolynomial tail(const GradedPolynomial& p) {
    std::vector<Term> terms(p.terms().begin() + 1, p.terms().end());
    return GradedPolynomial::from_terms(p.vars(), p.ring(), std::move(terms));
}

// scale to leading coefficient 1 (or fail over Z when it is not a unit)
GradedPolynomial monic(const GradedPolynomial& p) {
    if (p.is_zero()) return p;
    const Rat& lc = p.leading_coefficient();
    if (!ring_is_unit(p.ring(), lc))
        throw NonUnitLeadingCoefficientError("leading coefficient " + rational_to_string(lc) +
                                             " of " + p.to_string() + " is not a unit over " +
                                             ring_name(p.ring()));
    return p.scaled(ring_unit_inverse(p.ring(), lc));
}

// head reduction only: rewrite the leading monomial until it is irreducible
GradedPolynomial head_reduce(GradedPolynomial p, const std::vector<GradedPolynomial>& relators) {
    bool progressed = true;
    while (!p.is_zero() && progressed) {
        progressed = false;
        for (const GradedPolynomial& r : relators) {
            if (r.is_zero()) continue;
            if (!r.leading_monomial().divides(p.leading_monomial())) continue;
            Rat q = p.leading_coefficient() * ring_unit_inverse(p.ring(), r.leading_coefficient());
            p = p - r.times_term(p.leading_monomial().divided_by(r.leading_monomial()), q);
            progressed = true;
            break;
        }
    }
    return p;
}

}  // namespace

GradedPolynomial reduce(const GradedPolynomial& p, const std::vector<GradedPolynomial>& relators) {
    GradedPolynomial current = p;
    while (true) {
        // largest reducible monomial, first applicable relator
        std::size_t term_index = current.term_count();
        const GradedPolynomial* relator = nullptr;
        for (std::size_t i = 0; i < current.term_count() && !relator; ++i) {
            for (const GradedPolynomial& r : relators) {
                if (r.is_zero()) continue;
                if (r.leading_monomial().divides(current.terms()[i].monomial)) {
                    term_index = i;
                    relator = &r;
                    break;
                }
            }
        }
        if (!relator) return current;
        const Term& t = current.terms()[term_index];
        if (!ring_is_unit(current.ring(), relator->leading_coefficient()))
            throw NonUnitLeadingCoefficientError("cannot reduce by " + relator->to_string());
        Rat q = t.coefficient * ring_unit_inverse(current.ring(), relator->leading_coefficient());
        current = current - relator->times_term(t.monomial.divided_by(relator->leading_monomial()), q);
    }
}

GradedPolynomial reduce(const GradedPolynomial& p, const GroebnerBasis& basis) {
    return reduce(p, basis.relators);
}

GradedPolynomial s_polynomial(const GradedPolynomial& r1, const GradedPolynomial& r2,
                              const MonomialOrder& order) {
    if (r1.is_zero() || r2.is_zero()) throw std::invalid_argument("S-polynomial of zero");
    const Monomial& m1 = r1.leading_monomial();
    const Monomial& m2 = r2.leading_monomial();
    Monomial g = Monomial::gcd(*order.vars, m1, m2);
    return tail(r1).times_term(m2.divided_by(g), r2.leading_coefficient()) -
           tail(r2).times_term(m1.divided_by(g), r1.leading_coefficient());
}

GroebnerBasis buchberger(std::vector<GradedPolynomial> generators) {
    std::erase_if(generators, [](const GradedPolynomial& g) { return g.is_zero(); });
    if (generators.empty()) throw std::invalid_argument("no nonzero generators");
    VariableSetPtr vars = generators.front().vars();
    Ring ring = generators.front().ring();
    if (ring == Ring::Z4)
        throw std::invalid_argument("completion is supported over Z, Q and Z2 only");
    for (const auto& g : generators) {
        if (g.ring() != ring) throw std::invalid_argument("mixed coefficient rings");
        if (!g.is_homogeneous())
            throw std::invalid_argument("generators must be homogeneous: " + g.to_string());
    }
    MonomialOrder order(vars);

    std::vector<GradedPolynomial> basis;
    basis.reserve(generators.size());
    for (auto& g : generators) basis.push_back(monic(g));

    struct Pair {
        int lcm_degree;
        std::size_t i, j;
        Monomial lcm;
    };
    // min-heap: process pairs by ascending lcm degree, ties by insertion index
    auto heap_after = [](const Pair& a, const Pair& b) {
        return std::tie(a.lcm_degree, a.i, a.j) > std::tie(b.lcm_degree, b.i, b.j);
    };
    std::vector<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> processed;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(*vars, basis[i].leading_monomial(), basis[j].leading_monomial());
            queue.push_back({l.weighted_degree(), i, j, l});
            std::push_heap(queue.begin(), queue.end(), heap_after);
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(), heap_after);
        Pair pair = queue.back();
        queue.pop_back();
        processed.insert({pair.i, pair.j});

        const GradedPolynomial& a = basis[pair.i];
        const GradedPolynomial& b = basis[pair.j];
        if (a.leading_monomial().coprime_with(b.leading_monomial())) continue;
        // chain criterion: some basis element divides the pair's lcm and both
        // subpairs were already treated
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
            auto sub1 = std::minmax(pair.i, k);
            auto sub2 = std::minmax(pair.j, k);
            if (processed.count({sub1.first, sub1.second}) && processed.count({sub2.first, sub2.second}))
                chained = true;
        }
        if (chained) continue;

        GradedPolynomial s = head_reduce(s_polynomial(a, b, order), basis);
        if (s.is_zero()) continue;
        basis.push_back(monic(s));
        push_pairs_for(basis.size() - 1);
    }

    // interreduce: drop relators with divisible leading monomials, then put
    // every survivor in normal form with respect to the others
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && !(mi == mj)) keep[i] = false;
            if (mi == mj && j < i) keep[i] = false;
        }
    }
    std::vector<GradedPolynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(basis[i]);

    std::vector<GradedPolynomial> reduced(minimal.size(), GradedPolynomial::zero(vars, ring));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GradedPolynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = monic(reduce(minimal[i], others));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const GradedPolynomial& x, const GradedPolynomial& y) {
        return order.compare(x.leading_monomial(), y.leading_monomial()) < 0;
    });

    GroebnerBasis out;
    out.vars = vars;
    out.ring = ring;
    out.relators = std::move(reduced);
    out.confluent = true;
    return out;
}

std::vector<GradedPolynomial> quotient_by_r_power(const std::vector<GradedPolynomial>& relators,
                                                  int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    std::vector<GradedPolynomial> out;
    out.reserve(relators.size());
    for (const GradedPolynomial& r : relators) {
        if (r.is_zero()) continue;
        const VariableSet& vars = *r.vars();
        int r_index = vars.r_index();
        if (r_index < 0 || k == 0) {
            out.push_back(r);
            continue;
        }
        int content = k;
        for (const Term& t : r.terms()) content = std::min(content, t.monomial.exponent(r_index));
        if (content == 0) {
            out.push_back(r);
            continue;
        }
        Monomial shift = Monomial::variable(vars, r_index, content);
        std::vector<Term> terms;
        terms.reserve(r.term_count());
        for (const Term& t : r.terms()) terms.push_back({t.monomial.divided_by(shift), t.coefficient});
        out.push_back(GradedPolynomial::from_terms(r.vars(), r.ring(), std::move(terms)));
    }
    return out;
}

std::vector<GradedPolynomial> quotient_by_r_power(const GroebnerBasis& basis, int k) {
    return quotient_by_r_power(basis.relators, k);
}

bool Staircase::is_standard(const Monomial& m) const {
    for (const Monomial& lead : leading)
        if (lead.divides(m)) return false;
    return true;
}

std::vector<Monomial> Staircase::standard_monomials(int degree) const {
    std::vector<Monomial> out;
    for (const Monomial& m : monomials_of_degree(vars, degree))
        if (is_standard(m)) out.push_back(m);
    return out;
}

Staircase staircase(const GroebnerBasis& basis) {
    Staircase s;
    s.vars = basis.vars;
    for (const GradedPolynomial& r : basis.relators)
        if (!r.is_zero()) s.leading.push_back(r.leading_monomial());
    return s;
}

std::vector<int> graded_dimensions(const GroebnerBasis& basis, int up_to) {
    if (!basis.confluent)
        throw NotConfluentError("graded dimensions need a confluent basis");
    Staircase s = staircase(basis);
    std::vector<int> dims;
    dims.reserve(static_cast<std::size_t>(up_to) + 1);
    for (int d = 0; d <= up_to; ++d)
        dims.push_back(static_cast<int>(s.standard_monomials(d).size()));
    return dims;
}

std::vector<Monomial> monomials_of_degree(const VariableSetPtr& vars, int degree) {
    std::vector<Monomial> out;
    Monomial scratch = Monomial::one(*vars);
    const int n = vars->count();
    auto recurse = [&](auto&& self, int index, int remaining, const Monomial& acc) -> void {
        if (index == n) {
            if (remaining == 0) out.push_back(acc);
            return;
        }
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        const int w = vars->degree(index);
        for (int e = 0; e * w <= remaining; ++e) {
            Monomial next = e == 0 ? acc : acc.times(Monomial::variable(*vars, index, e));
            self(self, index + 1, remaining - e * w, next);
        }
    };
    recurse(recurse, 0, degree, scratch);
    MonomialOrder order(vars);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
    return out;
}

}  // namespace polyspace
