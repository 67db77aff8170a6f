#include "polyspace/equilateral.hpp"

#include "polyspace/errors.hpp"
#include "polyspace/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyspace {

namespace {

void require_odd(int m) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("equilateral analysis needs odd m >= 3");
}

Int power(Int base, int exp) {
    Int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

std::vector<std::vector<Int>> standardization_matrix(const Int& x, const Int& y, int m) {
    require_odd(m);
    if (mod_floor(x - y, 2) != 0) throw ParityViolationError("x and y must share parity");
    // b_i = (x/2) c_i + (y/2) sum_j c_j in the {R, V_1..V_{m-1}} basis, with
    // c_i = R + 2 V_i for i < m and c_m = -R; 2Z below stands for y(m-2).
    const Int half_sum_r = y * (m - 2);  // twice (y/2)(m-2)
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(m));
    {
        std::vector<Int> b_m(static_cast<std::size_t>(m), y);
        b_m[0] = (-x + half_sum_r) / 2;
        rows.push_back(std::move(b_m));
    }
    for (int i = 1; i < m; ++i) {
        std::vector<Int> b_i(static_cast<std::size_t>(m), y);
        b_i[0] = (x + half_sum_r) / 2;
        b_i[static_cast<std::size_t>(i)] = x + y;
        rows.push_back(std::move(b_i));
    }
    return rows;
}

Int standardization_determinant(const Int& x, const Int& y, int m) {
    require_odd(m);
    if (mod_floor(x - y, 2) != 0) throw ParityViolationError("x and y must share parity");
    return -power(x, m - 1) * (x + y * m) / 2;
}

namespace {

bool unit_outside(const Int& value, const Int& n) {
    if (value == 0) return false;
    Int v = boost::multiprecision::abs(value);
    if (n == 0) return v == 1;
    // strip every prime factor shared with n
    Int base = boost::multiprecision::abs(n);
    while (v != 1) {
        Int g = boost::multiprecision::gcd(v, base);
        if (g == 1) break;
        while (v % g == 0) v /= g;
    }
    return v == 1;
}

}  // namespace

std::optional<std::pair<Int, Int>> is_standardizable(const Int& n, int m, const Int& bound) {
    require_odd(m);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    // canonical witnesses first
    for (auto [x, y] : {std::pair<Int, Int>{2, 0}, std::pair<Int, Int>{m, 1}}) {
        if (boost::multiprecision::abs(x) > bound || boost::multiprecision::abs(y) > bound) continue;
        if (unit_outside(standardization_determinant(x, y, m), n)) return std::pair<Int, Int>{x, y};
    }
    for (Int x = -bound; x <= bound; ++x) {
        for (Int y = -bound; y <= bound; ++y) {
            if (mod_floor(x - y, 2) != 0) continue;
            if (unit_outside(standardization_determinant(x, y, m), n))
                return std::pair<Int, Int>{x, y};
        }
    }
    return std::nullopt;
}

PoincarePolynomial quotient_poincare(int m) {
    require_odd(m);
    auto one_minus = [](int k) {
        std::vector<Int> c(static_cast<std::size_t>(k) + 1, Int(0));
        c[0] = 1;
        c[static_cast<std::size_t>(k)] = -1;
        return PoincarePolynomial(std::move(c));
    };
    return (one_minus(m - 1) * one_minus(m + 1)).exact_divide(one_minus(2) * one_minus(4));
}

RingPresentation invariant_presentation(int m) {
    require_odd(m);
    VariableSetPtr vars = sigma_variables(m);
    const int half = (m - 1) / 2;
    auto sigma = [&](int i) {
        // s_0 is the constant 1; s_i at index i for 1 <= i <= half
        if (i == 0) return GradedPolynomial::constant(vars, Ring::Q, Rat(1));
        return GradedPolynomial::variable(vars, Ring::Q, i);
    };
    GradedPolynomial p = GradedPolynomial::variable(vars, Ring::Q, 0);

    std::vector<GradedPolynomial> relators;
    // s_1 s_i = (i+1) s_{i+1} + (m - i + 1) p s_{i-1}
    for (int i = 1; i <= half - 1; ++i) {
        GradedPolynomial rel = sigma(1) * sigma(i) - sigma(i + 1).scaled(Rat(i + 1)) -
                               (p * sigma(i - 1)).scaled(Rat(m - i + 1));
        relators.push_back(rel);
    }
    auto binomial = [](int n, int k) {
        if (k < 0 || k > n) return Int(0);
        Int out = 1;
        for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
        return out;
    };
    // degree m-1 relator
    {
        GradedPolynomial rel = GradedPolynomial::zero(vars, Ring::Q);
        for (int i = 0; i <= half; ++i) {
            if ((i % 2) != (half % 2)) continue;
            Int coeff = binomial(m - i, (m + 1) / 2 - i);
            rel = rel + (p.power((half - i) / 2) * sigma(i)).scaled(Rat(coeff));
        }
        relators.push_back(rel);
    }
    // degree m+1 relator, with rational binomial ratios; its boundary term
    // uses sigma_{(m+1)/2}, which is not a generator and is rewritten through
    // the recursion at i = (m-1)/2
    {
        GradedPolynomial boundary =
            (sigma(1) * sigma(half) - (p * sigma(half - 1)).scaled(Rat(m + 3, 2)))
                .scaled(Rat(2, m + 1));
        GradedPolynomial rel = GradedPolynomial::zero(vars, Ring::Q);
        for (int i = 0; i <= half + 1; ++i) {
            if ((i % 2) != (((m + 1) / 2) % 2)) continue;
            Rat coeff(binomial((m + 1) / 2, i), binomial(m, i));
            const GradedPolynomial& term = (i == half + 1) ? boundary : sigma(i);
            rel = rel + (p.power(((m + 1) / 2 - i) / 2) * term).scaled(coeff);
        }
        relators.push_back(rel);
    }
    std::erase_if(relators, [](const GradedPolynomial& r) { return r.is_zero(); });

    RingPresentation pres;
    pres.space = SpaceTag::InvariantPol;
    pres.coefficient_ring = Ring::Q;
    pres.vars = vars;
    pres.relators = relators;
    pres.top_degree = 2 * (m - 3);
    pres.degree_step = 2;
    pres.basis = buchberger(relators);
    std::vector<int> dims = graded_dimensions(pres.basis, pres.top_degree + 4);
    for (int d = pres.top_degree + 1; d <= pres.top_degree + 4; ++d)
        if (dims[static_cast<std::size_t>(d)] != 0)
            throw std::logic_error("invariant ring does not vanish above the top degree");
    dims.resize(static_cast<std::size_t>(pres.top_degree) + 1);
    pres.dimensions = dims;
    Staircase stairs = staircase(pres.basis);
    pres.graded_basis.resize(static_cast<std::size_t>(pres.top_degree) + 1);
    for (int d = 0; d <= pres.top_degree; ++d)
        pres.graded_basis[static_cast<std::size_t>(d)] = stairs.standard_monomials(d);

    PoincarePolynomial expected = quotient_poincare(m);
    for (int d = 0; d <= pres.top_degree; ++d)
        if (Int(dims[static_cast<std::size_t>(d)]) != expected.coefficient(d))
            throw std::logic_error("invariant presentation disagrees with the quotient Betti numbers");
    return pres;
}

PermutationAction::PermutationAction(const RingPresentation& pres, std::vector<int> perm)
    : pres_(&pres), perm_(std::move(perm)) {
    if (pres.space != SpaceTag::Pol) throw std::invalid_argument("the action lives on Pol presentations");
    const int m = static_cast<int>(perm_.size());
    if (!pres.alpha.has_value() || pres.alpha->edge_count() != m)
        throw DimensionMismatchError("permutation size does not match the presentation");
    {
        std::vector<bool> seen(perm_.size(), false);
        for (int image : perm_) {
            if (image < 0 || image >= m || seen[static_cast<std::size_t>(image)])
                throw std::invalid_argument("not a permutation");
            seen[static_cast<std::size_t>(image)] = true;
        }
    }
    const VariableSetPtr& vars = pres.vars;
    const Ring ring = Ring::Q;
    auto chern_in_rv = [&](int i) {  // c_{i+1} expressed in R, V (0-based edge i)
        if (i == m - 1) return -GradedPolynomial::variable(vars, ring, 0);
        return GradedPolynomial::variable(vars, ring, 0) +
               GradedPolynomial::variable(vars, ring, i + 1).scaled(Rat(2));
    };
    // R = -c_m and V_i = (c_i + c_m)/2, so images follow from c_i -> c_{pi(i)}
    images_.push_back(-chern_in_rv(perm_[static_cast<std::size_t>(m - 1)]));
    for (int i = 1; i < m; ++i) {
        GradedPolynomial v = (chern_in_rv(perm_[static_cast<std::size_t>(i - 1)]) +
                              chern_in_rv(perm_[static_cast<std::size_t>(m - 1)]))
                                 .scaled(Rat(1, 2));
        images_.push_back(v);
    }
}

GradedPolynomial PermutationAction::apply(const GradedPolynomial& p) const {
    const VariableSetPtr& vars = pres_->vars;
    GradedPolynomial out = GradedPolynomial::zero(vars, Ring::Q);
    for (const Term& t : p.terms()) {
        GradedPolynomial factor = GradedPolynomial::constant(vars, Ring::Q, t.coefficient);
        for (int i = 0; i < vars->count(); ++i) {
            int e = t.monomial.exponent(i);
            if (e > 0) factor = factor * images_[static_cast<std::size_t>(i)].power(e);
        }
        out = out + factor;
    }
    return pres_->normal_form(out);
}

std::vector<std::vector<Rat>> PermutationAction::matrix_on_degree(int degree) const {
    const auto& basis = pres_->graded_basis[static_cast<std::size_t>(degree)];
    std::vector<std::vector<Rat>> matrix(basis.size(), std::vector<Rat>(basis.size(), Rat(0)));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        GradedPolynomial image =
            apply(GradedPolynomial::term(pres_->vars, Ring::Q, basis[col], Rat(1)));
        std::vector<Rat> coords = pres_->nf_vector(image, degree);
        for (std::size_t row = 0; row < basis.size(); ++row) matrix[row][col] = coords[row];
    }
    return matrix;
}

namespace {

// The degree-(d+2) matrix of a ring map follows from the degree-d one and
// the images of the variables once the products "standard monomial times
// variable" are tabulated, so the group sum needs no per-element reductions.
struct MultiplicationTables {
    const RingPresentation* pol;
    int nv = 0;
    // table[d][s][j] = integer-scaled coordinates over std_{d+2} of
    // NF(std_d[s] * x_j); the per-degree scaling is uniform and therefore
    // harmless for the rank of the summed action.
    std::vector<std::vector<std::vector<std::vector<Int>>>> table;
    // factor[d][t] = (s, j) with std_d[t] = std_{d-2}[s] * x_j
    std::vector<std::vector<std::pair<int, int>>> factor;

    explicit MultiplicationTables(const RingPresentation& presentation) : pol(&presentation) {
        nv = pol->vars->count();
        const int top = pol->top_degree;
        table.resize(static_cast<std::size_t>(top) + 1);
        factor.resize(static_cast<std::size_t>(top) + 1);
        for (int d = 2; d + 2 <= top; d += 2) {
            const auto& basis = pol->graded_basis[static_cast<std::size_t>(d)];
            const auto& target = pol->graded_basis[static_cast<std::size_t>(d + 2)];
            auto& slot = table[static_cast<std::size_t>(d)];
            slot.resize(basis.size());
            Int denominator = 1;
            std::vector<std::vector<std::vector<Rat>>> raw(basis.size());
            for (std::size_t s = 0; s < basis.size(); ++s) {
                raw[s].resize(static_cast<std::size_t>(nv));
                for (int j = 0; j < nv; ++j) {
                    GradedPolynomial prod = pol->normal_form(GradedPolynomial::term(
                        pol->vars, pol->basis.ring,
                        basis[s].times(Monomial::variable(*pol->vars, j, 1)), Rat(1)));
                    raw[s][static_cast<std::size_t>(j)] = pol->nf_vector(prod, d + 2);
                    for (const Rat& c : raw[s][static_cast<std::size_t>(j)])
                        denominator = boost::multiprecision::lcm(denominator, c.denominator());
                }
            }
            for (std::size_t s = 0; s < basis.size(); ++s) {
                slot[s].resize(static_cast<std::size_t>(nv));
                for (int j = 0; j < nv; ++j) {
                    auto& cell = slot[s][static_cast<std::size_t>(j)];
                    cell.reserve(target.size());
                    for (const Rat& c : raw[s][static_cast<std::size_t>(j)])
                        cell.push_back(c.numerator() * (denominator / c.denominator()));
                }
            }
        }
        for (int d = 4; d <= top; d += 2) {
            const auto& basis = pol->graded_basis[static_cast<std::size_t>(d)];
            const auto& lower = pol->graded_basis[static_cast<std::size_t>(d - 2)];
            auto& slot = factor[static_cast<std::size_t>(d)];
            slot.reserve(basis.size());
            for (const Monomial& mono : basis) {
                int j = 0;
                while (mono.exponent(j) == 0) ++j;
                Monomial quotient = mono.divided_by(Monomial::variable(*pol->vars, j, 1));
                int s = -1;
                for (std::size_t k = 0; k < lower.size(); ++k)
                    if (lower[k] == quotient) {
                        s = static_cast<int>(k);
                        break;
                    }
                if (s < 0) throw std::logic_error("standard monomial with a non-standard divisor");
                slot.emplace_back(s, j);
            }
        }
    }
};

}  // namespace

std::vector<int> invariant_dimensions(int m) {
    require_odd(m);
    if (m > 7) throw TooLargeError("group averaging is limited to m <= 7");
    std::vector<Rat> ones(static_cast<std::size_t>(m), Rat(1));
    RingPresentation pol = build_pol_presentation(LengthVector(ones));
    const int top = pol.top_degree;
    const int nv = pol.vars->count();
    if (pol.dimensions[2] != nv)
        throw std::logic_error("expected every degree-2 monomial to be standard");

    MultiplicationTables tables(pol);
    std::vector<std::vector<std::vector<Int>>> sums(static_cast<std::size_t>(top) + 1);
    for (int d = 2; d <= top; d += 2) {
        std::size_t n = pol.graded_basis[static_cast<std::size_t>(d)].size();
        sums[static_cast<std::size_t>(d)].assign(n, std::vector<Int>(n, Int(0)));
    }

    // positions of the degree-2 basis monomials as variable indices
    std::vector<int> position_variable(static_cast<std::size_t>(nv), -1);
    for (int pos = 0; pos < nv; ++pos) {
        const Monomial& mono = pol.graded_basis[2][static_cast<std::size_t>(pos)];
        for (int i = 0; i < nv; ++i)
            if (mono.exponent(i) == 1) position_variable[static_cast<std::size_t>(pos)] = i;
    }

    std::vector<int> perm(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
        PermutationAction action(pol, perm);
        // sparse integer images of the variables: pairs (variable, value)
        std::vector<std::vector<std::pair<int, Int>>> images(static_cast<std::size_t>(nv));
        std::vector<std::vector<Rat>> image_coords(static_cast<std::size_t>(nv));
        for (int i = 0; i < nv; ++i) {
            std::vector<Rat> coords = pol.nf_vector(pol.normal_form(action.variable_image(i)), 2);
            for (int pos = 0; pos < nv; ++pos) {
                const Rat& c = coords[static_cast<std::size_t>(pos)];
                if (c.numerator() == 0) continue;
                if (c.denominator() != 1)
                    throw std::logic_error("the edge permutation action must be integral");
                images[static_cast<std::size_t>(i)].emplace_back(
                    position_variable[static_cast<std::size_t>(pos)], c.numerator());
            }
            image_coords[static_cast<std::size_t>(i)] = std::move(coords);
        }
        // degree 2 matrix: column = coordinates of the image of that basis monomial
        std::vector<std::vector<Int>> current(static_cast<std::size_t>(nv),
                                              std::vector<Int>(static_cast<std::size_t>(nv), Int(0)));
        for (int col = 0; col < nv; ++col) {
            const auto& coords = image_coords[static_cast<std::size_t>(
                position_variable[static_cast<std::size_t>(col)])];
            for (int row = 0; row < nv; ++row)
                current[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                    coords[static_cast<std::size_t>(row)].numerator();
        }
        for (std::size_t r = 0; r < current.size(); ++r)
            for (std::size_t c = 0; c < current.size(); ++c)
                sums[2][r][c] += current[r][c];

        for (int d = 4; d <= top; d += 2) {
            const auto& target = pol.graded_basis[static_cast<std::size_t>(d)];
            const auto& lower = pol.graded_basis[static_cast<std::size_t>(d - 2)];
            const auto& mult = tables.table[static_cast<std::size_t>(d - 2)];
            std::vector<std::vector<Int>> next(target.size(),
                                               std::vector<Int>(target.size(), Int(0)));
            for (std::size_t t = 0; t < target.size(); ++t) {
                auto [s, j] = tables.factor[static_cast<std::size_t>(d)][t];
                for (std::size_t sp = 0; sp < lower.size(); ++sp) {
                    const Int& u = current[sp][static_cast<std::size_t>(s)];
                    if (u == 0) continue;
                    for (const auto& [xj, w] : images[static_cast<std::size_t>(j)]) {
                        const auto& cell = mult[sp][static_cast<std::size_t>(xj)];
                        Int scale = u * w;
                        for (std::size_t row = 0; row < target.size(); ++row)
                            next[row][t] += scale * cell[row];
                    }
                }
            }
            for (std::size_t r = 0; r < target.size(); ++r)
                for (std::size_t c = 0; c < target.size(); ++c)
                    sums[static_cast<std::size_t>(d)][r][c] += next[r][c];
            current = std::move(next);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> dims(static_cast<std::size_t>(top) + 1, 0);
    dims[0] = 1;  // constants are always fixed
    for (int d = 2; d <= top; d += 2) {
        std::vector<std::vector<Rat>> rational;
        for (const auto& row : sums[static_cast<std::size_t>(d)]) {
            std::vector<Rat> r;
            r.reserve(row.size());
            for (const Int& v : row) r.emplace_back(v);
            rational.push_back(std::move(r));
        }
        dims[static_cast<std::size_t>(d)] = rational_rank(std::move(rational));
    }
    return dims;
}

bool mod2_action_is_standard(int m) {
    require_odd(m);
    auto matrix = standardization_matrix(Int(m), Int(1), m);
    return rank_mod2(matrix) == m;
}

}  // namespace polyspace
