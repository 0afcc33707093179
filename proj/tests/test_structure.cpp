#include <doctest.h>

#include <random>

#include "hdform/constructions.hpp"
#include "hdform/cyclic.hpp"
#include "hdform/structure.hpp"

using namespace hdform;

namespace {

Rational q(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

Vec basis_vec(int n, int i) {
    Vec v(n, q(0));
    v[i - 1] = 1;
    return v;
}

// Independent recheck of the center identity through evaluate.
bool center_identity_holds(const SymmetricForm& f, const Matrix& m) {
    const int n = f.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (const MultiIndex& tail : sorted_multi_indices(n, f.degree() - 2)) {
                std::vector<Vec> left{m.apply(basis_vec(n, i)), basis_vec(n, j)};
                std::vector<Vec> right{basis_vec(n, i), m.apply(basis_vec(n, j))};
                for (int t : tail) {
                    left.push_back(basis_vec(n, t));
                    right.push_back(basis_vec(n, t));
                }
                if (evaluate(f, left) != evaluate(f, right)) return false;
            }
    return true;
}

Matrix random_invertible(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> pick(-3, 3);
    while (true) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = q(pick(rng));
        if (is_invertible(m)) return m;
    }
}

}  // namespace

TEST_CASE("radical basics") {
    CHECK(radical(cyclic_form(3, 3).form).empty());
    CHECK(radical(cyclic_form(4, 4).form).empty());
    CHECK(is_regular(cyclic_form(5, 3).form));

    const SymmetricForm zero(3, 3);
    const auto rad = radical(zero);
    REQUIRE(rad.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(rad[i] == basis_vec(3, i + 1));

    SymmetricForm cube(2, 3);  // x1^3 on a 2-dim space
    cube.set_entry({1, 1, 1}, q(1));
    const auto rad2 = radical(cube);
    REQUIRE(rad2.size() == 1);
    CHECK(rad2[0] == basis_vec(2, 2));
    CHECK(!is_regular(cube));
}

TEST_CASE("center of the cyclic form is the shift polynomial algebra") {
    for (int n = 2; n <= 5; ++n)
        for (int d = 3; d <= 4; ++d) {
            const CyclicData c = cyclic_form(n, d);
            const CenterResult result = center(c.form);
            CHECK(result.input_regular);
            REQUIRE(result.basis.dim() == n);
            std::vector<Matrix> powers;
            for (int k = 0; k < n; ++k) powers.push_back(c.psi.pow(k));
            CHECK(span_equal(result.basis.members, powers));
            // the echelon normalization makes the powers themselves the basis
            CHECK(result.basis.members == powers);
        }
}

TEST_CASE("center members pass the defining identity and commute") {
    const SymmetricForm f = cyclic_form(4, 3).form;
    const auto c = center(f).basis;
    for (const Matrix& m : c.members) CHECK(center_identity_holds(f, m));
    for (const Matrix& x : c.members)
        for (const Matrix& y : c.members) {
            CHECK(x * y == y * x);
            CHECK(span_contains(c.members, x * y));  // closed under multiplication
        }
}

TEST_CASE("center of a diagonal form is the diagonal algebra") {
    const SymmetricForm f = diagonal_form({q(1), q(1)}, 3);
    const auto c = center(f).basis;
    CHECK(c.dim() == 2);
    for (const Matrix& m : c.members) {
        CHECK(m.at(0, 1) == 0);
        CHECK(m.at(1, 0) == 0);
    }
}

TEST_CASE("center dimension is additive for orthogonal sums") {
    const SymmetricForm a = cyclic_form(3, 3).form;
    const SymmetricForm b = diagonal_form({q(1), q(2)}, 3);
    CHECK(center(orthogonal_sum(a, b)).basis.dim() == center(a).basis.dim() + center(b).basis.dim());
}

TEST_CASE("irregular input is flagged") {
    SymmetricForm cube(2, 3);
    cube.set_entry({1, 1, 1}, q(1));
    CHECK(!center(cube).input_regular);
}

TEST_CASE("centralizer examples") {
    AlgebraBasis scalars;
    scalars.dim_space = 3;
    scalars.members = {Matrix::identity(3)};
    CHECK(centralizer(scalars).dim() == 9);
    CHECK(!is_maximal_center(scalars));

    AlgebraBasis diag;
    diag.dim_space = 2;
    diag.members = {Matrix(2, 2, {1, 0, 0, 2})};
    const auto comm = centralizer(diag);
    CHECK(comm.dim() == 2);
    for (const Matrix& m : comm.members) {
        CHECK(m.at(0, 1) == 0);
        CHECK(m.at(1, 0) == 0);
    }

    const CyclicData c = cyclic_form(4, 3);
    const auto cen = center(c.form).basis;
    CHECK(span_equal(centralizer(cen).members, cen.members));
    CHECK(is_maximal_center(cen));
}

TEST_CASE("decompose splits a diagonal form into lines") {
    const SymmetricForm f = diagonal_form({q(1), q(1)}, 3);
    const Decomposition dec = decompose(f);
    REQUIRE(dec.components.size() == 2);
    for (const auto& comp : dec.components) CHECK(comp.form.dim() == 1);
    CHECK(!dec.indecomposable_over_Q());
    CHECK(is_invertible(dec.basis_change));
}

TEST_CASE("the cyclic form is indecomposable over the rationals") {
    const Decomposition dec = decompose(cyclic_form(4, 3).form);
    CHECK(dec.components.size() == 1);
    CHECK(dec.indecomposable_over_Q());
    CHECK(dec.components[0].form == cyclic_form(4, 3).form);
}

TEST_CASE("decompose recovers a conjugated orthogonal sum") {
    std::mt19937 rng(53);
    const SymmetricForm block = orthogonal_sum(cyclic_form(2, 3).form, cyclic_form(2, 3).form);
    for (int trial = 0; trial < 3; ++trial) {
        const Matrix m = random_invertible(rng, 4);
        const SymmetricForm f = transform(block, m);
        const Decomposition dec = decompose(f);
        REQUIRE(dec.components.size() == 2);
        for (const auto& comp : dec.components) {
            CHECK(comp.form.dim() == 2);
            CHECK(is_regular(comp.form));
            // both blocks are the 2-dim cyclic space up to the invariants we track
            CHECK(center(comp.form).basis.dim() == 2);
        }
        // mixed entries vanish after the block-diagonalizing change of basis
        const SymmetricForm diag = transform(f, dec.basis_change);
        CHECK(diag == orthogonal_sum(dec.components[0].form, dec.components[1].form));
        CHECK_MESSAGE(true, "components are orthogonal blocks");
    }
}

TEST_CASE("decompose rejects irregular forms") {
    SymmetricForm cube(2, 3);
    cube.set_entry({1, 1, 1}, q(1));
    CHECK_THROWS_AS(decompose(cube), std::invalid_argument);
}

TEST_CASE("two-regularity falsifier") {
    // first basis vector pairs to zero with itself everywhere
    const auto witness = two_regular_falsifier(cyclic_form(3, 3).form, 2);
    REQUIRE(witness.has_value());
    CHECK(*witness == basis_vec(3, 1));

    const auto zero_witness = two_regular_falsifier(SymmetricForm(2, 3), 1);
    REQUIRE(zero_witness.has_value());
    CHECK(*zero_witness == basis_vec(2, 1));

    CHECK(!two_regular_falsifier(diagonal_form({q(1), q(1)}, 3), 3).has_value());

    // replay: a returned witness really zeroes all pairings
    const SymmetricForm f = cyclic_form(4, 3).form;
    const auto w = two_regular_falsifier(f, 2);
    REQUIRE(w.has_value());
    for (const MultiIndex& tail : sorted_multi_indices(4, 1)) {
        std::vector<Vec> tuple{*w, *w, basis_vec(4, tail[0])};
        CHECK(evaluate(f, tuple) == 0);
    }
}
