#include <doctest.h>

#include <algorithm>
#include <random>

#include "hdform/cyclic.hpp"
#include "hdform/form.hpp"
#include "hdform/json_io.hpp"

using namespace hdform;

namespace {

Rational q(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

Vec basis_vec(int n, int i) {
    Vec v(n, q(0));
    v[i - 1] = 1;
    return v;
}

Vec random_vec(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    Vec v(n);
    for (auto& x : v) x = q(num(rng), den(rng));
    return v;
}

HomoPoly sum_of_cubes(int n) {
    HomoPoly p(n, 3);
    for (int i = 0; i < n; ++i) {
        ExponentVec e(n, 0);
        e[i] = 3;
        p.set_coeff(e, q(1));
    }
    return p;
}

}  // namespace

TEST_CASE("polarize on diagonal and mixed monomials") {
    const SymmetricForm cubes = polarize(sum_of_cubes(2));
    CHECK(cubes.entries().size() == 2);
    CHECK(cubes.entry({1, 1, 1}) == q(1));
    CHECK(cubes.entry({2, 2, 2}) == q(1));

    const SymmetricForm single = polarize(sum_of_cubes(1));
    CHECK(single.entries().size() == 1);
    CHECK(single.entry({1, 1, 1}) == q(1));

    HomoPoly mixed(2, 3);  // x1^2 x2
    mixed.set_coeff({2, 1}, q(1));
    const SymmetricForm f = polarize(mixed);
    CHECK(f.entries().size() == 1);
    CHECK(f.entry({1, 1, 2}) == q(1, 3));
    CHECK(associated_poly(f) == mixed);
}

TEST_CASE("associated_poly multiplies entries by the multinomial") {
    const SymmetricForm f = cyclic_form(3, 3).form;
    const HomoPoly p = associated_poly(f);
    CHECK(p.terms().size() == 2);
    CHECK(p.coeff({0, 2, 1}) == q(3));  // 3 x2^2 x3
    CHECK(p.coeff({1, 0, 2}) == q(3));  // 3 x1 x3^2
}

TEST_CASE("polarize and associated_poly are mutually inverse") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 3, d = 3 + trial % 2;
        SymmetricForm f(n, d);
        for (const MultiIndex& idx : sorted_multi_indices(n, d)) {
            const long c = coeff(rng);
            if (c != 0 && trial % 2 == 0) f.set_entry(idx, q(c));
        }
        CHECK(polarize(associated_poly(f)) == f);
    }
}

TEST_CASE("evaluate on the cyclic form") {
    const SymmetricForm f = cyclic_form(3, 3).form;
    CHECK(evaluate(f, {basis_vec(3, 2), basis_vec(3, 2), basis_vec(3, 3)}) == q(1));
    CHECK(evaluate(f, {basis_vec(3, 1), basis_vec(3, 2), basis_vec(3, 3)}) == q(0));

    Vec v12 = basis_vec(3, 1);
    v12[1] = 1;  // v_1 + v_2
    CHECK(evaluate(f, {v12, basis_vec(3, 2), basis_vec(3, 3)}) == q(1));

    CHECK(evaluate(f, {Vec(3, q(0)), basis_vec(3, 2), basis_vec(3, 3)}) == q(0));
    CHECK_THROWS_AS(evaluate(f, {basis_vec(3, 1), basis_vec(3, 2)}), std::invalid_argument);
}

TEST_CASE("evaluate is symmetric and multilinear") {
    std::mt19937 rng(37);
    const SymmetricForm f = cyclic_form(4, 3).form;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Vec> vs{random_vec(rng, 4), random_vec(rng, 4), random_vec(rng, 4)};
        const Rational base = evaluate(f, vs);

        std::vector<Vec> shuffled(vs);
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(evaluate(f, shuffled) == base);

        const Rational a = q(2, 3), b = q(-5, 2);
        const Vec u = random_vec(rng, 4);
        Vec combo(4);
        for (int i = 0; i < 4; ++i) combo[i] = a * vs[0][i] + b * u[i];
        std::vector<Vec> left{combo, vs[1], vs[2]}, right{u, vs[1], vs[2]};
        CHECK(evaluate(f, left) == a * base + b * evaluate(f, right));
    }
}

TEST_CASE("transform matches direct evaluation and composes") {
    std::mt19937 rng(41);
    const SymmetricForm f = cyclic_form(3, 3).form;
    CHECK(transform(f, Matrix::identity(3)) == f);

    // scaling multiplies every value by c^d
    const SymmetricForm doubled = transform(f, Matrix::identity(3) * q(2));
    for (const auto& [idx, value] : f.entries()) CHECK(doubled.entry(idx) == value * q(8));

    for (int trial = 0; trial < 10; ++trial) {
        Matrix a(3, 3), b(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a.at(i, j) = random_vec(rng, 1)[0];
                b.at(i, j) = random_vec(rng, 1)[0];
            }
        CHECK(transform(transform(f, a), b) == transform(f, a * b));

        // entries of the transformed form are direct evaluations
        const SymmetricForm g = transform(f, a);
        std::vector<Vec> cols;
        for (int j = 0; j < 3; ++j) {
            Vec col(3);
            for (int i = 0; i < 3; ++i) col[i] = a.at(i, j);
            cols.push_back(col);
        }
        for (const MultiIndex& idx : sorted_multi_indices(3, 3)) {
            std::vector<Vec> tuple;
            for (int i : idx) tuple.push_back(cols[i - 1]);
            CHECK(g.entry(idx) == evaluate(f, tuple));
        }
    }
}

TEST_CASE("the diagonal scaling fixing the cyclic form") {
    const SymmetricForm f = cyclic_form(3, 3).form;
    Matrix sigma(3, 3);
    sigma.at(0, 0) = q(16);
    sigma.at(1, 1) = q(2);
    sigma.at(2, 2) = q(1, 4);
    CHECK(transform(f, sigma) == f);
    CHECK(is_isometry(f, sigma));
}

TEST_CASE("is_isometry accepts the unipotent example and rejects a stretch") {
    const SymmetricForm f = cyclic_form(3, 3).form;
    const Matrix tau(3, 3, {1, 2, -1, 0, 1, -1, 0, 0, 1});
    CHECK(is_isometry(f, tau));

    Matrix stretch = Matrix::identity(3);
    stretch.at(0, 0) = q(2);
    CHECK(!is_isometry(f, stretch));
    CHECK(!is_isometry(f, Matrix(3, 3)));  // singular
}

TEST_CASE("orthogonal sums concatenate entries and split evaluations") {
    const SymmetricForm cube1 = polarize(sum_of_cubes(1));
    const SymmetricForm two = orthogonal_sum(cube1, cube1);
    CHECK(two.dim() == 2);
    CHECK(two.entry({1, 1, 1}) == q(1));
    CHECK(two.entry({2, 2, 2}) == q(1));
    CHECK(two.entries().size() == 2);

    const SymmetricForm a = cyclic_form(3, 3).form, b = cyclic_form(4, 3).form;
    const SymmetricForm sum = orthogonal_sum(a, b);
    CHECK(sum.dim() == 7);

    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vec> va, vb, vsum;
        for (int s = 0; s < 3; ++s) {
            const Vec x = random_vec(rng, 3), y = random_vec(rng, 4);
            Vec z(x);
            z.insert(z.end(), y.begin(), y.end());
            va.push_back(x);
            vb.push_back(y);
            vsum.push_back(z);
        }
        CHECK(evaluate(sum, vsum) == evaluate(a, va) + evaluate(b, vb));
    }

    CHECK_THROWS_AS(orthogonal_sum(a, cyclic_form(3, 4).form), std::invalid_argument);
}

TEST_CASE("form JSON round-trips and rejects malformed input") {
    const SymmetricForm f = cyclic_form(3, 3).form;
    const auto j = form_to_json(f);
    CHECK(form_from_json(j) == f);
    CHECK(parse_form(j.dump()) == f);

    // unreduced rationals normalize on the way in
    const SymmetricForm raw = parse_form(R"({"dim":2,"degree":3,"entries":[{"idx":[1,1,2],"value":"2/4"}]})");
    CHECK(raw.entry({1, 1, 2}) == q(1, 2));
    CHECK(form_to_json(raw)["entries"][0]["value"] == "1/2");

    CHECK_THROWS_AS(parse_form("{"), ParseError);
    CHECK_THROWS_AS(parse_form(R"({"dim":1,"degree":3,"entries":[{"idx":[1,1,1],"value":"0"}]})"), ParseError);
    CHECK_THROWS_AS(parse_form(R"({"dim":2,"degree":3,"entries":[{"idx":[2,1,1],"value":"1"}]})"), ParseError);
    CHECK_THROWS_AS(
        parse_form(R"({"dim":2,"degree":3,"entries":[{"idx":[1,1,2],"value":"1"},{"idx":[1,1,2],"value":"2"}]})"),
        ParseError);
    CHECK_THROWS_AS(parse_form(R"({"dim":2,"degree":3,"entries":[{"idx":[1,1,3],"value":"1"}]})"), ParseError);
    CHECK_THROWS_AS(parse_form(R"({"dim":2,"degree":3,"entries":[{"idx":[1,1],"value":"1"}]})"), ParseError);
    CHECK_THROWS_AS(parse_form(R"({"dim":2,"degree":3,"entries":[{"idx":[1,1,2],"value":"1/0"}]})"), ParseError);
}
