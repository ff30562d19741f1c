#include "doctest.h"

#include "litalg/algebra.hpp"

using namespace litalg;

namespace {

Quiver loop_quiver() {
    Quiver q;
    q.vertex_count = 1;
    q.arrows = {{"x", 1, 1}};
    return q;
}

Quiver a2() {
    Quiver q;
    q.vertex_count = 2;
    q.arrows = {{"a", 1, 2}};
    return q;
}

}  // namespace

TEST_CASE("bound quiver algebras") {
    Field f2(2);
    auto dual = build_bound_quiver_algebra(loop_quiver(), std::vector<std::string>{"x*x"}, f2);
    CHECK(dual->dim() == 2);
    CHECK(dual->labels() == std::vector<std::string>{"e1", "x"});
    CHECK(dual->loewy_length() == 2);
    auto path = build_bound_quiver_algebra(a2(), std::vector<std::string>{}, f2);
    CHECK(path->dim() == 3);
    CHECK(path->labels() == std::vector<std::string>{"e1", "e2", "a"});
    CHECK(path->projective_basis(0).cols() == 2);
    CHECK(path->projective_basis(1).cols() == 1);
    CHECK_THROWS_AS(
        build_bound_quiver_algebra(loop_quiver(), std::vector<std::string>{"x - e1"}, f2),
        InvalidInput);
    CHECK_THROWS_AS(build_bound_quiver_algebra(loop_quiver(), std::vector<std::string>{}, f2),
                    InvalidInput);
    auto cubic = build_bound_quiver_algebra(loop_quiver(), std::vector<std::string>{"x*x*x"}, f2);
    CHECK(cubic->dim() == 3);
}

TEST_CASE("relations with several terms") {
    Field f3(3);
    Quiver q;
    q.vertex_count = 4;
    q.arrows = {{"a", 1, 2}, {"b", 2, 4}, {"c", 1, 3}, {"d", 3, 4}};
    auto comm = build_bound_quiver_algebra(q, std::vector<std::string>{"b*a - d*c"}, f3);
    CHECK(comm->dim() == 4 + 4 + 1);
    auto zero = build_bound_quiver_algebra(q, std::vector<std::string>{"b*a", "d*c"}, f3);
    CHECK(zero->dim() == 8);
    CHECK_THROWS_AS(build_bound_quiver_algebra(q, std::vector<std::string>{"a*b"}, f3),
                    InvalidInput);
}

TEST_CASE("opposite") {
    Field f2(2);
    auto path = build_bound_quiver_algebra(a2(), std::vector<std::string>{}, f2);
    auto op = opposite(path);
    CHECK(op->dim() == 3);
    REQUIRE(op->arrows().size() == 1);
    CHECK(op->arrows()[0].source == 1);
    CHECK(op->arrows()[0].target == 0);
    CHECK(op->projective_basis(1).cols() == 2);
    CHECK(opposite(op)->same_structure(*path));
    auto dual = build_bound_quiver_algebra(loop_quiver(), std::vector<std::string>{"x*x"}, f2);
    CHECK(opposite(dual)->same_structure(*dual));
}

TEST_CASE("triangular algebras") {
    Field f2(2);
    auto t = build_bound_quiver_algebra(loop_quiver(), std::vector<std::string>{"x*x"}, f2);
    auto lam = triangular(t, t, Bimodule::regular(t));
    CHECK(lam->dim() == 6);
    CHECK(lam->idempotent_count() == 2);
    CHECK(lam->loewy_length() == 3);
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < 2; ++i) {
        l.push_back(t->left_mult(i));
        r.push_back(t->left_mult(i));  // wrong side on purpose
    }
    auto path = build_bound_quiver_algebra(a2(), std::vector<std::string>{}, f2);
    std::vector<Matrix> lp, rp;
    for (std::size_t i = 0; i < 3; ++i) {
        lp.push_back(path->left_mult(i));
        rp.push_back(path->left_mult(i));
    }
    CHECK_THROWS_AS(Bimodule(path, path, 3, lp, rp), InvalidInput);
}

TEST_CASE("quivers of type A") {
    QuiverAnSpec s;
    s.n = 3;
    s.change_vertices = {2};
    auto q = build_quiver_An(s);
    REQUIRE(q.arrows.size() == 2);
    CHECK(q.arrows[0].source == 1);
    CHECK(q.arrows[0].target == 2);
    CHECK(q.arrows[1].source == 3);
    CHECK(q.arrows[1].target == 2);
    s.change_vertices = {1};
    CHECK_THROWS_AS(build_quiver_An(s), InvalidInput);
    QuiverAnSpec two;
    two.n = 2;
    auto q2 = build_quiver_An(two);
    CHECK(q2.arrows[0].source == 1);
    CHECK(q2.arrows[0].target == 2);
    CHECK(q.is_type_A());
}

TEST_CASE("tensor with a path algebra") {
    Field f2(2);
    auto t = build_bound_quiver_algebra(loop_quiver(), std::vector<std::string>{"x*x"}, f2);
    auto tq = tensor_with_path_algebra(t, a2());
    CHECK(tq->dim() == 6);
    CHECK(tq->idempotent_count() == 2);
    Quiver single;
    single.vertex_count = 1;
    auto t1 = tensor_with_path_algebra(t, single);
    CHECK(algebras_isomorphic_as_presented(*t, *t1, basis_map_by_labels(*t, *t1, "|e1")));

    // T (x) k(1->2) against (T 0; T T): t|e1 -> T block, t|e2 -> U block, t|a -> M block
    auto lam = triangular(t, t, Bimodule::regular(t));
    Matrix map(f2, 6, 6);
    for (std::size_t i = 0; i < 2; ++i) {
        map(i, tq->index_of(t->labels()[i] + "|e1")) = 1;
        map(2 + i, tq->index_of(t->labels()[i] + "|e2")) = 1;
        map(4 + i, tq->index_of(t->labels()[i] + "|a")) = 1;
    }
    CHECK(algebras_isomorphic_as_presented(*tq, *lam, map));
    CHECK(algebras_isomorphic_as_presented(*t, *t, Matrix::identity(f2, 2)));
    Matrix bad = Matrix::identity(f2, 2);
    bad(0, 0) = 0;
    bad(1, 0) = 1;
    bad(0, 1) = 1;
    bad(1, 1) = 0;
    CHECK_FALSE(algebras_isomorphic_as_presented(*t, *t, bad));
}

TEST_CASE("corner algebras") {
    Field f2(2);
    auto t = build_bound_quiver_algebra(loop_quiver(), std::vector<std::string>{"x*x"}, f2);
    auto lam = triangular(t, t, Bimodule::regular(t));
    auto c = corner_algebra(lam, {1});
    CHECK(c.algebra->dim() == 2);
    CHECK(c.algebra->loewy_length() == 2);
}
