#include "doctest.h"

#include "litalg/module.hpp"

using namespace litalg;

namespace {

Field f2(2);

AlgebraPtr dual_numbers() {
    Quiver q;
    q.vertex_count = 1;
    q.arrows = {{"x", 1, 1}};
    return build_bound_quiver_algebra(q, std::vector<std::string>{"x*x"}, f2, "dual");
}

AlgebraPtr path_a2() {
    Quiver q;
    q.vertex_count = 2;
    q.arrows = {{"a", 1, 2}};
    return build_bound_quiver_algebra(q, std::vector<std::string>{}, f2, "A2");
}

}  // namespace

TEST_CASE("projective indecomposables and simples") {
    auto t = dual_numbers();
    CHECK(projective_indecomposable(t, 0).dim() == 2);
    auto a = path_a2();
    CHECK(projective_indecomposable(a, 0).dim() == 2);
    CHECK(projective_indecomposable(a, 1).dim() == 1);
    CHECK_THROWS_AS(projective_indecomposable(a, 2), InvalidInput);
}

TEST_CASE("hom spaces") {
    auto t = dual_numbers();
    auto tt = regular_module(t);
    auto s = simple_module(t, 0);
    CHECK(hom_basis(tt, s).size() == 1);
    CHECK(hom_basis(s, s).size() == 1);
    CHECK(hom_basis(tt, tt).size() == 2);
    auto a = path_a2();
    CHECK(hom_basis(simple_module(a, 0), simple_module(a, 1)).empty());
    CHECK(hom_basis(projective_indecomposable(a, 1), projective_indecomposable(a, 0)).size() == 1);
    for (const auto& h : hom_basis(tt, s))
        CHECK(is_morphism(tt, s, h));
}

TEST_CASE("generator actions are validated") {
    auto t = dual_numbers();
    Matrix e = Matrix::identity(f2, 2);
    Matrix x = Matrix::from_rows(f2, {{0, 0}, {1, 0}});
    auto m = Module::from_generator_actions(t, 2, {e, x});
    CHECK(m.dim() == 2);
    Matrix bad = Matrix::identity(f2, 2);  // x*x != 0
    CHECK_THROWS_AS(Module::from_generator_actions(t, 2, {e, bad}), InvalidInput);
}

TEST_CASE("radical, top, covers and syzygies") {
    Rng rng(1);
    auto t = dual_numbers();
    auto tt = regular_module(t);
    auto s = simple_module(t, 0);
    auto rt = radical_and_top(tt);
    CHECK(rt.top.module.dim() == 1);
    CHECK(rt.radical.module.dim() == 1);
    CHECK(radical_and_top(direct_sum(t, {s, s})).radical.module.dim() == 0);
    auto cov = projective_cover(s);
    CHECK(cov.cover.dim() == 2);
    CHECK(is_isomorphic(cov.syzygy, s, rng));
    CHECK(syzygy(tt, 1).dim() == 0);
    CHECK(projective_cover(Module::zero(t)).cover.dim() == 0);
    auto a = path_a2();
    auto s1 = simple_module(a, 0);
    CHECK(is_isomorphic(syzygy(s1, 1), projective_indecomposable(a, 1), rng));
    CHECK(pd_bounded(s1, 5).finite);
    CHECK(pd_bounded(s1, 5).value == 1);
    CHECK(pd_bounded(tt, 5).value == 0);
    auto ps = pd_bounded(s, 10);
    CHECK_FALSE(ps.finite);
    CHECK(ps.value == 10);
}

TEST_CASE("decomposition") {
    Rng rng(2);
    auto a = path_a2();
    auto reg = decompose(regular_module(a), rng);
    REQUIRE(reg.parts.size() == 2);
    CHECK(reg.part_count() == 2);
    CHECK(reg.parts[0].projective);
    CHECK(reg.parts[1].projective);
    auto t = dual_numbers();
    auto tt = regular_module(t);
    auto s = simple_module(t, 0);
    auto d = decompose(direct_sum(t, {tt, s, s}), rng);
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0].module.dim() == 1);
    CHECK(d.parts[0].multiplicity == 2);
    CHECK_FALSE(d.parts[0].projective);
    CHECK(d.parts[1].multiplicity == 1);
    CHECK(d.parts[1].projective);
    CHECK(decompose(Module::zero(t), rng).parts.empty());
    auto m = change_basis(direct_sum(t, {tt, s, tt}), random_invertible(f2, 5, rng));
    auto dm = decompose(m, rng);
    CHECK(dm.part_count() == 3);
    CHECK(strip_projectives(m, rng).dim() == 1);
    CHECK(strip_projectives(tt, rng).dim() == 0);
}

TEST_CASE("isomorphism tests") {
    Rng rng(3);
    auto t = dual_numbers();
    auto tt = regular_module(t);
    auto s = simple_module(t, 0);
    CHECK_FALSE(is_isomorphic(s, tt, rng));
    auto m = direct_sum(t, {tt, s});
    CHECK(is_isomorphic(m, change_basis(m, random_invertible(f2, 3, rng)), rng));
    CHECK_FALSE(is_isomorphic(direct_sum(t, {s, s, s}), m, rng));
    CHECK(is_projective(tt));
    CHECK_FALSE(is_projective(s));
    CHECK(is_projective(Module::zero(t)));
}

TEST_CASE("exact sequences and horseshoe") {
    Rng rng(4);
    auto t = dual_numbers();
    auto tt = regular_module(t);
    auto s = simple_module(t, 0);
    // 0 -> S -> T -> S -> 0; basis of T is (e, x)
    ShortExactSequence seq{s, tt, s, Matrix::from_rows(f2, {{0}, {1}}),
                           Matrix::from_rows(f2, {{1, 0}})};
    CHECK(check_exact(seq));
    ShortExactSequence split{s, direct_sum(t, {s, s}), s, Matrix::from_rows(f2, {{1}, {1}}),
                             Matrix::from_rows(f2, {{1, 1}})};
    CHECK(check_exact(split));
    ShortExactSequence wrong{s, tt, tt, Matrix::from_rows(f2, {{0}, {1}}),
                             Matrix::identity(f2, 2)};
    CHECK_FALSE(check_exact(wrong));
    auto hs = horseshoe(seq);
    CHECK(check_exact(hs.sequence));
    CHECK(is_isomorphic(hs.sequence.left, s, rng));
    CHECK(is_isomorphic(hs.sequence.right, s, rng));
    CHECK(hs.sequence.middle.dim() == 2);
    auto hs2 = horseshoe(split);
    CHECK(check_exact(hs2.sequence));
    CHECK(is_isomorphic(hs2.sequence.middle, direct_sum(t, {s, s}), rng));
    ShortExactSequence proj{tt, direct_sum(t, {tt, tt}), tt,
                            Matrix::vstack(f2, 2, {Matrix::identity(f2, 2), Matrix(f2, 2, 2)}),
                            Matrix::hstack(f2, 2, {Matrix(f2, 2, 2), Matrix::identity(f2, 2)})};
    auto hs3 = horseshoe(proj);
    CHECK(hs3.sequence.left.dim() == 0);
    CHECK(hs3.sequence.right.dim() == 0);
    CHECK(is_projective(hs3.sequence.middle));
}
