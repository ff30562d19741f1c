#include "doctest.h"

#include "litalg/itfun.hpp"

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

TEST_CASE("bracket and L") {
    Rng rng(5);
    IsoClassTable table;
    auto t = dual_numbers();
    auto s = simple_module(t, 0);
    auto tt = regular_module(t);
    auto b = bracket(direct_sum(t, {s, tt}), table, rng);
    CHECK(b.size() == 1);
    CHECK(bracket(tt, table, rng).empty());
    CHECK(bracket(direct_sum(t, {s, s}), table, rng) == b);
    CHECK(apply_L(b, table, rng) == b);
    CHECK(apply_L({}, table, rng).empty());
    auto a = path_a2();
    auto s1 = bracket(simple_module(a, 0), table, rng);
    CHECK(s1.size() == 1);
    CHECK(apply_L(s1, table, rng).empty());
}

TEST_CASE("rank sequences and phi") {
    Rng rng(6);
    IsoClassTable table;
    auto a = path_a2();
    auto s1 = simple_module(a, 0);
    CHECK(rank_sequence(s1, 2, table, rng) == std::vector<std::size_t>{1, 0, 0});
    CHECK(rank_sequence(regular_module(a), 3, table, rng) == std::vector<std::size_t>{0, 0, 0, 0});
    auto t = dual_numbers();
    auto s = simple_module(t, 0);
    CHECK(rank_sequence(s, 3, table, rng) == std::vector<std::size_t>{1, 1, 1, 1});
    auto p1 = phi(s1, table, rng);
    CHECK(p1.value == 1);
    CHECK(p1.exact);
    CHECK(phi(regular_module(t), table, rng).value == 0);
    CHECK(phi(s, table, rng).value == 0);
    CHECK(phi_dim({s, regular_module(t)}, table, rng).value == 0);
    CHECK(phi_dim({}, table, rng).value == 0);
    CHECK(phi_dim({s1}, table, rng).value == 1);
}

TEST_CASE("linear rank differs from counting classes") {
    CHECK(class_rank({{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}}) == 1);
    CHECK(class_rank({{{0, 1}}, {{1, 1}}, {{0, 1}, {1, -1}}}) == 2);
    CHECK(class_rank({}) == 0);
}

TEST_CASE("phi over the three-vertex path algebra") {
    // Over k(1->2->3) pd S1 = 1, pd S2 = 1 and Phi agrees.
    Rng rng(7);
    IsoClassTable table;
    Quiver q;
    q.vertex_count = 3;
    q.arrows = {{"a", 1, 2}, {"b", 2, 3}};
    auto a = build_bound_quiver_algebra(q, std::vector<std::string>{}, f2);
    for (std::size_t i = 0; i < 3; ++i) {
        auto s = simple_module(a, i);
        auto pd = pd_bounded(s, 6);
        REQUIRE(pd.finite);
        CHECK(phi(s, table, rng).value == pd.value);
    }
    // with relation b*a: pd S1 = 2
    auto r = build_bound_quiver_algebra(q, std::vector<std::string>{"b*a"}, f2);
    auto s1 = simple_module(r, 0);
    CHECK(pd_bounded(s1, 6).value == 2);
    IsoClassTable t2;
    CHECK(phi(s1, t2, rng).value == 2);
}
