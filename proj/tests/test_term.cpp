#include "support.hpp"

#include "abduce/subst.hpp"

#include <doctest.h>

using namespace abduce;
using namespace testsup;

TEST_SUITE_BEGIN("term_core");

TEST_CASE("substitution application is a homomorphism") {
    Substitution s;
    s.bind(Variable{"X", VarKind::Ordinary}, C("b"));
    CHECK(s.apply(F("f", {V("X"), C("a")})) == F("f", {C("b"), C("a")}));

    Substitution t;
    t.bind(Variable{"Y", VarKind::Ordinary}, C("a"));
    CHECK(t.apply(V("X")) == V("X"));

    // (x != a | f(x) = y){x->z, y->g(z)}
    Substitution u;
    u.bind(Variable{"X", VarKind::Ordinary}, V("Z"));
    u.bind(Variable{"Y", VarKind::Ordinary}, F("g", {V("Z")}));
    Clause c({neq(V("X"), C("a")), eq(F("f", {V("X")}), V("Y"))});
    Clause expect({neq(V("Z"), C("a")), eq(F("f", {V("Z")}), F("g", {V("Z")}))});
    CHECK(u.apply(c) == expect);
}

TEST_CASE("composition applies left then right") {
    Substitution s1, s2;
    s1.bind(Variable{"X", VarKind::Ordinary}, V("Y"));
    s2.bind(Variable{"Y", VarKind::Ordinary}, C("a"));
    Substitution c = s1.compose(s2);
    CHECK(c.apply(V("X")) == C("a"));
    CHECK(c.apply(V("Y")) == C("a"));
    CHECK(c.size() == 2);

    CHECK(Substitution{}.compose(s2) == s2);

    // {x -> f(y)} then {y -> z}: x -> f(z), y -> z (hand oracle: pointwise)
    Substitution s3, s4;
    s3.bind(Variable{"X", VarKind::Ordinary}, F("f", {V("Y")}));
    s4.bind(Variable{"Y", VarKind::Ordinary}, V("Z"));
    Substitution c2 = s3.compose(s4);
    CHECK(c2.apply(V("X")) == F("f", {V("Z")}));
    CHECK(c2.apply(V("Y")) == V("Z"));
}

TEST_CASE("literal equality ignores side order") {
    CHECK(eq(C("t"), C("s")) == eq(C("s"), C("t")));
    CHECK(neq(F("f", {V("X")}), C("a")) == neq(C("a"), F("f", {V("X")})));
    CHECK(eq(C("a"), C("b")).complement() == neq(C("a"), C("b")));
}

TEST_CASE("partition of example clause 3'") {
    Abducibles abd({"i", "j", "b", "c"});
    // x' != i | y' != b | d1 = store(a, x', y')
    Clause c({neq(AV("x1"), C("i")), neq(AV("y1"), C("b")),
              eq(C("d1"), F("store", {C("a"), AV("x1"), AV("y1")}))});
    ClausePartition p = partition_clause(c, abd);
    CHECK(p.delta == Clause({neq(AV("x1"), C("i")), neq(AV("y1"), C("b"))}));
    CHECK(p.delta_bar == Clause({eq(C("d1"), F("store", {C("a"), AV("x1"), AV("y1")}))}));
    CHECK(p.gamma == p.delta);
}

TEST_CASE("partition of ground and functional clauses") {
    Abducibles abd({"a", "b"});
    Clause g({neq(C("a"), C("b"))});
    ClausePartition p = partition_clause(g, abd);
    CHECK(p.delta == g);
    CHECK(p.delta_bar.empty());
    CHECK(p.gamma.empty());

    Clause f({eq(F("f", {V("X")}), F("g", {V("Y")}))});
    ClausePartition q = partition_clause(f, abd);
    CHECK(q.delta.empty());
    CHECK(q.delta_bar == f);
    CHECK(q.gamma.empty());
}

TEST_CASE("partition is a partition on random clauses") {
    Gen gen(11);
    Abducibles abd = gen.abducibles();
    gen.ordinary_vars = {{"X", VarKind::Ordinary}};
    gen.abducible_vars = {{"u", VarKind::Abducible}};
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Literal> lits;
        int n = 1 + gen.pick(4);
        for (int i = 0; i < n; ++i) lits.emplace_back(gen.coin(), gen.term(2), gen.term(2));
        Clause c(std::move(lits));
        ClausePartition p = partition_clause(c, abd);
        CHECK(p.delta.size() + p.delta_bar.size() == c.size());
        for (const auto& l : p.gamma.lits()) {
            bool in_delta = false;
            for (const auto& m : p.delta.lits())
                if (l == m) in_delta = true;
            CHECK(in_delta);
        }
        std::vector<Literal> merged(p.delta.lits());
        merged.insert(merged.end(), p.delta_bar.lits().begin(), p.delta_bar.lits().end());
        CHECK(Clause(std::move(merged)) == c);
    }
}

TEST_CASE("negation of ground clauses") {
    Clause c({eq(C("a"), C("b")), neq(C("c"), C("d"))});
    auto units = negate_ground_clause(c);
    REQUIRE(units.size() == 2);
    CHECK(std::find(units.begin(), units.end(), Clause({neq(C("a"), C("b"))})) != units.end());
    CHECK(std::find(units.begin(), units.end(), Clause({eq(C("c"), C("d"))})) != units.end());

    CHECK(negate_ground_clause(Clause{}).empty());

    auto one = negate_ground_clause(Clause({eq(C("i"), C("j"))}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Clause({neq(C("i"), C("j"))}));

    CHECK_THROWS_AS(negate_ground_clause(Clause({eq(V("X"), C("a"))})), NonGroundError);
}

TEST_CASE("classification bundle") {
    Abducibles abd38({"i", "j", "b", "c"});
    Clause c3p({neq(AV("x1"), C("i")), neq(AV("y1"), C("b")),
                eq(C("d1"), F("store", {C("a"), AV("x1"), AV("y1")}))});
    ClauseClass k = classify_clause(c3p, abd38);
    CHECK(k.is_abstracted);
    CHECK(k.is_va_stable);
    CHECK(!k.is_a_clause);
    CHECK(!k.is_ground);

    Abducibles abd({"a", "b"});
    Clause stable({neq(AV("x"), C("a")), eq(AV("x"), C("b"))});
    ClauseClass ks = classify_clause(stable, abd);
    CHECK(ks.is_a_clause);
    CHECK(ks.is_va_stable);
    CHECK(ks.is_flat);

    Clause unstable({eq(AV("x"), C("b"))});
    ClauseClass ku = classify_clause(unstable, abd);
    CHECK(ku.is_a_clause);
    CHECK(!ku.is_va_stable);
}

TEST_CASE("A-compliant substitutions preserve abstractedness") {
    Gen gen(22);
    Abducibles abd = gen.abducibles();
    gen.ordinary_vars = {{"X", VarKind::Ordinary}, {"Y", VarKind::Ordinary}};
    gen.abducible_vars = {{"u", VarKind::Abducible}, {"v", VarKind::Abducible}};
    for (int iter = 0; iter < 300; ++iter) {
        Term t = gen.abstracted_term(3);
        Substitution s = gen.a_compliant_subst(2);
        CHECK(term_abstracted(s.apply(t), abd));
    }
}

TEST_CASE("duplicate literals are preserved") {
    Literal l = eq(C("a"), C("b"));
    Clause c({l, l});
    CHECK(c.size() == 2);
    Substitution s;
    CHECK(s.apply(c).size() == 2);
    Abducibles abd({"a", "b"});
    CHECK(partition_clause(c, abd).delta.size() == 2);
    CHECK(Clause({l, l}) != Clause({l}));
}

TEST_CASE("positions and replacement") {
    Term t = F("f", {F("g", {C("a"), V("X")}), C("b")});
    auto pos = positions(t);
    CHECK(pos.size() == 5);
    CHECK(subterm_at(t, {0, 1}) == V("X"));
    CHECK(replace_at(t, {0, 1}, C("c")) == F("f", {F("g", {C("a"), C("c")}), C("b")}));
    CHECK(replace_at(t, {}, C("c")) == C("c"));
}

TEST_SUITE_END();
