#include "support.hpp"

#include "abduce/abduction.hpp"

#include <doctest.h>

#include <algorithm>

using namespace abduce;
using namespace testsup;

TEST_SUITE_BEGIN("abduction");

namespace {

bool contains(const std::vector<Clause>& cs, const Clause& c) {
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

} // namespace

TEST_CASE("equality axiom instantiation") {
    auto two = eq_axioms(Abducibles({"a", "b"}));
    CHECK(two.size() == 14); // 2 + 4 + 8
    CHECK(contains(two, Clause({eq(C("a"), C("a"))})));
    CHECK(contains(two, Clause({neq(C("a"), C("b")), eq(C("b"), C("a"))})));

    auto one = eq_axioms(Abducibles({"a"}));
    REQUIRE(one.size() == 3);
    CHECK(contains(one, Clause({eq(C("a"), C("a"))})));
    CHECK(contains(one, Clause({neq(C("a"), C("a")), eq(C("a"), C("a"))})));
    CHECK(contains(one, Clause({neq(C("a"), C("a")), neq(C("a"), C("a")), eq(C("a"), C("a"))})));

    CHECK(eq_axioms(Abducibles(std::vector<std::string>{})).empty());
}

TEST_CASE("resolution closure") {
    Abducibles ab({"a", "b"});
    // { a != a | a != b } + reflexivity yields a != b
    std::vector<Clause> t{Clause({neq(C("a"), C("a")), neq(C("a"), C("b"))})};
    for (auto& c : eq_axioms(ab)) t.push_back(c);
    auto out = resolution_closure(t);
    CHECK(!out.limit_reached);
    CHECK(contains(out.clauses, Clause({neq(C("a"), C("b"))})));

    // resolution on i = j against i != j | b != c
    auto out2 = resolution_closure(
        {Clause({eq(C("i"), C("j"))}), Clause({neq(C("i"), C("j")), neq(C("b"), C("c"))})});
    CHECK(contains(out2.clauses, Clause({neq(C("b"), C("c"))})));

    // the symmetric variant is the same canonical clause
    std::vector<Clause> t3{Clause({eq(C("a"), C("b"))})};
    for (auto& c : eq_axioms(ab)) t3.push_back(c);
    auto out3 = resolution_closure(t3);
    CHECK(contains(out3.clauses, Clause({eq(C("b"), C("a"))})));

    // ground closure output contains only A-clauses over A
    for (const auto& c : out3.clauses) {
        CHECK(c.ground());
        CHECK(is_a_clause(c, ab));
    }
}

TEST_CASE("prime minimization") {
    // the long clause is a logical consequence of the short one
    std::vector<Clause> in{Clause({neq(C("c"), C("a"))}),
                           Clause({neq(C("a"), C("b")), neq(C("c"), C("b"))})};
    auto kept = minimize_prime(in, MinimizeMode::Entailment);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0] == Clause({neq(C("a"), C("c"))}));
    // subsumption alone does not remove it
    CHECK(minimize_prime(in, MinimizeMode::Subsumption).size() == 2);

    std::vector<Clause> in2{Clause({eq(C("i"), C("j"))}), Clause({neq(C("b"), C("c"))}),
                            Clause({neq(C("i"), C("j")), neq(C("b"), C("c"))})};
    auto kept2 = minimize_prime(in2, MinimizeMode::Entailment);
    CHECK(kept2.size() == 2);
    CHECK(contains(kept2, Clause({eq(C("i"), C("j"))})));
    CHECK(contains(kept2, Clause({neq(C("b"), C("c"))})));

    std::vector<Clause> units{Clause({eq(C("a"), C("b"))}), Clause({neq(C("c"), C("d"))})};
    auto kept3 = minimize_prime(units, MinimizeMode::Entailment);
    CHECK(kept3.size() == 2);
    CHECK(contains(kept3, units[0]));
    CHECK(contains(kept3, units[1]));

    // valid clauses never survive: transitivity instances are dropped
    std::vector<Clause> valid{Clause({neq(C("a"), C("b")), neq(C("b"), C("c")), eq(C("a"), C("c"))})};
    CHECK(minimize_prime(valid, MinimizeMode::Entailment).empty());
}

TEST_CASE("consistency filter") {
    Abducibles abd({"i", "j", "b", "c"});
    // array axioms and store definitions; hypothesis i != j is fine
    Term X = V("X"), Z = V("Z"), W = V("W"), Vv = V("V");
    std::vector<Clause> axioms{
        Clause({eq(F("select", {F("store", {X, Z, Vv}), Z}), Vv)}),
        Clause({eq(Z, W), eq(F("select", {F("store", {X, Z, Vv}), W}), F("select", {X, W}))}),
        Clause({eq(C("d1"), F("store", {C("a"), C("i"), C("b")}))}),
        Clause({eq(C("d2"), F("store", {C("d1"), C("j"), C("c")}))}),
    };
    CHECK(consistency_filter(axioms, Clause({eq(C("i"), C("j"))}), abd) == Consistency::Consistent);

    Abducibles ab({"a", "b"});
    CHECK(consistency_filter({Clause({eq(C("a"), C("b"))})}, Clause({eq(C("a"), C("b"))}), ab) ==
          Consistency::Inconsistent);

    CHECK(consistency_filter({}, Clause({eq(C("a"), C("b"))}), ab) == Consistency::Consistent);
}

TEST_CASE("explain on the motivating disequation") {
    Abducibles abd({"a", "b"});
    ImplicateReport r = explain({}, {Clause({neq(F("f", {C("a")}), F("f", {C("b")}))})}, abd);
    CHECK(r.saturation_status == SaturationStatus::Saturated);
    REQUIRE(r.prime_implicates.size() == 1);
    CHECK(r.prime_implicates[0] == Clause({neq(C("a"), C("b"))}));
    REQUIRE(r.explanations.size() == 1);
    CHECK(r.explanations[0] == std::vector<Literal>{eq(C("a"), C("b"))});
    CHECK(r.completeness_flag);
    CHECK(r.minimize_used == MinimizeMode::Entailment);
}

TEST_CASE("explain covers clauses no saturation can reach") {
    Abducibles abd({"a", "b", "c", "d"});
    std::vector<Clause> s{Clause({eq(C("a"), C("b"))}), Clause({neq(C("c"), C("d"))})};
    ImplicateReport r = explain(s, {}, abd);
    CHECK(r.saturation_status == SaturationStatus::Saturated);
    Clause mixed({neq(C("a"), C("c")), neq(C("b"), C("d"))});
    // the minimized output entails it and some closure clause covers it
    // single-handedly
    CHECK(oracle::entails(r.prime_implicates, mixed));
    bool covered = false;
    for (const auto& c : r.closure)
        if (oracle::entails_clause(c, mixed)) covered = true;
    CHECK(covered);
}

TEST_CASE("explain reports unsatisfiable inputs") {
    Abducibles abd({"a", "b"});
    ImplicateReport r = explain({Clause({eq(C("a"), C("b"))})}, {Clause({neq(C("a"), C("b"))})}, abd);
    CHECK(r.saturation_status == SaturationStatus::Unsatisfiable);
    CHECK(r.prime_implicates.empty());
}

TEST_CASE("empty abducible set is refused") {
    CHECK_THROWS_AS(explain({}, {Clause({eq(C("a"), C("b"))})}, Abducibles(std::vector<std::string>{})),
                    EmptyAbducibleSetError);
}

TEST_CASE("canonical presentation") {
    Abducibles abd({"i", "j", "b", "c"});
    CHECK(canonical_literal_string(eq(C("j"), C("i")), abd) == "i = j");
    CHECK(canonical_clause_string(Clause({neq(C("c"), C("b"))}), abd) == "b != c");
    CHECK(canonical_clause_string(Clause({neq(C("b"), C("j")), neq(C("c"), C("i"))}), abd) ==
          "i != c | j != b");

    ImplicateReport r;
    r.prime_implicates = {Clause({eq(C("i"), C("j"))}), Clause({neq(C("b"), C("c"))})};
    r.explanations = {{neq(C("i"), C("j"))}, {eq(C("b"), C("c"))}};
    CHECK(combined_explanation_string(r, abd) == "i != j | b = c");
}

TEST_SUITE_END();
