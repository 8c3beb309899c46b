#include "afinv/equivalence.hpp"
#include "afinv/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace afinv;
using afinv::testing::by_label;
using afinv::testing::z4_diagram;

namespace {

const InvariantData& inv(char name) {
    static std::map<char, InvariantData> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, compute_invariant(z4_diagram(name))).first;
    }
    return it->second;
}

std::vector<Rational> witness(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

} // namespace

TEST_CASE("F and G are equivalent with a pointed witness") {
    const auto v = compare(inv('F'), inv('G'));
    REQUIRE(v.kind == VerdictKind::Equivalent);
    CHECK(v.witness == witness({Rational(1), Rational(1, 2), Rational(1, 2)}));
    CHECK(verify_witness(inv('F'), inv('G'), v.witness));
    CHECK(v.exit_code() == 0);
}

TEST_CASE("G and H are equivalent") {
    const auto v = compare(inv('G'), inv('H'));
    REQUIRE(v.kind == VerdictKind::Equivalent);
    CHECK(verify_witness(inv('G'), inv('H'), v.witness));
}

TEST_CASE("E and F are distinguished by rank") {
    const auto v = compare(inv('E'), inv('F'));
    REQUIRE(v.kind == VerdictKind::Inequivalent);
    REQUIRE(v.certificate);
    CHECK(v.certificate->object_name == "Q2");
    CHECK(v.certificate->kind == "rank");
    CHECK(v.certificate->details == "2≠1");
    CHECK(v.exit_code() == 3);
    // The certificate is re-derivable from the raw matrices.
    CHECK(limit_rank(StationarySystem{inv('E').objects[1].matrix, {}}) == 2);
    CHECK(limit_rank(StationarySystem{inv('F').objects[1].matrix, {}}) == 1);
}

TEST_CASE("witness replay") {
    CHECK(verify_witness(inv('F'), inv('G'), witness({Rational(1), Rational(1, 2), Rational(1, 2)})));
    CHECK_FALSE(verify_witness(inv('F'), inv('G'), witness({Rational(1), Rational(1), Rational(1)})));
    // Natural but not pointed.
    CHECK_FALSE(verify_witness(inv('F'), inv('G'), witness({Rational(2), Rational(1), Rational(1)})));
    CHECK_FALSE(verify_witness(inv('F'), inv('G'), witness({Rational(1), Rational(1, 2)})));
    for (char name : {'F', 'G', 'H', 'E'}) {
        CHECK(verify_witness(inv(name), inv(name), witness({Rational(1), Rational(1), Rational(1)})));
    }
}

TEST_CASE("reflexivity") {
    for (char name : {'F', 'G', 'H', 'E'}) {
        const auto v = compare(inv(name), inv(name));
        REQUIRE(v.kind == VerdictKind::Equivalent);
        CHECK(v.witness == witness({Rational(1), Rational(1), Rational(1)}));
    }
}

TEST_CASE("symmetry") {
    const std::string names = "FGHE";
    for (char a : names) {
        for (char b : names) {
            const auto ab = compare(inv(a), inv(b));
            const auto ba = compare(inv(b), inv(a));
            CHECK(ab.kind == ba.kind);
            if (ab.kind == VerdictKind::Equivalent) {
                REQUIRE(ab.witness.size() == ba.witness.size());
                for (std::size_t q = 0; q < ab.witness.size(); ++q) {
                    CHECK(ab.witness[q] * ba.witness[q] == 1);
                }
                CHECK(verify_witness(inv(a), inv(b), ab.witness));
            }
        }
    }
}

TEST_CASE("verdicts do not depend on the value normalization") {
    const std::vector<std::vector<Rational>> factors = {
        {Rational(1), Rational(1), Rational(1)},
        {Rational(2), Rational(3), Rational(5, 7)},
        {Rational(1, 4), Rational(9), Rational(2)},
    };
    const std::string names = "FGHE";
    for (const auto& fa : factors) {
        for (const auto& fb : factors) {
            for (char a : names) {
                for (char b : names) {
                    const auto ra = renormalized(inv(a), fa);
                    const auto rb = renormalized(inv(b), fb);
                    const auto v = compare(ra, rb);
                    const auto base = compare(inv(a), inv(b)).kind;
                    if (a == 'E' && b == 'E' && fa != fb) {
                        // Matrix-valued objects leave no value scale to match, so the
                        // identical-data verdict may only weaken to unknown.
                        CHECK(v.kind != VerdictKind::Inequivalent);
                    } else {
                        CHECK(v.kind == base);
                    }
                    if (v.kind == VerdictKind::Equivalent) {
                        CHECK(verify_witness(ra, rb, v.witness));
                    }
                }
            }
        }
    }
}

TEST_CASE("pointedness and unit obstructions") {
    // Same connecting data as F but a generator of value 3: naturality forces u = 3 on Q1.
    auto heavy = z4_diagram('F');
    heavy.generator_weights = {3, 3, 3, 3};
    const auto h = compute_invariant(heavy);
    const auto v = compare(inv('F'), h);
    REQUIRE(v.kind == VerdictKind::Inequivalent);
    CHECK(v.certificate->kind == "pointed-obstruction");
    CHECK(v.certificate->object_name == "Q1");

    // A generator of value 1/2 differs from 1 by a unit of Z[1/2]: equivalent.
    auto half = z4_diagram('F');
    half.generator_weights = {1, 1, 0, 0};
    const auto w = compare(inv('F'), compute_invariant(half));
    REQUIRE(w.kind == VerdictKind::Equivalent);
    CHECK(w.witness[0] == Rational(1, 2));

    // Doubling every edge keeps the multipliers but changes λ to 8 and S stays {2}.
    auto doubled = z4_diagram('F');
    for (auto& e : doubled.edges[0]) {
        e.multiplicity = 2;
    }
    const auto d = compute_invariant(doubled);
    CHECK(compare(inv('F'), d).kind == VerdictKind::Equivalent);

    // Tripling changes the prime set.
    auto tripled = z4_diagram('F');
    for (auto& e : tripled.edges[0]) {
        e.multiplicity = 3;
    }
    const auto tr = compare(inv('F'), compute_invariant(tripled));
    REQUIRE(tr.kind == VerdictKind::Inequivalent);
    CHECK(tr.certificate->kind == "prime-set");
}

TEST_CASE("naturality contradictions") {
    // Hand-edit one multiplier so no scalar family can match.
    auto broken = inv('G');
    const auto& t = *fusion_table(make_group({4}));
    broken.multipliers[by_label(t, "M_{2-3}^triv")] = Rational(5);
    const auto v = compare(inv('G'), broken);
    REQUIRE(v.kind == VerdictKind::Inequivalent);
    CHECK(v.certificate->kind == "constraint-inconsistency");
}

TEST_CASE("direct-sum objects without a certificate give unknown") {
    // Same shape as E with λ = 2 instead of 4: ranks and prime sets agree, no scalar identification.
    auto e2 = z4_diagram('E');
    e2.edges[0][0].multiplicity = 2;
    const auto u = compare(inv('E'), compute_invariant(e2));
    CHECK(u.kind == VerdictKind::Unknown);
    CHECK(u.exit_code() == 4);
    CHECK_FALSE(u.reason.empty());

    auto e3 = z4_diagram('E');
    e3.edges[0][0].multiplicity = 3;
    const auto v = compare(inv('E'), compute_invariant(e3));
    REQUIRE(v.kind == VerdictKind::Inequivalent);
    CHECK(v.certificate->kind == "prime-set");
    CHECK(v.certificate->object_name == "Q1");
}

TEST_CASE("mismatched groups are rejected") {
    const auto g = make_group({2});
    const auto t = fusion_table(g);
    const auto other = compute_invariant(homogeneous_diagram(g, 0, testing::all_between(*t, 0)));
    CHECK_THROWS_AS(compare(inv('F'), other), InvalidInput);
}
