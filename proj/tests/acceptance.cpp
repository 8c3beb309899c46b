// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "afinv/crossed.hpp"
#include "afinv/equivalence.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace afinv;
using afinv::testing::Multiset;
using afinv::testing::by_label;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream notes;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            notes << what;
        }
        ok = ok && cond;
    }
};

// Shorthand cell names: "11,2" = M_{1-1,2}, "22,0t" = M_{2-2,0}^triv, "23s" = M_{2-3}^sign,
// "33c1" = M_{3-3}^chi1, "13" = M_{1-3}; "a+b" is a direct sum.
std::string expand(const std::string& s) {
    std::string out = "M_{" + s.substr(0, 1) + "-" + s.substr(1, 1);
    std::string rest = s.substr(2);
    if (!rest.empty() && rest[0] == ',') {
        out += "," + rest.substr(1, 1);
        rest = rest.substr(2);
    }
    out += "}";
    if (rest == "t") {
        out += "^triv";
    } else if (rest == "s") {
        out += "^sign";
    } else if (!rest.empty() && rest[0] == 'c') {
        out += "^chi" + rest.substr(1);
    }
    return out;
}

Multiset cell(const FusionTable& t, const std::string& spec) {
    Multiset m;
    std::stringstream in(spec);
    std::string part;
    while (std::getline(in, part, '+')) {
        m[by_label(t, expand(part))] += 1;
    }
    return m;
}

struct PrintedTable {
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::vector<std::vector<std::string>> cells;
};

std::vector<PrintedTable> printed_tables() {
    const std::string m22_0 = "22,0t+22,0s", m22_1 = "22,1t+22,1s", m23 = "23t+23s", m32 = "32t+32s";
    const std::string m33 = "33t+33c1+33c2+33c3";
    PrintedTable q1{{"11,0", "11,1", "11,2", "11,3", "21,0", "21,1", "31"},
                    {"11,0", "11,1", "11,2", "11,3", "12,0", "12,1", "13"},
                    {
                        {"11,0", "11,1", "11,2", "11,3", "12,0", "12,1", "13"},
                        {"11,1", "11,2", "11,3", "11,0", "12,1", "12,0", "13"},
                        {"11,2", "11,3", "11,0", "11,1", "12,0", "12,1", "13"},
                        {"11,3", "11,0", "11,1", "11,2", "12,1", "12,0", "13"},
                        {"21,0", "21,1", "21,0", "21,1", m22_0, m22_1, m23},
                        {"21,1", "21,0", "21,1", "21,0", m22_1, m22_0, m23},
                        {"31", "31", "31", "31", m32, m32, m33},
                    }};
    PrintedTable q2{{"12,0", "12,1", "22,0t", "22,0s", "22,1t", "22,1s", "32t", "32s"},
                    {"21,0", "21,1", "22,0t", "22,0s", "22,1t", "22,1s", "23t", "23s"},
                    {
                        {"11,0+11,2", "11,1+11,3", "12,0", "12,0", "12,1", "12,1", "13", "13"},
                        {"11,1+11,3", "11,0+11,2", "12,1", "12,1", "12,0", "12,0", "13", "13"},
                        {"21,0", "21,1", "22,0t", "22,0s", "22,1t", "22,1s", "23t", "23s"},
                        {"21,0", "21,1", "22,0s", "22,0t", "22,1s", "22,1t", "23s", "23t"},
                        {"21,1", "21,0", "22,1t", "22,1s", "22,0t", "22,0s", "23t", "23s"},
                        {"21,1", "21,0", "22,1s", "22,1t", "22,0s", "22,0t", "23s", "23t"},
                        {"31", "31", "32t", "32s", "32t", "32s", "33t+33c2", "33c1+33c3"},
                        {"31", "31", "32s", "32t", "32s", "32t", "33c1+33c3", "33t+33c2"},
                    }};
    PrintedTable q3{{"13", "23t", "23s", "33t", "33c1", "33c2", "33c3"},
                    {"31", "32t", "32s", "33t", "33c1", "33c2", "33c3"},
                    {
                        {"11,0+11,1+11,2+11,3", "12,0+12,1", "12,0+12,1", "13", "13", "13", "13"},
                        {"21,0+21,1", "22,0t+22,1t", "22,0s+22,1s", "23t", "23s", "23t", "23s"},
                        {"21,0+21,1", "22,0s+22,1s", "22,0t+22,1t", "23s", "23t", "23s", "23t"},
                        {"31", "32t", "32s", "33t", "33c1", "33c2", "33c3"},
                        {"31", "32s", "32t", "33c1", "33c2", "33c3", "33t"},
                        {"31", "32t", "32s", "33c2", "33c3", "33t", "33c1"},
                        {"31", "32s", "32t", "33c3", "33t", "33c1", "33c2"},
                    }};
    return {q1, q2, q3};
}

Check criterion_tables() {
    Check c;
    const auto t = fusion_table(make_group({4}));
    std::size_t cells = 0;
    for (const auto& table : printed_tables()) {
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            for (std::size_t k = 0; k < table.cols.size(); ++k) {
                const auto got = testing::as_multiset(
                    t->product(by_label(*t, expand(table.rows[r])), by_label(*t, expand(table.cols[k]))));
                c.expect(got == cell(*t, table.cells[r][k]),
                         "mismatch at " + expand(table.rows[r]) + " x " + expand(table.cols[k]));
                ++cells;
            }
        }
    }
    c.expect(cells == 162, "cell count");
    c.notes << (c.ok ? "" : "; ") << cells << " cells";
    return c;
}

Check criterion_prime_rules() {
    Check c;
    for (std::int64_t p : {2, 3, 5}) {
        const auto t = fusion_table(make_group({p}));
        const auto ps = std::to_string(p);
        c.expect(t->qsystems().size() == 2, "Z/" + ps + " object count");
        const auto& m11 = t->between(0, 0);
        const auto& m22 = t->between(1, 1);
        c.expect(m11.size() == std::size_t(p) && m22.size() == std::size_t(p) && t->between(0, 1).size() == 1 &&
                     t->between(1, 0).size() == 1,
                 "Z/" + ps + " hom counts");
        const auto m12 = t->between(0, 1)[0];
        const auto m21 = t->between(1, 0)[0];
        Multiset all11, all22;
        for (auto g : m11) {
            all11[g] = 1;
            for (auto h : m11) {
                const auto gh = (t->simples()[g].coset.rep + t->simples()[h].coset.rep) % p;
                std::size_t expected = m11.size();
                for (auto k : m11) {
                    if (t->simples()[k].coset.rep == static_cast<Elem>(gh)) {
                        expected = k;
                    }
                }
                c.expect(testing::as_multiset(t->product(g, h)) == Multiset{{expected, 1}}, "Z/" + ps + " 1-1 rule");
            }
            c.expect(testing::as_multiset(t->product(m21, g)) == Multiset{{m21, 1}}, "Z/" + ps + " 2-1 absorbs 1-1");
        }
        for (auto a : m22) {
            all22[a] = 1;
            for (auto b : m22) {
                const auto prod = t->simples()[a].character * t->simples()[b].character;
                std::size_t expected = m22.size();
                for (auto k : m22) {
                    if (t->simples()[k].character == prod) {
                        expected = k;
                    }
                }
                c.expect(testing::as_multiset(t->product(a, b)) == Multiset{{expected, 1}}, "Z/" + ps + " 2-2 rule");
            }
            c.expect(testing::as_multiset(t->product(a, m21)) == Multiset{{m21, 1}}, "Z/" + ps + " 2-2 absorbs 2-1");
            c.expect(testing::as_multiset(t->product(m12, a)) == Multiset{{m12, 1}}, "Z/" + ps + " 1-2 absorbs 2-2");
        }
        c.expect(testing::as_multiset(t->product(m21, m12)) == all22, "Z/" + ps + " 2-1 x 1-2");
        c.expect(testing::as_multiset(t->product(m12, m21)) == all11, "Z/" + ps + " 1-2 x 2-1");
    }
    return c;
}

const InvariantData& invariant_of(char name) {
    static std::map<char, InvariantData> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, compute_invariant(testing::z4_diagram(name))).first;
    }
    return it->second;
}

Check criterion_objects() {
    Check c;
    const auto& g = invariant_of('G');
    c.expect(g.objects.size() == 3, "G object count");
    for (std::size_t q = 0; q < g.objects.size(); ++q) {
        const auto& o = g.objects[q];
        c.expect(o.limit_rank == 1 && o.is_rank_one(), "G " + g.object_names[q] + " not rank one");
        if (o.is_rank_one()) {
            c.expect(o.rank_one().lambda == 4, "G lambda");
            c.expect(localization(o.rank_one()).primes == std::vector<std::int64_t>{2}, "G primes");
            c.expect(g.scales[q] && *g.scales[q] == 1, "G scale");
        }
    }
    const auto& e = invariant_of('E');
    std::vector<std::size_t> ranks;
    for (const auto& o : e.objects) {
        ranks.push_back(o.limit_rank);
    }
    c.expect(ranks == std::vector<std::size_t>{1, 2, 4}, "E ranks");
    return c;
}

Check criterion_multipliers() {
    Check c;
    // Columns 1-1, 1-2, 1-3, 2-1, 2-2, 2-3, 3-1, 3-2, 3-3.
    const std::map<char, std::vector<Rational>> rows = {{'F', {1, 2, 4, 1, 1, 2, 1, 1, 1}},
                                                        {'G', {1, 1, 2, 2, 1, 2, 2, 1, 1}}};
    for (const auto& [name, expected] : rows) {
        const auto& inv = invariant_of(name);
        std::vector<bool> seen(9, false);
        for (std::size_t m = 0; m < inv.multipliers.size(); ++m) {
            const auto col = inv.morphism_source[m] * 3 + inv.morphism_target[m];
            seen[col] = true;
            c.expect(inv.multipliers[m] && *inv.multipliers[m] == expected[col],
                     std::string(1, name) + " multiplier of " + inv.morphism_labels[m]);
        }
        c.expect(std::find(seen.begin(), seen.end(), false) == seen.end(), "missing family");
    }
    return c;
}

bool replay(const InvariantData& a, const InvariantData& b, const std::vector<Rational>& u) {
    if (u.size() != a.objects.size() || !verify_witness(a, b, u)) {
        return false;
    }
    for (std::size_t m = 0; m < a.multipliers.size(); ++m) {
        if (!a.multipliers[m] || !b.multipliers[m] ||
            u[a.morphism_target[m]] * *a.multipliers[m] != *b.multipliers[m] * u[a.morphism_source[m]]) {
            return false;
        }
    }
    for (const auto& x : u) {
        if (x <= 0) {
            return false;
        }
    }
    return a.pointed_value && b.pointed_value && u[0] * *a.pointed_value == *b.pointed_value;
}

Check criterion_verdicts() {
    Check c;
    const auto fg = compare(invariant_of('F'), invariant_of('G'));
    c.expect(fg.kind == VerdictKind::Equivalent, "F-G verdict");
    c.expect(fg.witness == std::vector<Rational>{1, Rational(1, 2), Rational(1, 2)}, "F-G witness");
    c.expect(replay(invariant_of('F'), invariant_of('G'), fg.witness), "F-G replay");
    const auto gh = compare(invariant_of('G'), invariant_of('H'));
    c.expect(gh.kind == VerdictKind::Equivalent, "G-H verdict");
    c.expect(replay(invariant_of('G'), invariant_of('H'), gh.witness), "G-H replay");
    const auto ef = compare(invariant_of('E'), invariant_of('F'));
    c.expect(ef.kind == VerdictKind::Inequivalent && ef.certificate, "E-F verdict");
    if (ef.certificate) {
        const auto& cert = *ef.certificate;
        c.expect(cert.object_name == "Q2" && cert.kind == "rank" && cert.details == "2≠1", "E-F certificate");
        c.notes << "E-F: (" << cert.object_name << ", " << cert.kind << ", " << cert.details << ")";
    }
    return c;
}

Check criterion_oracle() {
    Check c;
    std::size_t pairs = 0;
    for (std::int64_t n : {4, 6, 8, 12}) {
        const auto g = make_group({n});
        const auto subs = subgroups(g);
        for (const auto& h : subs) {
            for (const auto& k : subs) {
                const auto blocks = crossed_product_blocks(g, k, h);
                c.expect(k0_rank(blocks) == simple_bimodules(make_qsystem(h), make_qsystem(k)).size(),
                         "Z/" + std::to_string(n) + " pair mismatch");
                ++pairs;
            }
        }
    }
    c.notes << (c.ok ? "" : "; ") << pairs << " pairs";
    return c;
}

std::int64_t total_dimension(const FusionResult& r) {
    std::int64_t d = 0;
    for (const auto& t : r) {
        d += t.multiplicity * static_cast<std::int64_t>(t.simple.dimension());
    }
    return d;
}

bool conserves(const SimpleBimodule& a, const SimpleBimodule& b, const FusionResult& r) {
    return static_cast<std::int64_t>(a.dimension() * b.dimension()) ==
           total_dimension(r) * static_cast<std::int64_t>(a.target.order());
}

Check criterion_properties() {
    Check c;
    std::size_t fuse_calls = 0;

    // Associativity, exhaustive on Z/4 and sampled on Z/6.
    const auto t4 = fusion_table(make_group({4}));
    const auto associative = [&](const FusionTable& t, std::size_t a, std::size_t b, std::size_t d) {
        const auto left = testing::right_compose(t, testing::as_multiset(t.product(a, b)), d);
        const auto right = testing::left_compose(t, a, testing::as_multiset(t.product(b, d)));
        return left == right;
    };
    const auto n4 = t4->simples().size();
    for (std::size_t a = 0; a < n4; ++a) {
        for (std::size_t b = 0; b < n4; ++b) {
            for (std::size_t d = 0; d < n4; ++d) {
                if (t4->composable(a, b) && t4->composable(b, d)) {
                    c.expect(associative(*t4, a, b, d), "Z/4 associativity");
                }
            }
        }
    }
    const auto t6 = fusion_table(make_group({6}));
    std::mt19937 rng(20240611);
    const auto n6 = t6->simples().size();
    std::uniform_int_distribution<std::size_t> pick(0, n6 - 1);
    for (int sampled = 0; sampled < 1000;) {
        const auto a = pick(rng);
        std::vector<std::size_t> next, after;
        for (std::size_t k = 0; k < n6; ++k) {
            if (t6->composable(a, k)) {
                next.push_back(k);
            }
        }
        const auto b = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
        for (std::size_t k = 0; k < n6; ++k) {
            if (t6->composable(b, k)) {
                after.push_back(k);
            }
        }
        const auto d = after[std::uniform_int_distribution<std::size_t>(0, after.size() - 1)(rng)];
        c.expect(associative(*t6, a, b, d), "Z/6 associativity");
        ++sampled;
    }

    // Unit and dual laws on Z/4, recomputed with fuse.
    for (std::size_t i = 0; i < n4; ++i) {
        const auto& s = t4->simples()[i];
        const auto left = fuse(identity_bimodule(make_qsystem(s.source)), s);
        const auto right = fuse(s, identity_bimodule(make_qsystem(s.target)));
        fuse_calls += 2;
        c.expect(left.size() == 1 && left[0].simple == s && left[0].multiplicity == 1, "left unit");
        c.expect(right.size() == 1 && right[0].simple == s && right[0].multiplicity == 1, "right unit");
        c.expect(dual(dual(s)) == s, "double dual");
        const auto loop = fuse(s, dual(s));
        ++fuse_calls;
        const auto id = identity_bimodule(make_qsystem(s.source));
        std::int64_t id_mult = 0;
        for (const auto& term : loop) {
            if (term.simple == id) {
                id_mult = term.multiplicity;
            }
        }
        c.expect(id_mult == 1, "evaluation multiplicity");
        c.expect(conserves(s, dual(s), loop), "dimension conservation");
    }

    // Exact against floating point, with dimension conservation on every product.
    for (const auto& g : testing::small_groups(8)) {
        const auto t = fusion_table(g);
        for (const auto& a : t->simples()) {
            for (const auto& b : t->simples()) {
                if (!(a.target == b.source)) {
                    continue;
                }
                const auto exact = fuse(a, b);
                ++fuse_calls;
                c.expect(conserves(a, b, exact), "dimension conservation");
                c.expect(same_multiset(exact, float_oracle_fuse(a, b)), "float oracle");
            }
        }
    }

    // Level coherence and compositionality on the example diagrams.
    std::mt19937 vals(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    const auto t = fusion_table(make_group({4}));
    for (char name : {'F', 'G', 'H', 'E'}) {
        const auto& inv = invariant_of(name);
        for (const auto& o : inv.objects) {
            if (!o.is_rank_one()) {
                continue;
            }
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<Integer> x(o.matrix.rows());
                for (auto& v : x) {
                    v = entry(vals);
                }
                std::vector<Integer> ax(x.size(), 0);
                for (std::size_t r = 0; r < x.size(); ++r) {
                    for (std::size_t k = 0; k < x.size(); ++k) {
                        ax[r] += o.matrix(r, k) * x[k];
                    }
                }
                for (std::int64_t n = 0; n < 3; ++n) {
                    c.expect(value_map(o.rank_one(), n + 1, ax) == value_map(o.rank_one(), n, x), "level coherence");
                }
            }
        }
        std::map<std::string, std::size_t> position;
        for (std::size_t m = 0; m < inv.morphism_labels.size(); ++m) {
            position[inv.morphism_labels[m]] = m;
        }
        const auto mult = [&](std::size_t simple) { return inv.multipliers[position.at(t->label(simple))]; };
        for (std::size_t a = 0; a < t->simples().size(); ++a) {
            for (std::size_t b = 0; b < t->simples().size(); ++b) {
                if (!t->composable(a, b) || !mult(a) || !mult(b)) {
                    continue;
                }
                Rational sum = 0;
                bool known = true;
                for (const auto& [k, m] : t->product(a, b)) {
                    known = known && mult(k).has_value();
                    sum += known ? Rational(m) * *mult(k) : Rational(0);
                }
                c.expect(known && sum == *mult(a) * *mult(b), std::string("compositionality on ") + name);
            }
        }
    }

    // Witness replay for every equivalent pair among the examples.
    for (char a : {'F', 'G', 'H', 'E'}) {
        for (char b : {'F', 'G', 'H', 'E'}) {
            const auto v = compare(invariant_of(a), invariant_of(b));
            if (v.kind == VerdictKind::Equivalent) {
                c.expect(verify_witness(invariant_of(a), invariant_of(b), v.witness), "witness replay");
                const auto& ms = invariant_of(a).multipliers;
                if (std::all_of(ms.begin(), ms.end(), [](const auto& m) { return m.has_value(); })) {
                    c.expect(replay(invariant_of(a), invariant_of(b), v.witness), "witness replay");
                }
            }
        }
    }
    c.notes << (c.ok ? "" : "; ") << fuse_calls << " direct fuse calls";
    return c;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double limit_seconds;
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Z/4 composition tables", 5, criterion_tables},
        {2, "Z/p fusion rules for p = 2, 3, 5", 10, criterion_prime_rules},
        {3, "object identification for G and E", 5, criterion_objects},
        {4, "F and G multiplier rows", 10, criterion_multipliers},
        {5, "classification verdicts", 5, criterion_verdicts},
        {6, "crossed product rank oracle", 30, criterion_oracle},
        {7, "property suites", 600, criterion_properties},
    };
    bool all = true;
    for (const auto& cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = cr.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > cr.limit_seconds) {
            c.ok = false;
            c.notes << "; over time limit";
        }
        all = all && c.ok;
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " (" << secs
                  << " s) " << c.notes.str() << "\n";
    }
    return all ? 0 : 1;
}
