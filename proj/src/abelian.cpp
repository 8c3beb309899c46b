#include "afinv/abelian.hpp"

#include "afinv/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace afinv {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_factors)
    : factors_(std::move(cyclic_factors)) {
    if (factors_.empty()) {
        throw InvalidInput("a group needs at least one cyclic factor");
    }
    std::uint64_t order = 1;
    for (auto m : factors_) {
        if (m <= 0) {
            throw InvalidInput("cyclic factor must be >= 1, got " + std::to_string(m));
        }
        order *= static_cast<std::uint64_t>(m);
        if (order > std::numeric_limits<std::uint32_t>::max()) {
            throw InvalidInput("group order exceeds 2^32");
        }
        exponent_ = std::lcm(exponent_, m);
    }
    order_ = static_cast<std::size_t>(order);
    stride_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) {
        stride_[i - 1] = stride_[i] * static_cast<std::uint32_t>(factors_[i]);
    }
}

Elem FiniteAbelianGroup::add(Elem a, Elem b) const {
    Elem out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto m = static_cast<std::uint32_t>(factors_[i]);
        std::uint32_t x = (a / stride_[i]) % m;
        std::uint32_t y = (b / stride_[i]) % m;
        out += ((x + y) % m) * stride_[i];
    }
    return out;
}

Elem FiniteAbelianGroup::negate(Elem a) const {
    Elem out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto m = static_cast<std::uint32_t>(factors_[i]);
        std::uint32_t x = (a / stride_[i]) % m;
        out += ((m - x) % m) * stride_[i];
    }
    return out;
}

Elem FiniteAbelianGroup::multiple(Elem a, std::int64_t n) const {
    ElementVector v = to_vector(a);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = v[i] * n;
    }
    return encode(v);
}

std::int64_t FiniteAbelianGroup::element_order(Elem a) const {
    std::int64_t ord = 1;
    ElementVector v = to_vector(a);
    for (std::size_t i = 0; i < v.size(); ++i) {
        ord = std::lcm(ord, factors_[i] / std::gcd(factors_[i], v[i]));
    }
    return ord;
}

ElementVector FiniteAbelianGroup::to_vector(Elem a) const {
    ElementVector v(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        v[i] = static_cast<std::int64_t>((a / stride_[i]) % static_cast<std::uint32_t>(factors_[i]));
    }
    return v;
}

Elem FiniteAbelianGroup::encode(const ElementVector& v) const {
    if (v.size() != factors_.size()) {
        throw InvalidInput("element has " + std::to_string(v.size()) + " coordinates, group has " +
                           std::to_string(factors_.size()));
    }
    Elem out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::int64_t r = v[i] % factors_[i];
        if (r < 0) {
            r += factors_[i];
        }
        out += static_cast<Elem>(r) * stride_[i];
    }
    return out;
}

std::string FiniteAbelianGroup::format(Elem a) const {
    std::ostringstream os;
    os << '[';
    auto v = to_vector(a);
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ']';
    return os.str();
}

FiniteAbelianGroup make_group(const std::vector<std::int64_t>& cyclic_factors) {
    return FiniteAbelianGroup(cyclic_factors);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteAbelianGroup parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    member_.assign(parent_.order(), false);
    for (auto x : elements_) {
        if (x >= parent_.order()) {
            throw InvalidInput("element code out of range");
        }
        member_[x] = true;
    }
}

std::size_t Subgroup::index_of(Elem a) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
    if (it == elements_.end() || *it != a) {
        throw InvalidInput("element " + parent_.format(a) + " is not in the subgroup");
    }
    return static_cast<std::size_t>(it - elements_.begin());
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
    if (!(parent_ == other.parent_)) {
        return false;
    }
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](Elem x) { return other.contains(x); });
}

bool Subgroup::operator<(const Subgroup& other) const {
    if (order() != other.order()) {
        return order() < other.order();
    }
    return elements_ < other.elements_;
}

bool is_closed(const FiniteAbelianGroup& group, const std::vector<Elem>& elements) {
    std::vector<bool> in(group.order(), false);
    for (auto x : elements) {
        if (x >= group.order()) {
            return false;
        }
        in[x] = true;
    }
    if (!in[group.identity()]) {
        return false;
    }
    for (auto x : elements) {
        if (!in[group.negate(x)]) {
            return false;
        }
        for (auto y : elements) {
            if (!in[group.add(x, y)]) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Elements of <s, g> as the union of the translates s + k g.
std::vector<Elem> join_element(const FiniteAbelianGroup& group, const std::vector<Elem>& s,
                               const std::vector<bool>& in_s, Elem g) {
    std::vector<Elem> out = s;
    Elem step = g;
    while (!in_s[step]) {
        for (auto x : s) {
            out.push_back(group.add(x, step));
        }
        step = group.add(step, g);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

Subgroup closure(const FiniteAbelianGroup& group, const std::vector<Elem>& generators) {
    std::vector<Elem> elems{group.identity()};
    std::vector<bool> in(group.order(), false);
    in[group.identity()] = true;
    for (auto g : generators) {
        if (g >= group.order()) {
            throw InvalidInput("generator code out of range");
        }
        if (in[g]) {
            continue;
        }
        elems = join_element(group, elems, in, g);
        std::fill(in.begin(), in.end(), false);
        for (auto x : elems) {
            in[x] = true;
        }
    }
    return Subgroup(group, std::move(elems));
}

Subgroup trivial_subgroup(const FiniteAbelianGroup& group) {
    return Subgroup(group, {group.identity()});
}

Subgroup whole_group(const FiniteAbelianGroup& group) {
    std::vector<Elem> all(group.order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(group, std::move(all));
}

Subgroup sum_subgroups(const Subgroup& h, const Subgroup& k) {
    if (!(h.parent() == k.parent())) {
        throw InvalidInput("subgroups of different groups");
    }
    const auto& g = h.parent();
    std::vector<Elem> out;
    out.reserve(h.order() * k.order());
    for (auto x : h.elements()) {
        for (auto y : k.elements()) {
            out.push_back(g.add(x, y));
        }
    }
    return Subgroup(g, std::move(out));
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
    if (!(h.parent() == k.parent())) {
        throw InvalidInput("subgroups of different groups");
    }
    std::vector<Elem> out;
    for (auto x : h.elements()) {
        if (k.contains(x)) {
            out.push_back(x);
        }
    }
    return Subgroup(h.parent(), std::move(out));
}

std::vector<Subgroup> subgroups(const FiniteAbelianGroup& group, std::size_t max_order) {
    if (group.order() > max_order) {
        throw ResourceLimit("group order " + std::to_string(group.order()) +
                            " exceeds subgroup enumeration bound " + std::to_string(max_order));
    }
    std::set<std::vector<Elem>> seen;
    std::deque<std::vector<Elem>> queue;
    std::vector<Elem> start{group.identity()};
    seen.insert(start);
    queue.push_back(start);
    std::vector<bool> in(group.order());
    while (!queue.empty()) {
        auto s = std::move(queue.front());
        queue.pop_front();
        std::fill(in.begin(), in.end(), false);
        for (auto x : s) {
            in[x] = true;
        }
        std::vector<bool> covered = in;
        for (Elem g = 0; g < group.order(); ++g) {
            if (covered[g]) {
                continue;
            }
            // One generator per coset of s suffices.
            for (auto x : s) {
                covered[group.add(x, g)] = true;
            }
            auto next = join_element(group, s, in, g);
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& s : seen) {
        out.emplace_back(group, s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

bool is_homomorphism(const Subgroup& domain, const std::vector<std::int64_t>& units) {
    const auto& g = domain.parent();
    const auto e = g.exponent();
    const auto& el = domain.elements();
    for (std::size_t i = 0; i < el.size(); ++i) {
        if (units[i] < 0 || units[i] >= e) {
            return false;
        }
        for (std::size_t j = i; j < el.size(); ++j) {
            auto s = domain.index_of(g.add(el[i], el[j]));
            if ((units[i] + units[j]) % e != units[s]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

Character::Character(Subgroup domain, std::vector<std::int64_t> units)
    : domain_(std::move(domain)), units_(std::move(units)) {
    if (units_.size() != domain_.order()) {
        throw InvalidInput("character value count does not match its domain");
    }
    if (!is_homomorphism(domain_, units_)) {
        throw InvalidInput("character values do not define a homomorphism to Q/Z");
    }
}

Rational Character::theta(Elem x) const {
    return Rational(units(x), domain_.parent().exponent());
}

bool Character::is_trivial() const {
    return std::all_of(units_.begin(), units_.end(), [](std::int64_t u) { return u == 0; });
}

Character Character::conjugate() const {
    const auto e = domain_.parent().exponent();
    std::vector<std::int64_t> out(units_.size());
    for (std::size_t i = 0; i < units_.size(); ++i) {
        out[i] = (e - units_[i]) % e;
    }
    Character c;
    c.domain_ = domain_;
    c.units_ = std::move(out);
    return c;
}

Character Character::operator*(const Character& other) const {
    if (!(domain_ == other.domain_)) {
        throw InvalidInput("product of characters on different domains");
    }
    const auto e = domain_.parent().exponent();
    Character c;
    c.domain_ = domain_;
    c.units_.resize(units_.size());
    for (std::size_t i = 0; i < units_.size(); ++i) {
        c.units_[i] = (units_[i] + other.units_[i]) % e;
    }
    return c;
}

Character Character::restrict_to(const Subgroup& sub) const {
    if (!sub.is_subgroup_of(domain_)) {
        throw InvalidInput("restriction target is not a subgroup of the domain");
    }
    Character c;
    c.domain_ = sub;
    c.units_.reserve(sub.order());
    for (auto x : sub.elements()) {
        c.units_.push_back(units(x));
    }
    return c;
}

Character trivial_character(const Subgroup& domain) {
    return Character(domain, std::vector<std::int64_t>(domain.order(), 0));
}

std::vector<Character> dual_characters(const Subgroup& h) {
    const auto& g = h.parent();
    const auto e = g.exponent();

    // Greedy generating set, largest element orders first.
    std::vector<Elem> by_order = h.elements();
    std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
        return g.element_order(a) > g.element_order(b);
    });
    std::vector<Elem> gens;
    Subgroup span = trivial_subgroup(g);
    for (auto x : by_order) {
        if (span.order() == h.order()) {
            break;
        }
        if (!span.contains(x)) {
            gens.push_back(x);
            span = closure(g, gens);
        }
    }
    std::vector<std::int64_t> gen_order;
    for (auto x : gens) {
        gen_order.push_back(g.element_order(x));
    }

    std::vector<Character> out;
    std::vector<std::int64_t> choice(gens.size(), 0);
    std::vector<std::int64_t> value(g.order());
    while (true) {
        std::fill(value.begin(), value.end(), -1);
        value[g.identity()] = 0;
        std::deque<Elem> queue{g.identity()};
        bool ok = true;
        while (!queue.empty() && ok) {
            Elem x = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < gens.size(); ++i) {
                Elem y = g.add(x, gens[i]);
                std::int64_t v = (value[x] + choice[i] * (e / gen_order[i])) % e;
                if (value[y] < 0) {
                    value[y] = v;
                    queue.push_back(y);
                } else if (value[y] != v) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            std::vector<std::int64_t> units;
            units.reserve(h.order());
            for (auto x : h.elements()) {
                units.push_back(value[x]);
            }
            out.push_back(Character(h, std::move(units), Character::Unchecked{}));
        }
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == gen_order[i]) {
            choice[i] = 0;
            ++i;
        }
        if (i == choice.size()) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != h.order()) {
        throw InternalConsistency("dual group has " + std::to_string(out.size()) +
                                  " characters, expected " + std::to_string(h.order()));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Coset> coset_space(const FiniteAbelianGroup& group, const Subgroup& d) {
    if (!(d.parent() == group) || !is_closed(group, d.elements())) {
        throw InvalidInput("coset_space: argument is not a subgroup of the group");
    }
    std::vector<bool> seen(group.order(), false);
    std::vector<Coset> out;
    for (Elem g = 0; g < group.order(); ++g) {
        if (seen[g]) {
            continue;
        }
        Coset c = coset_of(d, g);
        for (auto x : c.members) {
            seen[x] = true;
        }
        out.push_back(std::move(c));
    }
    return out;
}

Coset coset_of(const Subgroup& d, Elem g) {
    const auto& group = d.parent();
    Coset c;
    c.members.reserve(d.order());
    for (auto x : d.elements()) {
        c.members.push_back(group.add(g, x));
    }
    std::sort(c.members.begin(), c.members.end());
    c.rep = c.members.front();
    return c;
}

bool schur_trivial(const Subgroup& h) {
    const auto& g = h.parent();
    return std::any_of(h.elements().begin(), h.elements().end(), [&](Elem x) {
        return static_cast<std::size_t>(g.element_order(x)) == h.order();
    });
}

// ---------------------------------------------------------------------------

CocycleTable CocycleTable::trivial(const Subgroup& domain) {
    CocycleTable t;
    t.domain = domain;
    for (auto a : domain.elements()) {
        for (auto b : domain.elements()) {
            t.values.emplace(std::make_pair(a, b), Rational(0));
        }
    }
    return t;
}

Rational CocycleTable::at(Elem a, Elem b) const {
    auto it = values.find({a, b});
    if (it == values.end()) {
        throw InvalidInput("cocycle table has no entry for (" + domain.parent().format(a) + ", " +
                           domain.parent().format(b) + ")");
    }
    return it->second;
}

bool CocycleTable::is_trivial() const {
    return std::all_of(values.begin(), values.end(),
                       [](const auto& kv) { return frac_mod1(kv.second) == 0; });
}

bool validate_2cocycle(const CocycleTable& table) {
    const auto& h = table.domain;
    const auto& g = h.parent();
    for (auto a : h.elements()) {
        for (auto b : h.elements()) {
            (void)table.at(a, b);
        }
    }
    if (table.values.size() != h.order() * h.order()) {
        throw InvalidInput("cocycle table has entries outside domain x domain");
    }
    for (auto a : h.elements()) {
        if (frac_mod1(table.at(g.identity(), a)) != 0 || frac_mod1(table.at(a, g.identity())) != 0) {
            return false;
        }
    }
    for (auto a : h.elements()) {
        for (auto b : h.elements()) {
            for (auto c : h.elements()) {
                Rational lhs = table.at(a, b) + table.at(g.add(a, b), c);
                Rational rhs = table.at(b, c) + table.at(a, g.add(b, c));
                if (frac_mod1(lhs - rhs) != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace afinv
