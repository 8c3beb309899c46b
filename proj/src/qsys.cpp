#include "afinv/qsys.hpp"

#include "afinv/errors.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace afinv {

QSystem make_qsystem(const Subgroup& h) { return QSystem{h, CocycleTable::trivial(h)}; }

QSystemList qsystems(const FiniteAbelianGroup& group, std::size_t max_order) {
    QSystemList out;
    for (const auto& h : subgroups(group, max_order)) {
        if (!schur_trivial(h)) {
            out.complete = false;
            std::ostringstream os;
            os << "subgroup of order " << h.order() << " generated by {";
            for (std::size_t i = 0; i < h.elements().size(); ++i) {
                os << (i ? "," : "") << group.format(h.elements()[i]);
            }
            os << "} is not cyclic; twisted Q-systems on it are not represented";
            out.warnings.push_back(os.str());
        }
        out.systems.push_back(make_qsystem(h));
    }
    return out;
}

bool SimpleBimodule::operator<(const SimpleBimodule& other) const {
    if (source.order() != other.source.order() || !(source == other.source)) {
        return source < other.source;
    }
    if (!(target == other.target)) {
        return target < other.target;
    }
    if (coset.rep != other.coset.rep) {
        return coset.rep < other.coset.rep;
    }
    return character.unit_values() < other.character.unit_values();
}

SimpleBimodule make_simple(const Subgroup& source, const Subgroup& target, Elem coset_element,
                           const Character& character) {
    if (!(source.parent() == target.parent())) {
        throw InvalidInput("bimodule between subgroups of different groups");
    }
    if (coset_element >= source.parent().order()) {
        throw InvalidInput("coset element out of range");
    }
    Subgroup stab = intersect(source, target);
    if (!(character.domain() == stab)) {
        throw InvalidInput("bimodule character must be defined on the intersection of source and target");
    }
    return SimpleBimodule{source, target, coset_of(sum_subgroups(source, target), coset_element), character};
}

std::vector<SimpleBimodule> simple_bimodules(const QSystem& h, const QSystem& k) {
    const auto& group = h.subgroup.parent();
    Subgroup sum = sum_subgroups(h.subgroup, k.subgroup);
    Subgroup stab = intersect(h.subgroup, k.subgroup);
    auto chars = dual_characters(stab);
    std::vector<SimpleBimodule> out;
    for (const auto& c : coset_space(group, sum)) {
        for (const auto& chi : chars) {
            out.push_back(SimpleBimodule{h.subgroup, k.subgroup, c, chi});
        }
    }
    return out;
}

SimpleBimodule identity_bimodule(const QSystem& h) {
    return SimpleBimodule{h.subgroup, h.subgroup, coset_of(h.subgroup, h.subgroup.parent().identity()),
                          trivial_character(h.subgroup)};
}

SimpleBimodule dual(const SimpleBimodule& s) {
    const auto& group = s.source.parent();
    Subgroup sum = sum_subgroups(s.target, s.source);
    return SimpleBimodule{s.target, s.source, coset_of(sum, group.negate(s.coset.rep)),
                          s.character.conjugate()};
}

MonomialMatrix MonomialMatrix::compose(const MonomialMatrix& other) const {
    MonomialMatrix out;
    out.order = order;
    out.target.resize(other.size());
    out.phase.resize(other.size());
    for (std::size_t j = 0; j < other.size(); ++j) {
        std::size_t mid = other.target[j];
        out.target[j] = target[mid];
        out.phase[j] = (other.phase[j] + phase[mid]) % order;
    }
    return out;
}

// ---------------------------------------------------------------------------

ExplicitBimoduleModel realize(const SimpleBimodule& s) { return realize(s, s.coset.rep); }

ExplicitBimoduleModel realize(const SimpleBimodule& s, Elem base_point) {
    const auto& group = s.source.parent();
    const auto e = group.exponent();
    if (!std::binary_search(s.coset.members.begin(), s.coset.members.end(), base_point)) {
        throw InvalidInput("base point " + group.format(base_point) + " is not in the coset");
    }
    ExplicitBimoduleModel m;
    m.simple = s;
    m.base_point = base_point;

    // (h, k) ~ (h + t, k - t); the class is determined by h + k. Iterating pairs in
    // lexicographic order, the first pair hitting a given sum is the least representative.
    std::vector<std::ptrdiff_t> slot(group.order(), -1);
    for (auto h : s.source.elements()) {
        for (auto k : s.target.elements()) {
            Elem sum = group.add(h, k);
            if (slot[sum] < 0) {
                slot[sum] = static_cast<std::ptrdiff_t>(m.basis.size());
                m.basis.emplace_back(h, k);
                m.grading.push_back(group.add(sum, base_point));
            }
        }
    }

    // (h', k') sends the vector at (h, k) to chi(t) times the vector at the
    // representative (h*, k*) of (h + h', k + k'), where t = h + h' - h*.
    auto act = [&](Elem dh, Elem dk) {
        MonomialMatrix mm;
        mm.order = e;
        mm.target.resize(m.basis.size());
        mm.phase.resize(m.basis.size());
        for (std::size_t i = 0; i < m.basis.size(); ++i) {
            auto [h, k] = m.basis[i];
            Elem nh = group.add(h, dh);
            Elem nk = group.add(k, dk);
            auto j = static_cast<std::size_t>(slot[group.add(nh, nk)]);
            Elem t = group.subtract(nh, m.basis[j].first);
            mm.target[i] = j;
            mm.phase[i] = s.character.units(t);
        }
        return mm;
    };
    for (auto h : s.source.elements()) {
        m.left_action.push_back(act(h, group.identity()));
    }
    for (auto k : s.target.elements()) {
        m.right_action.push_back(act(group.identity(), k));
    }
    return m;
}

ExplicitBimoduleModel realize(const QSystem& source, const QSystem& target, const SimpleBimodule& s) {
    if (!validate_2cocycle(source.cocycle) || !validate_2cocycle(target.cocycle)) {
        throw InvalidInput("Q-system cocycle fails the 2-cocycle identity");
    }
    if (!source.cocycle.is_trivial() || !target.cocycle.is_trivial()) {
        throw UnsupportedFeature("bimodules over twisted Q-systems are not supported");
    }
    if (!(source.subgroup == s.source) || !(target.subgroup == s.target)) {
        throw InvalidInput("bimodule does not connect the given Q-systems");
    }
    return realize(s);
}

// ---------------------------------------------------------------------------

FusionResult fuse(const SimpleBimodule& s1, const SimpleBimodule& s2) {
    if (!(s1.target == s2.source)) {
        throw InvalidComposition("cannot compose: middle Q-systems differ");
    }
    return fuse_models(realize(s1), realize(s2));
}

FusionResult fuse_models(const ExplicitBimoduleModel& x, const ExplicitBimoduleModel& y) {
    const auto& s1 = x.simple;
    const auto& s2 = y.simple;
    if (!(s1.target == s2.source)) {
        throw InvalidComposition("cannot compose: middle Q-systems differ");
    }
    const auto& group = s1.source.parent();
    const auto e = group.exponent();
    const Subgroup& h = s1.source;
    const Subgroup& k = s1.target;
    const Subgroup& l = s2.target;
    const Subgroup outer = sum_subgroups(h, l);
    const Subgroup stab = intersect(h, l);
    const auto stab_chars = dual_characters(stab);

    // Degree -> basis index in y.
    std::vector<std::ptrdiff_t> y_at(group.order(), -1);
    for (std::size_t j = 0; j < y.size(); ++j) {
        y_at[y.grading[j]] = static_cast<std::ptrdiff_t>(j);
    }

    // Candidate output cosets: (H+L)-cosets inside Γ1 + Γ2.
    std::vector<bool> in_sum(group.order(), false);
    for (auto a : s1.coset.members) {
        for (auto b : s2.coset.members) {
            in_sum[group.add(a, b)] = true;
        }
    }
    std::vector<Coset> targets;
    std::vector<bool> seen(group.order(), false);
    for (Elem g = 0; g < group.order(); ++g) {
        if (in_sum[g] && !seen[g]) {
            Coset c = coset_of(outer, g);
            for (auto m : c.members) {
                seen[m] = true;
            }
            targets.push_back(std::move(c));
        }
    }

    // Operators (left_t ⊗ right_-t) ∘ (right_k ⊗ left_-k), for t in H∩L and k in K.
    // Only their diagonal entries on a graded component matter for the trace.
    struct Pair {
        MonomialMatrix on_x;
        MonomialMatrix on_y;
    };
    std::vector<std::vector<Pair>> ops(stab.order());
    for (std::size_t ti = 0; ti < stab.order(); ++ti) {
        Elem t = stab.elements()[ti];
        for (auto kk : k.elements()) {
            Pair p;
            p.on_x = x.left(t).compose(x.right(kk));
            p.on_y = y.right(group.negate(t)).compose(y.left(group.negate(kk)));
            ops[ti].push_back(std::move(p));
        }
    }

    FusionResult out;
    std::int64_t conserved = 0;
    const Rational norm = Rational(static_cast<std::int64_t>(k.order())) * static_cast<std::int64_t>(stab.order());
    for (const auto& target : targets) {
        const Elem g3 = target.rep;
        // Graded component of degree g3 in X ⊗ Y.
        std::vector<std::pair<std::size_t, std::size_t>> component;
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto j = y_at[group.subtract(g3, x.grading[i])];
            if (j >= 0) {
                component.emplace_back(i, static_cast<std::size_t>(j));
            }
        }
        // counts[t][q]: number of fixed basis vectors with phase zeta^q, summed over k.
        std::vector<std::vector<std::int64_t>> counts(stab.order(), std::vector<std::int64_t>(e, 0));
        for (std::size_t ti = 0; ti < stab.order(); ++ti) {
            for (const auto& p : ops[ti]) {
                for (auto [i, j] : component) {
                    if (p.on_x.target[i] == i && p.on_y.target[j] == j) {
                        ++counts[ti][(p.on_x.phase[i] + p.on_y.phase[j]) % e];
                    }
                }
            }
        }
        for (const auto& chi : stab_chars) {
            std::vector<std::int64_t> weighted(e, 0);
            for (std::size_t ti = 0; ti < stab.order(); ++ti) {
                const std::int64_t shift = chi.unit_values()[ti];
                for (std::int64_t q = 0; q < e; ++q) {
                    if (counts[ti][q] != 0) {
                        weighted[((q - shift) % e + e) % e] += counts[ti][q];
                    }
                }
            }
            CyclotomicNumber m = CyclotomicNumber::from_group_ring(weighted) / norm;
            auto value = m.as_integer();
            if (!value || *value < 0) {
                throw InternalConsistency("non-integral fusion multiplicity");
            }
            if (*value > 0) {
                auto mult = value->convert_to<std::int64_t>();
                out.push_back(FusionTerm{SimpleBimodule{h, l, target, chi}, mult});
                conserved += mult * static_cast<std::int64_t>(target.members.size());
            }
        }
    }
    const auto expected = static_cast<std::int64_t>(x.size() * y.size() / k.order());
    if (conserved != expected) {
        throw InternalConsistency("fusion does not conserve dimension: " + std::to_string(conserved) +
                                  " != " + std::to_string(expected));
    }
    std::sort(out.begin(), out.end(),
              [](const FusionTerm& a, const FusionTerm& b) { return a.simple < b.simple; });
    return out;
}

bool same_multiset(const FusionResult& a, const FusionResult& b) {
    auto norm = [](FusionResult r) {
        std::sort(r.begin(), r.end(),
                  [](const FusionTerm& p, const FusionTerm& q) { return p.simple < q.simple; });
        FusionResult merged;
        for (auto& t : r) {
            if (!merged.empty() && merged.back().simple == t.simple) {
                merged.back().multiplicity += t.multiplicity;
            } else if (t.multiplicity != 0) {
                merged.push_back(std::move(t));
            }
        }
        return merged;
    };
    return norm(a) == norm(b);
}

// ---------------------------------------------------------------------------

std::string bimodule_label(const SimpleBimodule& s, const std::vector<Subgroup>& ordered_subgroups) {
    auto position = [&](const Subgroup& h) {
        auto it = std::find(ordered_subgroups.begin(), ordered_subgroups.end(), h);
        if (it == ordered_subgroups.end()) {
            throw InvalidInput("subgroup not in the representative list");
        }
        return static_cast<std::size_t>(it - ordered_subgroups.begin()) + 1;
    };
    const auto& group = s.source.parent();
    std::ostringstream os;
    os << "M_{" << position(s.source) << "-" << position(s.target);
    const Subgroup sum = sum_subgroups(s.source, s.target);
    if (sum.order() != group.order()) {
        auto v = group.to_vector(s.coset.rep);
        os << ",";
        if (v.size() == 1) {
            os << v[0];
        } else {
            os << "(";
            for (std::size_t i = 0; i < v.size(); ++i) {
                os << (i ? "," : "") << v[i];
            }
            os << ")";
        }
    }
    os << "}";
    const auto& stab = s.character.domain();
    if (stab.order() > 1) {
        os << "^";
        if (s.character.is_trivial()) {
            os << "triv";
        } else if (stab.order() == 2) {
            os << "sign";
        } else {
            auto chars = dual_characters(stab);
            auto it = std::find(chars.begin(), chars.end(), s.character);
            os << "chi" << (it - chars.begin());
        }
    }
    return os.str();
}

FusionTable::FusionTable(const FiniteAbelianGroup& group, std::size_t max_order)
    : group_(group), qsystems_(afinv::qsystems(group, max_order)) {
    for (const auto& q : qsystems_.systems) {
        subgroups_.push_back(q.subgroup);
    }
    const std::size_t nq = qsystems_.systems.size();
    between_.assign(nq, std::vector<std::vector<std::size_t>>(nq));
    for (std::size_t a = 0; a < nq; ++a) {
        for (std::size_t b = 0; b < nq; ++b) {
            for (auto& s : simple_bimodules(qsystems_.systems[a], qsystems_.systems[b])) {
                between_[a][b].push_back(simples_.size());
                index_.emplace(s.key(), simples_.size());
                source_of_.push_back(a);
                target_of_.push_back(b);
                simples_.push_back(std::move(s));
            }
        }
    }
    std::vector<ExplicitBimoduleModel> models;
    models.reserve(simples_.size());
    for (const auto& s : simples_) {
        models.push_back(realize(s));
    }
    for (std::size_t i = 0; i < simples_.size(); ++i) {
        const std::size_t mid = target_of_[i];
        for (std::size_t c = 0; c < nq; ++c) {
            for (auto j : between_[mid][c]) {
                Product p;
                for (const auto& term : fuse_models(models[i], models[j])) {
                    p.emplace_back(index_of(term.simple), term.multiplicity);
                }
                products_.emplace(std::make_pair(i, j), std::move(p));
            }
        }
    }
}

std::size_t FusionTable::qsystem_index(const Subgroup& h) const {
    auto it = std::find(subgroups_.begin(), subgroups_.end(), h);
    if (it == subgroups_.end()) {
        throw InvalidInput("subgroup is not a representative Q-system of this group");
    }
    return static_cast<std::size_t>(it - subgroups_.begin());
}

const std::vector<std::size_t>& FusionTable::between(std::size_t source_q, std::size_t target_q) const {
    return between_.at(source_q).at(target_q);
}

std::size_t FusionTable::index_of(const SimpleBimodule& s) const {
    auto it = index_.find(s.key());
    if (it == index_.end()) {
        throw InvalidInput("bimodule is not a simple of this fusion table");
    }
    return it->second;
}

std::string FusionTable::label(std::size_t simple) const {
    return bimodule_label(simples_.at(simple), subgroups_);
}

const FusionTable::Product& FusionTable::product(std::size_t i, std::size_t j) const {
    auto it = products_.find({i, j});
    if (it == products_.end()) {
        throw InvalidComposition("bimodules " + label(i) + " and " + label(j) + " are not composable");
    }
    return it->second;
}

std::int64_t FusionTable::multiplicity(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [idx, m] : product(i, j)) {
        if (idx == k) {
            return m;
        }
    }
    return 0;
}

std::size_t FusionTable::identity_index(std::size_t q) const {
    return index_of(identity_bimodule(qsystems_.systems.at(q)));
}

std::shared_ptr<const FusionTable> fusion_table(const FiniteAbelianGroup& group, std::size_t max_order) {
    static std::mutex mu;
    static std::map<std::vector<std::int64_t>, std::shared_ptr<const FusionTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(group.cyclic_factors());
        if (it != cache.end()) {
            return it->second;
        }
    }
    if (group.order() > max_order) {
        throw ResourceLimit("group order " + std::to_string(group.order()) + " exceeds bound " +
                            std::to_string(max_order));
    }
    auto table = std::make_shared<const FusionTable>(group, max_order);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(group.cyclic_factors(), std::move(table)).first->second;
}

} // namespace afinv
