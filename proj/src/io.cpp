#include "afinv/io.hpp"

#include "afinv/errors.hpp"

#include <fstream>
#include <limits>

namespace afinv::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::int64_t small_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw InvalidInput(std::string(what) + " must be an integer");
    }
    return j.get<std::int64_t>();
}

std::size_t index_value(const Json& j, const char* what) {
    const auto v = small_int(j, what);
    if (v < 0) {
        throw InvalidInput(std::string(what) + " must be nonnegative");
    }
    return static_cast<std::size_t>(v);
}

Elem element_from_json(const FiniteAbelianGroup& g, const Json& j) {
    if (j.is_number_integer() && g.rank() == 1) {
        return g.encode({j.get<std::int64_t>()});
    }
    if (!j.is_array()) {
        throw InvalidInput("group element must be an array of integers");
    }
    ElementVector v;
    for (const auto& x : j) {
        v.push_back(small_int(x, "element coordinate"));
    }
    return g.encode(v);
}

Json element_json(const FiniteAbelianGroup& g, Elem a) {
    Json arr = Json::array();
    for (auto x : g.to_vector(a)) {
        arr.push_back(x);
    }
    return arr;
}

Json vector_json(const std::vector<Integer>& v) {
    Json arr = Json::array();
    for (const auto& x : v) {
        arr.push_back(integer_json(x));
    }
    return arr;
}

std::vector<Integer> vector_from_json(const Json& j) {
    if (!j.is_array()) {
        throw InvalidInput("expected an array of integers");
    }
    std::vector<Integer> v;
    for (const auto& x : j) {
        v.push_back(integer_from_json(x));
    }
    return v;
}

Json primes_json(const std::vector<std::int64_t>& ps) {
    Json arr = Json::array();
    for (auto p : ps) {
        arr.push_back(p);
    }
    return arr;
}

Json rank_one_json(const RankOneForm& r) {
    Json j;
    j["lambda"] = integer_json(r.lambda);
    j["left_vector"] = vector_json(r.left_vector);
    j["primes"] = primes_json(r.primes);
    j["scale"] = rational_json(localization(r).scale);
    return j;
}

Json optional_rational(const std::optional<Rational>& q) {
    return q ? rational_json(*q) : Json(nullptr);
}

std::optional<Rational> optional_rational_from(const Json& j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return rational_from_json(j);
}

} // namespace

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

Json integer_json(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
        return n.convert_to<std::int64_t>();
    }
    return to_string(n);
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const auto q = parse_rational(s);
        if (denominator(q) != 1) {
            throw InvalidInput("expected an integer, got " + s);
        }
        return numerator(q);
    }
    throw InvalidInput("expected an integer");
}

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw InvalidInput("expected a fraction string");
}

Json to_json(const FiniteAbelianGroup& g) {
    Json j;
    j["cyclic_factors"] = g.cyclic_factors();
    return j;
}

FiniteAbelianGroup group_from_json(const Json& j) {
    const Json& factors = field(j, "cyclic_factors");
    if (!factors.is_array()) {
        throw InvalidInput("cyclic_factors must be an array");
    }
    std::vector<std::int64_t> f;
    for (const auto& x : factors) {
        f.push_back(small_int(x, "cyclic factor"));
    }
    if (f.empty()) {
        f.push_back(1);
    }
    return FiniteAbelianGroup(f);
}

Json to_json(const Subgroup& h) {
    const auto& g = h.parent();
    std::vector<Elem> gens;
    Subgroup span = trivial_subgroup(g);
    for (auto x : h.elements()) {
        if (!span.contains(x)) {
            gens.push_back(x);
            span = closure(g, gens);
        }
    }
    Json arr = Json::array();
    for (auto x : gens) {
        arr.push_back(element_json(g, x));
    }
    Json j;
    j["generators"] = arr;
    return j;
}

Subgroup subgroup_from_json(const FiniteAbelianGroup& g, const Json& j) {
    const Json& gens = j.is_array() ? j : field(j, "generators");
    if (!gens.is_array()) {
        throw InvalidInput("generators must be an array");
    }
    std::vector<Elem> els;
    for (const auto& x : gens) {
        els.push_back(element_from_json(g, x));
    }
    return closure(g, els);
}

Json to_json(const Character& chi) {
    Json j = Json::object();
    const auto& g = chi.domain().parent();
    for (auto x : chi.domain().elements()) {
        j[g.format(x)] = rational_json(chi.theta(x));
    }
    return j;
}

Character character_from_json(const Subgroup& domain, const Json& j) {
    const Json& values = j.is_object() && j.contains("theta") ? j.at("theta") : j;
    if (!values.is_object() && !values.is_null()) {
        throw InvalidInput("character must be an object of element -> fraction");
    }
    const auto& g = domain.parent();
    std::vector<std::pair<Elem, Rational>> constraints;
    if (values.is_object()) {
        for (const auto& [key, value] : values.items()) {
            Json parsed;
            try {
                parsed = Json::parse(key);
            } catch (const Json::parse_error&) {
                throw InvalidInput("character key " + key + " is not an element array");
            }
            const Elem x = element_from_json(g, parsed);
            if (!domain.contains(x)) {
                throw InvalidInput("character key " + key + " lies outside its domain");
            }
            constraints.emplace_back(x, frac_mod1(rational_from_json(value)));
        }
    }
    std::vector<Character> matches;
    for (const auto& chi : dual_characters(domain)) {
        bool ok = true;
        for (const auto& [x, v] : constraints) {
            ok = ok && chi.theta(x) == v;
        }
        if (ok) {
            matches.push_back(chi);
        }
    }
    if (matches.size() != 1) {
        throw InvalidInput(matches.empty() ? "no character takes the given values"
                                           : "character values do not determine a unique character");
    }
    return matches.front();
}

Json to_json(const SimpleBimodule& s) {
    const auto& g = s.source.parent();
    Json j;
    j["source_generators"] = to_json(s.source)["generators"];
    j["target_generators"] = to_json(s.target)["generators"];
    j["coset_rep"] = element_json(g, s.coset.rep);
    j["character"] = to_json(s.character);
    return j;
}

SimpleBimodule bimodule_from_json(const FiniteAbelianGroup& g, const Json& j) {
    const Subgroup source = subgroup_from_json(g, field(j, "source_generators"));
    const Subgroup target = subgroup_from_json(g, field(j, "target_generators"));
    const Elem rep = j.contains("coset_rep") ? element_from_json(g, j.at("coset_rep")) : g.identity();
    const Subgroup stab = intersect(source, target);
    const Json chi_json = j.contains("character") ? j.at("character") : Json(nullptr);
    return make_simple(source, target, rep, character_from_json(stab, chi_json));
}

std::size_t bimodule_index_from_json(const FusionTable& table, const Json& j) {
    if (j.is_object() && j.contains("label")) {
        const auto label = j.at("label").get<std::string>();
        for (std::size_t i = 0; i < table.simples().size(); ++i) {
            if (table.label(i) == label) {
                return i;
            }
        }
        throw InvalidInput("unknown bimodule label " + label);
    }
    return table.index_of(bimodule_from_json(table.group(), j));
}

Json to_json(const FusionTable& t) {
    Json j;
    j["group"] = to_json(t.group());
    Json qs = Json::array();
    for (std::size_t q = 0; q < t.qsystems().size(); ++q) {
        Json e;
        e["name"] = t.qsystem_name(q);
        e["generators"] = to_json(t.qsystems()[q].subgroup)["generators"];
        e["order"] = t.qsystems()[q].subgroup.order();
        qs.push_back(e);
    }
    j["qsystems"] = qs;
    j["complete"] = t.qsystem_list().complete;
    Json simples = Json::array();
    for (std::size_t i = 0; i < t.simples().size(); ++i) {
        Json e;
        e["index"] = i;
        e["label"] = t.label(i);
        e["source"] = t.qsystem_name(t.source_qsystem(i));
        e["target"] = t.qsystem_name(t.target_qsystem(i));
        e["bimodule"] = to_json(t.simples()[i]);
        simples.push_back(e);
    }
    j["simples"] = simples;
    Json products = Json::object();
    for (std::size_t a = 0; a < t.simples().size(); ++a) {
        for (std::size_t b = 0; b < t.simples().size(); ++b) {
            if (!t.composable(a, b)) {
                continue;
            }
            Json terms = Json::array();
            for (const auto& [k, m] : t.product(a, b)) {
                Json term;
                term["index"] = k;
                term["multiplicity"] = m;
                terms.push_back(term);
            }
            products[std::to_string(a) + "," + std::to_string(b)] = terms;
        }
    }
    j["products"] = products;
    return j;
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (const auto& r : m.to_rows()) {
        rows.push_back(vector_json(r));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    const Json& rows = j.is_object() ? field(j, "rows") : j;
    if (!rows.is_array()) {
        throw InvalidInput("matrix rows must be an array");
    }
    std::vector<std::vector<Integer>> out;
    for (const auto& r : rows) {
        out.push_back(vector_from_json(r));
    }
    if (out.empty()) {
        throw InvalidInput("matrix has no rows");
    }
    for (const auto& r : out) {
        if (r.size() != out.front().size()) {
            throw InvalidInput("matrix rows have different lengths");
        }
    }
    return IntMatrix::from_rows(out);
}

StationarySystem system_from_json(const Json& j) {
    StationarySystem sys{matrix_from_json(j), {}};
    if (j.is_object() && j.contains("labels")) {
        for (const auto& l : j.at("labels")) {
            sys.labels.push_back(l.get<std::string>());
        }
    }
    validate(sys);
    return sys;
}

Json to_json(const K0Description& d) {
    Json j;
    j["variant"] = d.variant_name();
    j["limit_rank"] = d.limit_rank;
    if (const auto* r = std::get_if<RankOneForm>(&d.form)) {
        const Json fields = rank_one_json(*r);
        for (const auto& [k, v] : fields.items()) {
            j[k] = v;
        }
    } else if (const auto* s = std::get_if<DirectSumForm>(&d.form)) {
        Json blocks = Json::array();
        for (std::size_t i = 0; i < s->blocks.size(); ++i) {
            Json b = rank_one_json(s->blocks[i]);
            b["basis"] = s->partition[i];
            blocks.push_back(b);
        }
        j["blocks"] = blocks;
    }
    j["matrix"] = to_json(d.matrix);
    return j;
}

K0Description k0_from_json(const Json& j) {
    auto d = stationary_k0(StationarySystem{matrix_from_json(field(j, "matrix")), {}});
    if (j.contains("variant") && j.at("variant").get<std::string>() != d.variant_name()) {
        throw InvalidInput("K0 variant does not match its matrix");
    }
    if (const auto* r = std::get_if<RankOneForm>(&d.form)) {
        if (j.contains("lambda") && integer_from_json(j.at("lambda")) != r->lambda) {
            throw InvalidInput("K0 eigenvalue does not match its matrix");
        }
    }
    return d;
}

Json to_json(const EnrichedBratteliDiagram& d, const FusionTable& table) {
    Json j;
    j["group"] = to_json(d.group);
    Json levels = Json::array();
    for (const auto& level : d.levels) {
        Json vs = Json::array();
        for (auto v : level) {
            vs.push_back(to_json(table.qsystems()[v].subgroup));
        }
        levels.push_back(vs);
    }
    j["levels"] = levels;
    Json edges = Json::array();
    for (const auto& es : d.edges) {
        Json arr = Json::array();
        for (const auto& e : es) {
            Json x;
            x["from"] = e.from_vertex;
            x["to"] = e.to_vertex;
            x["bimodule"] = to_json(table.simples()[e.bimodule]);
            x["multiplicity"] = e.multiplicity;
            arr.push_back(x);
        }
        edges.push_back(arr);
    }
    j["edges"] = edges;
    if (!d.generator_weights.empty()) {
        j["generator_weights"] = vector_json(d.generator_weights);
    }
    return j;
}

EnrichedBratteliDiagram diagram_from_json(const Json& j, std::size_t max_order) {
    EnrichedBratteliDiagram d;
    d.group = group_from_json(field(j, "group"));
    const auto table = fusion_table(d.group, max_order);
    auto vertex = [&](const Json& v) { return table->qsystem_index(subgroup_from_json(d.group, v)); };
    auto edge = [&](const Json& e, std::size_t from, std::size_t to) {
        DiagramEdge out;
        out.from_vertex = e.contains("from") ? index_value(e.at("from"), "edge source") : from;
        out.to_vertex = e.contains("to") ? index_value(e.at("to"), "edge target") : to;
        out.bimodule = bimodule_index_from_json(*table, field(e, "bimodule"));
        out.multiplicity = e.contains("multiplicity") ? small_int(e.at("multiplicity"), "multiplicity") : 1;
        return out;
    };
    if (j.contains("vertex")) {
        const auto v = vertex(j.at("vertex"));
        d.levels = {{v}, {v}};
        d.edges.emplace_back();
        for (const auto& e : field(j, "edge")) {
            d.edges[0].push_back(edge(e, 0, 0));
        }
    } else {
        for (const auto& level : field(j, "levels")) {
            std::vector<std::size_t> vs;
            for (const auto& v : level) {
                vs.push_back(vertex(v));
            }
            d.levels.push_back(std::move(vs));
        }
        for (const auto& es : field(j, "edges")) {
            std::vector<DiagramEdge> list;
            for (const auto& e : es) {
                if (!e.contains("from") || !e.contains("to")) {
                    throw InvalidInput("full-form edges need \"from\" and \"to\"");
                }
                list.push_back(edge(e, 0, 0));
            }
            d.edges.push_back(std::move(list));
        }
    }
    if (j.contains("generator_weights")) {
        d.generator_weights = vector_from_json(j.at("generator_weights"));
    }
    validate(d, *table);
    return d;
}

Json to_json(const InvariantData& inv) {
    Json j;
    j["group"] = to_json(inv.group);
    Json objects = Json::array();
    for (std::size_t q = 0; q < inv.objects.size(); ++q) {
        Json o;
        o["name"] = inv.object_names[q];
        o["k0"] = to_json(inv.objects[q]);
        objects.push_back(o);
    }
    j["objects"] = objects;
    Json morphisms = Json::array();
    for (std::size_t m = 0; m < inv.multipliers.size(); ++m) {
        Json o;
        o["label"] = inv.morphism_labels[m];
        o["source"] = inv.object_names[inv.morphism_source[m]];
        o["target"] = inv.object_names[inv.morphism_target[m]];
        o["multiplier"] = optional_rational(inv.multipliers[m]);
        o["matrix"] = to_json(inv.morphism_tail_matrices[m]);
        morphisms.push_back(o);
    }
    j["morphisms"] = morphisms;
    j["pointed_vector"] = vector_json(inv.pointed_vector);
    j["pointed_value"] = optional_rational(inv.pointed_value);
    return j;
}

InvariantData invariant_from_json(const Json& j) {
    InvariantData inv;
    inv.group = group_from_json(field(j, "group"));
    for (const auto& o : field(j, "objects")) {
        inv.object_names.push_back(field(o, "name").get<std::string>());
        inv.objects.push_back(k0_from_json(field(o, "k0")));
        const auto& obj = inv.objects.back();
        inv.scales.push_back(obj.is_rank_one() ? std::optional<Rational>(localization(obj.rank_one()).scale)
                                               : std::nullopt);
        if (obj.is_rank_one() && o.at("k0").contains("scale")) {
            inv.scales.back() = rational_from_json(o.at("k0").at("scale"));
        }
    }
    auto object_index = [&](const Json& name) {
        const auto s = name.get<std::string>();
        for (std::size_t q = 0; q < inv.object_names.size(); ++q) {
            if (inv.object_names[q] == s) {
                return q;
            }
        }
        throw InvalidInput("unknown object " + s);
    };
    for (const auto& m : field(j, "morphisms")) {
        inv.morphism_labels.push_back(field(m, "label").get<std::string>());
        inv.morphism_source.push_back(object_index(field(m, "source")));
        inv.morphism_target.push_back(object_index(field(m, "target")));
        inv.multipliers.push_back(optional_rational_from(field(m, "multiplier")));
        inv.morphism_tail_matrices.push_back(matrix_from_json(field(m, "matrix")));
    }
    inv.pointed_vector = vector_from_json(field(j, "pointed_vector"));
    inv.pointed_value = optional_rational_from(field(j, "pointed_value"));
    return inv;
}

Json to_json(const Verdict& v, const InvariantData& a) {
    Json j;
    j["verdict"] = v.name();
    if (v.kind == VerdictKind::Equivalent) {
        Json w = Json::object();
        for (std::size_t q = 0; q < v.witness.size(); ++q) {
            w[a.object_names[q]] = rational_json(v.witness[q]);
        }
        j["witness"] = w;
    } else if (v.kind == VerdictKind::Inequivalent && v.certificate) {
        Json c;
        c["object"] = v.certificate->object_name;
        c["kind"] = v.certificate->kind;
        c["details"] = v.certificate->details;
        j["certificate"] = c;
    } else {
        j["reason"] = v.reason;
    }
    return j;
}

Verdict verdict_from_json(const Json& j, const InvariantData& a) {
    Verdict v;
    const auto tag = field(j, "verdict").get<std::string>();
    if (tag == "equivalent") {
        v.kind = VerdictKind::Equivalent;
        const Json& w = field(j, "witness");
        for (const auto& name : a.object_names) {
            v.witness.push_back(rational_from_json(field(w, name.c_str())));
        }
    } else if (tag == "inequivalent") {
        v.kind = VerdictKind::Inequivalent;
        const Json& c = field(j, "certificate");
        Certificate cert;
        cert.object_name = field(c, "object").get<std::string>();
        const auto it = std::find(a.object_names.begin(), a.object_names.end(), cert.object_name);
        if (it == a.object_names.end()) {
            throw InvalidInput("certificate names an unknown object");
        }
        cert.object = static_cast<std::size_t>(it - a.object_names.begin());
        cert.kind = field(c, "kind").get<std::string>();
        cert.details = field(c, "details").get<std::string>();
        v.certificate = cert;
    } else if (tag == "unknown") {
        v.kind = VerdictKind::Unknown;
        v.reason = field(j, "reason").get<std::string>();
    } else {
        throw InvalidInput("unknown verdict " + tag);
    }
    return v;
}

Json to_json(const CrossedProductBlocks& b) {
    const auto& g = b.acting.parent();
    Json j;
    j["acting"] = to_json(b.acting);
    j["fibre"] = to_json(b.fibre);
    Json orbits = Json::array();
    for (const auto& o : b.orbits) {
        Json arr = Json::array();
        for (auto i : o) {
            arr.push_back(element_json(g, b.points[i].rep));
        }
        orbits.push_back(arr);
    }
    j["orbits"] = orbits;
    Json blocks = Json::array();
    for (const auto& blk : b.blocks) {
        Json e;
        e["orbit"] = blk.orbit;
        e["size"] = blk.matrix_size;
        e["stabilizer"] = to_json(blk.stabilizer);
        e["character"] = to_json(blk.character);
        blocks.push_back(e);
    }
    j["blocks"] = blocks;
    j["rank"] = k0_rank(b);
    return j;
}

} // namespace afinv::io
