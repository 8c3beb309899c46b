#include "afinv/crossed.hpp"
#include "afinv/equivalence.hpp"
#include "afinv/errors.hpp"
#include "afinv/invariant.hpp"
#include "afinv/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

using namespace afinv;
using io::Json;

namespace {

struct RunConfig {
    std::string format = "text";
    std::size_t max_group_order = kDefaultMaxGroupOrder;
    std::size_t se_lag = 2;
    std::int64_t se_entries = 2;
};

bool json_mode(const RunConfig& cfg) { return cfg.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

std::string product_text(const FusionTable& t, std::size_t a, std::size_t b) {
    std::vector<std::string> parts;
    for (const auto& [k, m] : t.product(a, b)) {
        parts.push_back((m > 1 ? std::to_string(m) + "·" : "") + t.label(k));
    }
    return join(parts, " ⊕ ");
}

void print_grid(const std::vector<std::vector<std::string>>& grid) {
    std::vector<std::size_t> width;
    auto display = [](const std::string& s) {
        // Count code points so that ⊕ and · take one column.
        std::size_t n = 0;
        for (unsigned char c : s) {
            n += (c & 0xC0) != 0x80;
        }
        return n;
    };
    for (const auto& row : grid) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], display(row[c]));
        }
    }
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += (c ? " | " : "") + row[c] + std::string(width[c] - display(row[c]), ' ');
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        std::cout << line << "\n";
    }
}

std::string vector_text(const std::vector<Integer>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) {
        parts.push_back(to_string(x));
    }
    return "(" + join(parts, ",") + ")";
}

std::string primes_text(const std::vector<std::int64_t>& ps) {
    std::vector<std::string> parts;
    for (auto p : ps) {
        parts.push_back(std::to_string(p));
    }
    return "{" + join(parts, ",") + "}";
}

std::string localization_text(const RankOneForm& r) {
    const auto loc = localization(r);
    const std::string group = r.primes.empty() ? "Z" : "Z[1/" + to_string(r.lambda) + "]";
    return (loc.scale == 1 ? "" : to_string(loc.scale) + "·") + group;
}

std::string k0_text(const K0Description& d) {
    std::ostringstream out;
    if (const auto* r = std::get_if<RankOneForm>(&d.form)) {
        out << localization_text(*r) << "  (λ=" << to_string(r->lambda) << ", v=" << vector_text(r->left_vector)
            << ", S=" << primes_text(r->primes) << ")";
    } else if (const auto* s = std::get_if<DirectSumForm>(&d.form)) {
        std::vector<std::string> parts;
        for (const auto& b : s->blocks) {
            parts.push_back(localization_text(b));
        }
        out << join(parts, " ⊕ ") << "  (direct sum, rank " << d.limit_rank << ")";
    } else {
        out << "unidentified limit of rank " << d.limit_rank;
    }
    return out.str();
}

std::size_t parse_qsystem(const FusionTable& t, const std::string& text) {
    std::string s = text;
    if (!s.empty() && (s[0] == 'Q' || s[0] == 'q')) {
        s = s.substr(1);
    }
    std::size_t pos = 0;
    std::size_t i = 0;
    try {
        i = std::stoul(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || i < 1 || i > t.qsystems().size()) {
        throw InvalidInput("unknown Q-system " + text + " (expected Q1.." + t.qsystem_name(t.qsystems().size() - 1) + ")");
    }
    return i - 1;
}

int cmd_fusion_table(const RunConfig& cfg, const std::string& path) {
    const auto table = fusion_table(io::group_from_json(io::load_file(path)), cfg.max_group_order);
    if (json_mode(cfg)) {
        emit(io::to_json(*table));
        return 0;
    }
    const std::size_t n = table->qsystems().size();
    for (std::size_t m = 0; m < n; ++m) {
        std::vector<std::size_t> rows;
        std::vector<std::size_t> cols;
        for (std::size_t q = 0; q < n; ++q) {
            const auto& in = table->between(q, m);
            rows.insert(rows.end(), in.begin(), in.end());
            const auto& out = table->between(m, q);
            cols.insert(cols.end(), out.begin(), out.end());
        }
        std::cout << (m ? "\n" : "") << "M_{?-" << m + 1 << "} ⊠_" << table->qsystem_name(m) << " M_{" << m + 1
                  << "-?}\n";
        std::vector<std::vector<std::string>> grid;
        grid.emplace_back(1, "");
        for (auto c : cols) {
            grid[0].push_back(table->label(c));
        }
        for (auto r : rows) {
            std::vector<std::string> line{table->label(r)};
            for (auto c : cols) {
                line.push_back(product_text(*table, r, c));
            }
            grid.push_back(std::move(line));
        }
        print_grid(grid);
    }
    return 0;
}

int cmd_qsystems(const RunConfig& cfg, const std::string& path) {
    const auto table = fusion_table(io::group_from_json(io::load_file(path)), cfg.max_group_order);
    const auto& list = table->qsystem_list();
    if (json_mode(cfg)) {
        Json j;
        j["group"] = io::to_json(table->group());
        Json arr = Json::array();
        for (std::size_t q = 0; q < list.systems.size(); ++q) {
            Json e;
            e["name"] = table->qsystem_name(q);
            e["subgroup"] = io::to_json(list.systems[q].subgroup);
            e["dimension"] = list.systems[q].dimension();
            arr.push_back(e);
        }
        j["qsystems"] = arr;
        j["complete"] = list.complete;
        j["warnings"] = list.warnings;
        emit(j);
        return 0;
    }
    const auto& g = table->group();
    for (std::size_t q = 0; q < list.systems.size(); ++q) {
        std::vector<std::string> els;
        for (auto x : list.systems[q].subgroup.elements()) {
            els.push_back(g.format(x));
        }
        std::cout << table->qsystem_name(q) << "  dim " << list.systems[q].dimension() << "  {" << join(els, ", ")
                  << "}\n";
    }
    for (const auto& w : list.warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return 0;
}

int cmd_bimodules(const RunConfig& cfg, const std::string& path, const std::string& source,
                  const std::string& target) {
    const auto table = fusion_table(io::group_from_json(io::load_file(path)), cfg.max_group_order);
    const auto s = parse_qsystem(*table, source);
    const auto t = parse_qsystem(*table, target);
    const auto& idx = table->between(s, t);
    if (json_mode(cfg)) {
        Json arr = Json::array();
        for (auto i : idx) {
            Json e;
            e["label"] = table->label(i);
            e["dimension"] = table->simples()[i].dimension();
            e["bimodule"] = io::to_json(table->simples()[i]);
            arr.push_back(e);
        }
        emit(arr);
        return 0;
    }
    const auto& g = table->group();
    for (auto i : idx) {
        const auto& b = table->simples()[i];
        std::vector<std::string> chi;
        for (auto x : b.character.domain().elements()) {
            chi.push_back(g.format(x) + "↦" + to_string(b.character.theta(x)));
        }
        std::cout << table->label(i) << "  dim " << b.dimension() << "  coset " << g.format(b.coset.rep)
                  << "  character {" << join(chi, ", ") << "}\n";
    }
    return 0;
}

void print_invariant(const InvariantData& inv) {
    for (std::size_t q = 0; q < inv.objects.size(); ++q) {
        std::cout << inv.object_names[q] << ": " << k0_text(inv.objects[q]) << "\n";
        if (!inv.objects[q].is_rank_one() && inv.objects[q].variant_name() == "opaque") {
            std::cerr << "warning: " << inv.object_names[q] << " has no rank-one or direct-sum identification\n";
        }
    }
    std::cout << "pointed value: "
              << (inv.pointed_value ? to_string(*inv.pointed_value) : "level vector " + vector_text(inv.pointed_vector))
              << "\n\n";
    // One column per source-target family; a single value when the family agrees.
    std::vector<std::vector<std::string>> grid(2);
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> families;
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t m = 0; m < inv.multipliers.size(); ++m) {
        const auto key = std::make_pair(inv.morphism_source[m], inv.morphism_target[m]);
        if (!families.count(key)) {
            order.push_back(key);
        }
        families[key].push_back(m);
    }
    for (const auto& key : order) {
        std::vector<std::string> values;
        for (auto m : families[key]) {
            const auto v = inv.multipliers[m] ? to_string(*inv.multipliers[m]) : "-";
            if (std::find(values.begin(), values.end(), v) == values.end()) {
                values.push_back(v);
            }
        }
        grid[0].push_back("M_{" + std::to_string(key.first + 1) + "-" + std::to_string(key.second + 1) + "}");
        grid[1].push_back(join(values, "/"));
    }
    print_grid(grid);
    std::cout << "\n";
    for (std::size_t m = 0; m < inv.multipliers.size(); ++m) {
        std::cout << inv.morphism_labels[m] << " = "
                  << (inv.multipliers[m] ? to_string(*inv.multipliers[m]) : "matrix " + io::to_json(inv.morphism_tail_matrices[m]).dump())
                  << "\n";
    }
}

int cmd_invariant(const RunConfig& cfg, const std::string& path) {
    const auto d = io::diagram_from_json(io::load_file(path), cfg.max_group_order);
    const auto inv = compute_invariant(d, cfg.max_group_order);
    if (json_mode(cfg)) {
        emit(io::to_json(inv));
    } else {
        print_invariant(inv);
    }
    return 0;
}

int cmd_compare(const RunConfig& cfg, const std::string& path_a, const std::string& path_b) {
    const auto a = compute_invariant(io::diagram_from_json(io::load_file(path_a), cfg.max_group_order), cfg.max_group_order);
    const auto b = compute_invariant(io::diagram_from_json(io::load_file(path_b), cfg.max_group_order), cfg.max_group_order);
    const auto v = compare(a, b);
    // Bounded shift-equivalence search only annotates UNKNOWN verdicts.
    std::vector<std::string> notes;
    if (v.kind == VerdictKind::Unknown) {
        for (std::size_t q = 0; q < a.objects.size(); ++q) {
            if (a.objects[q].is_rank_one() && b.objects[q].is_rank_one()) {
                continue;
            }
            const auto w = shift_equivalent_bounded(a.objects[q].matrix, b.objects[q].matrix, cfg.se_lag, cfg.se_entries);
            notes.push_back(a.object_names[q] + (w ? ": presentations shift equivalent at lag " + std::to_string(w->lag)
                                                   : ": no shift equivalence within bounds"));
        }
    }
    if (json_mode(cfg)) {
        Json j = io::to_json(v, a);
        if (!notes.empty()) {
            j["notes"] = notes;
        }
        emit(j);
    } else {
        std::cout << v.name() << "\n";
        if (v.kind == VerdictKind::Equivalent) {
            for (std::size_t q = 0; q < v.witness.size(); ++q) {
                std::cout << "  u_" << a.object_names[q] << " = " << to_string(v.witness[q]) << "\n";
            }
        } else if (v.certificate) {
            std::cout << "  " << v.certificate->object_name << ", " << v.certificate->kind << ", "
                      << v.certificate->details << "\n";
        } else {
            std::cout << "  " << v.reason << "\n";
        }
        for (const auto& n : notes) {
            std::cout << "  note: " << n << "\n";
        }
    }
    return v.exit_code();
}

int cmd_oracle(const RunConfig& cfg, const std::string& path) {
    const auto table = fusion_table(io::group_from_json(io::load_file(path)), cfg.max_group_order);
    const auto& subs = table->subgroups();
    bool all_pass = true;
    Json rows = Json::array();
    std::vector<std::vector<std::string>> grid{{"H", "K", "bimodules", "crossed rank", "result"}};
    for (std::size_t h = 0; h < subs.size(); ++h) {
        for (std::size_t k = 0; k < subs.size(); ++k) {
            const auto blocks = crossed_product_blocks(table->group(), subs[k], subs[h]);
            const auto count = table->between(h, k).size();
            const bool pass = k0_rank(blocks) == count &&
                              algebra_dimension(blocks) == blocks.points.size() * subs[h].order();
            all_pass = all_pass && pass;
            Json r;
            r["H"] = table->qsystem_name(h);
            r["K"] = table->qsystem_name(k);
            r["bimodules"] = count;
            r["crossed_product"] = io::to_json(blocks);
            r["pass"] = pass;
            rows.push_back(r);
            grid.push_back({table->qsystem_name(h), table->qsystem_name(k), std::to_string(count),
                            std::to_string(k0_rank(blocks)), pass ? "PASS" : "FAIL"});
        }
    }
    if (json_mode(cfg)) {
        Json j;
        j["group"] = io::to_json(table->group());
        j["rows"] = rows;
        j["all_pass"] = all_pass;
        emit(j);
    } else {
        print_grid(grid);
    }
    return all_pass ? 0 : 2;
}

int cmd_k0(const RunConfig& cfg, const std::string& path, const std::string& against) {
    const auto sys = io::system_from_json(io::load_file(path));
    const auto desc = stationary_k0(sys);
    std::optional<ShiftEquivalence> w;
    IntMatrix other;
    if (!against.empty()) {
        other = io::system_from_json(io::load_file(against)).matrix;
        w = shift_equivalent_bounded(sys.matrix, other, cfg.se_lag, cfg.se_entries);
    }
    if (json_mode(cfg)) {
        Json j = io::to_json(desc);
        if (!against.empty()) {
            Json s;
            s["found"] = w.has_value();
            if (w) {
                s["lag"] = w->lag;
                s["R"] = io::to_json(w->r);
                s["S"] = io::to_json(w->s);
            }
            j["shift_equivalence"] = s;
        }
        emit(j);
    } else {
        std::cout << k0_text(desc) << "\n";
        if (!against.empty()) {
            std::cout << (w ? "shift equivalent at lag " + std::to_string(w->lag) + ", R=" + io::to_json(w->r).dump() +
                                  ", S=" + io::to_json(w->s).dump()
                            : std::string("no shift equivalence within bounds"))
                      << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of AF-actions of finite abelian groups"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-group-order", cfg.max_group_order, "Largest group order accepted")->check(CLI::PositiveNumber);
    app.add_option("--se-lag", cfg.se_lag, "Lag bound for shift-equivalence search")->check(CLI::PositiveNumber);
    app.add_option("--se-entries", cfg.se_entries, "Entry bound for shift-equivalence search")->check(CLI::PositiveNumber);

    std::string group_file;
    std::string second_file;
    std::string source;
    std::string target;
    std::string against;
    std::function<int()> run;

    auto* fusion = app.add_subcommand("fusion-table", "Composition tables of simple bimodules");
    fusion->add_option("group", group_file)->required()->check(CLI::ExistingFile);
    fusion->callback([&] { run = [&] { return cmd_fusion_table(cfg, group_file); }; });

    auto* qs = app.add_subcommand("qsystems", "Representative Q-systems");
    qs->add_option("group", group_file)->required()->check(CLI::ExistingFile);
    qs->callback([&] { run = [&] { return cmd_qsystems(cfg, group_file); }; });

    auto* bim = app.add_subcommand("bimodules", "Simple bimodules between two Q-systems");
    bim->add_option("group", group_file)->required()->check(CLI::ExistingFile);
    bim->add_option("--source", source, "Source Q-system, e.g. Q2")->required();
    bim->add_option("--target", target, "Target Q-system, e.g. Q1")->required();
    bim->callback([&] { run = [&] { return cmd_bimodules(cfg, group_file, source, target); }; });

    auto* inv = app.add_subcommand("invariant", "Pointed invariant of an enriched Bratteli diagram");
    inv->add_option("diagram", group_file)->required()->check(CLI::ExistingFile);
    inv->callback([&] { run = [&] { return cmd_invariant(cfg, group_file); }; });

    auto* cmp = app.add_subcommand("compare", "Compare the invariants of two diagrams");
    cmp->add_option("a", group_file)->required()->check(CLI::ExistingFile);
    cmp->add_option("b", second_file)->required()->check(CLI::ExistingFile);
    cmp->callback([&] { run = [&] { return cmd_compare(cfg, group_file, second_file); }; });

    auto* orc = app.add_subcommand("oracle", "Crossed-product rank check for every subgroup pair");
    orc->add_option("group", group_file)->required()->check(CLI::ExistingFile);
    orc->callback([&] { run = [&] { return cmd_oracle(cfg, group_file); }; });

    auto* k0 = app.add_subcommand("k0", "Ordered K0 of a stationary system");
    k0->add_option("--matrix", group_file, "Matrix JSON")->required()->check(CLI::ExistingFile);
    k0->add_option("--against", against, "Second matrix for a bounded shift-equivalence search")
        ->check(CLI::ExistingFile);
    k0->callback([&] { run = [&] { return cmd_k0(cfg, group_file, against); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        return run();
    } catch (const InternalConsistency& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const OracleFailure& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
