#include "afinv/bratteli.hpp"

#include "afinv/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace afinv {

void validate(const StationarySystem& sys) {
    if (sys.matrix.rows() == 0 || !sys.matrix.square()) {
        throw InvalidInput("stationary system needs a nonempty square matrix");
    }
    if (!sys.matrix.nonnegative()) {
        throw InvalidInput("stationary system matrix has negative entries");
    }
    if (!sys.labels.empty() && sys.labels.size() != sys.matrix.rows()) {
        throw InvalidInput("label count does not match matrix size");
    }
}

std::string K0Description::variant_name() const {
    switch (form.index()) {
    case 0:
        return "rank-one";
    case 1:
        return "direct-sum";
    default:
        return "opaque";
    }
}

std::vector<std::vector<std::int64_t>> K0Description::prime_sets() const {
    std::vector<std::vector<std::int64_t>> out;
    if (const auto* r = std::get_if<RankOneForm>(&form)) {
        out.push_back(r->primes);
    } else if (const auto* d = std::get_if<DirectSumForm>(&form)) {
        for (const auto& b : d->blocks) {
            out.push_back(b.primes);
        }
        std::sort(out.begin(), out.end());
    }
    return out;
}

std::size_t limit_rank(const StationarySystem& sys) {
    validate(sys);
    return rank(sys.matrix.power(sys.matrix.rows()));
}

std::optional<RankOneForm> rank_one_form(const IntMatrix& a) {
    const std::size_t b = a.rows();
    const IntMatrix stable = a.power(b);
    if (rank(stable) != 1) {
        return std::nullopt;
    }
    // Every row of A^b is a multiple of one nonnegative vector w, and wA = λw.
    std::vector<Integer> w;
    for (std::size_t i = 0; i < b && w.empty(); ++i) {
        auto r = stable.row(i);
        if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; })) {
            w = std::move(r);
        }
    }
    Integer g = 0;
    for (const auto& x : w) {
        g = gcd(g, x);
    }
    for (auto& x : w) {
        x /= g;
    }
    const auto wa = left_multiply(w, a);
    std::size_t pivot = 0;
    while (w[pivot] == 0) {
        ++pivot;
    }
    if (wa[pivot] % w[pivot] != 0) {
        return std::nullopt;
    }
    Integer lambda = wa[pivot] / w[pivot];
    for (std::size_t j = 0; j < b; ++j) {
        if (wa[j] != lambda * w[j]) {
            return std::nullopt;
        }
    }
    if (lambda <= 0) {
        return std::nullopt;
    }
    return RankOneForm{lambda, std::move(w), prime_divisors(lambda)};
}

K0Description stationary_k0(const StationarySystem& sys) {
    validate(sys);
    const IntMatrix& a = sys.matrix;
    K0Description desc;
    desc.matrix = a;
    desc.limit_rank = rank(a.power(a.rows()));
    if (auto r = rank_one_form(a)) {
        desc.form = std::move(*r);
        return desc;
    }
    // Connected components of the support graph; each must be rank-one on its own.
    const std::size_t n = a.rows();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) != 0) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::ptrdiff_t> block_of(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        auto root = find(i);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<std::ptrdiff_t>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(block_of[root])].push_back(i);
    }
    if (blocks.size() > 1) {
        DirectSumForm d;
        bool ok = true;
        for (const auto& idx : blocks) {
            auto r = rank_one_form(a.submatrix(idx));
            if (!r) {
                ok = false;
                break;
            }
            d.blocks.push_back(std::move(*r));
        }
        if (ok) {
            d.partition = std::move(blocks);
            desc.form = std::move(d);
            return desc;
        }
    }
    desc.form = OpaquePresentation{a};
    return desc;
}

ScaledLocalization localization(const RankOneForm& form) {
    Integer total = 0;
    for (const auto& x : form.left_vector) {
        total += x;
    }
    return ScaledLocalization{strip_primes(Rational(1) / Rational(total), form.primes), form.primes};
}

Rational value_map(const RankOneForm& form, std::int64_t level, const std::vector<Integer>& x) {
    Integer total = 0;
    for (const auto& c : form.left_vector) {
        total += c;
    }
    Rational v = Rational(dot(form.left_vector, x)) / Rational(total);
    Integer scale = boost::multiprecision::pow(form.lambda, static_cast<unsigned>(level < 0 ? -level : level));
    return level >= 0 ? v / Rational(scale) : v * Rational(scale);
}

std::optional<Rational> morphism_multiplier(const K0Description& p, const K0Description& q, const IntMatrix& m) {
    if (m.rows() != q.matrix.rows() || m.cols() != p.matrix.rows()) {
        throw InvalidInput("morphism matrix shape does not match the two systems");
    }
    if (!p.is_rank_one() || !q.is_rank_one()) {
        return std::nullopt;
    }
    if (!(q.matrix * m == m * p.matrix)) {
        return std::nullopt;
    }
    const auto& vp = p.rank_one().left_vector;
    const auto& vq = q.rank_one().left_vector;
    const auto vqm = left_multiply(vq, m);
    // v_Q M = c v_P, and q = c (v_P·1) / (v_Q·1).
    std::size_t pivot = 0;
    while (pivot < vp.size() && vp[pivot] == 0) {
        ++pivot;
    }
    const Rational c(vqm[pivot], vp[pivot]);
    for (std::size_t j = 0; j < vp.size(); ++j) {
        if (Rational(vqm[j]) != c * Rational(vp[j])) {
            return std::nullopt;
        }
    }
    Integer sp = 0;
    Integer sq = 0;
    for (const auto& x : vp) {
        sp += x;
    }
    for (const auto& x : vq) {
        sq += x;
    }
    return c * Rational(sp) / Rational(sq);
}

bool verify_shift_equivalence(const IntMatrix& a, const IntMatrix& b, const ShiftEquivalence& w) {
    if (!w.r.nonnegative() || !w.s.nonnegative()) {
        return false;
    }
    if (w.r.rows() != b.rows() || w.r.cols() != a.rows() || w.s.rows() != a.rows() || w.s.cols() != b.rows()) {
        return false;
    }
    return w.r * a == b * w.r && w.s * b == a * w.s && w.s * w.r == a.power(w.lag) &&
           w.r * w.s == b.power(w.lag);
}

namespace {

// Calls visit(m) for every rows x cols matrix with entries in [0, bound] until it returns true.
bool enumerate(std::size_t rows, std::size_t cols, std::int64_t bound, std::uint64_t cap,
               const std::function<bool(const IntMatrix&)>& visit) {
    IntMatrix m(rows, cols);
    const std::size_t cells = rows * cols;
    std::uint64_t seen = 0;
    while (true) {
        if (++seen > cap) {
            return false;
        }
        if (visit(m)) {
            return true;
        }
        std::size_t i = 0;
        while (i < cells) {
            auto& x = m(i / cols, i % cols);
            if (x < bound) {
                ++x;
                break;
            }
            x = 0;
            ++i;
        }
        if (i == cells) {
            return false;
        }
    }
}

} // namespace

std::optional<ShiftEquivalence> shift_equivalent_bounded(const IntMatrix& a, const IntMatrix& b,
                                                         std::size_t lag_bound, std::int64_t entry_bound,
                                                         std::uint64_t max_candidates) {
    if (!a.square() || !b.square()) {
        throw InvalidInput("shift equivalence needs square matrices");
    }
    if (lag_bound < 1 || entry_bound < 1) {
        throw InvalidInput("shift equivalence bounds must be >= 1");
    }
    if (a == b) {
        ShiftEquivalence w{IntMatrix::identity(a.rows()), a, 1};
        return w;
    }
    // Lag-independent constraints on R first, then S per lag.
    std::vector<IntMatrix> r_candidates;
    enumerate(b.rows(), a.rows(), entry_bound, max_candidates, [&](const IntMatrix& r) {
        if (r * a == b * r) {
            r_candidates.push_back(r);
        }
        return false;
    });
    for (std::size_t lag = 1; lag <= lag_bound; ++lag) {
        const IntMatrix al = a.power(lag);
        const IntMatrix bl = b.power(lag);
        std::optional<ShiftEquivalence> found;
        enumerate(a.rows(), b.rows(), entry_bound, max_candidates, [&](const IntMatrix& s) {
            if (!(s * b == a * s)) {
                return false;
            }
            for (const auto& r : r_candidates) {
                if (s * r == al && r * s == bl) {
                    found = ShiftEquivalence{r, s, lag};
                    return true;
                }
            }
            return false;
        });
        if (found) {
            return found;
        }
    }
    return std::nullopt;
}

} // namespace afinv
