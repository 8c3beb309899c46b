#include "afinv/errors.hpp"
#include "afinv/qsys.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>

namespace afinv {

namespace {

using Complex = std::complex<double>;
using Dense = Eigen::MatrixXcd;

Dense to_dense(const MonomialMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    Dense d = Dense::Zero(n, n);
    for (std::size_t j = 0; j < m.size(); ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m.phase[j]) /
                             static_cast<double>(m.order);
        d(static_cast<Eigen::Index>(m.target[j]), static_cast<Eigen::Index>(j)) = std::polar(1.0, angle);
    }
    return d;
}

Dense kron(const Dense& a, const Dense& b) {
    Dense out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace

FusionResult float_oracle_fuse(const SimpleBimodule& s1, const SimpleBimodule& s2) {
    if (!(s1.target == s2.source)) {
        throw InvalidComposition("cannot compose: middle Q-systems differ");
    }
    const auto x = realize(s1);
    const auto y = realize(s2);
    const auto& group = s1.source.parent();
    const Subgroup outer = sum_subgroups(s1.source, s2.target);
    const Subgroup stab = intersect(s1.source, s2.target);
    const auto nx = static_cast<Eigen::Index>(x.size());
    const auto ny = static_cast<Eigen::Index>(y.size());
    const Eigen::Index n = nx * ny;

    // Balancing idempotent for the relative tensor product over C[K].
    Dense balance = Dense::Zero(n, n);
    for (auto k : s1.target.elements()) {
        balance += kron(to_dense(x.right(k)), to_dense(y.left(group.negate(k))));
    }
    balance /= static_cast<double>(s1.target.order());

    std::vector<Dense> stab_ops;
    for (auto t : stab.elements()) {
        stab_ops.push_back(kron(to_dense(x.left(t)), to_dense(y.right(group.negate(t)))));
    }

    std::vector<bool> done(group.order(), false);
    FusionResult out;
    for (Eigen::Index i = 0; i < nx; ++i) {
        for (Eigen::Index j = 0; j < ny; ++j) {
            const Elem g = group.add(x.grading[static_cast<std::size_t>(i)], y.grading[static_cast<std::size_t>(j)]);
            const Coset target = coset_of(outer, g);
            if (done[target.rep]) {
                continue;
            }
            done[target.rep] = true;
            // Projection onto the degree of the coset representative.
            Dense degree = Dense::Zero(n, n);
            for (Eigen::Index a = 0; a < nx; ++a) {
                for (Eigen::Index b = 0; b < ny; ++b) {
                    if (group.add(x.grading[static_cast<std::size_t>(a)], y.grading[static_cast<std::size_t>(b)]) ==
                        target.rep) {
                        degree(a * ny + b, a * ny + b) = 1.0;
                    }
                }
            }
            const Dense restricted = balance * degree;
            for (const auto& chi : dual_characters(stab)) {
                // Isotypic projection for chi on the stabilizer action.
                Dense projector = Dense::Zero(n, n);
                for (std::size_t ti = 0; ti < stab.order(); ++ti) {
                    const double angle = -2.0 * std::numbers::pi * chi.theta(stab.elements()[ti]).convert_to<double>();
                    projector += std::polar(1.0, angle) * stab_ops[ti];
                }
                projector /= static_cast<double>(stab.order());
                const Complex value = (projector * restricted).trace();
                const double rounded = std::round(value.real());
                if (std::abs(value - Complex(rounded, 0.0)) > 1e-6 || rounded < 0) {
                    throw OracleFailure("float oracle value is not an integer within 1e-6");
                }
                if (rounded > 0) {
                    out.push_back(FusionTerm{SimpleBimodule{s1.source, s2.target, target, chi},
                                             static_cast<std::int64_t>(rounded)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FusionTerm& a, const FusionTerm& b) { return a.simple < b.simple; });
    return out;
}

} // namespace afinv
