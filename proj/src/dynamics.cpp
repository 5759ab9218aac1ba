#include "opincast/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace opincast {

bool is_quadratic(IndexKind kind) { return kind != IndexKind::Sum; }

const char* to_string(IndexKind kind) {
    switch (kind) {
        case IndexKind::Sum: return "sum";
        case IndexKind::Polarization: return "pol";
        case IndexKind::Disagreement: return "dis";
        case IndexKind::InternalConflict: return "int";
        case IndexKind::Controversy: return "con";
        case IndexKind::DisagreementControversy: return "discon";
    }
    return "?";
}

IndexKind parse_index_kind(const std::string& name) {
    if (name == "sum") return IndexKind::Sum;
    if (name == "pol") return IndexKind::Polarization;
    if (name == "dis") return IndexKind::Disagreement;
    if (name == "int") return IndexKind::InternalConflict;
    if (name == "con") return IndexKind::Controversy;
    if (name == "discon") return IndexKind::DisagreementControversy;
    throw ValidationError("unknown index kind: " + name);
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Kahan-compensated mean; keeps the centered sums stable for large n.
double compensated_mean(std::span<const double> a) {
    double sum = 0.0, carry = 0.0;
    for (double v : a) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return a.empty() ? 0.0 : sum / static_cast<double>(a.size());
}

// y = (I + L) x
void apply_i_plus_l(const Graph& g, std::span<const double> x, std::vector<double>& y) {
    const std::size_t n = g.node_count();
    for (NodeId u = 0; u < n; ++u) {
        double acc = (1.0 + g.weighted_degree(u)) * x[u];
        for (const Arc& a : g.out_arcs(u)) acc -= a.weight * x[a.to];
        y[u] = acc;
    }
}

}  // namespace

OpinionVector fj_step(const Graph& g, std::span<const double> z, std::span<const double> s) {
    const std::size_t n = g.node_count();
    if (z.size() != n || s.size() != n)
        throw ValidationError("fj_step: vector length does not match node count");
    OpinionVector out(n);
    for (NodeId u = 0; u < n; ++u) {
        double acc = s[u];
        for (const Arc& a : g.out_arcs(u)) acc += a.weight * z[a.to];
        out[u] = acc / (1.0 + g.weighted_degree(u));
    }
    return out;
}

std::vector<double> solve_i_plus_l(const Graph& g, std::span<const double> b,
                                   const SolverConfig& cfg, SolveStats* stats) {
    const std::size_t n = g.node_count();
    if (b.size() != n) throw ValidationError("solve: vector length does not match node count");
    if (!(cfg.tolerance > 0.0)) throw ValidationError("solver tolerance must be positive");

    const double bnorm = norm2(b);
    std::vector<double> x(b.begin(), b.end());
    if (bnorm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        if (stats) *stats = {0, 0.0};
        return x;
    }

    // CG on the SPD system (I+L) x = b, started at x = b. Optional Jacobi
    // preconditioning on the diagonal 1 + weighted degree.
    std::vector<double> r(n), p(n), q(n), z(n), diag_inv;
    if (cfg.jacobi) {
        diag_inv.resize(n);
        for (NodeId u = 0; u < n; ++u) diag_inv[u] = 1.0 / (1.0 + g.weighted_degree(u));
    }
    apply_i_plus_l(g, x, q);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - q[i];

    auto precondition = [&](const std::vector<double>& v, std::vector<double>& out) {
        if (cfg.jacobi)
            for (std::size_t i = 0; i < n; ++i) out[i] = diag_inv[i] * v[i];
        else
            out = v;
    };

    precondition(r, z);
    p = z;
    double rz = dot(r, z);
    double rnorm = norm2(r);
    const std::size_t max_iter = cfg.max_iterations ? cfg.max_iterations : 10 * n;
    std::size_t it = 0;
    while (rnorm > cfg.tolerance * bnorm) {
        if (it >= max_iter)
            throw SolverError("conjugate gradient did not converge: residual " +
                                  std::to_string(rnorm / bnorm) + " after " +
                                  std::to_string(it) + " iterations",
                              rnorm / bnorm);
        apply_i_plus_l(g, p, q);
        const double alpha = rz / dot(p, q);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * q[i];
        }
        precondition(r, z);
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
        rnorm = norm2(r);
        ++it;
    }
    if (stats) *stats = {it, rnorm / bnorm};
    return x;
}

OpinionVector fj_equilibrium(const Graph& g, std::span<const double> s, const SolverConfig& cfg,
                             SolveStats* stats) {
    return solve_i_plus_l(g, s, cfg, stats);
}

double index_value(const Graph& g, std::span<const double> s, IndexKind kind,
                   const SolverConfig& cfg) {
    const std::size_t n = g.node_count();
    if (s.size() != n) throw ValidationError("index_value: vector length mismatch");
    if (kind == IndexKind::Sum) {
        double acc = 0.0, carry = 0.0;
        for (double v : s) {
            double y = v - carry;
            double t = acc + y;
            carry = (t - acc) - y;
            acc = t;
        }
        return acc;
    }
    const std::vector<double> z = solve_i_plus_l(g, s, cfg);
    switch (kind) {
        case IndexKind::Polarization: {
            const double mean = compensated_mean(z);
            double acc = 0.0;
            for (double v : z) acc += (v - mean) * (v - mean);
            return acc;
        }
        case IndexKind::Disagreement: {
            double acc = 0.0;
            for (NodeId u = 0; u < n; ++u)
                for (const Arc& a : g.out_arcs(u))
                    if (a.to > u) acc += a.weight * (z[u] - z[a.to]) * (z[u] - z[a.to]);
            return acc;
        }
        case IndexKind::InternalConflict: {
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) acc += (s[i] - z[i]) * (s[i] - z[i]);
            return acc;
        }
        case IndexKind::Controversy:
            return dot(z, z);
        case IndexKind::DisagreementControversy:
            return dot(s, z);
        case IndexKind::Sum:
            break;
    }
    throw ValidationError("unreachable index kind");
}

std::vector<double> linear_gain_vector(const Graph& g, std::span<const double> s,
                                       std::span<const double> delta, IndexKind kind,
                                       const SolverConfig& cfg) {
    const std::size_t n = g.node_count();
    if (s.size() != n || delta.size() != n)
        throw ValidationError("linear_gain_vector: vector length mismatch");
    if (!is_quadratic(kind))
        throw ValidationError("linear gains are defined for quadratic indices only");

    const std::vector<double> z = solve_i_plus_l(g, s, cfg);
    std::vector<double> gain(n);
    switch (kind) {
        case IndexKind::DisagreementControversy:
            for (std::size_t i = 0; i < n; ++i) gain[i] = 2.0 * z[i];
            break;
        case IndexKind::Controversy: {
            const std::vector<double> y = solve_i_plus_l(g, z, cfg);
            for (std::size_t i = 0; i < n; ++i) gain[i] = 2.0 * y[i];
            break;
        }
        case IndexKind::Disagreement: {
            const std::vector<double> y = solve_i_plus_l(g, z, cfg);
            for (std::size_t i = 0; i < n; ++i) gain[i] = 2.0 * (z[i] - y[i]);
            break;
        }
        case IndexKind::Polarization: {
            const double mean = compensated_mean(z);
            std::vector<double> centered(n);
            for (std::size_t i = 0; i < n; ++i) centered[i] = z[i] - mean;
            const std::vector<double> y = solve_i_plus_l(g, centered, cfg);
            for (std::size_t i = 0; i < n; ++i) gain[i] = 2.0 * y[i];
            break;
        }
        case IndexKind::InternalConflict: {
            std::vector<double> d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = s[i] - z[i];
            const std::vector<double> y = solve_i_plus_l(g, d, cfg);
            for (std::size_t i = 0; i < n; ++i) gain[i] = 2.0 * (d[i] - y[i]);
            break;
        }
        case IndexKind::Sum:
            break;
    }
    for (std::size_t i = 0; i < n; ++i) gain[i] *= delta[i];
    return gain;
}

std::vector<double> index_matrix_column(const Graph& g, IndexKind kind, NodeId v,
                                        const SolverConfig& cfg, ColumnCache* cache) {
    g.validate_node(v);
    if (!is_quadratic(kind))
        throw ValidationError("index matrix columns are defined for quadratic indices only");

    auto compute = [&]() {
        const std::size_t n = g.node_count();
        std::vector<double> e(n, 0.0);
        e[v] = 1.0;
        switch (kind) {
            case IndexKind::DisagreementControversy:
                return solve_i_plus_l(g, e, cfg);
            case IndexKind::Controversy: {
                auto t = solve_i_plus_l(g, e, cfg);
                return solve_i_plus_l(g, t, cfg);
            }
            case IndexKind::Disagreement: {
                // M_D = (I+L)^{-1} - (I+L)^{-2}
                auto t = solve_i_plus_l(g, e, cfg);
                auto t2 = solve_i_plus_l(g, t, cfg);
                for (std::size_t i = 0; i < n; ++i) t[i] -= t2[i];
                return t;
            }
            case IndexKind::InternalConflict: {
                // M_I = (I - (I+L)^{-1})^2 = I - 2 (I+L)^{-1} + (I+L)^{-2}
                auto t = solve_i_plus_l(g, e, cfg);
                auto t2 = solve_i_plus_l(g, t, cfg);
                std::vector<double> col(n);
                for (std::size_t i = 0; i < n; ++i) col[i] = e[i] - 2.0 * t[i] + t2[i];
                return col;
            }
            case IndexKind::Polarization: {
                auto t = solve_i_plus_l(g, e, cfg);
                const double mean = compensated_mean(t);
                for (double& x : t) x -= mean;
                return solve_i_plus_l(g, t, cfg);
            }
            case IndexKind::Sum:
                break;
        }
        throw ValidationError("unreachable index kind");
    };

    if (cache) return cache->get_or_compute(kind, v, compute);
    return compute();
}

double relative_increase(const Graph& g, std::span<const double> s,
                         std::span<const double> s_adjusted, IndexKind kind,
                         const SolverConfig& cfg) {
    const double base = index_value(g, s, kind, cfg);
    if (base == 0.0)
        throw std::domain_error("relative_increase: baseline index is zero");
    const double adjusted = index_value(g, s_adjusted, kind, cfg);
    return (adjusted - base) / base;
}

}  // namespace opincast
