#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "opincast/graph.hpp"

namespace opincast {

// The opinion indices. Sum is the linear form 1^T s; the five others are
// quadratic forms s^T M s whose matrices are built from (I+L)^{-1}.
enum class IndexKind {
    Sum,
    Polarization,
    Disagreement,
    InternalConflict,
    Controversy,
    DisagreementControversy,
};

bool is_quadratic(IndexKind kind);
const char* to_string(IndexKind kind);
IndexKind parse_index_kind(const std::string& name);

struct SolverConfig {
    double tolerance = 1e-10;       // relative residual stop
    std::size_t max_iterations = 0; // 0 means 10 * n
    bool jacobi = false;            // optional diagonal preconditioner
};

struct SolveStats {
    std::size_t iterations = 0;
    double residual = 0.0;
};

// One synchronous averaging round: z'_u = (sum_v w_uv z_v + s_u) / (1 + deg_w(u)).
OpinionVector fj_step(const Graph& g, std::span<const double> z, std::span<const double> s);

// Equilibrium z* solving (I + L) z = s by conjugate gradients.
OpinionVector fj_equilibrium(const Graph& g, std::span<const double> s,
                             const SolverConfig& cfg = {}, SolveStats* stats = nullptr);

// Solves (I + L) x = b; shared by the index machinery.
std::vector<double> solve_i_plus_l(const Graph& g, std::span<const double> b,
                                   const SolverConfig& cfg = {}, SolveStats* stats = nullptr);

double index_value(const Graph& g, std::span<const double> s, IndexKind kind,
                   const SolverConfig& cfg = {});

// Gains of the linearized objective: w_u = (2 s^T M)_u * delta_u, realized
// with one or two extra solves instead of forming M.
std::vector<double> linear_gain_vector(const Graph& g, std::span<const double> s,
                                       std::span<const double> delta, IndexKind kind,
                                       const SolverConfig& cfg = {});

// Bounded LRU cache of index-matrix columns, keyed by (kind, column).
// Thread-safe; sampling workers share one instance.
class ColumnCache {
public:
    explicit ColumnCache(std::size_t capacity = 4096) : capacity_(capacity) {}

    template <typename Fn>
    std::vector<double> get_or_compute(IndexKind kind, NodeId v, Fn&& compute) {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(kind) << 32) | static_cast<std::uint64_t>(v);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) {
                order_.splice(order_.begin(), order_, it->second);
                return it->second->second;
            }
        }
        std::vector<double> column = compute();
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second->second;
        order_.emplace_front(key, column);
        map_[key] = order_.begin();
        if (map_.size() > capacity_) {
            map_.erase(order_.back().first);
            order_.pop_back();
        }
        return column;
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return map_.size();
    }

private:
    std::size_t capacity_;
    mutable std::mutex mutex_;
    std::list<std::pair<std::uint64_t, std::vector<double>>> order_;
    std::unordered_map<std::uint64_t,
                       std::list<std::pair<std::uint64_t, std::vector<double>>>::iterator>
        map_;
};

// Column M e_v of the index matrix, via solve-only identities.
std::vector<double> index_matrix_column(const Graph& g, IndexKind kind, NodeId v,
                                        const SolverConfig& cfg = {},
                                        ColumnCache* cache = nullptr);

// (new - old) / old for the chosen index; throws if the baseline is zero.
double relative_increase(const Graph& g, std::span<const double> s,
                         std::span<const double> s_adjusted, IndexKind kind,
                         const SolverConfig& cfg = {});

}  // namespace opincast
