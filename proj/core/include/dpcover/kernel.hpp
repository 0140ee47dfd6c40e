#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dpcover/cover.hpp"
#include "dpcover/graph.hpp"

namespace dpcover {

/// Backtracking counter for transversal independent sets of a cover
/// (exactly one label per host vertex, no chosen pair joined by a
/// cross-edge). Vertices are processed in a min-degree-last order with
/// forward pruning of later labels; a vertex whose neighbors are all
/// earlier contributes a multiplicative factor instead of a branch.
///
/// The kernel is built once per (host, m) and the per-edge label maps can
/// be swapped in place, so cover-space sweeps avoid any rebuilding. One
/// kernel instance is not safe for concurrent use; sweeps give each shard
/// its own.
class CountKernel {
public:
    CountKernel(const Graph& host, int m);
    // constraints hold pointers into this object
    CountKernel(const CountKernel&) = delete;
    CountKernel& operator=(const CountKernel&) = delete;

    int fold() const { return m_; }
    const Graph& host() const { return host_; }
    /// order()[i] = vertex at DFS position i.
    const std::vector<int>& order() const { return order_; }

    /// Point edge ei's maps at external rows: fwd maps labels of the lower
    /// endpoint to labels of the upper, inv the reverse. Rows must stay
    /// alive while the kernel is used.
    void set_edge_maps(int edge_idx, const std::int8_t* fwd, const std::int8_t* inv);
    /// Identity on the given edge (rows owned by the kernel).
    void set_edge_identity(int edge_idx);
    /// Copy all matchings out of c (host graphs must match).
    void load(const Cover& c);

    /// Restrict a vertex to one label (-1 clears). Cleared by clear_prescribed.
    void prescribe(int vertex, int label);
    void clear_prescribed();

    /// Exact count. Every visited search node costs one budget step; returns
    /// false (and sets nodes to the steps consumed) if the budget ran out.
    bool count(std::uint64_t node_budget, std::uint64_t& nodes, std::uint64_t& result) const;

    /// Is there at least one transversal independent set? Early exit.
    bool exists() const;

    /// Enumerate every coloring; f receives labels indexed by host vertex.
    template <typename F>
    void for_each_coloring(F&& f) const {
        std::fill(forb_.begin(), forb_.end(), 0u);
        enum_rec(0, forb_.data(), f);
    }

    /// First position of the trailing all-multiplicative stretch; every
    /// position from here on has all its neighbors earlier in the order.
    int tail_start() const { return tail_start_; }

    /// Enumerate assignments of the branch positions only. f receives the
    /// labels by host vertex (tail entries meaningless) and the availability
    /// mask per position for the tail; colorings through a leaf are the
    /// product of the tail popcounts. Leaves with an empty tail mask are
    /// still reported (they carry no colorings).
    template <typename F>
    void for_each_branch_leaf(F&& f) const {
        std::fill(forb_.begin(), forb_.end(), 0u);
        branch_rec(0, forb_.data(), f);
    }

private:
    struct Constraint {
        int target_pos;                   // later position whose labels get forbidden
        const std::int8_t* const* slot;   // current row for this oriented edge
    };
    struct DfsState {
        std::uint64_t steps = 0;
        std::uint64_t budget = 0;
        bool exhausted = false;
    };

    std::uint64_t count_rec(int i, DfsState& st, std::uint32_t* forb) const;
    bool exists_rec(int i, std::uint32_t* forb) const;

    template <typename F>
    void branch_rec(int i, std::uint32_t* forb, F& f) const {
        if (i == tail_start_) {
            // availability per tail position
            std::uint32_t tails[64];
            for (int t = tail_start_; t < n_; ++t)
                tails[t] = allowed_[static_cast<std::size_t>(t)] & ~forb[t];
            f(static_cast<const std::int8_t*>(labels_.data()), static_cast<const std::uint32_t*>(tails));
            return;
        }
        std::uint32_t avail = allowed_[static_cast<std::size_t>(i)] & ~forb[i];
        const Constraint* cons = cons_[static_cast<std::size_t>(i)].data();
        const std::size_t ncons = cons_[static_cast<std::size_t>(i)].size();
        std::uint32_t saved[64];
        while (avail) {
            int j = __builtin_ctz(avail);
            avail &= avail - 1;
            labels_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = static_cast<std::int8_t>(j);
            for (std::size_t k = 0; k < ncons; ++k) {
                saved[k] = forb[cons[k].target_pos];
                forb[cons[k].target_pos] |= 1u << (*cons[k].slot)[j];
            }
            branch_rec(i + 1, forb, f);
            for (std::size_t k = ncons; k-- > 0;) forb[cons[k].target_pos] = saved[k];
        }
    }

    template <typename F>
    void enum_rec(int i, std::uint32_t* forb, F& f) const {
        if (i == n_) {
            f(static_cast<const std::int8_t*>(labels_.data()));
            return;
        }
        std::uint32_t avail = allowed_[static_cast<std::size_t>(i)] & ~forb[i];
        const Constraint* cons = cons_[static_cast<std::size_t>(i)].data();
        const std::size_t ncons = cons_[static_cast<std::size_t>(i)].size();
        std::uint32_t saved[64];
        while (avail) {
            int j = __builtin_ctz(avail);
            avail &= avail - 1;
            labels_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = static_cast<std::int8_t>(j);
            for (std::size_t k = 0; k < ncons; ++k) {
                saved[k] = forb[cons[k].target_pos];
                forb[cons[k].target_pos] |= 1u << (*cons[k].slot)[j];
            }
            enum_rec(i + 1, forb, f);
            for (std::size_t k = ncons; k-- > 0;) forb[cons[k].target_pos] = saved[k];
        }
    }

    Graph host_;
    int n_ = 0, m_ = 0;
    std::uint32_t full_mask_ = 0;
    std::vector<int> order_, pos_;
    std::vector<bool> has_later_;
    int tail_start_ = 0; // positions >= tail_start_ are all multiplicative
    std::vector<std::vector<Constraint>> cons_; // by position
    std::vector<const std::int8_t*> fwd_of_, inv_of_; // by host edge
    std::vector<std::int8_t> owned_;                  // backing rows for load()/identity
    std::vector<std::uint32_t> allowed_;              // by position (prescriptions)

    // DFS scratch
    mutable std::vector<std::uint32_t> forb_;
    mutable std::vector<std::int8_t> labels_;
};

} // namespace dpcover
