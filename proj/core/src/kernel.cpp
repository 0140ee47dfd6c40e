#include "dpcover/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dpcover/errors.hpp"

namespace dpcover {

CountKernel::CountKernel(const Graph& host, int m) : host_(host), n_(host.n()), m_(m) {
    if (m < 1 || m > kMaxFold) throw std::invalid_argument("CountKernel: fold out of range");
    // exact u64 counting needs m^n comfortably below 2^63
    double bits = n_ * std::log2(static_cast<double>(m));
    if (bits >= 62.5)
        throw ResourceLimitError("CountKernel: m^n exceeds the exact 64-bit counting range");
    full_mask_ = (1u << m_) - 1u;

    // min-degree-last: sort by descending degree, stable on index
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return host_.degree(a) > host_.degree(b); });
    pos_.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) pos_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;

    cons_.assign(static_cast<std::size_t>(n_), {});
    has_later_.assign(static_cast<std::size_t>(n_), false);
    const EdgeList& edges = host_.edges();
    fwd_of_.assign(edges.size(), nullptr);
    inv_of_.assign(edges.size(), nullptr);
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        auto [u, v] = edges[ei]; // u < v
        int pu = pos_[static_cast<std::size_t>(u)], pv = pos_[static_cast<std::size_t>(v)];
        if (pu < pv) {
            cons_[static_cast<std::size_t>(pu)].push_back({pv, &fwd_of_[ei]});
            has_later_[static_cast<std::size_t>(pu)] = true;
        } else {
            cons_[static_cast<std::size_t>(pv)].push_back({pu, &inv_of_[ei]});
            has_later_[static_cast<std::size_t>(pv)] = true;
        }
    }

    tail_start_ = n_;
    while (tail_start_ > 0 && !has_later_[static_cast<std::size_t>(tail_start_ - 1)]) --tail_start_;

    // identity rows followed by one fwd/inv slot pair per edge for load()
    owned_.assign(static_cast<std::size_t>(m_) * (1 + 2 * edges.size()), 0);
    for (int j = 0; j < m_; ++j) owned_[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(j);
    for (std::size_t ei = 0; ei < edges.size(); ++ei) set_edge_identity(static_cast<int>(ei));

    allowed_.assign(static_cast<std::size_t>(n_), full_mask_);
    forb_.assign(static_cast<std::size_t>(n_), 0u);
    labels_.assign(static_cast<std::size_t>(n_), 0);
}

void CountKernel::set_edge_maps(int edge_idx, const std::int8_t* fwd, const std::int8_t* inv) {
    fwd_of_[static_cast<std::size_t>(edge_idx)] = fwd;
    inv_of_[static_cast<std::size_t>(edge_idx)] = inv;
}

void CountKernel::set_edge_identity(int edge_idx) {
    set_edge_maps(edge_idx, owned_.data(), owned_.data());
}

void CountKernel::load(const Cover& c) {
    if (c.host().edges() != host_.edges() || c.fold() != m_)
        throw std::invalid_argument("CountKernel::load: cover shape does not match kernel");
    for (std::size_t ei = 0; ei < host_.edges().size(); ++ei) {
        const Matching& s = c.matching(static_cast<int>(ei));
        Matching r = s.inverse();
        std::int8_t* fwd = owned_.data() + static_cast<std::size_t>(m_) * (1 + 2 * ei);
        std::int8_t* inv = fwd + m_;
        for (int j = 0; j < m_; ++j) {
            // unmatched labels forbid nothing: point them at the harmless bit m
            fwd[j] = s.to(j) == kUnmatched ? static_cast<std::int8_t>(m_) : s.to(j);
            inv[j] = r.to(j) == kUnmatched ? static_cast<std::int8_t>(m_) : r.to(j);
        }
        set_edge_maps(static_cast<int>(ei), fwd, inv);
    }
}

void CountKernel::prescribe(int vertex, int label) {
    if (!host_.has_vertex(vertex)) throw std::invalid_argument("prescribe: vertex out of range");
    std::uint32_t& a = allowed_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(vertex)])];
    if (label < 0)
        a = full_mask_;
    else if (label >= m_)
        throw std::invalid_argument("prescribe: label out of range");
    else
        a = 1u << label;
}

void CountKernel::clear_prescribed() {
    std::fill(allowed_.begin(), allowed_.end(), full_mask_);
}

std::uint64_t CountKernel::count_rec(int i, DfsState& st, std::uint32_t* forb) const {
    // leading multiplicative stretch (vertices with no later neighbors)
    std::uint64_t factor = 1;
    while (i < n_ && !has_later_[static_cast<std::size_t>(i)]) {
        ++st.steps;
        std::uint32_t avail = allowed_[static_cast<std::size_t>(i)] & ~forb[i];
        if (!avail) return 0;
        factor *= static_cast<std::uint64_t>(__builtin_popcount(avail));
        ++i;
    }
    if (i == n_) return factor;
    if (++st.steps > st.budget) {
        st.exhausted = true;
        return 0;
    }
    std::uint32_t avail = allowed_[static_cast<std::size_t>(i)] & ~forb[i];
    if (!avail) return 0;
    std::uint64_t total = 0;
    const Constraint* cons = cons_[static_cast<std::size_t>(i)].data();
    const std::size_t ncons = cons_[static_cast<std::size_t>(i)].size();
    const std::uint32_t* allowed = allowed_.data();
    const bool tail_next = i + 1 >= tail_start_;
    std::uint32_t saved[64];
    while (avail) {
        int j = __builtin_ctz(avail);
        avail &= avail - 1;
        for (std::size_t k = 0; k < ncons; ++k) {
            saved[k] = forb[cons[k].target_pos];
            forb[cons[k].target_pos] |= 1u << (*cons[k].slot)[j];
        }
        if (tail_next) {
            // the rest of the order is one multiplicative product
            std::uint64_t sub = 1;
            for (int t = i + 1; t < n_; ++t) {
                std::uint32_t a = allowed[t] & ~forb[t];
                if (!a) {
                    sub = 0;
                    break;
                }
                sub *= static_cast<std::uint64_t>(__builtin_popcount(a));
            }
            st.steps += static_cast<std::uint64_t>(n_ - i - 1);
            total += sub;
        } else {
            total += count_rec(i + 1, st, forb);
        }
        for (std::size_t k = ncons; k-- > 0;) forb[cons[k].target_pos] = saved[k];
        if (st.steps > st.budget) {
            st.exhausted = true;
            break;
        }
    }
    return factor * total;
}

bool CountKernel::count(std::uint64_t node_budget, std::uint64_t& nodes, std::uint64_t& result) const {
    DfsState st;
    st.budget = node_budget;
    std::fill(forb_.begin(), forb_.end(), 0u);
    result = count_rec(0, st, forb_.data());
    nodes = st.steps;
    return !st.exhausted;
}

bool CountKernel::exists_rec(int i, std::uint32_t* forb) const {
    if (i == n_) return true;
    std::uint32_t avail = allowed_[static_cast<std::size_t>(i)] & ~forb[i];
    if (!avail) return false;
    const Constraint* cons = cons_[static_cast<std::size_t>(i)].data();
    const std::size_t ncons = cons_[static_cast<std::size_t>(i)].size();
    if (ncons == 0) return exists_rec(i + 1, forb);
    std::uint32_t saved[64];
    while (avail) {
        int j = __builtin_ctz(avail);
        avail &= avail - 1;
        for (std::size_t k = 0; k < ncons; ++k) {
            saved[k] = forb[cons[k].target_pos];
            forb[cons[k].target_pos] |= 1u << (*cons[k].slot)[j];
        }
        bool found = exists_rec(i + 1, forb);
        for (std::size_t k = ncons; k-- > 0;) forb[cons[k].target_pos] = saved[k];
        if (found) return true;
    }
    return false;
}

bool CountKernel::exists() const {
    std::fill(forb_.begin(), forb_.end(), 0u);
    return exists_rec(0, forb_.data());
}

} // namespace dpcover
