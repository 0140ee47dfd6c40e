#include "dpcover/perm.hpp"

#include <algorithm>
#include <numeric>

namespace dpcover {

static void check_fold(int m) {
    if (m < 1 || m > kMaxFold) throw std::invalid_argument("fold m must be in [1," + std::to_string(kMaxFold) + "]");
}

Perm::Perm(std::vector<std::int8_t> img) : img_(std::move(img)) {
    check_fold(static_cast<int>(img_.size()));
    std::vector<bool> seen(img_.size(), false);
    for (std::int8_t v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Perm: image is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::identity(int m) {
    check_fold(m);
    std::vector<std::int8_t> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), static_cast<std::int8_t>(0));
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<std::int8_t> inv(img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) inv[static_cast<std::size_t>(img_[j])] = static_cast<std::int8_t>(j);
    return Perm(std::move(inv));
}

Perm Perm::then(const Perm& b) const {
    if (b.size() != size()) throw std::invalid_argument("Perm::then: size mismatch");
    std::vector<std::int8_t> out(img_.size());
    for (std::size_t j = 0; j < img_.size(); ++j) out[j] = b.img_[static_cast<std::size_t>(img_[j])];
    return Perm(std::move(out));
}

bool Perm::is_identity() const {
    for (std::size_t j = 0; j < img_.size(); ++j)
        if (img_[j] != static_cast<std::int8_t>(j)) return false;
    return true;
}

std::string Perm::str() const {
    std::string out = "(";
    for (std::size_t j = 0; j < img_.size(); ++j) {
        if (j) out += ' ';
        out += std::to_string(img_[j] + 1); // 1-based for humans
    }
    return out + ")";
}

Matching::Matching(int m, std::vector<std::int8_t> to) : to_(std::move(to)) {
    check_fold(m);
    if (static_cast<int>(to_.size()) != m) throw std::invalid_argument("Matching: map size != m");
    for (std::int8_t v : to_)
        if (v != kUnmatched && (v < 0 || v >= m)) throw std::invalid_argument("Matching: label out of range");
}

Matching Matching::identity(int m) { return of_perm(Perm::identity(m)); }

Matching Matching::empty(int m) {
    check_fold(m);
    return Matching(m, std::vector<std::int8_t>(static_cast<std::size_t>(m), kUnmatched));
}

Matching Matching::of_perm(const Perm& p) { return Matching(p.size(), p.img()); }

bool Matching::is_matching() const {
    std::vector<bool> hit(to_.size(), false);
    for (std::int8_t v : to_) {
        if (v == kUnmatched) continue;
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool Matching::full() const {
    return is_matching() && std::none_of(to_.begin(), to_.end(), [](std::int8_t v) { return v == kUnmatched; });
}

Matching Matching::inverse() const {
    Matching out = empty(fold());
    for (std::size_t j = 0; j < to_.size(); ++j)
        if (to_[j] != kUnmatched) out.to_[static_cast<std::size_t>(to_[j])] = static_cast<std::int8_t>(j);
    return out;
}

Perm Matching::as_perm() const {
    if (!full()) throw std::invalid_argument("Matching::as_perm: matching is not a permutation");
    return Perm(to_);
}

Matching Matching::conjugate(const Perm& a, const Perm& b) const {
    Matching out = empty(fold());
    for (int j = 0; j < fold(); ++j)
        if (to(j) != kUnmatched) out.set(a(j), b(to(j)));
    return out;
}

bool Matching::is_identity() const {
    for (std::size_t j = 0; j < to_.size(); ++j)
        if (to_[j] != static_cast<std::int8_t>(j)) return false;
    return true;
}

PermTableLex::PermTableLex(int m) : m_(m) {
    check_fold(m);
    count_ = static_cast<std::uint32_t>(factorial_u64(m));
    fwd_.resize(static_cast<std::size_t>(count_) * m_);
    inv_.resize(static_cast<std::size_t>(count_) * m_);
    std::vector<std::int8_t> cur(static_cast<std::size_t>(m_));
    std::iota(cur.begin(), cur.end(), static_cast<std::int8_t>(0));
    for (std::uint32_t idx = 0;; ++idx) {
        std::copy(cur.begin(), cur.end(), fwd_.begin() + static_cast<std::size_t>(idx) * m_);
        for (int j = 0; j < m_; ++j) inv_[static_cast<std::size_t>(idx) * m_ + cur[static_cast<std::size_t>(j)]] = static_cast<std::int8_t>(j);
        if (!std::next_permutation(cur.begin(), cur.end())) break;
    }
}

Perm PermTableLex::perm(std::uint32_t idx) const {
    const std::int8_t* r = row(idx);
    return Perm(std::vector<std::int8_t>(r, r + m_));
}

std::uint32_t PermTableLex::index_of(const Perm& p) const {
    if (p.size() != m_) throw std::invalid_argument("PermTableLex::index_of: size mismatch");
    // Lehmer code
    std::uint32_t rank = 0;
    for (int i = 0; i < m_; ++i) {
        std::uint32_t smaller = 0;
        for (int j = i + 1; j < m_; ++j)
            if (p(j) < p(i)) ++smaller;
        rank += smaller * static_cast<std::uint32_t>(factorial_u64(m_ - 1 - i));
    }
    return rank;
}

std::uint64_t factorial_u64(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

} // namespace dpcover
