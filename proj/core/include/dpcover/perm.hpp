#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpcover {

/// Labels are 0-based internally ([m] in files is 1-based).
constexpr int kMaxFold = 8;
constexpr std::int8_t kUnmatched = -1;

/// A permutation of {0,...,m-1}.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::int8_t> img);

    static Perm identity(int m);

    int size() const { return static_cast<int>(img_.size()); }
    std::int8_t operator()(int j) const { return img_[static_cast<std::size_t>(j)]; }
    const std::vector<std::int8_t>& img() const { return img_; }

    Perm inverse() const;
    /// (a.then(b))(j) = b(a(j))
    Perm then(const Perm& b) const;

    bool is_identity() const;
    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

    std::string str() const;

private:
    std::vector<std::int8_t> img_;
};

/// A partial injection on {0,...,m-1}: to(j) = k pairs label j of the lower
/// endpoint with label k of the upper endpoint; kUnmatched means no pair.
class Matching {
public:
    Matching() = default;
    Matching(int m, std::vector<std::int8_t> to);

    static Matching identity(int m);
    static Matching empty(int m);
    static Matching of_perm(const Perm& p);

    int fold() const { return static_cast<int>(to_.size()); }
    std::int8_t to(int j) const { return to_[static_cast<std::size_t>(j)]; }
    const std::vector<std::int8_t>& raw() const { return to_; }
    void set(int j, std::int8_t k) { to_[static_cast<std::size_t>(j)] = k; }

    /// No two defined entries share a target label.
    bool is_matching() const;
    /// Defined everywhere (a permutation).
    bool full() const;

    Matching inverse() const;
    Perm as_perm() const;

    /// Relabel both sides: result(a(j)) = b(old(j)); used when the lower
    /// endpoint's labels move by a and the upper endpoint's by b.
    Matching conjugate(const Perm& a, const Perm& b) const;

    bool is_identity() const;
    bool operator==(const Matching&) const = default;

private:
    std::vector<std::int8_t> to_;
};

/// All m! permutations of {0,...,m-1} in lexicographic order, stored as flat
/// rows so search loops can swap row pointers instead of copying. Inverse
/// rows are precomputed alongside.
class PermTableLex {
public:
    explicit PermTableLex(int m);

    int fold() const { return m_; }
    std::uint32_t count() const { return count_; }

    const std::int8_t* row(std::uint32_t idx) const { return fwd_.data() + static_cast<std::size_t>(idx) * m_; }
    const std::int8_t* inv_row(std::uint32_t idx) const { return inv_.data() + static_cast<std::size_t>(idx) * m_; }

    Perm perm(std::uint32_t idx) const;
    /// Lexicographic rank of p; throws if p has the wrong size.
    std::uint32_t index_of(const Perm& p) const;

private:
    int m_;
    std::uint32_t count_;
    std::vector<std::int8_t> fwd_, inv_;
};

std::uint64_t factorial_u64(int n);

} // namespace dpcover
