#ifndef FLAGCOH_PARTITION_HPP
#define FLAGCOH_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace flagcoh {

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// dropped on construction, so (2,0) == (2).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// i-th part (0-based); zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int size() const noexcept { return size_; }
    /// Number of non-zero parts.
    int height() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Parts padded (or checked) to exactly n entries.
    std::vector<int> padded(std::size_t n) const;

    Partition transpose() const;
    /// Containment of Young diagrams: *this ⊆ other.
    bool contained_in(const Partition& other) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// n-part sequence of non-negative integers. Zero parts are kept: their
/// positions decide which variables belong to which block.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_.at(i); }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return size_; }

    /// Rearrangement into weakly decreasing order (μ⁺).
    Partition sorted() const;
    /// Forget the last part.
    Composition drop_last() const;
    bool is_regular() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Dominance order a ≤ b. Throws InvalidArgument if |a| != |b|.
bool dominance_leq(const Partition& a, const Partition& b);

/// Column sequence 1 ≤ c_1 < ... < c_k ≤ d  ->  partition γ with
/// γ_{k+1-i} = c_i - i, fitting in a k × (d-k) box.
Partition column_sequence_to_partition(std::span<const int> columns, int d);
/// Inverse of the above; γ must have height ≤ k and γ_1 ≤ d - k.
std::vector<int> partition_to_column_sequence(const Partition& gamma, int k, int d);

/// ½ Σ p(p-1) over the parts.
long half_pair_count(std::span<const int> parts);

struct FlagDims {
    long lambda = 0;
    long mu = 0;
};
/// (d_λ, d_μ).
FlagDims dims(const Partition& lambda, const Composition& mu);

/// All partitions of d with at most max_parts non-zero parts, in reverse
/// lexicographic order ((d) first).
std::vector<Partition> partitions(int d, int max_parts);
/// All n-part compositions of d, in reverse lexicographic order.
std::vector<Composition> compositions(int d, int n);

/// Parse "4,3,3,2" (empty string -> empty sequence). Throws InvalidArgument.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace flagcoh

#endif  // FLAGCOH_PARTITION_HPP
