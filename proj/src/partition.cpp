#include "flagcoh/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "flagcoh/error.hpp"

namespace flagcoh {

namespace {

std::string join(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw InvalidArgument("partition has a negative part: " + join(parts_));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("partition is not weakly decreasing: " + join(parts_));
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(std::size_t n) const {
    if (parts_.size() > n)
        throw InvalidArgument("partition " + to_string() + " has more than " + std::to_string(n) +
                              " non-zero parts");
    std::vector<int> out = parts_;
    out.resize(n, 0);
    return out;
}

Partition Partition::transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

bool Partition::contained_in(const Partition& other) const noexcept {
    if (parts_.size() > other.parts_.size()) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i] > other.parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const { return join(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw InvalidArgument("composition has a negative part: " + join(parts_));
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Composition::sorted() const {
    std::vector<int> s = parts_;
    std::sort(s.begin(), s.end(), std::greater<>());
    return Partition(std::move(s));
}

Composition Composition::drop_last() const {
    if (parts_.empty()) throw InvalidArgument("cannot drop a part of the empty composition");
    return Composition(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

bool Composition::is_regular() const noexcept {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p <= 1; });
}

std::string Composition::to_string() const { return join(parts_); }

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw InvalidArgument("dominance comparison needs equal sizes: " + a.to_string() + " vs " +
                              b.to_string());
    const std::size_t m = std::max(a.parts().size(), b.parts().size());
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

Partition column_sequence_to_partition(std::span<const int> columns, int d) {
    const int k = static_cast<int>(columns.size());
    std::vector<int> gamma(k, 0);
    for (int i = 0; i < k; ++i) {
        const int c = columns[i];
        if (c < 1 || c > d || (i > 0 && c <= columns[i - 1]))
            throw InvalidArgument("column sequence must satisfy 1 <= c_1 < ... < c_k <= " +
                                  std::to_string(d));
        gamma[k - 1 - i] = c - (i + 1);
    }
    return Partition(std::move(gamma));
}

std::vector<int> partition_to_column_sequence(const Partition& gamma, int k, int d) {
    if (k < 0 || k > d || gamma.height() > k || gamma[0] > d - k)
        throw InvalidArgument("partition " + gamma.to_string() + " does not fit in a " +
                              std::to_string(k) + "x" + std::to_string(d - k) + " box");
    std::vector<int> c(k);
    for (int i = 1; i <= k; ++i) c[i - 1] = gamma[static_cast<std::size_t>(k - i)] + i;
    return c;
}

long half_pair_count(std::span<const int> parts) {
    long s = 0;
    for (int p : parts) s += static_cast<long>(p) * (p - 1);
    return s / 2;
}

FlagDims dims(const Partition& lambda, const Composition& mu) {
    return {half_pair_count(lambda.parts()), half_pair_count(mu.parts())};
}

std::vector<Partition> partitions(int d, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int bound) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int p = std::min(remaining, bound); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (d >= 0 && max_parts >= 0) rec(d, d);
    return out;
}

std::vector<Composition> compositions(int d, int n) {
    std::vector<Composition> out;
    if (n == 0) {
        if (d == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == n - 1) {
            cur[i] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int p = remaining; p >= 0; --p) {
            cur[i] = p;
            rec(i + 1, remaining - p);
        }
    };
    rec(0, d);
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InvalidArgument("empty entry in list '" + text + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw InvalidArgument("not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (!text.empty() && text.back() == ',') throw InvalidArgument("trailing comma in '" + text + "'");
    return out;
}

}  // namespace flagcoh
