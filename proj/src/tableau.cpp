#include "flagcoh/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "flagcoh/error.hpp"

namespace flagcoh {

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
    std::vector<int> lengths;
    for (const auto& r : rows) {
        if (r.empty()) throw InvalidArgument("tableau rows must be non-empty");
        for (int e : r)
            if (e < 1) throw InvalidArgument("tableau entries must be positive integers");
        lengths.push_back(static_cast<int>(r.size()));
    }
    Tableau t;
    t.shape_ = Partition(std::move(lengths));  // throws if not a partition shape
    t.rows_ = std::move(rows);
    return t;
}

Tableau Tableau::from_columns(const std::vector<std::vector<int>>& columns) {
    std::vector<std::vector<int>> rows;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].empty()) throw InvalidArgument("tableau columns must be non-empty");
        if (j > 0 && columns[j].size() > columns[j - 1].size())
            throw InvalidArgument("tableau column heights must weakly decrease");
        for (std::size_t i = 0; i < columns[j].size(); ++i) {
            if (rows.size() <= i) rows.emplace_back();
            rows[i].push_back(columns[j][i]);
        }
    }
    return from_rows(std::move(rows));
}

Tableau Tableau::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    if (text.find_first_not_of(" \t") == std::string::npos) return Tableau{};
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_int_list(row));
    return from_rows(std::move(rows));
}

std::vector<std::vector<int>> Tableau::columns() const {
    std::vector<std::vector<int>> cols(rows_.empty() ? 0 : rows_.front().size());
    for (const auto& r : rows_)
        for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
    return cols;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> w;
    for (const auto& c : columns()) w.insert(w.end(), c.begin(), c.end());
    return w;
}

std::vector<int> Tableau::content(std::size_t n) const {
    std::vector<int> c(n, 0);
    for (const auto& r : rows_)
        for (int e : r) {
            if (static_cast<std::size_t>(e) > n)
                throw InvalidArgument("tableau entry " + std::to_string(e) + " exceeds " +
                                      std::to_string(n));
            ++c[e - 1];
        }
    return c;
}

bool Tableau::is_column_strict() const {
    for (std::size_t i = 1; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            if (rows_[i][j] <= rows_[i - 1][j]) return false;
    return true;
}

bool Tableau::is_semistandard() const {
    if (!is_column_strict()) return false;
    for (const auto& r : rows_)
        if (!std::is_sorted(r.begin(), r.end())) return false;
    return true;
}

std::string Tableau::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

bool operator<(const Tableau& a, const Tableau& b) {
    if (a.shape_ != b.shape_) return a.shape_ < b.shape_;
    return a.reading_word() < b.reading_word();
}

std::vector<Tableau> column_strict_tableaux(const Partition& lambda, const Composition& mu) {
    std::vector<Tableau> out;
    if (lambda.size() != mu.size()) return out;
    const int n = static_cast<int>(mu.length());
    const std::vector<int> heights = lambda.transpose().parts();
    const int ncols = static_cast<int>(heights.size());
    std::vector<int> remaining = mu.parts();
    std::vector<std::vector<int>> cols(ncols);

    std::function<void(int)> fill_column;
    std::function<void(int, int, int)> choose = [&](int col, int start, int slot) {
        const int h = heights[col];
        if (slot == h) {
            // A value still needing more boxes than columns left cannot be placed.
            for (int v = 0; v < n; ++v)
                if (remaining[v] > ncols - col - 1) return;
            fill_column(col + 1);
            return;
        }
        for (int v = start; v <= n - (h - slot); ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            cols[col][slot] = v + 1;
            choose(col, v + 1, slot + 1);
            ++remaining[v];
        }
    };
    fill_column = [&](int col) {
        if (col == ncols) {
            out.push_back(Tableau::from_columns(cols));
            return;
        }
        cols[col].assign(heights[col], 0);
        choose(col, 0, 0);
    };
    if (ncols == 0) {
        if (mu.size() == 0) out.emplace_back();
        return out;
    }
    fill_column(0);
    return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Composition& mu) {
    std::vector<Tableau> out;
    for (auto& t : column_strict_tableaux(lambda, mu))
        if (t.is_semistandard()) out.push_back(std::move(t));
    return out;
}

namespace {

void check_member(const Tableau& t, const Composition& mu) {
    if (!t.is_column_strict()) throw InvalidArgument("tableau " + t.to_string() + " is not column-strict");
    if (t.content(mu.length()) != mu.parts())
        throw InvalidArgument("tableau " + t.to_string() + " does not have content " + mu.to_string());
}

}  // namespace

Reduction reduce_tableau(const Tableau& t, const Composition& mu) {
    if (mu.length() == 0) throw InvalidArgument("cannot reduce with an empty composition");
    check_member(t, mu);
    const int n = static_cast<int>(mu.length());
    auto cols = t.columns();

    Reduction r;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].back() == n) {
            r.columns.push_back(static_cast<int>(j) + 1);
            cols[j].pop_back();
        }
    }
    r.gamma = column_sequence_to_partition(r.columns, mu.size());
    std::erase_if(cols, [](const auto& c) { return c.empty(); });
    std::stable_sort(cols.begin(), cols.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    r.reduced = Tableau::from_columns(cols);
    r.reduced_shape = r.reduced.shape();
    r.reduced_content = mu.drop_last();
    return r;
}

int tableau_degree(const Tableau& t, const Composition& mu) {
    check_member(t, mu);
    int deg = 0;
    Tableau cur = t;
    Composition content = mu;
    while (content.length() > 0) {
        Reduction r = reduce_tableau(cur, content);
        deg += r.gamma.size();
        cur = std::move(r.reduced);
        content = std::move(r.reduced_content);
    }
    return deg;
}

Tableau straighten(const Tableau& t, const Composition& mu) {
    check_member(t, mu);
    if (mu.length() == 0) return t;
    const int n = static_cast<int>(mu.length());
    Reduction r = reduce_tableau(t, mu);
    Tableau base = straighten(r.reduced, r.reduced_content);
    auto rows = base.rows();
    const Partition& lambda = t.shape();
    rows.resize(lambda.height());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].resize(lambda[i], n);
    return Tableau::from_rows(std::move(rows));
}

std::vector<Partition> cell_signature(const Tableau& t, const Composition& mu) {
    check_member(t, mu);
    std::vector<Partition> sig;
    Tableau cur = t;
    Composition content = mu;
    while (content.length() > 0) {
        Reduction r = reduce_tableau(cur, content);
        sig.push_back(std::move(r.gamma));
        cur = std::move(r.reduced);
        content = std::move(r.reduced_content);
    }
    return sig;
}

CellOrder compare_signatures(const std::vector<Partition>& a, const std::vector<Partition>& b) {
    if (a.size() != b.size()) throw InvalidArgument("signatures of different length");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        if (a[i].contained_in(b[i])) return CellOrder::less;
        if (b[i].contained_in(a[i])) return CellOrder::greater;
        return CellOrder::incomparable;
    }
    return CellOrder::equal;
}

CellOrder cell_order(const Tableau& a, const Tableau& b, const Composition& mu) {
    if (a.shape() != b.shape())
        throw InvalidArgument("cell order needs tableaux of the same shape");
    return compare_signatures(cell_signature(a, mu), cell_signature(b, mu));
}

const char* to_string(CellOrder o) noexcept {
    switch (o) {
        case CellOrder::less: return "less";
        case CellOrder::equal: return "equal";
        case CellOrder::greater: return "greater";
        case CellOrder::incomparable: return "incomparable";
    }
    return "?";
}

}  // namespace flagcoh
