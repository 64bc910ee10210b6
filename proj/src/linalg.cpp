#include "liemc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace liemc {

void SparseMatrix::add(int r, int c, Rational v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::invalid_argument("SparseMatrix: entry out of range");
    if (v.is_zero()) return;
    auto& row = data_[size_t(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, std::move(v)});
    }
}

namespace {

using SparseRow = std::vector<std::pair<int, Rational>>;

// row -= factor * pivot  (sparse merge)
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    auto ir = row.begin();
    auto ip = pivot.begin();
    while (ir != row.end() && ip != pivot.end()) {
        if (ir->first < ip->first) {
            out.push_back(*ir++);
        } else if (ip->first < ir->first) {
            out.emplace_back(ip->first, -(factor * ip->second));
            ++ip;
        } else {
            Rational v = ir->second - factor * ip->second;
            if (!v.is_zero()) out.emplace_back(ir->first, std::move(v));
            ++ir;
            ++ip;
        }
    }
    out.insert(out.end(), ir, row.end());
    for (; ip != pivot.end(); ++ip) out.emplace_back(ip->first, -(factor * ip->second));
    return out;
}

struct WorkRow {
    SparseRow entries;
    Rational rhs;
    int orig;
};

struct Reduced {
    // pivot rows in elimination order, each with its pivot column
    std::vector<WorkRow> pivots;
    std::vector<int> pivot_col;
    std::vector<int> pivot_col_of(int cols) const {
        std::vector<int> of(size_t(cols), -1);
        for (size_t i = 0; i < pivot_col.size(); ++i) of[size_t(pivot_col[i])] = int(i);
        return of;
    }
    // rows fully eliminated on the matrix side; nonzero rhs means inconsistency
    std::vector<WorkRow> zero_rows;
};

Reduced eliminate(const SparseMatrix& A, const std::vector<Rational>* b) {
    // bucket rows by leading column
    std::vector<std::vector<WorkRow>> bucket(size_t(A.cols()) + 1);
    for (int r = 0; r < A.rows(); ++r) {
        WorkRow w{A.row(r), b ? (*b)[size_t(r)] : Rational(0), r};
        if (w.entries.empty()) {
            bucket[size_t(A.cols())].push_back(std::move(w));
        } else {
            int lead = w.entries.front().first;
            bucket[size_t(lead)].push_back(std::move(w));
        }
    }
    Reduced red;
    for (int c = 0; c < A.cols(); ++c) {
        auto& rows = bucket[size_t(c)];
        if (rows.empty()) continue;
        // deterministic pivot: smallest original row index
        size_t best = 0;
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].orig < rows[best].orig) best = i;
        WorkRow pivot = std::move(rows[best]);
        rows.erase(rows.begin() + long(best));
        const Rational& pv = pivot.entries.front().second;
        for (auto& row : rows) {
            Rational factor = row.entries.front().second / pv;
            WorkRow next{axpy(row.entries, factor, pivot.entries),
                         row.rhs - factor * pivot.rhs, row.orig};
            if (next.entries.empty())
                bucket[size_t(A.cols())].push_back(std::move(next));
            else
                bucket[size_t(next.entries.front().first)].push_back(std::move(next));
        }
        rows.clear();
        red.pivot_col.push_back(c);
        red.pivots.push_back(std::move(pivot));
    }
    red.zero_rows = std::move(bucket[size_t(A.cols())]);
    return red;
}

// Back-substitute the pivot equations with all free variables at zero.
std::vector<Rational> back_substitute(const Reduced& red, int cols) {
    std::vector<Rational> x(size_t(cols), Rational(0));
    for (size_t i = red.pivots.size(); i-- > 0;) {
        const WorkRow& row = red.pivots[i];
        int pc = red.pivot_col[i];
        Rational acc = row.rhs;
        for (const auto& [c, v] : row.entries)
            if (c != pc) acc -= v * x[size_t(c)];
        x[size_t(pc)] = acc / row.entries.front().second;
    }
    return x;
}

}  // namespace

LinearSolveResult linear_solve(const SparseMatrix& A, const std::vector<Rational>& b) {
    if (int(b.size()) != A.rows()) throw std::invalid_argument("linear_solve: rhs size mismatch");
    Reduced red = eliminate(A, &b);
    std::vector<Rational> x = back_substitute(red, A.cols());

    LinearSolveResult result;
    result.rank = int(red.pivots.size());
    // residual = b - A x
    result.residual.assign(size_t(A.rows()), Rational(0));
    bool consistent = true;
    for (int r = 0; r < A.rows(); ++r) {
        Rational acc = b[size_t(r)];
        for (const auto& [c, v] : A.row(r)) acc -= v * x[size_t(c)];
        if (!acc.is_zero()) consistent = false;
        result.residual[size_t(r)] = std::move(acc);
    }
    if (consistent) result.solution = std::move(x);
    return result;
}

std::vector<std::vector<Rational>> nullspace(const SparseMatrix& A) {
    Reduced red = eliminate(A, nullptr);
    std::vector<int> of = red.pivot_col_of(A.cols());
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < A.cols(); ++f) {
        if (of[size_t(f)] >= 0) continue;  // pivot column
        std::vector<Rational> x(size_t(A.cols()), Rational(0));
        x[size_t(f)] = Rational(1);
        for (size_t i = red.pivots.size(); i-- > 0;) {
            const WorkRow& row = red.pivots[i];
            int pc = red.pivot_col[i];
            Rational acc(0);
            for (const auto& [c, v] : row.entries)
                if (c != pc) acc -= v * x[size_t(c)];
            x[size_t(pc)] = acc / row.entries.front().second;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

int rank(const SparseMatrix& A) { return int(eliminate(A, nullptr).pivots.size()); }

}  // namespace liemc
