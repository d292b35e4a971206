#include "ckrep/matrix.hpp"

#include "ckrep/errors.hpp"

namespace ckrep {

namespace {

// Transitive closure of the directed graph given by reach[i][j].
void close_reachability(std::vector<std::vector<bool>>& reach) {
    const std::size_t n = reach.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
}

}  // namespace

ZeroOneMatrix::ZeroOneMatrix(std::size_t n, const std::vector<int>& entries) : n_(n) {
    if (n < 2) throw ParseError("matrix size must be at least 2, got " + std::to_string(n));
    if (entries.size() != n * n)
        throw ParseError("expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(entries.size()));
    bits_.reserve(entries.size());
    for (int e : entries) {
        if (e != 0 && e != 1) throw ParseError("matrix entries must be 0 or 1");
        bits_.push_back(static_cast<unsigned char>(e));
    }
    diag_ = validate_ck_matrix(*this);
}

void ZeroOneMatrix::require_admissible() const {
    if (!admissible()) throw PreconditionError("matrix is not admissible: " + diag_.reason);
}

MatrixDiagnostics validate_ck_matrix(const ZeroOneMatrix& a) {
    const std::size_t n = a.n();
    MatrixDiagnostics d;
    d.nondegenerate = true;
    for (std::size_t i = 0; i < n && d.nondegenerate; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) any = any || a.entry(i, j);
        if (!any) {
            d.nondegenerate = false;
            d.witness = {i, i};
            d.reason = "row " + std::to_string(i + 1) + " is zero";
        }
    }
    for (std::size_t j = 0; j < n && d.nondegenerate; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) any = any || a.entry(i, j);
        if (!any) {
            d.nondegenerate = false;
            d.witness = {j, j};
            d.reason = "column " + std::to_string(j + 1) + " is zero";
        }
    }

    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = a.entry(i, j) != 0;
    close_reachability(reach);
    d.irreducible = true;
    for (std::size_t i = 0; i < n && d.irreducible; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!reach[i][j]) {
                d.irreducible = false;
                if (!d.witness) {
                    d.witness = {i, j};
                    d.reason = "no path from " + std::to_string(i + 1) + " to " +
                               std::to_string(j + 1);
                }
                break;
            }

    d.permutation = true;
    for (std::size_t i = 0; i < n && d.permutation; ++i) {
        int row_sum = 0;
        for (std::size_t j = 0; j < n; ++j) row_sum += a.entry(i, j);
        if (row_sum != 1) d.permutation = false;
    }
    for (std::size_t j = 0; j < n && d.permutation; ++j) {
        int col_sum = 0;
        for (std::size_t i = 0; i < n; ++i) col_sum += a.entry(i, j);
        if (col_sum != 1) d.permutation = false;
    }
    if (d.permutation && d.reason.empty()) d.reason = "permutation matrix";
    if (d.admissible()) d.reason = "admissible";
    return d;
}

bool is_irreducible_pattern(const std::vector<std::vector<double>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DomainError("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = m[i][j] > 0.0;
    }
    close_reachability(reach);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!reach[i][j]) return false;
    return true;
}

}  // namespace ckrep
