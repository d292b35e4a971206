#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ckrep {

struct MatrixDiagnostics {
    bool nondegenerate = false;
    bool irreducible = false;
    bool permutation = false;
    /// 0-based coordinates of a violation: the zero row/column (i,i)/(j,j),
    /// or an unreachable pair (i,j). Empty for permutation matrices (a
    /// whole-matrix property). `reason` is the human-readable form.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    std::string reason;

    bool admissible() const { return nondegenerate && irreducible && !permutation; }
};

/// Square 0/1 matrix, n >= 2. Construction rejects malformed input;
/// admissibility (nondegenerate, irreducible, not a permutation) is a
/// separate diagnostic so that rejected candidates can still be inspected.
class ZeroOneMatrix {
public:
    /// entries are validated to be 0/1, row-major, n*n of them.
    ZeroOneMatrix(std::size_t n, const std::vector<int>& entries);

    std::size_t n() const { return n_; }
    int entry(std::size_t i, std::size_t j) const { return bits_[i * n_ + j]; }

    const MatrixDiagnostics& diagnostics() const { return diag_; }
    bool admissible() const { return diag_.admissible(); }
    /// Throws PreconditionError when the matrix is outside the admissible class.
    void require_admissible() const;

    bool operator==(const ZeroOneMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    std::size_t n_;
    std::vector<unsigned char> bits_;
    MatrixDiagnostics diag_;
};

/// Row/column scans plus boolean reachability closure.
MatrixDiagnostics validate_ck_matrix(const ZeroOneMatrix& a);

/// Reachability-based irreducibility of an arbitrary nonnegative matrix
/// (edges where entries are > 0).
bool is_irreducible_pattern(const std::vector<std::vector<double>>& m);

}  // namespace ckrep
