#pragma once

#include "ckrep/matrix.hpp"
#include "ckrep/rational.hpp"
#include "ckrep/spectral.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ckrep {

/// Word over the generator alphabet, 0-based letters; empty = identity factor.
using MultiIndex = std::vector<std::size_t>;

/// True iff every consecutive transition of the word is allowed by the
/// matrix; the empty word is admissible. Letters out of range throw
/// DomainError.
bool is_admissible_word(const ZeroOneMatrix& a_matrix, const MultiIndex& word);

/// All admissible words of the given length, lexicographic. length >= 1.
/// Exceeding `length_cap` or producing more than `count_cap` words throws
/// ResourceError.
std::vector<MultiIndex> enumerate_admissible(const ZeroOneMatrix& a_matrix, std::size_t length,
                                             std::size_t length_cap = 16,
                                             std::size_t count_cap = 2000000);

/// Monomial s_J s_K^* over a fixed matrix context. Instances always denote
/// nonzero elements: both words admissible and, when both are nonempty,
/// their final letters admit a common continuation.
class CKMonomial {
public:
    /// nullopt when the monomial would be zero (inadmissible word or no
    /// common continuation). Out-of-range letters throw DomainError.
    static std::optional<CKMonomial> try_make(std::shared_ptr<const ZeroOneMatrix> context,
                                              MultiIndex word, MultiIndex costar_word);
    /// As try_make, but a zero monomial is a DomainError.
    static CKMonomial make(std::shared_ptr<const ZeroOneMatrix> context, MultiIndex word,
                           MultiIndex costar_word);

    const MultiIndex& word() const { return word_; }
    const MultiIndex& costar_word() const { return costar_; }
    const ZeroOneMatrix& context() const { return *context_; }
    std::shared_ptr<const ZeroOneMatrix> context_ptr() const { return context_; }

    bool is_identity() const { return word_.empty() && costar_.empty(); }
    bool is_diagonal() const { return word_ == costar_; }

    /// "1", "s[1,2]", "s[2]'", "s[1,2]*s[2]'" (letters 1-based in text).
    std::string str() const;

    friend bool operator==(const CKMonomial& a, const CKMonomial& b) {
        return a.word_ == b.word_ && a.costar_ == b.costar_;
    }
    friend auto operator<=>(const CKMonomial& a, const CKMonomial& b) {
        if (auto c = a.word_ <=> b.word_; c != 0) return c;
        return a.costar_ <=> b.costar_;
    }

private:
    CKMonomial(std::shared_ptr<const ZeroOneMatrix> context, MultiIndex word, MultiIndex costar)
        : context_(std::move(context)), word_(std::move(word)), costar_(std::move(costar)) {}

    std::shared_ptr<const ZeroOneMatrix> context_;
    MultiIndex word_, costar_;
};

/// Finite real-linear combination of monomials; like terms merged, zero
/// coefficients dropped. Coefficients are exact rationals.
class FormalSum {
public:
    explicit FormalSum(std::shared_ptr<const ZeroOneMatrix> context)
        : context_(std::move(context)) {}

    static FormalSum identity(std::shared_ptr<const ZeroOneMatrix> context);

    const ZeroOneMatrix& context() const { return *context_; }
    std::shared_ptr<const ZeroOneMatrix> context_ptr() const { return context_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<std::pair<Rational, CKMonomial>>& terms() const { return terms_; }

    void add(const Rational& coefficient, const CKMonomial& monomial);
    FormalSum& operator+=(const FormalSum& o);
    FormalSum& operator*=(const Rational& c);

    std::string str() const;

    friend bool operator==(const FormalSum& a, const FormalSum& b);

private:
    std::shared_ptr<const ZeroOneMatrix> context_;
    std::vector<std::pair<Rational, CKMonomial>> terms_;  // sorted by monomial
};

/// (s_J s_K^*)(s_L s_M^*) reduced by prefix cancellation; an exact match
/// K = L (both nonempty) expands one relation step
/// s_K^* s_K = sum_j A(last(K), j) s_j s_j^*. Throws ContextMismatchError
/// when the operands live over different matrices.
FormalSum monomial_product(const CKMonomial& m1, const CKMonomial& m2);

/// Bilinear extension of monomial_product.
FormalSum product(const FormalSum& f, const FormalSum& g);

/// Quasi-free state: linear extension of
///   rho(s_J s_K^*) = delta_JK a_{j_1}...a_{j_{m-1}} x_{j_m},  rho(1) = 1,
/// evaluated in exact rational arithmetic on the point's stored data.
Rational quasifree_eval_exact(const LambdaPoint& p, const FormalSum& f);
Rational quasifree_eval_exact(const LambdaPoint& p, const CKMonomial& m);
double quasifree_eval(const LambdaPoint& p, const FormalSum& f);

/// Parse "3/2 s[1,2]*s[2]' - s[3] + 1" style expressions into a FormalSum
/// (letters 1-based, ' marks the starred block). Throws ParseError /
/// DomainError; zero monomials inside the expression are DomainErrors.
FormalSum parse_formal_sum(std::shared_ptr<const ZeroOneMatrix> context,
                           const std::string& text);

}  // namespace ckrep
