#include "ckrep/words.hpp"

#include "ckrep/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ckrep {

namespace {

void check_letters(const ZeroOneMatrix& m, const MultiIndex& word) {
    for (std::size_t letter : word)
        if (letter >= m.n())
            throw DomainError("letter " + std::to_string(letter + 1) + " out of range for n = " +
                              std::to_string(m.n()));
}

void check_same_context(const ZeroOneMatrix& a, const ZeroOneMatrix& b) {
    if (!(a == b)) throw ContextMismatchError("operands use different matrices");
}

bool is_prefix(const MultiIndex& p, const MultiIndex& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

std::string word_str(const MultiIndex& w, bool starred) {
    std::ostringstream os;
    os << "s[";
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (t) os << ",";
        os << w[t] + 1;
    }
    os << "]";
    if (starred) os << "'";
    return os.str();
}

}  // namespace

bool is_admissible_word(const ZeroOneMatrix& a_matrix, const MultiIndex& word) {
    check_letters(a_matrix, word);
    for (std::size_t t = 0; t + 1 < word.size(); ++t)
        if (!a_matrix.entry(word[t], word[t + 1])) return false;
    return true;
}

std::vector<MultiIndex> enumerate_admissible(const ZeroOneMatrix& a_matrix, std::size_t length,
                                             std::size_t length_cap, std::size_t count_cap) {
    if (length < 1) throw DomainError("word length must be >= 1");
    if (length > length_cap)
        throw ResourceError("word length " + std::to_string(length) + " exceeds cap " +
                            std::to_string(length_cap));
    std::vector<MultiIndex> out;
    MultiIndex word;
    const std::size_t n = a_matrix.n();
    auto grow = [&](auto&& self) -> void {
        if (word.size() == length) {
            if (out.size() >= count_cap) throw ResourceError("admissible word count exceeds cap");
            out.push_back(word);
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!word.empty() && !a_matrix.entry(word.back(), j)) continue;
            word.push_back(j);
            self(self);
            word.pop_back();
        }
    };
    grow(grow);
    return out;
}

std::optional<CKMonomial> CKMonomial::try_make(std::shared_ptr<const ZeroOneMatrix> context,
                                               MultiIndex word, MultiIndex costar_word) {
    if (!is_admissible_word(*context, word) || !is_admissible_word(*context, costar_word))
        return std::nullopt;
    if (!word.empty() && !costar_word.empty()) {
        // s_J s_K^* vanishes unless some letter continues both final letters.
        bool common = false;
        for (std::size_t l = 0; l < context->n() && !common; ++l)
            common = context->entry(word.back(), l) && context->entry(costar_word.back(), l);
        if (!common) return std::nullopt;
    }
    return CKMonomial(std::move(context), std::move(word), std::move(costar_word));
}

CKMonomial CKMonomial::make(std::shared_ptr<const ZeroOneMatrix> context, MultiIndex word,
                            MultiIndex costar_word) {
    auto m = try_make(std::move(context), std::move(word), std::move(costar_word));
    if (!m) throw DomainError("monomial is zero (inadmissible word or no common continuation)");
    return *m;
}

std::string CKMonomial::str() const {
    if (is_identity()) return "1";
    if (costar_.empty()) return word_str(word_, false);
    if (word_.empty()) return word_str(costar_, true);
    return word_str(word_, false) + "*" + word_str(costar_, true);
}

FormalSum FormalSum::identity(std::shared_ptr<const ZeroOneMatrix> context) {
    FormalSum f(context);
    f.add(Rational(1), CKMonomial::make(context, {}, {}));
    return f;
}

void FormalSum::add(const Rational& coefficient, const CKMonomial& monomial) {
    if (coefficient == 0) return;
    check_same_context(*context_, monomial.context());
    auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                               [](const auto& t, const CKMonomial& m) { return t.second < m; });
    if (it != terms_.end() && it->second == monomial) {
        it->first += coefficient;
        if (it->first == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {coefficient, monomial});
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
    check_same_context(*context_, *o.context_);
    for (const auto& [c, m] : o.terms_) add(c, m);
    return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.first *= c;
    return *this;
}

std::string FormalSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, m] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        Rational mag = (!first && c < 0) ? Rational(-c) : c;
        if (mag != 1 || m.is_identity()) os << to_string(mag) << (m.is_identity() ? "" : " ");
        if (!m.is_identity()) os << m.str();
        first = false;
    }
    return os.str();
}

bool operator==(const FormalSum& a, const FormalSum& b) {
    return *a.context_ == *b.context_ && a.terms_ == b.terms_;
}

FormalSum monomial_product(const CKMonomial& m1, const CKMonomial& m2) {
    check_same_context(m1.context(), m2.context());
    auto ctx = m1.context_ptr();
    const MultiIndex& j = m1.word();
    const MultiIndex& k = m1.costar_word();
    const MultiIndex& l = m2.word();
    const MultiIndex& m = m2.costar_word();
    FormalSum out(ctx);

    auto add_if_nonzero = [&](MultiIndex word, MultiIndex costar) {
        if (auto mono = CKMonomial::try_make(ctx, std::move(word), std::move(costar)))
            out.add(Rational(1), *mono);
    };

    if (k == l) {
        if (k.empty()) {
            add_if_nonzero(j, m);
        } else {
            // The middle factor s_K^* s_K = sum_t A(last(K), t) s_t s_t^* is a
            // projection. When it dominates the common continuations of J and
            // M it is absorbed and the product collapses to s_J s_M^*;
            // otherwise expand one relation step over the letters all three
            // final rows allow. (Collapsing unconditionally is wrong, and
            // expanding unconditionally breaks associativity of the map.)
            const std::size_t n = ctx->n();
            auto allows = [&](const MultiIndex& w, std::size_t t) {
                return w.empty() || ctx->entry(w.back(), t) != 0;
            };
            bool redundant = true;
            for (std::size_t t = 0; t < n && redundant; ++t)
                if (allows(j, t) && allows(m, t) && !ctx->entry(k.back(), t)) redundant = false;
            if (redundant) {
                add_if_nonzero(j, m);
            } else {
                for (std::size_t t = 0; t < n; ++t) {
                    if (!ctx->entry(k.back(), t) || !allows(j, t) || !allows(m, t)) continue;
                    MultiIndex word = j, costar = m;
                    word.push_back(t);
                    costar.push_back(t);
                    add_if_nonzero(std::move(word), std::move(costar));
                }
            }
        }
    } else if (is_prefix(k, l)) {
        // L = K . L'  =>  s_J s_{L'} s_M^*
        MultiIndex word = j;
        word.insert(word.end(), l.begin() + static_cast<std::ptrdiff_t>(k.size()), l.end());
        add_if_nonzero(std::move(word), m);
    } else if (is_prefix(l, k)) {
        // K = L . K'  =>  s_J s_{M . K'}^*
        MultiIndex costar = m;
        costar.insert(costar.end(), k.begin() + static_cast<std::ptrdiff_t>(l.size()), k.end());
        add_if_nonzero(j, std::move(costar));
    }
    return out;
}

FormalSum product(const FormalSum& f, const FormalSum& g) {
    check_same_context(f.context(), g.context());
    FormalSum out(f.context_ptr());
    for (const auto& [cf, mf] : f.terms())
        for (const auto& [cg, mg] : g.terms()) {
            FormalSum p = monomial_product(mf, mg);
            p *= cf * cg;
            out += p;
        }
    return out;
}

Rational quasifree_eval_exact(const LambdaPoint& p, const CKMonomial& m) {
    check_same_context(p.matrix(), m.context());
    if (!m.is_diagonal()) return Rational(0);
    if (m.is_identity()) return Rational(1);
    const MultiIndex& w = m.word();
    Rational value(1);
    for (std::size_t t = 0; t + 1 < w.size(); ++t) value *= p.a()[w[t]];
    value *= p.x()[w.back()];
    return value;
}

Rational quasifree_eval_exact(const LambdaPoint& p, const FormalSum& f) {
    check_same_context(p.matrix(), f.context());
    Rational acc(0);
    for (const auto& [c, m] : f.terms()) acc += c * quasifree_eval_exact(p, m);
    return acc;
}

double quasifree_eval(const LambdaPoint& p, const FormalSum& f) {
    return to_double(quasifree_eval_exact(p, f));
}

namespace {

struct Tokenizer {
    explicit Tokenizer(const std::string& text) : s(text) {}
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

MultiIndex parse_bracket_word(Tokenizer& t) {
    // caller consumed 's'; expects "[i,j,...]"
    if (t.peek() != '[') throw ParseError("expected '[' after 's'");
    ++t.pos;
    MultiIndex word;
    while (true) {
        t.skip_ws();
        std::string digits;
        while (t.pos < t.s.size() && std::isdigit(static_cast<unsigned char>(t.s[t.pos])))
            digits += t.s[t.pos++];
        if (digits.empty()) throw ParseError("expected generator index in s[...]");
        const long v = std::stol(digits);
        if (v < 1) throw ParseError("generator indices are 1-based");
        word.push_back(static_cast<std::size_t>(v - 1));
        const char c = t.peek();
        if (c == ',') {
            ++t.pos;
            continue;
        }
        if (c == ']') {
            ++t.pos;
            break;
        }
        throw ParseError("expected ',' or ']' in s[...]");
    }
    return word;
}

// factor := 's[...]' tick? | '1'
FormalSum parse_factor(Tokenizer& t, const std::shared_ptr<const ZeroOneMatrix>& ctx) {
    const char c = t.peek();
    if (c == '1') {
        ++t.pos;
        return FormalSum::identity(ctx);
    }
    if (c != 's') throw ParseError("expected monomial factor at position " + std::to_string(t.pos));
    ++t.pos;
    MultiIndex word = parse_bracket_word(t);
    bool starred = false;
    if (t.peek() == '\'') {
        starred = true;
        ++t.pos;
    }
    FormalSum f(ctx);
    f.add(Rational(1), starred ? CKMonomial::make(ctx, {}, std::move(word))
                               : CKMonomial::make(ctx, std::move(word), {}));
    return f;
}

// term := [coefficient ['*']] factor ('*' factor)*
FormalSum parse_term(Tokenizer& t, const std::shared_ptr<const ZeroOneMatrix>& ctx) {
    Rational coeff(1);
    char c = t.peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        std::string num;
        while (t.pos < t.s.size() &&
               (std::isdigit(static_cast<unsigned char>(t.s[t.pos])) || t.s[t.pos] == '.' ||
                t.s[t.pos] == '/' || t.s[t.pos] == 'e' || t.s[t.pos] == 'E'))
            num += t.s[t.pos++];
        coeff = parse_rational(num);
        if (t.peek() == '*' ) {
            // lookahead: '*' may join the coefficient to a factor
            std::size_t save = t.pos;
            ++t.pos;
            if (t.peek() != 's' && t.peek() != '1') t.pos = save;
        }
        if (t.peek() != 's' && t.peek() != '1') {
            FormalSum f = FormalSum::identity(ctx);
            f *= coeff;
            return f;
        }
    }
    FormalSum acc = parse_factor(t, ctx);
    while (t.peek() == '*') {
        ++t.pos;
        acc = product(acc, parse_factor(t, ctx));
    }
    acc *= coeff;
    return acc;
}

}  // namespace

FormalSum parse_formal_sum(std::shared_ptr<const ZeroOneMatrix> context,
                           const std::string& text) {
    Tokenizer t(text);
    FormalSum acc(context);
    bool negate = false;
    if (t.peek() == '-') {
        negate = true;
        ++t.pos;
    } else if (t.peek() == '+') {
        ++t.pos;
    }
    while (true) {
        FormalSum term = parse_term(t, context);
        if (negate) term *= Rational(-1);
        acc += term;
        if (t.eof()) break;
        const char c = t.peek();
        if (c == '+')
            negate = false;
        else if (c == '-')
            negate = true;
        else
            throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                             std::to_string(t.pos));
        ++t.pos;
    }
    return acc;
}

}  // namespace ckrep
