#pragma once

#include "ckrep/errors.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ckrep {

/// Reduced word in the free group on n generators. Letters are nonzero
/// ints: +(i+1) is generator i, -(i+1) its inverse; no adjacent
/// letter/inverse pairs survive. Equality is structural, which decides
/// group-element equality because reduced forms are unique.
class ReducedWord {
public:
    ReducedWord() = default;

    static ReducedWord identity() { return {}; }

    static ReducedWord generator(std::size_t i, bool inverse = false) {
        ReducedWord w;
        w.letters_.push_back(encode(i, inverse));
        return w;
    }

    /// Free reduction: iterated cancellation of adjacent inverse pairs.
    static ReducedWord from_letters(const std::vector<int>& raw) {
        ReducedWord w;
        for (int l : raw) {
            if (l == 0) throw DomainError("letter 0 is not a generator");
            if (!w.letters_.empty() && w.letters_.back() == -l)
                w.letters_.pop_back();
            else
                w.letters_.push_back(l);
        }
        return w;
    }

    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    const std::vector<int>& letters() const { return letters_; }

    /// Left multiplication by a single generator (or inverse); the result
    /// stays reduced because only the seam can cancel.
    ReducedWord left_mul(std::size_t i, bool inverse) const {
        const int l = encode(i, inverse);
        ReducedWord out;
        if (!letters_.empty() && letters_.front() == -l) {
            out.letters_.assign(letters_.begin() + 1, letters_.end());
        } else {
            out.letters_.reserve(letters_.size() + 1);
            out.letters_.push_back(l);
            out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
        }
        return out;
    }

    std::string str() const {
        if (letters_.empty()) return "e";
        std::string s;
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            if (k) s += ".";
            const int l = letters_[k];
            s += "x" + std::to_string(l > 0 ? l : -l);
            if (l < 0) s += "^-1";
        }
        return s;
    }

    friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
        return a.letters_ == b.letters_;
    }
    friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    static int encode(std::size_t i, bool inverse) {
        const int l = static_cast<int>(i) + 1;
        return inverse ? -l : l;
    }

    std::vector<int> letters_;
};

/// Free reduction with range validation against the generator count.
inline ReducedWord reduce_word(std::size_t n, const std::vector<int>& raw) {
    for (int l : raw) {
        const int mag = l > 0 ? l : -l;
        if (mag < 1 || static_cast<std::size_t>(mag) > n)
            throw DomainError("letter " + std::to_string(l) + " out of range for n = " +
                              std::to_string(n));
    }
    return ReducedWord::from_letters(raw);
}

}  // namespace ckrep
