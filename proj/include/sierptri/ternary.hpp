#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sierptri {

/// Largest word length supported by the packed representation.
inline constexpr int kMaxOrder = 20;

/// A single ternary digit, always in {0,1,2}.
using Digit = std::uint8_t;

inline std::uint64_t pow3(int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

/// A fixed-length word s_n...s_1 over {0,1,2}, used as a vertex label.
///
/// Digits are packed two bits each into a single machine word, with s_1
/// (the least significant position) in the low bits. The empty word is a
/// valid value. Immutable after construction.
class TernaryWord {
public:
    TernaryWord() = default;

    /// Parses the textual form, leftmost character = s_n.
    static TernaryWord parse(std::string_view text) {
        if (text.size() > static_cast<std::size_t>(kMaxOrder))
            throw std::length_error("ternary word longer than max order " +
                                    std::to_string(kMaxOrder));
        TernaryWord w;
        w.len_ = static_cast<std::uint8_t>(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c < '0' || c > '2')
                throw std::invalid_argument(std::string("invalid ternary digit '") + c +
                                            "' in \"" + std::string(text) + "\"");
            int pos = static_cast<int>(text.size() - i);  // s_pos
            w.bits_ |= static_cast<std::uint64_t>(c - '0') << (2 * (pos - 1));
        }
        return w;
    }

    /// Word of given length whose digits are the base-3 expansion of value.
    static TernaryWord from_index(std::uint64_t value, int length) {
        check_length(length);
        TernaryWord w;
        w.len_ = static_cast<std::uint8_t>(length);
        for (int p = 1; p <= length; ++p) {
            w.bits_ |= (value % 3) << (2 * (p - 1));
            value /= 3;
        }
        return w;
    }

    /// prefix . i . j^run
    static TernaryWord pattern(const TernaryWord& prefix, Digit i, Digit j, int run) {
        check_digit(i);
        check_digit(j);
        if (run < 0) throw std::invalid_argument("negative run length");
        int total = prefix.size() + 1 + run;
        check_length(total);
        TernaryWord w;
        w.len_ = static_cast<std::uint8_t>(total);
        for (int p = 1; p <= run; ++p)
            w.bits_ |= static_cast<std::uint64_t>(j) << (2 * (p - 1));
        w.bits_ |= static_cast<std::uint64_t>(i) << (2 * run);
        w.bits_ |= prefix.bits_ << (2 * (run + 1));
        return w;
    }

    int size() const { return len_; }
    bool empty() const { return len_ == 0; }

    /// Digit s_pos, pos in [1, size()]; pos 1 is the rightmost character.
    Digit digit(int pos) const {
        check_pos(pos);
        return static_cast<Digit>((bits_ >> (2 * (pos - 1))) & 3u);
    }

    /// Copy with s_pos replaced by d.
    TernaryWord with_digit(int pos, Digit d) const {
        check_pos(pos);
        check_digit(d);
        TernaryWord w = *this;
        w.bits_ &= ~(std::uint64_t{3} << (2 * (pos - 1)));
        w.bits_ |= static_cast<std::uint64_t>(d) << (2 * (pos - 1));
        return w;
    }

    /// The word s_n...s_{pos+1} (digits strictly above position pos).
    TernaryWord prefix_above(int pos) const {
        if (pos < 0 || pos > len_) throw std::out_of_range("prefix position out of range");
        TernaryWord w;
        w.len_ = static_cast<std::uint8_t>(len_ - pos);
        w.bits_ = bits_ >> (2 * pos);
        return w;
    }

    /// The word s_pos...s_1.
    TernaryWord suffix(int pos) const {
        if (pos < 0 || pos > len_) throw std::out_of_range("suffix position out of range");
        TernaryWord w;
        w.len_ = static_cast<std::uint8_t>(pos);
        w.bits_ = bits_ & ((pos == 0) ? 0 : (~std::uint64_t{0} >> (64 - 2 * pos)));
        return w;
    }

    /// (s_1, maximal k with s_1 = s_2 = ... = s_k). Word must be nonempty.
    std::pair<Digit, int> trailing_run() const {
        if (len_ == 0) throw std::invalid_argument("trailing_run of empty word");
        Digit d = digit(1);
        int k = 1;
        while (k < len_ && digit(k + 1) == d) ++k;
        return {d, k};
    }

    /// Numeric value of the digits read as a base-3 number (s_n most significant).
    std::uint64_t index() const {
        std::uint64_t v = 0;
        for (int p = len_; p >= 1; --p) v = v * 3 + digit(p);
        return v;
    }

    std::string str() const {
        std::string s;
        s.reserve(len_);
        for (int p = len_; p >= 1; --p) s.push_back(static_cast<char>('0' + digit(p)));
        return s;
    }

    friend bool operator==(const TernaryWord& a, const TernaryWord& b) {
        return a.len_ == b.len_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const TernaryWord& a, const TernaryWord& b) { return !(a == b); }

    /// Length-major order; equal lengths compare lexicographically, which for
    /// the base-4 packing coincides with numeric base-3 order.
    friend bool operator<(const TernaryWord& a, const TernaryWord& b) {
        if (a.len_ != b.len_) return a.len_ < b.len_;
        return a.bits_ < b.bits_;
    }

private:
    static void check_digit(Digit d) {
        if (d > 2) throw std::invalid_argument("digit out of {0,1,2}");
    }
    static void check_length(int len) {
        if (len > kMaxOrder) throw std::length_error("word length exceeds max order");
    }
    void check_pos(int pos) const {
        if (pos < 1 || pos > len_) throw std::out_of_range("digit position out of range");
    }

    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

}  // namespace sierptri
