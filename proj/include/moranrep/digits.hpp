#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace moranrep {

constexpr int kMinBase = 3;

// Finite word of digits in [0, base). Base s >= 3 throughout (the sets this
// library studies are only defined for s > 2).
struct DigitWord {
    int base = kMinBase;
    std::vector<int> digits;

    DigitWord() = default;
    DigitWord(int base_, std::vector<int> digits_);

    std::size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }

    // Space-separated digits, e.g. "1 0 2 0". Empty word -> "".
    std::string str() const;

    // Accepts space- or comma-separated digits, or a compact run of single
    // characters ("1020") when base <= 10.
    static DigitWord parse(std::string_view text, int base);

    friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

void check_base(int base);
void check_digit(int base, int digit);

// Eventually periodic digit sequence: preperiod word followed by an
// infinitely repeated period word. Stored in canonical form — the period is
// primitive (not a power of a shorter word) and the preperiod is minimal
// (its tail is absorbed into the period whenever the values coincide), so
// two sequences denote the same digit stream iff they compare equal.
class EventuallyPeriodicSeq {
public:
    EventuallyPeriodicSeq(int base, std::vector<int> preperiod, std::vector<int> period);

    int base() const { return base_; }
    const std::vector<int>& preperiod() const { return preperiod_; }
    const std::vector<int>& period() const { return period_; }

    // 1-based digit stream access: digit_at(1) is the first digit.
    int digit_at(std::size_t n) const;

    // First n digits of the stream as a word.
    DigitWord prefix(std::size_t n) const;

    // "preperiod(period)": compact single-character digits when base <= 10,
    // space-separated otherwise. E.g. "102(21)".
    std::string str() const;

    // Parses "pre(per)"; a plain word "w" is read as "w(0)". Digits compact
    // or space/comma separated as in DigitWord::parse.
    static EventuallyPeriodicSeq parse(std::string_view text, int base);

    friend bool operator==(const EventuallyPeriodicSeq&, const EventuallyPeriodicSeq&) = default;

private:
    void canonicalize();

    int base_;
    std::vector<int> preperiod_;
    std::vector<int> period_;
};

} // namespace moranrep
