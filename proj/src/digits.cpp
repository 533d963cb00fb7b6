#include "moranrep/digits.hpp"

#include "moranrep/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace moranrep {

void check_base(int base) {
    if (base < kMinBase)
        raise(errc::out_of_range, "base must be >= " + std::to_string(kMinBase) +
                                      ", got " + std::to_string(base));
}

void check_digit(int base, int digit) {
    if (digit < 0 || digit >= base)
        raise(errc::invalid_base_digit, "digit " + std::to_string(digit) +
                                            " out of [0, " + std::to_string(base - 1) + "]");
}

DigitWord::DigitWord(int base_, std::vector<int> digits_) : base(base_), digits(std::move(digits_)) {
    check_base(base);
    for (int d : digits) check_digit(base, d);
}

std::string DigitWord::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ' ';
        os << digits[i];
    }
    return os.str();
}

namespace {

std::vector<int> parse_digit_list(std::string_view text, int base) {
    std::vector<int> out;
    bool separated = text.find(' ') != std::string_view::npos ||
                     text.find(',') != std::string_view::npos || base > 10;
    if (separated) {
        std::string token;
        std::string norm(text);
        std::replace(norm.begin(), norm.end(), ',', ' ');
        std::istringstream in(norm);
        while (in >> token) {
            try {
                std::size_t pos = 0;
                int d = std::stoi(token, &pos);
                if (pos != token.size()) throw std::invalid_argument(token);
                out.push_back(d);
            } catch (const std::exception&) {
                raise(errc::parse_error, "bad digit token '" + token + "'");
            }
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                raise(errc::parse_error, std::string("bad digit character '") + c + "'");
            out.push_back(c - '0');
        }
    }
    for (int d : out) check_digit(base, d);
    return out;
}

// Smallest p dividing |w| with w = (w[0..p))^{|w|/p}.
std::size_t primitive_period_length(const std::vector<int>& w) {
    for (std::size_t p = 1; p <= w.size(); ++p) {
        if (w.size() % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < w.size() && ok; ++i) ok = (w[i] == w[i - p]);
        if (ok) return p;
    }
    return w.size();
}

} // namespace

DigitWord DigitWord::parse(std::string_view text, int base) {
    check_base(base);
    return DigitWord(base, parse_digit_list(text, base));
}

EventuallyPeriodicSeq::EventuallyPeriodicSeq(int base, std::vector<int> preperiod,
                                             std::vector<int> period)
    : base_(base), preperiod_(std::move(preperiod)), period_(std::move(period)) {
    check_base(base_);
    if (period_.empty()) raise(errc::parse_error, "period must be nonempty");
    for (int d : preperiod_) check_digit(base_, d);
    for (int d : period_) check_digit(base_, d);
    canonicalize();
}

void EventuallyPeriodicSeq::canonicalize() {
    period_.resize(primitive_period_length(period_));
    // Absorb preperiod digits that merely repeat the period one step early:
    // w d (v' d) with the period rotated denotes the same stream as w (d v').
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
        std::rotate(period_.begin(), period_.end() - 1, period_.end());
        preperiod_.pop_back();
    }
}

int EventuallyPeriodicSeq::digit_at(std::size_t n) const {
    if (n == 0) raise(errc::out_of_range, "digit positions are 1-based");
    std::size_t i = n - 1;
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
}

DigitWord EventuallyPeriodicSeq::prefix(std::size_t n) const {
    std::vector<int> d(n);
    for (std::size_t i = 1; i <= n; ++i) d[i - 1] = digit_at(i);
    return DigitWord(base_, std::move(d));
}

std::string EventuallyPeriodicSeq::str() const {
    auto emit = [&](const std::vector<int>& w, std::ostringstream& os) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (base_ > 10 && i) os << ' ';
            os << w[i];
        }
    };
    std::ostringstream os;
    emit(preperiod_, os);
    os << '(';
    emit(period_, os);
    os << ')';
    return os.str();
}

EventuallyPeriodicSeq EventuallyPeriodicSeq::parse(std::string_view text, int base) {
    auto open = text.find('(');
    if (open == std::string_view::npos) {
        // Plain word: terminating expansion w(0).
        return EventuallyPeriodicSeq(base, parse_digit_list(text, base), {0});
    }
    auto close = text.find(')', open);
    if (close == std::string_view::npos || close != text.size() - 1)
        raise(errc::parse_error, "expected 'pre(per)', got '" + std::string(text) + "'");
    auto pre = text.substr(0, open);
    auto per = text.substr(open + 1, close - open - 1);
    if (per.empty()) raise(errc::parse_error, "empty period in '" + std::string(text) + "'");
    return EventuallyPeriodicSeq(base, parse_digit_list(pre, base), parse_digit_list(per, base));
}

} // namespace moranrep
