#include "moranrep/fractal_sets.hpp"

#include "moranrep/error.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <thread>

namespace moranrep {

namespace {

// Largest admissible block closer: s-1 unless u itself is s-1.
int max_alpha(int s, int u) { return u == s - 1 ? s - 2 : s - 1; }

std::size_t checked_interval_count(std::size_t branching, int k, std::size_t cap) {
    std::size_t count = 1;
    for (int i = 0; i < k; ++i) {
        if (branching != 0 && count > cap / branching)
            raise(errc::too_large, "level cover would exceed " + std::to_string(cap) +
                                       " intervals");
        count *= branching;
    }
    if (count > cap)
        raise(errc::too_large, "level cover would exceed " + std::to_string(cap) + " intervals");
    return count;
}

} // namespace

SuSetSpec::SuSetSpec(ProbVector P_, int u_) : P(std::move(P_)), u(u_) {
    check_digit(P.base(), u);
}

std::vector<int> SuSetSpec::admissible_digits() const {
    std::vector<int> digits;
    for (int c = 1; c < P.base(); ++c)
        if (c != u) digits.push_back(c);
    return digits;
}

bool SuSetSpec::degenerate() const {
    return P.base() == 3 && u != 0;
}

DigitWord su_block_word(int alpha, int u, int s) {
    check_base(s);
    check_digit(s, u);
    if (alpha <= 0 || alpha >= s || alpha == u)
        raise(errc::invalid_alpha,
              "alpha = " + std::to_string(alpha) + " must lie in {1..s-1} \\ {u}");
    std::vector<int> digits;
    detail::append_block(digits, alpha, u);
    return DigitWord(s, std::move(digits));
}

std::optional<SuParse> try_parse_su_digits(const DigitWord& w, int u) {
    const int s = w.base;
    check_digit(s, u);
    const int top = max_alpha(s, u);

    std::vector<int> alphas;
    int run = 0;
    for (int d : w.digits) {
        if (d == u) {
            if (++run >= top) return std::nullopt; // run can no longer close
        } else {
            if (d != run + 1) return std::nullopt; // wrong closing digit
            alphas.push_back(d);
            run = 0;
        }
    }
    return SuParse{std::move(alphas),
                   DigitWord(s, std::vector<int>(static_cast<std::size_t>(run), u))};
}

SuParse parse_su_digits(const DigitWord& w, int u) {
    auto parsed = try_parse_su_digits(w, u);
    if (!parsed)
        raise(errc::not_in_set,
              "'" + w.str() + "' is not a prefix of any element stream for u = " +
                  std::to_string(u));
    return std::move(*parsed);
}

IntervalR set_bounds_su(const SuSetSpec& spec) {
    return ru_cyl_bounds(RestrictedCylinder(spec.P, spec.u, DigitWord(spec.P.base(), {})));
}

Rational gamma_u(const SuSetSpec& spec) {
    Rational g(0);
    for (int c : spec.admissible_digits()) g += spec.P.p(c) * spec.P.p(spec.u).pow(c - 1);
    return g;
}

Rational cover_measure_su(const SuSetSpec& spec, int k) {
    if (k < 0) raise(errc::out_of_range, "k must be >= 0");
    return set_bounds_su(spec).length() * gamma_u(spec).pow(k);
}

namespace {

struct SuEnumerator {
    const SuSetSpec& spec;
    std::vector<int> digits;       // admissible, ascending
    Rational inf0, sup0;           // rank-0 bounds of the tail set

    // Appends the subtree rooted at `base` (with accumulated value/product
    // of its expanded block word) in lexicographic base order.
    void enumerate(std::vector<int>& base, const Rational& value, const Rational& prod,
                   int remaining, std::vector<std::pair<DigitWord, IntervalR>>& out) const {
        if (remaining == 0) {
            out.emplace_back(DigitWord(spec.P.base(), base),
                             IntervalR{value + prod * inf0, value + prod * sup0});
            return;
        }
        for (int c : digits) {
            Rational v = value, q = prod;
            for (int i = 0; i < c - 1; ++i) { // block u^{c-1} c
                v += spec.P.beta(spec.u) * q;
                q *= spec.P.p(spec.u);
            }
            v += spec.P.beta(c) * q;
            q *= spec.P.p(c);
            base.push_back(c);
            enumerate(base, v, q, remaining - 1, out);
            base.pop_back();
        }
    }
};

CoverLevel finish_cover(int k, std::vector<std::pair<DigitWord, IntervalR>> intervals,
                        bool degenerate) {
    Rational total(0);
    for (const auto& [base, iv] : intervals) total += iv.length();
    return CoverLevel{k, std::move(intervals), std::move(total), degenerate};
}

} // namespace

CoverLevel level_cover_su(const SuSetSpec& spec, int k, std::size_t cap, bool parallel) {
    if (k < 0) raise(errc::out_of_range, "k must be >= 0");
    SuEnumerator en{spec, spec.admissible_digits(), Rational(0), Rational(0)};
    checked_interval_count(en.digits.size(), k, cap);
    IntervalR hull = set_bounds_su(spec);
    en.inf0 = hull.lo;
    en.sup0 = hull.hi;

    std::vector<std::pair<DigitWord, IntervalR>> intervals;
    if (parallel && k >= 1 && en.digits.size() > 1) {
        // Deterministic: one task per first digit, concatenated in digit order.
        std::vector<std::future<std::vector<std::pair<DigitWord, IntervalR>>>> tasks;
        for (int c : en.digits) {
            tasks.push_back(std::async(std::launch::async, [&, c] {
                std::vector<std::pair<DigitWord, IntervalR>> part;
                std::vector<int> base{c};
                Rational v(0), q(1);
                for (int i = 0; i < c - 1; ++i) {
                    v += spec.P.beta(spec.u) * q;
                    q *= spec.P.p(spec.u);
                }
                v += spec.P.beta(c) * q;
                q *= spec.P.p(c);
                en.enumerate(base, v, q, k - 1, part);
                return part;
            }));
        }
        for (auto& t : tasks) {
            auto part = t.get();
            intervals.insert(intervals.end(), std::make_move_iterator(part.begin()),
                             std::make_move_iterator(part.end()));
        }
    } else {
        std::vector<int> base;
        en.enumerate(base, Rational(0), Rational(1), k, intervals);
    }
    return finish_cover(k, std::move(intervals), spec.degenerate());
}

bool member_su(const Rational& x, const SuSetSpec& spec, int k) {
    if (k < 0) raise(errc::out_of_range, "k must be >= 0");
    const int s = spec.P.base();
    IntervalR hull = set_bounds_su(spec);
    if (!hull.contains(x)) return false;
    if (k == 0) return true;

    // Greedy P-digit extraction, parsed into blocks as we go. Any x inside a
    // rank-k interval has digits starting with that interval's block word,
    // so a parse failure before k complete blocks rules x out.
    const int top = max_alpha(s, spec.u);
    std::vector<int> base;
    Rational rem = x;
    int run = 0;
    const int budget = k * top + s + 1;
    for (int step = 0; step < budget && static_cast<int>(base.size()) < k; ++step) {
        int d = s - 1;
        while (d > 0 && spec.P.beta(d) > rem) --d;
        rem = (rem - spec.P.beta(d)) / spec.P.p(d);
        if (d == spec.u) {
            if (++run >= top) return false;
        } else {
            if (d != run + 1) return false;
            base.push_back(d);
            run = 0;
        }
    }
    if (static_cast<int>(base.size()) < k) return false;
    return ru_cyl_bounds(RestrictedCylinder(spec.P, spec.u, DigitWord(s, std::move(base))))
        .contains(x);
}

CombinationAlphabet validate_combo_alphabet(const ProbVector& P, std::vector<DigitWord> combos) {
    if (combos.empty()) raise(errc::empty_combo, "alphabet has no combinations");
    const int s = P.base();
    for (std::size_t j = 0; j < combos.size(); ++j) {
        if (combos[j].empty())
            raise(errc::empty_combo, "combination " + std::to_string(j) + " is empty");
        if (combos[j].base != s)
            raise(errc::base_mismatch, "combination " + std::to_string(j) + " uses base " +
                                           std::to_string(combos[j].base));
    }

    // Equal-length words are prefix-free by construction unless duplicated;
    // the pairwise scan covers both at the sizes used here.
    for (std::size_t j = 0; j < combos.size(); ++j)
        for (std::size_t l = 0; l < combos.size(); ++l) {
            if (j == l) continue;
            const auto& a = combos[j].digits;
            const auto& b = combos[l].digits;
            if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin()))
                raise(errc::prefix_conflict, "combination " + std::to_string(j) +
                                                 " is a prefix of combination " +
                                                 std::to_string(l));
        }

    std::vector<std::vector<int>> counts(combos.size(),
                                         std::vector<int>(static_cast<std::size_t>(s), 0));
    for (std::size_t j = 0; j < combos.size(); ++j)
        for (int d : combos[j].digits) ++counts[j][static_cast<std::size_t>(d)];
    return CombinationAlphabet{P, std::move(combos), std::move(counts)};
}

namespace {

// Live parse positions while building an extreme stream: (combo, offset).
using ComboState = std::vector<std::pair<int, int>>;

EventuallyPeriodicSeq combo_extreme_stream(const CombinationAlphabet& xi, bool maximal) {
    const int s = xi.P.base();
    ComboState start;
    for (std::size_t j = 0; j < xi.combos.size(); ++j) start.emplace_back(static_cast<int>(j), 0);

    std::map<ComboState, std::size_t> seen;
    std::vector<int> emitted;
    ComboState state = start;
    constexpr std::size_t kStepCap = 1u << 20;
    while (emitted.size() < kStepCap) {
        auto [it, fresh] = seen.emplace(state, emitted.size());
        if (!fresh) {
            std::size_t head = it->second;
            std::vector<int> pre(emitted.begin(), emitted.begin() + static_cast<long>(head));
            std::vector<int> per(emitted.begin() + static_cast<long>(head), emitted.end());
            return EventuallyPeriodicSeq(s, std::move(pre), std::move(per));
        }

        int pick = maximal ? -1 : s;
        for (const auto& [j, o] : state) {
            int d = xi.combos[static_cast<std::size_t>(j)].digits[static_cast<std::size_t>(o)];
            pick = maximal ? std::max(pick, d) : std::min(pick, d);
        }
        emitted.push_back(pick);

        ComboState next;
        bool completed = false;
        for (const auto& [j, o] : state) {
            const auto& word = xi.combos[static_cast<std::size_t>(j)].digits;
            if (word[static_cast<std::size_t>(o)] != pick) continue;
            if (static_cast<std::size_t>(o) + 1 == word.size())
                completed = true;
            else
                next.emplace_back(j, o + 1);
        }
        if (completed) next.insert(next.end(), start.begin(), start.end());
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        state = std::move(next);
    }
    raise(errc::too_large, "extreme stream did not cycle within step cap");
}

} // namespace

EventuallyPeriodicSeq combo_min_stream(const CombinationAlphabet& xi) {
    return combo_extreme_stream(xi, false);
}

EventuallyPeriodicSeq combo_max_stream(const CombinationAlphabet& xi) {
    return combo_extreme_stream(xi, true);
}

IntervalR set_bounds_combo(const CombinationAlphabet& xi) {
    return IntervalR{decode_p(combo_min_stream(xi), xi.P), decode_p(combo_max_stream(xi), xi.P)};
}

namespace {

struct ComboEnumerator {
    const CombinationAlphabet& xi;
    std::vector<std::size_t> order; // combo indices sorted by word
    std::vector<Rational> word_value, word_prod;
    Rational inf0, sup0;

    void enumerate(std::vector<int>& base, const Rational& value, const Rational& prod,
                   int remaining, std::vector<std::pair<DigitWord, IntervalR>>& out) const {
        if (remaining == 0) {
            out.emplace_back(DigitWord(xi.P.base(), base),
                             IntervalR{value + prod * inf0, value + prod * sup0});
            return;
        }
        for (std::size_t j : order) {
            Rational v = value + prod * word_value[j];
            Rational q = prod * word_prod[j];
            std::size_t len = base.size();
            base.insert(base.end(), xi.combos[j].digits.begin(), xi.combos[j].digits.end());
            enumerate(base, v, q, remaining - 1, out);
            base.resize(len);
        }
    }
};

} // namespace

CoverLevel level_cover_combo(const CombinationAlphabet& xi, int k, std::size_t cap,
                             bool parallel) {
    if (k < 0) raise(errc::out_of_range, "k must be >= 0");
    checked_interval_count(xi.combos.size(), k, cap);

    ComboEnumerator en{xi, {}, {}, {}, Rational(0), Rational(0)};
    en.order.resize(xi.combos.size());
    std::iota(en.order.begin(), en.order.end(), std::size_t{0});
    // Prefix-freeness makes tuple order under word-sorted combos coincide
    // with lexicographic order of the concatenations.
    std::sort(en.order.begin(), en.order.end(), [&](std::size_t a, std::size_t b) {
        return xi.combos[a].digits < xi.combos[b].digits;
    });
    for (const auto& combo : xi.combos) {
        Rational v(0), q(1);
        for (int d : combo.digits) {
            v += xi.P.beta(d) * q;
            q *= xi.P.p(d);
        }
        en.word_value.push_back(std::move(v));
        en.word_prod.push_back(std::move(q));
    }
    IntervalR hull = set_bounds_combo(xi);
    en.inf0 = hull.lo;
    en.sup0 = hull.hi;

    std::vector<std::pair<DigitWord, IntervalR>> intervals;
    if (parallel && k >= 1 && xi.combos.size() > 1) {
        std::vector<std::future<std::vector<std::pair<DigitWord, IntervalR>>>> tasks;
        for (std::size_t j : en.order) {
            tasks.push_back(std::async(std::launch::async, [&, j] {
                std::vector<std::pair<DigitWord, IntervalR>> part;
                std::vector<int> base(xi.combos[j].digits);
                en.enumerate(base, en.word_value[j], en.word_prod[j], k - 1, part);
                return part;
            }));
        }
        for (auto& t : tasks) {
            auto part = t.get();
            intervals.insert(intervals.end(), std::make_move_iterator(part.begin()),
                             std::make_move_iterator(part.end()));
        }
    } else {
        std::vector<int> base;
        en.enumerate(base, Rational(0), Rational(1), k, intervals);
    }
    return finish_cover(k, std::move(intervals), xi.combos.size() == 1);
}

bool member_combo(const Rational& x, const CombinationAlphabet& xi, int k) {
    if (k < 0) raise(errc::out_of_range, "k must be >= 0");
    IntervalR hull = set_bounds_combo(xi);
    std::vector<Rational> word_value, word_prod;
    for (const auto& combo : xi.combos) {
        Rational v(0), q(1);
        for (int d : combo.digits) {
            v += xi.P.beta(d) * q;
            q *= xi.P.p(d);
        }
        word_value.push_back(std::move(v));
        word_prod.push_back(std::move(q));
    }

    // DFS over combo choices; sibling intervals have disjoint interiors, so
    // at most two branches (sharing an endpoint) survive at each level.
    auto descend = [&](auto&& self, const Rational& value, const Rational& prod,
                       int remaining) -> bool {
        if (!(value + prod * hull.lo <= x && x <= value + prod * hull.hi)) return false;
        if (remaining == 0) return true;
        for (std::size_t j = 0; j < xi.combos.size(); ++j)
            if (self(self, value + prod * word_value[j], prod * word_prod[j], remaining - 1))
                return true;
        return false;
    };
    return descend(descend, Rational(0), Rational(1), k);
}

} // namespace moranrep
