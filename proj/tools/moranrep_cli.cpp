// Command-line front end: every library operation behind subcommands, exact
// rationals on both sides, CSV for tabular output.
//
// Exit codes: 0 success, 2 validation/usage error, 3 computation cap exceeded.

#include "CLI11.hpp"

#include "moranrep/cylinders.hpp"
#include "moranrep/dimension.hpp"
#include "moranrep/error.hpp"
#include "moranrep/fractal_sets.hpp"
#include "moranrep/numrep.hpp"
#include "moranrep/stochastic.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace moranrep;

std::string fmt_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::vector<std::string> split_list(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        // Trim surrounding spaces.
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::string trim(const std::string& text) {
    auto b = text.find_first_not_of(" \t\r");
    auto e = text.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return text.substr(b, e - b + 1);
}

// Applies a "--config FILE" option before CLI11 parses: each "key = value"
// line becomes "--key value" appended to the argument list, unless --key was
// given explicitly (command-line flags override the file). One config file
// can serve several subcommands, so keys the selected subcommand does not
// define are skipped.
std::vector<std::string> expand_config_args(const CLI::App& app, int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string path;
    const CLI::App* target = &app;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else if (!args[i].empty() && args[i][0] != '-') {
            // Walk the subcommand chain to know which options exist.
            for (const CLI::App* sub : target->get_subcommands(nullptr))
                if (sub->check_name(args[i])) {
                    target = sub;
                    break;
                }
        }
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) raise(errc::parse_error, "cannot read --config file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            raise(errc::parse_error, "config line is not 'key = value': '" + line + "'");
        std::string key = "--" + trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!value.empty() && value.front() == '"' && value.back() == '"' && value.size() > 1)
            value = value.substr(1, value.size() - 2);
        if (target->get_option_no_throw(key) == nullptr) continue;
        bool overridden = false;
        for (std::size_t i = 1; i < args.size(); ++i)
            if (args[i] == key || args[i].rfind(key + "=", 0) == 0) overridden = true;
        if (overridden) continue;
        args.push_back(key);
        args.push_back(value);
    }
    return args;
}

// Shared law options: --s (base) and --p (comma-separated exact rationals).
// --p alone fixes s; --s alone means the uniform law.
struct LawOpts {
    int s = 0;
    std::string p;

    void attach(CLI::App* cmd) {
        cmd->add_option("--s", s, "base s (>= 3); alone it means the uniform law");
        cmd->add_option("--p", p, "digit probabilities, e.g. 1/2,1/4,1/4");
    }

    ProbVector law() const {
        if (!p.empty()) {
            std::vector<Rational> probs;
            for (const auto& tok : split_list(p)) probs.push_back(Rational::from_string(tok));
            if (s != 0 && s != static_cast<int>(probs.size()))
                raise(errc::wrong_length, "--p lists " + std::to_string(probs.size()) +
                                              " entries but --s is " + std::to_string(s));
            const int count = static_cast<int>(probs.size());
            return ProbVector::validate(count, std::move(probs));
        }
        if (s == 0) raise(errc::wrong_length, "need --p or --s");
        return ProbVector::uniform(s);
    }
};

struct OutOpt {
    std::string path;
    std::ofstream file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--out", path, "write output to this file instead of stdout");
    }

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) raise(errc::parse_error, "cannot open --out file '" + path + "'");
        }
        return file;
    }
};

std::vector<DigitWord> parse_combo_list(const std::string& text, int s) {
    std::vector<DigitWord> combos;
    for (const auto& word : split_list(text)) combos.push_back(DigitWord::parse(word, s));
    if (combos.empty()) raise(errc::empty_combo, "--combos is empty");
    return combos;
}

void print_dim(std::ostream& os, const DimensionResult& r) {
    os << "alpha0 = " << fmt_sig(r.alpha0, 12) << "\n";
    os << "residual = " << fmt_sig(r.residual, 6) << "\n";
    os << "iterations = " << r.iterations << "\n";
    os << "degenerate = " << (r.degenerate ? "true" : "false") << "\n";
}

void print_interval_csv(std::ostream& os, const IntervalR& iv) {
    os << "lo,hi,length\n";
    os << iv.lo.str() << "," << iv.hi.str() << "," << iv.length().str() << "\n";
}

void write_cover_csv(std::ostream& os, const CoverLevel& cover) {
    os << "base_word,lo,hi,length\n";
    for (const auto& [base, iv] : cover.intervals)
        os << base.str() << "," << iv.lo.str() << "," << iv.hi.str() << ","
           << iv.length().str() << "\n";
}

struct SetChoice {
    LawOpts law;
    int u = -1;
    std::string combos;

    void attach(CLI::App* cmd) {
        law.attach(cmd);
        cmd->add_option("--u", u, "excluded digit u of the restricted set");
        cmd->add_option("--combos", combos, "combination alphabet, e.g. 0,2 or 01,20");
    }

    bool is_su() const { return u >= 0; }

    SuSetSpec su() const { return SuSetSpec(law.law(), u); }

    CombinationAlphabet combo() const {
        auto P = law.law();
        return validate_combo_alphabet(P, parse_combo_list(combos, P.base()));
    }

    void require_one() const {
        if (is_su() == !combos.empty())
            raise(errc::parse_error, "need exactly one of --u or --combos");
    }

    CoverLevel cover(int level, std::size_t cap, bool parallel) const {
        require_one();
        return is_su() ? level_cover_su(su(), level, cap, parallel)
                       : level_cover_combo(combo(), level, cap, parallel);
    }

    IntervalR bounds() const {
        require_one();
        return is_su() ? set_bounds_su(su()) : set_bounds_combo(combo());
    }
};

int run(int argc, char** argv) {
    CLI::App app{"P-representation of [0,1]: singular distribution function, "
                 "restricted Moran-type sets, covers and Hausdorff dimension"};
    app.require_subcommand(1);
    std::vector<std::unique_ptr<OutOpt>> outs;
    auto add_out = [&](CLI::App* cmd) {
        outs.push_back(std::make_unique<OutOpt>());
        outs.back()->attach(cmd);
        return outs.back().get();
    };
    auto add_config = [](CLI::App* cmd) {
        // Parsed by expand_config_args before CLI11 runs; declared here so it
        // is accepted and documented.
        static std::string sink;
        cmd->add_option("--config", sink,
                        "config file, one key = value per line, # comments; "
                        "command-line flags override it");
    };

    // eval-f
    {
        auto* cmd = app.add_subcommand("eval-f", "evaluate the distribution function f at x");
        auto law = std::make_shared<LawOpts>();
        auto x = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(kDefaultDepth);
        law->attach(cmd);
        cmd->add_option("--x", *x, "point in [0,1], exact rational")->required();
        cmd->add_option("--depth", *depth, "truncation depth (default 64)");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([law, x, depth, out] {
            auto r = eval_f(Rational::from_string(*x), law->law(), *depth);
            out->stream() << r.value.str() << "\n";
            if (!r.tail_bound.is_zero())
                out->stream() << "tail_bound = " << r.tail_bound.str() << "\n";
        });
    }

    // invert-f
    {
        auto* cmd = app.add_subcommand("invert-f", "digits of the preimage of y under f");
        auto law = std::make_shared<LawOpts>();
        auto y = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(8);
        law->attach(cmd);
        cmd->add_option("--y", *y, "value in [0,1], exact rational")->required();
        cmd->add_option("--depth", *depth, "number of digits to produce (default 8)");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([law, y, depth, out] {
            out->stream() << invert_f(Rational::from_string(*y), law->law(), *depth).str()
                          << "\n";
        });
    }

    // encode
    {
        auto* cmd = app.add_subcommand("encode", "s-adic digits of x (terminating-preferred)");
        auto s = std::make_shared<int>(0);
        auto x = std::make_shared<std::string>();
        auto depth = std::make_shared<int>(16);
        cmd->add_option("--s", *s, "base s")->required();
        cmd->add_option("--x", *x, "point in [0,1], exact rational")->required();
        cmd->add_option("--depth", *depth, "number of digits (default 16)");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([s, x, depth, out] {
            auto r = encode_sadic(Rational::from_string(*x), *s, *depth);
            out->stream() << r.digits.str() << "\n";
            out->stream() << "exact = " << (r.exact ? "true" : "false") << "\n";
        });
    }

    // decode
    {
        auto* cmd = app.add_subcommand("decode", "value of a digit sequence 'pre(per)'");
        auto s = std::make_shared<int>(0);
        auto seq = std::make_shared<std::string>();
        auto rep = std::make_shared<std::string>("sadic");
        auto law = std::make_shared<LawOpts>();
        cmd->add_option("--seq", *seq, "digit sequence, e.g. 102(21)")->required();
        cmd->add_option("--rep", *rep, "representation: sadic | negasadic | p (default sadic)")
            ->check(CLI::IsMember({"sadic", "negasadic", "p"}));
        cmd->add_option("--base", *s, "base s (for sadic/negasadic; inferred from --p for p)");
        law->attach(cmd);
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([s, seq, rep, law, out] {
            Rational value;
            if (*rep == "p") {
                auto P = law->law();
                value = decode_p(EventuallyPeriodicSeq::parse(*seq, P.base()), P);
            } else {
                int base = *s != 0 ? *s : law->s;
                if (base == 0) raise(errc::parse_error, "need --base (or --s) for " + *rep);
                auto parsed = EventuallyPeriodicSeq::parse(*seq, base);
                value = (*rep == "sadic") ? decode_sadic(parsed) : decode_negasadic(parsed);
            }
            out->stream() << value.str() << "\n";
        });
    }

    // cyl
    {
        auto* cmd = app.add_subcommand("cyl", "bounds of a plain P-cylinder");
        auto law = std::make_shared<LawOpts>();
        auto base = std::make_shared<std::string>();
        law->attach(cmd);
        cmd->add_option("--base", *base, "base word, e.g. '1 2' or 12 (may be empty)");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([law, base, out] {
            auto P = law->law();
            Cylinder c(P, DigitWord::parse(*base, P.base()));
            print_interval_csv(out->stream(), p_cyl_bounds(c));
        });
    }

    // rcyl
    {
        auto* cmd = app.add_subcommand("rcyl", "bounds of a restricted cylinder");
        auto law = std::make_shared<LawOpts>();
        auto u = std::make_shared<int>();
        auto base = std::make_shared<std::string>();
        law->attach(cmd);
        cmd->add_option("--u", *u, "excluded digit u")->required();
        cmd->add_option("--base", *base, "base word over {1..s-1} \\ {u}");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([law, u, base, out] {
            auto P = law->law();
            RestrictedCylinder c(P, *u, DigitWord::parse(*base, P.base()));
            auto iv = ru_cyl_bounds(c);
            print_interval_csv(out->stream(), iv);
        });
    }

    // gaps
    {
        auto* cmd = app.add_subcommand("gaps", "ordering of adjacent sibling cylinders");
        auto law = std::make_shared<LawOpts>();
        auto u = std::make_shared<int>();
        auto base = std::make_shared<std::string>();
        auto pdigit = std::make_shared<int>(-1);
        law->attach(cmd);
        cmd->add_option("--u", *u, "excluded digit u")->required();
        cmd->add_option("--base", *base, "base word (default empty)");
        cmd->add_option("--pdigit", *pdigit, "left sibling digit p (default: all valid p)");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([law, u, base, pdigit, out] {
            auto P = law->law();
            RestrictedCylinder c(P, *u, DigitWord::parse(*base, P.base()));
            auto& os = out->stream();
            os << "p,relation,gap\n";
            auto emit = [&](int p) {
                auto child = [&](int d) {
                    std::vector<int> digits = c.base.digits;
                    digits.push_back(d);
                    return ru_cyl_bounds(
                        RestrictedCylinder(P, *u, DigitWord(P.base(), digits)));
                };
                GapSign g = gap_sign(c, p);
                IntervalR a = child(p), b = child(p + 1);
                Rational gap = g == GapSign::ascending ? b.lo - a.hi : a.lo - b.hi;
                os << p << "," << gap_sign_name(g) << "," << gap.str() << "\n";
            };
            if (*pdigit >= 0) {
                emit(*pdigit);
            } else {
                for (int p = 1; p + 1 < P.base(); ++p)
                    if (p != *u && p + 1 != *u) emit(p);
            }
        });
    }

    // bounds
    {
        auto* cmd = app.add_subcommand("bounds", "inf/sup of a restricted or combination set");
        auto choice = std::make_shared<SetChoice>();
        choice->attach(cmd);
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([choice, out] {
            auto iv = choice->bounds();
            auto& os = out->stream();
            os << "lo,hi,diameter\n";
            os << iv.lo.str() << "," << iv.hi.str() << "," << iv.length().str() << "\n";
        });
    }

    // cover
    {
        auto* cmd = app.add_subcommand("cover", "enumerate the level-k cover as CSV");
        auto choice = std::make_shared<SetChoice>();
        auto level = std::make_shared<int>(1);
        auto cap = std::make_shared<std::size_t>(kDefaultCoverCap);
        auto parallel = std::make_shared<bool>(false);
        choice->attach(cmd);
        cmd->add_option("--level", *level, "cover level k (default 1)");
        cmd->add_option("--cap", *cap, "interval-count cap (default 10^7)");
        cmd->add_flag("--parallel", *parallel, "enumerate first-level branches in parallel");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([choice, level, cap, parallel, out] {
            auto cover = choice->cover(*level, *cap, *parallel);
            if (cover.degenerate)
                std::cerr << "warning: degenerate set (single branch per level)\n";
            write_cover_csv(out->stream(), cover);
        });
    }

    // measure
    {
        auto* cmd = app.add_subcommand("measure", "closed-form cover measure d0 * gamma_u^k");
        auto law = std::make_shared<LawOpts>();
        auto u = std::make_shared<int>();
        auto level = std::make_shared<int>(1);
        law->attach(cmd);
        cmd->add_option("--u", *u, "excluded digit u")->required();
        cmd->add_option("--level", *level, "cover level k (default 1)");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([law, u, level, out] {
            out->stream() << cover_measure_su(SuSetSpec(law->law(), *u), *level).str() << "\n";
        });
    }

    // member
    {
        auto* cmd = app.add_subcommand("member", "level-k cover membership of x");
        auto choice = std::make_shared<SetChoice>();
        auto x = std::make_shared<std::string>();
        auto level = std::make_shared<int>(1);
        choice->attach(cmd);
        cmd->add_option("--x", *x, "point to test, exact rational")->required();
        cmd->add_option("--level", *level, "cover level k (default 1)");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([choice, x, level, out] {
            choice->require_one();
            Rational value = Rational::from_string(*x);
            bool in = choice->is_su() ? member_su(value, choice->su(), *level)
                                      : member_combo(value, choice->combo(), *level);
            out->stream() << (in ? "true" : "false") << "\n";
        });
    }

    // dim with variants
    {
        auto* dim = app.add_subcommand("dim", "Hausdorff dimension solvers");
        dim->require_subcommand(1);
        auto tol = std::make_shared<double>(kDefaultDimTol);
        dim->add_option("--tol", *tol, "residual tolerance (default 1e-12)");

        auto* moran = dim->add_subcommand("moran", "root of sum r_i^a = 1");
        auto ratios = std::make_shared<std::string>();
        moran->add_option("--ratios", *ratios, "contraction ratios, e.g. 1/3,1/9")->required();
        add_config(moran);
        auto* moran_out = add_out(moran);
        moran->callback([ratios, tol, moran_out] {
            RatioSet rs{{}, RatioProvenance::moran};
            for (const auto& tok : split_list(*ratios))
                rs.ratios.push_back(Rational::from_string(tok).to_double());
            print_dim(moran_out->stream(), solve_moran(rs, *tol));
        });

        auto* su = dim->add_subcommand("su", "dimension of the restricted set S_(P_s,u)");
        auto su_law = std::make_shared<LawOpts>();
        auto su_u = std::make_shared<int>();
        su_law->attach(su);
        su->add_option("--u", *su_u, "excluded digit u")->required();
        add_config(su);
        auto* su_out = add_out(su);
        su->callback([su_law, su_u, tol, su_out] {
            print_dim(su_out->stream(), dim_su(SuSetSpec(su_law->law(), *su_u), *tol));
        });

        auto* thm1 = dim->add_subcommand("thm1", "uniform-law special case, ratios (1/s)^p");
        auto t1_s = std::make_shared<int>();
        auto t1_u = std::make_shared<int>();
        thm1->add_option("--s", *t1_s, "base s")->required();
        thm1->add_option("--u", *t1_u, "excluded digit u")->required();
        add_config(thm1);
        auto* t1_out = add_out(thm1);
        thm1->callback([t1_s, t1_u, tol, t1_out] {
            print_dim(t1_out->stream(), dim_thm1(*t1_s, *t1_u, *tol));
        });

        auto* thm2 = dim->add_subcommand("thm2", "combination-count equation sum N_k y^k = 1");
        auto t2_s = std::make_shared<int>();
        auto counts = std::make_shared<std::string>();
        thm2->add_option("--s", *t2_s, "base s")->required();
        thm2->add_option("--counts", *counts, "length:count pairs, e.g. 1:2,2:1")->required();
        add_config(thm2);
        auto* t2_out = add_out(thm2);
        thm2->callback([t2_s, counts, tol, t2_out] {
            std::vector<std::pair<int, long>> parsed;
            for (const auto& tok : split_list(*counts)) {
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    raise(errc::parse_error, "--counts entries are k:N, got '" + tok + "'");
                parsed.emplace_back(std::stoi(tok.substr(0, colon)),
                                    std::stol(tok.substr(colon + 1)));
            }
            print_dim(t2_out->stream(), dim_thm2(*t2_s, parsed, *tol));
        });

        auto* combo = dim->add_subcommand("combo", "dimension of a combination set");
        auto c_law = std::make_shared<LawOpts>();
        auto c_combos = std::make_shared<std::string>();
        c_law->attach(combo);
        combo->add_option("--combos", *c_combos, "combination alphabet, e.g. 0,2")->required();
        add_config(combo);
        auto* c_out = add_out(combo);
        combo->callback([c_law, c_combos, tol, c_out] {
            auto P = c_law->law();
            auto xi = validate_combo_alphabet(P, parse_combo_list(*c_combos, P.base()));
            print_dim(c_out->stream(), dim_combo(xi, *tol));
        });
    }

    // cover-sum
    {
        auto* cmd = app.add_subcommand("cover-sum",
                                       "sum (length/d)^alpha over a level-k cover");
        auto choice = std::make_shared<SetChoice>();
        auto level = std::make_shared<int>(1);
        auto alpha = std::make_shared<double>(-1.0);
        auto scan = std::make_shared<std::string>();
        choice->attach(cmd);
        cmd->add_option("--level", *level, "cover level k (default 1)");
        cmd->add_option("--alpha", *alpha, "exponent alpha");
        cmd->add_option("--scan", *scan, "alpha scan lo:hi:steps, CSV output");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([choice, level, alpha, scan, out] {
            auto cover = choice->cover(*level, kDefaultCoverCap, false);
            Rational d = choice->bounds().length();
            auto& os = out->stream();
            if (!scan->empty()) {
                auto parts = split_list(*scan, ':');
                if (parts.size() != 3)
                    raise(errc::parse_error, "--scan must be lo:hi:steps");
                double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
                int steps = std::stoi(parts[2]);
                if (steps < 2) raise(errc::parse_error, "--scan needs >= 2 steps");
                os << "alpha,cover_sum\n";
                for (int i = 0; i < steps; ++i) {
                    double a = lo + (hi - lo) * i / (steps - 1);
                    os << fmt_sig(a, 15) << "," << fmt_sig(cover_sum(cover, a, d), 15) << "\n";
                }
            } else {
                if (*alpha < 0) raise(errc::parse_error, "need --alpha or --scan");
                os << fmt_sig(cover_sum(cover, *alpha, d), 15) << "\n";
            }
        });
    }

    // boxdim
    {
        auto* cmd = app.add_subcommand("boxdim", "box-counting dimension estimate of a cover");
        auto choice = std::make_shared<SetChoice>();
        auto level = std::make_shared<int>(6);
        auto grid_base = std::make_shared<int>(3);
        auto grid_levels = std::make_shared<std::string>("4,5,6,7,8");
        choice->attach(cmd);
        cmd->add_option("--level", *level, "cover level k to rasterize (default 6)");
        cmd->add_option("--grid-base", *grid_base, "grid refinement base (default 3)");
        cmd->add_option("--grid-levels", *grid_levels, "grid levels, e.g. 4,5,6,7,8");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([choice, level, grid_base, grid_levels, out] {
            auto cover = choice->cover(*level, kDefaultCoverCap, false);
            std::vector<int> levels;
            for (const auto& tok : split_list(*grid_levels)) levels.push_back(std::stoi(tok));
            out->stream() << fmt_sig(box_dim_estimate(cover, *grid_base, levels), 15) << "\n";
        });
    }

    // sample
    {
        auto* cmd = app.add_subcommand("sample", "draw truncated realizations of eta");
        auto law = std::make_shared<LawOpts>();
        auto depth = std::make_shared<int>(40);
        auto n = std::make_shared<std::size_t>(10);
        auto seed = std::make_shared<std::uint64_t>(0);
        law->attach(cmd);
        cmd->add_option("--depth", *depth, "digits per sample (default 40)");
        cmd->add_option("--n", *n, "number of samples (default 10)");
        cmd->add_option("--seed", *seed, "PRNG seed (default 0)");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([law, depth, n, seed, out] {
            auto batch = sample_eta(law->law(), *depth, *n, *seed);
            auto& os = out->stream();
            os << "index,value,value_float\n";
            for (std::size_t i = 0; i < batch.values.size(); ++i)
                os << i << "," << batch.values[i].str() << ","
                   << fmt_sig(batch.values[i].to_double(), 15) << "\n";
        });
    }

    // ks
    {
        auto* cmd = app.add_subcommand("ks", "Kolmogorov-Smirnov distance of a batch to f");
        auto law = std::make_shared<LawOpts>();
        auto depth = std::make_shared<int>(40);
        auto n = std::make_shared<std::size_t>(10000);
        auto seed = std::make_shared<std::uint64_t>(0);
        law->attach(cmd);
        cmd->add_option("--depth", *depth, "digits per sample (default 40)");
        cmd->add_option("--n", *n, "number of samples (default 10000)");
        cmd->add_option("--seed", *seed, "PRNG seed (default 0)");
        add_config(cmd);
        auto* out = add_out(cmd);
        cmd->callback([law, depth, n, seed, out] {
            auto batch = sample_eta(law->law(), *depth, *n, *seed);
            double d = ks_distance(batch);
            auto& os = out->stream();
            os << "ks_distance = " << fmt_sig(d, 6) << "\n";
            os << "critical_value = "
               << fmt_sig(1.36 / std::sqrt(static_cast<double>(*n)), 6) << "\n";
        });
    }

    auto args = expand_config_args(app, argc, argv);
    std::vector<const char*> argp;
    argp.reserve(args.size());
    for (const auto& a : args) argp.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argp.size()), argp.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_cap_exceeded() ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
