// Python surface of the library. Exact values cross the boundary as
// "num/den" strings so nothing is lost to floating point; callers can feed
// them straight into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moranrep/cylinders.hpp"
#include "moranrep/dimension.hpp"
#include "moranrep/error.hpp"
#include "moranrep/fractal_sets.hpp"
#include "moranrep/numrep.hpp"
#include "moranrep/stochastic.hpp"

#include <string>
#include <vector>

namespace py = pybind11;
using namespace moranrep;

namespace {

ProbVector law(const std::vector<std::string>& p) {
    std::vector<Rational> probs;
    probs.reserve(p.size());
    for (const auto& tok : p) probs.push_back(Rational::from_string(tok));
    const int s = static_cast<int>(probs.size());
    return ProbVector::validate(s, std::move(probs));
}

Rational rat(const std::string& text) { return Rational::from_string(text); }

DigitWord word(const ProbVector& P, const std::vector<int>& digits) {
    return DigitWord(P.base(), digits);
}

CombinationAlphabet combo_alphabet(const ProbVector& P, const std::vector<std::string>& combos) {
    std::vector<DigitWord> words;
    words.reserve(combos.size());
    for (const auto& c : combos) words.push_back(DigitWord::parse(c, P.base()));
    return validate_combo_alphabet(P, std::move(words));
}

py::dict dim_dict(const DimensionResult& r) {
    py::dict d;
    d["alpha0"] = r.alpha0;
    d["residual"] = r.residual;
    d["iterations"] = r.iterations;
    d["bracket"] = py::make_tuple(r.bracket.first, r.bracket.second);
    d["degenerate"] = r.degenerate;
    return d;
}

py::list cover_list(const CoverLevel& cover) {
    py::list rows;
    for (const auto& [base, iv] : cover.intervals)
        rows.append(py::make_tuple(base.str(), iv.lo.str(), iv.hi.str(), iv.length().str()));
    return rows;
}

} // namespace

PYBIND11_MODULE(_moranrep, m) {
    m.doc() = "P-representation of [0,1]: singular distribution function, restricted "
              "Moran-type sets, covers and Hausdorff dimension (exact rationals as "
              "'num/den' strings)";

    py::register_exception<Error>(m, "MoranrepError");

    // numeral-system codecs
    m.def("decode_sadic",
          [](const std::string& seq, int s) {
              return decode_sadic(EventuallyPeriodicSeq::parse(seq, s)).str();
          },
          py::arg("seq"), py::arg("s"), "value of an s-adic digit sequence 'pre(per)'");
    m.def("decode_negasadic",
          [](const std::string& seq, int s) {
              return decode_negasadic(EventuallyPeriodicSeq::parse(seq, s)).str();
          },
          py::arg("seq"), py::arg("s"));
    m.def("encode_sadic",
          [](const std::string& x, int s, int depth) {
              auto r = encode_sadic(rat(x), s, depth);
              return py::make_tuple(r.digits.digits, r.exact);
          },
          py::arg("x"), py::arg("s"), py::arg("depth"),
          "first digits of the terminating-preferred s-adic expansion");
    m.def("dual_sadic_forms",
          [](const std::string& x, int s) -> py::object {
              auto forms = dual_sadic_forms(rat(x), s);
              if (!forms) return py::none();
              return py::make_tuple(forms->first.str(), forms->second.str());
          },
          py::arg("x"), py::arg("s"));
    m.def("decode_p",
          [](const std::string& seq, const std::vector<std::string>& p) {
              auto P = law(p);
              return decode_p(EventuallyPeriodicSeq::parse(seq, P.base()), P).str();
          },
          py::arg("seq"), py::arg("p"), "value of a P-representation digit sequence");

    // distribution function
    m.def("eval_f",
          [](const std::string& x, const std::vector<std::string>& p, int depth) {
              auto r = eval_f(rat(x), law(p), depth);
              return py::make_tuple(r.value.str(), r.tail_bound.str());
          },
          py::arg("x"), py::arg("p"), py::arg("depth") = kDefaultDepth,
          "(value, tail_bound); tail_bound '0/1' means exact");
    m.def("invert_f",
          [](const std::string& y, const std::vector<std::string>& p, int depth) {
              return invert_f(rat(y), law(p), depth).digits;
          },
          py::arg("y"), py::arg("p"), py::arg("depth"));

    // cylinders
    m.def("p_cyl_bounds",
          [](const std::vector<std::string>& p, const std::vector<int>& base) {
              auto P = law(p);
              auto iv = p_cyl_bounds(Cylinder(P, word(P, base)));
              return py::make_tuple(iv.lo.str(), iv.hi.str());
          },
          py::arg("p"), py::arg("base"));
    m.def("ru_cyl_bounds",
          [](const std::vector<std::string>& p, int u, const std::vector<int>& base) {
              auto P = law(p);
              auto iv = ru_cyl_bounds(RestrictedCylinder(P, u, word(P, base)));
              return py::make_tuple(iv.lo.str(), iv.hi.str());
          },
          py::arg("p"), py::arg("u"), py::arg("base"));
    m.def("ru_cyl_diameter",
          [](const std::vector<std::string>& p, int u, const std::vector<int>& base) {
              auto P = law(p);
              return ru_cyl_diameter(RestrictedCylinder(P, u, word(P, base))).str();
          },
          py::arg("p"), py::arg("u"), py::arg("base"));
    m.def("ru_cyl_ratio",
          [](const std::vector<std::string>& p, int u, const std::vector<int>& base, int next) {
              auto P = law(p);
              return ru_cyl_ratio(RestrictedCylinder(P, u, word(P, base)), next).str();
          },
          py::arg("p"), py::arg("u"), py::arg("base"), py::arg("next"));
    m.def("gap_sign",
          [](const std::vector<std::string>& p, int u, const std::vector<int>& base, int pdigit) {
              auto P = law(p);
              return std::string(
                  gap_sign_name(gap_sign(RestrictedCylinder(P, u, word(P, base)), pdigit)));
          },
          py::arg("p"), py::arg("u"), py::arg("base"), py::arg("pdigit"),
          "'ascending' (sup(p) < inf(p+1)) or 'descending' (inf(p) > sup(p+1))");

    // restricted sets and combination sets
    m.def("su_block_word",
          [](int alpha, int u, int s) { return su_block_word(alpha, u, s).digits; },
          py::arg("alpha"), py::arg("u"), py::arg("s"));
    m.def("parse_su_digits",
          [](const std::vector<int>& w, int u, int s) {
              auto r = parse_su_digits(DigitWord(s, w), u);
              return py::make_tuple(r.alphas, r.remainder.digits);
          },
          py::arg("w"), py::arg("u"), py::arg("s"),
          "(alphas, trailing incomplete u-run); raises MoranrepError when w is "
          "not a prefix of any element stream");
    m.def("set_bounds_su",
          [](const std::vector<std::string>& p, int u) {
              auto iv = set_bounds_su(SuSetSpec(law(p), u));
              return py::make_tuple(iv.lo.str(), iv.hi.str());
          },
          py::arg("p"), py::arg("u"));
    m.def("set_bounds_combo",
          [](const std::vector<std::string>& p, const std::vector<std::string>& combos) {
              auto P = law(p);
              auto iv = set_bounds_combo(combo_alphabet(P, combos));
              return py::make_tuple(iv.lo.str(), iv.hi.str());
          },
          py::arg("p"), py::arg("combos"));
    m.def("gamma_u",
          [](const std::vector<std::string>& p, int u) {
              return gamma_u(SuSetSpec(law(p), u)).str();
          },
          py::arg("p"), py::arg("u"));
    m.def("cover_measure_su",
          [](const std::vector<std::string>& p, int u, int k) {
              return cover_measure_su(SuSetSpec(law(p), u), k).str();
          },
          py::arg("p"), py::arg("u"), py::arg("k"));
    m.def("level_cover_su",
          [](const std::vector<std::string>& p, int u, int k, bool parallel) {
              return cover_list(level_cover_su(SuSetSpec(law(p), u), k, kDefaultCoverCap,
                                               parallel));
          },
          py::arg("p"), py::arg("u"), py::arg("k"), py::arg("parallel") = false,
          "rows (base_word, lo, hi, length), base-word order");
    m.def("level_cover_combo",
          [](const std::vector<std::string>& p, const std::vector<std::string>& combos, int k,
             bool parallel) {
              auto P = law(p);
              return cover_list(
                  level_cover_combo(combo_alphabet(P, combos), k, kDefaultCoverCap, parallel));
          },
          py::arg("p"), py::arg("combos"), py::arg("k"), py::arg("parallel") = false);
    m.def("member_su",
          [](const std::string& x, const std::vector<std::string>& p, int u, int k) {
              return member_su(rat(x), SuSetSpec(law(p), u), k);
          },
          py::arg("x"), py::arg("p"), py::arg("u"), py::arg("k"));
    m.def("member_combo",
          [](const std::string& x, const std::vector<std::string>& p,
             const std::vector<std::string>& combos, int k) {
              auto P = law(p);
              return member_combo(rat(x), combo_alphabet(P, combos), k);
          },
          py::arg("x"), py::arg("p"), py::arg("combos"), py::arg("k"));

    // dimension
    m.def("solve_moran",
          [](const std::vector<double>& ratios, double tol) {
              return dim_dict(solve_moran(RatioSet{ratios, RatioProvenance::moran}, tol));
          },
          py::arg("ratios"), py::arg("tol") = kDefaultDimTol);
    m.def("dim_su",
          [](const std::vector<std::string>& p, int u, double tol) {
              return dim_dict(dim_su(SuSetSpec(law(p), u), tol));
          },
          py::arg("p"), py::arg("u"), py::arg("tol") = kDefaultDimTol);
    m.def("dim_thm1",
          [](int s, int u, double tol) { return dim_dict(dim_thm1(s, u, tol)); },
          py::arg("s"), py::arg("u"), py::arg("tol") = kDefaultDimTol);
    m.def("dim_thm2",
          [](int s, const std::vector<std::pair<int, long>>& counts, double tol) {
              return dim_dict(dim_thm2(s, counts, tol));
          },
          py::arg("s"), py::arg("counts"), py::arg("tol") = kDefaultDimTol,
          "counts: [(word_length, how_many), ...]");
    m.def("dim_combo",
          [](const std::vector<std::string>& p, const std::vector<std::string>& combos,
             double tol) {
              auto P = law(p);
              return dim_dict(dim_combo(combo_alphabet(P, combos), tol));
          },
          py::arg("p"), py::arg("combos"), py::arg("tol") = kDefaultDimTol);
    m.def("cover_sum_su",
          [](const std::vector<std::string>& p, int u, int k, double alpha) {
              SuSetSpec spec(law(p), u);
              return cover_sum(level_cover_su(spec, k), alpha, set_bounds_su(spec).length());
          },
          py::arg("p"), py::arg("u"), py::arg("k"), py::arg("alpha"));
    m.def("box_dim_combo",
          [](const std::vector<std::string>& p, const std::vector<std::string>& combos, int k,
             int grid_base, const std::vector<int>& levels) {
              auto P = law(p);
              return box_dim_estimate(level_cover_combo(combo_alphabet(P, combos), k),
                                      grid_base, levels);
          },
          py::arg("p"), py::arg("combos"), py::arg("k"), py::arg("grid_base"),
          py::arg("levels"));
    m.def("box_dim_su",
          [](const std::vector<std::string>& p, int u, int k, int grid_base,
             const std::vector<int>& levels) {
              return box_dim_estimate(level_cover_su(SuSetSpec(law(p), u), k), grid_base,
                                      levels);
          },
          py::arg("p"), py::arg("u"), py::arg("k"), py::arg("grid_base"), py::arg("levels"));

    // sampling
    m.def("sample_eta",
          [](const std::vector<std::string>& p, int depth, std::size_t n, std::uint64_t seed) {
              auto batch = sample_eta(law(p), depth, n, seed);
              std::vector<std::string> values;
              values.reserve(batch.values.size());
              for (const auto& v : batch.values) values.push_back(v.str());
              return values;
          },
          py::arg("p"), py::arg("depth"), py::arg("n"), py::arg("seed"),
          "exact truncated realizations as rational strings");
    m.def("ks_distance",
          [](const std::vector<std::string>& p, int depth, std::size_t n, std::uint64_t seed) {
              return ks_distance(sample_eta(law(p), depth, n, seed));
          },
          py::arg("p"), py::arg("depth"), py::arg("n"), py::arg("seed"));

#ifdef VERSION_INFO
#define STR_IMPL(x) #x
#define STR(x) STR_IMPL(x)
    m.attr("__version__") = STR(VERSION_INFO);
#undef STR
#undef STR_IMPL
#else
    m.attr("__version__") = "dev";
#endif
}
