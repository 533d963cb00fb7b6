#pragma once

#include <stdexcept>
#include <string>

namespace moranrep {

// Every failure the library can report, so callers (and the CLI) can
// dispatch on the kind instead of parsing messages.
enum class errc {
    wrong_length,
    non_positive_entry,
    sum_not_one,
    base_mismatch,
    out_of_range,
    invalid_base_digit,
    invalid_next_digit,
    invalid_alpha,
    not_in_set,
    too_large,
    prefix_conflict,
    empty_combo,
    empty_ratios,
    ratio_out_of_range,
    no_root,
    invalid_counts,
    degenerate_cover,
    parse_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

    // too_large is a computation cap, not an input problem; the CLI maps it
    // to a distinct exit code.
    bool is_cap_exceeded() const noexcept { return code_ == errc::too_large; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace moranrep
