#pragma once

#include <stdexcept>
#include <string>

namespace tslab {

/// Every failure mode an operation contract names. Tests match on these
/// instead of parsing messages.
enum class Errc {
    empty_dataset,
    gap_month,
    parse_error,
    invalid_window,
    empty_window,
    insufficient_overlap,
    series_too_short,
    unexpected_missing,
    incomplete_cycle,
    zero_variance,
    invalid_df,
    lag_exceeds_data,
    insufficient_data,
    missing_predictor,
    division_by_zero,
    window_mismatch,
    unknown_dataset,
    io_error,
    bad_argument,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

}  // namespace tslab
