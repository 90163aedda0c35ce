#include "tslab/error.hpp"

namespace tslab {

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::empty_dataset: return "empty dataset";
        case Errc::gap_month: return "gap month";
        case Errc::parse_error: return "parse error";
        case Errc::invalid_window: return "invalid window";
        case Errc::empty_window: return "empty window";
        case Errc::insufficient_overlap: return "insufficient overlap";
        case Errc::series_too_short: return "series too short";
        case Errc::unexpected_missing: return "unexpected missing value";
        case Errc::incomplete_cycle: return "incomplete cycle";
        case Errc::zero_variance: return "zero variance";
        case Errc::invalid_df: return "invalid degrees of freedom";
        case Errc::lag_exceeds_data: return "lag exceeds data";
        case Errc::insufficient_data: return "insufficient data";
        case Errc::missing_predictor: return "missing predictor";
        case Errc::division_by_zero: return "division by zero";
        case Errc::window_mismatch: return "window mismatch";
        case Errc::unknown_dataset: return "unknown dataset";
        case Errc::io_error: return "i/o error";
        case Errc::bad_argument: return "bad argument";
    }
    return "error";
}

}  // namespace tslab
