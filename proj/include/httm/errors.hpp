#pragma once

#include <stdexcept>

namespace httm {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : error { using error::error; };
struct format_error : error { using error::error; };
struct length_error : error { using error::error; };
struct geometry_error : error { using error::error; };
struct validation_error : error { using error::error; };
struct degenerate_partition_error : error { using error::error; };
struct budget_error : error { using error::error; };
struct layout_error : error { using error::error; };
struct plan_error : error { using error::error; };
struct dimension_error : error { using error::error; };
struct undefined_quality_error : error { using error::error; };
struct guard_error : error { using error::error; };
struct config_error : error { using error::error; };

}  // namespace httm
