#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "basindim/funcat.hpp"

namespace basindim {

// Plain-text key/value form of a FunctionSpec, one `key=value` per line,
// `#` comments and blank lines ignored:
//
//   family=exp_lambda | erf_scaled   lambda_re, lambda_im
//   family=cosine                    a_re, a_im, b_re, b_im
//   family=pexpq                     p, q (coefficient lists), c_re, c_im
//
// Coefficient lists are comma-separated `re:im` pairs, constant term first,
// e.g. `q=0:0,0:0,-1:0` for -t^2. Imaginary parts default to 0 when the
// `_im` key is absent. Unknown keys, and keys that belong to another family,
// are rejected with std::invalid_argument.

FunctionSpec parse_function_config(std::istream& in);
FunctionSpec parse_function_config_text(std::string_view text);

/// Round-trips exactly through parse_function_config_text.
std::string serialize_function_config(const FunctionSpec& f);

/// Parses a `re:im,re:im,...` coefficient list.
Polynomial parse_coefficient_list(std::string_view text);
std::string format_coefficient_list(const Polynomial& p);

}  // namespace basindim
