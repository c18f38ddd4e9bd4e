#pragma once

#include "fermisea/types.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fermisea::cli {

enum ExitCode : int {
    exit_ok                  = 0,
    exit_verification_failed = 1,
    exit_usage               = 2,
    exit_input_format        = 3,
};

/// Malformed input file or value.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs the command line. `argv[0]` is the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// 12 significant digits, '.' decimal separator, independent of locale.
[[nodiscard]] std::string format_number(double value);

/// One complex entry: `re`, `re+imj`, `re-imj`, `imj`, optionally in parentheses.
[[nodiscard]] cplx parse_complex(std::string_view token);

/// Square matrix text: first line D, then D rows of D complex entries.
[[nodiscard]] CMatrix parse_matrix(std::istream &in);
[[nodiscard]] CMatrix read_matrix_file(const std::string &path);

/// "1,2,5" (1-based) -> {0,1,4}.
[[nodiscard]] std::vector<Index> parse_site_list(std::string_view text);

/// Comma separated reals, e.g. "0.5,1,10".
[[nodiscard]] std::vector<double> parse_real_list(std::string_view text);

} // namespace fermisea::cli
