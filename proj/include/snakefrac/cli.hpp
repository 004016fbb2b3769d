#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "snakefrac/contfrac.hpp"
#include "snakefrac/laurent.hpp"

namespace snakefrac {

// Everything the check verb computed, kept separate from formatting so the
// consistency rules are testable in isolation.
struct CheckReport {
    ContinuedFraction cf;
    mpz_class expected_count;                 // convergent numerator
    LaurentPolynomial formula;
    LaurentPolynomial graft;
    std::optional<LaurentPolynomial> oracle;  // absent when enumeration was skipped
    std::optional<std::size_t> matching_count;

    bool symbolic = true;                     // false: probe mode for huge inputs
    bool probes_agree = false;                // probe mode only

    bool consistent() const;
    std::string summary() const;              // "OK: 3 methods agree, 67 terms, N=67"
};

CheckReport cross_validate(const ContinuedFraction& cf, unsigned long long limit);

// Throws consistency_error when the report is inconsistent.
void require_consistent(const CheckReport& report);

// Exit-code contract: 0 success, 1 bad input, 2 enumeration limit, 3 broken
// mathematical invariant.
int cli_exit_code(const std::exception& e);

// args excludes the program name. Returns the process exit code.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace snakefrac
