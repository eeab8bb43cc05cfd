#pragma once

#include <string>
#include <string_view>

#include "etaq/quotient.hpp"

namespace etaq {

// Parses the textual descriptor "m1:d1,m2:d2,..." (e.g. "1:-2,2:3,10:-1").
// Duplicate m, zero exponents and malformed tokens raise parse_error with the
// byte offset of the offending token. parse_quotient(format_quotient(eq))
// reproduces eq, and format_quotient(parse_quotient(s)) == s on canonical
// descriptors.
EtaQuotient parse_quotient(std::string_view text);

std::string format_quotient(const EtaQuotient& eq);

}  // namespace etaq
