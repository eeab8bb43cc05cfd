#include "etaq/parse.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

long parse_long(std::string_view token, std::size_t at, const char* what) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
        throw parse_error(std::string("expected ") + what + ", got '" + std::string(token) + "'", at);
    return value;
}

}  // namespace

EtaQuotient parse_quotient(std::string_view text) {
    if (text.empty()) throw parse_error("empty quotient descriptor", 0);
    std::vector<long> m;
    std::vector<long> delta;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view entry =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t colon = entry.find(':');
        if (colon == std::string_view::npos)
            throw parse_error("expected 'm:exponent'", pos);
        long mv = parse_long(entry.substr(0, colon), pos, "a positive integer m");
        if (mv < 1) throw parse_error("m must be a positive integer", pos);
        if (std::find(m.begin(), m.end(), mv) != m.end())
            throw parse_error("duplicate m = " + std::to_string(mv), pos);
        long dv = parse_long(entry.substr(colon + 1), pos + colon + 1, "a nonzero integer exponent");
        if (dv == 0) throw parse_error("zero exponent for m = " + std::to_string(mv), pos + colon + 1);
        m.push_back(mv);
        delta.push_back(dv);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return EtaQuotient(std::move(m), std::move(delta));
}

std::string format_quotient(const EtaQuotient& eq) {
    std::string out;
    for (std::size_t r = 0; r < eq.size(); ++r) {
        if (r > 0) out += ',';
        out += std::to_string(eq.m()[r]);
        out += ':';
        out += std::to_string(eq.delta()[r]);
    }
    return out;
}

}  // namespace etaq
