#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaincalc/chain.hpp"
#include "chaincalc/flips.hpp"

namespace chaincalc {

// Chain text format: comma-separated base-10 integers, no spaces, no leading
// zeros, e.g. "2,2,5,4". The grammar is bit-exact.

std::string render_entries(const std::vector<std::int64_t>& entries);
std::string render_chain(const HJChain& chain);
std::string render_chain(const GeneralChain& chain);

std::vector<std::int64_t> parse_entries(const std::string& text);
HJChain parse_hj_chain(const std::string& text);
GeneralChain parse_general_chain(const std::string& text);

// mk1A data: one entry carries a '*' prefix marking the underline,
// e.g. "2,2,5,*4".
std::string render_mk1a(const MK1AData& data);
MK1AData parse_mk1a(const std::string& text);

// Configuration: semicolon-separated parts. Fresh configurations use
// "B;C;A" ("2,2,5,4;1;2,2"); configurations carrying C+ curves prepend a
// fourth leading segment ("2;2,5,3;1;2"). Empty parts are allowed.
std::string render_configuration(const ConfigurationChain& config);
ConfigurationChain parse_configuration(const std::string& text);

}  // namespace chaincalc
