#include "chaincalc/format.hpp"

#include <charconv>

#include "chaincalc/dot_diagram.hpp"
#include "chaincalc/wahl.hpp"

namespace chaincalc {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::int64_t parse_number(const std::string& token) {
  if (token.empty()) fail(Errc::ParseError, "empty chain entry");
  for (char c : token) {
    if (c < '0' || c > '9')
      fail(Errc::ParseError, "bad character in chain entry '" + token + "'");
  }
  if (token.size() > 1 && token.front() == '0')
    fail(Errc::ParseError, "leading zero in chain entry '" + token + "'");
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range)
    fail(Errc::Overflow, "chain entry '" + token + "' exceeds 64-bit range");
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(Errc::ParseError, "bad chain entry '" + token + "'");
  return value;
}

}  // namespace

std::string render_entries(const std::vector<std::int64_t>& entries) {
  std::string out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k > 0) out.push_back(',');
    out += std::to_string(entries[k]);
  }
  return out;
}

std::string render_chain(const HJChain& chain) {
  return render_entries(chain.entries());
}

std::string render_chain(const GeneralChain& chain) {
  return render_entries(chain.entries());
}

std::vector<std::int64_t> parse_entries(const std::string& text) {
  if (text.empty()) fail(Errc::ParseError, "empty chain");
  std::vector<std::int64_t> out;
  for (const std::string& token : split(text, ','))
    out.push_back(parse_number(token));
  return out;
}

HJChain parse_hj_chain(const std::string& text) {
  return HJChain(parse_entries(text));
}

GeneralChain parse_general_chain(const std::string& text) {
  return GeneralChain(parse_entries(text));
}

std::string render_mk1a(const MK1AData& data) {
  std::string out;
  for (std::size_t k = 0; k < data.chain.size(); ++k) {
    if (k > 0) out.push_back(',');
    if (k + 1 == data.underline) out.push_back('*');
    out += std::to_string(data.chain.at(k));
  }
  return out;
}

MK1AData parse_mk1a(const std::string& text) {
  if (text.empty()) fail(Errc::ParseError, "empty mk1A data");
  std::vector<std::int64_t> entries;
  std::size_t underline = 0;
  std::vector<std::string> tokens = split(text, ',');
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    std::string token = tokens[k];
    if (!token.empty() && token.front() == '*') {
      if (underline != 0)
        fail(Errc::ParseError, "mk1A data has more than one '*' marker");
      underline = k + 1;
      token.erase(token.begin());
    }
    entries.push_back(parse_number(token));
  }
  if (underline == 0)
    fail(Errc::ParseError, "mk1A data needs a '*' marker on one entry");
  return MK1AData{HJChain(std::move(entries)), underline};
}

std::string render_configuration(const ConfigurationChain& config) {
  std::string cplus, b, c, a;
  auto append = [](std::string& part, std::int64_t w) {
    if (!part.empty()) part.push_back(',');
    part += std::to_string(w);
  };
  bool has_cplus = false;
  for (std::size_t k = 0; k < config.roles.size(); ++k) {
    switch (config.roles[k].role) {
      case Role::CPlus:
        has_cplus = true;
        append(cplus, config.weights[k]);
        break;
      case Role::B: append(b, config.weights[k]); break;
      case Role::C: append(c, config.weights[k]); break;
      case Role::A: append(a, config.weights[k]); break;
    }
  }
  std::string out;
  if (has_cplus) out = cplus + ";";
  out += b + ";" + c + ";" + a;
  return out;
}

ConfigurationChain parse_configuration(const std::string& text) {
  std::vector<std::string> parts = split(text, ';');
  if (parts.size() != 3 && parts.size() != 4)
    fail(Errc::ParseError,
         "configuration needs 3 parts (B;C;A) or 4 (C+;B;C;A)");
  const bool has_cplus = parts.size() == 4;
  const std::string& cplus = has_cplus ? parts[0] : std::string{};
  const std::string& b = parts[has_cplus ? 1 : 0];
  const std::string& c = parts[has_cplus ? 2 : 1];
  const std::string& a = parts[has_cplus ? 3 : 2];

  ConfigurationChain config;
  auto push = [&config](const std::string& part, Role role) {
    if (part.empty()) return;
    std::int64_t index = 0;
    for (const std::string& token : split(part, ',')) {
      config.weights.push_back(parse_number(token));
      config.roles.push_back(
          RoleTag{role, role == Role::C ? 0 : ++index});
    }
  };
  push(cplus, Role::CPlus);
  push(b, Role::B);
  push(c, Role::C);
  // A labels descend from the dual length when the B part is a fresh class-W
  // chain; they are presentation only and excluded from equality.
  std::size_t a_count = a.empty() ? 0 : split(a, ',').size();
  if (a_count > 0) {
    std::int64_t label = static_cast<std::int64_t>(a_count);
    if (!config.b_weights().empty()) {
      HJChain b_chain(config.b_weights());
      if (is_class_w(b_chain))
        label = static_cast<std::int64_t>(dual_chain(b_chain).size());
    }
    for (const std::string& token : split(a, ',')) {
      config.weights.push_back(parse_number(token));
      config.roles.push_back(RoleTag{Role::A, label--});
    }
  }
  config.validate();
  return config;
}

}  // namespace chaincalc
