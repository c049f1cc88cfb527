#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subshift/forms.hpp"
#include "subshift/lang.hpp"

namespace subshift {

// alphabet: 0 1
// depth: 4
// 0000
// ...
std::string format_language(const TruncatedLanguage& L);
TruncatedLanguage parse_language(std::string_view text);

// A `meta: kind` block of `key: value` lines closed by `end`, followed by a
// language section.
struct MetaBlock {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> entries;

    const std::string* find(std::string_view key) const;
    const std::string& get(std::string_view key) const;  // ParseError if missing
};

// Splits text into its meta block (kind empty when absent) and the rest.
std::pair<MetaBlock, std::string_view> split_meta(std::string_view text);

struct NmcFile {
    NmcNormalForm form;
    TruncatedLanguage language;
};

std::string format_nmc(const NmcNormalForm& x, const TruncatedLanguage& L);
NmcFile parse_nmc(std::string_view text);

// The base language travels in the language section; Tau::base must be set.
std::string format_tau(const Tau& t);
Tau parse_tau(std::string_view text);

std::string read_text_file(const std::string& path);  // FileError
void write_text_file(const std::string& path, std::string_view content);

}  // namespace subshift
