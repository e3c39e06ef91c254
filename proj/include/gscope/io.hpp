#pragma once

// JSON forms of groups, tables and reports.  Key order is fixed so output is
// byte-stable for fixed inputs.
//
// Group input:
//   {"kind":"perm","degree":N,"generators":[[images...],...]}
//   {"kind":"mat4","field":{"m":M,"modulus":F},"generators":[[16 bitmasks],...]}

#include <string>
#include <vector>

#include "json.hpp"

#include "gscope/caps.hpp"
#include "gscope/chartab.hpp"
#include "gscope/gelfand.hpp"
#include "gscope/groups.hpp"

namespace gscope::io {

using Json = nlohmann::ordered_json;

groups::Ambient parse_ambient(const Json& doc);
/// Elements given as a JSON array (permutation image lists or 16-entry
/// matrices); `where` prefixes error messages.
std::vector<groups::Encoding> parse_elements(const Json& array, const groups::Ambient& ambient,
                                             const std::string& where);

groups::Group parse_group(const Json& doc, std::size_t cap = Caps{}.closure);
/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json read_json(const std::string& path_or_inline);
groups::Group parse_group_input(const std::string& path_or_inline, std::size_t cap = Caps{}.closure);

Json ambient_to_json(const groups::Ambient& ambient);
Json element_to_json(std::span<const groups::Word> words);
Json group_to_json(const groups::Group& group);

Json classes_to_json(const groups::ConjClasses& classes, const groups::Group& group);
Json table_to_json(const chartab::CharacterTable& table);
/// Aligned text view; values shown as symmetric residues in (-p/2, p/2].
std::string table_pretty(const chartab::CharacterTable& table);

Json sgp_report_to_json(const gelfand::SgpReport& report);
Json gelfand_report_to_json(const gelfand::GelfandReport& report);
Json scan_to_json(const gelfand::ScanResult& scan, const groups::Group& group);

}  // namespace gscope::io
