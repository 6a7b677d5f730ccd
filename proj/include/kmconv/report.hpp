#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "kmconv/cartan.hpp"
#include "kmconv/eisenstein.hpp"
#include "kmconv/property.hpp"
#include "kmconv/weyl.hpp"

namespace kmconv {

using OrderedJson = nlohmann::ordered_json;

OrderedJson matrix_json(CartanMatrix const& cm);
OrderedJson word_json(Word const& w);
OrderedJson coords_json(RootVector const& v);
OrderedJson rationals_json(RatVec const& v);

// Shell tables print as CSV: `#`-prefixed metadata lines, a header row, then
// one row per shell with reals in fixed scientific form at `digits`
// significant digits.  The ratio column is empty where undefined.
void write_shell_table_csv(std::ostream& out, ShellTable const& table,
                           std::vector<std::pair<std::string, std::string>> const& meta,
                           unsigned digits);

// Certificate for a property check, self-contained (includes the matrix).
OrderedJson property_report_json(CartanMatrix const& cm, PropertyReport const& report);

// Re-validates a certificate produced by property_report_json: structural
// checks on every violation row plus a full recomputation.  Returns a
// verification report; `ok` reflects the verdict.
struct CertificateVerdict {
  bool ok = false;
  std::vector<std::string> problems;
};
CertificateVerdict verify_certificate(std::string const& json_text);
OrderedJson certificate_verdict_json(CertificateVerdict const& verdict);

}  // namespace kmconv
