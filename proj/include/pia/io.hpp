// Text formats (Cayley tables, G-set files, Rees spec files) and
// deterministic report emission.
#ifndef PIA_IO_HPP
#define PIA_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "pia/constructors.hpp"
#include "pia/gset.hpp"
#include "pia/semigroup.hpp"

namespace pia {

// Cayley format: line 1 = n, then n rows of n indices; optional trailing
// "# labels: a b c" line.
FiniteSemigroup parse_table(const std::string& text);
std::string format_table(const FiniteSemigroup& s);

// group table block, blank line, |X| line, |G| action rows
GSet parse_gset(const std::string& text);
std::string format_gset(const GSet& gs);

// group table block, blank line, "|I| |Lambda|" line, |Lambda| sandwich rows
ReesSpec parse_rees(const std::string& text);
std::string format_rees(const ReesSpec& spec);

// catalog name or literal table text
FiniteSemigroup semigroup_from_name_or_table(const std::string& input);

// Ordered key/value report; emission is byte-stable for equal content.
struct Report {
  std::string command;
  std::string digest;
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
};

std::string input_digest(const std::string& text);
std::string emit_text(const Report& r);
std::string emit_json(const Report& r);

} // namespace pia

#endif
