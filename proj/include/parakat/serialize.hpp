#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "parakat/polys.hpp"

namespace parakat {

using Json = nlohmann::ordered_json;

// Text forms use the semicolon carrel display, e.g. "(2,7,5;8,6,6,9,9;9)".
std::string to_text(const RSubset& r);
std::string to_text(const RTuple& t);
std::string to_text(const RPermutation& p);
std::string to_text(const CriticalList& c);
std::string to_text(const RChain& b);
std::string to_text(const Shape& s);
/// Columns separated by '|', e.g. "(1,3|3)".
std::string to_text(const Tableau& t);
std::string to_text(const Classification& c);
std::string join_ints(const std::vector<int>& v, char sep = ',');

Json to_json(const RTuple& t);
Json to_json(const RPermutation& p);
Json to_json(const CriticalList& c);
Json to_json(const RChain& b);
Json to_json(const Shape& s);
Json to_json(const Tableau& t);
Json to_json(const TableauSet& s);
Json to_json(const Polynomial& p);
Json to_json(const Classification& c);

RTuple tuple_from_json(const Json& j);
RPermutation perm_from_json(const Json& j);
CriticalList critlist_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
Polynomial poly_from_json(const Json& j);

// CSV: a header line followed by data rows; list fields are space separated.
std::string to_csv(const RTuple& t);
std::string to_csv(const RPermutation& p);
std::string to_csv(const CriticalList& c);
std::string to_csv(const Tableau& t);
std::string to_csv(const TableauSet& s);
std::string to_csv(const Polynomial& p);
std::string to_csv(const Classification& c);

/// Parses "1,2,3", "(1,2;3)" or "1 2 3". Semicolons are reported as the
/// positions where a carrel closes (the dividers) through *dividers when
/// non-null. Throws InvalidArgument.
std::vector<int> parse_int_list(std::string_view text, std::vector<int>* dividers = nullptr);

} // namespace parakat
