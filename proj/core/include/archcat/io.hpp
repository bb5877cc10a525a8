#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "archcat/category.hpp"
#include "archcat/preorder.hpp"
#include "archcat/semigroup.hpp"

namespace archcat {

// Malformed input document. `location` points at the first problem: a byte
// offset for syntax errors, a JSON-pointer-style path otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string location)
      : std::runtime_error(message + " (at " + location + ")"),
        location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

using ParsedInput = std::variant<CategoryData, PreorderData, SemigroupData>;

// Documents are JSON objects; the kind is recognized by field shape
// ("objects" → category, "add" → semigroup, "elements"+"pairs" → preorder).
// Unknown fields are rejected — strict by design, so typos fail loudly.
ParsedInput parse_input_text(const std::string& text);

CategoryData parse_category_text(const std::string& text);
PreorderData parse_preorder_text(const std::string& text);
SemigroupData parse_semigroup_text(const std::string& text);

// Canonical serializations. Parsing the output recovers the data exactly,
// except that a category's identity assignment comes back sorted by object
// name (it is a JSON object, whose key order is canonical).
std::string to_text(const CategoryData& data);
std::string to_text(const PreorderData& data);
std::string to_text(const SemigroupData& data);

// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace archcat
