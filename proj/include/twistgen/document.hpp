#ifndef TWISTGEN_DOCUMENT_HPP
#define TWISTGEN_DOCUMENT_HPP

#include <string>

#include "twistgen/verify.hpp"

namespace twistgen {

/// On-disk form of a constructed family. All numeric leaves travel as
/// strings (arbitrary precision); rational functions travel as
/// canonical factored strings, never expanded.
struct FamilyDocument {
  std::string schema_version = "1";
  TwistFamily family;
  std::optional<VerificationReport> verification;
};

/// Deterministic serialization: fixed key order, 2-space indent,
/// trailing newline. Identical documents give identical bytes.
std::string document_to_string(const FamilyDocument& doc);

/// A bare verification report as deterministic JSON.
std::string report_to_string(const VerificationReport& report);

/// Parses and validates; throws InputError on malformed documents.
FamilyDocument document_from_string(const std::string& text);

FamilyDocument document_load(const std::string& path);
void document_save(const FamilyDocument& doc, const std::string& path);

}  // namespace twistgen

#endif
