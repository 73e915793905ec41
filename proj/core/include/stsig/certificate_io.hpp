#pragma once

#include <string>

#include "stsig/reducer.hpp"

namespace stsig {

// Wire format, version 1:
//   { "version": 1, "input": [a,b,g], "canonical": "<class token>",
//     "steps": [ { "family": "A|B|C", "parent": [a,b,g], "n": int,
//                  "r": [..], "s": [..], "direction": "up|down",
//                  "from": [a,b,g], "to": [a,b,g] } ] }
// Loading checks structure only; mathematical validity is verify_certificate's
// job, so tampered files load and then fail verification.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace stsig
