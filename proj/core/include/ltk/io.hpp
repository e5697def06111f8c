#pragma once

// Text forms of Lambda and Gamma elements (.f2elt) and the detection report schema.
//
//   lambda element := "0" | term ("+" term)*      term := "L[" int ("," int)* "]" | "L[]"
//   gamma element  := "0" | term ("+" term)*      term := "a(" int ("," int)* ")"
//
// Whitespace (including newlines) is insignificant; repeated terms cancel mod 2.
// Serialization writes terms in ascending lexicographic order joined by " + ".
//
// A document is an optional header of `key: value` lines (and `#` comment lines)
// followed by the element body. Recognized keys: name, kind (lambda | gamma), rank,
// bidegree ("s d"), role, note.

#include "ltk/gamma.hpp"
#include "ltk/lambda.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace ltk {

struct DetectionReport;

enum class ElementKind {
    Lambda,
    Gamma,
};

LambdaElement parse_lambda(std::string_view text);
GammaElement parse_gamma(std::string_view text, int rank);

std::string serialize(const LambdaElement& e);
std::string serialize(const GammaElement& e);
std::string serialize(const LambdaMonomial& m);
std::string serialize(const GammaMonomial& m);

struct ElementDocument {
    ElementKind kind = ElementKind::Lambda;
    /// Gamma documents only.
    int rank = 0;
    std::string body;
    std::map<std::string, std::string> header;

    std::optional<std::string> field(const std::string& key) const;
};

/// Splits header from body and checks the body against its grammar. The kind is taken from the
/// header, else inferred from the first body term; a gamma rank is inferred from the first term's
/// arity when absent.
ElementDocument parse_document(std::string_view text);
std::string serialize_document(const ElementDocument& doc);

LambdaElement lambda_from(const ElementDocument& doc);
GammaElement gamma_from(const ElementDocument& doc);

ElementDocument make_document(const LambdaElement& e, std::map<std::string, std::string> header = {});
ElementDocument make_document(const GammaElement& e, std::map<std::string, std::string> header = {});

ElementDocument read_document(const std::string& path);

enum class ReportFormat {
    Text,
    Json,
};

/// JSON: {"schema": 1, "input", "bidegree", "primitive", "psi_image", "is_cycle", "target",
/// "witness", "ext_dim", "verdict", ...}. Text carries the same content for humans.
std::string emit_report(const DetectionReport& report, ReportFormat format);

} // namespace ltk
