#include "ltk/io.hpp"

#include "ltk/error.hpp"
#include "ltk/transfer.hpp"

#include <json.hpp>

#include <cctype>
#include <climits>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ltk {

namespace {

/// Recursive-descent reader over a text buffer; positions are reported against the whole buffer.
class Reader {
public:
    Reader(std::string_view text, std::size_t start = 0) : text_(text), pos_(start) {}

    bool at_end()
    {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail(std::string("expected '") + c + "', found end of input");
        if (text_[pos_] != c)
            fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
        ++pos_;
    }

    int integer(const char* what)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '-')
            fail(std::string("negative ") + what + " not allowed");
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > INT_MAX / 4)
                fail(std::string(what) + " too large");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    std::vector<int> int_list(char close, const char* what)
    {
        std::vector<int> out;
        if (peek() == close) {
            ++pos_;
            return out;
        }
        out.push_back(integer(what));
        while (peek() == ',') {
            ++pos_;
            out.push_back(integer(what));
        }
        expect(close);
        return out;
    }

    /// Parses `"0" | term ("+" term)*`, invoking on_term for each term.
    template <typename TermFn>
    void element(TermFn&& on_term)
    {
        if (at_end())
            fail("empty element");
        if (peek() == '0') {
            ++pos_;
            if (!at_end())
                fail(std::string("unexpected '") + text_[pos_] + "' after 0");
            return;
        }
        on_term(*this);
        while (!at_end()) {
            expect('+');
            on_term(*this);
        }
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column);
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_;
};

LambdaElement parse_lambda_at(std::string_view text, std::size_t start)
{
    Reader r(text, start);
    LambdaElement out;
    r.element([&out](Reader& rd) {
        rd.expect('L');
        rd.expect('[');
        out.toggle(LambdaMonomial(rd.int_list(']', "lambda index")));
    });
    return out;
}

GammaElement parse_gamma_at(std::string_view text, std::size_t start, int rank)
{
    if (rank < 1)
        throw std::invalid_argument("parse_gamma: rank must be >= 1");
    Reader r(text, start);
    GammaElement out(rank);
    r.element([&out, rank](Reader& rd) {
        rd.expect('a');
        rd.expect('(');
        auto exps = rd.int_list(')', "exponent");
        if (static_cast<int>(exps.size()) != rank)
            rd.fail("term has " + std::to_string(exps.size()) + " exponents, expected rank " + std::to_string(rank));
        out.toggle(GammaMonomial(std::move(exps)));
    });
    return out;
}

/// Arity of the first a(...) term in a gamma body, or 0.
int infer_rank(std::string_view body)
{
    const auto open = body.find('(');
    if (open == std::string_view::npos)
        return 0;
    const auto close = body.find(')', open);
    if (close == std::string_view::npos)
        return 0;
    int commas = 0;
    for (std::size_t i = open; i < close; ++i)
        if (body[i] == ',')
            ++commas;
    return commas + 1;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_header_line(std::string_view line)
{
    const auto colon = line.find(':');
    if (colon == std::string_view::npos || colon == 0)
        return false;
    for (std::size_t i = 0; i < colon; ++i) {
        const char c = line[i];
        if (!(std::islower(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    }
    return true;
}

} // namespace

LambdaElement parse_lambda(std::string_view text) { return parse_lambda_at(text, 0); }

GammaElement parse_gamma(std::string_view text, int rank) { return parse_gamma_at(text, 0, rank); }

std::string serialize(const LambdaMonomial& m)
{
    std::string out = "L[";
    for (int i = 0; i < m.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(m[static_cast<std::size_t>(i)]);
    }
    out += ']';
    return out;
}

std::string serialize(const GammaMonomial& m)
{
    std::string out = "a(";
    for (int i = 0; i < m.rank(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(m[static_cast<std::size_t>(i)]);
    }
    out += ')';
    return out;
}

namespace {

template <typename Element>
std::string serialize_terms(const Element& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& m : e) {
        if (!out.empty())
            out += " + ";
        out += serialize(m);
    }
    return out;
}

} // namespace

std::string serialize(const LambdaElement& e) { return serialize_terms(e); }
std::string serialize(const GammaElement& e) { return serialize_terms(e); }

std::optional<std::string> ElementDocument::field(const std::string& key) const
{
    if (auto it = header.find(key); it != header.end())
        return it->second;
    return std::nullopt;
}

ElementDocument parse_document(std::string_view text)
{
    ElementDocument doc;
    std::size_t pos = 0;
    std::size_t line_no = 1;
    while (pos < text.size()) {
        const auto eol = text.find('\n', pos);
        const std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') {
        } else if (is_header_line(t)) {
            const auto colon = t.find(':');
            std::string key(t.substr(0, colon));
            if (doc.header.contains(key))
                throw ParseError("duplicate header field '" + key + "'", line_no, 1);
            doc.header.emplace(std::move(key), std::string(trim(t.substr(colon + 1))));
        } else {
            break;
        }
        if (eol == std::string_view::npos) {
            pos = text.size();
            break;
        }
        pos = eol + 1;
        ++line_no;
    }
    const std::size_t body_start = pos;
    doc.body = std::string(trim(text.substr(body_start)));

    const auto kind = doc.field("kind");
    if (kind) {
        if (*kind == "lambda")
            doc.kind = ElementKind::Lambda;
        else if (*kind == "gamma")
            doc.kind = ElementKind::Gamma;
        else
            throw ParseError("unknown kind '" + *kind + "'", 1, 1);
    } else {
        doc.kind = (!doc.body.empty() && doc.body.front() == 'a') ? ElementKind::Gamma : ElementKind::Lambda;
    }

    if (doc.kind == ElementKind::Gamma) {
        if (auto r = doc.field("rank")) {
            try {
                doc.rank = std::stoi(*r);
            } catch (const std::exception&) {
                throw ParseError("rank is not an integer", 1, 1);
            }
        } else {
            doc.rank = infer_rank(doc.body);
        }
        if (doc.rank < 1)
            throw ParseError("gamma document needs a rank", 1, 1);
        parse_gamma_at(text, body_start, doc.rank);
    } else {
        parse_lambda_at(text, body_start);
    }
    return doc;
}

std::string serialize_document(const ElementDocument& doc)
{
    std::string out;
    for (const auto& [k, v] : doc.header)
        out += k + ": " + v + "\n";
    out += doc.body;
    out += "\n";
    return out;
}

LambdaElement lambda_from(const ElementDocument& doc)
{
    if (doc.kind != ElementKind::Lambda)
        throw std::invalid_argument("document holds a gamma element, expected lambda");
    return parse_lambda(doc.body);
}

GammaElement gamma_from(const ElementDocument& doc)
{
    if (doc.kind != ElementKind::Gamma)
        throw std::invalid_argument("document holds a lambda element, expected gamma");
    return parse_gamma(doc.body, doc.rank);
}

ElementDocument make_document(const LambdaElement& e, std::map<std::string, std::string> header)
{
    ElementDocument doc;
    doc.kind = ElementKind::Lambda;
    doc.body = serialize(e);
    doc.header = std::move(header);
    doc.header["kind"] = "lambda";
    return doc;
}

ElementDocument make_document(const GammaElement& e, std::map<std::string, std::string> header)
{
    ElementDocument doc;
    doc.kind = ElementKind::Gamma;
    doc.rank = e.rank();
    doc.body = serialize(e);
    doc.header = std::move(header);
    doc.header["kind"] = "gamma";
    doc.header["rank"] = std::to_string(e.rank());
    return doc;
}

ElementDocument read_document(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_document(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path, e);
    }
}

namespace {

using nlohmann::ordered_json;

ordered_json optional_element(const std::optional<LambdaElement>& e)
{
    return e ? ordered_json(serialize(*e)) : ordered_json(nullptr);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string emit_report(const DetectionReport& r, ReportFormat format)
{
    if (format == ReportFormat::Json) {
        ordered_json j;
        j["schema"] = 1;
        j["input"] = r.input_name;
        j["bidegree"] = {r.bidegree.s, r.bidegree.d};
        ordered_json squares = ordered_json::array();
        for (const auto& c : r.primitivity.checks)
            squares.push_back({{"square", c.square}, {"image", serialize(c.image)}});
        j["primitive"] = {{"passed", r.verdict == Verdict::Trivial || r.primitivity.primitive}, {"squares", squares}};
        j["psi_image"] = serialize(r.psi_image);
        j["is_cycle"] = r.psi_is_cycle;
        j["target"] = {{"name", r.target_name}, {"element", serialize(r.target)}, {"nonzero", r.target_nonzero}};
        j["witness"] = optional_element(r.witness);
        j["ext_dim"] = r.ext_dimension ? ordered_json(*r.ext_dimension) : ordered_json(nullptr);
        j["expected_ext_dim"] =
            r.expected_ext_dimension ? ordered_json(*r.expected_ext_dimension) : ordered_json(nullptr);
        if (r.psi_matches_expected)
            j["psi_exact"] = *r.psi_matches_expected;
        ordered_json eqs = ordered_json::array();
        for (const auto& e : r.equivalences)
            eqs.push_back({{"name", e.name}, {"element", serialize(e.element)}, {"same", e.same},
                           {"witness", optional_element(e.witness)}});
        j["equivalences"] = eqs;
        if (r.reference_witness)
            j["reference_witness"] = {{"name", r.reference_witness->name},
                                      {"element", serialize(r.reference_witness->witness)},
                                      {"valid", r.reference_witness->valid}};
        else
            j["reference_witness"] = nullptr;
        j["failed_checks"] = r.failed_checks;
        j["verdict"] = to_string(r.verdict);
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "input:        " << r.input_name << "\n";
    out << "bidegree:     (" << r.bidegree.s << ", " << r.bidegree.d << ")\n";
    if (r.verdict != Verdict::Trivial) {
        out << "primitive:    " << yes_no(r.primitivity.primitive) << "\n";
        for (const auto& c : r.primitivity.checks)
            out << "  Sq^" << c.square << ": " << serialize(c.image) << "\n";
        out << "psi_image:    " << serialize(r.psi_image) << "\n";
        out << "is_cycle:     " << yes_no(r.psi_is_cycle) << "\n";
        out << "target:       " << r.target_name << " = " << serialize(r.target) << "\n";
        out << "nonzero:      " << yes_no(r.target_nonzero) << "\n";
        out << "witness:      " << (r.witness ? serialize(*r.witness) : std::string("none"))
            << (r.witness_reverified ? "  (re-verified)" : "") << "\n";
        if (r.psi_matches_expected)
            out << "psi_exact:    " << yes_no(*r.psi_matches_expected) << "\n";
        for (const auto& e : r.equivalences)
            out << "same class as " << e.name << ": " << yes_no(e.same)
                << (e.witness ? "  witness " + serialize(*e.witness) : std::string()) << "\n";
        if (r.reference_witness)
            out << "reference witness " << r.reference_witness->name << " (" << serialize(r.reference_witness->witness)
                << "): " << (r.reference_witness->valid ? "valid" : "does not bound") << "\n";
        out << "ext_dim:      " << (r.ext_dimension ? std::to_string(*r.ext_dimension) : std::string("-"));
        if (r.expected_ext_dimension)
            out << " (expected " << *r.expected_ext_dimension << ")";
        out << "\n";
    }
    out << "verdict:      " << to_string(r.verdict) << "\n";
    if (!r.failed_checks.empty()) {
        out << "failed:      ";
        for (const auto& c : r.failed_checks)
            out << " " << c;
        out << "\n";
    }
    return out.str();
}

} // namespace ltk
