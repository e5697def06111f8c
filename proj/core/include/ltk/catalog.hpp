#pragma once

// Named elements shipped as .f2elt files: the generator cycles h_i, the
// low-stem cycles c0, d0, e0, g1, the primitive divided-power inputs, and
// reference boundary witnesses. Detection requests for the three rank-5
// classes are assembled from these entries.

#include "ltk/gamma.hpp"
#include "ltk/homology.hpp"
#include "ltk/io.hpp"
#include "ltk/lambda.hpp"
#include "ltk/transfer.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace ltk {

struct CatalogEntry {
    std::string name;
    ElementKind kind = ElementKind::Lambda;
    Bidegree bidegree;
    std::variant<LambdaElement, GammaElement> payload;
    /// "class", "input" or "witness".
    std::string role;
    std::string note;

    const LambdaElement& lambda() const;
    const GammaElement& gamma() const;
};

class Catalog {
public:
    /// Reads every *.f2elt file in `dir`; the file stem is the default name.
    static Catalog load(const std::filesystem::path& dir);
    /// $LTK_CATALOG, else the source tree's data/catalog, else the installed copy.
    static std::filesystem::path default_directory();

    const CatalogEntry& at(const std::string& name) const;
    bool contains(const std::string& name) const { return entries_.contains(name); }
    const std::map<std::string, CatalogEntry>& entries() const noexcept { return entries_; }

    /// Throws std::invalid_argument when a stated bidegree disagrees with the element.
    void insert(CatalogEntry entry);

    /// Names of class entries that are not cycles (empty when all is well).
    std::vector<std::string> validate(const LambdaHomology& homology) const;

    /// One of detection_classes().
    DetectionRequest detection_request(const std::string& cls) const;

private:
    std::map<std::string, CatalogEntry> entries_;
};

/// {"h0d0", "h2e0", "h1h4c0"}.
const std::vector<std::string>& detection_classes();

} // namespace ltk
