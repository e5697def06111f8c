#include "ltk/catalog.hpp"

#include "ltk/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ltk {

const LambdaElement& CatalogEntry::lambda() const
{
    if (const auto* e = std::get_if<LambdaElement>(&payload))
        return *e;
    throw std::invalid_argument("catalog entry '" + name + "' is a gamma element");
}

const GammaElement& CatalogEntry::gamma() const
{
    if (const auto* e = std::get_if<GammaElement>(&payload))
        return *e;
    throw std::invalid_argument("catalog entry '" + name + "' is a lambda element");
}

namespace {

Bidegree actual_bidegree(const CatalogEntry& e)
{
    if (e.kind == ElementKind::Gamma) {
        const auto& g = e.gamma();
        return {g.rank(), g.degree()};
    }
    const auto b = e.lambda().bidegree();
    return b.value_or(Bidegree{0, 0});
}

CatalogEntry entry_from(const ElementDocument& doc, const std::string& fallback_name)
{
    CatalogEntry e;
    e.name = doc.field("name").value_or(fallback_name);
    e.kind = doc.kind;
    e.role = doc.field("role").value_or("class");
    e.note = doc.field("note").value_or("");
    if (doc.kind == ElementKind::Gamma)
        e.payload = gamma_from(doc);
    else
        e.payload = lambda_from(doc);
    e.bidegree = actual_bidegree(e);
    if (auto stated = doc.field("bidegree")) {
        std::istringstream in(*stated);
        Bidegree b;
        if (!(in >> b.s >> b.d))
            throw std::invalid_argument("catalog entry '" + e.name + "': malformed bidegree '" + *stated + "'");
        e.bidegree = b;
    }
    return e;
}

} // namespace

Catalog Catalog::load(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir))
        throw std::runtime_error("catalog directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& f : std::filesystem::directory_iterator(dir))
        if (f.is_regular_file() && f.path().extension() == ".f2elt")
            files.push_back(f.path());
    std::sort(files.begin(), files.end());

    Catalog c;
    for (const auto& f : files)
        c.insert(entry_from(read_document(f.string()), f.stem().string()));
    return c;
}

std::filesystem::path Catalog::default_directory()
{
    if (const char* env = std::getenv("LTK_CATALOG"); env && *env)
        return env;
#ifdef LTK_SOURCE_CATALOG_DIR
    if (std::filesystem::is_directory(LTK_SOURCE_CATALOG_DIR))
        return LTK_SOURCE_CATALOG_DIR;
#endif
#ifdef LTK_INSTALLED_CATALOG_DIR
    return LTK_INSTALLED_CATALOG_DIR;
#else
    return "catalog";
#endif
}

const CatalogEntry& Catalog::at(const std::string& name) const
{
    auto it = entries_.find(name);
    if (it == entries_.end())
        throw std::out_of_range("no catalog entry named '" + name + "'");
    return it->second;
}

void Catalog::insert(CatalogEntry entry)
{
    const Bidegree actual = actual_bidegree(entry);
    const bool zero = entry.kind == ElementKind::Lambda ? entry.lambda().is_zero() : entry.gamma().is_zero();
    if (!zero && actual != entry.bidegree)
        throw std::invalid_argument("catalog entry '" + entry.name + "': stated bidegree (" + std::to_string(entry.bidegree.s)
                                    + ", " + std::to_string(entry.bidegree.d) + ") but element has ("
                                    + std::to_string(actual.s) + ", " + std::to_string(actual.d) + ")");
    std::string name = entry.name;
    entries_.insert_or_assign(std::move(name), std::move(entry));
}

std::vector<std::string> Catalog::validate(const LambdaHomology& homology) const
{
    std::vector<std::string> bad;
    for (const auto& [name, e] : entries_)
        if (e.role == "class" && e.kind == ElementKind::Lambda && !homology.is_cycle(e.lambda()))
            bad.push_back(name);
    return bad;
}

const std::vector<std::string>& detection_classes()
{
    static const std::vector<std::string> names{"h0d0", "h2e0", "h1h4c0"};
    return names;
}

DetectionRequest Catalog::detection_request(const std::string& cls) const
{
    auto L = [this](const std::string& n) { return at(n).lambda(); };
    DetectionRequest r;
    if (cls == "h0d0") {
        r.input_name = "u14";
        r.target_name = "h0*d0";
        r.target = product(L("h0"), L("d0"));
        if (contains("witness_i"))
            r.reference_witness = NamedElement{"witness_i", L("witness_i")};
    } else if (cls == "h2e0") {
        r.input_name = "u20";
        r.target_name = "h2*e0";
        r.target = product(L("h2"), L("e0"));
        r.equivalent_targets.push_back({"h0*g1", product(L("h0"), L("g1"))});
        if (contains("witness_ii"))
            r.reference_witness = NamedElement{"witness_ii", L("witness_ii")};
    } else if (cls == "h1h4c0") {
        r.input_name = "u24";
        r.target_name = "h1*h4*c0";
        r.target = product(product(L("h1"), L("h4")), L("c0"));
        r.expected_psi = r.target;
        r.equivalent_targets.push_back({"h3*e0", product(L("h3"), L("e0"))});
    } else {
        throw std::invalid_argument("unknown detection class '" + cls + "' (expected h0d0, h2e0 or h1h4c0)");
    }
    r.input = at(r.input_name).gamma();
    r.expected_ext_dimension = 1;
    return r;
}

} // namespace ltk
