#include "cli.hpp"

#include "ltk/catalog.hpp"
#include "ltk/error.hpp"
#include "ltk/gamma.hpp"
#include "ltk/homology.hpp"
#include "ltk/io.hpp"
#include "ltk/lambda.hpp"
#include "ltk/transfer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <sstream>

namespace ltk::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::vector<std::string> element;
    std::string in_file;
    std::string catalog_dir;
    std::string format = "text";
    std::string cls;
    int s = -1;
    int deg = -1;
    int rank = 0;
    int sq = -1;
    int times = 1;
    std::size_t max_basis = LambdaHomology::kDefaultMaxBasis;
    bool force = false;
    double time_budget = 0;

    bool json() const { return format == "json"; }
    std::size_t basis_limit() const { return force ? std::numeric_limits<std::size_t>::max() : max_basis; }
};

class Session {
public:
    explicit Session(const Options& o) : o_(o), homology_(o.basis_limit()) {}

    const Catalog& catalog()
    {
        if (!catalog_)
            catalog_ = Catalog::load(o_.catalog_dir.empty() ? Catalog::default_directory() : std::filesystem::path(o_.catalog_dir));
        return *catalog_;
    }

    LambdaHomology& homology() { return homology_; }

    ElementDocument document()
    {
        if (!o_.in_file.empty()) {
            if (!o_.element.empty())
                throw UsageError("give the element either inline or with --in, not both");
            return read_document(o_.in_file);
        }
        if (o_.element.empty())
            throw UsageError("no element given (pass it inline, as @name, or with --in FILE)");
        std::string text;
        for (const auto& part : o_.element)
            text += (text.empty() ? "" : " ") + part;
        if (text.size() > 1 && text.front() == '@') {
            const auto& entry = catalog().at(text.substr(1));
            if (entry.kind == ElementKind::Gamma)
                return make_document(entry.gamma());
            return make_document(entry.lambda());
        }
        return parse_document(text);
    }

    LambdaElement lambda()
    {
        const auto doc = document();
        if (doc.kind != ElementKind::Lambda)
            throw UsageError("expected a Lambda element (L[...] terms)");
        return lambda_from(doc);
    }

    GammaElement gamma()
    {
        const auto doc = document();
        if (doc.kind == ElementKind::Lambda) {
            if (doc.body == "0" && o_.rank > 0)
                return GammaElement(o_.rank);
            throw UsageError("expected a divided-power element (a(...) terms); pass --rank for 0");
        }
        if (o_.rank > 0)
            return parse_gamma(doc.body, o_.rank);
        return gamma_from(doc);
    }

    void require_bidegree(bool need_s = true) const
    {
        if (need_s && o_.s < 0)
            throw UsageError("--s is required");
        if (o_.deg < 0)
            throw UsageError("--deg is required");
    }

private:
    const Options& o_;
    LambdaHomology homology_;
    std::optional<Catalog> catalog_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ordered_json element_list(const std::vector<GammaElement>& v)
{
    ordered_json out = ordered_json::array();
    for (const auto& e : v)
        out.push_back(serialize(e));
    return out;
}

using Action = std::function<int(Session&, std::ostream&)>;

int cmd_normalize(const Options& o, Session& ss, std::ostream& out)
{
    const auto e = ss.lambda();
    const auto n = normalize(e);
    if (o.json()) {
        ordered_json j{{"input", serialize(e)}, {"normalized", serialize(n)}};
        const auto b = n.is_homogeneous() ? n.bidegree() : std::nullopt;
        j["bidegree"] = b ? ordered_json{b->s, b->d} : ordered_json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << serialize(n) << "\n";
    }
    return kOk;
}

int cmd_diff(const Options& o, Session& ss, std::ostream& out)
{
    const auto e = ss.lambda();
    const auto d = differential(e);
    if (o.json())
        out << ordered_json{{"input", serialize(e)}, {"differential", serialize(d)}}.dump(2) << "\n";
    else
        out << serialize(d) << "\n";
    return kOk;
}

int cmd_basis(const Options& o, Session& ss, std::ostream& out)
{
    ss.require_bidegree();
    const auto basis = admissible_basis(o.s, o.deg);
    if (basis.size() > o.basis_limit())
        throw ResourceLimitError("admissible basis has " + std::to_string(basis.size()) + " words (limit "
                                 + std::to_string(o.max_basis) + "; use --force)");
    if (o.json()) {
        ordered_json words = ordered_json::array();
        for (const auto& m : basis)
            words.push_back(serialize(m));
        out << ordered_json{{"s", o.s}, {"deg", o.deg}, {"count", basis.size()}, {"basis", words}}.dump(2) << "\n";
    } else {
        out << "count = " << basis.size() << "\n";
        for (const auto& m : basis)
            out << serialize(m) << "\n";
    }
    return kOk;
}

int cmd_homology(const Options& o, Session& ss, std::ostream& out)
{
    ss.require_bidegree();
    const auto dim = ss.homology().ext_dimension(o.s, o.deg);
    if (o.json())
        out << ordered_json{{"s", o.s}, {"deg", o.deg}, {"dim", dim}}.dump(2) << "\n";
    else
        out << "dim = " << dim << "\n";
    return kOk;
}

int cmd_sq0(const Options& o, Session& ss, std::ostream& out)
{
    const auto e = ss.lambda();
    const auto r = sq0_family(e, o.times);
    if (o.json())
        out << ordered_json{{"input", serialize(e)}, {"times", o.times}, {"result", serialize(r)}}.dump(2) << "\n";
    else
        out << serialize(r) << "\n";
    return kOk;
}

int cmd_steenrod(const Options& o, Session& ss, std::ostream& out)
{
    if (o.sq < 0)
        throw UsageError("--sq is required");
    const auto g = ss.gamma();
    const auto r = sq_right(g, o.sq);
    if (o.json())
        out << ordered_json{{"input", serialize(g)}, {"sq", o.sq}, {"result", serialize(r)}}.dump(2) << "\n";
    else
        out << serialize(r) << "\n";
    return kOk;
}

int cmd_primitive_check(const Options& o, Session& ss, std::ostream& out)
{
    const auto g = ss.gamma();
    const auto ev = is_primitive(g);
    if (o.json()) {
        ordered_json squares = ordered_json::array();
        for (const auto& c : ev.checks)
            squares.push_back({{"square", c.square}, {"image", serialize(c.image)}});
        out << ordered_json{{"input", serialize(g)}, {"primitive", ev.primitive}, {"squares", squares}}.dump(2)
            << "\n";
    } else {
        for (const auto& c : ev.checks)
            out << "Sq^" << c.square << ": " << serialize(c.image) << "\n";
        out << "primitive: " << yes_no(ev.primitive) << "\n";
    }
    return ev.primitive ? kOk : kNegative;
}

int cmd_primitive_basis(const Options& o, Session& ss, std::ostream& out)
{
    ss.require_bidegree();
    if (o.s < 1)
        throw UsageError("--s must be at least 1");
    const auto basis = primitive_basis(o.s, o.deg, o.basis_limit());
    if (o.json()) {
        out << ordered_json{{"s", o.s}, {"deg", o.deg}, {"count", basis.size()}, {"basis", element_list(basis)}}.dump(2)
            << "\n";
    } else {
        out << "count = " << basis.size() << "\n";
        for (const auto& e : basis)
            out << serialize(e) << "\n";
    }
    return kOk;
}

int cmd_psi(const Options& o, Session& ss, std::ostream& out)
{
    const auto g = ss.gamma();
    const auto p = psi(g);
    if (o.json()) {
        ordered_json j{{"input", serialize(g)}, {"psi", serialize(p)}};
        j["is_cycle"] = p.is_homogeneous() ? ordered_json(ss.homology().is_cycle(p)) : ordered_json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << serialize(p) << "\n";
    }
    return kOk;
}

int cmd_verify(const Options& o, Session& ss, std::ostream& out)
{
    const auto request = ss.catalog().detection_request(o.cls);
    const auto report = verify_detection(request, ss.homology());
    out << emit_report(report, o.json() ? ReportFormat::Json : ReportFormat::Text);
    return report.verdict == Verdict::Falsified ? kNegative : kOk;
}

int cmd_transfer_image(const Options& o, Session& ss, std::ostream& out)
{
    ss.require_bidegree();
    if (o.s < 1)
        throw UsageError("--s must be at least 1");
    const auto img = transfer_image_dim(o.s, o.deg, ss.homology(), o.basis_limit());
    if (o.json()) {
        ordered_json reps = ordered_json::array();
        for (std::size_t i = 0; i < img.representatives.size(); ++i)
            reps.push_back({{"preimage", serialize(img.preimages[i])}, {"psi", serialize(img.representatives[i])}});
        out << ordered_json{{"s", o.s},
                            {"deg", o.deg},
                            {"primitives", img.primitive_count},
                            {"ext_dim", img.ext_dimension},
                            {"image_dim", img.dimension},
                            {"representatives", reps}}
                   .dump(2)
            << "\n";
    } else {
        out << "primitives = " << img.primitive_count << "\n";
        out << "ext_dim = " << img.ext_dimension << "\n";
        out << "image_dim = " << img.dimension << "\n";
        for (std::size_t i = 0; i < img.representatives.size(); ++i)
            out << "psi(" << serialize(img.preimages[i]) << ") = " << serialize(img.representatives[i]) << "\n";
    }
    return kOk;
}

int cmd_find_preimage(const Options& o, Session& ss, std::ostream& out)
{
    const auto target = normalize(ss.lambda());
    int s = o.s;
    if (s < 0) {
        if (target.is_zero())
            throw UsageError("--s is required for a zero target");
        s = target.bidegree()->s;
    }
    const auto r = find_preimage(s, target, ss.homology(), o.basis_limit());
    const bool found = r.preimage.has_value();
    if (o.json()) {
        ordered_json j{{"target", serialize(target)}, {"s", s}, {"found", found}, {"target_is_boundary", r.target_is_boundary}};
        j["preimage"] = found ? ordered_json(serialize(*r.preimage)) : ordered_json(nullptr);
        j["witness"] = r.witness ? ordered_json(serialize(*r.witness)) : ordered_json(nullptr);
        out << j.dump(2) << "\n";
    } else if (!found) {
        out << "no preimage: the class is not in the image of the transfer\n";
    } else {
        if (r.target_is_boundary)
            out << "target is a boundary\n";
        out << "preimage = " << serialize(*r.preimage) << "\n";
        if (r.witness)
            out << "witness = " << serialize(*r.witness) << "\n";
    }
    return found ? kOk : kNegative;
}

int guarded(const Options& o, const Action& action, std::ostream& out, std::ostream& err)
{
    auto body = [&](std::ostream& sink) -> int {
        try {
            Session ss(o);
            return action(ss, sink);
        } catch (const ParseError& e) {
            err << "parse error: " << e.what() << "\n";
        } catch (const ResourceLimitError& e) {
            err << "resource limit: " << e.what() << "\n";
        } catch (const UsageError& e) {
            err << "usage: " << e.what() << "\n";
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
        }
        return kError;
    };

    if (o.time_budget <= 0)
        return body(out);

    // The work runs on its own thread; a blown budget ends the process, since the
    // arithmetic has no cancellation points.
    std::ostringstream buffer;
    auto task = std::async(std::launch::async, [&] { return body(buffer); });
    const auto budget = std::chrono::duration<double>(o.time_budget);
    if (task.wait_for(budget) == std::future_status::timeout) {
        err << "resource limit: time budget of " << o.time_budget << "s exceeded\n";
        err.flush();
        out.flush();
        std::_Exit(kError);
    }
    const int code = task.get();
    out << buffer.str();
    return code;
}

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--catalog", o.catalog_dir, "Directory of .f2elt catalog files");
    sub->add_option("--max-basis", o.max_basis, "Refuse bases larger than this")->check(CLI::PositiveNumber);
    sub->add_flag("--force", o.force, "Ignore --max-basis");
    sub->add_option("--time-budget", o.time_budget, "Abort after this many seconds");
}

void add_element(CLI::App* sub, Options& o)
{
    sub->add_option("element", o.element, "Element text, or @name for a catalog entry");
    sub->add_option("--in", o.in_file, "Read the element from an .f2elt file");
}

void add_bidegree(CLI::App* sub, Options& o, bool required)
{
    auto* s = sub->add_option("--s", o.s, "Homological degree (length / rank)")->check(CLI::NonNegativeNumber);
    auto* d = sub->add_option("--deg", o.deg, "Internal degree")->check(CLI::NonNegativeNumber);
    if (required) {
        s->required();
        d->required();
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact mod-2 Lambda algebra and transfer computations", "ltk"};
    app.require_subcommand(1);
    Options o;
    std::vector<std::pair<CLI::App*, std::function<int(const Options&, Session&, std::ostream&)>>> commands;

    auto add = [&](const char* name, const char* help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, o);
        commands.emplace_back(sub, fn);
        return sub;
    };

    auto* normalize_cmd = add("normalize", "Rewrite a Lambda element into admissible form", cmd_normalize);
    add_element(normalize_cmd, o);
    auto* diff_cmd = add("diff", "Differential of a Lambda element", cmd_diff);
    add_element(diff_cmd, o);
    add_bidegree(add("basis", "Admissible basis in bidegree (s, deg)", cmd_basis), o, true);
    add_bidegree(add("homology", "Dimension of H^{s,deg}(Lambda)", cmd_homology), o, true);
    auto* sq0_cmd = add("sq0", "Apply the squaring operation Sq^0", cmd_sq0);
    add_element(sq0_cmd, o);
    sq0_cmd->add_option("--times", o.times, "Number of iterations")->check(CLI::NonNegativeNumber);
    auto* st_cmd = add("steenrod", "Right action of Sq^i on a divided-power element", cmd_steenrod);
    add_element(st_cmd, o);
    st_cmd->add_option("--sq", o.sq, "Square to apply")->required()->check(CLI::NonNegativeNumber);
    st_cmd->add_option("--rank", o.rank, "Rank of the divided-power algebra");
    auto* pc_cmd = add("primitive-check", "Test whether a divided-power element is primitive", cmd_primitive_check);
    add_element(pc_cmd, o);
    pc_cmd->add_option("--rank", o.rank, "Rank of the divided-power algebra");
    add_bidegree(add("primitive-basis", "Basis of primitives in rank s, degree deg", cmd_primitive_basis), o, true);
    auto* psi_cmd = add("psi", "Chain-level transfer of a divided-power element", cmd_psi);
    add_element(psi_cmd, o);
    psi_cmd->add_option("--rank", o.rank, "Rank of the divided-power algebra");
    auto* verify_cmd = add("verify", "Certify a detection claim end to end", cmd_verify);
    verify_cmd->add_option("--class", o.cls, "Class to verify")
        ->required()
        ->check(CLI::IsMember(detection_classes()));
    add_bidegree(add("transfer-image", "Dimension of the transfer image in (s, deg)", cmd_transfer_image), o, true);
    auto* fp_cmd = add("find-preimage", "Search for a primitive preimage of a cycle", cmd_find_preimage);
    add_element(fp_cmd, o);
    add_bidegree(fp_cmd, o, false);
    fp_cmd->get_option("--deg")->description("Ignored; the degree comes from the target");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kError;
    }

    for (auto& [sub, fn] : commands)
        if (sub->parsed())
            return guarded(
                o, [&o, fn = fn](Session& ss, std::ostream& sink) { return fn(o, ss, sink); }, out, err);
    return kError;
}

} // namespace ltk::cli
