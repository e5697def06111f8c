// Acceptance run: one PASS/FAIL line per criterion A1..A8.
//
//   ltk_acceptance            run everything
//   ltk_acceptance A3 A5      run a subset
//
// Exit status is non-zero when any selected criterion fails.

#include "cli.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include "ltk/catalog.hpp"
#include "ltk/gamma.hpp"
#include "ltk/homology.hpp"
#include "ltk/io.hpp"
#include "ltk/transfer.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ltk;

namespace {

struct Outcome {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void require(bool ok, std::string what)
    {
        if (!ok)
            failures.push_back(std::move(what));
    }
};

const Catalog& cat() { return test_support::catalog(); }

LambdaElement word(std::initializer_list<int> idx) { return LambdaElement(LambdaMonomial(idx)); }

bool has_check(const DetectionReport& r, const std::string& name)
{
    return std::find(r.failed_checks.begin(), r.failed_checks.end(), name) != r.failed_checks.end();
}

void common_pipeline(Outcome& o, const DetectionReport& r)
{
    o.require(r.verdict == Verdict::Verified, "verdict is " + std::string(to_string(r.verdict)));
    o.require(r.primitivity.primitive, "input not primitive");
    o.require(r.psi_is_cycle, "psi image not a cycle");
    o.require(r.same_class && r.witness && r.witness_reverified, "psi image not homologous to target");
    o.require(r.target_nonzero, "target class is zero");
    o.require(r.ext_dimension == std::optional<std::size_t>(1), "ext dimension != 1");
    for (const auto& c : r.failed_checks)
        o.require(false, "failed check " + c);
}

Outcome a1()
{
    Outcome o;
    LambdaHomology h;
    const auto r = verify_detection(cat().detection_request("h0d0"), h);
    common_pipeline(o, r);
    for (const auto& c : r.primitivity.checks)
        o.require(c.image.is_zero(), "Sq^" + std::to_string(c.square) + " image nonzero");
    bool saw[4] = {};
    for (const auto& c : r.primitivity.checks)
        for (int k = 0; k < 4; ++k)
            if (c.square == (1 << k))
                saw[k] = true;
    o.require(saw[0] && saw[1] && saw[2] && saw[3], "Sq^1, Sq^2, Sq^4, Sq^8 not all checked");
    o.require(r.bidegree == Bidegree{5, 14}, "bidegree is not (5, 14)");

    // The reference witness must itself bound psi(u14) + lambda_0 d0.
    const auto& ref = cat().at("witness_i").lambda();
    const auto goal = normalize(r.psi_image + r.target);
    const auto residual = normalize(differential(ref) + goal);
    o.require(residual.is_zero(), "reference witness " + serialize(ref) + " does not bound; d(w) + psi(u14) + h0*d0 = "
                                      + serialize(residual));
    if (r.witness)
        o.notes.push_back("solved witness has " + std::to_string(r.witness->size()) + " terms");
    return o;
}

Outcome a2()
{
    Outcome o;
    LambdaHomology h;
    const auto r = verify_detection(cat().detection_request("h2e0"), h);
    common_pipeline(o, r);
    o.require(r.bidegree == Bidegree{5, 20}, "bidegree is not (5, 20)");
    const auto h0g1 = product(word({0}), cat().at("g1").lambda());
    const auto cmp = h.same_class(r.target, h0g1);
    o.require(cmp.same && cmp.witness && differential(*cmp.witness) == normalize(r.target + h0g1),
              "h2*e0 and h0*g1 are not homologous");
    o.require(h.ext_dimension(5, 20) == 1, "ext_dimension(5,20) != 1");
    return o;
}

Outcome a3()
{
    Outcome o;
    LambdaHomology h;
    const auto r = verify_detection(cat().detection_request("h1h4c0"), h);
    common_pipeline(o, r);
    o.require(r.psi_image == normalize(LambdaMonomial{1, 15, 3, 3, 2}), "psi(u24) != lambda_1 lambda_15 lambda_3^2 lambda_2");
    const auto h3e0 = product(word({7}), cat().at("e0").lambda());
    const auto cmp = h.same_class(r.psi_image, h3e0);
    o.require(cmp.same && cmp.witness && differential(*cmp.witness) == normalize(r.psi_image + h3e0),
              "h1*h4*c0 and h3*e0 are not homologous");
    o.require(h.ext_dimension(5, 24) == 1, "ext_dimension(5,24) != 1");
    return o;
}

Outcome a4()
{
    Outcome o;
    LambdaHomology h;
    for (const char* n : {"h0", "h1", "h2", "h3", "h4", "c0", "d0", "e0", "e0_lin", "g1"})
        o.require(h.is_cycle(cat().at(n).lambda()), std::string(n) + " is not a cycle");
    for (const char* n : {"c0", "d0", "e0", "e0_lin", "g1"})
        o.require(h.class_nonzero(cat().at(n).lambda()), std::string(n) + " is a boundary");
    const auto cmp = h.same_class(cat().at("e0").lambda(), cat().at("e0_lin").lambda());
    o.require(cmp.same, "the two e0 representatives are not homologous");
    for (int t = 0; t <= 4; ++t)
        o.require(sq0_family(cat().at("h0").lambda(), t) == cat().at("h" + std::to_string(t)).lambda(),
                  "sq0_family(h0, " + std::to_string(t) + ") != h" + std::to_string(t));
    return o;
}

Outcome a5()
{
    Outcome o;
    std::mt19937 rng(20260501);
    int elements = 0;
    for (int i = 0; i < 250; ++i, ++elements) {
        const auto x = test_support::random_element(rng, 5, 30);
        const auto n = normalize(x);
        o.require(differential(differential(x)).is_zero(), "d^2 != 0 on " + serialize(x));
        o.require(normalize(n) == n, "normalize not idempotent on " + serialize(x));
        o.require(normalize(x, RewriteStrategy::RightmostFirst) == n, "strategies disagree on " + serialize(x));

        const auto a = test_support::random_element(rng, 3, 30);
        const auto b = test_support::random_element(rng, 2, 30);
        elements += 2;
        const auto ab = product(a, b);
        o.require(differential(ab) == product(differential(a), b) + product(a, differential(b)),
                  "Leibniz fails on " + serialize(a) + " * " + serialize(b));
        o.require(sq0(differential(a)) == differential(sq0(a)), "Sq0 does not commute with d on " + serialize(a));
        o.require(sq0(ab) == product(sq0(a), sq0(b)), "Sq0 not multiplicative on " + serialize(a) + " * " + serialize(b));
        if (o.failures.size() > 5)
            break;
    }
    for (int i = 0; i < 250; ++i, ++elements) {
        const int s = 1 + static_cast<int>(rng() % 5);
        GammaElement g(s);
        for (int k = 0; k < 4; ++k)
            g.toggle(GammaMonomial(oracle::random_word(rng, s, 8, s)));
        o.require(sq_right(sq_right(g, 1), 1).is_zero(), "Sq1 Sq1 != 0 on " + serialize(g));
        o.require(sq_right(sq_right(g, 1), 2) == sq_right(g, 3), "Sq1 Sq2 != Sq3 on " + serialize(g));
    }
    o.notes.push_back(std::to_string(elements) + " random elements");
    return o;
}

Outcome a6()
{
    Outcome o;
    LambdaHomology h;
    for (int d = 0; d <= 20; ++d) {
        const std::size_t expected = (d == 0 || d == 1 || d == 3 || d == 7 || d == 15) ? 1 : 0;
        const auto got = h.ext_dimension(1, d);
        o.require(got == expected, "ext(1," + std::to_string(d) + ") = " + std::to_string(got));
        o.require(got == oracle::ext_dimension(1, d), "ext(1," + std::to_string(d) + ") disagrees with brute force");
    }
    const auto e38 = h.ext_dimension(3, 8);
    o.require(e38 >= 1, "ext(3,8) = 0");
    o.require(e38 == oracle::ext_dimension(3, 8), "ext(3,8) disagrees with brute force");
    o.require(h.class_nonzero(cat().at("c0").lambda()), "c0 is a boundary");
    return o;
}

Outcome a7()
{
    Outcome o;
    LambdaHomology h;
    const auto start = std::chrono::steady_clock::now();
    const auto img = transfer_image_dim(5, 9, h);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(img.dimension == 0, "transfer image at (5,9) has dimension " + std::to_string(img.dimension));
    o.require(img.ext_dimension >= 1, "ext(5,9) = 0");
    o.notes.push_back(std::to_string(img.primitive_count) + " primitives, ext = " + std::to_string(img.ext_dimension));
    if (secs > 600)
        o.notes.push_back("known-slow: exceeded the 10 min budget");
    return o;
}

std::string without_term(const std::string& name, const GammaElement& u, const GammaMonomial& m)
{
    GammaElement v = u;
    v.toggle(m);
    return serialize_document(make_document(v, {{"name", name}, {"role", "input"}}));
}

Outcome a8()
{
    Outcome o;
    LambdaHomology h;
    const auto tmp = std::filesystem::temp_directory_path() / "ltk_acceptance_mutants";
    std::filesystem::remove_all(tmp);
    std::filesystem::create_directories(tmp);
    for (const auto& f : std::filesystem::directory_iterator(LTK_TEST_CATALOG_DIR))
        std::filesystem::copy_file(f.path(), tmp / f.path().filename());

    std::size_t mutants = 0;
    for (const auto& cls : detection_classes()) {
        const auto base = cat().detection_request(cls);
        const std::string file = (tmp / (base.input_name + ".f2elt")).string();
        const std::string original = [&] {
            std::ifstream in(file);
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }();
        for (const auto& m : base.input) {
            ++mutants;
            const std::string label = cls + " without " + serialize(m);

            auto req = base;
            req.input.toggle(m);
            const auto r = verify_detection(req, h);
            o.require(r.verdict == Verdict::Falsified, label + ": library verdict " + to_string(r.verdict));
            o.require(has_check(r, "primitivity") || has_check(r, "class_equality"),
                      label + ": failing check not identified");

            std::ofstream(file) << without_term(base.input_name, base.input, m);
            std::ostringstream out, err;
            const int code = cli::run({"verify", "--class", cls, "--catalog", tmp.string(), "--format", "json"}, out, err);
            o.require(code == 1, label + ": CLI exit " + std::to_string(code) + " " + err.str());
            if (code == 1) {
                const auto j = nlohmann::json::parse(out.str());
                const auto& checks = j["failed_checks"];
                const bool named = std::find(checks.begin(), checks.end(), "primitivity") != checks.end()
                                   || std::find(checks.begin(), checks.end(), "class_equality") != checks.end();
                o.require(named, label + ": CLI report does not name the failing check");
            }
        }
        std::ofstream(file) << original;
    }
    std::filesystem::remove_all(tmp);
    o.notes.push_back(std::to_string(mutants) + " single-term deletions");
    return o;
}

struct Criterion {
    const char* id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> criteria{
        {"A1", "h0d0 detected by the rank-5 transfer", 10, a1},
        {"A2", "h2e0 = h0g1 detected by the rank-5 transfer", 30, a2},
        {"A3", "h1h4c0 = h3e0 detected by the rank-5 transfer", 60, a3},
        {"A4", "catalog cycles, non-triviality, e0 agreement, Sq0 family", 10, a4},
        {"A5", "algebra property suite", 0, a5},
        {"A6", "Ext chart spot checks against brute force", 0, a6},
        {"A7", "transfer image at (5,9) is zero", 600, a7},
        {"A8", "single-term deletions are caught", 0, a8},
    };
    std::vector<std::string> selected(argv + 1, argv + argc);

    int failed = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end())
            continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds && std::string(c.id) != "A7")
            o.failures.push_back("runtime " + std::to_string(secs) + "s over budget");

        const bool pass = o.failures.empty();
        failed += pass ? 0 : 1;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << secs << "s]";
        for (const auto& n : o.notes)
            line << "  (" << n << ")";
        std::cout << line.str() << "\n";
        for (const auto& f : o.failures)
            std::cout << "    - " << f << "\n";
    }
    return failed == 0 ? 0 : 1;
}
