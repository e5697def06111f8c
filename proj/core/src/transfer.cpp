#include "ltk/transfer.hpp"

#include "ltk/error.hpp"
#include "ltk/parallel.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace ltk {

namespace {

class PsiTable {
public:
    std::optional<LambdaElement> find(const GammaMonomial& m)
    {
        std::shared_lock lock(mutex_);
        if (auto it = table_.find(m); it != table_.end())
            return it->second;
        return std::nullopt;
    }

    void store(const GammaMonomial& m, const LambdaElement& value)
    {
        std::unique_lock lock(mutex_);
        table_.try_emplace(m, value);
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    std::shared_mutex mutex_;
    std::map<GammaMonomial, LambdaElement> table_;
};

PsiTable& psi_table()
{
    static PsiTable table;
    return table;
}

} // namespace

LambdaElement psi(const GammaMonomial& m)
{
    if (m.rank() == 1)
        return LambdaElement(LambdaMonomial{m[0]});
    if (auto cached = psi_table().find(m))
        return *std::move(cached);

    const GammaMonomial tail = m.tail();
    const int first = m[0];
    LambdaElement raw;
    for (int i = 0; 2 * i <= tail.degree(); ++i) {
        const LambdaMonomial head{first + i};
        for (const auto& q : sq_right(tail, i))
            for (const auto& w : psi(q))
                raw.toggle(concatenate(head, w));
    }
    LambdaElement result = normalize(raw);
    psi_table().store(m, result);
    return result;
}

LambdaElement psi(const GammaElement& e)
{
    const std::vector<GammaMonomial> terms(e.begin(), e.end());
    std::vector<LambdaElement> images(terms.size());
    parallel_for(terms.size(), [&](std::size_t i) { images[i] = psi(terms[i]); });
    LambdaElement out;
    for (const auto& img : images)
        out += img;
    return out;
}

LambdaElement sq0_family(const LambdaElement& e, int t)
{
    if (t < 0)
        throw std::invalid_argument("sq0_family: negative iteration count");
    LambdaElement out = e;
    for (int i = 0; i < t; ++i)
        out = sq0(out);
    return out;
}

namespace {

std::vector<LambdaElement> psi_images(const std::vector<GammaElement>& elements)
{
    std::vector<LambdaElement> images(elements.size());
    parallel_for(elements.size(), [&](std::size_t i) {
        LambdaElement acc;
        for (const auto& m : elements[i])
            acc += psi(m);
        images[i] = std::move(acc);
    });
    return images;
}

} // namespace

TransferImage transfer_image_dim(int s, int d, LambdaHomology& homology, std::size_t max_basis)
{
    if (s < 1 || d < 0)
        throw std::invalid_argument("transfer_image_dim: need rank >= 1 and degree >= 0");
    TransferImage out;
    out.bidegree = {s, d};
    const auto primitives = primitive_basis(s, d, max_basis);
    out.primitive_count = primitives.size();
    out.ext_dimension = homology.ext_dimension(s, d);

    const auto images = psi_images(primitives);
    for (std::size_t i = 0; i < images.size(); ++i)
        if (!homology.is_cycle(images[i]))
            throw std::logic_error("psi of a primitive element is not a cycle (rank " + std::to_string(s)
                                   + ", degree " + std::to_string(d) + ", basis element " + std::to_string(i) + ")");

    const HomologySpan span = homology.span_in_homology({s, d}, images);
    out.dimension = span.dimension;
    for (std::size_t i : span.independent) {
        out.representatives.push_back(images[i]);
        out.preimages.push_back(primitives[i]);
    }
    return out;
}

PreimageResult find_preimage(int s, const LambdaElement& target, LambdaHomology& homology, std::size_t max_basis)
{
    if (!homology.is_cycle(target))
        throw NotACycleError("find_preimage: target is not a cycle");
    const LambdaElement t = normalize(target);

    PreimageResult out;
    if (t.is_zero() || homology.boundary_witness(t)) {
        out.target_is_boundary = true;
        out.preimage = GammaElement(s);
        out.witness = homology.boundary_witness(t);
        return out;
    }
    const Bidegree b = *t.bidegree();
    if (b.s != s)
        throw NotHomogeneousError("find_preimage: target length " + std::to_string(b.s) + " differs from rank "
                                  + std::to_string(s));

    const auto primitives = primitive_basis(s, b.d, max_basis);
    const auto images = psi_images(primitives);
    auto sl = homology.slice(b);

    // Solve [psi(theta_1) ... psi(theta_k) | d_in] x = target.
    std::vector<BitVector> columns;
    columns.reserve(images.size());
    for (const auto& img : images)
        columns.push_back(sl->coordinates(img));
    const BitMatrix system =
        BitMatrix::from_columns(sl->basis().size(), columns).concatenated(sl->differential_in().matrix);
    auto x = solve(system, sl->coordinates(t));
    if (!x)
        return out;

    GammaElement theta(s);
    for (std::size_t i : x->support())
        if (i < primitives.size())
            theta += primitives[i];
    auto witness = homology.boundary_witness(normalize(psi(theta) + t));
    if (!witness)
        throw std::logic_error("find_preimage: solved preimage failed re-verification");
    out.preimage = std::move(theta);
    out.witness = std::move(witness);
    return out;
}

const char* to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::Verified:
        return "verified";
    case Verdict::Falsified:
        return "falsified";
    case Verdict::Trivial:
        return "trivial";
    }
    return "unknown";
}

DetectionReport verify_detection(const DetectionRequest& request, LambdaHomology& homology)
{
    DetectionReport r;
    r.input_name = request.input_name;
    r.target_name = request.target_name;
    r.target = normalize(request.target);
    r.expected_ext_dimension = request.expected_ext_dimension;
    r.bidegree = {request.input.rank(), request.input.degree()};

    if (request.input.is_zero()) {
        r.verdict = Verdict::Trivial;
        return r;
    }

    auto fail = [&r](std::string check) { r.failed_checks.push_back(std::move(check)); };

    r.primitivity = is_primitive(request.input);
    if (!r.primitivity.primitive)
        fail("primitivity");

    r.psi_image = psi(request.input);
    r.psi_is_cycle = homology.is_cycle(r.psi_image);
    if (!r.psi_is_cycle)
        fail("psi_cycle");

    const bool target_is_cycle = r.target.is_homogeneous() && homology.is_cycle(r.target);
    const bool target_in_bidegree = r.target.is_zero() || (r.target.is_homogeneous() && *r.target.bidegree() == r.bidegree);
    if (!target_is_cycle)
        fail("target_cycle");
    else if (!target_in_bidegree)
        fail("target_bidegree");

    if (r.psi_is_cycle && target_is_cycle && target_in_bidegree) {
        const LambdaElement difference = normalize(r.psi_image + r.target);
        auto witness = homology.boundary_witness(difference);
        r.same_class = witness.has_value();
        if (!r.same_class) {
            fail("class_equality");
        } else {
            r.witness_reverified = differential(*witness) == difference;
            r.witness = std::move(witness);
            if (!r.witness_reverified)
                fail("witness_reverification");
        }
    }

    if (target_is_cycle) {
        r.target_nonzero = homology.class_nonzero(r.target);
        if (!r.target_nonzero)
            fail("target_nonzero");
    }

    if (request.expected_psi) {
        r.psi_matches_expected = normalize(*request.expected_psi) == r.psi_image;
        if (!*r.psi_matches_expected)
            fail("psi_exact");
    }

    for (const auto& eq : request.equivalent_targets) {
        EquivalenceCheck check{eq.name, normalize(eq.element), false, std::nullopt};
        const bool comparable = check.element.is_homogeneous()
                                && (check.element.is_zero() || r.target.is_zero()
                                    || *check.element.bidegree() == *r.target.bidegree());
        if (target_is_cycle && comparable && homology.is_cycle(check.element)) {
            const LambdaElement difference = normalize(r.target + check.element);
            check.witness = homology.boundary_witness(difference);
            check.same = check.witness.has_value() && differential(*check.witness) == difference;
        }
        if (!check.same)
            fail("equivalence:" + eq.name);
        r.equivalences.push_back(std::move(check));
    }

    r.ext_dimension = homology.ext_dimension(r.bidegree.s, r.bidegree.d);
    if (request.expected_ext_dimension && *request.expected_ext_dimension != *r.ext_dimension)
        fail("ext_dimension");

    if (request.reference_witness) {
        const auto& ref = *request.reference_witness;
        ReferenceWitnessCheck check{ref.name, ref.element, false};
        const LambdaElement goal = normalize(r.psi_image + r.target);
        check.valid = goal.is_homogeneous() && ref.element.is_homogeneous() && differential(ref.element) == goal;
        r.reference_witness = std::move(check);
    }

    r.verdict = r.failed_checks.empty() ? Verdict::Verified : Verdict::Falsified;
    return r;
}

void clear_transfer_caches() { psi_table().clear(); }

} // namespace ltk
