#pragma once

// Chain-level representation of the Singer transfer in the Lambda algebra and the
// detection verifier built on it.
//
// psi sends a^{(t)} to lambda_t and, for rank s > 1,
//
//   psi(a_1^{(t_1)} a_2^{(t_2)} ... a_s^{(t_s)})
//     = sum_{j >= t_1} lambda_j psi((a_2^{(t_2)} ... a_s^{(t_s)}) Sq^{j - t_1}).
//
// The sum stops at j = t_1 + floor(tail degree / 2) by instability. Primitive inputs
// map to cycles, and the class of psi(theta) is the transfer of the class of theta.

#include "ltk/gamma.hpp"
#include "ltk/homology.hpp"
#include "ltk/lambda.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ltk {

LambdaElement psi(const GammaMonomial& m);
LambdaElement psi(const GammaElement& e);

/// (Sq^0)^t applied to a Lambda element; t = 0 is the identity.
LambdaElement sq0_family(const LambdaElement& e, int t);

struct TransferImage {
    Bidegree bidegree;
    std::size_t primitive_count = 0;
    std::size_t ext_dimension = 0;
    /// Dimension of the image in H^{s,d}(Lambda).
    std::size_t dimension = 0;
    /// Cycles psi(theta) whose classes form a basis of the image, with their preimages.
    std::vector<LambdaElement> representatives;
    std::vector<GammaElement> preimages;
};

TransferImage transfer_image_dim(int s, int d, LambdaHomology& homology,
                                 std::size_t max_basis = LambdaHomology::kDefaultMaxBasis);

struct PreimageResult {
    /// Primitive theta with psi(theta) homologous to the target; zero when the target is a boundary.
    std::optional<GammaElement> preimage;
    bool target_is_boundary = false;
    /// b with d(b) = psi(theta) + target, when a preimage exists.
    std::optional<LambdaElement> witness;
};

/// Throws NotACycleError if the target is not a cycle. Rank s must be the target's length.
PreimageResult find_preimage(int s, const LambdaElement& target, LambdaHomology& homology,
                             std::size_t max_basis = LambdaHomology::kDefaultMaxBasis);

enum class Verdict {
    Verified,
    Falsified,
    Trivial,
};

const char* to_string(Verdict v) noexcept;

struct NamedElement {
    std::string name;
    LambdaElement element;
};

struct DetectionRequest {
    std::string input_name;
    GammaElement input{1};
    std::string target_name;
    LambdaElement target;
    std::optional<std::size_t> expected_ext_dimension;
    /// Exact value psi(input) is claimed to normalize to.
    std::optional<LambdaElement> expected_psi;
    /// Cycles claimed to represent the same class as the target.
    std::vector<NamedElement> equivalent_targets;
    /// A reference witness b with d(b) = psi(input) + target; re-checked, reported, never trusted.
    std::optional<NamedElement> reference_witness;
};

struct EquivalenceCheck {
    std::string name;
    LambdaElement element;
    bool same = false;
    std::optional<LambdaElement> witness;
};

struct ReferenceWitnessCheck {
    std::string name;
    LambdaElement witness;
    bool valid = false;
};

struct DetectionReport {
    std::string input_name;
    Bidegree bidegree;
    PrimitivityEvidence primitivity;
    LambdaElement psi_image;
    bool psi_is_cycle = false;
    std::string target_name;
    LambdaElement target;
    bool same_class = false;
    std::optional<LambdaElement> witness;
    bool witness_reverified = false;
    bool target_nonzero = false;
    std::optional<std::size_t> ext_dimension;
    std::optional<std::size_t> expected_ext_dimension;
    std::optional<bool> psi_matches_expected;
    std::vector<EquivalenceCheck> equivalences;
    std::optional<ReferenceWitnessCheck> reference_witness;
    Verdict verdict = Verdict::Falsified;
    /// Names of the sub-checks that failed: primitivity, psi_cycle, target_cycle, class_equality,
    /// witness_reverification, target_nonzero, psi_exact, equivalence:<name>, ext_dimension.
    std::vector<std::string> failed_checks;
};

/// Runs the full certificate: primitivity, psi, cycle check, class equality with an explicit
/// re-verified witness, target non-triviality and the optional extra claims. Failed checks
/// yield a falsified report; a zero input yields a trivial one.
DetectionReport verify_detection(const DetectionRequest& request, LambdaHomology& homology);

/// Drops the memoized psi values.
void clear_transfer_caches();

} // namespace ltk
