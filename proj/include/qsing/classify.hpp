#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsing/group.hpp"

namespace qsing {

/// Fixed-subspace filtration of a group acting on C^n. sigma[i] holds the
/// sorted indices of elements whose eigenvalue-1 multiplicity is >= i, and
/// h[i] the sorted indices of the subgroup generated by sigma[i], for
/// i = 0..n. Both chains descend: sigma[0] is the whole group, sigma[n]
/// and h[n] are the identity alone.
struct SigmaChain {
    std::vector<std::vector<std::size_t>> sigma;
    std::vector<std::vector<std::size_t>> h;

    long dimension() const { return static_cast<long>(sigma.size()) - 1; }
};

SigmaChain sigma_chain(const FiniteMatrixGroup& g);

/// Non-identity elements fixing a hyperplane: sigma[n-1] minus identity.
std::vector<std::size_t> pseudo_reflections(const FiniteMatrixGroup& g,
                                            const SigmaChain& chain);

/// Dimension of the singular locus of C^n / G by the subgroup-chain
/// criterion: nullopt ("smooth") when h[0] == h[n-1], otherwise the
/// largest i in [0, n-2] with h[i] != h[n-1]. Requires n >= 2; throws
/// std::invalid_argument("dimension too small for chain criterion").
std::optional<long> sing_locus_dim(const SigmaChain& chain);

enum class Gorenstein { Yes, No, Indeterminate };

/// Gorenstein test for the quotient: all determinants 1 means yes; a
/// determinant != 1 with no pseudo-reflections means no; with
/// pseudo-reflections present the criterion does not apply.
Gorenstein gorenstein_status(const FiniteMatrixGroup& g,
                             bool has_pseudo_reflections);

enum class TheoremWitness { Holds, NotApplicable, Violation };

struct ClassificationReport {
    long dimension = 0;
    std::size_t group_order = 0;
    long cyclotomic_order = 1;
    bool in_sl = false;
    bool has_pseudo_reflections = false;
    bool fixed_point_free = false;
    bool isolated = false;
    std::optional<long> sing_locus_dim; // nullopt = smooth
    bool cyclic = false;
    bool abelian = false;
    Gorenstein gorenstein = Gorenstein::Indeterminate;
    TheoremWitness theorem_witness = TheoremWitness::NotApplicable;
};

/// Full classification. The theorem witness checks the statement "an
/// isolated Gorenstein quotient singularity of odd prime dimension with no
/// pseudo-reflections comes from a cyclic group": when the hypotheses hold
/// the witness is Holds for a cyclic group and Violation otherwise, and
/// NotApplicable when any hypothesis fails. Dimension 1 quotients are
/// always smooth and skip the chain criterion.
ClassificationReport classify(const FiniteMatrixGroup& g);

const char* to_string(Gorenstein v);
const char* to_string(TheoremWitness v);

} // namespace qsing
