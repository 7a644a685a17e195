#include "qsing/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsing/numtheory.hpp"

namespace qsing {

SigmaChain sigma_chain(const FiniteMatrixGroup& g) {
    const long n = g.dim();
    const std::size_t count = g.size();

    std::vector<long> mults(count);
    for (std::size_t i = 0; i < count; ++i)
        mults[i] = mult_eigen_one(g.element(i));

    SigmaChain chain;
    chain.sigma.resize(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        auto& v = chain.sigma[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < count; ++j)
            if (mults[j] >= i) v.push_back(j);
    }

    chain.h.resize(static_cast<std::size_t>(n) + 1);
    // Only the identity fixes everything, so the chain is anchored there;
    // descending i reuses h[i+1] because sigma sets nest.
    chain.h[static_cast<std::size_t>(n)] = {g.identity_index()};
    for (long i = n - 1; i >= 0; --i) {
        const auto& cur = chain.sigma[static_cast<std::size_t>(i)];
        const auto& above = chain.sigma[static_cast<std::size_t>(i + 1)];
        auto& h = chain.h[static_cast<std::size_t>(i)];
        if (cur == above) {
            h = chain.h[static_cast<std::size_t>(i + 1)];
        } else if (cur.size() == count) {
            h.resize(count);
            for (std::size_t j = 0; j < count; ++j) h[j] = j;
        } else {
            std::vector<std::size_t> seed = cur;
            const auto& prev = chain.h[static_cast<std::size_t>(i + 1)];
            seed.insert(seed.end(), prev.begin(), prev.end());
            std::sort(seed.begin(), seed.end());
            seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
            h = g.subgroup_indices(seed);
        }
    }
    return chain;
}

std::vector<std::size_t> pseudo_reflections(const FiniteMatrixGroup& g,
                                            const SigmaChain& chain) {
    const long n = chain.dimension();
    std::vector<std::size_t> out;
    for (std::size_t idx : chain.sigma[static_cast<std::size_t>(n - 1)])
        if (idx != g.identity_index()) out.push_back(idx);
    return out;
}

std::optional<long> sing_locus_dim(const SigmaChain& chain) {
    const long n = chain.dimension();
    if (n < 2)
        throw std::invalid_argument("dimension too small for chain criterion");
    const auto& top = chain.h[static_cast<std::size_t>(n - 1)];
    if (chain.h[0] == top) return std::nullopt; // smooth
    for (long i = n - 2; i >= 0; --i)
        if (chain.h[static_cast<std::size_t>(i)] != top) return i;
    throw std::logic_error("subgroup chain is not nested");
}

namespace {

bool all_determinants_one(const FiniteMatrixGroup& g) {
    for (const CycMatrix& e : g.elements())
        if (!determinant(e).is_one()) return false;
    return true;
}

Gorenstein gorenstein_from(bool in_sl, bool has_pseudo_reflections) {
    if (in_sl) return Gorenstein::Yes;
    return has_pseudo_reflections ? Gorenstein::Indeterminate : Gorenstein::No;
}

} // namespace

Gorenstein gorenstein_status(const FiniteMatrixGroup& g,
                             bool has_pseudo_reflections) {
    return gorenstein_from(all_determinants_one(g), has_pseudo_reflections);
}

ClassificationReport classify(const FiniteMatrixGroup& g) {
    const long n = g.dim();
    ClassificationReport r;
    r.dimension = n;
    r.group_order = g.size();
    r.cyclotomic_order = g.ambient_order();

    SigmaChain chain = sigma_chain(g);
    r.has_pseudo_reflections = !pseudo_reflections(g, chain).empty();
    r.in_sl = all_determinants_one(g);
    r.gorenstein = gorenstein_from(r.in_sl, r.has_pseudo_reflections);

    const std::vector<std::size_t> identity_only{g.identity_index()};
    r.fixed_point_free = chain.sigma[1] == identity_only;

    // A one-dimensional quotient is a smooth curve; the chain criterion
    // needs n >= 2.
    r.sing_locus_dim = n < 2 ? std::nullopt : sing_locus_dim(chain);
    r.isolated = r.sing_locus_dim.has_value() && *r.sing_locus_dim == 0;

    r.cyclic = g.is_cyclic();
    r.abelian = g.is_abelian();

    bool odd_prime_dim = n > 2 && is_prime(n);
    if (odd_prime_dim && !r.has_pseudo_reflections &&
        r.gorenstein == Gorenstein::Yes && r.isolated) {
        r.theorem_witness =
            r.cyclic ? TheoremWitness::Holds : TheoremWitness::Violation;
    } else {
        r.theorem_witness = TheoremWitness::NotApplicable;
    }
    return r;
}

const char* to_string(Gorenstein v) {
    switch (v) {
        case Gorenstein::Yes: return "true";
        case Gorenstein::No: return "false";
        default: return "indeterminate";
    }
}

const char* to_string(TheoremWitness v) {
    switch (v) {
        case TheoremWitness::Holds: return "holds";
        case TheoremWitness::Violation: return "VIOLATION";
        default: return "not-applicable";
    }
}

} // namespace qsing
