#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qsing/matrix.hpp"

namespace qsing {

constexpr std::size_t kDefaultClosureCap = 100000;

/// Multiplicative order of g, found by iterating powers; throws
/// std::runtime_error when the order exceeds cap (g may have infinite
/// order) and std::invalid_argument for a non-invertible g.
long element_order(const CycMatrix& g, std::size_t cap = kDefaultClosureCap);

/// Finite matrix group materialized as its full element list. Elements are
/// deduplicated by canonical form and listed in breadth-first word order,
/// identity first, so construction is deterministic. All elements share
/// the ambient cyclotomic order of the generators.
class FiniteMatrixGroup {
public:
    /// Group generated by the given matrices. Generators must be square,
    /// of one dimension and one ambient order, and invertible. Throws
    /// std::runtime_error("closure exceeded cap (group may be infinite)")
    /// when the element count passes cap.
    static FiniteMatrixGroup closure(const std::vector<CycMatrix>& generators,
                                     std::size_t cap = kDefaultClosureCap);

    std::size_t size() const { return elements_.size(); }
    long dim() const { return dim_; }
    long ambient_order() const { return order_; }

    const std::vector<CycMatrix>& elements() const { return elements_; }
    const CycMatrix& element(std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(const CycMatrix& g) const;
    std::size_t identity_index() const { return identity_index_; }

    /// Indices of the defining generators within elements().
    const std::vector<std::size_t>& generator_indices() const { return generators_; }

    /// Multiplicative order of element i; orders are precomputed at
    /// construction and each divides size().
    long order_of(std::size_t i) const { return orders_[i]; }
    const std::vector<long>& orders() const { return orders_; }

    /// True iff all generator pairs commute.
    bool is_abelian() const;
    /// True iff some element has order equal to size().
    bool is_cyclic() const;

    /// Sorted element indices of the subgroup generated by the given
    /// element indices (empty set generates the trivial subgroup).
    std::vector<std::size_t> subgroup_indices(const std::vector<std::size_t>& seed) const;

    /// The subgroup generated by the given element indices, as a group of
    /// its own. Element order within the result is breadth-first again.
    FiniteMatrixGroup subgroup_generated(const std::vector<std::size_t>& seed) const;

private:
    FiniteMatrixGroup() = default;

    long dim_ = 0;
    long order_ = 1;
    std::vector<CycMatrix> elements_;
    std::vector<std::size_t> generators_;
    std::vector<long> orders_;
    std::size_t identity_index_ = 0;
    struct Hash {
        std::size_t operator()(const CycMatrix& m) const { return m.hash(); }
    };
    std::unordered_map<CycMatrix, std::size_t, Hash> index_;
};

} // namespace qsing
