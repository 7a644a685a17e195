#include "qsing/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qsing {

long element_order(const CycMatrix& g, std::size_t cap) {
    CycMatrix p = g;
    long ord = 1;
    while (!p.is_identity()) {
        p = p * g;
        ++ord;
        if (static_cast<std::size_t>(ord) > cap)
            throw std::runtime_error(
                "element order exceeded cap (element may have infinite order)");
    }
    return ord;
}

FiniteMatrixGroup FiniteMatrixGroup::closure(
    const std::vector<CycMatrix>& generators, std::size_t cap) {
    if (generators.empty())
        throw std::invalid_argument("closure requires at least one generator");
    const long dim = generators.front().dim();
    const long order = generators.front().ambient_order();
    for (const CycMatrix& g : generators) {
        if (g.dim() != dim)
            throw std::invalid_argument("generators must share one dimension");
        if (g.ambient_order() != order)
            throw std::invalid_argument(
                "generators must share one ambient order; lift them first");
        if (determinant(g).is_zero())
            throw std::invalid_argument("non-invertible generator");
    }

    FiniteMatrixGroup grp;
    grp.dim_ = dim;
    grp.order_ = order;
    grp.elements_.push_back(CycMatrix::identity(dim, order));
    grp.index_.emplace(grp.elements_.front(), 0);
    grp.identity_index_ = 0;

    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t f = frontier.front();
        frontier.pop_front();
        for (const CycMatrix& g : generators) {
            CycMatrix p = grp.elements_[f] * g;
            if (grp.index_.count(p)) continue;
            if (grp.elements_.size() >= cap)
                throw std::runtime_error(
                    "closure exceeded cap (group may be infinite)");
            std::size_t idx = grp.elements_.size();
            grp.index_.emplace(p, idx);
            grp.elements_.push_back(std::move(p));
            frontier.push_back(idx);
        }
    }

    grp.generators_.reserve(generators.size());
    for (const CycMatrix& g : generators)
        grp.generators_.push_back(grp.index_.at(g));

    grp.orders_.reserve(grp.elements_.size());
    for (const CycMatrix& e : grp.elements_)
        grp.orders_.push_back(element_order(e, cap));
    return grp;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const CycMatrix& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool FiniteMatrixGroup::is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            const CycMatrix& a = elements_[generators_[i]];
            const CycMatrix& b = elements_[generators_[j]];
            if (a * b != b * a) return false;
        }
    return true;
}

bool FiniteMatrixGroup::is_cyclic() const {
    for (long ord : orders_)
        if (static_cast<std::size_t>(ord) == elements_.size()) return true;
    return false;
}

std::vector<std::size_t> FiniteMatrixGroup::subgroup_indices(
    const std::vector<std::size_t>& seed) const {
    for (std::size_t s : seed)
        if (s >= elements_.size())
            throw std::out_of_range("seed index outside the group");

    std::vector<char> member(elements_.size(), 0);
    member[identity_index_] = 1;
    std::deque<std::size_t> frontier{identity_index_};
    for (std::size_t s : seed) {
        if (member[s]) continue;
        member[s] = 1;
        frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::size_t f = frontier.front();
        frontier.pop_front();
        for (std::size_t s : seed) {
            CycMatrix p = elements_[f] * elements_[s];
            auto it = index_.find(p);
            if (it == index_.end())
                throw std::logic_error("subgroup product escaped the group");
            if (member[it->second]) continue;
            member[it->second] = 1;
            frontier.push_back(it->second);
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < member.size(); ++i)
        if (member[i]) out.push_back(i);
    return out;
}

FiniteMatrixGroup FiniteMatrixGroup::subgroup_generated(
    const std::vector<std::size_t>& seed) const {
    std::vector<CycMatrix> gens;
    gens.reserve(seed.size() + 1);
    if (seed.empty()) {
        gens.push_back(elements_[identity_index_]);
    } else {
        for (std::size_t s : seed) {
            if (s >= elements_.size())
                throw std::out_of_range("seed index outside the group");
            gens.push_back(elements_[s]);
        }
    }
    return closure(gens, elements_.size());
}

} // namespace qsing
